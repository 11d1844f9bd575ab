//! Real-rootedness of univariate polynomials.
//!
//! The Sylvester matrix `S(f) = (p_{j+k-2}(f))` of a monic `f` is the Hankel
//! matrix of the power sums of its roots. Its rank is the number of distinct
//! complex roots and its signature the number of distinct real roots, so `f` is
//! hyperbolic (all roots real) exactly when `S(f)` is positive semidefinite.
//! Inertia is computed exactly by congruence, never by eigenvalues.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{from_f64, rationalize, to_f64, Rational, UniPoly};
use crate::symmetric::{newton_convert, NewtonDirection};

/// Default bisection width for numeric root locations.
pub const ROOT_TOLERANCE: f64 = 1e-12;

fn check_monic(f: &UniPoly) -> Result<usize> {
    match f.degree() {
        Some(n) if n >= 1 && f.is_monic() => Ok(n),
        Some(n) if n >= 1 => Err(Error::NotMonic),
        _ => Err(Error::OutOfRange {
            what: "degree",
            value: f.degree().map_or(-1, |d| d as i64),
            allowed: ">= 1".into(),
        }),
    }
}

/// Power sums `p_0..p_up_to` of the roots of monic `f`, from its coefficients.
pub fn power_sums_from_coeffs(f: &UniPoly, up_to: usize) -> Result<Vec<Rational>> {
    let n = check_monic(f)?;
    let e = f.elementary_values()?;
    let mut out = vec![Rational::from_integer((n as i64).into())];
    if up_to > 0 {
        out.extend(newton_convert(NewtonDirection::PFromE { n }, &e, up_to)?);
    }
    Ok(out)
}

/// Square symmetric matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl SymMatrix {
    pub fn new(dim: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if entries[i * dim + j] != entries[j * dim + i] {
                    return Err(Error::MatrixNotSymmetric);
                }
            }
        }
        Ok(SymMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        for r in &rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.dim.max(1)).map(<[_]>::to_vec).collect()
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// `S(f)`: the `n x n` Hankel matrix of power sums `p_0..p_{2n-2}`.
pub fn sylvester_matrix(f: &UniPoly) -> Result<SymMatrix> {
    let n = check_monic(f)?;
    let p = power_sums_from_coeffs(f, 2 * n - 2)?;
    let entries = (0..n * n).map(|ij| p[ij / n + ij % n].clone()).collect();
    SymMatrix::new(n, entries)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InertiaResult {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl InertiaResult {
    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.zero
    }
}

/// Exact inertia by symmetric Gaussian elimination.
///
/// A nonzero diagonal pivot contributes its sign. When the whole active
/// diagonal vanishes but some off-diagonal `b = a_ij` does not, the block
/// `[[0, b], [b, 0]]` (one positive, one negative eigenvalue) is eliminated
/// instead. Both steps are congruences, so inertia is preserved.
pub fn inertia(m: &SymMatrix) -> InertiaResult {
    let mut a = m.rows();
    let mut res = InertiaResult {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    while !a.is_empty() {
        let size = a.len();
        if let Some(p) = (0..size).find(|&i| !a[i][i].is_zero()) {
            let d = a[p][p].clone();
            if d.is_positive() {
                res.positive += 1;
            } else {
                res.negative += 1;
            }
            let col: Vec<Rational> = (0..size).map(|i| a[i][p].clone()).collect();
            let rest: Vec<usize> = (0..size).filter(|&i| i != p).collect();
            a = rest
                .iter()
                .map(|&i| {
                    let li = &col[i] / &d;
                    rest.iter().map(|&j| &a[i][j] - &li * &col[j]).collect()
                })
                .collect();
            continue;
        }
        let off = (0..size)
            .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero());
        let Some((p, q)) = off else {
            res.zero += size;
            break;
        };
        res.positive += 1;
        res.negative += 1;
        // B^{-1} = [[0, 1/b], [1/b, 0]]; Schur complement A - C B^{-1} C^T
        let inv_b = a[p][q].recip();
        let rest: Vec<usize> = (0..size).filter(|&i| i != p && i != q).collect();
        a = rest
            .iter()
            .map(|&i| {
                rest.iter()
                    .map(|&j| {
                        let cross = &a[i][p] * &a[q][j] + &a[i][q] * &a[p][j];
                        &a[i][j] - cross * &inv_b
                    })
                    .collect()
            })
            .collect();
    }
    res
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperbolicity {
    pub hyperbolic: bool,
    /// Distinct complex roots (rank of `S(f)`).
    pub distinct_roots: usize,
    /// Distinct real roots (signature of `S(f)`).
    pub distinct_real_roots: usize,
    pub inertia: InertiaResult,
    pub matrix: SymMatrix,
}

/// Hyperbolic iff `S(f)` is positive semidefinite, i.e. signature equals rank.
pub fn is_hyperbolic(f: &UniPoly) -> Result<Hyperbolicity> {
    let matrix = sylvester_matrix(f)?;
    let inertia = inertia(&matrix);
    Ok(Hyperbolicity {
        hyperbolic: inertia.negative == 0,
        distinct_roots: inertia.rank(),
        distinct_real_roots: inertia.signature() as usize,
        inertia,
        matrix,
    })
}

/// `true` iff `f` is hyperbolic with every root `>= 0`: hyperbolicity plus
/// `e_i >= 0` for all elementary symmetric values of the roots.
pub fn has_only_nonneg_roots(f: &UniPoly) -> Result<bool> {
    check_monic(f)?;
    if !f.elementary_values()?.iter().all(|e| !e.is_negative()) {
        return Ok(false);
    }
    Ok(is_hyperbolic(f)?.hyperbolic)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootProfile {
    /// `(approximate location, exact multiplicity)`, ascending.
    pub roots: Vec<(f64, usize)>,
    pub distinct_count: usize,
    pub all_real: bool,
}

/// Roots of a hyperbolic `f`: multiplicities exactly from the square-free
/// decomposition, locations by bisection to within `tol`.
pub fn hyperbolic_roots(f: &UniPoly, tol: f64) -> Result<RootProfile> {
    if !is_hyperbolic(f)?.hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    let mut roots = Vec::new();
    for (q, mult) in f.square_free_decomposition()? {
        for r in squarefree_real_roots(&q, tol) {
            roots.push((r, mult));
        }
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(RootProfile {
        distinct_count: roots.len(),
        roots,
        all_real: true,
    })
}

fn cauchy_bound(q: &UniPoly) -> f64 {
    let lead = q.leading().map(to_f64).unwrap_or(1.0).abs();
    1.0 + q.coeffs()[1..]
        .iter()
        .map(|c| to_f64(c).abs() / lead)
        .fold(0.0, f64::max)
}

fn sign_at_f64(q: &UniPoly, x: f64) -> i8 {
    q.sign_at(&from_f64(x).expect("finite"))
}

/// Real roots of a square-free, real-rooted `q`, ascending.
///
/// The roots of `q'` strictly interlace those of `q`, so each gap between
/// consecutive critical points (and the two outer rays, cut at the Cauchy
/// bound) brackets exactly one root.
pub(crate) fn squarefree_real_roots(q: &UniPoly, tol: f64) -> Vec<f64> {
    let n = q.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        let c = q.coeffs();
        return vec![to_f64(&(-&c[1] / &c[0]))];
    }
    let crit = squarefree_real_roots(&q.derivative(), tol);
    let bound = cauchy_bound(q);
    let mut edges = Vec::with_capacity(n + 1);
    edges.push(-bound);
    edges.extend(crit);
    edges.push(bound);
    edges
        .windows(2)
        .map(|w| bisect(q, w[0], w[1], tol))
        .collect()
}

fn bisect(q: &UniPoly, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut s_lo = sign_at_f64(q, lo);
    if s_lo == 0 {
        return lo;
    }
    if sign_at_f64(q, hi) == 0 {
        return hi;
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let s = sign_at_f64(q, mid);
        if s == 0 {
            return mid;
        }
        if s == s_lo {
            lo = mid;
            s_lo = s;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Exact rational near `x` that is a root of `q`, if there is one.
fn exact_root_near(q: &UniPoly, x: f64) -> Option<Rational> {
    for cap in [1_000u64, 1_000_000, 10_000_000] {
        let r = rationalize(x, cap);
        if q.eval(&r).is_zero() {
            return Some(r);
        }
    }
    None
}

/// Largest `delta` such that `f ± eps` is hyperbolic with `n` distinct roots for
/// all `0 < eps < delta`, for hyperbolic `f` with only simple roots: the
/// smallest `|f|` over the critical points of `f`.
pub fn distinct_shift_delta(f: &UniPoly) -> Result<Rational> {
    let h = is_hyperbolic(f)?;
    if !h.hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    if h.distinct_roots != f.degree().unwrap_or(0) {
        return Err(Error::Unrepresentable(
            "constant shift needs simple roots".into(),
        ));
    }
    Ok(min_critical_value(f).unwrap_or_else(Rational::one))
}

/// `min |p(xi)|` over the critical points of a square-free real-rooted `p`.
/// Each critical point is evaluated exactly at its rational approximation (or
/// its exact value when rational); since `|p|` peaks at the critical point in
/// each gap, the result never exceeds the true minimum.
fn min_critical_value(p: &UniPoly) -> Option<Rational> {
    let dp = p.derivative();
    let crit = squarefree_real_roots(&dp, 0.0);
    crit.iter()
        .map(|&xi| {
            let at = exact_root_near(&dp, xi).unwrap_or_else(|| from_f64(xi).expect("finite"));
            p.eval(&at).abs()
        })
        .min()
}

/// Direction `g` and bound `delta` such that `f ± eps * g` is hyperbolic with
/// strictly more distinct roots than `f` for every `0 < eps < delta`.
#[derive(Clone, Debug, PartialEq)]
pub struct Perturbation {
    pub g: UniPoly,
    pub delta: Rational,
    /// Square-free factor `p` with `f = p * g` (before any `t^m` shift).
    pub factor: UniPoly,
    /// Approximate roots of `factor`.
    pub chosen_roots: Vec<f64>,
}

impl Perturbation {
    pub fn apply(&self, f: &UniPoly, eps: &Rational) -> UniPoly {
        f + &self.g.scale(eps)
    }
}

struct RootUnit {
    factor: UniPoly,
    roots: Vec<f64>,
    exact: Option<Rational>,
    multiplicity: usize,
}

fn root_units(f: &UniPoly) -> Result<Vec<RootUnit>> {
    let mut units = Vec::new();
    for (q, mult) in f.square_free_decomposition()? {
        let mut remainder = q.clone();
        let mut inexact = Vec::new();
        for r in squarefree_real_roots(&q, 0.0) {
            match exact_root_near(&q, r) {
                Some(x) => {
                    let lin = UniPoly::new(vec![Rational::one(), -x.clone()]);
                    remainder = remainder.exact_div(&lin)?;
                    units.push(RootUnit {
                        factor: lin,
                        roots: vec![r],
                        exact: Some(x),
                        multiplicity: mult,
                    });
                }
                None => inexact.push(r),
            }
        }
        if !inexact.is_empty() {
            units.push(RootUnit {
                factor: remainder,
                roots: inexact,
                exact: None,
                multiplicity: mult,
            });
        }
    }
    units.sort_by(|a, b| a.roots[0].total_cmp(&b.roots[0]));
    Ok(units)
}

/// Perturbation adding distinct roots to a hyperbolic `f` with `k < n` distinct
/// roots.
///
/// Picks `s` distinct roots, always including one of maximal multiplicity and
/// then the remaining roots in increasing order; `p` is their product and
/// `g = f / p`, so `f + eps g = (p + eps) g`. With `zero_order = m > 0` the
/// construction runs on `f / t^m` (which needs the root `t = 0` of multiplicity
/// `> m`) and `g` is multiplied back by `t^m`, preserving an `m`-fold root at 0.
///
/// Roots are grouped over the rationals: rational roots can be chosen one at a
/// time, the irrational roots of a square-free factor only together. If no
/// admissible choice has exactly `s` roots the call fails with
/// [`Error::Unrepresentable`].
pub fn perturb_increase_distinct(f: &UniPoly, s: usize, zero_order: usize) -> Result<Perturbation> {
    let n = check_monic(f)?;
    let h = is_hyperbolic(f)?;
    if !h.hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    let k = h.distinct_roots;
    if k >= n {
        return Err(Error::NothingToDo(k));
    }
    if s == 0 || s > k {
        return Err(Error::OutOfRange {
            what: "s",
            value: s as i64,
            allowed: format!("1..={k}"),
        });
    }
    if zero_order > 0 {
        let at_zero = f.zero_root_multiplicity();
        if at_zero <= zero_order {
            return Err(Error::OutOfRange {
                what: "zero_order",
                value: zero_order as i64,
                allowed: format!("< multiplicity of t = 0, which is {at_zero}"),
            });
        }
        let shift = UniPoly::t_pow(zero_order);
        let reduced = f.exact_div(&shift)?;
        let inner = perturb_increase_distinct(&reduced, s, 0)?;
        return Ok(Perturbation {
            g: &inner.g * &shift,
            ..inner
        });
    }

    let units = root_units(f)?;
    let anchor = units
        .iter()
        .enumerate()
        .filter(|(_, u)| u.multiplicity >= 2 && u.roots.len() <= s)
        .max_by(|(ia, a), (ib, b)| {
            a.multiplicity
                .cmp(&b.multiplicity)
                .then(b.roots.len().cmp(&a.roots.len()))
                .then(ib.cmp(ia))
        })
        .map(|(i, _)| i)
        .ok_or_else(|| {
            Error::Unrepresentable(format!("no multiple root fits in a choice of {s} roots"))
        })?;
    let mut chosen = vec![anchor];
    let mut budget = s - units[anchor].roots.len();
    for (i, u) in units.iter().enumerate() {
        if i != anchor && u.roots.len() <= budget {
            budget -= u.roots.len();
            chosen.push(i);
        }
    }
    if budget != 0 {
        return Err(Error::Unrepresentable(format!(
            "roots group over Q in sizes that cannot make exactly {s}"
        )));
    }
    chosen.sort_unstable();

    let p = chosen
        .iter()
        .fold(UniPoly::constant(Rational::one()), |acc, &i| &acc * &units[i].factor);
    let g = f.exact_div(&p)?;

    // p ± eps must keep its s roots real and distinct, and must not pick up a
    // root of f outside p.
    let mut delta = min_critical_value(&p);
    for (i, u) in units.iter().enumerate() {
        if chosen.contains(&i) {
            continue;
        }
        let bound = match &u.exact {
            Some(x) => p.eval(x).abs(),
            None => {
                let v = u
                    .roots
                    .iter()
                    .map(|&r| p.eval_f64(r).abs())
                    .fold(f64::INFINITY, f64::min);
                from_f64(v * (1.0 - 1e-6)).expect("finite")
            }
        };
        delta = Some(match delta {
            Some(d) if d <= bound => d,
            _ => bound,
        });
    }
    let chosen_roots = chosen
        .iter()
        .flat_map(|&i| units[i].roots.iter().copied())
        .collect();
    Ok(Perturbation {
        g,
        delta: delta.unwrap_or_else(Rational::one),
        factor: p,
        chosen_roots,
    })
}
