//! Symmetric polynomials: the `e_k` and `p_k` families, Newton identities, the
//! decomposition `F = G(e_1, ..., e_n)` and the split of `G` into a part in the
//! low-index variables plus a tail that is linear in each high-index variable.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, Monomial, MultiPoly, Rational};

/// `true` iff `f` is invariant under every adjacent transposition of its
/// variables; these generate the full symmetric group.
pub fn is_symmetric(f: &MultiPoly) -> bool {
    (0..f.nvars().saturating_sub(1)).all(|i| f.swap_vars(i, i + 1) == *f)
}

fn check_symmetric(f: &MultiPoly) -> Result<()> {
    if is_symmetric(f) {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// `e_k` in `n` variables, `1 <= k <= n`.
pub fn elementary_symmetric(k: usize, n: usize) -> Result<MultiPoly> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            allowed: format!("1..={n}"),
        });
    }
    let mut p = MultiPoly::zero(n);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mut exps = vec![0u32; n];
        for &i in &idx {
            exps[i] = 1;
        }
        p.add_term(Monomial::new(exps), Rational::one());
        // next k-subset in lexicographic order
        let Some(pos) = (0..k).rev().find(|&j| idx[j] < n - k + j) else {
            break;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(p)
}

/// `p_k = x_1^k + ... + x_n^k`, `k >= 1`.
pub fn power_sum(k: usize, n: usize) -> Result<MultiPoly> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    let mut p = MultiPoly::zero(n);
    for i in 0..n {
        let mut exps = vec![0u32; n];
        exps[i] = k as u32;
        p.add_term(Monomial::new(exps), Rational::one());
    }
    Ok(p)
}

/// `[e_1, ..., e_n]` in `n` variables.
pub fn elementary_family(n: usize) -> Vec<MultiPoly> {
    (1..=n)
        .map(|k| elementary_symmetric(k, n).expect("k in range"))
        .collect()
}

/// Images of the Vieta map `x -> (e_1(x), ..., e_n(x))`.
pub fn vieta_map(x: &[Rational]) -> Vec<Rational> {
    // e_k of a prefix, updated one coordinate at a time
    let mut e = vec![Rational::zero(); x.len() + 1];
    e[0] = Rational::one();
    for (j, xi) in x.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            let add = &e[k - 1] * xi;
            e[k] += add;
        }
    }
    e.remove(0);
    e
}

/// Values the Newton recurrence can run over: rationals and polynomials.
pub trait NewtonValue: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn compatible(&self, other: &Self) -> Result<()>;
}

impl NewtonValue for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
    fn compatible(&self, _: &Self) -> Result<()> {
        Ok(())
    }
}

impl NewtonValue for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn compatible(&self, other: &Self) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewtonDirection {
    /// Elementary symmetric values from power sums.
    EFromP,
    /// Power sums from elementary symmetric values of `n` roots; `e_j = 0` for
    /// `j > n`.
    PFromE { n: usize },
}

/// Solves `k (-1)^k e_k + sum_{i=1..k} (-1)^(i+k) p_i e_(k-i) = 0` for the
/// highest-index unknown, producing the complementary family at indices
/// `1..=up_to`.
pub fn newton_convert<T: NewtonValue>(
    direction: NewtonDirection,
    values: &[T],
    up_to: usize,
) -> Result<Vec<T>> {
    let needed = match direction {
        NewtonDirection::EFromP => up_to,
        NewtonDirection::PFromE { n } => up_to.min(n),
    };
    if up_to == 0 || values.len() < needed.max(1) {
        return Err(Error::InsufficientValues {
            needed: needed.max(1),
            got: values.len(),
        });
    }
    let first = &values[0];
    for v in values {
        first.compatible(v)?;
    }
    match direction {
        NewtonDirection::EFromP => Ok(e_from_p(values, up_to)),
        NewtonDirection::PFromE { n } => Ok(p_from_e(values, n, up_to)),
    }
}

fn alternating(i: usize) -> Rational {
    if i % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

// e_k = (1/k) sum_{i=1..k} (-1)^(i-1) p_i e_(k-i)
fn e_from_p<T: NewtonValue>(p: &[T], up_to: usize) -> Vec<T> {
    let mut e = vec![p[0].one_like()];
    for k in 1..=up_to {
        let mut acc = p[0].zero_like();
        for i in 1..=k {
            acc = acc.plus(&p[i - 1].times(&e[k - i]).scaled(&alternating(i - 1)));
        }
        e.push(acc.scaled(&Rational::new(1.into(), (k as i64).into())));
    }
    e.remove(0);
    e
}

// p_k = (-1)^(k-1) k e_k + sum_{i=1..k-1} (-1)^(k-i-1) p_i e_(k-i)
fn p_from_e<T: NewtonValue>(e_in: &[T], n: usize, up_to: usize) -> Vec<T> {
    let zero = e_in[0].zero_like();
    let e_at = |j: usize| -> T {
        if j == 0 {
            e_in[0].one_like()
        } else if j <= n && j <= e_in.len() {
            e_in[j - 1].clone()
        } else {
            zero.clone()
        }
    };
    let mut p: Vec<T> = Vec::with_capacity(up_to);
    for k in 1..=up_to {
        let mut acc = e_at(k).scaled(&(alternating(k - 1) * int(k as i64)));
        for i in 1..k {
            acc = acc.plus(&p[i - 1].times(&e_at(k - i)).scaled(&alternating(k - i - 1)));
        }
        p.push(acc);
    }
    p
}

/// `G` with `F = G(e_1, ..., e_n)`, in variables `z_1..z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPoly {
    inner: MultiPoly,
    source_degree: u32,
}

impl GPoly {
    /// Wraps `inner`, checking that every monomial has weighted degree at most
    /// `source_degree` (so no `z_j` with `j > source_degree` appears).
    pub fn new(inner: MultiPoly, source_degree: u32) -> Result<Self> {
        for (m, _) in inner.terms() {
            if m.weighted_degree() > source_degree {
                return Err(Error::Invariant(format!(
                    "monomial {} has weighted degree {} > {source_degree}",
                    m,
                    m.weighted_degree()
                )));
            }
        }
        Ok(GPoly {
            inner,
            source_degree,
        })
    }

    pub fn inner(&self) -> &MultiPoly {
        &self.inner
    }

    pub fn source_degree(&self) -> u32 {
        self.source_degree
    }

    pub fn n(&self) -> usize {
        self.inner.nvars()
    }

    /// `G(e_1, ..., e_n)` expanded in `x_1..x_n`.
    pub fn expand(&self) -> MultiPoly {
        self.inner
            .substitute(&elementary_family(self.n()))
            .expect("family has n members")
    }

    /// `G(z)` at a coefficient vector `z`.
    pub fn evaluate(&self, z: &[Rational]) -> Result<Rational> {
        self.inner.evaluate(z)
    }
}

/// Bound on reduction steps of [`decompose_to_elementary`]: the number of
/// monomials of degree at most `d` in `n` variables, `C(n + d, n)`.
pub fn decomposition_step_bound(n: usize, d: u32) -> u128 {
    let mut b: u128 = 1;
    for i in 1..=n as u128 {
        b = b * (d as u128 + i) / i;
    }
    b
}

/// Rewrites symmetric `f` as a polynomial in the elementary symmetric
/// polynomials.
///
/// Repeatedly takes the leading term `a x^g` of the residual (its exponents are
/// weakly decreasing by symmetry) and subtracts
/// `a e_1^(g1-g2) e_2^(g2-g3) ... e_n^gn`, which has the same leading term.
pub fn decompose_to_elementary(f: &MultiPoly) -> Result<GPoly> {
    check_symmetric(f)?;
    decompose_counting(f).map(|(g, _)| g)
}

/// As [`decompose_to_elementary`], also returning the number of reduction steps.
pub fn decompose_counting(f: &MultiPoly) -> Result<(GPoly, usize)> {
    check_symmetric(f)?;
    let n = f.nvars();
    let d = f.degree().unwrap_or(0);
    let family = elementary_family(n);
    let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
    let bound = decomposition_step_bound(n, d);

    let mut residual = f.clone();
    let mut g = MultiPoly::zero(n);
    let mut steps = 0usize;
    while let Ok((lead, a)) = residual.lex_leading() {
        steps += 1;
        if steps as u128 > bound {
            return Err(Error::Invariant(format!(
                "decomposition exceeded {bound} steps"
            )));
        }
        let gamma = lead.exponents();
        if gamma.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invariant(format!(
                "leading monomial {lead} of a symmetric residual is not sorted"
            )));
        }
        let z_exps: Vec<u32> = (0..n)
            .map(|i| gamma[i] - gamma.get(i + 1).copied().unwrap_or(0))
            .collect();
        let a = a.clone();
        let mut h = MultiPoly::constant(n, a.clone());
        for (i, &e) in z_exps.iter().enumerate() {
            if e > 0 {
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| family[i].pow(e));
                h = &h * &*pw;
            }
        }
        residual = &residual - &h;
        g.add_term(Monomial::new(z_exps), a);
    }
    Ok((GPoly::new(g, d)?, steps))
}

/// `G = g1 + sum_i tail[i] * z_i`, where `g1` only involves `z_1..z_k`
/// (`k = floor(d/2)`) and `tail[i]` only `z_1..z_(d-i)`, for `i > k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralSplit {
    pub half: usize,
    pub g1: MultiPoly,
    pub tail: BTreeMap<usize, MultiPoly>,
}

impl StructuralSplit {
    /// `g1 + sum tail[i] * z_i`.
    pub fn reassemble(&self) -> MultiPoly {
        let n = self.g1.nvars();
        self.tail.iter().fold(self.g1.clone(), |acc, (&i, t)| {
            &acc + &(t * &MultiPoly::var(n, i - 1))
        })
    }
}

pub fn structural_split(g: &GPoly) -> Result<StructuralSplit> {
    let n = g.n();
    let d = g.source_degree() as usize;
    let half = d / 2;
    let mut g1 = MultiPoly::zero(n);
    let mut tail: BTreeMap<usize, MultiPoly> = BTreeMap::new();
    for (m, c) in g.inner().terms() {
        let exps = m.exponents();
        let high: Vec<usize> = (half..n).filter(|&i| exps[i] > 0).collect();
        match high.as_slice() {
            [] => g1.add_term(m.clone(), c.clone()),
            [i] if exps[*i] == 1 => {
                let index = i + 1;
                let mut rest = exps.to_vec();
                rest[*i] = 0;
                if let Some(j) = rest.iter().rposition(|&e| e > 0) {
                    if j + 1 > d - index {
                        return Err(Error::Invariant(format!(
                            "tail of z{index} uses z{}",
                            j + 1
                        )));
                    }
                }
                tail.entry(index)
                    .or_insert_with(|| MultiPoly::zero(n))
                    .add_term(Monomial::new(rest), c.clone());
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "monomial {m} is not linear in a single variable of index > {half}"
                )))
            }
        }
    }
    tail.retain(|_, t| !t.is_zero());
    Ok(StructuralSplit { half, g1, tail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn z(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i - 1)
    }

    #[test]
    fn symmetry_examples() {
        let x = |i| MultiPoly::var(2, i);
        assert!(is_symmetric(&(&x(0).pow(2) + &x(1).pow(2))));
        assert!(!is_symmetric(&(&x(0) - &x(1))));
        assert!(is_symmetric(&elementary_symmetric(2, 3).unwrap()));
        assert!(is_symmetric(&MultiPoly::constant(0, int(4))));
    }

    #[test]
    fn elementary_examples() {
        let e1 = elementary_symmetric(1, 3).unwrap();
        assert_eq!(e1, &(&z(3, 1) + &z(3, 2)) + &z(3, 3));
        let e3 = elementary_symmetric(3, 3).unwrap();
        assert_eq!(e3, &(&z(3, 1) * &z(3, 2)) * &z(3, 3));
        assert_eq!(elementary_symmetric(2, 4).unwrap().num_terms(), 6);
        assert!(elementary_symmetric(0, 3).is_err());
        assert!(elementary_symmetric(4, 3).is_err());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, 2).unwrap(), &z(2, 1) + &z(2, 2));
        assert_eq!(
            power_sum(2, 3).unwrap(),
            &(&z(3, 1).pow(2) + &z(3, 2).pow(2)) + &z(3, 3).pow(2)
        );
        assert_eq!(power_sum(4, 2).unwrap(), &z(2, 1).pow(4) + &z(2, 2).pow(4));
        assert!(power_sum(0, 2).is_err());
    }

    #[test]
    fn vieta_map_matches_products() {
        let x = [int(1), int(2), int(3)];
        assert_eq!(vieta_map(&x), vec![int(6), int(11), int(6)]);
    }

    #[test]
    fn newton_examples_symbolic() {
        // independent variables standing in for p_1, p_2, p_3
        let p: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(3, i)).collect();
        let e = newton_convert(NewtonDirection::EFromP, &p, 3).unwrap();
        assert_eq!(e[0], p[0]);
        assert_eq!(e[1], (&p[0].pow(2) - &p[1]).scale(&rat(1, 2)));
        let e3 = &(&p[0].pow(3) - &(&p[0] * &p[1]).scale(&int(3))) + &p[2].scale(&int(2));
        assert_eq!(e[2], e3.scale(&rat(1, 6)));

        let single = [MultiPoly::var(1, 0)];
        let p1 = newton_convert(NewtonDirection::PFromE { n: 1 }, &single, 1).unwrap();
        assert_eq!(p1[0], single[0]);
    }

    #[test]
    fn newton_numeric_beyond_n() {
        // roots {1, 2}: e = (3, 2); p_k = 1 + 2^k
        let p = newton_convert(NewtonDirection::PFromE { n: 2 }, &[int(3), int(2)], 5).unwrap();
        assert_eq!(p, (1..=5).map(|k| int(1 + (1 << k))).collect::<Vec<_>>());
        let e = newton_convert(NewtonDirection::EFromP, &p, 4).unwrap();
        assert_eq!(e, vec![int(3), int(2), int(0), int(0)]);
    }

    #[test]
    fn newton_rejects_short_input() {
        let err = newton_convert(NewtonDirection::EFromP, &[int(1)], 3).unwrap_err();
        assert_eq!(err, Error::InsufficientValues { needed: 3, got: 1 });
        assert!(newton_convert::<Rational>(NewtonDirection::PFromE { n: 2 }, &[], 1).is_err());
        assert!(newton_convert(NewtonDirection::PFromE { n: 3 }, &[int(1)], 2).is_err());
        assert!(newton_convert(NewtonDirection::EFromP, &[int(1)], 0).is_err());
    }

    #[test]
    fn decomposition_examples() {
        for n in 1..=4 {
            let g = decompose_to_elementary(&power_sum(1, n).unwrap()).unwrap();
            assert_eq!(*g.inner(), z(n, 1));
        }
        let g2 = decompose_to_elementary(&power_sum(2, 3).unwrap()).unwrap();
        assert_eq!(*g2.inner(), &z(3, 1).pow(2) - &z(3, 2).scale(&int(2)));
        let g3 = decompose_to_elementary(&power_sum(3, 3).unwrap()).unwrap();
        let expected =
            &(&z(3, 1).pow(3) - &(&z(3, 1) * &z(3, 2)).scale(&int(3))) + &z(3, 3).scale(&int(3));
        assert_eq!(*g3.inner(), expected);
        assert_eq!(g3.expand(), power_sum(3, 3).unwrap());
    }

    #[test]
    fn decomposition_rejects_nonsymmetric() {
        let f = &MultiPoly::var(2, 0) - &MultiPoly::var(2, 1);
        assert_eq!(decompose_to_elementary(&f).unwrap_err(), Error::NotSymmetric);
    }

    #[test]
    fn decomposition_of_constants_and_zero() {
        let g = decompose_to_elementary(&MultiPoly::constant(3, int(5))).unwrap();
        assert_eq!(*g.inner(), MultiPoly::constant(3, int(5)));
        assert!(decompose_to_elementary(&MultiPoly::zero(3))
            .unwrap()
            .inner()
            .is_zero());
    }

    #[test]
    fn split_examples() {
        let g = GPoly::new(&z(3, 1).pow(2) - &z(3, 2).scale(&int(2)), 2).unwrap();
        let s = structural_split(&g).unwrap();
        assert_eq!(s.g1, z(3, 1).pow(2));
        assert_eq!(s.tail.len(), 1);
        assert_eq!(s.tail[&2], MultiPoly::constant(3, int(-2)));
        assert_eq!(s.reassemble(), *g.inner());

        let g = GPoly::new(
            &(&z(3, 1).pow(3) - &(&z(3, 1) * &z(3, 2)).scale(&int(3))) + &z(3, 3).scale(&int(3)),
            3,
        )
        .unwrap();
        let s = structural_split(&g).unwrap();
        assert_eq!(s.g1, z(3, 1).pow(3));
        assert_eq!(s.tail[&2], z(3, 1).scale(&int(-3)));
        assert_eq!(s.tail[&3], MultiPoly::constant(3, int(3)));
        assert_eq!(s.reassemble(), *g.inner());

        let g = GPoly::new(z(4, 2).pow(2), 4).unwrap();
        let s = structural_split(&g).unwrap();
        assert_eq!(s.g1, z(4, 2).pow(2));
        assert!(s.tail.is_empty());
    }

    #[test]
    fn gpoly_rejects_overweight_monomials() {
        assert!(GPoly::new(z(3, 3), 2).is_err());
        assert!(GPoly::new(&z(3, 1) * &z(3, 2), 3).is_ok());
    }

    #[test]
    fn step_bound_is_binomial() {
        assert_eq!(decomposition_step_bound(2, 2), 6);
        assert_eq!(decomposition_step_bound(6, 8), 3003);
    }
}
