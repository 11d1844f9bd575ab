//! Numeric search over reduced instances, with exact re-evaluation of every
//! witness.
//!
//! The search is a refutation engine: a counterexample or zero is reported only
//! after the lifted rational point has been checked in exact arithmetic. A
//! "no counterexample" verdict is evidence, not a certificate.

mod slice;

pub use slice::{lemma42_experiment, Lemma42Report, SliceStatus};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{rationalize, sign, to_f64, FloatPoly, MultiPoly, Rational};
use crate::reduction::{
    lift_point, principle_instances, Mode, MultiplicityPattern, Principle, ReducedInstance,
};
use crate::symmetric::is_symmetric;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub lo: f64,
    pub hi: f64,
    /// Grid points per axis.
    pub grid: usize,
    /// Number of step halvings in coordinate descent.
    pub descent_steps: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// Denominator cap when rationalizing numeric minimizers.
    pub max_denominator: u64,
    /// Largest number of grid points a single scan may visit.
    pub grid_budget: u128,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            lo: -10.0,
            hi: 10.0,
            grid: 33,
            descent_steps: 40,
            tolerance: 1e-9,
            seed: 0,
            max_denominator: 1_000_000,
            grid_budget: 50_000_000,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::InvalidConfig(format!(
                "box ({}, {}) is degenerate",
                self.lo, self.hi
            )));
        }
        if self.grid < 2 {
            return Err(Error::InvalidConfig(format!("grid {} < 2", self.grid)));
        }
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tolerance {} must be positive",
                self.tolerance
            )));
        }
        Ok(())
    }

    /// Search interval per coordinate. In orthant mode the lower end is moved
    /// half a cell into the open positive half-line.
    pub fn bounds(&self, mode: Mode) -> (f64, f64) {
        match mode {
            Mode::RealLine => (self.lo, self.hi),
            Mode::Orthant => {
                let lo = self.lo.max(0.0);
                (lo + (self.hi - lo) / (2.0 * (self.grid - 1) as f64), self.hi)
            }
        }
    }

    pub fn cell_width(&self) -> f64 {
        (self.hi - self.lo) / (self.grid - 1) as f64
    }

    fn check_budget(&self, dims: usize) -> Result<()> {
        let needed = (self.grid as u128).checked_pow(dims as u32).unwrap_or(u128::MAX);
        if needed > self.grid_budget {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.grid_budget,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    CounterexampleFound,
    NoCounterexampleFound,
    ZeroFound,
    NoZeroFound,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::CounterexampleFound => "counterexample-found",
            VerdictStatus::NoCounterexampleFound => "no-counterexample-found",
            VerdictStatus::ZeroFound => "zero-found",
            VerdictStatus::NoZeroFound => "no-zero-found",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub pattern: MultiplicityPattern,
    pub t_values: Vec<Rational>,
    pub point: Vec<Rational>,
    /// Exact value of `F` at `point`.
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    /// Smallest value (for nonnegativity) or smallest `|F|` (for zeros) seen.
    pub best_value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Minimum {
    pub value: f64,
    pub argmin: Vec<f64>,
}

/// Visits every index tuple of a `res^dims` grid in lexicographic order.
fn for_each_grid_index(dims: usize, res: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; dims];
    loop {
        visit(&idx);
        let Some(pos) = (0..dims).rev().find(|&i| idx[i] + 1 < res) else {
            return;
        };
        idx[pos] += 1;
        for v in &mut idx[pos + 1..] {
            *v = 0;
        }
    }
}

fn axis(lo: f64, hi: f64, res: usize) -> Vec<f64> {
    (0..res)
        .map(|i| lo + (hi - lo) * i as f64 / (res - 1) as f64)
        .collect()
}

/// Exact grid coordinates matching [`axis`] when `lo`, `hi` are rational.
fn exact_axis(lo: f64, hi: f64, res: usize, max_den: u64) -> Vec<Rational> {
    let (lo, hi) = (rationalize(lo, max_den), rationalize(hi, max_den));
    let steps = Rational::from_integer(((res - 1) as i64).into());
    (0..res)
        .map(|i| &lo + (&hi - &lo) * Rational::from_integer((i as i64).into()) / &steps)
        .collect()
}

/// Coordinate descent from `start`, halving the step `descent_steps` times.
fn descend(
    eval: impl Fn(&[f64]) -> f64,
    start: Vec<f64>,
    lo: f64,
    hi: f64,
    mut step: f64,
    descent_steps: usize,
) -> Minimum {
    let mut x = start;
    let mut best = eval(&x);
    for _ in 0..descent_steps {
        for _ in 0..64 {
            let mut improved = false;
            for i in 0..x.len() {
                for dir in [1.0, -1.0] {
                    let old = x[i];
                    x[i] = (old + dir * step).clamp(lo, hi);
                    let v = eval(&x);
                    if v < best {
                        best = v;
                        improved = true;
                    } else {
                        x[i] = old;
                    }
                }
            }
            if !improved {
                break;
            }
        }
        step *= 0.5;
    }
    Minimum {
        value: best,
        argmin: x,
    }
}

/// Grid scan of `inst` over the box followed by coordinate-descent refinement
/// from the best grid point. Deterministic for a given config.
pub fn minimize_instance(inst: &ReducedInstance, cfg: &SearchConfig) -> Result<Minimum> {
    cfg.validate()?;
    let k = inst.reduced.nvars();
    if k == 0 {
        return Ok(Minimum {
            value: to_f64(&inst.reduced.constant_term()),
            argmin: Vec::new(),
        });
    }
    cfg.check_budget(k)?;
    let fp = FloatPoly::new(&inst.reduced);
    let (lo, hi) = cfg.bounds(inst.mode);
    let ax = axis(lo, hi, cfg.grid);
    let mut best = f64::INFINITY;
    let mut best_idx = vec![0; k];
    let mut point = vec![0.0; k];
    for_each_grid_index(k, cfg.grid, |idx| {
        for (p, &i) in point.iter_mut().zip(idx) {
            *p = ax[i];
        }
        let v = fp.eval(&point);
        if v < best {
            best = v;
            best_idx.copy_from_slice(idx);
        }
    });
    let start = best_idx.iter().map(|&i| ax[i]).collect();
    let step = (hi - lo) / (cfg.grid - 1) as f64;
    Ok(descend(|x| fp.eval(x), start, lo, hi, step, cfg.descent_steps))
}

fn rational_point(t: &[f64], mode: Mode, cfg: &SearchConfig) -> Vec<Rational> {
    t.iter()
        .map(|&x| {
            let q = rationalize(x, cfg.max_denominator);
            if mode == Mode::Orthant && !q.is_positive() {
                Rational::new(1.into(), (cfg.max_denominator as i64).into())
            } else {
                q
            }
        })
        .collect()
}

fn witness_at(inst: &ReducedInstance, t: Vec<Rational>) -> Result<Witness> {
    let value = inst.reduced.evaluate(&t)?;
    let point = lift_point(&inst.pattern, &t)?;
    Ok(Witness {
        pattern: inst.pattern.clone(),
        t_values: t,
        point,
        value,
    })
}

fn constant_degree(f: &MultiPoly) -> bool {
    f.degree().unwrap_or(0) == 0
}

fn constant_witness(f: &MultiPoly) -> Result<Witness> {
    let n = f.nvars();
    let pattern = if n == 0 {
        MultiplicityPattern::new(vec![], 0)
    } else {
        MultiplicityPattern::new(vec![n], 0)
    };
    let t = if n == 0 { vec![] } else { vec![Rational::zero()] };
    Ok(Witness {
        pattern: pattern.unwrap_or_else(|_| MultiplicityPattern::new(vec![1], 0).expect("valid")),
        point: vec![Rational::zero(); n],
        t_values: t,
        value: f.constant_term(),
    })
}

/// Searches the half-degree test set for a point where `f < 0`.
pub fn check_nonnegativity(f: &MultiPoly, mode: Mode, cfg: &SearchConfig) -> Result<Verdict> {
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    cfg.validate()?;
    if constant_degree(f) {
        let c = f.constant_term();
        let negative = c.is_negative();
        return Ok(Verdict {
            status: if negative {
                VerdictStatus::CounterexampleFound
            } else {
                VerdictStatus::NoCounterexampleFound
            },
            witness: if negative { Some(constant_witness(f)?) } else { None },
            best_value: to_f64(&c),
        });
    }
    let mut best_value = f64::INFINITY;
    let mut best: Option<Witness> = None;
    for inst in principle_instances(f, Principle::HalfDegree, mode)? {
        let m = minimize_instance(&inst, cfg)?;
        best_value = best_value.min(m.value);
        let w = witness_at(&inst, rational_point(&m.argmin, mode, cfg))?;
        if w.value.is_negative() && best.as_ref().is_none_or(|b| w.value < b.value) {
            best = Some(w);
        }
    }
    Ok(Verdict {
        status: if best.is_some() {
            VerdictStatus::CounterexampleFound
        } else {
            VerdictStatus::NoCounterexampleFound
        },
        witness: best,
        best_value,
    })
}

/// Exact bisection between rational points `a`, `b` with opposite signs of
/// `p`, until `|p| <= tol`.
fn bisect_exact(p: &MultiPoly, mut a: Vec<Rational>, mut b: Vec<Rational>, tol: &Rational) -> Result<Option<Vec<Rational>>> {
    let sa = sign(&p.evaluate(&a)?);
    let sb = sign(&p.evaluate(&b)?);
    if sa == 0 {
        return Ok(Some(a));
    }
    if sb == 0 {
        return Ok(Some(b));
    }
    if sa == sb {
        return Ok(None);
    }
    let half = Rational::new(1.into(), 2.into());
    for _ in 0..400 {
        let mid: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| (x + y) * &half).collect();
        let v = p.evaluate(&mid)?;
        if v.abs() <= *tol {
            return Ok(Some(mid));
        }
        if sign(&v) == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(None)
}

/// Searches the degree-principle test set for a zero of `f`: exact grid
/// zeros, then sign changes between grid neighbours (refined by exact
/// bisection), then a descent on `|f|` from the grid point where it is smallest.
pub fn find_zero(f: &MultiPoly, cfg: &SearchConfig) -> Result<Verdict> {
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    cfg.validate()?;
    let tol = crate::poly::from_f64(cfg.tolerance).expect("finite tolerance");
    if constant_degree(f) {
        let c = f.constant_term();
        let zero = c.is_zero();
        return Ok(Verdict {
            status: if zero {
                VerdictStatus::ZeroFound
            } else {
                VerdictStatus::NoZeroFound
            },
            witness: if zero { Some(constant_witness(f)?) } else { None },
            best_value: to_f64(&c).abs(),
        });
    }
    let instances = principle_instances(f, Principle::Degree, Mode::RealLine)?;
    let mut best_abs = f64::INFINITY;
    let mut fallback: Vec<(f64, usize, Vec<usize>)> = Vec::new();
    let ax = axis(cfg.lo, cfg.hi, cfg.grid);
    let exact_ax = exact_axis(cfg.lo, cfg.hi, cfg.grid, cfg.max_denominator);

    for (which, inst) in instances.iter().enumerate() {
        let k = inst.reduced.nvars();
        cfg.check_budget(k)?;
        let fp = FloatPoly::new(&inst.reduced);
        let res = cfg.grid;
        let mut values = Vec::with_capacity(res.pow(k as u32));
        let mut point = vec![0.0; k];
        for_each_grid_index(k, res, |idx| {
            for (p, &i) in point.iter_mut().zip(idx) {
                *p = ax[i];
            }
            values.push(fp.eval(&point));
        });
        let exact_at = |flat: usize| -> Vec<Rational> {
            let mut rest = flat;
            let mut t = vec![Rational::zero(); k];
            for slot in t.iter_mut().rev() {
                *slot = exact_ax[rest % res].clone();
                rest /= res;
            }
            t
        };
        let (min_flat, min_abs) = values
            .iter()
            .enumerate()
            .map(|(i, v)| (i, v.abs()))
            .fold((0, f64::INFINITY), |acc, (i, v)| if v < acc.1 { (i, v) } else { acc });
        best_abs = best_abs.min(min_abs);

        // exact zeros on the grid
        for (flat, v) in values.iter().enumerate() {
            if v.abs() <= cfg.tolerance {
                let w = witness_at(inst, exact_at(flat))?;
                if w.value.abs() <= tol {
                    return Ok(zero_verdict(w));
                }
            }
        }
        // sign changes between axis neighbours
        for flat in 0..values.len() {
            let mut stride = 1;
            for _ in 0..k {
                let coord = (flat / stride) % res;
                if coord + 1 < res {
                    let other = flat + stride;
                    if values[flat] * values[other] < 0.0 {
                        if let Some(t) = bisect_exact(&inst.reduced, exact_at(flat), exact_at(other), &tol)? {
                            return Ok(zero_verdict(witness_at(inst, t)?));
                        }
                    }
                }
                stride *= res;
            }
        }
        let mut idx = vec![0; k];
        let mut rest = min_flat;
        for slot in idx.iter_mut().rev() {
            *slot = rest % res;
            rest /= res;
        }
        fallback.push((min_abs, which, idx));
    }

    // touching zeros: minimize |f| from the most promising grid points
    fallback.sort_by(|a, b| a.0.total_cmp(&b.0));
    for (_, which, idx) in fallback {
        let inst = &instances[which];
        let fp = FloatPoly::new(&inst.reduced);
        let start = idx.iter().map(|&i| ax[i]).collect();
        let m = descend(|x| fp.eval(x).abs(), start, cfg.lo, cfg.hi, cfg.cell_width(), cfg.descent_steps);
        best_abs = best_abs.min(m.value);
        let w = witness_at(inst, rational_point(&m.argmin, Mode::RealLine, cfg))?;
        if w.value.abs() <= tol {
            return Ok(zero_verdict(w));
        }
    }
    Ok(Verdict {
        status: VerdictStatus::NoZeroFound,
        witness: None,
        best_value: best_abs,
    })
}

fn zero_verdict(w: Witness) -> Verdict {
    Verdict {
        status: VerdictStatus::ZeroFound,
        best_value: to_f64(&w.value).abs(),
        witness: Some(w),
    }
}

/// Exhaustive grid minimum of `f` over `box^n`, with no symmetry reduction.
/// Ties go to the lexicographically smallest grid point.
pub fn oracle_min_full(f: &MultiPoly, cfg: &SearchConfig) -> Result<Minimum> {
    cfg.validate()?;
    let n = f.nvars();
    cfg.check_budget(n)?;
    let fp = FloatPoly::new(f);
    let ax = axis(cfg.lo, cfg.hi, cfg.grid);
    let mut best = f64::INFINITY;
    let mut best_idx = vec![0; n];
    let mut point = vec![0.0; n];
    for_each_grid_index(n, cfg.grid, |idx| {
        for (p, &i) in point.iter_mut().zip(idx) {
            *p = ax[i];
        }
        let v = fp.eval(&point);
        if v < best {
            best = v;
            best_idx.copy_from_slice(idx);
        }
    });
    Ok(Minimum {
        value: best,
        argmin: best_idx.iter().map(|&i| ax[i]).collect(),
    })
}
