//! Linear objectives over slices of the orbit space.
//!
//! The slice `H_s(a)` is the set of coefficient vectors `z = pi(x)` of monic
//! hyperbolic polynomials whose first `s` elementary symmetric values are
//! `a_1..a_s`. Minimizing `c . z` over it, an optimum is attained by a root
//! vector with at most `s` distinct values. The experiment samples the slice in
//! root coordinates, where hyperbolicity is automatic, and reports how many
//! distinct values the best sample has.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SearchConfig;
use crate::error::{Error, Result};
use crate::poly::{to_f64, Rational};
use crate::reduction::{enumerate_patterns, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceStatus {
    Feasible,
    /// No sample could be brought onto the slice; the objective is `+inf`.
    Empty,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma42Report {
    pub n: usize,
    pub s: usize,
    pub status: SliceStatus,
    /// `sum_{i<=s} c_i a_i` when `c_i = 0` for all `i > s`.
    pub constant_objective: Option<Rational>,
    pub best_objective: f64,
    pub best_roots: Vec<f64>,
    /// Distinct values of `best_roots` after clustering.
    pub distinct_count: usize,
    pub cluster_tolerance: f64,
    /// Minimum over slice points whose root vector has at most `s` parts.
    pub pattern_min: f64,
    pub samples_accepted: usize,
}

impl Lemma42Report {
    pub fn within_bound(&self) -> bool {
        self.status == SliceStatus::Empty || self.distinct_count <= self.s
    }
}

/// `e_1..e_n` of `x` in floating point.
fn elementary_f64(x: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; x.len() + 1];
    e[0] = 1.0;
    for (j, &xi) in x.iter().enumerate() {
        for k in (1..=j + 1).rev() {
            e[k] += e[k - 1] * xi;
        }
    }
    e
}

/// `d e_k / d x_i = e_{k-1}(x without x_i)` for `k = 1..=s`.
fn jacobian(x: &[f64], s: usize) -> Vec<Vec<f64>> {
    let n = x.len();
    let mut jac = vec![vec![0.0; n]; s];
    for i in 0..n {
        let rest: Vec<f64> = x.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
        let e = elementary_f64(&rest);
        for (k, row) in jac.iter_mut().enumerate() {
            row[i] = e[k];
        }
    }
    jac
}

/// Solves the small dense system `m y = b` with partial pivoting.
fn solve(mut m: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut y = vec![0.0; n];
    for i in (0..n).rev() {
        let acc: f64 = (i + 1..n).map(|k| m[i][k] * y[k]).sum();
        y[i] = (b[i] - acc) / m[i][i];
    }
    Some(y)
}

struct Slice<'a> {
    a: &'a [f64],
    s: usize,
}

impl Slice<'_> {
    fn residual(&self, x: &[f64]) -> Vec<f64> {
        let e = elementary_f64(x);
        (0..self.s).map(|k| e[k + 1] - self.a[k]).collect()
    }

    fn converged(&self, r: &[f64]) -> bool {
        r.iter()
            .zip(self.a)
            .all(|(ri, ai)| ri.abs() <= 1e-11 * (1.0 + ai.abs()))
    }

    /// Moves `x` onto the slice: exact recentring and rescaling for `e_1`, `e_2`
    /// (a sphere in the hyperplane of fixed sum), then minimum-norm Newton steps
    /// for all `s` constraints.
    fn project(&self, mut x: Vec<f64>) -> Option<Vec<f64>> {
        let n = x.len() as f64;
        let mean = self.a[0] / n;
        let cur_mean = x.iter().sum::<f64>() / n;
        for v in &mut x {
            *v += mean - cur_mean;
        }
        let target = self.a[0] * self.a[0] - 2.0 * self.a[1] - self.a[0] * self.a[0] / n;
        if target < -1e-12 {
            return None;
        }
        let norm: f64 = x.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>().sqrt();
        if norm < 1e-300 {
            return None;
        }
        let scale = target.max(0.0).sqrt() / norm;
        for v in &mut x {
            *v = mean + (*v - mean) * scale;
        }
        for _ in 0..60 {
            let r = self.residual(&x);
            if self.converged(&r) {
                return Some(x);
            }
            let jac = jacobian(&x, self.s);
            let gram: Vec<Vec<f64>> = (0..self.s)
                .map(|i| (0..self.s).map(|j| jac[i].iter().zip(&jac[j]).map(|(p, q)| p * q).sum()).collect())
                .collect();
            let y = solve(gram, r)?;
            for (i, xi) in x.iter_mut().enumerate() {
                *xi -= (0..self.s).map(|k| jac[k][i] * y[k]).sum::<f64>();
            }
            if x.iter().any(|v| !v.is_finite()) {
                return None;
            }
        }
        let r = self.residual(&x);
        self.converged(&r).then_some(x)
    }
}

fn objective(c: &[f64], x: &[f64]) -> f64 {
    let e = elementary_f64(x);
    c.iter().zip(&e[1..]).map(|(ci, ei)| ci * ei).sum()
}

fn clustered_count(roots: &[f64], tol: f64) -> usize {
    let mut sorted = roots.to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted.is_empty() {
        return 0;
    }
    1 + sorted.windows(2).filter(|w| w[1] - w[0] > tol).count()
}

/// Gauss-Newton on the pattern values `t` so that the lifted root vector lies
/// on the slice; `None` if the pattern misses the slice from this start.
fn project_pattern(slice: &Slice<'_>, parts: &[usize], mut t: Vec<f64>) -> Option<Vec<f64>> {
    let k = t.len();
    for _ in 0..80 {
        let x: Vec<f64> = parts.iter().zip(&t).flat_map(|(&m, &v)| std::iter::repeat_n(v, m)).collect();
        let r = slice.residual(&x);
        if slice.converged(&r) {
            return Some(x);
        }
        let jx = jacobian(&x, slice.s);
        // chain rule: columns of the same block add up
        let mut jt = vec![vec![0.0; k]; slice.s];
        let mut col = 0;
        for (b, &m) in parts.iter().enumerate() {
            for _ in 0..m {
                for row in 0..slice.s {
                    jt[row][b] += jx[row][col];
                }
                col += 1;
            }
        }
        let normal: Vec<Vec<f64>> = (0..k)
            .map(|i| (0..k).map(|j| (0..slice.s).map(|r| jt[r][i] * jt[r][j]).sum()).collect())
            .collect();
        let rhs: Vec<f64> = (0..k).map(|i| (0..slice.s).map(|row| jt[row][i] * r[row]).sum()).collect();
        let step = solve(normal, rhs)?;
        for (ti, d) in t.iter_mut().zip(step) {
            *ti -= d;
        }
        if t.iter().any(|v| !v.is_finite()) {
            return None;
        }
    }
    None
}

/// Samples `H_s(a)` in root coordinates and minimizes `c . pi(x)` over it.
pub fn lemma42_experiment(
    n: usize,
    s: usize,
    a: &[Rational],
    c: &[Rational],
    sample_count: usize,
    cfg: &SearchConfig,
) -> Result<Lemma42Report> {
    cfg.validate()?;
    if s < 2 || s > n {
        return Err(Error::OutOfRange {
            what: "s",
            value: s as i64,
            allowed: format!("2..={n}"),
        });
    }
    if a.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            found: a.len(),
        });
    }
    if c.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.len(),
        });
    }
    let constant_objective = c[s..].iter().all(Zero::is_zero).then(|| {
        c.iter()
            .zip(a)
            .fold(Rational::zero(), |acc, (ci, ai)| acc + ci * ai)
    });
    let af: Vec<f64> = a.iter().map(to_f64).collect();
    let cf: Vec<f64> = c.iter().map(to_f64).collect();
    let slice = Slice { a: &af, s };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cluster_tolerance = 1e-4 * (cfg.hi - cfg.lo);

    let mut samples: Vec<(f64, Vec<f64>)> = Vec::new();
    for _ in 0..sample_count {
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(cfg.lo..cfg.hi)).collect();
        if let Some(p) = slice.project(x) {
            samples.push((objective(&cf, &p), p));
        }
    }
    let samples_accepted = samples.len();
    if samples.is_empty() {
        return Ok(Lemma42Report {
            n,
            s,
            status: SliceStatus::Empty,
            constant_objective,
            best_objective: f64::INFINITY,
            best_roots: Vec::new(),
            distinct_count: 0,
            cluster_tolerance,
            pattern_min: f64::INFINITY,
            samples_accepted,
        });
    }
    samples.sort_by(|p, q| p.0.total_cmp(&q.0));

    // refine the best few samples by projected coordinate moves
    let mut best = samples[0].clone();
    for (start_val, start) in samples.iter().take(5) {
        let (mut val, mut x) = (*start_val, start.clone());
        let mut step = (cfg.hi - cfg.lo) / 8.0;
        for _ in 0..cfg.descent_steps.max(1) {
            for _ in 0..32 {
                let mut improved = false;
                for i in 0..n {
                    for dir in [1.0, -1.0] {
                        let mut y = x.clone();
                        y[i] += dir * step;
                        if let Some(p) = slice.project(y) {
                            let v = objective(&cf, &p);
                            if v < val {
                                val = v;
                                x = p;
                                improved = true;
                            }
                        }
                    }
                }
                if !improved {
                    break;
                }
            }
            step *= 0.5;
        }
        if val < best.0 {
            best = (val, x);
        }
    }
    let (best_objective, mut best_roots) = best;
    best_roots.sort_by(f64::total_cmp);

    let mut pattern_min = f64::INFINITY;
    for pattern in enumerate_patterns(n, s, Mode::RealLine)? {
        let parts = pattern.parts();
        for _ in 0..sample_count.max(1) {
            let t: Vec<f64> = (0..parts.len()).map(|_| rng.random_range(cfg.lo..cfg.hi)).collect();
            if let Some(x) = project_pattern(&slice, parts, t) {
                pattern_min = pattern_min.min(objective(&cf, &x));
            }
        }
    }

    Ok(Lemma42Report {
        n,
        s,
        status: SliceStatus::Feasible,
        constant_objective,
        best_objective,
        distinct_count: clustered_count(&best_roots, cluster_tolerance),
        best_roots,
        cluster_tolerance,
        pattern_min,
        samples_accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    #[test]
    fn projection_lands_on_slice() {
        let a = [0.0, -3.0, 1.0];
        let slice = Slice { a: &a, s: 3 };
        let x = slice.project(vec![0.3, -1.2, 2.0, 0.7]).unwrap();
        assert!(slice.converged(&slice.residual(&x)));
    }

    #[test]
    fn clustering_merges_close_values() {
        assert_eq!(clustered_count(&[1.0, 1.0 + 1e-9, -2.0], 1e-6), 2);
        assert_eq!(clustered_count(&[], 1e-6), 0);
    }

    #[test]
    fn two_variable_slice_is_a_point() {
        let cfg = SearchConfig::default();
        let r = lemma42_experiment(2, 2, &[int(1), int(-2)], &[int(3), int(5)], 50, &cfg).unwrap();
        assert_eq!(r.status, SliceStatus::Feasible);
        assert!(r.distinct_count <= 2);
        assert_eq!(r.constant_objective, Some(int(3 - 10)));
    }

    #[test]
    fn empty_slice_reports_infinity() {
        // e_1 = 0, e_2 = 1 would need sum of squares -2
        let cfg = SearchConfig::default();
        let r = lemma42_experiment(3, 2, &[int(0), int(1)], &[int(0), int(0), int(1)], 50, &cfg).unwrap();
        assert_eq!(r.status, SliceStatus::Empty);
        assert_eq!(r.best_objective, f64::INFINITY);
    }

    #[test]
    fn minimizer_of_e3_has_a_double_root() {
        let cfg = SearchConfig::default();
        let r = lemma42_experiment(3, 2, &[int(0), int(-3)], &[int(0), int(0), int(1)], 200, &cfg).unwrap();
        assert_eq!(r.distinct_count, 2, "roots {:?}", r.best_roots);
        // on e_1 = 0, e_2 = -3 the extreme e_3 values are ±2, at roots (1, 1, -2)
        assert!((r.best_objective + 2.0).abs() < 1e-8);
        assert!((r.pattern_min + 2.0).abs() < 1e-8);
    }

    #[test]
    fn argument_checks() {
        let cfg = SearchConfig::default();
        assert!(lemma42_experiment(3, 1, &[int(0)], &vec![int(0); 3], 10, &cfg).is_err());
        assert!(lemma42_experiment(3, 2, &[int(0)], &vec![int(0); 3], 10, &cfg).is_err());
        assert!(lemma42_experiment(3, 2, &[int(0), int(0)], &vec![int(0); 2], 10, &cfg).is_err());
    }
}
