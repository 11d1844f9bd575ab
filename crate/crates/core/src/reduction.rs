//! Test sets of the degree and half-degree principles.
//!
//! Points with at most `k` distinct coordinates are parameterized by a
//! [`MultiplicityPattern`] (how many coordinates share each value) and the
//! values themselves. Substituting such a point into a symmetric `F` gives a
//! [`ReducedInstance`] in `k` variables.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::symmetric::is_symmetric;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Points of `R^n` with at most `k` distinct coordinates.
    RealLine,
    /// Points of the nonnegative orthant with at most `k` distinct nonzero
    /// coordinates; the zeros are an explicit block.
    Orthant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Principle {
    /// `k = min(n, d)`: zero existence.
    Degree,
    /// `k = min(n, max(2, floor(d/2)))`: nonnegativity.
    HalfDegree,
}

impl Principle {
    pub fn test_set_size(self, n: usize, d: u32) -> usize {
        let d = d as usize;
        match self {
            Principle::Degree => n.min(d),
            Principle::HalfDegree => n.min((d / 2).max(2)),
        }
    }
}

/// Weakly decreasing positive block sizes plus a block of zero coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityPattern {
    parts: Vec<usize>,
    zero_block: usize,
}

impl MultiplicityPattern {
    pub fn new(parts: Vec<usize>, zero_block: usize) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invariant(format!(
                "pattern parts {parts:?} must be positive and weakly decreasing"
            )));
        }
        if parts.is_empty() && zero_block == 0 {
            return Err(Error::Invariant("empty pattern".into()));
        }
        Ok(MultiplicityPattern { parts, zero_block })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn zero_block(&self) -> usize {
        self.zero_block
    }

    /// Number of coordinates covered.
    pub fn n(&self) -> usize {
        self.parts.iter().sum::<usize>() + self.zero_block
    }

    /// Number of free values.
    pub fn k(&self) -> usize {
        self.parts.len()
    }
}

impl fmt::Display for MultiplicityPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))?;
        if self.zero_block > 0 {
            write!(f, "+0^{}", self.zero_block)?;
        }
        Ok(())
    }
}

/// Partitions of `m` into at most `k` parts, decreasing lexicographically.
pub fn partitions_at_most(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, k, &mut Vec::new(), &mut out);
    out
}

/// Multiplicity patterns for points with at most `k` distinct coordinates
/// (real-line) or at most `k` distinct nonzero coordinates (orthant; one group
/// per zero-block size `0..=n`).
pub fn enumerate_patterns(n: usize, k: usize, mode: Mode) -> Result<Vec<MultiplicityPattern>> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            allowed: format!("1..={n}"),
        });
    }
    let zero_blocks = match mode {
        Mode::RealLine => 0..=0,
        Mode::Orthant => 0..=n,
    };
    Ok(zero_blocks
        .flat_map(|z| {
            partitions_at_most(n - z, k)
                .into_iter()
                .map(move |parts| MultiplicityPattern { parts, zero_block: z })
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub pattern: MultiplicityPattern,
    /// `F` at the lifted point, in variables `t_1..t_k`.
    pub reduced: MultiPoly,
    pub mode: Mode,
}

fn pattern_images(pattern: &MultiplicityPattern) -> Vec<MultiPoly> {
    let k = pattern.k();
    let mut images = Vec::with_capacity(pattern.n());
    for (j, &size) in pattern.parts.iter().enumerate() {
        images.extend(std::iter::repeat_n(MultiPoly::var(k, j), size));
    }
    images.extend(std::iter::repeat_n(MultiPoly::zero(k), pattern.zero_block));
    images
}

/// `F(t_1 (parts[0] times), ..., t_k (parts[k-1] times), 0, ..., 0)`.
pub fn reduce_polynomial(f: &MultiPoly, pattern: &MultiplicityPattern) -> Result<ReducedInstance> {
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    reduce_unchecked(f, pattern)
}

fn reduce_unchecked(f: &MultiPoly, pattern: &MultiplicityPattern) -> Result<ReducedInstance> {
    if pattern.n() != f.nvars() {
        return Err(Error::PatternSize {
            expected: f.nvars(),
            found: pattern.n(),
        });
    }
    let reduced = if pattern.k() == 0 {
        MultiPoly::constant(0, f.constant_term())
    } else {
        f.substitute(&pattern_images(pattern))?
    };
    Ok(ReducedInstance {
        pattern: pattern.clone(),
        reduced,
        mode: if pattern.zero_block > 0 {
            Mode::Orthant
        } else {
            Mode::RealLine
        },
    })
}

/// The point with `parts[j]` copies of `t[j]` followed by the zero block.
pub fn lift_point<T: Clone + Zero>(pattern: &MultiplicityPattern, t: &[T]) -> Result<Vec<T>> {
    if t.len() != pattern.k() {
        return Err(Error::DimensionMismatch {
            expected: pattern.k(),
            found: t.len(),
        });
    }
    let mut x = Vec::with_capacity(pattern.n());
    for (tj, &size) in t.iter().zip(&pattern.parts) {
        x.extend(std::iter::repeat_n(tj.clone(), size));
    }
    x.extend(std::iter::repeat_n(T::zero(), pattern.zero_block));
    Ok(x)
}

/// Reduced instances of `f` on the test set of `principle` in `mode`.
pub fn principle_instances(
    f: &MultiPoly,
    principle: Principle,
    mode: Mode,
) -> Result<Vec<ReducedInstance>> {
    if !is_symmetric(f) {
        return Err(Error::NotSymmetric);
    }
    let n = f.nvars();
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        other => {
            return Err(Error::OutOfRange {
                what: "degree",
                value: other.map_or(-1, i64::from),
                allowed: ">= 1".into(),
            })
        }
    };
    let k = principle.test_set_size(n, d);
    enumerate_patterns(n, k, mode)?
        .iter()
        .map(|p| {
            let mut inst = reduce_unchecked(f, p)?;
            inst.mode = mode;
            Ok(inst)
        })
        .collect()
}

/// Reduces several symmetric polynomials along the same pattern, for systems
/// `F_1 = ... = F_m = 0` whose real variety is empty iff it misses the test set.
pub fn reduce_system(fs: &[MultiPoly], pattern: &MultiplicityPattern) -> Result<Vec<MultiPoly>> {
    fs.iter()
        .map(|f| reduce_polynomial(f, pattern).map(|i| i.reduced))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::symmetric::{elementary_symmetric, power_sum};

    fn pat(parts: &[usize], z: usize) -> MultiplicityPattern {
        MultiplicityPattern::new(parts.to_vec(), z).unwrap()
    }

    #[test]
    fn pattern_enumeration_examples() {
        let ps = enumerate_patterns(4, 2, Mode::RealLine).unwrap();
        assert_eq!(ps, vec![pat(&[4], 0), pat(&[3, 1], 0), pat(&[2, 2], 0)]);
        let ps = enumerate_patterns(3, 3, Mode::RealLine).unwrap();
        assert_eq!(ps, vec![pat(&[3], 0), pat(&[2, 1], 0), pat(&[1, 1, 1], 0)]);
        let ps = enumerate_patterns(2, 1, Mode::Orthant).unwrap();
        assert_eq!(ps, vec![pat(&[2], 0), pat(&[1], 1), pat(&[], 2)]);
        assert!(enumerate_patterns(3, 0, Mode::RealLine).is_err());
        assert!(enumerate_patterns(3, 4, Mode::RealLine).is_err());
    }

    #[test]
    fn invalid_patterns_rejected() {
        assert!(MultiplicityPattern::new(vec![1, 2], 0).is_err());
        assert!(MultiplicityPattern::new(vec![2, 0], 0).is_err());
        assert!(MultiplicityPattern::new(vec![], 0).is_err());
    }

    #[test]
    fn reduce_examples() {
        let t = |i| MultiPoly::var(2, i);
        let r = reduce_polynomial(&power_sum(2, 3).unwrap(), &pat(&[2, 1], 0)).unwrap();
        assert_eq!(r.reduced, &t(0).pow(2).scale(&int(2)) + &t(1).pow(2));
        let r = reduce_polynomial(&elementary_symmetric(2, 3).unwrap(), &pat(&[2, 1], 0)).unwrap();
        assert_eq!(r.reduced, &t(0).pow(2) + &(&t(0) * &t(1)).scale(&int(2)));
        let r = reduce_polynomial(&elementary_symmetric(3, 3).unwrap(), &pat(&[2], 1)).unwrap();
        assert!(r.reduced.is_zero());
        assert_eq!(r.mode, Mode::Orthant);
    }

    #[test]
    fn reduce_errors() {
        let f = &MultiPoly::var(2, 0) - &MultiPoly::var(2, 1);
        assert_eq!(reduce_polynomial(&f, &pat(&[2], 0)).unwrap_err(), Error::NotSymmetric);
        let g = power_sum(2, 3).unwrap();
        assert_eq!(
            reduce_polynomial(&g, &pat(&[2], 0)).unwrap_err(),
            Error::PatternSize { expected: 3, found: 2 }
        );
    }

    #[test]
    fn lift_examples() {
        assert_eq!(lift_point(&pat(&[2, 1], 0), &[int(5), int(-1)]).unwrap(), vec![int(5), int(5), int(-1)]);
        assert_eq!(lift_point(&pat(&[3], 0), &[int(0)]).unwrap(), vec![int(0); 3]);
        assert_eq!(lift_point(&pat(&[1], 2), &[7.0]).unwrap(), vec![7.0, 0.0, 0.0]);
        assert!(lift_point(&pat(&[1], 2), &[7.0, 1.0]).is_err());
    }

    #[test]
    fn principle_instance_counts() {
        let f = power_sum(4, 6).unwrap();
        let inst = principle_instances(&f, Principle::HalfDegree, Mode::RealLine).unwrap();
        let parts: Vec<&[usize]> = inst.iter().map(|i| i.pattern.parts()).collect();
        assert_eq!(parts, vec![&[6][..], &[5, 1], &[4, 2], &[3, 3]]);

        let f = power_sum(2, 3).unwrap();
        assert_eq!(Principle::HalfDegree.test_set_size(3, 2), 2);
        let inst = principle_instances(&f, Principle::HalfDegree, Mode::RealLine).unwrap();
        assert!(inst.iter().all(|i| i.pattern.k() <= 2));

        assert_eq!(Principle::Degree.test_set_size(3, 9), 3);
        let f = power_sum(9, 3).unwrap();
        let inst = principle_instances(&f, Principle::Degree, Mode::RealLine).unwrap();
        assert_eq!(inst.len(), 3);

        assert!(principle_instances(&MultiPoly::constant(2, int(1)), Principle::Degree, Mode::RealLine).is_err());
    }

    #[test]
    fn system_reduction_shares_pattern() {
        let fs = [power_sum(1, 3).unwrap(), power_sum(2, 3).unwrap()];
        let r = reduce_system(&fs, &pat(&[2, 1], 0)).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[0], &MultiPoly::var(2, 0).scale(&int(2)) + &MultiPoly::var(2, 1));
    }
}
