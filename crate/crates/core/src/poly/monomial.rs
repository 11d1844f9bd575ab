use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `x_1^a_1 ... x_n^a_n`.
///
/// Ordered graded-lexicographically: higher total degree wins, ties are broken
/// by the first position where the exponents differ (larger exponent wins), so
/// `x1 > x2 > ... > xn` and `x1^2 x2^2 > x1^3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// `x_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree where variable `i` (zero-based) carries weight `i + 1`.
    pub fn weighted_degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u32 + 1) * e)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e.swap(i, j);
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_monomial(f, self, "x")
    }
}

pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    prefix: &str,
) -> fmt::Result {
    if m.is_one() {
        return f.write_str("1");
    }
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        write!(f, "{prefix}{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order_compares_degree_first() {
        let x1_cubed = Monomial::new(vec![3, 0]);
        let x1sq_x2sq = Monomial::new(vec![2, 2]);
        assert!(x1sq_x2sq > x1_cubed);
    }

    #[test]
    fn lex_tiebreak_prefers_earlier_variables() {
        assert!(Monomial::new(vec![2, 1]) > Monomial::new(vec![1, 2]));
        assert!(Monomial::var(3, 0) > Monomial::var(3, 1));
        assert!(Monomial::var(3, 1) > Monomial::var(3, 2));
    }

    #[test]
    fn order_is_multiplicative() {
        let a = Monomial::new(vec![1, 2, 0]);
        let b = Monomial::new(vec![0, 3, 0]);
        let c = Monomial::new(vec![2, 0, 1]);
        assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
    }
}
