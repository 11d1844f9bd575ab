use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{to_f64, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial in `t`, coefficients stored leading first:
/// `coeffs[0] t^n + coeffs[1] t^(n-1) + ... + coeffs[n]`.
///
/// The leading coefficient is nonzero unless the polynomial is zero, which is
/// represented by an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        UniPoly { coeffs }
    }

    /// From coefficients listed constant term first.
    pub fn from_ascending(mut coeffs: Vec<Rational>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn t_pow(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[0] = Rational::one();
        UniPoly { coeffs }
    }

    /// `prod (t - r)` over `roots`, repeated entries giving multiplicity.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::constant(Rational::one()), |acc, r| {
            &acc * &UniPoly::new(vec![Rational::one(), -r.clone()])
        })
    }

    /// The monic polynomial `t^n - z1 t^(n-1) + z2 t^(n-2) - ... ± zn` whose
    /// roots have elementary symmetric values `z`.
    pub fn from_elementary(z: &[Rational]) -> Self {
        let mut coeffs = Vec::with_capacity(z.len() + 1);
        coeffs.push(Rational::one());
        for (i, zi) in z.iter().enumerate() {
            coeffs.push(if i % 2 == 0 { -zi.clone() } else { zi.clone() });
        }
        UniPoly { coeffs }
    }

    /// Leading-first coefficients.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn ascending(&self) -> Vec<Rational> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.first()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Coefficient of `t^k` (zero above the degree).
    pub fn coeff_of_power(&self, k: usize) -> Rational {
        match self.degree() {
            Some(n) if k <= n => self.coeffs[n - k].clone(),
            _ => Rational::zero(),
        }
    }

    /// Elementary symmetric values of the roots, `e_i = (-1)^i a_i / a_0`.
    pub fn elementary_values(&self) -> Result<Vec<Rational>> {
        let lead = self.leading().ok_or(Error::EmptyPolynomial)?;
        Ok(self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let v = a / lead;
                if i % 2 == 0 {
                    -v
                } else {
                    v
                }
            })
            .collect())
    }

    pub fn to_monic(&self) -> Result<UniPoly> {
        let lead = self.leading().ok_or(Error::EmptyPolynomial)?.clone();
        Ok(self.scale(&lead.recip()))
    }

    pub fn scale(&self, factor: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        let n = match self.degree() {
            Some(n) if n > 0 => n,
            _ => return UniPoly::zero(),
        };
        UniPoly::new(
            self.coeffs[..n]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Rational::from_integer(((n - i) as i64).into()))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc * t + to_f64(c))
    }

    pub fn sign_at(&self, t: &Rational) -> i8 {
        super::sign(&self.eval(t))
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dn = divisor.degree().ok_or(Error::EmptyPolynomial)?;
        let mut rem = self.ascending();
        let dv = divisor.ascending();
        let lead = &dv[dn];
        if rem.len() <= dn {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dn] / lead;
            if !q.is_zero() {
                for (j, d) in dv.iter().enumerate() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dn);
        Ok((UniPoly::from_ascending(quot), UniPoly::from_ascending(rem)))
    }

    /// Quotient of an exact division; errors if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.to_monic().expect("nonzero")
        }
    }

    /// Multiplicity of `t = 0` as a root (number of trailing zero coefficients).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// Square-free decomposition by Yun's algorithm: monic square-free, pairwise
    /// coprime factors `(q_i, i)` with `self = lead * prod q_i^i`. Constant
    /// factors are omitted.
    pub fn square_free_decomposition(&self) -> Result<Vec<(UniPoly, usize)>> {
        let f = self.to_monic()?;
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let df = f.derivative();
        let c = f.gcd(&df);
        let mut w = f.exact_div(&c)?;
        let mut y = df.exact_div(&c)?;
        let mut z = &y - &w.derivative();
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let g = w.gcd(&z);
            w = w.exact_div(&g)?;
            y = z.exact_div(&g)?;
            z = &y - &w.derivative();
            if g.degree().unwrap_or(0) > 0 {
                out.push((g, i));
            }
            i += 1;
        }
        Ok(out)
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn radical(&self) -> Result<UniPoly> {
        let f = self.to_monic()?;
        f.exact_div(&f.gcd(&f.derivative()))
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        (0..k).fold(Self::constant(Rational::one()), |acc, _| &acc * self)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (mut a, b) = (self.ascending(), rhs.ascending());
        if a.len() < b.len() {
            a.resize(b.len(), Rational::zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        UniPoly::from_ascending(a)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &-rhs
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self.degree() {
            None => return f.write_str("0"),
            Some(n) => n,
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if power == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match power {
                1 => f.write_str("t")?,
                p => write!(f, "t^{p}")?,
            }
        }
        Ok(())
    }
}
