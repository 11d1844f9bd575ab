//! Exact polynomial arithmetic over the rationals.
//!
//! [`MultiPoly`] is a sparse map from exponent vectors to coefficients, ordered by
//! the graded lexicographic order of [`Monomial`]. [`UniPoly`] is a dense
//! coefficient vector stored leading coefficient first. [`FloatPoly`] is a
//! compiled `f64` evaluator used by the numeric search.

mod float;
mod monomial;
mod multi;
mod uni;

pub use float::FloatPoly;
pub use monomial::Monomial;
pub use multi::{MultiPoly, Pretty};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Best rational approximation of `x` with denominator at most `max_den`, by
/// continued-fraction convergents.
pub fn rationalize(x: f64, max_den: u64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let negative = x < 0.0;
    let mut rest = x.abs();
    // convergents h/k
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let cap = BigInt::from(max_den.max(1));
    let mut best = Rational::from_integer(BigInt::from(rest.floor() as i64));
    for _ in 0..64 {
        let a = rest.floor();
        let a_int = BigInt::from(a as i64);
        let h_next = &a_int * &h + &h_prev;
        let k_next = &a_int * &k + &k_prev;
        if k_next > cap {
            break;
        }
        best = Rational::new(h_next.clone(), k_next.clone());
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let frac = rest - a;
        if frac < 1e-15 {
            break;
        }
        rest = 1.0 / frac;
        if rest > 1e18 {
            break;
        }
    }
    if negative {
        -best
    } else {
        best
    }
}

pub(crate) fn sign(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
