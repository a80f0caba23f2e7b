//! Scalars: ℚ, ℚ(i) and the quaternions over ℚ(i).
//!
//! Generic algorithms are written against [`DivisionRing`]; the tagged
//! [`Scalar`] enum is the dynamic form used at interchange boundaries,
//! where mixing rings is an error and promotion is always explicit.

mod gaussian;
mod literal;
mod quaternion;
mod scalar;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use gaussian::Gaussian;
pub use literal::{format_rational, parse_literal, parse_rational, Components};
pub use quaternion::Quaternion;
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;

/// Ring marker. Ordered by inclusion: `R ⊂ C ⊂ H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ring {
    R,
    C,
    H,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::R => "R",
            Ring::C => "C",
            Ring::H => "H",
        })
    }
}

impl std::str::FromStr for Ring {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "R" | "r" => Ok(Ring::R),
            "C" | "c" => Ok(Ring::C),
            "H" | "h" => Ok(Ring::H),
            other => Err(crate::Error::Parse(format!("unknown ring {other:?}"))),
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact arithmetic shared by ℚ, ℚ(i) and ℍ. Multiplication need not
/// commute; `scaled` multiplies by a central rational.
pub trait DivisionRing:
    Clone + PartialEq + Eq + std::hash::Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const RING: Ring;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    fn norm(&self) -> Rational;
    fn scaled(&self, r: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;
    fn to_quaternion(&self) -> Quaternion;
    fn from_quaternion(q: &Quaternion) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    fn from_gaussian(g: &Gaussian) -> Option<Self> {
        Self::from_quaternion(&Quaternion::from(g.clone()))
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::from_quaternion_in(Self::RING, &self.to_quaternion())
            .expect("value lies in its own ring")
    }
}

impl DivisionRing for Rational {
    const RING: Ring = Ring::R;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn norm(&self) -> Rational {
        self * self
    }
    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn to_quaternion(&self) -> Quaternion {
        Quaternion::from(self.clone())
    }
    fn from_quaternion(q: &Quaternion) -> Option<Self> {
        if q.is_real() {
            Some(q.a.re.clone())
        } else {
            None
        }
    }
}

impl DivisionRing for Gaussian {
    const RING: Ring = Ring::C;

    fn zero() -> Self {
        Gaussian::zero()
    }
    fn one() -> Self {
        Gaussian::one()
    }
    fn is_zero(&self) -> bool {
        Gaussian::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        Gaussian::inverse(self)
    }
    fn conj(&self) -> Self {
        Gaussian::conj(self)
    }
    fn norm(&self) -> Rational {
        Gaussian::norm(self)
    }
    fn scaled(&self, r: &Rational) -> Self {
        Gaussian::new(&self.re * r, &self.im * r)
    }
    fn from_rational(r: Rational) -> Self {
        Gaussian::from(r)
    }
    fn to_quaternion(&self) -> Quaternion {
        Quaternion::from(self.clone())
    }
    fn from_quaternion(q: &Quaternion) -> Option<Self> {
        if q.b.is_zero() {
            Some(q.a.clone())
        } else {
            None
        }
    }
}

impl DivisionRing for Quaternion {
    const RING: Ring = Ring::H;

    fn zero() -> Self {
        Quaternion::zero()
    }
    fn one() -> Self {
        Quaternion::one()
    }
    fn is_zero(&self) -> bool {
        Quaternion::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        Quaternion::inverse(self)
    }
    fn conj(&self) -> Self {
        Quaternion::conj(self)
    }
    fn norm(&self) -> Rational {
        Quaternion::norm(self)
    }
    fn scaled(&self, r: &Rational) -> Self {
        Quaternion::new(
            DivisionRing::scaled(&self.a, r),
            DivisionRing::scaled(&self.b, r),
        )
    }
    fn from_rational(r: Rational) -> Self {
        Quaternion::from(r)
    }
    fn to_quaternion(&self) -> Quaternion {
        self.clone()
    }
    fn from_quaternion(q: &Quaternion) -> Option<Self> {
        Some(q.clone())
    }
}

/// `x^k` for `k ≥ 0`, or of the inverse for `k < 0`.
pub fn power<T: DivisionRing>(x: &T, k: i64) -> Option<T> {
    let base = if k < 0 { x.inverse()? } else { x.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = T::one();
    let mut sq = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.times(&sq);
        }
        e >>= 1;
        if e > 0 {
            sq = sq.times(&sq);
        }
    }
    Some(acc)
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_handles_negative_exponents() {
        assert_eq!(power(&rat(2, 3), -2), Some(rat(9, 4)));
        assert_eq!(power(&rat(0, 1), -1), None);
        assert_eq!(power(&rat(5, 1), 0), Some(int(1)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn normalisation_is_automatic() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert!(rat(3, -6).denom() > &BigInt::zero());
    }
}
