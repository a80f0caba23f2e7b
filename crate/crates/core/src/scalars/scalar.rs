use std::fmt;

use super::literal::{format_components, parse_literal};
use super::{DivisionRing, Gaussian, Quaternion, Rational, Ring};
use crate::{Error, Result};

/// A scalar tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    R(Rational),
    C(Gaussian),
    H(Quaternion),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn ring(&self) -> Ring {
        match self {
            Scalar::R(_) => Ring::R,
            Scalar::C(_) => Ring::C,
            Scalar::H(_) => Ring::H,
        }
    }

    pub fn to_quaternion(&self) -> Quaternion {
        match self {
            Scalar::R(x) => x.to_quaternion(),
            Scalar::C(x) => x.to_quaternion(),
            Scalar::H(x) => x.clone(),
        }
    }

    /// Reads `q` as an element of `ring`, failing if it does not lie there.
    pub fn from_quaternion_in(ring: Ring, q: &Quaternion) -> Result<Scalar> {
        let fail = || Error::Demotion {
            from: Ring::H,
            to: ring,
            detail: q.to_string(),
        };
        Ok(match ring {
            Ring::R => Scalar::R(Rational::from_quaternion(q).ok_or_else(fail)?),
            Ring::C => Scalar::C(Gaussian::from_quaternion(q).ok_or_else(fail)?),
            Ring::H => Scalar::H(q.clone()),
        })
    }

    /// Parses a literal and checks it belongs to `ring`.
    pub fn parse(text: &str, ring: Ring) -> Result<Scalar> {
        let [w, x, y, z] = parse_literal(text)?;
        let q = Quaternion::from_components(w, x, y, z);
        Scalar::from_quaternion_in(ring, &q)
            .map_err(|_| Error::Parse(format!("literal {text:?} does not lie in ring {ring}")))
    }

    /// Explicit promotion along `R ⊂ C ⊂ H`. Demotion is refused.
    pub fn promote(&self, to: Ring) -> Result<Scalar> {
        if to < self.ring() {
            return Err(Error::Demotion {
                from: self.ring(),
                to,
                detail: "promotion only goes upward".into(),
            });
        }
        Scalar::from_quaternion_in(to, &self.to_quaternion())
    }

    pub fn downcast<T: DivisionRing>(&self) -> Result<T> {
        if self.ring() != T::RING {
            return Err(Error::RingMismatch {
                left: self.ring(),
                right: T::RING,
            });
        }
        T::from_quaternion(&self.to_quaternion()).ok_or(Error::RingMismatch {
            left: self.ring(),
            right: T::RING,
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::R(x) => x.is_zero(),
            Scalar::C(x) => x.is_zero(),
            Scalar::H(x) => x.is_zero(),
        }
    }

    pub fn arith(&self, rhs: &Scalar, op: Op) -> Result<Scalar> {
        fn go<T: DivisionRing>(a: &T, b: &T, op: Op) -> Result<T> {
            Ok(match op {
                Op::Add => a.plus(b),
                Op::Sub => a.minus(b),
                Op::Mul => a.times(b),
                Op::Div => a.times(&b.inverse().ok_or(Error::ZeroDivisor)?),
            })
        }
        match (self, rhs) {
            (Scalar::R(a), Scalar::R(b)) => go(a, b, op).map(Scalar::R),
            (Scalar::C(a), Scalar::C(b)) => go(a, b, op).map(Scalar::C),
            (Scalar::H(a), Scalar::H(b)) => go(a, b, op).map(Scalar::H),
            _ => Err(Error::RingMismatch {
                left: self.ring(),
                right: rhs.ring(),
            }),
        }
    }

    pub fn inverse(&self) -> Result<Scalar> {
        Ok(match self {
            Scalar::R(x) => Scalar::R(DivisionRing::inverse(x).ok_or(Error::ZeroDivisor)?),
            Scalar::C(x) => Scalar::C(DivisionRing::inverse(x).ok_or(Error::ZeroDivisor)?),
            Scalar::H(x) => Scalar::H(DivisionRing::inverse(x).ok_or(Error::ZeroDivisor)?),
        })
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::R(x) => Scalar::R(x.clone()),
            Scalar::C(x) => Scalar::C(x.conj()),
            Scalar::H(x) => Scalar::H(x.conj()),
        }
    }

    pub fn norm(&self) -> Rational {
        match self {
            Scalar::R(x) => DivisionRing::norm(x),
            Scalar::C(x) => x.norm(),
            Scalar::H(x) => x.norm(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_components(&self.to_quaternion().components()))
    }
}
