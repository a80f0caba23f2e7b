use super::Matrix;
use crate::scalars::{DivisionRing, Gaussian, Quaternion, Rational, Ring, Scalar};
use crate::{Error, Result};

/// A matrix whose ring is only known at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatrix {
    R(Matrix<Rational>),
    C(Matrix<Gaussian>),
    H(Matrix<Quaternion>),
}

fn convert<T: DivisionRing, U: DivisionRing>(m: &Matrix<T>) -> Result<Matrix<U>> {
    m.try_map(|x| {
        U::from_quaternion(&x.to_quaternion()).ok_or(Error::Demotion {
            from: T::RING,
            to: U::RING,
            detail: x.to_string(),
        })
    })
}

impl AnyMatrix {
    pub fn ring(&self) -> Ring {
        match self {
            AnyMatrix::R(_) => Ring::R,
            AnyMatrix::C(_) => Ring::C,
            AnyMatrix::H(_) => Ring::H,
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            AnyMatrix::R(m) => (m.rows(), m.cols()),
            AnyMatrix::C(m) => (m.rows(), m.cols()),
            AnyMatrix::H(m) => (m.rows(), m.cols()),
        }
    }

    pub fn from_scalars(ring: Ring, rows: usize, cols: usize, entries: &[Scalar]) -> Result<Self> {
        fn build<T: DivisionRing>(rows: usize, cols: usize, e: &[Scalar]) -> Result<Matrix<T>> {
            Matrix::new(
                rows,
                cols,
                e.iter().map(Scalar::downcast).collect::<Result<_>>()?,
            )
        }
        Ok(match ring {
            Ring::R => AnyMatrix::R(build(rows, cols, entries)?),
            Ring::C => AnyMatrix::C(build(rows, cols, entries)?),
            Ring::H => AnyMatrix::H(build(rows, cols, entries)?),
        })
    }

    pub fn scalars(&self) -> Vec<Scalar> {
        match self {
            AnyMatrix::R(m) => m.entries().iter().map(DivisionRing::to_scalar).collect(),
            AnyMatrix::C(m) => m.entries().iter().map(DivisionRing::to_scalar).collect(),
            AnyMatrix::H(m) => m.entries().iter().map(DivisionRing::to_scalar).collect(),
        }
    }

    /// Explicit promotion along `R ⊂ C ⊂ H`.
    pub fn promote(&self, to: Ring) -> Result<AnyMatrix> {
        if to < self.ring() {
            return Err(Error::Demotion {
                from: self.ring(),
                to,
                detail: "promotion only goes upward".into(),
            });
        }
        Ok(match (self, to) {
            (AnyMatrix::R(m), Ring::R) => AnyMatrix::R(m.clone()),
            (AnyMatrix::R(m), Ring::C) => AnyMatrix::C(convert(m)?),
            (AnyMatrix::R(m), Ring::H) => AnyMatrix::H(convert(m)?),
            (AnyMatrix::C(m), Ring::C) => AnyMatrix::C(m.clone()),
            (AnyMatrix::C(m), Ring::H) => AnyMatrix::H(convert(m)?),
            (AnyMatrix::H(m), Ring::H) => AnyMatrix::H(m.clone()),
            _ => unreachable!("demotion rejected above"),
        })
    }

    pub fn try_mul(&self, other: &AnyMatrix) -> Result<AnyMatrix> {
        match (self, other) {
            (AnyMatrix::R(a), AnyMatrix::R(b)) => a.try_mul(b).map(AnyMatrix::R),
            (AnyMatrix::C(a), AnyMatrix::C(b)) => a.try_mul(b).map(AnyMatrix::C),
            (AnyMatrix::H(a), AnyMatrix::H(b)) => a.try_mul(b).map(AnyMatrix::H),
            _ => Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            }),
        }
    }
}
