use num_traits::Signed;

use super::Matrix;
use crate::scalars::{DivisionRing, Gaussian, Quaternion, Rational, Ring};
use crate::{Error, Result};

/// `Φ(A) = [[A₁, A₂], [−conj(A₂), conj(A₁)]]` for `A = A₁ + A₂𝐣`.
pub fn phi(a: &Matrix<Quaternion>) -> Matrix<Gaussian> {
    let (r, c) = (a.rows(), a.cols());
    let mut m = Matrix::zeros(2 * r, 2 * c);
    for i in 0..r {
        for j in 0..c {
            let q = a.get(i, j);
            m.set(i, j, q.a.clone());
            m.set(i, c + j, q.b.clone());
            m.set(r + i, j, -q.b.conj());
            m.set(r + i, c + j, q.a.conj());
        }
    }
    m
}

/// Inverse of [`phi`] on its image.
pub fn phi_inverse(m: &Matrix<Gaussian>) -> Result<Matrix<Quaternion>> {
    if m.rows() % 2 != 0 || m.cols() % 2 != 0 {
        return Err(Error::NotQuaternionic("odd dimension".into()));
    }
    let (r, c) = (m.rows() / 2, m.cols() / 2);
    let mut out = Matrix::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            let a = m.get(i, j).clone();
            let b = m.get(i, c + j).clone();
            if *m.get(r + i, j) != -b.conj() || *m.get(r + i, c + j) != a.conj() {
                return Err(Error::NotQuaternionic(format!(
                    "entry ({i},{j}) breaks the block pattern"
                )));
            }
            out.set(i, j, Quaternion::new(a, b));
        }
    }
    Ok(out)
}

/// Replaces each entry `z` by `[[Re z, Im z], [−Im z, Re z]]`.
pub fn psi(a: &Matrix<Gaussian>) -> Matrix<Rational> {
    let (r, c) = (a.rows(), a.cols());
    let mut m = Matrix::zeros(2 * r, 2 * c);
    for i in 0..r {
        for j in 0..c {
            let z = a.get(i, j);
            m.set(2 * i, 2 * j, z.re.clone());
            m.set(2 * i, 2 * j + 1, z.im.clone());
            m.set(2 * i + 1, 2 * j, -&z.im);
            m.set(2 * i + 1, 2 * j + 1, z.re.clone());
        }
    }
    m
}

pub fn psi_inverse(m: &Matrix<Rational>) -> Result<Matrix<Gaussian>> {
    if m.rows() % 2 != 0 || m.cols() % 2 != 0 {
        return Err(Error::ShapeMismatch("odd dimension".into()));
    }
    let (r, c) = (m.rows() / 2, m.cols() / 2);
    let mut out = Matrix::zeros(r, c);
    for i in 0..r {
        for j in 0..c {
            let re = m.get(2 * i, 2 * j).clone();
            let im = m.get(2 * i, 2 * j + 1).clone();
            if *m.get(2 * i + 1, 2 * j) != -&im || *m.get(2 * i + 1, 2 * j + 1) != re {
                return Err(Error::ShapeMismatch(format!(
                    "block ({i},{j}) is not of the form [[a, b], [-b, a]]"
                )));
            }
            out.set(i, j, Gaussian::new(re, im));
        }
    }
    Ok(out)
}

pub fn to_quaternion_matrix<T: DivisionRing>(a: &Matrix<T>) -> Matrix<Quaternion> {
    a.map(T::to_quaternion)
}

/// The complex matrix whose spectrum encodes that of `a`: `a` itself over
/// ℝ and ℂ, `Φ(a)` over ℍ.
pub fn complex_model<T: DivisionRing>(a: &Matrix<T>) -> Matrix<Gaussian> {
    match T::RING {
        Ring::R | Ring::C => a.map(|x| x.to_quaternion().a),
        Ring::H => phi(&to_quaternion_matrix(a)),
    }
}

/// Determinant over a commutative ring (ℝ or ℂ).
pub fn det<T: DivisionRing>(a: &Matrix<T>) -> Result<T> {
    if T::RING == Ring::H {
        return Err(Error::InvalidArgument(
            "the quaternionic determinant is det_trace_h".into(),
        ));
    }
    let n = a.require_square()?;
    let mut m = a.clone();
    let mut acc = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
            return Ok(T::zero());
        };
        if p != c {
            m.swap_rows(c, p);
            acc = acc.negated();
        }
        let piv = m.get(c, c).clone();
        acc = acc.times(&piv);
        let inv = piv.inverse().expect("nonzero pivot");
        for i in c + 1..n {
            if m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).times(&inv);
            for j in c..n {
                let v = m.get(i, j).minus(&f.times(m.get(c, j)));
                m.set(i, j, v);
            }
        }
    }
    Ok(acc)
}

/// `(det Φ(A), tr Φ(A))`. Both are real and the determinant is
/// non-negative; this is checked rather than assumed.
pub fn det_trace_h(a: &Matrix<Quaternion>) -> Result<(Rational, Rational)> {
    a.require_square()?;
    let p = phi(a);
    let d = det(&p)?;
    let t = p.trace()?;
    if !d.im.is_zero() || d.re.is_negative() || !t.im.is_zero() {
        return Err(Error::InternalInvariant(format!(
            "det/trace of the complex model not real non-negative: {d}, {t}"
        )));
    }
    Ok((d.re, t.re))
}
