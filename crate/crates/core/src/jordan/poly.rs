use std::fmt;

use num_traits::{One, Zero};

use crate::matrices::Matrix;
use crate::scalars::{Gaussian, Rational};

/// Univariate polynomial over ℚ(i), coefficients low to high, no trailing
/// zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Gaussian>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Gaussian>) -> Self {
        while coeffs.last().is_some_and(Gaussian::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![Gaussian::one()])
    }

    /// `x − z`.
    pub fn linear(z: &Gaussian) -> Self {
        Poly::new(vec![-z, Gaussian::one()])
    }

    pub fn coeffs(&self) -> &[Gaussian] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Gaussian> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &Gaussian) -> Gaussian {
        self.coeffs
            .iter()
            .rev()
            .fold(Gaussian::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| {
                    let k = Rational::from_integer((k as i64).into());
                    Gaussian::new(&c.re * &k, &c.im * &k)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Gaussian::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d
            .lead()
            .expect("nonzero divisor")
            .inverse()
            .expect("nonzero lead");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Gaussian::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.inverse().expect("nonzero lead");
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// The monic square-free part.
    pub fn square_free(&self) -> Poly {
        let g = Poly::gcd(self, &self.derivative());
        self.divrem(&g).0.monic()
    }

    /// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier.
    pub fn characteristic(a: &Matrix<Gaussian>) -> Poly {
        let n = a.rows();
        let mut c = vec![Gaussian::zero(); n + 1];
        c[n] = Gaussian::one();
        let mut m: Matrix<Gaussian> = Matrix::zeros(n, n);
        for k in 1..=n {
            m = &(a * &m) + &Matrix::scalar(n, c[n - k + 1].clone());
            let t = (a * &m).trace().expect("square");
            let f = Rational::new((-1).into(), (k as i64).into());
            c[n - k] = Gaussian::new(&t.re * &f, &t.im * &f);
        }
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.im.is_zero() && c.re < Rational::zero();
            let c = if negative { -c } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let lit = c.to_string();
            let coef = if c.re.is_zero() || c.im.is_zero() {
                lit
            } else {
                format!("({lit})")
            };
            match k {
                0 => f.write_str(&coef)?,
                _ => {
                    if !(c.is_real() && c.re.is_one()) {
                        write!(f, "{coef}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::new(int(re), int(im))
    }

    #[test]
    fn char_poly_of_rotation() {
        let a: Matrix<Gaussian> = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        let p = Poly::characteristic(&a);
        assert_eq!(p, Poly::new(vec![g(1, 0), g(0, 0), g(1, 0)]));
        assert_eq!(p.to_string(), "x^2 + 1");
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::linear(&g(1, 1))
            .mul(&Poly::linear(&g(2, 0)))
            .mul(&Poly::linear(&g(2, 0)));
        let (q, r) = a.divrem(&Poly::linear(&g(2, 0)));
        assert!(r.is_zero());
        assert_eq!(q.degree(), Some(2));
        let sf = a.square_free();
        assert_eq!(sf, Poly::linear(&g(1, 1)).mul(&Poly::linear(&g(2, 0))));
    }

    #[test]
    fn eval_at_root() {
        let z = Gaussian::new(rat(3, 5), rat(4, 5));
        let p = Poly::linear(&z).mul(&Poly::linear(&z.conj()));
        assert!(p.eval(&z).is_zero());
        assert_eq!(p.coeffs()[0], g(1, 0));
    }
}
