use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::literal::format_components;
use super::{Gaussian, Rational};

/// `a + b·𝐣` with `a, b ∈ ℚ(i)`; equivalently `w + x𝐢 + y𝐣 + z𝐤` with
/// `a = w + x i`, `b = y + z i`. Uses `𝐣z = conj(z)𝐣` and `𝐣² = −1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: Gaussian,
    pub b: Gaussian,
}

impl Quaternion {
    pub fn new(a: Gaussian, b: Gaussian) -> Self {
        Quaternion { a, b }
    }

    pub fn from_components(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion::new(Gaussian::new(w, x), Gaussian::new(y, z))
    }

    pub fn components(&self) -> [Rational; 4] {
        [
            self.a.re.clone(),
            self.a.im.clone(),
            self.b.re.clone(),
            self.b.im.clone(),
        ]
    }

    pub fn zero() -> Self {
        Quaternion::new(Gaussian::zero(), Gaussian::zero())
    }

    pub fn one() -> Self {
        Quaternion::new(Gaussian::one(), Gaussian::zero())
    }

    pub fn i() -> Self {
        Quaternion::new(Gaussian::i(), Gaussian::zero())
    }

    pub fn j() -> Self {
        Quaternion::new(Gaussian::zero(), Gaussian::one())
    }

    pub fn k() -> Self {
        Quaternion::new(Gaussian::zero(), Gaussian::i())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.a.im.is_zero()
    }

    pub fn is_complex(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.a.conj(), -&self.b)
    }

    pub fn norm(&self) -> Rational {
        self.a.norm() + self.b.norm()
    }

    pub fn real_part(&self) -> Rational {
        self.a.re.clone()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Quaternion::new(
            Gaussian::new(&c.a.re / &n, &c.a.im / &n),
            Gaussian::new(&c.b.re / &n, &c.b.im / &n),
        ))
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::new(Gaussian::from(r), Gaussian::zero())
    }
}

impl From<Gaussian> for Quaternion {
    fn from(g: Gaussian) -> Self {
        Quaternion::new(g, Gaussian::zero())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_components(&self.components()))
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        // (a + b𝐣)(c + d𝐣) = (ac − b·conj(d)) + (ad + b·conj(c))𝐣
        let ac = &self.a * &o.a;
        let bd = &self.b * &o.b.conj();
        let ad = &self.a * &o.b;
        let bc = &self.b * &o.a.conj();
        Quaternion::new(&ac - &bd, &ad + &bc)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.a, -&self.b)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        &self + &o
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        &self - &o
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        &self * &o
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}
