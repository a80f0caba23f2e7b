//! Roots of a polynomial over ℚ(i) that lie in ℚ(i).
//!
//! The square-free part is scaled to Gaussian-integer coefficients and
//! reduced modulo a prime `ℓ ≡ 3 (mod 4)`, where ℤ[i]/ℓ is the field with
//! ℓ² elements. Every root in ℚ(i) has a denominator prime to ℓ, so it
//! reduces to a simple root mod ℓ. Those are found by exhaustive search,
//! lifted ℓ-adically, and each coordinate is recovered by rational
//! reconstruction once the modulus exceeds twice the square of an a-priori
//! height bound. Candidates are kept only if they are exact roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::Poly;
use crate::scalars::{Gaussian, Rational};

/// Roots in ℚ(i) with multiplicities, and the cofactor left over.
#[derive(Clone, Debug)]
pub struct RootSearch {
    pub roots: Vec<(Gaussian, usize)>,
    pub residual: Poly,
}

pub fn gaussian_roots(p: &Poly) -> RootSearch {
    let mut roots = Vec::new();
    let mut residual = p.monic();
    if residual.degree().unwrap_or(0) == 0 {
        return RootSearch { roots, residual };
    }
    for z in candidate_roots(&residual.square_free()) {
        let lin = Poly::linear(&z);
        let mut m = 0;
        loop {
            let (q, r) = residual.divrem(&lin);
            if !r.is_zero() {
                break;
            }
            residual = q;
            m += 1;
        }
        if m > 0 {
            roots.push((z, m));
        }
    }
    RootSearch { roots, residual }
}

/// Distinct roots in ℚ(i) of a monic square-free polynomial.
fn candidate_roots(s: &Poly) -> Vec<Gaussian> {
    let deg = s.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-&s.coeffs()[0]];
    }
    let (ints, scale) = integerise(s);
    let height = {
        let max = ints
            .iter()
            .map(|(a, b)| a.abs() + b.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        (BigInt::one() + max) * &scale * &scale
    };
    let target = BigInt::from(2) * &height * &height;
    // A prime below the search limit always exists in practice; without one
    // no candidates are produced and the caller reports the cofactor.
    let Some(ell) = good_prime(&ints, &scale) else {
        return Vec::new();
    };
    let ell_big = BigInt::from(ell);
    let mut out = Vec::new();
    for r0 in roots_mod_prime(&ints, ell) {
        let (re, im) = hensel_lift(&ints, r0, &ell_big, &target);
        let modulus = lifted_modulus(&ell_big, &target);
        let bound = ((&modulus - BigInt::one()) / BigInt::from(2)).sqrt();
        let (Some(x), Some(y)) = (
            reconstruct(&re, &modulus, &bound),
            reconstruct(&im, &modulus, &bound),
        ) else {
            continue;
        };
        let z = Gaussian::new(x, y);
        if s.eval(&z).is_zero() {
            out.push(z);
        }
    }
    out
}

type GInt = (BigInt, BigInt);

/// Scales a monic polynomial by the lcm of its denominators.
fn integerise(s: &Poly) -> (Vec<GInt>, BigInt) {
    let l = s.coeffs().iter().fold(BigInt::one(), |acc, c| {
        acc.lcm(c.re.denom()).lcm(c.im.denom())
    });
    let lr = Rational::from_integer(l.clone());
    let ints = s
        .coeffs()
        .iter()
        .map(|c| ((&c.re * &lr).to_integer(), (&c.im * &lr).to_integer()))
        .collect();
    (ints, l)
}

fn primes_3_mod_4() -> impl Iterator<Item = u64> {
    (3u64..20_000)
        .step_by(4)
        .filter(|&p| (2..).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

type Fp2 = (u64, u64);

struct Field {
    p: u64,
}

impl Field {
    fn add(&self, a: Fp2, b: Fp2) -> Fp2 {
        ((a.0 + b.0) % self.p, (a.1 + b.1) % self.p)
    }
    fn sub(&self, a: Fp2, b: Fp2) -> Fp2 {
        ((a.0 + self.p - b.0) % self.p, (a.1 + self.p - b.1) % self.p)
    }
    fn mul(&self, a: Fp2, b: Fp2) -> Fp2 {
        let p = self.p as u128;
        let (a0, a1, b0, b1) = (a.0 as u128, a.1 as u128, b.0 as u128, b.1 as u128);
        let re = (a0 * b0 + (p - a1) * b1) % p;
        let im = (a0 * b1 + a1 * b0) % p;
        (re as u64, im as u64)
    }
    fn pow_u(&self, a: u64, mut e: u64) -> u64 {
        let p = self.p as u128;
        let mut acc: u128 = 1;
        let mut b = a as u128 % p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc as u64
    }
    fn inv(&self, a: Fp2) -> Option<Fp2> {
        let p = self.p as u128;
        let n = ((a.0 as u128 * a.0 as u128) + (a.1 as u128 * a.1 as u128)) % p;
        if n == 0 {
            return None;
        }
        let ni = self.pow_u(n as u64, self.p - 2);
        Some(self.mul((a.0, (self.p - a.1) % self.p), (ni, 0)))
    }
    fn reduce(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("reduced")
    }
    fn eval(&self, f: &[Fp2], z: Fp2) -> Fp2 {
        f.iter()
            .rev()
            .fold((0, 0), |acc, &c| self.add(self.mul(acc, z), c))
    }
    fn trim(&self, mut f: Vec<Fp2>) -> Vec<Fp2> {
        while f.last() == Some(&(0, 0)) {
            f.pop();
        }
        f
    }
    fn rem(&self, a: &[Fp2], b: &[Fp2]) -> Vec<Fp2> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        let li = self.inv(b[db]).expect("nonzero lead");
        while r.len() > db {
            let c = self.mul(*r.last().expect("nonempty"), li);
            let shift = r.len() - 1 - db;
            for (j, &bc) in b.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(c, bc));
            }
            r.pop();
            r = self.trim(r);
        }
        self.trim(r)
    }
    fn gcd_degree(&self, a: &[Fp2], b: &[Fp2]) -> usize {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        a.len().saturating_sub(1)
    }
}

fn good_prime(ints: &[GInt], scale: &BigInt) -> Option<u64> {
    primes_3_mod_4().find(|&p| {
        let f = Field { p };
        if f.reduce(scale) == 0 {
            return false;
        }
        let red: Vec<Fp2> = ints
            .iter()
            .map(|(a, b)| (f.reduce(a), f.reduce(b)))
            .collect();
        let der: Vec<Fp2> = red
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| f.mul(c, ((k as u64) % p, 0)))
            .collect();
        f.gcd_degree(&red, &der) == 0
    })
}

fn roots_mod_prime(ints: &[GInt], p: u64) -> Vec<Fp2> {
    let f = Field { p };
    let red: Vec<Fp2> = ints
        .iter()
        .map(|(a, b)| (f.reduce(a), f.reduce(b)))
        .collect();
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            if f.eval(&red, (a, b)) == (0, 0) {
                out.push((a, b));
                if out.len() + 1 == red.len() {
                    return out;
                }
            }
        }
    }
    out
}

fn lifted_modulus(ell: &BigInt, target: &BigInt) -> BigInt {
    let mut m = ell.clone();
    while &m <= target {
        m = &m * &m;
    }
    m
}

fn gmul(a: &GInt, b: &GInt, m: &BigInt) -> GInt {
    (
        (&a.0 * &b.0 - &a.1 * &b.1).mod_floor(m),
        (&a.0 * &b.1 + &a.1 * &b.0).mod_floor(m),
    )
}

fn geval(f: &[GInt], z: &GInt, m: &BigInt) -> GInt {
    f.iter()
        .rev()
        .fold((BigInt::zero(), BigInt::zero()), |acc, c| {
            let t = gmul(&acc, z, m);
            ((t.0 + &c.0).mod_floor(m), (t.1 + &c.1).mod_floor(m))
        })
}

fn ginv(a: &GInt, m: &BigInt) -> Option<GInt> {
    let n = (&a.0 * &a.0 + &a.1 * &a.1).mod_floor(m);
    let e = n.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    let ni = e.x.mod_floor(m);
    Some(gmul(&(a.0.clone(), -&a.1), &(ni, BigInt::zero()), m))
}

/// Newton iteration with precision doubling until the modulus exceeds
/// `target`.
fn hensel_lift(f: &[GInt], r0: Fp2, ell: &BigInt, target: &BigInt) -> GInt {
    let df: Vec<GInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, (a, b))| (a * BigInt::from(k), b * BigInt::from(k)))
        .collect();
    let mut z: GInt = (BigInt::from(r0.0), BigInt::from(r0.1));
    let mut m = ell.clone();
    while &m <= target {
        m = &m * &m;
        let fz = geval(f, &z, &m);
        let dz = geval(&df, &z, &m);
        let Some(inv) = ginv(&dz, &m) else {
            break;
        };
        let step = gmul(&fz, &inv, &m);
        z = (
            (&z.0 - &step.0).mod_floor(&m),
            (&z.1 - &step.1).mod_floor(&m),
        );
    }
    z
}

/// Finds `a/b ≡ r (mod m)` with `|a|, b ≤ bound`.
fn reconstruct(r: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}
