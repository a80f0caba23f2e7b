//! Checks against definitions rather than theorems, plus seeded generators
//! of test inputs with known Jordan structure.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::AffineMap;
use crate::jordan::{assemble, find_spectrum, jordan_structure, JordanBlock, Spectrum};
use crate::matrices::Matrix;
use crate::scalars::{rat, DivisionRing, Gaussian, Quaternion, Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl OracleVerdict {
    pub fn pass() -> Self {
        OracleVerdict {
            holds: true,
            counterexample: None,
        }
    }

    pub fn fail(input: impl ToString, expected: impl ToString, got: impl ToString) -> Self {
        OracleVerdict {
            holds: false,
            counterexample: Some(Counterexample {
                input: input.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            }),
        }
    }

    pub fn describe(&self) -> String {
        match &self.counterexample {
            None => "holds".into(),
            Some(c) => format!("input {}: expected {}, got {}", c.input, c.expected, c.got),
        }
    }
}

/// `r·g·r⁻¹ = g⁻¹`.
pub fn verify_reverser<T: DivisionRing>(g: &Matrix<T>, r: &Matrix<T>) -> OracleVerdict {
    if !g.is_square() || g.rows() != r.rows() || !r.is_square() {
        return OracleVerdict::fail("shapes", "matching square matrices", "mismatch");
    }
    let (Ok(ginv), Ok(rinv)) = (g.inverse(), r.inverse()) else {
        return OracleVerdict::fail(r, "invertible g and r", "singular");
    };
    let got = &(r * g) * &rinv;
    if got == ginv {
        OracleVerdict::pass()
    } else {
        OracleVerdict::fail(r, ginv, got)
    }
}

/// `r·X·r⁻¹ = −X`.
pub fn verify_ad_reverser<T: DivisionRing>(x: &Matrix<T>, r: &Matrix<T>) -> OracleVerdict {
    if !x.is_square() || x.rows() != r.rows() || !r.is_square() {
        return OracleVerdict::fail("shapes", "matching square matrices", "mismatch");
    }
    let Ok(rinv) = r.inverse() else {
        return OracleVerdict::fail(r, "invertible r", "singular");
    };
    let got = &(r * x) * &rinv;
    let want = -x;
    if got == want {
        OracleVerdict::pass()
    } else {
        OracleVerdict::fail(r, want, got)
    }
}

/// `r² = I`.
pub fn verify_involution<T: DivisionRing>(r: &Matrix<T>) -> OracleVerdict {
    if !r.is_square() {
        return OracleVerdict::fail(r, "square matrix", "rectangular");
    }
    let sq = r * r;
    if sq.is_identity() {
        OracleVerdict::pass()
    } else {
        OracleVerdict::fail(r, "I", sq)
    }
}

pub fn verify_affine_reverser<T: DivisionRing>(
    g: &AffineMap<T>,
    h: &AffineMap<T>,
) -> OracleVerdict {
    let (Ok(ginv), Ok(hinv)) = (g.inverse(), h.inverse()) else {
        return OracleVerdict::fail(h, "invertible linear parts", "singular");
    };
    match h.compose(g).and_then(|x| x.compose(&hinv)) {
        Ok(got) if got == ginv => OracleVerdict::pass(),
        Ok(got) => OracleVerdict::fail(h, ginv, got),
        Err(e) => OracleVerdict::fail(h, "composable maps", e),
    }
}

pub fn verify_affine_involution<T: DivisionRing>(h: &AffineMap<T>) -> OracleVerdict {
    match h.compose(h) {
        Ok(sq) if sq.is_identity() => OracleVerdict::pass(),
        Ok(sq) => OracleVerdict::fail(h, "identity map", sq),
        Err(e) => OracleVerdict::fail(h, "composable map", e),
    }
}

/// `Ω(λ, n)` by the backward recurrence alone.
pub fn omega_recurrence<T: DivisionRing>(lambda: &T, n: usize) -> Result<Matrix<T>> {
    let inv = lambda
        .inverse()
        .ok_or_else(|| Error::InvalidArgument("Ω(λ, n) needs λ ≠ 0".into()))?;
    if n == 0 {
        return Err(Error::InvalidArgument("Ω(λ, n) needs n ≥ 1".into()));
    }
    let inv2 = inv.times(&inv);
    let mut x = vec![vec![T::zero(); n + 1]; n];
    x[n - 1][n - 1] = T::one().negated();
    for i in (0..n - 1).rev() {
        for j in 0..n - 1 {
            let v = inv.times(&x[i + 1][j]).plus(&inv2.times(&x[i + 1][j + 1]));
            x[i][j] = v.negated();
        }
    }
    Matrix::from_rows(
        x.into_iter()
            .map(|mut r| {
                r.truncate(n);
                r
            })
            .collect(),
    )
}

fn multiset(blocks: &[JordanBlock]) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for b in blocks {
        *m.entry(format!("{b:?}")).or_insert(0) += 1;
    }
    m
}

/// `A` is reversible iff `A` and `A⁻¹` have the same Jordan blocks.
pub fn reversible_oracle<T: DivisionRing>(a: &Matrix<T>) -> Result<OracleVerdict> {
    let inv = a.inverse().map_err(|_| Error::SingularInput)?;
    let blocks = jordan_structure(a, &find_spectrum(a, None)?)?;
    let inv_blocks = jordan_structure(&inv, &find_spectrum(&inv, None)?)?;
    Ok(if multiset(&blocks) == multiset(&inv_blocks) {
        OracleVerdict::pass()
    } else {
        OracleVerdict::fail(a, format!("{blocks:?}"), format!("{inv_blocks:?}"))
    })
}

/// Same as [`reversible_oracle`] for Ad-reality: `X` against `−X`.
pub fn ad_real_oracle<T: DivisionRing>(x: &Matrix<T>) -> Result<OracleVerdict> {
    let neg = -x;
    let blocks = jordan_structure(x, &find_spectrum(x, None)?)?;
    let neg_blocks = jordan_structure(&neg, &find_spectrum(&neg, None)?)?;
    Ok(if multiset(&blocks) == multiset(&neg_blocks) {
        OracleVerdict::pass()
    } else {
        OracleVerdict::fail(x, format!("{blocks:?}"), format!("{neg_blocks:?}"))
    })
}

/// A generated test input with its Jordan blocks known in advance.
#[derive(Clone)]
pub struct Case<T> {
    pub matrix: Matrix<T>,
    pub blocks: Vec<JordanBlock>,
}

impl<T: std::fmt::Display> std::fmt::Debug for Case<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Case")
            .field("matrix", &self.matrix)
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl<T: DivisionRing> Case<T> {
    pub fn spectrum(&self) -> Spectrum {
        let mut eig: Vec<(Gaussian, usize)> = Vec::new();
        for b in &self.blocks {
            let l = b.eigenvalue();
            match eig.iter_mut().find(|(k, _)| *k == l) {
                Some((_, m)) => *m += b.chain_len(),
                None => eig.push((l, b.chain_len())),
            }
        }
        Spectrum {
            ring: T::RING,
            eigenvalues: eig,
        }
    }
}

/// Seeded source of matrices `S⁻¹·J·S` with `J` drawn from block families
/// whose eigenvalues lie in ℚ(i).
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    pub fn rational(&mut self, bound: i64) -> Rational {
        rat(self.small_int(bound), self.rng.gen_range(1..=bound.max(1)))
    }

    /// Small integral entry of the ring, used for elementary operations.
    pub fn entry<T: DivisionRing>(&mut self, bound: i64) -> T {
        let mut c = [0i64; 4];
        let k = match T::RING {
            Ring::R => 1,
            Ring::C => 2,
            Ring::H => 4,
        };
        for x in c.iter_mut().take(k) {
            *x = self.small_int(bound);
        }
        let q = Quaternion::from_components(rat(c[0], 1), rat(c[1], 1), rat(c[2], 1), rat(c[3], 1));
        T::from_quaternion(&q).expect("entry in ring")
    }

    pub fn vector<T: DivisionRing>(&mut self, n: usize, bound: i64) -> Vec<T> {
        (0..n).map(|_| self.entry(bound)).collect()
    }

    /// A unimodular conjugator and its inverse: a random permutation times
    /// elementary transvections with small integral entries.
    pub fn conjugator<T: DivisionRing>(&mut self, n: usize) -> (Matrix<T>, Matrix<T>) {
        let mut s = Matrix::identity(n);
        let mut sinv = Matrix::identity(n);
        if n == 0 {
            return (s, sinv);
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let p = Matrix::from_columns(
            n,
            &perm
                .iter()
                .map(|&k| {
                    (0..n)
                        .map(|i| if i == k { T::one() } else { T::zero() })
                        .collect()
                })
                .collect::<Vec<_>>(),
        )
        .expect("permutation");
        s = &p * &s;
        sinv = &sinv * &p.inverse().expect("permutation");
        if n > 1 {
            for _ in 0..2 * n {
                let i = self.rng.gen_range(0..n);
                let mut j = self.rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let c: T = self.entry(2);
                let mut e = Matrix::identity(n);
                e.set(i, j, c.clone());
                let mut einv = Matrix::identity(n);
                einv.set(i, j, c.negated());
                s = &e * &s;
                sinv = &sinv * &einv;
            }
        }
        (s, sinv)
    }

    pub fn conjugate<T: DivisionRing>(&mut self, blocks: Vec<JordanBlock>) -> Case<T> {
        let j = assemble::<T>(&blocks).expect("legal blocks");
        let (s, sinv) = self.conjugator::<T>(j.rows());
        Case {
            matrix: &(&sinv * &j) * &s,
            blocks,
        }
    }

    fn pick<'a, X>(&mut self, xs: &'a [X]) -> &'a X {
        xs.choose(&mut self.rng).expect("nonempty pool")
    }

    fn size(&mut self, left: usize) -> usize {
        self.rng.gen_range(1..=left.min(3))
    }

    /// Nonzero eigenvalue representatives for the ring, closed under the
    /// partner maps used by the classifiers.
    fn eigen_pool(ring: Ring) -> Vec<Gaussian> {
        let g = |a: i64, b: i64, c: i64, d: i64| Gaussian::new(rat(a, b), rat(c, d));
        let mut pool = vec![
            g(1, 1, 0, 1),
            g(-1, 1, 0, 1),
            g(2, 1, 0, 1),
            g(1, 2, 0, 1),
            g(-2, 1, 0, 1),
            g(-1, 2, 0, 1),
            g(3, 1, 0, 1),
            g(1, 3, 0, 1),
        ];
        match ring {
            Ring::R => {}
            Ring::C => pool.extend([
                g(1, 1, 1, 1),
                g(1, 2, -1, 2),
                g(0, 1, 1, 1),
                g(0, 1, -1, 1),
                g(3, 5, 4, 5),
                g(3, 5, -4, 5),
                g(2, 1, -1, 1),
            ]),
            Ring::H => pool.extend([
                g(1, 1, 1, 1),
                g(1, 2, 1, 2),
                g(-1, 1, 1, 1),
                g(0, 1, 1, 1),
                g(0, 1, 2, 1),
                g(3, 5, 4, 5),
                g(2, 1, 1, 1),
            ]),
        }
        pool
    }

    fn real_pair_pool() -> Vec<(Rational, Rational)> {
        vec![
            (rat(0, 1), rat(1, 1)),
            (rat(3, 5), rat(4, 5)),
            (rat(-3, 5), rat(4, 5)),
            (rat(1, 1), rat(1, 1)),
            (rat(1, 2), rat(1, 2)),
            (rat(-1, 1), rat(1, 1)),
            (rat(2, 1), rat(1, 1)),
        ]
    }

    fn block_for(ring: Ring, l: &Gaussian, size: usize) -> JordanBlock {
        JordanBlock::Standard {
            lambda: l.clone(),
            size,
        }
        .with_ring(ring)
    }

    /// Blocks of total dimension `n`, no structure imposed.
    pub fn arbitrary_blocks(&mut self, ring: Ring, n: usize) -> Vec<JordanBlock> {
        let pool = Self::eigen_pool(ring);
        let mut blocks = Vec::new();
        let mut left = n;
        while left > 0 {
            if ring == Ring::R && left >= 2 && self.rng.gen_bool(0.3) {
                let (mu, nu) = self.pick(&Self::real_pair_pool()).clone();
                let h = self.rng.gen_range(1..=(left / 2).min(2));
                blocks.push(JordanBlock::RealPair {
                    mu,
                    nu,
                    half_size: h,
                });
                left -= 2 * h;
                continue;
            }
            let l = self.pick(&pool).clone();
            let s = self.size(left);
            blocks.push(Self::block_for(ring, &l, s));
            left -= s;
        }
        blocks
    }

    /// Blocks of total dimension `n` that pair up under `g ~ g⁻¹`. With
    /// `even_unit_classes`, non-real unit-modulus quaternionic blocks come
    /// in identical pairs.
    pub fn reversible_blocks(
        &mut self,
        ring: Ring,
        n: usize,
        even_unit_classes: bool,
    ) -> Vec<JordanBlock> {
        let pool = Self::eigen_pool(ring);
        let one = rat(1, 1);
        let mut blocks = Vec::new();
        let mut left = n;
        while left > 0 {
            if ring == Ring::R && left >= 2 && self.rng.gen_bool(0.3) {
                let (mu, nu) = self.pick(&Self::real_pair_pool()).clone();
                let norm = &mu * &mu + &nu * &nu;
                let h = self.rng.gen_range(1..=(left / 2).min(2));
                if norm == one {
                    blocks.push(JordanBlock::RealPair {
                        mu,
                        nu,
                        half_size: h,
                    });
                    left -= 2 * h;
                } else if left >= 4 * h {
                    blocks.push(JordanBlock::RealPair {
                        mu: &mu / &norm,
                        nu: &nu / &norm,
                        half_size: h,
                    });
                    blocks.push(JordanBlock::RealPair {
                        mu,
                        nu,
                        half_size: h,
                    });
                    left -= 4 * h;
                }
                continue;
            }
            let l = self.pick(&pool).clone();
            let s = self.size(left);
            let unit = l.norm() == one;
            let quaternionic = ring == Ring::H && !l.is_real();
            if unit && (l.is_real() || quaternionic) {
                if quaternionic && even_unit_classes {
                    if left >= 2 * s {
                        blocks.push(Self::block_for(ring, &l, s));
                        blocks.push(Self::block_for(ring, &l, s));
                        left -= 2 * s;
                    }
                } else {
                    blocks.push(Self::block_for(ring, &l, s));
                    left -= s;
                }
                continue;
            }
            if left < 2 * s {
                continue;
            }
            let partner = if quaternionic {
                let r = l.norm().recip();
                Gaussian::new(&l.re * &r, &l.im * &r)
            } else {
                l.inverse().expect("nonzero")
            };
            blocks.push(Self::block_for(ring, &l, s));
            blocks.push(Self::block_for(ring, &partner, s));
            left -= 2 * s;
        }
        blocks
    }

    /// Either structure with equal probability.
    pub fn mixed_blocks(&mut self, ring: Ring, n: usize) -> Vec<JordanBlock> {
        if self.rng.gen_bool(0.5) {
            self.reversible_blocks(ring, n, false)
        } else {
            self.arbitrary_blocks(ring, n)
        }
    }

    /// Real or complex blocks with determinant ±1 that are usually not
    /// reversible.
    pub fn unit_det_blocks(&mut self, ring: Ring, n: usize) -> Vec<JordanBlock> {
        let choices = [rat(2, 1), rat(3, 1), rat(-2, 1), rat(1, 2), rat(-1, 3)];
        let mut eig: Vec<Rational> = (0..n.saturating_sub(1))
            .map(|_| self.pick(&choices).clone())
            .collect();
        let prod = eig.iter().fold(rat(1, 1), |acc, x| acc * x);
        let sign = if self.rng.gen_bool(0.5) {
            rat(1, 1)
        } else {
            rat(-1, 1)
        };
        eig.push(sign / prod);
        eig.into_iter()
            .map(|x| Self::block_for(ring, &Gaussian::from(x), 1))
            .collect()
    }
}

impl JordanBlock {
    /// Standard blocks for real eigenvalues stay standard; over ℝ a non-real
    /// eigenvalue becomes its real pair with `ν > 0`.
    fn with_ring(self, ring: Ring) -> JordanBlock {
        match (&self, ring) {
            (JordanBlock::Standard { lambda, size }, Ring::R) if !lambda.is_real() => {
                JordanBlock::RealPair {
                    mu: lambda.re.clone(),
                    nu: num_traits::Signed::abs(&lambda.im),
                    half_size: *size,
                }
            }
            _ => self,
        }
    }
}
