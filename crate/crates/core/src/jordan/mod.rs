//! Certified Jordan forms over ℝ, ℂ and ℍ.
//!
//! All spectral work happens in the complex model (the matrix itself over
//! ℝ and ℂ, `Φ(A)` over ℍ). Block sizes come from rank sequences of
//! `(M − λI)^k`; the conjugator is assembled from Jordan chains and pulled
//! back to the original ring, and `S·A·S⁻¹ = J` is checked exactly before
//! anything is returned.
//!
//! Class representatives: over ℍ each eigenvalue class is represented by
//! the element with `Im ≥ 0`; over ℝ a pair `μ ± iν` is represented by
//! `μ + iν` with `ν > 0`.

mod poly;
mod roots;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::Signed;

pub use poly::Poly;
pub use roots::{gaussian_roots, RootSearch};

use crate::matrices::{complex_model, psi, Matrix};
use crate::scalars::{DivisionRing, Gaussian, Quaternion, Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum JordanBlock {
    /// `J(λ, size)`: λ on the diagonal, ones on the superdiagonal.
    Standard { lambda: Gaussian, size: usize },
    /// `Ψ(J(μ + iν, half_size))`, real of dimension `2·half_size`.
    RealPair {
        mu: Rational,
        nu: Rational,
        half_size: usize,
    },
}

impl JordanBlock {
    pub fn dim(&self) -> usize {
        match self {
            JordanBlock::Standard { size, .. } => *size,
            JordanBlock::RealPair { half_size, .. } => 2 * half_size,
        }
    }

    /// Length of the underlying Jordan chain.
    pub fn chain_len(&self) -> usize {
        match self {
            JordanBlock::Standard { size, .. } => *size,
            JordanBlock::RealPair { half_size, .. } => *half_size,
        }
    }

    pub fn eigenvalue(&self) -> Gaussian {
        match self {
            JordanBlock::Standard { lambda, .. } => lambda.clone(),
            JordanBlock::RealPair { mu, nu, .. } => Gaussian::new(mu.clone(), nu.clone()),
        }
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        use JordanBlock::*;
        match (self, other) {
            (Standard { lambda: a, size: s }, Standard { lambda: b, size: t }) => {
                a.lex_cmp(b).then(t.cmp(s))
            }
            (Standard { .. }, RealPair { .. }) => Ordering::Less,
            (RealPair { .. }, Standard { .. }) => Ordering::Greater,
            (
                RealPair {
                    mu: m1,
                    nu: n1,
                    half_size: h1,
                },
                RealPair {
                    mu: m2,
                    nu: n2,
                    half_size: h2,
                },
            ) => m1.cmp(m2).then(n1.cmp(n2)).then(h2.cmp(h1)),
        }
    }
}

pub fn sort_canonical(blocks: &mut [JordanBlock]) {
    blocks.sort_by(JordanBlock::canonical_cmp);
}

/// Eigenvalue class representatives with multiplicities. Over ℍ the
/// multiplicities sum to `n`; over ℝ a pair `μ ± iν` of multiplicity `m`
/// occupies `2m` dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub ring: Ring,
    pub eigenvalues: Vec<(Gaussian, usize)>,
}

impl Spectrum {
    /// Multiplicity of `λ` as a root of the complex model's characteristic
    /// polynomial.
    fn model_multiplicity(&self, lambda: &Gaussian, m: usize) -> usize {
        match (self.ring, lambda.is_real()) {
            (Ring::H, true) => 2 * m,
            _ => m,
        }
    }

    fn model_poly(&self) -> Poly {
        let mut p = Poly::one();
        for (l, m) in &self.eigenvalues {
            p = p.mul(&Poly::linear(l).pow(self.model_multiplicity(l, *m)));
            if self.ring != Ring::C && !l.is_real() {
                p = p.mul(&Poly::linear(&l.conj()).pow(*m));
            }
        }
        p
    }

    fn validate(&self) -> Result<()> {
        for (i, (l, m)) in self.eigenvalues.iter().enumerate() {
            if *m == 0 {
                return Err(Error::HintMismatch(format!("zero multiplicity for {l}")));
            }
            if self.ring != Ring::C && l.im.is_negative() {
                return Err(Error::HintMismatch(format!(
                    "{l} is not a class representative (needs Im ≥ 0)"
                )));
            }
            if self.eigenvalues[..i].iter().any(|(k, _)| k == l) {
                return Err(Error::HintMismatch(format!("{l} listed twice")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct JordanForm<T> {
    pub blocks: Vec<JordanBlock>,
    pub s: Matrix<T>,
    pub j: Matrix<T>,
}

impl<T: std::fmt::Display> std::fmt::Debug for JordanForm<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("JordanForm")
            .field("blocks", &self.blocks)
            .field("s", &self.s)
            .field("j", &self.j)
            .finish()
    }
}

impl<T: DivisionRing> JordanForm<T> {
    /// The form of `assemble(blocks)` itself, with `S = I`.
    pub fn from_blocks(blocks: Vec<JordanBlock>) -> Result<Self> {
        let j = assemble::<T>(&blocks)?;
        Ok(JordanForm {
            s: Matrix::identity(j.rows()),
            blocks,
            j,
        })
    }

    /// `S·A·S⁻¹ = J` with `S` invertible.
    pub fn certifies(&self, a: &Matrix<T>) -> bool {
        a.is_square()
            && a.rows() == self.s.rows()
            && self.j == assemble::<T>(&self.blocks).unwrap_or_else(|_| Matrix::zeros(0, 0))
            && (&self.s * a) == (&self.j * &self.s)
            && self.s.is_invertible()
    }

    pub fn offsets(&self) -> Vec<usize> {
        offsets(&self.blocks)
    }
}

pub fn offsets(blocks: &[JordanBlock]) -> Vec<usize> {
    blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.dim();
            Some(o)
        })
        .collect()
}

/// Characteristic polynomial of the complex model.
pub fn char_poly<T: DivisionRing>(a: &Matrix<T>) -> Result<Poly> {
    a.require_square()?;
    Ok(Poly::characteristic(&complex_model(a)))
}

/// Locates the spectrum in ℚ(i). A hint is checked against the
/// characteristic polynomial, never trusted.
pub fn find_spectrum<T: DivisionRing>(a: &Matrix<T>, hint: Option<&Spectrum>) -> Result<Spectrum> {
    let p = char_poly(a)?;
    if let Some(h) = hint {
        if h.ring != T::RING {
            return Err(Error::HintMismatch(format!(
                "hint is for ring {}, matrix is over {}",
                h.ring,
                T::RING
            )));
        }
        h.validate()?;
        if h.model_poly() != p {
            return Err(Error::HintMismatch(
                "eigenvalues do not reproduce the characteristic polynomial".into(),
            ));
        }
        return Ok(h.clone());
    }
    let found = gaussian_roots(&p);
    if found.residual.degree().unwrap_or(0) > 0 {
        return Err(Error::SpectrumNotSupported {
            factor: found.residual.to_string(),
        });
    }
    let mut eigenvalues = Vec::new();
    for (l, m) in found.roots {
        match T::RING {
            Ring::C => eigenvalues.push((l, m)),
            Ring::R if l.im.is_negative() => {}
            Ring::R => eigenvalues.push((l, m)),
            Ring::H if l.im.is_negative() => {}
            Ring::H if l.is_real() => {
                if m % 2 != 0 {
                    return Err(Error::InternalInvariant(format!(
                        "real eigenvalue {l} of odd multiplicity in the complex model"
                    )));
                }
                eigenvalues.push((l, m / 2));
            }
            Ring::H => eigenvalues.push((l, m)),
        }
    }
    eigenvalues.sort_by(|x, y| x.0.lex_cmp(&y.0));
    Ok(Spectrum {
        ring: T::RING,
        eigenvalues,
    })
}

/// Number of chains of each length for `λ` in the complex model.
fn chain_counts(
    model: &Matrix<Gaussian>,
    lambda: &Gaussian,
    model_mult: usize,
) -> Result<BTreeMap<usize, usize>> {
    let dim = model.rows();
    let nmat = model - &Matrix::scalar(dim, lambda.clone());
    let mut ranks = vec![dim];
    let mut p = Matrix::identity(dim);
    loop {
        p = &p * &nmat;
        let r = p.rank();
        ranks.push(r);
        if r + model_mult == dim {
            break;
        }
        if ranks.len() > model_mult + 1 || r + model_mult < dim {
            return Err(Error::InternalInvariant(format!(
                "rank sequence for {lambda} does not stabilise at multiplicity {model_mult}"
            )));
        }
    }
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut counts = BTreeMap::new();
    for s in 1..=at_least.len() {
        let c = at_least[s - 1] - at_least.get(s).copied().unwrap_or(0);
        if c > 0 {
            counts.insert(s, c);
        }
    }
    Ok(counts)
}

fn blocks_for<T: DivisionRing>(
    model: &Matrix<Gaussian>,
    spectrum: &Spectrum,
) -> Result<Vec<(Gaussian, BTreeMap<usize, usize>)>> {
    let mut out = Vec::new();
    for (l, m) in &spectrum.eigenvalues {
        let mut counts = chain_counts(model, l, spectrum.model_multiplicity(l, *m))?;
        if T::RING == Ring::H && l.is_real() {
            for c in counts.values_mut() {
                if *c % 2 != 0 {
                    return Err(Error::InternalInvariant(format!(
                        "odd block count for real {l} in the complex model"
                    )));
                }
                *c /= 2;
            }
        }
        out.push((l.clone(), counts));
    }
    Ok(out)
}

fn make_block(ring: Ring, l: &Gaussian, size: usize) -> JordanBlock {
    if ring == Ring::R && !l.is_real() {
        JordanBlock::RealPair {
            mu: l.re.clone(),
            nu: l.im.clone(),
            half_size: size,
        }
    } else {
        JordanBlock::Standard {
            lambda: l.clone(),
            size,
        }
    }
}

fn check_spectrum<T: DivisionRing>(a: &Matrix<T>, spectrum: &Spectrum) -> Result<()> {
    if spectrum.ring != T::RING {
        return Err(Error::HintMismatch(format!(
            "spectrum is for ring {}, matrix is over {}",
            spectrum.ring,
            T::RING
        )));
    }
    spectrum.validate()?;
    if spectrum.model_poly() != char_poly(a)? {
        return Err(Error::HintMismatch(
            "spectrum does not match the characteristic polynomial".into(),
        ));
    }
    Ok(())
}

/// The block multiset in canonical order, without a conjugator.
pub fn jordan_structure<T: DivisionRing>(
    a: &Matrix<T>,
    spectrum: &Spectrum,
) -> Result<Vec<JordanBlock>> {
    check_spectrum(a, spectrum)?;
    let model = complex_model(a);
    let mut blocks = Vec::new();
    for (l, counts) in blocks_for::<T>(&model, spectrum)? {
        for (&s, &c) in &counts {
            for _ in 0..c {
                blocks.push(make_block(T::RING, &l, s));
            }
        }
    }
    sort_canonical(&mut blocks);
    Ok(blocks)
}

/// Incrementally reduced spanning set over ℚ(i).
struct Span {
    rows: Vec<(usize, Vec<Gaussian>)>,
}

impl Span {
    fn new() -> Self {
        Span { rows: Vec::new() }
    }

    fn reduce(&self, v: &[Gaussian]) -> Vec<Gaussian> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = &*x - &(&f * r);
            }
        }
        v
    }

    fn insert(&mut self, v: &[Gaussian]) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().expect("nonzero");
        self.rows.push((p, v.iter().map(|x| x * &inv).collect()));
        true
    }
}

/// Right multiplication by `𝐣` transported to the complex model:
/// `(x; y) ↦ (conj y; −conj x)`.
fn j_twist(v: &[Gaussian]) -> Vec<Gaussian> {
    let n = v.len() / 2;
    let (x, y) = v.split_at(n);
    y.iter()
        .map(Gaussian::conj)
        .chain(x.iter().map(|z| -z.conj()))
        .collect()
}

/// Jordan chains `[v₁, …, v_s]` with `(M − λ)v₁ = 0`, `(M − λ)v_{k+1} = v_k`.
/// With `quaternionic`, chains are chosen independent modulo the
/// 𝐣-closure of everything chosen so far.
fn chains(
    model: &Matrix<Gaussian>,
    lambda: &Gaussian,
    counts: &BTreeMap<usize, usize>,
    quaternionic: bool,
) -> Result<Vec<Vec<Vec<Gaussian>>>> {
    let dim = model.rows();
    let nmat = model - &Matrix::scalar(dim, lambda.clone());
    let smax = counts.keys().copied().max().unwrap_or(0);
    let mut powers = vec![Matrix::identity(dim)];
    for k in 1..=smax {
        powers.push(&powers[k - 1] * &nmat);
    }
    let mut found: Vec<Vec<Vec<Gaussian>>> = Vec::new();
    for s in (1..=smax).rev() {
        let need = counts.get(&s).copied().unwrap_or(0);
        if need == 0 {
            continue;
        }
        let mut span = Span::new();
        for v in powers[s - 1].kernel() {
            span.insert(&v);
        }
        for chain in &found {
            let v = &chain[s - 1];
            span.insert(v);
            if quaternionic {
                span.insert(&j_twist(v));
            }
        }
        let mut got = 0;
        for head in powers[s].kernel() {
            if got == need {
                break;
            }
            if !span.insert(&head) {
                continue;
            }
            if quaternionic {
                span.insert(&j_twist(&head));
            }
            let mut chain = vec![head];
            for _ in 1..s {
                let next = nmat.mul_vec(chain.last().expect("nonempty"))?;
                chain.push(next);
            }
            chain.reverse();
            found.push(chain);
            got += 1;
        }
        if got < need {
            return Err(Error::InternalInvariant(format!(
                "found {got} of {need} chains of length {s} for {lambda}"
            )));
        }
    }
    Ok(found)
}

/// Columns of `S⁻¹` contributed by one chain, in the original ring.
fn pull_back<T: DivisionRing>(chain: &[Vec<Gaussian>], real_pair: bool) -> Result<Vec<Vec<T>>> {
    let conv = |q: Quaternion| {
        T::from_quaternion(&q).ok_or_else(|| {
            Error::InternalInvariant(format!("chain entry {q} does not lie in {}", T::RING))
        })
    };
    let mut cols = Vec::new();
    for v in chain {
        match T::RING {
            Ring::H => {
                let n = v.len() / 2;
                let col = (0..n)
                    .map(|i| conv(Quaternion::new(v[i].clone(), -v[n + i].conj())))
                    .collect::<Result<Vec<T>>>()?;
                cols.push(col);
            }
            _ if real_pair => {
                let re = v.iter().map(|z| conv(Quaternion::from(z.re.clone())));
                cols.push(re.collect::<Result<Vec<T>>>()?);
                let im = v.iter().map(|z| conv(Quaternion::from(z.im.clone())));
                cols.push(im.collect::<Result<Vec<T>>>()?);
            }
            _ => {
                let col = v.iter().map(|z| conv(Quaternion::from(z.clone())));
                cols.push(col.collect::<Result<Vec<T>>>()?);
            }
        }
    }
    Ok(cols)
}

/// Certified Jordan form `S·A·S⁻¹ = J` for a given spectrum.
pub fn jordan_form<T: DivisionRing>(a: &Matrix<T>, spectrum: &Spectrum) -> Result<JordanForm<T>> {
    check_spectrum(a, spectrum)?;
    let n = a.rows();
    let model = complex_model(a);
    let quaternionic = T::RING == Ring::H;
    let mut pieces: Vec<(JordanBlock, Vec<Vec<T>>)> = Vec::new();
    for (l, counts) in blocks_for::<T>(&model, spectrum)? {
        let real_pair = T::RING == Ring::R && !l.is_real();
        for chain in chains(&model, &l, &counts, quaternionic)? {
            let block = make_block(T::RING, &l, chain.len());
            pieces.push((block, pull_back::<T>(&chain, real_pair)?));
        }
    }
    pieces.sort_by(|x, y| x.0.canonical_cmp(&y.0));
    let cols: Vec<Vec<T>> = pieces.iter().flat_map(|(_, c)| c.iter().cloned()).collect();
    let blocks: Vec<JordanBlock> = pieces.into_iter().map(|(b, _)| b).collect();
    let p = Matrix::from_columns(n, &cols)?;
    let s = p
        .inverse()
        .map_err(|_| Error::InternalInvariant("chain basis is singular".into()))?;
    let j = assemble::<T>(&blocks)?;
    if &s * a != &j * &s {
        return Err(Error::InternalInvariant("S·A·S⁻¹ ≠ J".into()));
    }
    Ok(JordanForm { blocks, s, j })
}

/// Spectrum search followed by [`jordan_form`].
pub fn compute_jordan_form<T: DivisionRing>(
    a: &Matrix<T>,
    hint: Option<&Spectrum>,
) -> Result<JordanForm<T>> {
    let spectrum = find_spectrum(a, hint)?;
    jordan_form(a, &spectrum)
}

/// `J(λ, n)`.
pub fn jordan_block<T: DivisionRing>(lambda: &T, n: usize) -> Matrix<T> {
    let mut m = Matrix::scalar(n, lambda.clone());
    for i in 1..n {
        m.set(i - 1, i, T::one());
    }
    m
}

/// `Ψ(J(μ + iν, half_size))`.
pub fn real_pair_block(mu: &Rational, nu: &Rational, half_size: usize) -> Matrix<Rational> {
    psi(&jordan_block(
        &Gaussian::new(mu.clone(), nu.clone()),
        half_size,
    ))
}

/// `σ = diag(1, −1, 1, −1, …)` of size `2·half_size`.
pub fn sigma<T: DivisionRing>(half_size: usize) -> Matrix<T> {
    let d: Vec<T> = (0..2 * half_size)
        .map(|i| {
            if i % 2 == 0 {
                T::one()
            } else {
                T::one().negated()
            }
        })
        .collect();
    Matrix::diagonal(&d)
}

pub fn block_matrix<T: DivisionRing>(block: &JordanBlock) -> Result<Matrix<T>> {
    match block {
        JordanBlock::Standard { size: 0, .. } | JordanBlock::RealPair { half_size: 0, .. } => {
            Err(Error::IllegalBlock("empty block".into()))
        }
        JordanBlock::Standard { lambda, size } => {
            let l = T::from_gaussian(lambda).ok_or_else(|| {
                Error::IllegalBlock(format!("eigenvalue {lambda} does not lie in {}", T::RING))
            })?;
            Ok(jordan_block(&l, *size))
        }
        JordanBlock::RealPair { mu, nu, half_size } => {
            if T::RING != Ring::R {
                return Err(Error::IllegalBlock(format!(
                    "real-pair blocks only exist over R, not {}",
                    T::RING
                )));
            }
            if !nu.is_positive() {
                return Err(Error::IllegalBlock("real-pair block needs ν > 0".into()));
            }
            real_pair_block(mu, nu, *half_size).try_map(|x| {
                T::from_quaternion(&Quaternion::from(x.clone()))
                    .ok_or_else(|| Error::InternalInvariant("real entry".into()))
            })
        }
    }
}

pub fn assemble<T: DivisionRing>(blocks: &[JordanBlock]) -> Result<Matrix<T>> {
    let n: usize = blocks.iter().map(JordanBlock::dim).sum();
    let mut m = Matrix::zeros(n, n);
    for (b, o) in blocks.iter().zip(offsets(blocks)) {
        m.set_block(o, o, &block_matrix::<T>(b)?);
    }
    Ok(m)
}

/// `σ·J_ℝ(μ ± iν)·σ`, the same block written for `μ ∓ iν`.
pub fn conjugate_real_pair(block: &JordanBlock) -> Result<Matrix<Rational>> {
    let m = block_matrix::<Rational>(block)?;
    let JordanBlock::RealPair { half_size, .. } = block else {
        return Err(Error::IllegalBlock("not a real-pair block".into()));
    };
    let s = sigma::<Rational>(*half_size);
    Ok(&(&s * &m) * &s)
}
