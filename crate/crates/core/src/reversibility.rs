//! Reversibility in `GL(n)` and Ad-reality in `gl(n)`.
//!
//! Classification is a greedy pairing of Jordan blocks under a rule table
//! that depends on the ring and on the mode (`g ~ g⁻¹` versus `X ~ −X`).
//! Witnesses are assembled block by block in Jordan coordinates from the
//! `Ω` matrices and sign patterns below, then transported back through the
//! similarity `S` and checked exactly.

use std::fmt;

use num_traits::Signed;

use crate::jordan::{offsets, sigma, JordanBlock, JordanForm, Spectrum};
use crate::matrices::{psi, Matrix};
use crate::oracle::{verify_ad_reverser, verify_reverser};
use crate::scalars::{binomial, DivisionRing, Gaussian, Quaternion, Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `r·A·r⁻¹ = A⁻¹` in `GL(n)`.
    Group,
    /// `g·X·g⁻¹ = −X` in `gl(n)`.
    Lie,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    SignSingleton,
    InversePair,
    UnitCircleSingleton,
    UnitModulusPair,
    UnitModulusSingleton,
    NilpotentSingleton,
    NegationPair,
    ImaginaryRealPairSingleton,
    ImaginaryPair,
    ImaginarySingleton,
}

impl Rule {
    pub fn describe(self) -> &'static str {
        match self {
            Rule::SignSingleton => "γ=±1 singleton",
            Rule::InversePair => "λ↔λ⁻¹",
            Rule::UnitCircleSingleton => "unit-circle real-pair singleton",
            Rule::UnitModulusPair => "unit-modulus pair",
            Rule::UnitModulusSingleton => "unit-modulus singleton",
            Rule::NilpotentSingleton => "J(0,m) singleton",
            Rule::NegationPair => "λ↔−λ",
            Rule::ImaginaryRealPairSingleton => "purely imaginary real-pair singleton",
            Rule::ImaginaryPair => "purely imaginary pair",
            Rule::ImaginarySingleton => "purely imaginary singleton",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.describe())
    }
}

/// One or two block indices and the rule that grouped them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingEntry {
    pub indices: Vec<usize>,
    pub rule: Rule,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairingCertificate {
    pub entries: Vec<PairingEntry>,
    /// Blocks whose required partner is missing.
    pub unmatched: Vec<usize>,
}

impl PairingCertificate {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.entries
            .iter()
            .filter_map(|e| match e.indices[..] {
                [i, j] => Some((i, j)),
                _ => None,
            })
            .collect()
    }

    pub fn singletons(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter_map(|e| match e.indices[..] {
                [i] => Some(i),
                _ => None,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverserWitness<W> {
    pub element: W,
    pub is_involution: bool,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversibilityReport<W> {
    pub mode: Mode,
    pub blocks: Vec<JordanBlock>,
    /// Reversible (group mode) or Ad-real (Lie mode).
    pub real: Verdict,
    /// Strongly reversible or strongly Ad-real.
    pub strong: Verdict,
    pub pairing: PairingCertificate,
    pub witness: Option<ReverserWitness<W>>,
}

/// `ℰ(g) = 𝒵(g) ∪ r·𝒵(g)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ReversingSymmetry<T> {
    pub reversible: bool,
    pub reverser: Option<Matrix<T>>,
    /// Index of the centralizer in the reversing symmetry group.
    pub index: u8,
    pub statement: String,
}

impl<T: fmt::Display> fmt::Debug for ReversingSymmetry<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReversingSymmetry")
            .field("reversible", &self.reversible)
            .field("reverser", &self.reverser)
            .field("index", &self.index)
            .field("statement", &self.statement)
            .finish()
    }
}

fn lift<T: DivisionRing>(q: &Quaternion) -> Result<T> {
    T::from_quaternion(q)
        .ok_or_else(|| Error::InternalInvariant(format!("{q} does not lie in {}", T::RING)))
}

fn lift_matrix<T: DivisionRing>(m: &Matrix<Rational>) -> Result<Matrix<T>> {
    m.try_map(|x| lift(&Quaternion::from(x.clone())))
}

fn j_scalar<T: DivisionRing>(n: usize) -> Result<Matrix<T>> {
    Ok(Matrix::scalar(n, lift(&Quaternion::j())?))
}

/// `Ω(λ, n)` from its closed form.
pub fn omega<T: DivisionRing>(lambda: &T, n: usize) -> Result<Matrix<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument("Ω(λ, n) needs n ≥ 1".into()));
    }
    let inv = lambda
        .inverse()
        .ok_or_else(|| Error::InvalidArgument("Ω(λ, n) needs λ ≠ 0".into()))?;
    let mut pows = vec![T::one()];
    for k in 1..=2 * n {
        pows.push(pows[k - 1].times(&inv));
    }
    let mut m = Matrix::zeros(n, n);
    m.set(n - 1, n - 1, T::one().negated());
    for i in 1..n {
        let negative = (n - i + 1) % 2 == 1;
        for j in i..n {
            let c = binomial((n - i - 1) as u64, (j - i) as u64);
            let v = pows[2 * n - i - j].scaled(&Rational::from_integer(c));
            m.set(i - 1, j - 1, if negative { v.negated() } else { v });
        }
    }
    Ok(m)
}

/// `Ω_ℝ(K, 2n)` for `K = Ψ(μ + iν)`, `ν > 0`.
pub fn omega_real(mu: &Rational, nu: &Rational, n: usize) -> Result<Matrix<Rational>> {
    if !nu.is_positive() {
        return Err(Error::InvalidArgument("Ω_ℝ(K, 2n) needs ν > 0".into()));
    }
    omega_real_of(&Gaussian::new(mu.clone(), nu.clone()), n)
}

/// The 2×2 block recurrence for any nonzero `z`, with `K = Ψ(z)`. Needed
/// for `K⁻¹`, whose imaginary part is negative.
pub fn omega_real_of(z: &Gaussian, n: usize) -> Result<Matrix<Rational>> {
    if n == 0 {
        return Err(Error::InvalidArgument("Ω_ℝ(K, 2n) needs n ≥ 1".into()));
    }
    let k = psi(&Matrix::diagonal(std::slice::from_ref(z)));
    let kinv = k
        .inverse()
        .map_err(|_| Error::InvalidArgument("Ω_ℝ(K, 2n) needs K invertible".into()))?;
    let kinv2 = &kinv * &kinv;
    let zero = Matrix::<Rational>::zeros(2, 2);
    let mut x = vec![vec![zero.clone(); n]; n];
    x[n - 1][n - 1] = Matrix::identity(2);
    for i in (0..n - 1).rev() {
        for j in 0..n - 1 {
            x[i][j] = -&(&(&kinv * &x[i + 1][j]) + &(&kinv2 * &x[i + 1][j + 1]));
        }
    }
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for (i, row) in x.iter().enumerate() {
        for (j, b) in row.iter().enumerate() {
            m.set_block(2 * i, 2 * j, b);
        }
    }
    Ok(m)
}

/// `diag(1, −1, 1, …)`.
pub fn tau<T: DivisionRing>(n: usize) -> Matrix<T> {
    sigma_like(n, |i| i % 2 == 0)
}

fn sigma_like<T: DivisionRing>(n: usize, positive: impl Fn(usize) -> bool) -> Matrix<T> {
    let d: Vec<T> = (0..n)
        .map(|i| {
            if positive(i) {
                T::one()
            } else {
                T::one().negated()
            }
        })
        .collect();
    Matrix::diagonal(&d)
}

/// `diag(I₂, −I₂, …)` on `2·half` coordinates.
fn tau_pairs<T: DivisionRing>(half: usize) -> Matrix<T> {
    sigma_like(2 * half, |i| (i / 2) % 2 == 0)
}

/// `diag(I₁,₁, −I₁,₁, …)` on `2·half` coordinates.
fn tau_i11<T: DivisionRing>(half: usize) -> Matrix<T> {
    sigma_like(2 * half, |i| (i / 2 + i % 2) % 2 == 0)
}

enum Target {
    Single(Rule),
    Partner(JordanBlock, Rule),
    SelfPair(Rule, Rule),
}

fn target(block: &JordanBlock, ring: Ring, mode: Mode) -> Target {
    match (mode, block) {
        (Mode::Group, JordanBlock::Standard { lambda, size }) => {
            let quaternionic = ring == Ring::H && !lambda.is_real();
            let n = lambda.norm();
            if quaternionic && n == Rational::from_integer(1.into()) {
                return Target::SelfPair(Rule::UnitModulusPair, Rule::UnitModulusSingleton);
            }
            let one = Gaussian::one();
            if *lambda == one || *lambda == -&one {
                return Target::Single(Rule::SignSingleton);
            }
            let partner = if quaternionic {
                let r = n.recip();
                Gaussian::new(&lambda.re * &r, &lambda.im * &r)
            } else {
                lambda.inverse().expect("nonzero eigenvalue")
            };
            Target::Partner(
                JordanBlock::Standard {
                    lambda: partner,
                    size: *size,
                },
                Rule::InversePair,
            )
        }
        (Mode::Group, JordanBlock::RealPair { mu, nu, half_size }) => {
            let n = mu * mu + nu * nu;
            if n == Rational::from_integer(1.into()) {
                return Target::Single(Rule::UnitCircleSingleton);
            }
            Target::Partner(
                JordanBlock::RealPair {
                    mu: mu / &n,
                    nu: nu / &n,
                    half_size: *half_size,
                },
                Rule::InversePair,
            )
        }
        (Mode::Lie, JordanBlock::Standard { lambda, size }) => {
            if lambda.is_zero() {
                return Target::Single(Rule::NilpotentSingleton);
            }
            let partner = if ring == Ring::H && !lambda.is_real() {
                if DivisionRing::is_zero(&lambda.re) {
                    return Target::SelfPair(Rule::ImaginaryPair, Rule::ImaginarySingleton);
                }
                -lambda.conj()
            } else {
                -lambda
            };
            Target::Partner(
                JordanBlock::Standard {
                    lambda: partner,
                    size: *size,
                },
                Rule::NegationPair,
            )
        }
        (Mode::Lie, JordanBlock::RealPair { mu, nu, half_size }) => {
            if DivisionRing::is_zero(mu) {
                return Target::Single(Rule::ImaginaryRealPairSingleton);
            }
            Target::Partner(
                JordanBlock::RealPair {
                    mu: -mu,
                    nu: nu.clone(),
                    half_size: *half_size,
                },
                Rule::NegationPair,
            )
        }
    }
}

/// Greedy matching in block order; ties go to the lowest free index.
pub fn pairing(blocks: &[JordanBlock], ring: Ring, mode: Mode) -> PairingCertificate {
    let mut used = vec![false; blocks.len()];
    let mut cert = PairingCertificate::default();
    for i in 0..blocks.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let claim = |want: &JordanBlock, used: &mut Vec<bool>| {
            let j = (0..blocks.len()).find(|&j| !used[j] && blocks[j] == *want)?;
            used[j] = true;
            Some(j)
        };
        match target(&blocks[i], ring, mode) {
            Target::Single(rule) => cert.entries.push(PairingEntry {
                indices: vec![i],
                rule,
            }),
            Target::Partner(want, rule) => match claim(&want, &mut used) {
                Some(j) => cert.entries.push(PairingEntry {
                    indices: vec![i, j],
                    rule,
                }),
                None => cert.unmatched.push(i),
            },
            Target::SelfPair(pair, single) => match claim(&blocks[i], &mut used) {
                Some(j) => cert.entries.push(PairingEntry {
                    indices: vec![i, j],
                    rule: pair,
                }),
                None => cert.entries.push(PairingEntry {
                    indices: vec![i],
                    rule: single,
                }),
            },
        }
    }
    cert
}

fn strong_verdict(blocks: &[JordanBlock], ring: Ring, cert: &PairingCertificate) -> Verdict {
    if !cert.unmatched.is_empty() {
        return Verdict::No;
    }
    if ring != Ring::H {
        return Verdict::Yes;
    }
    let leftovers: Vec<usize> = cert
        .entries
        .iter()
        .filter(|e| {
            matches!(
                e.rule,
                Rule::UnitModulusSingleton | Rule::ImaginarySingleton
            )
        })
        .map(|e| e.indices[0])
        .collect();
    if leftovers.is_empty() {
        return Verdict::Yes;
    }
    let lone_1x1 = leftovers.iter().any(|&i| {
        let l = blocks[i].eigenvalue();
        blocks[i].chain_len() == 1 && blocks.iter().filter(|b| b.eigenvalue() == l).count() == 1
    });
    if lone_1x1 {
        Verdict::No
    } else {
        Verdict::Unknown
    }
}

fn single_block<T: DivisionRing>(block: &JordanBlock, rule: Rule) -> Result<(Matrix<T>, bool)> {
    let lambda = || lift::<T>(&Quaternion::from(block.eigenvalue()));
    let n = block.chain_len();
    Ok(match rule {
        Rule::SignSingleton => (omega(&lambda()?, n)?, true),
        Rule::UnitCircleSingleton => {
            let w = &omega_real_of(&block.eigenvalue(), n)? * &sigma::<Rational>(n);
            (lift_matrix(&w)?, true)
        }
        Rule::UnitModulusSingleton => (&omega(&lambda()?, n)? * &j_scalar::<T>(n)?, false),
        Rule::NilpotentSingleton => (tau(n), true),
        Rule::ImaginaryRealPairSingleton => (tau_i11(n), true),
        Rule::ImaginarySingleton => (&tau::<T>(n) * &j_scalar::<T>(n)?, false),
        other => {
            return Err(Error::InternalInvariant(format!(
                "rule {other} does not apply to a single block"
            )))
        }
    })
}

/// Off-diagonal pieces `(g_ij, g_ji)` for a paired entry whose first block
/// is `block`.
fn pair_blocks<T: DivisionRing>(block: &JordanBlock, rule: Rule) -> Result<(Matrix<T>, Matrix<T>)> {
    let n = block.chain_len();
    let l = block.eigenvalue();
    let twisted = |x: Matrix<T>, y: Matrix<T>, d: Matrix<T>| -> Result<(Matrix<T>, Matrix<T>)> {
        let dinv = d.inverse()?;
        Ok((&x * &d, &dinv * &y))
    };
    match (rule, block) {
        (Rule::InversePair, JordanBlock::Standard { .. }) => {
            let lt: T = lift(&Quaternion::from(l.clone()))?;
            let linv = lt.inverse().expect("nonzero eigenvalue");
            let x = -&omega(&lt, n)?;
            let y = -&omega(&linv, n)?;
            let d = if l.is_real() {
                Matrix::identity(n)
            } else if T::RING == Ring::H {
                j_scalar(n)?
            } else {
                Matrix::identity(n)
            };
            twisted(x, y, d)
        }
        (Rule::InversePair, JordanBlock::RealPair { .. }) => {
            let x = lift_matrix(&omega_real_of(&l, n)?)?;
            let y = lift_matrix(&omega_real_of(&l.inverse().expect("nonzero"), n)?)?;
            twisted(x, y, sigma(n))
        }
        (Rule::UnitModulusPair, _) => {
            let x = &omega(&lift::<T>(&Quaternion::from(l))?, n)? * &j_scalar::<T>(n)?;
            let xinv = x.inverse()?;
            Ok((x, xinv))
        }
        (Rule::NegationPair, JordanBlock::Standard { .. }) => {
            let d = if T::RING == Ring::H && !l.is_real() {
                j_scalar(n)?
            } else {
                Matrix::identity(n)
            };
            twisted(tau(n), tau(n), d)
        }
        (Rule::NegationPair, JordanBlock::RealPair { .. }) => {
            twisted(tau_pairs(n), tau_pairs(n), sigma(n))
        }
        (Rule::ImaginaryPair, _) => {
            let x = &tau::<T>(n) * &j_scalar::<T>(n)?;
            let minus = -&x;
            Ok((x, minus))
        }
        (other, _) => Err(Error::InternalInvariant(format!(
            "rule {other} does not apply to a pair"
        ))),
    }
}

/// Witness in Jordan coordinates and whether every piece is an involution.
pub fn assemble_witness<T: DivisionRing>(
    blocks: &[JordanBlock],
    cert: &PairingCertificate,
) -> Result<(Matrix<T>, bool)> {
    let n: usize = blocks.iter().map(JordanBlock::dim).sum();
    let offs = offsets(blocks);
    let mut g = Matrix::zeros(n, n);
    let mut involutive = true;
    for e in &cert.entries {
        match e.indices[..] {
            [i] => {
                let (w, inv) = single_block::<T>(&blocks[i], e.rule)?;
                g.set_block(offs[i], offs[i], &w);
                involutive &= inv;
            }
            [i, j] => {
                let (x, y) = pair_blocks::<T>(&blocks[i], e.rule)?;
                g.set_block(offs[i], offs[j], &x);
                g.set_block(offs[j], offs[i], &y);
            }
            _ => return Err(Error::InternalInvariant("malformed pairing entry".into())),
        }
    }
    Ok((g, involutive))
}

fn has_zero_eigenvalue(blocks: &[JordanBlock]) -> bool {
    blocks
        .iter()
        .any(|b| matches!(b, JordanBlock::Standard { lambda, .. } if lambda.is_zero()))
}

/// Full report: flags, pairing certificate and, when one exists, a
/// verified witness.
pub fn classify<T: DivisionRing>(
    a: &Matrix<T>,
    form: &JordanForm<T>,
    mode: Mode,
) -> Result<ReversibilityReport<Matrix<T>>> {
    if !form.certifies(a) {
        return Err(Error::FormMismatch);
    }
    if mode == Mode::Group && has_zero_eigenvalue(&form.blocks) {
        return Err(Error::SingularInput);
    }
    let cert = pairing(&form.blocks, T::RING, mode);
    let real = Verdict::from_bool(cert.unmatched.is_empty());
    let strong = strong_verdict(&form.blocks, T::RING, &cert);
    let witness = if real == Verdict::Yes {
        let (gj, involutive) = assemble_witness::<T>(&form.blocks, &cert)?;
        let sinv = form.s.inverse()?;
        let r = &(&sinv * &gj) * &form.s;
        let verdict = match mode {
            Mode::Group => verify_reverser(a, &r),
            Mode::Lie => verify_ad_reverser(a, &r),
        };
        if !verdict.holds {
            return Err(Error::WitnessConstructionFailed(format!(
                "assembled witness fails: {}",
                verdict.describe()
            )));
        }
        let is_involution = r.is_involution();
        if involutive && !is_involution {
            return Err(Error::WitnessConstructionFailed(
                "blockwise involution did not transport to an involution".into(),
            ));
        }
        Some(ReverserWitness {
            element: r,
            is_involution,
            verified: true,
        })
    } else {
        None
    };
    if strong == Verdict::Yes && !witness.as_ref().is_some_and(|w| w.is_involution) {
        return Err(Error::WitnessConstructionFailed(
            "strong verdict without an involutive witness".into(),
        ));
    }
    Ok(ReversibilityReport {
        mode,
        blocks: form.blocks.clone(),
        real,
        strong,
        pairing: cert,
        witness,
    })
}

/// Computes the Jordan form and classifies in one step.
pub fn analyze<T: DivisionRing>(
    a: &Matrix<T>,
    mode: Mode,
    hint: Option<&Spectrum>,
) -> Result<ReversibilityReport<Matrix<T>>> {
    let form = crate::jordan::compute_jordan_form(a, hint)?;
    classify(a, &form, mode)
}

pub fn classify_reversible<T: DivisionRing>(
    a: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<ReversibilityReport<Matrix<T>>> {
    classify(a, form, Mode::Group)
}

pub fn classify_strongly_reversible<T: DivisionRing>(
    a: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<ReversibilityReport<Matrix<T>>> {
    classify(a, form, Mode::Group)
}

pub fn classify_ad_real<T: DivisionRing>(
    x: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<ReversibilityReport<Matrix<T>>> {
    classify(x, form, Mode::Lie)
}

pub fn classify_strongly_ad_real<T: DivisionRing>(
    x: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<ReversibilityReport<Matrix<T>>> {
    classify(x, form, Mode::Lie)
}

fn describe_unmatched(report: &ReversibilityReport<impl Sized>) -> String {
    let names: Vec<String> = report
        .pairing
        .unmatched
        .iter()
        .map(|&i| describe_block(&report.blocks[i]))
        .collect();
    format!("no partner for {}", names.join(", "))
}

pub fn describe_block(b: &JordanBlock) -> String {
    match b {
        JordanBlock::Standard { lambda, size } => format!("J({lambda},{size})"),
        JordanBlock::RealPair { mu, nu, half_size } => format!(
            "J_R({}±{}i,{})",
            crate::scalars::format_rational(mu),
            crate::scalars::format_rational(nu),
            2 * half_size
        ),
    }
}

pub fn reverser<T: DivisionRing>(
    a: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<ReverserWitness<Matrix<T>>> {
    let report = classify(a, form, Mode::Group)?;
    let detail = describe_unmatched(&report);
    report.witness.ok_or(Error::NotReversible(detail))
}

pub fn ad_reverser<T: DivisionRing>(
    x: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<ReverserWitness<Matrix<T>>> {
    let report = classify(x, form, Mode::Lie)?;
    let detail = describe_unmatched(&report);
    report.witness.ok_or(Error::NotAdReal(detail))
}

/// `A = g₁·g₂` with `g₁ = r` the involutive reverser and `g₂ = r·A`; an
/// involution `A` factors as `(I, A)`.
pub fn two_involutions<T: DivisionRing>(
    a: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<[ReverserWitness<Matrix<T>>; 2]> {
    let report = classify(a, form, Mode::Group)?;
    if report.strong != Verdict::Yes {
        return Err(Error::NotStronglyReversible(match report.real {
            Verdict::Yes => format!("strong reversibility is {}", report.strong),
            _ => describe_unmatched(&report),
        }));
    }
    let mut first = report.witness.expect("strong verdict carries a witness");
    if (a * a).is_identity() {
        first.element = Matrix::identity(a.rows());
    }
    let g2 = &first.element * a;
    if !g2.is_involution() || &first.element * &g2 != *a {
        return Err(Error::WitnessConstructionFailed(
            "r·A is not an involution".into(),
        ));
    }
    let second = ReverserWitness {
        verified: verify_reverser(a, &g2).holds,
        is_involution: true,
        element: g2,
    };
    Ok([first, second])
}

pub fn reversing_symmetry<T: DivisionRing>(
    a: &Matrix<T>,
    form: &JordanForm<T>,
) -> Result<ReversingSymmetry<T>> {
    let report = classify(a, form, Mode::Group)?;
    if (a * a).is_identity() {
        return Ok(ReversingSymmetry {
            reversible: true,
            reverser: Some(Matrix::identity(a.rows())),
            index: 1,
            statement: "ℰ(g) = 𝒵(g), since g = g⁻¹".into(),
        });
    }
    Ok(match report.witness {
        Some(w) => ReversingSymmetry {
            reversible: true,
            reverser: Some(w.element),
            index: 2,
            statement: "ℰ(g) = 𝒵(g) ∪ r·𝒵(g), index 2".into(),
        },
        None => ReversingSymmetry {
            reversible: false,
            reverser: None,
            index: 1,
            statement: "ℰ(g) = 𝒵(g)".into(),
        },
    })
}
