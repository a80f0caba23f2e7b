//! The affine group `GL(n) ⋉ 𝔻ⁿ` acting by `x ↦ A·x + v`.
//!
//! Every element is conjugate to `(T ⊕ U, (0, ṽ))` with `T` free of the
//! eigenvalue 1 and `U` unipotent. Reversibility questions reduce to `T`;
//! the unipotent part is always strongly reversible and its involutive
//! reverser is built in the Lie algebra and exponentiated.

use std::fmt;

use crate::jordan::{jordan_form, Poly, Spectrum};
use crate::matrices::{complex_model, det, det_trace_h, Matrix};
use crate::oracle::{verify_affine_involution, verify_affine_reverser};
use crate::reversibility::{
    analyze, pairing, reverser, Mode, PairingCertificate, PairingEntry, ReverserWitness,
    ReversibilityReport, Verdict,
};
use crate::scalars::{DivisionRing, Gaussian, Rational, Ring};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineMap<T> {
    pub linear: Matrix<T>,
    pub translation: Vec<T>,
}

/// `(X, x)` in `gl(n) ⊕ 𝔻ⁿ` with `[(A, 0), (0, v)] = (0, A·v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffLieElement<T> {
    pub x: Matrix<T>,
    pub w: Vec<T>,
}

fn add_vec<T: DivisionRing>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
}

fn neg_vec<T: DivisionRing>(a: &[T]) -> Vec<T> {
    a.iter().map(DivisionRing::negated).collect()
}

impl<T: DivisionRing> AffineMap<T> {
    pub fn new(linear: Matrix<T>, translation: Vec<T>) -> Result<Self> {
        let n = linear.require_square()?;
        if translation.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "translation of length {} for a {n}x{n} linear part",
                translation.len()
            )));
        }
        if !linear.is_invertible() {
            return Err(Error::Singular);
        }
        Ok(AffineMap {
            linear,
            translation,
        })
    }

    pub fn identity(n: usize) -> Self {
        AffineMap {
            linear: Matrix::identity(n),
            translation: vec![T::zero(); n],
        }
    }

    pub fn linear_only(linear: Matrix<T>) -> Self {
        let n = linear.rows();
        AffineMap {
            linear,
            translation: vec![T::zero(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        Ok(add_vec(&self.linear.mul_vec(x)?, &self.translation))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let linear = self.linear.try_mul(&other.linear)?;
        let translation = add_vec(&self.linear.mul_vec(&other.translation)?, &self.translation);
        Ok(AffineMap {
            linear,
            translation,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let linear = self.linear.inverse()?;
        let translation = neg_vec(&linear.mul_vec(&self.translation)?);
        Ok(AffineMap {
            linear,
            translation,
        })
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Self) -> Result<Self> {
        h.compose(self)?.compose(&h.inverse()?)
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.translation.iter().all(DivisionRing::is_zero)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_ok_and(|s| s.is_identity())
    }

    /// `Θ(A, v) = [[A, v], [0, 1]]`.
    pub fn theta(&self) -> Matrix<T> {
        let n = self.dim();
        let mut m = Matrix::zeros(n + 1, n + 1);
        m.set_block(0, 0, &self.linear);
        for (i, x) in self.translation.iter().enumerate() {
            m.set(i, n, x.clone());
        }
        m.set(n, n, T::one());
        m
    }

    pub fn from_theta(m: &Matrix<T>) -> Result<Self> {
        let n1 = m.require_square()?;
        if n1 == 0 {
            return Err(Error::ShapeMismatch(
                "empty matrix is not in the image of Θ".into(),
            ));
        }
        let n = n1 - 1;
        if !(0..n).all(|j| m.get(n, j).is_zero()) || !m.get(n, n).is_one() {
            return Err(Error::ShapeMismatch("last row is not (0, …, 0, 1)".into()));
        }
        AffineMap::new(
            m.block(0, 0, n, n),
            (0..n).map(|i| m.get(i, n).clone()).collect(),
        )
    }

    /// Linear part and translation restricted to the coordinate range.
    fn restrict(&self, start: usize, len: usize) -> (Matrix<T>, Vec<T>) {
        (
            self.linear.block(start, start, len, len),
            self.translation[start..start + len].to_vec(),
        )
    }
}

impl<T: fmt::Display> fmt::Display for AffineMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.translation.iter().map(ToString::to_string).collect();
        write!(f, "({}, [{}])", self.linear, v.join(", "))
    }
}

impl<T: fmt::Display> fmt::Debug for AffineMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<T: DivisionRing> AffLieElement<T> {
    pub fn new(x: Matrix<T>, w: Vec<T>) -> Result<Self> {
        let n = x.require_square()?;
        if w.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for n = {n}",
                w.len()
            )));
        }
        Ok(AffLieElement { x, w })
    }

    /// `ρ(X, x) = [[X, x], [0, 0]]`.
    pub fn rho(&self) -> Matrix<T> {
        let n = self.w.len();
        let mut m = Matrix::zeros(n + 1, n + 1);
        m.set_block(0, 0, &self.x);
        for (i, v) in self.w.iter().enumerate() {
            m.set(i, n, v.clone());
        }
        m
    }

    pub fn bracket(&self, other: &Self) -> Self {
        let x = &(&self.x * &other.x) - &(&other.x * &self.x);
        let a = self.x.mul_vec(&other.w).expect("shapes");
        let b = other.x.mul_vec(&self.w).expect("shapes");
        let w = a.iter().zip(&b).map(|(p, q)| p.minus(q)).collect();
        AffLieElement { x, w }
    }
}

impl<T: fmt::Display> fmt::Debug for AffLieElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.w.iter().map(ToString::to_string).collect();
        write!(f, "({}, [{}])", self.x, v.join(", "))
    }
}

pub fn theta_embed<T: DivisionRing>(g: &AffineMap<T>) -> Matrix<T> {
    g.theta()
}

pub fn rho_embed<T: DivisionRing>(e: &AffLieElement<T>) -> Matrix<T> {
    e.rho()
}

/// `exp(X, x)` through the `ρ` model; `X` must be nilpotent.
pub fn aff_exp<T: DivisionRing>(e: &AffLieElement<T>) -> Result<AffineMap<T>> {
    if !e.x.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    AffineMap::from_theta(&e.rho().nilpotent_exp()?)
}

#[derive(Clone, PartialEq, Eq)]
pub struct AffineNormalForm<T> {
    /// `h` with `h ∘ g ∘ h⁻¹ = result`.
    pub conjugator: AffineMap<T>,
    pub result: AffineMap<T>,
    /// Dimension of the `T` block; the unipotent block follows it.
    pub t_dim: usize,
}

impl<T: fmt::Display> fmt::Debug for AffineNormalForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineNormalForm")
            .field("conjugator", &self.conjugator)
            .field("result", &self.result)
            .field("t_dim", &self.t_dim)
            .finish()
    }
}

impl<T: DivisionRing> AffineNormalForm<T> {
    pub fn t_part(&self) -> Matrix<T> {
        self.result.restrict(0, self.t_dim).0
    }

    pub fn u_part(&self) -> (Matrix<T>, Vec<T>) {
        self.result
            .restrict(self.t_dim, self.result.dim() - self.t_dim)
    }
}

/// Splits `𝔻ⁿ = im (A−I)ⁿ ⊕ ker (A−I)ⁿ` and clears the translation on the
/// first summand.
pub fn normal_form<T: DivisionRing>(g: &AffineMap<T>) -> Result<AffineNormalForm<T>> {
    let n = g.dim();
    let a = &g.linear;
    let shifted = a - &Matrix::identity(n);
    let (b, t_dim) = if shifted.is_invertible() {
        (Matrix::identity(n), n)
    } else {
        let power = shifted.pow(n as u32)?;
        let (_, pivots) = power.rref();
        let mut cols: Vec<Vec<T>> = pivots.iter().map(|&j| power.column(j)).collect();
        let t_dim = cols.len();
        cols.extend(power.kernel());
        let p = Matrix::from_columns(n, &cols)?;
        (p.inverse()?, t_dim)
    };
    let first = AffineMap::linear_only(b);
    let split = g.conjugate_by(&first)?;
    let (t, wt) = split.restrict(0, t_dim);
    let ut = (&t - &Matrix::identity(t_dim)).inverse()?.mul_vec(&wt)?;
    let mut u = ut;
    u.resize(n, T::zero());
    let conjugator = AffineMap {
        linear: Matrix::identity(n),
        translation: u,
    }
    .compose(&first)?;
    let result = g.conjugate_by(&conjugator)?;
    let off_block = (0..t_dim).any(|i| {
        (t_dim..n).any(|j| !result.linear.get(i, j).is_zero() || !result.linear.get(j, i).is_zero())
    });
    if off_block || result.translation[..t_dim].iter().any(|x| !x.is_zero()) {
        return Err(Error::InternalInvariant("normal form is not split".into()));
    }
    Ok(AffineNormalForm {
        conjugator,
        result,
        t_dim,
    })
}

fn without_one(hint: Option<&Spectrum>) -> Option<Spectrum> {
    hint.map(|h| Spectrum {
        ring: h.ring,
        eigenvalues: h
            .eigenvalues
            .iter()
            .filter(|(l, _)| *l != Gaussian::one())
            .cloned()
            .collect(),
    })
}

fn unipotent_spectrum<T: DivisionRing>(value: Gaussian, m: usize) -> Spectrum {
    Spectrum {
        ring: T::RING,
        eigenvalues: vec![(value, m)],
    }
}

/// `log U` for unipotent `U`, exact since `U − I` is nilpotent.
pub fn unipotent_log<T: DivisionRing>(u: &Matrix<T>) -> Result<Matrix<T>> {
    let m = u.require_square()?;
    let nil = u - &Matrix::identity(m);
    if !nil.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let mut term = Matrix::identity(m);
    let mut acc = Matrix::zeros(m, m);
    for k in 1..=m {
        term = &term * &nil;
        let c = Rational::new(
            if k % 2 == 1 { 1.into() } else { (-1).into() },
            (k as i64).into(),
        );
        acc = &acc + &term.scaled(&c);
    }
    Ok(acc)
}

/// Involutive `h` with `h·(U, v)·h⁻¹ = (U, v)⁻¹` for unipotent `U`.
pub fn unipotent_strong_reverser<T: DivisionRing>(u: &Matrix<T>, v: &[T]) -> Result<AffineMap<T>> {
    let m = u.require_square()?;
    if m == 0 {
        return Ok(AffineMap::identity(0));
    }
    let l = unipotent_log(u)?;
    let mut phi = Matrix::zeros(m, m);
    let mut term = Matrix::identity(m);
    let mut fact = Rational::from_integer(1.into());
    for k in 0..=m {
        fact = &fact * &Rational::from_integer(((k + 1) as i64).into());
        phi = &phi + &term.scaled(&fact.recip());
        term = &term * &l;
    }
    let x = phi.inverse()?.mul_vec(v)?;
    let form = jordan_form(&l, &unipotent_spectrum::<T>(Gaussian::zero(), m))?;
    let q = &form.s;
    let xj = q.mul_vec(&x)?;
    let mut signs = Vec::with_capacity(m);
    let mut wj = vec![T::zero(); m];
    let mut o = 0;
    for b in &form.blocks {
        let k = b.chain_len();
        let sign = |i: usize| (k - i + 1) % 2 == 0;
        for i in 1..=k {
            signs.push(if sign(i) {
                T::one()
            } else {
                T::one().negated()
            });
            if i < k && sign(i) {
                wj[o + i] = xj[o + i - 1].scaled(&Rational::from_integer((-2).into()));
            }
        }
        o += k;
    }
    let bj = Matrix::diagonal(&signs);
    let qinv = q.inverse()?;
    let h = AffineMap {
        linear: &(&qinv * &bj) * q,
        translation: qinv.mul_vec(&wj)?,
    };
    let lhs = l.mul_vec(&h.translation)?;
    let rhs = (&h.linear + &Matrix::identity(m)).mul_vec(&x)?;
    if lhs != neg_vec(&rhs) {
        return Err(Error::InternalInvariant(
            "Lie reverser condition fails".into(),
        ));
    }
    Ok(h)
}

fn direct_sum_maps<T: DivisionRing>(t: &Matrix<T>, u: &AffineMap<T>) -> AffineMap<T> {
    let mut translation = vec![T::zero(); t.rows()];
    translation.extend(u.translation.iter().cloned());
    AffineMap {
        linear: t.direct_sum(&u.linear),
        translation,
    }
}

fn strong_linear_reverser<T: DivisionRing>(
    t: &Matrix<T>,
    hint: Option<&Spectrum>,
) -> Result<Matrix<T>> {
    if t.rows() == 0 {
        return Ok(Matrix::identity(0));
    }
    let report = analyze(t, Mode::Group, hint)?;
    match (report.strong, report.witness) {
        (Verdict::Yes, Some(w)) => Ok(w.element),
        (Verdict::No, _) if report.real == Verdict::No => Err(Error::NotStronglyReversible(
            "linear part is not reversible".into(),
        )),
        (v, _) => Err(Error::NotStronglyReversible(format!(
            "strong reversibility of the linear part is {v}"
        ))),
    }
}

fn check_witness<T: DivisionRing>(
    g: &AffineMap<T>,
    h: AffineMap<T>,
    involution: bool,
) -> Result<ReverserWitness<AffineMap<T>>> {
    let rev = verify_affine_reverser(g, &h);
    if !rev.holds {
        return Err(Error::WitnessConstructionFailed(format!(
            "affine reverser: {}",
            rev.describe()
        )));
    }
    let inv = verify_affine_involution(&h).holds;
    if involution && !inv {
        return Err(Error::WitnessConstructionFailed(
            "affine reverser is not an involution".into(),
        ));
    }
    Ok(ReverserWitness {
        element: h,
        is_involution: inv,
        verified: true,
    })
}

/// `(B, w)` with `B` reversing `A` and `(A⁻¹ − I)·w = (A⁻¹ + B)·v`.
pub fn aff_reverser<T: DivisionRing>(
    g: &AffineMap<T>,
    hint: Option<&Spectrum>,
) -> Result<ReverserWitness<AffineMap<T>>> {
    let form = crate::jordan::compute_jordan_form(&g.linear, hint)?;
    let b = reverser(&g.linear, &form)?.element;
    let n = g.dim();
    let ainv = g.linear.inverse()?;
    let lhs = &ainv - &Matrix::identity(n);
    let rhs = (&ainv + &b).mul_vec(&g.translation)?;
    let sol = lhs.solve(&rhs)?;
    let w = sol.particular.ok_or_else(|| {
        Error::InternalInvariant("affine reverser equation is inconsistent".into())
    })?;
    check_witness(
        g,
        AffineMap {
            linear: b,
            translation: w,
        },
        false,
    )
}

/// Involutive reverser: linear witness on `T`, Lie-algebra route on the
/// unipotent part, conjugated back from the normal form.
pub fn aff_strong_reverser<T: DivisionRing>(
    g: &AffineMap<T>,
    hint: Option<&Spectrum>,
) -> Result<ReverserWitness<AffineMap<T>>> {
    let nf = normal_form(g)?;
    let bt = strong_linear_reverser(&nf.t_part(), without_one(hint).as_ref())?;
    let (u, v) = nf.u_part();
    let hu = unipotent_strong_reverser(&u, &v)?;
    let h = direct_sum_maps(&bt, &hu);
    let h = h.conjugate_by(&nf.conjugator.inverse()?)?;
    check_witness(g, h, true)
}

/// Flags come from the `T` block of the normal form.
pub fn aff_classify<T: DivisionRing>(
    g: &AffineMap<T>,
    hint: Option<&Spectrum>,
) -> Result<ReversibilityReport<AffineMap<T>>> {
    let nf = normal_form(g)?;
    let t = nf.t_part();
    let (u, _) = nf.u_part();
    let (mut blocks, mut cert, real, strong) = if t.rows() == 0 {
        (
            Vec::new(),
            PairingCertificate::default(),
            Verdict::Yes,
            Verdict::Yes,
        )
    } else {
        let r = analyze(&t, Mode::Group, without_one(hint).as_ref())?;
        (r.blocks, r.pairing, r.real, r.strong)
    };
    if u.rows() > 0 {
        let ublocks = crate::jordan::jordan_structure(
            &u,
            &unipotent_spectrum::<T>(Gaussian::one(), u.rows()),
        )?;
        let base = blocks.len();
        let extra = pairing(&ublocks, T::RING, Mode::Group);
        for e in extra.entries {
            cert.entries.push(PairingEntry {
                indices: e.indices.iter().map(|i| i + base).collect(),
                rule: e.rule,
            });
        }
        blocks.extend(ublocks);
    }
    let witness = match (real, strong) {
        (Verdict::Yes, Verdict::Yes) => Some(aff_strong_reverser(g, hint)?),
        (Verdict::Yes, _) => Some(aff_reverser(g, hint)?),
        _ => None,
    };
    Ok(ReversibilityReport {
        mode: Mode::Group,
        blocks,
        real,
        strong,
        pairing: cert,
        witness,
    })
}

fn self_reciprocal(p: &Poly) -> bool {
    let c = p.coeffs();
    let Some(c0) = c.first().filter(|x| !x.is_zero()) else {
        return false;
    };
    let inv = c0.inverse().expect("nonzero");
    c.iter().rev().zip(c).all(|(r, x)| &(r * &inv) == x)
}

/// Involutive permutations of `0..n`, identity first.
fn involutive_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(perm: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = perm.iter().position(Option::is_none) else {
            out.push(perm.iter().map(|x| x.expect("assigned")).collect());
            return;
        };
        perm[i] = Some(i);
        go(perm, out);
        for j in i + 1..perm.len() {
            if perm[j].is_none() {
                perm[i] = Some(j);
                perm[j] = Some(i);
                go(perm, out);
                perm[j] = None;
            }
        }
        perm[i] = None;
    }
    let mut out = Vec::new();
    go(&mut vec![None; n], &mut out);
    out
}

/// Signed permutation involutions other than `I`, in a fixed order. Full
/// search up to `n = 6`, sign matrices only beyond.
pub fn involution_candidates<T: DivisionRing>(n: usize) -> Vec<Matrix<T>> {
    let perms = if n <= 6 {
        involutive_permutations(n)
    } else {
        vec![(0..n).collect()]
    };
    let mut out = Vec::new();
    for p in perms {
        for mask in 0u64..(1u64 << n) {
            let negative = |i: usize| mask >> (n - 1 - i) & 1 == 1;
            if (0..n).any(|i| negative(i) != negative(p[i])) {
                continue;
            }
            let mut w = Matrix::zeros(n, n);
            for (i, &pi) in p.iter().enumerate() {
                w.set(
                    pi,
                    i,
                    if negative(i) {
                        T::one().negated()
                    } else {
                        T::one()
                    },
                );
            }
            if !w.is_identity() {
                out.push(w);
            }
        }
    }
    out
}

/// `[B₁, B₂, B₃, B₄]`, involutions with product `t`.
fn linear_four<T: DivisionRing>(t: &Matrix<T>, hint: Option<&Spectrum>) -> Result<[Matrix<T>; 4]> {
    let k = t.rows();
    let id = Matrix::identity(k);
    if k == 0 {
        return Ok([id.clone(), id.clone(), id.clone(), id]);
    }
    let report = analyze(t, Mode::Group, hint)?;
    if let (Verdict::Yes, Some(w)) = (report.strong, &report.witness) {
        let r = w.element.clone();
        let rt = &r * t;
        return Ok([r, rt, id.clone(), id]);
    }
    for w in involution_candidates::<T>(k) {
        let tw = t * &w;
        if !self_reciprocal(&Poly::characteristic(&complex_model(&tw))) {
            continue;
        }
        let Ok(r) = analyze(&tw, Mode::Group, None) else {
            continue;
        };
        if let (Verdict::Yes, Some(c)) = (r.strong, r.witness) {
            let c1 = c.element;
            let c2 = &c1 * &tw;
            return Ok([c1, c2, w, id]);
        }
    }
    Err(Error::UnsupportedFactorization(format!(
        "no signed-permutation involution W makes T·W strongly reversible (n = {k})"
    )))
}

fn check_det<T: DivisionRing>(a: &Matrix<T>) -> Result<()> {
    match T::RING {
        Ring::H => {
            let q = crate::matrices::to_quaternion_matrix(a);
            let (d, _) = det_trace_h(&q)?;
            if d != Rational::from_integer(1.into()) {
                return Err(Error::DeterminantNotUnit(format!(
                    "det_H = {d}, expected 1"
                )));
            }
        }
        _ => {
            let d = det(a)?;
            if !(d.is_one() || d.negated().is_one()) {
                return Err(Error::DeterminantNotUnit(format!("det = {d}, expected ±1")));
            }
        }
    }
    Ok(())
}

/// `g = f₁·f₂·f₃·f₄` with every `fᵢ` an involution.
pub fn four_involutions<T: DivisionRing>(
    g: &AffineMap<T>,
    hint: Option<&Spectrum>,
) -> Result<[AffineMap<T>; 4]> {
    check_det(&g.linear)?;
    let nf = normal_form(g)?;
    let bs = linear_four(&nf.t_part(), without_one(hint).as_ref())?;
    let (u, v) = nf.u_part();
    let gu = AffineMap {
        linear: u.clone(),
        translation: v.clone(),
    };
    let h1 = unipotent_strong_reverser(&u, &v)?;
    let h2 = h1.compose(&gu)?;
    let ps = [
        h1,
        h2,
        AffineMap::identity(u.rows()),
        AffineMap::identity(u.rows()),
    ];
    let cinv = nf.conjugator.inverse()?;
    let mut out = Vec::with_capacity(4);
    for (b, p) in bs.iter().zip(&ps) {
        out.push(direct_sum_maps(b, p).conjugate_by(&cinv)?);
    }
    let product = out[0]
        .compose(&out[1])?
        .compose(&out[2])?
        .compose(&out[3])?;
    if product != *g || !out.iter().all(AffineMap::is_involution) {
        return Err(Error::WitnessConstructionFailed(
            "four-involution factorization failed its check".into(),
        ));
    }
    Ok(out.try_into().expect("four factors"))
}
