//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use reversal_core::affine::{aff_classify, aff_strong_reverser, four_involutions, AffineMap};
use reversal_core::jordan::{
    compute_jordan_form, jordan_block, real_pair_block, sigma, sort_canonical, JordanBlock,
    JordanForm,
};
use reversal_core::matrices::{complex_model, det, det_trace_h, phi, psi};
use reversal_core::oracle::{
    omega_recurrence, reversible_oracle, verify_affine_involution, verify_affine_reverser,
    verify_involution, verify_reverser, Generator,
};
use reversal_core::reversibility::{analyze, classify, omega, omega_real, Mode, Verdict};
use reversal_core::scalars::{int, rat};
use reversal_core::{DivisionRing, Error, Gaussian, Matrix, Quaternion, Rational, Ring};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gauss(a: i64, b: i64, c: i64, d: i64) -> Gaussian {
    Gaussian::new(rat(a, b), rat(c, d))
}

fn omega_identities<T: DivisionRing>(lambda: &T, n: usize) -> Result<(), String> {
    let inv = lambda.inverse().unwrap();
    let w = omega(lambda, n).map_err(|e| e.to_string())?;
    let w_inv = omega(&inv, n).map_err(|e| e.to_string())?;
    let j = jordan_block(lambda, n);
    let j_inv_lambda = jordan_block(&inv, n);
    let lhs = &w * &j_inv_lambda;
    let rhs = &j.inverse().unwrap() * &w;
    ensure(lhs == rhs, || format!("Ω({lambda},{n})·J(λ⁻¹) ≠ J(λ)⁻¹·Ω"))?;
    ensure((&w * &w_inv).is_identity(), || {
        format!("Ω({lambda},{n})·Ω(λ⁻¹,{n}) ≠ I")
    })
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for n in 1..=12 {
        for l in [int(2), rat(1, 2), int(-3), rat(5, 7)] {
            omega_identities(&l, n)?;
            checks += 1;
        }
        for l in [gauss(1, 1, 1, 1), gauss(2, 1, -1, 1)] {
            omega_identities(&l, n)?;
            checks += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.2} s"))?;
    Ok(format!("{checks} (λ, n) pairs in {secs:.2} s"))
}

fn criterion_2() -> Outcome {
    let mut checks = 0;
    for n in 1..=12 {
        for l in [int(1), int(-1)] {
            let w = omega(&l, n).unwrap();
            ensure((&w * &w).is_identity(), || format!("Ω({l},{n})² ≠ I"))?;
            checks += 1;
        }
    }
    for (mu, nu) in [
        (rat(3, 5), rat(4, 5)),
        (int(0), int(1)),
        (rat(-3, 5), rat(4, 5)),
    ] {
        for n in 1..=6 {
            let r = &omega_real(&mu, &nu, n).unwrap() * &sigma::<Rational>(n);
            let jr = real_pair_block(&mu, &nu, n);
            ensure(verify_involution(&r).holds, || {
                format!("Ω_ℝ·σ not an involution at ({mu},{nu},{n})")
            })?;
            let v = verify_reverser(&jr, &r);
            ensure(v.holds, || format!("({mu},{nu},{n}): {}", v.describe()))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} exact checks"))
}

fn table_row<T: DivisionRing>(
    gen: &mut Generator,
    name: &str,
    blocks: Vec<JordanBlock>,
) -> Result<(), String> {
    let direct = JordanForm::<T>::from_blocks(blocks.clone()).unwrap();
    let case = gen.conjugate::<T>(blocks);
    for (a, report) in [
        (&direct.j, classify(&direct.j, &direct, Mode::Group)),
        (&case.matrix, analyze(&case.matrix, Mode::Group, None)),
    ] {
        let report = report.map_err(|e| format!("{name}: {e}"))?;
        let w = report
            .witness
            .ok_or_else(|| format!("{name}: no witness"))?;
        let v = verify_reverser(a, &w.element);
        ensure(v.holds, || format!("{name}: {}", v.describe()))?;
        ensure(verify_involution(&w.element).holds, || {
            format!("{name}: not an involution")
        })?;
        ensure(report.strong == Verdict::Yes, || {
            format!("{name}: strong = {}", report.strong)
        })?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut gen = Generator::new(3);
    let std = |l: Gaussian, size| JordanBlock::Standard { lambda: l, size };
    let pair = |mu, nu, half_size| JordanBlock::RealPair { mu, nu, half_size };
    table_row::<Rational>(
        &mut gen,
        "±1 singletons",
        vec![std(gauss(1, 1, 0, 1), 8), std(gauss(-1, 1, 0, 1), 5)],
    )?;
    table_row::<Rational>(
        &mut gen,
        "inverse pair",
        vec![std(gauss(2, 1, 0, 1), 6), std(gauss(1, 2, 0, 1), 6)],
    )?;
    table_row::<Gaussian>(
        &mut gen,
        "inverse pair over C",
        vec![std(gauss(1, 1, 1, 1), 4), std(gauss(1, 2, -1, 2), 4)],
    )?;
    table_row::<Quaternion>(
        &mut gen,
        "quaternion unit pair",
        vec![std(gauss(0, 1, 1, 1), 3), std(gauss(0, 1, 1, 1), 3)],
    )?;
    table_row::<Quaternion>(
        &mut gen,
        "quaternion unit pair 3/5+4/5i",
        vec![std(gauss(3, 5, 4, 5), 4), std(gauss(3, 5, 4, 5), 4)],
    )?;
    table_row::<Rational>(
        &mut gen,
        "unit-circle real pair",
        vec![pair(rat(3, 5), rat(4, 5), 4)],
    )?;
    table_row::<Rational>(
        &mut gen,
        "unit-circle real pair 0±i",
        vec![pair(int(0), int(1), 3)],
    )?;
    table_row::<Rational>(
        &mut gen,
        "real pair inverse",
        vec![pair(int(1), int(1), 3), pair(rat(1, 2), rat(1, 2), 3)],
    )?;
    Ok("five witness families, canonical and conjugated".into())
}

fn criterion_4() -> Outcome {
    let a = Matrix::diagonal(&[Quaternion::from(Gaussian::i())]);
    for mode in [Mode::Group, Mode::Lie] {
        let r = analyze(&a, mode, None).map_err(|e| e.to_string())?;
        ensure(r.real == Verdict::Yes && r.strong == Verdict::No, || {
            format!("(a) 𝐢 in {mode:?}: {} / {}", r.real, r.strong)
        })?;
    }

    let w = omega(&int(1), 6).unwrap();
    ensure(w == omega_recurrence(&int(1), 6).unwrap(), || {
        "(b) closed form ≠ recurrence".into()
    })?;
    let expected = Matrix::<Rational>::from_ints(&[
        &[1, 4, 6, 4, 1, 0],
        &[0, -1, -3, -3, -1, 0],
        &[0, 0, 1, 2, 1, 0],
        &[0, 0, 0, -1, -1, 0],
        &[0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, -1],
    ]);
    ensure(w == expected, || format!("(b) Ω(1,6) = {w}"))?;

    let v: Vec<Rational> = (1..=6).map(int).collect();
    let g = AffineMap::new(jordan_block(&int(1), 6), v).unwrap();
    let h = aff_strong_reverser(&g, None)
        .map_err(|e| format!("(c) {e}"))?
        .element;
    ensure(h.is_involution(), || "(c) h² ≠ id".into())?;
    ensure(verify_affine_reverser(&g, &h).holds, || {
        "(c) h g h⁻¹ ≠ g⁻¹".into()
    })?;

    let i6 = Matrix::<Rational>::identity(6);
    let jinv = jordan_block(&int(1), 6).inverse().unwrap();
    let r1 = (&w + &i6).rank();
    let r2 = (&w + &jinv).rank();
    ensure(r1 == 3 && r2 == 3, || format!("(d) ranks {r1}, {r2}"))?;
    Ok("(a)-(d)".into())
}

fn affine_case<T: DivisionRing>(
    gen: &mut Generator,
    ring: Ring,
    i: usize,
) -> (AffineMap<T>, Matrix<T>) {
    let n = 1 + i % 5;
    let blocks = if i % 2 == 0 {
        gen.reversible_blocks(ring, n, false)
    } else {
        gen.arbitrary_blocks(ring, n)
    };
    let case = gen.conjugate::<T>(blocks);
    let v = gen.vector::<T>(n, 4);
    (AffineMap::new(case.matrix.clone(), v).unwrap(), case.matrix)
}

fn criterion_5_ring<T: DivisionRing>(seed: u64) -> Result<usize, String> {
    let mut gen = Generator::new(seed);
    let mut reversible = 0;
    for i in 0..200 {
        let (g, a) = affine_case::<T>(&mut gen, T::RING, i);
        let aff = aff_classify(&g, None).map_err(|e| format!("{} case {i}: {e}", T::RING))?;
        let lin =
            analyze(&a, Mode::Group, None).map_err(|e| format!("{} case {i}: {e}", T::RING))?;
        ensure(aff.real == lin.real && aff.strong == lin.strong, || {
            format!(
                "{} case {i}: affine {}/{} vs linear {}/{}",
                T::RING,
                aff.real,
                aff.strong,
                lin.real,
                lin.strong
            )
        })?;
        if T::RING != Ring::H {
            ensure(aff.real == aff.strong, || {
                format!("{} case {i}: reversible ≠ strongly", T::RING)
            })?;
        }
        if let Some(w) = &aff.witness {
            ensure(verify_affine_reverser(&g, &w.element).holds, || {
                format!("{} case {i}: bad witness", T::RING)
            })?;
        }
        reversible += usize::from(aff.real == Verdict::Yes);
    }
    Ok(reversible)
}

fn criterion_5() -> Outcome {
    let r = criterion_5_ring::<Rational>(51)?;
    let c = criterion_5_ring::<Gaussian>(52)?;
    let h = criterion_5_ring::<Quaternion>(53)?;
    Ok(format!("600 cases, reversible R/C/H = {r}/{c}/{h}"))
}

/// Inverse of a block computed from its eigenvalue alone.
fn inverse_block(b: &JordanBlock, ring: Ring) -> JordanBlock {
    match b {
        JordanBlock::Standard { lambda, size } => {
            let mut l = lambda.inverse().unwrap();
            if ring == Ring::H && l.im < int(0) {
                l = l.conj();
            }
            JordanBlock::Standard {
                lambda: l,
                size: *size,
            }
        }
        JordanBlock::RealPair { mu, nu, half_size } => {
            let n = mu * mu + nu * nu;
            JordanBlock::RealPair {
                mu: mu / &n,
                nu: nu / &n,
                half_size: *half_size,
            }
        }
    }
}

fn criterion_6_ring<T: DivisionRing>(seed: u64) -> Result<usize, String> {
    let mut gen = Generator::new(seed);
    let mut yes = 0;
    for i in 0..200 {
        let n = 1 + i % 5;
        let blocks = gen.mixed_blocks(T::RING, n);
        let mut sorted = blocks.clone();
        sort_canonical(&mut sorted);
        let mut inverted: Vec<JordanBlock> =
            blocks.iter().map(|b| inverse_block(b, T::RING)).collect();
        sort_canonical(&mut inverted);
        let expected = sorted == inverted;
        let case = gen.conjugate::<T>(blocks);
        let form = compute_jordan_form(&case.matrix, None)
            .map_err(|e| format!("{} case {i}: {e}", T::RING))?;
        let report = classify(&case.matrix, &form, Mode::Group)
            .map_err(|e| format!("{} case {i}: {e}", T::RING))?;
        let oracle = reversible_oracle(&case.matrix).map_err(|e| e.to_string())?;
        let got = report.real == Verdict::Yes;
        ensure(got == oracle.holds && got == expected, || {
            format!(
                "{} case {i}: classifier {got}, oracle {}, blocks {expected}",
                T::RING,
                oracle.holds
            )
        })?;
        yes += usize::from(got);
    }
    Ok(yes)
}

fn criterion_6() -> Outcome {
    let r = criterion_6_ring::<Rational>(61)?;
    let c = criterion_6_ring::<Gaussian>(62)?;
    let h = criterion_6_ring::<Quaternion>(63)?;
    Ok(format!("600 cases, reversible R/C/H = {r}/{c}/{h}"))
}

fn check_four<T: DivisionRing>(g: &AffineMap<T>, f: &[AffineMap<T>; 4]) -> Result<(), String> {
    let mut p = AffineMap::identity(g.dim());
    for h in f {
        ensure(verify_affine_involution(h).holds, || {
            "factor is not an involution".into()
        })?;
        p = p.compose(h).unwrap();
    }
    ensure(p == *g, || "product ≠ g".into())
}

fn unit_det<T: DivisionRing>(a: &Matrix<T>) -> bool {
    if T::RING == Ring::H {
        let q = a.map(|x| x.to_quaternion());
        det_trace_h(&q).map(|(d, _)| d == int(1)).unwrap_or(false)
    } else {
        let d = det(&complex_model(a)).unwrap();
        d == Gaussian::one() || d == Gaussian::one().negated()
    }
}

fn criterion_7_ring<T: DivisionRing>(seed: u64, count: usize) -> Result<(), String> {
    let mut gen = Generator::new(seed);
    for i in 0..count {
        let n = 1 + i % 5;
        let blocks = gen.reversible_blocks(T::RING, n, T::RING == Ring::H);
        let case = gen.conjugate::<T>(blocks);
        ensure(unit_det(&case.matrix), || {
            format!("{} case {i}: generator broke the det condition", T::RING)
        })?;
        let g = AffineMap::new(case.matrix, gen.vector::<T>(n, 4)).unwrap();
        let f = four_involutions(&g, None).map_err(|e| format!("{} case {i}: {e}", T::RING))?;
        check_four(&g, &f).map_err(|e| format!("{} case {i}: {e}", T::RING))?;
    }
    Ok(())
}

fn heuristic_case<T: DivisionRing>(gen: &mut Generator, n: usize) -> Result<bool, String> {
    let blocks = gen.unit_det_blocks(T::RING, n);
    let case = gen.conjugate::<T>(blocks);
    let g = AffineMap::new(case.matrix, gen.vector::<T>(n, 4)).unwrap();
    match four_involutions(&g, None) {
        Ok(f) => check_four(&g, &f).map(|_| true),
        Err(Error::UnsupportedFactorization(_)) => Ok(false),
        Err(e) => Err(format!("heuristic case: unexpected {}: {e}", e.kind())),
    }
}

fn criterion_7() -> Outcome {
    criterion_7_ring::<Rational>(71, 34)?;
    criterion_7_ring::<Gaussian>(72, 33)?;
    criterion_7_ring::<Quaternion>(73, 33)?;
    let mut gen = Generator::new(74);
    let mut found = 0;
    for i in 0..10 {
        let n = 2 + i % 3;
        let ok = if i % 2 == 0 {
            heuristic_case::<Rational>(&mut gen, n)?
        } else {
            heuristic_case::<Gaussian>(&mut gen, n)?
        };
        found += usize::from(ok);
    }
    Ok(format!(
        "100 reversible cases verified; heuristic path {found}/10 verified, rest reported"
    ))
}

fn multiset(mut blocks: Vec<JordanBlock>) -> Vec<JordanBlock> {
    sort_canonical(&mut blocks);
    blocks
}

fn criterion_8_ring<T: DivisionRing>(seed: u64) -> Result<(), String> {
    let mut gen = Generator::new(seed);
    for i in 0..100 {
        let n = 1 + i % 4;
        let blocks = gen.arbitrary_blocks(T::RING, n);
        let case = gen.conjugate::<T>(blocks.clone());
        let form = compute_jordan_form(&case.matrix, None)
            .map_err(|e| format!("{} case {i}: {e}", T::RING))?;
        let sinv = form.s.inverse().map_err(|e| e.to_string())?;
        ensure(&(&form.s * &case.matrix) * &sinv == form.j, || {
            format!("{} case {i}: S·A·S⁻¹ ≠ J", T::RING)
        })?;
        let expected = multiset(blocks);
        ensure(form.blocks == expected, || {
            format!("{} case {i}: blocks differ from construction", T::RING)
        })?;
        for k in 0..20 {
            let (c, cinv) = gen.conjugator::<T>(n);
            let b = &(&cinv * &case.matrix) * &c;
            let f = compute_jordan_form(&b, None)
                .map_err(|e| format!("{} case {i}/{k}: {e}", T::RING))?;
            ensure(f.blocks == expected, || {
                format!("{} case {i}/{k}: blocks changed under conjugation", T::RING)
            })?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    criterion_8_ring::<Rational>(81)?;
    criterion_8_ring::<Gaussian>(82)?;
    criterion_8_ring::<Quaternion>(83)?;
    Ok("300 certified forms, 6000 conjugates".into())
}

fn random_matrix<T: DivisionRing>(gen: &mut Generator, n: usize) -> Matrix<T> {
    Matrix::new(n, n, (0..n * n).map(|_| gen.entry::<T>(3)).collect()).unwrap()
}

fn random_nilpotent<T: DivisionRing>(gen: &mut Generator, n: usize) -> Matrix<T> {
    let mut m = Matrix::<T>::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, gen.entry::<T>(3));
        }
    }
    let (s, sinv) = gen.conjugator::<T>(n);
    &(&sinv * &m) * &s
}

fn criterion_9() -> Outcome {
    let mut gen = Generator::new(9);
    for i in 0..100 {
        let n = 1 + i % 4;
        let (a, b) = (
            random_matrix::<Quaternion>(&mut gen, n),
            random_matrix::<Quaternion>(&mut gen, n),
        );
        ensure(phi(&(&a * &b)) == &phi(&a) * &phi(&b), || {
            format!("Φ case {i}")
        })?;
        let (a, b) = (
            random_matrix::<Gaussian>(&mut gen, n),
            random_matrix::<Gaussian>(&mut gen, n),
        );
        ensure(psi(&(&a * &b)) == &psi(&a) * &psi(&b), || {
            format!("Ψ case {i}")
        })?;
    }
    for i in 0..50 {
        let p = random_nilpotent::<Gaussian>(&mut gen, 1 + i % 5);
        let lhs = psi(&p.nilpotent_exp().unwrap());
        let rhs = psi(&p).nilpotent_exp().unwrap();
        ensure(lhs == rhs, || format!("Ψ(exp P) case {i}"))?;
    }
    Ok("100 Φ and Ψ pairs, 50 nilpotent exponentials".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Ω identity suite", criterion_1),
        ("involution suite", criterion_2),
        ("block witness coverage", criterion_3),
        ("regressions", criterion_4),
        ("affine vs linear classification", criterion_5),
        ("classifier vs oracle", criterion_6),
        ("four-involution suite", criterion_7),
        ("Jordan certificates", criterion_8),
        ("embedding laws", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail}; {secs:.1} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}: {name} ({detail})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
