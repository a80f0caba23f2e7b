//! Worked examples through the public API.

use reversal_core::affine::{
    aff_classify, aff_reverser, aff_strong_reverser, four_involutions, normal_form, theta_embed,
    AffineMap,
};
use reversal_core::jordan::{
    assemble, char_poly, compute_jordan_form, conjugate_real_pair, find_spectrum, jordan_block,
    JordanBlock, JordanForm,
};
use reversal_core::matrices::{det_trace_h, phi, psi};
use reversal_core::oracle::{
    omega_recurrence, reversible_oracle, verify_involution, verify_reverser,
};
use reversal_core::reversibility::{
    analyze, classify, omega, omega_real, omega_real_of, reversing_symmetry, two_involutions, Mode,
    Verdict,
};
use reversal_core::scalars::{int, rat};
use reversal_core::{Error, Gaussian, Matrix, Quaternion, Rational};

fn m(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_ints(rows)
}

fn q(w: i64, x: i64, y: i64, z: i64) -> Quaternion {
    Quaternion::from_components(int(w), int(x), int(y), int(z))
}

fn qdiag(x: Quaternion) -> Matrix<Quaternion> {
    Matrix::diagonal(&[x])
}

fn diag(d: &[Rational]) -> Matrix<Rational> {
    Matrix::diagonal(d)
}

#[test]
fn quaternion_arithmetic() {
    assert_eq!(&Quaternion::i() * &Quaternion::j(), Quaternion::k());
    let z = Quaternion::from(Gaussian::new(int(2), int(3)));
    let zbar = Quaternion::from(Gaussian::new(int(2), int(-3)));
    assert_eq!(&Quaternion::j() * &z, &zbar * &Quaternion::j());
    assert_eq!(
        q(1, 1, 1, 1).inverse().unwrap(),
        Quaternion::from_components(rat(1, 4), rat(-1, 4), rat(-1, 4), rat(-1, 4))
    );
    assert_eq!(Quaternion::k().norm(), int(1));
}

#[test]
fn inverses_and_ranks() {
    assert_eq!(
        jordan_block(&int(1), 3).inverse().unwrap(),
        m(&[&[1, -1, 1], &[0, 1, -1], &[0, 0, 1]])
    );
    assert_eq!(
        qdiag(Quaternion::i()).inverse().unwrap(),
        qdiag(-Quaternion::i())
    );
    assert_eq!(jordan_block(&int(0), 4).rank(), 3);
    let sol = m(&[&[0, -1], &[0, 0]]).solve(&[int(5), int(0)]).unwrap();
    assert_eq!(sol.particular, Some(vec![int(0), int(-5)]));
    assert_eq!(sol.kernel, vec![vec![int(1), int(0)]]);
    assert!(
        !m(&[&[0, 0], &[0, 0]])
            .solve(&[int(1), int(0)])
            .unwrap()
            .consistent
    );
}

#[test]
fn embeddings() {
    let phi_j = phi(&qdiag(Quaternion::j()));
    assert_eq!(phi_j, Matrix::from_ints(&[&[0, 1], &[-1, 0]]));
    assert_eq!(
        &phi(&qdiag(Quaternion::i())) * &phi_j,
        phi(&qdiag(Quaternion::k()))
    );
    assert_eq!(
        psi(&Matrix::diagonal(&[Gaussian::i()])),
        m(&[&[0, 1], &[-1, 0]])
    );
    assert_eq!(
        det_trace_h(&qdiag(Quaternion::j())).unwrap(),
        (int(1), int(0))
    );
    assert_eq!(
        det_trace_h(&qdiag(q(2, 0, 0, 0))).unwrap(),
        (int(4), int(4))
    );
    assert_eq!(
        jordan_block(&int(0), 3).nilpotent_exp().unwrap(),
        Matrix::from_rows(vec![
            vec![int(1), int(1), rat(1, 2)],
            vec![int(0), int(1), int(1)],
            vec![int(0), int(0), int(1)],
        ])
        .unwrap()
    );
}

#[test]
fn spectra_and_forms() {
    assert_eq!(
        char_poly(&qdiag(Quaternion::j())).unwrap().to_string(),
        "x^2 + 1"
    );
    let s = find_spectrum(&qdiag(Quaternion::j()), None).unwrap();
    assert_eq!(s.eigenvalues, vec![(Gaussian::i(), 1)]);
    assert!(matches!(
        find_spectrum(&m(&[&[0, -2], &[1, 0]]), None),
        Err(Error::SpectrumNotSupported { .. })
    ));
    let f = compute_jordan_form(&m(&[&[0, -1], &[1, 0]]), None).unwrap();
    assert_eq!(
        f.blocks,
        vec![JordanBlock::RealPair {
            mu: int(0),
            nu: int(1),
            half_size: 1
        }]
    );
    assert_eq!(f.j, m(&[&[0, 1], &[-1, 0]]));
    let a = qdiag(Quaternion::j());
    let f = compute_jordan_form(&a, None).unwrap();
    assert_eq!(f.j, qdiag(Quaternion::i()));
    assert!(f.certifies(&a));
    let a = m(&[&[1, 0], &[1, 1]]);
    let f = compute_jordan_form(&a, None).unwrap();
    assert_eq!(f.j, jordan_block(&int(1), 2));
    assert!(f.certifies(&a));
    let std = |l: i64, size| JordanBlock::Standard {
        lambda: Gaussian::from(int(l)),
        size,
    };
    assert_eq!(
        assemble::<Rational>(&[std(1, 2)]).unwrap(),
        jordan_block(&int(1), 2)
    );
    let pair = JordanBlock::RealPair {
        mu: int(0),
        nu: int(1),
        half_size: 1,
    };
    assert_eq!(conjugate_real_pair(&pair).unwrap(), m(&[&[0, -1], &[1, 0]]));
}

#[test]
fn lie_classification() {
    let r = analyze(&jordan_block(&int(0), 3), Mode::Lie, None).unwrap();
    assert_eq!(r.real, Verdict::Yes);
    let r = analyze(&jordan_block(&Gaussian::zero(), 5), Mode::Lie, None).unwrap();
    let w = r.witness.unwrap();
    assert!(w.is_involution);
    let expected: Vec<Gaussian> = (0..5)
        .map(|i| Gaussian::from(int(if i % 2 == 0 { 1 } else { -1 })))
        .collect();
    assert_eq!(w.element, Matrix::diagonal(&expected));
    let r = analyze(&qdiag(Quaternion::i()), Mode::Lie, None).unwrap();
    assert_eq!((r.real, r.strong), (Verdict::Yes, Verdict::No));
    let i2 = jordan_block(&Quaternion::i(), 2);
    let r = analyze(&i2.direct_sum(&i2), Mode::Lie, None).unwrap();
    assert_eq!(r.strong, Verdict::Yes);
    let r = analyze(&diag(&[int(3), int(-3)]), Mode::Lie, None).unwrap();
    assert_eq!(r.witness.unwrap().element, m(&[&[0, 1], &[1, 0]]));
    let pair = JordanForm::<Rational>::from_blocks(vec![JordanBlock::RealPair {
        mu: int(0),
        nu: int(1),
        half_size: 1,
    }])
    .unwrap();
    let r = classify(&pair.j, &pair, Mode::Lie).unwrap();
    assert_eq!(r.witness.unwrap().element, m(&[&[1, 0], &[0, -1]]));
}

#[test]
fn group_classification() {
    let r = analyze(&diag(&[int(2), rat(1, 2)]), Mode::Group, None).unwrap();
    assert_eq!(r.pairing.pairs(), vec![(0, 1)]);
    assert_eq!(
        analyze(&diag(&[int(3)]), Mode::Group, None).unwrap().real,
        Verdict::No
    );
    assert_eq!(
        analyze(&jordan_block(&int(1), 4), Mode::Group, None)
            .unwrap()
            .strong,
        Verdict::Yes
    );
    let i3 = jordan_block(&Quaternion::i(), 3);
    assert_eq!(
        analyze(&i3.direct_sum(&i3), Mode::Group, None)
            .unwrap()
            .strong,
        Verdict::Yes
    );
    let r = analyze(&jordan_block(&int(1), 3), Mode::Group, None).unwrap();
    let w = r.witness.unwrap();
    assert_eq!(w.element, m(&[&[-1, -1, 0], &[0, 1, 0], &[0, 0, -1]]));
    assert!(w.is_involution);
}

#[test]
fn omega_examples() {
    assert_eq!(omega(&int(1), 2).unwrap(), m(&[&[1, 0], &[0, -1]]));
    assert!((&omega(&int(2), 5).unwrap() * &omega(&rat(1, 2), 5).unwrap()).is_identity());
    assert_eq!(omega_recurrence(&int(1), 1).unwrap(), m(&[&[-1]]));
    assert_eq!(
        omega_recurrence(&int(2), 3).unwrap(),
        omega(&int(2), 3).unwrap()
    );
    assert!(verify_involution(&omega(&int(-1), 4).unwrap()).holds);
    assert!(omega_real(&rat(3, 5), &rat(4, 5), 1).unwrap().is_identity());
    let k = omega_real(&int(1), &int(1), 2).unwrap();
    let kinv = omega_real_of(&Gaussian::new(int(1), int(1)).inverse().unwrap(), 2).unwrap();
    assert!((&k * &kinv).is_identity());
    let z = Gaussian::new(int(2), int(3));
    assert_eq!(
        omega_real(&int(2), &int(3), 3).unwrap(),
        psi(&omega(&z, 3).unwrap().map(|x| -x))
    );
}

#[test]
fn factorizations_and_symmetry() {
    let a = jordan_block(&int(1), 2);
    let f = compute_jordan_form(&a, None).unwrap();
    let [g1, g2] = two_involutions(&a, &f).unwrap();
    assert_eq!(g1.element, m(&[&[1, 0], &[0, -1]]));
    assert_eq!(g2.element, m(&[&[1, 1], &[0, -1]]));
    let i3 = Matrix::<Rational>::identity(3);
    let [g1, g2] = two_involutions(&i3, &compute_jordan_form(&i3, None).unwrap()).unwrap();
    assert_eq!((g1.element, g2.element), (i3.clone(), i3));
    let s = reversing_symmetry(
        &Matrix::<Rational>::identity(2),
        &compute_jordan_form(&Matrix::identity(2), None).unwrap(),
    )
    .unwrap();
    assert_eq!((s.index, s.reverser), (1, Some(Matrix::identity(2))));
    let a = jordan_block(&int(1), 3);
    let s = reversing_symmetry(&a, &compute_jordan_form(&a, None).unwrap()).unwrap();
    assert_eq!(s.index, 2);
    assert!(verify_reverser(&a, &s.reverser.unwrap()).holds);
    let a = diag(&[int(3)]);
    assert!(
        !reversing_symmetry(&a, &compute_jordan_form(&a, None).unwrap())
            .unwrap()
            .reversible
    );
}

#[test]
fn oracle_examples() {
    assert!(verify_reverser(&jordan_block(&int(1), 3), &omega(&int(1), 3).unwrap()).holds);
    let v = verify_reverser(&diag(&[int(3)]), &diag(&[int(1)]));
    assert!(!v.holds && v.counterexample.is_some());
    assert!(verify_reverser(&qdiag(Quaternion::i()), &qdiag(Quaternion::j())).holds);
    assert!(!verify_involution(&jordan_block(&int(1), 2)).holds);
    assert!(reversible_oracle(&jordan_block(&int(1), 4)).unwrap().holds);
    assert!(!reversible_oracle(&diag(&[int(3)])).unwrap().holds);
}

fn aff(a: Matrix<Rational>, v: &[i64]) -> AffineMap<Rational> {
    AffineMap::new(a, v.iter().map(|&x| int(x)).collect()).unwrap()
}

#[test]
fn affine_examples() {
    let v = aff(Matrix::identity(2), &[4, -7]);
    let minus = aff(diag(&[int(-1), int(-1)]), &[0, 0]);
    assert_eq!(
        minus
            .compose(&aff(diag(&[int(-1), int(-1)]), &[-4, 7]))
            .unwrap(),
        v
    );
    let g = aff(diag(&[int(2)]), &[3]);
    assert_eq!(
        g.inverse().unwrap(),
        AffineMap::new(diag(&[rat(1, 2)]), vec![rat(-3, 2)]).unwrap()
    );
    assert_eq!(
        theta_embed(&aff(diag(&[int(1)]), &[5])),
        m(&[&[1, 5], &[0, 1]])
    );

    let nf = normal_form(&g).unwrap();
    assert_eq!(nf.result, aff(diag(&[int(2)]), &[0]));
    assert_eq!(nf.conjugator, aff(diag(&[int(1)]), &[3]));
    let nf = normal_form(&aff(diag(&[int(2), int(1)]), &[1, 7])).unwrap();
    assert_eq!(nf.result.translation, vec![int(0), int(7)]);

    assert_eq!(aff_classify(&v, None).unwrap().strong, Verdict::Yes);
    assert_eq!(
        aff_classify(&aff(diag(&[int(3)]), &[0]), None)
            .unwrap()
            .real,
        Verdict::No
    );
    let hq = AffineMap::new(qdiag(Quaternion::i()), vec![Quaternion::zero()]).unwrap();
    let r = aff_classify(&hq, None).unwrap();
    assert_eq!((r.real, r.strong), (Verdict::Yes, Verdict::No));

    let h = aff_reverser(&aff(jordan_block(&int(1), 2), &[3, 10]), None)
        .unwrap()
        .element;
    assert_eq!(h, aff(m(&[&[1, 0], &[0, -1]]), &[0, 4]));
    assert!(matches!(
        aff_reverser(&aff(diag(&[int(2)]), &[0]), None),
        Err(Error::NotReversible(_))
    ));
    let h = aff_strong_reverser(&v, None).unwrap().element;
    assert_eq!(h, minus);

    let f = four_involutions(&v, None).unwrap();
    assert_eq!(f[0], minus);
    assert_eq!(f[1], aff(diag(&[int(-1), int(-1)]), &[-4, 7]));
    assert!(f[2].is_identity() && f[3].is_identity());
    let f = four_involutions(&aff(diag(&[int(2), rat(1, 2)]), &[0, 0]), None).unwrap();
    assert_eq!(f[0].linear, m(&[&[0, 1], &[1, 0]]));
    assert_eq!(
        f[1].linear,
        Matrix::from_rows(vec![vec![int(0), rat(1, 2)], vec![int(2), int(0)]]).unwrap()
    );
    assert!(f[2].is_identity() && f[3].is_identity());
}
