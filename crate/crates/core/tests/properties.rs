use proptest::prelude::*;

use reversal_core::affine::{aff_exp, theta_embed, AffLieElement, AffineMap};
use reversal_core::jordan::{compute_jordan_form, sort_canonical};
use reversal_core::json::{input_from_value, input_to_value, AnyAffine, Input};
use reversal_core::matrices::{phi, psi, AnyMatrix};
use reversal_core::oracle::{omega_recurrence, Generator};
use reversal_core::reversibility::{analyze, omega, Mode};
use reversal_core::scalars::{rat, Scalar};
use reversal_core::{DivisionRing, Gaussian, Matrix, Quaternion, Rational, Ring};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn gaussian() -> impl Strategy<Value = Gaussian> {
    (rational(), rational()).prop_map(|(a, b)| Gaussian::new(a, b))
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (gaussian(), gaussian()).prop_map(|(a, b)| Quaternion::new(a, b))
}

fn random_matrix<T: DivisionRing>(gen: &mut Generator, n: usize) -> Matrix<T> {
    Matrix::new(n, n, (0..n * n).map(|_| gen.entry::<T>(3)).collect()).unwrap()
}

fn nilpotent<T: DivisionRing>(gen: &mut Generator, n: usize) -> Matrix<T> {
    let mut m = Matrix::<T>::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, gen.entry::<T>(3));
        }
    }
    let (s, sinv) = gen.conjugator::<T>(n);
    &(&sinv * &m) * &s
}

fn rank_nullity<T: DivisionRing>(seed: u64, n: usize) {
    let mut gen = Generator::new(seed);
    let mut a = random_matrix::<T>(&mut gen, n);
    // force some rank deficiency half the time
    if seed % 2 == 0 && n > 1 {
        for j in 0..n {
            let v = a.get(0, j).clone();
            a.set(n - 1, j, v);
        }
    }
    assert_eq!(a.rank() + a.kernel().len(), n);
    for v in a.kernel() {
        assert!(a.mul_vec(&v).unwrap().iter().all(DivisionRing::is_zero));
    }
    if let Ok(inv) = a.inverse() {
        assert_eq!(inv.inverse().unwrap(), a);
        assert!((&a * &inv).is_identity());
    }
}

fn conjugation_invariance<T: DivisionRing>(seed: u64, n: usize) {
    let mut gen = Generator::new(seed);
    let blocks = gen.arbitrary_blocks(T::RING, n);
    let case = gen.conjugate::<T>(blocks.clone());
    let form = compute_jordan_form(&case.matrix, None).unwrap();
    assert!(form.certifies(&case.matrix));
    let mut expected = blocks;
    sort_canonical(&mut expected);
    assert_eq!(form.blocks, expected);
    let (c, cinv) = gen.conjugator::<T>(n);
    let b = &(&cinv * &case.matrix) * &c;
    assert_eq!(compute_jordan_form(&b, None).unwrap().blocks, expected);
}

fn transport_invariance<T: DivisionRing>(seed: u64, n: usize, mode: Mode) {
    let mut gen = Generator::new(seed);
    let blocks = match mode {
        Mode::Group => gen.mixed_blocks(T::RING, n),
        Mode::Lie => gen.arbitrary_blocks(T::RING, n),
    };
    let case = gen.conjugate::<T>(blocks);
    let (c, cinv) = gen.conjugator::<T>(n);
    let b = &(&cinv * &case.matrix) * &c;
    let r1 = analyze(&case.matrix, mode, None).unwrap();
    let r2 = analyze(&b, mode, None).unwrap();
    assert_eq!((r1.real, r1.strong), (r2.real, r2.strong));
    if let Some(w) = r1.witness {
        // a reverser of A transports to one of C⁻¹AC
        let moved = &(&cinv * &w.element) * &c;
        match mode {
            Mode::Group => assert!(reversal_core::oracle::verify_reverser(&b, &moved).holds),
            Mode::Lie => assert!(reversal_core::oracle::verify_ad_reverser(&b, &moved).holds),
        }
    }
}

fn round_trip(input: &Input) {
    let v = input_to_value(input);
    let back = input_from_value(&v).unwrap();
    assert_eq!(&back, input);
    assert_eq!(input_to_value(&back).to_string(), v.to_string());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quaternion_norm_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert_eq!((&p * &q).norm(), p.norm() * q.norm());
    }

    #[test]
    fn j_conjugates_complex_numbers(z in gaussian()) {
        let j = Quaternion::j();
        prop_assert_eq!(&j * &Quaternion::from(z.clone()), &Quaternion::from(z.conj()) * &j);
    }

    #[test]
    fn quaternion_ring_laws(p in quaternion(), q in quaternion(), r in quaternion()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
        if let Some(inv) = p.inverse() {
            prop_assert!((&p * &inv).is_one());
            prop_assert!((&inv * &p).is_one());
        }
    }

    #[test]
    fn literals_round_trip(q in quaternion()) {
        for ring in [Ring::R, Ring::C, Ring::H] {
            if let Ok(s) = Scalar::from_quaternion_in(ring, &q) {
                let text = s.to_string();
                prop_assert_eq!(Scalar::parse(&text, ring).unwrap(), s);
            }
        }
    }

    #[test]
    fn phi_and_psi_are_homomorphisms(seed in any::<u64>(), n in 1usize..4) {
        let mut gen = Generator::new(seed);
        let (a, b) = (random_matrix::<Quaternion>(&mut gen, n), random_matrix::<Quaternion>(&mut gen, n));
        prop_assert_eq!(phi(&(&a * &b)), &phi(&a) * &phi(&b));
        prop_assert_eq!(phi(&(&a + &b)), &phi(&a) + &phi(&b));
        let (a, b) = (random_matrix::<Gaussian>(&mut gen, n), random_matrix::<Gaussian>(&mut gen, n));
        prop_assert_eq!(psi(&(&a * &b)), &psi(&a) * &psi(&b));
        prop_assert_eq!(psi(&(&a + &b)), &psi(&a) + &psi(&b));
    }

    #[test]
    fn embeddings_commute_with_exp(seed in any::<u64>(), n in 1usize..5) {
        let mut gen = Generator::new(seed);
        let p = nilpotent::<Gaussian>(&mut gen, n);
        prop_assert_eq!(psi(&p.nilpotent_exp().unwrap()), psi(&p).nilpotent_exp().unwrap());
        let p = nilpotent::<Quaternion>(&mut gen, n);
        prop_assert_eq!(phi(&p.nilpotent_exp().unwrap()), phi(&p).nilpotent_exp().unwrap());
    }

    #[test]
    fn rank_plus_nullity(seed in any::<u64>(), n in 1usize..5) {
        rank_nullity::<Rational>(seed, n);
        rank_nullity::<Gaussian>(seed, n);
        rank_nullity::<Quaternion>(seed, n);
    }

    #[test]
    fn omega_closed_form_matches_recurrence(l in gaussian(), n in 1usize..8) {
        prop_assume!(!l.is_zero());
        prop_assert_eq!(omega(&l, n).unwrap(), omega_recurrence(&l, n).unwrap());
        let w = omega(&l, n).unwrap();
        prop_assert!((&w * &omega(&l.inverse().unwrap(), n).unwrap()).is_identity());
    }

    #[test]
    fn theta_is_a_homomorphism(seed in any::<u64>(), n in 1usize..4) {
        let mut gen = Generator::new(seed);
        let mk = |gen: &mut Generator| {
            let (s, _) = gen.conjugator::<Quaternion>(n);
            AffineMap::new(s, gen.vector::<Quaternion>(n, 3)).unwrap()
        };
        let (g, h) = (mk(&mut gen), mk(&mut gen));
        prop_assert_eq!(theta_embed(&g.compose(&h).unwrap()), &theta_embed(&g) * &theta_embed(&h));
        prop_assert_eq!(theta_embed(&g.inverse().unwrap()), theta_embed(&g).inverse().unwrap());
    }

    #[test]
    fn rho_respects_brackets(seed in any::<u64>(), n in 1usize..4) {
        let mut gen = Generator::new(seed);
        let mut mk = || AffLieElement::new(random_matrix::<Gaussian>(&mut gen, n), gen.vector::<Gaussian>(n, 3)).unwrap();
        let (x, y) = (mk(), mk());
        let (rx, ry) = (x.rho(), y.rho());
        prop_assert_eq!(x.bracket(&y).rho(), &(&rx * &ry) - &(&ry * &rx));
    }

    #[test]
    fn exp_is_compatible_with_embeddings(seed in any::<u64>(), n in 1usize..5) {
        let mut gen = Generator::new(seed);
        let x = nilpotent::<Rational>(&mut gen, n);
        let e = AffLieElement::new(x, gen.vector::<Rational>(n, 3)).unwrap();
        prop_assert_eq!(theta_embed(&aff_exp(&e).unwrap()), e.rho().nilpotent_exp().unwrap());
    }

    #[test]
    fn wire_format_round_trips(seed in any::<u64>(), n in 1usize..4) {
        let mut gen = Generator::new(seed);
        round_trip(&Input::Matrix(AnyMatrix::R(random_matrix(&mut gen, n))));
        round_trip(&Input::Matrix(AnyMatrix::C(random_matrix(&mut gen, n))));
        round_trip(&Input::Matrix(AnyMatrix::H(random_matrix(&mut gen, n))));
        let (s, _) = gen.conjugator::<Quaternion>(n);
        let g = AffineMap::new(s, gen.vector::<Quaternion>(n, 3)).unwrap();
        round_trip(&Input::Affine(AnyAffine::H(g)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn jordan_form_is_conjugation_invariant(seed in any::<u64>(), n in 1usize..5) {
        conjugation_invariance::<Rational>(seed, n);
        conjugation_invariance::<Gaussian>(seed, n);
        conjugation_invariance::<Quaternion>(seed, n);
    }

    #[test]
    fn classification_is_transport_invariant(seed in any::<u64>(), n in 1usize..5) {
        for mode in [Mode::Group, Mode::Lie] {
            transport_invariance::<Rational>(seed, n, mode);
            transport_invariance::<Gaussian>(seed, n, mode);
            transport_invariance::<Quaternion>(seed, n, mode);
        }
    }
}
