use num_bigint::BigInt;
use num_rational::BigRational;
use picard_core::random::{random_stabilizer_word, random_word_up_to, sample_rng};
use picard_core::{
    dilation_matrix, involution, rotation_matrix, translation_matrix, translation_to, units,
    HeisPoint, Matrix3, QuadRat, RingTag, Word,
};
use proptest::prelude::*;

fn tag() -> impl Strategy<Value = RingTag> {
    prop::sample::select(RingTag::ALL.to_vec())
}

fn word() -> impl Strategy<Value = Word> {
    (tag(), any::<u64>(), any::<u64>())
        .prop_map(|(t, seed, i)| random_word_up_to(t, 30, &mut sample_rng(seed, i)))
}

fn rational(lo: i64, hi: i64) -> impl Strategy<Value = BigRational> {
    (lo..hi, 1i64..8).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn heis_point(t: RingTag) -> impl Strategy<Value = HeisPoint> {
    (rational(-40, 40), rational(-40, 40), rational(-200, 200))
        .prop_map(move |(a, b, k)| HeisPoint::new(QuadRat::from_omega_basis(a, b, t), k))
}

fn heis_pair() -> impl Strategy<Value = (HeisPoint, HeisPoint)> {
    tag().prop_flat_map(|t| (heis_point(t), heis_point(t)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn generator_products_are_picard(w in word()) {
        let g = w.evaluate();
        prop_assert!(g.is_picard());
        prop_assert!((&g * &g.inverse().unwrap()).is_identity());
        prop_assert!((&w.inverse().evaluate() * &g).is_identity());
    }

    #[test]
    fn boundary_image_and_rigidity(w in word()) {
        let g = w.evaluate();
        let image = g.boundary_image().unwrap();
        prop_assert_eq!(image.is_infinity(), g.fixes_infinity());
        prop_assert!(image.on_boundary());
        if g.get(2, 0).is_zero() {
            prop_assert!(g.get(1, 0).is_zero());
        }
    }

    #[test]
    fn stabilizer_words_have_null_first_column(t in tag(), seed in any::<u64>(), len in 1usize..25) {
        let g = random_stabilizer_word(t, len, &mut sample_rng(seed, 0)).evaluate();
        prop_assert!(g.fixes_infinity());
        prop_assert!(g.get(1, 0).is_zero());
    }

    #[test]
    fn projective_equality_is_an_equivalence(w in word(), i in 0usize..6, j in 0usize..6) {
        let g = w.evaluate();
        let us = units(g.tag());
        let u = &us[i % us.len()];
        let v = &us[j % us.len()];
        let ug = g.scale(u);
        let vug = ug.scale(v);
        prop_assert!(g.projective_eq(&g));
        prop_assert!(g.projective_eq(&ug) && ug.projective_eq(&g));
        prop_assert!(ug.projective_eq(&vug) && g.projective_eq(&vug));
        let two = QuadRat::from_ints(2, 0, g.tag());
        prop_assert!(!g.projective_eq(&g.scale(&two)));
    }

    #[test]
    fn heisenberg_law_matches_matrices((p, q) in heis_pair()) {
        let pq = p.compose(&q).unwrap();
        prop_assert_eq!(
            translation_matrix(&pq),
            &translation_matrix(&p) * &translation_matrix(&q)
        );
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        let twisted = (p.z.clone() * q.z.conj()).im().clone() != BigRational::from_integer(0.into());
        if twisted {
            prop_assert_ne!(pq, q.compose(&p).unwrap());
        }
    }

    #[test]
    fn translations_return_to_their_point(p in tag().prop_flat_map(heis_point)) {
        let n = translation_matrix(&p);
        prop_assert!(n.is_unitary());
        prop_assert!(n.boundary_image().unwrap().is_infinity());
        let back = translation_to(&(&n * &involution(p.tag())).boundary_image().unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn model_matrices_are_unitary(t in tag(), lambda in rational(1, 50), a in rational(-5, 5)) {
        prop_assert!(dilation_matrix(&lambda, t).unwrap().is_unitary());
        prop_assert!(involution(t).is_unitary());
        for u in units(t) {
            prop_assert!(rotation_matrix(&u).unwrap().is_unitary());
        }
        // (a + i√d)/(a - i√d) has absolute value 1.
        let num = QuadRat::new(a.clone(), BigRational::from_integer(1.into()), t);
        let beta = num.checked_div(&num.conj()).unwrap();
        prop_assert!(rotation_matrix(&beta).unwrap().is_unitary());
    }
}

#[test]
fn identity_is_picard() {
    for t in RingTag::ALL {
        assert!(Matrix3::identity(t).is_picard());
    }
}
