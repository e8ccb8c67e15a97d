use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use picard_core::{nearest_candidates, QuadInt, QuadRat, RingTag};
use proptest::prelude::*;

/// Independent complex-float model of `a + b·ω_d`.
fn to_complex(x: &QuadInt) -> (f64, f64) {
    let d = x.tag().d() as f64;
    let (a, b) = (x.a().to_f64().unwrap(), x.b().to_f64().unwrap());
    (a - b / 2.0, b * d.sqrt() / 2.0)
}

fn cmul((a, b): (f64, f64), (c, d): (f64, f64)) -> (f64, f64) {
    (a * c - b * d, a * d + b * c)
}

fn close((a, b): (f64, f64), (c, d): (f64, f64)) -> bool {
    let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs()).max(1.0);
    (a - c).abs() <= 1e-9 * scale && (b - d).abs() <= 1e-9 * scale
}

fn tag() -> impl Strategy<Value = RingTag> {
    prop::sample::select(RingTag::ALL.to_vec())
}

fn quad_int(tag: RingTag) -> impl Strategy<Value = QuadInt> {
    (-1_000_000i64..1_000_000, -1_000_000i64..1_000_000)
        .prop_map(move |(a, b)| QuadInt::new(a, b, tag))
}

fn pair() -> impl Strategy<Value = (QuadInt, QuadInt)> {
    tag().prop_flat_map(|t| (quad_int(t), quad_int(t)))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-10_000i64..10_000, 1i64..200).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn embedding_matches_complex_arithmetic((x, y) in pair()) {
        let sum = (&x + &y).to_rat();
        let prod = (&x * &y).to_rat();
        prop_assert_eq!(&sum, &(&x.to_rat() + &y.to_rat()));
        prop_assert_eq!(&prod, &(&x.to_rat() * &y.to_rat()));

        let (cx, cy) = (to_complex(&x), to_complex(&y));
        prop_assert!(close(to_complex(&(&x + &y)), (cx.0 + cy.0, cx.1 + cy.1)));
        prop_assert!(close(to_complex(&(&x * &y)), cmul(cx, cy)));
    }

    #[test]
    fn conjugation_and_norm((x, y) in pair()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        let n = x.norm();
        prop_assert!(!n.is_negative());
        prop_assert_eq!(BigRational::from_integer(n), x.to_rat().norm());
        prop_assert_eq!(&x * &x.conj(), QuadInt::new(x.norm(), 0, x.tag()));
    }

    #[test]
    fn candidate_window_covers_the_box(t in tag(), re in rational(), im in rational(), radius in 1u32..4) {
        let target = QuadRat::new(re, im, t);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
        let cands = nearest_candidates(&target, radius);
        prop_assert_eq!(cands.len(), ((2 * radius + 1) * (2 * radius + 1)) as usize);
        let hit = cands.iter().any(|c| {
            let c = c.to_rat();
            (c.re() - target.re()).abs() <= half && (c.im() - target.im()).abs() <= quarter
        });
        prop_assert!(hit, "no candidate near {}", target);
    }
}
