use consensus_faces::exactnum::frac;
use consensus_faces::faces::DEFAULT_MAX_N;
use consensus_faces::{classify_point, enumerate_faces, FaceId, Rational};
use proptest::prelude::*;

/// Sign vectors with at least one `+1` and one `−1`, not canonicalized.
fn proper_signs() -> impl Strategy<Value = Vec<i8>> {
    prop::collection::vec(-1i8..=1, 2..7)
        .prop_filter("needs both extremes", |v| v.contains(&1) && v.contains(&-1))
}

/// A point of the open face `signs`, shifted by `c`.
fn boundary_point() -> impl Strategy<Value = (Vec<i8>, Vec<Rational>)> {
    (proper_signs(), -40i64..=40, 1i64..=7).prop_flat_map(|(signs, cp, cq)| {
        let n = signs.len();
        prop::collection::vec((1i64..=15, 2i64..=16), n).prop_map(move |inner| {
            let c = frac(cp, cq);
            let x = signs
                .iter()
                .zip(&inner)
                .map(|(&s, &(p, q))| {
                    let base = match s {
                        0 => frac(p % q, q) * frac(if p % 2 == 0 { 1 } else { -1 }, 1),
                        s => frac(s as i64, 1),
                    };
                    base + &c
                })
                .collect();
            (signs.clone(), x)
        })
    })
}

proptest! {
    #[test]
    fn classification_recovers_the_sign_vector((signs, x) in boundary_point()) {
        prop_assert_eq!(classify_point(&x).unwrap(), FaceId::pair(signs).unwrap());
    }

    #[test]
    fn sign_symmetry((_, x) in boundary_point()) {
        let neg: Vec<Rational> = x.iter().map(|t| -t).collect();
        prop_assert_eq!(classify_point(&neg).unwrap(), classify_point(&x).unwrap());
    }

    #[test]
    fn shift_invariance((_, x) in boundary_point(), p in -100i64..=100, q in 1i64..=9) {
        let c = frac(p, q);
        let shifted: Vec<Rational> = x.iter().map(|t| t + &c).collect();
        prop_assert_eq!(classify_point(&shifted).unwrap(), classify_point(&x).unwrap());
    }

    #[test]
    fn text_form_round_trips(signs in proper_signs()) {
        let f = FaceId::pair(signs).unwrap();
        prop_assert_eq!(f.to_string().parse::<FaceId>().unwrap(), f);
    }
}

#[test]
fn representatives_classify_to_themselves() {
    for n in 2..=7 {
        let (faces, census) = enumerate_faces(n, DEFAULT_MAX_N).unwrap();
        assert_eq!(faces.len() as u128, census.proper_pairs);
        assert_eq!(2 * census.proper_pairs + 1, census.total_faces);
        for f in &faces {
            assert_eq!(&classify_point(&f.representative(n)).unwrap(), f);
        }
        assert!(faces.windows(2).all(|w| w[0] < w[1]));
    }
}
