use consensus_faces::facegraph::INTERIOR_NODE;
use consensus_faces::faces::{proper_pair_count, DEFAULT_MAX_N};
use consensus_faces::sample::{random_point_in_face, random_system};
use consensus_faces::{build_face_graph, classify_point, enumerate_faces, map_face, FaceId, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Two points of the same open face have images in the same open face.
#[test]
fn image_face_does_not_depend_on_the_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut boundary_images = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(1..=3);
        let sys = random_system(&mut rng, n, m, 0.4);
        let (faces, _) = enumerate_faces(n, DEFAULT_MAX_N).unwrap();
        let FaceId::Pair(v) = faces.choose(&mut rng).unwrap() else { unreachable!() };
        let a = sys.matrix(rng.gen_range(0..m));
        let mut signs = v.signs().to_vec();
        if rng.gen_bool(0.5) {
            signs.iter_mut().for_each(|s| *s = -*s);
        }
        let y = random_point_in_face(&mut rng, &signs);
        let z = random_point_in_face(&mut rng, v.signs());
        let fy = classify_point(&a.apply(&y).unwrap()).unwrap();
        let fz = classify_point(&a.apply(&z).unwrap()).unwrap();
        assert_eq!(fy, fz, "{a:?} {y:?} {z:?}");
        assert_eq!(fy, map_face(a, &FaceId::Pair(v.clone())));
        boundary_images += usize::from(!fy.is_interior());
    }
    // the suite must exercise boundary-to-boundary transitions, not only absorption
    assert!(boundary_images > 100, "{boundary_images}");
}

#[test]
fn interior_is_absorbing() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let sys = random_system(&mut rng, n, 2, 0.5);
        for a in sys.matrices() {
            assert_eq!(map_face(a, &FaceId::Interior), FaceId::Interior);
        }
        let g = build_face_graph(&sys).unwrap();
        assert!((0..2).all(|a| g.target(INTERIOR_NODE, a) == INTERIOR_NODE));
    }
}

#[test]
fn opposite_representatives_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..100 {
        let n = rng.gen_range(2..=4);
        let sys = random_system(&mut rng, n, 2, 0.5);
        let (faces, _) = enumerate_faces(n, DEFAULT_MAX_N).unwrap();
        for f in &faces {
            let v = f.representative(n);
            let neg: Vec<Rational> = v.iter().map(|t| -t).collect();
            for a in sys.matrices() {
                let from_v = classify_point(&a.apply(&v).unwrap()).unwrap();
                let from_neg = classify_point(&a.apply(&neg).unwrap()).unwrap();
                assert_eq!(from_v, from_neg);
            }
        }
    }
}

#[test]
fn builds_are_deterministic_and_complete() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..40 {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(1..=3);
        let sys = random_system(&mut rng, n, m, 0.3);
        let g1 = build_face_graph(&sys).unwrap();
        let g2 = build_face_graph(&sys).unwrap();
        assert_eq!(g1.to_dot(), g2.to_dot());
        let big_n = proper_pair_count(n);
        assert_eq!(g1.node_count(), big_n + 1);
        assert_eq!(g1.edge_count(), m * (big_n + 1));
        assert_eq!(g1.edges().count(), g1.edge_count());
        // every edge agrees with a direct classification
        for e in g1.edges() {
            let from = g1.node(e.from);
            let to = g1.node(e.to);
            assert_eq!(&map_face(sys.matrix(e.matrix), from), to);
        }
    }
}
