use consensus_faces::exactnum::int;
use consensus_faces::fastpair::{power_converges_to_consensus, square_has_positive_diagonal};
use consensus_faces::sample::{random_stochastic, random_undirected_stochastic};
use consensus_faces::{
    build_face_graph, decide_problem1, decide_two_undirected, dobrushin_seminorm, RationalMatrix, SwitchedSystem,
    TestSequence,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn undirected_squares_have_positive_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..500 {
        let n = rng.gen_range(2..=8);
        let p = rng.gen_range(0.1..0.9);
        let a = random_undirected_stochastic(&mut rng, n, p);
        assert!(square_has_positive_diagonal(&a), "{a:?}");
    }
}

#[test]
fn fast_path_agrees_with_face_graph() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut outcomes = [0usize; 2];
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let p = rng.gen_range(0.15..0.7);
        let a1 = random_undirected_stochastic(&mut rng, n, p);
        let a2 = random_undirected_stochastic(&mut rng, n, p);
        let fast = decide_two_undirected(&a1, &a2).unwrap();
        let sys = SwitchedSystem::new(vec![a1, a2]).unwrap();
        let general = decide_problem1(&build_face_graph(&sys).unwrap());
        assert_eq!(fast.answer, general.answer, "{:?}", sys.matrices());
        assert_eq!(fast.answer, fast.failing.is_none());
        outcomes[usize::from(fast.answer)] += 1;
    }
    assert!(outcomes.iter().all(|&c| c >= 10), "{outcomes:?}");
}

#[test]
fn product_order_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let a1 = random_undirected_stochastic(&mut rng, n, 0.3);
        let a2 = random_undirected_stochastic(&mut rng, n, 0.3);
        let forward = power_converges_to_consensus(&a2.mul(&a1).unwrap()).unwrap();
        let backward = power_converges_to_consensus(&a1.mul(&a2).unwrap()).unwrap();
        assert_eq!(forward, backward);
    }
}

/// `B^64` by repeated squaring.
fn power64(b: &RationalMatrix) -> RationalMatrix {
    (0..6).fold(b.clone(), |acc, _| acc.mul(&acc).unwrap())
}

/// Powers converge to a rank-one limit iff some power contracts the
/// seminorm; otherwise two rows keep disjoint supports and the seminorm
/// stays 1 forever. At n ≤ 4 the pattern settles long before t = 64.
#[test]
fn combinatorial_test_matches_exact_powers() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let mut outcomes = [0usize; 2];
    for _ in 0..400 {
        let n = rng.gen_range(2..=4);
        let support = rng.gen_range(1..=n);
        let b = random_stochastic(&mut rng, n, support);
        let by_powers = dobrushin_seminorm(&power64(&b)).unwrap() < int(1);
        assert_eq!(power_converges_to_consensus(&b).unwrap(), by_powers, "{b:?}");
        outcomes[usize::from(by_powers)] += 1;
    }
    assert!(outcomes.iter().all(|&c| c >= 50), "{outcomes:?}");
}

#[test]
fn failing_sequence_is_reported_in_order() {
    let swap = RationalMatrix::parse(&[&["0", "1"], &["1", "0"]]).unwrap();
    let avg = RationalMatrix::averaging(2);
    let id = RationalMatrix::identity(2);
    assert_eq!(decide_two_undirected(&avg, &swap).unwrap().failing, Some(TestSequence::SecondOnly));
    // the identity never mixes
    let lazy = RationalMatrix::parse(&[&["1/2", "1/2"], &["1/2", "1/2"]]).unwrap();
    assert_eq!(decide_two_undirected(&lazy, &id).unwrap().failing, Some(TestSequence::SecondOnly));
    let p = RationalMatrix::parse(&[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "1"]]).unwrap();
    let q = RationalMatrix::parse(&[&["1", "0", "0"], &["0", "0", "1"], &["0", "1", "0"]]).unwrap();
    let v = decide_two_undirected(&p, &q).unwrap();
    assert_eq!(v.failing, Some(TestSequence::FirstOnly));
}

#[test]
fn fifty_agents_are_decided_quickly() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let a1 = random_undirected_stochastic(&mut rng, 50, 0.08);
    let a2 = random_undirected_stochastic(&mut rng, 50, 0.08);
    let start = std::time::Instant::now();
    let v = decide_two_undirected(&a1, &a2).unwrap();
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert_eq!(v.answer, v.failing.is_none());
}
