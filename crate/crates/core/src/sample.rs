//! Random systems for property tests and benchmarks.
//!
//! Entries use small denominators so exact arithmetic stays cheap.

use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactnum::{dobrushin_seminorm, frac, int, Rational, RationalMatrix, SwitchedSystem};

fn normalize(weights: Vec<Vec<i64>>) -> RationalMatrix {
    let rows = weights
        .into_iter()
        .map(|r| {
            let total: i64 = r.iter().sum();
            r.into_iter().map(|w| frac(w, total)).collect()
        })
        .collect();
    RationalMatrix::from_rows(rows).expect("square by construction")
}

/// Stochastic matrix whose rows each have between 1 and `max_support`
/// positive entries with integer weights in `1..=3`.
pub fn random_stochastic<R: Rng + ?Sized>(rng: &mut R, n: usize, max_support: usize) -> RationalMatrix {
    let cols: Vec<usize> = (0..n).collect();
    let weights = (0..n)
        .map(|_| {
            let k = rng.gen_range(1..=max_support.clamp(1, n));
            let mut row = vec![0i64; n];
            for &j in cols.choose_multiple(rng, k) {
                row[j] = rng.gen_range(1..=3);
            }
            row
        })
        .collect();
    normalize(weights)
}

/// A matrix with `A·1 = 1`, possibly with negative entries, satisfying the
/// weak Lyapunov assumption: a stochastic matrix plus a zero-row-sum
/// perturbation, halved until the induced seminorm is at most 1. Falls back
/// to the stochastic part when six halvings are not enough.
pub fn random_signed<R: Rng + ?Sized>(rng: &mut R, n: usize) -> RationalMatrix {
    let base = random_stochastic(rng, n, n);
    let mut pert: Vec<Vec<Rational>> = (0..n)
        .map(|_| {
            let mut r: Vec<Rational> = (0..n - 1).map(|_| frac(rng.gen_range(-2..=2), 2)).collect();
            let last = -r.iter().sum::<Rational>();
            r.push(last);
            r.shuffle(rng);
            r
        })
        .collect();
    for _ in 0..=6 {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| base.get(i, j) + &pert[i][j]).collect())
            .collect();
        let m = RationalMatrix::from_rows(rows).expect("square");
        if dobrushin_seminorm(&m).expect("rows sum to one") <= Rational::one() {
            return m;
        }
        pert.iter_mut()
            .flatten()
            .for_each(|v| *v /= int(2));
    }
    base
}

/// Stochastic matrix with a symmetric positivity pattern.
pub fn random_undirected_stochastic<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_prob: f64) -> RationalMatrix {
    let mut support = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i..n {
            if rng.gen_bool(edge_prob) {
                support[i][j] = true;
                support[j][i] = true;
            }
        }
    }
    // every row needs at least one positive entry
    for i in 0..n {
        if !support[i].iter().any(|&b| b) {
            let j = rng.gen_range(0..n);
            support[i][j] = true;
            support[j][i] = true;
        }
    }
    let weights = support
        .iter()
        .map(|r| r.iter().map(|&b| if b { rng.gen_range(1..=3) } else { 0 }).collect())
        .collect();
    normalize(weights)
}

/// System of `m` matrices; each is signed with probability `signed_prob`,
/// otherwise a sparse stochastic matrix.
pub fn random_system<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, signed_prob: f64) -> SwitchedSystem {
    let matrices = (0..m)
        .map(|_| {
            if rng.gen_bool(signed_prob) {
                random_signed(rng, n)
            } else {
                let support = rng.gen_range(1..=n);
                random_stochastic(rng, n, support)
            }
        })
        .collect();
    SwitchedSystem::new(matrices).expect("generators satisfy the standing assumptions")
}

/// A random point of the open face with sign vector `signs` (not canonicalized),
/// shifted by a random multiple of `1`.
pub fn random_point_in_face<R: Rng + ?Sized>(rng: &mut R, signs: &[i8]) -> Vec<Rational> {
    let shift = frac(rng.gen_range(-20..=20), rng.gen_range(1..=7));
    signs
        .iter()
        .map(|&s| {
            let base = match s {
                1 => Rational::one(),
                -1 => -Rational::one(),
                // strictly inside (-1, 1)
                _ => {
                    let d = rng.gen_range(2..=16);
                    frac(rng.gen_range(-(d - 1)..=d - 1), d)
                }
            };
            base + &shift
        })
        .collect()
}
