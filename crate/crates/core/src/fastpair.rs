//! Polynomial-time stability test for two undirected stochastic matrices.
//!
//! For `{A₁, A₂}` stochastic with symmetric positivity patterns, every
//! switching sequence converges to consensus iff the three periodic
//! sequences `A₁A₁…`, `A₂A₂…` and `A₁A₂A₁A₂…` do. Convergence of the powers
//! of a stochastic matrix is decided combinatorially: its positivity digraph
//! must have a single closed communicating class, and that class must be
//! aperiodic.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FastPairError {
    #[error("matrix is not stochastic (needs nonnegative entries and unit row sums)")]
    NotStochastic,
    #[error("matrix {0} is not undirected stochastic; use the face-graph path")]
    NotUndirected(usize),
    #[error("matrices have different dimensions")]
    DimensionMismatch,
}

/// Positivity pattern of a stochastic matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StochasticPattern {
    n: usize,
    adjacency: Vec<bool>,
}

pub fn is_stochastic(a: &RationalMatrix) -> bool {
    a.rows()
        .all(|r| r.iter().all(|v| *v >= Rational::zero()) && r.iter().sum::<Rational>().is_one())
}

impl StochasticPattern {
    pub fn from_matrix(a: &RationalMatrix) -> Result<Self, FastPairError> {
        if !is_stochastic(a) {
            return Err(FastPairError::NotStochastic);
        }
        let n = a.dim();
        let adjacency = (0..n * n).map(|k| !a.get(k / n, k % n).is_zero()).collect();
        Ok(StochasticPattern { n, adjacency })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.has_edge(i, j) == self.has_edge(j, i)))
    }

    fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.has_edge(i, j))
    }

    fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.successors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Closed communicating classes: sets that reach nothing outside themselves.
    pub fn closed_classes(&self) -> Vec<Vec<usize>> {
        let reach: Vec<Vec<bool>> = (0..self.n).map(|i| self.reachable_from(i)).collect();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.n {
            // i is in a closed class iff everything it reaches reaches it back
            let closed = (0..self.n).all(|j| !reach[i][j] || reach[j][i]);
            if closed && !classes.iter().any(|c| c.contains(&i)) {
                classes.push((0..self.n).filter(|&j| reach[i][j]).collect());
            }
        }
        classes
    }

    /// Period of a strongly connected class: gcd of `level(u) + 1 − level(v)`
    /// over edges `u → v` inside the class, with breadth-first levels.
    pub fn period(&self, class: &[usize]) -> usize {
        let inside = |v: usize| class.contains(&v);
        let mut level = vec![usize::MAX; self.n];
        level[class[0]] = 0;
        let mut queue = VecDeque::from([class[0]]);
        let mut g = 0usize;
        while let Some(u) = queue.pop_front() {
            for v in self.successors(u).filter(|&v| inside(v)) {
                if level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                } else {
                    g = g.gcd(&(level[u] + 1).abs_diff(level[v]));
                }
            }
        }
        g
    }
}

/// Nonnegative, rows sum to 1, and `a_ij > 0 ⇔ a_ji > 0`.
pub fn is_undirected_stochastic(a: &RationalMatrix) -> bool {
    StochasticPattern::from_matrix(a).is_ok_and(|p| p.is_symmetric())
}

/// True iff every diagonal entry of `a²` is positive.
pub fn square_has_positive_diagonal(a: &RationalMatrix) -> bool {
    let n = a.dim();
    (0..n).all(|i| {
        let d: Rational = (0..n).map(|k| a.get(i, k) * a.get(k, i)).sum();
        d > Rational::zero()
    })
}

/// True iff `bᵗx` tends to a consensus state for every `x`.
pub fn power_converges_to_consensus(b: &RationalMatrix) -> Result<bool, FastPairError> {
    let p = StochasticPattern::from_matrix(b)?;
    let classes = p.closed_classes();
    Ok(classes.len() == 1 && p.period(&classes[0]) == 1)
}

/// The three periodic sequences whose convergence decides the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestSequence {
    /// `A₁, A₁, …`
    FirstOnly,
    /// `A₂, A₂, …`
    SecondOnly,
    /// `A₁, A₂, A₁, A₂, …`, whose period product is `A₂·A₁`.
    Alternating,
}

impl fmt::Display for TestSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TestSequence::FirstOnly => "sigma1",
            TestSequence::SecondOnly => "sigma2",
            TestSequence::Alternating => "sigma3",
        })
    }
}

/// Outcome of the two-matrix test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    pub answer: bool,
    /// First sequence (in the order σ1, σ2, σ3) that fails to converge.
    pub failing: Option<TestSequence>,
}

/// Decides asymptotic stability of `{a1, a2}` without building the face graph.
pub fn decide_two_undirected(
    a1: &RationalMatrix,
    a2: &RationalMatrix,
) -> Result<PairVerdict, FastPairError> {
    if a1.dim() != a2.dim() {
        return Err(FastPairError::DimensionMismatch);
    }
    for (i, a) in [a1, a2].into_iter().enumerate() {
        if !is_undirected_stochastic(a) {
            return Err(FastPairError::NotUndirected(i));
        }
    }
    let product = a2.mul(a1).expect("dimensions checked");
    let checks = [
        (TestSequence::FirstOnly, a1),
        (TestSequence::SecondOnly, a2),
        (TestSequence::Alternating, &product),
    ];
    for (seq, b) in checks {
        if !power_converges_to_consensus(b)? {
            return Ok(PairVerdict {
                answer: false,
                failing: Some(seq),
            });
        }
    }
    Ok(PairVerdict {
        answer: true,
        failing: None,
    })
}
