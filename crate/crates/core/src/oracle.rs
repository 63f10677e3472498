//! Brute-force checks that never touch the face graph.
//!
//! Every search here applies exact matrix products to face representatives
//! and classifies the resulting points from scratch, so agreement with
//! [`crate::decide`] is a genuine cross-check.
//!
//! Searches enumerate switching words depth-first. Two prunings keep them
//! finite without losing exactness: the interior of `P` is invariant (a word
//! that enters it never leaves), and a path that revisits a face pair already
//! closes a cycle. Work is bounded by a node budget instead of a bound on
//! `m^N`; exceeding it is a capacity error.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::decide::{CycleWitness, Problem, SteeringWitness, Verdict, Witness, Word};
use crate::exactnum::{consensus_seminorm, min_max, NumError, Rational, SwitchedSystem};
use crate::faces::{classify_point, enumerate_faces, proper_pair_count, FaceError, FaceId};

/// Default number of search nodes an oracle may expand.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Largest dimension the oracle accepts regardless of budget.
pub const MAX_ORACLE_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search exceeded {budget} nodes; use the face-graph path for this system")]
    Budget { budget: u64 },
    #[error("n = {n} is too large for brute-force enumeration (limit {limit})")]
    Dimension { n: usize, limit: usize },
    #[error("the system is not asymptotically stable: some face stays on the boundary for {horizon} steps")]
    NotContracting { horizon: usize },
    #[error("switching word is empty")]
    EmptyWord,
    #[error("letter {letter} is not a matrix index (m = {m})")]
    BadLetter { letter: usize, m: usize },
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Face(#[from] FaceError),
}

struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    fn spend(&mut self) -> Result<(), OracleError> {
        self.used += 1;
        if self.used > self.limit {
            return Err(OracleError::Budget { budget: self.limit });
        }
        Ok(())
    }
}

fn guard(sys: &SwitchedSystem) -> Result<Vec<FaceId>, OracleError> {
    let n = sys.dim();
    if n > MAX_ORACLE_N {
        return Err(OracleError::Dimension {
            n,
            limit: MAX_ORACLE_N,
        });
    }
    Ok(enumerate_faces(n, MAX_ORACLE_N)?.0)
}

fn step(sys: &SwitchedSystem, a: usize, x: &[Rational]) -> Vec<Rational> {
    sys.matrix(a).apply(x).expect("state dimension matches system")
}

fn classify(x: &[Rational]) -> FaceId {
    classify_point(x).expect("validated systems keep P invariant")
}

/// Searches for a word mapping some face into `±face`.
///
/// Returns the negative verdict with the first witness found (faces in
/// enumeration order, letters in increasing order), or a positive verdict
/// when every word eventually enters the interior.
pub fn brute_force_problem1(sys: &SwitchedSystem, budget: u64) -> Result<Verdict, OracleError> {
    let faces = guard(sys)?;
    let mut budget = Budget::new(budget);
    for face in &faces {
        let x = face.representative(sys.dim());
        let mut path = vec![face.clone()];
        let mut word = Word::new();
        if let Some(w) = cycle_search(sys, &x, &mut path, &mut word, &mut budget)? {
            return Ok(Verdict {
                problem: Problem::AsymptoticStability,
                answer: false,
                witness: Some(Witness::Cycle(w)),
                stuck_faces: Vec::new(),
            });
        }
    }
    Ok(Verdict {
        problem: Problem::AsymptoticStability,
        answer: true,
        witness: None,
        stuck_faces: Vec::new(),
    })
}

fn cycle_search(
    sys: &SwitchedSystem,
    x: &[Rational],
    path: &mut Vec<FaceId>,
    word: &mut Word,
    budget: &mut Budget,
) -> Result<Option<CycleWitness>, OracleError> {
    for a in 0..sys.len() {
        budget.spend()?;
        let y = step(sys, a, x);
        let f = classify(&y);
        if f.is_interior() {
            continue;
        }
        if let Some(i) = path.iter().position(|g| *g == f) {
            let mut cyc = word[i..].to_vec();
            cyc.push(a);
            return Ok(Some(CycleWitness {
                face: f,
                word: cyc,
            }));
        }
        path.push(f);
        word.push(a);
        let found = cycle_search(sys, &y, path, word, budget)?;
        path.pop();
        word.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Shortest-first search for a word of length at most `N` taking `x` into the
/// interior, by iterative deepening over simple face paths.
fn steer_search(
    sys: &SwitchedSystem,
    x: &[Rational],
    horizon: usize,
    budget: &mut Budget,
) -> Result<Option<Word>, OracleError> {
    if classify(x).is_interior() {
        return Ok(Some(Word::new()));
    }
    let mut exhausted = false;
    for depth in 1..=horizon {
        if exhausted {
            break;
        }
        let mut path = vec![classify(x)];
        let mut word = Word::new();
        let mut cut = false;
        if let Some(w) = steer_dfs(sys, x, depth, &mut path, &mut word, &mut cut, budget)? {
            return Ok(Some(w));
        }
        // no branch was cut by the depth limit: deeper searches cannot succeed
        exhausted = !cut;
    }
    Ok(None)
}

fn steer_dfs(
    sys: &SwitchedSystem,
    x: &[Rational],
    depth: usize,
    path: &mut Vec<FaceId>,
    word: &mut Word,
    cut: &mut bool,
    budget: &mut Budget,
) -> Result<Option<Word>, OracleError> {
    for a in 0..sys.len() {
        budget.spend()?;
        let y = step(sys, a, x);
        let f = classify(&y);
        if f.is_interior() {
            let mut w = word.clone();
            w.push(a);
            return Ok(Some(w));
        }
        if path.contains(&f) {
            continue;
        }
        if word.len() + 1 >= depth {
            *cut = true;
            continue;
        }
        path.push(f);
        word.push(a);
        let found = steer_dfs(sys, &y, depth, path, word, cut, budget)?;
        path.pop();
        word.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Decides reachability of consensus by searching, for each face
/// representative, a word of length at most `N` into the interior.
///
/// A positive verdict carries per-face words and a universal word built by
/// steering the representatives themselves one after another.
pub fn brute_force_problem2(sys: &SwitchedSystem, budget: u64) -> Result<Verdict, OracleError> {
    let faces = guard(sys)?;
    let horizon = proper_pair_count(sys.dim());
    let mut budget = Budget::new(budget);
    let mut per_face_words = BTreeMap::new();
    let mut stuck = Vec::new();
    for face in &faces {
        let x = face.representative(sys.dim());
        match steer_search(sys, &x, horizon, &mut budget)? {
            Some(w) => {
                per_face_words.insert(face.clone(), w);
            }
            None => stuck.push(face.clone()),
        }
    }
    if !stuck.is_empty() {
        return Ok(Verdict {
            problem: Problem::ReachabilityOfConsensus,
            answer: false,
            witness: None,
            stuck_faces: stuck,
        });
    }
    let mut points: Vec<Vec<Rational>> = faces.iter().map(|f| f.representative(sys.dim())).collect();
    let mut universal = Word::new();
    for i in 0..points.len() {
        let piece = steer_search(sys, &points[i], horizon, &mut budget)?
            .expect("images of steerable faces are steerable");
        for p in points.iter_mut() {
            for &a in &piece {
                *p = step(sys, a, p);
            }
        }
        universal.extend(piece);
    }
    Ok(Verdict {
        problem: Problem::ReachabilityOfConsensus,
        answer: true,
        witness: Some(Witness::Steering(SteeringWitness {
            per_face_words,
            universal_word: universal,
        })),
        stuck_faces: Vec::new(),
    })
}

/// True iff every word of length `N` maps every face representative into the
/// interior of `P`. Words are enumerated up to the point where they enter
/// the interior, which they never leave.
pub fn all_words_reach_interior(sys: &SwitchedSystem, budget: u64) -> Result<bool, OracleError> {
    let faces = guard(sys)?;
    let horizon = proper_pair_count(sys.dim());
    let mut budget = Budget::new(budget);
    fn dfs(
        sys: &SwitchedSystem,
        x: &[Rational],
        left: usize,
        budget: &mut Budget,
    ) -> Result<bool, OracleError> {
        if classify(x).is_interior() {
            return Ok(true);
        }
        if left == 0 {
            return Ok(false);
        }
        for a in 0..sys.len() {
            budget.spend()?;
            if !dfs(sys, &step(sys, a, x), left - 1, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    for f in &faces {
        if !dfs(sys, &f.representative(sys.dim()), horizon, &mut budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Contraction factor over one horizon of `N` steps:
/// `r = max ‖A_w v‖` over boundary points `v` and words `w` of length `N`.
///
/// The seminorm of a product is convex and shift invariant, so its maximum
/// over the boundary is attained at a vertex of `P` modulo `1`, that is a
/// sign vector without zeros. The maximum over all words is found by
/// branch and bound. For every vertex `u` and horizon `j` the exact value
/// `F_j(u) = max_w ‖A_w u‖` is computed in order of increasing `j`; a state
/// `x` with `j` steps left is a positive multiple of a point in the cube
/// spanned by the vertices (after a shift), and convexity bounds its best
/// continuation by the matching convex combination of the `F_j(u)`.
///
/// Errors with [`OracleError::NotContracting`] when `r = 1`, which happens
/// exactly when the system is not asymptotically stable.
pub fn decay_certificate(sys: &SwitchedSystem, budget: u64) -> Result<Rational, OracleError> {
    let horizon = proper_pair_count(guard_dim(sys)?);
    let r = horizon_rate(sys, horizon, budget)?;
    if r.is_one() {
        return Err(OracleError::NotContracting { horizon });
    }
    Ok(r)
}

fn guard_dim(sys: &SwitchedSystem) -> Result<usize, OracleError> {
    guard(sys).map(|_| sys.dim())
}

/// Sign vector with bit `i` of `mask` set meaning coordinate `i` is `-1`.
fn vertex(n: usize, mask: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| if mask >> i & 1 == 1 { -Rational::one() } else { Rational::one() })
        .collect()
}

/// Per-vertex optimal values, indexed by mask over all `2^n` sign vectors.
struct VertexValues {
    exact: Vec<Vec<Rational>>,
    approx: Vec<Vec<f64>>,
}

/// Relative slack that covers floating-point rounding in [`VertexValues::approx_bound`].
const SLACK: f64 = 1e-9;

/// Weights of the cube vertices in the convex combination representing `x`:
/// coordinate `i` goes to the `+1` side with weight `p_i` and to the `-1`
/// side with weight `q_i`, where `p_i + q_i = 1`.
fn cube_weights<T, F>(p: &[T], q: &[T], zero: &F, mul: impl Fn(&T, &T) -> T) -> Vec<T>
where
    T: Clone,
    F: Fn(&T) -> bool,
{
    let mut weights: Option<Vec<T>> = None;
    for (i, (pi, qi)) in p.iter().zip(q).enumerate() {
        let Some(prev) = weights.take() else {
            weights = Some(vec![pi.clone(), qi.clone()]);
            continue;
        };
        let mut next = Vec::with_capacity(prev.len() * 2);
        let scale = |w: &T, c: &T| match (zero(w), zero(c)) {
            (true, _) => w.clone(),
            (_, true) => c.clone(),
            _ => mul(w, c),
        };
        next.extend(prev.iter().map(|w| scale(w, pi)));
        next.extend(prev.iter().map(|w| scale(w, qi)));
        debug_assert_eq!(next.len(), 1 << (i + 1));
        weights = Some(next);
    }
    weights.expect("n >= 2")
}

impl VertexValues {
    /// Upper bound on `max_w ‖A_w x‖` over words of length `left`.
    fn exact_bound(&self, x: &[Rational], left: usize) -> Rational {
        let (min, max) = min_max(x).expect("non-empty");
        let width = max - min;
        if width.is_zero() {
            return Rational::zero();
        }
        let p: Vec<Rational> = x.iter().map(|t| (t - min) / &width).collect();
        let q: Vec<Rational> = x.iter().map(|t| (max - t) / &width).collect();
        let weights = cube_weights(&p, &q, &|w: &Rational| w.is_zero(), |a, b| a * b);
        let total: Rational = weights
            .iter()
            .zip(&self.exact[left])
            .filter(|(w, v)| !w.is_zero() && !v.is_zero())
            .map(|(w, v)| w * v)
            .sum();
        total * width / Rational::from_integer(2.into())
    }

    /// The same bound in floating point. Every quantity is built from exact
    /// differences by products and sums of nonnegative terms, so the relative
    /// error stays far below [`SLACK`].
    fn approx_bound(&self, x: &[Rational], left: usize) -> f64 {
        let (min, max) = min_max(x).expect("non-empty");
        let width = max - min;
        if width.is_zero() {
            return 0.0;
        }
        let w = to_f64(&width);
        let p: Vec<f64> = x.iter().map(|t| to_f64(&(t - min)) / w).collect();
        let q: Vec<f64> = x.iter().map(|t| to_f64(&(max - t)) / w).collect();
        let weights = cube_weights(&p, &q, &|w: &f64| *w == 0.0, |a, b| a * b);
        let total: f64 = weights.iter().zip(&self.approx[left]).map(|(w, v)| w * v).sum();
        total * w / 2.0
    }

    /// True when no word of length `left` from `x` can exceed `best`.
    fn cannot_beat(&self, x: &[Rational], left: usize, approx: f64, best: &Rational) -> bool {
        let b = to_f64(best);
        if approx * (1.0 + SLACK) < b * (1.0 - SLACK) {
            return true;
        }
        if approx * (1.0 - SLACK) > b * (1.0 + SLACK) {
            return false;
        }
        self.exact_bound(x, left) <= *best
    }

    fn push(&mut self, row: Vec<Rational>) {
        self.approx.push(row.iter().map(to_f64).collect());
        self.exact.push(row);
    }
}

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("finite rational")
}

/// `r_horizon`, exact.
fn horizon_rate(sys: &SwitchedSystem, horizon: usize, budget: u64) -> Result<Rational, OracleError> {
    let n = sys.dim();
    let mut budget = Budget::new(budget);
    let full = (1usize << n) - 1;
    let proper = |mask: usize| mask != 0 && mask != full;
    let mut table = VertexValues {
        exact: Vec::new(),
        approx: Vec::new(),
    };
    table.push(
        (0..=full)
            .map(|mask| if proper(mask) { Rational::one() } else { Rational::zero() })
            .collect(),
    );
    for len in 1..=horizon {
        let mut row = vec![Rational::zero(); full + 1];
        // canonical vertices have coordinate 0 equal to +1; the rest by symmetry
        for mask in (2..=full).step_by(2).filter(|&m| proper(m)) {
            let mut best = Rational::zero();
            let mut seen: Vec<HashSet<Vec<Rational>>> = vec![HashSet::new(); len];
            let u = vertex(n, mask);
            let mut children = expand(sys, &u, len, &table);
            while let Some((approx, y)) = children.pop() {
                if table.cannot_beat(&y, len - 1, approx, &best) {
                    continue;
                }
                budget.spend()?;
                branch(sys, &y, len - 1, &table, &mut best, &mut seen, &mut budget)?;
            }
            row[full ^ mask] = best.clone();
            row[mask] = best;
        }
        let done = row.iter().all(Zero::is_zero);
        table.push(row);
        if done {
            return Ok(Rational::zero());
        }
    }
    Ok(table.exact[horizon]
        .iter()
        .max()
        .expect("non-empty")
        .clone())
}

/// Successors of `x` with their approximate bounds, most promising last.
fn expand(
    sys: &SwitchedSystem,
    x: &[Rational],
    left: usize,
    table: &VertexValues,
) -> Vec<(f64, Vec<Rational>)> {
    let mut children: Vec<(f64, Vec<Rational>)> = (0..sys.len())
        .map(|a| {
            let y = step(sys, a, x);
            (table.approx_bound(&y, left - 1), y)
        })
        .collect();
    children.sort_by(|p, q| p.0.total_cmp(&q.0));
    children
}

/// Canonical state up to shift and sign, for deduplication.
fn normal_form(x: &[Rational]) -> Vec<Rational> {
    let shifted = |y: Vec<Rational>| {
        let min = y.iter().min().expect("non-empty").clone();
        y.into_iter().map(|t| t - &min).collect::<Vec<_>>()
    };
    let pos = shifted(x.to_vec());
    let neg = shifted(x.iter().map(|t| -t).collect());
    pos.min(neg)
}

fn branch(
    sys: &SwitchedSystem,
    x: &[Rational],
    left: usize,
    table: &VertexValues,
    best: &mut Rational,
    seen: &mut [HashSet<Vec<Rational>>],
    budget: &mut Budget,
) -> Result<(), OracleError> {
    if left == 0 {
        let s = consensus_seminorm(x)?;
        if s > *best {
            *best = s;
        }
        return Ok(());
    }
    if !seen[left].insert(normal_form(x)) {
        return Ok(());
    }
    let mut children = expand(sys, x, left, table);
    while let Some((approx, y)) = children.pop() {
        if table.cannot_beat(&y, left - 1, approx, best) {
            continue;
        }
        budget.spend()?;
        branch(sys, &y, left - 1, table, best, seen, budget)?;
    }
    Ok(())
}

/// Exact trajectory of the system under a periodically repeated word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryTrace {
    pub states: Vec<Vec<Rational>>,
    pub seminorms: Vec<Rational>,
    /// The word actually applied, `periods` copies of the input word.
    pub word: Word,
}

impl TrajectoryTrace {
    pub fn final_seminorm(&self) -> &Rational {
        self.seminorms.last().expect("trace contains the initial state")
    }

    /// CSV with header `t,x1..xn,seminorm`, entries as exact rationals.
    pub fn to_csv(&self) -> String {
        let n = self.states.first().map_or(0, Vec::len);
        let mut out = String::from("t");
        for i in 1..=n {
            let _ = write!(out, ",x{i}");
        }
        out.push_str(",seminorm\n");
        for (t, (x, s)) in self.states.iter().zip(&self.seminorms).enumerate() {
            let _ = write!(out, "{t}");
            for v in x {
                let _ = write!(out, ",{v}");
            }
            let _ = writeln!(out, ",{s}");
        }
        out
    }
}

/// Runs `x(t+1) = A_{σ(t)} x(t)` with `σ` the word repeated `periods` times.
pub fn simulate(
    sys: &SwitchedSystem,
    x0: &[Rational],
    word: &[usize],
    periods: usize,
) -> Result<TrajectoryTrace, OracleError> {
    if word.is_empty() {
        return Err(OracleError::EmptyWord);
    }
    if let Some(&letter) = word.iter().find(|&&a| a >= sys.len()) {
        return Err(OracleError::BadLetter { letter, m: sys.len() });
    }
    if x0.len() != sys.dim() {
        return Err(NumError::DimensionMismatch {
            expected: sys.dim(),
            found: x0.len(),
        }
        .into());
    }
    let full: Word = word.iter().copied().cycle().take(word.len() * periods).collect();
    let mut states = vec![x0.to_vec()];
    for &a in &full {
        let next = step(sys, a, states.last().expect("non-empty"));
        states.push(next);
    }
    let seminorms = states
        .iter()
        .map(|x| consensus_seminorm(x))
        .collect::<Result<_, _>>()?;
    Ok(TrajectoryTrace {
        states,
        seminorms,
        word: full,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int, parse_vector, RationalMatrix};

    fn swap() -> RationalMatrix {
        RationalMatrix::parse(&[&["0", "1"], &["1", "0"]]).unwrap()
    }

    fn sys(ms: Vec<RationalMatrix>) -> SwitchedSystem {
        SwitchedSystem::new(ms).unwrap()
    }

    #[test]
    fn problem1_examples() {
        let v = brute_force_problem1(&sys(vec![swap()]), DEFAULT_BUDGET).unwrap();
        assert!(!v.answer);
        let w = v.cycle().unwrap();
        assert_eq!((w.face.to_string(), w.word.clone()), ("+-".to_string(), vec![0]));
        assert!(brute_force_problem1(&sys(vec![RationalMatrix::averaging(2)]), DEFAULT_BUDGET)
            .unwrap()
            .answer);
        assert!(!brute_force_problem1(&sys(vec![RationalMatrix::identity(2)]), DEFAULT_BUDGET)
            .unwrap()
            .answer);
    }

    #[test]
    fn problem2_examples() {
        let v = brute_force_problem2(&sys(vec![swap(), RationalMatrix::averaging(2)]), DEFAULT_BUDGET).unwrap();
        assert!(v.answer);
        assert_eq!(v.steering().unwrap().universal_word, vec![1]);
        assert!(!brute_force_problem2(&sys(vec![RationalMatrix::identity(2)]), DEFAULT_BUDGET)
            .unwrap()
            .answer);
        let v = brute_force_problem2(&sys(vec![swap()]), DEFAULT_BUDGET).unwrap();
        assert!(!v.answer);
        assert_eq!(v.stuck_faces.len(), 1);
    }

    #[test]
    fn simulate_examples() {
        let t = simulate(&sys(vec![RationalMatrix::averaging(2)]), &parse_vector("1,-1").unwrap(), &[0], 1).unwrap();
        assert_eq!(t.states, vec![parse_vector("1,-1").unwrap(), parse_vector("0,0").unwrap()]);
        assert_eq!(t.seminorms, vec![int(1), int(0)]);

        let t = simulate(&sys(vec![swap()]), &parse_vector("1,-1").unwrap(), &[0], 3).unwrap();
        assert!(t.seminorms.iter().all(|s| *s == int(1)));
        assert_eq!(t.seminorms.len(), 4);

        let s = sys(vec![swap(), RationalMatrix::averaging(2)]);
        let t = simulate(&s, &parse_vector("5/3,5/3").unwrap(), &[0, 1, 1], 2).unwrap();
        assert!(t.seminorms.iter().all(Zero::is_zero));
        assert_eq!(t.to_csv().lines().next(), Some("t,x1,x2,seminorm"));
        assert_eq!(t.to_csv().lines().nth(1), Some("0,5/3,5/3,0"));

        assert_eq!(simulate(&s, &parse_vector("1,2").unwrap(), &[], 1), Err(OracleError::EmptyWord));
        assert!(matches!(simulate(&s, &parse_vector("1,2").unwrap(), &[2], 1), Err(OracleError::BadLetter { .. })));
        assert!(matches!(simulate(&s, &parse_vector("1").unwrap(), &[0], 1), Err(OracleError::Num(_))));
    }

    #[test]
    fn decay_examples() {
        assert_eq!(decay_certificate(&sys(vec![RationalMatrix::averaging(2)]), DEFAULT_BUDGET), Ok(int(0)));
        let a = RationalMatrix::parse(&[&["3/4", "1/4"], &["1/4", "3/4"]]).unwrap();
        assert_eq!(decay_certificate(&sys(vec![a]), DEFAULT_BUDGET), Ok(frac(1, 2)));
        assert!(matches!(
            decay_certificate(&sys(vec![swap()]), DEFAULT_BUDGET),
            Err(OracleError::NotContracting { horizon: 1 })
        ));
    }

    /// Plain enumeration of all m^N words over all face representatives.
    fn decay_by_enumeration(s: &SwitchedSystem) -> Rational {
        let n = s.dim();
        let horizon = proper_pair_count(n);
        let (faces, _) = enumerate_faces(n, 8).unwrap();
        let m = s.len();
        let mut best = Rational::zero();
        for f in faces {
            for code in 0..m.pow(horizon as u32) {
                let mut x = f.representative(n);
                let mut c = code;
                for _ in 0..horizon {
                    x = s.matrix(c % m).apply(&x).unwrap();
                    c /= m;
                }
                best = best.max(consensus_seminorm(&x).unwrap());
            }
        }
        best
    }

    #[test]
    fn decay_matches_enumeration() {
        let a = RationalMatrix::parse(&[&["1/2", "1/2", "0"], &["0", "1/2", "1/2"], &["1/3", "1/3", "1/3"]]).unwrap();
        let b = RationalMatrix::parse(&[&["1", "0", "0"], &["1/4", "1/2", "1/4"], &["0", "1/2", "1/2"]]).unwrap();
        let s = sys(vec![a, b]);
        assert_eq!(decay_certificate(&s, DEFAULT_BUDGET).unwrap(), decay_by_enumeration(&s));
    }

    #[test]
    fn budget_is_enforced() {
        let s = sys(vec![RationalMatrix::identity(3), RationalMatrix::averaging(3)]);
        assert_eq!(brute_force_problem2(&s, 3), Err(OracleError::Budget { budget: 3 }));
        let big = sys(vec![RationalMatrix::identity(9)]);
        assert!(matches!(brute_force_problem1(&big, 10), Err(OracleError::Dimension { .. })));
    }
}
