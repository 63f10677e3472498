//! Decisions on the graph of faces.
//!
//! * Asymptotic stability (every switching sequence converges to consensus)
//!   holds iff the only cycle of the graph is the interior self-loop.
//! * Reachability of consensus (some switching sequence converges from every
//!   initial state) holds iff every node has a path to the interior.
//!
//! Negative stability answers come with a [`CycleWitness`]; positive
//! reachability answers come with a [`SteeringWitness`]. Both replay through
//! [`map_face`] independently of the graph that produced them.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::exactnum::SwitchedSystem;
use crate::facegraph::{map_face, FaceGraph, FaceKey, INTERIOR_NODE};
use crate::faces::FaceId;

/// A finite switching word: 0-based matrix indices, applied left to right.
pub type Word = Vec<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Convergence to consensus for every initial state and every sequence.
    AsymptoticStability,
    /// Existence of one sequence driving every initial state to consensus.
    ReachabilityOfConsensus,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::AsymptoticStability => "asymptotic_stability",
            Problem::ReachabilityOfConsensus => "reachability_of_consensus",
        })
    }
}

/// A face and a word whose product maps the face into `±face` while staying
/// on the boundary. Repeating the word yields a trajectory that never
/// approaches consensus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness<K = FaceId> {
    pub face: K,
    pub word: Word,
}

/// Words steering face pairs into the interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteeringWitness<K = FaceId> {
    /// Shortest word from each proper face pair to the interior.
    pub per_face_words: BTreeMap<K, Word>,
    /// One word that steers every proper face pair into the interior.
    pub universal_word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness<K = FaceId> {
    Cycle(CycleWitness<K>),
    Steering(SteeringWitness<K>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<K = FaceId> {
    pub problem: Problem,
    pub answer: bool,
    pub witness: Option<Witness<K>>,
    /// Faces that cannot reach the interior (negative reachability only).
    pub stuck_faces: Vec<K>,
}

impl<K> Verdict<K> {
    pub fn cycle(&self) -> Option<&CycleWitness<K>> {
        match &self.witness {
            Some(Witness::Cycle(c)) => Some(c),
            _ => None,
        }
    }

    pub fn steering(&self) -> Option<&SteeringWitness<K>> {
        match &self.witness {
            Some(Witness::Steering(s)) => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("consensus is not reachable from every face; no steering word exists")]
    NotReachable,
}

/// Decides asymptotic stability: true iff the proper-face subgraph is acyclic.
///
/// Iterative depth-first search over proper nodes in enumeration order,
/// trying matrices in increasing index. The first back edge closes a cycle,
/// which is rotated to start at its smallest face. O(|V| + |E|).
pub fn decide_problem1<K: FaceKey>(g: &FaceGraph<K>) -> Verdict<K> {
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let m = g.matrix_count();
    let mut color = vec![WHITE; g.node_count()];
    color[INTERIOR_NODE] = BLACK;
    // (node, next matrix index to try)
    let mut stack: Vec<(usize, usize)> = Vec::new();
    // label of the edge taken out of each stacked node
    let mut taken: Vec<usize> = Vec::new();

    for root in 1..g.node_count() {
        if color[root] != WHITE {
            continue;
        }
        color[root] = GREY;
        stack.push((root, 0));
        while let Some(top) = stack.last_mut() {
            let (node, next) = *top;
            if next == m {
                color[node] = BLACK;
                stack.pop();
                taken.pop();
                continue;
            }
            top.1 += 1;
            let to = g.target(node, next);
            match color[to] {
                WHITE => {
                    taken.push(next);
                    color[to] = GREY;
                    stack.push((to, 0));
                }
                GREY => {
                    let start = stack.iter().position(|&(v, _)| v == to).expect("grey node is stacked");
                    let faces: Vec<usize> = stack[start..].iter().map(|&(v, _)| v).collect();
                    let mut word: Word = taken[start..].to_vec();
                    word.push(next);
                    let (face, word) = rotate_to_smallest(g, &faces, word);
                    return Verdict {
                        problem: Problem::AsymptoticStability,
                        answer: false,
                        witness: Some(Witness::Cycle(CycleWitness { face, word })),
                        stuck_faces: Vec::new(),
                    };
                }
                _ => {}
            }
        }
    }
    Verdict {
        problem: Problem::AsymptoticStability,
        answer: true,
        witness: None,
        stuck_faces: Vec::new(),
    }
}

fn rotate_to_smallest<K: FaceKey>(g: &FaceGraph<K>, faces: &[usize], mut word: Word) -> (K, Word) {
    let (shift, _) = faces
        .iter()
        .enumerate()
        .min_by(|a, b| g.node(*a.1).cmp(g.node(*b.1)))
        .expect("cycle is non-empty");
    word.rotate_left(shift);
    (g.node(faces[shift]).clone(), word)
}

/// Distance to the interior of every node (`None` if unreachable), by
/// breadth-first search on the reversed graph.
fn distances_to_interior<K: FaceKey>(g: &FaceGraph<K>) -> Vec<Option<usize>> {
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
    for e in g.edges() {
        if e.from != e.to {
            preds[e.to].push(e.from);
        }
    }
    let mut dist = vec![None; g.node_count()];
    dist[INTERIOR_NODE] = Some(0);
    let mut queue = VecDeque::from([INTERIOR_NODE]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].expect("queued nodes have a distance");
        for &u in &preds[v] {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Shortest word from `node` to the interior, preferring smaller matrix indices.
fn shortest_word<K: FaceKey>(g: &FaceGraph<K>, dist: &[Option<usize>], mut node: usize) -> Word {
    let mut word = Word::new();
    while node != INTERIOR_NODE {
        let d = dist[node].expect("node reaches the interior");
        let a = (0..g.matrix_count())
            .find(|&a| dist[g.target(node, a)] == Some(d - 1))
            .expect("some edge decreases the distance");
        word.push(a);
        node = g.target(node, a);
    }
    word
}

/// Decides reachability of consensus: true iff every node reaches the interior.
pub fn decide_problem2<K: FaceKey>(g: &FaceGraph<K>) -> Verdict<K> {
    let dist = distances_to_interior(g);
    let stuck: Vec<K> = (1..g.node_count())
        .filter(|&v| dist[v].is_none())
        .map(|v| g.node(v).clone())
        .collect();
    if !stuck.is_empty() {
        return Verdict {
            problem: Problem::ReachabilityOfConsensus,
            answer: false,
            witness: None,
            stuck_faces: stuck,
        };
    }
    let per_face_words = (1..g.node_count())
        .map(|v| (g.node(v).clone(), shortest_word(g, &dist, v)))
        .collect();
    let universal_word = greedy_universal_word(g, &dist);
    Verdict {
        problem: Problem::ReachabilityOfConsensus,
        answer: true,
        witness: Some(Witness::Steering(SteeringWitness {
            per_face_words,
            universal_word,
        })),
        stuck_faces: Vec::new(),
    }
}

/// One word steering every proper face into the interior, of length at most `N²`.
///
/// Faces are processed in enumeration order: wherever the current face has
/// been carried by the word so far, append its shortest steering word.
pub fn universal_steering_word<K: FaceKey>(g: &FaceGraph<K>) -> Result<Word, DecideError> {
    let dist = distances_to_interior(g);
    if dist.iter().any(Option::is_none) {
        return Err(DecideError::NotReachable);
    }
    Ok(greedy_universal_word(g, &dist))
}

fn greedy_universal_word<K: FaceKey>(g: &FaceGraph<K>, dist: &[Option<usize>]) -> Word {
    let mut position: Vec<usize> = (0..g.node_count()).collect();
    let mut word = Word::new();
    for face in 1..g.node_count() {
        let here = position[face];
        if here == INTERIOR_NODE {
            continue;
        }
        let piece = shortest_word(g, dist, here);
        for p in position.iter_mut() {
            *p = g.follow(*p, &piece).expect("letters are in range");
        }
        word.extend(piece);
    }
    word
}

/// Checks a cycle witness against the system using [`map_face`] only.
///
/// The word must be non-empty, every intermediate face must be proper, and
/// the final face must equal the starting pair.
pub fn verify_cycle_witness(sys: &SwitchedSystem, w: &CycleWitness) -> bool {
    if w.word.is_empty() || w.face.is_interior() || w.word.iter().any(|&a| a >= sys.len()) {
        return false;
    }
    if let FaceId::Pair(v) = &w.face {
        if v.len() != sys.dim() {
            return false;
        }
    }
    let mut f = w.face.clone();
    for &a in &w.word {
        f = map_face(sys.matrix(a), &f);
        if f.is_interior() {
            return false;
        }
    }
    f == w.face
}

/// Follows `word` from `face` via [`map_face`]; `None` on a bad letter.
pub fn replay_word(sys: &SwitchedSystem, face: &FaceId, word: &[usize]) -> Option<FaceId> {
    word.iter().try_fold(face.clone(), |f, &a| {
        (a < sys.len()).then(|| map_face(sys.matrix(a), &f))
    })
}

/// Checks that every per-face word, and the universal word from every face
/// listed, ends in the interior.
pub fn verify_steering_witness(sys: &SwitchedSystem, w: &SteeringWitness) -> bool {
    let lands = |f: &FaceId, word: &[usize]| replay_word(sys, f, word) == Some(FaceId::Interior);
    w.per_face_words.iter().all(|(f, word)| lands(f, word))
        && w.per_face_words.keys().all(|f| lands(f, &w.universal_word))
}
