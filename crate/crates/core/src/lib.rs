//! Decision procedures for switched linear consensus systems
//! `x(t+1) = A_{σ(t)} x(t)`.
//!
//! The engine answers two questions about a finite set of matrices that fix
//! the consensus vector `1` and never increase the distance to consensus:
//!
//! * does every switching sequence drive every state to consensus, and
//! * is there one switching sequence that does so for every state?
//!
//! Both reduce to reachability questions on the *graph of faces* of the
//! invariant polyhedron `P = {x : ½(max x − min x) ≤ 1}`, which has one node
//! per pair of opposite open faces. All arithmetic is exact.
//!
//! ```
//! use consensus_faces::{build_face_graph, decide_problem1, decide_problem2};
//! use consensus_faces::{RationalMatrix, SwitchedSystem};
//!
//! let swap = RationalMatrix::parse(&[&["0", "1"], &["1", "0"]]).unwrap();
//! let sys = SwitchedSystem::new(vec![swap, RationalMatrix::averaging(2)]).unwrap();
//! let graph = build_face_graph(&sys).unwrap();
//!
//! // swapping forever never reaches consensus...
//! assert!(!decide_problem1(&graph).answer);
//! // ...but averaging once always does
//! assert!(decide_problem2(&graph).answer);
//! ```
//!
//! The guide under `book/` walks through the theory with runnable snippets.

pub mod decide;
pub mod exactnum;
pub mod facegraph;
pub mod faces;
pub mod fastpair;
pub mod oracle;
pub mod sample;

pub use decide::{
    decide_problem1, decide_problem2, universal_steering_word, verify_cycle_witness,
    verify_steering_witness, CycleWitness, Problem, SteeringWitness, Verdict, Witness, Word,
};
pub use exactnum::{
    consensus_seminorm, dobrushin_seminorm, parse_rational, validate_system, Rational,
    RationalMatrix, SwitchedSystem, ValidationError,
};
pub use facegraph::{build_custom_face_graph, build_face_graph, map_face, CustomPolyhedron2D, FaceGraph};
pub use faces::{classify_point, enumerate_faces, FaceCensus, FaceId};
pub use fastpair::{decide_two_undirected, PairVerdict, TestSequence};
pub use oracle::{simulate, TrajectoryTrace};

// Compile and run the code blocks of the guide as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/seminorm.md")]
    mod seminorm {}
    #[doc = include_str!("../../../book/src/faces.md")]
    mod faces {}
    #[doc = include_str!("../../../book/src/graph.md")]
    mod graph {}
    #[doc = include_str!("../../../book/src/decisions.md")]
    mod decisions {}
    #[doc = include_str!("../../../book/src/two_matrices.md")]
    mod two_matrices {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
}
