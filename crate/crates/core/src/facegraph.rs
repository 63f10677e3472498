//! The graph of faces: one node per pair of opposite proper faces plus an
//! interior node, and one edge per (node, matrix) pointing at the face pair
//! that the matrix maps the node's open face into.

use std::collections::HashMap;
use std::fmt::{self, Display, Write as _};

use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::exactnum::{dot, NumError, Rational, RationalMatrix, SwitchedSystem};
use crate::faces::{classify_point, enumerate_faces, FaceError, FaceId, DEFAULT_MAX_N};

/// A node label of a face graph.
pub trait FaceKey: Clone + Ord + Display + Send + Sync {
    fn is_interior(&self) -> bool;
}

impl FaceKey for FaceId {
    fn is_interior(&self) -> bool {
        FaceId::is_interior(self)
    }
}

/// Index of the interior node in every [`FaceGraph`].
pub const INTERIOR_NODE: usize = 0;

/// Labeled transition `from → to` realized by matrix `matrix`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub matrix: usize,
}

/// Directed multigraph of face pairs. Node 0 is the interior.
///
/// Every node has exactly one outgoing edge per matrix, so edges are stored
/// as a dense `nodes × m` successor table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceGraph<K = FaceId> {
    n: usize,
    nodes: Vec<K>,
    labels: Vec<String>,
    succ: Vec<usize>,
}

impl<K: FaceKey> FaceGraph<K> {
    /// Assembles a graph from a successor table `succ[node * m + matrix]`.
    pub fn from_parts(n: usize, nodes: Vec<K>, labels: Vec<String>, succ: Vec<usize>) -> Self {
        let m = labels.len();
        assert_eq!(succ.len(), nodes.len() * m, "successor table shape");
        assert!(nodes[0].is_interior(), "node 0 must be the interior");
        assert!(succ.iter().all(|&t| t < nodes.len()));
        FaceGraph {
            n,
            nodes,
            labels,
            succ,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix_count(&self) -> usize {
        self.labels.len()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.len()
    }

    pub fn nodes(&self) -> &[K] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> &K {
        &self.nodes[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Target of the edge leaving `node` labeled `matrix`.
    pub fn target(&self, node: usize, matrix: usize) -> usize {
        self.succ[node * self.matrix_count() + matrix]
    }

    /// Edges ordered by `(from, matrix)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let m = self.matrix_count();
        self.succ.iter().enumerate().map(move |(k, &to)| Edge {
            from: k / m,
            to,
            matrix: k % m,
        })
    }

    pub fn index_of(&self, key: &K) -> Option<usize> {
        if key.is_interior() {
            return Some(INTERIOR_NODE);
        }
        self.nodes[1..].binary_search(key).ok().map(|i| i + 1)
    }

    /// Follows `word` from `start`; `None` if a letter is out of range.
    pub fn follow(&self, start: usize, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(start, |node, &a| {
            (a < self.matrix_count()).then(|| self.target(node, a))
        })
    }

    /// Graphviz rendering; parallel edges are kept, one per matrix label.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph faces {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, key) in self.nodes.iter().enumerate() {
            let style = if key.is_interior() {
                ", style=filled, fillcolor=\"lightblue\""
            } else {
                ""
            };
            let _ = writeln!(out, "  n{i} [label=\"{}\"{style}];", escape(&key.to_string()));
        }
        for e in self.edges() {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                e.from,
                e.to,
                escape(&self.labels[e.matrix])
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The face pair that `a` maps the open face `f` into.
///
/// Panics if the image leaves `P`, which cannot happen for matrices of a
/// validated [`SwitchedSystem`].
pub fn map_face(a: &RationalMatrix, f: &FaceId) -> FaceId {
    match f {
        FaceId::Interior => FaceId::Interior,
        FaceId::Pair(v) => {
            let image = a.apply(&v.to_point()).expect("face dimension matches matrix");
            classify_point(&image)
                .unwrap_or_else(|e| panic!("invariant violated: image of face {f} under {a:?}: {e}"))
        }
    }
}

/// Builds the graph of faces with the default dimension guard.
pub fn build_face_graph(sys: &SwitchedSystem) -> Result<FaceGraph, FaceError> {
    build_face_graph_with_limit(sys, DEFAULT_MAX_N)
}

/// Builds the graph of faces, refusing dimensions above `max_n`.
///
/// Costs O(3ⁿ·m·n²): one matrix-vector product and classification per edge.
pub fn build_face_graph_with_limit(
    sys: &SwitchedSystem,
    max_n: usize,
) -> Result<FaceGraph, FaceError> {
    let n = sys.dim();
    let (pairs, _) = enumerate_faces(n, max_n)?;
    // ternary rank of a canonical sign vector -> node index
    let mut rank_to_node = vec![u32::MAX; 3usize.pow(n as u32)];
    for (i, f) in pairs.iter().enumerate() {
        if let FaceId::Pair(v) = f {
            rank_to_node[v.ternary_rank()] = i as u32 + 1;
        }
    }
    let mut nodes = Vec::with_capacity(pairs.len() + 1);
    nodes.push(FaceId::Interior);
    nodes.extend(pairs);

    let lookup = |f: FaceId| -> usize {
        match f {
            FaceId::Interior => 0,
            FaceId::Pair(v) => rank_to_node[v.ternary_rank()] as usize,
        }
    };
    let succ: Vec<usize> = nodes
        .par_iter()
        .flat_map_iter(|f| {
            sys.matrices()
                .iter()
                .map(|a| lookup(map_face(a, f)))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(FaceGraph::from_parts(n, nodes, sys.labels().to_vec(), succ))
}

/// Open face of a custom 2D polyhedron, named by its active constraints.
///
/// A pair `±F` is named by the lexicographically smaller of the signatures
/// of `F` and `−F`; `rep` is a point of that member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CustomFace {
    pub signature: Vec<bool>,
    pub rep: [Rational; 2],
}

impl FaceKey for CustomFace {
    fn is_interior(&self) -> bool {
        self.signature.iter().all(|&b| !b)
    }
}

impl Display for CustomFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_interior() {
            return f.write_str("int");
        }
        for &b in &self.signature {
            f.write_str(if b { "1" } else { "0" })?;
        }
        write!(f, " ({}, {})", self.rep[0], self.rep[1])
    }
}

/// Halfspace `a·x ≤ b` in the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspace {
    pub a: [Rational; 2],
    pub b: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CustomPolyhedronError {
    #[error("constraint {0} has no mirror constraint (-a, b); the polyhedron must satisfy Q = -Q")]
    NotSymmetric(usize),
    #[error("face representative {0} violates constraint {1}")]
    RepOutside(usize, usize),
    #[error("face representative {0} is interior; representatives must lie on proper faces")]
    RepInterior(usize),
    #[error("face representatives {0} and {1} lie in the same open face")]
    DuplicateFace(usize, usize),
    #[error("matrix {matrix} maps face representative {face_rep} outside the polyhedron")]
    NotInvariant { matrix: usize, face_rep: usize },
    #[error("matrix {matrix} maps face representative {face_rep} into a face with no representative")]
    MissingFace { matrix: usize, face_rep: usize },
    #[error("matrix {0} is not 2x2")]
    Dimension(usize),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Centrally symmetric polygon given by halfspaces and one point per proper open face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CustomPolyhedron2D {
    constraints: Vec<Halfspace>,
    face_reps: Vec<[Rational; 2]>,
}

impl CustomPolyhedron2D {
    pub fn new(
        constraints: Vec<Halfspace>,
        face_reps: Vec<[Rational; 2]>,
    ) -> Result<Self, CustomPolyhedronError> {
        for (i, h) in constraints.iter().enumerate() {
            let mirror = [-&h.a[0], -&h.a[1]];
            if !constraints.iter().any(|g| g.a == mirror && g.b == h.b) {
                return Err(CustomPolyhedronError::NotSymmetric(i));
            }
        }
        let poly = CustomPolyhedron2D {
            constraints,
            face_reps,
        };
        let mut seen: Vec<Vec<bool>> = Vec::new();
        for (r, x) in poly.face_reps.iter().enumerate() {
            if let Some(c) = poly.violated(x) {
                return Err(CustomPolyhedronError::RepOutside(r, c));
            }
            let key = poly.signature(x);
            if key.iter().all(|&b| !b) {
                return Err(CustomPolyhedronError::RepInterior(r));
            }
            if let Some(prev) = seen.iter().position(|s| *s == key) {
                return Err(CustomPolyhedronError::DuplicateFace(prev, r));
            }
            seen.push(key);
        }
        Ok(poly)
    }

    /// The cross-polytope `‖x‖₁ ≤ 1` with its four vertices and four edge midpoints.
    pub fn l1_square() -> Self {
        use crate::exactnum::{frac, int};
        let constraints = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
            .into_iter()
            .map(|(p, q)| Halfspace {
                a: [int(p), int(q)],
                b: int(1),
            })
            .collect();
        let face_reps = vec![
            [int(1), int(0)],
            [int(0), int(1)],
            [int(-1), int(0)],
            [int(0), int(-1)],
            [frac(1, 2), frac(1, 2)],
            [frac(-1, 2), frac(1, 2)],
            [frac(-1, 2), frac(-1, 2)],
            [frac(1, 2), frac(-1, 2)],
        ];
        Self::new(constraints, face_reps).expect("square fixture is well formed")
    }

    pub fn constraints(&self) -> &[Halfspace] {
        &self.constraints
    }

    pub fn face_reps(&self) -> &[[Rational; 2]] {
        &self.face_reps
    }

    fn violated(&self, x: &[Rational; 2]) -> Option<usize> {
        self.constraints.iter().position(|h| dot(&h.a, x) > h.b)
    }

    /// Which constraints hold with equality at `x`.
    pub fn signature(&self, x: &[Rational; 2]) -> Vec<bool> {
        self.constraints.iter().map(|h| dot(&h.a, x) == h.b).collect()
    }

    fn pair_signature(&self, x: &[Rational; 2]) -> Vec<bool> {
        let neg = [-&x[0], -&x[1]];
        self.signature(x).min(self.signature(&neg))
    }
}

/// Builds the graph of faces of `poly` under `matrices`.
///
/// Faces are identified by exact active sets. Each representative's image
/// must stay in the polyhedron and land in a face that has a representative.
pub fn build_custom_face_graph(
    poly: &CustomPolyhedron2D,
    matrices: &[RationalMatrix],
    labels: &[String],
) -> Result<FaceGraph<CustomFace>, CustomPolyhedronError> {
    assert_eq!(matrices.len(), labels.len(), "one label per matrix");
    if let Some(i) = matrices.iter().position(|a| a.dim() != 2) {
        return Err(CustomPolyhedronError::Dimension(i));
    }
    let zero = [Rational::zero(), Rational::zero()];
    let mut nodes = vec![CustomFace {
        signature: poly.signature(&zero),
        rep: zero,
    }];
    for x in &poly.face_reps {
        let signature = poly.pair_signature(x);
        if nodes.iter().any(|f| f.signature == signature) {
            continue;
        }
        let rep = if poly.signature(x) == signature {
            x.clone()
        } else {
            [-&x[0], -&x[1]]
        };
        nodes.push(CustomFace { signature, rep });
    }
    nodes[1..].sort();
    let index: HashMap<Vec<bool>, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, f)| (f.signature.clone(), i))
        .collect();

    // every face rep must map into the polyhedron, even those merged away
    for (r, x) in poly.face_reps.iter().enumerate() {
        for (k, a) in matrices.iter().enumerate() {
            let y = a.apply(x)?;
            let y = [y[0].clone(), y[1].clone()];
            if poly.violated(&y).is_some() {
                return Err(CustomPolyhedronError::NotInvariant {
                    matrix: k,
                    face_rep: r,
                });
            }
        }
    }

    let mut succ = Vec::with_capacity(nodes.len() * matrices.len());
    for (i, f) in nodes.iter().enumerate() {
        for (k, a) in matrices.iter().enumerate() {
            let y = a.apply(&f.rep)?;
            let y = [y[0].clone(), y[1].clone()];
            let key = poly.pair_signature(&y);
            let to = *index.get(&key).ok_or_else(|| CustomPolyhedronError::MissingFace {
                matrix: k,
                face_rep: rep_index(poly, &f.rep).unwrap_or(i),
            })?;
            succ.push(to);
        }
    }
    Ok(FaceGraph::from_parts(2, nodes, labels.to_vec(), succ))
}

fn rep_index(poly: &CustomPolyhedron2D, x: &[Rational; 2]) -> Option<usize> {
    let neg = [-&x[0], -&x[1]];
    poly.face_reps.iter().position(|r| r == x || *r == neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{frac, int};

    fn m(rows: &[&[&str]]) -> RationalMatrix {
        RationalMatrix::parse(rows).unwrap()
    }

    fn sys(ms: Vec<RationalMatrix>) -> SwitchedSystem {
        SwitchedSystem::new(ms).unwrap()
    }

    fn swap() -> RationalMatrix {
        m(&[&["0", "1"], &["1", "0"]])
    }

    fn pm() -> FaceId {
        "+-".parse().unwrap()
    }

    #[test]
    fn map_face_examples() {
        assert_eq!(map_face(&RationalMatrix::averaging(2), &pm()), FaceId::Interior);
        assert_eq!(map_face(&swap(), &pm()), pm());
        let (faces, _) = enumerate_faces(3, DEFAULT_MAX_N).unwrap();
        for f in faces {
            assert_eq!(map_face(&RationalMatrix::identity(3), &f), f);
        }
        assert_eq!(map_face(&swap(), &FaceId::Interior), FaceId::Interior);
    }

    #[test]
    fn build_examples() {
        let g = build_face_graph(&sys(vec![swap()])).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.target(1, 0), 1);
        assert_eq!(g.target(0, 0), 0);

        let g = build_face_graph(&sys(vec![RationalMatrix::averaging(2)])).unwrap();
        assert_eq!(g.target(1, 0), 0);
        assert_eq!(g.target(0, 0), 0);

        let g = build_face_graph(&sys(vec![RationalMatrix::identity(3)])).unwrap();
        assert_eq!(g.node_count(), 7);
        assert!(g.edges().all(|e| e.from == e.to));
        assert_eq!(g.index_of(&"+-0".parse().unwrap()).map(|i| g.node(i).to_string()), Some("+-0".into()));
    }

    #[test]
    fn guard_is_enforced() {
        let s = sys(vec![RationalMatrix::identity(5)]);
        assert!(matches!(build_face_graph_with_limit(&s, 4), Err(FaceError::Capacity { n: 5, max_n: 4 })));
    }

    #[test]
    fn example_two_fixture() {
        let poly = CustomPolyhedron2D::l1_square();
        let a = m(&[&["0", "1/2"], &["-1", "-1/2"]]);
        let b = m(&[&["-1/4", "3/4"], &["-3/4", "1/4"]]);
        assert_eq!(a.apply(&[int(1), int(0)]).unwrap(), vec![int(0), int(-1)]);
        assert_eq!(a.apply(&[int(0), int(1)]).unwrap(), vec![frac(1, 2), frac(-1, 2)]);
        let g = build_custom_face_graph(&poly, &[a, b], &["A".into(), "B".into()]).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edge_count(), 10);
        let name = |x: [Rational; 2]| {
            let key = poly.pair_signature(&x);
            g.nodes().iter().position(|f| f.signature == key).unwrap()
        };
        let v1 = name([int(1), int(0)]);
        let v2 = name([int(0), int(1)]);
        let e1 = name([frac(1, 2), frac(1, 2)]);
        let e2 = name([frac(1, 2), frac(-1, 2)]);
        // A: vertex (1,0) -> vertex (0,-1); vertex (0,1) -> edge x1 - x2 = 1
        assert_eq!(g.target(v1, 0), v2);
        assert_eq!(g.target(v2, 0), e2);
        assert_eq!(g.target(e1, 0), e2);
        assert_eq!(g.target(e2, 0), 0);
        assert_eq!(g.target(v1, 1), e1);
        assert_eq!(g.target(v2, 1), e1);
        assert_eq!(g.target(e1, 1), 0);
        assert_eq!(g.target(e2, 1), e1);
    }

    #[test]
    fn custom_polyhedron_rejections() {
        let h = |p: i64, q: i64| Halfspace {
            a: [int(p), int(q)],
            b: int(1),
        };
        assert_eq!(
            CustomPolyhedron2D::new(vec![h(1, 0)], vec![]),
            Err(CustomPolyhedronError::NotSymmetric(0))
        );
        let square = vec![h(1, 0), h(-1, 0), h(0, 1), h(0, -1)];
        assert_eq!(
            CustomPolyhedron2D::new(square.clone(), vec![[int(0), int(0)]]),
            Err(CustomPolyhedronError::RepInterior(0))
        );
        assert_eq!(
            CustomPolyhedron2D::new(square.clone(), vec![[int(1), int(0)], [int(1), frac(1, 2)]]),
            Err(CustomPolyhedronError::DuplicateFace(0, 1))
        );
        let poly = CustomPolyhedron2D::l1_square();
        let grow = m(&[&["2", "0"], &["0", "2"]]);
        assert_eq!(
            build_custom_face_graph(&poly, &[grow], &["G".into()]),
            Err(CustomPolyhedronError::NotInvariant { matrix: 0, face_rep: 0 })
        );
    }

    #[test]
    fn dot_is_stable() {
        let g = build_face_graph(&sys(vec![swap(), RationalMatrix::averaging(2)])).unwrap();
        let dot = g.to_dot();
        assert_eq!(dot, g.to_dot());
        assert!(dot.contains("n0 [label=\"int\", style=filled"));
        assert!(dot.contains("n1 -> n1 [label=\"A0\"];"));
        assert!(dot.contains("n1 -> n0 [label=\"A1\"];"));
    }
}
