//! JSON reports. Rationals are exact strings, words are 0-based index
//! arrays, faces use the text form `"int"` or a sign string such as `"+0-"`.
//! Everything except the `timing` block is deterministic.

use consensus_faces::decide::replay_word;
use consensus_faces::fastpair::PairVerdict;
use consensus_faces::{
    dobrushin_seminorm, verify_cycle_witness, CycleWitness, FaceId, FaceGraph, SwitchedSystem, Verdict, Word,
};
use serde::{Deserialize, Serialize};

pub const TOOL_NAME: &str = "cfaces";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSummary {
    pub n: usize,
    pub m: usize,
    pub names: Vec<String>,
    pub validation: String,
    /// Induced seminorm of each matrix; absent for custom polyhedra.
    pub dobrushin_seminorms: Option<Vec<String>>,
}

impl SystemSummary {
    pub fn of(sys: &SwitchedSystem) -> Self {
        SystemSummary {
            n: sys.dim(),
            m: sys.len(),
            names: sys.labels().to_vec(),
            validation: "ok".into(),
            dobrushin_seminorms: Some(
                sys.matrices()
                    .iter()
                    .map(|a| dobrushin_seminorm(a).expect("validated").to_string())
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
}

impl GraphStats {
    pub fn of<K: consensus_faces::facegraph::FaceKey>(g: &FaceGraph<K>) -> Self {
        GraphStats {
            nodes: g.node_count(),
            edges: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub face: String,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceWord {
    pub face: String,
    pub word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteeringReport {
    /// In face enumeration order.
    pub per_face_words: Vec<FaceWord>,
    pub universal_word: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub problem: String,
    pub answer: bool,
    /// `face_graph`, `fast_path` or `oracle`.
    pub method: String,
    pub cycle_witness: Option<CycleReport>,
    /// First periodic test sequence of the fast path that fails to converge.
    pub failing_sequence: Option<String>,
    pub steering: Option<SteeringReport>,
    pub stuck_faces: Vec<String>,
}

impl VerdictReport {
    pub fn from_verdict(v: &Verdict, method: &str) -> Self {
        VerdictReport {
            problem: v.problem.to_string(),
            answer: v.answer,
            method: method.into(),
            cycle_witness: v.cycle().map(|c| CycleReport {
                face: c.face.to_string(),
                word: c.word.clone(),
            }),
            failing_sequence: None,
            steering: v.steering().map(|s| SteeringReport {
                per_face_words: s
                    .per_face_words
                    .iter()
                    .map(|(f, w)| FaceWord {
                        face: f.to_string(),
                        word: w.clone(),
                    })
                    .collect(),
                universal_word: s.universal_word.clone(),
            }),
            stuck_faces: v.stuck_faces.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_pair(v: &PairVerdict) -> Self {
        VerdictReport {
            problem: consensus_faces::Problem::AsymptoticStability.to_string(),
            answer: v.answer,
            method: "fast_path".into(),
            cycle_witness: None,
            failing_sequence: v.failing.map(|s| s.to_string()),
            steering: None,
            stuck_faces: Vec::new(),
        }
    }

    /// Re-parses every witness in the report and replays it on `sys`.
    pub fn verify(&self, sys: &SwitchedSystem) -> Result<(), String> {
        let face = |s: &str| s.parse::<FaceId>().map_err(|e| e.to_string());
        if let Some(c) = &self.cycle_witness {
            let w = CycleWitness {
                face: face(&c.face)?,
                word: c.word.clone(),
            };
            if !verify_cycle_witness(sys, &w) {
                return Err(format!("cycle witness {} {:?} does not replay", c.face, c.word));
            }
        }
        if let Some(s) = &self.steering {
            for fw in &s.per_face_words {
                let f = face(&fw.face)?;
                if replay_word(sys, &f, &fw.word) != Some(FaceId::Interior) {
                    return Err(format!("steering word {:?} does not steer {}", fw.word, fw.face));
                }
                if replay_word(sys, &f, &s.universal_word) != Some(FaceId::Interior) {
                    return Err(format!("universal word does not steer {}", fw.face));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub graph_build_ms: Option<f64>,
    pub total_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool: ToolInfo,
    pub system: SystemSummary,
    /// `standard` or `custom_polyhedron`.
    pub mode: String,
    pub fast_path: bool,
    pub graph: Option<GraphStats>,
    pub problem1: Option<VerdictReport>,
    pub problem2: Option<VerdictReport>,
    pub notes: Vec<String>,
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub agreement: bool,
    pub graph_problem1: bool,
    pub graph_problem2: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub tool: ToolInfo,
    pub system: SystemSummary,
    pub budget: u64,
    pub problem1: VerdictReport,
    pub problem2: VerdictReport,
    pub comparison: Option<Comparison>,
    pub timing: Timing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub total_faces: u128,
    pub proper_pairs: u128,
}

/// Serializes with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
