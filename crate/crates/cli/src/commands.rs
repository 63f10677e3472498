use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use consensus_faces::exactnum::parse_vector;
use consensus_faces::facegraph::build_face_graph_with_limit;
use consensus_faces::fastpair::is_undirected_stochastic;
use consensus_faces::oracle::{brute_force_problem1, brute_force_problem2, MAX_ORACLE_N};
use consensus_faces::{
    build_custom_face_graph, decide_problem1, decide_problem2, decide_two_undirected, simulate, FaceCensus,
    SwitchedSystem,
};

use crate::args::{AnalyzeArgs, OracleArgs, SimulateArgs};
use crate::error::CliError;
use crate::input::{load, LoadedSystem};
use crate::report::{
    to_json, AnalysisReport, CensusReport, Comparison, GraphStats, OracleReport, SystemSummary, Timing, ToolInfo,
    VerdictReport,
};

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn standard(loaded: LoadedSystem, command: &str) -> Result<SwitchedSystem, CliError> {
    match loaded {
        LoadedSystem::Standard(sys) => Ok(sys),
        LoadedSystem::Custom { .. } => Err(CliError::Argument(format!(
            "`{command}` works on the consensus polyhedron; remove the custom_polyhedron block"
        ))),
    }
}

fn verified(report: VerdictReport, sys: &SwitchedSystem) -> Result<VerdictReport, CliError> {
    report.verify(sys).map_err(CliError::Internal)?;
    Ok(report)
}

pub fn analyze(args: &AnalyzeArgs) -> Result<AnalysisReport, CliError> {
    let start = Instant::now();
    let loaded = load(&args.path)?;
    let mut report = match loaded {
        LoadedSystem::Custom {
            poly,
            matrices,
            labels,
        } => {
            let t = Instant::now();
            let g = build_custom_face_graph(&poly, &matrices, &labels)?;
            let build = millis(t);
            if let Some(path) = &args.dot {
                write_file(path, &g.to_dot())?;
            }
            AnalysisReport {
                tool: ToolInfo::default(),
                system: SystemSummary {
                    n: 2,
                    m: matrices.len(),
                    names: labels,
                    validation: "ok".into(),
                    dobrushin_seminorms: None,
                },
                mode: "custom_polyhedron".into(),
                fast_path: false,
                graph: Some(GraphStats::of(&g)),
                problem1: None,
                problem2: None,
                notes: vec!["custom polyhedron: the face graph is built, the decision procedures are not run".into()],
                timing: Timing {
                    graph_build_ms: Some(build),
                    total_ms: 0.0,
                },
            }
        }
        LoadedSystem::Standard(sys) => analyze_standard(&sys, args)?,
    };
    report.timing.total_ms = millis(start);
    if let Some(path) = &args.report {
        write_file(path, &to_json(&report))?;
    }
    Ok(report)
}

fn analyze_standard(sys: &SwitchedSystem, args: &AnalyzeArgs) -> Result<AnalysisReport, CliError> {
    let fast = !args.force_general && sys.len() == 2 && sys.matrices().iter().all(is_undirected_stochastic);
    let mut notes = Vec::new();
    let mut build = None;
    let graph = if sys.dim() <= args.max_n {
        let t = Instant::now();
        let g = build_face_graph_with_limit(sys, args.max_n)?;
        build = Some(millis(t));
        Some(g)
    } else if fast {
        notes.push(format!(
            "n = {} exceeds --max-n {}: the face graph is skipped and reachability is not decided",
            sys.dim(),
            args.max_n
        ));
        None
    } else {
        return Err(CliError::Capacity(format!(
            "n = {} exceeds --max-n {}; the face graph has about 3^n/2 nodes",
            sys.dim(),
            args.max_n
        )));
    };
    if let Some(path) = &args.dot {
        let g = graph
            .as_ref()
            .ok_or_else(|| CliError::Capacity("--dot needs the face graph, which exceeds --max-n".into()))?;
        write_file(path, &g.to_dot())?;
    }
    let problem1 = if fast {
        let (a1, a2) = (sys.matrix(0), sys.matrix(1));
        let v = decide_two_undirected(a1, a2).map_err(|e| CliError::Internal(e.to_string()))?;
        VerdictReport::from_pair(&v)
    } else {
        let g = graph.as_ref().expect("general path has a graph");
        VerdictReport::from_verdict(&decide_problem1(g), "face_graph")
    };
    let problem2 = graph
        .as_ref()
        .map(|g| verified(VerdictReport::from_verdict(&decide_problem2(g), "face_graph"), sys))
        .transpose()?;
    Ok(AnalysisReport {
        tool: ToolInfo::default(),
        system: SystemSummary::of(sys),
        mode: "standard".into(),
        fast_path: fast,
        graph: graph.as_ref().map(GraphStats::of),
        problem1: Some(verified(problem1, sys)?),
        problem2,
        notes,
        timing: Timing {
            graph_build_ms: build,
            total_ms: 0.0,
        },
    })
}

/// Runs the enumeration oracle. On disagreement under `--compare` the report
/// is still written before the error is returned.
pub fn oracle(args: &OracleArgs) -> Result<OracleReport, CliError> {
    let start = Instant::now();
    let sys = standard(load(&args.path)?, "oracle")?;
    let limit = args.max_n.min(MAX_ORACLE_N);
    if sys.dim() > limit {
        return Err(CliError::Capacity(format!(
            "n = {} exceeds the oracle limit {limit}; use `analyze`",
            sys.dim()
        )));
    }
    let p1 = verified(
        VerdictReport::from_verdict(&brute_force_problem1(&sys, args.budget)?, "oracle"),
        &sys,
    )?;
    let p2 = verified(
        VerdictReport::from_verdict(&brute_force_problem2(&sys, args.budget)?, "oracle"),
        &sys,
    )?;
    let comparison = if args.compare {
        let g = build_face_graph_with_limit(&sys, limit)?;
        let (g1, g2) = (decide_problem1(&g).answer, decide_problem2(&g).answer);
        Some(Comparison {
            agreement: g1 == p1.answer && g2 == p2.answer,
            graph_problem1: g1,
            graph_problem2: g2,
        })
    } else {
        None
    };
    let report = OracleReport {
        tool: ToolInfo::default(),
        system: SystemSummary::of(&sys),
        budget: args.budget,
        problem1: p1,
        problem2: p2,
        comparison,
        timing: Timing {
            graph_build_ms: None,
            total_ms: millis(start),
        },
    };
    if let Some(path) = &args.report {
        write_file(path, &to_json(&report))?;
    }
    if let Some(c) = &report.comparison {
        if !c.agreement {
            let mut which = Vec::new();
            if c.graph_problem1 != report.problem1.answer {
                which.push(report.problem1.problem.clone());
            }
            if c.graph_problem2 != report.problem2.answer {
                which.push(report.problem2.problem.clone());
            }
            return Err(CliError::Disagreement(which.join(" and ")));
        }
    }
    Ok(report)
}

fn parse_word(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Argument(format!("invalid matrix index {s:?} in --word")))
        })
        .collect()
}

/// Returns the CSV trace and the final seminorm.
pub fn simulate_trace(args: &SimulateArgs) -> Result<(String, String), CliError> {
    let sys = standard(load(&args.path)?, "simulate")?;
    let x0 = parse_vector(&args.x0)?;
    let word = parse_word(&args.word)?;
    let trace = simulate(&sys, &x0, &word, args.periods)?;
    Ok((trace.to_csv(), trace.final_seminorm().to_string()))
}

pub fn census(n: usize) -> Result<CensusReport, CliError> {
    let c = FaceCensus::new(n)?;
    Ok(CensusReport {
        n: c.n,
        total_faces: c.total_faces,
        proper_pairs: c.proper_pairs,
    })
}

fn word_text(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn verdict_lines(out: &mut String, v: &VerdictReport, witness: bool) {
    let _ = writeln!(out, "{}: {} ({})", v.problem, v.answer, v.method);
    if let Some(s) = &v.failing_sequence {
        let _ = writeln!(out, "  failing sequence: {s}");
    }
    if !witness {
        return;
    }
    if let Some(c) = &v.cycle_witness {
        let _ = writeln!(out, "  cycle: face {} under word {}", c.face, word_text(&c.word));
    }
    if let Some(s) = &v.steering {
        let _ = writeln!(out, "  universal word: {}", word_text(&s.universal_word));
        for fw in &s.per_face_words {
            let _ = writeln!(out, "  {}: {}", fw.face, word_text(&fw.word));
        }
    }
    if !v.stuck_faces.is_empty() {
        let _ = writeln!(out, "  stuck faces: {}", v.stuck_faces.join(" "));
    }
}

/// Human-readable summary of an analysis.
pub fn analysis_summary(r: &AnalysisReport, witness: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, m = {} ({})", r.system.n, r.system.m, r.system.names.join(", "));
    if r.fast_path {
        let _ = writeln!(out, "path: two undirected stochastic matrices");
    }
    if let Some(g) = &r.graph {
        let _ = writeln!(out, "graph: {} nodes, {} edges", g.nodes, g.edges);
    }
    for v in r.problem1.iter().chain(&r.problem2) {
        verdict_lines(&mut out, v, witness);
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

pub fn oracle_summary(r: &OracleReport, witness: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, m = {} ({})", r.system.n, r.system.m, r.system.names.join(", "));
    verdict_lines(&mut out, &r.problem1, witness);
    verdict_lines(&mut out, &r.problem2, witness);
    if let Some(c) = &r.comparison {
        let _ = writeln!(out, "{}", if c.agreement { "agreement" } else { "DISAGREEMENT" });
    }
    out
}

pub(crate) fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|source| CliError::Write {
        path: "<output>".into(),
        source,
    })
}
