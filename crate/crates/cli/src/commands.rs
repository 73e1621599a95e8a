use std::time::Instant;

use bnb_core::profile::{profile, BranchStats};
use bnb_core::solvers::{alpha_forest, compute, lower_bound_witness, SearchMode};
use bnb_core::{BoundsReport, Broadcast, Hops, SolveLimits, Tree};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::input::InputDescriptor;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

pub const TOOL: Tool = Tool {
    name: "bnb",
    version: TOOL_VERSION,
};

#[derive(Debug, Serialize)]
pub struct LimitsRecord {
    pub max_nodes: u64,
    pub time_budget_ms: u128,
    pub mode: SearchMode,
}

impl From<&SolveLimits> for LimitsRecord {
    fn from(l: &SolveLimits) -> Self {
        LimitsRecord {
            max_nodes: l.max_nodes,
            time_budget_ms: l.time_budget.as_millis(),
            mode: l.mode,
        }
    }
}

#[derive(Debug, Default, Serialize)]
pub struct Flags {
    pub budget_exceeded: bool,
    pub optima_cap_hit: bool,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub total_ms: f64,
}

impl Timings {
    pub fn since(start: Instant) -> Timings {
        Timings {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// Output of `bounds`.
#[derive(Debug, Serialize)]
pub struct RunRecord<'t> {
    pub schema_version: u32,
    pub tool: Tool,
    pub input: InputDescriptor,
    pub limits: Option<LimitsRecord>,
    pub report: BoundsReport<'t>,
    pub flags: Flags,
    pub timings: Timings,
}

#[derive(Debug, Serialize)]
struct BranchRow {
    vertex: usize,
    leaves: Vec<usize>,
    #[serde(flatten)]
    stats: BranchStats,
}

#[derive(Debug, Serialize)]
struct InteriorSummary {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    components: usize,
    alpha: usize,
    max_independent_set: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct AnalyzeRecord {
    schema_version: u32,
    tool: Tool,
    input: InputDescriptor,
    n: usize,
    edges: Vec<(usize, usize)>,
    diameter: Hops,
    shape: Vec<&'static str>,
    b_t: usize,
    rho: usize,
    w_int_size: usize,
    leaves: Vec<usize>,
    branch: Vec<usize>,
    b0: Vec<usize>,
    b1: Vec<usize>,
    b2plus: Vec<usize>,
    w_ext: Vec<usize>,
    w_int: Vec<usize>,
    branch_table: Vec<BranchRow>,
    interior: InteriorSummary,
}

fn list(v: &[usize]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |x| x.to_string())
}

pub fn analyze(t: &Tree, input: InputDescriptor, json: bool) -> CliResult<String> {
    let p = profile(t);
    let (alpha, set) = alpha_forest(&p.interior.graph);
    let host = |vs: &[usize]| {
        vs.iter()
            .map(|&i| p.interior.original(i))
            .collect::<Vec<_>>()
    };
    let interior = InteriorSummary {
        vertices: p.interior.original.clone(),
        edges: p
            .interior
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| (p.interior.original(a), p.interior.original(b)))
            .collect(),
        components: p.interior.graph.component_count(),
        alpha,
        max_independent_set: host(&set),
    };
    let branch_table = p
        .loss_table
        .iter()
        .map(|(&vertex, &stats)| BranchRow {
            vertex,
            leaves: p.leaf_sets[&vertex].clone(),
            stats,
        })
        .collect();
    let rec = AnalyzeRecord {
        schema_version: SCHEMA_VERSION,
        tool: TOOL,
        input,
        n: t.order(),
        edges: t.edges().to_vec(),
        diameter: t.diameter(),
        shape: p.shape.labels(),
        b_t: p.branch_count(),
        rho: p.rho(),
        w_int_size: p.w_int.len(),
        leaves: p.leaves.clone(),
        branch: p.branch.clone(),
        b0: p.b0.clone(),
        b1: p.b1.clone(),
        b2plus: p.b2plus.clone(),
        w_ext: p.w_ext.clone(),
        w_int: p.w_int.clone(),
        branch_table,
        interior,
    };
    if json {
        return Ok(to_json(&rec));
    }
    let mut out = String::new();
    let mut line = |k: &str, v: String| out.push_str(&format!("{k:<12}{v}\n"));
    line("n", rec.n.to_string());
    line("diameter", rec.diameter.to_string());
    line("shape", rec.shape.join(","));
    line("b(T)", rec.b_t.to_string());
    line("rho(T)", rec.rho.to_string());
    line("|W_int|", rec.w_int_size.to_string());
    line("leaves", list(&rec.leaves));
    line("B0", list(&rec.b0));
    line("B1", list(&rec.b1));
    line("B>=2", list(&rec.b2plus));
    line("W_ext", list(&rec.w_ext));
    line("W_int", list(&rec.w_int));
    line(
        "Int(T)",
        format!(
            "{} vertices, {} components, alpha {}",
            rec.interior.vertices.len(),
            rec.interior.components,
            rec.interior.alpha
        ),
    );
    if !rec.branch_table.is_empty() {
        out.push_str("branch  leaves          max  sum  loss\n");
        for r in &rec.branch_table {
            out.push_str(&format!(
                "{:<8}{:<16}{:<5}{:<5}{}\n",
                r.vertex,
                list(&r.leaves),
                r.stats.max,
                r.stats.sum,
                r.stats.loss
            ));
        }
    }
    Ok(out)
}

pub fn bounds(
    t: &Tree,
    input: InputDescriptor,
    limits: Option<&SolveLimits>,
    json: bool,
) -> CliResult<String> {
    let start = Instant::now();
    let report = compute(t, limits)?;
    if report.budget_exceeded {
        log::warn!(
            "solver budget exhausted after {} nodes; best weight {}",
            report.search_nodes.unwrap_or(0),
            opt(report.best_found)
        );
    }
    let rec = RunRecord {
        schema_version: SCHEMA_VERSION,
        tool: TOOL,
        input,
        limits: limits.map(LimitsRecord::from),
        flags: Flags {
            budget_exceeded: report.budget_exceeded,
            optima_cap_hit: false,
        },
        report,
        timings: Timings::since(start),
    };
    if json {
        return Ok(to_json(&rec));
    }
    let r = &rec.report;
    let mut out = format!(
        "n {}  b(T) {}  rho {}  |W_int| {}  alpha(Int) {}  alpha(T[R]) {}\n",
        r.n, r.b_t, r.rho, r.w_int_size, r.alpha_int, r.alpha_r
    );
    out.push_str(&format!("shape       {}\n", r.shape.labels().join(",")));
    out.push_str(&format!("lower       {}\n", opt(r.lower)));
    if r.exact.is_some() || r.exact_solver.is_some() {
        let exact = match (r.exact, r.best_found) {
            (Some(x), _) => x.to_string(),
            (None, Some(b)) => format!(">= {b} (budget exceeded)"),
            (None, None) => "-".into(),
        };
        out.push_str(&format!("exact       {exact}\n"));
    }
    out.push_str(&format!("upper       {}\n", opt(r.upper)));
    out.push_str(&format!("conjectured {}\n", opt(r.conjectured)));
    if let Some(f) = r.formula {
        out.push_str(&format!("formula     {} ({:?})\n", f.value, f.formula));
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct WitnessRecord {
    schema_version: u32,
    tool: Tool,
    input: InputDescriptor,
    lower: Hops,
    weight: Hops,
    bn_independent: bool,
    strengths: Vec<Hops>,
    text: String,
}

pub fn witness(t: &Tree, input: InputDescriptor, json: bool) -> CliResult<String> {
    let (lower, w) = match lower_bound_witness(t) {
        Err(bnb_core::Error::NoBranchVertices) => {
            return Err(CliError::Usage(
                "witness: paths have no branch vertices and are excluded".into(),
            ))
        }
        other => other?,
    };
    // Re-check from scratch before printing anything.
    let fresh = Broadcast::new(t, w.strengths().to_vec()).map_err(CliError::from)?;
    if !fresh.is_bn_independent() || fresh.weight() != lower {
        return Err(CliError::Inconsistent(format!(
            "witness {} fails verification (weight {}, expected {lower})",
            fresh.to_text(),
            fresh.weight()
        )));
    }
    let rec = WitnessRecord {
        schema_version: SCHEMA_VERSION,
        tool: TOOL,
        input,
        lower,
        weight: fresh.weight(),
        bn_independent: true,
        strengths: fresh.strengths().to_vec(),
        text: fresh.to_text(),
    };
    if json {
        return Ok(to_json(&rec));
    }
    Ok(format!(
        "weight {}\nbn-independent true\nbroadcast {}\n",
        rec.weight, rec.text
    ))
}

#[derive(Debug, Serialize)]
struct Verdicts {
    schema_version: u32,
    tool: Tool,
    input: InputDescriptor,
    strengths: Vec<Hops>,
    weight: Hops,
    valid: bool,
    dominating: bool,
    undominated: Vec<usize>,
    bn_independent: bool,
    bn_violation: Option<bnb_core::Violation>,
    hearing_independent: bool,
    hearing_violation: Option<HearingViolation>,
    /// Present only for bn-independent broadcasts.
    maximal_bn: Option<bool>,
}

#[derive(Debug, Serialize)]
struct HearingViolation {
    hearer: usize,
    broadcaster: usize,
}

pub fn verify(t: &Tree, input: InputDescriptor, b: Broadcast<'_>, json: bool) -> CliResult<String> {
    let bn_violation = b.bn_violation();
    let maximal_bn = if bn_violation.is_none() {
        Some(b.is_maximal_bn().map_err(CliError::from)?)
    } else {
        None
    };
    let rec = Verdicts {
        schema_version: SCHEMA_VERSION,
        tool: TOOL,
        input,
        strengths: b.strengths().to_vec(),
        weight: b.weight(),
        valid: true,
        dominating: b.is_dominating(),
        undominated: b.undominated(),
        bn_independent: bn_violation.is_none(),
        bn_violation,
        hearing_independent: b.is_hearing_independent(),
        hearing_violation: b
            .hearing_violation()
            .map(|(hearer, broadcaster)| HearingViolation {
                hearer,
                broadcaster,
            }),
        maximal_bn,
    };
    debug_assert_eq!(t.order(), rec.strengths.len());
    if json {
        return Ok(to_json(&rec));
    }
    let mut out = format!(
        "broadcast {}\nweight {}\nvalid true\n",
        b.to_text(),
        rec.weight
    );
    out.push_str(&format!("dominating {}", rec.dominating));
    if !rec.dominating {
        out.push_str(&format!(" (undominated: {})", list(&rec.undominated)));
    }
    out.push_str(&format!("\nbn-independent {}", rec.bn_independent));
    if let Some(v) = &rec.bn_violation {
        out.push_str(&format!(
            " ({} and {} overlap at vertex {}",
            v.first, v.second, v.vertex
        ));
        if let Some((x, y)) = v.edge {
            out.push_str(&format!(", edge {x}-{y}"));
        }
        out.push(')');
    }
    out.push_str(&format!(
        "\nhearing-independent {}",
        rec.hearing_independent
    ));
    if let Some(h) = &rec.hearing_violation {
        out.push_str(&format!(" ({} hears {})", h.hearer, h.broadcaster));
    }
    out.push_str(&format!("\nmaximal-bn {}\n", opt(rec.maximal_bn)));
    Ok(out)
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records serialize");
    s.push('\n');
    s
}
