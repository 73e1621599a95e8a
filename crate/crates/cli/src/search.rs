use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use bnb_core::corpus::{emit_graph6, enumerate_trees};
use bnb_core::profile::profile;
use bnb_core::solvers::{alpha_forest, alpha_h_exact, compute, formula_two_branch};
use bnb_core::{Error, Hops, SolveLimits, Tree};
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::{LimitsRecord, Timings, Tool, SCHEMA_VERSION, TOOL};
use crate::error::{CliError, CliResult};

/// Largest order the per-tree graph6 field can encode.
const MAX_ORDER: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// exact <= n - b(T) + α(T[R(T)]); violations are findings.
    Question1,
    /// lower <= exact <= upper, with a verified lower-bound witness.
    Sandwich,
    /// exact == n - 1 exactly on paths and spiders.
    Characterization,
    /// α <= α_bn <= α_h < 2 α_bn.
    Chain,
    /// The two-branch formula equals the exact value.
    TwoBranch,
}

impl Check {
    /// Proven statements: a violation means the implementation is wrong.
    pub fn is_theorem(self) -> bool {
        self != Check::Question1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Solved,
    BudgetExceeded,
    NotApplicable,
    Inconsistent,
}

#[derive(Debug, Serialize)]
pub struct TreeRecord {
    kind: &'static str,
    n: usize,
    index: usize,
    g6: String,
    status: Status,
    violation: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<Hops>,
    #[serde(skip_serializing_if = "Option::is_none")]
    best_found: Option<Hops>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<Hops>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<Hops>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conjectured: Option<Hops>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<Hops>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_h: Option<Hops>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<u64>,
}

impl TreeRecord {
    fn new(n: usize, index: usize, t: &Tree) -> TreeRecord {
        TreeRecord {
            kind: "tree",
            n,
            index,
            g6: emit_graph6(t).expect("order checked against MAX_ORDER"),
            status: Status::NotApplicable,
            violation: false,
            detail: None,
            exact: None,
            best_found: None,
            lower: None,
            upper: None,
            conjectured: None,
            formula: None,
            alpha: None,
            alpha_h: None,
            nodes: None,
        }
    }
}

#[derive(Debug, Serialize)]
struct ViolationRef {
    n: usize,
    index: usize,
    g6: String,
}

#[derive(Debug, Serialize)]
struct Summary {
    kind: &'static str,
    schema_version: u32,
    tool: Tool,
    check: Check,
    min_n: usize,
    max_n: usize,
    limits: LimitsRecord,
    trees_per_order: BTreeMap<usize, usize>,
    trees_total: usize,
    solved: usize,
    budget_exceeded: usize,
    not_applicable: usize,
    inconsistent: usize,
    /// `solved + budget_exceeded + not_applicable + inconsistent == trees_total`.
    all_accounted: bool,
    violations: usize,
    violating_trees: Vec<ViolationRef>,
    timings: Timings,
}

pub struct SearchArgs {
    pub min_n: usize,
    pub max_n: usize,
    pub check: Check,
    pub limits: SolveLimits,
    pub jobs: Option<usize>,
}

/// Runs `args.check` over every tree in range, writing one JSON line per
/// tree and a final summary line. Returns the exit code.
pub fn run(args: &SearchArgs, out: &mut dyn Write) -> CliResult<u8> {
    if args.min_n > args.max_n {
        return Err(CliError::Usage("--min-n exceeds --max-n".into()));
    }
    if args.max_n > MAX_ORDER {
        return Err(CliError::Usage(format!(
            "--max-n is limited to {MAX_ORDER}"
        )));
    }
    let start = Instant::now();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;

    let mut summary = Summary {
        kind: "summary",
        schema_version: SCHEMA_VERSION,
        tool: TOOL,
        check: args.check,
        min_n: args.min_n,
        max_n: args.max_n,
        limits: LimitsRecord::from(&args.limits),
        trees_per_order: BTreeMap::new(),
        trees_total: 0,
        solved: 0,
        budget_exceeded: 0,
        not_applicable: 0,
        inconsistent: 0,
        all_accounted: false,
        violations: 0,
        violating_trees: Vec::new(),
        timings: Timings { total_ms: 0.0 },
    };

    for n in args.min_n..=args.max_n {
        let trees: Vec<Tree> = enumerate_trees(n).collect();
        let records: Vec<TreeRecord> = pool.install(|| {
            trees
                .par_iter()
                .enumerate()
                .map(|(i, t)| evaluate(args.check, &args.limits, n, i, t))
                .collect()
        });
        summary.trees_per_order.insert(n, trees.len());
        for r in records {
            summary.trees_total += 1;
            match r.status {
                Status::Solved => summary.solved += 1,
                Status::BudgetExceeded => {
                    log::warn!("n={n} #{} ({}): budget exceeded", r.index, r.g6);
                    summary.budget_exceeded += 1
                }
                Status::NotApplicable => summary.not_applicable += 1,
                Status::Inconsistent => summary.inconsistent += 1,
            }
            if r.violation {
                log::warn!("n={n} #{} ({}): violation", r.index, r.g6);
                summary.violations += 1;
                summary.violating_trees.push(ViolationRef {
                    n,
                    index: r.index,
                    g6: r.g6.clone(),
                });
            }
            writeln!(
                out,
                "{}",
                serde_json::to_string(&r).expect("records serialize")
            )?;
        }
        out.flush()?;
    }

    summary.all_accounted =
        summary.solved + summary.budget_exceeded + summary.not_applicable + summary.inconsistent
            == summary.trees_total;
    summary.timings = Timings::since(start);
    writeln!(
        out,
        "{}",
        serde_json::to_string(&summary).expect("summary serializes")
    )?;
    out.flush()?;

    if args.check == Check::Question1 && summary.violations > 0 {
        eprintln!(
            "question1: {} tree(s) exceed n - b(T) + alpha(T[R(T)])",
            summary.violations
        );
    }
    let failed = summary.inconsistent > 0 || (args.check.is_theorem() && summary.violations > 0);
    Ok(if failed { 3 } else { 0 })
}

fn evaluate(check: Check, limits: &SolveLimits, n: usize, index: usize, t: &Tree) -> TreeRecord {
    let mut rec = TreeRecord::new(n, index, t);
    let p = profile(t);
    let applicable = match check {
        Check::Question1 | Check::Sandwich => !p.branch.is_empty(),
        Check::Characterization | Check::Chain => n >= 2,
        Check::TwoBranch => p.branch.len() == 2,
    };
    if !applicable {
        return rec;
    }

    let report = match compute(t, Some(limits)) {
        Ok(r) => r,
        Err(Error::Inconsistent(m)) => {
            rec.status = Status::Inconsistent;
            rec.violation = check.is_theorem();
            rec.detail = Some(m);
            return rec;
        }
        Err(e) => {
            rec.status = Status::Inconsistent;
            rec.detail = Some(e.to_string());
            return rec;
        }
    };
    rec.lower = report.lower;
    rec.upper = report.upper;
    rec.conjectured = report.conjectured;
    rec.exact = report.exact;
    rec.best_found = report.best_found;
    rec.nodes = report.search_nodes;
    rec.status = if report.budget_exceeded {
        Status::BudgetExceeded
    } else {
        Status::Solved
    };

    match check {
        Check::Question1 => {
            // A budget-limited incumbent is still a valid lower bound on α_bn.
            rec.violation = rec
                .best_found
                .zip(rec.conjectured)
                .is_some_and(|(x, c)| x > c);
        }
        Check::Sandwich => {
            if let (Some(x), Some(lo), Some(up)) = (rec.exact, rec.lower, rec.upper) {
                rec.violation = !(lo <= x && x <= up);
            }
        }
        Check::Characterization => {
            if let Some(x) = rec.exact {
                let shape = p.shape.path || p.shape.spider;
                rec.violation = (x as usize == n - 1) != shape;
            }
        }
        Check::Chain => {
            let alpha = alpha_forest(&t.to_forest()).0;
            rec.alpha = Some(alpha);
            match alpha_h_exact(t, limits) {
                Ok(h) => {
                    rec.alpha_h = Some(h.weight);
                    if let Some(bn) = rec.exact {
                        let h = h.weight;
                        rec.violation = !(alpha as Hops <= bn && bn <= h && h < 2 * bn);
                    }
                }
                Err(_) => rec.status = Status::BudgetExceeded,
            }
        }
        Check::TwoBranch => {
            let f = formula_two_branch(t).expect("two branch vertices checked");
            rec.formula = Some(f);
            if let Some(x) = rec.exact {
                rec.violation = f != x;
            }
        }
    }
    if rec.violation && rec.detail.is_none() {
        rec.detail = Some(format!("{check:?} check failed"));
    }
    rec
}
