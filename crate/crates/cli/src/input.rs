use std::path::PathBuf;

use bnb_core::corpus::{build_family, parse_edge_list, parse_graph6, FamilySpec};
use bnb_core::solvers::SearchMode;
use bnb_core::{Broadcast, SolveLimits, Tree};
use clap::{Args, ValueEnum};
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Family spec, e.g. "spider:2,2,2" or "dspider:2,2/5/2,2".
    #[arg(value_name = "SPEC", conflicts_with_all = ["input", "family", "g6"])]
    pub spec: Option<String>,
    /// Read the tree from a file.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Format of --input.
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    /// Build the tree from a family spec.
    #[arg(long, value_name = "SPEC", conflicts_with_all = ["input", "g6"])]
    pub family: Option<String>,
    /// Decode the tree from a graph6 string.
    #[arg(long, value_name = "STRING", conflicts_with = "input")]
    pub g6: Option<String>,
}

/// Where a tree came from, as recorded in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InputDescriptor {
    File { path: String, format: &'static str },
    Family { spec: String },
    Graph6 { string: String },
}

impl InputArgs {
    pub fn load(&self) -> CliResult<(Tree, InputDescriptor)> {
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let (tree, format) = match self.format {
                Format::Edgelist => (parse_edge_list(&text)?, "edgelist"),
                Format::Graph6 => (parse_graph6(text.trim())?, "graph6"),
            };
            let desc = InputDescriptor::File {
                path: path.display().to_string(),
                format,
            };
            return Ok((tree, desc));
        }
        if let Some(g6) = &self.g6 {
            let tree = parse_graph6(g6)?;
            return Ok((tree, InputDescriptor::Graph6 { string: g6.clone() }));
        }
        match self.family.as_ref().or(self.spec.as_ref()) {
            Some(spec) => {
                let parsed: FamilySpec = spec.parse()?;
                let tree = build_family(&parsed)?;
                Ok((
                    tree,
                    InputDescriptor::Family {
                        spec: parsed.to_string(),
                    },
                ))
            }
            None => Err(CliError::Usage(
                "no tree given: pass SPEC, --family, --input or --g6".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BroadcastArgs {
    /// File holding a broadcast as "v:f" pairs or a JSON strength array.
    #[arg(long, value_name = "FILE", conflicts_with = "strengths")]
    pub broadcast: Option<PathBuf>,
    /// Inline broadcast, e.g. "0:2 4:2".
    #[arg(long, value_name = "PAIRS")]
    pub strengths: Option<String>,
}

impl BroadcastArgs {
    pub fn is_given(&self) -> bool {
        self.broadcast.is_some() || self.strengths.is_some()
    }

    pub fn load<'t>(&self, t: &'t Tree) -> CliResult<Option<Broadcast<'t>>> {
        let text = match (&self.broadcast, &self.strengths) {
            (Some(path), _) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
            (None, Some(inline)) => inline.clone(),
            (None, None) => return Ok(None),
        };
        parse_broadcast(t, &text).map(Some)
    }
}

fn parse_broadcast<'t>(t: &'t Tree, text: &str) -> CliResult<Broadcast<'t>> {
    if text.trim_start().starts_with('[') {
        let raw: Vec<i64> = serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("broadcast JSON: {e}")))?;
        Broadcast::from_signed(t, &raw).map_err(CliError::broadcast)
    } else {
        Broadcast::parse(t, text).map_err(CliError::broadcast)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    PureEnum,
    Pruned,
    Restricted,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> SearchMode {
        match m {
            ModeArg::PureEnum => SearchMode::PureEnum,
            ModeArg::Pruned => SearchMode::Pruned,
            ModeArg::Restricted => SearchMode::Restricted,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Solver budget as "nodes=N,ms=M" (either key may be omitted).
    #[arg(long, value_name = "BUDGET")]
    pub limits: Option<String>,
    /// Exact solver to run.
    #[arg(long, value_enum, default_value = "pruned")]
    pub mode: ModeArg,
}

impl SolverArgs {
    pub fn limits(&self) -> CliResult<SolveLimits> {
        let base = SolveLimits::default();
        let (mut nodes, mut time) = (base.max_nodes, base.time_budget);
        if let Some(text) = &self.limits {
            for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| CliError::Usage(format!("bad --limits entry {part:?}")))?;
                let value: u64 = value
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad --limits value {value:?}")))?;
                match key {
                    "nodes" => nodes = value,
                    "ms" => time = std::time::Duration::from_millis(value),
                    _ => return Err(CliError::Usage(format!("unknown --limits key {key:?}"))),
                }
            }
        }
        Ok(SolveLimits::new(nodes, time, self.mode.into())?)
    }
}
