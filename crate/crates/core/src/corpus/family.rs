use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// A parametric tree family.
///
/// Labelling: heads and listed spine vertices take the lowest labels, then
/// legs in the order given, each leg numbered outward from its head.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `Path(n)`: vertices `0..n` in order.
    Path(usize),
    /// Generalized spider with one leg per entry; order `1 + Σ legs`.
    Spider(Vec<usize>),
    /// Two heads `0` and `1` joined by a path of length `bridge`.
    /// Order `2 + Σ legs1 + Σ legs2 + (bridge - 1)`.
    DoubleSpider {
        legs1: Vec<usize>,
        bridge: usize,
        legs2: Vec<usize>,
    },
    /// Spine vertices `0..k` carrying `leaf_counts[i]` pendant leaves each.
    /// `spacing[i]` extra degree-2 vertices are inserted between spine
    /// vertices `i` and `i + 1` (missing entries mean 0).
    Caterpillar {
        leaf_counts: Vec<usize>,
        spacing: Vec<usize>,
    },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) => *n,
            FamilySpec::Spider(legs) => 1 + legs.iter().sum::<usize>(),
            FamilySpec::DoubleSpider {
                legs1,
                bridge,
                legs2,
            } => 2 + legs1.iter().sum::<usize>() + legs2.iter().sum::<usize>() + bridge - 1,
            FamilySpec::Caterpillar {
                leaf_counts,
                spacing,
            } => {
                leaf_counts.len()
                    + leaf_counts.iter().sum::<usize>()
                    + spacing.iter().sum::<usize>()
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::BadSpec(msg.to_string()));
        match self {
            FamilySpec::Path(n) if *n == 0 => bad("path needs at least one vertex"),
            FamilySpec::Spider(legs) if legs.len() < 3 => bad("spider needs at least 3 legs"),
            FamilySpec::Spider(legs) if legs.contains(&0) => bad("spider legs must be >= 1"),
            FamilySpec::DoubleSpider {
                legs1,
                bridge,
                legs2,
            } => {
                if *bridge == 0 {
                    bad("bridge length must be >= 1")
                } else if legs1.is_empty() || legs2.is_empty() {
                    bad("leg lists must be nonempty")
                } else if legs1.contains(&0) || legs2.contains(&0) {
                    bad("legs must be >= 1")
                } else {
                    Ok(())
                }
            }
            FamilySpec::Caterpillar {
                leaf_counts,
                spacing,
            } => {
                if leaf_counts.is_empty() {
                    bad("caterpillar needs a spine vertex")
                } else if spacing.len() >= leaf_counts.len().max(1) {
                    bad("spacing has more entries than spine gaps")
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new(reserved: usize) -> Builder {
        Builder {
            n: reserved,
            edges: Vec::new(),
        }
    }

    fn fresh(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Path of `len` new vertices hanging from `from`; returns its far end.
    fn leg(&mut self, from: usize, len: usize) -> usize {
        let mut prev = from;
        for _ in 0..len {
            let v = self.fresh();
            self.edges.push((prev, v));
            prev = v;
        }
        prev
    }

    fn finish(self) -> Result<Tree> {
        Tree::new(self.n, &self.edges)
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Tree> {
    spec.validate()?;
    let tree = match spec {
        FamilySpec::Path(n) => {
            let mut b = Builder::new(1);
            b.leg(0, n - 1);
            b.finish()?
        }
        FamilySpec::Spider(legs) => {
            let mut b = Builder::new(1);
            for &len in legs {
                b.leg(0, len);
            }
            b.finish()?
        }
        FamilySpec::DoubleSpider {
            legs1,
            bridge,
            legs2,
        } => {
            let mut b = Builder::new(2);
            for &len in legs1 {
                b.leg(0, len);
            }
            let end = b.leg(0, bridge - 1);
            b.edges.push((end, 1));
            for &len in legs2 {
                b.leg(1, len);
            }
            b.finish()?
        }
        FamilySpec::Caterpillar {
            leaf_counts,
            spacing,
        } => {
            let k = leaf_counts.len();
            let mut b = Builder::new(k);
            for i in 1..k {
                let gap = spacing.get(i - 1).copied().unwrap_or(0);
                let end = b.leg(i - 1, gap);
                b.edges.push((end, i));
            }
            for (i, &count) in leaf_counts.iter().enumerate() {
                for _ in 0..count {
                    b.leg(i, 1);
                }
            }
            b.finish()?
        }
    };
    debug_assert_eq!(tree.order(), spec.order());
    Ok(tree)
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadSpec(format!("not a count: {x:?}")))
        })
        .collect()
}

/// Mini-language: `path:9`, `spider:2,2,2`, `dspider:2,2/5/2,2`,
/// `cat:leafcounts=2,1,2` with an optional `;spacing=0,1`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::BadSpec(format!("missing ':' in {s:?}")))?;
        let spec = match kind.trim() {
            "path" => FamilySpec::Path(
                rest.trim()
                    .parse()
                    .map_err(|_| Error::BadSpec(format!("bad path order {rest:?}")))?,
            ),
            "spider" => FamilySpec::Spider(parse_list(rest)?),
            "dspider" => {
                let parts: Vec<&str> = rest.split('/').collect();
                let [l1, bridge, l2] = parts[..] else {
                    return Err(Error::BadSpec("dspider wants legs/bridge/legs".into()));
                };
                FamilySpec::DoubleSpider {
                    legs1: parse_list(l1)?,
                    bridge: bridge
                        .trim()
                        .parse()
                        .map_err(|_| Error::BadSpec(format!("bad bridge {bridge:?}")))?,
                    legs2: parse_list(l2)?,
                }
            }
            "cat" => {
                let mut leaf_counts = None;
                let mut spacing = Vec::new();
                for field in rest.split(';') {
                    match field.trim().split_once('=') {
                        Some(("leafcounts", v)) => leaf_counts = Some(parse_list(v)?),
                        Some(("spacing", v)) => spacing = parse_list(v)?,
                        _ => {
                            return Err(Error::BadSpec(format!("bad caterpillar field {field:?}")))
                        }
                    }
                }
                FamilySpec::Caterpillar {
                    leaf_counts: leaf_counts
                        .ok_or_else(|| Error::BadSpec("cat needs leafcounts=".into()))?,
                    spacing,
                }
            }
            other => return Err(Error::BadSpec(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Spider(legs) => write!(f, "spider:{}", join(legs)),
            FamilySpec::DoubleSpider {
                legs1,
                bridge,
                legs2,
            } => write!(f, "dspider:{}/{}/{}", join(legs1), bridge, join(legs2)),
            FamilySpec::Caterpillar {
                leaf_counts,
                spacing,
            } => {
                write!(f, "cat:leafcounts={}", join(leaf_counts))?;
                if !spacing.is_empty() {
                    write!(f, ";spacing={}", join(spacing))?;
                }
                Ok(())
            }
        }
    }
}
