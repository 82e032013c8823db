use std::path::PathBuf;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, ValueEnum};
use teachdim::families::{self, NamedGraph};
use teachdim::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Path,
    Cycle,
    #[value(name = "fig1-left")]
    Fig1Left,
    #[value(name = "fig1-right")]
    Fig1Right,
    Fig2,
    Random,
    File,
}

/// Inclusive size range written `A..B`, `A..=B` or `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeRange {
    pub lo: usize,
    pub hi: usize,
}

impl std::str::FromStr for SizeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad size {t:?}: {e}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(SizeRange { lo, hi })
    }
}

#[derive(Debug, Clone, Args)]
pub struct FamilySpec {
    /// Graph family.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Vertex counts, e.g. `4` or `2..8` (inclusive).
    #[arg(long)]
    pub n: Option<SizeRange>,
    /// Edge probability for `random`.
    #[arg(long)]
    pub p: Option<f64>,
    /// Seed for `random`; graph k of a size uses `seed + k`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random graphs per vertex count.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    /// Graph file for `file`.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl FamilySpec {
    pub fn graphs(&self, vertex_cap: usize) -> Result<Vec<NamedGraph>> {
        let family = self.family.context("--family is required")?;
        let sizes = || -> Result<std::ops::RangeInclusive<usize>> {
            let r = self
                .n
                .with_context(|| format!("--n is required for family {family:?}"))?;
            ensure!(
                r.hi <= vertex_cap,
                "size {} exceeds the vertex cap {vertex_cap}",
                r.hi
            );
            Ok(r.lo..=r.hi)
        };
        let out = match family {
            Family::Complete => sizes()?.map(families::complete).collect::<Result<_, _>>()?,
            Family::Path => sizes()?.map(families::path).collect::<Result<_, _>>()?,
            Family::Cycle => sizes()?.map(families::cycle).collect::<Result<_, _>>()?,
            Family::Fig1Left => vec![families::fig1_left()],
            Family::Fig1Right => vec![families::fig1_right()],
            Family::Fig2 => vec![families::fig2()],
            Family::Random => {
                let p = self.p.context("--p is required for family random")?;
                let seed = self.seed.context("--seed is required for family random")?;
                ensure!(p > 0.0 && p < 1.0, "--p must lie in (0,1), got {p}");
                let mut gs = Vec::new();
                for n in sizes()? {
                    for k in 0..self.count {
                        gs.push(families::random_gnp(n, p, seed.wrapping_add(k))?);
                    }
                }
                gs
            }
            Family::File => {
                let path = self
                    .file
                    .as_ref()
                    .context("--file is required for family file")?;
                vec![read_graph(path)?]
            }
        };
        Ok(out)
    }

    /// Header line describing the family, echoing any random seed.
    pub fn describe(&self) -> String {
        let mut s = match self.family {
            Some(f) => format!(
                "family={}",
                f.to_possible_value().expect("named").get_name()
            ),
            None => "family=none".to_string(),
        };
        if let Some(r) = self.n {
            s.push_str(&format!(" n={}..{}", r.lo, r.hi));
        }
        if self.family == Some(Family::Random) {
            s.push_str(&format!(
                " prng=ChaCha8 p={} seed={} count={}",
                self.p.unwrap_or(f64::NAN),
                self.seed.unwrap_or(0),
                self.count
            ));
        }
        if let Some(f) = &self.file {
            s.push_str(&format!(" file={}", f.display()));
        }
        s
    }
}

pub fn read_graph(path: &PathBuf) -> Result<NamedGraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading graph file {}", path.display()))?;
    let g = Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into());
    Ok(NamedGraph::indexed(name, g))
}

/// Exactly one graph from the spec.
pub fn single(spec: &FamilySpec, vertex_cap: usize) -> Result<NamedGraph> {
    let mut gs = spec.graphs(vertex_cap)?;
    if gs.len() != 1 {
        bail!(
            "expected a single graph, the family spec gives {}",
            gs.len()
        );
    }
    Ok(gs.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(
            "2..8".parse::<SizeRange>().unwrap(),
            SizeRange { lo: 2, hi: 8 }
        );
        assert_eq!(
            "3..=5".parse::<SizeRange>().unwrap(),
            SizeRange { lo: 3, hi: 5 }
        );
        assert_eq!(
            "4".parse::<SizeRange>().unwrap(),
            SizeRange { lo: 4, hi: 4 }
        );
        assert!("5..2".parse::<SizeRange>().is_err());
    }
}
