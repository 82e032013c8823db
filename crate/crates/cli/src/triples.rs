use anyhow::{Context, Result};
use serde::Serialize;
use teachdim::con::con_triple;
use teachdim::star::star_triple;

use crate::family::FamilySpec;
use crate::par::map_ordered;
use crate::{policy_str, ClassOpts, Common, Format, Kind};

#[derive(Debug, Serialize)]
struct Row {
    name: String,
    n: usize,
    m: usize,
    bound: usize,
    rtd: usize,
    vcd: usize,
    /// The strict link, or "violated" when the chain fails.
    strict: String,
}

#[derive(Serialize)]
struct Table<'a> {
    command: &'static str,
    kind: &'static str,
    bound: &'static str,
    include_empty: Option<bool>,
    source: String,
    rows: &'a [Row],
}

pub fn run(spec: &FamilySpec, class: &ClassOpts, common: &Common) -> Result<bool> {
    let limits = common.limits();
    let graphs = spec.graphs(limits.vertex_cap)?;
    let policy = class.policy(false);
    let rows = map_ordered(&graphs, common.parallel, |g| -> Result<Row> {
        let t = match policy {
            None => star_triple(&g.graph, &limits),
            Some(e) => con_triple(&g.graph, e, &limits),
        }
        .with_context(|| format!("graph {}", g.name))?;
        Ok(Row {
            name: g.name.clone(),
            n: g.graph.n(),
            m: g.graph.edge_count(),
            bound: t.bound,
            rtd: t.rtd,
            vcd: t.vcd,
            strict: t.strict().map_or("violated", |s| s.as_str()).to_string(),
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let bound = match class.kind {
        Kind::Star => "delta",
        Kind::Con => "ell",
    };
    match common.format {
        Format::Tsv => {
            println!(
                "# triples kind={} include_empty={} {}",
                class.kind.as_str(),
                policy_str(policy),
                spec.describe()
            );
            println!("name\tn\tm\t{bound}\trtd\tvcd\tstrict");
            for r in &rows {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.name, r.n, r.m, r.bound, r.rtd, r.vcd, r.strict
                );
            }
        }
        Format::Json => {
            let table = Table {
                command: "triples",
                kind: class.kind.as_str(),
                bound,
                include_empty: policy,
                source: spec.describe(),
                rows: &rows,
            };
            println!("{}", serde_json::to_string_pretty(&table)?);
        }
    }
    Ok(true)
}
