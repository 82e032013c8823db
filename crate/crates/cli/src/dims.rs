use std::path::Path;

use anyhow::{Context, Result};
use teachdim::concept::pattern;
use teachdim::dimensions::{rtd, sauer_bound, sauer_rtd_implication, td_max, td_min, vcd};
use teachdim::ConceptClass;

use crate::family::{single, FamilySpec};
use crate::{policy_str, ClassOpts, Common, Format};

/// Class plus a formatter for instance sets.
struct Source {
    name: String,
    cc: ConceptClass,
    policy: Option<bool>,
    fmt: Box<dyn Fn(teachdim::BitSet) -> String>,
}

fn load(
    class_file: Option<&Path>,
    spec: &FamilySpec,
    class: &ClassOpts,
    common: &Common,
) -> Result<Source> {
    let limits = common.limits();
    if let Some(path) = class_file {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading class file {}", path.display()))?;
        let cc =
            ConceptClass::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
        return Ok(Source {
            name: path.display().to_string(),
            cc,
            policy: None,
            fmt: Box::new(|s| s.to_string()),
        });
    }
    let g = single(spec, limits.vertex_cap)?;
    let cc = class.build(&g, false, &limits)?;
    let name = g.name.clone();
    Ok(Source {
        name,
        cc,
        policy: class.policy(false),
        fmt: Box::new(move |s| g.format_set(s)),
    })
}

pub fn run(
    class_file: Option<&Path>,
    spec: &FamilySpec,
    class: &ClassOpts,
    common: &Common,
) -> Result<bool> {
    let limits = common.limits();
    let src = load(class_file, spec, class, common)?;
    let cc = &src.cc;
    let (d, witness) = vcd(cc)?;
    let cert = rtd(cc, &limits)?;
    let (lo, hi) = (td_min(cc, &limits)?, td_max(cc, &limits)?);
    let m = cc.len() as u128;
    let x = cc.domain_size();
    let implied = sauer_rtd_implication(cc);
    match common.format {
        Format::Tsv => {
            if class_file.is_some() {
                println!("# dims class={}", src.name);
            } else {
                println!(
                    "# dims kind={} include_empty={} {}",
                    class.kind.as_str(),
                    policy_str(src.policy),
                    spec.describe()
                );
            }
            println!("size\t{m}");
            println!("domain\t{x}");
            println!("vcd\t{d}\t{}", (src.fmt)(witness));
            println!("td_min\t{lo}");
            println!("td_max\t{hi}");
            println!("rtd\t{}", cert.rtd);
            for (k, l) in cert.levels.iter().enumerate() {
                let members: Vec<String> = l
                    .concepts
                    .iter()
                    .zip(&l.teaching_sets)
                    .map(|(&i, &t)| format!("{}:{}", (src.fmt)(cc.concepts()[i]), (src.fmt)(t)))
                    .collect();
                println!("level\t{k}\t{}\t{}", l.td_min, members.join(" "));
            }
            for (label, dd) in [("vcd", d), ("rtd", cert.rtd)] {
                let b = sauer_bound(x, dd);
                println!(
                    "sauer_{label}\t{m} <= {b}\t{}",
                    if m <= b { "ok" } else { "VIOLATED" }
                );
            }
            match implied {
                Some(k) => println!(
                    "sauer_implication\t{m} > {} => rtd >= {k}",
                    sauer_bound(x, k - 1)
                ),
                None => println!("sauer_implication\tnone"),
            }
        }
        Format::Json => {
            let levels: Vec<_> = cert
                .levels
                .iter()
                .map(|l| {
                    serde_json::json!({
                        "td_min": l.td_min,
                        "concepts": l.concepts.iter().map(|&i| pattern(cc.concepts()[i], x)).collect::<Vec<_>>(),
                        "teaching_sets": l.teaching_sets.iter().map(|&t| (src.fmt)(t)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let v = serde_json::json!({
                "command": "dims",
                "source": src.name,
                "include_empty": src.policy,
                "size": cc.len(),
                "domain": x,
                "vcd": d,
                "vcd_witness": (src.fmt)(witness),
                "td_min": lo,
                "td_max": hi,
                "rtd": cert.rtd,
                "levels": levels,
                "sauer_vcd": sauer_bound(x, d).to_string(),
                "sauer_rtd": sauer_bound(x, cert.rtd).to_string(),
                "sauer_rtd_lower_bound": implied,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(true)
}
