use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use teachdim::con::{
    con_superset_teacher, con_tree_teacher, con_vcd_matching_teacher, empty_index,
};
use teachdim::dimensions::rtd;
use teachdim::families::NamedGraph;
use teachdim::star::{star_special_teacher, star_subset_teacher};
use teachdim::teaching::{dump_teacher, plan_to_teacher, verify_pb_teacher, PBTeacher};
use teachdim::{BitSet, ConceptClass, Label, Limits};

use crate::family::{single, FamilySpec};
use crate::{policy_str, ClassOpts, Common, Format, Kind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TeacherName {
    /// Star class: all members as positives, smaller sets preferred.
    Subset,
    /// Star class: the order-Δ teacher with special concepts.
    Special,
    /// Connected sets of a tree: leaves of the spanned subtree.
    Tree,
    /// Connected sets: one positive plus N°(X), larger sets preferred.
    Superset,
    /// Connected sets with VCD = ℓ: N°(X) based, order ℓ.
    Matching,
    /// Any class: the teacher read off an RTD peeling.
    Plan,
}

impl TeacherName {
    fn kind(self) -> Option<Kind> {
        match self {
            TeacherName::Subset | TeacherName::Special => Some(Kind::Star),
            TeacherName::Tree | TeacherName::Superset | TeacherName::Matching => Some(Kind::Con),
            TeacherName::Plan => None,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            TeacherName::Subset => "subset",
            TeacherName::Special => "special",
            TeacherName::Tree => "tree",
            TeacherName::Superset => "superset",
            TeacherName::Matching => "matching",
            TeacherName::Plan => "plan",
        }
    }
}

fn build(
    name: TeacherName,
    g: &NamedGraph,
    class: &ClassOpts,
    limits: &Limits,
) -> Result<(ConceptClass, PBTeacher)> {
    let empty = class.include_empty.unwrap_or(true);
    let built = match name {
        TeacherName::Subset => star_subset_teacher(&g.graph, limits)?,
        TeacherName::Special => star_special_teacher(&g.graph, limits)?,
        TeacherName::Tree => {
            if !empty {
                bail!("the tree teacher needs ∅ in the class");
            }
            con_tree_teacher(&g.graph, limits)?
        }
        TeacherName::Superset => con_superset_teacher(&g.graph, empty, limits)?,
        TeacherName::Matching => con_vcd_matching_teacher(&g.graph, empty, limits)?,
        TeacherName::Plan => {
            let cc = class.build(g, true, limits)?;
            let cert = rtd(&cc, limits)?;
            let t = plan_to_teacher(&cert, &cc)?;
            (cc, t)
        }
    };
    Ok(built)
}

fn parse_concept(g: &NamedGraph, text: &str) -> Result<BitSet> {
    let labels: Vec<&str> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Ok(g.set(&labels)?)
}

fn labelled(g: &NamedGraph, s: teachdim::Sample) -> Vec<String> {
    s.examples()
        .map(|(x, b)| format!("{}{}", g.labels[x], if b == Label::Pos { '+' } else { '-' }))
        .collect()
}

pub fn run(
    spec: &FamilySpec,
    class: &ClassOpts,
    common: &Common,
    name: TeacherName,
    concept: &str,
    explain: bool,
) -> Result<bool> {
    let limits = common.limits();
    let g = single(spec, limits.vertex_cap)?;
    if let Some(k) = name.kind() {
        if k != class.kind {
            bail!(
                "teacher {} works on {} classes; pass --kind {}",
                name.as_str(),
                k.as_str(),
                k.as_str()
            );
        }
    }
    let (cc, t) = build(name, &g, class, &limits)
        .with_context(|| format!("teacher {} on {}", name.as_str(), g.name))?;
    let c = parse_concept(&g, concept)?;
    let i = cc
        .index_of(c)
        .with_context(|| format!("{} is not a concept of the class", g.format_set(c)))?;
    let sample = t.sample(&cc, i);
    let vs = cc.version_space(sample);
    let rivals: Vec<usize> = vs
        .iter()
        .copied()
        .filter(|&j| j != i && !t.pref.prefers(i, j))
        .collect();
    let valid = rivals.is_empty();
    let whole = verify_pb_teacher(&cc, &t)?;
    let set = |j: usize| g.format_set(cc.concepts()[j]);
    let policy = match class.kind {
        Kind::Star => None,
        Kind::Con => Some(class.include_empty.unwrap_or(true)),
    };
    match common.format {
        Format::Tsv => {
            println!(
                "# teach teacher={} kind={} include_empty={} {}",
                name.as_str(),
                class.kind.as_str(),
                policy_str(policy),
                spec.describe()
            );
            println!("concept\t{}", set(i));
            println!("sample\t{}", labelled(&g, sample).join(" "));
            println!("size\t{}", sample.len());
            let vs_sets: Vec<String> = vs.iter().map(|&j| set(j)).collect();
            println!("version_space\t{}", vs_sets.join(" "));
            for &j in &vs {
                if j == i {
                    continue;
                }
                let rel = if t.pref.prefers(i, j) {
                    "preferred over"
                } else {
                    "NOT preferred over"
                };
                println!("preference\t{} {rel} {}", set(i), set(j));
            }
            println!(
                "verdict\t{}",
                if valid {
                    "unique most preferred"
                } else {
                    "FAIL"
                }
            );
            println!("teacher_order\t{}", t.order());
            if let Some(e) = empty_index(&cc) {
                println!("teacher_order_without_empty\t{}", t.order_without(&[e]));
            }
            println!(
                "teacher_valid\t{}",
                whole.as_ref().map_or("yes".to_string(), |cx| format!(
                    "no, {} loses to {}",
                    set(cx.concept),
                    set(cx.rival)
                ))
            );
            if explain {
                println!("# pattern\tsample\tlevel");
                print!("{}", dump_teacher(&cc, &t));
            }
        }
        Format::Json => {
            let v = serde_json::json!({
                "command": "teach",
                "teacher": name.as_str(),
                "kind": class.kind.as_str(),
                "include_empty": policy,
                "source": spec.describe(),
                "concept": set(i),
                "sample": labelled(&g, sample),
                "version_space": vs.iter().map(|&j| set(j)).collect::<Vec<_>>(),
                "rivals": rivals.iter().map(|&j| set(j)).collect::<Vec<_>>(),
                "valid": valid,
                "teacher_order": t.order(),
                "teacher_order_without_empty": empty_index(&cc).map(|e| t.order_without(&[e])),
                "teacher_valid": whole.is_none(),
                "dump": explain.then(|| dump_teacher(&cc, &t)),
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(valid)
}
