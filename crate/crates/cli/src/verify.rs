use anyhow::Result;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use teachdim::con::{
    build_con_class, check_leaf_tree_witness, con_superset_teacher, con_tree_teacher, con_triple,
    con_vcd_matching_teacher, empty_index, leaf_tree_condition, maximal_opponents,
    opponent_claim_violation,
};
use teachdim::dimensions::{
    max_subclass_td_min, rtd, rtd_subclass_lower_bound, sauer_bound, td_min, vcd, FULL_SUBCLASS_MAX,
};
use teachdim::families::NamedGraph;
use teachdim::graph::Graph;
use teachdim::star::{
    build_star_class, star_special_teacher, star_subset_teacher, star_triple,
    star_vcd_characterization,
};
use teachdim::teaching::{plan_to_teacher, verify_pb_teacher, PBTeacher};
use teachdim::tree::{max_leaf_number, max_leaf_number_exhaustive, SPANNING_TREE_ENUM_MAX};
use teachdim::{BitSet, ConceptClass, Limits, Tree};

use crate::family::FamilySpec;
use crate::par::map_ordered;
use crate::{ClassOpts, Common, Format, Kind};

#[derive(Debug, Serialize)]
struct Check {
    graph: String,
    check: &'static str,
    pass: bool,
    detail: String,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'static str,
    kind: &'static str,
    source: String,
    sample_seed: u64,
    checks: &'a [Check],
    failures: usize,
}

struct Ctx<'a> {
    g: &'a NamedGraph,
    limits: &'a Limits,
    policy: Option<bool>,
    samples: usize,
    seed: u64,
    out: Vec<Check>,
}

impl Ctx<'_> {
    fn push(&mut self, check: &'static str, pass: bool, detail: String) {
        self.out.push(Check {
            graph: self.g.name.clone(),
            check,
            pass,
            detail,
        });
    }

    fn result<T>(&mut self, check: &'static str, r: teachdim::Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.push(check, false, format!("error: {e}"));
                None
            }
        }
    }

    fn teacher(
        &mut self,
        check: &'static str,
        built: teachdim::Result<(ConceptClass, PBTeacher)>,
        bound: usize,
        skip_empty: bool,
    ) {
        let Some((cc, t)) = self.result(check, built) else {
            return;
        };
        let cx = verify_pb_teacher(&cc, &t).expect("sizes match");
        let order = match (skip_empty, empty_index(&cc)) {
            (true, Some(e)) => t.order_without(&[e]),
            _ => t.order(),
        };
        let detail = match cx {
            None => format!("order {order} <= {bound}"),
            Some(cx) => format!(
                "{} not most preferred, rival {}",
                self.g.format_set(cc.concepts()[cx.concept]),
                self.g.format_set(cc.concepts()[cx.rival])
            ),
        };
        self.push(check, cx.is_none() && order <= bound, detail);
    }

    /// Checks shared by both kinds on the class under test.
    fn class_checks(&mut self, cc: &ConceptClass) {
        let Some(cert) = self.result("rtd", rtd(cc, self.limits)) else {
            return;
        };
        let Some((d, w)) = self.result("vcd", vcd(cc)) else {
            return;
        };
        let plan = plan_to_teacher(&cert, cc).expect("certificate covers class");
        let cx = verify_pb_teacher(cc, &plan).expect("sizes match");
        self.push(
            "plan-teacher",
            cx.is_none() && plan.order() == cert.rtd,
            format!(
                "order {} rtd {} valid {}",
                plan.order(),
                cert.rtd,
                cx.is_none()
            ),
        );
        let m = cc.len() as u128;
        let (bv, br) = (
            sauer_bound(cc.domain_size(), d),
            sauer_bound(cc.domain_size(), cert.rtd),
        );
        self.push(
            "sauer-vcd",
            m <= bv,
            format!("|C|={m} bound({d})={bv} witness {}", self.g.format_set(w)),
        );
        self.push(
            "sauer-rtd",
            m <= br,
            format!("|C|={m} bound({})={br}", cert.rtd),
        );
        if let Some(t) = self.result("td-min", td_min(cc, self.limits)) {
            self.push(
                "rtd>=td-min",
                cert.rtd >= t,
                format!("rtd {} td_min {t}", cert.rtd),
            );
        }
        if cc.len() <= FULL_SUBCLASS_MAX {
            if let Some(full) = self.result("subclass-max", max_subclass_td_min(cc, self.limits)) {
                self.push(
                    "subclass-max",
                    full == cert.rtd,
                    format!("max {full} rtd {}", cert.rtd),
                );
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            let mut worst = None;
            for _ in 0..self.samples {
                let size = 1 + (rand::Rng::gen_range(&mut rng, 0..cc.len()));
                let mut idx = sample(&mut rng, cc.len(), size).into_vec();
                idx.sort_unstable();
                match rtd_subclass_lower_bound(cc, &idx, self.limits) {
                    Ok(b) if b > cert.rtd => {
                        worst = Some(b);
                        break;
                    }
                    Ok(_) => {}
                    Err(e) => {
                        self.push("subclass-sample", false, format!("error: {e}"));
                        return;
                    }
                }
            }
            self.push(
                "subclass-sample",
                worst.is_none(),
                format!("{} subclasses, seed {}", self.samples, self.seed),
            );
        }
    }

    fn star(&mut self) {
        let g = &self.g.graph;
        let delta = g.max_degree();
        let Some(cc) = self.result("build", build_star_class(g, self.limits)) else {
            return;
        };
        if let (Some(p), Some((d, _))) = (
            self.result("characterization", star_vcd_characterization(g)),
            self.result("vcd", vcd(&cc)),
        ) {
            self.push(
                "characterization",
                p.vcd == d,
                format!("predicted {} brute {d}", p.vcd),
            );
            if let Ok((_, w)) = vcd(&cc) {
                let host = g
                    .vertices()
                    .iter()
                    .find(|&x| w.is_subset(g.closed_nbhd(BitSet::singleton(x))));
                self.push(
                    "witness-in-closed-nbhd",
                    host.is_some() || w.is_empty(),
                    format!("witness {}", self.g.format_set(w)),
                );
            }
            if let Some(t) = self.result("triple", star_triple(g, self.limits)) {
                self.push("chain", t.strict().is_some(), format!("{t}"));
            }
            self.teacher(
                "subset-teacher",
                star_subset_teacher(g, self.limits),
                delta + 1,
                false,
            );
            if p.witness.is_none() {
                self.teacher(
                    "special-teacher",
                    star_special_teacher(g, self.limits),
                    delta,
                    false,
                );
            }
        }
        let unshattered = g
            .vertices()
            .iter()
            .find(|&x| !cc.is_shattered(g.neighbors(x)).unwrap_or(false));
        self.push(
            "open-nbhd-shattered",
            unshattered.is_none(),
            unshattered.map_or(String::new(), |x| format!("vertex {}", self.g.labels[x])),
        );
        self.class_checks(&cc);
    }

    fn con(&mut self) {
        let g = &self.g.graph;
        let policy = self.policy.unwrap_or(false);
        let Some(ell) = self.result("ell", max_leaf_number(g, self.limits)) else {
            return;
        };
        if g.n() <= SPANNING_TREE_ENUM_MAX {
            if let Some(ex) = self.result("ell-oracle", max_leaf_number_exhaustive(g)) {
                self.push(
                    "ell-oracle",
                    ex == ell,
                    format!("neighbourhoods {ell} spanning trees {ex}"),
                );
            }
        }
        let Some(cc) = self.result("build", build_con_class(g, policy, self.limits)) else {
            return;
        };
        if let Some(t) = self.result("triple", con_triple(g, policy, self.limits)) {
            self.push("chain", t.strict().is_some(), format!("{t}"));
        }
        let with_empty = build_con_class(g, true, self.limits).and_then(|c| vcd(&c));
        let Some((d_empty, _)) = self.result("vcd", with_empty) else {
            return;
        };
        if g.is_connected() {
            if let Some(w) = self.result("leaf-tree", leaf_tree_condition(g, self.limits)) {
                let valid = w
                    .as_ref()
                    .is_none_or(|w| check_leaf_tree_witness(g, w, self.limits).unwrap_or(false));
                self.push(
                    "leaf-tree",
                    valid && w.is_some() == (d_empty == ell + 1),
                    format!(
                        "witness {} ell {ell} vcd {d_empty}",
                        w.as_ref().map_or("absent".to_string(), |w| format!(
                            "u={} leaves {}",
                            self.g.labels[w.u],
                            self.g.format_set(w.leaves)
                        ))
                    ),
                );
            }
        }
        self.opponents(g);
        if d_empty == ell {
            match opponent_claim_violation(g, self.limits) {
                Ok(v) => self.push(
                    "opponent-claim",
                    v.is_none(),
                    v.map_or(String::new(), |(x, y)| {
                        format!("X {} Y {}", self.g.format_set(x), self.g.format_set(y))
                    }),
                ),
                Err(e) => self.push("opponent-claim", false, format!("error: {e}")),
            }
        }
        self.teacher(
            "superset-teacher",
            con_superset_teacher(g, true, self.limits),
            ell + 1,
            true,
        );
        if d_empty == ell {
            self.teacher(
                "matching-teacher",
                con_vcd_matching_teacher(g, true, self.limits),
                ell,
                true,
            );
        }
        if Tree::from_graph(g).is_ok() {
            self.teacher("tree-teacher", con_tree_teacher(g, self.limits), ell, false);
        }
        self.class_checks(&cc);
    }

    fn opponents(&mut self, g: &Graph) {
        let sets = match g.connected_sets(g.vertices(), self.limits.enumeration_budget) {
            Ok(s) => s,
            Err(e) => return self.push("opponents", false, format!("error: {e}")),
        };
        let comps = g.components();
        let comp_of = |x: BitSet| comps.iter().position(|c| x.is_subset(*c));
        let mut bad = None;
        'outer: for &x in &sets {
            for y in maximal_opponents(g, x).expect("connected") {
                let ny = g.open_nbhd(y);
                let ok =
                    ny.is_subset(g.open_nbhd(x)) && (comp_of(x) == comp_of(y) || ny.is_empty());
                if !ok {
                    bad = Some((x, y));
                    break 'outer;
                }
            }
        }
        self.push(
            "opponents",
            bad.is_none(),
            bad.map_or(format!("{} sets", sets.len()), |(x, y)| {
                format!("X {} Y {}", self.g.format_set(x), self.g.format_set(y))
            }),
        );
    }
}

pub fn run(
    spec: &FamilySpec,
    class: &ClassOpts,
    common: &Common,
    samples: usize,
    seed: u64,
) -> Result<bool> {
    let limits = common.limits();
    let graphs = spec.graphs(limits.vertex_cap)?;
    let policy = class.policy(false);
    let checks: Vec<Check> = map_ordered(&graphs, common.parallel, |g| {
        let mut ctx = Ctx {
            g,
            limits: &limits,
            policy,
            samples,
            seed,
            out: Vec::new(),
        };
        match class.kind {
            Kind::Star => ctx.star(),
            Kind::Con => ctx.con(),
        }
        ctx.out
    })
    .into_iter()
    .flatten()
    .collect();
    let failures = checks.iter().filter(|c| !c.pass).count();
    match common.format {
        Format::Tsv => {
            println!(
                "# verify kind={} include_empty={} sample_seed={seed} {}",
                class.kind.as_str(),
                crate::policy_str(policy),
                spec.describe()
            );
            println!("graph\tcheck\tstatus\tdetail");
            for c in &checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                println!("{}\t{}\t{status}\t{}", c.graph, c.check, c.detail);
            }
            println!("# {} checks, {failures} failures", checks.len());
        }
        Format::Json => {
            let report = Report {
                command: "verify",
                kind: class.kind.as_str(),
                source: spec.describe(),
                sample_seed: seed,
                checks: &checks,
                failures,
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
    }
    Ok(failures == 0)
}
