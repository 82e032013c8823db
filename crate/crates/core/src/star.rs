//! Star classes: `{x} ∪ X` for a vertex `x` and `X ⊆ N°(x)`.

use crate::bitset::BitSet;
use crate::concept::ConceptClass;
use crate::dimensions::{rtd, vcd};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Budget, Limits};
use crate::teaching::{subset_preferences, PBTeacher, PreferenceRelation};
use crate::triple::Triple;

pub fn build_star_class(g: &Graph, limits: &Limits) -> Result<ConceptClass> {
    if g.n() == 0 {
        return Err(Error::Precondition("star class of the empty graph".into()));
    }
    limits.check_graph(g)?;
    let mut budget = Budget::new("star enumeration", limits.enumeration_budget);
    let mut concepts = Vec::new();
    for x in g.vertices().iter() {
        let nb = g.neighbors(x);
        budget.spend(1u64 << nb.len())?;
        concepts.extend(nb.subsets().map(|s| s | BitSet::singleton(x)));
    }
    ConceptClass::new(g.n(), concepts)
}

/// One class of maximum-degree vertices sharing a closed neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VmaxClass {
    /// V_i.
    pub members: BitSet,
    /// N_i, the shared closed neighbourhood.
    pub nbhd: BitSet,
    /// V'_i = N_i \ V_i.
    pub rest: BitSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VmaxPartition {
    pub delta: usize,
    /// Ordered by smallest member.
    pub classes: Vec<VmaxClass>,
}

/// `V'_i ⊆ N(v)`.
pub fn condition_holds(g: &Graph, class: &VmaxClass, v: usize) -> bool {
    class.rest.is_subset(g.closed_nbhd(BitSet::singleton(v)))
}

pub fn vmax_partition(g: &Graph) -> Result<VmaxPartition> {
    if g.n() == 0 {
        return Err(Error::Precondition("partition of the empty graph".into()));
    }
    let delta = g.max_degree();
    let mut classes: Vec<VmaxClass> = Vec::new();
    for v in g.vertices().iter().filter(|&v| g.degree(v) == delta) {
        let nbhd = g.closed_nbhd(BitSet::singleton(v));
        match classes.iter_mut().find(|c| c.nbhd == nbhd) {
            Some(c) => c.members.insert(v),
            None => classes.push(VmaxClass {
                members: BitSet::singleton(v),
                nbhd,
                rest: BitSet::EMPTY,
            }),
        }
    }
    for c in &mut classes {
        c.rest = c.nbhd - c.members;
        if c.nbhd.len() != delta + 1 {
            return Err(Error::Precondition(format!(
                "class {} has |N_i| != Δ+1",
                c.members
            )));
        }
        if c.members
            .iter()
            .any(|v| !(c.members - BitSet::singleton(v)).is_subset(g.neighbors(v)))
        {
            return Err(Error::Precondition(format!(
                "class {} is not a clique",
                c.members
            )));
        }
        if c.members.iter().any(|v| !condition_holds(g, c, v))
            || c.rest.iter().any(|v| condition_holds(g, c, v))
        {
            return Err(Error::Precondition(format!(
                "condition on V'_i misbehaves for class {}",
                c.members
            )));
        }
    }
    Ok(VmaxPartition { delta, classes })
}

/// VCD predicted from the partition, with the first `(class index, vertex)`
/// outside N_i that meets the condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarVcd {
    pub vcd: usize,
    pub witness: Option<(usize, usize)>,
}

pub fn star_vcd_characterization(g: &Graph) -> Result<StarVcd> {
    let p = vmax_partition(g)?;
    for (i, c) in p.classes.iter().enumerate() {
        if let Some(v) = (g.vertices() - c.nbhd)
            .iter()
            .find(|&v| condition_holds(g, c, v))
        {
            return Ok(StarVcd {
                vcd: p.delta + 1,
                witness: Some((i, v)),
            });
        }
    }
    Ok(StarVcd {
        vcd: p.delta,
        witness: None,
    })
}

/// Every concept taught by all of its members as positives, smaller sets
/// preferred.
pub fn star_subset_teacher(g: &Graph, limits: &Limits) -> Result<(ConceptClass, PBTeacher)> {
    let cc = build_star_class(g, limits)?;
    let t = PBTeacher::new(cc.concepts().to_vec(), subset_preferences(&cc))?;
    Ok((cc, t))
}

/// The teacher of order at most Δ for graphs whose star class has VCD Δ.
/// A concept is special when it contains some V'_i (the first such i is
/// used). Special concepts are taught by V'_i and V_i \ S, others by all
/// their members.
pub fn star_special_teacher(g: &Graph, limits: &Limits) -> Result<(ConceptClass, PBTeacher)> {
    let pred = star_vcd_characterization(g)?;
    if pred.witness.is_some() {
        return Err(Error::Precondition(
            "star class has VCD Δ+1; the special teacher does not apply".into(),
        ));
    }
    let part = vmax_partition(g)?;
    let cc = build_star_class(g, limits)?;
    let m = cc.len();
    // (class index, |S|) for special concepts.
    let mut special: Vec<Option<(usize, usize)>> = vec![None; m];
    let mut sets = Vec::with_capacity(m);
    for (k, &c) in cc.concepts().iter().enumerate() {
        match part.classes.iter().position(|cl| cl.rest.is_subset(c)) {
            Some(i) => {
                let cl = &part.classes[i];
                let s = c - cl.rest;
                if s.is_empty() || !s.is_subset(cl.members) {
                    return Err(Error::Precondition(format!(
                        "special concept {c} is not S ∪ V'_{i} with S ⊆ V_{i}"
                    )));
                }
                special[k] = Some((i, s.len()));
                sets.push(cl.rest | (cl.members - s));
            }
            None => sets.push(c),
        }
    }
    let c = cc.concepts();
    let mut pairs = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let prefer = match (special[a], special[b]) {
                (None, Some(_)) => true,
                (None, None) => c[a].is_proper_subset(c[b]),
                (Some((i, sa)), Some((j, sb))) => i == j && sa > sb,
                (Some(_), None) => false,
            };
            if prefer {
                pairs.push((a, b));
            }
        }
    }
    let pref = PreferenceRelation::from_pairs(m, pairs)?;
    Ok((cc, PBTeacher::new(sets, pref)?))
}

/// `(Δ, RTD, VCD)` of the star class.
pub fn star_triple(g: &Graph, limits: &Limits) -> Result<Triple> {
    let cc = build_star_class(g, limits)?;
    let r = rtd(&cc, limits)?.rtd;
    let (v, _) = vcd(&cc)?;
    Ok(Triple::new(g.max_degree(), r, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::teaching::verify_pb_teacher;

    fn set(xs: &[usize]) -> BitSet {
        xs.iter().copied().collect()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn c4_star_class() {
        let cc = build_star_class(&c4(), &Limits::default()).unwrap();
        assert_eq!(cc.len(), 12);
        for missing in [
            BitSet::EMPTY,
            set(&[0, 2]),
            set(&[1, 3]),
            set(&[0, 1, 2, 3]),
        ] {
            assert!(!cc.contains(missing));
        }
        let vs = cc.version_space(
            crate::concept::Sample::from_parts(BitSet::EMPTY, set(&[0, 2])).unwrap(),
        );
        let got: Vec<_> = vs.iter().map(|&i| cc.concepts()[i]).collect();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&set(&[1])) && got.contains(&set(&[3])));
    }

    #[test]
    fn c4_triple_and_teachers() {
        let limits = Limits::default();
        assert_eq!(star_triple(&c4(), &limits).unwrap(), Triple::new(2, 3, 3));
        let (cc, t) = star_subset_teacher(&c4(), &limits).unwrap();
        assert_eq!(verify_pb_teacher(&cc, &t).unwrap(), None);
        assert!(t.order() <= 3);
        // Every C_4 vertex meets the condition for the opposite class.
        assert!(star_special_teacher(&c4(), &limits).is_err());
    }

    #[test]
    fn complete_graph_partition_and_special_teacher() {
        let limits = Limits::default();
        let mut g = Graph::new(4).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v).unwrap();
            }
        }
        let p = vmax_partition(&g).unwrap();
        assert_eq!(p.classes.len(), 1);
        assert_eq!(p.classes[0].members, g.vertices());
        assert_eq!(p.classes[0].rest, BitSet::EMPTY);
        assert_eq!(star_vcd_characterization(&g).unwrap().vcd, 3);
        let (cc, t) = star_special_teacher(&g, &limits).unwrap();
        assert_eq!(cc.len(), 15);
        assert_eq!(verify_pb_teacher(&cc, &t).unwrap(), None);
        assert!(t.order() <= 3);
    }

    #[test]
    fn edgeless_graph_gives_singletons() {
        let g = Graph::new(3).unwrap();
        let cc = build_star_class(&g, &Limits::default()).unwrap();
        assert_eq!(cc.len(), 3);
        assert_eq!(
            star_triple(&g, &Limits::default()).unwrap(),
            Triple::new(0, 1, 1)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let limits = Limits::default().with_budget(3);
        assert!(matches!(
            build_star_class(&c4(), &limits),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
