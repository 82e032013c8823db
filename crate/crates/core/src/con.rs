//! Classes of connected vertex sets, opponents, the leaf-tree condition and
//! the connected-set teachers.

use crate::bitset::BitSet;
use crate::concept::ConceptClass;
use crate::dimensions::{rtd, vcd};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Budget, Limits};
use crate::teaching::{lex_refine, subset_preferences, superset_preferences, Direction, PBTeacher};
use crate::tree::{max_leaf_number, Tree};
use crate::triple::Triple;

/// Every nonempty connected vertex set, plus ∅ when `include_empty`.
pub fn build_con_class(g: &Graph, include_empty: bool, limits: &Limits) -> Result<ConceptClass> {
    limits.check_graph(g)?;
    let mut budget = Budget::new("connected-set enumeration", limits.enumeration_budget);
    let mut concepts = Vec::new();
    if include_empty {
        concepts.push(BitSet::EMPTY);
    }
    g.for_each_connected_set(g.vertices(), &mut budget, &mut |x| concepts.push(x))?;
    ConceptClass::new(g.n(), concepts)
}

fn check_connected_nonempty(g: &Graph, x: BitSet) -> Result<()> {
    g.check_set(x)?;
    if !g.is_connected_set(x) {
        return Err(Error::NotConnected(x.to_string()));
    }
    Ok(())
}

/// Components of the graph spanned by `V \ N(X)`.
pub fn maximal_opponents(g: &Graph, x: BitSet) -> Result<Vec<BitSet>> {
    check_connected_nonempty(g, x)?;
    Ok(g.components_within(g.vertices() - g.closed_nbhd(x)))
}

/// First `(X, Y)` with |N°(X)| = ℓ and a maximal opponent Y of X whose open
/// neighbourhood is not a proper subset of N°(X).
pub fn opponent_claim_violation(g: &Graph, limits: &Limits) -> Result<Option<(BitSet, BitSet)>> {
    let l = max_leaf_number(g, limits)?;
    let mut budget = Budget::new("connected-set enumeration", limits.enumeration_budget);
    let mut found = None;
    g.for_each_connected_set(g.vertices(), &mut budget, &mut |x| {
        if found.is_some() {
            return;
        }
        let nx = g.open_nbhd(x);
        if nx.len() != l {
            return;
        }
        for y in g.components_within(g.vertices() - g.closed_nbhd(x)) {
            if !g.open_nbhd(y).is_proper_subset(nx) {
                found = Some((x, y));
                return;
            }
        }
    })?;
    Ok(found)
}

/// A tree `T ≤ G` with ℓ(G) leaves and an interior vertex `u` such that any
/// two leaves are joined by a path avoiding `u` and every other leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafTreeWitness {
    pub tree: Tree,
    pub u: usize,
    pub leaves: BitSet,
}

/// A path from `a` to `b` avoiding `u` and every leaf other than `a`, `b`.
fn leaves_joined(g: &Graph, u: usize, leaves: BitSet, a: usize, b: usize) -> bool {
    let pair = BitSet::singleton(a) | BitSet::singleton(b);
    let within = g.vertices() - BitSet::singleton(u) - (leaves - pair);
    g.reach(a, within).contains(b)
}

/// Searches for a leaf-tree witness. Roots `v_0` are tried by degree
/// (descending, then index), leaf sets in increasing numeric order. For a
/// candidate `(v_0, L)` every leaf must reach `v_0` avoiding the other
/// leaves, and every pair of leaves must be joined avoiding `v_0` and the
/// rest of `L`. Each reachability test costs one unit of the path-search
/// budget.
pub fn leaf_tree_condition(g: &Graph, limits: &Limits) -> Result<Option<LeafTreeWitness>> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::NotConnected("graph".into()));
    }
    let l = max_leaf_number(g, limits)?;
    let mut budget = Budget::new("leaf-tree path search", limits.path_search_budget);
    let mut roots: Vec<usize> = g.vertices().iter().collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for v0 in roots {
        for leaves in (g.vertices() - BitSet::singleton(v0)).k_subsets(l) {
            if let Some(w) = try_root(g, v0, leaves, &mut budget)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

fn try_root(
    g: &Graph,
    v0: usize,
    leaves: BitSet,
    budget: &mut Budget,
) -> Result<Option<LeafTreeWitness>> {
    budget.spend(1)?;
    let core = g.reach(v0, g.vertices() - leaves);
    if leaves.iter().any(|v| !g.neighbors(v).intersects(core)) {
        return Ok(None);
    }
    let list = leaves.to_vec();
    for (k, &a) in list.iter().enumerate() {
        for &b in &list[k + 1..] {
            budget.spend(1)?;
            if !leaves_joined(g, v0, leaves, a, b) {
                return Ok(None);
            }
        }
    }
    // BFS tree of the core from v_0, one pendant edge per leaf, then
    // prune dangling core vertices.
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = BitSet::singleton(v0);
    let mut queue = std::collections::VecDeque::from([v0]);
    while let Some(x) = queue.pop_front() {
        for y in (g.neighbors(x) & (core - seen)).iter() {
            seen.insert(y);
            parent[y] = x;
            queue.push_back(y);
        }
    }
    for v in leaves.iter() {
        parent[v] = (g.neighbors(v) & core).first().expect("checked above");
    }
    let mut keep = core | leaves;
    loop {
        let mut deg = vec![0usize; g.n()];
        for v in keep.iter().filter(|&v| v != v0) {
            deg[v] += 1;
            deg[parent[v]] += 1;
        }
        let dangling: BitSet = keep
            .iter()
            .filter(|&v| v != v0 && !leaves.contains(v) && deg[v] <= 1)
            .collect();
        if dangling.is_empty() {
            break;
        }
        keep -= dangling;
    }
    let edges: Vec<(usize, usize)> = keep
        .iter()
        .filter(|&v| v != v0)
        .map(|v| (v.min(parent[v]), v.max(parent[v])))
        .collect();
    let tree = Tree::from_edges(g.n(), keep, &edges)?;
    if tree.leaves() != leaves || !tree.interior().contains(v0) {
        return Ok(None);
    }
    Ok(Some(LeafTreeWitness {
        tree,
        u: v0,
        leaves,
    }))
}

/// Checks a witness against its definition.
pub fn check_leaf_tree_witness(g: &Graph, w: &LeafTreeWitness, limits: &Limits) -> Result<bool> {
    let l = max_leaf_number(g, limits)?;
    if !w.tree.is_subgraph_of(g)
        || w.tree.leaves() != w.leaves
        || w.leaves.len() != l
        || !w.tree.interior().contains(w.u)
    {
        return Ok(false);
    }
    let list = w.leaves.to_vec();
    Ok(list.iter().enumerate().all(|(k, &a)| {
        list[k + 1..]
            .iter()
            .all(|&b| leaves_joined(g, w.u, w.leaves, a, b))
    }))
}

/// Index of ∅ in a class, if present.
pub fn empty_index(cc: &ConceptClass) -> Option<usize> {
    cc.index_of(BitSet::EMPTY)
}

/// For a tree: each connected set is taught by the leaves of the subtree it
/// spans, with smaller sets preferred. The class includes ∅, taught by the
/// empty sample.
pub fn con_tree_teacher(t: &Graph, limits: &Limits) -> Result<(ConceptClass, PBTeacher)> {
    Tree::from_graph(t)?;
    let cc = build_con_class(t, true, limits)?;
    let sets = cc
        .concepts()
        .iter()
        .map(|&x| {
            x.iter()
                .filter(|&v| (t.neighbors(v) & x).len() <= 1)
                .collect()
        })
        .collect();
    let pref = subset_preferences(&cc);
    Ok((cc, PBTeacher::new(sets, pref)?))
}

/// Superset preferences; a nonempty X is taught by its smallest vertex as a
/// positive and N°(X) as negatives. ∅, if present, gets every vertex as a
/// negative.
pub fn con_superset_teacher(
    g: &Graph,
    include_empty: bool,
    limits: &Limits,
) -> Result<(ConceptClass, PBTeacher)> {
    let cc = build_con_class(g, include_empty, limits)?;
    let sets = cc
        .concepts()
        .iter()
        .map(|&x| match x.first() {
            Some(u) => BitSet::singleton(u) | g.open_nbhd(x),
            None => g.vertices(),
        })
        .collect();
    let pref = superset_preferences(&cc);
    Ok((cc, PBTeacher::new(sets, pref)?))
}

/// The order-ℓ teacher for graphs with VCD = ℓ: superset preferences,
/// refined so that among incomparable sets a larger open neighbourhood is
/// preferred. X is taught by N°(X) as negatives, plus its smallest vertex
/// as a positive when |N°(X)| < ℓ. ∅, if present, gets every vertex as a
/// negative.
pub fn con_vcd_matching_teacher(
    g: &Graph,
    include_empty: bool,
    limits: &Limits,
) -> Result<(ConceptClass, PBTeacher)> {
    let cc = build_con_class(g, include_empty, limits)?;
    let l = max_leaf_number(g, limits)?;
    let (d, _) = vcd(&cc)?;
    if d != l {
        return Err(Error::Precondition(format!(
            "VCD is {d}, not ℓ = {l}; the matching teacher does not apply"
        )));
    }
    let key: Vec<i64> = cc
        .concepts()
        .iter()
        .map(|&x| g.open_nbhd(x).len() as i64)
        .collect();
    let pref = lex_refine(&superset_preferences(&cc), &key, Direction::Higher)?;
    let sets = cc
        .concepts()
        .iter()
        .map(|&x| {
            let nx = g.open_nbhd(x);
            match x.first() {
                None => g.vertices(),
                Some(_) if nx.len() == l => nx,
                Some(u) => nx | BitSet::singleton(u),
            }
        })
        .collect();
    Ok((cc, PBTeacher::new(sets, pref)?))
}

/// `(ℓ, RTD, VCD)` of the connected-set class.
pub fn con_triple(g: &Graph, include_empty: bool, limits: &Limits) -> Result<Triple> {
    let cc = build_con_class(g, include_empty, limits)?;
    let l = max_leaf_number(g, limits)?;
    let r = rtd(&cc, limits)?.rtd;
    let (v, _) = vcd(&cc)?;
    Ok(Triple::new(l, r, v))
}
