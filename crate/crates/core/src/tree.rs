//! Trees inside a host graph, spanning-tree constructions and the
//! maximum-leaf number ℓ(G).

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Budget, Limits};

/// A tree living on a subset of the host graph's vertex indices.
///
/// `edges` stores only tree edges; vertices outside `vertices` are isolated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    edges: Graph,
    vertices: BitSet,
}

impl Tree {
    /// Validates that `edges` restricted to `vertices` is a tree spanning
    /// exactly `vertices`.
    pub fn new(edges: Graph, vertices: BitSet) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::NotATree("empty vertex set".into()));
        }
        edges.check_set(vertices)?;
        for v in (edges.vertices() - vertices).iter() {
            if edges.degree(v) > 0 {
                return Err(Error::NotATree(format!(
                    "edge at vertex {v} outside the tree"
                )));
            }
        }
        if edges.edge_count() + 1 != vertices.len() {
            return Err(Error::NotATree(format!(
                "{} edges on {} vertices",
                edges.edge_count(),
                vertices.len()
            )));
        }
        if !edges.is_connected_set(vertices) {
            return Err(Error::NotATree("not connected".into()));
        }
        Ok(Tree { edges, vertices })
    }

    pub fn from_edges(n: usize, vertices: BitSet, edges: &[(usize, usize)]) -> Result<Self> {
        Tree::new(Graph::from_edges(n, edges)?, vertices)
    }

    /// A whole graph that is itself a tree.
    pub fn from_graph(g: &Graph) -> Result<Self> {
        Tree::new(g.clone(), g.vertices())
    }

    pub fn vertices(&self) -> BitSet {
        self.vertices
    }

    /// The tree as a graph on the host's vertex indices.
    pub fn graph(&self) -> &Graph {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.degree(v)
    }

    /// Degree-1 vertices; a single-vertex tree is its own leaf.
    pub fn leaves(&self) -> BitSet {
        if self.vertices.len() == 1 {
            return self.vertices;
        }
        self.vertices
            .iter()
            .filter(|&v| self.edges.degree(v) == 1)
            .collect()
    }

    pub fn interior(&self) -> BitSet {
        self.vertices - self.leaves()
    }

    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        self.edges.n() == g.n() && self.edges.edges().all(|(u, v)| g.has_edge(u, v))
    }

    /// The subtree ⟨X⟩ for a connected X ⊆ vertices.
    pub fn subtree(&self, x: BitSet) -> Result<Tree> {
        if !x.is_subset(self.vertices) || !self.edges.is_connected_set(x) {
            return Err(Error::NotConnected(x.to_string()));
        }
        Tree::new(self.edges.restrict_edges(x), x)
    }
}

/// BFS spanning tree of ⟨X⟩ rooted at the smallest vertex of X; neighbours
/// are visited in increasing index order.
pub fn bfs_spanning_tree(g: &Graph, x: BitSet) -> Result<Tree> {
    g.check_set(x)?;
    if !g.is_connected_set(x) {
        return Err(Error::NotConnected(x.to_string()));
    }
    let mut t = Graph::new(g.n())?;
    let root = x.first().expect("nonempty");
    let mut seen = BitSet::singleton(root);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for v in (g.neighbors(u) & x & !seen).iter() {
            seen.insert(v);
            t.add_edge(u, v)?;
            queue.push_back(v);
        }
    }
    Tree::new(t, x)
}

/// Spanning tree of ⟨N_G(X)⟩ in which every vertex of N°_G(X) is a leaf:
/// a BFS tree of ⟨X⟩ plus one pendant edge per outside neighbour, attached
/// to its smallest neighbour in X.
pub fn neighborhood_spanning_tree(g: &Graph, x: BitSet) -> Result<Tree> {
    let core = bfs_spanning_tree(g, x)?;
    let mut t = core.edges;
    let outside = g.open_nbhd(x);
    for y in outside.iter() {
        let anchor = (g.neighbors(y) & x).first().expect("y is a neighbour of X");
        t.add_edge(anchor, y)?;
    }
    Tree::new(t, x | outside)
}

/// Grows `t` to a spanning tree of its component in `g` by repeatedly
/// attaching the smallest outside neighbour to its smallest tree neighbour.
pub fn extend_to_spanning_tree(g: &Graph, t: &Tree) -> Result<Tree> {
    if !t.is_subgraph_of(g) {
        return Err(Error::NotSubgraph);
    }
    let start = t.vertices().first().expect("trees are nonempty");
    let component = g.reach(start, g.vertices());
    let mut edges = t.graph().clone();
    let mut covered = t.vertices();
    loop {
        let frontier = g.open_nbhd(covered) & component;
        let Some(v) = frontier.first() else { break };
        let anchor = (g.neighbors(v) & covered).first().expect("frontier vertex");
        edges.add_edge(anchor, v)?;
        covered.insert(v);
    }
    Tree::new(edges, covered)
}

/// Number of degree-1 vertices of a spanning forest edge set.
fn degree_one_count(deg: &[u8]) -> usize {
    deg.iter().filter(|&&d| d == 1).count()
}

/// Largest graph accepted by the exhaustive spanning-tree enumeration.
pub const SPANNING_TREE_ENUM_MAX: usize = 8;

/// Calls `visit` with the edge list of every spanning tree of a connected
/// graph, found by including or excluding each edge in turn. Branches that
/// close a cycle, or that can no longer connect the graph, are cut.
pub fn for_each_spanning_tree<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&[(usize, usize)]),
{
    if g.n() > SPANNING_TREE_ENUM_MAX {
        return Err(Error::TooManyVertices {
            n: g.n(),
            cap: SPANNING_TREE_ENUM_MAX,
        });
    }
    if !g.is_connected() {
        return Err(Error::Precondition(
            "spanning trees need a connected graph".into(),
        ));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut chosen = Vec::with_capacity(g.n());
    let mut comp: Vec<usize> = (0..g.n()).collect();
    enumerate_trees(g.n(), &edges, 0, &mut chosen, &mut comp, &mut visit);
    Ok(())
}

fn enumerate_trees<F>(
    n: usize,
    edges: &[(usize, usize)],
    next: usize,
    chosen: &mut Vec<(usize, usize)>,
    comp: &mut Vec<usize>,
    visit: &mut F,
) where
    F: FnMut(&[(usize, usize)]),
{
    if chosen.len() + 1 == n {
        visit(chosen);
        return;
    }
    if next == edges.len() || edges.len() - next < n - 1 - chosen.len() {
        return;
    }
    let (u, v) = edges[next];
    // Include: only if it joins two different components.
    let (cu, cv) = (comp[u], comp[v]);
    if cu != cv {
        let saved = comp.clone();
        for c in comp.iter_mut() {
            if *c == cv {
                *c = cu;
            }
        }
        chosen.push((u, v));
        enumerate_trees(n, edges, next + 1, chosen, comp, visit);
        chosen.pop();
        *comp = saved;
    }
    // Exclude: only if the chosen edges plus the remaining ones still connect.
    if can_still_connect(n, comp, &edges[next + 1..]) {
        enumerate_trees(n, edges, next + 1, chosen, comp, visit);
    }
}

fn can_still_connect(n: usize, comp: &[usize], rest: &[(usize, usize)]) -> bool {
    let mut c = comp.to_vec();
    for &(u, v) in rest {
        let (cu, cv) = (c[u], c[v]);
        if cu != cv {
            for x in c.iter_mut() {
                if *x == cv {
                    *x = cu;
                }
            }
        }
    }
    (0..n).all(|i| c[i] == c[0])
}

/// ℓ by brute force over all spanning trees of each component, counting
/// degree-1 vertices. Test oracle for [`max_leaf_number`]; components of
/// more than [`SPANNING_TREE_ENUM_MAX`] vertices are rejected.
pub fn max_leaf_number_exhaustive(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for comp in g.components() {
        let sub = g.spanned_subgraph(comp)?.graph;
        let mut deg = vec![0u8; sub.n()];
        for_each_spanning_tree(&sub, |tree| {
            deg.iter_mut().for_each(|d| *d = 0);
            for &(u, v) in tree {
                deg[u] += 1;
                deg[v] += 1;
            }
            best = best.max(degree_one_count(&deg));
        })?;
    }
    Ok(best)
}

/// ℓ(G): the largest open neighbourhood of a nonempty connected set, per
/// component, maximised over components. A single-vertex component
/// contributes 0.
pub fn max_leaf_number(g: &Graph, limits: &Limits) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::Precondition(
            "ℓ is undefined on the empty graph".into(),
        ));
    }
    limits.check_graph(g)?;
    let mut budget = Budget::new("connected-set enumeration", limits.enumeration_budget);
    let mut best = 0;
    g.for_each_connected_set(g.vertices(), &mut budget, &mut |x| {
        best = best.max(g.open_nbhd(x).len());
    })?;
    Ok(best)
}

/// ℓ of one component together with a connected set attaining it.
pub fn max_leaf_witness(g: &Graph, component: BitSet, limits: &Limits) -> Result<(usize, BitSet)> {
    let mut budget = Budget::new("connected-set enumeration", limits.enumeration_budget);
    let mut best = (
        0,
        component.first().map(BitSet::singleton).unwrap_or_default(),
    );
    g.for_each_connected_set(component, &mut budget, &mut |x| {
        let k = g.open_nbhd(x).len();
        if k > best.0 {
            best = (k, x);
        }
    })?;
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BitSet {
        xs.iter().copied().collect()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    #[test]
    fn tree_validation() {
        assert!(Tree::from_edges(3, set(&[0, 1, 2]), &[(0, 1), (1, 2)]).is_ok());
        assert!(Tree::from_edges(3, set(&[0, 1, 2]), &[(0, 1)]).is_err());
        assert!(Tree::from_edges(3, set(&[0, 1, 2]), &[(0, 1), (1, 2), (0, 2)]).is_err());
        let single = Tree::from_edges(3, set(&[2]), &[]).unwrap();
        assert_eq!(single.leaves(), set(&[2]));
    }

    #[test]
    fn neighborhood_tree_on_c4_is_a_star() {
        let t = neighborhood_spanning_tree(&c4(), set(&[0])).unwrap();
        assert_eq!(t.vertices(), set(&[0, 1, 3]));
        assert_eq!(t.leaves(), set(&[1, 3]));
        assert!(neighborhood_spanning_tree(&c4(), set(&[0, 2])).is_err());
    }

    #[test]
    fn extension_keeps_leaves() {
        let g = c4();
        let t = Tree::from_edges(4, set(&[0, 1]), &[(0, 1)]).unwrap();
        let ext = extend_to_spanning_tree(&g, &t).unwrap();
        assert_eq!(ext.vertices(), g.vertices());
        assert!(ext.leaves().len() >= t.leaves().len());
        let foreign = Tree::from_edges(4, set(&[0, 2]), &[(0, 2)]).unwrap();
        assert!(matches!(
            extend_to_spanning_tree(&g, &foreign),
            Err(Error::NotSubgraph)
        ));
    }

    #[test]
    fn spanning_tree_counts_follow_cayley() {
        for n in 2..=6 {
            let mut count = 0usize;
            for_each_spanning_tree(&complete(n), |_| count += 1).unwrap();
            assert_eq!(count, n.pow(n as u32 - 2), "K_{n}");
        }
        let mut c4_trees = 0;
        for_each_spanning_tree(&c4(), |_| c4_trees += 1).unwrap();
        assert_eq!(c4_trees, 4);
    }

    #[test]
    fn max_leaf_small_families() {
        let limits = Limits::default();
        for n in 3..=8 {
            let path =
                Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
            assert_eq!(max_leaf_number(&path, &limits).unwrap(), 2);
            assert_eq!(max_leaf_number(&complete(n), &limits).unwrap(), n - 1);
        }
        assert_eq!(
            max_leaf_number(&Graph::new(1).unwrap(), &limits).unwrap(),
            0
        );
        assert_eq!(max_leaf_number(&complete(2), &limits).unwrap(), 1);
        assert!(max_leaf_number(&Graph::new(0).unwrap(), &limits).is_err());
    }

    #[test]
    fn max_leaf_respects_caps() {
        let limits = Limits {
            vertex_cap: 4,
            ..Limits::default()
        };
        assert!(matches!(
            max_leaf_number(&complete(5), &limits),
            Err(Error::TooManyVertices { n: 5, cap: 4 })
        ));
        let tight = Limits::default().with_budget(3);
        assert!(matches!(
            max_leaf_number(&complete(4), &tight),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
