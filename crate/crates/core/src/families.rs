//! Named graphs, exhaustive small-graph enumeration and seeded random
//! graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with display names for its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl NamedGraph {
    /// Vertices named `1..=n`.
    pub fn numbered(name: impl Into<String>, graph: Graph) -> Self {
        let labels = (1..=graph.n()).map(|i| i.to_string()).collect();
        NamedGraph {
            name: name.into(),
            graph,
            labels,
        }
    }

    /// Vertices named by their index `0..n`, matching the graph file format.
    pub fn indexed(name: impl Into<String>, graph: Graph) -> Self {
        let labels = (0..graph.n()).map(|i| i.to_string()).collect();
        NamedGraph {
            name: name.into(),
            graph,
            labels,
        }
    }

    fn lettered(name: &str, letters: &str, edges: &[(char, char)]) -> Self {
        let labels: Vec<String> = letters.chars().map(String::from).collect();
        let idx = |c: char| letters.find(c).expect("known vertex");
        let e: Vec<_> = edges.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
        NamedGraph {
            name: name.into(),
            graph: Graph::from_edges(labels.len(), &e).expect("valid fixed graph"),
            labels,
        }
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown vertex {label:?} in {}", self.name),
            })
    }

    /// Set from vertex labels.
    pub fn set(&self, labels: &[&str]) -> Result<BitSet> {
        labels.iter().map(|l| self.vertex(l)).collect()
    }

    pub fn format_set(&self, s: BitSet) -> String {
        let names: Vec<&str> = s.iter().map(|v| self.labels[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

pub fn complete(n: usize) -> Result<NamedGraph> {
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(NamedGraph::numbered(format!("K_{n}"), g))
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<NamedGraph> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(NamedGraph::numbered(format!("P_{n}"), g))
}

pub fn cycle(n: usize) -> Result<NamedGraph> {
    if n < 3 {
        return Err(Error::Precondition(format!(
            "cycle needs 3 vertices, got {n}"
        )));
    }
    let mut g = Graph::new(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(NamedGraph::numbered(format!("C_{n}"), g))
}

/// The 4-cycle a-b-c-d.
pub fn fig1_left() -> NamedGraph {
    NamedGraph::lettered(
        "fig1-left",
        "abcd",
        &[('a', 'b'), ('b', 'c'), ('c', 'd'), ('a', 'd')],
    )
}

pub fn fig1_right() -> NamedGraph {
    NamedGraph::lettered(
        "fig1-right",
        "abcdv",
        &[
            ('a', 'b'),
            ('b', 'c'),
            ('b', 'd'),
            ('a', 'c'),
            ('a', 'd'),
            ('c', 'v'),
            ('d', 'v'),
        ],
    )
}

pub fn fig2() -> NamedGraph {
    NamedGraph::lettered(
        "fig2",
        "abcdefg",
        &[
            ('a', 'b'),
            ('a', 'c'),
            ('b', 'd'),
            ('b', 'e'),
            ('c', 'f'),
            ('c', 'g'),
            ('d', 'f'),
            ('d', 'g'),
            ('e', 'f'),
            ('e', 'g'),
        ],
    )
}

/// Independent-edge random graph: pairs `u < v` in lexicographic order,
/// each kept when a ChaCha8 draw from `[0,1)` falls below `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<NamedGraph> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Precondition(format!(
            "edge probability {p} not in (0,1)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(NamedGraph::numbered(format!("G({n},{p},{seed})"), g))
}

/// All vertex pairs `u < v` of `{0..n-1}` in lexicographic order; edge
/// masks index into this list.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut adj = vec![BitSet::EMPTY; n];
    for b in BitSet::from_bits(mask).iter() {
        let (u, v) = pairs[b];
        adj[u].insert(v);
        adj[v].insert(u);
    }
    Graph::from_adjacency(adj).expect("pairs are valid")
}

/// Largest vertex count for exhaustive labelled-graph enumeration.
pub const ALL_GRAPHS_MAX: usize = 8;

/// Every labelled graph on `n` vertices, indexed by edge mask over
/// [`pair_list`].
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = (u64, Graph)>> {
    if n > ALL_GRAPHS_MAX {
        return Err(Error::TooManyVertices {
            n,
            cap: ALL_GRAPHS_MAX,
        });
    }
    let pairs = pair_list(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |m| (m, graph_from_mask(n, &pairs, m))))
}

/// Every connected labelled graph on `n >= 1` vertices.
pub fn connected_graphs(n: usize) -> Result<impl Iterator<Item = (u64, Graph)>> {
    Ok(all_graphs(n)?.filter(|(_, g)| g.is_connected()))
}

/// Every labelled tree on `n >= 1` vertices, decoded from Prüfer sequences
/// in lexicographic order.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Precondition("no trees on 0 vertices".into()));
    }
    if n > ALL_GRAPHS_MAX {
        return Err(Error::TooManyVertices {
            n,
            cap: ALL_GRAPHS_MAX,
        });
    }
    if n <= 2 {
        return Ok(vec![complete(n)?.graph]);
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut seq = vec![0usize; len];
    for mut code in 0..total {
        for s in seq.iter_mut().rev() {
            *s = code % n;
            code /= n;
        }
        out.push(prufer_decode(n, &seq)?);
    }
    Ok(out)
}

fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::new(n)?;
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        g.add_edge(leaf, s)?;
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1])?;
    Ok(g)
}
