//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bit rows.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use crate::bitset::{BitSet, MAX_BITS};
use crate::error::{Error, Result};
use crate::limits::Budget;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_BITS {
            return Err(Error::TooManyVertices { n, cap: MAX_BITS });
        }
        Ok(Graph {
            n,
            adj: vec![BitSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<BitSet>) -> Result<Self> {
        let n = adj.len();
        let g = Graph { n, adj };
        if n > MAX_BITS {
            return Err(Error::TooManyVertices { n, cap: MAX_BITS });
        }
        let all = g.vertices();
        for u in 0..n {
            if g.adj[u].contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = (g.adj[u] - all).first() {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            for v in g.adj[u].iter() {
                if !g.adj[v].contains(u) {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric at {u} {v}"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> BitSet {
        BitSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> BitSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - BitSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, x: BitSet) -> Result<()> {
        match (x - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// N_G(X): the vertices of X together with all their neighbours.
    /// Unchecked; see [`closed_neighborhood`](Self::closed_neighborhood).
    #[inline]
    pub fn closed_nbhd(&self, x: BitSet) -> BitSet {
        x.iter().fold(x, |acc, v| acc | self.adj[v])
    }

    /// N°_G(X) = N_G(X) \ X. Unchecked.
    #[inline]
    pub fn open_nbhd(&self, x: BitSet) -> BitSet {
        self.closed_nbhd(x) - x
    }

    pub fn closed_neighborhood(&self, x: BitSet) -> Result<BitSet> {
        self.check_set(x)?;
        Ok(self.closed_nbhd(x))
    }

    pub fn open_neighborhood(&self, x: BitSet) -> Result<BitSet> {
        self.check_set(x)?;
        Ok(self.open_nbhd(x))
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    /// Empty when `start` is not in `within`.
    pub fn reach(&self, start: usize, within: BitSet) -> BitSet {
        if !within.contains(start) {
            return BitSet::EMPTY;
        }
        let mut seen = BitSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(BitSet::EMPTY, |acc, v| acc | self.adj[v])
                & within
                & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff X is nonempty and ⟨X⟩ is connected. The empty set is
    /// reported as not connected; callers choose their own ∅ policy.
    pub fn is_connected_set(&self, x: BitSet) -> bool {
        match x.first() {
            Some(v) => self.reach(v, x) == x,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.is_connected_set(self.vertices())
    }

    /// Connected components of ⟨X⟩, ordered by smallest vertex.
    pub fn components_within(&self, x: BitSet) -> Vec<BitSet> {
        let mut rest = x;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            out.push(c);
            rest -= c;
        }
        out
    }

    /// Connected components of the whole graph, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BitSet> {
        self.components_within(self.vertices())
    }

    /// ⟨X⟩_G with vertices renumbered in increasing order.
    pub fn spanned_subgraph(&self, x: BitSet) -> Result<SpannedSubgraph> {
        self.check_set(x)?;
        let map = x.to_vec();
        let mut adj = vec![BitSet::EMPTY; map.len()];
        for (i, &u) in map.iter().enumerate() {
            adj[i] = BitSet::from_bits((self.adj[u] & x).compress(x));
        }
        Ok(SpannedSubgraph {
            graph: Graph { n: map.len(), adj },
            map,
        })
    }

    /// Graph with the same vertex set and only the edges inside `x`.
    pub fn restrict_edges(&self, x: BitSet) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                if x.contains(v) {
                    self.adj[v] & x
                } else {
                    BitSet::EMPTY
                }
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// Calls `visit` once for every nonempty connected vertex set inside
    /// `within`. Each emitted set counts one unit against `budget`.
    ///
    /// Sets are grown from their smallest vertex; a vertex is either added
    /// or permanently excluded for the rest of a branch, so no set is
    /// produced twice.
    pub(crate) fn for_each_connected_set<F>(
        &self,
        within: BitSet,
        budget: &mut Budget,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(BitSet),
    {
        for root in within.iter() {
            let blocked = BitSet::below(root) | !within;
            let cand = self.adj[root] - blocked;
            self.grow(BitSet::singleton(root), cand, blocked, budget, visit)?;
        }
        Ok(())
    }

    fn grow<F>(
        &self,
        set: BitSet,
        cand: BitSet,
        blocked: BitSet,
        budget: &mut Budget,
        visit: &mut F,
    ) -> Result<()>
    where
        F: FnMut(BitSet),
    {
        budget.spend(1)?;
        visit(set);
        let mut rest = cand;
        let mut blocked = blocked;
        while let Some(v) = rest.pop_first() {
            let next_set = set | BitSet::singleton(v);
            let next_cand = rest | (self.adj[v] - next_set - blocked);
            self.grow(next_set, next_cand, blocked, budget, visit)?;
            blocked.insert(v);
        }
        Ok(())
    }

    /// All nonempty connected sets inside `within`, sorted numerically.
    pub fn connected_sets(&self, within: BitSet, budget: u64) -> Result<Vec<BitSet>> {
        let mut b = Budget::new("connected-set enumeration", budget);
        let mut out = Vec::new();
        self.for_each_connected_set(within, &mut b, &mut |s| out.push(s))?;
        out.sort_unstable();
        Ok(out)
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines
    /// `u v` with `u < v`. Lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        let mut g = Graph::new(n).map_err(|e| Error::Parse {
            line: hline,
            msg: e.to_string(),
        })?;
        let mut count = 0;
        for (line, l) in lines {
            let [u, v] = parse_pair(line, l)?;
            if u >= v || v >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("edge {u} {v} must satisfy 0 <= u < v < {n}"),
                });
            }
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line,
                msg: e.to_string(),
            })?;
            count += 1;
        }
        if count != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header promises {m} edges, found {count}"),
            });
        }
        Ok(g)
    }

    pub fn read_from<R: BufRead>(mut r: R) -> Result<Self> {
        let mut s = String::new();
        r.read_to_string(&mut s)?;
        Graph::parse(&s)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(self.to_text().as_bytes())?;
        Ok(())
    }
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, got {l:?}"),
        });
    }
    let p = |t: &str| {
        t.parse::<usize>().map_err(|e| Error::Parse {
            line,
            msg: format!("{t:?}: {e}"),
        })
    };
    Ok([p(toks[0])?, p(toks[1])?])
}

/// A spanned subgraph together with its vertex map back into the host.
#[derive(Debug, Clone)]
pub struct SpannedSubgraph {
    pub graph: Graph,
    /// `map[i]` is the host vertex of local vertex `i`.
    pub map: Vec<usize>,
}

impl SpannedSubgraph {
    pub fn lift(&self, local: BitSet) -> BitSet {
        local.iter().map(|i| self.map[i]).collect()
    }
}
