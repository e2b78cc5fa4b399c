//! Multigraphs with loops and parallel edges, and the structural operations
//! used by the reliability engine: minors, bridges, cut vertices, degree-2
//! suppression, named families and canonical keys.

mod canon;
mod family;
pub mod format;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::CanonicalKey;
pub(crate) use canon::canonical_key_matrix;
pub(crate) use canon::decode_key;
pub use family::{FamilySpec, TreeShape};
pub use format::{parse_graph, GraphFormat};

/// Finite undirected multigraph on vertices `0..n`.
///
/// Edges are kept as an explicit sequence; a loop is `(v, v)` and parallel
/// edges are repeated entries. Each stored pair is normalized to `u <= v`.
/// Equality and hashing compare the edge multiset, not the edge order.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "format::EdgeListJson", into = "format::EdgeListJson")]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }
}

impl PartialEq for Multigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges.len() == other.edges.len() && self.sorted_edges() == other.sorted_edges()
    }
}

impl Eq for Multigraph {}

impl std::hash::Hash for Multigraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.sorted_edges().hash(state);
    }
}

/// How `edge_minor` treats the chosen edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorMode {
    Delete,
    Contract,
}

/// Connectivity classes used to restrict census universes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GraphClass {
    Connected,
    TwoEdgeConnected,
    TwoConnected,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [
        GraphClass::Connected,
        GraphClass::TwoEdgeConnected,
        GraphClass::TwoConnected,
    ];

    /// Short tag used on the command line and in file names.
    pub fn tag(self) -> &'static str {
        match self {
            GraphClass::Connected => "connected",
            GraphClass::TwoEdgeConnected => "2ec",
            GraphClass::TwoConnected => "2c",
        }
    }
}

impl std::str::FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "connected" | "c" => Ok(GraphClass::Connected),
            "2ec" | "two-edge-connected" | "2-edge-connected" => Ok(GraphClass::TwoEdgeConnected),
            "2c" | "two-connected" | "2-connected" | "biconnected" => Ok(GraphClass::TwoConnected),
            other => Err(Error::domain(format!(
                "unknown graph class `{other}` (expected connected, 2ec or 2c)"
            ))),
        }
    }
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Result of matching a bridgeless corank-2 graph against its two base graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Corank2Type {
    /// Two branch vertices joined by three internally disjoint paths.
    Theta,
    /// Two cycles sharing exactly one vertex.
    TwoCyclesAtVertex,
    NotApplicable,
}

impl Multigraph {
    /// Build a multigraph, checking that every endpoint is below `n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (i, (u, v)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge {i} = ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            out.push((u.min(v), u.max(v)));
        }
        Ok(Multigraph { n, edges: out })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        if self.loop_count() > 0 {
            return false;
        }
        let set: BTreeSet<_> = self.edges.iter().collect();
        set.len() == self.edges.len()
    }

    /// Degree of `v`; a loop contributes 2.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Number of connected components (0 for the empty vertex set).
    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.n);
        let mut k = self.n;
        for &(u, v) in &self.edges {
            if dsu.union(u, v) {
                k -= 1;
            }
        }
        k
    }

    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.component_count() == 1
    }

    /// Cyclomatic number `m - n + c`; equals `m - n + 1` for connected graphs.
    pub fn corank(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    /// Copy with every loop removed.
    pub fn without_loops(&self) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|(u, v)| u != v).collect(),
        }
    }

    /// Relabel vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Multigraph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::domain("relabeling is not a permutation of the vertex set"));
        }
        Multigraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Symmetric row-major multiplicity matrix with loop counts on the diagonal.
    pub fn multiplicity_matrix(&self) -> Vec<u32> {
        let n = self.n;
        let mut adj = vec![0u32; n * n];
        for &(u, v) in &self.edges {
            if u == v {
                adj[u * n + u] += 1;
            } else {
                adj[u * n + v] += 1;
                adj[v * n + u] += 1;
            }
        }
        adj
    }

    /// Rebuild a multigraph from a symmetric multiplicity matrix.
    pub(crate) fn from_matrix(n: usize, adj: &[u32]) -> Multigraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for _ in 0..adj[u * n + u] {
                edges.push((u, u));
            }
            for v in u + 1..n {
                for _ in 0..adj[u * n + v] {
                    edges.push((u, v));
                }
            }
        }
        Multigraph { n, edges }
    }

    /// Isomorphism-invariant key respecting loops and edge multiplicities.
    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_key_matrix(self.n, &self.multiplicity_matrix())
    }

    /// The isomorphic copy of `self` in canonical labeling; isomorphic inputs
    /// give identical outputs.
    pub fn canonical_form(&self) -> Multigraph {
        let (n, adj) = decode_key(&self.canonical_key());
        Multigraph::from_matrix(n, &adj)
    }

    pub fn is_isomorphic(&self, other: &Multigraph) -> bool {
        self.n == other.n && self.size() == other.size() && self.canonical_key() == other.canonical_key()
    }

    /// Indices of the edges whose deletion disconnects the graph.
    pub fn bridges(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::domain("bridges requires a connected graph"));
        }
        Ok(LowLink::new(self).bridges)
    }

    /// Vertices whose removal increases the number of components.
    pub fn cut_vertices(&self) -> Vec<usize> {
        LowLink::new(self).cut_vertices
    }

    /// Delete one copy of edge `e`, or contract it (contracting a loop deletes it).
    ///
    /// Contraction keeps the lower endpoint, removes the higher one and shifts
    /// the labels above it down by one. All other edges, including any new
    /// loops and parallels, are kept.
    pub fn edge_minor(&self, e: usize, mode: MinorMode) -> Result<Multigraph> {
        let Some(&(u, v)) = self.edges.get(e) else {
            return Err(Error::domain(format!(
                "edge index {e} out of range (graph has {} edges)",
                self.edges.len()
            )));
        };
        let rest = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &uv)| uv);
        if mode == MinorMode::Delete || u == v {
            return Ok(Multigraph {
                n: self.n,
                edges: rest.collect(),
            });
        }
        let map = |x: usize| match x.cmp(&v) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Greater => x - 1,
        };
        Multigraph::new(self.n - 1, rest.map(|(a, b)| (map(a), map(b))))
    }

    /// Repeatedly replace a degree-2 vertex by an edge between its neighbors.
    ///
    /// Stops when no vertex has degree 2 or a single vertex remains. A vertex
    /// whose two edges go to the same neighbor leaves a loop there.
    pub fn suppress_degree_two(&self) -> Result<Multigraph> {
        if !self.is_connected() {
            return Err(Error::domain("suppress_degree_two requires a connected graph"));
        }
        let mut g = self.clone();
        while g.n > 1 {
            let deg = g.degrees();
            let Some(x) = (0..g.n).find(|&x| deg[x] == 2) else {
                break;
            };
            let incident: Vec<usize> = (0..g.edges.len())
                .filter(|&i| g.edges[i].0 == x || g.edges[i].1 == x)
                .collect();
            let ends: Vec<usize> = incident
                .iter()
                .map(|&i| {
                    let (a, b) = g.edges[i];
                    if a == x {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            // a lone loop at x would mean x is its own component
            if incident.len() != 2 {
                return Err(Error::Integrity(format!(
                    "degree-2 vertex {x} is a loop-only component"
                )));
            }
            let shift = |w: usize| if w > x { w - 1 } else { w };
            let mut edges: Vec<(usize, usize)> = g
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| !incident.contains(i))
                .map(|(_, &(a, b))| (shift(a), shift(b)))
                .collect();
            edges.push((shift(ends[0]), shift(ends[1])));
            g = Multigraph::new(g.n - 1, edges)?;
        }
        Ok(g)
    }

    /// Classify a bridgeless corank-2 graph as a theta or as two cycles at a vertex.
    pub fn classify_corank2(&self) -> Corank2Type {
        if !self.is_connected() || self.corank() != 2 {
            return Corank2Type::NotApplicable;
        }
        match self.bridges() {
            Ok(b) if b.is_empty() => {}
            _ => return Corank2Type::NotApplicable,
        }
        let Ok(base) = self.suppress_degree_two() else {
            return Corank2Type::NotApplicable;
        };
        match (base.order(), base.size(), base.loop_count()) {
            (1, 2, 2) => Corank2Type::TwoCyclesAtVertex,
            (2, 3, 0) => Corank2Type::Theta,
            _ => Corank2Type::NotApplicable,
        }
    }

    /// Path lengths `(l1 <= l2 <= l3)` of a theta graph, or `None` for any other graph.
    pub fn theta_path_lengths(&self) -> Option<[usize; 3]> {
        if self.classify_corank2() != Corank2Type::Theta {
            return None;
        }
        let deg = self.degrees();
        let branch: Vec<usize> = (0..self.n).filter(|&v| deg[v] == 3).collect();
        if branch.len() != 2 {
            return None;
        }
        let adj = self.incidence();
        let (start, goal) = (branch[0], branch[1]);
        let mut lengths = Vec::with_capacity(3);
        for &(first_nbr, first_edge) in &adj[start] {
            let (mut prev_edge, mut at, mut len) = (first_edge, first_nbr, 1);
            while at != goal {
                let &(next, e) = adj[at].iter().find(|&&(_, e)| e != prev_edge)?;
                prev_edge = e;
                at = next;
                len += 1;
            }
            lengths.push(len);
        }
        let mut out: [usize; 3] = lengths.try_into().ok()?;
        out.sort_unstable();
        Some(out)
    }

    /// Connectivity classes this graph belongs to.
    pub fn classify(&self) -> BTreeSet<GraphClass> {
        let mut out = BTreeSet::new();
        if !self.is_connected() {
            return out;
        }
        out.insert(GraphClass::Connected);
        let ll = LowLink::new(self);
        if ll.bridges.is_empty() {
            out.insert(GraphClass::TwoEdgeConnected);
            if self.n >= 3 && ll.cut_vertices.is_empty() {
                out.insert(GraphClass::TwoConnected);
            }
        }
        out
    }

    pub fn in_class(&self, class: GraphClass) -> bool {
        self.classify().contains(&class)
    }

    /// Per-vertex list of `(neighbor, edge index)`; loops appear once.
    pub(crate) fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            if u != v {
                adj[v].push((u, i));
            }
        }
        adj
    }
}

/// Disjoint-set forest with path halving.
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when `a` and `b` were in different sets.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Bridges and cut vertices from one iterative low-link DFS.
///
/// The DFS skips only the tree edge it arrived by (by index), so a member of
/// a parallel class is never reported as a bridge.
struct LowLink {
    bridges: Vec<usize>,
    cut_vertices: Vec<usize>,
}

impl LowLink {
    fn new(g: &Multigraph) -> Self {
        let n = g.n;
        let adj = g.incidence();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut bridges = Vec::new();
        let mut is_cut = vec![false; n];
        let mut timer = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // (vertex, parent edge, next adjacency position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
                if let Some(&(w, e)) = adj[v].get(*pos) {
                    *pos += 1;
                    if e == pe || w == v {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(pe);
                        }
                        if p != root && low[v] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        bridges.sort_unstable();
        LowLink {
            bridges,
            cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        }
    }
}
