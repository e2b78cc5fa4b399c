//! Isomorph-free connected simple graphs, corpus files and seeded multigraph samples.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multigraph::format::parse_graphs;
use crate::multigraph::{canonical_key_matrix, CanonicalKey, GraphClass, GraphFormat, Multigraph};

pub const MAX_GENERATED_ORDER: usize = 9;
pub const SAMPLE_SIZE: usize = 10_000;
pub const SAMPLE_MAX_ORDER: usize = 6;
pub const SAMPLE_MAX_MULTIPLICITY: u32 = 3;

/// Where the graphs of a stream came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Generated { order: usize },
    File { path: PathBuf, format: String },
    Sampled { seed: u64, count: usize, max_order: usize, max_multiplicity: u32 },
    Inline,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Generated { order } => write!(f, "generated(order={order})"),
            Provenance::File { path, format } => write!(f, "file({}, {format})", path.display()),
            Provenance::Sampled { seed, count, max_order, max_multiplicity } => {
                write!(f, "sampled(seed={seed}, count={count}, order<={max_order}, multiplicity<={max_multiplicity})")
            }
            Provenance::Inline => f.write_str("inline"),
        }
    }
}

/// An ordered sequence of graphs, pairwise non-isomorphic, with its provenance.
#[derive(Clone, Debug)]
pub struct GraphStream {
    pub provenance: Provenance,
    pub class: Option<GraphClass>,
    graphs: Vec<Multigraph>,
}

impl GraphStream {
    /// Wraps `graphs`, dropping any graph isomorphic to an earlier one.
    pub fn new(provenance: Provenance, graphs: Vec<Multigraph>) -> GraphStream {
        let mut seen = HashSet::new();
        let graphs = graphs.into_iter().filter(|g| seen.insert(g.canonical_key())).collect();
        GraphStream { provenance, class: None, graphs }
    }

    pub fn graphs(&self) -> &[Multigraph] {
        &self.graphs
    }

    pub fn into_graphs(self) -> Vec<Multigraph> {
        self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Multigraph> {
        self.graphs.iter()
    }

    /// Keeps the graphs of class `c`, in order.
    pub fn filter_class(self, c: GraphClass) -> GraphStream {
        filter_class(self, c)
    }

    /// One graph6 line per graph; fails on graphs that are not simple.
    pub fn to_graph6(&self) -> Result<String> {
        let mut out = String::new();
        for g in &self.graphs {
            out.push_str(&g.to_graph6()?);
            out.push('\n');
        }
        Ok(out)
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = &'a Multigraph;
    type IntoIter = std::slice::Iter<'a, Multigraph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

pub fn filter_class(s: GraphStream, c: GraphClass) -> GraphStream {
    let class = match s.class {
        Some(prev) if prev > c => Some(prev),
        _ => Some(c),
    };
    let graphs = s.graphs.into_iter().filter(|g| g.in_class(c)).collect();
    GraphStream { provenance: s.provenance, class, graphs }
}

/// All connected simple graphs of order `n` up to isomorphism, in canonical
/// labeling, sorted by canonical key.
///
/// Order `k` graphs come from order `k-1` ones by adding a vertex joined to
/// every nonempty subset of the old vertices.
pub fn enum_connected_simple(n: usize) -> Result<GraphStream> {
    if !(1..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(Error::domain(format!("order {n} is outside 1..={MAX_GENERATED_ORDER}")));
    }
    let mut level: Vec<CanonicalKey> = vec![canonical_key_matrix(1, &[0])];
    for k in 2..=n {
        let parents: Vec<Multigraph> = level.iter().map(key_graph).collect();
        let next: BTreeSet<CanonicalKey> = parents
            .par_iter()
            .flat_map_iter(|g| {
                let base = g.multiplicity_matrix();
                (1u32..1 << (k - 1)).map(move |mask| {
                    let mut adj = vec![0u32; k * k];
                    for u in 0..k - 1 {
                        adj[u * k..u * k + k - 1].copy_from_slice(&base[u * (k - 1)..(u + 1) * (k - 1)]);
                        if mask >> u & 1 == 1 {
                            adj[u * k + k - 1] = 1;
                            adj[(k - 1) * k + u] = 1;
                        }
                    }
                    canonical_key_matrix(k, &adj)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
    }
    let graphs = level.iter().map(key_graph).collect();
    Ok(GraphStream { provenance: Provenance::Generated { order: n }, class: None, graphs })
}

fn key_graph(key: &CanonicalKey) -> Multigraph {
    let (n, adj) = crate::multigraph::decode_key(key);
    Multigraph::from_matrix(n, &adj)
}

/// Guesses the format from a file extension.
pub fn format_for_path(path: &Path) -> Option<GraphFormat> {
    match path.extension()?.to_str()? {
        "g6" | "graph6" => Some(GraphFormat::Graph6),
        "s6" | "sparse6" => Some(GraphFormat::Sparse6),
        "json" => Some(GraphFormat::EdgeListJson),
        _ => None,
    }
}

/// Reads a corpus file; the format defaults to the one implied by the extension.
pub fn read_graph_file(path: &Path, format: Option<GraphFormat>) -> Result<GraphStream> {
    let format = format
        .or_else(|| format_for_path(path))
        .ok_or_else(|| Error::domain(format!("cannot infer the graph format of {}", path.display())))?;
    let bytes = std::fs::read(path)?;
    let graphs = parse_graphs(&bytes, format)?;
    Ok(GraphStream::new(Provenance::File { path: path.to_path_buf(), format: format.to_string() }, graphs))
}

/// `count` random connected loopless multigraphs of order `2..=max_order`
/// with edge multiplicities at most `max_multiplicity`. Isomorphic repeats
/// are kept, so the stream has exactly `count` graphs.
pub fn sample_multigraphs(seed: u64, count: usize, max_order: usize, max_multiplicity: u32) -> Result<Vec<Multigraph>> {
    if max_order < 2 || max_multiplicity < 1 {
        return Err(Error::domain("samples need order at least 2 and multiplicity at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.random_range(2..=max_order);
        let mut adj = vec![0u32; n * n];
        for v in 1..n {
            let u = rng.random_range(0..v);
            adj[u * n + v] = 1;
        }
        for u in 0..n {
            for v in u + 1..n {
                let lo = adj[u * n + v];
                let x = rng.random_range(lo..=max_multiplicity);
                adj[u * n + v] = x;
                adj[v * n + u] = x;
            }
        }
        out.push(Multigraph::from_matrix(n, &adj));
    }
    Ok(out)
}
