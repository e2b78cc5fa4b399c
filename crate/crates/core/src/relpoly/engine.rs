//! Deletion–contraction engine for all-terminal reliability.
//!
//! Graphs are held as loopless multiplicity matrices. Each call splits the
//! graph into blocks (a bridge is a block of one bundle), and every block with
//! three or more vertices is expanded on a whole parallel class at once:
//!
//! `Rel(G) = (1 - q^b) Rel(G / uv) + q^b Rel(G - uv)`
//!
//! where `b` is the multiplicity of `uv`. Blocks are memoized by canonical key
//! in a bounded LRU cache.

use std::num::NonZeroUsize;

use lru::LruCache;

use super::Poly;
use crate::multigraph::{canonical_key_matrix, CanonicalKey, Multigraph};

pub const DEFAULT_CACHE_ENTRIES: usize = 1 << 17;

/// Reliability polynomial calculator with its own memo cache.
///
/// Results never depend on cache state; the cache only saves work.
pub struct ReliabilityEngine {
    cache: LruCache<CanonicalKey, Poly>,
    hits: u64,
    misses: u64,
}

impl Default for ReliabilityEngine {
    fn default() -> Self {
        ReliabilityEngine::new(DEFAULT_CACHE_ENTRIES)
    }
}

impl ReliabilityEngine {
    pub fn new(cache_entries: usize) -> Self {
        ReliabilityEngine {
            cache: LruCache::new(NonZeroUsize::new(cache_entries.max(1)).unwrap()),
            hits: 0,
            misses: 0,
        }
    }

    /// (hits, misses) of the block cache so far.
    pub fn cache_stats(&self) -> (u64, u64) {
        (self.hits, self.misses)
    }

    /// Exact reliability polynomial; zero iff `g` is disconnected.
    pub fn reliability(&mut self, g: &Multigraph) -> Poly {
        let n = g.order();
        let mut adj = g.multiplicity_matrix();
        for v in 0..n {
            adj[v * n + v] = 0;
        }
        self.rel(&Mat { n, adj })
    }

    fn rel(&mut self, g: &Mat) -> Poly {
        if g.n <= 1 {
            return Poly::one();
        }
        let Some(blocks) = g.blocks() else {
            return Poly::zero();
        };
        let mut out = Poly::one();
        for block in blocks {
            let r = self.rel_block(&block);
            out = &out * &r;
        }
        out
    }

    fn rel_block(&mut self, g: &Mat) -> Poly {
        if g.n == 2 {
            return Poly::one_minus_q_to(g.at(0, 1) as usize);
        }
        let key = canonical_key_matrix(g.n, &g.adj);
        if let Some(p) = self.cache.get(&key) {
            self.hits += 1;
            return p.clone();
        }
        self.misses += 1;

        let (x, y) = g.pivot();
        let b = g.at(x, y) as usize;
        let deleted = self.rel(&g.delete_bundle(x, y));
        let contracted = self.rel(&g.contract(x, y));
        let survive = Poly::one_minus_q_to(b);
        let fail = Poly::monomial(1.into(), b);
        let out = &(&survive * &contracted) + &(&fail * &deleted);

        self.cache.put(key, out.clone());
        out
    }
}

/// Loopless multigraph as a symmetric multiplicity matrix.
#[derive(Clone, Debug)]
struct Mat {
    n: usize,
    adj: Vec<u32>,
}

impl Mat {
    #[inline]
    fn at(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    /// Bundle of maximum multiplicity at a vertex of minimum degree
    /// (lowest indices win ties).
    fn pivot(&self) -> (usize, usize) {
        let n = self.n;
        let degree = |v: usize| -> u32 { (0..n).map(|w| self.at(v, w)).sum() };
        let x = (0..n).min_by_key(|&v| (degree(v), v)).expect("nonempty block");
        let y = (0..n)
            .filter(|&w| w != x && self.at(x, w) > 0)
            .max_by_key(|&w| (self.at(x, w), std::cmp::Reverse(w)))
            .expect("block vertex has a neighbor");
        (x, y)
    }

    fn delete_bundle(&self, x: usize, y: usize) -> Mat {
        let mut adj = self.adj.clone();
        adj[x * self.n + y] = 0;
        adj[y * self.n + x] = 0;
        Mat { n: self.n, adj }
    }

    /// Merge `y` into `x`; edges between them vanish as loops.
    fn contract(&self, x: usize, y: usize) -> Mat {
        let n = self.n;
        let keep: Vec<usize> = (0..n).filter(|&v| v != y).collect();
        let m = n - 1;
        let mut adj = vec![0u32; m * m];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut w = self.at(u, v);
                if u == x {
                    w += self.at(y, v);
                }
                if v == x {
                    w += self.at(u, y);
                }
                adj[i * m + j] = w;
            }
        }
        Mat { n: m, adj }
    }

    /// Biconnected components as induced sub-matrices, or `None` when disconnected.
    fn blocks(&self) -> Option<Vec<Mat>> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();

        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        // (vertex, parent, next neighbor to scan)
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < n {
                let w = *next;
                *next += 1;
                if w == v || w == parent || self.at(v, w) == 0 {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut verts = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            verts.push(a);
                            verts.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        verts.sort_unstable();
                        verts.dedup();
                        blocks.push(verts);
                    }
                }
            }
        }
        if disc.iter().any(|&d| d == usize::MAX) {
            return None;
        }
        Some(blocks.into_iter().map(|vs| self.induced(&vs)).collect())
    }

    fn induced(&self, verts: &[usize]) -> Mat {
        let m = verts.len();
        let mut adj = vec![0u32; m * m];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                adj[i * m + j] = self.at(u, v);
            }
        }
        Mat { n: m, adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::FamilySpec;

    fn mat(g: &Multigraph) -> Mat {
        Mat {
            n: g.order(),
            adj: g.without_loops().multiplicity_matrix(),
        }
    }

    #[test]
    fn blocks_of_bowtie_and_pendant_cycle() {
        let bowtie = FamilySpec::TwoCyclesAtVertex { a: 3, b: 3 }.build().unwrap();
        let blocks = mat(&bowtie).blocks().unwrap();
        assert_eq!(blocks.iter().map(|b| b.n).collect::<Vec<_>>(), vec![3, 3]);
        let pc = FamilySpec::PendantCycle { k: 3, n: 6 }.build().unwrap();
        let mut sizes: Vec<usize> = mat(&pc).blocks().unwrap().iter().map(|b| b.n).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 4]);
    }

    #[test]
    fn disconnected_has_no_blocks() {
        let g = Multigraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(mat(&g).blocks().is_none());
    }

    #[test]
    fn contraction_folds_parallel_edges() {
        let c3 = FamilySpec::Cycle { n: 3 }.build().unwrap();
        let c = mat(&c3).contract(0, 1);
        assert_eq!(c.n, 2);
        assert_eq!(c.at(0, 1), 2);
        assert_eq!(c.at(0, 0), 0);
    }

    #[test]
    fn cache_is_used_on_repeated_blocks() {
        let mut engine = ReliabilityEngine::new(16);
        let k4 = Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let first = engine.reliability(&k4);
        let (_, misses) = engine.cache_stats();
        let second = engine.reliability(&k4);
        assert_eq!(first, second);
        assert_eq!(engine.cache_stats().1, misses);
        assert!(engine.cache_stats().0 >= 1);
    }
}
