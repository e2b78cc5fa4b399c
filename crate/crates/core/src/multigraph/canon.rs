//! Canonical keys by individualization and refinement.
//!
//! The search refines an ordered vertex partition to an equitable one, then
//! branches on the first non-singleton cell. Branches on twin vertices are
//! skipped because the transposition of twins is an automorphism. The key is
//! the lexicographically largest upper-triangle code over all leaves.

use std::fmt;

/// Isomorphism-invariant byte string for a multigraph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical key of the multigraph with symmetric multiplicity matrix `adj`
/// (row-major, `n * n`, loops counted on the diagonal).
pub(crate) fn canonical_key_matrix(n: usize, adj: &[u32]) -> CanonicalKey {
    debug_assert_eq!(adj.len(), n * n);
    let mut search = Search {
        n,
        adj,
        best: None,
    };
    let mut colors = vec![0usize; n];
    search.descend(&mut colors);

    let mut out = Vec::with_capacity(2 + n * (n + 1) / 2);
    push_varint(&mut out, n as u64);
    if let Some(code) = search.best {
        for x in code {
            push_varint(&mut out, x as u64);
        }
    }
    CanonicalKey(out)
}

/// Multiplicity matrix of the canonical labeling encoded in `key`.
pub(crate) fn decode_key(key: &CanonicalKey) -> (usize, Vec<u32>) {
    let mut it = key.0.iter().copied();
    let mut next = move || {
        let mut x = 0u64;
        let mut shift = 0;
        while let Some(b) = it.next() {
            x |= u64::from(b & 0x7f) << shift;
            if b & 0x80 == 0 {
                return Some(x);
            }
            shift += 7;
        }
        None
    };
    let n = next().expect("key holds the order") as usize;
    let mut adj = vec![0u32; n * n];
    for i in 0..n {
        for j in i..n {
            let x = next().expect("key holds the full upper triangle") as u32;
            adj[i * n + j] = x;
            adj[j * n + i] = x;
        }
    }
    (n, adj)
}

fn push_varint(out: &mut Vec<u8>, mut x: u64) {
    loop {
        let byte = (x & 0x7f) as u8;
        x >>= 7;
        if x == 0 {
            out.push(byte);
            return;
        }
        out.push(byte | 0x80);
    }
}

struct Search<'a> {
    n: usize,
    adj: &'a [u32],
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    #[inline]
    fn at(&self, u: usize, v: usize) -> u32 {
        self.adj[u * self.n + v]
    }

    fn descend(&mut self, colors: &mut Vec<usize>) {
        let n = self.n;
        self.refine(colors);

        // Cell sizes indexed by color (colors are cell start positions).
        let mut size = vec![0usize; n];
        for &c in colors.iter() {
            size[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| size[c] > 1) else {
            self.leaf(colors);
            return;
        };

        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = colors.clone();
            for &w in &members {
                if w != v {
                    child[w] = target + 1;
                }
            }
            self.descend(&mut child);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        if self.at(u, u) != self.at(v, v) {
            return false;
        }
        (0..self.n)
            .filter(|&w| w != u && w != v)
            .all(|w| self.at(u, w) == self.at(v, w))
    }

    /// Refine to the coarsest equitable partition finer than `colors`.
    fn refine(&self, colors: &mut [usize]) {
        let n = self.n;
        let mut distinct = count_distinct(colors);
        loop {
            let signatures: Vec<(usize, u32, Vec<(usize, u32)>)> = (0..n)
                .map(|v| {
                    let mut nbrs: Vec<(usize, u32)> = (0..n)
                        .filter(|&w| w != v && self.at(v, w) > 0)
                        .map(|w| (colors[w], self.at(v, w)))
                        .collect();
                    nbrs.sort_unstable();
                    (colors[v], self.at(v, v), nbrs)
                })
                .collect();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| signatures[a].cmp(&signatures[b]));
            let mut start = 0;
            for (pos, &v) in order.iter().enumerate() {
                if pos > 0 && signatures[v] != signatures[order[pos - 1]] {
                    start = pos;
                }
                colors[v] = start;
            }
            let now = count_distinct(colors);
            if now == distinct {
                return;
            }
            distinct = now;
        }
    }

    fn leaf(&mut self, colors: &[usize]) {
        let n = self.n;
        let mut inv = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            inv[c] = v;
        }
        let mut code = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                code.push(self.at(inv[i], inv[j]));
            }
        }
        if self.best.as_ref().is_none_or(|b| code > *b) {
            self.best = Some(code);
        }
    }
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len()];
    let mut k = 0;
    for &c in colors {
        if !seen[c] {
            seen[c] = true;
            k += 1;
        }
    }
    k
}
