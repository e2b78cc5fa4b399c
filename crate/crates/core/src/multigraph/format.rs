//! graph6, sparse6 and edge-list JSON encodings.
//!
//! graph6 and sparse6 follow the nauty `formats.txt` description bit for bit,
//! including the sparse6 padding rule for `n` in {2, 4, 8, 16}.

use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";
const SPARSE6_HEADER: &str = ">>sparse6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Sparse6,
    EdgeListJson,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Ok(GraphFormat::Graph6),
            "s6" | "sparse6" => Ok(GraphFormat::Sparse6),
            "json" | "edge-list-json" | "edgelist" => Ok(GraphFormat::EdgeListJson),
            other => Err(Error::domain(format!("unknown graph format `{other}`"))),
        }
    }
}

impl std::fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Sparse6 => "sparse6",
            GraphFormat::EdgeListJson => "json",
        })
    }
}

/// Wire form of the edge-list JSON schema `{"n": int, "edges": [[u,v], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeListJson> for Multigraph {
    type Error = Error;

    fn try_from(value: EdgeListJson) -> Result<Self> {
        Multigraph::new(value.n, value.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Multigraph> for EdgeListJson {
    fn from(g: Multigraph) -> Self {
        EdgeListJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Decode one graph from `text` in the named format.
///
/// A leading `>>graph6<<` / `>>sparse6<<` header and trailing whitespace are
/// tolerated. Parse errors report the byte offset within `text`.
pub fn parse_graph(text: &[u8], format: GraphFormat) -> Result<Multigraph> {
    match format {
        GraphFormat::EdgeListJson => {
            let wire: EdgeListJson = serde_json::from_slice(text)?;
            Multigraph::try_from(wire)
        }
        GraphFormat::Graph6 => {
            let (body, base) = strip(text, GRAPH6_HEADER);
            decode_graph6(body).map_err(|e| shift(e, base))
        }
        GraphFormat::Sparse6 => {
            let (body, base) = strip(text, SPARSE6_HEADER);
            decode_sparse6(body).map_err(|e| shift(e, base))
        }
    }
}

/// Decode a whole file: one graph per nonblank line (or one JSON document,
/// or a JSON array of documents).
pub fn parse_graphs(text: &[u8], format: GraphFormat) -> Result<Vec<Multigraph>> {
    if format == GraphFormat::EdgeListJson {
        let value: serde_json::Value = serde_json::from_slice(text)?;
        let docs = match value {
            serde_json::Value::Array(items) => items,
            other => vec![other],
        };
        return docs
            .into_iter()
            .map(|d| Multigraph::try_from(serde_json::from_value::<EdgeListJson>(d)?))
            .collect();
    }
    let mut out = Vec::new();
    let mut start = 0;
    for line in text.split(|&b| b == b'\n') {
        let offset = start;
        start += line.len() + 1;
        if line.iter().all(u8::is_ascii_whitespace) {
            continue;
        }
        out.push(parse_graph(line, format).map_err(|e| shift(e, offset))?);
    }
    Ok(out)
}

fn strip<'a>(text: &'a [u8], header: &str) -> (&'a [u8], usize) {
    let mut end = text.len();
    while end > 0 && text[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let text = &text[..end];
    match text.strip_prefix(header.as_bytes()) {
        Some(rest) => (rest, header.len()),
        None => (text, 0),
    }
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + base,
            message,
        },
        other => other,
    }
}

fn check_printable(body: &[u8]) -> Result<()> {
    match body.iter().position(|b| !(63..=126).contains(b)) {
        Some(i) => Err(Error::parse(i, format!("byte 0x{:02x} is outside the range 63..=126", body[i]))),
        None => Ok(()),
    }
}

/// Read N(n); returns (n, bytes consumed).
fn decode_order(body: &[u8], at: usize) -> Result<(usize, usize)> {
    let six = |i: usize| -> Result<u64> {
        body.get(at + i)
            .map(|&b| u64::from(b - 63))
            .ok_or_else(|| Error::parse(at + i, "truncated vertex count"))
    };
    let first = six(0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    if six(1)? < 63 {
        let n = (0..3).try_fold(0u64, |acc, i| Ok::<_, Error>(acc << 6 | six(1 + i)?))?;
        return Ok((n as usize, 4));
    }
    let n = (0..6).try_fold(0u64, |acc, i| Ok::<_, Error>(acc << 6 | six(2 + i)?))?;
    Ok((n as usize, 8))
}

fn encode_order(n: usize, out: &mut String) {
    let n = n as u64;
    let push = |out: &mut String, n: u64, groups: u32| {
        for g in (0..groups).rev() {
            out.push(char::from((((n >> (6 * g)) & 63) + 63) as u8));
        }
    };
    if n < 63 {
        out.push(char::from((n + 63) as u8));
    } else if n < 258_048 {
        out.push('~');
        push(out, n, 3);
    } else {
        out.push_str("~~");
        push(out, n, 6);
    }
}

fn decode_graph6(body: &[u8]) -> Result<Multigraph> {
    match body.first() {
        None => return Err(Error::parse(0, "empty graph6 string")),
        Some(b':') | Some(b';') => {
            return Err(Error::FormatViolation(
                "sparse6 data given as graph6; graph6 cannot encode loops or parallel edges".into(),
            ))
        }
        Some(b'&') => return Err(Error::FormatViolation("digraph6 data given as graph6".into())),
        _ => {}
    }
    check_printable(body)?;
    let (n, used) = decode_order(body, 0)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let payload = &body[used..];
    if payload.len() < need {
        return Err(Error::parse(
            body.len(),
            format!("graph6 payload too short: {} of {need} bytes for n={n}", payload.len()),
        ));
    }
    if payload.len() > need {
        return Err(Error::parse(used + need, format!("unexpected trailing data after graph6 payload for n={n}")));
    }
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..need * 6).any(bit) {
        return Err(Error::parse(used + need - 1, "nonzero graph6 padding bits"));
    }
    Multigraph::new(n, edges)
}

fn decode_sparse6(body: &[u8]) -> Result<Multigraph> {
    match body.first() {
        Some(b':') => {}
        Some(b';') => return Err(Error::Unsupported("incremental sparse6 (`;`) is not supported".into())),
        Some(_) => return Err(Error::parse(0, "sparse6 string must start with `:`")),
        None => return Err(Error::parse(0, "empty sparse6 string")),
    }
    check_printable(&body[1..]).map_err(|e| shift(e, 1))?;
    let (n, used) = decode_order(body, 1)?;
    let payload = &body[1 + used..];
    let k = bits_for(n);
    let total = payload.len() * 6;
    let bit = |p: usize| (payload[p / 6] - 63) >> (5 - p % 6) & 1;

    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut p = 0;
    while p + 1 + k <= total {
        let b = bit(p);
        let x = (0..k).fold(0usize, |acc, i| acc << 1 | usize::from(bit(p + 1 + i)));
        p += 1 + k;
        if b == 1 {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    Multigraph::new(n, edges)
}

/// Number of bits needed to write `n - 1` in binary.
fn bits_for(n: usize) -> usize {
    let mut k = 0;
    while k < usize::BITS as usize && (1usize << k) < n {
        k += 1;
    }
    k
}

struct BitWriter {
    out: String,
    acc: u8,
    filled: u32,
}

impl BitWriter {
    fn push(&mut self, bit: bool) {
        self.acc = self.acc << 1 | u8::from(bit);
        self.filled += 1;
        if self.filled == 6 {
            self.out.push(char::from(self.acc + 63));
            self.acc = 0;
            self.filled = 0;
        }
    }

    fn push_value(&mut self, x: usize, width: usize) {
        for i in (0..width).rev() {
            self.push(x >> i & 1 == 1);
        }
    }

    fn free(&self) -> u32 {
        if self.filled == 0 {
            0
        } else {
            6 - self.filled
        }
    }
}

impl Multigraph {
    /// graph6 encoding (no header). Fails on loops or parallel edges.
    pub fn to_graph6(&self) -> Result<String> {
        if !self.is_simple() {
            return Err(Error::FormatViolation(
                "graph6 encodes only simple graphs; use sparse6 for loops or parallel edges".into(),
            ));
        }
        let n = self.n;
        let adj = self.multiplicity_matrix();
        let mut w = BitWriter {
            out: String::new(),
            acc: 0,
            filled: 0,
        };
        encode_order(n, &mut w.out);
        for j in 1..n {
            for i in 0..j {
                w.push(adj[i * n + j] > 0);
            }
        }
        while w.filled != 0 {
            w.push(false);
        }
        Ok(w.out)
    }

    /// sparse6 encoding (leading `:`, no header, no newline).
    pub fn to_sparse6(&self) -> String {
        let n = self.n;
        let k = bits_for(n);
        let mut w = BitWriter {
            out: String::from(":"),
            acc: 0,
            filled: 0,
        };
        encode_order(n, &mut w.out);

        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (v, u)).collect();
        pairs.sort_unstable();
        let mut last = 0usize;
        for (j, i) in pairs {
            if j == last {
                w.push(false);
            } else {
                w.push(true);
                if j > last + 1 {
                    w.push_value(j, k);
                    w.push(false);
                }
                last = j;
            }
            w.push_value(i, k);
        }
        let free = w.free();
        if free > 0 {
            let special = matches!((n, k), (2, 1) | (4, 2) | (8, 3) | (16, 4));
            if special && last == n - 2 && free as usize >= k + 1 {
                w.push(false);
                for _ in 1..free {
                    w.push(true);
                }
            } else {
                for _ in 0..free {
                    w.push(true);
                }
            }
        }
        w.out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EdgeListJson::from(self.clone())).expect("edge list serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::new(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn graph6_known_strings() {
        // A? is two isolated vertices, A_ is K_2, B_ is K_2 plus an isolated vertex
        assert_eq!(parse_graph(b"A?", GraphFormat::Graph6).unwrap(), g(2, &[]));
        assert_eq!(parse_graph(b"A_", GraphFormat::Graph6).unwrap(), g(2, &[(0, 1)]));
        assert_eq!(parse_graph(b"B_", GraphFormat::Graph6).unwrap(), g(3, &[(0, 1)]));
        let five = g(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(five.to_graph6().unwrap(), "DQc");
        assert_eq!(parse_graph(b">>graph6<<DQc\n", GraphFormat::Graph6).unwrap(), five);
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.to_graph6().unwrap(), "C~");
        assert_eq!(g(0, &[]).to_graph6().unwrap(), "?");
    }

    #[test]
    fn graph6_large_order_header() {
        let big = g(100, &[(0, 99)]);
        let s = big.to_graph6().unwrap();
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph(s.as_bytes(), GraphFormat::Graph6).unwrap(), big);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        match parse_graph(b"C~~", GraphFormat::Graph6) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph(b"D", GraphFormat::Graph6) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match parse_graph(b"C~ ", GraphFormat::Graph6) {
            Ok(_) => {}
            other => panic!("trailing whitespace should be tolerated: {other:?}"),
        }
        assert!(matches!(parse_graph(b"C\x20~", GraphFormat::Graph6), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph(b":Ab", GraphFormat::Graph6), Err(Error::FormatViolation(_))));
        // padding bit set: n=2 needs one payload bit
        assert!(matches!(parse_graph(b"B`", GraphFormat::Graph6), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph6_refuses_multigraphs() {
        assert!(matches!(g(2, &[(0, 1), (0, 1)]).to_graph6(), Err(Error::FormatViolation(_))));
        assert!(matches!(g(1, &[(0, 0)]).to_graph6(), Err(Error::FormatViolation(_))));
    }

    #[test]
    fn sparse6_reference_example() {
        let h = parse_graph(b":Fa@x^", GraphFormat::Sparse6).unwrap();
        assert_eq!(h, g(7, &[(0, 1), (0, 2), (1, 2), (5, 6)]));
        assert_eq!(h.to_sparse6(), ":Fa@x^");
    }

    #[test]
    fn sparse6_parallel_pair_and_loops() {
        let pair = g(2, &[(0, 1), (0, 1)]);
        let s = pair.to_sparse6();
        assert_eq!(s, ":Ab");
        assert_eq!(parse_graph(s.as_bytes(), GraphFormat::Sparse6).unwrap(), pair);
        let looped = g(3, &[(0, 0), (0, 1), (2, 2), (2, 2)]);
        assert_eq!(looped.to_sparse6(), ":BCq");
        let back = parse_graph(looped.to_sparse6().as_bytes(), GraphFormat::Sparse6).unwrap();
        assert_eq!(back, looped);
    }

    #[test]
    fn sparse6_special_padding() {
        // n=4, k=2: vertex 2 has edges, vertex 3 does not, 3 bits to pad
        let h = g(4, &[(0, 2), (1, 2)]);
        let s = h.to_sparse6();
        assert_eq!(s, ":CoJ");
        assert_eq!(parse_graph(s.as_bytes(), GraphFormat::Sparse6).unwrap(), h);
        // bits 1 10 0 00 | 0 01 then pad 0 11 rather than 111
        let bytes: Vec<u8> = s.as_bytes()[2..].iter().map(|b| b - 63).collect();
        assert_eq!(bytes, vec![0b110000, 0b001011]);
        let padded = g(4, &[(0, 1), (0, 1), (1, 2)]);
        assert_eq!(parse_graph(padded.to_sparse6().as_bytes(), GraphFormat::Sparse6).unwrap(), padded);
    }

    #[test]
    fn sparse6_rejects_incremental_and_garbage() {
        assert!(matches!(parse_graph(b";Ab", GraphFormat::Sparse6), Err(Error::Unsupported(_))));
        assert!(matches!(parse_graph(b"Ab", GraphFormat::Sparse6), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph(b":A\x10", GraphFormat::Sparse6), Err(Error::Parse { offset: 2, .. })));
    }

    #[test]
    fn json_edge_list() {
        let c3 = parse_graph(br#"{"n":3,"edges":[[0,1],[1,2],[2,0]]}"#, GraphFormat::EdgeListJson).unwrap();
        assert_eq!(c3, g(3, &[(0, 1), (1, 2), (0, 2)]));
        let back = parse_graph(c3.to_json().as_bytes(), GraphFormat::EdgeListJson).unwrap();
        assert_eq!(back, c3);
        assert!(parse_graph(br#"{"n":2,"edges":[[0,2]]}"#, GraphFormat::EdgeListJson).is_err());
    }

    #[test]
    fn multi_line_files_report_absolute_offsets() {
        let text = b">>graph6<<B_\nC~\n\nC~~\n";
        match parse_graphs(text, GraphFormat::Graph6) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 19),
            other => panic!("{other:?}"),
        }
        let ok = parse_graphs(b">>graph6<<B_\nC~\n", GraphFormat::Graph6).unwrap();
        assert_eq!(ok.len(), 2);
    }
}
