//! The generator against the shipped reference corpus of connected simple graphs.

use std::collections::BTreeSet;
use std::path::PathBuf;

use relroots::enumerate::{enum_connected_simple, read_graph_file};
use relroots::CanonicalKey;
use sha2::{Digest, Sha256};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

/// (sha256, count, file name) per line of SHA256SUMS.
fn manifest() -> Vec<(String, usize, String)> {
    let text = std::fs::read_to_string(data_dir().join("SHA256SUMS")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let parts: Vec<&str> = l.split_whitespace().collect();
            (parts[0].to_string(), parts[1].parse().unwrap(), parts[2].to_string())
        })
        .collect()
}

#[test]
fn corpus_files_match_their_hashes() {
    let m = manifest();
    assert_eq!(m.len(), 8);
    for (sha, count, name) in m {
        let bytes = std::fs::read(data_dir().join(&name)).unwrap();
        let digest: String = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(digest, sha, "{name}");
        assert_eq!(bytes.iter().filter(|&&b| b == b'\n').count(), count, "{name}");
    }
}

#[test]
fn generator_matches_reference_corpus() {
    let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (n, want) in (1..=8).zip(expected) {
        let reference = read_graph_file(&data_dir().join(format!("connected-simple-{n}.g6")), None).unwrap();
        assert_eq!(reference.len(), want, "reference order {n}");
        let generated = enum_connected_simple(n).unwrap();
        assert_eq!(generated.len(), want, "generated order {n}");
        let a: BTreeSet<CanonicalKey> = reference.iter().map(|g| g.canonical_key()).collect();
        let b: BTreeSet<CanonicalKey> = generated.iter().map(|g| g.canonical_key()).collect();
        assert_eq!(a.len(), want, "reference order {n} has isomorphic duplicates");
        assert!(a == b, "order {n}: generator and reference disagree");
        assert!(reference.iter().all(|g| g.is_connected() && g.is_simple() && g.order() == n));
    }
}
