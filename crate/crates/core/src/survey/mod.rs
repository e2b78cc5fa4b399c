//! Censuses over graph universes: per-graph records, aggregate reports with
//! violation lists, the `q = -1` check, Monte Carlo estimates and root scatter
//! output.

mod montecarlo;
mod scatter;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enum_connected_simple, GraphStream, Provenance};
use crate::error::{Error, Result};
use crate::multigraph::{FamilySpec, GraphClass, Multigraph};
use crate::relpoly::{h_vector_of, spanning_tree_count, ReliabilityEngine, DEFAULT_CACHE_ENTRIES};
use crate::rootlab::{
    ek_annulus, inner_circle_gcd_test, is_log_concave, parse_rational, rational_text, root_location_checks, root_set_of,
    LOCATION_TOL,
};

pub use montecarlo::{monte_carlo_check, MonteCarlo, MC_CHUNK, MC_MIN_TRIALS};
pub use scatter::{emit_root_scatter, scatter_csv, scatter_svg};

pub const SCHEMA_VERSION: u32 = 1;
/// Roots within this distance of the minimum modulus count as attaining it.
pub const ATTAIN_TOL: f64 = 1e-9;
pub const RESIDUAL_LIMIT: f64 = 1e-10;

/// Recorded in every report: the corrected second H-coefficient of theta graphs.
pub const THETA_H2_NOTE: &str = "theta graphs: H_2 = F_2 - n, one more than the closed form \
C(n,2) - C(l1,2) - C(l2,2) - C(l3,2) - n + 1 evaluates to; theta(1,2,2) has F = (1,5,8), \
H = (1,3,4) by exact division and by the F-to-H transform, and 8 spanning trees";

/// Environment variable naming the worker thread count.
pub const THREADS_ENV: &str = "RELROOTS_THREADS";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordRoot {
    pub re: String,
    pub im: String,
    pub multiplicity: usize,
    pub modulus: String,
}

impl RecordRoot {
    pub fn re_f64(&self) -> f64 {
        self.re.parse().unwrap_or(f64::NAN)
    }

    pub fn im_f64(&self) -> f64 {
        self.im.parse().unwrap_or(f64::NAN)
    }

    pub fn modulus_f64(&self) -> f64 {
        self.modulus.parse().unwrap_or(f64::NAN)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnulusRecord {
    pub r: String,
    #[serde(rename = "R")]
    pub r_outer: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdRecord {
    pub s: Vec<usize>,
    pub gcd: Option<usize>,
    pub verdict: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordChecks {
    pub real_range_ok: bool,
    pub modulus_bound_ok: bool,
    pub min_modulus_ok: bool,
    pub log_concave: bool,
    pub annulus_ok: bool,
    pub gcd_consistent: bool,
    pub h_structure_ok: bool,
    pub residual_ok: bool,
}

impl RecordChecks {
    fn failures(&self) -> Vec<&'static str> {
        let named = [
            ("real_range_ok", self.real_range_ok),
            ("modulus_bound_ok", self.modulus_bound_ok),
            ("min_modulus_ok", self.min_modulus_ok),
            ("log_concave", self.log_concave),
            ("annulus_ok", self.annulus_ok),
            ("gcd_consistent", self.gcd_consistent),
            ("h_structure_ok", self.h_structure_ok),
            ("residual_ok", self.residual_ok),
        ];
        named.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect()
    }

    pub fn all(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Everything the census knows about one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub key: String,
    /// graph6 for simple graphs, sparse6 otherwise.
    pub graph: String,
    pub order: usize,
    pub size: usize,
    pub corank: usize,
    pub classes: Vec<String>,
    pub h_vector: Vec<String>,
    pub spanning_trees: String,
    pub min_modulus: Option<String>,
    pub attaining_roots: Vec<RecordRoot>,
    pub roots: Vec<RecordRoot>,
    pub root_one_multiplicity: usize,
    pub rational_roots: Vec<String>,
    pub unconfirmed_rational_roots: Vec<String>,
    pub annulus: Option<AnnulusRecord>,
    pub gcd_test: Option<GcdRecord>,
    pub max_residual: String,
    pub checks: RecordChecks,
}

impl SurveyRecord {
    pub fn min_modulus_f64(&self) -> Option<f64> {
        self.min_modulus.as_ref().map(|s| s.parse().unwrap_or(f64::NAN))
    }

    /// Rational roots parsed back to exact values.
    pub fn rationals(&self) -> Vec<BigRational> {
        self.rational_roots.iter().filter_map(|s| parse_rational(s).ok()).collect()
    }
}

fn encode(g: &Multigraph) -> String {
    g.to_graph6().unwrap_or_else(|_| g.to_sparse6())
}

/// Builds the record of a connected graph.
pub fn survey_record(engine: &mut ReliabilityEngine, g: &Multigraph) -> Result<SurveyRecord> {
    if !g.is_connected() {
        return Err(Error::domain(format!("census graphs must be connected: {}", encode(g))));
    }
    let n = g.order();
    let rel = engine.reliability(g);
    let h = h_vector_of(g, &rel)?;
    let rs = root_set_of(g, &rel)?;
    let rational = if n >= 2 {
        crate::rootlab::rational_roots_of(g, &rel, Some(&rs))?
    } else {
        crate::rootlab::RationalRoots { roots: Vec::new(), unconfirmed: Vec::new() }
    };
    let trees = spanning_tree_count(g);
    let loc = root_location_checks(g, &rs);

    let to_rec = |z: &crate::rootlab::Root| RecordRoot {
        re: z.re_text.clone(),
        im: z.im_text.clone(),
        multiplicity: z.multiplicity,
        modulus: z.modulus_text(),
    };
    let min = rs.min_modulus();
    let attaining: Vec<RecordRoot> = match min {
        Some(m) => rs.roots.iter().filter(|z| z.modulus() <= m + ATTAIN_TOL).map(to_rec).collect(),
        None => Vec::new(),
    };
    let min_text = rs.roots.iter().min_by(|a, b| a.modulus().total_cmp(&b.modulus())).map(|z| z.modulus_text());

    let hp = h.to_poly();
    let (annulus, gcd_test, annulus_ok, gcd_consistent) = match (ek_annulus(&hp), inner_circle_gcd_test(&hp)) {
        (Ok(a), Ok(t)) => {
            let r = crate::rootlab::rational_to_f64(&a.r);
            let big_r = crate::rootlab::rational_to_f64(&a.r_outer);
            let ok = rs.roots.iter().all(|z| z.modulus() >= r - LOCATION_TOL && z.modulus() <= big_r + LOCATION_TOL);
            let consistent = !t.inner_root_excluded || rs.roots.iter().all(|z| (z.modulus() - r).abs() > LOCATION_TOL);
            let ar = AnnulusRecord { r: rational_text(&a.r), r_outer: rational_text(&a.r_outer) };
            let gr = GcdRecord { s: t.s, gcd: t.gcd, verdict: t.verdict.to_string() };
            (Some(ar), Some(gr), ok, consistent)
        }
        _ => (None, None, hp.degree() == Some(0), true),
    };

    let bridgeless = n >= 2 && g.bridges()?.is_empty();
    let h_structure_ok = h.0.first().is_some_and(One::is_one)
        && (!bridgeless || h.0.get(1) == Some(&BigInt::from(n - 1)))
        && h.total() == trees;

    let checks = RecordChecks {
        real_range_ok: loc.real_range_ok,
        modulus_bound_ok: loc.modulus_bound_ok,
        min_modulus_ok: loc.min_modulus_ok,
        log_concave: is_log_concave(&h),
        annulus_ok,
        gcd_consistent,
        h_structure_ok,
        residual_ok: rs.max_residual() <= RESIDUAL_LIMIT,
    };
    Ok(SurveyRecord {
        key: g.canonical_key().to_hex(),
        graph: encode(g),
        order: n,
        size: g.size(),
        corank: g.corank(),
        classes: g.classify().iter().map(|c| c.tag().to_string()).collect(),
        h_vector: h.0.iter().map(ToString::to_string).collect(),
        spanning_trees: trees.to_string(),
        min_modulus: min_text,
        attaining_roots: attaining,
        roots: rs.roots.iter().map(to_rec).collect(),
        root_one_multiplicity: rs.trivial_root_one_multiplicity,
        rational_roots: rational.roots.iter().map(rational_text).collect(),
        unconfirmed_rational_roots: rational.unconfirmed.iter().map(rational_text).collect(),
        annulus,
        gcd_test,
        max_residual: crate::rootlab::decimal_text(rs.max_residual()),
        checks,
    })
}

#[derive(Clone, Debug, Default)]
pub struct SurveyOptions {
    /// Worker threads; `None` reads `RELROOTS_THREADS`, then falls back to all cores.
    pub threads: Option<usize>,
    /// Memo entries per worker; `0` means the default.
    pub cache_entries: usize,
    /// Record wall time in the report (makes reports differ run to run).
    pub timing: bool,
    pub seed: Option<u64>,
}

/// Thread count from `RELROOTS_THREADS`, if set.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k >= 1 => Ok(Some(k)),
            _ => Err(Error::domain(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

/// Runs `f` on a pool sized by `threads` (or the environment).
pub fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let threads = match threads {
        Some(t) => Some(t),
        None => threads_from_env()?,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Error::Integrity(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Records for every graph of `graphs`, in input order.
pub fn census(graphs: &[Multigraph], opts: &SurveyOptions) -> Result<Vec<SurveyRecord>> {
    let cap = if opts.cache_entries == 0 { DEFAULT_CACHE_ENTRIES } else { opts.cache_entries };
    with_pool(opts.threads, || {
        graphs
            .par_iter()
            .map_init(|| ReliabilityEngine::new(cap), survey_record)
            .collect::<Result<Vec<_>>>()
    })?
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Universe {
    pub order: Option<usize>,
    pub class: String,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attainer {
    pub key: String,
    pub graph: String,
    pub roots: Vec<RecordRoot>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalWitness {
    pub root: String,
    pub graphs: usize,
    pub example: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunMetadata {
    pub tool: String,
    pub version: String,
    pub seed: Option<u64>,
    pub wall_time_seconds: Option<f64>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyReport {
    pub schema_version: u32,
    pub universe: Universe,
    pub graph_count: usize,
    pub min_modulus: Option<String>,
    pub min_modulus_attained_by: Vec<Attainer>,
    pub rational_roots: Vec<RationalWitness>,
    pub violations: Vec<String>,
    pub metadata: RunMetadata,
}

impl SurveyReport {
    pub fn rational_union(&self) -> Vec<BigRational> {
        self.rational_roots.iter().filter_map(|w| parse_rational(&w.root).ok()).collect()
    }
}

/// Aggregates records into a report. For generated simple universes of order
/// `n >= 3` the report also checks that the minimum modulus is `1/(n-1)`,
/// attained only by the cycle and only at `-1/(n-1)`.
pub fn summarize(universe: Universe, records: &[SurveyRecord], opts: &SurveyOptions, started: Option<Instant>) -> SurveyReport {
    let mut violations = Vec::new();
    let mut notes = vec![THETA_H2_NOTE.to_string()];
    if records.is_empty() {
        notes.push("empty universe: no graphs matched".to_string());
    }
    for rec in records {
        for f in rec.checks.failures() {
            violations.push(format!("{}: {f} failed", rec.graph));
        }
        for u in &rec.unconfirmed_rational_roots {
            violations.push(format!("{}: numerical root near {u} not confirmed exactly", rec.graph));
        }
        let allowed = |r: &BigRational| {
            r.is_one() || (*r.numer() == -BigInt::one() && r.denom() >= &BigInt::one() && r.denom() < &BigInt::from(rec.order))
        };
        for r in rec.rationals() {
            if !allowed(&r) {
                violations.push(format!("{}: rational root {} outside {{1}} and -1/k", rec.graph, rational_text(&r)));
            }
        }
    }

    let global_min = records.iter().filter_map(SurveyRecord::min_modulus_f64).min_by(f64::total_cmp);
    let mut min_modulus = None;
    let mut attainers = Vec::new();
    if let Some(m) = global_min {
        for rec in records {
            if let Some(x) = rec.min_modulus_f64() {
                if x <= m + ATTAIN_TOL {
                    attainers.push(Attainer { key: rec.key.clone(), graph: rec.graph.clone(), roots: rec.attaining_roots.clone() });
                }
                if x == m && min_modulus.is_none() {
                    min_modulus = rec.min_modulus.clone();
                }
            }
        }
    }

    let mut union: BTreeMap<BigRational, (usize, String)> = BTreeMap::new();
    for rec in records {
        for r in rec.rationals() {
            union.entry(r).or_insert((0, rec.graph.clone())).0 += 1;
        }
    }
    let rational_roots = union
        .into_iter()
        .map(|(r, (graphs, example))| RationalWitness { root: rational_text(&r), graphs, example })
        .collect();

    if let (Provenance::Generated { order }, Some(m)) = (&universe.provenance, global_min) {
        let n = *order;
        if n >= 3 {
            violations.extend(min_modulus_theorem_violations(n, m, &attainers, records));
        }
    }

    SurveyReport {
        schema_version: SCHEMA_VERSION,
        universe,
        graph_count: records.len(),
        min_modulus,
        min_modulus_attained_by: attainers,
        rational_roots,
        violations,
        metadata: RunMetadata {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: opts.seed,
            wall_time_seconds: if opts.timing { started.map(|t| t.elapsed().as_secs_f64()) } else { None },
            notes,
        },
    }
}

fn min_modulus_theorem_violations(n: usize, m: f64, attainers: &[Attainer], records: &[SurveyRecord]) -> Vec<String> {
    let mut v = Vec::new();
    let target = 1.0 / (n - 1) as f64;
    if (m - target).abs() > ATTAIN_TOL {
        v.push(format!("minimum modulus {m} differs from 1/{}", n - 1));
    }
    let cycle = FamilySpec::Cycle { n }.build().expect("cycle of order >= 3").canonical_key().to_hex();
    let root = format!("-1/{}", n - 1);
    match attainers {
        [only] if only.key == cycle => {
            let rec = records.iter().find(|r| r.key == cycle).expect("attainer has a record");
            let exact = rec.rational_roots.contains(&root);
            let single = only.roots.len() == 1 && (only.roots[0].re_f64() + target).abs() <= ATTAIN_TOL;
            if !exact || !single {
                v.push(format!("cycle C_{n} does not attain the minimum only at {root}"));
            }
        }
        _ => v.push(format!(
            "minimum modulus attained by {} graph(s) other than exactly the cycle C_{n}",
            attainers.len()
        )),
    }
    v
}

/// Records and report for a stream of connected graphs.
pub fn survey_stream(stream: &GraphStream, opts: &SurveyOptions) -> Result<(Vec<SurveyRecord>, SurveyReport)> {
    let started = Instant::now();
    let records = census(stream.graphs(), opts)?;
    let order = match stream.provenance {
        Provenance::Generated { order } => Some(order),
        _ => {
            let orders: std::collections::BTreeSet<usize> = stream.iter().map(Multigraph::order).collect();
            (orders.len() == 1).then(|| *orders.first().unwrap())
        }
    };
    let universe = Universe {
        order,
        class: stream.class.unwrap_or(GraphClass::Connected).tag().to_string(),
        provenance: stream.provenance.clone(),
    };
    let report = summarize(universe, &records, opts, Some(started));
    Ok((records, report))
}

/// Census of the connected simple graphs of order `n` in class `c`.
pub fn survey_generated(n: usize, c: GraphClass, opts: &SurveyOptions) -> Result<(Vec<SurveyRecord>, SurveyReport)> {
    if !(2..=crate::enumerate::MAX_GENERATED_ORDER).contains(&n) {
        return Err(Error::domain(format!("census order {n} is outside 2..={}", crate::enumerate::MAX_GENERATED_ORDER)));
    }
    let stream = enum_connected_simple(n)?.filter_class(c);
    survey_stream(&stream, opts)
}

/// Minimum root modulus over the class-`c` graphs of order `n`.
pub fn survey_min_modulus(n: usize, c: GraphClass) -> Result<SurveyReport> {
    Ok(survey_generated(n, c, &SurveyOptions::default())?.1)
}

/// Union of exact rational roots over the class-`c` graphs of order `n`.
pub fn survey_rational_roots(n: usize, c: GraphClass) -> Result<SurveyReport> {
    Ok(survey_generated(n, c, &SurveyOptions::default())?.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinusOneReport {
    pub schema_version: u32,
    pub order: usize,
    pub graphs_tested: usize,
    /// Graphs (graph6) with `Rel(G, -1) = 0`.
    pub violations: Vec<String>,
}

/// Exact `Rel(G, -1)` for every connected simple graph of order `n`.
pub fn check_minus_one_conjecture(n: usize) -> Result<MinusOneReport> {
    if !(2..=8).contains(&n) {
        return Err(Error::domain(format!("order {n} is outside 2..=8")));
    }
    let stream = enum_connected_simple(n)?;
    check_minus_one_graphs(n, stream.graphs(), None)
}

pub fn check_minus_one_graphs(order: usize, graphs: &[Multigraph], threads: Option<usize>) -> Result<MinusOneReport> {
    let minus_one = -BigRational::one();
    let zero: Vec<bool> = with_pool(threads, || {
        graphs
            .par_iter()
            .map_init(ReliabilityEngine::default, |e, g| e.reliability(g).eval_exact(&minus_one).is_zero())
            .collect()
    })?;
    let violations = graphs.iter().zip(&zero).filter(|(_, &z)| z).map(|(g, _)| encode(g)).collect();
    Ok(MinusOneReport { schema_version: SCHEMA_VERSION, order, graphs_tested: graphs.len(), violations })
}

/// `census-<n>-<class>.jsonl` and `summary-<n>-<class>.json` in `dir`.
pub fn write_census(dir: &Path, records: &[SurveyRecord], report: &SurveyReport) -> Result<(PathBuf, PathBuf)> {
    std::fs::create_dir_all(dir)?;
    let n = report.universe.order.map_or_else(|| "mixed".to_string(), |n| n.to_string());
    let class = &report.universe.class;
    let census_path = dir.join(format!("census-{n}-{class}.jsonl"));
    let summary_path = dir.join(format!("summary-{n}-{class}.json"));
    let mut lines = String::new();
    for rec in records {
        lines.push_str(&serde_json::to_string(rec)?);
        lines.push('\n');
    }
    std::fs::write(&census_path, lines)?;
    std::fs::write(&summary_path, serde_json::to_string_pretty(report)? + "\n")?;
    Ok((census_path, summary_path))
}

/// Parses a census `.jsonl` file.
pub fn read_census(path: &Path) -> Result<Vec<SurveyRecord>> {
    let text = std::fs::read_to_string(path)?;
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| Ok(serde_json::from_str(l)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> SurveyOptions {
        SurveyOptions { threads: Some(2), ..Default::default() }
    }

    #[test]
    fn order_three_census() {
        let (records, report) = survey_generated(3, GraphClass::Connected, &opts()).unwrap();
        assert_eq!(report.graph_count, 2);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert_eq!(report.min_modulus.as_deref(), Some("5.0000000000000000000e-1"));
        assert_eq!(report.min_modulus_attained_by.len(), 1);
        assert_eq!(report.min_modulus_attained_by[0].graph, "Bw");
        let union: Vec<String> = report.rational_roots.iter().map(|w| w.root.clone()).collect();
        assert_eq!(union, vec!["-1/2", "1/1"]);
        let path = records.iter().find(|r| r.size == 2).unwrap();
        assert_eq!(path.min_modulus, None);
        assert_eq!(path.root_one_multiplicity, 2);
        assert!(report.metadata.notes[0].starts_with("theta graphs"));
    }

    #[test]
    fn report_aggregates_are_recomputable() {
        let (records, report) = survey_generated(5, GraphClass::Connected, &opts()).unwrap();
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        let mut union: Vec<BigRational> = records.iter().flat_map(SurveyRecord::rationals).collect();
        union.sort();
        union.dedup();
        assert_eq!(union, report.rational_union());
        let min = records.iter().filter_map(SurveyRecord::min_modulus_f64).fold(f64::INFINITY, f64::min);
        assert_eq!(report.min_modulus.as_ref().unwrap().parse::<f64>().unwrap(), min);
        for rec in &records {
            if let Some(m) = rec.min_modulus_f64() {
                let direct = rec.roots.iter().map(RecordRoot::modulus_f64).fold(f64::INFINITY, f64::min);
                assert_eq!(m, direct);
            }
        }
    }

    #[test]
    fn bundles_have_unit_minimum_modulus() {
        let graphs: Vec<Multigraph> = (2..=6).map(|m| FamilySpec::Bundle { m }.build().unwrap()).collect();
        let records = census(&graphs, &opts()).unwrap();
        for rec in &records {
            assert!((rec.min_modulus_f64().unwrap() - 1.0).abs() < 1e-12, "{}", rec.graph);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = survey_generated(5, GraphClass::TwoEdgeConnected, &opts()).unwrap();
        let b = survey_generated(5, GraphClass::TwoEdgeConnected, &SurveyOptions { threads: Some(1), ..Default::default() }).unwrap();
        assert_eq!(serde_json::to_string(&a.1).unwrap(), serde_json::to_string(&b.1).unwrap());
        assert_eq!(a.0, b.0);
        assert!(a.1.metadata.wall_time_seconds.is_none());
    }

    #[test]
    fn empty_universe_is_reported() {
        let stream = GraphStream::new(Provenance::Inline, Vec::new());
        let (records, report) = survey_stream(&stream, &opts()).unwrap();
        assert!(records.is_empty());
        assert_eq!(report.graph_count, 0);
        assert!(report.metadata.notes.iter().any(|n| n.starts_with("empty universe")));
        assert!(report.violations.is_empty());
    }

    #[test]
    fn minus_one_small_orders() {
        let r = check_minus_one_conjecture(4).unwrap();
        assert_eq!((r.graphs_tested, r.violations.len()), (6, 0));
        let b2 = FamilySpec::Bundle { m: 2 }.build().unwrap();
        let r = check_minus_one_graphs(2, &[b2], Some(1)).unwrap();
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn census_files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let (records, report) = survey_generated(4, GraphClass::TwoConnected, &opts()).unwrap();
        let (census_path, summary_path) = write_census(dir.path(), &records, &report).unwrap();
        assert!(census_path.ends_with("census-4-2c.jsonl"));
        assert!(summary_path.ends_with("summary-4-2c.json"));
        assert_eq!(read_census(&census_path).unwrap(), records);
        let summary: serde_json::Value = serde_json::from_slice(&std::fs::read(summary_path).unwrap()).unwrap();
        assert_eq!(summary["violations"], serde_json::json!([]));
        assert_eq!(summary["schema_version"], 1);
    }
}
