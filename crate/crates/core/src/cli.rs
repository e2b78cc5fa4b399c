//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid input or failed verification, 2 internal
//! integrity failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use crate::enumerate::{
    enum_connected_simple, read_graph_file, sample_multigraphs, GraphStream, Provenance, SAMPLE_MAX_MULTIPLICITY,
    SAMPLE_MAX_ORDER,
};
use crate::error::{Error, Result};
use crate::multigraph::{parse_graph, FamilySpec, GraphClass, GraphFormat, Multigraph};
use crate::relpoly::{closed_form, f_form, f_to_h, f_vector_bruteforce, h_vector_of, ReliabilityEngine};
use crate::rootlab::{
    ek_annulus, inner_circle_gcd_test, parse_rational, rational_roots_of, rational_text, root_location_checks, root_set_of,
};
use crate::survey::{
    check_minus_one_graphs, emit_root_scatter, monte_carlo_check, read_census, survey_stream, write_census, SurveyOptions,
    SCHEMA_VERSION,
};

/// Largest size for which `verify` runs the subset-enumeration oracle.
pub const ORACLE_MAX_EDGES: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "relroots", version, about = "All-terminal reliability polynomials and their roots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reliability polynomial in the failure probability q
    Poly(InputArgs),
    /// H-vector and F-vector
    Hvector(InputArgs),
    /// Complex roots of H with residual bounds and location checks
    Roots(InputArgs),
    /// Exact rational roots among 1 and -1/k
    Rational(InputArgs),
    /// Build a named family graph
    Family(FamilyArgs),
    /// Connected simple graphs of an order, or seeded multigraph samples
    Enumerate(EnumerateArgs),
    /// Census of a graph universe written as JSON lines plus a summary
    Survey(SurveyArgs),
    /// Root scatter CSV and SVG
    Scatter(ScatterArgs),
    /// Monte Carlo estimate against the exact reliability
    Mc(McArgs),
    /// Run every property check for an order and class
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// Family spec such as cycle:5, theta:1,2,2 or pendantcycle:3,7
    #[arg(long)]
    family: Option<FamilySpec>,
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    sparse6: Option<String>,
    /// Inline edge-list JSON {"n": .., "edges": [[u,v], ..]}
    #[arg(long)]
    edges: Option<String>,
    /// File with one graph per line (graph6/sparse6) or JSON
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InputArgs {
    #[command(flatten)]
    source: Source,
    /// Format of --file (g6, s6, json); inferred from the extension by default
    #[arg(long, requires = "file")]
    format: Option<GraphFormat>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    spec: FamilySpec,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long, required_unless_present = "samples", conflicts_with = "samples")]
    order: Option<usize>,
    #[arg(long, default_value = "connected", conflicts_with = "samples")]
    class: GraphClass,
    /// Emit this many seeded multigraph samples (sparse6) instead
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct UniverseArgs {
    #[arg(long, required_unless_present_any = ["input", "samples"])]
    order: Option<usize>,
    #[arg(long, default_value = "connected")]
    class: GraphClass,
    /// Survey the graphs of a file instead of the generated universe
    #[arg(long, conflicts_with_all = ["order", "samples"])]
    input: Option<PathBuf>,
    #[arg(long, requires = "input")]
    format: Option<GraphFormat>,
    /// Survey seeded multigraph samples instead
    #[arg(long, conflicts_with = "order")]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    #[command(flatten)]
    universe: UniverseArgs,
    /// Directory for census and summary files
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Also write roots-<n>.csv and roots-<n>.svg
    #[arg(long)]
    scatter: bool,
    /// Record wall time in the summary
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ScatterArgs {
    /// Census file written by `survey`
    #[arg(long, required_unless_present = "order")]
    census: Option<PathBuf>,
    #[arg(long, conflicts_with = "census")]
    order: Option<usize>,
    #[arg(long, default_value = "connected")]
    class: GraphClass,
    #[arg(long, default_value = ".")]
    out: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct McArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, requires = "file")]
    format: Option<GraphFormat>,
    /// Edge failure probability as p/q
    #[arg(long, value_parser = parse_rational)]
    q: BigRational,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    universe: UniverseArgs,
    /// Comma-separated exact set the rational-root union must equal
    #[arg(long)]
    expect_rationals: Option<String>,
    #[arg(long)]
    json: bool,
}

/// Runs the command line `argv` (including the program name) with the
/// process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(err, "{}", line.trim());
            return 1;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.to_string().replace('\n', " "));
            exit_code(&e)
        }
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Integrity(_) | Error::NonConvergence { .. } => 2,
        _ => 1,
    }
}

fn read_source(src: &Source, format: Option<GraphFormat>) -> Result<Vec<Multigraph>> {
    if let Some(f) = &src.family {
        return Ok(vec![f.build()?]);
    }
    if let Some(s) = &src.graph6 {
        return Ok(vec![parse_graph(s.as_bytes(), GraphFormat::Graph6)?]);
    }
    if let Some(s) = &src.sparse6 {
        return Ok(vec![parse_graph(s.as_bytes(), GraphFormat::Sparse6)?]);
    }
    if let Some(s) = &src.edges {
        return Ok(vec![parse_graph(s.as_bytes(), GraphFormat::EdgeListJson)?]);
    }
    if let Some(p) = &src.file {
        let graphs = crate::multigraph::format::parse_graphs(
            &std::fs::read(p)?,
            format.or_else(|| crate::enumerate::format_for_path(p)).ok_or_else(|| {
                Error::domain(format!("cannot infer the graph format of {}; pass --format", p.display()))
            })?,
        )?;
        if graphs.is_empty() {
            return Err(Error::domain(format!("{} holds no graphs", p.display())));
        }
        return Ok(graphs);
    }
    Err(Error::domain("no input graph given"))
}

fn label(g: &Multigraph) -> String {
    g.to_graph6().unwrap_or_else(|_| g.to_sparse6())
}

fn emit_json(out: &mut dyn Write, command: &str, body: serde_json::Value) -> Result<()> {
    let mut v = json!({ "schema_version": SCHEMA_VERSION, "command": command });
    if let (Some(obj), serde_json::Value::Object(extra)) = (v.as_object_mut(), body) {
        obj.extend(extra);
    }
    writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
    Ok(())
}

fn rational_set_text(rs: &[BigRational]) -> String {
    let mut v = rs.to_vec();
    v.sort_by(|a, b| b.cmp(a));
    format!("{{{}}}", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Poly(a) => cmd_poly(a, out),
        Command::Hvector(a) => cmd_hvector(a, out),
        Command::Roots(a) => cmd_roots(a, out),
        Command::Rational(a) => cmd_rational(a, out),
        Command::Family(a) => cmd_family(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Survey(a) => cmd_survey(a, out),
        Command::Scatter(a) => cmd_scatter(a, out),
        Command::Mc(a) => cmd_mc(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    }
}

fn cmd_poly(a: InputArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs = read_source(&a.source, a.format)?;
    let mut engine = ReliabilityEngine::default();
    let mut results = Vec::new();
    for g in &graphs {
        let p = engine.reliability(g);
        if a.json {
            results.push(json!({ "graph": label(g), "poly": p }));
        } else {
            let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            writeln!(out, "{}\t[{}]\t{}", label(g), coeffs.join(", "), p)?;
        }
    }
    if a.json {
        emit_json(out, "poly", json!({ "results": results }))?;
    }
    Ok(0)
}

fn cmd_hvector(a: InputArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs = read_source(&a.source, a.format)?;
    let mut engine = ReliabilityEngine::default();
    let mut results = Vec::new();
    for g in &graphs {
        let rel = engine.reliability(g);
        let h = h_vector_of(g, &rel)?;
        let f = f_form(&rel, g.size(), g.corank())?;
        if f_to_h(&f)? != h {
            return Err(Error::Integrity(format!("F- and H-forms disagree for {}", label(g))));
        }
        if a.json {
            results.push(json!({ "graph": label(g), "h_vector": h, "f_vector": f }));
        } else {
            let hs: Vec<String> = h.0.iter().map(ToString::to_string).collect();
            let fs: Vec<String> = f.0.iter().map(ToString::to_string).collect();
            writeln!(out, "{}\tH = ({})\tF = ({})", label(g), hs.join(", "), fs.join(", "))?;
        }
    }
    if a.json {
        emit_json(out, "hvector", json!({ "results": results }))?;
    }
    Ok(0)
}

fn cmd_roots(a: InputArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs = read_source(&a.source, a.format)?;
    let mut engine = ReliabilityEngine::default();
    let mut results = Vec::new();
    for g in &graphs {
        let rel = engine.reliability(g);
        let rs = root_set_of(g, &rel)?;
        let h = h_vector_of(g, &rel)?.to_poly();
        let annulus = ek_annulus(&h).ok();
        let gcd = inner_circle_gcd_test(&h).ok();
        let checks = root_location_checks(g, &rs);
        if a.json {
            results.push(json!({
                "graph": label(g),
                "roots": rs,
                "min_modulus": rs.roots.iter().min_by(|x, y| x.modulus().total_cmp(&y.modulus())).map(|z| z.modulus_text()),
                "annulus": annulus,
                "gcd_test": gcd,
                "checks": checks,
            }));
            continue;
        }
        writeln!(out, "graph {}", label(g))?;
        for z in &rs.roots {
            writeln!(out, "  {} {} x{}  |H| <= {:.2e}", z.re_text, z.im_text, z.multiplicity, z.residual)?;
        }
        if rs.trivial_root_one_multiplicity > 0 {
            writeln!(out, "  1 x{}", rs.trivial_root_one_multiplicity)?;
        }
        if let Some(z) = rs.roots.iter().min_by(|x, y| x.modulus().total_cmp(&y.modulus())) {
            writeln!(out, "  min modulus {}", z.modulus_text())?;
        }
        if let Some(an) = &annulus {
            writeln!(out, "  annulus [{}, {}]", rational_text(&an.r), rational_text(&an.r_outer))?;
        }
        if let Some(t) = &gcd {
            writeln!(out, "  gcd test {}", t.verdict)?;
        }
        writeln!(
            out,
            "  real_range_ok={} modulus_bound_ok={} min_modulus_ok={}",
            checks.real_range_ok, checks.modulus_bound_ok, checks.min_modulus_ok
        )?;
    }
    if a.json {
        emit_json(out, "roots", json!({ "results": results }))?;
    }
    Ok(0)
}

fn cmd_rational(a: InputArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs = read_source(&a.source, a.format)?;
    let mut engine = ReliabilityEngine::default();
    let mut results = Vec::new();
    for g in &graphs {
        let rel = engine.reliability(g);
        let rs = root_set_of(g, &rel)?;
        let rr = rational_roots_of(g, &rel, Some(&rs))?;
        if a.json {
            results.push(json!({ "graph": label(g), "rational_roots": rr }));
        } else {
            let flag = if rr.flagged() { "\tunconfirmed numerical candidates present" } else { "" };
            if graphs.len() == 1 {
                writeln!(out, "{}{flag}", rational_set_text(&rr.roots))?;
            } else {
                writeln!(out, "{}\t{}{flag}", label(g), rational_set_text(&rr.roots))?;
            }
        }
    }
    if a.json {
        emit_json(out, "rational", json!({ "results": results }))?;
    }
    Ok(0)
}

fn cmd_family(a: FamilyArgs, out: &mut dyn Write) -> Result<i32> {
    let g = a.spec.build()?;
    let closed = match closed_form(&a.spec) {
        Ok(p) => Some(p),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(p) = &closed {
        if *p != ReliabilityEngine::default().reliability(&g) {
            return Err(Error::Integrity(format!("closed form of {} disagrees with the engine", a.spec)));
        }
    }
    if a.json {
        emit_json(
            out,
            "family",
            json!({
                "spec": a.spec.to_string(),
                "graph": g,
                "encoding": label(&g),
                "closed_form": closed,
            }),
        )?;
    } else {
        writeln!(out, "{}\t{}\t{}", a.spec, label(&g), g.to_json())?;
        if let Some(p) = closed {
            writeln!(out, "closed form: {p}")?;
        }
    }
    Ok(0)
}

fn cmd_enumerate(a: EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    let (lines, provenance) = if let Some(count) = a.samples {
        let gs = sample_multigraphs(a.seed, count, SAMPLE_MAX_ORDER, SAMPLE_MAX_MULTIPLICITY)?;
        let lines: Vec<String> = gs.iter().map(Multigraph::to_sparse6).collect();
        let prov = Provenance::Sampled {
            seed: a.seed,
            count,
            max_order: SAMPLE_MAX_ORDER,
            max_multiplicity: SAMPLE_MAX_MULTIPLICITY,
        };
        (lines, prov)
    } else {
        let n = a.order.expect("clap requires --order");
        let s = enum_connected_simple(n)?.filter_class(a.class);
        let lines = s.iter().map(Multigraph::to_graph6).collect::<Result<Vec<_>>>()?;
        (lines, s.provenance)
    };
    if let Some(path) = &a.out {
        std::fs::write(path, lines.iter().map(|l| format!("{l}\n")).collect::<String>())?;
    }
    if a.json {
        let mut body = json!({ "provenance": provenance, "count": lines.len() });
        if a.out.is_none() {
            body["graphs"] = json!(lines);
        }
        emit_json(out, "enumerate", body)?;
    } else if a.out.is_none() {
        for l in &lines {
            writeln!(out, "{l}")?;
        }
    } else {
        writeln!(out, "{} graphs written", lines.len())?;
    }
    Ok(0)
}

fn universe_stream(u: &UniverseArgs) -> Result<GraphStream> {
    let stream = if let Some(p) = &u.input {
        read_graph_file(p, u.format)?
    } else if let Some(count) = u.samples {
        let gs = sample_multigraphs(u.seed, count, SAMPLE_MAX_ORDER, SAMPLE_MAX_MULTIPLICITY)?;
        // Isomorphic repeats among the samples are surveyed once.
        GraphStream::new(
            Provenance::Sampled { seed: u.seed, count, max_order: SAMPLE_MAX_ORDER, max_multiplicity: SAMPLE_MAX_MULTIPLICITY },
            gs,
        )
    } else {
        let n = u.order.expect("clap requires --order");
        if !(2..=crate::enumerate::MAX_GENERATED_ORDER).contains(&n) {
            return Err(Error::domain(format!(
                "census order {n} is outside 2..={}",
                crate::enumerate::MAX_GENERATED_ORDER
            )));
        }
        enum_connected_simple(n)?
    };
    if let Some(g) = stream.iter().find(|g| !g.is_connected()) {
        return Err(Error::domain(format!("census graphs must be connected: {}", label(g))));
    }
    Ok(stream.filter_class(u.class))
}

fn cmd_survey(a: SurveyArgs, out: &mut dyn Write) -> Result<i32> {
    let stream = universe_stream(&a.universe)?;
    let opts = SurveyOptions {
        timing: a.timing,
        seed: a.universe.samples.map(|_| a.universe.seed),
        ..Default::default()
    };
    let (records, report) = survey_stream(&stream, &opts)?;
    let (census, summary) = write_census(&a.out, &records, &report)?;
    let scatter = if a.scatter && !records.is_empty() { Some(emit_root_scatter(&records, &a.out)?) } else { None };
    if a.json {
        let mut body = serde_json::to_value(&report)?;
        body["files"] = json!({
            "census": census,
            "summary": summary,
            "scatter": scatter.as_ref().map(|(c, s)| json!([c, s])),
        });
        body["command"] = json!("survey");
        writeln!(out, "{}", serde_json::to_string_pretty(&body)?)?;
    } else {
        writeln!(out, "graphs: {}", report.graph_count)?;
        writeln!(out, "min modulus: {}", report.min_modulus.as_deref().unwrap_or("none"))?;
        for at in &report.min_modulus_attained_by {
            writeln!(out, "  attained by {}", at.graph)?;
        }
        let union: Vec<BigRational> = report.rational_union();
        writeln!(out, "rational roots: {}", rational_set_text(&union))?;
        writeln!(out, "violations: {}", report.violations.len())?;
        for v in &report.violations {
            writeln!(out, "  {v}")?;
        }
        writeln!(out, "wrote {} and {}", census.display(), summary.display())?;
        if let Some((c, s)) = scatter {
            writeln!(out, "wrote {} and {}", c.display(), s.display())?;
        }
    }
    Ok(0)
}

fn cmd_scatter(a: ScatterArgs, out: &mut dyn Write) -> Result<i32> {
    let records = if let Some(p) = &a.census {
        read_census(p)?
    } else {
        let n = a.order.expect("clap requires --order or --census");
        crate::survey::survey_generated(n, a.class, &SurveyOptions::default())?.0
    };
    let (csv, svg) = emit_root_scatter(&records, &a.out)?;
    if a.json {
        emit_json(out, "scatter", json!({ "csv": csv, "svg": svg, "graphs": records.len() }))?;
    } else {
        writeln!(out, "wrote {} and {}", csv.display(), svg.display())?;
    }
    Ok(0)
}

fn cmd_mc(a: McArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs = read_source(&a.source, a.format)?;
    let mut results = Vec::new();
    for g in &graphs {
        let mc = crate::survey::with_pool(None, || monte_carlo_check(g, &a.q, a.trials, a.seed))??;
        if a.json {
            results.push(json!({ "graph": label(g), "monte_carlo": mc }));
        } else {
            writeln!(
                out,
                "{}\testimate {:.6} +- {:.6}\texact {} = {:.6}\tz = {:.3}",
                label(g),
                mc.estimate,
                mc.stderr,
                mc.exact,
                mc.exact_value,
                mc.z
            )?;
        }
    }
    if a.json {
        emit_json(out, "mc", json!({ "results": results }))?;
    }
    Ok(0)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let expected = match &a.expect_rationals {
        Some(s) => {
            let mut v = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
            v.sort();
            v.dedup();
            Some(v)
        }
        None => None,
    };
    let stream = universe_stream(&a.universe)?;
    let (records, report) = survey_stream(&stream, &SurveyOptions::default())?;
    let mut checks: Vec<(String, bool, String)> = Vec::new();
    checks.push((
        "survey".into(),
        report.violations.is_empty(),
        format!("{} graphs, {} violations", report.graph_count, report.violations.len()),
    ));

    let mut oracle_failures = Vec::new();
    let mut oracle_count = 0;
    let mut engine = ReliabilityEngine::default();
    for g in stream.iter().filter(|g| g.size() <= ORACLE_MAX_EDGES) {
        oracle_count += 1;
        let rel = engine.reliability(g);
        let f = f_vector_bruteforce(g)?;
        let ok = f_form(&rel, g.size(), g.corank()).is_ok_and(|x| x == f)
            && h_vector_of(g, &rel).is_ok_and(|h| f_to_h(&f).is_ok_and(|x| x == h));
        if !ok {
            oracle_failures.push(label(g));
        }
    }
    checks.push((
        "oracle".into(),
        oracle_failures.is_empty(),
        format!("{oracle_count} graphs with at most {ORACLE_MAX_EDGES} edges"),
    ));

    if stream.iter().all(Multigraph::is_simple) {
        let m1 = check_minus_one_graphs(a.universe.order.unwrap_or(0), stream.graphs(), None)?;
        checks.push(("minus_one".into(), m1.violations.is_empty(), format!("{} graphs tested", m1.graphs_tested)));
    }

    let union = report.rational_union();
    if let Some(exp) = &expected {
        checks.push((
            "rationals".into(),
            &union == exp,
            format!("found {}, expected {}", rational_set_text(&union), rational_set_text(exp)),
        ));
    }
    let ok = checks.iter().all(|c| c.1);
    if a.json {
        let list: Vec<_> = checks.iter().map(|(n, ok, d)| json!({ "check": n, "ok": ok, "detail": d })).collect();
        emit_json(
            out,
            "verify",
            json!({
                "ok": ok,
                "checks": list,
                "violations": report.violations,
                "oracle_failures": oracle_failures,
                "records": records.len(),
            }),
        )?;
    } else {
        for (name, pass, detail) in &checks {
            writeln!(out, "{} {name}: {detail}", if *pass { "PASS" } else { "FAIL" })?;
        }
        for v in report.violations.iter().chain(&oracle_failures) {
            writeln!(out, "  {v}")?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("relroots").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn poly_cycle() {
        let (code, out, _) = run_str(&["poly", "--family", "cycle:5"]);
        assert_eq!(code, 0);
        assert!(out.contains("[1, 0, -10, 20, -15, 4]"), "{out}");
    }

    #[test]
    fn rational_pendant_cycle() {
        let (code, out, _) = run_str(&["rational", "--family", "pendantcycle:3,7"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "{1, -1/3}");
    }

    #[test]
    fn bad_flags_exit_one() {
        let (code, _, err) = run_str(&["poly", "--family", "cycle:5", "--bogus"]);
        assert_eq!(code, 1);
        assert_eq!(err.lines().count(), 1);
        let (code, _, err) = run_str(&["poly", "--family", "cycle:0"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        let (code, _, _) = run_str(&["poly"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn json_modes_are_versioned() {
        for args in [
            &["poly", "--family", "cycle:4", "--json"][..],
            &["hvector", "--edges", r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#, "--json"],
            &["roots", "--graph6", "C~", "--json"],
            &["rational", "--family", "cycle:4", "--json"],
            &["family", "theta:1,2,2", "--json"],
            &["enumerate", "--order", "4", "--json"],
            &["mc", "--family", "cycle:4", "--q", "1/2", "--trials", "2000", "--json"],
        ] {
            let (code, out, err) = run_str(args);
            assert_eq!(code, 0, "{args:?}: {err}");
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            assert_eq!(v["schema_version"], SCHEMA_VERSION, "{args:?}");
        }
    }

    #[test]
    fn integrity_errors_exit_two() {
        assert_eq!(exit_code(&Error::Integrity("x".into())), 2);
        assert_eq!(exit_code(&Error::domain("x")), 1);
    }

    #[test]
    fn verify_small_order() {
        let (code, out, _) = run_str(&["verify", "--order", "4", "--class", "2ec", "--expect-rationals", "1,-1/3"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_str(&["verify", "--order", "4", "--class", "2ec", "--expect-rationals", "1"]);
        assert_eq!(code, 1, "{out}");
    }
}
