//! Root scatter output: one CSV row per (graph, distinct root) and an SVG plot.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

use super::SurveyRecord;

const ONE_RE: &str = "1.0000000000000000000e0";
const ZERO_IM: &str = "0.0000000000000000000e0";
const SIZE: f64 = 720.0;
const HALF: f64 = SIZE / 2.0;
const RADIUS_PX: f64 = 330.0;

/// CSV with columns `re,im,n,key,multiplicity`. The root `1` appears once per
/// graph with multiplicity `n - 1`.
pub fn scatter_csv(records: &[SurveyRecord]) -> String {
    let mut out = String::from("re,im,n,key,multiplicity\n");
    for rec in records {
        for z in &rec.roots {
            let _ = writeln!(out, "{},{},{},{},{}", z.re, z.im, rec.order, rec.key, z.multiplicity);
        }
        if rec.root_one_multiplicity > 0 {
            let _ = writeln!(out, "{ONE_RE},{ZERO_IM},{},{},{}", rec.order, rec.key, rec.root_one_multiplicity);
        }
    }
    out
}

/// SVG scatter of all roots with the unit circle and the circle of radius
/// `1/(n-1)`. Points that coincide at plot resolution are drawn once.
pub fn scatter_svg(records: &[SurveyRecord]) -> String {
    let n = records.iter().map(|r| r.order).max().unwrap_or(2).max(2);
    let mut points: BTreeSet<(i64, i64)> = BTreeSet::new();
    let mut extent: f64 = 1.0;
    for rec in records {
        for z in &rec.roots {
            let (x, y) = (z.re_f64(), z.im_f64());
            extent = extent.max(x.abs()).max(y.abs());
        }
    }
    let extent = (extent * 4.0).ceil() / 4.0 + 0.25;
    let scale = RADIUS_PX / extent;
    let px = |x: f64| HALF + x * scale;
    let py = |y: f64| HALF - y * scale;
    for rec in records {
        for z in &rec.roots {
            // hundredths of a pixel
            points.insert(((px(z.re_f64()) * 100.0).round() as i64, (py(z.im_f64()) * 100.0).round() as i64));
        }
    }
    let one_mult: BTreeSet<usize> = records.iter().map(|r| r.root_one_multiplicity).filter(|&m| m > 0).collect();

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r##"<line x1="0" y1="{HALF}" x2="{SIZE}" y2="{HALF}" stroke="#999" stroke-width="0.5"/><line x1="{HALF}" y1="0" x2="{HALF}" y2="{SIZE}" stroke="#999" stroke-width="0.5"/>"##
    );
    let _ = writeln!(
        s,
        r##"<circle cx="{HALF}" cy="{HALF}" r="{:.2}" fill="none" stroke="#2060c0" stroke-width="0.8"><title>|q| = 1</title></circle>"##,
        scale
    );
    let _ = writeln!(
        s,
        r##"<circle cx="{HALF}" cy="{HALF}" r="{:.2}" fill="none" stroke="#c03020" stroke-width="0.8" stroke-dasharray="3 2"><title>|q| = 1/{}</title></circle>"##,
        scale / (n - 1) as f64,
        n - 1
    );
    let _ = writeln!(s, r#"<g fill="black" fill-opacity="0.6">"#);
    for (x, y) in &points {
        let _ = writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="1.5"/>"#, *x as f64 / 100.0, *y as f64 / 100.0);
    }
    let _ = writeln!(s, "</g>");
    if !one_mult.is_empty() {
        let mults: Vec<String> = one_mult.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            r##"<circle cx="{:.2}" cy="{HALF}" r="3" fill="#2060c0" data-multiplicity="{}"><title>q = 1, multiplicity {}</title></circle>"##,
            px(1.0),
            mults.join(","),
            mults.join(", ")
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="8" y="18" font-family="monospace" font-size="12">{} graphs, order {}, extent {:.2}</text>"#,
        records.len(),
        n,
        extent
    );
    s.push_str("</svg>\n");
    s
}

/// Writes `roots-<n>.csv` and `roots-<n>.svg` into `dir`; `n` is the largest order.
pub fn emit_root_scatter(records: &[SurveyRecord], dir: &Path) -> Result<(PathBuf, PathBuf)> {
    if records.is_empty() {
        return Err(Error::domain("no records to plot"));
    }
    let n = records.iter().map(|r| r.order).max().unwrap();
    std::fs::create_dir_all(dir)?;
    let csv = dir.join(format!("roots-{n}.csv"));
    let svg = dir.join(format!("roots-{n}.svg"));
    std::fs::write(&csv, scatter_csv(records))?;
    std::fs::write(&svg, scatter_svg(records))?;
    Ok((csv, svg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::FamilySpec;
    use crate::survey::{census, SurveyOptions};

    #[test]
    fn cycle_five_has_two_rows() {
        let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
        let records = census(&[c5], &SurveyOptions { threads: Some(1), ..Default::default() }).unwrap();
        let csv = scatter_csv(&records);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("-2.5000000000000000000e-1,0.0000000000000000000e0,5,"));
        assert!(lines[1].ends_with(",1"));
        assert!(lines[2].starts_with("1.0000000000000000000e0,0.0000000000000000000e0,5,"));
        assert!(lines[2].ends_with(",4"));
        let svg = scatter_svg(&records);
        assert!(svg.contains(r#"data-multiplicity="4""#));
        assert_eq!(svg, scatter_svg(&records));
    }

    #[test]
    fn empty_input_writes_nothing() {
        let dir = tempfile::tempdir().unwrap();
        assert!(emit_root_scatter(&[], dir.path()).is_err());
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
    }
}
