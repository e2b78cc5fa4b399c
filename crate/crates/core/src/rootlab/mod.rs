//! Roots of reliability polynomials: numerical roots with residual bounds,
//! exact rational roots, the Eneström–Kakeya annulus, the gcd criterion for
//! roots on the inner circle, and log-concavity.

mod solver;

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::relpoly::{h_vector_of, reliability_poly, HVector, Poly};

/// Significant digits of root coordinates in text output.
pub const ROOT_DIGITS: usize = 20;
/// Distance within which a numerical root must be exactly confirmed as `-1/k`.
pub const RATIONAL_PROXIMITY: f64 = 1e-8;
pub const REAL_IM_TOL: f64 = 1e-10;
pub const LOCATION_TOL: f64 = 1e-9;

/// One root of `H`, stored at 256-bit precision.
#[derive(Clone, Debug, PartialEq)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    pub multiplicity: usize,
    /// Upper bound on `|H|` at the stored high-precision point.
    pub residual: f64,
    pub re_text: String,
    pub im_text: String,
    fixed: solver::FixedRoot,
}

impl Root {
    fn from_fixed(h: &[BigInt], fixed: solver::FixedRoot) -> Root {
        let z = fixed.to_complex();
        Root {
            re: z.re,
            im: z.im,
            multiplicity: fixed.multiplicity,
            residual: solver::residual_bound(h, &fixed),
            re_text: solver::fixed_to_scientific(&fixed.re, ROOT_DIGITS),
            im_text: solver::fixed_to_scientific(&fixed.im, ROOT_DIGITS),
            fixed,
        }
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Modulus with `ROOT_DIGITS` significant digits, from the high-precision point.
    pub fn modulus_text(&self) -> String {
        let norm2 = &self.fixed.re * &self.fixed.re + &self.fixed.im * &self.fixed.im;
        solver::fixed_to_scientific(&norm2.sqrt(), ROOT_DIGITS)
    }

    /// True when the solver placed the root exactly on the real axis.
    pub fn is_real(&self) -> bool {
        self.fixed.im.is_zero()
    }

    /// The stored high-precision point as exact rationals `(re, im)`.
    pub fn exact_point(&self) -> (BigRational, BigRational) {
        let den = BigInt::one() << solver::PREC;
        (
            BigRational::new(self.fixed.re.clone(), den.clone()),
            BigRational::new(self.fixed.im.clone(), den),
        )
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            re: &'a str,
            im: &'a str,
            multiplicity: usize,
            residual: String,
        }
        Out {
            re: &self.re_text,
            im: &self.im_text,
            multiplicity: self.multiplicity,
            residual: decimal_text(self.residual),
        }
        .serialize(s)
    }
}

/// Roots of the reliability polynomial: those of `H` plus `1` with multiplicity `n - 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSet {
    #[serde(rename = "complex_roots")]
    pub roots: Vec<Root>,
    pub trivial_root_one_multiplicity: usize,
    #[serde(serialize_with = "ser_rationals")]
    pub rational_roots: Vec<BigRational>,
}

impl RootSet {
    /// Number of roots of `H` counted with multiplicity.
    pub fn degree(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn min_modulus(&self) -> Option<f64> {
        self.roots.iter().map(Root::modulus).min_by(f64::total_cmp)
    }

    pub fn max_modulus(&self) -> Option<f64> {
        self.roots.iter().map(Root::modulus).max_by(f64::total_cmp)
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }
}

/// Scientific notation with `ROOT_DIGITS` significant digits.
pub fn decimal_text(x: f64) -> String {
    format!("{:.*e}", ROOT_DIGITS - 1, x)
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `"p/q"` text for an exact rational, denominator always written.
pub fn rational_text(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::domain(format!("not a rational number: {s:?}"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().map_err(|_| bad())?, q.trim().parse::<BigInt>().map_err(|_| bad())?),
        None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

fn ser_rationals<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational_text))
}

fn ser_rational<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_text(v))
}

/// All complex roots of `h`, each polished to 256 bits with an exact residual bound.
///
/// A negative leading coefficient is normalized away. Roots at `q = 0` are
/// reported with their multiplicity.
pub fn roots(h: &Poly) -> Result<RootSet> {
    if h.is_zero() {
        return Err(Error::domain("the zero polynomial has no finite root set"));
    }
    let mut coeffs: Vec<BigInt> = h.coeffs().to_vec();
    if coeffs.last().unwrap().is_negative() {
        coeffs.iter_mut().for_each(|c| *c = -c.clone());
    }
    let zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    let stripped = &coeffs[zeros..];
    let mut fixed = solver::solve(stripped)?;
    if zeros > 0 {
        fixed.push(solver::FixedRoot { re: BigInt::zero(), im: BigInt::zero(), multiplicity: zeros });
        fixed.sort_by(|a, b| a.re.cmp(&b.re).then_with(|| b.im.cmp(&a.im)));
    }
    let roots = fixed.into_iter().map(|f| Root::from_fixed(&coeffs, f)).collect();
    Ok(RootSet { roots, trivial_root_one_multiplicity: 0, rational_roots: Vec::new() })
}

/// Root set of `Rel(G)` for a connected graph.
pub fn root_set(g: &Multigraph) -> Result<RootSet> {
    root_set_of(g, &reliability_poly(g))
}

/// As [`root_set`], reusing an already computed reliability polynomial.
pub fn root_set_of(g: &Multigraph, rel: &Poly) -> Result<RootSet> {
    let h = h_vector_of(g, rel)?;
    let mut rs = roots(&h.to_poly())?;
    rs.trivial_root_one_multiplicity = g.order() - 1;
    if g.order() >= 2 {
        rs.rational_roots = rational_roots_of(g, rel, Some(&rs))?.roots;
    }
    Ok(rs)
}

/// Eneström–Kakeya annulus `r <= |z| <= R` of a positive-coefficient polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annulus {
    #[serde(serialize_with = "ser_rational")]
    pub r: BigRational,
    #[serde(rename = "R", serialize_with = "ser_rational")]
    pub r_outer: BigRational,
}

fn positive_ratios(h: &Poly) -> Result<Vec<BigRational>> {
    let c = h.coeffs();
    if c.len() < 2 {
        return Err(Error::domain("the polynomial must have degree at least 1"));
    }
    if let Some(i) = c.iter().position(|a| !a.is_positive()) {
        return Err(Error::domain(format!("coefficient {i} is not strictly positive")));
    }
    Ok(c.windows(2).map(|w| BigRational::new(w[0].clone(), w[1].clone())).collect())
}

pub fn ek_annulus(h: &Poly) -> Result<Annulus> {
    let ratios = positive_ratios(h)?;
    let r = ratios.iter().min().unwrap().clone();
    let r_outer = ratios.iter().max().unwrap().clone();
    Ok(Annulus { r, r_outer })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GcdVerdict {
    /// `gcd(S) = 1`: no root lies on `|z| = r`.
    Excluded,
    /// `gcd(S) > 1`: the test does not rule out a root on `|z| = r`.
    NotExcluded,
    /// `S` is empty.
    Inconclusive,
}

impl fmt::Display for GcdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GcdVerdict::Excluded => "excluded",
            GcdVerdict::NotExcluded => "not_excluded",
            GcdVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcdTest {
    /// Indices `i` in `1..=deg` with `a_{i-1}/a_i > r`.
    pub s: Vec<usize>,
    /// `gcd(S)`, absent when `S` is empty.
    pub gcd: Option<usize>,
    pub verdict: GcdVerdict,
    pub inner_root_excluded: bool,
}

pub fn inner_circle_gcd_test(h: &Poly) -> Result<GcdTest> {
    let ratios = positive_ratios(h)?;
    let r = ratios.iter().min().unwrap();
    let s: Vec<usize> = ratios.iter().enumerate().filter(|(_, q)| *q > r).map(|(j, _)| j + 1).collect();
    let gcd = s.iter().copied().reduce(|a, b| a.gcd(&b));
    let verdict = match gcd {
        None => GcdVerdict::Inconclusive,
        Some(1) => GcdVerdict::Excluded,
        Some(_) => GcdVerdict::NotExcluded,
    };
    Ok(GcdTest { s, gcd, inner_root_excluded: verdict == GcdVerdict::Excluded, verdict })
}

/// `H_{i-1} H_{i+1} <= H_i^2` for every interior index.
pub fn is_log_concave(h: &HVector) -> bool {
    h.0.windows(3).all(|w| &w[0] * &w[2] <= &w[1] * &w[1])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalRoots {
    /// Exactly confirmed rational roots, ascending.
    #[serde(serialize_with = "ser_rationals")]
    pub roots: Vec<BigRational>,
    /// Candidates `-1/k` with a numerical root within `1e-8` that exact
    /// evaluation does not confirm.
    #[serde(serialize_with = "ser_rationals")]
    pub unconfirmed: Vec<BigRational>,
}

impl RationalRoots {
    pub fn flagged(&self) -> bool {
        !self.unconfirmed.is_empty()
    }
}

/// Exact rational roots of `Rel(G)` among `1` and `-1/k`, `1 <= k <= n-1`.
pub fn rational_roots(g: &Multigraph) -> Result<RationalRoots> {
    let rel = reliability_poly(g);
    let rs = if g.is_connected() { Some(roots(&h_vector_of(g, &rel)?.to_poly())?) } else { None };
    rational_roots_of(g, &rel, rs.as_ref())
}

/// As [`rational_roots`], with a precomputed polynomial and optional numerical roots of `H`.
pub fn rational_roots_of(g: &Multigraph, rel: &Poly, numeric: Option<&RootSet>) -> Result<RationalRoots> {
    let n = g.order();
    if n < 2 {
        return Err(Error::domain("rational roots need a graph of order at least 2"));
    }
    if !g.is_connected() {
        return Err(Error::domain("rational roots need a connected graph"));
    }
    let mut found = Vec::new();
    let mut unconfirmed = Vec::new();
    for k in (1..n).rev() {
        let cand = BigRational::new(-BigInt::one(), BigInt::from(k));
        if rel.eval_exact(&cand).is_zero() {
            found.push(cand);
        } else if let Some(rs) = numeric {
            let target = -1.0 / k as f64;
            if rs.roots.iter().any(|z| z.im.abs() <= RATIONAL_PROXIMITY && (z.re - target).abs() <= RATIONAL_PROXIMITY) {
                unconfirmed.push(cand);
            }
        }
    }
    let one = BigRational::one();
    if g.size() >= 1 && rel.eval_exact(&one).is_zero() {
        found.push(one);
    }
    Ok(RationalRoots { roots: found, unconfirmed })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocationChecks {
    pub real_range_ok: bool,
    pub modulus_bound_ok: bool,
    pub min_modulus_ok: bool,
}

impl LocationChecks {
    pub fn all(&self) -> bool {
        self.real_range_ok && self.modulus_bound_ok && self.min_modulus_ok
    }
}

/// Real roots in `[-1, 0) ∪ {1}`, moduli in `[1/(n-1), n-1]`, with tolerance `1e-9`.
pub fn root_location_checks(g: &Multigraph, rs: &RootSet) -> LocationChecks {
    let n = g.order();
    if n < 2 {
        return LocationChecks { real_range_ok: true, modulus_bound_ok: true, min_modulus_ok: true };
    }
    let upper = (n - 1) as f64 + LOCATION_TOL;
    let lower = 1.0 / (n - 1) as f64 - LOCATION_TOL;
    let real_range_ok = rs
        .roots
        .iter()
        .filter(|z| z.im.abs() <= REAL_IM_TOL)
        .all(|z| (-1.0 - LOCATION_TOL..=-LOCATION_TOL).contains(&z.re) || z.re == 1.0);
    let modulus_bound_ok = rs.roots.iter().all(|z| z.modulus() <= upper);
    let min_modulus_ok = rs.roots.iter().all(|z| z.modulus() >= lower);
    LocationChecks { real_range_ok, modulus_bound_ok, min_modulus_ok }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::FamilySpec;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn fam(s: &str) -> Multigraph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn cycle_root() {
        let rs = roots(&p(&[1, 4])).unwrap();
        assert_eq!(rs.roots.len(), 1);
        assert_eq!(rs.roots[0].re, -0.25);
        assert_eq!(rs.roots[0].re_text, "-2.5000000000000000000e-1");
        assert_eq!(rs.roots[0].residual, 0.0);
        assert!(rs.roots[0].is_real());
    }

    #[test]
    fn bundle_roots_on_unit_circle() {
        let rs = roots(&p(&[1, 0, 0, 0, -1])).unwrap();
        assert_eq!(rs.degree(), 4);
        for z in &rs.roots {
            assert!((z.modulus() - 1.0).abs() < 1e-15);
            assert!(z.residual <= 1e-10);
        }
        assert_eq!(rs.roots.iter().filter(|z| z.is_real()).count(), 2);
    }

    #[test]
    fn k4_roots_in_annulus() {
        let h = p(&[1, 3, 6, 6]);
        let rs = roots(&h).unwrap();
        assert_eq!(rs.degree(), 3);
        for z in &rs.roots {
            assert!(z.modulus() >= 1.0 / 3.0 - 1e-9 && z.modulus() <= 1.0 + 1e-9);
            assert!(z.residual <= 1e-10);
        }
    }

    #[test]
    fn repeated_roots_keep_multiplicity() {
        // H of two triangles sharing a vertex is (1+2q)^2
        let rs = root_set(&fam("twocycles:3,3")).unwrap();
        assert_eq!(rs.roots.len(), 1);
        assert_eq!(rs.roots[0].multiplicity, 2);
        assert_eq!(rs.roots[0].re, -0.5);
        assert_eq!(rs.trivial_root_one_multiplicity, 4);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(roots(&Poly::zero()).is_err());
        assert!(roots(&Poly::one()).unwrap().roots.is_empty());
    }

    #[test]
    fn annulus_examples() {
        for n in 3..9 {
            let a = ek_annulus(&p(&[1, n - 1])).unwrap();
            assert_eq!((a.r.clone(), a.r_outer.clone()), (rat(1, n - 1), rat(1, n - 1)));
        }
        let a = ek_annulus(&p(&[1, 3, 6, 6])).unwrap();
        assert_eq!((a.r, a.r_outer), (rat(1, 3), rat(1, 1)));
        let a = ek_annulus(&p(&[1, 3, 4])).unwrap();
        assert_eq!((a.r, a.r_outer), (rat(1, 3), rat(3, 4)));
        assert!(ek_annulus(&p(&[1, 0, 2])).is_err());
        assert!(ek_annulus(&p(&[3])).is_err());
    }

    #[test]
    fn gcd_test_examples() {
        let t = inner_circle_gcd_test(&p(&[1, 5])).unwrap();
        assert!(t.s.is_empty() && t.gcd.is_none() && !t.inner_root_excluded);
        assert_eq!(t.verdict, GcdVerdict::Inconclusive);
        let t = inner_circle_gcd_test(&p(&[1, 3, 6, 6])).unwrap();
        assert_eq!((t.s.clone(), t.gcd, t.inner_root_excluded), (vec![2, 3], Some(1), true));
        let t = inner_circle_gcd_test(&p(&[1, 1, 2])).unwrap();
        assert_eq!((t.s.clone(), t.gcd, t.inner_root_excluded), (vec![1], Some(1), true));
        // ratios 1, 1/2, 1: S = {1, 3}... with r = 1/2 only index 2 attains it
        let t = inner_circle_gcd_test(&p(&[1, 1, 2, 2])).unwrap();
        assert_eq!((t.s, t.gcd), (vec![1, 3], Some(1)));
        let t = inner_circle_gcd_test(&p(&[1, 2, 2, 4, 4])).unwrap();
        assert_eq!((t.s, t.gcd, t.verdict), (vec![2, 4], Some(2), GcdVerdict::NotExcluded));
    }

    #[test]
    fn log_concavity() {
        assert!(is_log_concave(&HVector::from_i64(&[1, 3, 6, 6])));
        assert!(is_log_concave(&HVector::from_i64(&[1, 7])));
        assert!(!is_log_concave(&HVector::from_i64(&[1, 1, 2])));
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&fam("cycle:5")).unwrap().roots, vec![rat(-1, 4), rat(1, 1)]);
        assert_eq!(rational_roots(&fam("pendantcycle:3,6")).unwrap().roots, vec![rat(-1, 3), rat(1, 1)]);
        let k4 = Multigraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let rr = rational_roots(&k4).unwrap();
        assert_eq!(rr.roots, vec![rat(1, 1)]);
        assert!(!rr.flagged());
        assert!(rational_roots(&Multigraph::empty(1)).is_err());
        assert_eq!(rational_roots(&fam("bundle:6")).unwrap().roots, vec![rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn location_examples() {
        let c8 = fam("cycle:8");
        assert!(root_location_checks(&c8, &root_set(&c8).unwrap()).all());
        let b6 = fam("bundle:6");
        let rs = root_set(&b6).unwrap();
        assert!(root_location_checks(&b6, &rs).all());
        let real: Vec<f64> = rs.roots.iter().filter(|z| z.is_real()).map(|z| z.re).collect();
        assert_eq!(real, vec![-1.0]);
        let path = fam("tree:5,path");
        let rs = root_set(&path).unwrap();
        assert!(rs.roots.is_empty());
        assert_eq!(rs.trivial_root_one_multiplicity, 4);
        assert_eq!(rs.rational_roots, vec![rat(1, 1)]);
        assert!(root_location_checks(&path, &rs).all());
    }

    #[test]
    fn root_set_json() {
        let rs = root_set(&fam("cycle:5")).unwrap();
        let v = serde_json::to_value(&rs).unwrap();
        assert_eq!(v["complex_roots"][0]["re"], "-2.5000000000000000000e-1");
        assert_eq!(v["complex_roots"][0]["im"], "0.0000000000000000000e0");
        assert_eq!(v["rational_roots"], serde_json::json!(["-1/4", "1/1"]));
        assert_eq!(v["trivial_root_one_multiplicity"], 4);
        assert_eq!(v["complex_roots"][0]["residual"], "0.0000000000000000000e0");
        assert_eq!(rs.roots[0].modulus_text(), "2.5000000000000000000e-1");
        assert_eq!(parse_rational("-1/4").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert!(parse_rational("1/0").is_err());
    }
}
