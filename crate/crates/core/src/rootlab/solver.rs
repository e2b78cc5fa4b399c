//! Complex roots of integer polynomials.
//!
//! The input is split exactly into squarefree factors. Each factor is solved by
//! Aberth iteration in `f64` and every root is then polished by Newton's
//! method in 256-bit fixed point. Residuals are evaluated exactly at the
//! polished point.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Fractional bits of the fixed-point polishing arithmetic.
pub(crate) const PREC: u64 = 256;
pub(crate) const ABERTH_MAX_ITER: usize = 200;
const NEWTON_MAX_ITER: usize = 60;

/// A root as `(re + i im) / 2^PREC` together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FixedRoot {
    pub re: BigInt,
    pub im: BigInt,
    pub multiplicity: usize,
}

impl FixedRoot {
    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(fixed_to_f64(&self.re), fixed_to_f64(&self.im))
    }
}

pub(crate) fn fixed_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN) * (-(PREC as f64)).exp2()
}

fn f64_to_fixed(x: f64) -> BigInt {
    if x == 0.0 || !x.is_finite() {
        return BigInt::zero();
    }
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let mut mant = (bits & ((1u64 << 52) - 1)) as i64;
    let e = if exp == 0 {
        -1074
    } else {
        mant |= 1 << 52;
        exp - 1075
    };
    let m = BigInt::from(if x < 0.0 { -mant } else { mant });
    let shift = e + PREC as i64;
    if shift >= 0 {
        m << shift as usize
    } else {
        m >> (-shift) as usize
    }
}

type QPoly = Vec<BigRational>;

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn q_deriv(p: &QPoly) -> QPoly {
    q_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn q_sub(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    q_trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

/// Quotient and remainder of `a / b` over the rationals.
fn q_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![BigRational::zero(); r.len() - db];
    let lead = b.last().unwrap();
    for k in (0..quot.len()).rev() {
        let c = &r[k + db] / lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        quot[k] = c;
    }
    r.truncate(db);
    (q_trim(quot), q_trim(r))
}

fn q_monic(p: QPoly) -> QPoly {
    let lead = p.last().unwrap().clone();
    p.into_iter().map(|c| c / &lead).collect()
}

fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let (_, r) = q_divrem(&a, &b);
        a = b;
        b = r;
    }
    q_monic(a)
}

fn q_exact_div(a: &QPoly, b: &QPoly) -> QPoly {
    let (q, r) = q_divrem(a, b);
    debug_assert!(r.is_empty());
    q
}

/// Primitive integer polynomial with positive leading coefficient.
fn q_to_primitive(p: &QPoly) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

/// Yun's squarefree decomposition: `(factor, multiplicity)` with every factor
/// primitive, squarefree, of positive degree and pairwise coprime.
pub(crate) fn squarefree_decomposition(coeffs: &[BigInt]) -> Vec<(Vec<BigInt>, usize)> {
    let f: QPoly = coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    if f.len() <= 1 {
        return Vec::new();
    }
    let df = q_deriv(&f);
    let a0 = q_gcd(&f, &df);
    if a0.len() == 1 {
        return vec![(q_to_primitive(&f), 1)];
    }
    let mut out = Vec::new();
    let mut b = q_exact_div(&f, &a0);
    let c = q_exact_div(&df, &a0);
    let mut d = q_sub(&c, &q_deriv(&b));
    let mut i = 1;
    while b.len() > 1 {
        let a = q_gcd(&b, &d);
        b = q_exact_div(&b, &a);
        let c = q_exact_div(&d, &a);
        d = q_sub(&c, &q_deriv(&b));
        if a.len() > 1 {
            out.push((q_to_primitive(&a), i));
        }
        i += 1;
    }
    out
}

fn horner_f64(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(*coeffs.last().unwrap(), 0.0);
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev().skip(1) {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Aberth–Ehrlich iteration. Returns the approximations and whether they converged.
pub(crate) fn aberth(coeffs: &[BigInt], rotation: f64) -> (Vec<Complex64>, bool) {
    let k = coeffs.len() - 1;
    let c: Vec<f64> = coeffs.iter().map(|x| x.to_f64().unwrap()).collect();
    let radius = (c[0].abs() / c[k].abs()).powf(1.0 / k as f64);
    let mut z: Vec<Complex64> = (0..k)
        .map(|j| {
            let theta = std::f64::consts::TAU * j as f64 / k as f64 + 0.4 + rotation;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    for _ in 0..ABERTH_MAX_ITER {
        let mut converged = true;
        for i in 0..k {
            let (p, dp) = horner_f64(&c, z[i]);
            if p.is_zero() {
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..k).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let mut w = ratio / (Complex64::one() - ratio * sum);
            if !w.is_finite() {
                w = Complex64::new(1e-3, 1e-3) * (1.0 + z[i].norm());
            }
            z[i] -= w;
            if w.norm() > 1e-15 * (1.0 + z[i].norm()) {
                converged = false;
            }
        }
        if converged {
            return (z, true);
        }
    }
    (z, false)
}

#[derive(Clone, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn mul(&self, o: &Fx) -> Fx {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> PREC,
            im: (&self.re * &o.im + &self.im * &o.re) >> PREC,
        }
    }

    fn add_int(&self, c: &BigInt) -> Fx {
        Fx { re: &self.re + (c << PREC), im: self.im.clone() }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

/// One Newton step `p(z)/p'(z)` in fixed point, or `None` if `p'(z) = 0`.
fn newton_step(coeffs: &[BigInt], z: &Fx) -> Option<Fx> {
    let mut p = Fx { re: coeffs.last().unwrap() << PREC, im: BigInt::zero() };
    let mut dp = Fx { re: BigInt::zero(), im: BigInt::zero() };
    for c in coeffs.iter().rev().skip(1) {
        dp = dp.mul(z).add(&p);
        p = p.mul(z).add_int(c);
    }
    let den = &dp.re * &dp.re + &dp.im * &dp.im;
    if den.is_zero() {
        return None;
    }
    let num_re = &p.re * &dp.re + &p.im * &dp.im;
    let num_im = &p.im * &dp.re - &p.re * &dp.im;
    Some(Fx { re: (num_re << PREC) / &den, im: (num_im << PREC) / &den })
}

fn polish(coeffs: &[BigInt], start: Complex64, real: bool) -> Option<Fx> {
    let mut z = Fx { re: f64_to_fixed(start.re), im: if real { BigInt::zero() } else { f64_to_fixed(start.im) } };
    let tiny = BigInt::one() << 24u32;
    for _ in 0..NEWTON_MAX_ITER {
        let step = newton_step(coeffs, &z)?;
        z = Fx { re: &z.re - &step.re, im: &z.im - &step.im };
        if step.re.abs() <= tiny && step.im.abs() <= tiny {
            return Some(z);
        }
    }
    None
}

/// Exact root of `a1 q + a0`.
fn linear_root(coeffs: &[BigInt]) -> Fx {
    let num: BigInt = -(&coeffs[0] << PREC);
    Fx { re: num.div_floor(&coeffs[1]), im: BigInt::zero() }
}

fn solve_squarefree(coeffs: &[BigInt], rotation: f64) -> std::result::Result<Vec<Fx>, Vec<Complex64>> {
    let k = coeffs.len() - 1;
    if k == 1 {
        return Ok(vec![linear_root(coeffs)]);
    }
    let (approx, _) = aberth(coeffs, rotation);
    let mut polished = Vec::with_capacity(k);
    for &z in &approx {
        match polish(coeffs, z, false) {
            Some(fx) => polished.push(fx),
            None => return Err(approx),
        }
    }
    // Near-real roots become real and are polished again on the real line.
    let real_cut = BigInt::one() << (PREC - 200);
    for fx in polished.iter_mut() {
        if fx.im.abs() < real_cut {
            match polish(coeffs, Complex64::new(fixed_to_f64(&fx.re), 0.0), true) {
                Some(r) => *fx = r,
                None => return Err(approx),
            }
        }
    }
    // Distinct approximations must have converged to distinct roots.
    let sep = BigInt::one() << (PREC - 100);
    for i in 0..k {
        for j in 0..i {
            if (&polished[i].re - &polished[j].re).abs() < sep && (&polished[i].im - &polished[j].im).abs() < sep {
                return Err(approx);
            }
        }
    }
    let reals: Vec<Fx> = polished.iter().filter(|z| z.im.is_zero()).cloned().collect();
    let upper: Vec<Fx> = polished.iter().filter(|z| z.im.is_positive()).cloned().collect();
    let lower = polished.iter().filter(|z| z.im.is_negative()).count();
    if upper.len() != lower {
        return Err(approx);
    }
    let mut out = reals;
    for z in upper {
        out.push(Fx { re: z.re.clone(), im: -z.im.clone() });
        out.push(z);
    }
    Ok(out)
}

/// All complex roots of a nonzero integer polynomial with `p(0) != 0`, with
/// multiplicities summing to its degree. Fails only if polishing does not
/// converge from two different starting configurations.
pub(crate) fn solve(coeffs: &[BigInt]) -> Result<Vec<FixedRoot>> {
    let mut out = Vec::new();
    for (factor, mult) in squarefree_decomposition(coeffs) {
        let roots = match solve_squarefree(&factor, 0.0) {
            Ok(r) => r,
            Err(_) => solve_squarefree(&factor, 0.31).map_err(|partial| Error::NonConvergence {
                iterations: ABERTH_MAX_ITER,
                partial,
            })?,
        };
        out.extend(roots.into_iter().map(|z| FixedRoot { re: z.re, im: z.im, multiplicity: mult }));
    }
    out.sort_by(|a, b| a.re.cmp(&b.re).then_with(|| b.im.cmp(&a.im)));
    Ok(out)
}

/// Upper bound on `|p(z)|` at the fixed-point root, by exact Gaussian-integer
/// Horner evaluation.
pub(crate) fn residual_bound(coeffs: &[BigInt], root: &FixedRoot) -> f64 {
    let d = coeffs.len() - 1;
    let mut re = coeffs[d].clone();
    let mut im = BigInt::zero();
    for j in (0..d).rev() {
        let nre = &re * &root.re - &im * &root.im + (&coeffs[j] << (PREC as usize * (d - j)));
        let nim = &re * &root.im + &im * &root.re;
        re = nre;
        im = nim;
    }
    let norm2 = &re * &re + &im * &im;
    if norm2.is_zero() {
        return 0.0;
    }
    let bits = norm2.bits();
    let top = if bits > 64 { (&norm2 >> (bits - 64) as usize).to_u64().unwrap() } else { norm2.to_u64().unwrap() };
    let shift = bits.saturating_sub(64) as f64;
    let log2 = (top as f64).log2() + shift - (2 * PREC as usize * d) as f64;
    let half = (log2 / 2.0).max(-1000.0);
    half.exp2() * (1.0 + 1e-9)
}

/// `x / 2^PREC` as a decimal in scientific notation with `digits` significant digits.
pub(crate) fn fixed_to_scientific(x: &BigInt, digits: usize) -> String {
    if x.is_zero() {
        return format!("0.{}e0", "0".repeat(digits - 1));
    }
    let sign = if x.is_negative() { "-" } else { "" };
    let mag = x.abs();
    let den = BigInt::one() << PREC;
    let est = fixed_to_f64(&mag).log10().floor() as i64;
    let lo = BigInt::from(10u32).pow(digits as u32 - 1);
    let hi = &lo * 10u32;
    let mut e = est;
    loop {
        let shift = digits as i64 - 1 - e;
        let (num, d) = if shift >= 0 {
            (&mag * BigInt::from(10u32).pow(shift as u32), den.clone())
        } else {
            (mag.clone(), &den * BigInt::from(10u32).pow((-shift) as u32))
        };
        let rounded = (num * 2u32 + &d) / (d * 2u32);
        if rounded >= hi {
            e += 1;
        } else if rounded < lo {
            e -= 1;
        } else {
            let s = rounded.to_string();
            return format!("{sign}{}.{}e{e}", &s[..1], &s[1..]);
        }
    }
}
