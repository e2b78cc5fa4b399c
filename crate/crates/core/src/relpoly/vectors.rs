//! F-form and H-form coefficient vectors.
//!
//! `Rel(G) = sum F_i q^i (1-q)^(m-i) = (1-q)^(n-1) sum H_i q^i`, both sums over
//! `i = 0..=d` with `d = m - n + 1`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Poly;
use crate::error::{Error, Result};
use crate::multigraph::{Dsu, Multigraph};

/// Largest size accepted by the exhaustive F-vector oracle.
pub const BRUTE_FORCE_MAX_EDGES: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<BigInt>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<BigInt>);

impl FVector {
    pub fn from_i64(v: &[i64]) -> Self {
        FVector(v.iter().map(|&x| x.into()).collect())
    }

    /// `d`, one less than the length.
    pub fn dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl HVector {
    pub fn from_i64(v: &[i64]) -> Self {
        HVector(v.iter().map(|&x| x.into()).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// The h-polynomial `sum H_i q^i`.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.0.clone())
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::from(1);
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Count, for each `i`, the `i`-edge subsets whose deletion leaves `g` connected.
///
/// Exhaustive over all `2^m` subsets; refuses graphs with more than
/// [`BRUTE_FORCE_MAX_EDGES`] edges.
pub fn f_vector_bruteforce(g: &Multigraph) -> Result<FVector> {
    let m = g.size();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::domain(format!(
            "f_vector_bruteforce is limited to m <= {BRUTE_FORCE_MAX_EDGES} edges (got m = {m})"
        )));
    }
    if !g.is_connected() {
        return Err(Error::domain("f_vector_bruteforce requires a connected graph"));
    }
    let n = g.order();
    let d = m + 1 - n;
    let edges = g.edges();
    let mut counts = vec![0u64; d + 1];
    for deleted in 0u32..(1u32 << m) {
        let k = deleted.count_ones() as usize;
        if k > d {
            continue;
        }
        let mut dsu = Dsu::new(n);
        let mut comps = n;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if deleted >> i & 1 == 0 && dsu.union(u, v) {
                comps -= 1;
                if comps == 1 {
                    break;
                }
            }
        }
        if comps == 1 {
            counts[k] += 1;
        }
    }
    Ok(FVector(counts.into_iter().map(BigInt::from).collect()))
}

/// `H_j = sum_{i<=j} (-1)^(j-i) C(d-i, j-i) F_i`.
///
/// A negative entry means the input was not the F-vector of a graph.
pub fn f_to_h(f: &FVector) -> Result<HVector> {
    let d = f.dim();
    let mut h = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut acc = BigInt::zero();
        for (i, fi) in f.0.iter().enumerate().take(j + 1) {
            let term = binomial(d - i, j - i) * fi;
            if (j - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc.is_negative() {
            return Err(Error::Integrity(format!("f_to_h produced H_{j} = {acc} < 0; not a valid F-vector")));
        }
        h.push(acc);
    }
    Ok(HVector(h))
}

/// `F_i = sum_{j<=i} C(d-j, i-j) H_j`.
pub fn h_to_f(h: &HVector) -> FVector {
    let d = h.dim();
    FVector(
        (0..=d)
            .map(|i| (0..=i).map(|j| binomial(d - j, i - j) * &h.0[j]).sum())
            .collect(),
    )
}

/// Re-expand a reliability polynomial in the F-form basis.
///
/// Solves the triangular system on the low coefficients and then checks that
/// the expansion reproduces every coefficient of `rel`.
pub fn f_form(rel: &Poly, m: usize, d: usize) -> Result<FVector> {
    let mut f: Vec<BigInt> = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut acc = rel.coeff(j);
        for (i, fi) in f.iter().enumerate() {
            let term = binomial(m - i, j - i) * fi;
            if (j - i) % 2 == 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        f.push(acc);
    }
    let mut back = Poly::zero();
    for (i, fi) in f.iter().enumerate() {
        back = &back + &(&Poly::monomial(fi.clone(), i) * &Poly::one_minus_q_pow(m - i));
    }
    if &back != rel {
        return Err(Error::Integrity("polynomial has no F-form expansion of the stated dimension".into()));
    }
    Ok(FVector(f))
}
