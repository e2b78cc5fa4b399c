//! Monte Carlo estimate of all-terminal reliability.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multigraph::{Dsu, Multigraph};
use crate::relpoly::reliability_poly;
use crate::rootlab::{decimal_text, rational_text, rational_to_f64};

pub const MC_MIN_TRIALS: u64 = 1000;
/// Trials per independent random stream.
pub const MC_CHUNK: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarlo {
    pub trials: u64,
    pub seed: u64,
    pub q: String,
    pub connected: u64,
    #[serde(serialize_with = "ser_decimal")]
    pub estimate: f64,
    #[serde(serialize_with = "ser_decimal")]
    pub stderr: f64,
    pub exact: String,
    #[serde(serialize_with = "ser_decimal")]
    pub exact_value: f64,
    #[serde(serialize_with = "ser_decimal")]
    pub z: f64,
}

fn ser_decimal<S: serde::Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&decimal_text(*x))
}

/// Simulates independent edge failures with probability `q0` and compares the
/// connected fraction with the exact reliability.
///
/// Chunk `c` of `MC_CHUNK` trials draws from ChaCha8 stream `c` of `seed`, so the
/// result does not depend on how chunks are scheduled.
pub fn monte_carlo_check(g: &Multigraph, q0: &BigRational, trials: u64, seed: u64) -> Result<MonteCarlo> {
    if q0.is_negative() || *q0 > BigRational::one() {
        return Err(Error::domain(format!("failure probability {} is outside [0, 1]", rational_text(q0))));
    }
    if trials < MC_MIN_TRIALS {
        return Err(Error::domain(format!("at least {MC_MIN_TRIALS} trials are required, got {trials}")));
    }
    let q = rational_to_f64(q0);
    let q_zero = q0.is_zero();
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|(u, v)| u != v).collect();
    let chunks = trials.div_ceil(MC_CHUNK);
    let connected: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = MC_CHUNK.min(trials - c * MC_CHUNK);
            let mut ok = 0u64;
            for _ in 0..count {
                let mut dsu = Dsu::new(n);
                let mut parts = n;
                for &(u, v) in &edges {
                    let fails = !q_zero && rng.random::<f64>() < q;
                    if !fails && dsu.union(u, v) {
                        parts -= 1;
                    }
                }
                if parts <= 1 {
                    ok += 1;
                }
            }
            ok
        })
        .sum();

    let exact = reliability_poly(g).eval_exact(q0);
    let p = rational_to_f64(&exact);
    let estimate = connected as f64 / trials as f64;
    let stderr = (estimate * (1.0 - estimate) / trials as f64).sqrt();
    let sd = (p * (1.0 - p) / trials as f64).sqrt();
    let z = if sd > 0.0 {
        (estimate - p) / sd
    } else if estimate == p {
        0.0
    } else {
        f64::INFINITY
    };
    Ok(MonteCarlo {
        trials,
        seed,
        q: rational_text(q0),
        connected,
        estimate,
        stderr,
        exact: rational_text(&exact),
        exact_value: p,
        z,
    })
}
