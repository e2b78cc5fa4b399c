//! Exact reliability polynomials and their F/H coefficient vectors.

mod engine;
mod poly;
mod spanning;
mod vectors;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::multigraph::{FamilySpec, Multigraph, TreeShape};

pub use engine::{ReliabilityEngine, DEFAULT_CACHE_ENTRIES};
pub use poly::Poly;
pub use spanning::spanning_tree_count;
pub use vectors::{f_form, f_to_h, f_vector_bruteforce, h_to_f, FVector, HVector, BRUTE_FORCE_MAX_EDGES};

/// Exact all-terminal reliability polynomial of `g` in the edge failure probability `q`.
pub fn reliability_poly(g: &Multigraph) -> Poly {
    ReliabilityEngine::default().reliability(g)
}

/// H-vector of a connected graph, by exact division of `rel` by `(1-q)^(n-1)`.
///
/// The result has `d + 1` entries (`d = m - n + 1`), zero-padded when loops
/// lower the degree.
pub fn h_vector_of(g: &Multigraph, rel: &Poly) -> Result<HVector> {
    if !g.is_connected() {
        return Err(Error::domain("h_vector requires a connected graph"));
    }
    let d = g.size() + 1 - g.order();
    let h = rel.div_one_minus_q_pow(g.order() - 1)?;
    if h.degree().is_some_and(|deg| deg > d) {
        return Err(Error::Integrity(format!(
            "h-polynomial has degree {} above the corank {d}",
            h.degree().unwrap()
        )));
    }
    Ok(HVector((0..=d).map(|i| h.coeff(i)).collect()))
}

pub fn h_vector(g: &Multigraph) -> Result<HVector> {
    h_vector_of(g, &reliability_poly(g))
}

/// Closed-form reliability for trees, cycles, bundles and pendant cycles.
pub fn closed_form(spec: &FamilySpec) -> Result<Poly> {
    spec.validate()?;
    let linear = |k: usize| Poly::new(vec![BigInt::from(1), BigInt::from(k)]);
    match *spec {
        FamilySpec::Tree { n, shape: TreeShape::Path | TreeShape::Star } => Ok(Poly::one_minus_q_pow(n - 1)),
        FamilySpec::Cycle { n } => Ok(linear(n - 1).times_one_minus_q_pow(n - 1)),
        FamilySpec::Bundle { m } => Ok(Poly::one_minus_q_to(m)),
        FamilySpec::PendantCycle { k, n } => Ok(linear(k).times_one_minus_q_pow(n - 1)),
        FamilySpec::Theta { .. } | FamilySpec::TwoCyclesAtVertex { .. } => Err(Error::Unsupported(format!(
            "no closed form for {spec}; compute it with reliability_poly"
        ))),
    }
}

/// Exact value of `p` at the rational point `q0`.
pub fn eval_exact(p: &Poly, q0: &BigRational) -> BigRational {
    p.eval_exact(q0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn fam(s: &str) -> Multigraph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn reliability_examples() {
        assert_eq!(reliability_poly(&fam("cycle:4")), Poly::from_i64(&[1, 3]).times_one_minus_q_pow(3));
        assert_eq!(reliability_poly(&fam("tree:3,path")), Poly::one_minus_q_pow(2));
        assert_eq!(reliability_poly(&fam("bundle:3")), Poly::from_i64(&[1, 0, 0, -1]));
        let split = Multigraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(reliability_poly(&split).is_zero());
        assert_eq!(reliability_poly(&Multigraph::empty(1)), Poly::one());
    }

    #[test]
    fn cycle_form_matches_sum_of_two_terms() {
        // (1-q)^n + n q (1-q)^(n-1)
        for n in 2..10 {
            let direct = &Poly::one_minus_q_pow(n) + &(&Poly::monomial(BigInt::from(n), 1) * &Poly::one_minus_q_pow(n - 1));
            assert_eq!(reliability_poly(&fam(&format!("cycle:{n}"))), direct, "C_{n}");
        }
    }

    #[test]
    fn h_vector_examples() {
        for n in 2..9 {
            assert_eq!(h_vector(&fam(&format!("cycle:{n}"))).unwrap(), HVector::from_i64(&[1, n as i64 - 1]));
        }
        assert_eq!(h_vector(&fam("theta:1,2,2")).unwrap(), HVector::from_i64(&[1, 3, 4]));
        assert_eq!(h_vector(&fam("pendantcycle:2,5")).unwrap(), HVector::from_i64(&[1, 2]));
        assert!(h_vector(&Multigraph::new(3, [(0, 1)]).unwrap()).is_err());
        let looped = Multigraph::new(2, [(0, 1), (1, 1)]).unwrap();
        assert_eq!(h_vector(&looped).unwrap(), HVector::from_i64(&[1, 0]));
    }

    #[test]
    fn h_vector_rejects_inconsistent_polynomial() {
        let c4 = fam("cycle:4");
        assert!(h_vector_of(&c4, &Poly::from_i64(&[1, 1])).unwrap_err().is_integrity());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form(&"tree:6,path".parse().unwrap()).unwrap(), Poly::one_minus_q_pow(5));
        assert_eq!(closed_form(&"bundle:4".parse().unwrap()).unwrap(), Poly::from_i64(&[1, 0, 0, 0, -1]));
        assert_eq!(
            closed_form(&"pendantcycle:3,7".parse().unwrap()).unwrap(),
            Poly::from_i64(&[1, 3]).times_one_minus_q_pow(6)
        );
        assert!(matches!(closed_form(&"theta:1,2,2".parse().unwrap()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn endpoint_values() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        for s in ["cycle:5", "theta:2,2,3", "bundle:3", "pendantcycle:2,6", "twocycles:3,4"] {
            let p = reliability_poly(&fam(s));
            assert!(eval_exact(&p, &r(1, 1)).is_zero(), "{s}");
            assert!(eval_exact(&p, &r(0, 1)).is_one(), "{s}");
        }
        assert!(eval_exact(&reliability_poly(&fam("cycle:4")), &r(-1, 3)).is_zero());
    }
}
