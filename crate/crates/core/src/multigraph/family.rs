use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeShape {
    Path,
    Star,
}

/// Named graph families, written on the command line as `name:params`
/// (e.g. `cycle:5`, `theta:1,2,2`, `pendantcycle:3,7`, `tree:6,star`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    Tree { n: usize, shape: TreeShape },
    Cycle { n: usize },
    /// Two vertices joined by `m` parallel edges.
    Bundle { m: usize },
    /// Two branch vertices joined by internally disjoint paths of the given lengths.
    Theta { l1: usize, l2: usize, l3: usize },
    /// A cycle of length `a` and one of length `b` sharing vertex 0.
    TwoCyclesAtVertex { a: usize, b: usize },
    /// The cycle `C_{k+1}` with `n - k - 1` pendant vertices hung on vertex 0.
    PendantCycle { k: usize, n: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::domain(msg));
        match *self {
            FamilySpec::Tree { n, .. } if n == 0 => bad("tree needs n >= 1".into()),
            FamilySpec::Cycle { n } if n < 2 => bad(format!("cycle needs n >= 2, got {n}")),
            FamilySpec::Bundle { m } if m == 0 => bad("bundle needs m >= 1".into()),
            FamilySpec::Theta { l1, l2, l3 } if l1 == 0 || l2 == 0 || l3 == 0 => {
                bad(format!("theta path lengths must be >= 1, got ({l1},{l2},{l3})"))
            }
            FamilySpec::TwoCyclesAtVertex { a, b } if a < 2 || b < 2 => {
                bad(format!("twocycles needs both lengths >= 2, got ({a},{b})"))
            }
            FamilySpec::PendantCycle { k, n } if k == 0 || n < k + 1 => {
                bad(format!("pendantcycle needs k >= 1 and n >= k+1, got ({k},{n})"))
            }
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Multigraph> {
        self.validate()?;
        let (n, edges): (usize, Vec<(usize, usize)>) = match *self {
            FamilySpec::Tree { n, shape: TreeShape::Path } => (n, (1..n).map(|v| (v - 1, v)).collect()),
            FamilySpec::Tree { n, shape: TreeShape::Star } => (n, (1..n).map(|v| (0, v)).collect()),
            FamilySpec::Cycle { n } => (n, cycle_edges(0, &(1..n).collect::<Vec<_>>())),
            FamilySpec::Bundle { m } => (2, vec![(0, 1); m]),
            FamilySpec::Theta { l1, l2, l3 } => {
                // branch vertices 0 and 1; interior vertices allocated from 2
                let mut next = 2;
                let mut edges = Vec::new();
                for len in [l1, l2, l3] {
                    let mut prev = 0;
                    for _ in 1..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    edges.push((prev, 1));
                }
                (next, edges)
            }
            FamilySpec::TwoCyclesAtVertex { a, b } => {
                let first: Vec<usize> = (1..a).collect();
                let second: Vec<usize> = (a..a + b - 1).collect();
                let mut edges = cycle_edges(0, &first);
                edges.extend(cycle_edges(0, &second));
                (a + b - 1, edges)
            }
            FamilySpec::PendantCycle { k, n } => {
                let mut edges = cycle_edges(0, &(1..=k).collect::<Vec<_>>());
                edges.extend((k + 1..n).map(|v| (0, v)));
                (n, edges)
            }
        };
        Multigraph::new(n, edges)
    }
}

/// Cycle through `hub` and then `rest` in order; a single `rest` vertex gives a digon.
fn cycle_edges(hub: usize, rest: &[usize]) -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(rest.len() + 1);
    let mut prev = hub;
    for &v in rest {
        edges.push((prev, v));
        prev = v;
    }
    edges.push((prev, hub));
    edges
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let parts: Vec<&str> = params.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        let int = |i: usize| -> Result<usize> {
            let p = parts
                .get(i)
                .ok_or_else(|| Error::domain(format!("family `{s}`: missing parameter {}", i + 1)))?;
            p.parse()
                .map_err(|_| Error::domain(format!("family `{s}`: `{p}` is not a nonnegative integer")))
        };
        let arity = |k: usize| -> Result<()> {
            if parts.len() == k {
                Ok(())
            } else {
                Err(Error::domain(format!("family `{s}`: expected {k} parameter(s), got {}", parts.len())))
            }
        };
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "tree" | "path" | "star" => {
                let default = if name.eq_ignore_ascii_case("star") { TreeShape::Star } else { TreeShape::Path };
                let shape = match parts.get(1).copied() {
                    None => default,
                    Some("path") => TreeShape::Path,
                    Some("star") => TreeShape::Star,
                    Some(other) => return Err(Error::domain(format!("unknown tree shape `{other}`"))),
                };
                if parts.len() > 2 || parts.is_empty() {
                    return Err(Error::domain(format!("family `{s}`: expected tree:n[,path|star]")));
                }
                FamilySpec::Tree { n: int(0)?, shape }
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle { n: int(0)? }
            }
            "bundle" => {
                arity(1)?;
                FamilySpec::Bundle { m: int(0)? }
            }
            "theta" => {
                arity(3)?;
                FamilySpec::Theta { l1: int(0)?, l2: int(1)?, l3: int(2)? }
            }
            "twocycles" | "twocyclesatvertex" => {
                arity(2)?;
                FamilySpec::TwoCyclesAtVertex { a: int(0)?, b: int(1)? }
            }
            "pendantcycle" | "gkn" => {
                arity(2)?;
                FamilySpec::PendantCycle { k: int(0)?, n: int(1)? }
            }
            other => return Err(Error::domain(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Tree { n, shape } => {
                write!(f, "tree:{n},{}", if shape == TreeShape::Path { "path" } else { "star" })
            }
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Bundle { m } => write!(f, "bundle:{m}"),
            FamilySpec::Theta { l1, l2, l3 } => write!(f, "theta:{l1},{l2},{l3}"),
            FamilySpec::TwoCyclesAtVertex { a, b } => write!(f, "twocycles:{a},{b}"),
            FamilySpec::PendantCycle { k, n } => write!(f, "pendantcycle:{k},{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(spec: &str) -> (usize, usize, usize) {
        let g: FamilySpec = spec.parse().unwrap();
        let g = g.build().unwrap();
        assert!(g.is_connected(), "{spec}");
        (g.order(), g.size(), g.corank())
    }

    #[test]
    fn orders_sizes_coranks() {
        assert_eq!(shape("cycle:5"), (5, 5, 1));
        assert_eq!(shape("theta:1,2,2"), (4, 5, 2));
        assert_eq!(shape("theta:2,2,3"), (6, 7, 2));
        assert_eq!(shape("theta:1,1,1"), (2, 3, 2));
        assert_eq!(shape("twocycles:3,4"), (6, 7, 2));
        assert_eq!(shape("pendantcycle:3,6"), (6, 6, 1));
        assert_eq!(shape("pendantcycle:1,4"), (4, 4, 1));
        assert_eq!(shape("bundle:4"), (2, 4, 3));
        assert_eq!(shape("tree:6,star"), (6, 5, 0));
        assert_eq!(shape("tree:1"), (1, 0, 0));
    }

    #[test]
    fn pendant_cycle_has_c_k_plus_one() {
        let g = FamilySpec::PendantCycle { k: 3, n: 6 }.build().unwrap();
        let deg = g.degrees();
        assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(g.bridges().unwrap().len(), 2);
    }

    #[test]
    fn invalid_parameters_are_domain_errors() {
        for bad in ["theta:0,1,2", "cycle:1", "bundle:0", "pendantcycle:3,3", "twocycles:1,3", "cycle", "cycle:x", "wheel:5", "cycle:3,4"] {
            assert!(matches!(bad.parse::<FamilySpec>(), Err(Error::Domain(_))), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["tree:6,path", "tree:4,star", "cycle:5", "bundle:3", "theta:1,2,2", "twocycles:3,3", "pendantcycle:3,7"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }
}
