//! Spanning-tree counts via the matrix-tree theorem (fraction-free Bareiss).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::multigraph::Multigraph;

/// Number of spanning trees, counting parallel edges separately; loops ignored.
pub fn spanning_tree_count(g: &Multigraph) -> BigInt {
    let n = g.order();
    if n <= 1 {
        return BigInt::from(u8::from(n == 1));
    }
    let size = n - 1;
    let mut lap = vec![vec![BigInt::zero(); size]; size];
    for &(u, v) in g.edges() {
        if u == v {
            continue;
        }
        for (a, b) in [(u, v), (v, u)] {
            if a < size {
                lap[a][a] += 1;
                if b < size {
                    lap[a][b] -= 1;
                }
            }
        }
    }
    bareiss_det(lap)
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * prev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::FamilySpec;

    #[test]
    fn known_counts() {
        let kn = |n: usize| {
            Multigraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
        };
        for n in 1..8 {
            // Cayley: n^(n-2)
            let expect = if n == 1 { BigInt::one() } else { BigInt::from(n).pow(n as u32 - 2) };
            assert_eq!(spanning_tree_count(&kn(n)), expect, "K_{n}");
        }
        assert_eq!(spanning_tree_count(&FamilySpec::Cycle { n: 7 }.build().unwrap()), BigInt::from(7));
        assert_eq!(spanning_tree_count(&FamilySpec::Bundle { m: 5 }.build().unwrap()), BigInt::from(5));
        assert_eq!(spanning_tree_count(&FamilySpec::Theta { l1: 1, l2: 2, l3: 2 }.build().unwrap()), BigInt::from(8));
        assert_eq!(spanning_tree_count(&Multigraph::new(3, [(0, 1)]).unwrap()), BigInt::zero());
        let looped = Multigraph::new(2, [(0, 1), (0, 0), (1, 1)]).unwrap();
        assert_eq!(spanning_tree_count(&looped), BigInt::one());
    }
}
