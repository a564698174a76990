//! Turán graphs, their complements, and the closed-form bounds on the
//! number of maximum independent sets that they attain.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Part sizes of the Turán graph `T_p(n)`: `n mod p` parts of size
/// `ceil(n/p)` followed by the rest of size `floor(n/p)`. Sorted
/// nonincreasing by construction.
pub fn turan_part_sizes(n: usize, p: usize) -> Result<Vec<usize>> {
    if p == 0 || p > n {
        return Err(Error::InvalidParam(format!(
            "part count must satisfy 1 <= p <= n, got p={p}, n={n}"
        )));
    }
    let big = n / p + 1;
    let small = n / p;
    let r = n % p;
    Ok((0..p).map(|i| if i < r { big } else { small }).collect())
}

/// The Turán graph `T_p(n)`: complete p-partite with parts as equal as
/// possible. Parts occupy consecutive vertex ranges, larger parts first.
pub fn turan_graph(n: usize, p: usize) -> Result<Graph> {
    let sizes = turan_part_sizes(n, p)?;
    Ok(complete_multipartite(&sizes))
}

/// Complete multipartite graph whose parts occupy consecutive index
/// ranges in the given order.
pub(crate) fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("multipartite edges are valid")
}

/// Complement of `T_alpha(n)`: a disjoint union of `alpha` balanced
/// cliques. Its independence number is exactly `alpha`.
pub fn turan_complement(n: usize, alpha: usize) -> Result<Graph> {
    let sizes = turan_part_sizes(n, alpha)?;
    let mut edges = Vec::new();
    let mut base = 0;
    for &s in &sizes {
        for u in base..base + s {
            for v in u + 1..base + s {
                edges.push((u, v));
            }
        }
        base += s;
    }
    Ok(Graph::from_edges(n, &edges).expect("clique edges are valid"))
}

/// The ceiling/floor product `ceil(n/a)^(n mod a) * floor(n/a)^(a - n mod a)`,
/// the sharp upper bound on the number of maximum independent sets of any
/// graph of order `n` and independence number `a < n`. The value for
/// `a = n` is 1, outside that hypothesis.
pub fn general_bound(n: usize, alpha: usize) -> Result<BigUint> {
    if alpha == 0 || alpha > n {
        return Err(Error::InvalidParam(format!(
            "independence number must satisfy 1 <= alpha <= n, got alpha={alpha}, n={n}"
        )));
    }
    let r = (n % alpha) as u32;
    let ceil = BigUint::from(n / alpha + usize::from(r > 0));
    let floor = BigUint::from(n / alpha);
    Ok(ceil.pow(r) * floor.pow(alpha as u32 - r))
}

/// Maximum number of maximum independent sets over all graphs of order
/// `n >= 2`, split by `n mod 3`.
pub fn moon_moser_bound(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidParam(format!(
            "order must be at least 2, got {n}"
        )));
    }
    let three = BigUint::from(3u32);
    Ok(match n % 3 {
        0 => three.pow((n / 3) as u32),
        1 => BigUint::from(4u32) * three.pow(((n - 4) / 3) as u32),
        _ => BigUint::from(2u32) * three.pow(((n - 2) / 3) as u32),
    })
}

/// Balanced part sizes differ by at most one.
pub fn sizes_balanced(sizes: &[usize]) -> bool {
    match (sizes.iter().max(), sizes.iter().min()) {
        (Some(max), Some(min)) => max - min <= 1,
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_mis_exact;

    #[test]
    fn turan_small() {
        // balanced bipartite
        let t = turan_graph(4, 2).unwrap();
        assert_eq!(t.edge_count(), 4);
        assert_eq!(t.is_complete_multipartite(), Some(vec![2, 2]));

        // one part of 3, one of 2
        let t = turan_graph(5, 2).unwrap();
        assert_eq!(t.is_complete_multipartite(), Some(vec![3, 2]));

        // all singleton parts: complete graph
        let t = turan_graph(3, 3).unwrap();
        assert_eq!(t.edge_count(), 3);

        assert!(turan_graph(3, 0).is_err());
        assert!(turan_graph(3, 4).is_err());
    }

    #[test]
    fn complement_of_turan_is_disjoint_cliques() {
        let g = turan_complement(5, 2).unwrap();
        assert_eq!(g, turan_graph(5, 2).unwrap().complement());
        // K_3 plus K_2: 3 + 1 edges
        assert_eq!(g.edge_count(), 4);

        let g = turan_complement(3, 3).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn turan_complement_counts() {
        let g = turan_complement(7, 3).unwrap();
        let ac = count_mis_exact(&g).unwrap();
        assert_eq!(ac.alpha, 3);
        assert_eq!(ac.count, BigUint::from(12u32)); // 3 * 2 * 2
    }

    #[test]
    fn general_bound_values() {
        assert_eq!(general_bound(5, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(general_bound(6, 2).unwrap(), BigUint::from(9u32));
        assert_eq!(general_bound(6, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(general_bound(6, 6).unwrap(), BigUint::from(1u32));
        assert!(general_bound(5, 0).is_err());
        assert!(general_bound(5, 6).is_err());
    }

    #[test]
    fn moon_moser_values() {
        assert_eq!(moon_moser_bound(6).unwrap(), BigUint::from(9u32));
        assert_eq!(moon_moser_bound(7).unwrap(), BigUint::from(12u32));
        assert_eq!(moon_moser_bound(8).unwrap(), BigUint::from(18u32));
        assert!(moon_moser_bound(1).is_err());
    }

    #[test]
    fn general_bound_matches_brute_force() {
        for n in 2..=9usize {
            for alpha in 1..n {
                let g = turan_complement(n, alpha).unwrap();
                let ac = count_mis_exact(&g).unwrap();
                assert_eq!(ac.alpha, alpha, "alpha of complement T_{alpha}({n})");
                assert_eq!(ac.count, general_bound(n, alpha).unwrap());
            }
        }
    }
}
