//! Generators for the extremal tree families and the structural checkers
//! that recognize them.
//!
//! Four families attain the sharp bounds: stars with some edges
//! subdivided once (general trees), the caterpillar `T(k)` obtained by
//! hanging one pendant off every vertex of a path (subcubic trees with
//! the smallest independence number), trees grown from `K_1` by
//! repeatedly attaching a path `P_3` at its middle vertex (largest
//! independence number, unique maximum independent set), and a mix of the
//! last two covering intermediate independence numbers.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Site-selection policy for [`gen_p3_tree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Policy {
    /// Attach each new middle vertex to the previous step's first pendant;
    /// keeps the tree subcubic for any number of steps.
    DeterministicChain,
    /// Attach to a uniformly random vertex of degree at most 2.
    SeededRandom(u64),
}

/// A tagged description of one extremal family instance, buildable into a
/// concrete graph. This is what the CLI's `gen` subcommand parses into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    SubdividedStar { n: usize, alpha: usize },
    Caterpillar { k: usize },
    P3Tree { steps: usize, policy: P3Policy },
    MixedExtremal { n: usize, alpha: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::SubdividedStar { n, alpha } => gen_subdivided_star(n, alpha),
            FamilySpec::Caterpillar { k } => gen_caterpillar(k),
            FamilySpec::P3Tree { steps, policy } => gen_p3_tree(steps, policy),
            FamilySpec::MixedExtremal { n, alpha } => gen_extremal_subcubic(n, alpha),
        }
    }
}

/// The star `K_{1,alpha}` with exactly `n - alpha - 1` of its edges
/// subdivided once: center 0, subdivided legs first (midpoint before
/// leaf), then the plain legs. Requires `n >= 2` and
/// `n/2 <= alpha <= n-1`.
pub fn gen_subdivided_star(n: usize, alpha: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParam(format!(
            "subdivided star needs order >= 2, got {n}"
        )));
    }
    if 2 * alpha < n || alpha > n - 1 {
        return Err(Error::InvalidParam(format!(
            "subdivided star of order {n} needs n/2 <= alpha <= n-1, got alpha={alpha}"
        )));
    }
    let subdivided = n - alpha - 1;
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for leg in 0..alpha {
        if leg < subdivided {
            let mid = next;
            let leaf = next + 1;
            next += 2;
            edges.push((0, mid));
            edges.push((mid, leaf));
        } else {
            edges.push((0, next));
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, &edges)
}

/// The caterpillar `T(k)`: a path on spine vertices `0..k` with pendant
/// `k+i` attached to spine vertex `i`. Order `2k`, independence number
/// `k`.
pub fn gen_caterpillar(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParam("spine length must be positive".into()));
    }
    let mut edges = Vec::with_capacity(2 * k - 1);
    for i in 1..k {
        edges.push((i - 1, i));
    }
    for i in 0..k {
        edges.push((i, k + i));
    }
    Graph::from_edges(2 * k, &edges)
}

/// Grows a tree from `K_1` by `steps` attachments of a path `x-y-z` glued
/// at `y` to an existing vertex `u` of degree at most 2. Order
/// `3*steps + 1`, independence number `2*steps + 1`, and a unique maximum
/// independent set.
pub fn gen_p3_tree(steps: usize, policy: P3Policy) -> Result<Graph> {
    let n = 3 * steps + 1;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut degree = vec![0usize; n];
    let mut rng = match policy {
        P3Policy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        P3Policy::DeterministicChain => None,
    };
    let mut chain_site = 0usize;
    for step in 0..steps {
        let built = 3 * step + 1;
        let site = match rng.as_mut() {
            None => chain_site,
            Some(rng) => {
                let open: Vec<usize> = (0..built).filter(|&v| degree[v] <= 2).collect();
                if open.is_empty() {
                    // pendants from the previous step always qualify
                    return Err(Error::Defect("no legal attachment site".into()));
                }
                open[rng.gen_range(0..open.len())]
            }
        };
        let y = built;
        let x = built + 1;
        let z = built + 2;
        edges.push((site, y));
        edges.push((x, y));
        edges.push((y, z));
        degree[site] += 1;
        degree[y] = 3;
        degree[x] = 1;
        degree[z] = 1;
        chain_site = x;
    }
    Graph::from_edges(n, &edges)
}

/// Subcubic tree of order `n` and independence number `alpha` with many
/// maximum independent sets: the caterpillar `T(k)` with `m` chained
/// middle-vertex attachments hanging off one of its pendants, where
/// `k = 2n - 3*alpha` and `m = 2*alpha - n`. Feasible exactly when
/// `k >= 1` and `m >= 0`; the rejection names the two nearest feasible
/// parameter pairs.
pub fn gen_extremal_subcubic(n: usize, alpha: usize) -> Result<Graph> {
    let k = (2 * n as i64) - (3 * alpha as i64);
    let m = (2 * alpha as i64) - (n as i64);
    if k < 1 || m < 0 {
        let nearest = nearest_feasible(n, alpha);
        return Err(Error::InvalidParam(format!(
            "no subcubic mix exists for n={n}, alpha={alpha}: needs 2n-3a >= 1 and 2a-n >= 0 \
             (got {k} and {m}); nearest feasible: {nearest}"
        )));
    }
    let (k, m) = (k as usize, m as usize);
    let base = gen_caterpillar(k)?;
    let mut edges = base.edges();
    let mut next = 2 * k;
    let mut site = 2 * k - 1; // the pendant over the last spine vertex
    for _ in 0..m {
        let y = next;
        let x = next + 1;
        let z = next + 2;
        next += 3;
        edges.push((site, y));
        edges.push((x, y));
        edges.push((y, z));
        site = x;
    }
    debug_assert_eq!(next, n);
    Graph::from_edges(n, &edges)
}

fn nearest_feasible(n: usize, alpha: usize) -> String {
    let feasible = |n: i64, a: i64| n >= 2 && a >= 1 && 2 * n - 3 * a >= 1 && 2 * a - n >= 0;
    let mut found = Vec::new();
    'search: for radius in 1i64.. {
        for dn in -radius..=radius {
            let da = radius - dn.abs();
            for da in [da, -da] {
                let (cn, ca) = (n as i64 + dn, alpha as i64 + da);
                if feasible(cn, ca) && !found.contains(&(cn, ca)) {
                    found.push((cn, ca));
                    if found.len() == 2 {
                        break 'search;
                    }
                }
                if da == 0 {
                    break;
                }
            }
        }
    }
    format!(
        "(n={}, alpha={}) and (n={}, alpha={})",
        found[0].0, found[0].1, found[1].0, found[1].1
    )
}

/// Whether the tree arises from the star `K_{1,alpha}` by subdividing
/// `n - alpha - 1` of its edges once, with `alpha` the tree's own
/// independence number: some vertex `c` must exist whose removal leaves
/// only components of order 1 or 2, *including at least one of order 1*.
/// A spider whose legs are all subdivided has independence number one
/// more than its leg count and falls outside the family. Orders 1 and 2
/// count as the degenerate stars. Rejects non-trees.
pub fn is_subdivided_star(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if n <= 2 {
        return Ok(true);
    }
    'center: for c in 0..n {
        // every component of t - c must have at most 2 vertices, which
        // for a tree means: each neighbor of c has at most one further
        // neighbor, and that one is a leaf
        let mut short_legs = 0;
        for &u in t.neighbors(c) {
            let mut down = 0;
            for &w in t.neighbors(u) {
                if w == c {
                    continue;
                }
                if t.degree(w) != 1 {
                    continue 'center;
                }
                down += 1;
            }
            if down > 1 {
                continue 'center;
            }
            if down == 0 {
                short_legs += 1;
            }
        }
        if short_legs >= 1 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Recognizes the caterpillar family: returns the spine length `k` if the
/// tree is isomorphic to `T(k)`, else `None`. Rejects non-trees.
pub fn is_caterpillar(t: &Graph) -> Result<Option<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if !n.is_multiple_of(2) || n == 0 {
        return Ok(None);
    }
    if n == 2 {
        return Ok(Some(1));
    }
    let k = n / 2;
    let leaves: Vec<usize> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    if leaves.len() != k {
        return Ok(None);
    }
    for v in 0..n {
        if t.degree(v) == 1 {
            continue;
        }
        // one pendant each, and the spine itself is a path
        let leaf_nbs = t.neighbors(v).iter().filter(|&&w| t.degree(w) == 1).count();
        if leaf_nbs != 1 || t.degree(v) - leaf_nbs > 2 {
            return Ok(None);
        }
    }
    Ok(Some(k))
}

/// Whether the tree arises from `K_1` by iteratively attaching `P_3`s:
/// greedily peel a vertex with at least two leaf neighbors and at most
/// one further neighbor, together with two of its leaves, until nothing
/// peels; constructible exactly when a single vertex remains. Rejects
/// non-trees.
pub fn is_p3_constructible(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if n % 3 != 1 {
        return Ok(false);
    }
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut remaining = n;
    loop {
        let mut peeled = false;
        for y in 0..n {
            if !alive[y] || deg[y] < 2 || deg[y] > 3 {
                continue;
            }
            let leaf_nbs: Vec<usize> = t
                .neighbors(y)
                .iter()
                .copied()
                .filter(|&w| alive[w] && deg[w] == 1)
                .collect();
            if leaf_nbs.len() < 2 {
                continue;
            }
            let (x, z) = (leaf_nbs[0], leaf_nbs[1]);
            alive[x] = false;
            alive[z] = false;
            alive[y] = false;
            remaining -= 3;
            for &w in t.neighbors(y) {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
            peeled = true;
            break;
        }
        if !peeled {
            break;
        }
    }
    Ok(remaining == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{count_mis_exact, count_mis_tree};
    use num_bigint::BigUint;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn subdivided_star_known_counts() {
        let t = gen_subdivided_star(8, 4).unwrap();
        assert!(t.is_tree());
        let ac = count_mis_tree(&t).unwrap();
        assert_eq!((ac.alpha, ac.count), (4, BigUint::from(9u32)));

        let t = gen_subdivided_star(7, 4).unwrap();
        let ac = count_mis_tree(&t).unwrap();
        assert_eq!((ac.alpha, ac.count), (4, BigUint::from(4u32)));

        // zero subdivisions: the plain star
        let t = gen_subdivided_star(4, 3).unwrap();
        assert_eq!(t, star(3));
        assert_eq!(count_mis_tree(&t).unwrap().count, BigUint::from(1u32));

        assert!(gen_subdivided_star(1, 1).is_err());
        assert!(gen_subdivided_star(8, 3).is_err());
        assert!(gen_subdivided_star(8, 8).is_err());
    }

    #[test]
    fn caterpillar_known_counts() {
        assert_eq!(gen_caterpillar(1).unwrap(), path(2));
        let t2 = gen_caterpillar(2).unwrap();
        let ac = count_mis_tree(&t2).unwrap();
        assert_eq!((ac.alpha, ac.count), (2, BigUint::from(3u32)));

        let t6 = gen_caterpillar(6).unwrap();
        let ac = count_mis_tree(&t6).unwrap();
        assert_eq!((ac.alpha, ac.count), (6, BigUint::from(21u32)));

        assert!(gen_caterpillar(0).is_err());
    }

    #[test]
    fn p3_tree_shapes() {
        assert_eq!(
            gen_p3_tree(0, P3Policy::DeterministicChain).unwrap(),
            Graph::empty(1)
        );
        let one = gen_p3_tree(1, P3Policy::DeterministicChain).unwrap();
        assert_eq!(count_mis_tree(&one).unwrap().alpha, 3);
        assert_eq!(one.order(), 4);
        assert_eq!(one.max_degree(), 3);

        let three = gen_p3_tree(3, P3Policy::DeterministicChain).unwrap();
        assert!(three.is_subcubic());
        let ac = count_mis_tree(&three).unwrap();
        assert_eq!((ac.alpha, ac.count.clone()), (7, BigUint::from(1u32)));
        let exact = count_mis_exact(&three).unwrap();
        assert_eq!((exact.alpha, exact.count), (ac.alpha, ac.count));
    }

    #[test]
    fn p3_tree_random_policy_is_reproducible() {
        for seed in 0..5u64 {
            let a = gen_p3_tree(5, P3Policy::SeededRandom(seed)).unwrap();
            let b = gen_p3_tree(5, P3Policy::SeededRandom(seed)).unwrap();
            assert_eq!(a, b);
            assert!(a.is_subcubic());
            assert!(a.is_tree());
            assert_eq!(count_mis_tree(&a).unwrap().count, BigUint::from(1u32));
        }
    }

    #[test]
    fn mixed_extremal_parameters() {
        // pure caterpillar when 2*alpha = n
        let t = gen_extremal_subcubic(8, 4).unwrap();
        assert_eq!(t, gen_caterpillar(4).unwrap());

        let t = gen_extremal_subcubic(7, 4).unwrap();
        assert!(t.is_subcubic() && t.is_tree());
        let ac = count_mis_tree(&t).unwrap();
        assert_eq!(ac.alpha, 4);
        assert!(ac.count >= BigUint::from(3u32));

        let err = gen_extremal_subcubic(3, 1).unwrap_err();
        assert!(err.to_string().contains("nearest feasible"));
    }

    #[test]
    fn subdivided_star_checker() {
        assert!(is_subdivided_star(&gen_subdivided_star(8, 4).unwrap()).unwrap());
        assert!(is_subdivided_star(&star(5)).unwrap());
        assert!(is_subdivided_star(&path(4)).unwrap()); // K_{1,2}, one leg split
        assert!(!is_subdivided_star(&path(6)).unwrap());
        assert!(is_subdivided_star(&path(1)).unwrap());
        assert!(is_subdivided_star(&path(2)).unwrap());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(is_subdivided_star(&c4).is_err());
    }

    #[test]
    fn caterpillar_checker() {
        for k in 1..=6 {
            assert_eq!(is_caterpillar(&gen_caterpillar(k).unwrap()).unwrap(), Some(k));
        }
        assert_eq!(is_caterpillar(&path(4)).unwrap(), Some(2));
        assert_eq!(is_caterpillar(&star(3)).unwrap(), None);
        assert_eq!(is_caterpillar(&path(3)).unwrap(), None);
        assert_eq!(is_caterpillar(&path(6)).unwrap(), None);
    }

    #[test]
    fn p3_checker() {
        assert!(is_p3_constructible(&Graph::empty(1)).unwrap());
        assert!(is_p3_constructible(&star(3)).unwrap());
        assert!(!is_p3_constructible(&path(4)).unwrap());
        assert!(!is_p3_constructible(&path(7)).unwrap());
        for steps in 0..=5 {
            let t = gen_p3_tree(steps, P3Policy::DeterministicChain).unwrap();
            assert!(is_p3_constructible(&t).unwrap(), "chain of {steps} steps");
            let t = gen_p3_tree(steps, P3Policy::SeededRandom(steps as u64)).unwrap();
            assert!(is_p3_constructible(&t).unwrap(), "random of {steps} steps");
        }
    }

    #[test]
    fn family_spec_dispatch() {
        assert_eq!(
            FamilySpec::Caterpillar { k: 3 }.build().unwrap(),
            gen_caterpillar(3).unwrap()
        );
        assert!(FamilySpec::MixedExtremal { n: 3, alpha: 1 }.build().is_err());
    }
}
