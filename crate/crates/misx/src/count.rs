//! Exact counting of maximum independent sets and fixed-order cliques.
//!
//! Trees get a linear-time rooted dynamic program; arbitrary graphs up to
//! a hard order guard get branch-and-bound enumeration. Counts are
//! arbitrary-precision from the start: desk scale is enumeration-bound,
//! not arithmetic-bound, and several instances of interest overflow u64.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard order guard for [`count_mis_exact`].
pub const EXACT_ORDER_LIMIT: usize = 30;

/// Independence number together with the number of independent sets that
/// attain it. The order-zero graph has `alpha = 0, count = 1` (the empty
/// set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaCount {
    pub alpha: usize,
    pub count: BigUint,
}

impl AlphaCount {
    pub fn new(alpha: usize, count: u64) -> Self {
        AlphaCount {
            alpha,
            count: BigUint::from(count),
        }
    }
}

/// Per-vertex state of the rooted tree DP: the best independent set of the
/// subtree that includes the root vertex, and the best that excludes it,
/// each with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDpRecord {
    pub alpha_in: usize,
    pub count_in: BigUint,
    pub alpha_out: usize,
    pub count_out: BigUint,
}

impl TreeDpRecord {
    fn leaf() -> Self {
        TreeDpRecord {
            alpha_in: 1,
            count_in: BigUint::one(),
            alpha_out: 0,
            count_out: BigUint::one(),
        }
    }

    /// Independence number of the subtree.
    pub fn alpha(&self) -> usize {
        self.alpha_in.max(self.alpha_out)
    }

    /// Number of maximum independent sets of the subtree.
    pub fn count(&self) -> BigUint {
        use std::cmp::Ordering::*;
        match self.alpha_in.cmp(&self.alpha_out) {
            Greater => self.count_in.clone(),
            Less => self.count_out.clone(),
            Equal => &self.count_in + &self.count_out,
        }
    }
}

/// Split of the maximum independent sets of a tree by membership of one
/// vertex. The two counts always sum to the total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionalCount {
    pub with_vertex: BigUint,
    pub without_vertex: BigUint,
}

/// Runs the rooted DP and returns one record per vertex. The record at
/// `root` describes the whole tree.
pub fn tree_dp(t: &Graph, root: usize) -> Result<Vec<TreeDpRecord>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    if root >= n {
        return Err(Error::VertexOutOfRange { v: root, n });
    }
    // BFS order from the root; children processed before parents.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in t.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut rec = vec![TreeDpRecord::leaf(); n];
    for &v in order.iter().rev() {
        if v == root {
            continue;
        }
        let p = parent[v];
        let child = rec[v].clone();
        let r = &mut rec[p];
        // including p forces every child out
        r.alpha_in += child.alpha_out;
        r.count_in *= &child.count_out;
        // excluding p takes the better of each child's two states; on a
        // tie both count, which is the whole point of counting
        use std::cmp::Ordering::*;
        match child.alpha_in.cmp(&child.alpha_out) {
            Greater => {
                r.alpha_out += child.alpha_in;
                r.count_out *= &child.count_in;
            }
            Less => {
                r.alpha_out += child.alpha_out;
                r.count_out *= &child.count_out;
            }
            Equal => {
                r.alpha_out += child.alpha_in;
                r.count_out *= &child.count_in + &child.count_out;
            }
        }
    }
    Ok(rec)
}

/// Exact `(alpha, count)` for a tree via the rooted DP. Rejects non-trees.
pub fn count_mis_tree(t: &Graph) -> Result<AlphaCount> {
    let rec = tree_dp(t, 0)?;
    Ok(AlphaCount {
        alpha: rec[0].alpha(),
        count: rec[0].count(),
    })
}

/// Counts of maximum independent sets of a tree containing / not
/// containing `v`, via the DP rooted at `v`.
pub fn conditional_count_tree(t: &Graph, v: usize) -> Result<ConditionalCount> {
    let rec = tree_dp(t, v)?;
    let r = &rec[v];
    let alpha = r.alpha();
    Ok(ConditionalCount {
        with_vertex: if r.alpha_in == alpha {
            r.count_in.clone()
        } else {
            BigUint::zero()
        },
        without_vertex: if r.alpha_out == alpha {
            r.count_out.clone()
        } else {
            BigUint::zero()
        },
    })
}

struct Bnb<'a> {
    nbr: &'a [u64],
    best: usize,
    count: u128,
}

impl Bnb<'_> {
    fn run(&mut self, allowed: u64, size: usize) {
        if size + (allowed.count_ones() as usize) < self.best {
            return;
        }
        if allowed == 0 {
            if size > self.best {
                self.best = size;
                self.count = 1;
            } else if size == self.best {
                self.count += 1;
            }
            return;
        }
        // branch on a densest remaining vertex; ties break low
        let mut pick = usize::MAX;
        let mut pick_deg = 0;
        let mut rest = allowed;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.nbr[v] & allowed).count_ones() as usize;
            if pick == usize::MAX || d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        let bit = 1u64 << pick;
        self.run(allowed & !self.nbr[pick] & !bit, size + 1);
        self.run(allowed & !bit, size);
    }
}

/// Exact `(alpha, count)` for an arbitrary graph by branch-and-bound
/// enumeration. Guarded at order [`EXACT_ORDER_LIMIT`]; agrees with
/// [`count_mis_tree`] on trees.
pub fn count_mis_exact(g: &Graph) -> Result<AlphaCount> {
    let n = g.order();
    if n > EXACT_ORDER_LIMIT {
        return Err(Error::OrderGuard {
            n,
            limit: EXACT_ORDER_LIMIT,
        });
    }
    if n == 0 {
        return Ok(AlphaCount::new(0, 1));
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut search = Bnb {
        nbr: &nbr,
        best: 0,
        count: 0,
    };
    search.run((1u64 << n) - 1, 0);
    Ok(AlphaCount {
        alpha: search.best,
        count: BigUint::from(search.count),
    })
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn cliques_among(g: &Graph, cands: &[usize], q: usize) -> BigUint {
    if q == 0 {
        return BigUint::one();
    }
    if cands.len() < q {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    for (i, &v) in cands.iter().enumerate() {
        if cands.len() - i < q {
            break;
        }
        total += cliques_among(g, &intersect_sorted(&cands[i + 1..], g.neighbors(v)), q - 1);
    }
    total
}

fn exists_clique_among(g: &Graph, cands: &[usize], q: usize) -> bool {
    if q == 0 {
        return true;
    }
    if cands.len() < q {
        return false;
    }
    for (i, &v) in cands.iter().enumerate() {
        if cands.len() - i < q {
            break;
        }
        if exists_clique_among(g, &intersect_sorted(&cands[i + 1..], g.neighbors(v)), q - 1) {
            return true;
        }
    }
    false
}

/// Number of cliques of order `q`, enumerated with sorted neighbor
/// intersections. `q = 0` counts the empty clique once.
pub fn count_cliques(g: &Graph, q: usize) -> BigUint {
    let all: Vec<usize> = g.vertices().collect();
    cliques_among(g, &all, q)
}

/// Whether the graph contains a clique of order `q`.
pub fn has_clique(g: &Graph, q: usize) -> bool {
    let all: Vec<usize> = g.vertices().collect();
    exists_clique_among(g, &all, q)
}

/// Whether some `q`-clique lives entirely inside `cands` (sorted).
pub(crate) fn has_clique_among(g: &Graph, cands: &[usize], q: usize) -> bool {
    exists_clique_among(g, cands, q)
}

/// Number of cliques of order `q` that contain `u`; equivalently the
/// number of `(q-1)`-cliques inside the neighborhood of `u`.
pub fn clique_degree(g: &Graph, u: usize, q: usize) -> Result<BigUint> {
    if u >= g.order() {
        return Err(Error::VertexOutOfRange { v: u, n: g.order() });
    }
    if q == 0 {
        return Ok(BigUint::zero());
    }
    Ok(cliques_among(g, g.neighbors(u), q - 1))
}
