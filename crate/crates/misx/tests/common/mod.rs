//! Shared oracles for the integration suites. Everything here is written
//! against the definitions directly — subset scans, combination
//! enumeration, Prüfer decoding, eccentricity-center canonical forms —
//! and deliberately shares no code path with the library implementations
//! it checks.

#![allow(dead_code)]

use misx::graph::Graph;
use rand::Rng;

/// Independence number and count of maximum independent sets by scanning
/// every vertex subset. Usable to order ~20.
pub fn naive_alpha_count(g: &Graph) -> (usize, u64) {
    let n = g.order();
    assert!(n <= 22, "subset oracle is for small orders");
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut best = 0usize;
    let mut count = 0u64;
    for set in 0u64..(1 << n) {
        let mut ok = true;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if masks[v] & set != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            let size = set.count_ones() as usize;
            match size.cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = size;
                    count = 1;
                }
                std::cmp::Ordering::Equal => count += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    (best, count)
}

/// Number of `q`-cliques by checking every `q`-combination of vertices.
pub fn naive_clique_count(g: &Graph, q: usize) -> u64 {
    fn rec(g: &Graph, chosen: &mut Vec<usize>, from: usize, left: usize) -> u64 {
        if left == 0 {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(i, &u)| chosen[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            return u64::from(ok);
        }
        let mut total = 0;
        for v in from..g.order() {
            chosen.push(v);
            total += rec(g, chosen, v + 1, left - 1);
            chosen.pop();
        }
        total
    }
    rec(g, &mut Vec::new(), 0, q)
}

/// Decodes a Prüfer sequence of length `n - 2` into a labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = *leaves.iter().next().expect("a leaf always remains");
        leaves.remove(&leaf);
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.insert(a);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Isomorphism-invariant certificate of a tree: parenthesized subtree
/// encodings rooted at the eccentricity center(s), smallest of the one or
/// two candidate strings. Distinct from the centroid/level-sequence form
/// used by the enumerator.
pub fn center_certificate(t: &Graph) -> String {
    let n = t.order();
    if n == 1 {
        return "()".into();
    }
    let ecc = |start: usize| -> usize {
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut far = 0;
        while let Some(u) = queue.pop_front() {
            for &v in t.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    far = far.max(dist[v]);
                    queue.push_back(v);
                }
            }
        }
        far
    };
    let eccs: Vec<usize> = (0..n).map(ecc).collect();
    let radius = *eccs.iter().min().expect("nonempty");
    fn encode(t: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| encode(t, w, v))
            .collect();
        kids.sort_unstable();
        format!("({})", kids.concat())
    }
    (0..n)
        .filter(|&v| eccs[v] == radius)
        .map(|c| encode(t, c, usize::MAX))
        .min()
        .expect("a center exists")
}

/// Random graph with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("random edges are valid")
}

/// Random graph with no clique of order `p` but at least one clique of
/// order `q`: a `q`-clique is seeded first, then random edges are added
/// in shuffled order, skipping any that would complete a `p`-clique.
pub fn random_kp_free<R: Rng>(rng: &mut R, n: usize, p: usize, q: usize) -> Graph {
    assert!(q < p && p <= n);
    let mut verts: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        verts.swap(i, rng.gen_range(0..=i));
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..q {
        for j in i + 1..q {
            edges.push((verts[i].min(verts[j]), verts[i].max(verts[j])));
        }
    }
    let mut pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    for i in (1..pool.len()).rev() {
        pool.swap(i, rng.gen_range(0..=i));
    }
    let target = edges.len() + rng.gen_range(0..=pool.len());
    for &(u, v) in &pool {
        if edges.len() >= target {
            break;
        }
        edges.push((u, v));
        let g = Graph::from_edges(n, &edges).expect("valid");
        if misx::count::has_clique(&g, p) {
            edges.pop();
        }
    }
    Graph::from_edges(n, &edges).expect("valid")
}
