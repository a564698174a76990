//! An executable form of the symmetrization argument behind the clique
//! bound: repeatedly replace vertices by twins of better-connected ones
//! until the graph is complete multipartite, then balance the parts. The
//! clique count of the target order never decreases along the way, and
//! the procedure lands exactly on the Turán graph.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::count::{clique_degree, count_cliques, has_clique};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::turan::{complete_multipartite, turan_graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymStepKind {
    /// A vertex was removed and another vertex duplicated in its place.
    Duplicate,
    /// Two adjacent vertices were removed and a third vertex triplicated.
    Triplicate,
    /// One vertex moved from a largest part to a smallest part.
    Balance,
}

/// One rewrite step: the vertices involved, the clique count before and
/// after, and the graph the step produced (kept so every recorded count
/// can be re-checked independently).
#[derive(Clone, Debug)]
pub struct SymStep {
    pub kind: SymStepKind,
    pub vertices: Vec<usize>,
    pub before: BigUint,
    pub after: BigUint,
    pub graph_after: Graph,
}

/// Full record of one symmetrization run.
#[derive(Clone, Debug)]
pub struct SymmetrizationTrace {
    /// Order of the input graph.
    pub order: usize,
    /// Forbidden clique order `p`.
    pub clique_bound: usize,
    /// Counted clique order `q`.
    pub clique_size: usize,
    pub initial_count: BigUint,
    pub steps: Vec<SymStep>,
    /// Canonically relabeled final graph; always equals the Turán graph
    /// `T_{p-1}(n)`.
    pub final_graph: Graph,
    pub final_count: BigUint,
}

impl SymmetrizationTrace {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "order": self.order,
            "p": self.clique_bound,
            "q": self.clique_size,
            "initial_count": self.initial_count.to_string(),
            "steps": self.steps.iter().map(|s| serde_json::json!({
                "kind": s.kind,
                "vertices": s.vertices,
                "before": s.before.to_string(),
                "after": s.after.to_string(),
                "graph6_after": crate::codec::graph6_encode(&s.graph_after),
            })).collect::<Vec<_>>(),
            "final_graph6": crate::codec::graph6_encode(&self.final_graph),
            "final_count": self.final_count.to_string(),
        })
    }
}

/// Drops every edge that lies in no clique of order `q`. Leaves the
/// `q`-clique count untouched.
fn prune_to_q_cliques(g: &Graph, q: usize) -> Graph {
    if q == 2 {
        return g.clone();
    }
    let kept: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| {
            let common: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|w| g.has_edge(*w, v))
                .collect();
            crate::count::has_clique_among(g, &common, q - 2)
        })
        .collect();
    Graph::from_edges(g.order(), &kept).expect("pruning keeps edges valid")
}

/// Lexicographically first triple `(u, v, w)` with `u` nonadjacent to both
/// `v` and `w`, and `v` adjacent to `w`. Exists exactly when the graph is
/// not complete multipartite.
fn witness_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.order();
    for u in 0..n {
        for v in 0..n {
            if v == u || g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if w == u || g.has_edge(u, w) || !g.has_edge(v, w) {
                    continue;
                }
                return Some((u, v, w));
            }
        }
    }
    None
}

/// Replaces vertex `slot` by a twin of `model`: same neighbors, not
/// adjacent to `model` itself.
fn overwrite_with_twin(g: &Graph, slot: usize, model: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| a != slot && b != slot)
        .collect();
    for &w in g.neighbors(model) {
        if w != slot {
            edges.push((slot, w));
        }
    }
    Graph::from_edges(g.order(), &edges).expect("twin edges are valid")
}

/// Runs the symmetrization procedure on a graph with no clique of order
/// `p`, counting cliques of order `q` (`2 <= q < p <= n`, and at least
/// one `q`-clique must exist). Records every rewrite; the recorded counts
/// never decrease and the final graph equals `T_{p-1}(n)`.
pub fn zykov_symmetrize(g: &Graph, p: usize, q: usize) -> Result<SymmetrizationTrace> {
    let n = g.order();
    if q < 2 || q >= p || p > n {
        return Err(Error::InvalidParam(format!(
            "clique orders must satisfy 2 <= q < p <= n, got q={q}, p={p}, n={n}"
        )));
    }
    if has_clique(g, p) {
        return Err(Error::InvalidParam(format!(
            "input contains a clique of order p={p}"
        )));
    }
    let initial_count = count_cliques(g, q);
    if initial_count.is_zero() {
        return Err(Error::InvalidParam(format!(
            "input has no clique of order q={q}"
        )));
    }

    let mut cur = prune_to_q_cliques(g, q);
    if count_cliques(&cur, q) != initial_count {
        return Err(Error::Defect("edge pruning changed the clique count".into()));
    }

    let mut steps: Vec<SymStep> = Vec::new();
    let cap = n * (n + 2);
    let mut count = initial_count.clone();

    // phase 1: rewrite toward a complete multipartite graph
    while cur.partite_sets().is_none() {
        if steps.len() > cap {
            return Err(Error::Defect(format!("no convergence within {cap} steps")));
        }
        let (u, v, w) = witness_triple(&cur).ok_or_else(|| {
            Error::Defect("not multipartite but no witness triple".into())
        })?;
        let du = clique_degree(&cur, u, q)?;
        let dv = clique_degree(&cur, v, q)?;
        let dw = clique_degree(&cur, w, q)?;
        let (kind, vertices, next) = if du < dv {
            (SymStepKind::Duplicate, vec![u, v], overwrite_with_twin(&cur, u, v))
        } else if du < dw {
            (SymStepKind::Duplicate, vec![u, w], overwrite_with_twin(&cur, u, w))
        } else {
            let step1 = overwrite_with_twin(&cur, v, u);
            (
                SymStepKind::Triplicate,
                vec![v, w, u],
                overwrite_with_twin(&step1, w, u),
            )
        };
        let after = count_cliques(&next, q);
        if after <= count {
            return Err(Error::Defect(format!(
                "rewrite did not increase the clique count ({count} -> {after})"
            )));
        }
        if has_clique(&next, p) {
            return Err(Error::Defect(format!(
                "rewrite introduced a clique of order {p}"
            )));
        }
        cur = prune_to_q_cliques(&next, q);
        if count_cliques(&cur, q) != after {
            return Err(Error::Defect("edge pruning changed the clique count".into()));
        }
        steps.push(SymStep {
            kind,
            vertices,
            before: count.clone(),
            after: after.clone(),
            graph_after: cur.clone(),
        });
        count = after;
    }

    // phase 2: balance the parts, one vertex at a time
    let mut parts = cur.partite_sets().expect("loop exited on multipartite");
    if parts.len() > p - 1 {
        return Err(Error::Defect(format!(
            "{} parts would mean a clique of order {p}",
            parts.len()
        )));
    }
    parts.resize(p - 1, Vec::new());
    loop {
        sort_parts(&mut parts);
        let largest = 0;
        let smallest = parts.len() - 1;
        if parts[largest].len() - parts[smallest].len() <= 1 {
            break;
        }
        if steps.len() > cap {
            return Err(Error::Defect(format!("no convergence within {cap} steps")));
        }
        let moved = parts[largest].pop().expect("largest part is nonempty");
        parts[smallest].push(moved);
        parts[smallest].sort_unstable();
        let next = multipartite_on_labels(&parts, n);
        let after = count_cliques(&next, q);
        if after < count {
            return Err(Error::Defect(format!(
                "balance move decreased the clique count ({count} -> {after})"
            )));
        }
        steps.push(SymStep {
            kind: SymStepKind::Balance,
            vertices: vec![moved],
            before: count.clone(),
            after: after.clone(),
            graph_after: next,
        });
        count = after;
    }

    // canonical relabeling puts parts in nonincreasing size order on
    // consecutive indices, which is exactly the Turán layout
    sort_parts(&mut parts);
    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    let final_graph = complete_multipartite(&sizes);
    if final_graph != turan_graph(n, p - 1)? {
        return Err(Error::Defect("final graph is not the Turán graph".into()));
    }
    let final_count = count_cliques(&final_graph, q);
    if final_count != count {
        return Err(Error::Defect("relabeling changed the clique count".into()));
    }
    Ok(SymmetrizationTrace {
        order: n,
        clique_bound: p,
        clique_size: q,
        initial_count,
        steps,
        final_graph,
        final_count,
    })
}

fn sort_parts(parts: &mut [Vec<usize>]) {
    parts.sort_by(|a, b| {
        b.len()
            .cmp(&a.len())
            .then_with(|| a.first().unwrap_or(&usize::MAX).cmp(b.first().unwrap_or(&usize::MAX)))
    });
}

/// Complete multipartite graph on the original labels given explicit
/// parts.
fn multipartite_on_labels(parts: &[Vec<usize>], n: usize) -> Graph {
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("parts partition the vertices")
}
