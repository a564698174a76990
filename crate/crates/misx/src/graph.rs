//! Undirected simple graphs on a fixed vertex set `0..n`.
//!
//! Vertices are dense integer indices, neighbor lists are kept sorted, and
//! every operation is deterministic and pure. Graphs are immutable after
//! construction, so values can be shared freely across workers.

use crate::error::{Error, Result};

/// An undirected simple graph with vertex set `0..n` and sorted adjacency
/// lists. Symmetry and irreflexivity are enforced at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices. `n = 0` is legal.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops and
    /// out-of-range endpoints. Duplicate edges collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement on the same vertex set: the edges are exactly the
    /// non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        for (u, row) in adj.iter_mut().enumerate() {
            let mut it = self.adj[u].iter().peekable();
            for v in 0..n {
                if v == u {
                    continue;
                }
                while let Some(&&w) = it.peek() {
                    if w < v {
                        it.next();
                    } else {
                        break;
                    }
                }
                if it.peek() != Some(&&v) {
                    row.push(v);
                }
            }
        }
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    /// Connected with exactly `n - 1` edges. The order-zero graph is not
    /// a tree.
    pub fn is_tree(&self) -> bool {
        let n = self.order();
        n > 0 && self.edge_count() == n - 1 && self.is_connected()
    }

    /// Every vertex has degree at most 3.
    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    /// Partite sets if the graph is complete multipartite, i.e. if its
    /// complement is a disjoint union of cliques. Each returned set is the
    /// vertex set of one complement component, ordered by smallest member.
    pub fn partite_sets(&self) -> Option<Vec<Vec<usize>>> {
        let comp = self.complement();
        let n = comp.order();
        let mut part_of = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if part_of[start] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut members = vec![start];
            part_of[start] = id;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in comp.neighbors(u) {
                    if part_of[v] == usize::MAX {
                        part_of[v] = id;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            // the component must induce a clique in the complement
            for &v in &members {
                if comp.degree(v) != members.len() - 1 {
                    return None;
                }
            }
            parts.push(members);
        }
        Some(parts)
    }

    /// Part sizes of a complete multipartite graph, sorted nonincreasing,
    /// or `None` if the graph is not complete multipartite.
    pub fn is_complete_multipartite(&self) -> Option<Vec<usize>> {
        self.partite_sets().map(|parts| {
            let mut sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            sizes
        })
    }

    /// The unique perfect matching of a tree, if one exists, found by
    /// greedy leaf pairing. Pairs are returned as `(min, max)` in sorted
    /// order. Rejects non-tree input.
    pub fn tree_perfect_matching(&self) -> Result<Option<Vec<(usize, usize)>>> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        let n = self.order();
        if !n.is_multiple_of(2) {
            return Ok(None);
        }
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut queue: std::collections::VecDeque<usize> =
            (0..n).filter(|&v| deg[v] == 1).collect();
        let mut pairs = Vec::with_capacity(n / 2);
        while let Some(u) = queue.pop_front() {
            if !alive[u] {
                continue;
            }
            if deg[u] == 0 {
                // an unmatched vertex got isolated: no perfect matching
                return Ok(None);
            }
            let v = *self.adj[u]
                .iter()
                .find(|&&w| alive[w])
                .expect("degree bookkeeping");
            alive[u] = false;
            alive[v] = false;
            pairs.push((u.min(v), u.max(v)));
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] <= 1 {
                        queue.push_back(w);
                    }
                }
            }
        }
        if alive.iter().any(|&a| a) {
            return Ok(None);
        }
        pairs.sort_unstable();
        Ok(Some(pairs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn from_edges_basic() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(k2.has_edge(1, 0));

        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn from_edges_rejects_self_loop() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(Error::SelfLoop { v: 0 })
        ));
    }

    #[test]
    fn from_edges_rejects_out_of_range() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::EdgeOutOfRange { u: 0, v: 2, n: 2 })
        ));
    }

    #[test]
    fn from_edges_dedups() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_involution_and_k3() {
        let p4 = path(4);
        assert_eq!(p4.complement().complement(), p4);

        let k3 = cycle(3);
        assert_eq!(k3.complement().edge_count(), 0);
    }

    #[test]
    fn tree_predicates() {
        assert!(path(4).is_tree());
        assert!(!cycle(5).is_tree());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        assert!(!Graph::empty(0).is_tree());
        assert!(Graph::empty(1).is_tree());
    }

    #[test]
    fn subcubic_predicate() {
        assert!(star(3).is_subcubic());
        assert!(!star(4).is_subcubic());
        assert!(Graph::empty(0).is_subcubic());
    }

    #[test]
    fn complete_multipartite_recognition() {
        assert_eq!(cycle(3).is_complete_multipartite(), Some(vec![1, 1, 1]));
        assert_eq!(path(4).is_complete_multipartite(), None);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.is_complete_multipartite(), Some(vec![1, 1, 1, 1]));
        // empty graph on 3 vertices is complete 1-partite
        assert_eq!(Graph::empty(3).is_complete_multipartite(), Some(vec![3]));
    }

    #[test]
    fn perfect_matching_on_paths() {
        assert_eq!(
            path(4).tree_perfect_matching().unwrap(),
            Some(vec![(0, 1), (2, 3)])
        );
        assert_eq!(path(3).tree_perfect_matching().unwrap(), None);
        assert!(matches!(
            cycle(4).tree_perfect_matching(),
            Err(Error::NotATree)
        ));
    }

    #[test]
    fn perfect_matching_star_has_none() {
        assert_eq!(star(3).tree_perfect_matching().unwrap(), None);
    }

    #[test]
    fn perfect_matching_pairs_spine_with_pendant() {
        // spine 0-1 with pendants 2 and 3
        let t = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        assert_eq!(
            t.tree_perfect_matching().unwrap(),
            Some(vec![(0, 2), (1, 3)])
        );
    }
}
