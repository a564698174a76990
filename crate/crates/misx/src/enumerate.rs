//! Canonical enumeration of non-isomorphic free trees by level sequence.
//!
//! Rooted trees are generated as canonical level sequences (root at level
//! 1, children blocks in nonincreasing lexicographic order) via the
//! classic constant-time successor rule, in decreasing lexicographic
//! order starting from the path. A rooted sequence is kept exactly when
//! it is the canonical sequence of its underlying free tree, i.e. the
//! lexicographically greatest sequence over centroid rootings — so every
//! isomorphism class is yielded exactly once, deterministically.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard guard on the enumeration order.
pub const ENUM_ORDER_LIMIT: usize = 20;

/// One enumerated tree together with its canonical level sequence. The
/// sequence is the stream's native sort key: streams emit in decreasing
/// lexicographic order, which is what report mergers rely on.
#[derive(Clone, Debug)]
pub struct TreeEntry {
    pub canonical_seq: Vec<u8>,
    pub graph: Graph,
}

/// Single-consumer stream of all non-isomorphic trees of a fixed order.
///
/// Parallel consumption never shares a cursor: [`TreeStream::split`]
/// derives disjoint sub-streams keyed on the size of the root's first
/// branch, and each worker owns one.
#[derive(Clone, Debug)]
pub struct TreeStream {
    n: usize,
    subcubic_only: bool,
    seq: Option<Vec<u8>>,
    modulus: usize,
    residue: usize,
}

/// All isomorphism classes of free trees of order `n`, optionally
/// restricted to subcubic ones. Guarded at order [`ENUM_ORDER_LIMIT`].
pub fn enumerate_trees(n: usize, subcubic_only: bool) -> Result<TreeStream> {
    if n == 0 || n > ENUM_ORDER_LIMIT {
        return Err(Error::InvalidParam(format!(
            "enumeration order must satisfy 1 <= n <= {ENUM_ORDER_LIMIT}, got {n}"
        )));
    }
    Ok(TreeStream {
        n,
        subcubic_only,
        seq: Some((1..=n as u8).collect()),
        modulus: 1,
        residue: 0,
    })
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Splits a fresh stream into `parts` disjoint sub-streams covering
    /// the same trees. Streams that were already split cannot be split
    /// again.
    pub fn split(&self, parts: usize) -> Vec<TreeStream> {
        assert!(parts >= 1, "need at least one part");
        assert_eq!(self.modulus, 1, "stream is already split");
        (0..parts)
            .map(|residue| TreeStream {
                n: self.n,
                subcubic_only: self.subcubic_only,
                seq: self.seq.clone(),
                modulus: parts,
                residue,
            })
            .collect()
    }

    /// Number of vertices in the root's first (lexicographically
    /// greatest) branch; the split key.
    fn first_branch_size(seq: &[u8]) -> usize {
        let mut size = 0;
        for &level in &seq[1..] {
            if level == 2 && size > 0 {
                break;
            }
            size += 1;
        }
        size
    }

    fn advance(seq: &mut [u8]) -> bool {
        // successor in decreasing lexicographic order: truncate after the
        // last entry above 2 and tile the block from its parent onward
        let Some(p) = seq.iter().rposition(|&l| l > 2) else {
            return false;
        };
        let q = seq[..p].iter().rposition(|&l| l == seq[p] - 1).expect(
            "every non-root level is preceded by its parent level",
        );
        let period = p - q;
        for i in p..seq.len() {
            seq[i] = seq[i - period];
        }
        true
    }

    pub fn next_entry(&mut self) -> Option<TreeEntry> {
        loop {
            let seq = self.seq.as_ref()?.clone();
            let exhausted = {
                let s = self.seq.as_mut().expect("checked above");
                !Self::advance(s)
            };
            if exhausted {
                self.seq = None;
            }
            if Self::first_branch_size(&seq) % self.modulus != self.residue {
                continue;
            }
            if self.subcubic_only && !seq_subcubic(&seq) {
                continue;
            }
            let graph = tree_from_seq(&seq);
            if free_canonical_seq(&graph) == seq {
                return Some(TreeEntry {
                    canonical_seq: seq,
                    graph,
                });
            }
        }
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_entry().map(|e| e.graph)
    }
}

/// Degree check straight off the level sequence, cheaper than building
/// the graph.
fn seq_subcubic(seq: &[u8]) -> bool {
    let n = seq.len();
    let mut children = vec![0u8; n];
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[1] = 0;
    for i in 1..n {
        let parent = last_at_level[seq[i] as usize - 1];
        children[parent] += 1;
        last_at_level[seq[i] as usize] = i;
    }
    (0..n).all(|v| children[v] + u8::from(v != 0) <= 3)
}

/// Builds the tree a level sequence describes: each vertex's parent is
/// the most recent earlier vertex one level up.
pub fn tree_from_seq(seq: &[u8]) -> Graph {
    let n = seq.len();
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[1] = 0;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = last_at_level[seq[i] as usize - 1];
        edges.push((parent, i));
        last_at_level[seq[i] as usize] = i;
    }
    Graph::from_edges(n, &edges).expect("level sequence describes a tree")
}

/// Canonical level sequence of `t` rooted at `root`: children blocks
/// sorted in nonincreasing lexicographic order at every vertex.
pub fn canonical_rooted_seq(t: &Graph, root: usize) -> Vec<u8> {
    fn sub(t: &Graph, v: usize, parent: usize) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| sub(t, w, v))
            .collect();
        kids.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = Vec::with_capacity(1 + kids.iter().map(Vec::len).sum::<usize>());
        out.push(1);
        for kid in kids {
            out.extend(kid.into_iter().map(|l| l + 1));
        }
        out
    }
    sub(t, root, usize::MAX)
}

/// The one or two centroids of a tree, ascending.
pub fn centroids(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n == 1 {
        return vec![0];
    }
    let mut size = vec![1usize; n];
    // BFS from vertex 0, subtree sizes by reverse sweep
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    order.push(0);
    parent[0] = 0;
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
    for &v in order.iter().rev() {
        if v != 0 {
            size[parent[v]] += size[v];
        }
    }
    // largest component left by removing v: the parent side or a child subtree
    let comp_max = |v: usize| -> usize {
        let mut m = n - size[v];
        for &w in t.neighbors(v) {
            if parent[w] == v {
                m = m.max(size[w]);
            }
        }
        m
    };
    let best = (0..n).map(comp_max).min().expect("nonempty tree");
    (0..n).filter(|&v| comp_max(v) == best).collect()
}

/// Canonical sequence of the free tree: the greatest canonical rooted
/// sequence over centroid rootings.
pub fn free_canonical_seq(t: &Graph) -> Vec<u8> {
    centroids(t)
        .into_iter()
        .map(|c| canonical_rooted_seq(t, c))
        .max()
        .expect("nonempty tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rooted-tree counts; the successor rule alone must reproduce them.
    const ROOTED: [usize; 10] = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];
    /// Free-tree counts for orders 1..=12.
    const FREE: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];

    fn count_rooted(n: usize) -> usize {
        let mut seq: Vec<u8> = (1..=n as u8).collect();
        let mut count = 1;
        while TreeStream::advance(&mut seq) {
            count += 1;
        }
        count
    }

    #[test]
    fn successor_rule_counts_rooted_trees() {
        for (i, &expect) in ROOTED.iter().enumerate() {
            assert_eq!(count_rooted(i + 1), expect, "rooted trees of order {}", i + 1);
        }
    }

    #[test]
    fn free_tree_counts() {
        for (i, &expect) in FREE.iter().enumerate() {
            let n = i + 1;
            let got = enumerate_trees(n, false).unwrap().count();
            assert_eq!(got, expect, "free trees of order {n}");
        }
    }

    #[test]
    fn yields_are_trees_and_distinct() {
        for n in 1..=9usize {
            let mut seen = std::collections::HashSet::new();
            for entry in std::iter::from_fn({
                let mut s = enumerate_trees(n, false).unwrap();
                move || s.next_entry()
            }) {
                assert!(entry.graph.is_tree());
                assert_eq!(entry.graph.order(), n);
                assert!(seen.insert(entry.canonical_seq.clone()), "duplicate sequence");
                // the yielded sequence really is the free canonical form
                assert_eq!(free_canonical_seq(&entry.graph), entry.canonical_seq);
            }
        }
    }

    #[test]
    fn subcubic_filter_matches_post_filter() {
        for n in 1..=10usize {
            let filtered: Vec<Graph> = enumerate_trees(n, true).unwrap().collect();
            let post: Vec<Graph> = enumerate_trees(n, false)
                .unwrap()
                .filter(|g| g.is_subcubic())
                .collect();
            assert_eq!(filtered.len(), post.len());
            for (a, b) in filtered.iter().zip(&post) {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn split_streams_partition_the_whole() {
        for parts in [1usize, 2, 3, 5] {
            let whole: Vec<Vec<u8>> = {
                let mut s = enumerate_trees(9, false).unwrap();
                std::iter::from_fn(move || s.next_entry())
                    .map(|e| e.canonical_seq)
                    .collect()
            };
            let mut merged: Vec<Vec<u8>> = Vec::new();
            for mut sub in enumerate_trees(9, false).unwrap().split(parts) {
                while let Some(e) = sub.next_entry() {
                    merged.push(e.canonical_seq);
                }
            }
            merged.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(merged, whole, "split into {parts} parts");
        }
    }

    #[test]
    fn guard_rejected() {
        assert!(enumerate_trees(0, false).is_err());
        assert!(enumerate_trees(21, false).is_err());
    }

    #[test]
    fn order_is_decreasing_lexicographic() {
        let mut s = enumerate_trees(8, false).unwrap();
        let mut prev: Option<Vec<u8>> = None;
        while let Some(e) = s.next_entry() {
            if let Some(p) = &prev {
                assert!(e.canonical_seq < *p);
            }
            prev = Some(e.canonical_seq);
        }
    }

    #[test]
    fn centroid_sanity() {
        // path on 5: single centroid at the middle
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(centroids(&p5), vec![2]);
        // path on 4: two adjacent centroids
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(centroids(&p4), vec![1, 2]);
        assert_eq!(centroids(&Graph::empty(1)), vec![0]);
    }
}
