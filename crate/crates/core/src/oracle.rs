//! Brute-force reference: all-pairs graph construction and BFS two-coloring.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{Mode, Shape};
use crate::verdict::{Color, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionGraph {
    ids: Vec<u64>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl IntersectionGraph {
    /// Tests every pair exactly.
    pub fn build<S: Shape>(objects: &[S], mode: Mode) -> Self {
        let n = objects.len();
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if objects[i].intersects(&objects[j], mode) {
                    adj[i].push(j as u32);
                    adj[j].push(i as u32);
                    edge_count += 1;
                }
            }
        }
        IntersectionGraph { ids: objects.iter().map(|o| o.id()).collect(), adj, edge_count }
    }

    /// A graph over `ids` from index pairs. Duplicate pairs and self-loops
    /// are dropped.
    pub fn from_edges(ids: Vec<u64>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); ids.len()];
        for (a, b) in edges {
            if a != b {
                adj[a].push(b as u32);
                adj[b].push(a as u32);
            }
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        IntersectionGraph { ids, adj, edge_count: edge_count / 2 }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn ids(&self) -> &[u64] {
        &self.ids
    }

    /// Neighbors of the vertex at index `i`.
    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.adj[i]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&(b as u32))
    }

    /// Connected components as sorted id lists, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![self.ids[s]];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(self.ids[w as usize]);
                        stack.push(w as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort();
        out
    }
}

/// Breadth-first two-coloring; an odd cycle comes from the BFS tree paths
/// to the first monochromatic edge.
pub fn bfs_bipartiteness(graph: &IntersectionGraph) -> Verdict {
    let n = graph.len();
    let mut depth = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    for s in 0..n {
        if depth[s] != u32::MAX {
            continue;
        }
        depth[s] = 0;
        let mut queue = VecDeque::from([s as u32]);
        while let Some(u) = queue.pop_front() {
            for &w in &graph.adj[u as usize] {
                if depth[w as usize] == u32::MAX {
                    depth[w as usize] = depth[u as usize] + 1;
                    parent[w as usize] = u;
                    queue.push_back(w);
                } else if depth[w as usize] % 2 == depth[u as usize] % 2 {
                    return Verdict::OddCycle { cycle: tree_cycle(graph, &parent, &depth, u, w) };
                }
            }
        }
    }
    let colors: BTreeMap<u64, Color> =
        (0..n).map(|i| (graph.ids[i], Color::from_parity_bit((depth[i] & 1) as u8))).collect();
    Verdict::Bipartite { colors }
}

fn tree_cycle(graph: &IntersectionGraph, parent: &[u32], depth: &[u32], u: u32, w: u32) -> Vec<u64> {
    let (mut a, mut b) = (u, w);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a as usize] > depth[b as usize] {
        left.push(a);
        a = parent[a as usize];
    }
    while depth[b as usize] > depth[a as usize] {
        right.push(b);
        b = parent[b as usize];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a as usize];
        b = parent[b as usize];
    }
    left.push(a);
    left.extend(right.into_iter().rev());
    left.into_iter().map(|i| graph.ids[i as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Point2, Rect, Segment};
    use crate::parity_forest::{NodeId, ParityForest};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_graphs() {
        let path = IntersectionGraph::from_edges(vec![0, 1, 2], [(0, 1), (1, 2)]);
        assert!(bfs_bipartiteness(&path).is_bipartite());
        let tri = IntersectionGraph::from_edges(vec![0, 1, 2], [(0, 1), (1, 2), (2, 0)]);
        match bfs_bipartiteness(&tri) {
            Verdict::OddCycle { cycle } => assert_eq!(cycle.len(), 3),
            v => panic!("expected cycle, got {v:?}"),
        }
    }

    #[test]
    fn segment_graphs() {
        let x = [Segment::from_ints(0, 0, 0, 2, 2).unwrap(), Segment::from_ints(1, 0, 2, 2, 0).unwrap()];
        assert_eq!(IntersectionGraph::build(&x, Mode::Closed).edge_count(), 1);
        let apart: Vec<Segment> = (0..5).map(|i| Segment::from_ints(i, 0, i as i64, 1, i as i64).unwrap()).collect();
        assert_eq!(IntersectionGraph::build(&apart, Mode::Closed).edge_count(), 0);
    }

    #[test]
    fn rectangles_form_k33() {
        let r = |id, x0, y0, x1, y1| Rect::new(id, Point2::from_ints(x0, y0), Point2::from_ints(x1, y1)).unwrap();
        // Three wide horizontal strips and three tall vertical strips.
        let rects = [
            r(0, 0, 0, 10, 1),
            r(1, 0, 3, 10, 4),
            r(2, 0, 6, 10, 7),
            r(3, 1, -1, 2, 8),
            r(4, 4, -1, 5, 8),
            r(5, 7, -1, 8, 8),
        ];
        let g = IntersectionGraph::build(&rects, Mode::Closed);
        assert_eq!(g.edge_count(), 9);
        for h in 0..3 {
            for v in 3..6 {
                assert!(g.has_edge(h, v));
            }
        }
        assert!(bfs_bipartiteness(&g).is_bipartite());
    }

    #[test]
    fn random_graphs_match_parity_union_find() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = 50;
            let m = rng.gen_range(0..80);
            let edges: Vec<(usize, usize)> =
                (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).filter(|(a, b)| a != b).collect();
            let g = IntersectionGraph::from_edges((0..n as u64).collect(), edges.iter().copied());
            // Independent check: a parity union-find over the edge list.
            let mut f = ParityForest::with_nodes(n);
            let mut bipartite = true;
            for &(a, b) in &edges {
                let (a, b) = (NodeId(a as u32), NodeId(b as u32));
                if f.same_tree(a, b).unwrap() {
                    if f.parity_of(a).unwrap() == f.parity_of(b).unwrap() {
                        bipartite = false;
                    }
                } else {
                    f.link(a, b).unwrap();
                }
            }
            let v = bfs_bipartiteness(&g);
            assert_eq!(v.is_bipartite(), bipartite);
            if let Verdict::OddCycle { cycle } = &v {
                assert!(cycle.len() % 2 == 1 && cycle.len() >= 3);
                for k in 0..cycle.len() {
                    let (a, b) = (cycle[k] as usize, cycle[(k + 1) % cycle.len()] as usize);
                    assert!(g.has_edge(a, b));
                }
            }
        }
    }
}
