use std::collections::VecDeque;

use bipartite_core::{NodeId, ParityForest};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum Op {
    Add,
    Link(usize, usize),
    Ask(usize, usize),
    Path(usize, usize),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        1 => Just(Op::Add),
        4 => (any::<usize>(), any::<usize>()).prop_map(|(a, b)| Op::Link(a, b)),
        4 => (any::<usize>(), any::<usize>()).prop_map(|(a, b)| Op::Ask(a, b)),
        1 => (any::<usize>(), any::<usize>()).prop_map(|(a, b)| Op::Path(a, b)),
    ]
}

/// BFS two-coloring of the linked edges: component label and depth parity.
fn bfs_labels(n: usize, edges: &[(usize, usize)]) -> (Vec<usize>, Vec<u8>) {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut comp = vec![usize::MAX; n];
    let mut par = vec![0u8; n];
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    par[w] = par[u] ^ 1;
                    q.push_back(w);
                }
            }
        }
    }
    (comp, par)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn matches_bfs_coloring(start in 1usize..24, ops in proptest::collection::vec(op(), 1..80)) {
        let mut f = ParityForest::with_nodes(start);
        let mut n = start;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for op in ops {
            match op {
                Op::Add => {
                    prop_assert_eq!(f.make_node(), NodeId(n as u32));
                    n += 1;
                }
                Op::Link(a, b) => {
                    let (a, b) = (a % n, b % n);
                    let (comp, _) = bfs_labels(n, &edges);
                    let r = f.link(NodeId(a as u32), NodeId(b as u32));
                    if comp[a] == comp[b] {
                        prop_assert!(r.is_err());
                    } else {
                        prop_assert!(r.is_ok());
                        edges.push((a, b));
                    }
                }
                Op::Ask(a, b) => {
                    let (a, b) = (a % n, b % n);
                    let (comp, par) = bfs_labels(n, &edges);
                    let (x, y) = (NodeId(a as u32), NodeId(b as u32));
                    prop_assert_eq!(f.same_tree(x, y).unwrap(), comp[a] == comp[b]);
                    if comp[a] == comp[b] {
                        let same = f.parity_of(x).unwrap() == f.parity_of(y).unwrap();
                        prop_assert_eq!(same, par[a] == par[b]);
                    }
                    let size = comp.iter().filter(|&&c| c == comp[a]).count();
                    prop_assert_eq!(f.tree_size(x).unwrap(), size);
                }
                Op::Path(a, b) => {
                    let (a, b) = (a % n, b % n);
                    let (comp, par) = bfs_labels(n, &edges);
                    let got = f.forest_path(NodeId(a as u32), NodeId(b as u32));
                    if comp[a] != comp[b] {
                        prop_assert!(got.is_err());
                        continue;
                    }
                    let path = got.unwrap();
                    prop_assert_eq!(path.first().unwrap().index(), a);
                    prop_assert_eq!(path.last().unwrap().index(), b);
                    prop_assert_eq!(path.len() % 2 == 1, par[a] == par[b]);
                    for w in path.windows(2) {
                        let (u, v) = (w[0].index(), w[1].index());
                        prop_assert!(edges.contains(&(u, v)) || edges.contains(&(v, u)));
                    }
                }
            }
        }
        prop_assert_eq!(f.tree_count(), n - edges.len());
    }
}
