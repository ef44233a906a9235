//! Union-find with parity bits.
//!
//! Each node's parity is the xor of the bits on its path to the union-find
//! root. Roots always carry a zero bit. A separate list of the logical edges
//! passed to [`ParityForest::link`] is kept so that paths can be recovered.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Self {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    #[error("unknown node {0:?}")]
    UnknownNode(NodeId),
    #[error("nodes {0:?} and {1:?} are already in the same tree")]
    SameTree(NodeId, NodeId),
    #[error("nodes {0:?} and {1:?} are in different trees")]
    DifferentTrees(NodeId, NodeId),
}

#[derive(Debug, Clone, Default)]
pub struct ParityForest {
    parent: Vec<u32>,
    bit: Vec<u8>,
    size: Vec<u32>,
    edges: Vec<(NodeId, NodeId)>,
    scratch: Vec<u32>,
}

impl ParityForest {
    pub fn new() -> Self {
        Self::default()
    }

    /// A forest with `n` singleton nodes `0..n`.
    pub fn with_nodes(n: usize) -> Self {
        ParityForest {
            parent: (0..n as u32).collect(),
            bit: vec![0; n],
            size: vec![1; n],
            edges: Vec::new(),
            scratch: Vec::new(),
        }
    }

    pub fn make_node(&mut self) -> NodeId {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        self.bit.push(0);
        self.size.push(1);
        NodeId(id)
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn tree_count(&self) -> usize {
        self.parent.len() - self.edges.len()
    }

    /// Logical edges in insertion order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    fn check(&self, x: NodeId) -> Result<(), ForestError> {
        if x.index() < self.parent.len() {
            Ok(())
        } else {
            Err(ForestError::UnknownNode(x))
        }
    }

    /// Root and parity of `x`, compressing the path on the way.
    fn find(&mut self, x: u32) -> (u32, u8) {
        let mut cur = x;
        self.scratch.clear();
        while self.parent[cur as usize] != cur {
            self.scratch.push(cur);
            cur = self.parent[cur as usize];
        }
        let root = cur;
        let mut acc = 0u8;
        for &node in self.scratch.iter().rev() {
            acc ^= self.bit[node as usize];
            self.bit[node as usize] = acc;
            self.parent[node as usize] = root;
        }
        (root, self.bit[x as usize])
    }

    pub fn root(&mut self, x: NodeId) -> Result<NodeId, ForestError> {
        self.check(x)?;
        Ok(NodeId(self.find(x.0).0))
    }

    pub fn same_tree(&mut self, x: NodeId, y: NodeId) -> Result<bool, ForestError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.find(x.0).0 == self.find(y.0).0)
    }

    pub fn parity_of(&mut self, x: NodeId) -> Result<Parity, ForestError> {
        self.check(x)?;
        Ok(Parity::from_bit(self.find(x.0).1))
    }

    /// Size of the tree containing `x`.
    pub fn tree_size(&mut self, x: NodeId) -> Result<usize, ForestError> {
        self.check(x)?;
        let r = self.find(x.0).0;
        Ok(self.size[r as usize] as usize)
    }

    /// Joins the trees of `x` and `y` with the logical edge `(x, y)`, leaving
    /// the two with opposite parities.
    pub fn link(&mut self, x: NodeId, y: NodeId) -> Result<(), ForestError> {
        self.check(x)?;
        self.check(y)?;
        let (rx, px) = self.find(x.0);
        let (ry, py) = self.find(y.0);
        if rx == ry {
            return Err(ForestError::SameTree(x, y));
        }
        // Union by size; on a tie the lower index stays root.
        let (sx, sy) = (self.size[rx as usize], self.size[ry as usize]);
        let (big, small) = if sx > sy || (sx == sy && rx < ry) { (rx, ry) } else { (ry, rx) };
        self.parent[small as usize] = big;
        self.bit[small as usize] = if px == py { 1 } else { 0 };
        self.size[big as usize] += self.size[small as usize];
        self.edges.push((x, y));
        Ok(())
    }

    /// The simple path from `x` to `y` along logical edges.
    pub fn forest_path(&mut self, x: NodeId, y: NodeId) -> Result<Vec<NodeId>, ForestError> {
        if !self.same_tree(x, y)? {
            return Err(ForestError::DifferentTrees(x, y));
        }
        if x == y {
            return Ok(vec![x]);
        }
        let n = self.parent.len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a.index()].push(b.0);
            adj[b.index()].push(a.0);
        }
        let mut prev = vec![u32::MAX; n];
        prev[x.index()] = x.0;
        let mut queue = VecDeque::from([x.0]);
        while let Some(u) = queue.pop_front() {
            if u == y.0 {
                break;
            }
            for &w in &adj[u as usize] {
                if prev[w as usize] == u32::MAX {
                    prev[w as usize] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![y];
        let mut cur = y.0;
        while cur != x.0 {
            cur = prev[cur as usize];
            path.push(NodeId(cur));
        }
        path.reverse();
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fresh_nodes() {
        let mut f = ParityForest::new();
        let a = f.make_node();
        let b = f.make_node();
        assert_eq!(a, NodeId(0));
        assert_eq!(f.parity_of(a).unwrap(), Parity::Even);
        assert!(!f.same_tree(a, b).unwrap());
        assert_eq!(f.tree_count(), 2);
        assert!(f.edges().is_empty());
    }

    #[test]
    fn link_makes_opposite_parities() {
        let mut f = ParityForest::with_nodes(3);
        let (x, y, z) = (NodeId(0), NodeId(1), NodeId(2));
        f.link(x, y).unwrap();
        assert_ne!(f.parity_of(x).unwrap(), f.parity_of(y).unwrap());
        f.link(y, z).unwrap();
        assert_eq!(f.parity_of(x).unwrap(), f.parity_of(z).unwrap());
        assert_eq!(f.link(x, z), Err(ForestError::SameTree(x, z)));
        assert_eq!(f.forest_path(x, z).unwrap(), vec![x, y, z]);
        assert_eq!(f.forest_path(y, y).unwrap(), vec![y]);
    }

    #[test]
    fn errors() {
        let mut f = ParityForest::with_nodes(2);
        assert_eq!(f.parity_of(NodeId(5)), Err(ForestError::UnknownNode(NodeId(5))));
        assert_eq!(
            f.forest_path(NodeId(0), NodeId(1)),
            Err(ForestError::DifferentTrees(NodeId(0), NodeId(1)))
        );
    }

    #[test]
    fn long_chain_compresses_correctly() {
        let n = 1000;
        let mut f = ParityForest::with_nodes(n);
        // Link in an order that builds deep union-find paths on the small side.
        for i in 1..n {
            f.link(NodeId(i as u32), NodeId(i as u32 - 1)).unwrap();
        }
        let p0 = f.parity_of(NodeId(0)).unwrap().bit();
        for i in 0..n {
            assert_eq!(f.parity_of(NodeId(i as u32)).unwrap().bit(), p0 ^ (i as u8 & 1));
        }
        assert_eq!(f.tree_count(), 1);
    }
}
