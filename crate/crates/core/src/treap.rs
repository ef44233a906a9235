//! Arena treap over implicit (positional) sequences with split and concat.
//!
//! Nodes carry no keys; order is whatever the caller builds through
//! `concat`, `insert_after` and friends. Parent links make `next`, `prev`,
//! `root_of` and positional splits possible from a node handle alone.

use alloc::vec::Vec;

pub(crate) const NIL: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node {
    left: u32,
    right: u32,
    parent: u32,
    prio: u64,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct Treap {
    nodes: Vec<Node>,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Treap {
    pub fn with_nodes(n: usize) -> Self {
        let mut t = Treap { nodes: Vec::with_capacity(n) };
        for _ in 0..n {
            t.add_node();
        }
        t
    }

    pub fn add_node(&mut self) -> u32 {
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { left: NIL, right: NIL, parent: NIL, prio: splitmix(id as u64) });
        id
    }

    /// Detaches `x` completely. Only valid when `x` is already unlinked from
    /// any tree or the tree it was in is being discarded.
    pub fn reset_node(&mut self, x: u32) {
        let n = &mut self.nodes[x as usize];
        n.left = NIL;
        n.right = NIL;
        n.parent = NIL;
    }

    pub fn left(&self, x: u32) -> u32 {
        self.nodes[x as usize].left
    }

    pub fn right(&self, x: u32) -> u32 {
        self.nodes[x as usize].right
    }

    fn set_left(&mut self, p: u32, c: u32) {
        self.nodes[p as usize].left = c;
        if c != NIL {
            self.nodes[c as usize].parent = p;
        }
    }

    fn set_right(&mut self, p: u32, c: u32) {
        self.nodes[p as usize].right = c;
        if c != NIL {
            self.nodes[c as usize].parent = p;
        }
    }

    pub fn root_of(&self, mut x: u32) -> u32 {
        while self.nodes[x as usize].parent != NIL {
            x = self.nodes[x as usize].parent;
        }
        x
    }

    /// Concatenates the sequences rooted at `a` and `b`; either may be `NIL`.
    pub fn concat(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[a as usize].prio >= self.nodes[b as usize].prio {
            let r = self.nodes[a as usize].right;
            let merged = self.concat(r, b);
            self.set_right(a, merged);
            self.nodes[a as usize].parent = NIL;
            a
        } else {
            let l = self.nodes[b as usize].left;
            let merged = self.concat(a, l);
            self.set_left(b, merged);
            self.nodes[b as usize].parent = NIL;
            b
        }
    }

    /// Splits the sequence rooted at `root` into a prefix where `goes_left`
    /// holds and the remaining suffix. `goes_left` must be monotone along
    /// the sequence (true then false).
    pub fn split_by(&mut self, root: u32, goes_left: &mut impl FnMut(u32) -> bool) -> (u32, u32) {
        if root == NIL {
            return (NIL, NIL);
        }
        self.nodes[root as usize].parent = NIL;
        if goes_left(root) {
            let r = self.nodes[root as usize].right;
            let (a, b) = self.split_by(r, goes_left);
            self.set_right(root, a);
            if b != NIL {
                self.nodes[b as usize].parent = NIL;
            }
            (root, b)
        } else {
            let l = self.nodes[root as usize].left;
            let (a, b) = self.split_by(l, goes_left);
            self.set_left(root, b);
            if a != NIL {
                self.nodes[a as usize].parent = NIL;
            }
            (a, root)
        }
    }

    /// Splits the sequence containing `x` into `[.., x]` and `(x, ..]`.
    pub fn split_after(&mut self, x: u32) -> (u32, u32) {
        let mut l = x;
        let mut r = self.nodes[x as usize].right;
        if r != NIL {
            self.nodes[r as usize].parent = NIL;
        }
        self.nodes[x as usize].right = NIL;
        self.climb(x, &mut l, &mut r);
        (l, r)
    }

    /// Splits the sequence containing `x` into `[.., x)` and `[x, ..]`.
    #[cfg(test)]
    pub fn split_before(&mut self, x: u32) -> (u32, u32) {
        let mut r = x;
        let mut l = self.nodes[x as usize].left;
        if l != NIL {
            self.nodes[l as usize].parent = NIL;
        }
        self.nodes[x as usize].left = NIL;
        self.climb(x, &mut l, &mut r);
        (l, r)
    }

    fn climb(&mut self, x: u32, l: &mut u32, r: &mut u32) {
        let mut child = x;
        let mut p = self.nodes[x as usize].parent;
        self.nodes[x as usize].parent = NIL;
        while p != NIL {
            let gp = self.nodes[p as usize].parent;
            if self.nodes[p as usize].left == child {
                self.set_left(p, *r);
                *r = p;
            } else {
                self.set_right(p, *l);
                *l = p;
            }
            self.nodes[p as usize].parent = NIL;
            child = p;
            p = gp;
        }
    }

    /// Unlinks `x` and returns the root of what remains of its sequence.
    pub fn remove(&mut self, x: u32) -> u32 {
        let (l, r) = (self.nodes[x as usize].left, self.nodes[x as usize].right);
        if l != NIL {
            self.nodes[l as usize].parent = NIL;
        }
        if r != NIL {
            self.nodes[r as usize].parent = NIL;
        }
        let merged = self.concat(l, r);
        let p = self.nodes[x as usize].parent;
        self.reset_node(x);
        if p == NIL {
            return merged;
        }
        if self.nodes[p as usize].left == x {
            self.set_left(p, merged);
        } else {
            self.set_right(p, merged);
        }
        self.root_of(p)
    }

    /// Inserts the detached node `new` right after `x`; returns the root.
    pub fn insert_after(&mut self, x: u32, new: u32) -> u32 {
        let (l, r) = self.split_after(x);
        let l = self.concat(l, new);
        self.concat(l, r)
    }

    pub fn first(&self, root: u32) -> Option<u32> {
        if root == NIL {
            return None;
        }
        let mut x = root;
        while self.nodes[x as usize].left != NIL {
            x = self.nodes[x as usize].left;
        }
        Some(x)
    }

    pub fn last(&self, root: u32) -> Option<u32> {
        if root == NIL {
            return None;
        }
        let mut x = root;
        while self.nodes[x as usize].right != NIL {
            x = self.nodes[x as usize].right;
        }
        Some(x)
    }

    pub fn next(&self, x: u32) -> Option<u32> {
        let r = self.nodes[x as usize].right;
        if r != NIL {
            return self.first(r);
        }
        let mut cur = x;
        let mut p = self.nodes[x as usize].parent;
        while p != NIL && self.nodes[p as usize].right == cur {
            cur = p;
            p = self.nodes[p as usize].parent;
        }
        (p != NIL).then_some(p)
    }

    pub fn prev(&self, x: u32) -> Option<u32> {
        let l = self.nodes[x as usize].left;
        if l != NIL {
            return self.last(l);
        }
        let mut cur = x;
        let mut p = self.nodes[x as usize].parent;
        while p != NIL && self.nodes[p as usize].left == cur {
            cur = p;
            p = self.nodes[p as usize].parent;
        }
        (p != NIL).then_some(p)
    }

    /// In-order contents of the sequence rooted at `root`.
    pub fn iter(&self, root: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        let mut cur = root;
        loop {
            while cur != NIL {
                stack.push(cur);
                cur = self.nodes[cur as usize].left;
            }
            match stack.pop() {
                Some(x) => {
                    out.push(x);
                    cur = self.nodes[x as usize].right;
                }
                None => return out,
            }
        }
    }

    /// Walks down from `root` choosing left while `go_left` says so and
    /// returns the nearest nodes on either side of the search path:
    /// `(last node where we went right, last node where we went left)`.
    pub fn try_search<E>(
        &self,
        root: u32,
        mut go_left: impl FnMut(u32) -> Result<bool, E>,
    ) -> Result<(Option<u32>, Option<u32>), E> {
        let (mut pred, mut succ) = (None, None);
        let mut x = root;
        while x != NIL {
            if go_left(x)? {
                succ = Some(x);
                x = self.nodes[x as usize].left;
            } else {
                pred = Some(x);
                x = self.nodes[x as usize].right;
            }
        }
        Ok((pred, succ))
    }

    #[cfg(test)]
    fn check_heap(&self, root: u32) -> bool {
        self.iter(root).iter().all(|&x| {
            let n = &self.nodes[x as usize];
            [n.left, n.right]
                .iter()
                .all(|&c| c == NIL || (self.nodes[c as usize].prio <= n.prio && self.nodes[c as usize].parent == x))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::vec::Vec;

    fn build(t: &mut Treap, ids: &[u32]) -> u32 {
        ids.iter().fold(NIL, |root, &x| t.concat(root, x))
    }

    #[test]
    fn concat_split_roundtrip() {
        let mut t = Treap::with_nodes(10);
        let root = build(&mut t, &(0..10).collect::<Vec<_>>());
        assert_eq!(t.iter(root), (0..10).collect::<Vec<_>>());
        let (l, r) = t.split_after(4);
        assert_eq!(t.iter(l), (0..5).collect::<Vec<_>>());
        assert_eq!(t.iter(r), (5..10).collect::<Vec<_>>());
        let root = t.concat(l, r);
        let (l, r) = t.split_before(4);
        assert_eq!(t.iter(l), (0..4).collect::<Vec<_>>());
        assert_eq!(t.iter(r), (4..10).collect::<Vec<_>>());
        let _ = root;
    }

    #[derive(Debug, Clone)]
    enum Op {
        InsertAfter(usize),
        InsertFront,
        Remove(usize),
        SplitConcat(usize),
        SplitBy(usize),
    }

    fn op() -> impl Strategy<Value = Op> {
        prop_oneof![
            any::<usize>().prop_map(Op::InsertAfter),
            Just(Op::InsertFront),
            any::<usize>().prop_map(Op::Remove),
            any::<usize>().prop_map(Op::SplitConcat),
            any::<usize>().prop_map(Op::SplitBy),
        ]
    }

    proptest! {
        #[test]
        fn matches_vec_model(ops in proptest::collection::vec(op(), 1..120)) {
            let mut t = Treap::with_nodes(0);
            let mut model: Vec<u32> = Vec::new();
            let mut root = NIL;
            for op in ops {
                match op {
                    Op::InsertAfter(i) if !model.is_empty() => {
                        let at = model[i % model.len()];
                        let x = t.add_node();
                        root = t.insert_after(at, x);
                        let pos = model.iter().position(|&v| v == at).unwrap();
                        model.insert(pos + 1, x);
                    }
                    Op::InsertFront | Op::InsertAfter(_) => {
                        let x = t.add_node();
                        root = t.concat(x, root);
                        model.insert(0, x);
                    }
                    Op::Remove(i) if !model.is_empty() => {
                        let x = model.remove(i % model.len());
                        root = t.remove(x);
                    }
                    Op::SplitConcat(i) if !model.is_empty() => {
                        let x = model[i % model.len()];
                        let (l, r) = t.split_after(x);
                        prop_assert!(t.check_heap(l) && t.check_heap(r));
                        root = t.concat(l, r);
                    }
                    Op::SplitBy(i) if !model.is_empty() => {
                        let k = i % (model.len() + 1);
                        let left: Vec<u32> = model[..k].to_vec();
                        let (l, r) = t.split_by(root, &mut |x| left.contains(&x));
                        prop_assert_eq!(t.iter(l), left);
                        root = t.concat(l, r);
                    }
                    _ => {}
                }
                prop_assert_eq!(t.iter(root), model.clone());
                prop_assert!(t.check_heap(root));
                if let Some(&f) = model.first() {
                    prop_assert_eq!(t.first(root), Some(f));
                    prop_assert_eq!(t.root_of(f), root);
                }
                for w in model.windows(2) {
                    prop_assert_eq!(t.next(w[0]), Some(w[1]));
                    prop_assert_eq!(t.prev(w[1]), Some(w[0]));
                }
            }
        }
    }
}
