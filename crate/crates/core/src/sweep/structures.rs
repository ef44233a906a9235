//! Sweep-line containers: bundle tree, event queue and color trees.
//!
//! Segments are referred to by their index in the sweep's segment list,
//! which is also their node id in the parity forest.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::Point2;
use crate::parity_forest::{ForestError, NodeId, ParityForest};
use crate::treap::{Treap, NIL};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructError {
    #[error("bundles {0:?} and {1:?} are not adjacent")]
    NotAdjacent(BundleId, BundleId),
    #[error("bundle {0:?} does not exist")]
    NoSuchBundle(BundleId),
    #[error("event queue is empty")]
    EmptyQueue,
    #[error("two events at the same point {0:?}")]
    CoincidentEvents(alloc::boxed::Box<Point2>),
    #[error("segment {0} is not in a color tree")]
    NotInTree(u32),
    #[error("segments {0} and {1} are already in one component")]
    SameComponent(u32, u32),
    #[error("components interleave on the sweep line")]
    Interleaved,
    #[error(transparent)]
    Forest(#[from] ForestError),
}

/// Top and bottom segment of one color class within a bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassBounds {
    pub top: u32,
    pub bottom: u32,
}

/// Up to two color classes; the labels are local to the bundle and carry no
/// meaning beyond telling the two classes apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Boundaries {
    pub classes: [Option<ClassBounds>; 2],
}

impl Boundaries {
    pub fn singleton(s: u32) -> Self {
        Boundaries { classes: [Some(ClassBounds { top: s, bottom: s }), None] }
    }

    pub fn from_classes(list: &[ClassBounds]) -> Self {
        let mut b = Boundaries::default();
        for (slot, c) in b.classes.iter_mut().zip(list) {
            *slot = Some(*c);
        }
        b
    }

    pub fn is_empty(&self) -> bool {
        self.classes.iter().all(Option::is_none)
    }

    pub fn present(&self) -> impl Iterator<Item = ClassBounds> + '_ {
        self.classes.iter().flatten().copied()
    }

    pub fn tops(&self) -> impl Iterator<Item = u32> + '_ {
        self.present().map(|c| c.top)
    }

    pub fn bottoms(&self) -> impl Iterator<Item = u32> + '_ {
        self.present().map(|c| c.bottom)
    }

    /// All boundary segments, without duplicates.
    pub fn segments(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.present().flat_map(|c| [c.top, c.bottom]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn contains(&self, s: u32) -> bool {
        self.present().any(|c| c.top == s || c.bottom == s)
    }

    pub fn any_segment(&self) -> Option<u32> {
        self.present().next().map(|c| c.top)
    }

    /// Boundaries of `upper` stacked on top of `lower`. `same_class` tells
    /// whether two segments share a color; classes are paired up with it.
    pub fn stack(upper: &Boundaries, lower: &Boundaries, mut same_class: impl FnMut(u32, u32) -> bool) -> Boundaries {
        let mut out: Vec<ClassBounds> = Vec::with_capacity(2);
        let mut used = [false; 2];
        for u in upper.present() {
            let hit = lower
                .classes
                .iter()
                .enumerate()
                .find(|(i, l)| !used[*i] && l.map_or(false, |l| same_class(u.top, l.top)));
            match hit {
                Some((i, l)) => {
                    used[i] = true;
                    out.push(ClassBounds { top: u.top, bottom: l.unwrap().bottom });
                }
                None => out.push(u),
            }
        }
        for (i, l) in lower.classes.iter().enumerate() {
            if let (false, Some(l)) = (used[i], l) {
                out.push(*l);
            }
        }
        debug_assert!(out.len() <= 2, "more than two color classes in a bundle");
        Boundaries::from_classes(&out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BundleId(pub u32);

#[derive(Debug, Clone, Default)]
pub struct Bundle {
    pub bounds: Boundaries,
    /// Crossing events currently queued for the gap below this bundle.
    pub crossing_events: Vec<Point2>,
    alive: bool,
}

/// Where a query point falls relative to one bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    Inside,
    Below,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside(BundleId),
    Gap { above: Option<BundleId>, below: Option<BundleId> },
}

/// Bundles in top-to-bottom order.
#[derive(Debug, Clone, Default)]
pub struct BundleTree {
    treap: Treap,
    bundles: Vec<Bundle>,
    free: Vec<u32>,
    root: u32,
    boundary_of: Vec<Option<BundleId>>,
    len: usize,
}

impl BundleTree {
    /// An empty tree for segments `0..segments`.
    pub fn new(segments: usize) -> Self {
        BundleTree {
            treap: Treap::with_nodes(0),
            bundles: Vec::new(),
            free: Vec::new(),
            root: NIL,
            boundary_of: vec![None; segments],
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_alive(&self, b: BundleId) -> bool {
        self.bundles.get(b.0 as usize).map_or(false, |x| x.alive)
    }

    pub fn get(&self, b: BundleId) -> &Bundle {
        &self.bundles[b.0 as usize]
    }

    pub fn bounds(&self, b: BundleId) -> &Boundaries {
        &self.bundles[b.0 as usize].bounds
    }

    /// The bundle for which `s` is a boundary segment, if any.
    pub fn bundle_of_boundary(&self, s: u32) -> Option<BundleId> {
        self.boundary_of[s as usize]
    }

    pub fn take_events(&mut self, b: BundleId) -> Vec<Point2> {
        core::mem::take(&mut self.bundles[b.0 as usize].crossing_events)
    }

    pub fn set_events(&mut self, b: BundleId, events: Vec<Point2>) {
        self.bundles[b.0 as usize].crossing_events = events;
    }

    fn check(&self, b: BundleId) -> Result<(), StructError> {
        if self.is_alive(b) {
            Ok(())
        } else {
            Err(StructError::NoSuchBundle(b))
        }
    }

    fn alloc(&mut self, bounds: Boundaries) -> BundleId {
        let id = match self.free.pop() {
            Some(id) => id,
            None => {
                let id = self.treap.add_node();
                self.bundles.push(Bundle::default());
                id
            }
        };
        self.bundles[id as usize] = Bundle { bounds, crossing_events: Vec::new(), alive: true };
        self.mark_boundaries(BundleId(id));
        self.len += 1;
        BundleId(id)
    }

    fn mark_boundaries(&mut self, b: BundleId) {
        for s in self.bundles[b.0 as usize].bounds.segments() {
            self.boundary_of[s as usize] = Some(b);
        }
    }

    fn unmark_boundaries(&mut self, b: BundleId) {
        for s in self.bundles[b.0 as usize].bounds.segments() {
            if self.boundary_of[s as usize] == Some(b) {
                self.boundary_of[s as usize] = None;
            }
        }
    }

    /// Inserts a new bundle right below `above`, or at the top when `None`.
    pub fn insert_after(&mut self, above: Option<BundleId>, bounds: Boundaries) -> Result<BundleId, StructError> {
        if let Some(a) = above {
            self.check(a)?;
        }
        let id = self.alloc(bounds);
        self.root = match above {
            Some(a) => self.treap.insert_after(a.0, id.0),
            None => self.treap.concat(id.0, self.root),
        };
        Ok(id)
    }

    pub fn remove(&mut self, b: BundleId) -> Result<Bundle, StructError> {
        self.check(b)?;
        self.unmark_boundaries(b);
        self.root = self.treap.remove(b.0);
        if self.root != NIL {
            self.root = self.treap.root_of(self.root);
        }
        self.free.push(b.0);
        self.len -= 1;
        let out = core::mem::take(&mut self.bundles[b.0 as usize]);
        Ok(out)
    }

    /// Replaces `b` by two adjacent bundles; the upper one keeps the id.
    pub fn split(&mut self, b: BundleId, upper: Boundaries, lower: Boundaries) -> Result<(BundleId, BundleId), StructError> {
        self.check(b)?;
        self.set_bounds(b, upper)?;
        let low = self.insert_after(Some(b), lower)?;
        Ok((b, low))
    }

    /// Merges two adjacent bundles into the upper one.
    pub fn merge(
        &mut self,
        upper: BundleId,
        lower: BundleId,
        same_class: impl FnMut(u32, u32) -> bool,
    ) -> Result<BundleId, StructError> {
        self.check(upper)?;
        self.check(lower)?;
        if self.next(upper) != Some(lower) {
            return Err(StructError::NotAdjacent(upper, lower));
        }
        let combined = Boundaries::stack(self.bounds(upper), self.bounds(lower), same_class);
        self.remove(lower)?;
        self.set_bounds(upper, combined)?;
        Ok(upper)
    }

    pub fn set_bounds(&mut self, b: BundleId, bounds: Boundaries) -> Result<(), StructError> {
        self.check(b)?;
        self.unmark_boundaries(b);
        self.bundles[b.0 as usize].bounds = bounds;
        self.mark_boundaries(b);
        Ok(())
    }

    pub fn next(&self, b: BundleId) -> Option<BundleId> {
        self.treap.next(b.0).map(BundleId)
    }

    pub fn prev(&self, b: BundleId) -> Option<BundleId> {
        self.treap.prev(b.0).map(BundleId)
    }

    pub fn first(&self) -> Option<BundleId> {
        self.treap.first(self.root).map(BundleId)
    }

    /// Bundles top to bottom.
    pub fn in_order(&self) -> Vec<BundleId> {
        self.treap.iter(self.root).into_iter().map(BundleId).collect()
    }

    /// Binary search with a caller-supplied side test.
    pub fn locate<E>(&self, mut side: impl FnMut(&Bundle) -> Result<Side, E>) -> Result<Location, E> {
        let mut above = None;
        let mut below = None;
        let mut x = self.root;
        while x != NIL {
            match side(&self.bundles[x as usize])? {
                Side::Inside => return Ok(Location::Inside(BundleId(x))),
                Side::Above => {
                    below = Some(BundleId(x));
                    x = self.treap.left(x);
                }
                Side::Below => {
                    above = Some(BundleId(x));
                    x = self.treap.right(x);
                }
            }
        }
        Ok(Location::Gap { above, below })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    Left(u32),
    Right(u32),
    /// Crossing between a bottom boundary of one bundle and a top boundary
    /// of the bundle right below it.
    Crossing { upper: u32, lower: u32 },
}

/// Events keyed by their point in lexicographic order.
#[derive(Debug, Clone, Default)]
pub struct EventQueue {
    map: BTreeMap<Point2, EventKind>,
}

impl EventQueue {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn push(&mut self, at: Point2, kind: EventKind) -> Result<(), StructError> {
        if self.map.contains_key(&at) {
            return Err(StructError::CoincidentEvents(at.into()));
        }
        self.map.insert(at, kind);
        Ok(())
    }

    pub fn pop_min(&mut self) -> Result<(Point2, EventKind), StructError> {
        self.map.pop_first().ok_or(StructError::EmptyQueue)
    }

    /// Removes the crossing event at `at`, if one is queued there.
    pub fn remove_crossing(&mut self, at: &Point2) -> Option<EventKind> {
        match self.map.get(at) {
            Some(EventKind::Crossing { .. }) => self.map.remove(at),
            _ => None,
        }
    }

    pub fn crossings(&self) -> impl Iterator<Item = (&Point2, u32, u32)> + '_ {
        self.map.iter().filter_map(|(p, k)| match k {
            EventKind::Crossing { upper, lower } => Some((p, *upper, *lower)),
            _ => None,
        })
    }
}

/// Result of merging the color trees of two components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeOutcome {
    /// First newly adjacent same-class pair that intersects.
    pub violation: Option<(u32, u32)>,
    /// Segments that may have gained a neighbor from the other component.
    pub touched: Vec<u32>,
}

/// One treap node per segment; per forest root, two sequence roots indexed
/// by parity relative to that root.
#[derive(Debug, Clone)]
pub struct ColorTrees {
    treap: Treap,
    roots: Vec<[u32; 2]>,
}

impl ColorTrees {
    pub fn new(segments: usize) -> Self {
        ColorTrees { treap: Treap::with_nodes(segments), roots: vec![[NIL, NIL]; segments] }
    }

    /// Starts a singleton tree for `s`, which must be alone in its forest tree.
    pub fn create(&mut self, forest: &mut ParityForest, s: u32) -> Result<(), StructError> {
        let r = forest.root(NodeId(s))?;
        self.treap.reset_node(s);
        self.roots[r.index()] = [NIL, NIL];
        let p = forest.parity_of(NodeId(s))?.bit() as usize;
        self.roots[r.index()][p] = s;
        Ok(())
    }

    fn slot(&self, forest: &mut ParityForest, s: u32) -> Result<(usize, usize), StructError> {
        let r = forest.root(NodeId(s))?.index();
        let p = forest.parity_of(NodeId(s))?.bit() as usize;
        Ok((r, p))
    }

    /// Sequence root for class `parity` of the component rooted at `root`.
    pub fn tree(&self, root: NodeId, parity: usize) -> u32 {
        self.roots[root.index()][parity]
    }

    /// Class sequence containing `s` (top to bottom).
    pub fn sequence_of(&self, forest: &mut ParityForest, s: u32) -> Result<Vec<u32>, StructError> {
        let (r, p) = self.slot(forest, s)?;
        Ok(self.treap.iter(self.roots[r][p]))
    }

    pub fn sequence(&self, root: NodeId, parity: usize) -> Vec<u32> {
        self.treap.iter(self.roots[root.index()][parity])
    }

    pub fn next(&self, s: u32) -> Option<u32> {
        self.treap.next(s)
    }

    pub fn prev(&self, s: u32) -> Option<u32> {
        self.treap.prev(s)
    }

    /// Splits the class of `root`/`parity` around a query point. `point_above`
    /// says whether the point lies above a member. Returns the nearest member
    /// above and below the point.
    pub fn search<E>(
        &self,
        root: NodeId,
        parity: usize,
        point_above: impl FnMut(u32) -> Result<bool, E>,
    ) -> Result<(Option<u32>, Option<u32>), E> {
        self.treap.try_search(self.roots[root.index()][parity], point_above)
    }

    /// Removes `s` unless its two neighbors would become an intersecting
    /// adjacent pair, in which case that pair is returned and nothing changes.
    pub fn remove(
        &mut self,
        forest: &mut ParityForest,
        s: u32,
        mut intersects: impl FnMut(u32, u32) -> bool,
    ) -> Result<Option<(u32, u32)>, StructError> {
        let (r, p) = self.slot(forest, s)?;
        if self.roots[r][p] == NIL || self.treap.root_of(s) != self.roots[r][p] {
            return Err(StructError::NotInTree(s));
        }
        if let (Some(a), Some(b)) = (self.treap.prev(s), self.treap.next(s)) {
            if intersects(a, b) {
                return Ok(Some((a, b)));
            }
        }
        self.roots[r][p] = self.treap.remove(s);
        Ok(None)
    }

    /// Merges the components of the crossing segments `s` and `t`, linking
    /// them in `forest`. `above(a, b)` orders members of both components on
    /// the sweep line just before the crossing.
    pub fn merge(
        &mut self,
        forest: &mut ParityForest,
        s: u32,
        t: u32,
        mut above: impl FnMut(u32, u32) -> bool,
        mut intersects: impl FnMut(u32, u32) -> bool,
    ) -> Result<MergeOutcome, StructError> {
        let r1 = forest.root(NodeId(s))?;
        let r2 = forest.root(NodeId(t))?;
        if r1 == r2 {
            return Err(StructError::SameComponent(s, t));
        }
        let t1 = self.roots[r1.index()];
        let t2 = self.roots[r2.index()];
        let (top1, bot1) = self.extremes(t1, &mut above).ok_or(StructError::NotInTree(s))?;
        let (top2, bot2) = self.extremes(t2, &mut above).ok_or(StructError::NotInTree(t))?;

        // Pieces per component-local class, in top-to-bottom order.
        let mut pieces: [Vec<(u32, usize, usize)>; 2] = [Vec::new(), Vec::new()];
        let push_whole = |pieces: &mut [Vec<(u32, usize, usize)>; 2], comp: usize, trees: [u32; 2]| {
            for (k, &root) in trees.iter().enumerate() {
                pieces[k].push((root, comp, k));
            }
        };
        if above(bot1, top2) {
            push_whole(&mut pieces, 0, t1);
            push_whole(&mut pieces, 1, t2);
        } else if above(bot2, top1) {
            push_whole(&mut pieces, 1, t2);
            push_whole(&mut pieces, 0, t1);
        } else if above(top1, top2) && above(bot2, bot1) {
            self.nest(&mut pieces, t1, 0, t2, 1, top2, &mut above);
        } else if above(top2, top1) && above(bot1, bot2) {
            self.nest(&mut pieces, t2, 1, t1, 0, top1, &mut above);
        } else {
            return Err(StructError::Interleaved);
        }

        forest.link(NodeId(s), NodeId(t))?;
        let flip = [forest.parity_of(r1)?.bit() as usize, forest.parity_of(r2)?.bit() as usize];
        let root = forest.root(NodeId(s))?;

        let mut merged = [NIL, NIL];
        let mut violation = None;
        let mut touched = vec![s, t];
        // Pieces were pushed grouped by local class; regroup by merged class
        // while keeping the vertical order.
        let mut by_class: [Vec<u32>; 2] = [Vec::new(), Vec::new()];
        let mut order: Vec<(u32, usize, usize)> = Vec::new();
        let max_len = pieces[0].len().max(pieces[1].len());
        for i in 0..max_len {
            for k in 0..2 {
                if let Some(&p) = pieces[k].get(i) {
                    order.push(p);
                }
            }
        }
        for (piece, comp, k) in order {
            if piece != NIL {
                by_class[k ^ flip[comp]].push(piece);
            }
        }
        for c in 0..2 {
            let mut acc = NIL;
            for &piece in &by_class[c] {
                let first = self.treap.first(piece).expect("non-empty piece");
                let last = self.treap.last(piece).expect("non-empty piece");
                touched.push(first);
                touched.push(last);
                if let Some(prev_last) = self.treap.last(acc) {
                    if violation.is_none() && intersects(prev_last, first) {
                        violation = Some((prev_last, first));
                    }
                }
                acc = self.treap.concat(acc, piece);
            }
            merged[c] = acc;
        }
        self.roots[root.index()] = merged;
        touched.sort_unstable();
        touched.dedup();
        Ok(MergeOutcome { violation, touched })
    }

    fn extremes(&self, trees: [u32; 2], above: &mut impl FnMut(u32, u32) -> bool) -> Option<(u32, u32)> {
        let firsts: Vec<u32> = trees.iter().filter_map(|&r| self.treap.first(r)).collect();
        let lasts: Vec<u32> = trees.iter().filter_map(|&r| self.treap.last(r)).collect();
        let top = firsts.iter().copied().reduce(|a, b| if above(a, b) { a } else { b })?;
        let bottom = lasts.iter().copied().reduce(|a, b| if above(a, b) { b } else { a })?;
        Some((top, bottom))
    }

    /// Outer component split around the inner one: upper part, inner, lower part.
    #[allow(clippy::too_many_arguments)]
    fn nest(
        &mut self,
        pieces: &mut [Vec<(u32, usize, usize)>; 2],
        outer: [u32; 2],
        outer_comp: usize,
        inner: [u32; 2],
        inner_comp: usize,
        inner_top: u32,
        above: &mut impl FnMut(u32, u32) -> bool,
    ) {
        let mut lows = [NIL, NIL];
        for k in 0..2 {
            let (up, low) = self.treap.split_by(outer[k], &mut |x| above(x, inner_top));
            pieces[k].push((up, outer_comp, k));
            lows[k] = low;
        }
        for k in 0..2 {
            pieces[k].push((inner[k], inner_comp, k));
        }
        for k in 0..2 {
            pieces[k].push((lows[k], outer_comp, k));
        }
    }
}
