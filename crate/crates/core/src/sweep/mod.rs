//! Plane sweep over segments deciding bipartiteness in `O(n log n)`.
//!
//! The sweep line moves over event points in lexicographic `(x, y)` order,
//! which behaves like a vertical line tilted by an infinitesimal amount: of
//! two events with equal `x`, the lower one comes first. Between events the
//! state describes the part of the arrangement left of the line: its
//! components (parity forest), the runs of each component along the line
//! (bundles) and each color class of each component in line order (color
//! trees). Only crossings between boundary segments of adjacent bundles are
//! ever queued.

pub mod structures;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::geom::{crossing_point, orientation, segments_intersect, y_at, Mode, Point2, Segment};
use crate::parity_forest::{ForestError, NodeId, ParityForest};
use crate::verdict::{Color, Verdict};
use structures::{
    Boundaries, BundleId, BundleTree, ClassBounds, ColorTrees, EventKind, EventQueue, Location, Side, StructError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    #[error("input is not in general position: {0}")]
    Degenerate(String),
    #[error("duplicate segment id {0}")]
    DuplicateId(u64),
    #[error("processed {events} events for {n} segments")]
    EventBound { events: usize, n: usize },
    #[error("sweep invariant failed: {0}")]
    Internal(String),
    #[error("state check failed after event at {at:?}: {what}")]
    Validation { at: alloc::boxed::Box<Point2>, what: String },
    #[error("the input is not bipartite, so no components were computed")]
    NotBipartite,
}

impl From<StructError> for SweepError {
    fn from(e: StructError) -> Self {
        match e {
            StructError::CoincidentEvents(p) => SweepError::Degenerate(format!("two events at {p:?}")),
            other => SweepError::Internal(format!("{other}")),
        }
    }
}

impl From<ForestError> for SweepError {
    fn from(e: ForestError) -> Self {
        SweepError::Internal(format!("{e}"))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Recompute the expected state from scratch after every event and
    /// compare. Quadratic; for tests.
    pub validate_each_event: bool,
}

/// How to order two segments that meet exactly at the event point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tie {
    Before,
    After,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Unseen,
    Active,
    Done,
}

/// Outcome of a complete run.
#[derive(Debug, Clone)]
pub struct SweepRun {
    pub verdict: Verdict,
    pub events_processed: usize,
    pub crossing_events: usize,
    forest: ParityForest,
    ids: Vec<u64>,
}

impl SweepRun {
    /// Connected components as sorted id lists; only for bipartite runs.
    pub fn components(&mut self) -> Result<Vec<Vec<u64>>, SweepError> {
        if !self.verdict.is_bipartite() {
            return Err(SweepError::NotBipartite);
        }
        let mut groups: BTreeMap<u32, Vec<u64>> = BTreeMap::new();
        for (i, &id) in self.ids.iter().enumerate() {
            let r = self.forest.root(NodeId(i as u32))?;
            groups.entry(r.0).or_default().push(id);
        }
        let mut out: Vec<Vec<u64>> = groups
            .into_values()
            .map(|mut g| {
                g.sort_unstable();
                g
            })
            .collect();
        out.sort();
        Ok(out)
    }

    /// Spanning forest edges as id pairs; only for bipartite runs.
    pub fn spanning_edges(&self) -> Result<Vec<(u64, u64)>, SweepError> {
        if !self.verdict.is_bipartite() {
            return Err(SweepError::NotBipartite);
        }
        Ok(self.forest.edges().iter().map(|(a, b)| (self.ids[a.index()], self.ids[b.index()])).collect())
    }
}

pub struct SegmentSweep {
    segs: Vec<Segment>,
    mode: Mode,
    queue: EventQueue,
    bundles: BundleTree,
    forest: ParityForest,
    colors: ColorTrees,
    status: Vec<Status>,
    pos: Point2,
    events: usize,
    crossings: usize,
    dirty: Vec<BundleId>,
    opts: SweepOptions,
}

/// Runs the sweep with default options.
pub fn sweep_bipartiteness(segs: &[Segment], mode: Mode) -> Result<Verdict, SweepError> {
    Ok(SegmentSweep::new(segs, mode, SweepOptions::default())?.run()?.verdict)
}

fn parity_bit(forest: &mut ParityForest, s: u32) -> u8 {
    forest.parity_of(NodeId(s)).map(|p| p.bit()).unwrap_or(u8::MAX)
}

impl SegmentSweep {
    pub fn new(input: &[Segment], mode: Mode, opts: SweepOptions) -> Result<Self, SweepError> {
        let n = input.len();
        let mut seen = BTreeSet::new();
        let mut segs = Vec::with_capacity(n);
        for s in input {
            if !seen.insert(s.id()) {
                return Err(SweepError::DuplicateId(s.id()));
            }
            if s.is_vertical() {
                return Err(SweepError::Degenerate(format!("segment {} is vertical", s.id())));
            }
            segs.push(s.normalized());
        }
        let mut queue = EventQueue::new();
        for (i, s) in segs.iter().enumerate() {
            queue.push(s.p().clone(), EventKind::Left(i as u32))?;
            queue.push(s.q().clone(), EventKind::Right(i as u32))?;
        }
        Ok(SegmentSweep {
            mode,
            queue,
            bundles: BundleTree::new(n),
            forest: ParityForest::with_nodes(n),
            colors: ColorTrees::new(n),
            status: vec![Status::Unseen; n],
            pos: Point2::default(),
            events: 0,
            crossings: 0,
            dirty: Vec::new(),
            opts,
            segs,
        })
    }

    pub fn run(mut self) -> Result<SweepRun, SweepError> {
        let n = self.segs.len();
        while !self.queue.is_empty() {
            let (at, kind) = self.queue.pop_min()?;
            self.events += 1;
            if self.events > 3 * n - 1 {
                return Err(SweepError::EventBound { events: self.events, n });
            }
            self.pos = at;
            let found = match kind {
                EventKind::Left(s) => {
                    self.left_endpoint(s)?;
                    None
                }
                EventKind::Right(s) => self.right_endpoint(s)?,
                EventKind::Crossing { upper, lower } => {
                    self.crossings += 1;
                    self.crossing(upper, lower)?
                }
            };
            if let Some((a, b)) = found {
                let verdict = self.odd_cycle(a, b)?;
                return Ok(self.finish(verdict));
            }
            self.flush()?;
            if self.opts.validate_each_event {
                self.validate()?;
            }
        }
        let mut colors = BTreeMap::new();
        for i in 0..n {
            colors.insert(self.segs[i].id(), Color::from_parity_bit(parity_bit(&mut self.forest, i as u32)));
        }
        Ok(self.finish(Verdict::Bipartite { colors }))
    }

    fn finish(self, verdict: Verdict) -> SweepRun {
        SweepRun {
            verdict,
            events_processed: self.events,
            crossing_events: self.crossings,
            ids: self.segs.iter().map(|s| s.id()).collect(),
            forest: self.forest,
        }
    }

    fn odd_cycle(&mut self, a: u32, b: u32) -> Result<Verdict, SweepError> {
        let path = self.forest.forest_path(NodeId(a), NodeId(b))?;
        if path.len() % 2 == 0 {
            return Err(SweepError::Internal(format!("violating pair {a}, {b} has opposite parities")));
        }
        Ok(Verdict::OddCycle { cycle: path.into_iter().map(|x| self.segs[x.index()].id()).collect() })
    }

    fn seg(&self, s: u32) -> &Segment {
        &self.segs[s as usize]
    }

    fn intersects(&self, a: u32, b: u32) -> bool {
        segments_intersect(self.seg(a), self.seg(b), self.mode)
    }

    /// Vertical order of two active segments at the current sweep position;
    /// `Less` means `a` is above `b`.
    fn order(&self, a: u32, b: u32, tie: Tie) -> Ordering {
        order_at(&self.segs, &self.pos, a, b, tie)
    }

    /// Whether the current event point lies above segment `s`.
    fn point_above(&self, s: u32) -> Result<bool, SweepError> {
        let seg = self.seg(s);
        match orientation(seg.p(), seg.q(), &self.pos).sign() {
            1 => Ok(true),
            -1 => Ok(false),
            _ => Err(SweepError::Degenerate(format!("event {:?} lies on segment {}", self.pos, seg.id()))),
        }
    }

    fn same_component(&mut self, a: BundleId, b: BundleId) -> Result<bool, SweepError> {
        let sa = self.bundles.bounds(a).any_segment().ok_or_else(|| SweepError::Internal("empty bundle".into()))?;
        let sb = self.bundles.bounds(b).any_segment().ok_or_else(|| SweepError::Internal("empty bundle".into()))?;
        Ok(self.forest.same_tree(NodeId(sa), NodeId(sb))?)
    }

    fn left_endpoint(&mut self, s: u32) -> Result<(), SweepError> {
        let loc = {
            let this = &*self;
            self.bundles.locate(|b| {
                let mut above_all = true;
                for t in b.bounds.tops() {
                    above_all &= this.point_above(t)?;
                }
                if above_all {
                    return Ok::<Side, SweepError>(Side::Above);
                }
                let mut below_all = true;
                for t in b.bounds.bottoms() {
                    below_all &= !this.point_above(t)?;
                }
                Ok(if below_all { Side::Below } else { Side::Inside })
            })?
        };
        let z_above = match loc {
            Location::Gap { above, .. } => above,
            Location::Inside(b) => {
                let bounds = *self.bundles.bounds(b);
                let mut up = Vec::new();
                let mut low = Vec::new();
                for cb in bounds.present() {
                    let root = self.forest.root(NodeId(cb.top))?;
                    let parity = parity_bit(&mut self.forest, cb.top) as usize;
                    let top_above = !self.point_above(cb.top)?;
                    let bottom_below = self.point_above(cb.bottom)?;
                    let (pred, succ) = {
                        let this = &*self;
                        self.colors.search(root, parity, |x| this.point_above(x))?
                    };
                    if top_above {
                        let bottom = pred.ok_or_else(|| SweepError::Internal("no member above split".into()))?;
                        up.push(ClassBounds { top: cb.top, bottom });
                    }
                    if bottom_below {
                        let top = succ.ok_or_else(|| SweepError::Internal("no member below split".into()))?;
                        low.push(ClassBounds { top, bottom: cb.bottom });
                    }
                }
                if up.is_empty() || low.is_empty() {
                    return Err(SweepError::Internal(format!("split of bundle {b:?} leaves an empty side")));
                }
                let (u, l) = self.bundles.split(b, Boundaries::from_classes(&up), Boundaries::from_classes(&low))?;
                self.dirty.push(u);
                self.dirty.push(l);
                Some(u)
            }
        };
        let z = self.bundles.insert_after(z_above, Boundaries::singleton(s))?;
        self.dirty.push(z);
        self.colors.create(&mut self.forest, s)?;
        self.status[s as usize] = Status::Active;
        Ok(())
    }

    fn right_endpoint(&mut self, s: u32) -> Result<Option<(u32, u32)>, SweepError> {
        self.status[s as usize] = Status::Done;
        if let Some(b) = self.bundles.bundle_of_boundary(s) {
            let bounds = *self.bundles.bounds(b);
            if bounds.segments() == [s] {
                let prev = self.bundles.prev(b);
                let next = self.bundles.next(b);
                self.drop_gap(b);
                self.bundles.remove(b)?;
                if let Some(p) = prev {
                    self.dirty.push(p);
                }
                if let (Some(p), Some(n)) = (prev, next) {
                    if self.same_component(p, n)? {
                        self.merge_bundles(p, n)?;
                    }
                }
            } else {
                let mut classes = Vec::new();
                for cb in bounds.present() {
                    let missing = || SweepError::Internal(format!("no replacement boundary for {s}"));
                    match (cb.top == s, cb.bottom == s) {
                        (true, true) => {}
                        (true, false) => {
                            classes.push(ClassBounds { top: self.colors.next(s).ok_or_else(missing)?, bottom: cb.bottom })
                        }
                        (false, true) => {
                            classes.push(ClassBounds { top: cb.top, bottom: self.colors.prev(s).ok_or_else(missing)? })
                        }
                        (false, false) => classes.push(cb),
                    }
                }
                self.bundles.set_bounds(b, Boundaries::from_classes(&classes))?;
                self.dirty.push(b);
            }
        }
        let segs = &self.segs;
        let mode = self.mode;
        let hit = |a: u32, c: u32| segments_intersect(&segs[a as usize], &segs[c as usize], mode);
        Ok(self.colors.remove(&mut self.forest, s, hit)?)
    }

    fn crossing(&mut self, u: u32, v: u32) -> Result<Option<(u32, u32)>, SweepError> {
        let bx = self.bundles.bundle_of_boundary(u);
        let by = self.bundles.bundle_of_boundary(v);
        let (bx, by) = match (bx, by) {
            (Some(x), Some(y))
                if self.bundles.next(x) == Some(y)
                    && self.bundles.bounds(x).bottoms().any(|b| b == u)
                    && self.bundles.bounds(y).tops().any(|t| t == v) =>
            {
                (x, y)
            }
            _ => return Err(SweepError::Internal(format!("stale crossing event {u}/{v}"))),
        };
        let outcome = {
            let segs = &self.segs;
            let pos = &self.pos;
            let mode = self.mode;
            self.colors.merge(
                &mut self.forest,
                u,
                v,
                |a, b| order_at(segs, pos, a, b, Tie::Before) == Ordering::Less,
                |a, b| segments_intersect(&segs[a as usize], &segs[b as usize], mode),
            )?
        };
        if let Some(pair) = outcome.violation {
            return Ok(Some(pair));
        }
        let m = self.merge_bundles(bx, by)?;
        self.merge_around(m)?;
        for n in outcome.touched {
            if let Some(b) = self.bundles.bundle_of_boundary(n) {
                self.merge_around(b)?;
            }
        }
        Ok(None)
    }

    fn merge_bundles(&mut self, upper: BundleId, lower: BundleId) -> Result<BundleId, SweepError> {
        self.drop_gap(lower);
        let forest = &mut self.forest;
        let m = self.bundles.merge(upper, lower, |a, b| parity_bit(forest, a) == parity_bit(forest, b))?;
        self.dirty.push(m);
        Ok(m)
    }

    /// Merges `b` with neighbors of the same component until none is left.
    fn merge_around(&mut self, mut b: BundleId) -> Result<(), SweepError> {
        while let Some(p) = self.bundles.prev(b) {
            if !self.same_component(p, b)? {
                break;
            }
            b = self.merge_bundles(p, b)?;
        }
        while let Some(n) = self.bundles.next(b) {
            if !self.same_component(b, n)? {
                break;
            }
            b = self.merge_bundles(b, n)?;
        }
        Ok(())
    }

    fn drop_gap(&mut self, b: BundleId) {
        for p in self.bundles.take_events(b) {
            self.queue.remove_crossing(&p);
        }
    }

    /// Recomputes the queued crossings for the gap right below `b`.
    fn refresh_gap(&mut self, b: BundleId) -> Result<(), SweepError> {
        if !self.bundles.is_alive(b) {
            return Ok(());
        }
        self.drop_gap(b);
        let Some(next) = self.bundles.next(b) else {
            return Ok(());
        };
        let bottoms: Vec<u32> = self.bundles.bounds(b).bottoms().collect();
        let tops: Vec<u32> = self.bundles.bounds(next).tops().collect();
        let mut events = Vec::new();
        for &u in &bottoms {
            for &v in &tops {
                let Some(p) = crossing_point(self.seg(u), self.seg(v)) else {
                    continue;
                };
                match p.cmp(&self.pos) {
                    Ordering::Greater => {
                        self.queue.push(p.clone(), EventKind::Crossing { upper: u, lower: v })?;
                        events.push(p);
                    }
                    Ordering::Equal => {
                        return Err(SweepError::Degenerate(format!("three segments meet at {p:?}")));
                    }
                    Ordering::Less => {}
                }
            }
        }
        self.bundles.set_events(b, events);
        Ok(())
    }

    fn flush(&mut self) -> Result<(), SweepError> {
        let mut todo = Vec::new();
        for d in core::mem::take(&mut self.dirty) {
            if self.bundles.is_alive(d) {
                todo.push(d);
                if let Some(p) = self.bundles.prev(d) {
                    todo.push(p);
                }
            }
        }
        todo.sort_unstable();
        todo.dedup();
        // Drop first: a split moves a gap's crossings to a different bundle.
        for &b in &todo {
            self.drop_gap(b);
        }
        for b in todo {
            self.refresh_gap(b)?;
        }
        Ok(())
    }

    /// Rebuilds the expected state from the active segments and compares.
    fn validate(&mut self) -> Result<(), SweepError> {
        let fail = |what: String| SweepError::Validation { at: self.pos.clone().into(), what };
        let mut active: Vec<u32> =
            (0..self.segs.len() as u32).filter(|&s| self.status[s as usize] == Status::Active).collect();
        active.sort_by(|&a, &b| self.order(a, b, Tie::After));
        let comp: Vec<u32> = active.iter().map(|&s| self.forest.root(NodeId(s)).map(|r| r.0)).collect::<Result<_, _>>()?;
        let par: Vec<u8> = active.iter().map(|&s| parity_bit(&mut self.forest, s)).collect();

        // Runs of one component are the bundles.
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for i in 0..active.len() {
            if i == 0 || comp[i] != comp[i - 1] {
                runs.push((i, i + 1));
            } else {
                runs.last_mut().unwrap().1 = i + 1;
            }
        }
        let order = self.bundles.in_order();
        if order.len() != runs.len() {
            return Err(fail(format!("{} bundles, expected {}", order.len(), runs.len())));
        }
        let mut expected_boundary = vec![None; self.segs.len()];
        let mut run_bounds = Vec::new();
        for (k, &(lo, hi)) in runs.iter().enumerate() {
            let mut classes: Vec<ClassBounds> = Vec::new();
            for p in 0..2u8 {
                let members: Vec<u32> = (lo..hi).filter(|&i| par[i] == p).map(|i| active[i]).collect();
                if let (Some(&top), Some(&bottom)) = (members.first(), members.last()) {
                    classes.push(ClassBounds { top, bottom });
                }
            }
            let mut want: Vec<(u32, u32)> = classes.iter().map(|c| (c.top, c.bottom)).collect();
            let mut got: Vec<(u32, u32)> = self.bundles.bounds(order[k]).present().map(|c| (c.top, c.bottom)).collect();
            want.sort_unstable();
            got.sort_unstable();
            if want != got {
                return Err(fail(format!("bundle {k} bounds {got:?}, expected {want:?}")));
            }
            for c in &classes {
                expected_boundary[c.top as usize] = Some(order[k]);
                expected_boundary[c.bottom as usize] = Some(order[k]);
            }
            run_bounds.push(classes);
        }
        for s in 0..self.segs.len() as u32 {
            if self.bundles.bundle_of_boundary(s) != expected_boundary[s as usize] {
                return Err(fail(format!("boundary record of segment {s} is stale")));
            }
        }

        // Queued crossings are exactly the future crossings across gaps.
        let mut want: Vec<(Point2, u32, u32)> = Vec::new();
        for k in 0..run_bounds.len().saturating_sub(1) {
            for u in run_bounds[k].iter().map(|c| c.bottom) {
                for v in run_bounds[k + 1].iter().map(|c| c.top) {
                    if let Some(p) = crossing_point(self.seg(u), self.seg(v)) {
                        if p > self.pos {
                            want.push((p, u, v));
                        }
                    }
                }
            }
        }
        let mut got: Vec<(Point2, u32, u32)> = self.queue.crossings().map(|(p, u, v)| (p.clone(), u, v)).collect();
        want.sort();
        got.sort();
        if want != got {
            return Err(fail(format!("queued crossings {got:?}, expected {want:?}")));
        }

        // Color trees hold exactly the active members of each class in order.
        let mut classes: BTreeMap<(u32, u8), Vec<u32>> = BTreeMap::new();
        for i in 0..active.len() {
            classes.entry((comp[i], par[i])).or_default().push(active[i]);
        }
        let mut roots: BTreeSet<u32> = BTreeSet::new();
        for s in 0..self.segs.len() as u32 {
            if self.status[s as usize] != Status::Unseen {
                roots.insert(self.forest.root(NodeId(s))?.0);
            }
        }
        for &r in &roots {
            for p in 0..2u8 {
                let seq = self.colors.sequence(NodeId(r), p as usize);
                let want = classes.get(&(r, p)).cloned().unwrap_or_default();
                if seq != want {
                    return Err(fail(format!("class {p} of component {r} is {seq:?}, expected {want:?}")));
                }
                for w in seq.windows(2) {
                    if self.intersects(w[0], w[1]) {
                        return Err(fail(format!("adjacent same-class segments {} and {} intersect", w[0], w[1])));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Vertical order at `pos` of two segments crossing the sweep line there.
///
/// Segments meeting the line at the same height are ordered by slope: just
/// after the meeting point if it is below the event point (already swept),
/// just before it if above, and by `tie` at the event point itself.
fn order_at(segs: &[Segment], pos: &Point2, a: u32, b: u32, tie: Tie) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let (sa, sb) = (&segs[a as usize], &segs[b as usize]);
    let ya = y_at(sa, &pos.x);
    let yb = y_at(sb, &pos.x);
    match yb.cmp(&ya) {
        Ordering::Equal => {}
        other => return other,
    }
    let rule = match ya.cmp(&pos.y) {
        Ordering::Less => Tie::After,
        Ordering::Greater => Tie::Before,
        Ordering::Equal => tie,
    };
    let slope = |s: &Segment| (&s.q().y - &s.p().y, &s.q().x - &s.p().x);
    let (dya, dxa) = slope(sa);
    let (dyb, dxb) = slope(sb);
    // Sign of slope(a) - slope(b); dx is positive for normalized segments.
    let by_slope = (&dya * &dxb).cmp(&(&dyb * &dxa));
    let ord = match rule {
        Tie::After => by_slope.reverse(),
        Tie::Before => by_slope,
    };
    ord.then(a.cmp(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{bfs_bipartiteness, IntersectionGraph};
    use crate::scalar::sc;

    fn seg(id: u64, a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::from_ints(id, a.0, a.1, b.0, b.1).unwrap()
    }

    fn run(segs: &[Segment]) -> SweepRun {
        SegmentSweep::new(segs, Mode::Closed, SweepOptions { validate_each_event: true }).unwrap().run().unwrap()
    }

    #[test]
    fn single_crossing_two_colors() {
        let segs = [seg(0, (0, 0), (2, 2)), seg(1, (0, 2), (2, 0))];
        let r = run(&segs);
        match &r.verdict {
            Verdict::Bipartite { colors } => assert_ne!(colors[&0], colors[&1]),
            v => panic!("{v:?}"),
        }
        assert!(r.events_processed <= 5);
    }

    #[test]
    fn triangle_gives_three_cycle() {
        let segs = [
            seg(0, (0, 0), (6, 2)),
            seg(1, (0, 3), (6, 1)),
            Segment::new(2, Point2::new(sc("2.9"), sc("-1")), Point2::new(sc("3.1"), sc("3"))).unwrap(),
        ];
        let r = run(&segs);
        match &r.verdict {
            Verdict::OddCycle { cycle } => assert_eq!(cycle.len(), 3),
            v => panic!("{v:?}"),
        }
        r.verdict.validate(&segs, Mode::Closed).unwrap();
    }

    #[test]
    fn pentagram_gives_five_cycle() {
        // Five chords of a regular-ish pentagon's star; each crosses exactly two others.
        let p = [(0, 100), (95, 31), (59, -81), (-59, -81), (-95, 31)];
        let segs: Vec<Segment> = (0..5).map(|i| seg(i as u64, p[i], p[(i + 2) % 5])).collect();
        // Shrink the chords so that they only cross, never share endpoints.
        let shrunk: Vec<Segment> = segs
            .iter()
            .map(|s| {
                let t = sc("1/20");
                let a = s.at(&t);
                let b = s.at(&(&Scalar::one() - &t));
                Segment::new(s.id(), a, b).unwrap()
            })
            .collect();
        let g = IntersectionGraph::build(&shrunk, Mode::Closed);
        assert_eq!(g.edge_count(), 5);
        let r = run(&shrunk);
        match &r.verdict {
            Verdict::OddCycle { cycle } => assert_eq!(cycle.len(), 5),
            v => panic!("{v:?}"),
        }
        r.verdict.validate(&shrunk, Mode::Closed).unwrap();
        assert!(!bfs_bipartiteness(&g).is_bipartite());
    }

    use crate::scalar::Scalar;

    #[test]
    fn endpoint_inside_bundle_splits_it() {
        // A crossing pair forms one bundle; a short segment starts between
        // them right of the crossing and stays disjoint.
        let segs = [seg(0, (0, 0), (10, 10)), seg(1, (0, 10), (10, 0)), seg(2, (6, 5), (7, 5))];
        let r = run(&segs);
        assert!(r.verdict.is_bipartite());
    }

    #[test]
    fn components_of_disjoint_crossings() {
        let segs = [
            seg(0, (0, 0), (2, 2)),
            seg(1, (0, 2), (2, 0)),
            seg(2, (10, 0), (12, 2)),
            seg(3, (10, 2), (12, 0)),
        ];
        let mut r = run(&segs);
        assert_eq!(r.components().unwrap(), vec![vec![0, 1], vec![2, 3]]);
        let lone: Vec<Segment> = (0..4).map(|i| seg(i, (0, 3 * i as i64), (5, 3 * i as i64 + 1))).collect();
        let mut r = run(&lone);
        assert_eq!(r.components().unwrap().len(), 4);
    }

    #[test]
    fn components_unavailable_after_odd_cycle() {
        let segs = [seg(0, (0, 0), (6, 2)), seg(1, (0, 3), (6, 1)), seg(2, (2, -1), (4, 3))];
        let mut r = run(&segs);
        assert!(!r.verdict.is_bipartite());
        assert_eq!(r.components(), Err(SweepError::NotBipartite));
    }

    #[test]
    fn rejects_vertical_and_duplicates() {
        assert!(matches!(
            SegmentSweep::new(&[seg(0, (1, 0), (1, 5))], Mode::Closed, SweepOptions::default()),
            Err(SweepError::Degenerate(_))
        ));
        assert!(matches!(
            SegmentSweep::new(&[seg(0, (0, 0), (1, 5)), seg(0, (2, 0), (3, 5))], Mode::Closed, SweepOptions::default()),
            Err(SweepError::DuplicateId(0))
        ));
    }

    #[test]
    fn equal_x_events_are_handled() {
        // Left endpoints share x = 0 and right endpoints share x = 2.
        let segs = [seg(0, (0, 0), (2, 2)), seg(1, (0, 2), (2, 0)), seg(2, (0, 5), (2, 4))];
        let r = run(&segs);
        assert!(r.verdict.is_bipartite());
    }
}
