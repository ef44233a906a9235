//! Spanning forests and bipartiteness for any shape class, given a
//! decremental intersection-detection structure.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::geom::{Mode, Shape};
use crate::scalar::Scalar;
use crate::verdict::{Color, Verdict};

/// A shrinking set of objects answering "which member meets this probe?".
///
/// Members are indices into the slice the detector was built from.
/// `query` never reports a deleted member and reports nothing only when no
/// live member intersects the probe.
pub trait DecrementalDetector<S> {
    fn query(&mut self, probe: &S) -> Option<usize>;
    fn delete(&mut self, member: usize);
}

/// Builds a detector over `members` (indices into `objects`).
pub trait DetectorFactory<S> {
    fn build<'a>(&self, objects: &'a [S], members: &[usize], mode: Mode) -> Box<dyn DecrementalDetector<S> + 'a>;
}

/// Linear scan over live members.
#[derive(Debug, Clone, Copy, Default)]
pub struct NaiveFactory;

struct Naive<'a, S> {
    objects: &'a [S],
    live: Vec<usize>,
    slot: BTreeMap<usize, usize>,
    mode: Mode,
}

impl<S: Shape> DecrementalDetector<S> for Naive<'_, S> {
    fn query(&mut self, probe: &S) -> Option<usize> {
        self.live.iter().copied().find(|&m| self.objects[m].intersects(probe, self.mode))
    }

    fn delete(&mut self, member: usize) {
        if let Some(i) = self.slot.remove(&member) {
            self.live.swap_remove(i);
            if let Some(&moved) = self.live.get(i) {
                self.slot.insert(moved, i);
            }
        }
    }
}

impl<S: Shape> DetectorFactory<S> for NaiveFactory {
    fn build<'a>(&self, objects: &'a [S], members: &[usize], mode: Mode) -> Box<dyn DecrementalDetector<S> + 'a> {
        let live = members.to_vec();
        let slot = live.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Box::new(Naive { objects, live, slot, mode })
    }
}

/// Uniform grid over the first (up to three) coordinates with cell size
/// equal to the median object extent. Objects spanning too many cells sit
/// in a separate list that every query scans.
#[derive(Debug, Clone, Copy, Default)]
pub struct GridFactory;

const MAX_CELLS: i64 = 64;

type Cell = [i64; 3];

pub(crate) struct GridIndex {
    dims: usize,
    origin: Vec<Scalar>,
    size: Scalar,
    buckets: BTreeMap<Cell, Vec<usize>>,
    oversized: Vec<usize>,
    ranges: BTreeMap<usize, (Cell, Cell)>,
}

impl GridIndex {
    pub(crate) fn new<S: Shape>(objects: &[S], members: &[usize]) -> Self {
        let dims = objects.first().map_or(1, |o| o.dim().min(3));
        let bounds: Vec<Vec<(Scalar, Scalar)>> = members.iter().map(|&m| objects[m].bounds()).collect();
        let mut origin = vec![Scalar::ZERO; dims];
        for (k, o) in origin.iter_mut().enumerate() {
            if let Some(lo) = bounds.iter().map(|b| &b[k].0).min() {
                *o = lo.clone();
            }
        }
        let mut extents: Vec<Scalar> =
            bounds.iter().map(|b| (0..dims).map(|k| &b[k].1 - &b[k].0).max().unwrap_or(Scalar::ZERO)).collect();
        extents.sort();
        let size = extents.get(extents.len() / 2).cloned().filter(|s| !s.is_zero()).unwrap_or(Scalar::ONE);
        let mut grid =
            GridIndex { dims, origin, size, buckets: BTreeMap::new(), oversized: Vec::new(), ranges: BTreeMap::new() };
        for (&m, b) in members.iter().zip(&bounds) {
            match grid.cell_range(b) {
                Some((lo, hi)) => {
                    for c in cells(lo, hi) {
                        grid.buckets.entry(c).or_default().push(m);
                    }
                    grid.ranges.insert(m, (lo, hi));
                }
                None => grid.oversized.push(m),
            }
        }
        grid
    }

    fn cell_of(&self, k: usize, v: &Scalar) -> i64 {
        (&(v - &self.origin[k]) / &self.size).floor_i64()
    }

    /// Cell box covering `bounds`, or `None` if it holds too many cells.
    fn cell_range(&self, bounds: &[(Scalar, Scalar)]) -> Option<(Cell, Cell)> {
        let mut lo = [0i64; 3];
        let mut hi = [0i64; 3];
        let mut count: i64 = 1;
        for k in 0..self.dims {
            lo[k] = self.cell_of(k, &bounds[k].0);
            hi[k] = self.cell_of(k, &bounds[k].1);
            count = count.saturating_mul(hi[k].saturating_sub(lo[k]).saturating_add(1));
        }
        (count <= MAX_CELLS).then_some((lo, hi))
    }

    /// Live members whose cells meet the probe's cells, plus every oversized
    /// member; `None` means the probe is too large and everything must be scanned.
    pub(crate) fn candidates(&self, bounds: &[(Scalar, Scalar)]) -> Option<Vec<usize>> {
        let (lo, hi) = self.cell_range(bounds)?;
        let mut out = self.oversized.clone();
        for c in cells(lo, hi) {
            if let Some(b) = self.buckets.get(&c) {
                out.extend_from_slice(b);
            }
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    pub(crate) fn remove(&mut self, m: usize) {
        if let Some((lo, hi)) = self.ranges.remove(&m) {
            for c in cells(lo, hi) {
                if let Some(b) = self.buckets.get_mut(&c) {
                    if let Some(i) = b.iter().position(|&x| x == m) {
                        b.swap_remove(i);
                    }
                    if b.is_empty() {
                        self.buckets.remove(&c);
                    }
                }
            }
        } else if let Some(i) = self.oversized.iter().position(|&x| x == m) {
            self.oversized.swap_remove(i);
        }
    }

    pub(crate) fn live(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.ranges.keys().copied().chain(self.oversized.iter().copied()).collect();
        out.sort_unstable();
        out
    }
}

fn cells(lo: Cell, hi: Cell) -> impl Iterator<Item = Cell> {
    (lo[0]..=hi[0]).flat_map(move |a| (lo[1]..=hi[1]).flat_map(move |b| (lo[2]..=hi[2]).map(move |c| [a, b, c])))
}

struct Grid<'a, S> {
    objects: &'a [S],
    index: GridIndex,
    mode: Mode,
}

impl<S: Shape> DecrementalDetector<S> for Grid<'_, S> {
    fn query(&mut self, probe: &S) -> Option<usize> {
        let cand = self.index.candidates(&probe.bounds()).unwrap_or_else(|| self.index.live());
        cand.into_iter().find(|&m| self.objects[m].intersects(probe, self.mode))
    }

    fn delete(&mut self, member: usize) {
        self.index.remove(member);
    }
}

impl<S: Shape> DetectorFactory<S> for GridFactory {
    fn build<'a>(&self, objects: &'a [S], members: &[usize], mode: Mode) -> Box<dyn DecrementalDetector<S> + 'a> {
        Box::new(Grid { objects, index: GridIndex::new(objects, members), mode })
    }
}

/// DFS forest over a subset of objects. Indices refer to the full object
/// slice; entries outside the subset stay unset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
    pub roots: Vec<usize>,
    pub queries: usize,
}

impl Forest {
    /// Vertices on the tree path from `a` to `b`, both included.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut x, mut y) = (a, b);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.depth[x] > self.depth[y] {
            left.push(x);
            x = self.parent[x].expect("non-root has a parent");
        }
        while self.depth[y] > self.depth[x] {
            right.push(y);
            y = self.parent[y].expect("non-root has a parent");
        }
        while x != y {
            left.push(x);
            right.push(y);
            x = self.parent[x].expect("paths meet below the root");
            y = self.parent[y].expect("paths meet below the root");
        }
        left.push(x);
        left.extend(right.into_iter().rev());
        left
    }
}

/// Spanning forest of the intersection graph over all objects.
pub fn spanning_forest<S: Shape>(objects: &[S], mode: Mode, factory: &dyn DetectorFactory<S>) -> Forest {
    let all: Vec<usize> = (0..objects.len()).collect();
    spanning_forest_of(objects, &all, mode, factory)
}

/// Spanning forest of the subgraph induced by `members`.
pub fn spanning_forest_of<S: Shape>(
    objects: &[S],
    members: &[usize],
    mode: Mode,
    factory: &dyn DetectorFactory<S>,
) -> Forest {
    let n = objects.len();
    let mut det = factory.build(objects, members, mode);
    let mut visited = vec![false; n];
    let mut f = Forest { parent: vec![None; n], depth: vec![0; n], edges: Vec::new(), roots: Vec::new(), queries: 0 };
    let mut stack = Vec::new();
    for &s in members {
        if visited[s] {
            continue;
        }
        visited[s] = true;
        det.delete(s);
        f.roots.push(s);
        stack.push(s);
        while let Some(&u) = stack.last() {
            f.queries += 1;
            match det.query(&objects[u]) {
                Some(w) => {
                    debug_assert!(!visited[w], "detector returned a deleted member");
                    visited[w] = true;
                    det.delete(w);
                    f.parent[w] = Some(u);
                    f.depth[w] = f.depth[u] + 1;
                    f.edges.push((u, w));
                    stack.push(w);
                }
                None => {
                    stack.pop();
                }
            }
        }
    }
    assert!(
        members.is_empty() || f.queries < 2 * members.len(),
        "{} queries for {} objects",
        f.queries,
        members.len()
    );
    f
}

/// Verdict plus the query count of each spanning-forest pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericRun {
    pub verdict: Verdict,
    pub queries: Vec<usize>,
}

pub fn generic_bipartiteness<S: Shape>(objects: &[S], mode: Mode, factory: &dyn DetectorFactory<S>) -> Verdict {
    generic_run(objects, mode, factory).verdict
}

/// One forest pass over everything, then one per height-parity class; an
/// edge inside a class closes an odd cycle with the tree path.
pub fn generic_run<S: Shape>(objects: &[S], mode: Mode, factory: &dyn DetectorFactory<S>) -> GenericRun {
    let forest = spanning_forest(objects, mode, factory);
    for &(u, w) in &forest.edges {
        debug_assert_ne!(forest.depth[u] % 2, forest.depth[w] % 2);
    }
    let mut queries = vec![forest.queries];
    for class in 0..2u32 {
        let members: Vec<usize> = (0..objects.len()).filter(|&i| forest.depth[i] % 2 == class).collect();
        let inner = spanning_forest_of(objects, &members, mode, factory);
        queries.push(inner.queries);
        if let Some(&(x, y)) = inner.edges.first() {
            let cycle = forest.path(x, y).into_iter().map(|i| objects[i].id()).collect();
            return GenericRun { verdict: Verdict::OddCycle { cycle }, queries };
        }
    }
    let colors =
        objects.iter().enumerate().map(|(i, o)| (o.id(), Color::from_parity_bit((forest.depth[i] & 1) as u8))).collect();
    GenericRun { verdict: Verdict::Bipartite { colors }, queries }
}
