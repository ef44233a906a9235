//! Bipartiteness for balls through the bound on larger disjoint neighbors,
//! and an audit of bipartite disk graphs.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::generic::GridIndex;
use crate::geom::{balls_intersect, segments_intersect, Ball, GeomError, Mode, Point2, Segment, Shape};
use crate::oracle::{bfs_bipartiteness, IntersectionGraph};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BallsError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("ball {0} has more larger neighbors than the cap, yet none of them intersect")]
    CapWithoutPair(u64),
    #[error("the audit needs a bipartite verdict")]
    NotBipartite,
    #[error("the audit is defined for disks, got dimension {0}")]
    NotPlanar(usize),
    #[error("disks {0} and {1} share a center")]
    Concentric(u64, u64),
}

/// Largest `k` with `k² ≤ 4·5^d`: the most pairwise-disjoint balls, each at
/// least as large as a given ball, that can all meet it.
pub fn degree_cap(d: usize) -> Result<usize, BallsError> {
    if d == 0 {
        return Err(BallsError::ZeroDimension);
    }
    let mut bound: u128 = 4;
    for _ in 0..d {
        bound = bound.checked_mul(5).expect("dimension too large");
    }
    let (mut lo, mut hi) = (0u128, 1u128 << 64);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if mid * mid <= bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo as usize)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum NeighborSearch {
    #[default]
    Naive,
    Grid,
}

/// Radius order with ids breaking ties.
fn larger(a: &Ball, b: &Ball) -> bool {
    match a.radius().cmp(b.radius()) {
        Ordering::Equal => a.id() > b.id(),
        o => o == Ordering::Greater,
    }
}

fn check_dims(balls: &[Ball]) -> Result<(), BallsError> {
    if let Some(first) = balls.first() {
        for b in balls {
            if b.dim() != first.dim() {
                return Err(GeomError::DimensionMismatch(first.dim(), b.dim()).into());
            }
        }
    }
    Ok(())
}

/// Larger intersecting neighbors of every ball, each list cut off after
/// `limit` entries.
fn larger_neighbors(balls: &[Ball], search: NeighborSearch, limit: usize) -> Vec<Vec<usize>> {
    let n = balls.len();
    let all: Vec<usize> = (0..n).collect();
    let grid = match search {
        NeighborSearch::Grid => Some(GridIndex::new(balls, &all)),
        NeighborSearch::Naive => None,
    };
    let mut out = vec![Vec::new(); n];
    for (i, a) in balls.iter().enumerate() {
        let cand = grid.as_ref().and_then(|g| g.candidates(&a.bounds())).unwrap_or_else(|| all.clone());
        for j in cand {
            if out[i].len() >= limit {
                break;
            }
            if j != i && larger(&balls[j], a) && a.intersects(&balls[j], Mode::Closed) {
                out[i].push(j);
            }
        }
    }
    out
}

/// Two-colors the intersection graph of `balls`, or returns an odd cycle.
///
/// A ball with more larger neighbors than `degree_cap(d)` has two of them
/// meeting each other, which closes a triangle. Otherwise orienting every
/// edge from the smaller ball leaves at most `cap·n` edges.
pub fn balls_bipartiteness(balls: &[Ball], search: NeighborSearch) -> Result<Verdict, BallsError> {
    check_dims(balls)?;
    let Some(first) = balls.first() else {
        return Ok(Verdict::Bipartite { colors: Default::default() });
    };
    let cap = degree_cap(first.dim())?;
    let nbrs = larger_neighbors(balls, search, cap + 1);
    for (i, list) in nbrs.iter().enumerate() {
        if list.len() > cap {
            for (k, &b) in list.iter().enumerate() {
                for &c in &list[k + 1..] {
                    if balls_intersect(&balls[b], &balls[c])? {
                        return Ok(Verdict::OddCycle { cycle: vec![balls[i].id(), balls[b].id(), balls[c].id()] });
                    }
                }
            }
            return Err(BallsError::CapWithoutPair(balls[i].id()));
        }
    }
    let ids = balls.iter().map(|b| b.id()).collect();
    let edges = nbrs.iter().enumerate().flat_map(|(i, l)| l.iter().map(move |&j| (i, j)));
    Ok(bfs_bipartiteness(&IntersectionGraph::from_edges(ids, edges)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskAudit {
    pub n: usize,
    pub edges: usize,
    pub max_larger_neighbors: usize,
    /// `edges ≤ 10·n`.
    pub linear_bound: bool,
    /// `edges ≤ 2n − 4`, vacuous below three disks.
    pub planar_bound: bool,
    /// No two center-to-center edges without a common disk meet.
    pub crossing_free: bool,
    pub crossing: Option<((u64, u64), (u64, u64))>,
}

impl DiskAudit {
    pub fn passed(&self) -> bool {
        self.linear_bound && self.planar_bound && self.crossing_free && self.max_larger_neighbors <= 10
    }
}

/// Edge counts and the straight-line drawing on disk centers for a disk set
/// already known to be bipartite.
pub fn bipartite_disk_edge_audit(disks: &[Ball], verdict: &Verdict) -> Result<DiskAudit, BallsError> {
    if !verdict.is_bipartite() {
        return Err(BallsError::NotBipartite);
    }
    check_dims(disks)?;
    if let Some(d) = disks.first().map(|d| d.dim()).filter(|&d| d != 2) {
        return Err(BallsError::NotPlanar(d));
    }
    let n = disks.len();
    let g = IntersectionGraph::build(disks, Mode::Closed);
    let mut max_larger = 0;
    let mut drawn = Vec::new();
    for i in 0..n {
        let mut count = 0;
        for &j in g.neighbors(i) {
            let j = j as usize;
            if larger(&disks[j], &disks[i]) {
                count += 1;
            }
            if i < j {
                let c = |k: usize| Point2::new(disks[k].center()[0].clone(), disks[k].center()[1].clone());
                let seg = Segment::new(0, c(i), c(j)).map_err(|_| BallsError::Concentric(disks[i].id(), disks[j].id()))?;
                drawn.push((i, j, seg));
            }
        }
        max_larger = max_larger.max(count);
    }
    let mut crossing = None;
    'outer: for (k, (a, b, s)) in drawn.iter().enumerate() {
        for (c, d, t) in &drawn[k + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if segments_intersect(s, t, Mode::Closed) {
                crossing = Some(((disks[*a].id(), disks[*b].id()), (disks[*c].id(), disks[*d].id())));
                break 'outer;
            }
        }
    }
    let m = g.edge_count();
    Ok(DiskAudit {
        n,
        edges: m,
        max_larger_neighbors: max_larger,
        linear_bound: m <= 10 * n,
        planar_bound: n < 3 || m + 4 <= 2 * n,
        crossing_free: crossing.is_none(),
        crossing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{sc, Scalar};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn disk(id: u64, x: &str, y: &str, r: &str) -> Ball {
        Ball::disk(id, sc(x), sc(y), sc(r)).unwrap()
    }

    #[test]
    fn caps() {
        assert_eq!(degree_cap(1), Ok(4));
        assert_eq!(degree_cap(2), Ok(10));
        assert_eq!(degree_cap(3), Ok(22));
        assert_eq!(degree_cap(0), Err(BallsError::ZeroDimension));
    }

    #[test]
    fn small_cases() {
        let two = [disk(0, "0", "0", "1"), disk(1, "1.5", "0", "1")];
        assert!(balls_bipartiteness(&two, NeighborSearch::Naive).unwrap().is_bipartite());
        let tri = [disk(0, "0", "0", "1"), disk(1, "1", "0", "1"), disk(2, "0.5", "0.8", "1")];
        for s in [NeighborSearch::Naive, NeighborSearch::Grid] {
            let v = balls_bipartiteness(&tri, s).unwrap();
            assert!(matches!(&v, Verdict::OddCycle { cycle } if cycle.len() == 3));
            v.validate(&tri, Mode::Closed).unwrap();
        }
        let mixed = [disk(0, "0", "0", "1"), Ball::new(1, vec![Scalar::ZERO; 3], Scalar::ONE).unwrap()];
        assert!(matches!(balls_bipartiteness(&mixed, NeighborSearch::Naive), Err(BallsError::Geom(_))));
    }

    #[test]
    fn crowded_small_ball_closes_triangle() {
        // Eleven unit disks around a tiny one can not stay pairwise apart.
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let mut disks = vec![disk(0, "0", "0", "1/10")];
            for id in 1..=11 {
                let a: f64 = rng.gen_range(0.0..core::f64::consts::TAU);
                let x = Scalar::ratio((1000.0 * 1.05 * a.cos()) as i64, 1000);
                let y = Scalar::ratio((1000.0 * 1.05 * a.sin()) as i64, 1000);
                disks.push(Ball::disk(id, x, y, Scalar::ONE).unwrap());
            }
            let v = balls_bipartiteness(&disks, NeighborSearch::Naive).unwrap();
            match &v {
                Verdict::OddCycle { cycle } => assert_eq!(cycle.len(), 3),
                other => panic!("{other:?}"),
            }
            v.validate(&disks, Mode::Closed).unwrap();
        }
    }

    #[test]
    fn chain_audit() {
        let chain: Vec<Ball> = (0..5).map(|i| Ball::disk(i, Scalar::from_int(3 * i as i64), Scalar::ZERO, sc("2")).unwrap()).collect();
        let v = balls_bipartiteness(&chain, NeighborSearch::Grid).unwrap();
        let a = bipartite_disk_edge_audit(&chain, &v).unwrap();
        assert_eq!(a.edges, 4);
        assert!(a.passed());
        let pair = [disk(0, "0", "0", "1"), disk(1, "1", "0", "1")];
        let v = balls_bipartiteness(&pair, NeighborSearch::Naive).unwrap();
        assert!(bipartite_disk_edge_audit(&pair, &v).unwrap().passed());
    }

    #[test]
    fn audit_rejects_bad_input() {
        let tri = [disk(0, "0", "0", "1"), disk(1, "1", "0", "1"), disk(2, "0.5", "0.8", "1")];
        let v = balls_bipartiteness(&tri, NeighborSearch::Naive).unwrap();
        assert_eq!(bipartite_disk_edge_audit(&tri, &v), Err(BallsError::NotBipartite));
        let same = [disk(0, "0", "0", "1"), disk(1, "0", "0", "2")];
        let ok = Verdict::Bipartite { colors: Default::default() };
        assert_eq!(bipartite_disk_edge_audit(&same, &ok), Err(BallsError::Concentric(0, 1)));
    }

    #[test]
    fn random_disks_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let disks: Vec<Ball> = (0..300)
                .map(|id| {
                    let c = |r: &mut ChaCha8Rng| Scalar::from_int(r.gen_range(0..1000));
                    Ball::disk(id, c(&mut rng), c(&mut rng), Scalar::from_int(rng.gen_range(1..20))).unwrap()
                })
                .collect();
            let want = bfs_bipartiteness(&IntersectionGraph::build(&disks, Mode::Closed)).is_bipartite();
            for s in [NeighborSearch::Naive, NeighborSearch::Grid] {
                let v = balls_bipartiteness(&disks, s).unwrap();
                assert_eq!(v.is_bipartite(), want);
                v.validate(&disks, Mode::Closed).unwrap();
            }
        }
    }
}
