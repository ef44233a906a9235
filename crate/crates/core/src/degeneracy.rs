//! Detection of inputs the sweep cannot take directly, and an exact rewrite
//! that removes endpoint contacts without changing the intersection graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::geom::{
    crossing_params, crossing_point, orientation, point_segment_dist2, Mode, Orientation, Point2, Segment,
};
use crate::geom::collinear_overlap_positive;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    Vertical { id: u64 },
    /// An endpoint of `endpoint_of` lies on `on` but is not one of its endpoints.
    EndpointOnSegment { endpoint_of: u64, on: u64, point: Point2 },
    SharedEndpoint { a: u64, b: u64, point: Point2 },
    CollinearOverlap { a: u64, b: u64 },
    /// Three or more segments cross properly at one point.
    ConcurrentCrossing { point: Point2, ids: Vec<u64> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub violations: Vec<Violation>,
}

impl DegeneracyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether an endpoint rewrite can help: only contacts at endpoints.
    pub fn only_endpoint_contacts(&self) -> bool {
        self.violations
            .iter()
            .all(|v| matches!(v, Violation::EndpointOnSegment { .. } | Violation::SharedEndpoint { .. }))
    }
}

/// Quadratic scan over all pairs. Event points that merely share an `x`
/// coordinate are fine: events are ordered lexicographically.
pub fn degeneracy_scan(segs: &[Segment], _mode: Mode) -> DegeneracyReport {
    let mut out = Vec::new();
    for s in segs {
        if s.is_vertical() {
            out.push(Violation::Vertical { id: s.id() });
        }
    }
    let mut meets: BTreeMap<Point2, BTreeSet<u64>> = BTreeMap::new();
    for (i, s) in segs.iter().enumerate() {
        for t in &segs[i + 1..] {
            let collinear = orientation(s.p(), s.q(), t.p()) == Orientation::Collinear
                && orientation(s.p(), s.q(), t.q()) == Orientation::Collinear;
            if collinear && collinear_overlap_positive(s, t) {
                out.push(Violation::CollinearOverlap { a: s.id(), b: t.id() });
                continue;
            }
            for e in [s.p(), s.q()] {
                if e == t.p() || e == t.q() {
                    out.push(Violation::SharedEndpoint { a: s.id(), b: t.id(), point: e.clone() });
                } else if t.contains(e) {
                    out.push(Violation::EndpointOnSegment { endpoint_of: s.id(), on: t.id(), point: e.clone() });
                }
            }
            for e in [t.p(), t.q()] {
                if e != s.p() && e != s.q() && s.contains(e) {
                    out.push(Violation::EndpointOnSegment { endpoint_of: t.id(), on: s.id(), point: e.clone() });
                }
            }
            if let Some(p) = crossing_point(s, t) {
                let set = meets.entry(p).or_default();
                set.insert(s.id());
                set.insert(t.id());
            }
        }
    }
    for (point, ids) in meets {
        if ids.len() >= 3 {
            out.push(Violation::ConcurrentCrossing { point, ids: ids.into_iter().collect() });
        }
    }
    out.sort();
    DegeneracyReport { violations: out }
}

/// Rewrites every segment exactly so that endpoint contacts disappear while
/// the intersection graph stays the same.
///
/// Closed mode lengthens both ends by `λ·|s|`: touching pairs become proper
/// crossings and disjoint pairs stay farther apart than the total growth.
/// Open mode shrinks both ends by `λ·|s|` with `λ` below every crossing
/// parameter, so touching pairs separate and crossings survive. Either way
/// `λ` is a power of two; inputs with collinear overlaps are returned as is.
pub fn perturb_endpoints(segs: &[Segment], mode: Mode) -> Vec<Segment> {
    let lambda = match mode {
        Mode::Closed => lengthen_factor(segs),
        Mode::Open => shrink_factor(segs),
    };
    segs.iter()
        .map(|s| {
            let d = Point2::new(&s.q().x - &s.p().x, &s.q().y - &s.p().y);
            let step = Point2::new(&d.x * &lambda, &d.y * &lambda);
            let (p, q) = match mode {
                Mode::Closed => (
                    Point2::new(&s.p().x - &step.x, &s.p().y - &step.y),
                    Point2::new(&s.q().x + &step.x, &s.q().y + &step.y),
                ),
                Mode::Open => (
                    Point2::new(&s.p().x + &step.x, &s.p().y + &step.y),
                    Point2::new(&s.q().x - &step.x, &s.q().y - &step.y),
                ),
            };
            Segment::new(s.id(), p, q).expect("rewrite keeps positive length")
        })
        .collect()
}

fn lengthen_factor(segs: &[Segment]) -> Scalar {
    let max_len2 = segs.iter().map(|s| s.len2()).max().unwrap_or(Scalar::ONE);
    let mut clear2: Option<Scalar> = None;
    for (i, s) in segs.iter().enumerate() {
        for (j, t) in segs.iter().enumerate() {
            if i == j {
                continue;
            }
            for e in [s.p(), s.q()] {
                let d = point_segment_dist2(e, t);
                if !d.is_zero() && clear2.as_ref().map_or(true, |c| &d < c) {
                    clear2 = Some(d);
                }
            }
        }
    }
    // Each endpoint moves by at most λ·maxlen; require 4·λ·maxlen < clearance.
    let Some(clear2) = clear2 else {
        return Scalar::ratio(1, 4);
    };
    let sixteen = Scalar::from_int(16);
    let half = Scalar::ratio(1, 2);
    let mut lam = Scalar::ratio(1, 4);
    while &(&(&lam * &lam) * &sixteen) * &max_len2 >= clear2 {
        lam = &lam * &half;
    }
    lam
}

fn shrink_factor(segs: &[Segment]) -> Scalar {
    let mut min_param = Scalar::ratio(1, 2);
    for (i, s) in segs.iter().enumerate() {
        for t in &segs[i + 1..] {
            if let Some((a, b)) = crossing_params(s, t) {
                for u in [&a, &b] {
                    let m = u.clone().min(&Scalar::ONE - u);
                    if m < min_param {
                        min_param = m;
                    }
                }
            }
        }
    }
    let half = Scalar::ratio(1, 2);
    let mut lam = Scalar::ratio(1, 4);
    while &lam + &lam >= min_param {
        lam = &lam * &half;
    }
    lam
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::segments_intersect;
    use crate::oracle::IntersectionGraph;
    use crate::scalar::sc;
    use alloc::vec;
    use proptest::prelude::*;

    fn seg(id: u64, a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::from_ints(id, a.0, a.1, b.0, b.1).unwrap()
    }

    #[test]
    fn clean_crossing() {
        let r = degeneracy_scan(&[seg(0, (0, 0), (2, 2)), seg(1, (0, 2), (2, 0))], Mode::Closed);
        assert!(r.is_clean());
    }

    #[test]
    fn t_junction() {
        let r = degeneracy_scan(&[seg(0, (0, 0), (2, 0)), seg(1, (1, 0), (1, 2))], Mode::Closed);
        assert!(r.violations.contains(&Violation::EndpointOnSegment {
            endpoint_of: 1,
            on: 0,
            point: Point2::from_ints(1, 0)
        }));
    }

    #[test]
    fn concurrent_and_vertical() {
        let segs = [seg(0, (0, 0), (6, 2)), seg(1, (0, 2), (6, 0)), seg(2, (3, -1), (3, 3))];
        let r = degeneracy_scan(&segs, Mode::Closed);
        assert!(r.violations.contains(&Violation::Vertical { id: 2 }));
        assert!(r
            .violations
            .contains(&Violation::ConcurrentCrossing { point: Point2::from_ints(3, 1), ids: vec![0, 1, 2] }));
    }

    #[test]
    fn shared_x_is_not_flagged() {
        let segs = [seg(0, (0, 0), (2, 1)), seg(1, (0, 5), (2, 6))];
        assert!(degeneracy_scan(&segs, Mode::Closed).is_clean());
    }

    #[test]
    fn overlap_and_shared_endpoint() {
        let segs = [seg(0, (0, 0), (4, 0)), seg(1, (2, 0), (6, 0)), seg(2, (6, 0), (8, 3))];
        let r = degeneracy_scan(&segs, Mode::Closed);
        assert!(r.violations.contains(&Violation::CollinearOverlap { a: 0, b: 1 }));
        assert!(r.violations.contains(&Violation::SharedEndpoint { a: 1, b: 2, point: Point2::from_ints(6, 0) }));
        assert!(!r.only_endpoint_contacts());
    }

    #[test]
    fn lengthening_turns_touch_into_crossing() {
        let segs = [seg(0, (0, 0), (2, 0)), seg(1, (1, 0), (2, 2))];
        let out = perturb_endpoints(&segs, Mode::Closed);
        assert!(degeneracy_scan(&out, Mode::Closed).is_clean());
        assert!(segments_intersect(&out[0], &out[1], Mode::Closed));
    }

    #[test]
    fn shrinking_separates_open_touches() {
        let segs = [seg(0, (0, 0), (4, 0)), seg(1, (2, 0), (3, 2)), seg(2, (1, -1), (2, 1))];
        let out = perturb_endpoints(&segs, Mode::Open);
        assert!(degeneracy_scan(&out, Mode::Open).is_clean());
        let before = IntersectionGraph::build(&segs, Mode::Open);
        let after = IntersectionGraph::build(&out, Mode::Open);
        assert_eq!(before, after);
        assert!(out[0].p().x > sc("0"));
    }

    fn small_seg(id: u64) -> impl Strategy<Value = Segment> {
        (0i64..6, 0i64..6, 0i64..6, 0i64..6)
            .prop_filter("proper", |(a, b, c, d)| (a, b) != (c, d) && a != c)
            .prop_map(move |(a, b, c, d)| seg(id, (a, b), (c, d)))
    }

    fn family() -> impl Strategy<Value = Vec<Segment>> {
        proptest::collection::vec(0u8..1, 2..7).prop_flat_map(|v| {
            (0..v.len() as u64).map(small_seg).collect::<Vec<_>>()
        })
    }

    proptest! {
        // Small integer grids produce many touches; the rewrite must keep
        // the graph whenever no overlaps exist.
        #[test]
        fn rewrite_preserves_graph(segs in family(), open in any::<bool>()) {
            let mode = if open { Mode::Open } else { Mode::Closed };
            let report = degeneracy_scan(&segs, mode);
            prop_assume!(report.violations.iter().all(|v| !matches!(v, Violation::CollinearOverlap { .. })));
            let out = perturb_endpoints(&segs, mode);
            prop_assert_eq!(IntersectionGraph::build(&segs, mode), IntersectionGraph::build(&out, mode));
            let after = degeneracy_scan(&out, mode);
            let contact = after.violations.iter().any(|v| {
                matches!(v, Violation::EndpointOnSegment { .. } | Violation::SharedEndpoint { .. })
            });
            prop_assert!(!contact);
        }
    }
}
