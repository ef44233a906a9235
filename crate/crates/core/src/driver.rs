//! Algorithm selection with a safe path for degenerate segment inputs.

use alloc::collections::BTreeSet;

use crate::balls::{balls_bipartiteness, BallsError, NeighborSearch};
use crate::degeneracy::{degeneracy_scan, perturb_endpoints};
use crate::geom::{Ball, Mode, Segment};
use crate::oracle::{bfs_bipartiteness, IntersectionGraph};
use crate::sweep::{sweep_bipartiteness, SweepError};
use crate::verdict::{Provenance, Report};

/// Sweep when the input is in general position; otherwise try the exact
/// endpoint rewrite, and if that does not help either, the oracle.
///
/// A sweep verdict on rewritten input is re-validated against the original
/// segments before it is returned.
pub fn decide_segments(segs: &[Segment], mode: Mode) -> Result<Report, SweepError> {
    let mut ids = BTreeSet::new();
    for s in segs {
        if !ids.insert(s.id()) {
            return Err(SweepError::DuplicateId(s.id()));
        }
    }
    let report = degeneracy_scan(segs, mode);
    if report.is_clean() {
        match sweep_bipartiteness(segs, mode) {
            Ok(verdict) => return Ok(Report { verdict, provenance: Provenance::Sweep, perturbed: false }),
            Err(SweepError::Degenerate(_)) => return Ok(fallback(segs, mode)),
            Err(e) => return Err(e),
        }
    }
    if report.only_endpoint_contacts() {
        let rewritten = perturb_endpoints(segs, mode);
        if degeneracy_scan(&rewritten, mode).is_clean() {
            match sweep_bipartiteness(&rewritten, mode) {
                Ok(verdict) if verdict.validate(segs, mode).is_ok() => {
                    return Ok(Report { verdict, provenance: Provenance::Sweep, perturbed: true });
                }
                Ok(_) | Err(SweepError::Degenerate(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(fallback(segs, mode))
}

fn fallback(segs: &[Segment], mode: Mode) -> Report {
    let verdict = bfs_bipartiteness(&IntersectionGraph::build(segs, mode));
    Report { verdict, provenance: Provenance::OracleFallback, perturbed: false }
}

pub fn decide_balls(balls: &[Ball], search: NeighborSearch) -> Result<Report, BallsError> {
    let verdict = balls_bipartiteness(balls, search)?;
    Ok(Report { verdict, provenance: Provenance::BallsCap, perturbed: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn seg(id: u64, a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::from_ints(id, a.0, a.1, b.0, b.1).unwrap()
    }

    #[test]
    fn general_position_uses_sweep() {
        let r = decide_segments(&[seg(0, (0, 0), (2, 2)), seg(1, (0, 2), (2, 0))], Mode::Closed).unwrap();
        assert_eq!(r.provenance, Provenance::Sweep);
        assert!(!r.perturbed);
    }

    #[test]
    fn touching_pairs_are_rewritten() {
        // Two segments meet end to end; a third ends on the second.
        let segs = vec![seg(0, (0, 0), (2, 1)), seg(1, (2, 1), (4, -1)), seg(2, (5, 3), (3, 0))];
        let r = decide_segments(&segs, Mode::Closed).unwrap();
        assert!(r.perturbed);
        r.verdict.validate(&segs, Mode::Closed).unwrap();
        let want = bfs_bipartiteness(&IntersectionGraph::build(&segs, Mode::Closed)).is_bipartite();
        assert_eq!(r.verdict.is_bipartite(), want);
    }

    #[test]
    fn vertical_goes_to_oracle() {
        let segs = [seg(0, (0, 0), (6, 2)), seg(1, (0, 2), (6, 0)), seg(2, (3, -1), (3, 3))];
        let r = decide_segments(&segs, Mode::Closed).unwrap();
        assert_eq!(r.provenance, Provenance::OracleFallback);
        assert!(!r.verdict.is_bipartite());
        r.verdict.validate(&segs, Mode::Closed).unwrap();
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let segs: Vec<Segment> = vec![seg(4, (0, 0), (1, 1)), seg(4, (5, 0), (6, 1))];
        assert_eq!(decide_segments(&segs, Mode::Open), Err(SweepError::DuplicateId(4)));
    }
}
