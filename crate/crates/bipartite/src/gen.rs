//! Seeded instance generators.

use bipartite_core::{Ball, Scalar, Segment};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random non-vertical segments with integer endpoints in `[0, span)²` and
/// coordinate differences up to `max_len`.
pub fn random_segments<R: Rng>(rng: &mut R, n: usize, span: i64, max_len: i64) -> Vec<Segment> {
    (0..n as u64)
        .map(|id| loop {
            let (x, y) = (rng.gen_range(0..span), rng.gen_range(0..span));
            let (dx, dy) = (rng.gen_range(-max_len..=max_len), rng.gen_range(-max_len..=max_len));
            if dx != 0 {
                break Segment::from_ints(id, x, y, x + dx, y + dy).expect("nonzero length");
            }
        })
        .collect()
}

/// Random segments with expected degree near a small constant.
pub fn default_segments<R: Rng>(rng: &mut R, n: usize) -> Vec<Segment> {
    let span = ((n as f64).sqrt() * 20.0).ceil() as i64 + 20;
    random_segments(rng, n, span, 15)
}

/// Two families of translates: near-horizontal segments on distinct
/// parallel lines and near-vertical ones likewise. Each family is pairwise
/// disjoint, every cross-family pair crosses properly, and all endpoints
/// lie outside the other family's strip, so the input is in general
/// position with `⌈n/2⌉·⌊n/2⌋` crossings and a bipartite graph.
pub fn layered_segments<R: Rng>(rng: &mut R, n: usize) -> Vec<Segment> {
    let h = n.div_ceil(2) as i64;
    let v = (n / 2) as i64;
    let width = 3 * v + 2;
    let height = 3 * h + 2;
    let mut out = Vec::with_capacity(n);
    let mut ids: Vec<u64> = (0..n as u64).collect();
    ids.shuffle(rng);
    for i in 0..h {
        let x = -2 - rng.gen_range(0..4);
        out.push(Segment::from_ints(ids[i as usize], x, 3 * i, x + width + 8, 3 * i + 1).expect("proper"));
    }
    for j in 0..v {
        let y = -2 - rng.gen_range(0..4);
        out.push(Segment::from_ints(ids[(h + j) as usize], 3 * j, y, 3 * j + 1, y + height + 8).expect("proper"));
    }
    out
}

fn hundredths(v: i64) -> Scalar {
    Scalar::ratio(v, 100)
}

/// Random disks with centers in a square sized for a sparse-to-moderate graph.
pub fn random_disks<R: Rng>(rng: &mut R, n: usize) -> Vec<Ball> {
    let span = ((n as f64).sqrt() * 600.0).ceil() as i64 + 100;
    (0..n as u64)
        .map(|id| {
            let c = [hundredths(rng.gen_range(0..span)), hundredths(rng.gen_range(0..span))];
            Ball::new(id, c.to_vec(), hundredths(rng.gen_range(50..300))).expect("positive radius")
        })
        .collect()
}

/// Two packings on interleaved grids: small disks near `(4i, 4j)` and large
/// ones near `(4i + 2, 4j + 2)`. Disks of one packing are pairwise disjoint,
/// so every edge joins the two packings.
pub fn two_layer_disks<R: Rng>(rng: &mut R, n: usize) -> Vec<Ball> {
    let side = ((n as f64 / 2.0).sqrt().ceil() as i64).max(1) + 1;
    let mut slots: Vec<(i64, i64, bool)> =
        (0..side).flat_map(|i| (0..side).flat_map(move |j| [(i, j, false), (i, j, true)])).collect();
    slots.shuffle(rng);
    slots
        .into_iter()
        .take(n)
        .enumerate()
        .map(|(id, (i, j, big))| {
            let off = if big { 200 } else { 0 };
            let mut jitter = || rng.gen_range(-5..=5);
            let cx = hundredths(400 * i + off + jitter());
            let cy = hundredths(400 * j + off + jitter());
            let r = if big { rng.gen_range(160..=185) } else { rng.gen_range(90..=100) };
            Ball::new(id as u64, vec![cx, cy], hundredths(r)).expect("positive radius")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bipartite_core::{bfs_bipartiteness, degeneracy_scan, IntersectionGraph, Mode};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn layered_is_bipartite_and_clean() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [1, 2, 7, 40] {
            let segs = layered_segments(&mut rng, n);
            assert_eq!(segs.len(), n);
            assert!(degeneracy_scan(&segs, Mode::Closed).is_clean());
            let g = IntersectionGraph::build(&segs, Mode::Closed);
            assert_eq!(g.edge_count(), n.div_ceil(2) * (n / 2));
            assert!(bfs_bipartiteness(&g).is_bipartite());
        }
    }

    #[test]
    fn two_layer_disks_are_bipartite() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in [3, 20, 150] {
            let disks = two_layer_disks(&mut rng, n);
            assert_eq!(disks.len(), n);
            let g = IntersectionGraph::build(&disks, Mode::Closed);
            assert!(g.edge_count() > 0 || n < 10);
            assert!(bfs_bipartiteness(&g).is_bipartite());
        }
    }

    #[test]
    fn seeds_are_deterministic() {
        let a = random_segments(&mut ChaCha8Rng::seed_from_u64(3), 30, 100, 10);
        let b = random_segments(&mut ChaCha8Rng::seed_from_u64(3), 30, 100, 10);
        assert_eq!(a, b);
        let a = random_disks(&mut ChaCha8Rng::seed_from_u64(3), 30);
        let b = random_disks(&mut ChaCha8Rng::seed_from_u64(3), 30);
        assert_eq!(a, b);
    }
}
