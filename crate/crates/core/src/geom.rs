//! Exact geometric primitives: points, segments, balls, rectangles and the
//! predicates every algorithm in the crate is built on.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("segment {0} has zero length")]
    ZeroLength(u64),
    #[error("ball {0} must have a positive radius")]
    NonPositiveRadius(u64),
    #[error("ball {0} has no coordinates")]
    EmptyCenter(u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("rectangle {0} has inverted corners")]
    InvertedRect(u64),
}

/// Whether shared boundary points count as intersections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Closed objects: any common point is an intersection.
    #[default]
    Closed,
    /// Open segments: only the relative interiors count.
    Open,
}

/// A point in the plane, ordered lexicographically by `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2 { x: x.into(), y: y.into() }
    }

    pub fn dist2(&self, other: &Point2) -> Scalar {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &(&dx * &dx) + &(&dy * &dy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn from_sign(s: i8) -> Self {
        match s.signum() {
            -1 => Orientation::Clockwise,
            0 => Orientation::Collinear,
            _ => Orientation::CounterClockwise,
        }
    }
}

/// Sign of the cross product `(b - a) x (c - a)`.
pub fn orientation(a: &Point2, b: &Point2, c: &Point2) -> Orientation {
    let lhs = &(&b.x - &a.x) * &(&c.y - &a.y);
    let rhs = &(&b.y - &a.y) * &(&c.x - &a.x);
    Orientation::from_sign(match lhs.cmp(&rhs) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    })
}

/// A closed line segment with a caller-supplied identifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    id: u64,
    p: Point2,
    q: Point2,
}

impl Segment {
    pub fn new(id: u64, p: Point2, q: Point2) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::ZeroLength(id));
        }
        Ok(Segment { id, p, q })
    }

    /// Integer-coordinate shorthand used heavily by tests and generators.
    pub fn from_ints(id: u64, px: i64, py: i64, qx: i64, qy: i64) -> Result<Self, GeomError> {
        Segment::new(id, Point2::from_ints(px, py), Point2::from_ints(qx, qy))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn p(&self) -> &Point2 {
        &self.p
    }

    pub fn q(&self) -> &Point2 {
        &self.q
    }

    /// Lexicographically smaller endpoint.
    pub fn left(&self) -> &Point2 {
        if self.p <= self.q {
            &self.p
        } else {
            &self.q
        }
    }

    pub fn right(&self) -> &Point2 {
        if self.p <= self.q {
            &self.q
        } else {
            &self.p
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.p.x == self.q.x
    }

    pub fn len2(&self) -> Scalar {
        self.p.dist2(&self.q)
    }

    /// Same segment with the endpoints ordered left to right.
    pub fn normalized(&self) -> Segment {
        Segment { id: self.id, p: self.left().clone(), q: self.right().clone() }
    }

    fn x_range(&self) -> (&Scalar, &Scalar) {
        if self.p.x <= self.q.x {
            (&self.p.x, &self.q.x)
        } else {
            (&self.q.x, &self.p.x)
        }
    }

    fn y_range(&self) -> (&Scalar, &Scalar) {
        if self.p.y <= self.q.y {
            (&self.p.y, &self.q.y)
        } else {
            (&self.q.y, &self.p.y)
        }
    }

    /// `true` if `c` lies on the closed segment.
    pub fn contains(&self, c: &Point2) -> bool {
        orientation(&self.p, &self.q, c) == Orientation::Collinear && in_box(self, c)
    }

    /// Point at parameter `t`, where `0` is `p` and `1` is `q`.
    pub fn at(&self, t: &Scalar) -> Point2 {
        Point2 {
            x: &self.p.x + &(t * &(&self.q.x - &self.p.x)),
            y: &self.p.y + &(t * &(&self.q.y - &self.p.y)),
        }
    }
}

fn in_box(s: &Segment, c: &Point2) -> bool {
    let (x0, x1) = s.x_range();
    let (y0, y1) = s.y_range();
    *x0 <= c.x && c.x <= *x1 && *y0 <= c.y && c.y <= *y1
}

fn boxes_overlap(s: &Segment, t: &Segment) -> bool {
    let (sx0, sx1) = s.x_range();
    let (tx0, tx1) = t.x_range();
    if sx1 < tx0 || tx1 < sx0 {
        return false;
    }
    let (sy0, sy1) = s.y_range();
    let (ty0, ty1) = t.y_range();
    !(sy1 < ty0 || ty1 < sy0)
}

/// Whether two segments meet, under the given mode.
pub fn segments_intersect(s: &Segment, t: &Segment, mode: Mode) -> bool {
    if !boxes_overlap(s, t) {
        return false;
    }
    let o1 = orientation(&s.p, &s.q, &t.p).sign();
    let o2 = orientation(&s.p, &s.q, &t.q).sign();
    let o3 = orientation(&t.p, &t.q, &s.p).sign();
    let o4 = orientation(&t.p, &t.q, &s.q).sign();
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    if o1 == 0 && o2 == 0 {
        // Collinear: the bounding boxes already overlap, so they share a point.
        return match mode {
            Mode::Closed => true,
            Mode::Open => collinear_overlap_positive(s, t),
        };
    }
    let touching = (o1 == 0 && in_box(s, &t.p))
        || (o2 == 0 && in_box(s, &t.q))
        || (o3 == 0 && in_box(t, &s.p))
        || (o4 == 0 && in_box(t, &s.q));
    // A non-collinear touch is a single point that is an endpoint of one of
    // the segments, which the open mode does not count.
    touching && mode == Mode::Closed
}

/// For collinear segments, whether their common part has positive length.
pub(crate) fn collinear_overlap_positive(s: &Segment, t: &Segment) -> bool {
    let key = |p: &Point2| if s.is_vertical() { p.y.clone() } else { p.x.clone() };
    let (a0, a1) = sorted(key(&s.p), key(&s.q));
    let (b0, b1) = sorted(key(&t.p), key(&t.q));
    a0.max(b0) < a1.min(b1)
}

fn sorted(a: Scalar, b: Scalar) -> (Scalar, Scalar) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The single point where the relative interiors of `s` and `t` cross, if
/// they cross properly.
pub fn crossing_point(s: &Segment, t: &Segment) -> Option<Point2> {
    crossing_params(s, t).map(|(ts, _)| s.at(&ts))
}

/// Parameters `(ts, tt)` in `(0, 1)` of a proper crossing along `s` and `t`.
pub fn crossing_params(s: &Segment, t: &Segment) -> Option<(Scalar, Scalar)> {
    if !boxes_overlap(s, t) {
        return None;
    }
    let o1 = orientation(&s.p, &s.q, &t.p).sign();
    let o2 = orientation(&s.p, &s.q, &t.q).sign();
    let o3 = orientation(&t.p, &t.q, &s.p).sign();
    let o4 = orientation(&t.p, &t.q, &s.q).sign();
    if !(o1 * o2 < 0 && o3 * o4 < 0) {
        return None;
    }
    let rx = &s.q.x - &s.p.x;
    let ry = &s.q.y - &s.p.y;
    let ux = &t.q.x - &t.p.x;
    let uy = &t.q.y - &t.p.y;
    let wx = &t.p.x - &s.p.x;
    let wy = &t.p.y - &s.p.y;
    let denom = &(&rx * &uy) - &(&ry * &ux);
    let ts = &(&(&wx * &uy) - &(&wy * &ux)) / &denom;
    let tt = &(&(&wx * &ry) - &(&wy * &rx)) / &denom;
    Some((ts, tt))
}

/// The `y` coordinate of `s` on the vertical line at `x`.
///
/// `x` must lie within the segment's `x` range and the segment must not be
/// vertical; both are contract violations that panic.
pub fn y_at(s: &Segment, x: &Scalar) -> Scalar {
    let (x0, x1) = s.x_range();
    assert!(!s.is_vertical(), "y_at on vertical segment {}", s.id);
    assert!(x0 <= x && x <= x1, "abscissa {x} outside segment {}", s.id);
    let (a, b) = (s.left(), s.right());
    let dy = &b.y - &a.y;
    let dx = &b.x - &a.x;
    &a.y + &(&(&(x - &a.x) * &dy) / &dx)
}

/// Squared distance from `c` to the closed segment `s`.
pub fn point_segment_dist2(c: &Point2, s: &Segment) -> Scalar {
    let dx = &s.q.x - &s.p.x;
    let dy = &s.q.y - &s.p.y;
    let num = &(&(&c.x - &s.p.x) * &dx) + &(&(&c.y - &s.p.y) * &dy);
    let len2 = s.len2();
    let t = if num.signum() <= 0 {
        Scalar::zero()
    } else if num >= len2 {
        Scalar::one()
    } else {
        &num / &len2
    };
    c.dist2(&s.at(&t))
}

/// A closed ball in `d` dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ball {
    id: u64,
    center: Vec<Scalar>,
    radius: Scalar,
}

impl Ball {
    pub fn new(id: u64, center: Vec<Scalar>, radius: Scalar) -> Result<Self, GeomError> {
        if center.is_empty() {
            return Err(GeomError::EmptyCenter(id));
        }
        if radius.signum() <= 0 {
            return Err(GeomError::NonPositiveRadius(id));
        }
        Ok(Ball { id, center, radius })
    }

    /// Disk shorthand.
    pub fn disk(id: u64, cx: Scalar, cy: Scalar, r: Scalar) -> Result<Self, GeomError> {
        Ball::new(id, vec![cx, cy], r)
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn center(&self) -> &[Scalar] {
        &self.center
    }

    pub fn radius(&self) -> &Scalar {
        &self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub(crate) fn center_dist2(&self, other: &Ball) -> Scalar {
        self.center.iter().zip(&other.center).fold(Scalar::zero(), |acc, (a, b)| {
            let d = a - b;
            &acc + &(&d * &d)
        })
    }

    pub(crate) fn touches(&self, other: &Ball) -> bool {
        let r = &self.radius + &other.radius;
        self.center_dist2(other) <= &r * &r
    }
}

/// Closed-ball intersection test: squared center distance against the
/// squared radius sum, so tangent balls intersect.
pub fn balls_intersect(a: &Ball, b: &Ball) -> Result<bool, GeomError> {
    if a.dim() != b.dim() {
        return Err(GeomError::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(a.touches(b))
}

/// An axis-aligned rectangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rect {
    id: u64,
    lo: Point2,
    hi: Point2,
}

impl Rect {
    pub fn new(id: u64, lo: Point2, hi: Point2) -> Result<Self, GeomError> {
        if lo.x > hi.x || lo.y > hi.y {
            return Err(GeomError::InvertedRect(id));
        }
        Ok(Rect { id, lo, hi })
    }
}

/// Anything the generic algorithms can put in an intersection graph.
pub trait Shape {
    fn id(&self) -> u64;

    fn dim(&self) -> usize;

    fn intersects(&self, other: &Self, mode: Mode) -> bool;

    /// Closed axis-aligned bounds, one `(lo, hi)` pair per coordinate.
    fn bounds(&self) -> Vec<(Scalar, Scalar)>;
}

impl Shape for Segment {
    fn id(&self) -> u64 {
        self.id
    }

    fn dim(&self) -> usize {
        2
    }

    fn intersects(&self, other: &Self, mode: Mode) -> bool {
        segments_intersect(self, other, mode)
    }

    fn bounds(&self) -> Vec<(Scalar, Scalar)> {
        let (x0, x1) = self.x_range();
        let (y0, y1) = self.y_range();
        vec![(x0.clone(), x1.clone()), (y0.clone(), y1.clone())]
    }
}

/// Balls are always closed; the mode is ignored.
impl Shape for Ball {
    fn id(&self) -> u64 {
        self.id
    }

    fn dim(&self) -> usize {
        self.center.len()
    }

    fn intersects(&self, other: &Self, _mode: Mode) -> bool {
        self.touches(other)
    }

    fn bounds(&self) -> Vec<(Scalar, Scalar)> {
        self.center.iter().map(|c| (c - &self.radius, c + &self.radius)).collect()
    }
}

impl Shape for Rect {
    fn id(&self) -> u64 {
        self.id
    }

    fn dim(&self) -> usize {
        2
    }

    fn intersects(&self, other: &Self, mode: Mode) -> bool {
        match mode {
            Mode::Closed => {
                self.lo.x <= other.hi.x
                    && other.lo.x <= self.hi.x
                    && self.lo.y <= other.hi.y
                    && other.lo.y <= self.hi.y
            }
            Mode::Open => {
                self.lo.x < other.hi.x
                    && other.lo.x < self.hi.x
                    && self.lo.y < other.hi.y
                    && other.lo.y < self.hi.y
            }
        }
    }

    fn bounds(&self) -> Vec<(Scalar, Scalar)> {
        vec![(self.lo.x.clone(), self.hi.x.clone()), (self.lo.y.clone(), self.hi.y.clone())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::sc;
    use proptest::prelude::*;

    fn seg(id: u64, a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::from_ints(id, a.0, a.1, b.0, b.1).unwrap()
    }

    fn pt(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(0, 1)).sign(), 1);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(2, 0)).sign(), 0);
        assert_eq!(orientation(&pt(0, 0), &pt(0, 1), &pt(1, 0)).sign(), -1);
    }

    #[test]
    fn intersection_examples() {
        let a = seg(0, (0, 0), (2, 2));
        let b = seg(1, (0, 2), (2, 0));
        assert!(segments_intersect(&a, &b, Mode::Closed));
        let c = seg(2, (0, 0), (1, 1));
        let d = seg(3, (1, 1), (2, 0));
        assert!(!segments_intersect(&c, &d, Mode::Open));
        assert!(segments_intersect(&c, &d, Mode::Closed));
    }

    #[test]
    fn open_mode_cases() {
        // T-junction: endpoint on the other's interior.
        let h = seg(0, (0, 0), (4, 0));
        let v = seg(1, (2, 0), (3, 5));
        assert!(segments_intersect(&h, &v, Mode::Closed));
        assert!(!segments_intersect(&h, &v, Mode::Open));
        // Collinear overlap counts in both modes; collinear touch only when closed.
        let o = seg(2, (3, 0), (6, 0));
        assert!(segments_intersect(&h, &o, Mode::Open));
        let t = seg(3, (4, 0), (6, 0));
        assert!(segments_intersect(&h, &t, Mode::Closed));
        assert!(!segments_intersect(&h, &t, Mode::Open));
    }

    #[test]
    fn crossing_point_examples() {
        let a = seg(0, (0, 0), (2, 2));
        let b = seg(1, (0, 2), (2, 0));
        assert_eq!(crossing_point(&a, &b), Some(pt(1, 1)));
        assert_eq!(crossing_point(&seg(0, (0, 0), (1, 0)), &seg(1, (0, 1), (1, 1))), None);
        // Solving y = x/3 and y = 3 - x/3 by hand: x = 9/2, y = 3/2.
        let s = seg(0, (0, 0), (6, 2));
        let t = seg(1, (0, 3), (6, 1));
        assert_eq!(crossing_point(&s, &t), Some(Point2::new(sc("9/2"), sc("3/2"))));
    }

    #[test]
    fn y_at_examples() {
        assert_eq!(y_at(&seg(0, (0, 0), (2, 2)), &sc("1")), sc("1"));
        assert_eq!(y_at(&seg(0, (0, 0), (6, 2)), &sc("3")), sc("1"));
        // 3 + (3 - 0) * (1 - 3) / 6 = 2
        assert_eq!(y_at(&seg(0, (0, 3), (6, 1)), &sc("3")), sc("2"));
        // Endpoint order does not matter.
        assert_eq!(y_at(&seg(0, (6, 1), (0, 3)), &sc("3")), sc("2"));
    }

    #[test]
    #[should_panic]
    fn y_at_out_of_range_panics() {
        y_at(&seg(0, (0, 0), (2, 2)), &sc("3"));
    }

    #[test]
    fn ball_examples() {
        let unit = |x: &str| Ball::disk(0, sc(x), sc("0"), sc("1")).unwrap();
        assert!(balls_intersect(&unit("0"), &unit("1.5")).unwrap());
        assert!(!balls_intersect(&unit("0"), &unit("3")).unwrap());
        assert!(balls_intersect(&unit("0"), &unit("2")).unwrap());
        let b3 = Ball::new(1, vec![sc("0"), sc("0"), sc("0")], sc("1")).unwrap();
        assert_eq!(balls_intersect(&unit("0"), &b3), Err(GeomError::DimensionMismatch(2, 3)));
        assert!(Ball::disk(0, sc("0"), sc("0"), sc("0")).is_err());
    }

    #[test]
    fn zero_length_rejected() {
        assert_eq!(Segment::from_ints(7, 1, 1, 1, 1), Err(GeomError::ZeroLength(7)));
    }

    #[test]
    fn point_segment_distance() {
        let s = seg(0, (0, 0), (4, 0));
        assert_eq!(point_segment_dist2(&pt(2, 3), &s), sc("9"));
        assert_eq!(point_segment_dist2(&pt(7, 4), &s), sc("25"));
        assert_eq!(point_segment_dist2(&pt(-1, 0), &s), sc("1"));
    }

    fn small_pt() -> impl Strategy<Value = Point2> {
        (-8i64..8, -8i64..8).prop_map(|(x, y)| pt(x, y))
    }

    fn small_seg() -> impl Strategy<Value = Segment> {
        (small_pt(), small_pt()).prop_filter_map("nondegenerate", |(a, b)| Segment::new(0, a, b).ok())
    }

    proptest! {
        #[test]
        fn orientation_antisymmetric(a in small_pt(), b in small_pt(), c in small_pt()) {
            prop_assert_eq!(orientation(&a, &b, &c).sign(), -orientation(&a, &c, &b).sign());
        }

        #[test]
        fn intersection_symmetric(s in small_seg(), t in small_seg()) {
            for mode in [Mode::Closed, Mode::Open] {
                prop_assert_eq!(segments_intersect(&s, &t, mode), segments_intersect(&t, &s, mode));
            }
        }

        #[test]
        fn crossing_point_lies_on_both(s in small_seg(), t in small_seg()) {
            if let Some(c) = crossing_point(&s, &t) {
                prop_assert!(s.contains(&c) && t.contains(&c));
                prop_assert!(segments_intersect(&s, &t, Mode::Closed));
                prop_assert!(segments_intersect(&s, &t, Mode::Open));
            }
        }

        #[test]
        fn vertical_order_changes_only_at_crossings(s in small_seg(), t in small_seg()) {
            prop_assume!(!s.is_vertical() && !t.is_vertical());
            let lo = s.left().x.clone().max(t.left().x.clone());
            let hi = s.right().x.clone().min(t.right().x.clone());
            prop_assume!(lo < hi);
            let d_lo = &y_at(&s, &lo) - &y_at(&t, &lo);
            let d_hi = &y_at(&s, &hi) - &y_at(&t, &hi);
            if d_lo.signum() * d_hi.signum() < 0 {
                prop_assert!(crossing_point(&s, &t).is_some());
            }
            if !segments_intersect(&s, &t, Mode::Closed) {
                prop_assert!(d_lo.signum() * d_hi.signum() > 0);
            }
        }
    }
}
