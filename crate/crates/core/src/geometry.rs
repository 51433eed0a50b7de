//! Exact predicates and constructions on integer points.
//!
//! Every coordinate is an `i64` bounded by [`MAX_COORD`]; every determinant
//! and squared distance is evaluated in `i128`, so no predicate here can
//! round or overflow. The rest of the crate routes all geometric decisions
//! through this module.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Largest absolute coordinate accepted by [`Point::try_new`].
///
/// Coordinate differences are then below 2^61 and the orientation
/// determinant below `2 * (2 * MAX_COORD)^2 = 2^123`, which fits in `i128`.
pub const MAX_COORD: i64 = 1 << 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("coordinate ({x}, {y}) exceeds the bound |c| <= 2^60")]
    CoordinateOutOfRange { x: i64, y: i64 },
    #[error("segment endpoints coincide at {0}")]
    DegenerateSegment(Point),
    #[error("general position violated: segments {0} and {1} touch or overlap collinearly")]
    CollinearContact(Segment, Segment),
    #[error("triangle {0}, {1}, {2} is degenerate")]
    DegenerateTriangle(Point, Point, Point),
    #[error("duplicate point {0}")]
    DuplicatePoint(Point),
    #[error("at least {needed} points required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
}

/// A lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    x: i64,
    y: i64,
}

impl Point {
    /// Panics when a coordinate exceeds [`MAX_COORD`]; use [`Point::try_new`]
    /// for untrusted input.
    pub fn new(x: i64, y: i64) -> Self {
        match Self::try_new(x, y) {
            Ok(p) => p,
            Err(e) => panic!("{e}"),
        }
    }

    pub fn try_new(x: i64, y: i64) -> Result<Self, GeometryError> {
        if x.unsigned_abs() > MAX_COORD as u64 || y.unsigned_abs() > MAX_COORD as u64 {
            return Err(GeometryError::CoordinateOutOfRange { x, y });
        }
        Ok(Point { x, y })
    }

    #[inline]
    pub fn x(&self) -> i64 {
        self.x
    }

    #[inline]
    pub fn y(&self) -> i64 {
        self.y
    }

    /// Point reflection through the origin.
    pub fn reflected(&self) -> Point {
        Point { x: -self.x, y: -self.y }
    }

    pub fn squared_distance(&self, other: &Point) -> i128 {
        let dx = (self.x - other.x) as i128;
        let dy = (self.y - other.y) as i128;
        dx * dx + dy * dy
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A closed segment between two distinct points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment(a));
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> Point {
        self.a
    }

    pub fn b(&self) -> Point {
        self.b
    }

    pub fn reversed(&self) -> Segment {
        Segment { a: self.b, b: self.a }
    }

    fn shares_endpoint(&self, other: &Segment) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }

    /// Whether `p` lies in the closed bounding box of the segment.
    fn bbox_contains(&self, p: &Point) -> bool {
        let (lx, hx) = minmax(self.a.x, self.b.x);
        let (ly, hy) = minmax(self.a.y, self.b.y);
        lx <= p.x && p.x <= hx && ly <= p.y && p.y <= hy
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

fn minmax(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// `(b - a) x (c - a)`, exact.
#[inline]
pub fn cross(a: &Point, b: &Point, c: &Point) -> i128 {
    let bx = (b.x - a.x) as i128;
    let by = (b.y - a.y) as i128;
    let cx = (c.x - a.x) as i128;
    let cy = (c.y - a.y) as i128;
    bx * cy - by * cx
}

#[inline]
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Orientation {
    match cross(a, b, c).cmp(&0) {
        Ordering::Greater => Orientation::Ccw,
        Ordering::Less => Orientation::Cw,
        Ordering::Equal => Orientation::Collinear,
    }
}

/// Whether two segments cross: they share no endpoint and have a common
/// point. Touching or overlapping collinearly without a shared endpoint
/// breaks general position and is reported as an error; segments that share
/// an endpoint never cross.
pub fn segments_cross(s1: &Segment, s2: &Segment) -> Result<bool, GeometryError> {
    if s1.shares_endpoint(s2) {
        return Ok(false);
    }
    let o1 = orientation(&s1.a, &s1.b, &s2.a);
    let o2 = orientation(&s1.a, &s1.b, &s2.b);
    let o3 = orientation(&s2.a, &s2.b, &s1.a);
    let o4 = orientation(&s2.a, &s2.b, &s1.b);
    use Orientation::Collinear;

    if (o1 == o2 && o1 != Collinear) || (o3 == o4 && o3 != Collinear) {
        return Ok(false);
    }
    if o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear {
        return Ok(true);
    }
    if o1 == Collinear && o2 == Collinear {
        // All four endpoints on one line: compare the closed 1-D extents.
        let key = |p: &Point| {
            if s1.a.x != s1.b.x {
                p.x
            } else {
                p.y
            }
        };
        let (l1, h1) = minmax(key(&s1.a), key(&s1.b));
        let (l2, h2) = minmax(key(&s2.a), key(&s2.b));
        return if h1 < l2 || h2 < l1 {
            Ok(false)
        } else {
            Err(GeometryError::CollinearContact(*s1, *s2))
        };
    }
    // One endpoint lies on the other segment's supporting line; the
    // segments meet only if it lies on the segment itself.
    let touching = (o1 == Collinear && s1.bbox_contains(&s2.a))
        || (o2 == Collinear && s1.bbox_contains(&s2.b))
        || (o3 == Collinear && s2.bbox_contains(&s1.a))
        || (o4 == Collinear && s2.bbox_contains(&s1.b));
    if touching {
        Err(GeometryError::CollinearContact(*s1, *s2))
    } else {
        Ok(false)
    }
}

/// Strict interior test; points on the boundary are outside.
pub fn point_in_triangle_strict(
    p: &Point,
    t1: &Point,
    t2: &Point,
    t3: &Point,
) -> Result<bool, GeometryError> {
    let o = orientation(t1, t2, t3);
    if o == Orientation::Collinear {
        return Err(GeometryError::DegenerateTriangle(*t1, *t2, *t3));
    }
    Ok(orientation(t1, t2, p) == o && orientation(t2, t3, p) == o && orientation(t3, t1, p) == o)
}

/// Extreme points in counterclockwise order, starting at the lowest
/// leftmost point. Points on the interior of hull edges are dropped.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for p in iter {
            while hull.len() >= start + 2
                && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= 0
            {
                hull.pop();
            }
            hull.push(*p);
        }
        hull.pop();
    }
    hull
}

/// Exact minimum and maximum squared pairwise distance.
pub fn squared_distance_extremes(points: &[Point]) -> Result<(i128, i128), GeometryError> {
    if points.len() < 2 {
        return Err(GeometryError::TooFewPoints { needed: 2, got: points.len() });
    }
    let mut min_sq = i128::MAX;
    let mut max_sq = 0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            let d = p.squared_distance(q);
            if d == 0 {
                return Err(GeometryError::DuplicatePoint(*p));
            }
            min_sq = min_sq.min(d);
            max_sq = max_sq.max(d);
        }
    }
    Ok((min_sq, max_sq))
}

/// Closed axis-aligned rectangle with integer corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl Rect {
    pub fn new(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        debug_assert!(x0 < x1 && y0 < y1);
        Rect { x0, y0, x1, y1 }
    }

    pub fn square(x0: i64, y0: i64, side: i64) -> Self {
        Rect::new(x0, y0, x0 + side, y0 + side)
    }

    /// Corners in counterclockwise order from the lower left.
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x0, self.y0),
            Point::new(self.x1, self.y0),
            Point::new(self.x1, self.y1),
            Point::new(self.x0, self.y1),
        ]
    }

    pub fn contains_closed(&self, p: &Point) -> bool {
        self.x0 <= p.x && p.x <= self.x1 && self.y0 <= p.y && p.y <= self.y1
    }

    pub fn intersects_closed(&self, other: &Rect) -> bool {
        self.x0 <= other.x1 && other.x0 <= self.x1 && self.y0 <= other.y1 && other.y0 <= self.y1
    }

    /// Whether the closed segment meets the open interior of the rectangle.
    ///
    /// Separating-axis test over the two rectangle axes and the segment
    /// normal; touching the boundary does not count.
    pub fn segment_meets_interior(&self, s: &Segment) -> bool {
        let (lx, hx) = minmax(s.a.x, s.b.x);
        let (ly, hy) = minmax(s.a.y, s.b.y);
        if hx <= self.x0 || lx >= self.x1 || hy <= self.y0 || ly >= self.y1 {
            return false;
        }
        let mut pos = false;
        let mut neg = false;
        for c in self.corners() {
            match cross(&s.a, &s.b, &c).cmp(&0) {
                Ordering::Greater => pos = true,
                Ordering::Less => neg = true,
                Ordering::Equal => {}
            }
        }
        pos && neg
    }
}
