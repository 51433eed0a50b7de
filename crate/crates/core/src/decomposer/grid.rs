//! The bounding square, its `k x k` cells, and the rich-cell tests.

use crate::geometry::{Point, Rect};
use crate::pointset::PointSet;

/// Axis-aligned square containing a point set, plus the density
/// certificate for a chosen `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingSquare {
    pub origin: Point,
    pub side: i64,
    /// `side <= alpha * sqrt(n) * min_dist`, i.e. the square fits the
    /// alpha-dense normalization (unit = minimum pairwise distance).
    pub alpha_certified: bool,
}

/// Smallest axis-aligned square with lower-left corner at the coordinate
/// minima that holds every point in its half-open interior
/// `[origin, origin + side)^2`.
pub fn bounding_square(ps: &PointSet, alpha: f64) -> BoundingSquare {
    let pts = ps.points();
    let min_x = pts.iter().map(Point::x).min().unwrap_or(0);
    let max_x = pts.iter().map(Point::x).max().unwrap_or(0);
    let min_y = pts.iter().map(Point::y).min().unwrap_or(0);
    let max_y = pts.iter().map(Point::y).max().unwrap_or(0);
    let side = (max_x - min_x).max(max_y - min_y) + 1;
    let alpha_certified = match crate::geometry::squared_distance_extremes(pts) {
        Ok((min_sq, _)) => (side as f64).powi(2) <= alpha * alpha * ps.len() as f64 * min_sq as f64,
        Err(_) => false,
    };
    BoundingSquare { origin: Point::new(min_x, min_y), side, alpha_certified }
}

/// `n0 = ceil(12 k^2 / alpha^2)`.
pub fn n0(k: usize, alpha: f64) -> f64 {
    (12.0 * (k * k) as f64 / (alpha * alpha)).ceil()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridConfig {
    pub k: usize,
    pub square_origin: Point,
    pub square_side: i64,
    pub alpha: f64,
    pub n0: f64,
    /// Sub-units the origin was pushed down-left to keep points off the
    /// internal grid lines.
    pub jitter: i64,
}

impl GridConfig {
    /// Builds the grid, shifting the origin by one sub-unit at a time (and
    /// growing the side to match) while some point sits on an internal grid
    /// line; after `scale` shifts the last grid is kept, since the
    /// half-open cells still assign every point exactly once.
    pub fn new(ps: &PointSet, k: usize, alpha: f64) -> Self {
        assert!(k >= 1, "k must be positive");
        let sq = bounding_square(ps, alpha);
        let mut gc = GridConfig {
            k,
            square_origin: sq.origin,
            square_side: sq.side,
            alpha,
            n0: n0(k, alpha),
            jitter: 0,
        };
        for t in 1..=ps.scale() {
            if !ps.points().iter().any(|p| gc.on_internal_line(p)) {
                break;
            }
            gc.square_origin = Point::new(sq.origin.x() - t, sq.origin.y() - t);
            gc.square_side = sq.side + t;
            gc.jitter = t;
        }
        gc
    }

    fn on_internal_line(&self, p: &Point) -> bool {
        let k = self.k as i128;
        let side = self.square_side as i128;
        let on = |d: i64| {
            let t = d as i128 * k;
            t % side == 0 && t / side > 0
        };
        on(p.x() - self.square_origin.x()) || on(p.y() - self.square_origin.y())
    }

    /// `(col, row)` of the half-open cell holding `p`.
    pub fn cell_of(&self, p: &Point) -> (usize, usize) {
        let k = self.k as i128;
        let side = self.square_side as i128;
        let idx = |d: i64| ((d as i128 * k) / side) as usize;
        (idx(p.x() - self.square_origin.x()), idx(p.y() - self.square_origin.y()))
    }

    /// Cell `(col, row)` in cell units: the unit square `[col, col+1] x [row, row+1]`.
    pub fn cell_rect(&self, col: usize, row: usize) -> Rect {
        Rect::square(col as i64, row as i64, 1)
    }

    /// Maps a point in cell units back to (fractional) input coordinates.
    pub fn to_input_coords(&self, cx: f64, cy: f64) -> (f64, f64) {
        let s = self.square_side as f64 / self.k as f64;
        (self.square_origin.x() as f64 + cx * s, self.square_origin.y() as f64 + cy * s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
    pub point_indices: Vec<usize>,
}

impl Cell {
    pub fn len(&self) -> usize {
        self.point_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.point_indices.is_empty()
    }

    pub fn coords(&self) -> (usize, usize) {
        (self.col, self.row)
    }
}

/// All `k^2` cells in `(col, row)` order; point indices ascending.
pub fn assign_cells(ps: &PointSet, gc: &GridConfig) -> Vec<Cell> {
    let k = gc.k;
    let mut cells: Vec<Cell> = (0..k * k)
        .map(|i| Cell { col: i / k, row: i % k, point_indices: Vec::new() })
        .collect();
    for (i, p) in ps.points().iter().enumerate() {
        let (c, r) = gc.cell_of(p);
        cells[c * k + r].point_indices.push(i);
    }
    cells
}

/// A cell is rich when `|cell| >= n / (3 k^2)`, compared exactly.
pub fn is_rich(count: usize, n: usize, k: usize) -> bool {
    count as u128 * 3 * (k as u128).pow(2) >= n as u128
}

pub fn rich_cells(cells: &[Cell], n: usize, k: usize) -> Vec<Cell> {
    cells.iter().filter(|c| is_rich(c.len(), n, k)).cloned().collect()
}

/// `|rich| >= k^2 / (3 alpha^2)`.
pub fn rich_count_check(rich_count: usize, k: usize, alpha: f64) -> bool {
    rich_count as f64 * 3.0 * alpha * alpha >= (k * k) as f64
}

/// Every cell holds at most `2 alpha^2 n / k^2` points.
pub fn cell_upper_bound_check(cells: &[Cell], n: usize, k: usize, alpha: f64) -> bool {
    let bound = 2.0 * alpha * alpha * n as f64;
    cells.iter().all(|c| (c.len() * k * k) as f64 <= bound)
}
