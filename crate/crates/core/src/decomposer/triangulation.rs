//! Star triangulation of the rich-cell hull, in cell units.
//!
//! Cell `(col, row)` is the unit square `[col, col+1] x [row, row+1]`, so
//! every hull vertex and wedge corner is an integer point of the
//! `(k+1) x (k+1)` grid.

use std::collections::{BTreeSet, HashSet};

use crate::geometry::{convex_hull, Point, Rect, Segment};

use super::DecomposeError;

/// `conv(first ∪ second)` for two boundary cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge {
    pub cells: [(usize, usize); 2],
    pub polygon: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarTriangulation {
    pub k: usize,
    /// Vertices of the hull of all rich-cell corners, counterclockwise.
    pub hull: Vec<Point>,
    /// Rich cells incident to hull vertices: `boundary_cells[0]` is the
    /// leftmost (then bottommost) one, the rest follow clockwise.
    pub boundary_cells: Vec<(usize, usize)>,
    /// `2|C| - 3` wedges: first the fan from `boundary_cells[0]`, then the
    /// consecutive pairs.
    pub wedges: Vec<Wedge>,
    /// Distinct edges of all wedge polygons.
    pub segments: Vec<Segment>,
}

impl StarTriangulation {
    pub fn sigma0(&self) -> (usize, usize) {
        self.boundary_cells[0]
    }

    /// Triples `(sigma0, sigma_j, sigma_{j+1})` for `j = 1..|C|-2`.
    pub fn triangles(&self) -> impl Iterator<Item = [(usize, usize); 3]> + '_ {
        let c = &self.boundary_cells;
        (1..c.len() - 1).map(move |j| [c[0], c[j], c[j + 1]])
    }

    /// Number of hull vertices `v(P)`.
    pub fn hull_vertex_count(&self) -> usize {
        self.hull.len()
    }
}

fn cell_corners(c: (usize, usize)) -> [Point; 4] {
    Rect::square(c.0 as i64, c.1 as i64, 1).corners()
}

pub fn build_star_triangulation(rich: &[(usize, usize)], k: usize) -> Result<StarTriangulation, DecomposeError> {
    if rich.len() < 3 {
        return Err(DecomposeError::DegenerateHull { boundary_cells: rich.len() });
    }
    let rich_set: HashSet<(usize, usize)> = rich.iter().copied().collect();
    let corners: Vec<Point> = rich.iter().flat_map(|&c| cell_corners(c)).collect();
    let hull = convex_hull(&corners);

    // Each hull vertex is a corner of exactly one rich cell.
    let mut ccw: Vec<(usize, usize)> = Vec::new();
    for v in &hull {
        let (x, y) = (v.x(), v.y());
        let owner = [(x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y)]
            .into_iter()
            .filter(|&(c, r)| c >= 0 && r >= 0)
            .map(|(c, r)| (c as usize, r as usize))
            .find(|c| rich_set.contains(c))
            .expect("hull vertex must be a rich-cell corner");
        if !ccw.contains(&owner) {
            ccw.push(owner);
        }
    }
    if ccw.len() < 3 {
        return Err(DecomposeError::DegenerateHull { boundary_cells: ccw.len() });
    }
    let start = (0..ccw.len()).min_by_key(|&i| ccw[i]).unwrap();
    ccw.rotate_left(start);
    let mut boundary_cells = vec![ccw[0]];
    boundary_cells.extend(ccw[1..].iter().rev());

    let wedge = |a: (usize, usize), b: (usize, usize)| {
        let pts: Vec<Point> = cell_corners(a).into_iter().chain(cell_corners(b)).collect();
        Wedge { cells: [a, b], polygon: convex_hull(&pts) }
    };
    let c = &boundary_cells;
    let mut wedges: Vec<Wedge> = (1..c.len()).map(|j| wedge(c[0], c[j])).collect();
    wedges.extend((1..c.len() - 1).map(|j| wedge(c[j], c[j + 1])));

    let mut seen = HashSet::new();
    let mut segments = Vec::new();
    for w in &wedges {
        let poly = &w.polygon;
        for i in 0..poly.len() {
            let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
            if seen.insert((a.min(b), a.max(b))) {
                segments.push(Segment::new(a, b)?);
            }
        }
    }

    Ok(StarTriangulation { k, hull, boundary_cells, wedges, segments })
}

/// Cells of the `k x k` grid whose open interior meets at least one segment.
pub fn cells_crossed(segments: &[Segment], k: usize) -> BTreeSet<(usize, usize)> {
    cells_crossed_scaled(segments, k, 1)
}

/// As [`cells_crossed`], with cells of side `unit` instead of 1.
pub fn cells_crossed_scaled(segments: &[Segment], k: usize, unit: i64) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for s in segments {
        out.extend(cells_crossed_by(s, k, unit));
    }
    out
}

fn cells_crossed_by(s: &Segment, k: usize, unit: i64) -> Vec<(usize, usize)> {
    let clamp = |v: i64| v.div_euclid(unit).clamp(0, k as i64 - 1) as usize;
    let (a, b) = (s.a(), s.b());
    let (c0, c1) = (clamp(a.x().min(b.x())), clamp(a.x().max(b.x())));
    let (r0, r1) = (clamp(a.y().min(b.y())), clamp(a.y().max(b.y())));
    let mut out = Vec::new();
    for c in c0..=c1 {
        for r in r0..=r1 {
            if Rect::square(c as i64 * unit, r as i64 * unit, unit).segment_meets_interior(s) {
                out.push((c, r));
            }
        }
    }
    out
}

/// Cells crossed by the boundary of one wedge.
pub fn cells_crossed_by_wedge(w: &Wedge, k: usize) -> BTreeSet<(usize, usize)> {
    let poly = &w.polygon;
    let segs: Vec<Segment> = (0..poly.len())
        .map(|i| Segment::new(poly[i], poly[(i + 1) % poly.len()]).unwrap())
        .collect();
    cells_crossed(&segs, k)
}

/// `c' k^(2/3)`.
pub fn hull_vertex_bound(k: usize, c_prime: f64) -> f64 {
    c_prime * (k as f64).powf(2.0 / 3.0)
}

/// `8 c' k^(5/3)`.
pub fn crossed_cells_bound(k: usize, c_prime: f64) -> f64 {
    8.0 * c_prime * (k as f64).powf(5.0 / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_corner_cells() {
        let st = build_star_triangulation(&[(0, 0), (4, 0), (0, 4), (4, 4)], 5).unwrap();
        assert_eq!(st.boundary_cells, vec![(0, 0), (0, 4), (4, 4), (4, 0)]);
        assert_eq!(st.wedges.len(), 5);
        assert_eq!(st.triangles().count(), 2);
        assert_eq!(st.hull_vertex_count(), 4);
    }

    #[test]
    fn three_cells() {
        let st = build_star_triangulation(&[(0, 0), (6, 1), (2, 6)], 8).unwrap();
        assert_eq!(st.boundary_cells.len(), 3);
        assert_eq!(st.wedges.len(), 3);
        // clockwise from the leftmost cell
        assert_eq!(st.boundary_cells, vec![(0, 0), (2, 6), (6, 1)]);
    }

    #[test]
    fn collinear_cells_are_degenerate() {
        let err = build_star_triangulation(&[(0, 2), (1, 2), (2, 2), (3, 2)], 5).unwrap_err();
        assert!(matches!(err, DecomposeError::DegenerateHull { boundary_cells: 2 }));
        assert!(build_star_triangulation(&[(0, 0), (1, 1)], 5).is_err());
    }

    /// Seven hull cells around a 15-cell interior block: 22 rich cells,
    /// |C| = 7, eleven wedges.
    #[test]
    fn seven_boundary_cells() {
        let mut rich = vec![(0, 4), (2, 0), (7, 0), (9, 4), (8, 8), (4, 9), (1, 7)];
        for c in 3..8 {
            for r in 3..6 {
                rich.push((c, r));
            }
        }
        assert_eq!(rich.len(), 22);
        let st = build_star_triangulation(&rich, 10).unwrap();
        assert_eq!(st.boundary_cells.len(), 7);
        assert_eq!(st.sigma0(), (0, 4));
        assert_eq!(st.wedges.len(), 11);
    }

    #[test]
    fn axis_parallel_segment_crosses_a_row() {
        // cells of side 2, segment through the middle of row 2
        let s = Segment::new(Point::new(0, 5), Point::new(10, 5)).unwrap();
        let cells = cells_crossed_scaled(&[s], 5, 2);
        assert_eq!(cells, (0..5).map(|c| (c, 2)).collect());
        // along a grid line no open interior is met
        let s = Segment::new(Point::new(0, 2), Point::new(5, 2)).unwrap();
        assert!(cells_crossed(&[s], 5).is_empty());
    }

    #[test]
    fn diagonal_of_square() {
        let d = Segment::new(Point::new(0, 0), Point::new(5, 5)).unwrap();
        let cells = cells_crossed(&[d], 5);
        assert!(cells.len() >= 5 && cells.len() <= 9);
        assert_eq!(cells.len(), 5);
        let d = Segment::new(Point::new(0, 0), Point::new(5, 4)).unwrap();
        let cells = cells_crossed(&[d], 5);
        assert!(cells.len() >= 5 && cells.len() <= 9);
    }

    #[test]
    fn wedge_boundaries_cross_at_most_4k_cells() {
        let k = 12;
        let rich = [(0, 0), (11, 3), (5, 11), (2, 9), (10, 10)];
        let st = build_star_triangulation(&rich, k).unwrap();
        for w in &st.wedges {
            assert!(cells_crossed_by_wedge(w, k).len() <= 4 * k);
        }
    }
}
