//! Four-cell witnesses: three clusters spanning a triangle and a fourth
//! cluster that lies inside every triangle drawn from the first three.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{orientation, point_in_triangle_strict, GeometryError, Orientation, Rect};
use crate::pointset::PointSet;

use super::grid::Cell;
use super::triangulation::{cells_crossed, StarTriangulation};

/// Whether every point of `cells[3]` lies strictly inside every triangle
/// with one vertex in each of `cells[0..3]`.
///
/// For each side `(i, j)` of the triangle and the opposite cell `l`, all
/// corners of `cells[3]` and of `cells[l]` must lie strictly on one common
/// side of every line through a corner of `cells[i]` and a corner of
/// `cells[j]`. The orientation determinant is affine in each argument, so
/// its sign over a product of rectangles is fixed by the corners. Any
/// collinear corner triple makes the predicate false.
pub fn containment_predicate(cells: &[Rect; 4]) -> bool {
    for a in 0..4 {
        for b in a + 1..4 {
            if cells[a].intersects_closed(&cells[b]) {
                return false;
            }
        }
    }
    for (i, j, l) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
        let mut side = None;
        for p in cells[i].corners() {
            for q in cells[j].corners() {
                for r in cells[3].corners().iter().chain(cells[l].corners().iter()) {
                    let o = orientation(&p, &q, r);
                    if o == Orientation::Collinear || *side.get_or_insert(o) != o {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourCellWitness {
    /// The four regions, all in one coordinate frame; the fourth is the
    /// interior one.
    pub cells: [Rect; 4],
    /// Grid coordinates of the cells when found on a `k x k` grid.
    pub grid_cells: Option<[(usize, usize); 4]>,
    /// Point indices, ascending, exactly `m` per cluster.
    pub clusters: [Vec<usize>; 4],
    pub m: usize,
}

impl FourCellWitness {
    /// All `4m` member indices.
    pub fn members(&self) -> Vec<usize> {
        self.clusters.iter().flatten().copied().collect()
    }

    /// Draws `samples` quadruples `(a1, a2, a3, a4)` with `ai` from cluster
    /// `i` and checks `a4` is strictly inside `a1 a2 a3`.
    pub fn sample_check(&self, ps: &PointSet, samples: usize, seed: u64) -> Result<bool, GeometryError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let pick: Vec<_> = self
                .clusters
                .iter()
                .map(|c| ps.point(c[rng.gen_range(0..c.len())]))
                .collect();
            if !point_in_triangle_strict(&pick[3], &pick[0], &pick[1], &pick[2])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `ceil(n / (3 k^2))`.
pub fn cluster_size(n: usize, k: usize) -> usize {
    n.div_ceil(3 * k * k)
}

/// Scans triangles `(sigma0, sigma_j, sigma_{j+1})` in label order and,
/// within each, rich cells in `(col, row)` order; the first cell that
/// avoids every segment of the triangulation and passes
/// [`containment_predicate`] wins.
pub fn find_four_cell_witness(
    rich: &[Cell],
    st: &StarTriangulation,
    n: usize,
    k: usize,
) -> Option<FourCellWitness> {
    let crossed = cells_crossed(&st.segments, k);
    let mut candidates: Vec<&Cell> = rich.iter().collect();
    candidates.sort_by_key(|c| c.coords());
    let rect = |c: (usize, usize)| Rect::square(c.0 as i64, c.1 as i64, 1);
    let m = cluster_size(n, k);
    for tri in st.triangles() {
        for cand in &candidates {
            let cc = cand.coords();
            if tri.contains(&cc) || crossed.contains(&cc) {
                continue;
            }
            let cells = [rect(tri[0]), rect(tri[1]), rect(tri[2]), rect(cc)];
            if !containment_predicate(&cells) {
                continue;
            }
            let grid = [tri[0], tri[1], tri[2], cc];
            let clusters = grid.map(|g| {
                let cell = rich.iter().find(|c| c.coords() == g).expect("triangle cells are rich");
                cell.point_indices[..m].to_vec()
            });
            return Some(FourCellWitness { cells, grid_cells: Some(grid), clusters, m });
        }
    }
    None
}

/// The four fixed subsquares of the unit square used for uniform random
/// sets: `[0,1/5]^2`, `[4/5,1] x [0,1/5]`, `[2/5,3/5] x [4/5,1]` and the
/// interior one `[2/5,3/5] x [1/5,2/5]`.
///
/// Each is returned as the closed box spanned by the lattice points it
/// contains when the unit square is `[0, scale]^2`.
pub fn unit_square_subsquares(scale: i64) -> [Rect; 4] {
    let lo = |a: i64| (a * scale + 4).div_euclid(5);
    let hi = |b: i64| (b * scale).div_euclid(5);
    let bx = |a: i64, b: i64, c: i64, d: i64| Rect::new(lo(a), lo(c), hi(b), hi(d));
    [bx(0, 1, 0, 1), bx(4, 5, 0, 1), bx(2, 3, 4, 5), bx(2, 3, 1, 2)]
}

/// Witness for a uniform random set from the fixed subsquares, with
/// `m = min(smallest cluster, ceil(n / 50))`; `None` when the subsquares
/// fail the containment predicate or some subsquare holds fewer than two
/// points.
pub fn random_mode_witness(ps: &PointSet) -> Option<FourCellWitness> {
    let cells = unit_square_subsquares(ps.scale());
    if !containment_predicate(&cells) {
        return None;
    }
    let full: Vec<Vec<usize>> = cells
        .iter()
        .map(|r| (0..ps.len()).filter(|&i| r.contains_closed(&ps.point(i))).collect())
        .collect();
    let smallest = full.iter().map(Vec::len).min().unwrap_or(0);
    if smallest < 2 {
        return None;
    }
    let m = smallest.min(ps.len().div_ceil(50));
    let clusters = [0, 1, 2, 3].map(|i| full[i][..m].to_vec());
    Some(FourCellWitness { cells, grid_cells: None, clusters, m })
}

/// Ordered 4-tuples `(a1, a2, a3, a4)` with `a4` inside `a1 a2 a3`
/// certified by the witness: one per choice from each cluster.
pub fn caratheodory_lower_bound(w: &FourCellWitness) -> u128 {
    (w.m as u128).pow(4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn centered(cx: i64, cy: i64) -> Rect {
        // side 1 around (cx, cy), doubled to stay on the integer lattice
        Rect::square(2 * cx - 1, 2 * cy - 1, 2)
    }

    #[test]
    fn predicate_accepts_interior_cell() {
        let cells = [centered(0, 0), centered(10, 0), centered(0, 10), centered(3, 3)];
        assert!(containment_predicate(&cells));
    }

    #[test]
    fn predicate_rejects_outside_and_edge_cells() {
        let outside = [centered(0, 0), centered(10, 0), centered(0, 10), centered(8, 8)];
        assert!(!containment_predicate(&outside));
        // straddles the hypotenuse region
        let on_edge = [centered(0, 0), centered(10, 0), centered(0, 10), centered(5, 5)];
        assert!(!containment_predicate(&on_edge));
        // too close to a side: lines between corner cells sweep through it
        let near = [centered(0, 0), centered(10, 0), centered(0, 10), centered(5, 1)];
        assert!(!containment_predicate(&near));
        let overlapping = [centered(0, 0), centered(10, 0), centered(0, 10), centered(0, 0)];
        assert!(!containment_predicate(&overlapping));
    }

    /// Random points drawn from the four squares agree with the predicate.
    #[test]
    fn predicate_cross_validated_by_sampling() {
        let cells = [centered(0, 0), centered(10, 0), centered(0, 10), centered(3, 3)];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let draw = |r: &Rect, rng: &mut ChaCha8Rng| {
            // sub-lattice of 1/1000 cell units
            Point::new(rng.gen_range(r.x0 * 1000..=r.x1 * 1000), rng.gen_range(r.y0 * 1000..=r.y1 * 1000))
        };
        for _ in 0..100_000 {
            let q: Vec<Point> = cells.iter().map(|c| draw(c, &mut rng)).collect();
            assert!(point_in_triangle_strict(&q[3], &q[0], &q[1], &q[2]).unwrap());
        }
    }

    #[test]
    fn fixed_subsquares_pass_the_predicate() {
        let sq = unit_square_subsquares(1 << 16);
        assert_eq!(sq[0], Rect::new(0, 0, 13107, 13107));
        assert_eq!(sq[3], Rect::new(26215, 13108, 39321, 26214));
        assert!(containment_predicate(&sq));
        // with 5 | scale the boundaries touch and the predicate fails
        assert!(!containment_predicate(&unit_square_subsquares(100)));
    }

    #[test]
    fn cluster_sizes() {
        assert_eq!(cluster_size(900, 8), 5);
        assert_eq!(cluster_size(900, 5), 12);
        assert_eq!(cluster_size(5, 2), 1);
        let w = FourCellWitness {
            cells: [centered(0, 0), centered(10, 0), centered(0, 10), centered(3, 3)],
            grid_cells: None,
            clusters: [vec![0], vec![1], vec![2], vec![3]],
            m: 5,
        };
        assert_eq!(caratheodory_lower_bound(&w), 625);
    }
}
