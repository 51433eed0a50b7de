//! Oracles and fixtures shared by the integration tests. Nothing here calls
//! the library's own predicates.

#![allow(dead_code)]

use dense_partition::decomposer::{fallback_decomposition, Decomposition, Edge, FourCellWitness, SubgraphKind};
use dense_partition::geometry::{Point, Rect};
use dense_partition::pointset::{gen_uniform_unit_square, PointSet, PointSetError};
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contact {
    Cross,
    Apart,
    /// Touching or overlapping without a shared endpoint.
    Degenerate,
}

fn sub(a: Point, b: Point) -> (i128, i128) {
    (a.x() as i128 - b.x() as i128, a.y() as i128 - b.y() as i128)
}

fn cross2(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

/// Parametric form: `p + t r` and `q + u s` meet when
/// `t = (q - p) x s / (r x s)` and `u = (q - p) x r / (r x s)` both lie in
/// `[0, 1]`, compared as fractions.
pub fn parametric_contact(p0: Point, p1: Point, q0: Point, q1: Point) -> Contact {
    if p0 == q0 || p0 == q1 || p1 == q0 || p1 == q1 {
        return Contact::Apart;
    }
    let r = sub(p1, p0);
    let s = sub(q1, q0);
    let qp = sub(q0, p0);
    let den = cross2(r, s);
    if den == 0 {
        if cross2(qp, r) != 0 {
            return Contact::Apart;
        }
        // collinear: project onto r
        let rr = r.0 * r.0 + r.1 * r.1;
        let t0 = qp.0 * r.0 + qp.1 * r.1;
        let t1 = t0 + s.0 * r.0 + s.1 * r.1;
        let (lo, hi) = (t0.min(t1), t0.max(t1));
        return if hi < 0 || lo > rr { Contact::Apart } else { Contact::Degenerate };
    }
    let (tn, un) = (cross2(qp, s), cross2(qp, r));
    let (tn, un, den) = if den < 0 { (-tn, -un, -den) } else { (tn, un, den) };
    if tn < 0 || tn > den || un < 0 || un > den {
        return Contact::Apart;
    }
    if tn == 0 || tn == den || un == 0 || un == den {
        Contact::Degenerate
    } else {
        Contact::Cross
    }
}

pub fn edge_contact(ps: &PointSet, e: Edge, f: Edge) -> Contact {
    let (a, b) = e.endpoints();
    let (c, d) = f.endpoints();
    parametric_contact(ps.point(a), ps.point(b), ps.point(c), ps.point(d))
}

/// Largest pairwise crossing edge set by trying every subset size from the
/// top; sizes above `n / 2` are impossible since members share no vertex.
pub fn crossing_family_by_subsets(ps: &PointSet) -> usize {
    use itertools::Itertools;
    let n = ps.len();
    let edges: Vec<Edge> = (0..n).tuple_combinations().map(|(u, v)| Edge::new(u, v)).collect();
    let m = edges.len();
    let mut crosses = vec![false; m * m];
    for (i, j) in (0..m).tuple_combinations() {
        let c = edge_contact(ps, edges[i], edges[j]) == Contact::Cross;
        crosses[i * m + j] = c;
        crosses[j * m + i] = c;
    }
    for size in (2..=n / 2).rev() {
        let found = (0..m)
            .combinations(size)
            .any(|c| c.iter().tuple_combinations().all(|(&i, &j)| crosses[i * m + j]));
        if found {
            return size;
        }
    }
    usize::from(n >= 2)
}

/// Number of extreme points of four points in general position: `p` is
/// extreme when some line through `p` and another point has the remaining
/// two strictly on one side.
pub fn hull_size4(q: [Point; 4]) -> usize {
    let side = |a: Point, b: Point, c: Point| cross2(sub(b, a), sub(c, a)).signum();
    (0..4)
        .filter(|&i| {
            (0..4).filter(|&j| j != i).any(|j| {
                let rest: Vec<usize> = (0..4).filter(|&l| l != i && l != j).collect();
                let (s1, s2) = (side(q[i], q[j], q[rest[0]]), side(q[i], q[j], q[rest[1]]));
                s1 == s2 && s1 != 0
            })
        })
        .count()
}

/// Unordered 4-subsets whose hull is a triangle.
pub fn count_hull3_subsets(ps: &PointSet) -> u64 {
    use itertools::Itertools;
    ps.points()
        .iter()
        .copied()
        .tuple_combinations()
        .filter(|&(a, b, c, d)| hull_size4([a, b, c, d]) == 3)
        .count() as u64
}

/// Which flag a corrupted decomposition must trip.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    Partition,
    Planarity,
    Count,
    Shape,
}

pub struct Fixture {
    pub name: &'static str,
    pub expect: Flag,
    pub decomposition: Decomposition,
}

/// A valid base: fallback stars on 60 uniform points.
pub fn fault_base() -> (PointSet, Decomposition) {
    let ps = gen_uniform_unit_square(60, 3).unwrap();
    let d = fallback_decomposition(ps.len());
    (ps, d)
}

/// The five corrupted decompositions.
pub fn fault_fixtures(ps: &PointSet, base: &Decomposition) -> Vec<Fixture> {
    let n = ps.len();
    let mut out = Vec::new();

    let mut d = base.clone();
    let e = d.subgraphs[0].edges[0];
    d.subgraphs[5].edges.push(e);
    out.push(Fixture { name: "duplicated edge", expect: Flag::Partition, decomposition: d });

    let mut d = base.clone();
    d.subgraphs[3].edges.pop();
    out.push(Fixture { name: "dropped edge", expect: Flag::Partition, decomposition: d });

    // star 0 takes 1-2 and star 1 takes 0-5
    let mut d = base.clone();
    let i0 = d.subgraphs[0].edges.iter().position(|e| *e == Edge::new(0, 5)).unwrap();
    let i1 = d.subgraphs[1].edges.iter().position(|e| *e == Edge::new(1, 2)).unwrap();
    d.subgraphs[0].edges[i0] = Edge::new(1, 2);
    d.subgraphs[1].edges[i1] = Edge::new(0, 5);
    out.push(Fixture { name: "swapped edge", expect: Flag::Shape, decomposition: d });

    // The last star is the single edge (n-2)-(n-1). Move an edge that
    // crosses it out of its own star and declare the pair a two-star
    // forest: still a partition with the right shape and count.
    let mut d = base.clone();
    let g = Edge::new(n - 2, n - 1);
    let (si, ei) = d.subgraphs[..n - 2]
        .iter()
        .enumerate()
        .find_map(|(si, s)| {
            s.edges
                .iter()
                .position(|&f| !f.touches(n - 2) && !f.touches(n - 1) && edge_contact(ps, f, g) == Contact::Cross)
                .map(|ei| (si, ei))
        })
        .expect("some edge crosses the last one");
    let f = d.subgraphs[si].edges.remove(ei);
    assert!(!d.subgraphs[si].edges.is_empty());
    let last = d.subgraphs.last_mut().unwrap();
    last.kind = SubgraphKind::TwoStarForest;
    last.centers = vec![n - 2, f.u as usize];
    last.edges.push(f);
    out.push(Fixture { name: "injected crossing pair", expect: Flag::Planarity, decomposition: d });

    let mut d = base.clone();
    d.meta.subgraph_count += 1;
    out.push(Fixture { name: "miscounted meta", expect: Flag::Count, decomposition: d });

    out
}

pub fn random_point(rng: &mut impl Rng, r: i64) -> Point {
    Point::new(rng.gen_range(-r..=r), rng.gen_range(-r..=r))
}

/// Four clusters of `m` random lattice points in squares of side 1000
/// around `(0,0)`, `(10000,0)`, `(0,10000)` and `(3000,3000)`; point
/// indices are grouped by cluster.
pub fn synthetic_witness(m: usize, seed: u64) -> (PointSet, FourCellWitness) {
    use rand::SeedableRng;
    let cells = [
        Rect::square(0, 0, 1000),
        Rect::square(10_000, 0, 1000),
        Rect::square(0, 10_000, 1000),
        Rect::square(3000, 3000, 1000),
    ];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |r: &Rect| Point::new(rng.gen_range(r.x0..=r.x1), rng.gen_range(r.y0..=r.y1));
    let mut points: Vec<Point> = cells.iter().flat_map(|r| std::iter::repeat(*r).take(m)).map(|r| draw(&r)).collect();
    let ps = loop {
        match PointSet::new(points.clone(), 1) {
            Ok(ps) => break ps,
            Err(PointSetError::Collinear(_, _, l)) | Err(PointSetError::Duplicate { second: l, .. }) => {
                points[l] = draw(&cells[l / m]);
            }
            Err(e) => panic!("{e}"),
        }
    };
    let clusters = [0, 1, 2, 3].map(|c| (c * m..(c + 1) * m).collect::<Vec<_>>());
    (ps, FourCellWitness { cells, grid_cells: None, clusters, m })
}
