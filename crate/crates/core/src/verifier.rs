//! Independent certification of decompositions, plus brute-force oracles.
//!
//! Nothing here reads the decomposer's choices back: partition, planarity
//! and shape are recomputed from the point set and the raw edge lists. Only
//! the geometric predicates are shared.

use std::fmt;

use thiserror::Error;

use crate::decomposer::{
    build_star_triangulation, cells_crossed, triangulation, Cell, Decomposition, DecompositionMode, Edge,
    GridConfig, SubgraphKind,
};
use crate::geometry::{orientation, segments_cross, GeometryError, Orientation, Segment};
use crate::pointset::PointSet;

/// Largest point set [`max_crossing_family_exact`] accepts by default.
pub const DEFAULT_CROSSING_FAMILY_LIMIT: usize = 16;
/// Hard ceiling for the clique search: edges of `K_16` fill 120 of 128 bits.
const CLIQUE_BITS: usize = 128;
/// Largest point set [`count_4tuples`] accepts.
pub const FOUR_TUPLE_LIMIT: usize = 200;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{what} needs n <= {limit}, got n = {n}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub partition_ok: bool,
    pub planarity_ok: bool,
    pub count_ok: bool,
    pub shape_ok: bool,
    /// Subgraph index (`None` for whole-decomposition findings) and detail.
    pub failures: Vec<(Option<usize>, String)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.partition_ok && self.planarity_ok && self.count_ok && self.shape_ok
    }

    /// `CHECK <name> PASS|FAIL <detail>` lines, one per flag.
    pub fn check_lines(&self) -> Vec<String> {
        [
            ("partition", self.partition_ok),
            ("planarity", self.planarity_ok),
            ("count", self.count_ok),
            ("shape", self.shape_ok),
        ]
        .into_iter()
        .map(|(name, ok)| {
            let first = self.failures.iter().find(|(_, d)| d.starts_with(name));
            match (ok, first) {
                (true, _) => format!("CHECK {name} PASS ok"),
                (false, Some((Some(i), d))) => format!("CHECK {name} FAIL subgraph {i}: {d}"),
                (false, Some((None, d))) => format!("CHECK {name} FAIL {d}"),
                (false, None) => format!("CHECK {name} FAIL"),
            }
        })
        .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.check_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Bitset over the pairs `u < v < n`.
struct PairSet {
    bits: Vec<u64>,
}

impl PairSet {
    fn new(n: usize) -> Self {
        PairSet { bits: vec![0; (n * n.saturating_sub(1) / 2).div_ceil(64)] }
    }

    fn index(u: usize, v: usize) -> usize {
        v * (v - 1) / 2 + u
    }

    fn insert(&mut self, u: usize, v: usize) -> bool {
        let i = Self::index(u, v);
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.bits[w] & b == 0;
        self.bits[w] |= b;
        fresh
    }

    fn contains(&self, u: usize, v: usize) -> bool {
        let i = Self::index(u, v);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }
}

/// A connected component of one subgraph.
struct Component {
    edges: Vec<Edge>,
    /// Vertices touching every edge: one for a star, two for a single edge,
    /// none otherwise.
    centers: Vec<usize>,
}

/// Scratch space reused across subgraphs, indexed by point.
struct Scratch {
    stamp: Vec<u32>,
    local: Vec<u32>,
    round: u32,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { stamp: vec![0; n], local: vec![0; n], round: 0 }
    }

    fn components(&mut self, edges: &[Edge]) -> Vec<Component> {
        self.round += 1;
        let mut verts: Vec<usize> = Vec::new();
        let mut id = |x: usize, s: &mut Self| {
            if s.stamp[x] != s.round {
                s.stamp[x] = s.round;
                s.local[x] = verts.len() as u32;
                verts.push(x);
            }
            s.local[x] as usize
        };
        let local: Vec<(usize, usize)> = edges
            .iter()
            .map(|e| {
                let (u, v) = e.endpoints();
                (id(u, self), id(v, self))
            })
            .collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &local {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut degree = vec![0usize; verts.len()];
        for &(a, b) in &local {
            degree[a] += 1;
            degree[b] += 1;
        }
        let mut slot = vec![usize::MAX; verts.len()];
        let mut comps: Vec<Component> = Vec::new();
        for (e, &(a, _)) in edges.iter().zip(&local) {
            let r = find(&mut parent, a);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push(Component { edges: Vec::new(), centers: Vec::new() });
            }
            comps[slot[r]].edges.push(*e);
        }
        for c in &mut comps {
            let mut touched: Vec<usize> = Vec::new();
            for e in &c.edges {
                let (u, v) = e.endpoints();
                touched.push(u);
                touched.push(v);
            }
            touched.sort_unstable();
            touched.dedup();
            // a tree whose hub touches every edge
            if touched.len() == c.edges.len() + 1 {
                c.centers = touched
                    .into_iter()
                    .filter(|&x| degree[self.local[x] as usize] == c.edges.len())
                    .collect();
            }
        }
        comps
    }
}

fn segment(ps: &PointSet, e: &Edge) -> Result<Segment, GeometryError> {
    let (u, v) = e.endpoints();
    Segment::new(ps.point(u), ps.point(v))
}

/// First crossing pair among `a x b`, or among pairs of `a` when `b` is
/// `None`.
fn first_crossing(ps: &PointSet, a: &[Edge], b: Option<&[Edge]>) -> Result<Option<(Edge, Edge)>, GeometryError> {
    let sa = a.iter().map(|e| segment(ps, e)).collect::<Result<Vec<_>, _>>()?;
    match b {
        Some(b) => {
            let sb = b.iter().map(|e| segment(ps, e)).collect::<Result<Vec<_>, _>>()?;
            for (i, s) in sa.iter().enumerate() {
                for (j, t) in sb.iter().enumerate() {
                    if segments_cross(s, t)? {
                        return Ok(Some((a[i], b[j])));
                    }
                }
            }
        }
        None => {
            for i in 0..sa.len() {
                for j in i + 1..sa.len() {
                    if segments_cross(&sa[i], &sa[j])? {
                        return Ok(Some((a[i], a[j])));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Checks that `d` partitions the edges of `K_n` on `ps` into plane stars
/// and two-star forests, with the subgraph count its mode promises.
///
/// Within a star every pair of edges shares the center and so cannot cross;
/// all other pairs are tested exactly.
pub fn verify_partition(ps: &PointSet, d: &Decomposition) -> VerificationReport {
    let n = ps.len();
    let mut r = VerificationReport {
        partition_ok: true,
        planarity_ok: true,
        count_ok: true,
        shape_ok: true,
        failures: Vec::new(),
    };

    // partition
    let mut seen = PairSet::new(n);
    let mut distinct = 0usize;
    let mut in_range = vec![true; d.subgraphs.len()];
    for (i, s) in d.subgraphs.iter().enumerate() {
        for e in &s.edges {
            let (u, v) = e.endpoints();
            if u >= v || v >= n {
                r.partition_ok = false;
                in_range[i] = false;
                r.failures.push((Some(i), format!("partition: edge {e} out of range for n = {n}")));
            } else if seen.insert(u, v) {
                distinct += 1;
            } else {
                r.partition_ok = false;
                r.failures.push((Some(i), format!("partition: duplicate edge {e}")));
            }
        }
    }
    let total = n * n.saturating_sub(1) / 2;
    if distinct != total {
        r.partition_ok = false;
        let missing = (1..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .find(|&(u, v)| !seen.contains(u, v))
            .map(|(u, v)| format!(", first {u}-{v}"))
            .unwrap_or_default();
        r.failures.push((None, format!("partition: {} of {total} edges missing{missing}", total - distinct)));
    }

    // shape and planarity
    let mut scratch = Scratch::new(n);
    for (i, s) in d.subgraphs.iter().enumerate() {
        if !in_range[i] {
            r.planarity_ok = false;
            r.shape_ok = false;
            r.failures.push((Some(i), "planarity: not checked, indices out of range".into()));
            r.failures.push((Some(i), "shape: not checked, indices out of range".into()));
            continue;
        }
        let comps = scratch.components(&s.edges);
        if let Some(msg) = shape_problem(s.kind, &s.centers, &comps) {
            r.shape_ok = false;
            r.failures.push((Some(i), format!("shape: {msg}")));
        }
        match crossing_in(ps, &comps) {
            Ok(None) => {}
            Ok(Some((e, f))) => {
                r.planarity_ok = false;
                r.failures.push((Some(i), format!("planarity: edges {e} and {f} cross")));
            }
            Err(err) => {
                r.planarity_ok = false;
                r.failures.push((Some(i), format!("planarity: {err}")));
            }
        }
    }

    // count
    let m = &d.meta;
    let len = d.subgraphs.len();
    let mut count_fail = |msg: String| {
        r.count_ok = false;
        r.failures.push((None, format!("count: {msg}")));
    };
    if m.n != n {
        count_fail(format!("header n = {} but the point set has {n} points", m.n));
    }
    if m.subgraph_count != len {
        count_fail(format!("header announces {} subgraphs, found {len}", m.subgraph_count));
    }
    match m.mode {
        DecompositionMode::Fallback if len != n.saturating_sub(1) => {
            count_fail(format!("Fallback must have n - 1 = {} subgraphs, found {len}", n.saturating_sub(1)))
        }
        DecompositionMode::Witness if m.m == 0 => count_fail("Witness mode with m = 0".into()),
        DecompositionMode::Witness if len + m.m != n => {
            count_fail(format!("Witness must have n - m = {} subgraphs, found {len}", n as i64 - m.m as i64))
        }
        _ => {}
    }
    r
}

fn shape_problem(kind: SubgraphKind, centers: &[usize], comps: &[Component]) -> Option<String> {
    let want = match kind {
        SubgraphKind::Star => 1,
        SubgraphKind::TwoStarForest => 2,
    };
    if comps.is_empty() {
        return Some("no edges".into());
    }
    if comps.len() != want {
        return Some(format!("{kind} has {} components", comps.len()));
    }
    if let Some(j) = comps.iter().position(|c| c.centers.is_empty()) {
        return Some(format!("component with edge {} is not a star", comps[j].edges[0]));
    }
    if centers.len() != want {
        return Some(format!("{kind} declares {} centers", centers.len()));
    }
    // each declared center must be a hub of its own component
    let ok = match centers {
        [c] => comps[0].centers.contains(c),
        [a, b] => {
            (comps[0].centers.contains(a) && comps[1].centers.contains(b))
                || (comps[0].centers.contains(b) && comps[1].centers.contains(a))
        }
        _ => false,
    };
    (!ok).then(|| format!("declared centers {centers:?} are not the star hubs"))
}

fn crossing_in(ps: &PointSet, comps: &[Component]) -> Result<Option<(Edge, Edge)>, GeometryError> {
    for (i, c) in comps.iter().enumerate() {
        if c.centers.is_empty() {
            if let Some(hit) = first_crossing(ps, &c.edges, None)? {
                return Ok(Some(hit));
            }
        }
        for other in &comps[i + 1..] {
            if let Some(hit) = first_crossing(ps, &c.edges, Some(&other.edges))? {
                return Ok(Some(hit));
            }
        }
    }
    Ok(None)
}

/// True iff no two edges cross; exhaustive over all pairs.
pub fn is_plane(ps: &PointSet, edges: &[Edge]) -> Result<bool, GeometryError> {
    Ok(first_crossing(ps, edges, None)?.is_none())
}

/// A set of pairwise crossing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingFamily {
    pub edges: Vec<Edge>,
}

impl CrossingFamily {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// A family of `p` crossing edges gives a partition of `K_n` into
    /// `n - p` plane trees.
    pub fn partition_upper_bound(&self, n: usize) -> usize {
        n - self.edges.len()
    }

    /// No two family members can share a plane subgraph.
    pub fn partition_lower_bound(&self) -> usize {
        self.edges.len()
    }
}

/// True iff every pair of `edges` crosses. Vacuous for fewer than two.
pub fn check_crossing_family(ps: &PointSet, edges: &[Edge]) -> bool {
    let Ok(segs) = edges.iter().map(|e| segment(ps, e)).collect::<Result<Vec<_>, _>>() else {
        return false;
    };
    (0..segs.len()).all(|i| (i + 1..segs.len()).all(|j| matches!(segments_cross(&segs[i], &segs[j]), Ok(true))))
}

/// Maximum pairwise crossing edge set, by branch and bound max clique on
/// the crossing graph of `K_n` (greedy coloring bound).
pub fn max_crossing_family_exact(ps: &PointSet, limit_n: usize) -> Result<CrossingFamily, VerifyError> {
    let n = ps.len();
    let cap = limit_n.min(DEFAULT_CROSSING_FAMILY_LIMIT);
    if n > cap {
        return Err(VerifyError::TooLarge { what: "max_crossing_family_exact", n, limit: cap });
    }
    let edges: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v))).collect();
    debug_assert!(edges.len() <= CLIQUE_BITS);
    let segs = edges.iter().map(|e| segment(ps, e)).collect::<Result<Vec<_>, _>>()?;
    let mut adj = vec![0u128; edges.len()];
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            if segments_cross(&segs[i], &segs[j])? {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    let mut best = Vec::new();
    if !edges.is_empty() {
        let all = if edges.len() == 128 { u128::MAX } else { (1u128 << edges.len()) - 1 };
        expand(&adj, &mut Vec::new(), all, &mut best);
    }
    best.sort_unstable();
    Ok(CrossingFamily { edges: best.into_iter().map(|i| edges[i]).collect() })
}

fn expand(adj: &[u128], clique: &mut Vec<usize>, candidates: u128, best: &mut Vec<usize>) {
    let (order, colors) = color_sort(adj, candidates);
    let mut p = candidates;
    for idx in (0..order.len()).rev() {
        if clique.len() + colors[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        clique.push(v);
        let next = p & adj[v];
        if next == 0 {
            if clique.len() > best.len() {
                *best = clique.clone();
            }
        } else {
            expand(adj, clique, next, best);
        }
        clique.pop();
        p &= !(1 << v);
    }
}

/// Vertices of `p` ordered by greedy color class, with the class number
/// (an upper bound on the clique size among the prefix).
fn color_sort(adj: &[u128], p: u128) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::new();
    let mut colors = Vec::new();
    let mut uncolored = p;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1 << v);
            q &= !adj[v];
            uncolored &= !(1 << v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FourTupleCount {
    /// 4-subsets with one member strictly inside the triangle of the others.
    pub unordered: u64,
    /// Ordered `(a1, a2, a3, a4)` with `a4` inside `a1 a2 a3`: six per subset.
    pub ordered: u64,
}

/// Exact count of non-convex 4-subsets, by orientation signs alone.
pub fn count_4tuples(ps: &PointSet) -> Result<FourTupleCount, VerifyError> {
    let n = ps.len();
    if n > FOUR_TUPLE_LIMIT {
        return Err(VerifyError::TooLarge { what: "count_4tuples", n, limit: FOUR_TUPLE_LIMIT });
    }
    let pts = ps.points();
    let mut sign = vec![0i8; n * n * n];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                sign[(a * n + b) * n + c] = match orientation(&pts[a], &pts[b], &pts[c]) {
                    Orientation::Ccw => 1,
                    Orientation::Cw => -1,
                    Orientation::Collinear => return Err(GeometryError::DegenerateTriangle(pts[a], pts[b], pts[c]).into()),
                };
            }
        }
    }
    let o = |a: usize, b: usize, c: usize| sign[(a * n + b) * n + c];
    let mut unordered = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let abc = o(a, b, c);
                for d in c + 1..n {
                    let (abd, acd, bcd) = (o(a, b, d), o(a, c, d), o(b, c, d));
                    // d in abc, c in abd, b in acd, a in bcd
                    let interior = (abd == bcd && bcd == -acd)
                        || (abc == -bcd && abc == acd)
                        || (-abc == bcd && bcd == abd)
                        || (abc == acd && acd == -abd);
                    unordered += interior as u64;
                }
            }
        }
    }
    Ok(FourTupleCount { unordered, ordered: 6 * unordered })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "NA",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CHECK {} {} {}", self.name, self.status, self.detail)
    }
}

fn status(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Evaluates the per-cell upper bound, the rich-cell lower bound, the
/// hull-vertex bound and the crossed-cell bound on one grid.
///
/// The two counting bounds need `n >= n0` and are reported NA otherwise.
/// The last two depend on the unspecified constant `c'` and are
/// diagnostics.
pub fn lemma_bounds_report(ps: &PointSet, gc: &GridConfig, cells: &[Cell], c_prime: f64) -> Vec<BoundCheck> {
    let n = ps.len();
    let (k, alpha) = (gc.k, gc.alpha);
    let a2 = alpha * alpha;
    let applicable = n as f64 >= gc.n0;
    let gate = format!("n = {n} < n0 = {}", gc.n0);
    let max_cell = cells.iter().map(Cell::len).max().unwrap_or(0);
    let cell_bound = 2.0 * a2 * n as f64 / (k * k) as f64;
    let rich: Vec<(usize, usize)> = cells
        .iter()
        .filter(|c| c.len() as u128 * 3 * (k as u128).pow(2) >= n as u128)
        .map(Cell::coords)
        .collect();
    let rich_bound = (k * k) as f64 / (3.0 * a2);
    let mut out = vec![
        BoundCheck {
            name: "cell_upper_bound",
            status: if applicable { status(max_cell as f64 <= cell_bound) } else { CheckStatus::NotApplicable },
            detail: if applicable {
                format!("max cell {max_cell} <= 2 alpha^2 n / k^2 = {cell_bound:.3}")
            } else {
                format!("{gate}; max cell {max_cell}, bound {cell_bound:.3}")
            },
        },
        BoundCheck {
            name: "rich_cell_count",
            status: if applicable { status(rich.len() as f64 >= rich_bound) } else { CheckStatus::NotApplicable },
            detail: if applicable {
                format!("{} rich >= k^2 / (3 alpha^2) = {rich_bound:.3}", rich.len())
            } else {
                format!("{gate}; {} rich, bound {rich_bound:.3}", rich.len())
            },
        },
    ];
    match build_star_triangulation(&rich, k) {
        Ok(st) => {
            let v = st.hull_vertex_count();
            let vb = triangulation::hull_vertex_bound(k, c_prime);
            out.push(BoundCheck {
                name: "hull_vertices",
                status: status(v as f64 <= vb),
                detail: format!("v(P) = {v}, c' k^(2/3) = {vb:.3} (c' = {c_prime})"),
            });
            let crossed = cells_crossed(&st.segments, k).len();
            let cb = triangulation::crossed_cells_bound(k, c_prime);
            out.push(BoundCheck {
                name: "crossed_cells",
                status: status(crossed as f64 <= cb),
                detail: format!("{crossed} cells meet S, 8 c' k^(5/3) = {cb:.3}"),
            });
        }
        Err(e) => {
            for name in ["hull_vertices", "crossed_cells"] {
                out.push(BoundCheck { name, status: CheckStatus::NotApplicable, detail: e.to_string() });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposer::{assign_cells, fallback_decomposition, DecompositionMeta, PlaneSubgraph};
    use crate::geometry::{point_in_triangle_strict, Point};
    use crate::pointset::gen_perturbed_grid;

    fn set(pts: &[(i64, i64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect(), 1).unwrap()
    }

    fn e(u: usize, v: usize) -> Edge {
        Edge::new(u, v)
    }

    #[test]
    fn fallback_on_five_points_passes() {
        let ps = set(&[(0, 0), (7, 1), (3, 9), (2, 3), (5, 4)]);
        let r = verify_partition(&ps, &fallback_decomposition(5));
        assert!(r.passed(), "{r}");
        assert!(r.failures.is_empty());
    }

    #[test]
    fn duplicate_and_missing_are_reported() {
        let ps = set(&[(0, 0), (7, 1), (3, 9), (2, 3), (5, 4)]);
        let mut d = fallback_decomposition(5);
        d.subgraphs[1].edges.push(e(0, 1));
        let r = verify_partition(&ps, &d);
        assert!(!r.partition_ok);
        assert!(r.failures.iter().any(|(i, m)| *i == Some(1) && m.contains("duplicate edge 0-1")));

        let mut d = fallback_decomposition(5);
        d.subgraphs[0].edges.pop();
        let r = verify_partition(&ps, &d);
        assert!(!r.partition_ok && r.shape_ok && r.count_ok);
        assert!(r.check_lines()[0].contains("1 of 10 edges missing, first 0-4"));
    }

    #[test]
    fn moved_edge_keeps_partition() {
        let ps = set(&[(0, 0), (7, 1), (3, 9), (2, 3), (5, 4)]);
        let mut d = fallback_decomposition(5);
        let moved = d.subgraphs[2].edges.pop().unwrap();
        d.subgraphs[0].edges.push(moved);
        let r = verify_partition(&ps, &d);
        assert!(r.partition_ok);
        assert!(!r.shape_ok);
    }

    #[test]
    fn mismatched_point_file() {
        let ps = set(&[(0, 0), (7, 1), (3, 9)]);
        let r = verify_partition(&ps, &fallback_decomposition(5));
        assert!(!r.partition_ok && !r.count_ok);
        assert!(r.failures.iter().any(|(_, m)| m.contains("out of range")));
    }

    #[test]
    fn two_star_forest_shape() {
        let ps = set(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        let d = Decomposition {
            subgraphs: vec![
                PlaneSubgraph { kind: SubgraphKind::TwoStarForest, centers: vec![0, 2], edges: vec![e(0, 1), e(2, 3)] },
                PlaneSubgraph { kind: SubgraphKind::TwoStarForest, centers: vec![3, 1], edges: vec![e(1, 2), e(0, 3)] },
                PlaneSubgraph { kind: SubgraphKind::TwoStarForest, centers: vec![0, 1], edges: vec![e(0, 2), e(1, 3)] },
            ],
            meta: DecompositionMeta { n: 4, k: 1, m: 1, mode: DecompositionMode::Witness, subgraph_count: 3 },
        };
        assert!(verify_partition(&ps, &d).passed());
        let mut bad = d.clone();
        bad.subgraphs[0].kind = SubgraphKind::Star;
        bad.subgraphs[0].centers = vec![0];
        assert!(!verify_partition(&ps, &bad).shape_ok);
        let mut bad = d.clone();
        bad.subgraphs[0].centers = vec![0, 0];
        assert!(!verify_partition(&ps, &bad).shape_ok);
    }

    #[test]
    fn plane_examples() {
        let ps = set(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert!(is_plane(&ps, &[e(0, 1), e(0, 2), e(0, 3)]).unwrap());
        assert!(!is_plane(&ps, &[e(0, 2), e(1, 3)]).unwrap());
    }

    #[test]
    fn crossing_family_examples() {
        let convex4 = set(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        assert_eq!(max_crossing_family_exact(&convex4, 16).unwrap().len(), 2);
        let inner = set(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        assert_eq!(max_crossing_family_exact(&inner, 16).unwrap().len(), 1);
        let hexagon = set(&[(2, 0), (4, 1), (4, 3), (2, 4), (0, 3), (0, 1)]);
        let f = max_crossing_family_exact(&hexagon, 16).unwrap();
        assert_eq!(f.edges, vec![e(0, 3), e(1, 4), e(2, 5)]);
        assert_eq!(f.partition_upper_bound(6), 3);
        assert!(check_crossing_family(&hexagon, &f.edges));
        assert!(!check_crossing_family(&hexagon, &[e(0, 3), e(0, 1)]));
        assert!(check_crossing_family(&hexagon, &[e(0, 3)]));
        assert!(check_crossing_family(&hexagon, &[]));
        let big = gen_perturbed_grid(5, 0.2, 1).unwrap();
        assert!(matches!(max_crossing_family_exact(&big, 16), Err(VerifyError::TooLarge { .. })));
    }

    #[test]
    fn four_tuple_examples() {
        assert_eq!(count_4tuples(&set(&[(0, 0), (4, 0), (4, 4), (0, 4)])).unwrap().unordered, 0);
        let c = count_4tuples(&set(&[(0, 0), (4, 0), (0, 4), (1, 1)])).unwrap();
        assert_eq!((c.unordered, c.ordered), (1, 6));
    }

    #[test]
    fn four_tuples_match_triangle_tests() {
        let ps = gen_perturbed_grid(4, 0.3, 9).unwrap();
        let p = ps.points();
        let mut expected = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                for c in b + 1..p.len() {
                    for d in c + 1..p.len() {
                        let q = [p[a], p[b], p[c], p[d]];
                        let inside = (0..4).any(|i| {
                            let t: Vec<Point> = (0..4).filter(|&j| j != i).map(|j| q[j]).collect();
                            point_in_triangle_strict(&q[i], &t[0], &t[1], &t[2]).unwrap()
                        });
                        expected += inside as u64;
                    }
                }
            }
        }
        assert_eq!(count_4tuples(&ps).unwrap().unordered, expected);
    }

    #[test]
    fn lemma_report_on_grid() {
        let ps = gen_perturbed_grid(30, 0.2, 7).unwrap();
        let gc = GridConfig::new(&ps, 5, 1.6);
        let cells = assign_cells(&ps, &gc);
        let rep = lemma_bounds_report(&ps, &gc, &cells, 4.0);
        assert_eq!(rep[0].status, CheckStatus::Pass, "{}", rep[0]);
        assert_eq!(rep[1].status, CheckStatus::Pass, "{}", rep[1]);
        assert!(rep[2].detail.starts_with("v(P) = 4"));

        let small = gen_perturbed_grid(5, 0.2, 7).unwrap();
        let gc = GridConfig::new(&small, 5, 1.6);
        let rep = lemma_bounds_report(&small, &gc, &assign_cells(&small, &gc), 4.0);
        assert_eq!(rep[0].status, CheckStatus::NotApplicable);
        assert!(rep[0].to_string().starts_with("CHECK cell_upper_bound NA n = 25 < n0"));
    }
}
