//! Decomposing `K_n` on a dense point set into fewer than `n` plane
//! subgraphs.
//!
//! The pipeline grids the bounding square, keeps the rich cells, builds the
//! star triangulation of their hull, and looks for a [`FourCellWitness`].
//! The witness clusters `B1..B4` (`m` points each) are covered by `3m`
//! plane two-star forests; every other point contributes one star. Total:
//! `n - 4m + 3m = n - m` subgraphs. Without a witness the trivial `n - 1`
//! stars are emitted.

mod emit;
mod format;
pub mod grid;
pub mod triangulation;
pub mod witness;

use std::fmt;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::pointset::PointSet;

pub use emit::{decompose_special, EdgeFilter};
pub use format::FormatError;
pub use grid::{
    assign_cells, bounding_square, cell_upper_bound_check, is_rich, rich_cells, rich_count_check, BoundingSquare,
    Cell, GridConfig,
};
pub use triangulation::{build_star_triangulation, cells_crossed, StarTriangulation, Wedge};
pub use witness::{
    caratheodory_lower_bound, containment_predicate, find_four_cell_witness, random_mode_witness,
    FourCellWitness,
};

/// Default for the hull-vertex constant `c'` in `v(P) <= c' k^(2/3)`.
pub const DEFAULT_C_PRIME: f64 = 4.0;
pub const DEFAULT_K_MAX: usize = 32;

#[derive(Debug, Error)]
pub enum DecomposeError {
    #[error("rich cells span a degenerate hull ({boundary_cells} boundary cells)")]
    DegenerateHull { boundary_cells: usize },
    #[error("certification failed in subgraph {subgraph}: edges {first} and {second} cross")]
    Certification { subgraph: usize, first: Edge, second: Edge },
    #[error(
        "theoretical parameters out of reach: alpha = {alpha}, c' = {c_prime} give k = {k:.3e} \
         and n0 = {n0:.3e}, but k^2 > n = {n}; use adaptive mode"
    )]
    TheoreticalOutOfReach { alpha: f64, c_prime: f64, k: f64, n0: f64, n: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// An edge `u < v` between point indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Edge { u: u as u32, v: v as u32 }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u as usize, self.v as usize)
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u as usize == x || self.v as usize == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgraphKind {
    Star,
    TwoStarForest,
}

impl fmt::Display for SubgraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgraphKind::Star => "Star",
            SubgraphKind::TwoStarForest => "TwoStarForest",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneSubgraph {
    pub kind: SubgraphKind,
    /// One center for a star, two for a two-star forest.
    pub centers: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecompositionMode {
    Fallback,
    Witness,
}

impl fmt::Display for DecompositionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionMode::Fallback => "Fallback",
            DecompositionMode::Witness => "Witness",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionMeta {
    pub n: usize,
    /// Cells per side of the grid that produced the witness; 0 in fallback.
    pub k: usize,
    /// Witness cluster size; 0 in fallback.
    pub m: usize,
    pub mode: DecompositionMode,
    pub subgraph_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub subgraphs: Vec<PlaneSubgraph>,
    pub meta: DecompositionMeta,
}

impl Decomposition {
    /// `subgraph_count / n`.
    pub fn c_realized(&self) -> f64 {
        self.meta.subgraph_count as f64 / self.meta.n as f64
    }

    pub fn edge_count(&self) -> usize {
        self.subgraphs.iter().map(|s| s.edges.len()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Smallest `k` in `2..=k_max` that yields a witness.
    Adaptive,
    /// `k(alpha) = ceil((24 c' alpha^2)^3) + 1`; refuses when `k^2 > n`.
    Theoretical,
    /// Always `n - 1` stars.
    Fallback,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposeConfig {
    pub alpha: f64,
    pub k_max: usize,
    pub c_prime: f64,
}

impl DecomposeConfig {
    pub fn new(alpha: f64) -> Self {
        DecomposeConfig { alpha, k_max: DEFAULT_K_MAX, c_prime: DEFAULT_C_PRIME }
    }

    fn validate(&self) -> Result<(), DecomposeError> {
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(DecomposeError::InvalidConfig(format!("alpha = {}", self.alpha)));
        }
        if self.k_max < 2 {
            return Err(DecomposeError::InvalidConfig(format!("k_max = {} < 2", self.k_max)));
        }
        if !(self.c_prime > 0.0) {
            return Err(DecomposeError::InvalidConfig(format!("c' = {}", self.c_prime)));
        }
        Ok(())
    }
}

/// One grid size tried by the adaptive search.
#[derive(Debug, Clone, PartialEq)]
pub struct KAttempt {
    pub k: usize,
    pub rich: usize,
    pub boundary_cells: Option<usize>,
    pub hull_vertices: Option<usize>,
    pub witness: bool,
}

#[derive(Debug, Clone)]
pub struct DecomposeOutcome {
    pub decomposition: Decomposition,
    pub witness: Option<FourCellWitness>,
    pub attempts: Vec<KAttempt>,
}

/// `k(alpha) = ceil((24 c' alpha^2)^3) + 1`, as a float since it is
/// usually far beyond any integer grid.
pub fn theoretical_k(alpha: f64, c_prime: f64) -> f64 {
    (24.0 * c_prime * alpha * alpha).powi(3).ceil() + 1.0
}

pub fn decompose(ps: &PointSet, config: &DecomposeConfig, mode: Mode) -> Result<Decomposition, DecomposeError> {
    decompose_traced(ps, config, mode).map(|o| o.decomposition)
}

pub fn decompose_traced(
    ps: &PointSet,
    config: &DecomposeConfig,
    mode: Mode,
) -> Result<DecomposeOutcome, DecomposeError> {
    config.validate()?;
    let n = ps.len();
    let fallback = |attempts| DecomposeOutcome { decomposition: fallback_decomposition(n), witness: None, attempts };
    match mode {
        Mode::Fallback => Ok(fallback(Vec::new())),
        Mode::Theoretical => {
            let k = theoretical_k(config.alpha, config.c_prime);
            if k * k > n as f64 {
                return Err(DecomposeError::TheoreticalOutOfReach {
                    alpha: config.alpha,
                    c_prime: config.c_prime,
                    k,
                    n0: (12.0 * k * k / (config.alpha * config.alpha)).ceil(),
                    n,
                });
            }
            let k = k as usize;
            if n as f64 <= grid::n0(k, config.alpha) {
                return Ok(fallback(Vec::new()));
            }
            let mut attempts = Vec::new();
            match try_k(ps, k, config.alpha, &mut attempts) {
                Some(w) => witness_outcome(ps, k, w, attempts),
                None => Ok(fallback(attempts)),
            }
        }
        Mode::Adaptive => {
            let mut attempts = Vec::new();
            for k in 2..=config.k_max {
                if n as f64 <= grid::n0(k, config.alpha) {
                    break;
                }
                if let Some(w) = try_k(ps, k, config.alpha, &mut attempts) {
                    return witness_outcome(ps, k, w, attempts);
                }
            }
            Ok(fallback(attempts))
        }
    }
}

fn try_k(ps: &PointSet, k: usize, alpha: f64, attempts: &mut Vec<KAttempt>) -> Option<FourCellWitness> {
    let gc = GridConfig::new(ps, k, alpha);
    let cells = assign_cells(ps, &gc);
    let rich = rich_cells(&cells, ps.len(), k);
    let mut attempt = KAttempt { k, rich: rich.len(), boundary_cells: None, hull_vertices: None, witness: false };
    let coords: Vec<(usize, usize)> = rich.iter().map(Cell::coords).collect();
    let found = match build_star_triangulation(&coords, k) {
        Ok(st) => {
            attempt.boundary_cells = Some(st.boundary_cells.len());
            attempt.hull_vertices = Some(st.hull_vertex_count());
            find_four_cell_witness(&rich, &st, ps.len(), k)
        }
        Err(_) => None,
    };
    attempt.witness = found.is_some();
    attempts.push(attempt);
    found
}

fn witness_outcome(
    ps: &PointSet,
    k: usize,
    witness: FourCellWitness,
    attempts: Vec<KAttempt>,
) -> Result<DecomposeOutcome, DecomposeError> {
    let decomposition = decompose_with_witness(ps, &witness, k)?;
    Ok(DecomposeOutcome { decomposition, witness: Some(witness), attempts })
}

/// The special `3m` forests followed by one star per remaining point,
/// all passed through one first-seen edge filter.
pub fn decompose_with_witness(
    ps: &PointSet,
    witness: &FourCellWitness,
    k: usize,
) -> Result<Decomposition, DecomposeError> {
    let n = ps.len();
    let mut filter = EdgeFilter::new(n);
    let mut subgraphs = emit::special_forests(ps, witness, &mut filter)?;
    let mut in_witness = vec![false; n];
    for i in witness.members() {
        in_witness[i] = true;
    }
    for center in (0..n).filter(|&i| !in_witness[i]) {
        let edges: Vec<Edge> = (0..n)
            .filter(|&j| j != center)
            .map(|j| Edge::new(center, j))
            .filter(|e| filter.insert(*e))
            .collect();
        if !edges.is_empty() {
            subgraphs.push(PlaneSubgraph { kind: SubgraphKind::Star, centers: vec![center], edges });
        }
    }
    let meta = DecompositionMeta {
        n,
        k,
        m: witness.m,
        mode: DecompositionMode::Witness,
        subgraph_count: subgraphs.len(),
    };
    Ok(Decomposition { subgraphs, meta })
}

/// Stars `i -> {j > i}` for `i = 0..n-1`.
pub fn fallback_decomposition(n: usize) -> Decomposition {
    let subgraphs: Vec<PlaneSubgraph> = (0..n.saturating_sub(1))
        .map(|i| PlaneSubgraph {
            kind: SubgraphKind::Star,
            centers: vec![i],
            edges: (i + 1..n).map(|j| Edge::new(i, j)).collect(),
        })
        .collect();
    let meta = DecompositionMeta {
        n,
        k: 0,
        m: 0,
        mode: DecompositionMode::Fallback,
        subgraph_count: subgraphs.len(),
    };
    Decomposition { subgraphs, meta }
}

/// Uses the fixed subsquares of the unit square as the witness; falls back
/// to `n - 1` stars when they are too sparse.
pub fn decompose_random_mode(ps: &PointSet) -> Result<Decomposition, DecomposeError> {
    decompose_random_mode_traced(ps).map(|o| o.decomposition)
}

pub fn decompose_random_mode_traced(ps: &PointSet) -> Result<DecomposeOutcome, DecomposeError> {
    match random_mode_witness(ps) {
        Some(w) => witness_outcome(ps, 5, w, Vec::new()),
        None => Ok(DecomposeOutcome {
            decomposition: fallback_decomposition(ps.len()),
            witness: None,
            attempts: Vec::new(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::pointset::{gen_perturbed_grid, gen_uniform_unit_square};

    fn set(pts: &[(i64, i64)]) -> PointSet {
        PointSet::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect(), 1).unwrap()
    }

    #[test]
    fn five_points_fall_back() {
        let ps = set(&[(0, 0), (7, 1), (3, 9), (2, 3), (5, 4)]);
        let d = decompose(&ps, &DecomposeConfig::new(2.0), Mode::Adaptive).unwrap();
        assert_eq!(d.meta.mode, DecompositionMode::Fallback);
        assert_eq!(d.meta.subgraph_count, 4);
        assert_eq!(d.edge_count(), 10);
    }

    #[test]
    fn convex_quadrilateral_falls_back() {
        let ps = set(&[(0, 0), (10, 1), (9, 11), (-1, 8)]);
        let cfg = DecomposeConfig { alpha: 100.0, k_max: 32, c_prime: 4.0 };
        let o = decompose_traced(&ps, &cfg, Mode::Adaptive).unwrap();
        assert!(!o.attempts.is_empty());
        assert_eq!(o.decomposition.meta.mode, DecompositionMode::Fallback);
        assert_eq!(o.decomposition.subgraphs.len(), 3);
    }

    #[test]
    fn grid_finds_witness() {
        let ps = gen_perturbed_grid(30, 0.2, 7).unwrap();
        let alpha = ps.density_stats().unwrap().alpha_effective;
        let o = decompose_traced(&ps, &DecomposeConfig::new(alpha), Mode::Adaptive).unwrap();
        let d = &o.decomposition;
        assert_eq!(d.meta.mode, DecompositionMode::Witness);
        assert_eq!(d.meta.m, witness::cluster_size(900, d.meta.k));
        assert_eq!(d.subgraphs.len(), 900 - d.meta.m);
        assert_eq!(d.edge_count(), 900 * 899 / 2);
        assert!(o.witness.unwrap().sample_check(&ps, 2000, 1).unwrap());
    }

    #[test]
    fn theoretical_mode_refuses_at_desk_scale() {
        let ps = gen_perturbed_grid(10, 0.2, 1).unwrap();
        let err = decompose(&ps, &DecomposeConfig::new(1.5), Mode::Theoretical).unwrap_err();
        match err {
            DecomposeError::TheoreticalOutOfReach { k, .. } => assert!(k > 1e6),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(theoretical_k(1.0, 1.0), 13825.0);
    }

    #[test]
    fn random_mode_sparse_falls_back() {
        let ps = gen_uniform_unit_square(10, 3).unwrap();
        let d = decompose_random_mode(&ps).unwrap();
        assert_eq!(d.meta.mode, DecompositionMode::Fallback);
        assert_eq!(d.subgraphs.len(), 9);
    }

    #[test]
    fn bad_config() {
        let ps = set(&[(0, 0), (7, 1), (3, 9)]);
        for cfg in [
            DecomposeConfig { alpha: 0.0, k_max: 8, c_prime: 4.0 },
            DecomposeConfig { alpha: 2.0, k_max: 1, c_prime: 4.0 },
            DecomposeConfig { alpha: 2.0, k_max: 8, c_prime: 0.0 },
        ] {
            assert!(matches!(decompose(&ps, &cfg, Mode::Adaptive), Err(DecomposeError::InvalidConfig(_))));
        }
    }
}
