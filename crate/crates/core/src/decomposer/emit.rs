//! Emission of the `3m` two-star forests on a witness.

use crate::geometry::{segments_cross, Segment};
use crate::pointset::PointSet;

use super::witness::FourCellWitness;
use super::{DecomposeError, Edge, PlaneSubgraph, SubgraphKind};

/// First-seen filter over the `n (n - 1) / 2` edges of `K_n`.
#[derive(Debug, Clone)]
pub struct EdgeFilter {
    bits: Vec<u64>,
}

impl EdgeFilter {
    pub fn new(n: usize) -> Self {
        let pairs = n * n.saturating_sub(1) / 2;
        EdgeFilter { bits: vec![0; pairs.div_ceil(64)] }
    }

    fn slot(e: &Edge) -> usize {
        let v = e.v as usize;
        v * (v - 1) / 2 + e.u as usize
    }

    /// Records `e`; true when it was not seen before.
    pub fn insert(&mut self, e: Edge) -> bool {
        let s = Self::slot(&e);
        let (word, bit) = (s / 64, 1u64 << (s % 64));
        let fresh = self.bits[word] & bit == 0;
        self.bits[word] |= bit;
        fresh
    }
}

/// Cluster pairs `(center cluster, target cluster)` per family; each
/// family pairs star `B_a[i] -> B_a ∪ B_b` with star `B_c[i] -> B_c ∪ B_d`.
const FAMILIES: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(1, 2), (3, 0)], [(0, 2), (1, 3)]];

/// Covers `K_{4m}` on the witness clusters with `3m` plane star forests.
///
/// Edges go through a fresh first-seen filter in the order family, pair
/// index, target index. Each forest is checked pairwise for crossings
/// between its two stars.
pub fn decompose_special(ps: &PointSet, witness: &FourCellWitness) -> Result<Vec<PlaneSubgraph>, DecomposeError> {
    special_forests(ps, witness, &mut EdgeFilter::new(ps.len()))
}

pub(super) fn special_forests(
    ps: &PointSet,
    witness: &FourCellWitness,
    filter: &mut EdgeFilter,
) -> Result<Vec<PlaneSubgraph>, DecomposeError> {
    let b = &witness.clusters;
    let mut out = Vec::with_capacity(3 * witness.m);
    for family in FAMILIES {
        for i in 0..witness.m {
            let stars: Vec<(usize, Vec<Edge>)> = family
                .iter()
                .map(|&(own, other)| {
                    let center = b[own][i];
                    let mut targets: Vec<usize> =
                        b[own].iter().chain(b[other].iter()).copied().filter(|&t| t != center).collect();
                    targets.sort_unstable();
                    let edges = targets
                        .into_iter()
                        .map(|t| Edge::new(center, t))
                        .filter(|e| filter.insert(*e))
                        .collect();
                    (center, edges)
                })
                .collect();
            certify_pair(ps, &stars[0].1, &stars[1].1, out.len())?;
            let live: Vec<&(usize, Vec<Edge>)> = stars.iter().filter(|(_, e)| !e.is_empty()).collect();
            let kind = if live.len() == 2 { SubgraphKind::TwoStarForest } else { SubgraphKind::Star };
            if live.is_empty() {
                continue;
            }
            out.push(PlaneSubgraph {
                kind,
                centers: live.iter().map(|(c, _)| *c).collect(),
                edges: live.iter().flat_map(|(_, e)| e.iter().copied()).collect(),
            });
        }
    }
    Ok(out)
}

fn certify_pair(ps: &PointSet, a: &[Edge], b: &[Edge], subgraph: usize) -> Result<(), DecomposeError> {
    let seg = |e: &Edge| {
        let (u, v) = e.endpoints();
        Segment::new(ps.point(u), ps.point(v))
    };
    let b_segs = b.iter().map(seg).collect::<Result<Vec<_>, _>>()?;
    for ea in a {
        let sa = seg(ea)?;
        for (eb, sb) in b.iter().zip(&b_segs) {
            if segments_cross(&sa, sb)? {
                return Err(DecomposeError::Certification { subgraph, first: *ea, second: *eb });
            }
        }
    }
    Ok(())
}
