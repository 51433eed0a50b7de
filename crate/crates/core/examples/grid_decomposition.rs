//! Adaptive decomposition of a perturbed grid, traced k by k, then verified.

use dense_partition::decomposer::{decompose_traced, DecomposeConfig, Mode};
use dense_partition::pointset::gen_perturbed_grid;
use dense_partition::verify_partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = gen_perturbed_grid(30, 0.2, 1)?;
    let alpha = ps.density_stats()?.alpha_effective;
    let out = decompose_traced(&ps, &DecomposeConfig::new(alpha), Mode::Adaptive)?;

    for a in &out.attempts {
        println!(
            "k={:<3} rich={:<4} boundary={:?} hull={:?} witness={}",
            a.k, a.rich, a.boundary_cells, a.hull_vertices, a.witness
        );
    }
    let d = &out.decomposition;
    println!(
        "n={} k={} m={} mode={} count={} c_realized={:.6}",
        d.meta.n,
        d.meta.k,
        d.meta.m,
        d.meta.mode,
        d.meta.subgraph_count,
        d.c_realized()
    );

    let report = verify_partition(&ps, d);
    for line in report.check_lines() {
        println!("{line}");
    }
    Ok(())
}
