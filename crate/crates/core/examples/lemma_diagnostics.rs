//! Cell counts, rich cells and hull sizes against their bounds, for a
//! few grid sizes.

use dense_partition::decomposer::{assign_cells, GridConfig, DEFAULT_C_PRIME};
use dense_partition::pointset::gen_perturbed_grid;
use dense_partition::verifier::lemma_bounds_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = gen_perturbed_grid(40, 0.2, 5)?;
    let alpha = ps.density_stats()?.alpha_effective;
    for k in [2, 4, 8] {
        let gc = GridConfig::new(&ps, k, alpha);
        let cells = assign_cells(&ps, &gc);
        println!("k={k} n0={:.1}", gc.n0);
        for check in lemma_bounds_report(&ps, &gc, &cells, DEFAULT_C_PRIME) {
            println!("  {check}");
        }
    }
    Ok(())
}
