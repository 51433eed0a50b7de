//! Counting 4-subsets with one point inside the triangle of the other three.

use dense_partition::pointset::{gen_perturbed_grid, gen_uniform_unit_square};
use dense_partition::verifier::count_4tuples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, ps) in [
        ("grid 6x6", gen_perturbed_grid(6, 0.2, 3)?),
        ("uniform 100", gen_uniform_unit_square(100, 3)?),
    ] {
        let c = count_4tuples(&ps)?;
        println!("{name:<12} unordered={} ordered={}", c.unordered, c.ordered);
    }
    Ok(())
}
