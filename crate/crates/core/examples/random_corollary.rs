//! Uniform random sets: fixed subsquares give a witness of linear size.

use dense_partition::pointset::gen_uniform_unit_square;
use dense_partition::{decompose_random_mode, verify_partition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 2000;
    for seed in 1..=3 {
        let ps = gen_uniform_unit_square(n, seed)?;
        let d = decompose_random_mode(&ps)?;
        let ok = verify_partition(&ps, &d).passed();
        println!(
            "seed={seed} n={n} m={} count={} c_realized={:.4} verified={ok}",
            d.meta.m,
            d.meta.subgraph_count,
            d.c_realized()
        );
    }
    Ok(())
}
