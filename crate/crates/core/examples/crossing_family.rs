//! Largest pairwise crossing edge sets on reflection sets, and the bounds
//! they put on any plane partition.

use dense_partition::pointset::gen_reflection_lowerbound;
use dense_partition::verifier::{check_crossing_family, max_crossing_family_exact};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for a in 1..=2 {
        let ps = gen_reflection_lowerbound(a)?;
        if ps.len() > 16 {
            println!("a={a}: n={} too large for the exact search", ps.len());
            continue;
        }
        let fam = max_crossing_family_exact(&ps, 16)?;
        assert!(check_crossing_family(&ps, &fam.edges));
        println!(
            "a={a}: n={} family={} partition needs >= {} subgraphs, n - family = {}",
            ps.len(),
            fam.len(),
            fam.partition_lower_bound(),
            fam.partition_upper_bound(ps.len())
        );
    }
    Ok(())
}
