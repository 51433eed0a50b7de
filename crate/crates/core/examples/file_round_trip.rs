//! Point and decomposition files: write, read back, verify.

use dense_partition::decomposer::{decompose, DecomposeConfig, Decomposition, Mode};
use dense_partition::pointset::{gen_uniform_unit_square, PointSet};
use dense_partition::verify_partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir();
    let pts_path = dir.join("dense_partition_points.txt");
    let dec_path = dir.join("dense_partition_decomposition.txt");

    let ps = gen_uniform_unit_square(8, 1)?;
    ps.save(&pts_path)?;
    let d = decompose(&ps, &DecomposeConfig::new(2.0), Mode::Fallback)?;
    d.save(&dec_path)?;
    print!("{}", d.to_text());

    let ps2 = PointSet::load(&pts_path)?;
    let d2 = Decomposition::load(&dec_path)?;
    println!("verified after reload: {}", verify_partition(&ps2, &d2).passed());
    Ok(())
}
