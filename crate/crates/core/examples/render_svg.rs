//! Writes an SVG of a grid set with its cell grid and one subgraph.

use dense_partition::cli::{render_svg, RenderLayers};
use dense_partition::decomposer::{decompose, DecomposeConfig, GridConfig, Mode};
use dense_partition::pointset::gen_perturbed_grid;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ps = gen_perturbed_grid(12, 0.2, 2)?;
    let alpha = ps.density_stats()?.alpha_effective;
    let d = decompose(&ps, &DecomposeConfig::new(alpha), Mode::Adaptive)?;
    let layers = RenderLayers {
        grid: Some(GridConfig::new(&ps, d.meta.k.max(2), alpha)),
        subgraph: d.subgraphs[0].edges.clone(),
        highlight: Vec::new(),
    };
    let svg = render_svg(&ps, &layers);
    let path = std::env::temp_dir().join("dense_partition_example.svg");
    std::fs::write(&path, &svg)?;
    println!("wrote {} ({} bytes)", path.display(), svg.len());
    Ok(())
}
