//! The three generators and their density statistics.

use dense_partition::pointset::{
    gen_perturbed_grid, gen_reflection_lowerbound, gen_uniform_unit_square, PointSet,
};

fn show(name: &str, ps: &PointSet) -> Result<(), Box<dyn std::error::Error>> {
    let st = ps.density_stats()?;
    println!(
        "{name:<12} n={:<5} scale={:<6} alpha_effective={:.4} (alpha0={:.4})",
        st.n,
        ps.scale(),
        st.alpha_effective,
        st.alpha0
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    show("grid 30x30", &gen_perturbed_grid(30, 0.2, 7)?)?;
    show("reflection", &gen_reflection_lowerbound(4)?)?;
    show("uniform", &gen_uniform_unit_square(1000, 7)?)?;

    let ps = gen_perturbed_grid(3, 0.2, 1)?;
    print!("{}", ps.to_text());
    let back = PointSet::from_text(&ps.to_text())?;
    assert_eq!(back, ps);
    Ok(())
}
