//! Four hand-placed clusters: three far apart, one in the middle. The
//! special construction covers their complete graph with 3m plane
//! two-star forests.

use dense_partition::decomposer::{
    caratheodory_lower_bound, containment_predicate, decompose_special, FourCellWitness,
};
use dense_partition::geometry::{Point, Rect};
use dense_partition::pointset::PointSet;
use dense_partition::verifier::is_plane;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = 4;
    let cells = [
        Rect::square(0, 0, 100),
        Rect::square(10_000, 0, 100),
        Rect::square(0, 10_000, 100),
        Rect::square(3000, 3000, 100),
    ];
    println!("containment predicate: {}", containment_predicate(&cells));

    // slightly irregular offsets keep every triple off a line
    let offsets = [(3, 7), (41, 13), (17, 59), (83, 89)];
    let mut points = Vec::new();
    for (ci, r) in cells.iter().enumerate() {
        for (j, &(dx, dy)) in offsets.iter().enumerate() {
            let t = (ci * 5 + j) as i64;
            points.push(Point::new(r.x0 + dx + t, r.y0 + dy + t * t % 7));
        }
    }
    let ps = PointSet::new(points, 1)?;
    let clusters = [0, 1, 2, 3].map(|c| (c * m..(c + 1) * m).collect::<Vec<_>>());
    let w = FourCellWitness { cells, grid_cells: None, clusters, m };

    println!("ordered 4-tuples guaranteed: {}", caratheodory_lower_bound(&w));
    let forests = decompose_special(&ps, &w)?;
    let edges: usize = forests.iter().map(|f| f.edges.len()).sum();
    println!("{} forests, {} edges (K_{} has {})", forests.len(), edges, 4 * m, 4 * m * (4 * m - 1) / 2);
    for f in &forests {
        assert!(is_plane(&ps, &f.edges)?);
    }
    println!("all forests plane");
    Ok(())
}
