//! Exact orientation and proper-crossing tests on lattice points.

use dense_partition::geometry::{convex_hull, orientation, segments_cross, Point, Segment};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = Point::new(0, 0);
    let b = Point::new(4, 4);
    let c = Point::new(0, 4);
    let d = Point::new(4, 0);

    println!("orient(a, b, c) = {:?}", orientation(&a, &b, &c));
    println!("orient(a, b, d) = {:?}", orientation(&a, &b, &d));

    let diag = Segment::new(a, b)?;
    let anti = Segment::new(c, d)?;
    println!("diagonals cross: {}", segments_cross(&diag, &anti)?);

    // sharing an endpoint is never a crossing
    let side = Segment::new(a, c)?;
    println!("diag vs side: {}", segments_cross(&diag, &side)?);

    // collinear input is reported, not guessed
    let mid = Segment::new(Point::new(1, 1), Point::new(3, 3))?;
    match segments_cross(&diag, &mid) {
        Ok(x) => println!("overlap: {x}"),
        Err(e) => println!("overlap: {e}"),
    }

    let hull = convex_hull(&[a, b, c, d, Point::new(2, 1)]);
    println!("hull has {} vertices", hull.len());
    Ok(())
}
