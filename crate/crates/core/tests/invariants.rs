mod common;

use common::{edge_contact, parametric_contact, random_point, Contact};
use dense_partition::decomposer::{decompose, DecomposeConfig, Edge, Mode};
use dense_partition::geometry::{orientation, segments_cross, Orientation, Point, Segment};
use dense_partition::pointset::{gen_perturbed_grid, gen_uniform_unit_square};
use dense_partition::verifier::is_plane;
use dense_partition::verify_partition;
use proptest::prelude::*;
use rand::SeedableRng;

fn lattice_point(r: i64) -> impl Strategy<Value = Point> {
    (-r..=r, -r..=r).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn crossing_matches_parametric_oracle(
        a in lattice_point(20), b in lattice_point(20), c in lattice_point(20), d in lattice_point(20),
    ) {
        prop_assume!(a != b && c != d);
        let s1 = Segment::new(a, b).unwrap();
        let s2 = Segment::new(c, d).unwrap();
        match (segments_cross(&s1, &s2), parametric_contact(a, b, c, d)) {
            (Ok(x), Contact::Cross) => prop_assert!(x),
            (Ok(x), Contact::Apart) => prop_assert!(!x),
            (Err(_), Contact::Degenerate) => {}
            (got, want) => prop_assert!(false, "{got:?} vs {want:?}"),
        }
    }

    #[test]
    fn crossing_is_symmetric(
        a in lattice_point(1 << 40), b in lattice_point(1 << 40), c in lattice_point(1 << 40), d in lattice_point(1 << 40),
    ) {
        prop_assume!(a != b && c != d);
        let s1 = Segment::new(a, b).unwrap();
        let s2 = Segment::new(c, d).unwrap();
        let x = segments_cross(&s1, &s2).ok();
        prop_assert_eq!(x, segments_cross(&s2, &s1).ok());
        prop_assert_eq!(x, segments_cross(&s1.reversed(), &s2).ok());
    }

    #[test]
    fn orientation_flips_under_swap(a in lattice_point(1 << 50), b in lattice_point(1 << 50), c in lattice_point(1 << 50)) {
        let o = orientation(&a, &b, &c);
        prop_assert_eq!(orientation(&b, &a, &c), o.reversed());
        prop_assert_eq!(orientation(&b, &c, &a), o);
        if o == Orientation::Collinear {
            prop_assert_eq!(orientation(&a, &c, &b), Orientation::Collinear);
        }
    }
}

#[test]
fn verifier_accepts_decomposer_output_on_many_seeds() {
    for seed in 0..200u64 {
        let ps = if seed % 2 == 0 {
            gen_uniform_unit_square(40 + (seed as usize % 60), seed).unwrap()
        } else {
            gen_perturbed_grid(5 + (seed as usize % 6), 0.2, seed).unwrap()
        };
        let alpha = ps.density_stats().unwrap().alpha_effective;
        let d = decompose(&ps, &DecomposeConfig::new(alpha), Mode::Adaptive).unwrap();
        let report = verify_partition(&ps, &d);
        assert!(report.passed(), "seed {seed}: {report}");
        assert!(d.meta.subgraph_count <= ps.len() - 1);
    }
}

#[test]
fn plane_check_agrees_with_pairwise_oracle() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let pts: Vec<Point> = (0..7).map(|_| random_point(&mut rng, 1 << 20)).collect();
        let Ok(ps) = dense_partition::PointSet::new(pts, 1) else { continue };
        let edges = [Edge::new(0, 1), Edge::new(2, 3), Edge::new(4, 5), Edge::new(1, 6)];
        let oracle = edges
            .iter()
            .enumerate()
            .all(|(i, &e)| edges[i + 1..].iter().all(|&f| edge_contact(&ps, e, f) != Contact::Cross));
        assert_eq!(is_plane(&ps, &edges).unwrap(), oracle);
    }
}
