mod common;

use common::{fault_base, fault_fixtures, Flag};
use dense_partition::verify_partition;

#[test]
fn base_passes() {
    let (ps, d) = fault_base();
    let r = verify_partition(&ps, &d);
    assert!(r.passed(), "{r}");
}

#[test]
fn each_corruption_trips_its_flag() {
    let (ps, base) = fault_base();
    for f in fault_fixtures(&ps, &base) {
        let r = verify_partition(&ps, &f.decomposition);
        assert!(!r.passed(), "{} passed", f.name);
        let tripped = match f.expect {
            Flag::Partition => !r.partition_ok,
            Flag::Planarity => !r.planarity_ok,
            Flag::Count => !r.count_ok,
            Flag::Shape => !r.shape_ok,
        };
        assert!(tripped, "{}: expected {:?}, got {r}", f.name, f.expect);
    }
}

#[test]
fn corruptions_survive_a_file_round_trip() {
    let (ps, base) = fault_base();
    for f in fault_fixtures(&ps, &base) {
        let text = f.decomposition.to_text();
        let back = dense_partition::Decomposition::from_text(&text).unwrap();
        assert_eq!(back, f.decomposition, "{}", f.name);
        assert!(!verify_partition(&ps, &back).passed());
    }
}
