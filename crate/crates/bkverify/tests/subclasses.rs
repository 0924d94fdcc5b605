use bkverify::sampler::sample_sizes;
use bkverify_core::patterns::{build_c5_plus, induces, ClassSpec};

fn check_subclass(extra: &str, seed: u64) {
    let class = ClassSpec::from_names(format!("p6c4{extra}"), &["P6", "C4", extra]).unwrap();
    let c5_plus = build_c5_plus();
    let out = sample_sizes(&class, 10..=14, 200, seed, None);
    assert_eq!(out.graphs.len(), 200, "{:?}", out.warning);
    for g in &out.graphs {
        assert!(class.contains(g));
        assert!(!induces(g, &c5_plus), "{extra}-free sample contains C5+");
    }
}

#[test]
fn bull_free_members_avoid_c5_plus() {
    check_subclass("bull", 11);
}

#[test]
fn diamond_free_members_avoid_c5_plus() {
    check_subclass("diamond", 12);
}

#[test]
fn both_patterns_are_induced_in_c5_plus() {
    let g = build_c5_plus();
    for name in ["bull", "diamond"] {
        let p = bkverify_core::patterns::named_pattern(name).unwrap();
        assert!(induces(&g, &p), "{name}");
    }
}
