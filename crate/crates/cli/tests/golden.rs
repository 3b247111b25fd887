mod common;

use common::check_golden;

macro_rules! golden {
    ($name:ident, $file:literal) => {
        #[test]
        fn $name() {
            let dir = tempfile::tempdir().unwrap();
            let reports = check_golden($file, dir.path()).unwrap();
            assert!(!reports.is_empty());
            for r in reports {
                assert!(r.passed(), "{}", r.summary_line());
            }
        }
    };
}

golden!(paramp, "paramp.toml");
golden!(quench, "quench.toml");
golden!(swing, "swing.toml");
golden!(unruh, "unruh.toml");
golden!(blackhole, "blackhole.toml");
golden!(dce_cavity, "dce_cavity.toml");
golden!(dce_receding, "dce_receding.toml");
golden!(squid_horizon, "squid_reference.toml");

#[test]
fn comparison_respects_tolerance() {
    assert!(common::compare_csv("a\n1.0\n", "a\n1.0000000000001\n").is_ok());
    assert!(common::compare_csv("a\n1.0\n", "a\n1.00001\n").is_err());
    assert!(common::compare_csv("a\n1.0\n", "b\n1.0\n").is_err());
}
