//! The acceptance battery at full size, one line per criterion.
//!
//! Criterion 10 fails as stated: the literal closed form gives `[2] z2` for
//! `(j2, m) = (1, 1/2)`, and the Peter-Weyl elements differ from the closed
//! forms by `[j2+1]!` whenever `j2 >= 1`. The test pins those failures to
//! exactly these checks so any other regression still fails the run.

use cp2q::suite::{run_criterion, Level, CRITERIA};

fn known_failure(k: usize, check: &str) -> bool {
    k == 10 && (check == "closed form (1, 1, 1/2)" || (check.starts_with("pw = closed form (") && !check.contains(", 0, 0/2)")))
}

#[test]
fn acceptance() {
    let mut unexpected = Vec::new();
    for (k, name) in CRITERIA {
        let r = run_criterion(k, Level::Full).expect("criterion exists");
        let fails: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        println!(
            "criterion {k:>2} {name:<26} {} ({} checks, {} failing, {} ms)",
            if r.pass { "PASS" } else { "FAIL" },
            r.checks.len(),
            fails.len(),
            r.wall_time_ms
        );
        for c in r.failures() {
            println!("    failing: {} (expected {}, got {})", c.name, c.expected, c.got);
        }
        unexpected.extend(fails.iter().filter(|f| !known_failure(k, f)).map(|f| format!("{k}: {f}")));
        if k == 10 {
            assert!(!r.pass, "criterion 10 was expected to fail on the stated closed forms");
        }
    }
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:#?}");
}
