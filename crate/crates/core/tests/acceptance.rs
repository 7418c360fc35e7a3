//! The acceptance battery: one line per criterion, non-zero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use exact2::suite::{run_one, run_suite, Mutation, Status, SuiteConfig};

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let start = Instant::now();
    let report = run_suite(&cfg);
    let mut ok = true;
    for c in &report.criteria {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        println!(
            "criterion {:>2}: {tag}  {} ({} checks, {} passed, {} failed, {} skipped)",
            c.id, c.name, c.checks, c.passed, c.failed, c.skipped
        );
        for n in &c.notes {
            println!("              {n}");
        }
        for f in &c.failures {
            println!("              failed: {}: {}", f.check, f.detail);
        }
        ok &= c.status == Status::Pass;
    }
    println!("battery finished in {:.1}s", start.elapsed().as_secs_f64());

    // Each injected mutation breaks exactly its own criterion.
    for m in Mutation::ALL {
        let mutated = SuiteConfig {
            mutation: Some(m),
            ..cfg
        };
        let broken = run_one(&mutated, m.criterion()).expect("criterion exists");
        let caught = broken.status == Status::Fail;
        println!(
            "mutation {}: {} (criterion {} {})",
            m.as_str(),
            if caught { "PASS" } else { "FAIL" },
            m.criterion(),
            if caught { "fails as injected" } else { "did not fail" }
        );
        ok &= caught;
    }

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
