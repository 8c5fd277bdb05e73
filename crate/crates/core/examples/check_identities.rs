//! Runs the property checks on a twisted instance and prints the outcome of each.

use std::sync::Arc;

use gcrossed::check::{run_checks, Level};
use gcrossed::crossed::{Limits, PointedCrossedCategory, RawInstance};

fn main() {
    let level = if std::env::args().any(|a| a == "--full") { Level::Full } else { Level::Fast };
    let cat = Arc::new(PointedCrossedCategory::validate(&RawInstance::twisted_s3(), Limits::default()).unwrap());
    let report = run_checks(cat, level);
    for o in &report.outcomes {
        println!("[{}] {}: {}", if o.passed { "pass" } else { "FAIL" }, o.module, o.name);
    }
    for o in &report.observations {
        println!("observation [{}] {}: {}", if o.holds { "holds" } else { "fails" }, o.name, o.detail);
    }
    println!("all passed: {}", report.all_passed());
}
