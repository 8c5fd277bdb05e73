//! Validates a built-in double, then breaks one entry of its associator and lists what fails.

use gcrossed::crossed::{InstanceError, Limits, PointedCrossedCategory, RawInstance};
use gcrossed::group::FiniteGroup;

fn main() {
    let raw = RawInstance::untwisted_double(&FiniteGroup::s3());
    let cat = PointedCrossedCategory::validate(&raw, Limits::default()).expect("the double of S3 is valid");
    println!(
        "D(S3): |G| = {}, |X| = {}, N = {}, {} orbits, grading surjective: {}",
        cat.g().order(),
        cat.x().order(),
        cat.order(),
        cat.orbit_reps().len(),
        cat.grading_surjective()
    );

    let mut broken = RawInstance::untwisted_double(&FiniteGroup::cyclic(2));
    broken.w[1] = 1;
    match PointedCrossedCategory::validate(&broken, Limits::default()) {
        Err(InstanceError::Violations(v)) => {
            println!("corrupted D(C2): {} violations", v.len());
            for x in v {
                println!("  {x}");
            }
        }
        other => println!("unexpected: {other:?}"),
    }

    let tight = Limits { group: 4, ..Limits::default() };
    println!("with |G| <= 4: {}", PointedCrossedCategory::validate(&raw, tight).unwrap_err());
}
