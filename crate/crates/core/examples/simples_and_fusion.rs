//! Simple objects of Rep(D(S3)) with their dimensions, duals and fusion rules.

use std::sync::Arc;

use gcrossed::crossed::{Limits, PointedCrossedCategory};
use gcrossed::group::FiniteGroup;
use gcrossed::simples::IrrSet;

fn main() {
    let cat = Arc::new(PointedCrossedCategory::untwisted_double(&FiniteGroup::s3(), Limits::default()).unwrap());
    let irr = IrrSet::new(cat).unwrap();
    let duals = irr.duals().unwrap();
    for s in irr.simples() {
        println!(
            "{:>5}: over x{} with |G_x| = {}, degree {}, FPdim {}, dual {}",
            s.label(),
            s.orbit_rep,
            s.stabilizer_order,
            s.degree,
            s.fpdim,
            irr.get(duals[s.index]).label()
        );
    }
    println!("global dimension {} = |G|^2", irr.global_dimension());

    // the 2-dimensional representation squares to 1 + sign + itself
    let rho = irr.simples().iter().find(|s| s.orbit_rep == 0 && s.degree == 2).unwrap().index;
    let terms: Vec<String> = irr.fusion(rho, rho).unwrap().iter().map(|&(c, m)| format!("{m}*{}", irr.get(c).label())).collect();
    println!("{0} x {0} = {1}", irr.get(rho).label(), terms.join(" + "));

    // both fusion routes agree
    for a in 0..irr.len() {
        for b in 0..irr.len() {
            assert_eq!(irr.fusion_constituents(a, b).unwrap(), irr.fusion_by_pairs(a, b).unwrap());
        }
    }
}
