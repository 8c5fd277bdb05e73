//! Müger centralizers in the toric code, computed by double braiding and by the closed form.

use std::sync::Arc;

use gcrossed::centralizer::CentralizerContext;
use gcrossed::crossed::{Limits, PointedCrossedCategory};
use gcrossed::group::FiniteGroup;
use gcrossed::lattice::enumerate_subcategories;
use gcrossed::simples::IrrSet;

fn main() {
    let cat = Arc::new(PointedCrossedCategory::untwisted_double(&FiniteGroup::cyclic(2), Limits::default()).unwrap());
    let irr = IrrSet::new(cat).unwrap();
    let lat = enumerate_subcategories(&irr).unwrap();
    let ctx = CentralizerContext::new(&irr, &lat).unwrap();
    println!("routes agree: {}, nondegenerate: {}", ctx.routes_agree, ctx.is_nondegenerate());
    print!("{}", ctx.matrix.to_text());
    for r in ctx.reports() {
        println!(
            "#{}' = #{}  FPdim {} -> {}  prediction holds: {}",
            r.input,
            r.centralizer,
            lat.subcats[r.input].fpdim,
            r.fpdim,
            r.prediction.as_ref().is_some_and(|p| p.holds())
        );
    }
    assert!(ctx.identities().is_clean());
}
