//! A gauge-transformed double has different structure constants but the same lattice and centralizers.

use std::sync::Arc;

use gcrossed::centralizer::CentralizerContext;
use gcrossed::crossed::{Limits, PointedCrossedCategory, RawInstance};
use gcrossed::group::FiniteGroup;
use gcrossed::lattice::enumerate_subcategories;
use gcrossed::simples::IrrSet;

fn shape(raw: &RawInstance) -> (Vec<u64>, Vec<usize>) {
    let cat = Arc::new(PointedCrossedCategory::validate(raw, Limits::default()).unwrap());
    let irr = IrrSet::new(cat).unwrap();
    let lat = enumerate_subcategories(&irr).unwrap();
    let ctx = CentralizerContext::new(&irr, &lat).unwrap();
    assert!(ctx.routes_agree && ctx.identities().is_clean());
    let mut dims: Vec<u64> = lat.subcats.iter().map(|s| s.fpdim).collect();
    dims.sort();
    let mut cdims: Vec<usize> = ctx.reports().iter().map(|r| r.centralizer).collect();
    cdims.sort();
    (dims, cdims)
}

fn main() {
    let plain = RawInstance::untwisted_double(&FiniteGroup::s3());
    let twisted = RawInstance::twisted_s3();
    let changed = plain.gam.iter().zip(&twisted.gam).filter(|(a, b)| a != b).count();
    println!("gamma entries changed by the gauge transform: {changed} of {}", plain.gam.len());
    let (a, b) = (shape(&plain), shape(&twisted));
    println!("subcategory dimensions: {:?}", a.0);
    println!("same lattice shape and centralizers: {}", a == b);

    let custom = RawInstance::untwisted_double(&FiniteGroup::cyclic(3)).gauge_transform(|g, x| ((g * x + 2 * x) % 3) as u32);
    println!("custom twist of D(C3): dimensions {:?}", shape(&custom).0);
}
