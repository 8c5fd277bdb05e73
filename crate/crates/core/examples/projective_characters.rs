//! Projective characters of the Klein four-group for its nontrivial 2-cocycle.

use std::sync::Arc;

use gcrossed::group::FiniteGroup;
use gcrossed::projchar::{irr_projective, ordinary_char_table, required_order, Cocycle2};

fn main() {
    let g = Arc::new(FiniteGroup::klein4());
    let whole = g.whole();
    // α(a, b) = (-1)^(a_1 b_2) on bit vectors
    let exps: Vec<u32> = (0..16).map(|i| ((i / 4) & 1) as u32 * (((i % 4) >> 1) & 1) as u32).collect();
    let alpha = Cocycle2::new(g.clone(), whole.clone(), 2, exps.clone()).unwrap();
    // character values need the exponent of the central extension
    let n = required_order(&alpha);
    let lifted: Vec<u32> = exps.iter().map(|e| e * n / 2).collect();
    let alpha = Cocycle2::new(g.clone(), whole.clone(), n, lifted).unwrap();
    println!("values live in Q(zeta_{n})");

    let ordinary = ordinary_char_table(g.clone(), whole.clone(), 4).unwrap();
    println!("ordinary: {} characters of degree 1", ordinary.len());
    let proj = irr_projective(&alpha).unwrap();
    for chi in proj.iter() {
        let vals: Vec<String> = chi.values().iter().map(|v| v.to_string()).collect();
        println!("projective: degree {}, values [{}]", chi.degree(), vals.join(", "));
    }
    let sum: u32 = proj.iter().map(|c| c.degree() * c.degree()).sum();
    println!("sum of squared degrees = {sum} = |G|");
}
