//! The lattice of fusion subcategories of Rep(D(S3)) and its Hasse diagram in DOT.

use std::sync::Arc;

use gcrossed::crossed::{Limits, PointedCrossedCategory};
use gcrossed::group::FiniteGroup;
use gcrossed::lattice::enumerate_subcategories;
use gcrossed::simples::IrrSet;

fn main() {
    let cat = Arc::new(PointedCrossedCategory::untwisted_double(&FiniteGroup::s3(), Limits::default()).unwrap());
    let irr = IrrSet::new(cat).unwrap();
    let lat = enumerate_subcategories(&irr).unwrap();
    println!("{} fusion subcategories", lat.len());
    for (i, sc) in lat.subcats.iter().enumerate() {
        let labels: Vec<String> = sc.members.indices().iter().map(|&m| irr.get(m).label()).collect();
        println!("#{i:<2} {}  FPdim {:<3} [{}]", sc.datum.summary(), sc.fpdim, labels.join(" "));
    }
    let (a, b) = (4, 5);
    println!("#{a} meet #{b} = #{}, #{a} join #{b} = #{}", lat.meet[a][b], lat.join[a][b]);
    assert!(lat.cross_check(&irr).unwrap().is_empty());
    println!();
    print!("{}", lat.to_dot(&irr));
}
