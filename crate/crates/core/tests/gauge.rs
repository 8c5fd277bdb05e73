//! Gauge-equivalent twists of untwisted doubles: the validator must accept them and every
//! combinatorial invariant must be unchanged.

mod common;

use std::sync::Arc;

use gcrossed::crossed::{Limits, PointedCrossedCategory, RawInstance};
use gcrossed::group::FiniteGroup;
use gcrossed::simples::IrrSet;

#[test]
fn gauge_twisted_doubles_validate_and_keep_fusion_rules() {
    for (name, seed) in [("s3", 7u64), ("d4", 11), ("q8", 3), ("c3", 5)] {
        let g = FiniteGroup::builtin(name).unwrap();
        let plain = RawInstance::untwisted_double(&g);
        let twisted = common::gauge_twist(&plain, seed);
        assert_ne!(plain, twisted);
        let a = Arc::new(PointedCrossedCategory::validate(&plain, Limits::default()).unwrap());
        let b = Arc::new(PointedCrossedCategory::validate(&twisted, Limits::default()).unwrap());
        let (sa, sb) = (IrrSet::new(a).unwrap(), IrrSet::new(b).unwrap());
        assert_eq!(sa.len(), sb.len(), "{name}");
        let dims = |s: &IrrSet| {
            let mut v: Vec<u32> = s.simples().iter().map(|x| x.fpdim).collect();
            v.sort();
            v
        };
        assert_eq!(dims(&sa), dims(&sb));
        for x in 0..sb.len() {
            assert_eq!(sb.dual(x).unwrap(), sb.dual_by_search(x).unwrap(), "{name} dual of {x}");
        }
        let ta = sa.fusion_table().unwrap();
        let tb = sb.fusion_table().unwrap();
        let sig = |t: &Vec<Vec<Vec<(usize, u32)>>>| {
            let mut v: Vec<Vec<u32>> = t.iter().flatten().map(|d| d.iter().map(|p| p.1).collect()).collect();
            v.sort();
            v
        };
        assert_eq!(sig(ta), sig(tb), "{name}");
    }
}
