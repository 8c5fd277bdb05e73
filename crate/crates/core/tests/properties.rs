//! Randomized invariants: field axioms, group structure, gauge invariance and file round trips.

mod common;

use std::sync::Arc;

use proptest::prelude::*;

use gcrossed::centralizer::CentralizerContext;
use gcrossed::crossed::{Limits, PointedCrossedCategory, RawInstance};
use gcrossed::cyclotomic::{Cyclotomic, Root};
use gcrossed::group::FiniteGroup;
use gcrossed::instance::{parse_instance, serialize_instance};
use gcrossed::lattice;
use gcrossed::simples::IrrSet;

fn element(n: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((0..n, -4i64..=4), 0..5).prop_map(move |terms| Cyclotomic::from_exponent_sum(n, &terms))
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 9, 10, 12]).prop_flat_map(|n| (element(n), element(n), element(n)))
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(&a * &inv, Cyclotomic::one(a.order()));
        }
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn complex_embedding_is_a_homomorphism((a, b, _c) in triple()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        let prod = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        prop_assert!(close((&a * &b).to_complex(), prod));
        prop_assert!(close((&a + &b).to_complex(), (x.0 + y.0, x.1 + y.1)));
    }

    #[test]
    fn roots_round_trip(n in 1u32..=24, k in -50i64..50) {
        let r = Root::new(n, k);
        prop_assert_eq!(Cyclotomic::from_root(n, r).as_root(), Some(r));
        prop_assert!((r * r.inv()).is_one());
        prop_assert_eq!(r.pow(r.multiplicative_order() as i64), Root::one(n));
    }

    #[test]
    fn builtin_groups_satisfy_lagrange(name in prop::sample::select(vec!["c6", "c8", "klein4", "s3", "d4", "q8"]), a in 0usize..8, b in 0usize..8) {
        let g = FiniteGroup::builtin(name).unwrap();
        let (a, b) = (a % g.order(), b % g.order());
        let h = g.generate(&[a, b]);
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert_eq!(g.mul(g.mul(a, b), g.inv(b)), a);
        prop_assert_eq!(g.pow(a, g.element_order(a)), g.identity());
        let class = g.conjugacy_class(a);
        prop_assert!(class.contains(&g.conj(b, a)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gauge_twists_keep_lattice_and_centralizers(name in prop::sample::select(vec!["c2", "c3", "c4", "klein4", "s3"]), seed in any::<u64>()) {
        let plain = RawInstance::untwisted_double(&FiniteGroup::builtin(name).unwrap());
        let twisted = common::gauge_twist(&plain, seed);
        let text = serialize_instance(&twisted);
        prop_assert_eq!(&parse_instance(&text).unwrap(), &twisted);
        let shape = |raw: &RawInstance| {
            let cat = Arc::new(PointedCrossedCategory::validate(raw, Limits::default()).unwrap());
            let irr = IrrSet::new(cat).unwrap();
            let lat = lattice::enumerate_subcategories(&irr).unwrap();
            let ctx = CentralizerContext::new(&irr, &lat).unwrap();
            assert!(ctx.routes_agree && ctx.identities().is_clean());
            let mut sig: Vec<(u64, u64, usize)> = (0..lat.len())
                .map(|i| (lat.subcats[i].fpdim, lat.subcats[ctx.prime[i]].fpdim, lat.subcats[i].datum.h.order()))
                .collect();
            sig.sort();
            (sig, lat.hasse_edges().len(), ctx.reports().iter().all(|r| r.passes()))
        };
        let (a, b) = (shape(&plain), shape(&twisted));
        prop_assert!(b.2);
        prop_assert_eq!(a, b);
    }
}
