use proptest::prelude::*;
use sylowlab_core::algebra::{is_normal, normal_closure};
use sylowlab_core::exact::{frobenius_bound, lambda_bound};
use sylowlab_core::groupfile::GroupFile;
use sylowlab_core::{FiniteGroup, Permutation, DEFAULT_CAP};

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn gens(degree: usize) -> impl Strategy<Value = Vec<Permutation>> {
    prop::collection::vec(perm(degree), 1..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_a_group_law(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        // a is applied first
        for i in 0..7 {
            prop_assert_eq!(a.mul(&b).apply(i), b.apply(a.apply(i)));
        }
        prop_assert_eq!(a.conjugate_by(&b), b.inverse().mul(&a).mul(&b));
    }

    #[test]
    fn order_and_cycle_notation(a in perm(8)) {
        prop_assert!(a.pow(a.order()).is_identity());
        for k in 1..a.order() {
            prop_assert!(!a.pow(k).is_identity());
        }
        prop_assert_eq!(Permutation::parse(&a.to_cycle_string(), 8).unwrap(), a);
    }

    #[test]
    fn generated_groups_are_closed(gs in gens(6)) {
        let g = FiniteGroup::generate("G", 6, gs, DEFAULT_CAP).unwrap();
        prop_assert_eq!(720 % g.order(), 0);
        let el = g.elements();
        for x in el.iter().step_by(7) {
            for y in el.iter().step_by(5) {
                prop_assert!(g.contains(&x.mul(y)));
            }
        }
        let sizes: Vec<u64> = g.conjugacy_classes().iter().map(|c| c.size() as u64).collect();
        prop_assert_eq!(sizes.iter().sum::<u64>(), g.order());
        prop_assert!(sizes.iter().all(|s| g.order() % s == 0));
    }

    #[test]
    fn group_file_round_trip(gs in gens(6)) {
        let g = FiniteGroup::generate("G", 6, gs, DEFAULT_CAP).unwrap();
        let text = GroupFile::from_group(&g).to_json();
        let back = GroupFile::from_json(&text).unwrap().to_group(DEFAULT_CAP).unwrap();
        prop_assert_eq!(back.elements(), g.elements());
    }

    #[test]
    fn normal_closure_is_normal_and_idempotent(gs in gens(5), h in perm(5)) {
        let g = FiniteGroup::generate("G", 5, gs.clone(), DEFAULT_CAP).unwrap();
        let h = g.subgroup("H", vec![gs[0].mul(&h).mul(&h.inverse())]).unwrap();
        let c = normal_closure(&g, &h).unwrap();
        prop_assert!(is_normal(&g, &c));
        prop_assert!(c.contains_group(&h));
        let again = normal_closure(&g, &c).unwrap();
        prop_assert_eq!(again.elements(), c.elements());
    }

    #[test]
    fn exact_bounds_agree_with_u128(ratio in 1u64..40, n_p in 1u64..40, p in prop::sample::select(vec![2u64, 3, 5])) {
        let s = frobenius_bound(&(ratio as u128), &(n_p as u128), p);
        let lhs = (ratio as u128).pow(p as u32);
        let rhs = (n_p as u128).pow(p as u32 - 1);
        prop_assert_eq!(s.holds_ge(), lhs >= rhs);
    }

    #[test]
    fn lambda_bound_agrees_with_u128(lambdas in prop::collection::vec(1u128..6, 1..5), n_p in 1u128..9, p in prop::sample::select(vec![2u64, 3])) {
        let s = lambda_bound(&lambdas, &n_p, p);
        let lhs = lambdas.iter().product::<u128>().pow(p as u32);
        let rhs = n_p.pow(lambdas.len() as u32);
        prop_assert_eq!((s.lhs, s.rhs), (lhs, rhs));
    }
}
