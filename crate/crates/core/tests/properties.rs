use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use reesval::dvrcalc::general_k_extension;
use reesval::itoh::{is_projectively_equivalent, is_projectively_full, ReesData, SemilocalIdeal};
use reesval::krull::{build_system_s, build_system_u, realize_plan};
use reesval::monomial::{ideal_from_rows, integral_closure_power, rees_valuations};
use reesval::numcore::{int, rat, subgroup_generated, Int};
use reesval::puiseux::{oracle_extension, PuiseuxModel};

fn ideal_rows() -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(
        (0i64..=6, 0i64..=6)
            .prop_filter("nonzero", |&(a, b)| a + b > 0)
            .prop_map(|(a, b)| vec![a, b]),
        1..=5,
    )
}

proptest! {
    #[test]
    fn subgroup_contains_its_generators(
        xs in prop::collection::vec((-50i64..=50, 1i64..=30), 1..=4)
    ) {
        let rats: Vec<_> = xs.iter().map(|&(n, d)| rat(n, d)).collect();
        let g = subgroup_generated(&rats);
        for r in &rats {
            prop_assert!(g.contains(r));
        }
        if rats.iter().any(|r| !r.is_zero()) {
            prop_assert!(!g.is_trivial());
        }
    }

    #[test]
    fn oracle_matches_calculus_beyond_the_grid(e in 1i64..=5000, k in 1i64..=5000) {
        let calc = general_k_extension(&int(e), &int(k)).unwrap();
        let oracle = oracle_extension(&PuiseuxModel::new(int(e), int(k)).unwrap()).unwrap();
        prop_assert_eq!(calc.ramification, oracle.ramification);
        prop_assert_eq!(calc.residue_degree, oracle.residue_degree);
        prop_assert_eq!(calc.degree, oracle.degree);
    }

    #[test]
    fn closure_contains_power_and_is_stable(rows in ideal_rows(), k in 1i64..=3) {
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let ideal = ideal_from_rows(&refs).unwrap();
        let power = ideal.power(k).unwrap();
        let closure = integral_closure_power(&ideal, k).unwrap();
        for g in power.generators() {
            prop_assert!(closure.contains(g));
        }
        // Closing the closure changes nothing.
        prop_assert_eq!(integral_closure_power(&closure, 1).unwrap(), closure.clone());
        prop_assert_eq!(
            rees_valuations(&closure).normals(),
            rees_valuations(&ideal).normals()
        );
    }

    #[test]
    fn realizations_are_uniform(
        xs in prop::collection::vec(1i64..=1000, 1..=12),
        k in 1i64..=4
    ) {
        let rees = ReesData::from_i64(&xs).unwrap();
        let s = realize_plan(&build_system_s(&rees, &int(k)).unwrap(), &rees).unwrap();
        prop_assert_eq!(s.uniform_rees_integer, Some(rees.lcm()));
        let u = realize_plan(&build_system_u(&rees, &int(k)).unwrap(), &rees).unwrap();
        prop_assert_eq!(u.uniform_rees_integer, Some(int(k) * rees.lcm()));
        prop_assert_eq!(u.maximal_ideal_count, rees.sum());
    }

    #[test]
    fn powers_are_projectively_equivalent(
        xs in prop::collection::vec(0i64..=40, 1..=5),
        n in 1i64..=9
    ) {
        prop_assume!(xs.iter().any(|&x| x > 0));
        let a = SemilocalIdeal::from_i64(&xs).unwrap();
        let b = a.pow(&int(n));
        prop_assert!(is_projectively_equivalent(&a, &b).unwrap());
        let g = xs.iter().fold(Int::zero(), |acc, &x| acc.gcd(&int(x)));
        prop_assert_eq!(is_projectively_full(&a).unwrap(), g.is_one());
        prop_assert_eq!(is_projectively_full(&b).unwrap(), g.is_one() && n == 1);
    }
}
