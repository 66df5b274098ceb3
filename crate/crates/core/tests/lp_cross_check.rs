//! The simplex solver against Fourier-Motzkin elimination.

mod common;

use std::collections::BTreeMap;

use common::{fourier_motzkin_feasible, p};
use lrpos::{
    build_lr_system, evaluate_point, feasible, partitions_of, partitions_up_to, ConstraintSystem,
    Family, Partition, Row, VariableIndex,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn system(nvars: usize, eq: &[(Vec<i8>, i64)], le: &[(Vec<i8>, i64)]) -> ConstraintSystem {
    let vars = VariableIndex::all(3)[..nvars].to_vec();
    let mut sys = ConstraintSystem::new(vars);
    let row = |(a, b): &(Vec<i8>, i64)| {
        let coeffs: BTreeMap<usize, i8> = a
            .iter()
            .take(nvars)
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(v, &c)| (v, c))
            .collect();
        Row::new(coeffs, (*b).into(), Family::Other)
    };
    sys.eq.extend(eq.iter().map(row));
    sys.le.extend(le.iter().map(row));
    sys
}

fn rows(max: usize) -> impl Strategy<Value = Vec<(Vec<i8>, i64)>> {
    prop::collection::vec((prop::collection::vec(-1i8..=1, 4), -3i64..=3), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn random_unit_systems(nvars in 1usize..=4, eq in rows(2), le in rows(5)) {
        let sys = system(nvars, &eq, &le);
        let res = feasible(&sys);
        prop_assert_eq!(res.is_feasible(), fourier_motzkin_feasible(&sys));
        if let Some(w) = &res.witness {
            prop_assert!(evaluate_point(&sys, w).unwrap().satisfied);
        }
    }
}

/// Every triple with |γ| <= 6 at ranks up to 4, trivially rejected or not.
#[test]
fn lr_systems_up_to_rank_four() {
    let mut checked = 0;
    for n in 1..=4 {
        for gamma in partitions_up_to(6, n) {
            let g: u64 = gamma.size().try_into().unwrap();
            for alpha in partitions_up_to(g, n) {
                let a: u64 = alpha.size().try_into().unwrap();
                for beta in partitions_of(g - a, n) {
                    let sys = build_lr_system(&alpha, &beta, &gamma, n).unwrap();
                    assert_eq!(
                        feasible(&sys).is_feasible(),
                        fourier_motzkin_feasible(&sys),
                        "alpha={alpha} beta={beta} gamma={gamma} n={n}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

fn scaled(x: &Partition, q: u64) -> Partition {
    x.scale(&BigUint::from(q)).unwrap()
}

#[test]
fn scaling_preserves_the_verdict_and_scales_the_witness() {
    let cases = [
        (p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]), true),
        (p(&[1]), p(&[2]), p(&[1, 1, 1]), false),
        (p(&[2, 1]), p(&[1, 1]), p(&[2, 2, 1]), true),
        (p(&[2]), p(&[1, 1]), p(&[4]), false),
    ];
    for (a, b, g, positive) in cases {
        let base = feasible(&build_lr_system(&a, &b, &g, 3).unwrap());
        assert_eq!(base.is_feasible(), positive, "{a} {b} {g}");
        for q in [2u64, 7, 1_000_000_007] {
            let sys = build_lr_system(&scaled(&a, q), &scaled(&b, q), &scaled(&g, q), 3).unwrap();
            let res = feasible(&sys);
            assert_eq!(res.is_feasible(), positive, "{a} {b} {g} q={q}");
            assert_eq!(res.pivot_count, base.pivot_count);
            if let (Some(w), Some(w1)) = (&res.witness, &base.witness) {
                let q = num_rational::BigRational::from_integer(q.into());
                for (k, v) in &w1.coords {
                    assert_eq!(w.coords[k], v * &q);
                }
            }
        }
    }
}
