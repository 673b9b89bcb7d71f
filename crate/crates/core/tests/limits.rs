use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use truthrows::analysis::{
    convergence_check, limit_constants, limit_over_total, limit_sum, ordering_check, parity_check,
    ratio, stated_pair_limits, LimitId,
};
use truthrows::{Connective, SequenceId, SequenceTables, Surd};

#[test]
fn ratios_at_one_hundred() {
    let tables = SequenceTables::compute(100);
    assert_eq!(
        ratio(&tables, SequenceId::T2, 100, 9).unwrap(),
        "0.212290865"
    );
    assert_eq!(
        ratio(&tables, SequenceId::T1, 100, 9).unwrap(),
        "0.497093847"
    );
    assert_eq!(
        ratio(&tables, SequenceId::T3, 100, 10).unwrap(),
        "0.0783244229"
    );
    assert_eq!(
        ratio(&tables, SequenceId::F, 100, 9).unwrap(),
        "0.212290865"
    );
}

#[test]
fn limits_sum_to_one() {
    for c in Connective::ALL {
        assert_eq!(limit_sum(c), Surd::one(), "{c}");
    }
}

#[test]
fn pair_limits_are_quotients() {
    for (a, b, stated) in stated_pair_limits() {
        let q = limit_over_total(a)
            .checked_div(&limit_over_total(b))
            .unwrap();
        assert_eq!(q, stated, "{a}/{b}");
    }
}

#[test]
fn every_limit_is_approached_monotonically() {
    let probes = [10, 50, 100, 500, 1000];
    let tables = SequenceTables::compute(1000);
    for limit in limit_constants() {
        if limit.id == LimitId::OverTotal(SequenceId::G) {
            continue; // exact at every n
        }
        let report = convergence_check(&tables, &limit, &probes).unwrap();
        assert!(report.decreasing, "{}", limit.id);
        // the 5/n envelope is for proportions of g; pair limits reach 3 + 2√3
        if let LimitId::OverTotal(_) = limit.id {
            assert!(report.within_envelope, "{}", limit.id);
        }
    }
}

#[test]
fn parity_law_to_1024() {
    let tables = SequenceTables::compute(1024);
    for id in SequenceId::ALL {
        let report = parity_check(&tables, id, 1024).unwrap();
        if id == SequenceId::G {
            // g_n = 2^n C_n is always even
            assert_eq!(report.counterexample, Some(1));
        } else {
            assert!(report.passed, "{id} fails at {:?}", report.counterexample);
        }
    }
}

#[test]
fn ordering_up_to_200() {
    let tables = SequenceTables::compute(200);
    assert_eq!(ordering_check(&tables, 3, 200).unwrap(), None);
}

fn surd(k: u32) -> impl Strategy<Value = Surd> {
    (-50i64..=50, 1i64..=12, -50i64..=50, 1i64..=12)
        .prop_map(move |(a, ad, b, bd)| Surd::from_parts(a, ad, b, bd, k))
}

fn radicand() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 10])
}

proptest! {
    #[test]
    fn surd_field_laws((x, y) in radicand().prop_flat_map(|k| (surd(k), surd(k)))) {
        prop_assert_eq!(x.checked_mul(&y).unwrap(), y.checked_mul(&x).unwrap());
        prop_assert_eq!(x.checked_add(&y).unwrap().checked_sub(&y).unwrap(), x.clone());
        if !y.is_zero() {
            prop_assert_eq!(x.checked_mul(&y).unwrap().checked_div(&y).unwrap(), x);
        }
    }

    #[test]
    fn exact_sign_agrees_with_floating_point(x in radicand().prop_flat_map(surd)) {
        let f = x.to_f64();
        prop_assume!(f.abs() > 1e-9);
        let expected = if f > 0.0 { Ordering::Greater } else { Ordering::Less };
        prop_assert_eq!(x.signum(), expected);
    }

    #[test]
    fn floor_brackets_the_value(x in radicand().prop_flat_map(surd)) {
        let fl = Surd::rational(BigRational::from_integer(x.floor()));
        let next = Surd::rational(BigRational::from_integer(x.floor() + BigInt::from(1)));
        prop_assert_ne!(x.cmp_exact(&fl).unwrap(), Ordering::Less);
        prop_assert_eq!(x.cmp_exact(&next).unwrap(), Ordering::Less);
    }
}
