use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use truthrows::series::{generating_function, generating_functions, gf_coefficients};
use truthrows::{PowerSeries, SequenceId, SequenceTables};

const ORDER: usize = 65;

#[test]
fn coefficients_match_recurrences() {
    let tables = SequenceTables::compute(ORDER - 1);
    for id in SequenceId::WITH_GENERATING_FUNCTION {
        let coeffs = gf_coefficients(id, ORDER).unwrap();
        assert_eq!(coeffs.len(), ORDER - 1);
        for (i, q) in coeffs.iter().enumerate() {
            let n = i + 1;
            assert!(q.is_integer(), "{id} coefficient {n} is {q}");
            let expected = BigInt::from(tables.get(id, n).unwrap().clone());
            assert_eq!(q.to_integer(), expected, "{id} at n = {n}");
        }
    }
}

#[test]
fn catalan_shares_the_type2_closed_form() {
    assert_eq!(
        generating_function(SequenceId::Cat, 20).unwrap(),
        generating_function(SequenceId::H, 20).unwrap()
    );
}

#[test]
fn series_identities() {
    use SequenceId::*;
    let ids = [G, F, T1, T2, T3, Y, D1, D2, D3, H, K1, K2, K3];
    let s = generating_functions(&ids, ORDER).unwrap();
    let [g, f, t1, t2, t3, y, d1, d2, d3, h, k1, k2, k3] =
        <[PowerSeries; 13]>::try_from(s).unwrap();
    let x = PowerSeries::x(ORDER);

    // the true row at n = 1 has no top-level split, so no case counts it
    let cased = &g - &x;
    assert_eq!(&(&(&f + &t1) + &t2) + &t3, cased);
    assert_eq!(&(&(&y + &d1) + &d2) + &d3, cased);
    assert_eq!(&(&(&h + &k1) + &k2) + &k3, cased);
    assert_eq!(t2, &f - &x);
    let gh = &g - &h;
    assert_eq!(k1, &gh * &gh);
    assert_eq!(d1, &y * &y);
    assert_eq!(d2, d3);
    assert_eq!(k2, k3);
}

fn unit_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(-20i64..=20, order - 1).prop_map(move |tail| {
        let mut coeffs = vec![1i64];
        coeffs.extend(tail);
        PowerSeries::from_integers(order, &coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sqrt_of_a_square(a in unit_series(12)) {
        let sq = &a * &a;
        prop_assert_eq!(sq.sqrt().unwrap(), a);
    }

    #[test]
    fn division_undoes_multiplication(a in unit_series(10), b in unit_series(10)) {
        let p = &a * &b;
        prop_assert_eq!(p.checked_div(&b).unwrap(), a);
    }

    #[test]
    fn sqrt_squares_back(a in unit_series(10), k in 1i64..=9) {
        let scaled = a.scale(&BigRational::from_integer(BigInt::from(k * k)));
        let r = scaled.sqrt().unwrap();
        prop_assert_eq!(&r * &r, scaled);
    }
}
