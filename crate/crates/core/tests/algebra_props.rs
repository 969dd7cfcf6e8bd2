use pillowcase_core::algebra::{
    determinant, matrix_inverse_rational, rat, FieldElem, LaurentPoly, Matrix, RationalFn,
};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-6i64..=6, 0..5))
        .prop_map(|(low, cs)| LaurentPoly::from_int_coeffs(low, &cs))
}

fn field() -> impl Strategy<Value = FieldElem> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| FieldElem::new(rat(a, b), rat(c, d)))
}

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    (-1i64..=1, prop::collection::vec(-3i64..=3, 0..3))
        .prop_map(|(low, cs)| LaurentPoly::from_int_coeffs(low, &cs))
}

fn square_of<S: Strategy<Value = LaurentPoly>>(
    n: usize,
    entry: S,
) -> impl Strategy<Value = Matrix<LaurentPoly>> {
    prop::collection::vec(entry, n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn square(n: usize) -> impl Strategy<Value = Matrix<LaurentPoly>> {
    prop::collection::vec(laurent(), n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn assert_inverse(m: &Matrix<LaurentPoly>) -> Result<(), TestCaseError> {
    if determinant(m).is_zero() {
        prop_assert!(matrix_inverse_rational(m).is_err());
        return Ok(());
    }
    let inv = matrix_inverse_rational(m).unwrap();
    let lifted = m.map(|e| RationalFn::from_laurent(e.clone()));
    prop_assert_eq!(
        lifted.mul_mat(&inv),
        Matrix::<RationalFn>::identity(m.rows())
    );
    Ok(())
}

proptest! {
    #[test]
    fn ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn display_round_trip(a in laurent()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn substitution_composes(a in laurent(), v in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), w in prop::sample::select(vec![-2i64, -1, 1, 2, 4])) {
        let lhs = a.substitute_power(v).unwrap().substitute_power(w).unwrap();
        prop_assert_eq!(lhs, a.substitute_power(v * w).unwrap());
    }

    #[test]
    fn field_inverse(a in field()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), FieldElem::one());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(FieldElem::from_laurent(&a.to_laurent()), a);
    }

    #[test]
    fn field_conj_is_multiplicative(a in field(), b in field()) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(FieldElem::from_laurent(&a.to_laurent().conjugate()), a.conj());
    }

    #[test]
    fn inverse_2x2(m in square(2)) {
        assert_inverse(&m)?;
    }

    #[test]
    fn field_reduction_is_a_ring_map(a in laurent(), b in laurent()) {
        let lhs = FieldElem::from_laurent(&(&a * &b));
        prop_assert_eq!(lhs, &FieldElem::from_laurent(&a) * &FieldElem::from_laurent(&b));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inverse_3x3(m in square(3)) {
        assert_inverse(&m)?;
    }

    #[test]
    fn inverse_4x4(m in square_of(4, small_laurent())) {
        assert_inverse(&m)?;
    }
}
