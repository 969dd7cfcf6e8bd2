use pillowcase_core::alexander::{presentation_matrix, BlanchfieldForm, ModuleVector, SeifertData};
use pillowcase_core::algebra::{rat, FieldElem, LaurentPoly};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = FieldElem> {
    (-15i64..=15, 1i64..=6, -15i64..=15, 1i64..=6)
        .prop_map(|(a, b, c, d)| FieldElem::new(rat(a, b), rat(c, d)))
}

fn vector() -> impl Strategy<Value = ModuleVector> {
    (field(), field()).prop_map(|(a, b)| ModuleVector::new(a, b))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-2i64..=2, prop::collection::vec(-4i64..=4, 0..4))
        .prop_map(|(low, cs)| LaurentPoly::from_int_coeffs(low, &cs))
}

fn generators() -> impl Strategy<Value = Vec<LaurentPoly>> {
    prop::collection::vec(laurent(), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sesquilinear(x in vector(), y in vector(), f in field(), g in field()) {
        let form = BlanchfieldForm::square_knot();
        let lhs = form.pair_module(&x.scale(&f), &y.scale(&g)).unwrap();
        let rhs = form.pair_module(&x, &y).unwrap().scale(&(&f.to_laurent().conjugate() * &g.to_laurent()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive(x in vector(), y in vector(), z in vector()) {
        let form = BlanchfieldForm::square_knot();
        let lhs = form.pair_module(&x, &y.add(&z)).unwrap();
        let rhs = form.pair_module(&x, &y).unwrap().add(&form.pair_module(&x, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hermitian(x in vector(), y in vector()) {
        let form = BlanchfieldForm::square_knot();
        prop_assert_eq!(form.pair_module(&x, &y).unwrap(), form.pair_module(&y, &x).unwrap().conjugate());
    }

    #[test]
    fn blocks_do_not_pair(a in field(), b in field()) {
        let form = BlanchfieldForm::square_knot();
        let x = ModuleVector::new(a, FieldElem::zero());
        let y = ModuleVector::new(FieldElem::zero(), b);
        prop_assert!(form.pair_module(&x, &y).unwrap().is_zero());
    }

    #[test]
    fn values_live_over_delta(x in vector(), y in vector()) {
        let form = BlanchfieldForm::square_knot();
        prop_assert!(form.pair_module(&x, &y).unwrap().over_delta().is_some());
    }

    #[test]
    fn well_defined_on_the_module(x in generators(), y in generators(), row in 0usize..4, k in laurent()) {
        // adding a multiple of a relation to either argument changes nothing
        let s = SeifertData::square_knot();
        let form = BlanchfieldForm::new(&s).unwrap();
        let rel = presentation_matrix(&s).matrix().row(row).to_vec();
        let shifted: Vec<LaurentPoly> = x.iter().zip(&rel).map(|(a, r)| a + &(&k * r)).collect();
        prop_assert_eq!(form.pair(&shifted, &y).unwrap(), form.pair(&x, &y).unwrap());
        let shifted: Vec<LaurentPoly> = y.iter().zip(&rel).map(|(a, r)| a + &(&k * r)).collect();
        prop_assert_eq!(form.pair(&x, &shifted).unwrap(), form.pair(&x, &y).unwrap());
    }

    #[test]
    fn generator_section_round_trip(x in vector()) {
        prop_assert_eq!(ModuleVector::from_generators(&x.to_generators()), x);
    }

    #[test]
    fn generator_coordinates_agree_with_module(g in generators(), h in generators()) {
        // b_i = (1 − t)a_i: folding b into a leaves the pairing unchanged
        let form = BlanchfieldForm::square_knot();
        let gv: [LaurentPoly; 4] = g.clone().try_into().unwrap();
        let hv: [LaurentPoly; 4] = h.clone().try_into().unwrap();
        let folded = form
            .pair_module(&ModuleVector::from_generators(&gv), &ModuleVector::from_generators(&hv))
            .unwrap();
        prop_assert_eq!(form.pair(&g, &h).unwrap(), folded);
    }
}
