use super::{presentation_matrix, AlexanderError, ModuleVector, SeifertData};
use crate::algebra::{
    matrix_inverse_rational, LaurentPoly, Matrix, RationalFn, TorsionPairingValue,
};

/// The rational Blanchfield pairing computed from a Seifert matrix.
///
/// With relations given by the rows of `M = tA − Aᵀ`, the pairing on
/// generator coordinates is
///
/// ```text
/// Bl(x, y) = conj(x)ᵀ · (t − 1)·(Mᵀ)⁻¹ · y   in ℚ(t)/ℚ[t^{±1}]
/// ```
///
/// conjugate-linear in the first slot. Using `Mᵀ` makes the value vanish
/// whenever either argument is a relation, so it is well defined on the
/// module, and `conj((t − 1)(Mᵀ)⁻¹)ᵀ = (t − 1)(Mᵀ)⁻¹` makes it exactly
/// Hermitian.
#[derive(Clone, Debug)]
pub struct BlanchfieldForm {
    kernel: Matrix<RationalFn>,
    /// `kernel = numerators / denominator` entrywise.
    numerators: Matrix<LaurentPoly>,
    denominator: LaurentPoly,
}

impl BlanchfieldForm {
    pub fn new(s: &SeifertData) -> Result<Self, AlexanderError> {
        let m = presentation_matrix(s).matrix().transpose();
        let inv = matrix_inverse_rational(&m)?;
        let t_minus_one = RationalFn::from_laurent(LaurentPoly::from_int_coeffs(0, &[-1, 1]));
        let kernel = inv.map(|e| &t_minus_one * e);
        let denominator = kernel
            .iter_rows()
            .flatten()
            .fold(LaurentPoly::one(), |acc, e| {
                let g = acc.gcd(e.denominator());
                &acc * &e.denominator().div_exact(&g).expect("gcd divides")
            });
        let numerators = kernel.map(|e| {
            e.numerator()
                * &denominator
                    .div_exact(e.denominator())
                    .expect("common multiple")
        });
        Ok(BlanchfieldForm {
            kernel,
            numerators,
            denominator,
        })
    }

    /// The form of the square knot on `(a_1, b_1, a_2, b_2)`.
    pub fn square_knot() -> Self {
        Self::new(&SeifertData::square_knot()).expect("square knot presentation is nonsingular")
    }

    /// `(t − 1)(Mᵀ)⁻¹`.
    pub fn kernel(&self) -> &Matrix<RationalFn> {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.kernel.rows()
    }

    /// Pairing of vectors in generator coordinates.
    pub fn pair(
        &self,
        x: &[LaurentPoly],
        y: &[LaurentPoly],
    ) -> Result<TorsionPairingValue, AlexanderError> {
        let n = self.rank();
        if x.len() != n || y.len() != n {
            return Err(AlexanderError::DimensionMismatch {
                expected: n,
                found: x.len().max(y.len()),
            });
        }
        let mut acc = LaurentPoly::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let cx = xi.conjugate();
            for (j, yj) in y.iter().enumerate() {
                let n = &self.numerators[(i, j)];
                if yj.is_zero() || n.is_zero() {
                    continue;
                }
                acc = &acc + &(&(&cx * n) * yj);
            }
        }
        let acc = RationalFn::new(acc, self.denominator.clone())?;
        Ok(TorsionPairingValue::from_rational_fn(&acc))
    }

    /// Pairing of module elements in `(a_1, a_2)` coordinates; needs a
    /// genus-2 form such as the square knot's.
    pub fn pair_module(
        &self,
        x: &ModuleVector,
        y: &ModuleVector,
    ) -> Result<TorsionPairingValue, AlexanderError> {
        self.pair(&x.to_generators(), &y.to_generators())
    }
}

/// `Bl(x, y)` for the pairing of `s`.
pub fn blanchfield_pair(
    x: &[LaurentPoly],
    y: &[LaurentPoly],
    s: &SeifertData,
) -> Result<TorsionPairingValue, AlexanderError> {
    BlanchfieldForm::new(s)?.pair(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{delta, FieldElem};

    fn e(i: usize, n: usize) -> Vec<LaurentPoly> {
        (0..n)
            .map(|j| {
                if i == j {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::zero()
                }
            })
            .collect()
    }

    #[test]
    fn trefoil_self_pairing() {
        // (t − 1)²/Δ ≡ −t/Δ, and a direct 2×2 adjugate gives the same entry
        let v = blanchfield_pair(&e(0, 2), &e(0, 2), &SeifertData::trefoil()).unwrap();
        assert_eq!(v.over_delta(), Some(FieldElem::from_ints(0, -1)));
        let oracle =
            RationalFn::new(LaurentPoly::from_int_coeffs(0, &[1, -2, 1]), delta()).unwrap();
        assert_eq!(v, TorsionPairingValue::from_rational_fn(&oracle));
    }

    #[test]
    fn relations_pair_to_zero() {
        let s = SeifertData::square_knot();
        let form = BlanchfieldForm::new(&s).unwrap();
        let m = presentation_matrix(&s);
        for r in m.matrix().iter_rows() {
            for i in 0..4 {
                assert!(form.pair(&e(i, 4), r).unwrap().is_zero());
                assert!(form.pair(r, &e(i, 4)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn zero_pairs_to_zero() {
        let form = BlanchfieldForm::square_knot();
        let y = ModuleVector::new(FieldElem::from_ints(3, -2), FieldElem::t());
        assert!(form
            .pair_module(&ModuleVector::zero(), &y)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn quadratic_identity_small() {
        let form = BlanchfieldForm::square_knot();
        let unit = ModuleVector::new(FieldElem::zero(), FieldElem::one());
        let base = form.pair_module(&unit, &unit).unwrap();
        assert!(!base.is_zero());
        let x = ModuleVector::new(FieldElem::zero(), FieldElem::from_ints(5, 4)); // 4t + 5
        let lhs = form.pair_module(&x, &x).unwrap();
        let coeff = LaurentPoly::from_int(16 + 20 + 25);
        assert_eq!(lhs, base.scale(&coeff));
    }

    #[test]
    fn dimension_mismatch() {
        let form = BlanchfieldForm::square_knot();
        assert!(matches!(
            form.pair(&e(0, 2), &e(0, 4)),
            Err(AlexanderError::DimensionMismatch { .. })
        ));
    }
}
