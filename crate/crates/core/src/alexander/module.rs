//! The rationalized Alexander module of the square knot,
//! `F⟨a_1⟩ ⊕ F⟨a_2⟩` with `F = ℚ[t]/(t² − t + 1)`, and the curves
//! `γ_k` whose push-offs lie in the kernels `P_k`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{FieldElem, LaurentPoly, Rational};

/// Algebraic intersections `[x_1 y_1 x_2 y_2]` of a curve with
/// `α_1, β_1, α_2, β_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntersectionVector {
    pub x1: i64,
    pub y1: i64,
    pub x2: i64,
    pub y2: i64,
}

impl IntersectionVector {
    pub fn new(x1: i64, y1: i64, x2: i64, y2: i64) -> Self {
        IntersectionVector { x1, y1, x2, y2 }
    }
}

impl fmt::Display for IntersectionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.x1, self.y1, self.x2, self.y2)
    }
}

/// An element of the module in `(a_1, a_2)` coordinates; the `b_i` are
/// eliminated by `b_i = (1 − t)·a_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    pub first: FieldElem,
    pub second: FieldElem,
}

impl ModuleVector {
    pub fn new(first: FieldElem, second: FieldElem) -> Self {
        ModuleVector { first, second }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scale(&self, f: &FieldElem) -> Self {
        ModuleVector::new(f * &self.first, f * &self.second)
    }

    pub fn add(&self, other: &ModuleVector) -> Self {
        ModuleVector::new(&self.first + &other.first, &self.second + &other.second)
    }

    pub fn sub(&self, other: &ModuleVector) -> Self {
        ModuleVector::new(&self.first - &other.first, &self.second - &other.second)
    }

    /// Coordinates on the generators `(a_1, b_1, a_2, b_2)` of `tA − Aᵀ`,
    /// using canonical representatives `c0 + c1·t`.
    pub fn to_generators(&self) -> [LaurentPoly; 4] {
        [
            self.first.to_laurent(),
            LaurentPoly::zero(),
            self.second.to_laurent(),
            LaurentPoly::zero(),
        ]
    }

    /// Inverse of [`Self::to_generators`] on the quotient: folds each `b_i`
    /// into `a_i` via `b_i = (1 − t)·a_i`.
    pub fn from_generators(g: &[LaurentPoly; 4]) -> Self {
        let one_minus_t = LaurentPoly::from_int_coeffs(0, &[1, -1]);
        ModuleVector::new(
            FieldElem::from_laurent(&(&g[0] + &(&one_minus_t * &g[1]))),
            FieldElem::from_laurent(&(&g[2] + &(&one_minus_t * &g[3]))),
        )
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

impl Serialize for ModuleVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.first.to_string(), self.second.to_string()].serialize(serializer)
    }
}

/// `[κ̃(γ)] = (t·x_1 + y_1, t·x_2 + y_2)`.
pub fn module_from_int_vector(v: IntersectionVector) -> ModuleVector {
    let coord = |x: i64, y: i64| FieldElem::from_ints(y, x);
    ModuleVector::new(coord(v.x1, v.y1), coord(v.x2, v.y2))
}

/// `[γ_k]_int = [2k+1, −k, 2k+1, −k−1]`.
pub fn gamma_k(k: u64) -> IntersectionVector {
    let k = k as i64;
    IntersectionVector::new(2 * k + 1, -k, 2 * k + 1, -k - 1)
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `3k² + 3k + 1`.
pub fn w_denominator(k: u64) -> Rational {
    let k = int(k as i64);
    int(3) * &k * &k + int(3) * &k + int(1)
}

/// `f(k) = (2k + 1)/(3k² + 3k + 1)`, the `t`-coefficient of the second
/// coordinate of `w_k`.
pub fn f_coefficient(k: u64) -> Rational {
    (int(2) * int(k as i64) + int(1)) / w_denominator(k)
}

/// `(3k² + 2k)/(3k² + 3k + 1)`, the constant term of the second coordinate.
pub fn g_coefficient(k: u64) -> Rational {
    let kk = int(k as i64);
    (int(3) * &kk * &kk + int(2) * &kk) / w_denominator(k)
}

/// The scalar `(−(2k+1)t + (k+1))/(3k² + 3k + 1)` carrying `[κ̃(γ_k)]`
/// to `w_k`.
pub fn w_scalar(k: u64) -> FieldElem {
    let k = k as i64;
    FieldElem::from_ints(k + 1, -(2 * k + 1)).scale(&(int(1) / w_denominator(k as u64)))
}

/// `w_k = (1, f(k)·t + g(k))`.
pub fn w_k(k: u64) -> ModuleVector {
    ModuleVector::new(
        FieldElem::one(),
        FieldElem::new(g_coefficient(k), f_coefficient(k)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn int_vector_examples() {
        let v = module_from_int_vector(IntersectionVector::new(1, 0, 1, -1));
        assert_eq!(
            v,
            ModuleVector::new(FieldElem::t(), FieldElem::from_ints(-1, 1))
        );
        assert_eq!(
            module_from_int_vector(IntersectionVector::new(0, 0, 0, 0)),
            ModuleVector::zero()
        );
        for k in 0..20i64 {
            let v = module_from_int_vector(gamma_k(k as u64));
            assert_eq!(v.first, FieldElem::from_ints(-k, 2 * k + 1));
            assert_eq!(v.second, FieldElem::from_ints(-(k + 1), 2 * k + 1));
        }
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_k(0), IntersectionVector::new(1, 0, 1, -1));
        assert_eq!(gamma_k(1), IntersectionVector::new(3, -1, 3, -2));
        assert_eq!(gamma_k(10), IntersectionVector::new(21, -10, 21, -11));
    }

    #[test]
    fn w_examples() {
        assert_eq!(w_k(0), ModuleVector::new(FieldElem::one(), FieldElem::t()));
        // t⁻¹·(t, t − 1) = (1, 1 − t⁻¹) = (1, t) in F
        let cross = module_from_int_vector(gamma_k(0)).scale(&FieldElem::t_pow(-1));
        assert_eq!(cross, w_k(0));
        assert_eq!(
            w_k(1),
            ModuleVector::new(FieldElem::one(), FieldElem::new(rat(5, 7), rat(3, 7)))
        );
    }

    #[test]
    fn w_defining_identity() {
        for k in 0..50u64 {
            let lhs =
                module_from_int_vector(gamma_k(k)).scale(&w_scalar(k).scale(&w_denominator(k)));
            let rhs = w_k(k).scale(&FieldElem::constant(w_denominator(k)));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn generator_round_trip() {
        let v = ModuleVector::new(
            FieldElem::new(rat(2, 3), rat(-1, 5)),
            FieldElem::from_ints(4, 7),
        );
        assert_eq!(ModuleVector::from_generators(&v.to_generators()), v);
        // b_1 alone is (1 − t)·a_1
        let b1 = [
            LaurentPoly::zero(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
        ];
        assert_eq!(
            ModuleVector::from_generators(&b1).first,
            FieldElem::from_ints(1, -1)
        );
    }
}
