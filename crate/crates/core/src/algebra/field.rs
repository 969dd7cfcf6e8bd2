use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{fmt_rational, AlgebraError, LaurentPoly, Rational};

/// An element `c0 + c1·t` of `F = ℚ[t]/(t² − t + 1)`.
///
/// `t² − t + 1` is the sixth cyclotomic polynomial, so `t³ = −1` and
/// `t⁶ = 1` in `F`; every Laurent polynomial reduces by exponent mod 6.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub c0: Rational,
    pub c1: Rational,
}

impl FieldElem {
    pub fn new(c0: Rational, c1: Rational) -> Self {
        FieldElem { c0, c1 }
    }

    pub fn from_ints(c0: i64, c1: i64) -> Self {
        FieldElem::new(
            Rational::from_integer(c0.into()),
            Rational::from_integer(c1.into()),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        FieldElem::from_ints(1, 0)
    }

    pub fn t() -> Self {
        FieldElem::from_ints(0, 1)
    }

    pub fn constant(c: Rational) -> Self {
        FieldElem::new(c, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// `t^k` reduced into `F`.
    pub fn t_pow(k: i64) -> Self {
        match k.rem_euclid(6) {
            0 => FieldElem::from_ints(1, 0),
            1 => FieldElem::from_ints(0, 1),
            2 => FieldElem::from_ints(-1, 1),
            3 => FieldElem::from_ints(-1, 0),
            4 => FieldElem::from_ints(0, -1),
            _ => FieldElem::from_ints(1, -1),
        }
    }

    /// Image of a Laurent polynomial under `ℚ[t^{±1}] → F`.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let mut out = FieldElem::zero();
        for (k, c) in p.terms() {
            let tk = FieldElem::t_pow(k);
            out.c0 += &tk.c0 * c;
            out.c1 += &tk.c1 * c;
        }
        out
    }

    /// The canonical representative `c0 + c1·t` as a Laurent polynomial.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms([(0, self.c0.clone()), (1, self.c1.clone())])
    }

    /// Induced by `t ↦ t⁻¹ = 1 − t`.
    pub fn conj(&self) -> Self {
        FieldElem::new(&self.c0 + &self.c1, -self.c1.clone())
    }

    /// `a · conj(a) = c0² + c0·c1 + c1²`, which lies in ℚ.
    pub fn norm(&self) -> Rational {
        &self.c0 * &self.c0 + &self.c0 * &self.c1 + &self.c1 * &self.c1
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(FieldElem::new(c.c0 / &n, c.c1 / &n))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        FieldElem::new(&self.c0 * r, &self.c1 * r)
    }
}

impl Add<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1)
    }
}

impl Sub<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1)
    }
}

impl Mul<&FieldElem> for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        // t² = t − 1
        let hi = &self.c1 * &rhs.c1;
        FieldElem::new(
            &self.c0 * &rhs.c0 - &hi,
            &self.c0 * &rhs.c1 + &self.c1 * &rhs.c0 + hi,
        )
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-self.c0.clone(), -self.c1.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::one()
    }
}

/// Serialized as `c0 + c1*t`, both coefficients always present.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*t",
            fmt_rational(&self.c0),
            fmt_rational(&self.c1)
        )
    }
}

impl FromStr for FieldElem {
    type Err = AlgebraError;

    /// Any Laurent polynomial text, reduced into `F`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized = s.replace("+-", "-").replace("+ -", "- ");
        Ok(FieldElem::from_laurent(&normalized.parse()?))
    }
}
