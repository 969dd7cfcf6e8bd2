use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::{AlgebraError, FieldElem, LaurentPoly, Rational};

/// A rational function `numerator / denominator` in `ℚ(t)`.
///
/// Arithmetic cancels common polynomial factors to keep entries small, but
/// equality never relies on that: it compares by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(RationalFn { num, den }.reduced())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::ZeroInverse);
        }
        Ok(RationalFn {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn conjugate(&self) -> Self {
        RationalFn {
            num: self.num.conjugate(),
            den: self.den.conjugate(),
        }
    }

    /// The Laurent polynomial this equals, if any.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den)
    }

    /// Cancels the polynomial gcd of numerator and denominator and moves
    /// the denominator's unit part (`c·t^k`) into the numerator.
    fn reduced(self) -> Self {
        if self.num.is_zero() {
            return RationalFn::zero();
        }
        let (sn, pn) = self.num.to_poly();
        let (sd, pd) = self.den.to_poly();
        let g = Poly::gcd(&pn, &pd);
        let (pn, _) = pn.div_rem(&g);
        let (pd, _) = pd.div_rem(&g);
        let lead = pd.lead().unwrap().clone();
        let inv = Rational::one() / lead;
        RationalFn {
            num: LaurentPoly::from_poly(sn - sd, &pn.scale(&inv)),
            den: LaurentPoly::from_poly(0, &pd.scale(&inv)),
        }
    }

    /// Display form: numerator and denominator with integer content and a
    /// positive leading denominator coefficient.
    pub fn display_parts(&self) -> (LaurentPoly, LaurentPoly) {
        let lcm = self
            .num
            .terms()
            .chain(self.den.terms())
            .fold(num_bigint::BigInt::one(), |acc, (_, c)| {
                num_integer::Integer::lcm(&acc, c.denom())
            });
        let s = Rational::from_integer(lcm);
        (self.num.scale(&s), self.den.scale(&s))
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn::from_laurent(p)
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.den == rhs.den {
            return RationalFn {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            }
            .reduced();
        }
        RationalFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Zero for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFn {
    fn one() -> Self {
        RationalFn::one()
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.display_parts();
        if d == LaurentPoly::one() {
            write!(f, "{n}")
        } else {
            write!(f, "({n}) / ({d})")
        }
    }
}

/// An element of `ℚ(t)/ℚ[t^{±1}]`, the codomain of the Blanchfield pairing.
///
/// Held in canonical form `r / m`: `m` monic with `m(0) ≠ 0`,
/// `deg r < deg m`, `gcd(r, m) = 1`. Two values are equal iff their
/// canonical forms agree; the value is zero iff `r = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionPairingValue {
    rem: LaurentPoly,
    modulus: LaurentPoly,
}

impl TorsionPairingValue {
    pub fn zero() -> Self {
        TorsionPairingValue {
            rem: LaurentPoly::zero(),
            modulus: LaurentPoly::one(),
        }
    }

    pub fn from_rational_fn(f: &RationalFn) -> Self {
        if f.num.is_zero() {
            return Self::zero();
        }
        let (sn, pn) = f.num.to_poly();
        let (sd, pd) = f.den.to_poly();
        if pd.degree() == Some(0) {
            // denominator is a unit of ℚ[t^{±1}]
            return Self::zero();
        }
        // f = t^e · pn / pd with pd(0) ≠ 0
        let e = sn - sd;
        let mut r = pn.rem(&pd);
        let t = Poly::new(vec![Rational::zero(), Rational::one()]);
        let t_inv = t.inverse_mod(&pd).expect("pd(0) != 0 so t is invertible");
        let step = if e >= 0 { &t } else { &t_inv };
        for _ in 0..e.unsigned_abs() {
            r = r.mul(step).rem(&pd);
        }
        let g = Poly::gcd(&r, &pd);
        if r.is_zero() {
            return Self::zero();
        }
        let (r, _) = r.div_rem(&g);
        let (m, _) = pd.div_rem(&g);
        let inv = Rational::one() / m.lead().unwrap();
        TorsionPairingValue {
            rem: LaurentPoly::from_poly(0, &r.scale(&inv)),
            modulus: LaurentPoly::from_poly(0, &m.scale(&inv)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rem.is_zero()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.rem
    }

    pub fn modulus(&self) -> &LaurentPoly {
        &self.modulus
    }

    pub fn to_rational_fn(&self) -> RationalFn {
        RationalFn {
            num: self.rem.clone(),
            den: self.modulus.clone(),
        }
    }

    /// When the value has the form `p / (t² − t + 1)` (or is zero), the
    /// class of `p` in `F`.
    pub fn over_delta(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return Some(FieldElem::zero());
        }
        (self.modulus == delta()).then(|| FieldElem::from_laurent(&self.rem))
    }

    /// The value `p / (t² − t + 1)` for `p ∈ F`.
    pub fn from_delta_numerator(p: &FieldElem) -> Self {
        let f = RationalFn {
            num: p.to_laurent(),
            den: delta(),
        };
        Self::from_rational_fn(&f)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_rational_fn(&(&self.to_rational_fn() + &other.to_rational_fn()))
    }

    /// Multiplication by a Laurent polynomial is well defined on the quotient.
    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::from_rational_fn(&(&self.to_rational_fn() * &RationalFn::from_laurent(p.clone())))
    }

    pub fn conjugate(&self) -> Self {
        Self::from_rational_fn(&self.to_rational_fn().conjugate())
    }

    pub fn neg(&self) -> Self {
        TorsionPairingValue {
            rem: -&self.rem,
            modulus: self.modulus.clone(),
        }
    }
}

/// `t² − t + 1`.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_int_coeffs(0, &[1, -1, 1])
}

/// Prints as `num(t) / (t^2 - t + 1)` when the modulus is `t² − t + 1`.
impl fmt::Display for TorsionPairingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let num = if self.rem.terms().count() > 1 {
            format!("({})", self.rem)
        } else {
            self.rem.to_string()
        };
        if self.modulus == delta() {
            write!(f, "{num} / (t^2 - t + 1)")
        } else {
            write!(f, "{num} / ({})", self.modulus)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFn {
        RationalFn::new(lp(n), lp(d)).unwrap()
    }

    #[test]
    fn equality_is_cross_multiplication() {
        assert_eq!(rf("t^2 - 1", "t - 1"), rf("t + 1", "1"));
        assert_eq!(rf("2", "4*t"), rf("t^-1", "2"));
        assert_ne!(rf("1", "t"), rf("1", "t + 1"));
        assert!(RationalFn::new(lp("1"), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn torsion_value_reduction() {
        // (t − 1)² / Δ ≡ −t / Δ since (t − 1)² = Δ − t
        let v = TorsionPairingValue::from_rational_fn(&rf("t^2 - 2*t + 1", "t^2 - t + 1"));
        assert_eq!(v.over_delta(), Some(FieldElem::from_ints(0, -1)));
        assert_eq!(v.to_string(), "-1*t / (t^2 - t + 1)");
        let w = TorsionPairingValue::from_rational_fn(&rf("5*t + 4", "t^2 - t + 1"));
        assert_eq!(w.to_string(), "(4 + 5*t) / (t^2 - t + 1)");
        // Laurent polynomials vanish
        assert!(TorsionPairingValue::from_rational_fn(&rf("t^3 + t^-2", "t^2")).is_zero());
        assert!(
            TorsionPairingValue::from_rational_fn(&rf("t^3 - t^2 + t", "t^2 - t + 1")).is_zero()
        );
        // negative powers of t in the numerator are absorbed modulo Δ
        let w = TorsionPairingValue::from_rational_fn(&rf("t^-1", "t^2 - t + 1"));
        assert_eq!(w.over_delta(), Some(FieldElem::from_ints(1, -1)));
    }

    #[test]
    fn coprime_denominator_factor_is_separate() {
        let a = TorsionPairingValue::from_rational_fn(&rf("1", "t^2 - t + 1"));
        let b = TorsionPairingValue::from_rational_fn(&rf("1", "t + 2"));
        let sum = a.add(&b);
        assert_eq!(sum.modulus(), &(&delta() * &lp("t + 2")));
        assert_eq!(sum.add(&b.neg()), a);
    }
}
