use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::{fmt_rational, parse_rational, AlgebraError, Rational};

/// A Laurent polynomial in `t` with exact rational coefficients.
///
/// Stored sparsely as exponent → coefficient; zero coefficients are never
/// kept, so structural equality is ring equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut out = LaurentPoly::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Integer coefficients, lowest exponent first.
    pub fn from_int_coeffs(low_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low_exp + i as i64, Rational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, k: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Returns `Some(c)` when this is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, a * c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, a)| (e + k, a.clone()))
                .collect(),
        }
    }

    /// The involution `t ↦ t⁻¹`.
    pub fn conjugate(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, a)| (-k, a.clone())).collect(),
        }
    }

    /// The substitution `t ↦ t^w`; `w = 0` would collapse the ring.
    pub fn substitute_power(&self, w: i64) -> Result<Self, AlgebraError> {
        if w == 0 {
            return Err(AlgebraError::ZeroPower);
        }
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, a)| (k * w, a.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Splits `self = t^shift · p(t)` with `p(0) ≠ 0` (or `p = 0`).
    pub(crate) fn to_poly(&self) -> (i64, Poly) {
        let Some(lo) = self.min_exp() else {
            return (0, Poly::zero());
        };
        let hi = self.max_exp().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (&k, c) in &self.terms {
            coeffs[(k - lo) as usize] = c.clone();
        }
        (lo, Poly::new(coeffs))
    }

    pub(crate) fn from_poly(shift: i64, p: &Poly) -> Self {
        Self::from_terms(
            p.0.iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c.clone())),
        )
    }

    /// Exact division in `ℚ[t^{±1}]`; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (sa, pa) = self.to_poly();
        let (sb, pb) = divisor.to_poly();
        let (q, r) = pa.div_rem(&pb);
        r.is_zero().then(|| LaurentPoly::from_poly(sa - sb, &q))
    }

    /// Normal form up to units of `ℚ[t^{±1}]`: lowest exponent 0, monic.
    pub fn unit_normalized(&self) -> LaurentPoly {
        let (_, p) = self.to_poly();
        LaurentPoly::from_poly(0, &p.monic())
    }

    /// Gcd in `ℚ[t^{±1}]`, normalized like [`Self::unit_normalized`];
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        let (_, a) = self.to_poly();
        let (_, b) = other.to_poly();
        LaurentPoly::from_poly(0, &Poly::gcd(&a, &b))
    }

    /// True when `self = ±t^k · other` for some integer `k`.
    pub fn equals_up_to_signed_monomial(&self, other: &LaurentPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let shift = self.min_exp().unwrap() - other.min_exp().unwrap();
        let shifted = other.shift(shift);
        *self == shifted || *self == -shifted
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::from_int(c)
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, a)| (k, -a.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Canonical text: ascending exponents, e.g. `-1*t^-1 + 2 + 3*t^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&k, c)) in self.terms.iter().enumerate() {
            let mag = if i == 0 {
                c.clone()
            } else if c.is_negative() {
                f.write_str(" - ")?;
                c.abs()
            } else {
                f.write_str(" + ")?;
                c.clone()
            };
            f.write_str(&fmt_rational(&mag))?;
            match k {
                0 => {}
                1 => f.write_str("*t")?,
                _ => write!(f, "*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = AlgebraError;

    /// Accepts the canonical form and the usual shorthands:
    /// `t^2 - t + 1`, `3/7*t + 5/7`, `-t^-1`, `2t`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let bytes = compact.as_bytes();
        let mut out = LaurentPoly::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = Rational::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            // coefficient
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
                i += 1;
            }
            let coeff = if i > start {
                parse_rational(&compact[start..i]).ok_or_else(bad)?
            } else {
                Rational::one()
            };
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
                if i >= bytes.len() || bytes[i] != b't' {
                    return Err(bad());
                }
            }
            if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[es..i].parse().map_err(|_| bad())?;
                }
            } else if i == start {
                return Err(bad());
            }
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let a = lp("1 - t");
        let b = lp("1 - t^-1");
        assert_eq!(&a * &b, lp("2 - t - t^-1"));
        let p = lp("t^2 - t + 1");
        assert_eq!(&p + &LaurentPoly::zero(), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(lp("3*t + 5").conjugate(), lp("3*t^-1 + 5"));
        assert_eq!(LaurentPoly::one().conjugate(), LaurentPoly::one());
        assert_eq!(lp("t^2 - t + 1").conjugate(), lp("t^-2 - t^-1 + 1"));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(lp("t^2-t+1").substitute_power(2).unwrap(), lp("t^4-t^2+1"));
        let a = lp("3/2*t^-3 + t + 7");
        assert_eq!(a.substitute_power(1).unwrap(), a);
        assert_eq!(lp("t-1").substitute_power(-1).unwrap(), lp("t^-1 - 1"));
        assert_eq!(a.substitute_power(0), Err(AlgebraError::ZeroPower));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(lp("3t^2 + 2 - t^-1").to_string(), "-1*t^-1 + 2 + 3*t^2");
        assert_eq!(lp("t^2 - t + 1").to_string(), "1 - 1*t + 1*t^2");
        assert_eq!(lp("3/7*t - 5/7").to_string(), "-5/7 + 3/7*t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let s = lp("-1/2*t^-4 + 9*t^3");
        assert_eq!(s.to_string().parse::<LaurentPoly>().unwrap(), s);
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "t^", "3*", "x", "t^1.5", "1/0", "t t"] {
            assert!(s.parse::<LaurentPoly>().is_err(), "{s}");
        }
    }

    #[test]
    fn exact_division_and_units() {
        let delta = lp("t^2 - t + 1");
        let prod = &delta * &lp("t^-3 + 2");
        assert_eq!(prod.div_exact(&delta).unwrap(), lp("t^-3 + 2"));
        assert!(lp("t + 1").div_exact(&delta).is_none());
        assert!(lp("-t^5 + t^4 - t^3").equals_up_to_signed_monomial(&delta));
        assert!(!lp("2*t^2 - 2*t + 2").equals_up_to_signed_monomial(&delta));
        assert_eq!(lp("2*t^3 - 2*t^2 + 2*t").unit_normalized(), delta);
    }
}
