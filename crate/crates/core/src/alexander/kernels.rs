use rayon::prelude::*;
use serde::Serialize;

use super::{w_k, BlanchfieldForm, ModuleVector};
use crate::algebra::{FieldElem, Rational, TorsionPairingValue};

use super::module::f_coefficient;

/// Evidence for or against `P_{k1} = P_{k2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelsCertificate {
    pub k1: u64,
    pub k2: u64,
    pub w1: ModuleVector,
    pub w2: ModuleVector,
    /// `w_{k1} − w_{k2} = (0, c·t + d)`.
    pub difference: ModuleVector,
    /// `c² + cd + d²`.
    pub quadratic_coefficient: Rational,
    /// `Bl(w_{k1} − w_{k2}, w_{k1} − w_{k2})`.
    pub self_pairing: TorsionPairingValue,
    /// `Bl((0, 1), (0, 1))`.
    pub unit_pairing: TorsionPairingValue,
    /// `det[w_{k1}; w_{k2}]` over `F`.
    pub line_determinant: FieldElem,
    /// Verdict of the self-pairing route.
    pub pairing_distinct: bool,
    /// Verdict of the line-comparison route.
    pub lines_distinct: bool,
}

impl KernelsCertificate {
    pub fn distinct(&self) -> bool {
        self.pairing_distinct
    }

    /// Both routes agree.
    pub fn consistent(&self) -> bool {
        self.pairing_distinct == self.lines_distinct
    }

    /// `(c·t + d)` written over the common denominator, e.g. `(4t-5)/7`.
    pub fn difference_text(&self) -> String {
        compact_over_denominator(&self.difference.second)
    }

    pub fn record(&self) -> KernelsRecord {
        KernelsRecord {
            k1: self.k1,
            k2: self.k2,
            w_k1: self.w1.clone(),
            w_k2: self.w2.clone(),
            difference: self.difference.clone(),
            difference_compact: self.difference_text(),
            quadratic_coefficient: crate::algebra::fmt_rational(&self.quadratic_coefficient),
            self_pairing: self.self_pairing.to_string(),
            unit_pairing: self.unit_pairing.to_string(),
            line_determinant: self.line_determinant.to_string(),
            pairing_route: verdict(self.pairing_distinct),
            line_route: verdict(self.lines_distinct),
            distinct: self.distinct(),
        }
    }
}

fn verdict(distinct: bool) -> &'static str {
    if distinct {
        "distinct"
    } else {
        "equal"
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelsRecord {
    pub k1: u64,
    pub k2: u64,
    pub w_k1: ModuleVector,
    pub w_k2: ModuleVector,
    pub difference: ModuleVector,
    pub difference_compact: String,
    pub quadratic_coefficient: String,
    pub self_pairing: String,
    pub unit_pairing: String,
    pub line_determinant: String,
    pub pairing_route: &'static str,
    pub line_route: &'static str,
    pub distinct: bool,
}

/// `c0 + c1·t` as `(a·t+b)/n` with integer `a`, `b` and `n ≥ 1`.
pub fn compact_over_denominator(e: &FieldElem) -> String {
    use num_integer::Integer;
    let n = e.c0.denom().lcm(e.c1.denom());
    let a = (&e.c1 * Rational::from_integer(n.clone())).to_integer();
    let b = (&e.c0 * Rational::from_integer(n.clone())).to_integer();
    let mut s = String::new();
    let zero = num_bigint::BigInt::from(0);
    if a != zero {
        s.push_str(&match a.to_string().as_str() {
            "1" => "t".to_string(),
            "-1" => "-t".to_string(),
            other => format!("{other}t"),
        });
    }
    if b != zero || a == zero {
        if a != zero && b > zero {
            s.push('+');
        }
        s.push_str(&b.to_string());
    }
    if n == num_bigint::BigInt::from(1) {
        s
    } else {
        format!("({s})/{n}")
    }
}

fn quadratic(e: &FieldElem) -> Rational {
    // the norm of c·t + d is c² + cd + d²
    e.norm()
}

/// Decides `P_{k1} = P_{k2}` by pairing the difference of the `w_k` with
/// itself, and independently by comparing the lines they span in `F²`.
pub fn kernels_distinct_with(form: &BlanchfieldForm, k1: u64, k2: u64) -> KernelsCertificate {
    certificate(form, &unit_pairing(form), k1, k2)
}

fn unit_pairing(form: &BlanchfieldForm) -> TorsionPairingValue {
    let unit = ModuleVector::new(FieldElem::zero(), FieldElem::one());
    form.pair_module(&unit, &unit).expect("rank 4 form")
}

fn certificate(
    form: &BlanchfieldForm,
    unit_pairing: &TorsionPairingValue,
    k1: u64,
    k2: u64,
) -> KernelsCertificate {
    let w1 = w_k(k1);
    let w2 = w_k(k2);
    let difference = w1.sub(&w2);
    let self_pairing = form
        .pair_module(&difference, &difference)
        .expect("rank 4 form");
    let unit_pairing = unit_pairing.clone();
    let line_determinant = &(&w1.first * &w2.second) - &(&w1.second * &w2.first);
    KernelsCertificate {
        k1,
        k2,
        quadratic_coefficient: quadratic(&difference.second),
        pairing_distinct: !self_pairing.is_zero(),
        lines_distinct: !line_determinant.is_zero(),
        w1,
        w2,
        difference,
        self_pairing,
        unit_pairing,
        line_determinant,
    }
}

pub fn kernels_distinct(k1: u64, k2: u64) -> KernelsCertificate {
    kernels_distinct_with(&BlanchfieldForm::square_knot(), k1, k2)
}

/// Outcome of checking every pair `0 ≤ k1, k2 ≤ kmax`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct KernelGridSummary {
    pub kmax: u64,
    pub pairs: u64,
    /// Pairs where the pairing verdict differs from `k1 ≠ k2`.
    pub pairing_failures: Vec<(u64, u64)>,
    /// Pairs where the line verdict differs from `k1 ≠ k2`.
    pub line_failures: Vec<(u64, u64)>,
}

impl KernelGridSummary {
    pub fn passed(&self) -> bool {
        self.pairing_failures.is_empty() && self.line_failures.is_empty()
    }
}

/// Runs [`kernels_distinct`] over the full grid in parallel; failures are
/// listed in `(k1, k2)` order.
pub fn kernel_grid(kmax: u64) -> KernelGridSummary {
    let form = BlanchfieldForm::square_knot();
    let unit = unit_pairing(&form);
    let mut results: Vec<(u64, u64, bool, bool)> = (0..=kmax)
        .into_par_iter()
        .flat_map_iter(|k1| {
            let (form, unit) = (&form, &unit);
            (0..=kmax).map(move |k2| {
                let c = certificate(form, unit, k1, k2);
                (
                    k1,
                    k2,
                    c.pairing_distinct == (k1 != k2),
                    c.lines_distinct == (k1 != k2),
                )
            })
        })
        .collect();
    results.sort_unstable_by_key(|r| (r.0, r.1));
    KernelGridSummary {
        kmax,
        pairs: results.len() as u64,
        pairing_failures: results
            .iter()
            .filter(|r| !r.2)
            .map(|r| (r.0, r.1))
            .collect(),
        line_failures: results
            .iter()
            .filter(|r| !r.3)
            .map(|r| (r.0, r.1))
            .collect(),
    }
}

/// `f(k) > f(k + 1)` for all `0 ≤ k < kmax`.
pub fn f_monotone(kmax: u64) -> bool {
    let mut prev = f_coefficient(0);
    for k in 1..=kmax {
        let next = f_coefficient(k);
        if next >= prev {
            return false;
        }
        prev = next;
    }
    true
}
