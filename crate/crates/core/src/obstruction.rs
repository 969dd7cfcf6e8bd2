//! From a torus knot `T_{p,q}` and a slope `c/d`, build the relator
//! `[V_{c/d}]` of the disk group, project it to `ℤ_p ∗ ℤ_q` and decide
//! whether it is trivial there.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::slopes::{positive_slopes, slope_relator, twist_equivalent, SlopeParam};
use crate::words::{fp_normal_form, FreeProductWord, GroupWord, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("p,q must satisfy p > q > 1 (got p={p}, q={q})")]
    OutOfOrder { p: i64, q: i64 },
    #[error("p,q must be coprime (got p={p}, q={q})")]
    NotCoprime { p: i64, q: i64 },
    #[error("syllable length {found} != 2|c| = {expected} for slope {slope} at (p,q)=({p},{q}); word: {word}")]
    SyllableLength {
        p: i64,
        q: i64,
        slope: SlopeParam,
        expected: usize,
        found: usize,
        word: String,
    },
}

/// `p > q > 1` coprime, with the unique `(a, b)` such that `ap + bq = 1`
/// and `0 < a < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusKnotParams {
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
}

impl TorusKnotParams {
    pub fn new(p: i64, q: i64) -> Result<Self, ObstructionError> {
        if !(p > q && q > 1) {
            return Err(ObstructionError::OutOfOrder { p, q });
        }
        let eg = p.extended_gcd(&q);
        if eg.gcd != 1 {
            return Err(ObstructionError::NotCoprime { p, q });
        }
        // shift a into (0, q); b follows from ap + bq = 1
        let a = eg.x.rem_euclid(q);
        let b = (1 - a * p) / q;
        debug_assert_eq!(a * p + b * q, 1);
        Ok(TorusKnotParams { p, q, a, b })
    }

    pub fn orders(&self) -> (u64, u64) {
        (self.p as u64, self.q as u64)
    }

    /// Abelianization weights `x ↦ q`, `y ↦ p`.
    pub fn weights(&self) -> HashMap<Symbol, i64> {
        [(Symbol::X, self.q), (Symbol::Y, self.p)]
            .into_iter()
            .collect()
    }
}

/// How `u`, `v` are rewritten in `x`, `y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubstitutionConvention {
    /// `u ↦ x^b`, `v ↦ y^a`; the direction used for the relator.
    #[default]
    Relator,
    /// `u ↦ x^{−b}`, `v ↦ y^{−a}`, as read off the knot-group presentation.
    Presentation,
}

impl SubstitutionConvention {
    pub fn images(self, t: &TorusKnotParams) -> HashMap<Symbol, GroupWord> {
        let sign = match self {
            SubstitutionConvention::Relator => 1,
            SubstitutionConvention::Presentation => -1,
        };
        [
            (Symbol::U, GroupWord::letter(Symbol::X, sign * t.b)),
            (Symbol::V, GroupWord::letter(Symbol::Y, sign * t.a)),
        ]
        .into_iter()
        .collect()
    }
}

impl fmt::Display for SubstitutionConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubstitutionConvention::Relator => "u -> x^b, v -> y^a",
            SubstitutionConvention::Presentation => "u -> x^-b, v -> y^-a",
        })
    }
}

/// The meridian `y^a x^b`.
pub fn meridian_word(t: &TorusKnotParams) -> GroupWord {
    GroupWord::letter(Symbol::Y, t.a).concat(&GroupWord::letter(Symbol::X, t.b))
}

/// `[V_{c/d}]` as a word in `x`, `y`.
pub fn relator_in_xy(
    s: SlopeParam,
    t: &TorusKnotParams,
    conv: SubstitutionConvention,
) -> GroupWord {
    slope_relator(s)
        .substitute(&conv.images(t))
        .expect("relator only uses u and v")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub params: TorusKnotParams,
    pub slope: SlopeParam,
    pub convention: SubstitutionConvention,
    pub relator_uv: GroupWord,
    pub relator_xy: GroupWord,
    pub normal_form: FreeProductWord,
    pub syllable_count: usize,
    pub nontrivial: bool,
}

/// Flat serialized form of [`ObstructionReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionRecord {
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub relator_uv: String,
    pub relator_xy: String,
    pub normal_form: String,
    pub syllables: usize,
    pub nontrivial: bool,
    pub requires_external_diffeomorphism: bool,
    pub convention: SubstitutionConvention,
}

impl ObstructionReport {
    pub fn record(&self) -> ObstructionRecord {
        ObstructionRecord {
            p: self.params.p,
            q: self.params.q,
            a: self.params.a,
            b: self.params.b,
            c: self.slope.c(),
            d: self.slope.d(),
            relator_uv: self.relator_uv.to_string(),
            relator_xy: self.relator_xy.to_string(),
            normal_form: self.normal_form.to_string(),
            syllables: self.syllable_count,
            nontrivial: self.nontrivial,
            requires_external_diffeomorphism: false,
            convention: self.convention,
        }
    }

    /// Checks `nontrivial ⟺ c ≠ 0` and syllable length exactly `2|c|`.
    pub fn check_invariants(&self) -> Result<(), ObstructionError> {
        let expected = 2 * self.slope.c().unsigned_abs() as usize;
        if self.syllable_count != expected || self.nontrivial != (self.syllable_count > 0) {
            return Err(ObstructionError::SyllableLength {
                p: self.params.p,
                q: self.params.q,
                slope: self.slope,
                expected,
                found: self.syllable_count,
                word: self.relator_xy.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.params;
        writeln!(
            f,
            "torus knot T({},{}): a = {}, b = {}  (ap + bq = 1)",
            t.p, t.q, t.a, t.b
        )?;
        writeln!(f, "slope c/d = {}", self.slope)?;
        writeln!(f, "[V] in u,v    = {}", self.relator_uv)?;
        writeln!(f, "substitution  : {}", self.convention)?;
        writeln!(f, "[V] in x,y    = {}", self.relator_xy)?;
        writeln!(f, "rho([V])      = {}", self.normal_form.with_context())?;
        writeln!(f, "syllables     = {}", self.syllable_count)?;
        write!(
            f,
            "verdict       : {}",
            if self.nontrivial {
                "nontrivial"
            } else {
                "trivial"
            }
        )
    }
}

pub fn obstruct_triviality_with(
    s: SlopeParam,
    t: &TorusKnotParams,
    conv: SubstitutionConvention,
) -> ObstructionReport {
    let relator_uv = slope_relator(s);
    let relator_xy = relator_in_xy(s, t, conv);
    let (p, q) = t.orders();
    let normal_form = fp_normal_form(&relator_xy, p, q).expect("validated orders, x/y word");
    let syllable_count = normal_form.syllable_length();
    ObstructionReport {
        params: *t,
        slope: s,
        convention: conv,
        relator_uv,
        relator_xy,
        nontrivial: syllable_count > 0,
        normal_form,
        syllable_count,
    }
}

pub fn obstruct_triviality(s: SlopeParam, t: &TorusKnotParams) -> ObstructionReport {
    obstruct_triviality_with(s, t, SubstitutionConvention::default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelVerdict {
    Equal,
    /// One slope is zero and the other relator is nontrivial in `π₁(Z₀)`.
    Distinct,
    /// Both slopes nonzero: distinctness additionally needs a diffeomorphism
    /// `Z_{c/d} → Z_0` carrying one slope to zero, which is not computed here.
    DistinctGivenExternalDiffeomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCertificate {
    pub first: ObstructionReport,
    pub second: ObstructionReport,
    pub verdict: KernelVerdict,
    pub requires_external_diffeomorphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCertificateRecord {
    pub first: ObstructionRecord,
    pub second: ObstructionRecord,
    pub verdict: KernelVerdict,
    pub requires_external_diffeomorphism: bool,
}

impl KernelCertificate {
    pub fn record(&self) -> KernelCertificateRecord {
        let mut first = self.first.record();
        let mut second = self.second.record();
        first.requires_external_diffeomorphism = self.requires_external_diffeomorphism;
        second.requires_external_diffeomorphism = self.requires_external_diffeomorphism;
        KernelCertificateRecord {
            first,
            second,
            verdict: self.verdict,
            requires_external_diffeomorphism: self.requires_external_diffeomorphism,
        }
    }
}

/// The computable part of the kernel comparison for two slopes.
pub fn kernel_distinctness_certificate(
    s1: SlopeParam,
    s2: SlopeParam,
    t: &TorusKnotParams,
) -> KernelCertificate {
    let first = obstruct_triviality(s1, t);
    let second = obstruct_triviality(s2, t);
    let (verdict, external) = if s1 == s2 {
        (KernelVerdict::Equal, false)
    } else if s1.is_zero() || s2.is_zero() {
        debug_assert!(first.nontrivial || second.nontrivial);
        (KernelVerdict::Distinct, false)
    } else {
        (KernelVerdict::DistinctGivenExternalDiffeomorphism, true)
    };
    KernelCertificate {
        first,
        second,
        verdict,
        requires_external_diffeomorphism: external,
    }
}

/// Bounds for [`obstruction_sweep`].
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub pairs: Vec<(i64, i64)>,
    /// Largest `|c|`.
    pub c_max: i64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            pairs: default_pairs(11),
            c_max: 20,
        }
    }
}

/// Coprime `(p, q)` pairs used by default: `(3,2), (5,2), (5,3), (7,2),
/// (7,3), (7,5), (11,2)`, restricted to `p ≤ p_max`.
pub fn default_pairs(p_max: i64) -> Vec<(i64, i64)> {
    [(3, 2), (5, 2), (5, 3), (7, 2), (7, 3), (7, 5), (11, 2)]
        .into_iter()
        .filter(|&(p, _)| p <= p_max)
        .collect()
}

/// Slopes `0/1` and `±c/d` with `0 < c ≤ c_max`, `1 ≤ d ≤ 2c + 9`.
pub fn sweep_slopes(c_max: i64) -> Vec<SlopeParam> {
    let mut out = vec![SlopeParam::zero()];
    for s in positive_slopes(c_max, |c| 2 * c + 9) {
        out.push(s);
        out.push(s.negate());
    }
    out
}

/// Runs the obstruction on every `(p, q)` and slope, in parallel, enforcing
/// the syllable-length invariant. Reports are sorted by `(p, q, c, d)`.
pub fn obstruction_sweep(cfg: &SweepConfig) -> Result<Vec<ObstructionReport>, ObstructionError> {
    let params = cfg
        .pairs
        .iter()
        .map(|&(p, q)| TorusKnotParams::new(p, q))
        .collect::<Result<Vec<_>, _>>()?;
    let slopes = sweep_slopes(cfg.c_max);
    let jobs: Vec<(TorusKnotParams, SlopeParam)> = params
        .iter()
        .flat_map(|t| slopes.iter().map(move |&s| (*t, s)))
        .collect();
    let mut reports = jobs
        .into_par_iter()
        .map(|(t, s)| {
            let r = obstruct_triviality(s, &t);
            r.check_invariants()?;
            Ok(r)
        })
        .collect::<Result<Vec<_>, ObstructionError>>()?;
    reports.sort_by_key(|r| (r.params.p, r.params.q, r.slope.c(), r.slope.d()));
    Ok(reports)
}

/// Checks that twisting `s` by `n` leaves the normal form unchanged.
pub fn twist_preserves_normal_form(s: SlopeParam, n: i64, t: &TorusKnotParams) -> bool {
    obstruct_triviality(s, t).normal_form
        == obstruct_triviality(twist_equivalent(s, n), t).normal_form
}
