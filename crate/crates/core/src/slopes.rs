//! Slope-curves `λ_{c/d}` (`c` even) on the punctured pillowcase and their
//! homotopy classes as words in the free group `⟨u, v⟩`.
//!
//! The normative route is the sign formula `ε_i = (−1)^{⌊i·d/c⌋}`. The
//! grid walk is an independent geometric simulation of the same arc used to
//! cross-check it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::algebra::Rational;
use crate::words::{commutator, GroupWord, Letter, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("numerator must be even (got {0})")]
    OddNumerator(i64),
    #[error("slope {c}/{d} is not in lowest terms")]
    NotCoprime { c: i64, d: i64 },
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("cannot parse slope `{0}` (expected c/d)")]
    Parse(String),
}

/// A slope `c/d` with `c` even, stored with `d ≥ 1` and `gcd(|c|, d) = 1`;
/// the zero slope is `0/1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlopeParam {
    c: i64,
    d: i64,
}

impl SlopeParam {
    pub fn new(c: i64, d: i64) -> Result<Self, SlopeError> {
        if d == 0 {
            return Err(SlopeError::ZeroDenominator);
        }
        let (c, d) = if d < 0 { (-c, -d) } else { (c, d) };
        if c.is_odd() {
            return Err(SlopeError::OddNumerator(c));
        }
        if c.unsigned_abs().gcd(&d.unsigned_abs()) != 1 {
            return Err(SlopeError::NotCoprime { c, d });
        }
        Ok(SlopeParam { c, d })
    }

    pub fn zero() -> Self {
        SlopeParam { c: 0, d: 1 }
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.c == 0
    }

    /// The mirror slope `−c/d`.
    pub fn negate(&self) -> Self {
        SlopeParam {
            c: -self.c,
            d: self.d,
        }
    }
}

impl fmt::Display for SlopeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.c, self.d)
    }
}

impl FromStr for SlopeParam {
    type Err = SlopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SlopeError::Parse(s.to_string());
        let (c, d) = match s.trim().split_once('/') {
            Some((c, d)) => (
                c.trim().parse().map_err(|_| bad())?,
                d.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        SlopeParam::new(c, d)
    }
}

impl Serialize for SlopeParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(−1)^n`.
    pub fn from_parity(n: i64) -> Sign {
        if n.is_even() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The exponents `ε_1, …, ε_{|c|−1}`; prints as `+-++-++-+`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignSequence(pub Vec<Sign>);

impl SignSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(number of +1, number of −1)`.
    pub fn counts(&self) -> (usize, usize) {
        let plus = self.0.iter().filter(|&&s| s == Sign::Plus).count();
        (plus, self.0.len() - plus)
    }

    /// 1-based positions where `self` and `other` differ.
    pub fn mismatches(&self, other: &SignSequence) -> Vec<usize> {
        let n = self.len().max(other.len());
        (0..n)
            .filter(|&i| self.0.get(i) != other.0.get(i))
            .map(|i| i + 1)
            .collect()
    }

    /// Reads the exponent signs off an alternating word.
    pub fn from_word(w: &GroupWord) -> SignSequence {
        SignSequence(
            w.letters()
                .iter()
                .map(|l| if l.exp > 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Sign::Plus { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl Serialize for SignSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `ε_i = (−1)^{⌊i·d/c⌋}` for `c > 0`, `(−1)^{⌈i·d/c⌉}` for `c < 0`,
/// `i = 1, …, |c| − 1`.
pub fn epsilon_sequence(s: SlopeParam) -> SignSequence {
    let (c, d) = (s.c, s.d);
    let signs = (1..c.abs())
        .map(|i| {
            let k = if c > 0 {
                Integer::div_floor(&(i * d), &c)
            } else {
                Integer::div_ceil(&(i * d), &c)
            };
            Sign::from_parity(k)
        })
        .collect();
    SignSequence(signs)
}

/// Generator met at the `i`-th crossing: `v` for odd `i`, `u` for even.
fn crossing_generator(i: i64) -> Symbol {
    if i.is_odd() {
        Symbol::V
    } else {
        Symbol::U
    }
}

/// `ω_{c/d} = v^{ε_1} u^{ε_2} ⋯ v^{ε_{|c|−1}}`; empty for `c = 0`.
pub fn omega_word(s: SlopeParam) -> GroupWord {
    let letters = epsilon_sequence(s)
        .0
        .iter()
        .enumerate()
        .map(|(k, sign)| Letter::new(crossing_generator(k as i64 + 1), sign.value()))
        .collect();
    GroupWord::from_letters(letters)
}

/// `[λ_{c/d}] = u · ω · u⁻¹ · ω⁻¹`.
pub fn slope_relator(s: SlopeParam) -> GroupWord {
    commutator(&GroupWord::gen(Symbol::U), &omega_word(s))
}

/// Image of the slope under the `n`-th power of the twist along `λ_0`:
/// `c/d ↦ c/(d − 2nc)`.
pub fn twist_equivalent(s: SlopeParam, n: i64) -> SlopeParam {
    SlopeParam::new(s.c, s.d - 2 * n * s.c).expect("twisting preserves parity and coprimality")
}

/// One crossing of the lifted arc with a horizontal grid line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCrossing {
    /// Position along the arc, in `(0, 1)`.
    pub param: Rational,
    /// Index of the horizontal line, `1..|c|`, counted from the bottom.
    pub line: i64,
    /// Index of the grid column the crossing lies in, counted from the left.
    pub column: i64,
    pub generator: Symbol,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridWalk {
    pub crossings: Vec<GridCrossing>,
    /// Number of vertical grid lines crossed.
    pub vertical_crossings: usize,
}

impl GridWalk {
    pub fn signs(&self) -> SignSequence {
        SignSequence(self.crossings.iter().map(|x| x.sign).collect())
    }

    pub fn word(&self) -> GroupWord {
        GroupWord::from_letters(
            self.crossings
                .iter()
                .map(|x| Letter::new(x.generator, x.sign.value()))
                .collect(),
        )
    }
}

enum Event {
    Vertical,
    Horizontal(i64),
}

/// Walks the straight arc across the `(|c|/2) × d` grid.
///
/// The grid has `d` unit columns and `|c|/2` rows, each row split by a
/// midline, giving horizontal lines at heights `1, …, |c| − 1` labelled
/// alternately `v, u, …, v` (the top and bottom edges are `u`). The exponent
/// of a crossing alternates with the column, `+` in the leftmost. For
/// `c > 0` the arc runs from the bottom-left to the top-right corner; for
/// `c < 0` it is the mirror image, bottom-right to top-left.
///
/// Crossing events are ordered by their exact rational position on the arc;
/// the column index is maintained by counting vertical-line events.
pub fn grid_walk(s: SlopeParam) -> GridWalk {
    let height = s.c.abs();
    let width = s.d;
    if height == 0 {
        return GridWalk {
            crossings: Vec::new(),
            vertical_crossings: 0,
        };
    }
    let mut events: Vec<(Rational, Event)> = Vec::new();
    for j in 1..width {
        events.push((Rational::new(j.into(), width.into()), Event::Vertical));
    }
    for i in 1..height {
        events.push((Rational::new(i.into(), height.into()), Event::Horizontal(i)));
    }
    events.sort_by(|a, b| a.0.cmp(&b.0));
    for pair in events.windows(2) {
        assert!(
            pair[0].0.cmp(&pair[1].0) != Ordering::Equal,
            "arc of slope {s} meets an interior lattice point"
        );
    }
    let mirrored = s.c < 0;
    let mut column = if mirrored { width - 1 } else { 0 };
    let mut crossings = Vec::with_capacity(height as usize - 1);
    let mut vertical_crossings = 0;
    for (param, ev) in events {
        match ev {
            Event::Vertical => {
                vertical_crossings += 1;
                column += if mirrored { -1 } else { 1 };
            }
            Event::Horizontal(line) => crossings.push(GridCrossing {
                param,
                line,
                column,
                generator: crossing_generator(line),
                sign: Sign::from_parity(column),
            }),
        }
    }
    GridWalk {
        crossings,
        vertical_crossings,
    }
}

/// Sign sequence recorded by [`grid_walk`].
pub fn grid_walk_oracle(s: SlopeParam) -> SignSequence {
    grid_walk(s).signs()
}

/// All valid slopes with `0 < c ≤ c_max` (`c` even) and `1 ≤ d ≤ d_max`.
pub fn positive_slopes(c_max: i64, d_max: impl Fn(i64) -> i64) -> Vec<SlopeParam> {
    let mut out = Vec::new();
    for c in (2..=c_max).step_by(2) {
        for d in 1..=d_max(c) {
            if let Ok(s) = SlopeParam::new(c, d) {
                out.push(s);
            }
        }
    }
    out
}
