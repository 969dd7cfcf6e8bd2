use std::fmt;

use num_integer::Integer;

use super::{GroupWord, Letter, Symbol, WordError};

/// Which cyclic factor of `ℤ_p ∗ ℤ_q` a syllable lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// Generated by `x`, order `p`.
    X,
    /// Generated by `y`, order `q`.
    Y,
}

impl Factor {
    pub fn symbol(self) -> Symbol {
        match self {
            Factor::X => Symbol::X,
            Factor::Y => Symbol::Y,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub factor: Factor,
    /// In `1..order` for the syllable's factor.
    pub exp: u64,
}

/// Normal form of an element of `ℤ_p ∗ ℤ_q = ⟨x, y | x^p = y^q = 1⟩`.
///
/// Syllables alternate between the two factors and every exponent is in its
/// canonical range, so equal elements have identical syllable lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeProductWord {
    p: u64,
    q: u64,
    syllables: Vec<Syllable>,
}

fn check_orders(p: u64, q: u64) -> Result<(), WordError> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(WordError::InvalidOrders { p, q });
    }
    Ok(())
}

impl FreeProductWord {
    pub fn identity(p: u64, q: u64) -> Result<Self, WordError> {
        check_orders(p, q)?;
        Ok(FreeProductWord {
            p,
            q,
            syllables: Vec::new(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Number of syllables; zero iff the element is trivial.
    pub fn syllable_length(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.syllables.is_empty()
    }

    fn order(&self, f: Factor) -> u64 {
        match f {
            Factor::X => self.p,
            Factor::Y => self.q,
        }
    }

    /// Appends `factor^exp` (any integer exponent) and renormalizes the tail.
    fn push(&mut self, factor: Factor, exp: i64) {
        let n = self.order(factor);
        let e = exp.rem_euclid(n as i64) as u64;
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(top) if top.factor == factor => {
                top.exp = (top.exp + e) % n;
                if top.exp == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable { factor, exp: e }),
        }
    }

    pub fn mul(&self, other: &FreeProductWord) -> Result<FreeProductWord, WordError> {
        if (self.p, self.q) != (other.p, other.q) {
            return Err(WordError::MismatchedOrders);
        }
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.factor, s.exp as i64);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> FreeProductWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable {
                factor: s.factor,
                exp: self.order(s.factor) - s.exp,
            })
            .collect();
        FreeProductWord {
            p: self.p,
            q: self.q,
            syllables,
        }
    }

    /// The normal form read back as a word in `x`, `y`.
    pub fn to_group_word(&self) -> GroupWord {
        GroupWord::from_letters(
            self.syllables
                .iter()
                .map(|s| Letter::new(s.factor.symbol(), s.exp as i64))
                .collect(),
        )
    }

    /// Splits into `conjugator · core · conjugator⁻¹` with the first and last
    /// syllables of `core` in different factors (or `core` of length ≤ 1).
    pub fn cyclic_reduce(&self) -> (FreeProductWord, FreeProductWord) {
        let mut core = self.syllables.clone();
        let mut conj = FreeProductWord {
            p: self.p,
            q: self.q,
            syllables: Vec::new(),
        };
        let mut start = 0;
        while core.len() - start >= 2 {
            let first = core[start];
            let last = *core.last().unwrap();
            if first.factor != last.factor {
                break;
            }
            core.pop();
            start += 1;
            conj.push(first.factor, first.exp as i64);
            let merged = (first.exp + last.exp) % self.order(first.factor);
            if merged != 0 {
                core.push(Syllable {
                    factor: first.factor,
                    exp: merged,
                });
            }
        }
        let core = FreeProductWord {
            p: self.p,
            q: self.q,
            syllables: core.split_off(start),
        };
        (core, conj)
    }

    /// `x^2 y x y (in Z_3 * Z_2)`.
    pub fn with_context(&self) -> String {
        format!("{} (in Z_{} * Z_{})", self, self.p, self.q)
    }
}

/// Projects a word in `x`, `y` to its normal form in `ℤ_p ∗ ℤ_q`.
///
/// Exponents are reduced mod `p` (for `x`) and mod `q` (for `y`); vanishing
/// syllables are deleted and their neighbours merged, which a single stack
/// pass carries to the fixed point.
pub fn fp_normal_form(w: &GroupWord, p: u64, q: u64) -> Result<FreeProductWord, WordError> {
    let mut out = FreeProductWord::identity(p, q)?;
    for l in w.letters() {
        let factor = match l.gen {
            Symbol::X => Factor::X,
            Symbol::Y => Factor::Y,
            other => return Err(WordError::UnknownGenerator(other.name())),
        };
        out.push(factor, l.exp);
    }
    Ok(out)
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_group_word(), f)
    }
}
