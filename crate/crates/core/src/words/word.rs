use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use super::{Symbol, WordError};

/// A power `gen^exp` of a single generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Symbol,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: Symbol, exp: i64) -> Self {
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            exp: -self.exp,
        }
    }
}

/// A word in a free group, stored as a sequence of generator powers.
///
/// Words produced by every operation here are freely reduced: adjacent
/// letters have distinct generators and no exponent is zero.
/// [`GroupWord::from_letters`] keeps its input verbatim so that reduction
/// itself can be exercised.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Unreduced word, exactly as given.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn letter(gen: Symbol, exp: i64) -> Self {
        GroupWord::from_letters(vec![Letter::new(gen, exp)]).free_reduce()
    }

    pub fn gen(gen: Symbol) -> Self {
        Self::letter(gen, 1)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters (generator powers).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of `|exp|`, the length over the generating set.
    pub fn word_length(&self) -> u64 {
        self.letters.iter().map(|l| l.exp.unsigned_abs()).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.iter().all(|l| l.exp != 0)
            && self.letters.windows(2).all(|w| w[0].gen != w[1].gen)
    }

    pub fn generators(&self) -> BTreeSet<&'static str> {
        self.letters.iter().map(|l| l.gen.name()).collect()
    }

    /// Free reduction: merge equal neighbours, drop zero exponents, repeat.
    pub fn free_reduce(&self) -> GroupWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            push_reduced(&mut out, l);
        }
        GroupWord { letters: out }
    }

    /// Reverses letter order and negates exponents.
    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.free_reduce().letters;
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        GroupWord { letters: out }
    }

    pub fn pow(&self, n: i64) -> GroupWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(GroupWord::identity(), |acc, _| acc.concat(&base))
    }

    /// Splits `w = conjugator · core · conjugator⁻¹` where the first and last
    /// letters of `core` use different generators (or `core` has at most one
    /// letter).
    pub fn cyclic_reduce(&self) -> (GroupWord, GroupWord) {
        let mut core = self.free_reduce().letters;
        let mut conj = Vec::new();
        let mut start = 0;
        loop {
            if core.len() - start < 2 {
                break;
            }
            let first = core[start];
            let last = *core.last().unwrap();
            if first.gen != last.gen {
                break;
            }
            core.pop();
            start += 1;
            conj.push(first);
            let merged = first.exp + last.exp;
            if merged != 0 {
                // g^a · M · g^b = g^a · (M · g^{a+b}) · g^{-a}
                core.push(Letter::new(first.gen, merged));
            }
        }
        let core = GroupWord::from_letters(core.split_off(start)).free_reduce();
        (core, GroupWord::from_letters(conj).free_reduce())
    }

    /// The homomorphic image under `gen ↦ images[gen]`, freely reduced.
    pub fn substitute(&self, images: &HashMap<Symbol, GroupWord>) -> Result<GroupWord, WordError> {
        let mut out = GroupWord::identity();
        for l in &self.letters {
            let img = images
                .get(&l.gen)
                .ok_or(WordError::MissingImage(l.gen.name()))?;
            out = out.concat(&img.pow(l.exp));
        }
        Ok(out)
    }

    /// Image in ℤ under `gen ↦ weights[gen]`.
    pub fn abelianize(&self, weights: &HashMap<Symbol, i64>) -> Result<i64, WordError> {
        self.letters.iter().try_fold(0i64, |acc, l| {
            let w = weights
                .get(&l.gen)
                .ok_or(WordError::MissingWeight(l.gen.name()))?;
            Ok(acc + l.exp * w)
        })
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if l.exp == 0 {
        return;
    }
    match out.last_mut() {
        Some(top) if top.gen == l.gen => {
            top.exp += l.exp;
            if top.exp == 0 {
                out.pop();
            }
        }
        _ => out.push(l),
    }
}

/// `g h g⁻¹ h⁻¹`, freely reduced.
pub fn commutator(g: &GroupWord, h: &GroupWord) -> GroupWord {
    g.concat(h).concat(&g.inverse()).concat(&h.inverse())
}

impl Mul for &GroupWord {
    type Output = GroupWord;
    fn mul(self, rhs: &GroupWord) -> GroupWord {
        self.concat(rhs)
    }
}

/// `u v^-1 u^2`; the empty word prints as `1`.
impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l.exp == 1 {
                write!(f, "{}", l.gen)?;
            } else {
                write!(f, "{}^{}", l.gen, l.exp)?;
            }
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = WordError;

    /// Whitespace-separated `gen` or `gen^exp` tokens; `1` or the empty
    /// string is the identity. The result is kept unreduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::Parse(s.to_string());
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (n, e.parse::<i32>().map_err(|_| bad())? as i64),
                None => (tok, 1),
            };
            if !Symbol::is_identifier(name) {
                return Err(bad());
            }
            letters.push(Letter::new(Symbol::intern(name), exp));
        }
        Ok(GroupWord::from_letters(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w("u v v^-1 u^-1").free_reduce().is_empty());
        assert_eq!(w("u u^2").free_reduce(), w("u^3"));
        let c = w("u v u^-1 v^-1");
        assert_eq!(c.free_reduce(), c);
        assert!(!w("u u").is_reduced());
        assert!(!w("u^0").is_reduced());
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, conj) = w("u v u^-1").cyclic_reduce();
        assert_eq!((core, conj), (w("v"), w("u")));
        let c = w("v u v^-1 u^-1");
        assert_eq!(c.cyclic_reduce(), (c.clone(), GroupWord::identity()));
        assert_eq!(
            GroupWord::identity().cyclic_reduce(),
            (GroupWord::identity(), GroupWord::identity())
        );
    }

    #[test]
    fn cyclic_reduce_merges_same_generator_ends() {
        let word = w("x y x^2");
        let (core, conj) = word.cyclic_reduce();
        assert_eq!(core, w("y x^3"));
        assert_eq!(conj.concat(&core).concat(&conj.inverse()), word);
        let (core, conj) = w("u^2 v u x u^-3").cyclic_reduce();
        assert_eq!(
            conj.concat(&core).concat(&conj.inverse()),
            w("u^2 v u x u^-3")
        );
        assert_ne!(core.letters()[0].gen, core.letters().last().unwrap().gen);
    }

    #[test]
    fn substitute_examples() {
        let images: HashMap<_, _> = [(Symbol::U, w("x^-1")), (Symbol::V, w("y"))]
            .into_iter()
            .collect();
        assert_eq!(w("v").substitute(&images).unwrap(), w("y"));
        assert_eq!(
            w("u v u^-1 v^-1").substitute(&images).unwrap(),
            w("x^-1 y x y^-1")
        );
        let id: HashMap<_, _> = [(Symbol::U, w("u")), (Symbol::V, w("v"))]
            .into_iter()
            .collect();
        let word = w("u^3 v^-2 u");
        assert_eq!(word.substitute(&id).unwrap(), word);
        assert_eq!(w("u h").substitute(&id), Err(WordError::MissingImage("h")));
    }

    #[test]
    fn commutator_examples() {
        let u = GroupWord::gen(Symbol::U);
        assert!(commutator(&u, &GroupWord::identity()).is_empty());
        assert!(commutator(&u, &w("u^3")).is_empty());
        for n in 1..6 {
            let vu = w("v u").pow(n);
            let expect = w("u v").pow(n).concat(&w("u^-1 v^-1").pow(n));
            assert_eq!(commutator(&u, &vu), expect);
        }
    }

    #[test]
    fn abelianize_examples() {
        // (p, q) = (7, 5), (a, b) = (3, -4): y^3 x^-4 ↦ 3·7 − 4·5 = 1
        let weights: HashMap<_, _> = [(Symbol::X, 5), (Symbol::Y, 7)].into_iter().collect();
        assert_eq!(w("y^3 x^-4").abelianize(&weights).unwrap(), 1);
        assert_eq!(w("x^7").abelianize(&weights).unwrap(), 35);
        assert_eq!(
            commutator(&w("x^2 y"), &w("y^3 x"))
                .abelianize(&weights)
                .unwrap(),
            0
        );
        assert_eq!(
            w("z").abelianize(&weights),
            Err(WordError::MissingWeight("z"))
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(w("u v^-1 u^2").to_string(), "u v^-1 u^2");
        assert_eq!(GroupWord::identity().to_string(), "1");
        assert!("u^x".parse::<GroupWord>().is_err());
        assert!("2u".parse::<GroupWord>().is_err());
    }
}
