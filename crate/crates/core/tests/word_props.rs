use std::collections::HashMap;

use pillowcase_core::words::{commutator, fp_normal_form, FreeProductWord};
use pillowcase_core::{GroupWord, Letter, Symbol};
use proptest::prelude::*;

fn word_over(gens: Vec<Symbol>, max_len: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(
        (
            prop::sample::select(gens),
            prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
        ),
        0..max_len,
    )
    .prop_map(|ls| {
        GroupWord::from_letters(ls.into_iter().map(|(g, e)| Letter::new(g, e)).collect())
    })
}

fn xy_word(max_len: usize) -> impl Strategy<Value = GroupWord> {
    word_over(vec![Symbol::X, Symbol::Y], max_len)
}

fn orders() -> impl Strategy<Value = (u64, u64)> {
    prop::sample::select(vec![(2u64, 3u64), (3, 2), (5, 3), (7, 5), (4, 9), (11, 2)])
}

/// All alternating words with up to `max` syllables.
fn small_conjugators(p: u64, q: u64, max: usize) -> Vec<GroupWord> {
    let mut out = vec![GroupWord::identity()];
    let mut frontier = vec![(GroupWord::identity(), None::<Symbol>)];
    for _ in 0..max {
        let mut next = Vec::new();
        for (w, last) in &frontier {
            for (g, n) in [(Symbol::X, p), (Symbol::Y, q)] {
                if Some(g) == *last {
                    continue;
                }
                for e in 1..n as i64 {
                    let w2 = w.concat(&GroupWord::letter(g, e));
                    out.push(w2.clone());
                    next.push((w2, Some(g)));
                }
            }
        }
        frontier = next;
    }
    out
}

proptest! {
    #[test]
    fn free_reduce_idempotent(w in word_over(vec![Symbol::U, Symbol::V, Symbol::X], 12)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.word_length() <= w.word_length());
        prop_assert!(r.is_reduced());
    }

    #[test]
    fn inverse_cancels(w in word_over(vec![Symbol::U, Symbol::V], 12)) {
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn multiplication_well_defined(a in xy_word(10), b in xy_word(10), (p, q) in orders()) {
        let na = fp_normal_form(&a, p, q).unwrap();
        let nb = fp_normal_form(&b, p, q).unwrap();
        let joined = fp_normal_form(&a.concat(&b), p, q).unwrap();
        prop_assert_eq!(&joined, &na.mul(&nb).unwrap());
        let via_words = fp_normal_form(&na.to_group_word().concat(&nb.to_group_word()), p, q).unwrap();
        prop_assert_eq!(joined, via_words);
    }

    #[test]
    fn inserting_relators(w in xy_word(10), at in 0usize..11, which in any::<bool>(), k in -2i64..=2, (p, q) in orders()) {
        let letters = w.letters();
        let at = at.min(letters.len());
        let rel = if which { Letter::new(Symbol::X, k * p as i64) } else { Letter::new(Symbol::Y, k * q as i64) };
        let mut v = letters[..at].to_vec();
        v.push(rel);
        v.extend_from_slice(&letters[at..]);
        let padded = GroupWord::from_letters(v);
        prop_assert_eq!(fp_normal_form(&padded, p, q).unwrap(), fp_normal_form(&w, p, q).unwrap());
    }

    #[test]
    fn word_times_inverse_trivial(w in xy_word(14), (p, q) in orders()) {
        prop_assert!(fp_normal_form(&w.concat(&w.inverse()), p, q).unwrap().is_trivial());
        prop_assert!(fp_normal_form(&w.inverse().concat(&w), p, q).unwrap().is_trivial());
    }

    #[test]
    fn normal_form_exponents_canonical(w in xy_word(14), (p, q) in orders()) {
        let nf = fp_normal_form(&w, p, q).unwrap();
        for pair in nf.syllables().windows(2) {
            prop_assert_ne!(pair[0].factor, pair[1].factor);
        }
        for s in nf.syllables() {
            let order = if s.factor.symbol() == Symbol::X { p } else { q };
            prop_assert!(s.exp >= 1 && s.exp < order);
        }
        let again = fp_normal_form(&nf.to_group_word(), p, q).unwrap();
        prop_assert_eq!(again, nf);
    }

    #[test]
    fn commutators_abelianize_to_zero(g in word_over(vec![Symbol::U, Symbol::V, Symbol::X], 8), h in word_over(vec![Symbol::U, Symbol::V, Symbol::X], 8), a in -5i64..5, b in -5i64..5, c in -5i64..5) {
        let weights: HashMap<Symbol, i64> = [(Symbol::U, a), (Symbol::V, b), (Symbol::X, c)].into_iter().collect();
        prop_assert_eq!(commutator(&g, &h).abelianize(&weights).unwrap(), 0);
    }

    #[test]
    fn free_cyclic_reduce_is_conjugate(w in word_over(vec![Symbol::U, Symbol::V], 10)) {
        let (core, conj) = w.cyclic_reduce();
        prop_assert_eq!(conj.concat(&core).concat(&conj.inverse()), w.free_reduce());
        if core.len() > 1 {
            let (first, last) = (core.letters()[0], core.letters()[core.len() - 1]);
            prop_assert!(first.gen != last.gen);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclic_reduce_is_minimal(w in xy_word(8), (p, q) in prop::sample::select(vec![(3u64, 2u64), (5, 3), (4, 3)])) {
        let nf = fp_normal_form(&w, p, q).unwrap();
        let (core, conj) = nf.cyclic_reduce();
        let back = conj.mul(&core).unwrap().mul(&conj.inverse()).unwrap();
        prop_assert_eq!(&back, &nf);
        for g in small_conjugators(p, q, 3) {
            let c = fp_normal_form(&g.concat(&nf.to_group_word()).concat(&g.inverse()), p, q).unwrap();
            prop_assert!(core.syllable_length() <= c.syllable_length(), "{} shorter than core {}", c, core);
        }
    }
}

#[test]
fn free_product_identity_is_trivial() {
    let e = FreeProductWord::identity(3, 2).unwrap();
    assert!(e.is_trivial());
    assert_eq!(e.to_string(), "1");
}
