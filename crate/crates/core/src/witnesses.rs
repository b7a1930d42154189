//! Generators for the lower-bound witness families.
//!
//! [`witness_a`] and [`witness_b`] are the four-letter DFAs whose orthogonal
//! catenation needs `m·2^(n−1) − 2^(n−2)` states. The unary star languages
//! `(a^m)*` and `(b^n)*` witness the `m + n` bound for NFAs, and
//! [`fooling_set_unary_catenation`] certifies that bound from below.

use crate::automaton::{Alphabet, Dfa, Nfa, StateId, Symbol, Word};
use crate::catenation::{build_catenation_dfa, build_catenation_nfa};
use crate::error::{Error, Result};

const A: Symbol = Symbol(0);
const B: Symbol = Symbol(1);
const C: Symbol = Symbol(2);
const D: Symbol = Symbol(3);

fn abcd() -> Alphabet {
    Alphabet::new(["a", "b", "c", "d"]).expect("static alphabet")
}

fn at_least(what: &'static str, min: usize, value: usize) -> Result<()> {
    if value < min {
        return Err(Error::Parameter {
            what,
            min: min as u64,
            value: value as u64,
        });
    }
    Ok(())
}

/// First-factor witness with states `0..m`, start 0, accepting `{m−2}` and
/// dead state `m−1`.
pub fn witness_a(m: usize) -> Result<Dfa> {
    at_least("m", 3, m)?;
    let dead = m - 1;
    Dfa::from_fn(abcd(), m, 0, [m - 2], |q, s| {
        let target: Option<StateId> = match s {
            A if q == 0 => Some(0),
            C if q == m - 2 => Some(0),
            B if q + 3 <= m => Some(q + 1),
            D if q + 4 <= m => Some(q + 1),
            D if q == m - 2 => Some(0),
            _ => None,
        };
        target.unwrap_or(dead)
    })
}

/// Second-factor witness with states `0..n`, start 0, accepting `{1}` and
/// dead state `n−1`. Letter `a` rotates the cycle `1 → 2 → … → n−2 → 1`.
pub fn witness_b(n: usize) -> Result<Dfa> {
    at_least("n", 3, n)?;
    let dead = n - 1;
    Dfa::from_fn(abcd(), n, 0, [1], |p, s| {
        let target: Option<StateId> = match s {
            A if (1..=n - 3).contains(&p) => Some(p + 1),
            A if p == n - 2 => Some(1),
            B if (1..=n - 2).contains(&p) => Some(p),
            C if (2..=n - 2).contains(&p) => Some(p),
            C if p == 0 => Some(1),
            D if p <= n - 2 => Some(p),
            _ => None,
        };
        target.unwrap_or(dead)
    })
}

/// `k`-state cycle over the one-letter alphabet `{a}` accepting `(a^k)*`.
pub fn unary_star_dfa(k: usize) -> Result<Dfa> {
    unary_star_on(k, "a")
}

/// Same as [`unary_star_dfa`] but over the single letter `letter`.
pub fn unary_star_on(k: usize, letter: &str) -> Result<Dfa> {
    at_least("k", 1, k)?;
    Dfa::from_fn(Alphabet::new([letter])?, k, 0, [0], |q, _| (q + 1) % k)
}

/// DFAs for `(a^m)*` and `(b^n)*`, each completed over `{a, b}` with a sink
/// for the foreign letter.
pub fn unary_pair(m: usize, n: usize) -> Result<(Dfa, Dfa)> {
    let ab = Alphabet::new(["a", "b"])?;
    let first = unary_star_on(m, "a")?.extend_alphabet(&ab)?;
    let second = unary_star_on(n, "b")?.extend_alphabet(&ab)?;
    Ok((first, second))
}

/// Catenation NFA for `(a^m)*·(b^n)*` with the two completion sinks removed,
/// which leaves exactly `m + n` states.
pub fn unary_catenation_nfa(m: usize, n: usize) -> Result<Nfa> {
    let (first, second) = unary_pair(m, n)?;
    Ok(build_catenation_nfa(&first, &second)?.trim())
}

/// Minimal DFA for `(a^m)*·(b^n)*` over `{a, b}`.
pub fn unary_catenation_dfa(m: usize, n: usize) -> Result<Dfa> {
    let (first, second) = unary_pair(m, n)?;
    Ok(build_catenation_dfa(&first, &second)?.dfa().minimize())
}

/// `m + n` word pairs forming a fooling set for `(a^m)*·(b^n)*` over `{a, b}`:
/// `(a^i, a^(m−i) b^n)` for `0 ≤ i < m` and `(a^m b^j, b^(n−j))` for
/// `1 ≤ j ≤ n`.
pub fn fooling_set_unary_catenation(m: usize, n: usize) -> Result<Vec<(Word, Word)>> {
    at_least("m", 1, m)?;
    at_least("n", 1, n)?;
    let a = Word::new(vec![A]);
    let b = Word::new(vec![B]);
    let mut pairs = Vec::with_capacity(m + n);
    for i in 0..m {
        pairs.push((a.repeat(i), a.repeat(m - i).concat(&b.repeat(n))));
    }
    for j in 1..=n {
        pairs.push((a.repeat(m).concat(&b.repeat(j)), b.repeat(n - j)));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn w(d: &Dfa, text: &str) -> Word {
        d.alphabet().parse_word(text).unwrap()
    }

    #[test]
    fn witness_a_table() {
        for m in 3..9 {
            let a = witness_a(m).unwrap();
            let dead = m - 1;
            assert_eq!(a.start(), 0);
            assert_eq!(a.accepting_states(), BTreeSet::from([m - 2]));
            for q in 0..m {
                let expect = |s: Symbol| -> StateId {
                    match s {
                        A if q == 0 => 0,
                        C if q == m - 2 => 0,
                        B if q <= m - 3 => q + 1,
                        D if m >= 4 && q <= m - 4 => q + 1,
                        D if q == m - 2 => 0,
                        _ => dead,
                    }
                };
                for s in [A, B, C, D] {
                    assert_eq!(a.step(q, s), expect(s), "m={m} q={q} s={s:?}");
                }
            }
        }
    }

    #[test]
    fn witness_a_examples() {
        let a3 = witness_a(3).unwrap();
        assert_eq!(a3.step(0, D), 2);
        let a4 = witness_a(4).unwrap();
        assert!(a4.accepts(&w(&a4, "bb")).unwrap());
        for m in 3..7 {
            let a = witness_a(m).unwrap();
            assert!(a
                .enumerate_accepted(8)
                .iter()
                .all(|word| word.symbols().last() != Some(&D)));
        }
        assert!(matches!(witness_a(2), Err(Error::Parameter { .. })));
    }

    #[test]
    fn witness_b_table() {
        for n in 3..9 {
            let b = witness_b(n).unwrap();
            let dead = n - 1;
            assert_eq!(b.accepting_states(), BTreeSet::from([1]));
            for p in 0..n {
                let cycle = (1..=n - 2).contains(&p);
                let a_next = match p {
                    _ if p == n - 2 => 1,
                    _ if cycle => p + 1,
                    _ => dead,
                };
                assert_eq!(b.step(p, A), a_next);
                assert_eq!(b.step(p, B), if cycle { p } else { dead });
                let c_next = match p {
                    0 => 1,
                    _ if (2..=n - 2).contains(&p) => p,
                    _ => dead,
                };
                assert_eq!(b.step(p, C), c_next);
                assert_eq!(b.step(p, D), if p <= n - 2 { p } else { dead });
            }
        }
    }

    #[test]
    fn witness_b_examples() {
        let b3 = witness_b(3).unwrap();
        assert!(b3.accepts(&w(&b3, "c")).unwrap());
        assert!(b3.accepts(&w(&b3, "dca")).unwrap());
        for n in 3..8 {
            let b = witness_b(n).unwrap();
            assert!(!b.accepts(&w(&b, "a")).unwrap());
            assert_eq!(b.dead_states(), BTreeSet::from([n - 1]));
        }
    }

    #[test]
    fn witnesses_are_minimal() {
        for k in 3..=8 {
            assert_eq!(witness_a(k).unwrap().minimize().state_count(), k);
            assert_eq!(witness_b(k).unwrap().minimize().state_count(), k);
        }
    }

    #[test]
    fn unary_star_examples() {
        let one = unary_star_dfa(1).unwrap();
        assert_eq!(one.enumerate_accepted(3).len(), 4);
        let three = unary_star_dfa(3).unwrap();
        for (len, expected) in [(0, true), (1, false), (2, false), (3, true), (6, true)] {
            let word = Word::from_indices(&vec![0; len]);
            assert_eq!(three.accepts(&word).unwrap(), expected);
        }
        for k in 1..10 {
            assert!(unary_star_dfa(k).unwrap().is_permutation_automaton());
        }
        assert!(unary_star_dfa(0).is_err());
    }

    #[test]
    fn fooling_set_shapes() {
        let ab = Alphabet::new(["a", "b"]).unwrap();
        let render = |pairs: Vec<(Word, Word)>| -> Vec<(String, String)> {
            pairs
                .iter()
                .map(|(x, y)| (ab.render(x), ab.render(y)))
                .collect()
        };
        let s = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert_eq!(
            render(fooling_set_unary_catenation(2, 2).unwrap()),
            vec![s("ε", "aabb"), s("a", "abb"), s("aab", "b"), s("aabb", "ε")]
        );
        assert_eq!(
            render(fooling_set_unary_catenation(1, 1).unwrap()),
            vec![s("ε", "ab"), s("ab", "ε")]
        );
        for m in 1..6 {
            for n in 1..6 {
                assert_eq!(fooling_set_unary_catenation(m, n).unwrap().len(), m + n);
            }
        }
    }

    #[test]
    fn unary_catenation_nfa_has_m_plus_n_states() {
        for m in 1..=6 {
            for n in 1..=6 {
                let nfa = unary_catenation_nfa(m, n).unwrap();
                assert_eq!(nfa.state_count(), m + n);
                let dfa = unary_catenation_dfa(m, n).unwrap();
                assert!(nfa.determinize().language_equivalent(&dfa).unwrap());
            }
        }
    }
}
