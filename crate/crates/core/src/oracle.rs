//! Brute-force reference implementations.
//!
//! Nothing here goes through the catenation constructions or the
//! partition-refinement code: factorizations are found by trying every split,
//! orthogonality by scanning words, and minimal size by comparing acceptance
//! vectors over all short words.

use std::collections::HashSet;

use crate::automaton::{Dfa, Word};
use crate::orthogonality::AmbiguityWitness;

fn run(d: &Dfa, from: usize, w: &[crate::automaton::Symbol]) -> usize {
    w.iter().fold(from, |q, &s| d.step(q, s))
}

fn same_names(a: &Dfa, b: &Dfa) -> Dfa {
    b.with_alphabet_order(a.alphabet())
        .expect("oracle inputs must share an alphabet")
}

/// Every split `w = u·v` with `u ∈ L(a)` and `v ∈ L(b)`, ordered by `|u|`.
pub fn factorizations(a: &Dfa, b: &Dfa, w: &Word) -> Vec<(Word, Word)> {
    let b = same_names(a, b);
    let symbols = w.symbols();
    (0..=symbols.len())
        .filter(|&i| {
            a.is_accepting(run(a, a.start(), &symbols[..i]))
                && b.is_accepting(run(&b, b.start(), &symbols[i..]))
        })
        .map(|i| w.split_at(i))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundedVerdict {
    /// No word up to the bound has two factorizations.
    ClearUpTo(usize),
    Witness(AmbiguityWitness),
}

impl BoundedVerdict {
    pub fn witness(&self) -> Option<&AmbiguityWitness> {
        match self {
            BoundedVerdict::ClearUpTo(_) => None,
            BoundedVerdict::Witness(w) => Some(w),
        }
    }
}

/// Scans words of length `0..=max_len` in length-lexicographic order and
/// reports the first one with two or more factorizations.
///
/// Each length is explored depth-first over a trie; along the way the
/// prefix's A-state and, per accepted prefix, the B-state of the thread that
/// started there are carried so each word costs one step per thread.
pub fn brute_force_orthogonal(a: &Dfa, b: &Dfa, max_len: usize) -> BoundedVerdict {
    let b = same_names(a, b);
    for len in 0..=max_len {
        let mut word = Vec::with_capacity(len);
        let mut threads: Vec<(usize, usize)> = Vec::new();
        if a.is_accepting(a.start()) {
            threads.push((0, b.start()));
        }
        if let Some(splits) = scan(a, &b, len, a.start(), &mut word, &mut threads) {
            let word = Word::new(word);
            return BoundedVerdict::Witness(AmbiguityWitness::from_splits(
                a.alphabet().clone(),
                word,
                splits.0,
                splits.1,
            ));
        }
    }
    BoundedVerdict::ClearUpTo(max_len)
}

/// Depth-first over words of exactly `remaining` more symbols. `threads`
/// holds `(split position, B-state)` for every accepted prefix so far.
fn scan(
    a: &Dfa,
    b: &Dfa,
    remaining: usize,
    q: usize,
    word: &mut Vec<crate::automaton::Symbol>,
    threads: &mut Vec<(usize, usize)>,
) -> Option<(usize, usize)> {
    if remaining == 0 {
        let mut hits = threads.iter().filter(|(_, p)| b.is_accepting(*p));
        let first = hits.next()?;
        let second = hits.next()?;
        return Some((first.0, second.0));
    }
    for c in a.alphabet().symbols() {
        let saved = threads.clone();
        for t in threads.iter_mut() {
            t.1 = b.step(t.1, c);
        }
        word.push(c);
        let next = a.step(q, c);
        if a.is_accepting(next) {
            threads.push((word.len(), b.start()));
        }
        if let Some(found) = scan(a, b, remaining - 1, next, word, threads) {
            return Some(found);
        }
        word.pop();
        *threads = saved;
    }
    None
}

/// Number of distinct residual languages among reachable states, comparing
/// acceptance on every word of length at most `state_count`.
pub fn residual_count(d: &Dfa) -> usize {
    let reachable = reachable(d);
    // vectors[q] lists acceptance of q on all words of length ≤ depth,
    // grouped by first symbol.
    let mut vectors: Vec<Vec<bool>> = (0..d.state_count())
        .map(|q| vec![d.is_accepting(q)])
        .collect();
    for _ in 0..d.state_count() {
        vectors = (0..d.state_count())
            .map(|q| {
                let mut v = vec![d.is_accepting(q)];
                for s in d.alphabet().symbols() {
                    v.extend_from_slice(&vectors[d.step(q, s)]);
                }
                v
            })
            .collect();
    }
    reachable
        .iter()
        .map(|&q| vectors[q].as_slice())
        .collect::<HashSet<_>>()
        .len()
}

fn reachable(d: &Dfa) -> Vec<usize> {
    let mut seen = vec![false; d.state_count()];
    let mut stack = vec![d.start()];
    seen[d.start()] = true;
    let mut out = Vec::new();
    while let Some(q) = stack.pop() {
        out.push(q);
        for s in d.alphabet().symbols() {
            let t = d.step(q, s);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoolingVerdict {
    /// All conditions hold; the value lower-bounds the size of any NFA.
    Certified(usize),
    /// `x_i·y_i` is not in the language.
    NotInLanguage { index: usize },
    /// Both `x_i·y_j` and `x_j·y_i` are in the language.
    CrossAccepted { i: usize, j: usize },
}

/// Checks the fooling-set conditions for `pairs` against `lang`.
pub fn verify_fooling_set(lang: &Dfa, pairs: &[(Word, Word)]) -> FoolingVerdict {
    let member = |x: &Word, y: &Word| {
        let q = run(lang, lang.start(), x.symbols());
        lang.is_accepting(run(lang, q, y.symbols()))
    };
    for (index, (x, y)) in pairs.iter().enumerate() {
        if !member(x, y) {
            return FoolingVerdict::NotInLanguage { index };
        }
    }
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (xi, yi) = &pairs[i];
            let (xj, yj) = &pairs[j];
            if member(xi, yj) && member(xj, yi) {
                return FoolingVerdict::CrossAccepted { i, j };
            }
        }
    }
    FoolingVerdict::Certified(pairs.len())
}
