//! Deciding whether `L(A)` and `L(B)` are catenation-orthogonal, i.e. every
//! word of `L(A)·L(B)` has exactly one factorization, and the structural
//! consequences of orthogonality for the two automata.
//!
//! The decision procedure works on the `m + n` state catenation NFA. Since
//! both inputs are deterministic, an accepting run of that NFA is fixed by
//! the position where it leaves A for B, so the NFA is ambiguous exactly
//! when some word factorizes twice. Ambiguity is found by a breadth-first
//! search of the self-product that remembers whether the two runs have
//! diverged.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::automaton::{Alphabet, Dfa, StateId, Symbol, Word};
use crate::catenation::{
    align, build_catenation_dfa, build_catenation_nfa, orthogonal_upper_bound, CatDfa,
};
use crate::error::{Error, Result};

/// A word with two distinct factorizations `u1·v1 = u2·v2`, `|u1| < |u2|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbiguityWitness {
    pub alphabet: Alphabet,
    pub word: Word,
    pub split1: (Word, Word),
    pub split2: (Word, Word),
}

impl AmbiguityWitness {
    /// Builds a witness from two split positions of `word`.
    pub fn from_splits(alphabet: Alphabet, word: Word, first: usize, second: usize) -> Self {
        let (first, second) = (first.min(second), first.max(second));
        AmbiguityWitness {
            split1: word.split_at(first),
            split2: word.split_at(second),
            alphabet,
            word,
        }
    }

    /// Checks every invariant of the witness against the two automata.
    pub fn is_valid_for(&self, a: &Dfa, b: &Dfa) -> Result<bool> {
        let b = align(a, b)?;
        let (u1, v1) = &self.split1;
        let (u2, v2) = &self.split2;
        Ok(u1.concat(v1) == self.word
            && u2.concat(v2) == self.word
            && u1.len() < u2.len()
            && a.accepts(u1)?
            && a.accepts(u2)?
            && b.accepts(v1)?
            && b.accepts(v2)?)
    }
}

impl fmt::Display for AmbiguityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = |w: &Word| self.alphabet.render(w);
        write!(
            f,
            "word {} = {}·{} = {}·{}",
            r(&self.word),
            r(&self.split1.0),
            r(&self.split1.1),
            r(&self.split2.0),
            r(&self.split2.1)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Orthogonal,
    NotOrthogonal(AmbiguityWitness),
}

impl Verdict {
    pub fn is_orthogonal(&self) -> bool {
        matches!(self, Verdict::Orthogonal)
    }

    pub fn witness(&self) -> Option<&AmbiguityWitness> {
        match self {
            Verdict::Orthogonal => None,
            Verdict::NotOrthogonal(w) => Some(w),
        }
    }
}

/// Split positions `i` with `w[..i] ∈ L(a)` and `w[i..] ∈ L(b)`, ascending.
/// `b` must already share `a`'s symbol order.
pub(crate) fn split_positions(a: &Dfa, b: &Dfa, word: &Word) -> Vec<usize> {
    let symbols = word.symbols();
    let mut q = a.start();
    let mut splits = Vec::new();
    for i in 0..=symbols.len() {
        if i > 0 {
            q = a.step(q, symbols[i - 1]);
        }
        if a.is_accepting(q) && b.is_accepting(b.run_unchecked(b.start(), &symbols[i..])) {
            splits.push(i);
        }
    }
    splits
}

type ProductNode = (StateId, StateId, bool);

/// Decides orthogonality of `L(a)` and `L(b)`. On failure the witness is the
/// shortest doubly-factorizable word, least in alphabet order among those,
/// with its two leftmost splits.
pub fn is_orthogonal(a: &Dfa, b: &Dfa) -> Result<Verdict> {
    let b = align(a, b)?;
    let nfa = build_catenation_nfa(a, &b)?;
    let origin: ProductNode = (a.start(), a.start(), false);
    let mut parent: HashMap<ProductNode, Option<(ProductNode, Symbol)>> =
        HashMap::from([(origin, None)]);
    let mut queue = VecDeque::from([origin]);
    let mut found = None;
    while let Some(node @ (s, t, diverged)) = queue.pop_front() {
        if diverged && nfa.accepting().contains(&s) && nfa.accepting().contains(&t) {
            found = Some(node);
            break;
        }
        for c in a.alphabet().symbols() {
            for &s2 in nfa.successors(s, c) {
                for &t2 in nfa.successors(t, c) {
                    let next = (s2, t2, diverged || s2 != t2);
                    if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                        e.insert(Some((node, c)));
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    let Some(mut cursor) = found else {
        return Ok(Verdict::Orthogonal);
    };
    let mut symbols = Vec::new();
    while let Some((prev, c)) = parent[&cursor] {
        symbols.push(c);
        cursor = prev;
    }
    symbols.reverse();
    let word = Word::new(symbols);
    let splits = split_positions(a, &b, &word);
    debug_assert!(splits.len() >= 2, "ambiguous run pair without two splits");
    Ok(Verdict::NotOrthogonal(AmbiguityWitness::from_splits(
        a.alphabet().clone(),
        word,
        splits[0],
        splits[1],
    )))
}

/// The catenation DFA when the languages are orthogonal, otherwise
/// [`Error::Undefined`] carrying the witness.
pub fn orthogonal_catenation(a: &Dfa, b: &Dfa) -> Result<CatDfa> {
    match is_orthogonal(a, b)? {
        Verdict::Orthogonal => build_catenation_dfa(a, b),
        Verdict::NotOrthogonal(witness) => Err(Error::Undefined(Box::new(witness))),
    }
}

/// Shortest nonempty word leading from `q` back to `q`, if any.
fn return_word(a: &Dfa, q: StateId) -> Option<Word> {
    let mut parent: Vec<Option<(StateId, Symbol)>> = vec![None; a.state_count()];
    let mut seen = vec![false; a.state_count()];
    let mut queue = VecDeque::new();
    for c in a.alphabet().symbols() {
        let t = a.step(q, c);
        if !seen[t] {
            seen[t] = true;
            parent[t] = Some((q, c));
            queue.push_back(t);
        }
    }
    while let Some(p) = queue.pop_front() {
        if p == q {
            let mut symbols = Vec::new();
            let mut cursor = q;
            loop {
                let (prev, c) = parent[cursor].expect("visited");
                symbols.push(c);
                cursor = prev;
                if cursor == q {
                    break;
                }
            }
            symbols.reverse();
            return Some(Word::new(symbols));
        }
        for c in a.alphabet().symbols() {
            let t = a.step(p, c);
            if !seen[t] {
                seen[t] = true;
                parent[t] = Some((p, c));
                queue.push_back(t);
            }
        }
    }
    None
}

/// First accepting state (by index) lying on a cycle, with a shortest cycle word.
pub fn accepting_cycle(a: &Dfa) -> Option<(StateId, Word)> {
    a.accepting_iter()
        .find_map(|q| return_word(a, q).map(|w| (q, w)))
}

/// True iff no accepting state can return to itself on a nonempty word.
pub fn check_acyclic_accepting(a: &Dfa) -> bool {
    accepting_cycle(a).is_none()
}

/// Strict reachability order on the accepting states of an automaton whose
/// accepting states lie on no cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccOrder {
    pairs: BTreeSet<(StateId, StateId)>,
}

impl AccOrder {
    pub fn pairs(&self) -> &BTreeSet<(StateId, StateId)> {
        &self.pairs
    }

    pub fn less(&self, f1: StateId, f2: StateId) -> bool {
        self.pairs.contains(&(f1, f2))
    }

    /// Accepting states with no smaller accepting state, among `accepting`.
    pub fn minimal_elements(&self, accepting: &BTreeSet<StateId>) -> BTreeSet<StateId> {
        accepting
            .iter()
            .copied()
            .filter(|&f| !self.pairs.iter().any(|&(_, g)| g == f))
            .collect()
    }
}

/// `f1 < f2` iff `f1 ≠ f2` are accepting and `f2` is reachable from `f1`.
pub fn acc_order(a: &Dfa) -> Result<AccOrder> {
    if let Some((state, word)) = accepting_cycle(a) {
        return Err(Error::AcceptingCycle {
            state,
            word: a.alphabet().render(&word),
        });
    }
    let mut pairs = BTreeSet::new();
    for f1 in a.accepting_iter() {
        for f2 in a.reachable_from(f1) {
            if f2 != f1 && a.is_accepting(f2) {
                pairs.insert((f1, f2));
            }
        }
    }
    Ok(AccOrder { pairs })
}

/// Pairs `p1 < p2` of distinct states sent to the same state by `symbol`,
/// sorted by `(p1, p2, symbol)`. Empty iff `b` is a permutation automaton.
pub fn merging_pairs(b: &Dfa) -> Vec<(StateId, StateId, Symbol)> {
    let mut pairs = Vec::new();
    for p1 in b.states() {
        for p2 in p1 + 1..b.state_count() {
            for c in b.alphabet().symbols() {
                if b.step(p1, c) == b.step(p2, c) {
                    pairs.push((p1, p2, c));
                }
            }
        }
    }
    pairs
}

/// States of `b` that appear in no valid second component of `q`.
pub fn forbidden_second_component_states(
    a: &Dfa,
    b: &Dfa,
    q: StateId,
) -> Result<BTreeSet<StateId>> {
    a.check_state(q)?;
    build_catenation_dfa(a, b)?.forbidden_second_component_states(q)
}

/// A consequence of orthogonality that failed to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaViolation {
    /// An accepting state of A lies on a cycle although B has no dead state.
    AcceptingCycle { state: StateId, word: Word },
    /// A reachable `(q, X)` holds both states of a merging pair.
    MergingPairTogether {
        a_state: StateId,
        subset: BTreeSet<StateId>,
        pair: (StateId, StateId, Symbol),
    },
    /// Every B-state occurs in some valid second component of `q` although B
    /// is a permutation automaton and `q` reaches an accepting state.
    NoForbiddenState { a_state: StateId },
    /// The minimal catenation DFA exceeds the orthogonal bound while B is not
    /// a permutation automaton.
    BoundExceeded { minimized: usize, bound: u64 },
}

/// Outcome of [`lemma_checks`]. The checks only apply to orthogonal pairs
/// whose minimal second automaton has no dead state.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaReport {
    pub orthogonal: bool,
    pub b_dead_free: bool,
    pub b_permutation: bool,
    /// Number of A-states the forbidden-state check was applied to.
    pub forbidden_checks: usize,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaReport {
    pub fn applicable(&self) -> bool {
        self.orthogonal && self.b_dead_free
    }
}

/// Runs the structural checks that orthogonality with a dead-state-free
/// second factor implies, on the minimal automata of `a` and `b`:
///
/// * no accepting state of A lies on a cycle;
/// * no reachable `(q, X)` contains both states of a merging pair of B;
/// * for a permutation automaton B, every `q` reaching an accepting state on
///   a nonempty word has a B-state outside all its valid second components;
/// * the minimal catenation DFA exceeds `m·2^(n−1) − 2^(n−2)` only if B is a
///   permutation automaton.
pub fn lemma_checks(a: &Dfa, b: &Dfa) -> Result<LemmaReport> {
    let a = a.minimize();
    let b = align(&a, b)?.minimize();
    let mut report = LemmaReport {
        orthogonal: is_orthogonal(&a, &b)?.is_orthogonal(),
        b_dead_free: b.dead_states().is_empty(),
        b_permutation: b.is_permutation_automaton(),
        ..LemmaReport::default()
    };
    if !report.applicable() {
        return Ok(report);
    }

    if let Some((state, word)) = accepting_cycle(&a) {
        report
            .violations
            .push(LemmaViolation::AcceptingCycle { state, word });
    }

    let cat = build_catenation_dfa(&a, &b)?;
    let merging = merging_pairs(&b);
    for label in cat.labels() {
        if let Some(&pair) = merging
            .iter()
            .find(|(p1, p2, _)| label.contains(*p1) && label.contains(*p2))
        {
            report.violations.push(LemmaViolation::MergingPairTogether {
                a_state: label.a_state,
                subset: label.b_states(),
                pair,
            });
        }
    }

    if report.b_permutation {
        for q in a.states() {
            let reaches_accepting = a.alphabet().symbols().any(|c| {
                a.reachable_from(a.step(q, c))
                    .iter()
                    .any(|&t| a.is_accepting(t))
            });
            if !reaches_accepting {
                continue;
            }
            report.forbidden_checks += 1;
            if cat.forbidden_second_component_states(q)?.is_empty() {
                report
                    .violations
                    .push(LemmaViolation::NoForbiddenState { a_state: q });
            }
        }
    }

    if b.state_count() >= 2 && !report.b_permutation {
        let bound = orthogonal_upper_bound(a.state_count() as u64, b.state_count() as u64)?;
        let minimized = cat.dfa().minimize().state_count();
        if minimized as u64 > bound {
            report
                .violations
                .push(LemmaViolation::BoundExceeded { minimized, bound });
        }
    }
    Ok(report)
}
