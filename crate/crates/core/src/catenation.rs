//! Catenation of two DFA languages.
//!
//! [`build_catenation_dfa`] is the pair construction: a state is an A-state
//! `q` together with the set `X` of B-states reached by every B-thread
//! spawned so far. A thread starting at B's start state is spawned whenever A
//! enters an accepting state. [`build_catenation_nfa`] is the `m + n` state
//! NFA obtained by gluing B after every accepting state of A.

use std::collections::{BTreeSet, HashMap};

use crate::automaton::{Dfa, Nfa, StateId};
use crate::error::{Error, Result};

/// Largest B automaton the bitset representation handles.
pub const MAX_SECOND_STATES: usize = 62;

/// A state `(q, X)` of the catenation DFA; `X` is a bitset over B's states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatState {
    pub a_state: StateId,
    pub b_subset: u64,
}

impl CatState {
    pub fn contains(&self, p: StateId) -> bool {
        p < 64 && self.b_subset >> p & 1 == 1
    }

    pub fn b_states(&self) -> BTreeSet<StateId> {
        (0..64).filter(|&p| self.contains(p)).collect()
    }
}

/// The reachable part of the catenation DFA with the `(q, X)` label of every
/// state.
#[derive(Clone, Debug)]
pub struct CatDfa {
    dfa: Dfa,
    labels: Vec<CatState>,
    first_states: usize,
    second_states: usize,
}

impl CatDfa {
    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    pub fn labels(&self) -> &[CatState] {
        &self.labels
    }

    pub fn label(&self, state: StateId) -> CatState {
        self.labels[state]
    }

    pub fn state_of(&self, label: CatState) -> Option<StateId> {
        self.labels.iter().position(|&l| l == label)
    }

    /// Number of reachable construction states.
    pub fn state_count(&self) -> usize {
        self.dfa.state_count()
    }

    /// Every set `X` with `(q, X)` reachable.
    pub fn valid_second_components(&self, q: StateId) -> Result<BTreeSet<BTreeSet<StateId>>> {
        if q >= self.first_states {
            return Err(Error::StateOutOfRange {
                state: q,
                count: self.first_states,
            });
        }
        Ok(self
            .labels
            .iter()
            .filter(|l| l.a_state == q)
            .map(CatState::b_states)
            .collect())
    }

    /// B-states that occur in no valid second component of `q`.
    pub fn forbidden_second_component_states(&self, q: StateId) -> Result<BTreeSet<StateId>> {
        let union = self
            .valid_second_components(q)?
            .into_iter()
            .flatten()
            .collect::<BTreeSet<_>>();
        Ok((0..self.second_states)
            .filter(|p| !union.contains(p))
            .collect())
    }
}

/// Reorders `b` to `a`'s symbol order, failing unless the names agree.
pub(crate) fn align(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    b.with_alphabet_order(a.alphabet())
}

/// Catenation DFA restricted to the states reachable from its start.
///
/// The start is `(q₀, ∅)`, or `(q₀, {p₀})` when `q₀` is accepting so that
/// words of `L(B)` alone are not lost. On symbol `c`, `(q, X)` moves to
/// `(δ_A(q, c), δ_B(X, c))`, adding `p₀` when `δ_A(q, c)` is accepting.
/// A state accepts iff `X` meets B's accepting set. States are numbered in
/// breadth-first discovery order.
pub fn build_catenation_dfa(a: &Dfa, b: &Dfa) -> Result<CatDfa> {
    let b = align(a, b)?;
    let n = b.state_count();
    if n > MAX_SECOND_STATES {
        return Err(Error::TooManyStates {
            count: n,
            max: MAX_SECOND_STATES,
        });
    }
    let p0 = 1u64 << b.start();
    let f_b = b.accepting_iter().fold(0u64, |acc, p| acc | 1 << p);
    let image = |set: u64, s| {
        let mut out = 0u64;
        let mut rest = set;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << b.step(p, s);
        }
        out
    };

    let start = CatState {
        a_state: a.start(),
        b_subset: if a.is_accepting(a.start()) { p0 } else { 0 },
    };
    let mut index: HashMap<CatState, StateId> = HashMap::from([(start, 0)]);
    let mut labels = vec![start];
    let mut delta = Vec::new();
    let mut head = 0;
    while head < labels.len() {
        let CatState { a_state, b_subset } = labels[head];
        head += 1;
        for s in a.alphabet().symbols() {
            let q = a.step(a_state, s);
            let mut y = image(b_subset, s);
            if a.is_accepting(q) {
                y |= p0;
            }
            let next = CatState {
                a_state: q,
                b_subset: y,
            };
            let id = *index.entry(next).or_insert_with(|| {
                labels.push(next);
                labels.len() - 1
            });
            delta.push(id);
        }
    }
    let accepting = labels
        .iter()
        .enumerate()
        .filter(|(_, l)| l.b_subset & f_b != 0)
        .map(|(i, _)| i);
    let dfa = Dfa::new(a.alphabet().clone(), labels.len(), 0, accepting, delta)?;
    Ok(CatDfa {
        dfa,
        labels,
        first_states: a.state_count(),
        second_states: n,
    })
}

/// NFA for `L(a)·L(b)` with exactly `m + n` states: A's states are
/// `0..m`, B's states are `m..m+n`.
///
/// Every accepting state of A also carries copies of the outgoing edges of
/// B's start state, and is itself accepting when B's start is.
pub fn build_catenation_nfa(a: &Dfa, b: &Dfa) -> Result<Nfa> {
    let b = align(a, b)?;
    let m = a.state_count();
    let mut nfa = Nfa::new(a.alphabet().clone(), m + b.state_count());
    nfa.add_initial(a.start())?;
    let b_start_accepts = b.is_accepting(b.start());
    for q in a.states() {
        for s in a.alphabet().symbols() {
            nfa.add_transition(q, s, a.step(q, s))?;
            if a.is_accepting(q) {
                nfa.add_transition(q, s, m + b.step(b.start(), s))?;
            }
        }
        if b_start_accepts && a.is_accepting(q) {
            nfa.add_accepting(q)?;
        }
    }
    for p in b.states() {
        for s in b.alphabet().symbols() {
            nfa.add_transition(m + p, s, m + b.step(p, s))?;
        }
        if b.is_accepting(p) {
            nfa.add_accepting(m + p)?;
        }
    }
    Ok(nfa)
}

/// `{X : (q, X) reachable in the catenation DFA of a and b}`.
pub fn valid_second_components(
    a: &Dfa,
    b: &Dfa,
    q: StateId,
) -> Result<BTreeSet<BTreeSet<StateId>>> {
    a.check_state(q)?;
    build_catenation_dfa(a, b)?.valid_second_components(q)
}

fn check_positive(what: &'static str, min: u64, value: u64) -> Result<()> {
    if value < min {
        return Err(Error::Parameter { what, min, value });
    }
    Ok(())
}

fn pow2(exp: u64, what: &'static str) -> Result<u64> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| 1u64.checked_shl(e))
        .filter(|_| exp < 64)
        .ok_or(Error::Overflow { what })
}

/// `m·2^n − 2^(n−1)`: the catenation ceiling for an m-state and an n-state DFA.
pub fn general_upper_bound(m: u64, n: u64) -> Result<u64> {
    const WHAT: &str = "general upper bound";
    check_positive("m", 1, m)?;
    check_positive("n", 1, n)?;
    m.checked_mul(pow2(n, WHAT)?)
        .and_then(|v| v.checked_sub(pow2(n - 1, WHAT).ok()?))
        .ok_or(Error::Overflow { what: WHAT })
}

/// `m·2^(n−1) − 2^(n−2)`: the orthogonal catenation bound.
pub fn orthogonal_upper_bound(m: u64, n: u64) -> Result<u64> {
    const WHAT: &str = "orthogonal upper bound";
    check_positive("m", 1, m)?;
    check_positive("n", 2, n)?;
    m.checked_mul(pow2(n - 1, WHAT)?)
        .and_then(|v| v.checked_sub(pow2(n - 2, WHAT).ok()?))
        .ok_or(Error::Overflow { what: WHAT })
}

/// `m·2^n − |F_A|·2^(n−1)`: the number of pairs `(q, X)` the construction
/// admits before restricting to reachable ones.
pub fn construction_space(a: &Dfa, b: &Dfa) -> Result<u64> {
    const WHAT: &str = "construction space";
    let n = b.state_count() as u64;
    let m = a.state_count() as u64;
    let f = a.accepting_iter().count() as u64;
    let full = m.checked_mul(pow2(n, WHAT)?);
    let excluded = f.checked_mul(pow2(n.saturating_sub(1), WHAT)?);
    full.zip(excluded)
        .and_then(|(full, ex)| full.checked_sub(ex))
        .ok_or(Error::Overflow { what: WHAT })
}
