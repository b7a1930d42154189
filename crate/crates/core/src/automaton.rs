//! Complete deterministic automata, nondeterministic automata, and the
//! classical algorithms over them.
//!
//! Every [`Dfa`] is complete: the transition table has an entry for each
//! `(state, symbol)` pair. Both automaton types are immutable once built.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type StateId = usize;

/// Position of a letter in an [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub usize);

impl Symbol {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite sequence of symbols. The empty word is ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Word(indices.iter().map(|&i| Symbol(i)).collect())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.0.clone();
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    /// Splits into the prefix of length `at` and the remaining suffix.
    pub fn split_at(&self, at: usize) -> (Word, Word) {
        let (u, v) = self.0.split_at(at);
        (Word(u.to_vec()), Word(v.to_vec()))
    }

    pub fn repeat(&self, times: usize) -> Word {
        Word(self.0.repeat(times))
    }

    /// Length first, then lexicographic by symbol index.
    pub fn canonical_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Ordered list of distinct symbol names; the order defines symbol indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::UnknownSymbol(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, symbol: Symbol) -> &str {
        &self.names[symbol.0]
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (0..self.names.len()).map(Symbol)
    }

    pub fn lookup(&self, name: &str) -> Result<Symbol> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Symbol)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn check(&self, symbol: Symbol) -> Result<()> {
        if symbol.0 < self.names.len() {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange {
                index: symbol.0,
                size: self.names.len(),
            })
        }
    }

    fn single_chars(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parses a word. With single-character symbol names the text is read
    /// character by character, otherwise as whitespace-separated names.
    /// `""` and `"ε"` both denote the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(Word::empty());
        }
        if self.single_chars() {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| self.lookup(c.encode_utf8(&mut [0; 4])))
                .collect()
        } else {
            text.split_whitespace().map(|t| self.lookup(t)).collect()
        }
    }

    pub fn render(&self, word: &Word) -> String {
        if word.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.single_chars() { "" } else { " " };
        word.symbols()
            .iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Maps each symbol of `self` to the symbol with the same name in
    /// `other`. Fails unless both contain exactly the same names.
    pub fn translation_to(&self, other: &Alphabet) -> Result<Vec<Symbol>> {
        let mismatch = || Error::AlphabetMismatch {
            left: self.names.join(" "),
            right: other.names.join(" "),
        };
        if self.len() != other.len() {
            return Err(mismatch());
        }
        self.names
            .iter()
            .map(|n| other.lookup(n).map_err(|_| mismatch()))
            .collect()
    }

    /// Requires identical names in identical order.
    pub fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.names.join(" "),
                right: other.names.join(" "),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(" "))
    }
}

/// Complete deterministic finite automaton.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    start: StateId,
    accepting: Vec<bool>,
    /// Row-major: `delta[state * |alphabet| + symbol]`.
    delta: Vec<StateId>,
}

impl Dfa {
    pub fn new<I>(
        alphabet: Alphabet,
        state_count: usize,
        start: StateId,
        accepting: I,
        delta: Vec<StateId>,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = StateId>,
    {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        let in_range = |state: StateId| {
            if state < state_count {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange {
                    state,
                    count: state_count,
                })
            }
        };
        in_range(start)?;
        let expected = state_count * alphabet.len();
        if delta.len() != expected {
            return Err(Error::TableSize {
                expected,
                actual: delta.len(),
            });
        }
        for &target in &delta {
            in_range(target)?;
        }
        let mut flags = vec![false; state_count];
        for state in accepting {
            flags[in_range(state)?] = true;
        }
        Ok(Dfa {
            alphabet,
            state_count,
            start,
            accepting: flags,
            delta,
        })
    }

    /// Builds the table by calling `transition(state, symbol)` for every pair.
    pub fn from_fn<I, F>(
        alphabet: Alphabet,
        state_count: usize,
        start: StateId,
        accepting: I,
        mut transition: F,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = StateId>,
        F: FnMut(StateId, Symbol) -> StateId,
    {
        let k = alphabet.len();
        let delta = (0..state_count * k)
            .map(|i| transition(i / k, Symbol(i % k)))
            .collect();
        Dfa::new(alphabet, state_count, start, accepting, delta)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> BTreeSet<StateId> {
        self.accepting_iter().collect()
    }

    pub fn accepting_iter(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.state_count).filter(|&q| self.accepting[q])
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.state_count
    }

    /// One transition. Panics on out-of-range arguments.
    #[inline]
    pub fn step(&self, state: StateId, symbol: Symbol) -> StateId {
        self.delta[state * self.alphabet.len() + symbol.0]
    }

    pub fn check_state(&self, state: StateId) -> Result<()> {
        if state < self.state_count {
            Ok(())
        } else {
            Err(Error::StateOutOfRange {
                state,
                count: self.state_count,
            })
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.symbols()
            .iter()
            .try_for_each(|&s| self.alphabet.check(s))
    }

    /// Extended transition function from an arbitrary state.
    pub fn run_from(&self, state: StateId, word: &Word) -> Result<StateId> {
        self.check_state(state)?;
        self.check_word(word)?;
        Ok(self.run_unchecked(state, word.symbols()))
    }

    pub(crate) fn run_unchecked(&self, state: StateId, symbols: &[Symbol]) -> StateId {
        symbols.iter().fold(state, |q, &s| self.step(q, s))
    }

    pub fn accepts(&self, word: &Word) -> Result<bool> {
        self.run_from(self.start, word).map(|q| self.accepting[q])
    }

    /// States reachable from the start state, by breadth-first search.
    pub fn reachable_states(&self) -> BTreeSet<StateId> {
        self.reachable_from(self.start).into_iter().collect()
    }

    /// Breadth-first order of the states reachable from `origin`, exploring
    /// symbols in alphabet order.
    pub fn reachable_from(&self, origin: StateId) -> Vec<StateId> {
        let mut seen = vec![false; self.state_count];
        let mut order = vec![origin];
        seen[origin] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for s in self.alphabet.symbols() {
                let t = self.step(q, s);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }
        order
    }

    /// Non-accepting states whose every transition is a self-loop.
    pub fn dead_states(&self) -> BTreeSet<StateId> {
        self.states()
            .filter(|&q| {
                !self.accepting[q] && self.alphabet.symbols().all(|s| self.step(q, s) == q)
            })
            .collect()
    }

    /// Nerode classes of all states (reachable or not), numbered densely.
    /// Computed by iterated signature refinement starting from the
    /// accepting/rejecting split.
    pub fn equivalence_classes(&self) -> Vec<usize> {
        let k = self.alphabet.len();
        let mut class: Vec<usize> = self.accepting.iter().map(|&a| usize::from(a)).collect();
        let mut count = class.iter().collect::<BTreeSet<_>>().len();
        loop {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            let mut next = Vec::with_capacity(self.state_count);
            for q in self.states() {
                let mut signature = Vec::with_capacity(k + 1);
                signature.push(class[q]);
                signature.extend(self.alphabet.symbols().map(|s| class[self.step(q, s)]));
                let fresh = ids.len();
                next.push(*ids.entry(signature).or_insert(fresh));
            }
            let refined = ids.len();
            class = next;
            if refined == count {
                return class;
            }
            count = refined;
        }
    }

    pub fn state_equivalent(&self, q1: StateId, q2: StateId) -> Result<bool> {
        self.check_state(q1)?;
        self.check_state(q2)?;
        if q1 == q2 {
            return Ok(true);
        }
        let class = self.equivalence_classes();
        Ok(class[q1] == class[q2])
    }

    /// Canonical minimal DFA: unreachable states dropped, equivalent states
    /// merged, states numbered in breadth-first order from the start with
    /// alphabet order as tie-break.
    pub fn minimize(&self) -> Dfa {
        let class = self.equivalence_classes();
        let k = self.alphabet.len();
        // Representative state per class, discovered by BFS over reachable states.
        let mut number: HashMap<usize, StateId> = HashMap::new();
        let mut representatives = Vec::new();
        let mut queue = VecDeque::new();
        number.insert(class[self.start], 0);
        representatives.push(self.start);
        queue.push_back(self.start);
        while let Some(q) = queue.pop_front() {
            for s in self.alphabet.symbols() {
                let t = self.step(q, s);
                if let std::collections::hash_map::Entry::Vacant(e) = number.entry(class[t]) {
                    e.insert(representatives.len());
                    representatives.push(t);
                    queue.push_back(t);
                }
            }
        }
        let mut delta = Vec::with_capacity(representatives.len() * k);
        for &q in &representatives {
            for s in self.alphabet.symbols() {
                delta.push(number[&class[self.step(q, s)]]);
            }
        }
        let accepting = representatives
            .iter()
            .enumerate()
            .filter(|(_, &q)| self.accepting[q])
            .map(|(i, _)| i);
        Dfa::new(
            self.alphabet.clone(),
            representatives.len(),
            0,
            accepting,
            delta,
        )
        .expect("minimization preserves table shape")
    }

    /// Shortest word (length-lexicographic least) on which the two automata
    /// disagree, if any. Alphabets must contain the same names; symbols of
    /// `other` are matched by name.
    pub fn distinguishing_word(&self, other: &Dfa) -> Result<Option<Word>> {
        let map = self.alphabet.translation_to(&other.alphabet)?;
        type Pair = (StateId, StateId);
        let mut parent: HashMap<Pair, Option<(Pair, Symbol)>> = HashMap::new();
        let origin = (self.start, other.start);
        parent.insert(origin, None);
        let mut queue = VecDeque::from([origin]);
        while let Some(pair @ (p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                let mut symbols = Vec::new();
                let mut cursor = pair;
                while let Some((prev, s)) = parent[&cursor] {
                    symbols.push(s);
                    cursor = prev;
                }
                symbols.reverse();
                return Ok(Some(Word::new(symbols)));
            }
            for s in self.alphabet.symbols() {
                let next = (self.step(p, s), other.step(q, map[s.0]));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some((pair, s)));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    /// Exact language equality by product search.
    pub fn language_equivalent(&self, other: &Dfa) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    pub fn is_permutation_automaton(&self) -> bool {
        self.alphabet.symbols().all(|s| {
            let mut hit = vec![false; self.state_count];
            self.states()
                .all(|q| !std::mem::replace(&mut hit[self.step(q, s)], true))
        })
    }

    /// All accepted words of length at most `max_len`, length first then
    /// lexicographic in alphabet order.
    pub fn enumerate_accepted(&self, max_len: usize) -> Vec<Word> {
        let mut accepted = Vec::new();
        // Frontier of (word, state) for the current length, in canonical order.
        let mut layer = vec![(Word::empty(), self.start)];
        for len in 0..=max_len {
            accepted.extend(
                layer
                    .iter()
                    .filter(|(_, q)| self.accepting[*q])
                    .map(|(w, _)| w.clone()),
            );
            if len == max_len {
                break;
            }
            layer = layer
                .iter()
                .flat_map(|(w, q)| {
                    self.alphabet.symbols().map(move |s| {
                        let mut next = w.clone();
                        next.push(s);
                        (next, self.step(*q, s))
                    })
                })
                .collect();
        }
        accepted
    }

    /// The same automaton with its symbols renumbered to follow `order`,
    /// which must contain exactly the same names.
    pub fn with_alphabet_order(&self, order: &Alphabet) -> Result<Dfa> {
        if &self.alphabet == order {
            return Ok(self.clone());
        }
        let map = order.translation_to(&self.alphabet)?;
        Dfa::from_fn(
            order.clone(),
            self.state_count,
            self.start,
            self.accepting_iter(),
            |q, s| self.step(q, map[s.0]),
        )
    }

    /// The same automaton re-expressed over a larger alphabet. Symbols absent
    /// from `self` lead to a fresh non-accepting sink.
    pub fn extend_alphabet(&self, alphabet: &Alphabet) -> Result<Dfa> {
        let mut map = Vec::with_capacity(alphabet.len());
        for name in alphabet.names() {
            map.push(self.alphabet.lookup(name).ok());
        }
        for name in self.alphabet.names() {
            alphabet.lookup(name)?;
        }
        let sink = self.state_count;
        Dfa::from_fn(
            alphabet.clone(),
            self.state_count + 1,
            self.start,
            self.accepting_iter(),
            |q, s| match map[s.0] {
                Some(own) if q != sink => self.step(q, own),
                _ => sink,
            },
        )
    }
}

/// Nondeterministic finite automaton with a set of initial states and no
/// ε-transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: BTreeSet<StateId>,
    accepting: BTreeSet<StateId>,
    delta: Vec<BTreeSet<StateId>>,
}

impl Nfa {
    /// An automaton with no transitions, no initial and no accepting states.
    pub fn new(alphabet: Alphabet, state_count: usize) -> Self {
        let delta = vec![BTreeSet::new(); state_count * alphabet.len()];
        Nfa {
            alphabet,
            state_count,
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
            delta,
        }
    }

    fn check_state(&self, state: StateId) -> Result<()> {
        if state < self.state_count {
            Ok(())
        } else {
            Err(Error::StateOutOfRange {
                state,
                count: self.state_count,
            })
        }
    }

    pub fn add_initial(&mut self, state: StateId) -> Result<()> {
        self.check_state(state)?;
        self.initial.insert(state);
        Ok(())
    }

    pub fn add_accepting(&mut self, state: StateId) -> Result<()> {
        self.check_state(state)?;
        self.accepting.insert(state);
        Ok(())
    }

    pub fn add_transition(&mut self, from: StateId, symbol: Symbol, to: StateId) -> Result<()> {
        self.check_state(from)?;
        self.check_state(to)?;
        self.alphabet.check(symbol)?;
        let k = self.alphabet.len();
        self.delta[from * k + symbol.0].insert(to);
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn successors(&self, state: StateId, symbol: Symbol) -> &BTreeSet<StateId> {
        &self.delta[state * self.alphabet.len() + symbol.0]
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().map(BTreeSet::len).sum()
    }

    fn step_set(&self, set: &BTreeSet<StateId>, symbol: Symbol) -> BTreeSet<StateId> {
        set.iter()
            .flat_map(|&q| self.successors(q, symbol).iter().copied())
            .collect()
    }

    /// Membership by subset simulation.
    pub fn accepts(&self, word: &Word) -> Result<bool> {
        let mut current = self.initial.clone();
        for &s in word.symbols() {
            self.alphabet.check(s)?;
            current = self.step_set(&current, s);
        }
        Ok(current.iter().any(|q| self.accepting.contains(q)))
    }

    /// Subset construction over the reachable subsets; the empty subset, if
    /// reachable, becomes a non-accepting sink.
    pub fn determinize(&self) -> Dfa {
        let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
        let mut subsets = vec![self.initial.clone()];
        index.insert(self.initial.clone(), 0);
        let mut delta = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            let current = subsets[head].clone();
            head += 1;
            for s in self.alphabet.symbols() {
                let next = self.step_set(&current, s);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                delta.push(id);
            }
        }
        let accepting = subsets
            .iter()
            .enumerate()
            .filter(|(_, set)| set.iter().any(|q| self.accepting.contains(q)))
            .map(|(i, _)| i);
        Dfa::new(self.alphabet.clone(), subsets.len(), 0, accepting, delta)
            .expect("subset construction yields a complete table")
    }

    /// Removes states that are not reachable from an initial state or that
    /// cannot reach an accepting state. Surviving states keep their
    /// relative order.
    pub fn trim(&self) -> Nfa {
        let k = self.alphabet.len();
        let mut forward = vec![false; self.state_count];
        let mut stack: Vec<StateId> = self.initial.iter().copied().collect();
        for &q in &stack {
            forward[q] = true;
        }
        while let Some(q) = stack.pop() {
            for s in self.alphabet.symbols() {
                for &t in self.successors(q, s) {
                    if !forward[t] {
                        forward[t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        let mut backward = vec![false; self.state_count];
        let mut stack: Vec<StateId> = self.accepting.iter().copied().collect();
        for &q in &stack {
            backward[q] = true;
        }
        while let Some(t) = stack.pop() {
            for (q, seen) in backward.iter_mut().enumerate() {
                if !*seen && (0..k).any(|s| self.delta[q * k + s].contains(&t)) {
                    *seen = true;
                    stack.push(q);
                }
            }
        }
        let keep: Vec<StateId> = (0..self.state_count)
            .filter(|&q| forward[q] && backward[q])
            .collect();
        let renumber: HashMap<StateId, StateId> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let mut trimmed = Nfa::new(self.alphabet.clone(), keep.len());
        for (&old, &new) in &renumber {
            if self.initial.contains(&old) {
                trimmed.initial.insert(new);
            }
            if self.accepting.contains(&old) {
                trimmed.accepting.insert(new);
            }
            for s in self.alphabet.symbols() {
                for t in self.successors(old, s) {
                    if let Some(&nt) = renumber.get(t) {
                        trimmed.delta[new * k + s.0].insert(nt);
                    }
                }
            }
        }
        trimmed
    }
}

impl From<&Dfa> for Nfa {
    fn from(dfa: &Dfa) -> Self {
        let mut nfa = Nfa::new(dfa.alphabet.clone(), dfa.state_count);
        nfa.initial.insert(dfa.start);
        nfa.accepting = dfa.accepting_states();
        for q in dfa.states() {
            for s in dfa.alphabet.symbols() {
                nfa.delta[q * dfa.alphabet.len() + s.0].insert(dfa.step(q, s));
            }
        }
        nfa
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witnesses::{unary_star_dfa, witness_a, witness_b};

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn word(d: &Dfa, text: &str) -> Word {
        d.alphabet().parse_word(text).unwrap()
    }

    #[test]
    fn accepts_examples() {
        let a3 = witness_a(3).unwrap();
        assert!(a3.accepts(&word(&a3, "b")).unwrap());
        let b3 = witness_b(3).unwrap();
        assert!(b3.accepts(&word(&b3, "dc")).unwrap());
        let star = unary_star_dfa(2).unwrap();
        assert!(star.accepts(&Word::empty()).unwrap());
    }

    #[test]
    fn accepts_rejects_out_of_range_symbol() {
        let d = unary_star_dfa(2).unwrap();
        let err = d.accepts(&Word::from_indices(&[0, 3])).unwrap_err();
        assert_eq!(err, Error::SymbolOutOfRange { index: 3, size: 1 });
    }

    #[test]
    fn reachable_examples() {
        assert_eq!(
            witness_a(4).unwrap().reachable_states(),
            BTreeSet::from([0, 1, 2, 3])
        );
        let loops = Dfa::from_fn(ab(), 3, 1, [], |q, _| q).unwrap();
        assert_eq!(loops.reachable_states(), BTreeSet::from([1]));
        let to_zero = Dfa::from_fn(ab(), 2, 0, [1], |_, _| 0).unwrap();
        assert_eq!(to_zero.reachable_states(), BTreeSet::from([0]));
    }

    #[test]
    fn dead_state_examples() {
        for m in 3..8 {
            assert_eq!(witness_a(m).unwrap().dead_states(), BTreeSet::from([m - 1]));
            assert_eq!(witness_b(m).unwrap().dead_states(), BTreeSet::from([m - 1]));
        }
        assert!(unary_star_dfa(2).unwrap().dead_states().is_empty());
    }

    #[test]
    fn equivalence_examples() {
        let b3 = witness_b(3).unwrap();
        assert!(b3.state_equivalent(2, 2).unwrap());
        assert!(!b3.state_equivalent(0, 1).unwrap());
        // Two rejecting sinks.
        let sinks = Dfa::from_fn(ab(), 3, 0, [0], |q, _| if q == 0 { 1 } else { q }).unwrap();
        assert!(sinks.state_equivalent(1, 2).unwrap());
        assert!(matches!(
            b3.state_equivalent(0, 7),
            Err(Error::StateOutOfRange { state: 7, .. })
        ));
    }

    #[test]
    fn minimize_examples() {
        let b3 = witness_b(3).unwrap();
        let min = b3.minimize();
        assert_eq!(min.state_count(), 3);
        assert!(min.language_equivalent(&b3).unwrap());

        // start -a-> sink1, -b-> sink2: sinks merge.
        let dup = Dfa::from_fn(ab(), 3, 0, [0], |q, s| if q == 0 { 1 + s.0 } else { q }).unwrap();
        assert_eq!(dup.minimize().state_count(), 2);
        assert_eq!(dup.minimize().minimize(), dup.minimize());
    }

    #[test]
    fn minimize_empty_language_is_single_sink() {
        let d = Dfa::from_fn(ab(), 4, 0, [], |q, s| (q + s.0 + 1) % 4).unwrap();
        let min = d.minimize();
        assert_eq!(min.state_count(), 1);
        assert!(min.accepting_states().is_empty());
    }

    #[test]
    fn language_equivalence_examples() {
        let a3 = witness_a(3).unwrap();
        let b3 = witness_b(3).unwrap();
        assert!(a3.language_equivalent(&a3).unwrap());
        assert!(a3.language_equivalent(&a3.minimize()).unwrap());
        assert!(!a3.language_equivalent(&b3).unwrap());
        assert_eq!(a3.distinguishing_word(&b3).unwrap(), Some(word(&a3, "b")));
        let other = unary_star_dfa(2).unwrap();
        assert!(matches!(
            a3.language_equivalent(&other),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn language_equivalence_matches_names_not_positions() {
        let d1 = Dfa::from_fn(ab(), 2, 0, [1], |q, s| if s.0 == 0 { 1 } else { q }).unwrap();
        let ba = Alphabet::new(["b", "a"]).unwrap();
        let d2 = Dfa::from_fn(ba, 2, 0, [1], |q, s| if s.0 == 1 { 1 } else { q }).unwrap();
        assert!(d1.language_equivalent(&d2).unwrap());
    }

    #[test]
    fn determinize_examples() {
        let b3 = witness_b(3).unwrap();
        let det = Nfa::from(&b3).determinize();
        assert!(det.language_equivalent(&b3).unwrap());

        let empty = Nfa::new(ab(), 3);
        let det = empty.determinize();
        assert_eq!(det.state_count(), 1);
        assert!(det.enumerate_accepted(4).is_empty());
    }

    #[test]
    fn permutation_examples() {
        assert!(unary_star_dfa(3).unwrap().is_permutation_automaton());
        assert!(!witness_b(4).unwrap().is_permutation_automaton());
        let single = Dfa::from_fn(ab(), 1, 0, [], |_, _| 0).unwrap();
        assert!(single.is_permutation_automaton());
    }

    #[test]
    fn enumerate_examples() {
        let a3 = witness_a(3).unwrap();
        assert_eq!(a3.enumerate_accepted(1), vec![word(&a3, "b")]);
        let none = Dfa::from_fn(ab(), 2, 0, [], |q, _| 1 - q).unwrap();
        assert!(none.enumerate_accepted(5).is_empty());
        let star = unary_star_dfa(2).unwrap();
        assert_eq!(
            star.enumerate_accepted(4),
            vec![Word::empty(), word(&star, "aa"), word(&star, "aaaa")]
        );
    }

    #[test]
    fn nfa_trim_drops_useless_states() {
        let mut n = Nfa::new(ab(), 4);
        n.add_initial(0).unwrap();
        n.add_accepting(1).unwrap();
        n.add_transition(0, Symbol(0), 1).unwrap();
        n.add_transition(0, Symbol(1), 2).unwrap(); // 2 cannot accept
        n.add_transition(3, Symbol(0), 1).unwrap(); // 3 unreachable
        let t = n.trim();
        assert_eq!(t.state_count(), 2);
        assert!(t
            .determinize()
            .language_equivalent(&n.determinize())
            .unwrap());
    }

    #[test]
    fn alphabet_validation() {
        assert_eq!(
            Alphabet::new(Vec::<String>::new()),
            Err(Error::EmptyAlphabet)
        );
        assert_eq!(
            Alphabet::new(["a", "a"]),
            Err(Error::DuplicateSymbol("a".into()))
        );
        let multi = Alphabet::new(["x1", "y"]).unwrap();
        let w = multi.parse_word("x1 y x1").unwrap();
        assert_eq!(w, Word::from_indices(&[0, 1, 0]));
        assert_eq!(multi.render(&w), "x1 y x1");
        assert_eq!(multi.render(&Word::empty()), "ε");
    }

    #[test]
    fn extend_alphabet_adds_sink() {
        let star = unary_star_dfa(2).unwrap();
        let ext = star.extend_alphabet(&ab()).unwrap();
        assert_eq!(ext.state_count(), 3);
        assert!(ext.accepts(&word(&ext, "aa")).unwrap());
        assert!(!ext.accepts(&word(&ext, "ab")).unwrap());
        assert_eq!(ext.dead_states(), BTreeSet::from([2]));
    }
}
