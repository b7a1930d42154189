//! Seeded random automata.
//!
//! The generator is SplitMix64: the state advances by `0x9E3779B97F4A7C15`
//! and each output is mixed with multipliers `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB` (shifts 30, 27, 31). [`random_dfa`] draws all
//! transition targets first, in `(state, symbol)` order, as
//! `next_u64() % states`, then one acceptance draw per state in state order:
//! a state accepts iff `(next_u64() >> 11) · 2^-53 < accept_prob`.

use crate::automaton::{Alphabet, Dfa};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: RngSeed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `next_u64() % bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u64) as usize
    }
}

/// Symbol names `a`, `b`, … for the first 26 letters, then `s26`, `s27`, ….
pub fn standard_alphabet(size: usize) -> Result<Alphabet> {
    Alphabet::new((0..size).map(|i| {
        if i < 26 {
            char::from(b'a' + i as u8).to_string()
        } else {
            format!("s{i}")
        }
    }))
}

/// Draws a DFA from `rng`; see the module docs for the exact draw order.
pub fn random_dfa_with(
    rng: &mut SplitMix64,
    states: usize,
    alphabet_size: usize,
    accept_prob: f64,
) -> Result<Dfa> {
    if states == 0 {
        return Err(Error::NoStates);
    }
    if !(0.0..=1.0).contains(&accept_prob) {
        return Err(Error::Invalid(format!(
            "acceptance probability {accept_prob} is outside [0, 1]"
        )));
    }
    let alphabet = standard_alphabet(alphabet_size)?;
    let delta = (0..states * alphabet_size)
        .map(|_| rng.below(states as u64) as usize)
        .collect();
    let accepting: Vec<usize> = (0..states)
        .filter(|_| rng.next_f64() < accept_prob)
        .collect();
    Dfa::new(alphabet, states, 0, accepting, delta)
}

/// Random DFA with start state 0, fully determined by `seed`.
pub fn random_dfa(
    states: usize,
    alphabet_size: usize,
    accept_prob: f64,
    seed: RngSeed,
) -> Result<Dfa> {
    random_dfa_with(
        &mut SplitMix64::new(seed),
        states,
        alphabet_size,
        accept_prob,
    )
}

/// A pair over a shared alphabet: alphabet size in `1..=max_alphabet`, state
/// counts in `1..=max_states`, each automaton with acceptance probability
/// drawn uniformly from `[0.1, 0.6)`.
pub fn random_pair(seed: RngSeed, max_states: usize, max_alphabet: usize) -> Result<(Dfa, Dfa)> {
    let mut rng = SplitMix64::new(seed);
    let k = rng.between(1, max_alphabet);
    let m = rng.between(1, max_states);
    let n = rng.between(1, max_states);
    let p = 0.1 + 0.5 * rng.next_f64();
    let a = random_dfa_with(&mut rng, m, k, p)?;
    let p = 0.1 + 0.5 * rng.next_f64();
    let b = random_dfa_with(&mut rng, n, k, p)?;
    Ok((a, b))
}

/// DFA whose transitions only move forward: from state `q < states − 1`
/// each target is drawn from `q+1..states`, and the last state is a
/// non-accepting sink. Accepting states lie on no cycle, so the language is
/// finite.
pub fn random_forward_dfa_with(
    rng: &mut SplitMix64,
    states: usize,
    alphabet_size: usize,
    accept_prob: f64,
) -> Result<Dfa> {
    if states < 2 {
        return Err(Error::Parameter {
            what: "states",
            min: 2,
            value: states as u64,
        });
    }
    let alphabet = standard_alphabet(alphabet_size)?;
    let sink = states - 1;
    let delta = (0..states * alphabet_size)
        .map(|i| {
            let q = i / alphabet_size;
            if q == sink {
                sink
            } else {
                rng.between(q + 1, sink)
            }
        })
        .collect();
    let accepting: Vec<usize> = (0..sink).filter(|_| rng.next_f64() < accept_prob).collect();
    Dfa::new(alphabet, states, 0, accepting, delta)
}

/// Permutation automaton: every symbol acts as a uniformly drawn
/// permutation (Fisher–Yates, one draw `below(i + 1)` for `i` from
/// `states − 1` down to 1), then one acceptance draw per state.
pub fn random_permutation_dfa_with(
    rng: &mut SplitMix64,
    states: usize,
    alphabet_size: usize,
    accept_prob: f64,
) -> Result<Dfa> {
    if states == 0 {
        return Err(Error::NoStates);
    }
    let alphabet = standard_alphabet(alphabet_size)?;
    let perms: Vec<Vec<usize>> = (0..alphabet_size)
        .map(|_| {
            let mut perm: Vec<usize> = (0..states).collect();
            for i in (1..states).rev() {
                perm.swap(i, rng.below(i as u64 + 1) as usize);
            }
            perm
        })
        .collect();
    let accepting: Vec<usize> = (0..states)
        .filter(|_| rng.next_f64() < accept_prob)
        .collect();
    Dfa::from_fn(alphabet, states, 0, accepting, |q, s| perms[s.index()][q])
}

/// Pair of a forward (finite-language) DFA and a permutation DFA, the shape
/// of input for which orthogonality constrains the second factor most.
pub fn random_structured_pair(
    seed: RngSeed,
    max_states: usize,
    max_alphabet: usize,
) -> Result<(Dfa, Dfa)> {
    let mut rng = SplitMix64::new(seed);
    let k = rng.between(1, max_alphabet);
    let m = rng.between(2, max_states.max(2));
    let n = rng.between(1, max_states);
    let p = 0.1 + 0.5 * rng.next_f64();
    let a = random_forward_dfa_with(&mut rng, m, k, p)?;
    let p = 0.1 + 0.5 * rng.next_f64();
    let b = random_permutation_dfa_with(&mut rng, n, k, p)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // Outputs for seed 0 as published with the reference implementation.
        let mut rng = SplitMix64::new(RngSeed(0));
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn same_seed_same_dfa() {
        let d1 = random_dfa(5, 3, 0.5, RngSeed(42)).unwrap();
        let d2 = random_dfa(5, 3, 0.5, RngSeed(42)).unwrap();
        assert_eq!(d1, d2);
        assert_ne!(d1, random_dfa(5, 3, 0.5, RngSeed(43)).unwrap());
    }

    #[test]
    fn acceptance_extremes() {
        for seed in 0..20 {
            let none = random_dfa(4, 2, 0.0, RngSeed(seed)).unwrap();
            assert!(none.accepting_states().is_empty());
        }
        let all = random_dfa(1, 3, 1.0, RngSeed(7)).unwrap();
        assert_eq!(all.enumerate_accepted(3).len(), 1 + 3 + 9 + 27);
    }

    #[test]
    fn structured_generators() {
        for seed in 0..50 {
            let (a, b) = random_structured_pair(RngSeed(seed), 6, 3).unwrap();
            assert!(crate::orthogonality::check_acyclic_accepting(&a));
            assert!(b.is_permutation_automaton());
            assert_eq!(a.alphabet(), b.alphabet());
        }
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(random_dfa(0, 2, 0.5, RngSeed(1)), Err(Error::NoStates));
        assert!(random_dfa(2, 2, 1.5, RngSeed(1)).is_err());
        assert_eq!(random_dfa(2, 0, 0.5, RngSeed(1)), Err(Error::EmptyAlphabet));
    }
}
