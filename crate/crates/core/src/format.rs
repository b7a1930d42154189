//! Line-based automaton file format.
//!
//! ```text
//! alphabet a b c d
//! states 3
//! start 0
//! accepting 1
//! 0 a 2
//! 0 b 1
//! ...
//! ```
//!
//! The four header lines come first and in this order, followed by exactly
//! one `<state> <symbol> <state>` line per pair. `#` starts a comment;
//! blank lines are ignored.

use std::fmt::Write as _;

use crate::automaton::{Alphabet, Dfa, StateId};
use crate::error::{Error, Result};

/// Canonical text: header lines, then transitions sorted by state and symbol.
pub fn serialize_automaton(d: &Dfa) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "alphabet {}", d.alphabet());
    let _ = writeln!(out, "states {}", d.state_count());
    let _ = writeln!(out, "start {}", d.start());
    let accepting: Vec<String> = d.accepting_iter().map(|q| q.to_string()).collect();
    if accepting.is_empty() {
        out.push_str("accepting\n");
    } else {
        let _ = writeln!(out, "accepting {}", accepting.join(" "));
    }
    for q in d.states() {
        for s in d.alphabet().symbols() {
            let _ = writeln!(out, "{q} {} {}", d.alphabet().name(s), d.step(q, s));
        }
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn number(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found '{token}'"),
        )
    })
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    keyword: &str,
) -> Result<(usize, Vec<&'a str>)> {
    match lines.next() {
        Some((line, tokens)) if tokens[0] == keyword => Ok((line, tokens[1..].to_vec())),
        Some((line, tokens)) => Err(syntax(
            line,
            format!("expected '{keyword}', found '{}'", tokens[0]),
        )),
        None => Err(syntax(0, format!("missing '{keyword}' line"))),
    }
}

fn single<'a>(line: usize, keyword: &str, tokens: &[&'a str]) -> Result<&'a str> {
    match tokens {
        [one] => Ok(one),
        _ => Err(syntax(line, format!("'{keyword}' takes exactly one value"))),
    }
}

/// Parses and validates a complete DFA.
pub fn parse_automaton(text: &str) -> Result<Dfa> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    });

    let (line, names) = header(&mut lines, "alphabet")?;
    let alphabet = Alphabet::new(names.iter().copied()).map_err(|e| syntax(line, e.to_string()))?;

    let (line, tokens) = header(&mut lines, "states")?;
    let state_count = number(line, single(line, "states", &tokens)?)?;
    if state_count == 0 {
        return Err(syntax(line, "an automaton needs at least one state"));
    }
    let in_range = |line: usize, state: StateId| {
        if state < state_count {
            Ok(state)
        } else {
            Err(Error::Range {
                line,
                state,
                count: state_count,
            })
        }
    };

    let (line, tokens) = header(&mut lines, "start")?;
    let start = in_range(line, number(line, single(line, "start", &tokens)?)?)?;

    let (line, tokens) = header(&mut lines, "accepting")?;
    let mut accepting = Vec::with_capacity(tokens.len());
    for token in tokens {
        accepting.push(in_range(line, number(line, token)?)?);
    }

    let k = alphabet.len();
    let mut delta: Vec<Option<StateId>> = vec![None; state_count * k];
    for (line, tokens) in lines {
        let [from, symbol, to] = tokens[..] else {
            return Err(syntax(line, "expected '<state> <symbol> <state>'"));
        };
        let from = in_range(line, number(line, from)?)?;
        let to = in_range(line, number(line, to)?)?;
        let symbol = alphabet
            .lookup(symbol)
            .map_err(|_| syntax(line, format!("unknown symbol '{symbol}'")))?;
        let slot = &mut delta[from * k + symbol.index()];
        if slot.is_some() {
            return Err(syntax(
                line,
                format!(
                    "duplicate transition for ({from}, {})",
                    alphabet.name(symbol)
                ),
            ));
        }
        *slot = Some(to);
    }

    let missing: Vec<(StateId, String)> = delta
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_none())
        .map(|(i, _)| (i / k, alphabet.names()[i % k].clone()))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Incomplete(missing));
    }
    let delta = delta.into_iter().map(|t| t.expect("checked")).collect();
    Dfa::new(alphabet, state_count, start, accepting, delta)
}
