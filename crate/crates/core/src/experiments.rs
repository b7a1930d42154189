//! Witness-pair verification and grid sweeps with CSV output.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::catenation::{build_catenation_dfa, general_upper_bound, orthogonal_upper_bound};
use crate::error::{Error, Result};
use crate::oracle::{brute_force_orthogonal, BoundedVerdict};
use crate::orthogonality::is_orthogonal;
use crate::witnesses::{witness_a, witness_b};

pub const CSV_HEADER: &str = "m,n,predicted,constructed,minimized,orthogonal,elapsed_ms";

/// Word length up to which `verify` double-checks orthogonality by brute force.
pub const VERIFY_ORACLE_LEN: usize = 7;

pub const SWEEP_MIN: usize = 3;
pub const SWEEP_MAX: usize = 10;

/// One `(m, n)` cell of a witness sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub m: usize,
    pub n: usize,
    /// `m·2^(n−1) − 2^(n−2)`.
    pub predicted: u64,
    /// Reachable states of the catenation DFA.
    pub constructed: usize,
    pub minimized: usize,
    pub orthogonal: bool,
    pub elapsed_ms: u64,
}

impl SweepRow {
    pub fn matches_prediction(&self) -> bool {
        self.orthogonal && self.minimized as u64 == self.predicted
    }

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.m,
            self.n,
            self.predicted,
            self.constructed,
            self.minimized,
            self.orthogonal,
            self.elapsed_ms
        )
    }

    /// `minimized ≤ constructed ≤ m·2^n − 2^(n−1)`.
    pub fn within_general_bound(&self) -> Result<bool> {
        let ceiling = general_upper_bound(self.m as u64, self.n as u64)?;
        Ok(self.minimized <= self.constructed && self.constructed as u64 <= ceiling)
    }
}

/// Builds the witness pair for `(m, n)`, checks orthogonality with both the
/// decision procedure and the bounded oracle, and measures the minimal
/// catenation DFA.
pub fn verify(m: usize, n: usize) -> Result<SweepRow> {
    let started = Instant::now();
    let a = witness_a(m)?;
    let b = witness_b(n)?;
    let predicted = orthogonal_upper_bound(m as u64, n as u64)?;
    let decided = is_orthogonal(&a, &b)?.is_orthogonal();
    let bounded = matches!(
        brute_force_orthogonal(&a, &b, VERIFY_ORACLE_LEN),
        BoundedVerdict::ClearUpTo(_)
    );
    let cat = build_catenation_dfa(&a, &b)?;
    let minimized = cat.dfa().minimize().state_count();
    Ok(SweepRow {
        m,
        n,
        predicted,
        constructed: cat.state_count(),
        minimized,
        orthogonal: decided && bounded,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn check_sweep_range(what: &'static str, value: usize) -> Result<()> {
    if (SWEEP_MIN..=SWEEP_MAX).contains(&value) {
        Ok(())
    } else {
        Err(Error::Invalid(format!(
            "{what} must lie in {SWEEP_MIN}..={SWEEP_MAX}, got {value}"
        )))
    }
}

/// One row per `(m, n) ∈ [3..=m_max] × [3..=n_max]` in row-major order.
/// Cells are computed on `threads` worker threads.
pub fn sweep(m_max: usize, n_max: usize, threads: usize) -> Result<Vec<SweepRow>> {
    check_sweep_range("m_max", m_max)?;
    check_sweep_range("n_max", n_max)?;
    let cells: Vec<(usize, usize)> = (SWEEP_MIN..=m_max)
        .flat_map(|m| (SWEEP_MIN..=n_max).map(move |n| (m, n)))
        .collect();
    let results: Mutex<Vec<Option<Result<SweepRow>>>> = Mutex::new(vec![None; cells.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1).min(cells.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&(m, n)) = cells.get(i) else { break };
                let row = verify(m, n);
                results.lock().expect("no worker panicked")[i] = Some(row);
            });
        }
    });
    results
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|r| r.expect("every cell computed"))
        .collect()
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}
