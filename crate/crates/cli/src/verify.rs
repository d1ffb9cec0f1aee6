//! Verification suites: each re-derives a body of results along two
//! independent routes and reports every n where they disagree.

use std::io::Write;

use clap::ValueEnum;

use minsos::endofunctions::Endofunction;
use minsos::{analysis, partitions, solver};

use crate::commands::{sequence_with, solve_with};
use crate::{Failure, RunConfig};

/// 95% of the constant `2 / 3^{3/2}` that the scaled sequence
/// `n^2 / m_n^{3/2}` must stay above; 5.196... is `3^{3/2}`.
const RATIO_FLOOR: f64 = 0.95 * 2.0 / 5.196152422706632;

/// Relative slack for the floating-point envelope comparisons.
const ENVELOPE_SLACK: f64 = 1e-6;

/// How many failing n are reported in full before eliding the rest.
const MAX_REPORTED: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Scan against full enumeration: same minimum, same argmin set.
    Oracle,
    /// The envelopes sandwich the reduced objective at every x.
    Envelope,
    /// n^{4/3}/4 <= m_n <= 1.889882 n^{4/3} wherever guaranteed (n >= 28).
    Bounds,
    /// Every optimal largest part lies in the cubic bracket (n >= 6).
    Bracket,
    /// m_n always has the parity of n.
    Parity,
    /// The sequence m_n is strictly increasing.
    Monotone,
    /// Block maps square to constants and reproduce their partition;
    /// exhaustively, maps with constant square have rank >= 0 (n <= 6).
    Endofunction,
    /// n^2 / m_n^{3/2} stays above 95% of its limiting constant.
    Corollary,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Envelope => "envelope",
            Suite::Bounds => "bounds",
            Suite::Bracket => "bracket",
            Suite::Parity => "parity",
            Suite::Monotone => "monotone",
            Suite::Endofunction => "endofunction",
            Suite::Corollary => "corollary",
        }
    }

    /// The range a suite covers when none is given.
    fn default_range(self) -> (u64, u64) {
        match self {
            Suite::Oracle => (1, 55),
            Suite::Envelope => (2, 2_000),
            Suite::Bounds => (1, 5_000),
            Suite::Bracket => (6, 5_000),
            Suite::Parity => (1, 10_000),
            Suite::Monotone => (1, 10_000),
            Suite::Endofunction => (1, 20),
            Suite::Corollary => (1, 5_000),
        }
    }
}

/// Tally of one suite run.
struct Report {
    checks: u64,
    skipped: u64,
    failures: Vec<String>,
}

impl Report {
    fn new() -> Self {
        Report {
            checks: 0,
            skipped: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

pub fn run(
    cfg: &RunConfig,
    suite: Suite,
    from: Option<u64>,
    to: Option<u64>,
) -> Result<u8, Failure> {
    let (default_from, default_to) = suite.default_range();
    let (from, to) = (from.unwrap_or(default_from), to.unwrap_or(default_to));
    if matches!(suite, Suite::Oracle | Suite::Endofunction)
        && to > cfg.cap.min(partitions::MAX_ENUMERATION_CAP)
    {
        return Err(Failure::Usage(format!(
            "suite {} enumerates all partitions and stops at n = {}; lower --to or raise --cap \
             (hard limit {})",
            suite.name(),
            cfg.cap.min(partitions::MAX_ENUMERATION_CAP),
            partitions::MAX_ENUMERATION_CAP
        )));
    }

    let mut rep = Report::new();
    match suite {
        Suite::Oracle => oracle(cfg, from, to, &mut rep)?,
        Suite::Envelope => envelope(from, to, &mut rep)?,
        Suite::Bounds => bounds(cfg, from, to, &mut rep)?,
        Suite::Bracket => bracket(cfg, from, to, &mut rep)?,
        Suite::Parity => parity(cfg, from, to, &mut rep)?,
        Suite::Monotone => monotone(cfg, from, to, &mut rep)?,
        Suite::Endofunction => endofunction(cfg, from, to, &mut rep)?,
        Suite::Corollary => corollary(cfg, from, to, &mut rep)?,
    }

    let mut w = crate::output::writer(cfg.out.as_deref())?;
    writeln!(w, "verify {} {}..{}", suite.name(), from, to)?;
    for f in rep.failures.iter().take(MAX_REPORTED) {
        writeln!(w, "FAIL {f}")?;
    }
    if rep.failures.len() > MAX_REPORTED {
        writeln!(w, "... and {} more", rep.failures.len() - MAX_REPORTED)?;
    }
    writeln!(
        w,
        "{}: {} checks, {} skipped, {} failures",
        suite.name(),
        rep.checks,
        rep.skipped,
        rep.failures.len()
    )?;
    w.flush()?;
    Ok(if rep.failures.is_empty() { 0 } else { 1 })
}

fn oracle(cfg: &RunConfig, from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    for n in from..=to {
        let (want_m, mut want_arg) = solver::brute_force_with_cap(n, cfg.cap)?;
        let got = solve_with(cfg, n)?;
        let mut got_arg = got.partitions.clone();
        want_arg.sort();
        got_arg.sort();
        rep.check(got.m == want_m, || {
            format!("n = {n}: scan found {}, enumeration found {want_m}", got.m)
        });
        rep.check(got_arg == want_arg, || {
            format!(
                "n = {n}: scan argmin {:?} != enumeration argmin {:?}",
                got_arg, want_arg
            )
        });
    }
    Ok(())
}

fn envelope(from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    for n in from.max(2)..=to {
        for x in 2..=n {
            let objective = solver::decompose(n, x)?.objective as f64;
            let l = analysis::lower_envelope(n, x as f64)?;
            let u = analysis::upper_envelope(n, x as f64)?;
            rep.check(l <= objective + ENVELOPE_SLACK * l.abs(), || {
                format!("n = {n}, x = {x}: lower envelope {l} above objective {objective}")
            });
            rep.check(objective <= u + ENVELOPE_SLACK * u.abs(), || {
                format!("n = {n}, x = {x}: objective {objective} above upper envelope {u}")
            });
        }
    }
    Ok(())
}

fn bounds(cfg: &RunConfig, from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    for r in sequence_with(cfg, from, to)? {
        let b = analysis::growth_bounds(r.n);
        if !b.guaranteed {
            rep.skipped += 1;
            continue;
        }
        let m = r.m as f64;
        rep.check(b.lower <= m && m <= b.upper, || {
            format!(
                "n = {}: m = {} outside [{}, {}]",
                r.n, r.m, b.lower, b.upper
            )
        });
    }
    Ok(())
}

fn bracket(cfg: &RunConfig, from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    for n in from..=to {
        if n < analysis::MIN_LOCALIZE_N {
            rep.skipped += 1;
            continue;
        }
        let [lo, hi] = analysis::localize(n)?.bracket;
        let r = solve_with(cfg, n)?;
        rep.check(r.minimizers.iter().all(|&x| lo <= x && x <= hi), || {
            format!("n = {n}: minimizers {:?} escape [{lo}, {hi}]", r.minimizers)
        });
    }
    Ok(())
}

fn parity(cfg: &RunConfig, from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    for r in sequence_with(cfg, from, to)? {
        rep.check(r.m % 2 == r.n % 2, || {
            format!("n = {}: m = {} has the wrong parity", r.n, r.m)
        });
    }
    Ok(())
}

fn monotone(cfg: &RunConfig, from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    for pair in sequence_with(cfg, from, to)?.windows(2) {
        rep.check(pair[0].m < pair[1].m, || {
            format!(
                "n = {}: m = {} does not exceed m = {} at n = {}",
                pair[1].n, pair[1].m, pair[0].m, pair[0].n
            )
        });
    }
    Ok(())
}

fn endofunction(cfg: &RunConfig, from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    // Forward: every partition with nonnegative rank lifts to a block map
    // whose square is constant and whose preimage profile is the partition.
    for n in from..=to {
        for p in partitions::enumerate_with_cap(n, Some(0), cfg.cap)? {
            let f = Endofunction::from_partition(&p)?;
            rep.check(f.compose_self().is_constant() && f.partition() == p, || {
                format!("n = {n}: block map of {p} does not square to a constant")
            });
        }
    }
    // Backward, exhaustively where the space is small: a constant square
    // forces nonnegative rank.
    for n in from..=to.min(6) {
        let size = n as usize;
        let total = n.pow(n as u32);
        let mut digits = vec![0u64; size];
        for _ in 0..total {
            let image: Vec<u64> = digits.iter().map(|&d| d + 1).collect();
            let f = Endofunction::new(image).expect("digits stay in range");
            if f.compose_self().is_constant() {
                rep.check(f.partition().rank() >= 0, || {
                    format!(
                        "n = {n}: square of {:?} is constant but rank is negative",
                        f.image()
                    )
                });
            }
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < n {
                    break;
                }
                *d = 0;
            }
        }
    }
    Ok(())
}

fn corollary(cfg: &RunConfig, from: u64, to: u64, rep: &mut Report) -> Result<(), Failure> {
    for r in sequence_with(cfg, from, to)? {
        let ratio = (r.n as f64) * (r.n as f64) / (r.m as f64).powf(1.5);
        rep.check(ratio > RATIO_FLOOR, || {
            format!("n = {}: scaled ratio {ratio} fell to the floor", r.n)
        });
    }
    Ok(())
}
