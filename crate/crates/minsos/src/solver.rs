//! Exact minimization of the sum of squares over partitions of `n` with
//! nonnegative rank.
//!
//! Writing `x` for the largest part, the minimum over rank `>= 0`
//! partitions equals the minimum over `x in 2..=n` of
//! `x^2 + r(a+1)^2 + (x-1-r)a^2` where `n - x = a(x-1) + r`,
//! `0 <= r < x-1` — i.e. the rest of `n` is spread over `x-1` slots as
//! evenly as possible. That turns an exponential search over partitions
//! into a linear scan, which [`brute_force`] cross-checks at small sizes.

use serde::Serialize;

use crate::analysis;
use crate::error::{Error, Result};
use crate::partitions::{self, Partition};

/// Largest `n` [`solve`] accepts; keeps every objective comfortably in u64.
pub const MAX_SOLVE_N: u64 = 1 << 31;

/// One candidate of the reduced problem: largest part `x`, quotient `a` and
/// remainder `r` of spreading `n - x` over `x - 1` slots, the resulting sum
/// of squares, and whether the spread is a genuine partition (no slot may
/// exceed `x`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReducedCandidate {
    pub x: u64,
    pub a: u64,
    pub r: u64,
    pub objective: u64,
    pub feasible: bool,
}

/// The minimum `m` for one `n`, every optimal largest part, the smallest of
/// them (`t`), and the witness partitions in the same order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub n: u64,
    pub m: u64,
    pub minimizers: Vec<u64>,
    pub t: u64,
    pub partitions: Vec<Partition>,
}

/// Core candidate arithmetic; callers guarantee `2 <= x <= n <= 2^31`.
fn candidate(n: u64, x: u64) -> ReducedCandidate {
    let a = (n - x) / (x - 1);
    let r = (n - x) % (x - 1);
    let objective = x * x + r * (a + 1) * (a + 1) + (x - 1 - r) * a * a;
    let feasible = if r == 0 { x >= a } else { x > a };
    ReducedCandidate {
        x,
        a,
        r,
        objective,
        feasible,
    }
}

/// Splits `n - x` over `x - 1` slots as evenly as possible and reports the
/// candidate for largest part `x`.
pub fn decompose(n: u64, x: u64) -> Result<ReducedCandidate> {
    if n > MAX_SOLVE_N {
        return Err(Error::TooBig {
            n,
            max: MAX_SOLVE_N,
        });
    }
    if x < 2 || x > n {
        return Err(Error::BadCandidate { x, n });
    }
    Ok(candidate(n, x))
}

/// Turns a feasible candidate back into its partition: one part `x`, then
/// `r` parts `a + 1`, then `x - 1 - r` parts `a` (zeros dropped).
pub fn reconstruct(c: &ReducedCandidate) -> Result<Partition> {
    if !c.feasible {
        return Err(Error::Infeasible {
            x: c.x,
            a: c.a,
            r: c.r,
        });
    }
    let parts = std::iter::once(c.x)
        .chain(std::iter::repeat_n(c.a + 1, c.r as usize))
        .chain(std::iter::repeat_n(c.a, (c.x - 1 - c.r) as usize));
    Partition::from_unsorted(parts)
}

/// Minimum objective and all optimal `x`, ascending.
fn scan_seq(n: u64) -> (u64, Vec<u64>) {
    let mut m = u64::MAX;
    let mut xs = Vec::new();
    for x in 2..=n {
        let c = candidate(n, x);
        if !c.feasible {
            continue;
        }
        if c.objective < m {
            m = c.objective;
            xs.clear();
            xs.push(x);
        } else if c.objective == m {
            xs.push(x);
        }
    }
    (m, xs)
}

#[cfg(feature = "parallel")]
fn scan_par(n: u64) -> (u64, Vec<u64>) {
    use rayon::prelude::*;

    let (m, mut xs) = (2..=n)
        .into_par_iter()
        .filter_map(|x| {
            let c = candidate(n, x);
            c.feasible.then(|| (c.objective, vec![x]))
        })
        .reduce(
            || (u64::MAX, Vec::new()),
            |mut a, mut b| match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => a,
                std::cmp::Ordering::Greater => b,
                std::cmp::Ordering::Equal => {
                    a.1.append(&mut b.1);
                    a
                }
            },
        );
    xs.sort_unstable();
    (m, xs)
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if n > MAX_SOLVE_N {
        return Err(Error::TooBig {
            n,
            max: MAX_SOLVE_N,
        });
    }
    Ok(())
}

fn build(n: u64, m: u64, minimizers: Vec<u64>) -> SolveResult {
    debug_assert!(!minimizers.is_empty());
    let partitions = minimizers
        .iter()
        .map(|&x| reconstruct(&candidate(n, x)).expect("minimizers are feasible"))
        .collect();
    SolveResult {
        n,
        m,
        t: minimizers[0],
        minimizers,
        partitions,
    }
}

fn solve_special_one() -> SolveResult {
    SolveResult {
        n: 1,
        m: 1,
        minimizers: vec![1],
        t: 1,
        partitions: vec![Partition::new(vec![1]).expect("valid")],
    }
}

/// Minimal sum of squares over partitions of `n` with rank `>= 0`, with all
/// witnesses. Scans candidates in parallel when the `parallel` feature is
/// on; the reduction is order-independent, so results never differ.
pub fn solve(n: u64) -> Result<SolveResult> {
    check_n(n)?;
    if n == 1 {
        return Ok(solve_special_one());
    }
    #[cfg(feature = "parallel")]
    let (m, xs) = scan_par(n);
    #[cfg(not(feature = "parallel"))]
    let (m, xs) = scan_seq(n);
    Ok(build(n, m, xs))
}

/// Single-threaded [`solve`]; always available, byte-identical results.
pub fn solve_seq(n: u64) -> Result<SolveResult> {
    check_n(n)?;
    if n == 1 {
        return Ok(solve_special_one());
    }
    let (m, xs) = scan_seq(n);
    Ok(build(n, m, xs))
}

/// Fast mode for `n >= 6`: scans only the cubic-root bracket around the
/// continuous minimizer, which provably contains every optimal `x`.
pub fn solve_bracketed(n: u64) -> Result<SolveResult> {
    if n < 6 {
        return Err(Error::TooSmall { n, min: 6 });
    }
    check_n(n)?;
    let report = analysis::localize(n)?;
    let lo = report.bracket[0].max(2);
    let hi = report.bracket[1].min(n);
    debug_assert!(lo <= hi);
    let mut m = u64::MAX;
    let mut xs = Vec::new();
    for x in lo..=hi {
        let c = candidate(n, x);
        if !c.feasible {
            continue;
        }
        if c.objective < m {
            m = c.objective;
            xs.clear();
            xs.push(x);
        } else if c.objective == m {
            xs.push(x);
        }
    }
    Ok(build(n, m, xs))
}

/// Exhaustive minimum over the rank `>= 0` partitions themselves, with the
/// full argmin set in enumeration order. The independent oracle for
/// [`solve`]; capped because p(n) grows superpolynomially.
pub fn brute_force(n: u64) -> Result<(u64, Vec<Partition>)> {
    brute_force_with_cap(n, partitions::DEFAULT_ENUMERATION_CAP)
}

/// [`brute_force`] with an explicit enumeration cap (clamped to 70).
pub fn brute_force_with_cap(n: u64, cap: u64) -> Result<(u64, Vec<Partition>)> {
    let mut m = u64::MAX;
    let mut arg = Vec::new();
    for p in partitions::enumerate_with_cap(n, Some(0), cap)? {
        let ss = p.sum_of_squares()?;
        if ss < m {
            m = ss;
            arg.clear();
            arg.push(p);
        } else if ss == m {
            arg.push(p);
        }
    }
    Ok((m, arg))
}

/// Solves every `n` in `from..=to`, in order.
pub fn sequence(from: u64, to: u64) -> Result<Vec<SolveResult>> {
    check_range(from, to)?;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (from..=to).into_par_iter().map(solve_seq).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (from..=to).map(solve_seq).collect()
    }
}

/// Single-threaded [`sequence`].
pub fn sequence_seq(from: u64, to: u64) -> Result<Vec<SolveResult>> {
    check_range(from, to)?;
    (from..=to).map(solve_seq).collect()
}

fn check_range(from: u64, to: u64) -> Result<()> {
    if from == 0 {
        return Err(Error::TooSmall { n: 0, min: 1 });
    }
    if from > to {
        return Err(Error::EmptyRange { from, to });
    }
    check_n(to)
}

/// `true` iff `m` strictly increases across the slice.
pub fn check_monotonic(results: &[SolveResult]) -> bool {
    results.windows(2).all(|w| w[0].m < w[1].m)
}

/// `true` iff every `m` has the parity of its `n`.
pub fn check_parity(results: &[SolveResult]) -> bool {
    results.iter().all(|r| r.m % 2 == r.n % 2)
}
