//! The emitting subcommands: `solve`, `table`, `bounds`, `figure`, and
//! `endo-search`.

use std::io::Write;

use minsos::solver::{self, SolveResult};
use minsos::{analysis, endofunctions};
use serde::Serialize;

use crate::output::{self, Format};
use crate::{Failure, RunConfig};

/// Routes one `n` through the scan the configuration asks for.
pub fn solve_with(cfg: &RunConfig, n: u64) -> minsos::Result<SolveResult> {
    if cfg.deterministic {
        solver::solve_seq(n)
    } else {
        solver::solve(n)
    }
}

/// Routes a whole range through the scan the configuration asks for.
pub fn sequence_with(cfg: &RunConfig, from: u64, to: u64) -> minsos::Result<Vec<SolveResult>> {
    if cfg.deterministic {
        solver::sequence_seq(from, to)
    } else {
        solver::sequence(from, to)
    }
}

const SOLVE_HEADER: &str = "n,m_n,t_n,minimizers,partition";

/// One `solve` result as a CSV row: minimizers joined by `;`, the witness
/// partition of the smallest minimizer in compact notation.
fn solve_row(w: &mut dyn Write, r: &SolveResult) -> std::io::Result<()> {
    let minimizers = r
        .minimizers
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(";");
    writeln!(
        w,
        "{},{},{},{},{}",
        r.n,
        r.m,
        r.t,
        minimizers,
        r.partitions[0].compact()
    )
}

pub fn solve(cfg: &RunConfig, n: u64) -> Result<u8, Failure> {
    let r = solve_with(cfg, n)?;
    let mut w = output::writer(cfg.out.as_deref())?;
    match cfg.format {
        Format::Csv => {
            writeln!(w, "{SOLVE_HEADER}")?;
            solve_row(&mut w, &r)?;
        }
        Format::Json => output::json_to(&mut w, &r)?,
        Format::Bfile => writeln!(w, "{} {}", r.n, r.m)?,
    }
    w.flush()?;
    Ok(0)
}

pub fn table(cfg: &RunConfig, from: u64, to: u64) -> Result<u8, Failure> {
    let rows = sequence_with(cfg, from, to)?;
    let mut w = output::writer(cfg.out.as_deref())?;
    match cfg.format {
        Format::Csv => {
            writeln!(w, "{SOLVE_HEADER}")?;
            for r in &rows {
                solve_row(&mut w, r)?;
            }
        }
        Format::Json => output::json_to(&mut w, &rows)?,
        Format::Bfile => {
            for r in &rows {
                writeln!(w, "{} {}", r.n, r.m)?;
            }
        }
    }
    w.flush()?;
    Ok(0)
}

pub fn bounds(cfg: &RunConfig, n: u64) -> Result<u8, Failure> {
    if cfg.format == Format::Bfile {
        return Err(Failure::Usage(
            "bounds reports a single record; use --format csv or json".into(),
        ));
    }
    let r = analysis::localize(n)?;
    let mut w = output::writer(cfg.out.as_deref())?;
    match cfg.format {
        Format::Csv => {
            writeln!(
                w,
                "n,c_n,d_n,x0,y0,u_at_floor_x0,p,q,discriminant,x1,x2,\
                 bracket_lo,bracket_hi,theta,r_polar,floor_ambiguous"
            )?;
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.n,
                r.c_n,
                r.d_n,
                r.x0,
                r.y0,
                r.u_at_floor_x0,
                r.p,
                r.q,
                r.discriminant,
                r.x1,
                r.x2,
                r.bracket[0],
                r.bracket[1],
                r.theta,
                r.r_polar,
                r.floor_ambiguous
            )?;
        }
        Format::Json => output::json_to(&mut w, &r)?,
        Format::Bfile => unreachable!("rejected above"),
    }
    w.flush()?;
    Ok(0)
}

/// Row of figure 1: one optimal largest part and its witness partition.
#[derive(Serialize)]
struct OptimalRow {
    x: u64,
    partition: String,
}

/// Row of figure 2: the cubic bracket next to the exact optimum.
#[derive(Serialize)]
struct BracketRow {
    n: u64,
    ceil_x1: u64,
    floor_x2: u64,
    t_n: u64,
}

/// Row of figure 3: both envelopes around the reduced objective.
#[derive(Serialize)]
struct EnvelopeRow {
    x: u64,
    l: f64,
    u: f64,
    objective: u64,
    u_at_floor_x0: f64,
}

fn emit_rows<T: Serialize>(
    cfg: &RunConfig,
    header: &str,
    rows: &[T],
    csv: impl Fn(&mut dyn Write, &T) -> std::io::Result<()>,
) -> Result<u8, Failure> {
    if cfg.format == Format::Bfile {
        return Err(Failure::Usage(
            "figure data is not a single integer sequence; use --format csv or json".into(),
        ));
    }
    let mut w = output::writer(cfg.out.as_deref())?;
    match cfg.format {
        Format::Csv => {
            writeln!(w, "{header}")?;
            for row in rows {
                csv(&mut w, row)?;
            }
        }
        Format::Json => output::json_to(&mut w, &rows)?,
        Format::Bfile => unreachable!("rejected above"),
    }
    w.flush()?;
    Ok(0)
}

pub fn figure(
    cfg: &RunConfig,
    which: u8,
    n: Option<u64>,
    from: Option<u64>,
    to: Option<u64>,
) -> Result<u8, Failure> {
    match which {
        1 => {
            let r = solve_with(cfg, n.unwrap_or(100))?;
            let rows: Vec<OptimalRow> = r
                .minimizers
                .iter()
                .zip(&r.partitions)
                .map(|(&x, p)| OptimalRow {
                    x,
                    partition: p.compact(),
                })
                .collect();
            emit_rows(cfg, "x,partition", &rows, |w, row| {
                writeln!(w, "{},{}", row.x, row.partition)
            })
        }
        2 => {
            let (from, to) = (from.unwrap_or(6), to.unwrap_or(5_000));
            let solved = sequence_with(cfg, from, to)?;
            let rows = solved
                .iter()
                .map(|r| {
                    let b = analysis::localize(r.n)?;
                    Ok(BracketRow {
                        n: r.n,
                        ceil_x1: b.bracket[0],
                        floor_x2: b.bracket[1],
                        t_n: r.t,
                    })
                })
                .collect::<minsos::Result<Vec<_>>>()?;
            emit_rows(cfg, "n,ceil_x1,floor_x2,t_n", &rows, |w, row| {
                writeln!(w, "{},{},{},{}", row.n, row.ceil_x1, row.floor_x2, row.t_n)
            })
        }
        3 => {
            let n = n.unwrap_or(100);
            let level = analysis::localize(n)?.u_at_floor_x0;
            let rows = (2..=n)
                .map(|x| {
                    Ok(EnvelopeRow {
                        x,
                        l: analysis::lower_envelope(n, x as f64)?,
                        u: analysis::upper_envelope(n, x as f64)?,
                        objective: solver::decompose(n, x)?.objective,
                        u_at_floor_x0: level,
                    })
                })
                .collect::<minsos::Result<Vec<_>>>()?;
            emit_rows(cfg, "x,l,u,objective,u_at_floor_x0", &rows, |w, row| {
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    row.x, row.l, row.u, row.objective, row.u_at_floor_x0
                )
            })
        }
        _ => Err(Failure::Usage(format!(
            "no figure {which}; the figures are 1, 2 and 3"
        ))),
    }
}

/// The search result with everything worth machine-reading.
#[derive(Serialize)]
struct SearchRow {
    n: u64,
    f: Vec<u64>,
    deg_f: endofunctions::Ratio,
    deg_f2: endofunctions::Ratio,
    ratio: f64,
    normalized: f64,
}

pub fn endo_search(cfg: &RunConfig, n: u64) -> Result<u8, Failure> {
    if cfg.format == Format::Bfile {
        return Err(Failure::Usage(
            "endo-search reports a single record; use --format csv or json".into(),
        ));
    }
    let (f, d) = if cfg.deterministic {
        endofunctions::exhaustive_max_ratio_seq(n)?
    } else {
        endofunctions::exhaustive_max_ratio(n)?
    };
    let row = SearchRow {
        n,
        f: f.image().to_vec(),
        deg_f: d.deg_f,
        deg_f2: d.deg_f2,
        ratio: d.ratio,
        normalized: d.normalized,
    };
    let mut w = output::writer(cfg.out.as_deref())?;
    match cfg.format {
        Format::Csv => {
            writeln!(w, "n,f,deg_f,deg_f2,ratio,normalized")?;
            let image = row
                .f
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(";");
            writeln!(
                w,
                "{},{},{},{},{},{}",
                row.n, image, row.deg_f, row.deg_f2, row.ratio, row.normalized
            )?;
        }
        Format::Json => output::json_to(&mut w, &row)?,
        Format::Bfile => unreachable!("rejected above"),
    }
    w.flush()?;
    Ok(0)
}
