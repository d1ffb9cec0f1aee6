//! Continuous envelopes of the reduced objective and the cubic-root
//! localization of its integer minimizers.
//!
//! For real `x > 1` the objective is sandwiched between
//! `l(x) = x^2 + (n-x)^2/(x-1)` and `u(x) = l(x) + (x-1)/4`. The unique
//! stationary points `x0` (of `u`) and `y0` (of `l`) on `(1, inf)` have
//! closed cube-root forms; comparing `l` against the level `u(floor(x0))`
//! reduces to a depressed cubic whose two positive roots bracket every
//! integer minimizer once `n >= 6`.

use serde::Serialize;

use crate::error::{Error, Result};

/// `localize` and friends need `n >= 6` for the cubic to have three real
/// roots (and for `floor(x0) >= 2`).
pub const MIN_LOCALIZE_N: u64 = 6;
/// Stationary points exist in closed form from `n = 3` on.
pub const MIN_STATIONARY_N: u64 = 3;
/// Beyond this the f64 analysis is unvalidated; refuse rather than drift.
pub const MAX_ANALYSIS_N: u64 = 1_000_000_000;

/// Newton steps after the closed forms; more than enough for ~1e-12 relative.
const POLISH_STEPS: usize = 5;

/// Growth envelope `lower <= m_n <= upper`; `guaranteed` is false below
/// `n = 28`, where the constants are not established.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthBounds {
    pub lower: f64,
    pub upper: f64,
    pub guaranteed: bool,
}

/// Everything the localization computes for one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: u64,
    /// Stable cube-root radical in the closed form of `x0`.
    pub c_n: f64,
    /// Stable cube-root radical in the closed form of `y0`.
    pub d_n: f64,
    /// Stationary point of the upper envelope.
    pub x0: f64,
    /// Stationary point of the lower envelope.
    pub y0: f64,
    /// Level `u(floor(x0))` the lower envelope is compared against.
    pub u_at_floor_x0: f64,
    /// Linear coefficient of the depressed cubic `x^3 + p x + q`.
    pub p: f64,
    /// Constant coefficient of the depressed cubic.
    pub q: f64,
    /// `p^3/27 + q^2/4`; negative exactly when three real roots exist.
    pub discriminant: f64,
    /// Smaller positive root: `l(x) <= u_at_floor_x0` for `x >= x1`.
    pub x1: f64,
    /// Larger positive root: `l(x) <= u_at_floor_x0` for `x <= x2`.
    pub x2: f64,
    /// `[ceil(x1), floor(x2)]`, containing every optimal largest part.
    pub bracket: [u64; 2],
    /// Polar angle of `-q/2 + i sqrt(-discriminant)`, measured from `pi`.
    pub theta: f64,
    /// Polar radius of the same complex number, `(-p/3)^{3/2}`.
    pub r_polar: f64,
    /// Set when `x0` sits within 1e-9 of an integer, in which case the
    /// floor in `u_at_floor_x0` is numerically moot; the literal floor is
    /// used regardless.
    pub floor_ambiguous: bool,
}

/// Scaled diagnostics that make the large-`n` behaviour visible.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticDiag {
    pub n: u64,
    /// `x0 / n^{2/3}`; tends to `2^{-1/3}`.
    pub x0_scaled: f64,
    /// `(x2 - x1) / n^{2/3}`; tends to 0.
    pub width_scaled: f64,
    /// `|discriminant| / n^4`; tends to 0.
    pub disc_scaled: f64,
    /// Leading terms of the expanded discriminant divided by `n^4`; the
    /// expansion cancels to this sum, which tends to 0.
    pub disc_leading_scaled: f64,
    /// Polar angle; tends to 0.
    pub theta: f64,
}

fn check_stationary_n(n: u64) -> Result<()> {
    if n < MIN_STATIONARY_N {
        return Err(Error::TooSmall {
            n,
            min: MIN_STATIONARY_N,
        });
    }
    if n > MAX_ANALYSIS_N {
        return Err(Error::TooBig {
            n,
            max: MAX_ANALYSIS_N,
        });
    }
    Ok(())
}

/// `x^2 + (n-x)^2 / (x-1)`, the floor of the objective over real spreads.
pub fn lower_envelope(n: u64, x: f64) -> Result<f64> {
    if x == 1.0 {
        return Err(Error::EnvelopePole);
    }
    let nf = n as f64;
    Ok(x * x + (nf - x) * (nf - x) / (x - 1.0))
}

/// Lower envelope plus `(x-1)/4`, the ceiling of the objective.
pub fn upper_envelope(n: u64, x: f64) -> Result<f64> {
    Ok(lower_envelope(n, x)? + (x - 1.0) / 4.0)
}

/// Stationary point of the upper envelope on `(1, inf)`: the single real
/// root of `8x^3 - 11x^2 - 2x + 8n - 4n^2 + 1`.
pub fn x0(n: u64) -> Result<f64> {
    Ok(x0_parts(n)?.0)
}

/// Stationary point of the lower envelope on `(1, inf)`: the single real
/// root of `2x^3 - 3x^2 + 2n - n^2`.
pub fn y0(n: u64) -> Result<f64> {
    Ok(y0_parts(n)?.0)
}

fn x0_parts(n: u64) -> Result<(f64, f64)> {
    check_stationary_n(n)?;
    let ni = n as i128;
    let a = (3456 * ni * ni - 6912 * ni + 1259) as f64;
    // The naive radical cbrt(A - sqrt(A^2 - 169^3)) cancels catastrophically
    // for large n; multiply through by the conjugate instead.
    let c = 169.0 / (a + (a * a - 169.0f64.powi(3)).sqrt()).cbrt();
    let mut x = (11.0 + c + 169.0 / c) / 24.0;
    let k = (8 * ni - 4 * ni * ni + 1) as f64;
    for _ in 0..POLISH_STEPS {
        let f = ((8.0 * x - 11.0) * x - 2.0) * x + k;
        let fp = (24.0 * x - 22.0) * x - 2.0;
        x -= f / fp;
    }
    Ok((x, c))
}

fn y0_parts(n: u64) -> Result<(f64, f64)> {
    check_stationary_n(n)?;
    let ni = n as i128;
    let b = (2 * ni * ni - 4 * ni + 1) as f64;
    // Same conjugate trick: cbrt(B - sqrt(B^2 - 1)) underflows for large n.
    let d = 1.0 / (b + (b * b - 1.0).sqrt()).cbrt();
    let mut y = (d + 1.0 + 1.0 / d) / 2.0;
    let k = (2 * ni - ni * ni) as f64;
    for _ in 0..POLISH_STEPS {
        let g = (2.0 * y - 3.0) * y * y + k;
        let gp = (6.0 * y - 6.0) * y;
        y -= g / gp;
    }
    Ok((y, d))
}

/// `n^{4/3}/4 <= m_n <= (2^{-2/3} + 2^{1/3}) n^{4/3}`, guaranteed from
/// `n = 28` on.
pub fn growth_bounds(n: u64) -> GrowthBounds {
    let pow = (n as f64).powf(4.0 / 3.0);
    GrowthBounds {
        lower: pow / 4.0,
        upper: (0.25f64.cbrt() + 2.0f64.cbrt()) * pow,
        guaranteed: n >= 28,
    }
}

/// Brackets the integer minimizers for `n >= 6` by solving
/// `l(x) = u(floor(x0))`, i.e. the depressed cubic `x^3 + p x + q` with
/// `p = -2n - u(floor(x0))` and `q = n^2 + u(floor(x0))`, via the polar
/// form of its three real roots (the negative one is discarded).
pub fn localize(n: u64) -> Result<BoundsReport> {
    if n < MIN_LOCALIZE_N {
        return Err(Error::TooSmall {
            n,
            min: MIN_LOCALIZE_N,
        });
    }
    let (x0, c_n) = x0_parts(n)?;
    let (y0, d_n) = y0_parts(n)?;
    let floor_ambiguous = (x0 - x0.round()).abs() < 1e-9;
    let z = x0.floor();
    let u_at_floor_x0 = upper_envelope(n, z)?;
    let nf = n as f64;
    let p = -2.0 * nf - u_at_floor_x0;
    let q = nf * nf + u_at_floor_x0;
    let discriminant = p.powi(3) / 27.0 + q * q / 4.0;
    if discriminant >= 0.0 {
        return Err(Error::NoRealTriple {
            n,
            disc: discriminant,
        });
    }
    // -q/2 + i sqrt(-disc) has modulus (-p/3)^{3/2} and angle pi - theta.
    let s = (-p / 3.0).sqrt();
    let r_polar = s * s * s;
    let theta = (2.0 * (-discriminant).sqrt() / q).atan();
    let x1 = 2.0 * s * ((std::f64::consts::PI + theta) / 3.0).cos();
    let x2 = 2.0 * s * ((std::f64::consts::PI - theta) / 3.0).cos();
    debug_assert!(1.0 < x1 && x1 < x2, "root order at n = {n}");
    debug_assert!(x1 < z && y0 < x2, "stationary points stray at n = {n}");
    Ok(BoundsReport {
        n,
        c_n,
        d_n,
        x0,
        y0,
        u_at_floor_x0,
        p,
        q,
        discriminant,
        x1,
        x2,
        bracket: [x1.ceil() as u64, x2.floor() as u64],
        theta,
        r_polar,
        floor_ambiguous,
    })
}

/// Scaled localization diagnostics for watching the limits come in.
pub fn asymptotic_diag(n: u64) -> Result<AsymptoticDiag> {
    let report = localize(n)?;
    let nf = n as f64;
    let n23 = nf.powf(2.0 / 3.0);
    let n4 = nf.powi(4);
    let z = report.x0.floor();
    let inv = 1.0 / (z - 1.0);
    // The expanded discriminant collapses to these five leading terms plus
    // lower-order noise; their scaled sum must die out as n grows.
    let leading = -nf.powi(6) / 27.0 * inv.powi(3) - n4 * z * z / 9.0 * inv.powi(2) + n4 / 4.0
        - nf.powi(2) * z.powi(4) / 9.0 * inv
        - z.powi(6) / 27.0;
    Ok(AsymptoticDiag {
        n,
        x0_scaled: report.x0 / n23,
        width_scaled: (report.x2 - report.x1) / n23,
        disc_scaled: report.discriminant.abs() / n4,
        disc_leading_scaled: leading / n4,
        theta: report.theta,
    })
}
