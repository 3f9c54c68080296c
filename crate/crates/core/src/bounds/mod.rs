//! Asymptotic rate/distance trade-offs for stabilizer codes: the quantum
//! Gilbert–Varshamov bound, the Zyablov-type bound of concatenated codes,
//! generalized concatenation of order `s`, its `s → ∞` (Blokh–Zyablov)
//! limit, and the bound from algebraic-geometry outer codes.

mod ktv;
pub mod numerics;

pub use ktv::{ktv_asymptotic, ktv_delta, ktv_finite, ktv_rate_form, InnerCodeTable, TableRecord};

use rayon::prelude::*;

use crate::error::{invalid, Result};
use numerics::{adaptive_simpson, grid_golden_max, solve_decreasing};

const LOG2_3: f64 = 1.584_962_500_721_156_2;
const ZYABLOV_GRID: usize = 10_000;
const GCQ_GRID: usize = 1_000;
const OPT_TOL: f64 = 1e-10;
const QUAD_TOL: f64 = 1e-9;
const INVERT_TOL: f64 = 1e-13;

fn h2(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

pub(crate) fn h4_unchecked(x: f64) -> f64 {
    0.5 * (x * LOG2_3 + h2(x))
}

/// `H₄(x) = x log₄3 − x log₄x − (1−x) log₄(1−x)` on `[0, 1]`.
pub fn h4(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return invalid(format!("H4 is defined on [0, 1] (got {x})"));
    }
    Ok(h4_unchecked(x))
}

pub(crate) fn h4_inv_unchecked(y: f64) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    if y >= 1.0 {
        return 0.75;
    }
    // Bracketed Newton iteration; falls back to bisection whenever the
    // Newton step leaves the bracket.
    let (mut lo, mut hi) = (0.0f64, 0.75f64);
    let mut x = 0.375;
    for _ in 0..200 {
        let fx = h4_unchecked(x) - y;
        if fx > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        let slope = 0.5 * (LOG2_3 + ((1.0 - x) / x).log2());
        let mut next = x - fx / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() < 1e-16 || hi - lo < 1e-15 {
            return next;
        }
        x = next;
    }
    x
}

/// Inverse of `H₄` on its increasing branch `[0, 3/4]`.
pub fn h4_inv(y: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&y) {
        return invalid(format!("H4 inverse is defined on [0, 1] (got {y})"));
    }
    Ok(h4_inv_unchecked(y))
}

fn check_rate(r: f64) -> Result<()> {
    if (0.0..=1.0).contains(&r) {
        Ok(())
    } else {
        invalid(format!("rate must lie in [0, 1] (got {r})"))
    }
}

/// Largest relative distance `δ` for which the quantum GV bound
/// `R = 1 − 2H₄(δ)` guarantees codes of rate `R`.
pub fn gv_delta(rate: f64) -> Result<f64> {
    check_rate(rate)?;
    Ok(h4_inv_unchecked((1.0 - rate) / 2.0))
}

/// Supremum of the admissible relative distance: `H₄⁻¹(1/2)`.
pub fn delta_max() -> f64 {
    h4_inv_unchecked(0.5)
}

/// Zyablov-type bound: `max_{R<r<1} ½(1 − R/r) H₄⁻¹((1−r)/2)`.
/// Returns the value and the maximizing inner rate `r`; at the endpoints
/// the limits `R → 0` and `R → 1` are returned.
pub fn zyablov(rate: f64) -> Result<(f64, f64)> {
    check_rate(rate)?;
    if rate == 0.0 {
        return Ok((0.5 * delta_max(), 0.0));
    }
    if rate == 1.0 {
        return Ok((0.0, 1.0));
    }
    let f = |r: f64| 0.5 * (1.0 - rate / r) * h4_inv_unchecked((1.0 - r) / 2.0);
    let (r, v) = grid_golden_max(f, rate, 1.0, ZYABLOV_GRID, OPT_TOL);
    Ok((v.max(0.0), r))
}

pub fn zyablov_delta(rate: f64) -> Result<f64> {
    zyablov(rate).map(|(d, _)| d)
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < delta_max() {
        Ok(())
    } else {
        invalid(format!("delta must lie in (0, H4^-1(1/2)) (got {delta})"))
    }
}

fn gcq_objective(delta: f64, s: usize, r: f64) -> f64 {
    let sum: f64 = (1..=s)
        .map(|j| delta / h4_inv_unchecked(0.5 * (1.0 - r * j as f64 / s as f64)))
        .sum();
    r - r / s as f64 * sum
}

/// Rate of generalized concatenation of order `s` at inner parameter `δ`:
/// `max_{0<r<1−2H₄(δ)} r − (r/s) Σ_j δ / H₄⁻¹(½(1 − rj/s))`. The resulting
/// codes have relative distance `δ/2`.
pub fn gcq_rate(delta: f64, s: usize) -> Result<f64> {
    check_delta(delta)?;
    if s == 0 {
        return invalid("order s must be at least 1");
    }
    let r_max = 1.0 - 2.0 * h4_unchecked(delta);
    let (_, v) = grid_golden_max(|r| gcq_objective(delta, s, r), 0.0, r_max, GCQ_GRID, OPT_TOL);
    Ok(v.max(0.0))
}

/// The `s → ∞` limit:
/// `1 − 2H₄(δ) − δ ∫₀^{1−2H₄(δ)} dx / H₄⁻¹((1−x)/2)`.
pub fn bz_rate(delta: f64) -> Result<f64> {
    check_delta(delta)?;
    let r_max = 1.0 - 2.0 * h4_unchecked(delta);
    let integral = adaptive_simpson(|x| 1.0 / h4_inv_unchecked(0.5 * (1.0 - x)), 0.0, r_max, QUAD_TOL);
    Ok((r_max - delta * integral).max(0.0))
}

/// Relative distance `δ/2` of a `(rate(δ), δ/2)` parameterized curve at the
/// given rate, found by root bracketing in `δ`.
fn invert_half_delta<F: Fn(f64) -> f64>(rate: f64, rate_of: F) -> f64 {
    let dmax = delta_max();
    if rate <= 0.0 {
        return 0.5 * dmax;
    }
    if rate >= 1.0 {
        return 0.0;
    }
    let rate_of = |d: f64| {
        if d <= 0.0 {
            1.0
        } else if d >= dmax {
            0.0
        } else {
            rate_of(d)
        }
    };
    0.5 * solve_decreasing(rate_of, rate, 0.0, dmax, INVERT_TOL)
}

/// Distance of the order-`s` generalized concatenation curve at `rate`.
pub fn gcq_delta_at(rate: f64, s: usize) -> Result<f64> {
    check_rate(rate)?;
    if s == 0 {
        return invalid("order s must be at least 1");
    }
    Ok(invert_half_delta(rate, |d| gcq_rate(d, s).expect("delta in range")))
}

/// Distance of the Blokh–Zyablov curve at `rate`.
pub fn bz_delta_at(rate: f64) -> Result<f64> {
    check_rate(rate)?;
    Ok(invert_half_delta(rate, |d| bz_rate(d).expect("delta in range")))
}

/// Which bound a [`BoundCurve`] samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Gv,
    Zyablov,
    Gcq(usize),
    Bz,
    Ktv,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::Gv => "gv",
            BoundKind::Zyablov => "zyablov",
            BoundKind::Gcq(_) => "gcq",
            BoundKind::Bz => "bz",
            BoundKind::Ktv => "ktv",
        }
    }
}

/// `(R, δ)` samples of one bound on a uniform rate grid over `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCurve {
    pub kind: BoundKind,
    pub samples: Vec<(f64, f64)>,
}

/// Distance of the bound `kind` at `rate`.
pub fn delta_at(kind: BoundKind, rate: f64, table: Option<&InnerCodeTable>) -> Result<f64> {
    match kind {
        BoundKind::Gv => gv_delta(rate),
        BoundKind::Zyablov => zyablov_delta(rate),
        BoundKind::Gcq(s) => gcq_delta_at(rate, s),
        BoundKind::Bz => bz_delta_at(rate),
        BoundKind::Ktv => match table {
            Some(t) => ktv_delta(rate, t),
            None => invalid("the ktv bound needs an inner code table"),
        },
    }
}

/// Sample `kind` at `R = i/(points−1)`, `i = 0..points`.
pub fn curve_sample(kind: BoundKind, points: usize, table: Option<&InnerCodeTable>) -> Result<BoundCurve> {
    if points < 2 {
        return invalid(format!("a curve needs at least 2 grid points (got {points})"));
    }
    if let BoundKind::Gcq(0) = kind {
        return invalid("order s must be at least 1");
    }
    if kind == BoundKind::Ktv && table.is_none() {
        return invalid("the ktv bound needs an inner code table");
    }
    let samples = (0..points)
        .into_par_iter()
        .map(|i| {
            let r = i as f64 / (points - 1) as f64;
            delta_at(kind, r, table).map(|d| (r, d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundCurve { kind, samples })
}
