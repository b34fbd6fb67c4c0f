//! Characteristic values by shooting on the Mathieu ODE.
//!
//! This path shares nothing with [`crate::mathieu`]: it integrates
//! `y'' + (a - 2q cos 2θ) y = 0` from `θ = 0` to `θ = π/2` with an adaptive
//! Dormand–Prince 5(4) stepper and asks whether the solution has the
//! symmetry of a periodic eigenfunction at the quarter period.
//!
//! Every periodic solution is even or odd about both `θ = 0` and `θ = π/2`,
//! so the four classes are picked out by one initial and one terminal
//! condition:
//!
//! | class    | at `θ = 0`          | at `θ = π/2`  |
//! |----------|---------------------|---------------|
//! | even, π  | `y = 1, y' = 0`     | `y' = 0`      |
//! | even, 2π | `y = 1, y' = 0`     | `y = 0`       |
//! | odd, 2π  | `y = 0, y' = 1`     | `y' = 0`      |
//! | odd, π   | `y = 0, y' = 1`     | `y = 0`       |
//!
//! The terminal defect is scanned upward in `a` from below `-2|q|` (no
//! characteristic value lies lower); its `k`-th sign change is the `k`-th
//! value of the class, refined by bisection.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::symmetry::{Parity, SymmetryClass};

/// Relative and absolute local error target of the stepper.
pub const INTEGRATOR_TOL: f64 = 1e-12;

/// Spacing of the bracketing scan in `a`.
pub const SCAN_STEP: f64 = 0.25;

const MAX_STEPS: usize = 1_000_000;

/// Terminal defect of a single shot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingResult {
    pub a: f64,
    pub mismatch: f64,
    pub step_count: usize,
}

/// Solution state `(y, y', ∫₀^θ y²)` at the end of a shot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShotState {
    pub theta: f64,
    pub y: f64,
    pub dy: f64,
    pub norm: f64,
    pub step_count: usize,
}

type State = [f64; 3];

fn rhs(theta: f64, s: &State, a: f64, q: f64) -> State {
    [s[1], -(a - 2.0 * q * (2.0 * theta).cos()) * s[0], s[0] * s[0]]
}

fn axpy(s: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *s;
    for (c, k) in terms {
        for i in 0..3 {
            out[i] += h * c * k[i];
        }
    }
    out
}

// Dormand–Prince 5(4) tableau.
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

/// Integrates from `θ = 0` to `theta_end` starting from the class's
/// initial condition.
pub fn integrate(class: SymmetryClass, a: f64, q: f64, theta_end: f64) -> Result<ShotState> {
    let mut s: State = match class.parity() {
        Parity::Even => [1.0, 0.0, 0.0],
        Parity::Odd => [0.0, 1.0, 0.0],
    };
    let mut t = 0.0;
    let mut steps = 0;
    if theta_end <= 0.0 {
        return Ok(ShotState { theta: 0.0, y: s[0], dy: s[1], norm: s[2], step_count: 0 });
    }
    let mut h = (theta_end / 64.0).min(1e-2);
    let mut k1 = rhs(t, &s, a, q);

    while t < theta_end {
        if steps >= MAX_STEPS || !h.is_finite() || h <= f64::EPSILON * theta_end {
            return Err(Error::IntegrationFailed { theta: t, steps });
        }
        let last = t + h >= theta_end;
        if last {
            h = theta_end - t;
        }

        let k2 = rhs(t + C2 * h, &axpy(&s, h, &[(A21, &k1)]), a, q);
        let k3 = rhs(t + C3 * h, &axpy(&s, h, &[(A31, &k1), (A32, &k2)]), a, q);
        let k4 = rhs(t + C4 * h, &axpy(&s, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]), a, q);
        let k5 = rhs(
            t + C5 * h,
            &axpy(&s, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
            a,
            q,
        );
        let k6 = rhs(
            t + h,
            &axpy(&s, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
            a,
            q,
        );
        let next = axpy(&s, h, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
        let t_next = if last { theta_end } else { t + h };
        let k7 = rhs(t_next, &next, a, q);

        let err_vec = axpy(
            &[0.0; 3],
            h,
            &[(E1, &k1), (E3, &k3), (E4, &k4), (E5, &k5), (E6, &k6), (E7, &k7)],
        );
        let scale = s[0].abs().max(s[1].abs()).max(next[0].abs()).max(next[1].abs());
        // the running integral of y² rides along without error control
        let err = err_vec[0].abs().max(err_vec[1].abs()) / (INTEGRATOR_TOL * (1.0 + scale));

        steps += 1;
        if err <= 1.0 {
            t = t_next;
            s = next;
            k1 = k7;
        }
        let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= factor;
    }
    Ok(ShotState { theta: t, y: s[0], dy: s[1], norm: s[2], step_count: steps })
}

/// Quarter-period boundary defect of the class at trial value `a`.
pub fn shoot(class: SymmetryClass, a: f64, q: f64) -> Result<ShootingResult> {
    let end = integrate(class, a, q, FRAC_PI_2)?;
    let mismatch = match class {
        SymmetryClass::EvenPi | SymmetryClass::OddTwoPi => end.dy,
        SymmetryClass::EvenTwoPi | SymmetryClass::OddPi => end.y,
    };
    Ok(ShootingResult { a, mismatch, step_count: end.step_count })
}

/// Characteristic value of order `m` in `class` found by shooting.
///
/// Negative `q` is accepted; the scan starts below `-2|q|`.
pub fn oracle_char_value(class: SymmetryClass, order: u32, q: f64, tol: f64) -> Result<f64> {
    if !q.is_finite() {
        return Err(Error::InvalidQ(q));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let rank = class.rank(order)?;
    let defect = |a: f64| shoot(class, a, q).map(|r| r.mismatch);

    let start = -2.0 * q.abs() - 1.0;
    let stop = ((order + 2) * (order + 2)) as f64 + 2.0 * q.abs() + 10.0;

    let mut roots_seen = 0;
    let mut a_prev = start;
    let mut f_prev = defect(a_prev)?;
    let mut i = 1;
    loop {
        let a = start + i as f64 * SCAN_STEP;
        if a > stop {
            return Err(Error::SearchFailed {
                what: format!("root {rank} of the {class} shooting defect"),
                lo: start,
                hi: stop,
            });
        }
        let f = defect(a)?;
        if f == 0.0 {
            if roots_seen == rank {
                return Ok(a);
            }
            roots_seen += 1;
            // restart the sign comparison on the far side of the root
            i += 1;
            a_prev = start + i as f64 * SCAN_STEP;
            f_prev = defect(a_prev)?;
        } else if f_prev.signum() != f.signum() {
            if roots_seen == rank {
                return bisect(&defect, a_prev, f_prev, a, tol);
            }
            roots_seen += 1;
            a_prev = a;
            f_prev = f;
        } else {
            a_prev = a;
            f_prev = f;
        }
        i += 1;
    }
}

fn bisect(f: &dyn Fn(f64) -> Result<f64>, mut lo: f64, f_lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let lo_sign = f_lo.signum();
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
