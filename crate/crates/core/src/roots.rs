//! Bracketing root finder (Brent's method).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

impl Bracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

const MAX_ITER: usize = 200;

/// Shrinks a sign-changing bracket `[lo, hi]` of `f` until it is narrower
/// than `xtol`, mixing inverse quadratic interpolation and secant steps with
/// bisection so that every step keeps the root bracketed.
///
/// Returns the final bracket ordered as `lo ≤ hi`. A root hit exactly
/// collapses the bracket to that point.
pub fn brent<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> Result<Bracket>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a)?, f(b)?);
    if fa == 0.0 {
        return Ok(Bracket { lo: a, hi: a, iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(Bracket { lo: b, hi: b, iterations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::SearchFailed { what: "a sign change".into(), lo, hi });
    }

    // b is the best estimate, c the contrapoint, d/e the last two step sizes
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for iter in 1..=MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let half = 0.5 * (c - b);
        if half.abs() <= tol || fb == 0.0 {
            let (lo, hi) = if fb == 0.0 { (b, b) } else { (b.min(c), b.max(c)) };
            return Ok(Bracket { lo, hi, iterations: iter });
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * half * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * half * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = half;
                e = d;
            }
        } else {
            d = half;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(half) };
        fb = f(b)?;
    }
    Ok(Bracket { lo: b.min(c), hi: b.max(c), iterations: MAX_ITER })
}
