//! Critical quadrupole strengths and the pairing of characteristic curves.
//!
//! A channel opens (its radial problem becomes unbounded below) when its
//! characteristic curve crosses zero. For every `m ≥ 1` the curves `a_m(q)`
//! and `b_m(q)` start at `m²` and decrease through zero exactly once; `a_0`
//! starts at zero and is negative for all `q > 0`, so its only root is the
//! origin. Because `b_{m+1}(q) - a_m(q)` shrinks exponentially with `√q`,
//! critical strengths come in close pairs.

use std::thread;

use crate::error::{Error, Result};
use crate::mathieu::{char_value, DEFAULT_TOL};
use crate::roots::brent;
use crate::symmetry::SymmetryClass;

/// Spacing of the bracketing scan in `q`.
pub const SCAN_STEP: f64 = 0.5;

/// Default upper end of the bracketing scan.
pub const SCAN_CAP: f64 = 100.0;

/// Root tolerance in `q` applied to orders `m ≥ 3`, whose critical
/// strengths differ from their partner's only in the seventh digit.
pub const TIGHT_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalPoint {
    pub class: SymmetryClass,
    pub order: u32,
    pub q_c: f64,
    pub xi_c: f64,
    /// `|a_m(q_c)|` or `|b_m(q_c)|`.
    pub residual: f64,
}

impl CriticalPoint {
    pub fn label(&self) -> String {
        self.class.label(self.order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairingGap {
    pub m: u32,
    pub q: f64,
    pub a: f64,
    pub b: f64,
    /// `b_{m+1}(q) - a_m(q)`.
    pub gap: f64,
}

/// Scan limit large enough to bracket the root of order `m`.
///
/// The zero of `a_m` or `b_m` lies below `(2m + 1)²`, where the leading
/// large-`q` asymptote `-2q + 2(2m + 1)√q` vanishes.
pub fn scan_cap(order: u32) -> f64 {
    let bound = 2.0 * order as f64 + 2.0;
    SCAN_CAP.max(bound * bound)
}

fn value(class: SymmetryClass, order: u32, q: f64) -> Result<f64> {
    Ok(char_value(class, order, q, DEFAULT_TOL)?.value)
}

/// Zero of the characteristic curve `(class, order)` in `q`.
pub fn find_critical(class: SymmetryClass, order: u32, tol: f64) -> Result<CriticalPoint> {
    find_critical_within(class, order, tol, scan_cap(order))
}

/// [`find_critical`] with an explicit scan limit.
pub fn find_critical_within(class: SymmetryClass, order: u32, tol: f64, q_max: f64) -> Result<CriticalPoint> {
    class.rank(order)?;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    let point = |q_c: f64| -> Result<CriticalPoint> {
        Ok(CriticalPoint {
            class,
            order,
            q_c,
            xi_c: q_c / 4.0,
            residual: value(class, order, q_c)?.abs(),
        })
    };
    if order == 0 {
        return point(0.0);
    }
    let tol = if order >= 3 { tol.min(TIGHT_TOL) } else { tol };

    let mut lo = 0.0;
    let mut i = 1;
    loop {
        let hi = i as f64 * SCAN_STEP;
        if hi > q_max {
            return Err(Error::SearchFailed {
                what: format!("a zero of {}", class.label(order)),
                lo: 0.0,
                hi: q_max,
            });
        }
        let v = value(class, order, hi)?;
        if v == 0.0 {
            return point(hi);
        }
        if v < 0.0 {
            let bracket = brent(|q| value(class, order, q), lo, hi, tol)?;
            return point(bracket.midpoint());
        }
        lo = hi;
        i += 1;
    }
}

/// Critical points of `a_0 … a_{p-1}` and `b_1 … b_p` sorted by `ξ_c`.
///
/// Curves are solved on separate threads. Equal `ξ_c` (which interlacing
/// rules out) would order `a` before `b`.
pub fn critical_table(max_pairs: u32, tol: f64) -> Result<Vec<CriticalPoint>> {
    if max_pairs == 0 {
        return Err(Error::InvalidArgument("max_pairs must be at least 1".into()));
    }
    let curves: Vec<(SymmetryClass, u32)> = (0..max_pairs)
        .flat_map(|m| {
            [
                (SymmetryClass::for_label('a', m), m),
                (SymmetryClass::for_label('b', m + 1), m + 1),
            ]
        })
        .map(|(class, m)| class.map(|c| (c, m)))
        .collect::<Result<_>>()?;

    let mut points = thread::scope(|s| {
        let handles: Vec<_> = curves
            .iter()
            .map(|&(class, m)| s.spawn(move || find_critical(class, m, tol)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("critical point worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    points.sort_by(|x, y| {
        x.xi_c
            .total_cmp(&y.xi_c)
            .then(x.class.letter().cmp(&y.class.letter()))
    });
    Ok(points)
}

/// `b_{m+1}(q) - a_m(q)`.
pub fn pairing_gap(m: u32, q: f64) -> Result<PairingGap> {
    let a = value(SymmetryClass::for_label('a', m)?, m, q)?;
    let b = value(SymmetryClass::for_label('b', m + 1)?, m + 1, q)?;
    Ok(PairingGap { m, q, a, b, gap: b - a })
}
