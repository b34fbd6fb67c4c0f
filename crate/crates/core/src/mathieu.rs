//! Characteristic values and periodic eigenfunctions of the Mathieu equation
//!
//! ```text
//! y'' + (a - 2q cos 2θ) y = 0
//! ```
//!
//! Each symmetry class expands its eigenfunctions in a single family of
//! Fourier harmonics (see [`crate::symmetry`]). Substituting the expansion
//! gives a three-term recurrence for the coefficients, which truncated at
//! `N` terms is the eigenproblem of an `N × N` tridiagonal matrix:
//!
//! | class    | diagonal            | off-diagonal       |
//! |----------|---------------------|--------------------|
//! | even, π  | `(2k)²`             | `√2·q`, then `q`   |
//! | even, 2π | `(2k+1)²`, `+q` at 0| `q`                |
//! | odd, 2π  | `(2k+1)²`, `-q` at 0| `q`                |
//! | odd, π   | `(2k+2)²`           | `q`                |
//!
//! The even-π recurrence couples the constant term with weight 2; carrying
//! `√2·A₀` instead of `A₀` makes it symmetric.
//!
//! # Normalisation
//!
//! Eigenfunctions are scaled so that `∫₀^{2π} Θ² dθ = π` for every class and
//! order, including `ce₀`. For `ce₀` this means the constant term is
//! `1/√2` at `q = 0`. In this convention the symmetrised eigenvector has unit
//! Euclidean norm. The sign is fixed by making the lowest non-zero harmonic
//! coefficient positive.

use std::f64::consts::{PI, SQRT_2};

use crate::error::{Error, Result};
use crate::symmetry::{Parity, SymmetryClass};
use crate::tridiag::SymTridiag;

/// Default absolute tolerance on characteristic values.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Bound on `|Θ'' + (a - 2q cos 2θ) Θ|` that returned eigenfunctions satisfy.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Largest truncation the doubling loop will try.
pub const MAX_TRUNCATION: usize = 4096;

/// A point `(a, q)` of the Mathieu parameter plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathieuParams {
    pub a: f64,
    pub q: f64,
}

impl MathieuParams {
    pub fn new(a: f64, q: f64) -> Result<Self> {
        check_q(q)?;
        if !a.is_finite() {
            return Err(Error::InvalidArgument(format!("a must be finite, got {a}")));
        }
        Ok(MathieuParams { a, q })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicValue {
    pub class: SymmetryClass,
    pub order: u32,
    pub q: f64,
    pub value: f64,
    /// Number of Fourier terms in the truncation that produced `value`.
    pub truncation: usize,
}

impl CharacteristicValue {
    pub fn label(&self) -> String {
        self.class.label(self.order)
    }
}

/// A periodic Mathieu eigenfunction as a truncated Fourier series.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSolution {
    pub class: SymmetryClass,
    pub order: u32,
    pub q: f64,
    /// The characteristic value the coefficients belong to.
    pub value: f64,
    /// `coefficients[i]` multiplies `cos` or `sin` of
    /// `class.wavenumber(i) · θ`.
    pub coefficients: Vec<f64>,
    pub truncation: usize,
}

impl FourierSolution {
    fn terms(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, &c)| (self.class.wavenumber(i) as f64, c))
    }

    /// Θ(θ).
    pub fn eval(&self, theta: f64) -> f64 {
        match self.class.parity() {
            Parity::Even => self.terms().map(|(k, c)| c * (k * theta).cos()).sum(),
            Parity::Odd => self.terms().map(|(k, c)| c * (k * theta).sin()).sum(),
        }
    }

    /// Θ'(θ).
    pub fn derivative(&self, theta: f64) -> f64 {
        match self.class.parity() {
            Parity::Even => self.terms().map(|(k, c)| -c * k * (k * theta).sin()).sum(),
            Parity::Odd => self.terms().map(|(k, c)| c * k * (k * theta).cos()).sum(),
        }
    }

    /// Θ''(θ).
    pub fn second_derivative(&self, theta: f64) -> f64 {
        match self.class.parity() {
            Parity::Even => self.terms().map(|(k, c)| -c * k * k * (k * theta).cos()).sum(),
            Parity::Odd => self.terms().map(|(k, c)| -c * k * k * (k * theta).sin()).sum(),
        }
    }

    /// Pointwise defect of the Mathieu equation.
    pub fn residual(&self, theta: f64) -> f64 {
        let y = self.eval(theta);
        (self.second_derivative(theta) + (self.value - 2.0 * self.q * (2.0 * theta).cos()) * y)
            .abs()
    }

    /// `∫₀^{2π} Θ² dθ` evaluated from the coefficients by Parseval.
    pub fn norm_integral(&self) -> f64 {
        self.terms()
            .map(|(k, c)| if k == 0.0 { 2.0 * PI * c * c } else { PI * c * c })
            .sum()
    }

    /// `|c_last| / max |c_k|`.
    pub fn tail_ratio(&self) -> f64 {
        tail_ratio(&self.coefficients)
    }
}

/// Θ(θ) of a Fourier solution.
pub fn eval_theta(sol: &FourierSolution, theta: f64) -> f64 {
    sol.eval(theta)
}

fn check_q(q: f64) -> Result<()> {
    if q.is_finite() && q >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidQ(q))
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

fn tail_ratio(v: &[f64]) -> f64 {
    let max = v.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    v.last().map_or(0.0, |c| c.abs() / max)
}

/// Starting truncation for order `m` at parameter `q`.
pub fn initial_truncation(order: u32, q: f64) -> usize {
    let spread = (2.0 * q.abs().sqrt()).ceil() as usize;
    32.max(order as usize + spread + 16)
}

/// Tridiagonal recurrence matrix with `n` Fourier terms. Accepts any real `q`.
pub(crate) fn recurrence_matrix(class: SymmetryClass, q: f64, n: usize) -> SymTridiag {
    let mut diag: Vec<f64> = (0..n)
        .map(|i| {
            let k = class.wavenumber(i) as f64;
            k * k
        })
        .collect();
    let mut off = vec![q; n.saturating_sub(1)];
    match class {
        SymmetryClass::EvenPi => {
            if let Some(first) = off.first_mut() {
                *first = SQRT_2 * q;
            }
        }
        SymmetryClass::EvenTwoPi => diag[0] += q,
        SymmetryClass::OddTwoPi => diag[0] -= q,
        SymmetryClass::OddPi => {}
    }
    SymTridiag::new(diag, off)
}

/// Characteristic value of order `m` at a fixed truncation `n`.
pub fn char_value_at_truncation(class: SymmetryClass, order: u32, q: f64, n: usize) -> Result<f64> {
    check_q(q)?;
    let rank = class.rank(order)?;
    if n <= rank {
        return Err(Error::InvalidArgument(format!(
            "truncation {n} too small for order {order} of class {class}"
        )));
    }
    Ok(recurrence_matrix(class, q, n).eigenvalue(rank))
}

struct Converged {
    value: f64,
    truncation: usize,
    vector: Option<Vec<f64>>,
}

/// Doubles the truncation until the eigenvalue moves by less than `tol`
/// (and, when an eigenvector is requested, its last entry is below `tol`
/// relative to the largest).
fn converge(class: SymmetryClass, order: u32, q: f64, tol: f64, with_vector: bool) -> Result<Converged> {
    check_q(q)?;
    check_tol(tol)?;
    let rank = class.rank(order)?;

    let mut n = initial_truncation(order, q);
    let mut previous = f64::NAN;
    let mut last = recurrence_matrix(class, q, n).eigenvalue(rank);
    while 2 * n <= MAX_TRUNCATION {
        n *= 2;
        let matrix = recurrence_matrix(class, q, n);
        let value = matrix.eigenvalue(rank);
        if (value - last).abs() < tol {
            if !with_vector {
                return Ok(Converged { value, truncation: n, vector: None });
            }
            let vector = matrix.eigenvector(value);
            if tail_ratio(&vector) < tol {
                return Ok(Converged { value, truncation: n, vector: Some(vector) });
            }
        }
        previous = last;
        last = value;
    }
    Err(Error::NoConvergence { previous, last, truncation: n })
}

/// The characteristic value `a_m(q)` or `b_m(q)` of `class`, for `q ≥ 0`.
pub fn char_value(class: SymmetryClass, order: u32, q: f64, tol: f64) -> Result<CharacteristicValue> {
    let c = converge(class, order, q, tol, false)?;
    Ok(CharacteristicValue {
        class,
        order,
        q,
        value: c.value,
        truncation: c.truncation,
    })
}

/// Like [`char_value`] but accepts `q < 0` through the reflection identities
///
/// ```text
/// a_{2n}(-q)   = a_{2n}(q)
/// a_{2n+1}(-q) = b_{2n+1}(q)
/// b_{2n+1}(-q) = a_{2n+1}(q)
/// b_{2n+2}(-q) = b_{2n+2}(q)
/// ```
///
/// The returned record keeps the requested class, order and (negative) `q`.
pub fn char_value_signed(class: SymmetryClass, order: u32, q: f64, tol: f64) -> Result<CharacteristicValue> {
    if q.is_nan() {
        return Err(Error::InvalidQ(q));
    }
    if q >= 0.0 {
        return char_value(class, order, q, tol);
    }
    class.rank(order)?;
    let mirror = match class {
        SymmetryClass::EvenTwoPi => SymmetryClass::OddTwoPi,
        SymmetryClass::OddTwoPi => SymmetryClass::EvenTwoPi,
        other => other,
    };
    let cv = char_value(mirror, order, -q, tol)?;
    Ok(CharacteristicValue { class, q, ..cv })
}

/// Normalised Fourier coefficients of `ce_m` or `se_m`.
pub fn fourier_solution(class: SymmetryClass, order: u32, q: f64, tol: f64) -> Result<FourierSolution> {
    let c = converge(class, order, q, tol, true)?;
    let mut coefficients = c.vector.expect("vector requested");
    if class == SymmetryClass::EvenPi {
        coefficients[0] /= SQRT_2;
    }
    if let Some(lead) = coefficients.iter().copied().find(|&x| x != 0.0) {
        if lead < 0.0 {
            coefficients.iter_mut().for_each(|x| *x = -*x);
        }
    }
    Ok(FourierSolution {
        class,
        order,
        q,
        value: c.value,
        coefficients,
        truncation: c.truncation,
    })
}
