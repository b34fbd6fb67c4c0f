//! The planar quadrupole problem in Mathieu variables.
//!
//! With `ψ(r, θ) = r^{-1/2} R(r) Θ(θ)` the Schrödinger equation
//! `[-½∇² - 4ξ sin(2θ)/r²] ψ = E ψ` splits into
//!
//! ```text
//! [-½ d²/dθ² - 4ξ sin 2θ] Θ = E_θ Θ,          Θ(θ + 2π) = Θ(θ)
//! [-½ d²/dr² - α / (2r²)] R = E R,            α = 1/4 - 2E_θ
//! ```
//!
//! Shifting `θ` by `π/4` turns the angular equation into the Mathieu
//! equation with `a = 2E_θ` and `q = 4ξ`. There is no radial potential
//! besides the inverse-square term, so each angular channel is classified
//! by `α` alone and no radial spectrum is computed:
//!
//! * `α < 1/4` (`E_θ > 0`): no negative energies.
//! * `α = 1/4` (`E_θ = 0`): the critical strength.
//! * `α > 1/4` (`E_θ < 0`): unbounded below, the particle falls to the
//!   centre.
//!
//! Only `ξ ≥ 0` is accepted. The reflection `θ → -θ` maps `ξ` to `-ξ`, and
//! the characteristic spectrum is unchanged, but the class labels of
//! individual channels are permuted; callers with `ξ < 0` should reflect.

use crate::error::{Error, Result};
use crate::mathieu::{char_value, DEFAULT_TOL};
use crate::symmetry::SymmetryClass;

/// Half-width of the band of `E_θ` treated as critical.
pub const CLASSIFICATION_TOL: f64 = 1e-10;

/// Dimensionless quadrupole strength `ξ ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct QuadrupoleStrength(f64);

impl QuadrupoleStrength {
    pub fn new(xi: f64) -> Result<Self> {
        if xi.is_finite() && xi >= 0.0 {
            Ok(QuadrupoleStrength(xi))
        } else {
            Err(Error::NegativeStrength(xi))
        }
    }

    pub fn xi(self) -> f64 {
        self.0
    }

    /// Mathieu parameter `q = 4ξ`.
    pub fn mathieu_q(self) -> f64 {
        4.0 * self.0
    }
}

/// `q = 4ξ`.
pub fn to_mathieu(xi: QuadrupoleStrength) -> f64 {
    xi.mathieu_q()
}

/// One angular eigenstate and its separation constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularChannel {
    pub class: SymmetryClass,
    pub order: u32,
    pub xi: f64,
    pub e_theta: f64,
}

impl AngularChannel {
    pub fn label(&self) -> String {
        self.class.label(self.order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    NoNegativeSpectrum,
    Critical,
    UnboundedBelow,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::NoNegativeSpectrum => "no_negative_spectrum",
            Regime::Critical => "critical",
            Regime::UnboundedBelow => "unbounded_below",
        }
    }
}

/// Inverse-square strength `α` seen by the radial factor of a channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialRegime {
    pub alpha: f64,
    pub regime: Regime,
}

impl RadialRegime {
    pub fn from_angular_energy(e_theta: f64) -> Self {
        let regime = if e_theta.abs() <= CLASSIFICATION_TOL {
            Regime::Critical
        } else if e_theta < 0.0 {
            Regime::UnboundedBelow
        } else {
            Regime::NoNegativeSpectrum
        };
        RadialRegime { alpha: 0.25 - 2.0 * e_theta, regime }
    }
}

/// `E_θ = a_m(4ξ) / 2` (or `b_m`) for one channel.
pub fn angular_energy(xi: QuadrupoleStrength, class: SymmetryClass, order: u32) -> Result<AngularChannel> {
    let cv = char_value(class, order, xi.mathieu_q(), DEFAULT_TOL)?;
    Ok(AngularChannel { class, order, xi: xi.xi(), e_theta: 0.5 * cv.value })
}

pub fn radial_alpha(channel: &AngularChannel) -> RadialRegime {
    RadialRegime::from_angular_energy(channel.e_theta)
}

/// All channels of every class with order `m ≤ max_order`, in `a_0, b_1,
/// a_1, b_2, …` order.
pub fn channels(xi: QuadrupoleStrength, max_order: u32) -> Result<Vec<(AngularChannel, RadialRegime)>> {
    let mut out = Vec::new();
    for m in 0..=max_order {
        if m > 0 {
            let b = angular_energy(xi, SymmetryClass::for_label('b', m)?, m)?;
            out.push((b, radial_alpha(&b)));
        }
        let a = angular_energy(xi, SymmetryClass::for_label('a', m)?, m)?;
        out.push((a, radial_alpha(&a)));
    }
    Ok(out)
}

/// Number of channels with order `≤ max_order` whose radial problem is
/// unbounded below.
pub fn count_open_channels(xi: QuadrupoleStrength, max_order: u32) -> Result<usize> {
    Ok(channels(xi, max_order)?
        .iter()
        .filter(|(_, r)| r.regime == Regime::UnboundedBelow)
        .count())
}
