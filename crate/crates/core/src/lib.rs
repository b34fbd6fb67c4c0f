//! Angular Mathieu spectrum of a charged particle bound by a planar electric
//! quadrupole.
//!
//! The potential `-4 ξ sin(2θ) / r²` separates in polar coordinates. The
//! angular factor obeys the Mathieu equation `y'' + (a - 2q cos 2θ) y = 0`
//! with `a = 2 E_θ` and `q = 4 ξ`, and the radial factor sees an
//! inverse-square well of strength `α = 1/4 - 2 E_θ`. A channel falls to the
//! centre once `α > 1/4`, i.e. once its characteristic value goes negative.
//!
//! * [`mathieu`] computes `a_m(q)`, `b_m(q)` and the periodic eigenfunctions
//!   from truncated Fourier recurrences.
//! * [`floquet`] recomputes the same characteristic values by shooting on
//!   the ODE, sharing no code with [`mathieu`].
//! * [`quadrupole`] maps `ξ` onto Mathieu parameters and classifies each
//!   radial channel.
//! * [`criticality`] locates the strengths `ξ_c` at which characteristic
//!   curves cross zero and measures the `b_{m+1} - a_m` pairing gap.

pub mod criticality;
pub mod error;
pub mod floquet;
pub mod mathieu;
pub mod quadrupole;
pub mod roots;
pub mod symmetry;
mod tridiag;


pub use error::{Error, Result};
pub use floquet::{oracle_char_value, shoot, ShootingResult};
pub use quadrupole::{
    angular_energy, count_open_channels, radial_alpha, to_mathieu, AngularChannel,
    QuadrupoleStrength, RadialRegime, Regime,
};
pub use criticality::{critical_table, find_critical, pairing_gap, CriticalPoint, PairingGap};

pub use mathieu::{
    char_value, char_value_signed, eval_theta, fourier_solution, CharacteristicValue,
    FourierSolution, MathieuParams, DEFAULT_TOL,
};
pub use symmetry::{Parity, Period, SymmetryClass};
