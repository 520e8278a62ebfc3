//! Single-mode gate bank: the exact cubic-phase T-gate, shear,
//! displacements, and the Fourier (logical Hadamard) rotation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Representation, WaveFunction, SQRT_PI};

/// Phase polynomial phi(x) = (pi/4)(c3 u^3 + c2 u^2 + c1 u) with u = x/sqrt(pi).
///
/// The T-gate combination is (2, 1, -2): at x = n sqrt(pi) the phase is
/// (pi/4)(2n^3 + n^2 - 2n), which is 0 mod 2 pi on even n and pi/4 on odd n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GatePhasePolynomial {
    pub c3: f64,
    pub c2: f64,
    pub c1: f64,
}

impl GatePhasePolynomial {
    pub const T_GATE: GatePhasePolynomial = GatePhasePolynomial { c3: 2.0, c2: 1.0, c1: -2.0 };

    /// Evaluated directly in u = x/sqrt(pi) to avoid cancellation at large |x|.
    pub fn eval(&self, x: f64) -> f64 {
        let u = x / SQRT_PI;
        std::f64::consts::FRAC_PI_4 * (u * (u * (self.c3 * u + self.c2) + self.c1))
    }
}

fn require_position(psi: &WaveFunction) -> Result<()> {
    if psi.representation() != Representation::Position {
        return Err(Error::RepresentationMismatch {
            expected: Representation::Position,
            got: psi.representation(),
        });
    }
    Ok(())
}

/// The exact cubic-phase T-gate U_T: pointwise phase e^{i phi(x)} with the
/// (2, 1, -2) polynomial. Diagonal in position, so the position density is
/// untouched.
pub fn apply_cubic_t(psi: &WaveFunction) -> Result<WaveFunction> {
    require_position(psi)?;
    let mut out = psi.clone();
    let grid = psi.grid().clone();
    for (j, a) in out.amplitudes_mut().iter_mut().enumerate() {
        let phi = GatePhasePolynomial::T_GATE.eval(grid.point(j));
        *a *= Complex64::from_polar(1.0, phi);
    }
    Ok(out)
}

/// (2n^3 + n^2 - 2n) mod 8 in exact integer arithmetic; always 0 or 1.
pub fn t_phase_parity(n: i64) -> u8 {
    let n = n as i128;
    let v = (2 * n * n * n + n * n - 2 * n).rem_euclid(8);
    debug_assert!(v == 0 || v == 1);
    v as u8
}

/// Shear e^{i c x^2 / 2}; c = 1 is the logical S-gate on square GKP.
pub fn apply_shear(psi: &WaveFunction, c: f64) -> Result<WaveFunction> {
    require_position(psi)?;
    let mut out = psi.clone();
    let grid = psi.grid().clone();
    for (j, a) in out.amplitudes_mut().iter_mut().enumerate() {
        let x = grid.point(j);
        *a *= Complex64::from_polar(1.0, 0.5 * c * x * x);
    }
    Ok(out)
}

/// Quadrature axis selector for displacements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    P,
}

/// Phase-space displacement of a position-representation state.
///
/// A p-displacement multiplies by e^{i amount x}. An x-displacement routes
/// through the momentum representation (e^{-i amount p}), which is exactly
/// unitary and reduces to an index shift for grid-commensurate amounts.
pub fn apply_displacement(psi: &WaveFunction, along: Axis, amount: f64) -> Result<WaveFunction> {
    require_position(psi)?;
    if amount == 0.0 {
        return Ok(psi.clone());
    }
    match along {
        Axis::P => {
            let mut out = psi.clone();
            let grid = psi.grid().clone();
            for (j, a) in out.amplitudes_mut().iter_mut().enumerate() {
                *a *= Complex64::from_polar(1.0, amount * grid.point(j));
            }
            Ok(out)
        }
        Axis::X => {
            let mut tilde = psi.to_momentum()?;
            let dual = tilde.grid().clone();
            for (k, a) in tilde.amplitudes_mut().iter_mut().enumerate() {
                *a *= Complex64::from_polar(1.0, -amount * dual.point(k));
            }
            tilde.to_position()
        }
    }
}

/// The Fourier gate (pi/2 rotation, logical Hadamard): the transformed
/// amplitudes relabeled as a position wavefunction. Requires a self-dual
/// grid so the dual lattice coincides with the position lattice.
pub fn apply_fourier(psi: &WaveFunction) -> Result<WaveFunction> {
    require_position(psi)?;
    if !psi.grid().is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let tilde = psi.to_momentum()?;
    Ok(WaveFunction::new(
        psi.grid().clone(),
        Representation::Position,
        tilde.amplitudes().to_vec(),
    ))
}
