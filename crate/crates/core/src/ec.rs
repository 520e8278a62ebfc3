//! Ideal GKP error correction with infinitely squeezed ancillas.
//!
//! The state is expanded in displaced ideal codewords with displacement
//! syndromes (u, v) in [-sqrt(pi)/2, sqrt(pi)/2)^2; the logical coefficients
//! are c_mu(u, v) = sum_s e^{-i v x} Psi(x) at x = u + (2s + mu) sqrt(pi),
//! and the syndrome-averaged qubit is rho ~ Integral du dv c c^dag. The
//! v-integral is analytic and collapses to the comb-offset kernel
//!
//!   K(0) = sqrt(pi),  K(even k) = 0,
//!   K(odd k) = 2 (-1)^{(|k|-1)/2} / (|k| sqrt(pi)),
//!
//! leaving a single numeric u-integral, taken as a Riemann sum on lattice
//! points (exact gridding by commensurability). Symmetric syndrome windows
//! keep the logical frame of symmetric-noise states; K(even != 0) = 0 ties
//! the diagonal of rho to the even/odd bin masses of the binning decoder.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Representation, WaveFunction, SQRT_PI};
use crate::qubit::{BlochVector, QubitDensityMatrix};

/// Default comb-offset cutoff for the kernel sum.
pub const DEFAULT_K_MAX: i64 = 64;

/// Syndrome-kernel weight for integer comb offset k.
pub fn syndrome_kernel(k: i64) -> f64 {
    if k == 0 {
        return SQRT_PI;
    }
    if k % 2 == 0 {
        return 0.0;
    }
    let a = k.abs();
    let sign = if ((a - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
    2.0 * sign / (a as f64 * SQRT_PI)
}

/// Syndrome-averaged logical density matrix of a normalized position-space
/// state on a commensurate grid. Comb offsets are truncated at relative
/// mass 1e-14 and offset differences at `k_max`.
pub fn ec_qubit_average(psi: &WaveFunction, k_max: i64) -> Result<QubitDensityMatrix> {
    if k_max < 1 {
        return Err(Error::BadKmax(k_max));
    }
    if psi.representation() != Representation::Position {
        return Err(Error::RepresentationMismatch {
            expected: Representation::Position,
            got: psi.representation(),
        });
    }
    let lattice = psi.grid().lattice().ok_or(Error::NotCommensurate)?;
    if lattice.samples_per_unit % 2 != 0 {
        return Err(Error::BinEdgesOffGrid);
    }
    let norm = psi.norm_sq();
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::NotNormalized(norm));
    }

    let m = lattice.samples_per_unit as i64;
    let big_m = lattice.halfwidth_units as i64;
    let n = psi.grid().n_points() as i64;
    let dx = psi.grid().dx();
    let amps = psi.amplitudes();

    // comb offsets with grid support: x = u + n_off sqrt(pi), u-window of m
    // samples starting at -sqrt(pi)/2
    let base = n / 2 - m / 2;
    let mut offsets: Vec<(i64, usize)> = Vec::new();
    for n_off in (-big_m)..big_m {
        let start = base + n_off * m;
        if start < 0 || start + m > n {
            continue;
        }
        let start = start as usize;
        let width = m as usize;
        let mass: f64 =
            amps[start..start + width].iter().map(|a| a.norm_sqr()).sum::<f64>() * dx;
        if mass < 1e-14 {
            continue;
        }
        offsets.push((n_off, start));
    }

    let mut rho = [[Complex64::new(0.0, 0.0); 2]; 2];
    for &(na, sa) in &offsets {
        for &(nb, sb) in &offsets {
            let k = na - nb;
            if k.abs() > k_max {
                continue;
            }
            let kern = syndrome_kernel(k);
            if kern == 0.0 {
                continue;
            }
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..m as usize {
                acc += amps[sa + j] * amps[sb + j].conj();
            }
            rho[na.rem_euclid(2) as usize][nb.rem_euclid(2) as usize] += acc * (kern * dx);
        }
    }

    let trace = rho[0][0].re + rho[1][1].re;
    let p0 = rho[0][0].re / trace;
    let p1 = rho[1][1].re / trace;
    QubitDensityMatrix::from_parts(p0, p1, rho[0][1] / trace)
}

/// Map a squeezing sweep of states through the decoder to Bloch vectors.
pub fn ec_bloch_trajectory(states: &[WaveFunction]) -> Result<Vec<BlochVector>> {
    states
        .iter()
        .map(|psi| Ok(ec_qubit_average(psi, DEFAULT_K_MAX)?.bloch_vector()))
        .collect()
}
