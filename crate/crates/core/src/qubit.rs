//! Logical qubit content: 2x2 density matrices and Bloch vectors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hermitian, unit-trace, positive-semidefinite 2x2 matrix holding the
/// decoded logical state. Entry (0, 1) carries <psi_1|psi_0> in the decoder
/// conventions used throughout this crate, so |+> maps to bx = +1 and the
/// magic state to (1/sqrt(2), 1/sqrt(2), 0).
#[derive(Debug, Clone, PartialEq)]
pub struct QubitDensityMatrix {
    entries: [[Complex64; 2]; 2],
}

/// (bx, by, bz) with rho = (I + b . sigma)/2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector {
    pub bx: f64,
    pub by: f64,
    pub bz: f64,
}

impl QubitDensityMatrix {
    /// Validates hermiticity (1e-12), unit trace (1e-10) and positivity
    /// (eigenvalues >= -1e-10).
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let herm = (entries[0][1] - entries[1][0].conj()).norm()
            .max(entries[0][0].im.abs())
            .max(entries[1][1].im.abs());
        if herm > 1e-12 {
            return Err(Error::BadDensityMatrix(format!("hermiticity violated by {herm:.3e}")));
        }
        let trace = entries[0][0].re + entries[1][1].re;
        if (trace - 1.0).abs() > 1e-10 {
            return Err(Error::BadDensityMatrix(format!("trace = {trace}")));
        }
        let rho = QubitDensityMatrix { entries };
        let (lo, _) = rho.eigenvalues();
        if lo < -1e-10 {
            return Err(Error::BadDensityMatrix(format!("negative eigenvalue {lo:.3e}")));
        }
        Ok(rho)
    }

    /// Assembles rho from the diagonal populations and the (0,1) coherence;
    /// the (1,0) entry is set to the conjugate, so hermiticity is exact.
    pub fn from_parts(p0: f64, p1: f64, coherence01: Complex64) -> Result<Self> {
        QubitDensityMatrix::new([
            [Complex64::new(p0, 0.0), coherence01],
            [coherence01.conj(), Complex64::new(p1, 0.0)],
        ])
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn trace(&self) -> f64 {
        self.entries[0][0].re + self.entries[1][1].re
    }

    /// Eigenvalues (min, max) of the Hermitian matrix.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let t = self.trace();
        let d = (self.entries[0][0] * self.entries[1][1]
            - self.entries[0][1] * self.entries[1][0])
            .re;
        let disc = (t * t - 4.0 * d).max(0.0).sqrt();
        ((t - disc) / 2.0, (t + disc) / 2.0)
    }

    /// Fidelity <T|rho|T> to the magic state |T> = (|0> + e^{i pi/4}|1>)/sqrt(2).
    pub fn fidelity_to_magic(&self) -> f64 {
        let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        0.5 * self.trace() + (phase * self.entries[0][1]).re
    }

    /// Fidelity <psi|rho|psi> to a pure qubit state (a, b).
    pub fn fidelity_to_pure(&self, a: Complex64, b: Complex64) -> f64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let v = [a, b];
        for r in 0..2 {
            for c in 0..2 {
                acc += v[r].conj() * self.entries[r][c] * v[c];
            }
        }
        acc.re
    }

    /// Uhlmann fidelity between two qubit density matrices,
    /// F = tr(rho sigma) + 2 sqrt(det rho det sigma).
    pub fn fidelity(&self, other: &QubitDensityMatrix) -> f64 {
        let mut tr = Complex64::new(0.0, 0.0);
        for r in 0..2 {
            for c in 0..2 {
                tr += self.entries[r][c] * other.entries[c][r];
            }
        }
        let det = |m: &QubitDensityMatrix| {
            (m.entries[0][0] * m.entries[1][1] - m.entries[0][1] * m.entries[1][0]).re
        };
        tr.re + 2.0 * (det(self).max(0.0) * det(other).max(0.0)).sqrt()
    }

    /// Bloch vector, fixed by |+> -> (1, 0, 0) and |0> -> (0, 0, 1).
    pub fn bloch_vector(&self) -> BlochVector {
        BlochVector {
            bx: 2.0 * self.entries[0][1].re,
            by: -2.0 * self.entries[0][1].im,
            bz: (self.entries[0][0] - self.entries[1][1]).re,
        }
    }

    /// JSON object with re/im pairs for the four entries.
    pub fn to_json(&self) -> serde_json::Value {
        let c = |z: Complex64| serde_json::json!({ "re": z.re, "im": z.im });
        serde_json::json!({
            "rho00": c(self.entries[0][0]),
            "rho01": c(self.entries[0][1]),
            "rho10": c(self.entries[1][0]),
            "rho11": c(self.entries[1][1]),
        })
    }
}

impl BlochVector {
    pub fn norm(&self) -> f64 {
        (self.bx * self.bx + self.by * self.by + self.bz * self.bz).sqrt()
    }

    pub const CSV_HEADER: &'static str = "bx,by,bz";

    pub fn to_csv_row(&self) -> String {
        format!("{:.16e},{:.16e},{:.16e}", self.bx, self.by, self.bz)
    }
}
