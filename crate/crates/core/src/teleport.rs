//! Two-mode simulation of T-gate teleportation with a GKP magic state.
//!
//! Circuit convention: the data mode is the CSUM control, the magic ancilla
//! the target; the ancilla is measured in x; outcome bit 1 triggers the
//! logical S correction (S T^dag = T). Outcomes are kept at grid resolution
//! and each conditional state is decoded with the ideal-EC average.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::ec::ec_qubit_average;
use crate::error::{Error, Result};
use crate::gates::apply_shear;
use crate::gkp::{logical_state, LogicalLabel, SqueezingSpec};
use crate::grid::{quadrature_dft, FftDirection, Grid, Representation, WaveFunction, SQRT_PI};
use crate::qubit::QubitDensityMatrix;

/// Complex amplitudes Psi(x1_i, x2_j) on grid1 x grid2, row-major in mode 1.
#[derive(Debug, Clone)]
pub struct TwoModeWaveFunction {
    grid1: Grid,
    grid2: Grid,
    rep1: Representation,
    rep2: Representation,
    amplitudes: Vec<Complex64>,
}

impl TwoModeWaveFunction {
    pub fn grid1(&self) -> &Grid {
        &self.grid1
    }

    pub fn grid2(&self) -> &Grid {
        &self.grid2
    }

    pub fn amplitude(&self, i: usize, j: usize) -> Complex64 {
        self.amplitudes[i * self.grid2.n_points() + j]
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>()
            * self.grid1.dx()
            * self.grid2.dx()
    }

    /// Position density of mode 2 with mode 1 integrated out.
    pub fn mode2_marginal(&self) -> Vec<f64> {
        let n1 = self.grid1.n_points();
        let n2 = self.grid2.n_points();
        let mut out = vec![0.0; n2];
        for i in 0..n1 {
            let row = &self.amplitudes[i * n2..(i + 1) * n2];
            for (j, a) in row.iter().enumerate() {
                out[j] += a.norm_sqr();
            }
        }
        for v in out.iter_mut() {
            *v *= self.grid1.dx();
        }
        out
    }
}

/// Product state Psi(x1, x2) = psi1(x1) psi2(x2).
pub fn tensor(psi1: &WaveFunction, psi2: &WaveFunction) -> Result<TwoModeWaveFunction> {
    for psi in [psi1, psi2] {
        if psi.representation() != Representation::Position {
            return Err(Error::RepresentationMismatch {
                expected: Representation::Position,
                got: psi.representation(),
            });
        }
    }
    let n2 = psi2.grid().n_points();
    let mut amplitudes = Vec::with_capacity(psi1.grid().n_points() * n2);
    for a in psi1.amplitudes() {
        for b in psi2.amplitudes() {
            amplitudes.push(a * b);
        }
    }
    Ok(TwoModeWaveFunction {
        grid1: psi1.grid().clone(),
        grid2: psi2.grid().clone(),
        rep1: Representation::Position,
        rep2: Representation::Position,
        amplitudes,
    })
}

/// CSUM e^{-i x1 p2}: mode 2 is taken to momentum row by row, multiplied by
/// e^{-i x1 p2}, and transformed back. Equals Psi(x1, x2 - x1) with periodic
/// wrap when x1 sits on the mode-2 lattice.
pub fn apply_csum(psi: &TwoModeWaveFunction) -> Result<TwoModeWaveFunction> {
    if psi.rep1 != Representation::Position || psi.rep2 != Representation::Position {
        return Err(Error::RepresentationMismatch {
            expected: Representation::Position,
            got: if psi.rep1 != Representation::Position { psi.rep1 } else { psi.rep2 },
        });
    }
    if !psi.grid2.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let n2 = psi.grid2.n_points();
    let dual = psi.grid2.dual();
    let inv_n = 1.0 / n2 as f64;
    let mut out = psi.clone();
    let grid1 = psi.grid1.clone();
    out.amplitudes
        .par_chunks_mut(n2)
        .enumerate()
        .for_each(|(i, row)| {
            let x1 = grid1.point(i);
            quadrature_dft(row, FftDirection::Forward);
            for (k, a) in row.iter_mut().enumerate() {
                *a *= Complex64::from_polar(inv_n, -x1 * dual.point(k));
            }
            quadrature_dft(row, FftDirection::Inverse);
        });
    Ok(out)
}

/// One homodyne outcome: the measured x2 value, its probability mass, and
/// the normalized conditional mode-1 state.
#[derive(Debug, Clone)]
pub struct MeasurementOutcome {
    pub outcome: f64,
    pub weight: f64,
    pub state: WaveFunction,
}

/// Grid-resolution decomposition over mode-2 homodyne outcomes.
#[derive(Debug, Clone)]
pub struct MeasurementEnsemble {
    pub outcomes: Vec<MeasurementOutcome>,
}

impl MeasurementEnsemble {
    pub fn total_weight(&self) -> f64 {
        self.outcomes.iter().map(|o| o.weight).sum()
    }
}

/// Ideal x-measurement of mode 2: column j carries probability mass
/// dx2 * sum_i |Psi(i,j)|^2 dx1; columns below 1e-16 are omitted.
pub fn measure_mode2(psi: &TwoModeWaveFunction) -> MeasurementEnsemble {
    let n1 = psi.grid1.n_points();
    let n2 = psi.grid2.n_points();
    let outcomes: Vec<MeasurementOutcome> = (0..n2)
        .into_par_iter()
        .filter_map(|j| {
            let mut col = Vec::with_capacity(n1);
            let mut mass = 0.0;
            for i in 0..n1 {
                let a = psi.amplitudes[i * n2 + j];
                mass += a.norm_sqr();
                col.push(a);
            }
            let weight = mass * psi.grid1.dx() * psi.grid2.dx();
            if weight < 1e-16 {
                return None;
            }
            let scale = 1.0 / (mass * psi.grid1.dx()).sqrt();
            for a in col.iter_mut() {
                *a *= scale;
            }
            Some(MeasurementOutcome {
                outcome: psi.grid2.point(j),
                weight,
                state: WaveFunction::new(psi.grid1.clone(), Representation::Position, col),
            })
        })
        .collect();
    MeasurementEnsemble { outcomes }
}

/// Full teleportation gadget with a caller-supplied ancilla state.
pub fn teleport_t_with_ancilla(
    psi_in: &WaveFunction,
    ancilla: &WaveFunction,
    k_max: i64,
) -> Result<QubitDensityMatrix> {
    let joint = apply_csum(&tensor(psi_in, ancilla)?)?;
    let ensemble = measure_mode2(&joint);
    let decoded: Vec<(f64, QubitDensityMatrix)> = ensemble
        .outcomes
        .into_par_iter()
        .map(|o| {
            let bit = (o.outcome / SQRT_PI).round() as i64;
            let state = if bit.rem_euclid(2) == 1 {
                apply_shear(&o.state, 1.0)?
            } else {
                o.state
            };
            Ok((o.weight, ec_qubit_average(&state, k_max)?))
        })
        .collect::<Result<_>>()?;
    let mut acc = [[Complex64::new(0.0, 0.0); 2]; 2];
    let mut total = 0.0;
    for (w, rho) in &decoded {
        total += w;
        for (r, row) in acc.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell += rho.entry(r, c) * *w;
            }
        }
    }
    QubitDensityMatrix::from_parts(
        acc[0][0].re / total,
        acc[1][1].re / total,
        acc[0][1] / total,
    )
}

/// T-gate via gate teleportation: the magic ancilla is built at the given
/// squeezing on the input state's grid, which must be self-dual and
/// commensurate.
pub fn teleport_t(
    psi_in: &WaveFunction,
    ancilla: SqueezingSpec,
    k_max: i64,
) -> Result<QubitDensityMatrix> {
    if !psi_in.grid().is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let magic = logical_state(LogicalLabel::Magic, ancilla, psi_in.grid())?;
    teleport_t_with_ancilla(psi_in, &magic, k_max)
}
