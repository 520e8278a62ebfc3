//! Approximate square-lattice GKP states.
//!
//! Computational basis states are sums of position-squeezed Gaussians of
//! width delta_x centered at (2s + mu) sqrt(pi), weighted by the Gaussian
//! envelope exp(-pi (2s+mu)^2 delta_p^2 / 2), and normalized by quadrature
//! on the grid. Peaks are generated analytically per grid point within a
//! 9.5-sigma window around each center, so construction is
//! O(n_peaks * peak_width / dx).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Grid, Representation, WaveFunction};

/// Per-peak noise parameters (delta_x, delta_p) of an approximate GKP state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezingSpec {
    delta_x: f64,
    delta_p: f64,
}

/// Squeezing in decibels: dB = -10 log10(delta^2).
pub fn delta_to_db(delta: f64) -> f64 {
    -10.0 * (delta * delta).log10()
}

/// Inverse of [`delta_to_db`]: delta = 10^(-dB/20).
pub fn db_to_delta(db: f64) -> f64 {
    10f64.powf(-db / 20.0)
}

impl SqueezingSpec {
    pub fn new(delta_x: f64, delta_p: f64) -> Result<Self> {
        if !delta_x.is_finite() || delta_x <= 0.0 {
            return Err(Error::BadSqueezing(delta_x));
        }
        if !delta_p.is_finite() || delta_p <= 0.0 {
            return Err(Error::BadSqueezing(delta_p));
        }
        Ok(SqueezingSpec { delta_x, delta_p })
    }

    /// Symmetric noise from a single dB figure.
    pub fn symmetric_db(db: f64) -> Result<Self> {
        let d = db_to_delta(db);
        SqueezingSpec::new(d, d)
    }

    pub fn from_db(db_x: f64, db_p: f64) -> Result<Self> {
        SqueezingSpec::new(db_to_delta(db_x), db_to_delta(db_p))
    }

    pub fn delta_x(&self) -> f64 {
        self.delta_x
    }

    pub fn delta_p(&self) -> f64 {
        self.delta_p
    }
}

/// Logical states constructible from the two basis combs.
///
/// `Magic` is (|0_L> + e^{i pi/4} |1_L>)/norm, i.e. the target state of the
/// T-gate acting on |+_L>.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogicalLabel {
    Zero,
    One,
    Plus,
    Minus,
    Magic,
}

/// Relative envelope amplitude of peak n, normalized to the innermost peak
/// of the same parity. Working relative to the parity minimum keeps large
/// delta_p cases (where every absolute weight underflows) well-defined.
fn envelope_amplitude(n: i64, n0: i64, delta_p: f64) -> f64 {
    let d2 = delta_p * delta_p;
    (-std::f64::consts::PI * ((n * n - n0 * n0) as f64) * d2 / 2.0).exp()
}

/// Computational basis comb |mu_L> on a commensurate grid.
pub fn gkp_basis(mu: u8, squeezing: SqueezingSpec, grid: &Grid) -> Result<WaveFunction> {
    if mu > 1 {
        return Err(Error::BadBit(mu));
    }
    let lattice = grid.lattice().ok_or(Error::NotCommensurate)?;
    let m_units = lattice.halfwidth_units as i64;
    let samples = lattice.samples_per_unit as i64;
    let n0 = mu as i64;
    let dp = squeezing.delta_p();
    let dxn = squeezing.delta_x();

    // Envelope truncation check: probability weight of parity peaks whose
    // centers fall outside the grid must be < 1e-12 of the total.
    let mut inside = 0.0;
    let mut outside = 0.0;
    let mut n = n0;
    loop {
        let a = envelope_amplitude(n, n0, dp);
        let w = a * a;
        if w < 1e-32 {
            break;
        }
        let mirrored = if n == 0 { 1.0 } else { 2.0 };
        if n < m_units {
            inside += mirrored * w;
        } else {
            outside += mirrored * w;
        }
        n += 2;
    }
    let tail = outside / (inside + outside);
    if tail >= 1e-12 {
        return Err(Error::EnvelopeTruncation { tail });
    }

    let mut n_cut = n0;
    while envelope_amplitude(n_cut, n0, dp) >= 1e-16 {
        n_cut += 2;
    }
    let mut wf = WaveFunction::zeros(grid.clone(), Representation::Position);
    let n_points = grid.n_points() as i64;
    let window = ((9.5 * dxn / grid.dx()).ceil() as i64).max(1);
    let two_var = 2.0 * dxn * dxn;
    for peak in (-n_cut..=n_cut).filter(|n| n.rem_euclid(2) == n0) {
        let amp = envelope_amplitude(peak, n0, dp);
        if amp < 1e-16 || peak.abs() >= m_units {
            continue;
        }
        let center_idx = n_points / 2 + peak * samples;
        let center = grid.point(center_idx as usize);
        let lo = (center_idx - window).max(0);
        let hi = (center_idx + window).min(n_points - 1);
        for j in lo..=hi {
            let x = grid.point(j as usize);
            let d = x - center;
            wf.amplitudes_mut()[j as usize] += Complex64::new(amp * (-d * d / two_var).exp(), 0.0);
        }
    }
    wf.normalized()
}

/// Logical state factory; normalization uses the actual numeric overlap of
/// the two basis combs rather than assuming orthogonality.
pub fn logical_state(
    label: LogicalLabel,
    squeezing: SqueezingSpec,
    grid: &Grid,
) -> Result<WaveFunction> {
    match label {
        LogicalLabel::Zero => gkp_basis(0, squeezing, grid),
        LogicalLabel::One => gkp_basis(1, squeezing, grid),
        LogicalLabel::Plus => superpose(squeezing, grid, Complex64::new(1.0, 0.0)),
        LogicalLabel::Minus => superpose(squeezing, grid, Complex64::new(-1.0, 0.0)),
        LogicalLabel::Magic => superpose(
            squeezing,
            grid,
            Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
        ),
    }
}

fn superpose(squeezing: SqueezingSpec, grid: &Grid, coeff_one: Complex64) -> Result<WaveFunction> {
    let zero = gkp_basis(0, squeezing, grid)?;
    let one = gkp_basis(1, squeezing, grid)?;
    let mut wf = WaveFunction::zeros(grid.clone(), Representation::Position);
    for (out, (a, b)) in wf
        .amplitudes_mut()
        .iter_mut()
        .zip(zero.amplitudes().iter().zip(one.amplitudes()))
    {
        *out = a + coeff_one * b;
    }
    wf.normalized()
}
