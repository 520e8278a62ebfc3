//! Uniform position grids and single-mode wavefunctions.
//!
//! A [`Grid`] is a uniform lattice x_j = -x_max + j*dx with a power-of-two
//! point count, in natural units (hbar = 1, vacuum variance 1/2). Grids
//! constructed as *commensurate* have dx = sqrt(pi)/m and x_max = M*sqrt(pi)
//! for integers m, M, so every multiple of sqrt(pi) in range is an exact
//! lattice point; all GKP machinery downstream relies on that alignment.
//!
//! The position/momentum duality is realized by a phase-corrected DFT with
//! the e^{-ipx} kernel, so that x = 0 and p = 0 sit at index n/2 on both
//! lattices and the transform is exactly unitary on the grid. The dual of a
//! commensurate grid is again commensurate, with m and M exchanged; a grid
//! with m = M is self-dual (the momentum lattice coincides with the position
//! lattice), which is what the Fourier gate requires.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// sqrt(pi) in f64; the GKP lattice unit.
pub const SQRT_PI: f64 = 1.772_453_850_905_516;

/// Which quadrature the samples of a [`WaveFunction`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    Position,
    Momentum,
}

/// sqrt(pi)-lattice metadata for commensurate grids.
///
/// `halfwidth_units` is M (x_max = M*sqrt(pi)) and `samples_per_unit` is m
/// (dx = sqrt(pi)/m). Both are powers of two whenever n_points is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqrtPiLattice {
    pub halfwidth_units: usize,
    pub samples_per_unit: usize,
}

/// Uniform 1-D lattice covering [-x_max, x_max).
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    x_max: f64,
    n_points: usize,
    dx: f64,
    lattice: Option<SqrtPiLattice>,
}

fn check_n_points(n: usize) -> Result<()> {
    if n < 16 || !n.is_power_of_two() {
        return Err(Error::BadPointCount(n));
    }
    Ok(())
}

impl Grid {
    /// Plain grid: x_max taken as given, no sqrt(pi) alignment.
    pub fn plain(x_max: f64, n_points: usize) -> Result<Self> {
        check_n_points(n_points)?;
        if !x_max.is_finite() || x_max <= 0.0 {
            return Err(Error::BadHalfWidth(x_max));
        }
        let dx = 2.0 * x_max / n_points as f64;
        Ok(Grid { x_max, n_points, dx, lattice: None })
    }

    /// Commensurate grid: x_max is adjusted to the nearest M*sqrt(pi) and
    /// dx to sqrt(pi)/m with m = n_points/(2M), which must be an integer.
    pub fn commensurate(x_max: f64, n_points: usize) -> Result<Self> {
        check_n_points(n_points)?;
        if !x_max.is_finite() || x_max <= 0.0 {
            return Err(Error::BadHalfWidth(x_max));
        }
        let m_units = ((x_max / SQRT_PI).round() as usize).max(1);
        Self::from_lattice(m_units, n_points)
    }

    /// Commensurate grid given the halfwidth M in units of sqrt(pi).
    pub fn from_lattice(halfwidth_units: usize, n_points: usize) -> Result<Self> {
        check_n_points(n_points)?;
        if halfwidth_units == 0 || !n_points.is_multiple_of(2 * halfwidth_units) {
            return Err(Error::NoCommensurateLattice { m: halfwidth_units, n: n_points });
        }
        let samples_per_unit = n_points / (2 * halfwidth_units);
        // M is a power of two because n_points is; x_max = M*sqrt(pi) and
        // dx = sqrt(pi)/m are then exact f64 scalings of SQRT_PI.
        let x_max = halfwidth_units as f64 * SQRT_PI;
        let dx = 2.0 * x_max / n_points as f64;
        Ok(Grid {
            x_max,
            n_points,
            dx,
            lattice: Some(SqrtPiLattice { halfwidth_units, samples_per_unit }),
        })
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn lattice(&self) -> Option<SqrtPiLattice> {
        self.lattice
    }

    /// Index of x = 0 (and of p = 0 on the dual grid).
    pub fn center(&self) -> usize {
        self.n_points / 2
    }

    /// Coordinate of lattice point j.
    pub fn point(&self, j: usize) -> f64 {
        (j as f64 - (self.n_points / 2) as f64) * self.dx
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(|j| self.point(j))
    }

    /// The momentum lattice conjugate to this grid: same point count,
    /// p_max = pi/dx. For a commensurate grid this swaps m and M.
    pub fn dual(&self) -> Grid {
        let p_max = std::f64::consts::PI / self.dx;
        let dp = 2.0 * p_max / self.n_points as f64;
        let lattice = self.lattice.map(|l| SqrtPiLattice {
            halfwidth_units: l.samples_per_unit,
            samples_per_unit: l.halfwidth_units,
        });
        Grid { x_max: p_max, n_points: self.n_points, dx: dp, lattice }
    }

    /// True when the momentum lattice coincides with the position lattice.
    pub fn is_self_dual(&self) -> bool {
        match self.lattice {
            Some(l) => l.halfwidth_units == l.samples_per_unit,
            None => (self.x_max * self.dx - std::f64::consts::PI).abs() < 1e-12,
        }
    }
}

/// Complex amplitudes psi(x_j) on a [`Grid`], tagged with the quadrature
/// they sample. The tag flips under the Fourier transform and nowhere else.
#[derive(Debug, Clone)]
pub struct WaveFunction {
    grid: Grid,
    representation: Representation,
    amplitudes: Vec<Complex64>,
}

impl WaveFunction {
    pub fn new(grid: Grid, representation: Representation, amplitudes: Vec<Complex64>) -> Self {
        assert_eq!(grid.n_points(), amplitudes.len(), "amplitude count must match the grid");
        WaveFunction { grid, representation, amplitudes }
    }

    /// All-zero amplitudes; useful as a build buffer.
    pub fn zeros(grid: Grid, representation: Representation) -> Self {
        let n = grid.n_points();
        WaveFunction::new(grid, representation, vec![Complex64::new(0.0, 0.0); n])
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn representation(&self) -> Representation {
        self.representation
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    /// L2 norm squared: sum |psi_j|^2 dx.
    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>() * self.grid.dx()
    }

    pub fn normalized(&self) -> Result<WaveFunction> {
        let n2 = self.norm_sq();
        if !n2.is_finite() || n2 <= 0.0 {
            return Err(Error::ZeroNorm);
        }
        let scale = 1.0 / n2.sqrt();
        let mut out = self.clone();
        for a in out.amplitudes.iter_mut() {
            *a *= scale;
        }
        Ok(out)
    }

    /// Quadrature inner product <self|other> = sum conj(self_j) other_j dx.
    pub fn inner_product(&self, other: &WaveFunction) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        if self.representation != other.representation {
            return Err(Error::RepresentationMismatch {
                expected: self.representation,
                got: other.representation,
            });
        }
        let acc: Complex64 = self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(acc * self.grid.dx())
    }

    /// Probability density per unit length, |psi_j|^2.
    pub fn density(&self) -> DensityProfile {
        DensityProfile {
            grid: self.grid.clone(),
            axis: self.representation,
            values: self.amplitudes.iter().map(|a| a.norm_sqr()).collect(),
        }
    }

    /// Unitary transform to the momentum representation,
    /// psi~(p) = (2 pi)^{-1/2} Integral dx e^{-ipx} psi(x).
    pub fn to_momentum(&self) -> Result<WaveFunction> {
        if self.representation != Representation::Position {
            return Err(Error::RepresentationMismatch {
                expected: Representation::Position,
                got: self.representation,
            });
        }
        let mut amps = self.amplitudes.clone();
        quadrature_dft(&mut amps, FftDirection::Forward);
        let scale = Complex64::new(self.grid.dx() / (2.0 * std::f64::consts::PI).sqrt(), 0.0);
        for a in amps.iter_mut() {
            *a *= scale;
        }
        Ok(WaveFunction::new(self.grid.dual(), Representation::Momentum, amps))
    }

    /// Inverse transform back to the position representation.
    pub fn to_position(&self) -> Result<WaveFunction> {
        if self.representation != Representation::Momentum {
            return Err(Error::RepresentationMismatch {
                expected: Representation::Momentum,
                got: self.representation,
            });
        }
        let mut amps = self.amplitudes.clone();
        quadrature_dft(&mut amps, FftDirection::Inverse);
        let scale =
            Complex64::new(self.grid.dx() / (2.0 * std::f64::consts::PI).sqrt(), 0.0);
        for a in amps.iter_mut() {
            *a *= scale;
        }
        Ok(WaveFunction::new(self.grid.dual(), Representation::Position, amps))
    }

    /// CSV serialization with header `x,re,im` (or `p,re,im`).
    pub fn to_csv(&self) -> String {
        let label = match self.representation {
            Representation::Position => "x",
            Representation::Momentum => "p",
        };
        let mut out = format!("{label},re,im\n");
        for (j, a) in self.amplitudes.iter().enumerate() {
            out.push_str(&format!("{:.16e},{:.16e},{:.16e}\n", self.grid.point(j), a.re, a.im));
        }
        out
    }
}

pub(crate) enum FftDirection {
    Forward,
    Inverse,
}

/// Quadrature DFT with the grid's index-centered phase convention:
/// out_k = sum_j e^{-i p_k x_j} in_j (forward; conjugate kernel inverse,
/// divided by n). With x_j = (j - n/2) dx and p_k = (k - n/2) dp this is
/// (-1)^k FFT[(-1)^j in_j]_k for n divisible by 4.
pub(crate) fn quadrature_dft(amps: &mut [Complex64], direction: FftDirection) {
    let n = amps.len();
    debug_assert!(n.is_multiple_of(4));
    for (j, a) in amps.iter_mut().enumerate() {
        if j % 2 == 1 {
            *a = -*a;
        }
    }
    let mut planner = FftPlanner::<f64>::new();
    let fft = match direction {
        FftDirection::Forward => planner.plan_fft_forward(n),
        FftDirection::Inverse => planner.plan_fft_inverse(n),
    };
    fft.process(amps);
    // No 1/n here: the inverse quadrature weight dp satisfies dx*dp*n = 2 pi,
    // so the caller's dp/sqrt(2 pi) prefactor already makes the pair unitary.
    for (k, a) in amps.iter_mut().enumerate() {
        if k % 2 == 1 {
            *a = -*a;
        }
    }
}

/// Probability density per unit length on a grid; integrals (not sums)
/// equal probabilities.
#[derive(Debug, Clone)]
pub struct DensityProfile {
    grid: Grid,
    axis: Representation,
    values: Vec<f64>,
}

impl DensityProfile {
    pub fn new(grid: Grid, axis: Representation, values: Vec<f64>) -> Self {
        assert_eq!(grid.n_points(), values.len());
        DensityProfile { grid, axis, values }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn axis(&self) -> Representation {
        self.axis
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Integral of the density over the grid.
    pub fn total(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.grid.dx()
    }

    /// Sum the density over values of the coordinate mod `period`,
    /// returning a profile supported on one period centered at 0.
    /// The period must be an integer multiple of dx.
    pub fn fold(&self, period: f64) -> Result<DensityProfile> {
        let dx = self.grid.dx();
        let ratio = period / dx;
        let len = ratio.round();
        if !period.is_finite() || period <= 0.0
            || (ratio - len).abs() > 1e-9 * ratio.abs().max(1.0)
        {
            return Err(Error::IncommensuratePeriod { period, dx });
        }
        let len = len as usize;
        if len < 16 || !len.is_power_of_two() {
            return Err(Error::BadFoldLattice(len));
        }
        let n = self.grid.n_points();
        let half = (n / 2) as i64;
        let l = len as i64;
        let mut folded = vec![0.0; len];
        for (j, v) in self.values.iter().enumerate() {
            // map x_j to the fundamental window [-period/2, period/2)
            let r = (j as i64 - half + l / 2).rem_euclid(l);
            folded[r as usize] += v;
        }
        let lattice = self.grid.lattice.and_then(|lat| {
            let mu = lat.samples_per_unit;
            len.is_multiple_of(2 * mu).then_some(SqrtPiLattice {
                halfwidth_units: len / (2 * mu),
                samples_per_unit: mu,
            })
        });
        let out_grid = Grid { x_max: period / 2.0, n_points: len, dx, lattice };
        Ok(DensityProfile { grid: out_grid, axis: self.axis, values: folded })
    }

    /// CSV serialization with header `x,value` (or `p,value`).
    pub fn to_csv(&self) -> String {
        let label = match self.axis {
            Representation::Position => "x",
            Representation::Momentum => "p",
        };
        let mut out = format!("{label},value\n");
        for (j, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{:.16e},{:.16e}\n", self.grid.point(j), v));
        }
        out
    }
}
