//! Closed-form fidelity and overlap results, used as oracles for the
//! numeric decoders.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Noise pair for the closed forms, with informational regime flags.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormInputs {
    delta_x: f64,
    delta_p: f64,
}

impl ClosedFormInputs {
    pub fn new(delta_x: f64, delta_p: f64) -> Result<Self> {
        if delta_x.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)
            || delta_p.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)
        {
            return Err(Error::BadClosedFormInput { dx: delta_x, dp: delta_p });
        }
        Ok(ClosedFormInputs { delta_x, delta_p })
    }

    pub fn delta_x(&self) -> f64 {
        self.delta_x
    }

    pub fn delta_p(&self) -> f64 {
        self.delta_p
    }

    /// Both delta_x^2 and delta_p^2 well below 1 (threshold 0.1): the
    /// derivation's narrow-peak assumption.
    pub fn small_delta_regime(&self) -> bool {
        self.delta_x * self.delta_x < 0.1 && self.delta_p * self.delta_p < 0.1
    }

    /// delta_x^4 << delta_p^2 (threshold 0.1): the regime in which the
    /// phase factor collapses to e^{-i pi/4} for all relevant comb sites.
    pub fn phase_regime(&self) -> bool {
        self.delta_x.powi(4) < 0.1 * self.delta_p * self.delta_p
    }
}

/// Infinite-squeezing-limit fidelity of the cubic-phase T-gate,
/// F = 1/2 + (1/2) / sqrt(1 + (3 delta_x / 2 delta_p)^2).
///
/// Depends only on the noise ratio; strictly between 1/2 and 1.
pub fn fidelity_closed_form(inputs: &ClosedFormInputs) -> f64 {
    let r = 1.5 * inputs.delta_x / inputs.delta_p;
    0.5 + 0.5 / (1.0 + r * r).sqrt()
}

/// Small-ratio expansion F ~ 1 - (3 delta_x / 4 delta_p)^2, valid for
/// delta_x << delta_p.
pub fn fidelity_asymptotic(inputs: &ClosedFormInputs) -> f64 {
    let r = 0.75 * inputs.delta_x / inputs.delta_p;
    1.0 - r * r
}

/// Closed-form stitched-bin overlap <psi_1|psi_0> for U_T |+_L>:
/// e^{-i pi/4} delta_p / (sqrt(9 dx^2 + 4 dp^2) sqrt(1 + i (3/2) dx^2)).
pub fn overlap_closed_form(inputs: &ClosedFormInputs) -> Complex64 {
    let dx = inputs.delta_x;
    let dp = inputs.delta_p;
    let phase = Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4);
    let root = Complex64::new(1.0, 1.5 * dx * dx).sqrt();
    phase * dp / ((9.0 * dx * dx + 4.0 * dp * dp).sqrt() * root)
}

/// Gaussian integral over the real line: Integral e^{-a x^2 + b x + c} dx
/// = sqrt(pi/a) e^{c + b^2/(4a)}, principal square root, Re(a) > 0.
pub fn gaussian_integral(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    if a.re.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::BadGaussianExponent(a.re));
    }
    Ok((Complex64::new(std::f64::consts::PI, 0.0) / a).sqrt() * (c + b * b / (4.0 * a)).exp())
}
