use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use libm::erf;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Gaussian,
    /// Laplace scaled to unit variance.
    Laplace,
}

/// A standardised noise density `phi` (zero mean, unit variance, symmetric,
/// unimodal) with its value at zero and its exponential tail constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub phi_at_zero: f64,
    pub beta: f64,
}

impl Family {
    pub fn gaussian() -> Self {
        Family {
            kind: FamilyKind::Gaussian,
            phi_at_zero: 1.0 / (2.0 * PI).sqrt(),
            beta: (2.0 / PI).sqrt(),
        }
    }

    pub fn laplace() -> Self {
        Family {
            kind: FamilyKind::Laplace,
            phi_at_zero: FRAC_1_SQRT_2,
            beta: SQRT_2,
        }
    }

    pub fn of(kind: FamilyKind) -> Self {
        match kind {
            FamilyKind::Gaussian => Self::gaussian(),
            FamilyKind::Laplace => Self::laplace(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            FamilyKind::Gaussian => "gaussian",
            FamilyKind::Laplace => "laplace",
        }
    }

    /// `Phi(t)`, the mass of `[-t, t]` under the standardised density.
    pub fn phi_mass(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        match self.kind {
            FamilyKind::Gaussian => erf(t / SQRT_2),
            FamilyKind::Laplace => -(-SQRT_2 * t).exp_m1(),
        }
    }

    pub fn density(&self, x: f64) -> f64 {
        match self.kind {
            FamilyKind::Gaussian => self.phi_at_zero * (-0.5 * x * x).exp(),
            FamilyKind::Laplace => self.phi_at_zero * (-SQRT_2 * x.abs()).exp(),
        }
    }

    /// Distribution function of the standardised variable.
    pub fn cdf(&self, x: f64) -> f64 {
        if x == f64::INFINITY {
            return 1.0;
        }
        if x == f64::NEG_INFINITY {
            return 0.0;
        }
        let half_mass = 0.5 * self.phi_mass(x.abs());
        if x >= 0.0 {
            0.5 + half_mass
        } else {
            0.5 - half_mass
        }
    }

    /// One standardised draw.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self.kind {
            FamilyKind::Gaussian => rng.sample(StandardNormal),
            FamilyKind::Laplace => {
                // inverse cdf with scale 1/sqrt(2); u in (-1/2, 1/2)
                let u: f64 = rng.random::<f64>() - 0.5;
                let tail = (1.0 - 2.0 * u.abs()).max(f64::MIN_POSITIVE);
                -FRAC_1_SQRT_2 * u.signum() * tail.ln()
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" | "normal" => Ok(Family::gaussian()),
            "laplace" => Ok(Family::laplace()),
            other => Err(Error::param("family", format!("`{other}` is not gaussian|laplace"))),
        }
    }
}
