//! Admissible half-lengths for the modal interval.
//!
//! A half-length `s` is admissible when the number of observations with
//! scale at most `s` dominates the fluctuation of the count around the mean:
//!
//! ```text
//! m_s >= kappa * ( sqrt(E D_s(mu) * L) + L ),    L = log(2n / delta)
//! ```

use serde::{Deserialize, Serialize};

use super::family::Family;
use super::profile::SigmaProfile;

/// Which expected-count model feeds the admissibility threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// `E D_s(mu) = sum_i Phi(s / sigma_i)`.
    #[default]
    Exact,
    /// `sum_i min(1, 2 phi(0) s / sigma_i)`, an upper bound valid for
    /// bounded densities.
    BoundedDensity,
}

/// `sum_i Phi(s / sigma_i)`.
pub fn expected_count(profile: &SigmaProfile, family: &Family, s: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    profile.sigmas().iter().map(|sig| family.phi_mass(s / sig)).sum()
}

fn bounded_density_count(profile: &SigmaProfile, family: &Family, s: f64) -> f64 {
    if s <= 0.0 {
        return 0.0;
    }
    let slope = 2.0 * family.phi_at_zero * s;
    profile.sigmas().iter().map(|sig| (slope / sig).min(1.0)).sum()
}

/// Number of scales `sigma_i <= s`; 0 when even `sigma_1` exceeds `s`.
pub fn m_of_s(profile: &SigmaProfile, s: f64) -> usize {
    profile.sigmas().partition_point(|&sig| sig <= s)
}

fn threshold(mass: f64, n: usize, delta: f64, kappa: f64) -> f64 {
    let l = (2.0 * n as f64 / delta).ln();
    kappa * ((mass * l).sqrt() + l)
}

pub fn is_admissible(
    profile: &SigmaProfile,
    family: &Family,
    s: f64,
    delta: f64,
    kappa: f64,
    criterion: Criterion,
) -> bool {
    let mass = match criterion {
        Criterion::Exact => expected_count(profile, family, s),
        Criterion::BoundedDensity => bounded_density_count(profile, family, s),
    };
    m_of_s(profile, s) as f64 >= threshold(mass, profile.len(), delta, kappa)
}

/// Admissibility with an observed count `D_s(mu)` in place of its
/// expectation. Only meaningful in simulations where `mu` is known.
pub fn is_admissible_observed(
    profile: &SigmaProfile,
    s: f64,
    observed_count: usize,
    delta: f64,
    kappa: f64,
) -> bool {
    m_of_s(profile, s) as f64 >= threshold(observed_count as f64, profile.len(), delta, kappa)
}

/// The smallest admissible half-length, if any `s <= sigma_n` qualifies.
///
/// `m_s` is a step function jumping at the scales, and the expected count
/// grows with `s`, so within each step the condition is easiest at the left
/// end. The infimum is therefore attained at one of the scales themselves.
pub fn s_bar(
    profile: &SigmaProfile,
    family: &Family,
    delta: f64,
    kappa: f64,
    criterion: Criterion,
) -> Option<f64> {
    let sig = profile.sigmas();
    let mut last = f64::NAN;
    for &s in sig {
        if s == last {
            continue;
        }
        last = s;
        if is_admissible(profile, family, s, delta, kappa, criterion) {
            return Some(s);
        }
    }
    None
}
