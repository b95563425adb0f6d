//! Generators for the scale profiles used in the experiments.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::theory::SigmaProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileKind {
    /// `n` copies of `sigma`.
    Equal,
    /// `m` copies of `sigma` then `n - m` copies of `sigma_prime`.
    TwoLevel,
    /// `ceil(c log n)` ones then `n^alpha`.
    AlphaMixture,
    /// `sigma_i = c i`.
    Quadratic,
    /// `m` scales `sigma <= 1` then `sigma_prime` (default `n`).
    SubsetOfSignals,
    /// A user-supplied list.
    Custom,
}

impl ProfileKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProfileKind::Equal => "equal",
            ProfileKind::TwoLevel => "two_level",
            ProfileKind::AlphaMixture => "alpha_mixture",
            ProfileKind::Quadratic => "quadratic",
            ProfileKind::SubsetOfSignals => "subset_of_signals",
            ProfileKind::Custom => "custom",
        }
    }

    /// Parameter names accepted by this kind.
    pub fn allowed_params(&self) -> &'static [&'static str] {
        match self {
            ProfileKind::Equal => &["sigma"],
            ProfileKind::TwoLevel => &["sigma", "sigma_prime", "m", "m_scale"],
            ProfileKind::AlphaMixture => &["c", "alpha"],
            ProfileKind::Quadratic => &["c"],
            ProfileKind::SubsetOfSignals => &["sigma", "sigma_prime", "m", "m_scale"],
            ProfileKind::Custom => &[],
        }
    }
}

impl std::str::FromStr for ProfileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "equal" => ProfileKind::Equal,
            "two_level" => ProfileKind::TwoLevel,
            "alpha_mixture" => ProfileKind::AlphaMixture,
            "quadratic" => ProfileKind::Quadratic,
            "subset_of_signals" => ProfileKind::SubsetOfSignals,
            "custom" => ProfileKind::Custom,
            other => return Err(Error::param("profile.kind", format!("unknown kind `{other}`"))),
        })
    }
}

/// A named profile family with its parameters and sample size.
///
/// Counts (`m`) may be given directly or, through `m_scale`, as
/// `ceil(m_scale * sqrt(n log n))` so that scaling runs keep the regime.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProfileSpec {
    pub kind: ProfileKind,
    pub params: BTreeMap<String, f64>,
    pub custom: Option<Vec<f64>>,
    pub n: usize,
}

impl ProfileSpec {
    pub fn new(kind: ProfileKind, n: usize) -> Self {
        ProfileSpec {
            kind,
            params: BTreeMap::new(),
            custom: None,
            n,
        }
    }

    pub fn param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn custom(sigmas: Vec<f64>) -> Self {
        ProfileSpec {
            kind: ProfileKind::Custom,
            params: BTreeMap::new(),
            n: sigmas.len(),
            custom: Some(sigmas),
        }
    }

    pub fn with_n(&self, n: usize) -> Self {
        ProfileSpec {
            n,
            ..self.clone()
        }
    }

    fn get(&self, name: &str) -> Option<f64> {
        self.params.get(name).copied()
    }

    fn positive(&self, name: &str, default: Option<f64>) -> Result<f64> {
        let v = self
            .get(name)
            .or(default)
            .ok_or_else(|| Error::param(format!("profile.{name}"), "is required"))?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::param(format!("profile.{name}"), format!("{v} must be positive")));
        }
        Ok(v)
    }

    fn count(&self, default_scale: Option<f64>) -> Result<usize> {
        let n = self.n as f64;
        let m = match (self.get("m"), self.get("m_scale")) {
            (Some(_), Some(_)) => {
                return Err(Error::param("profile.m", "give either m or m_scale, not both"))
            }
            (Some(m), None) => {
                if !(m >= 0.0 && m.fract() == 0.0) {
                    return Err(Error::param("profile.m", format!("{m} is not a count")));
                }
                m
            }
            (None, scale) => {
                let scale = scale
                    .or(default_scale)
                    .ok_or_else(|| Error::param("profile.m", "is required"))?;
                (scale * (n * n.ln()).sqrt()).ceil()
            }
        };
        if m > n {
            return Err(Error::param("profile.m", format!("{m} exceeds n = {}", self.n)));
        }
        Ok(m as usize)
    }
}

/// Builds the scale profile described by `spec`.
pub fn make_profile(spec: &ProfileSpec) -> Result<SigmaProfile> {
    if spec.n == 0 {
        return Err(Error::param("profile.n", "must be positive"));
    }
    let allowed = spec.kind.allowed_params();
    if let Some(unknown) = spec.params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::param(
            format!("profile.{unknown}"),
            format!("not a parameter of `{}`", spec.kind.name()),
        ));
    }
    let n = spec.n;
    let nf = n as f64;
    let sigmas = match spec.kind {
        ProfileKind::Equal => vec![spec.positive("sigma", Some(1.0))?; n],
        ProfileKind::TwoLevel => {
            let sigma = spec.positive("sigma", Some(1.0))?;
            let sigma_prime = spec.positive("sigma_prime", None)?;
            if sigma >= sigma_prime {
                return Err(Error::param(
                    "profile.sigma",
                    format!("sigma = {sigma} must be below sigma_prime = {sigma_prime}"),
                ));
            }
            let m = spec.count(None)?;
            let mut v = vec![sigma; m];
            v.resize(n, sigma_prime);
            v
        }
        ProfileKind::AlphaMixture => {
            let c = spec.positive("c", Some(1.0))?;
            let alpha = spec.get("alpha").ok_or_else(|| Error::param("profile.alpha", "is required"))?;
            if !(alpha > 0.0) {
                return Err(Error::param("profile.alpha", format!("{alpha} must be positive")));
            }
            let m = ((c * nf.ln()).ceil().max(0.0) as usize).min(n);
            let mut v = vec![1.0; m];
            v.resize(n, nf.powf(alpha));
            v
        }
        ProfileKind::Quadratic => {
            let c = spec.positive("c", Some(1.0))?;
            (1..=n).map(|i| c * i as f64).collect()
        }
        ProfileKind::SubsetOfSignals => {
            let sigma = spec.positive("sigma", Some(1.0))?;
            if sigma > 1.0 {
                return Err(Error::param("profile.sigma", format!("{sigma} must be at most 1")));
            }
            let sigma_prime = spec.positive("sigma_prime", Some(nf))?;
            if sigma_prime < sigma {
                return Err(Error::param("profile.sigma_prime", "must be at least sigma"));
            }
            let m = spec.count(Some(4.0))?;
            let mut v = vec![sigma; m];
            v.resize(n, sigma_prime);
            v
        }
        ProfileKind::Custom => {
            let v = spec
                .custom
                .clone()
                .ok_or_else(|| Error::param("profile.sigmas", "is required for custom"))?;
            if v.len() != n {
                return Err(Error::param(
                    "profile.sigmas",
                    format!("has {} entries, n = {n}", v.len()),
                ));
            }
            v
        }
    };
    SigmaProfile::new(sigmas, spec.kind.name())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_and_quadratic() {
        let p = make_profile(&ProfileSpec::new(ProfileKind::Equal, 4).param("sigma", 1.0)).unwrap();
        assert_eq!(p.sigmas(), &[1.0; 4]);
        let p = make_profile(&ProfileSpec::new(ProfileKind::Quadratic, 3).param("c", 2.0)).unwrap();
        assert_eq!(p.sigmas(), &[2.0, 4.0, 6.0]);
    }

    #[test]
    fn alpha_mixture_counts() {
        let spec = ProfileSpec::new(ProfileKind::AlphaMixture, 55)
            .param("c", 1.0)
            .param("alpha", 0.5);
        let p = make_profile(&spec).unwrap();
        // ceil(ln 55) = ceil(4.007) = 5
        let ones = p.sigmas().iter().filter(|&&s| s == 1.0).count();
        assert_eq!(ones, 5);
        assert!(p.sigmas()[5..].iter().all(|&s| (s - 55f64.sqrt()).abs() < 1e-12));
        assert_eq!(p.len(), 55);

        let bad = ProfileSpec::new(ProfileKind::AlphaMixture, 55).param("alpha", 0.0);
        assert!(make_profile(&bad).is_err());
    }

    #[test]
    fn two_level_and_subset() {
        let spec = ProfileSpec::new(ProfileKind::TwoLevel, 10)
            .param("sigma", 1.0)
            .param("sigma_prime", 5.0)
            .param("m", 3.0);
        let p = make_profile(&spec).unwrap();
        assert_eq!(&p.sigmas()[..4], &[1.0, 1.0, 1.0, 5.0]);

        let swapped = spec.clone().param("sigma", 6.0);
        assert!(make_profile(&swapped).is_err());
        let too_many = spec.clone().param("m", 11.0);
        assert!(make_profile(&too_many).is_err());

        let n = 4096usize;
        let p = make_profile(&ProfileSpec::new(ProfileKind::SubsetOfSignals, n)).unwrap();
        let m = (4.0 * ((n as f64) * (n as f64).ln()).sqrt()).ceil() as usize;
        assert_eq!(m, 739);
        assert_eq!(p.sigmas().iter().filter(|&&s| s == 1.0).count(), m);
        assert_eq!(p.sigmas()[n - 1], n as f64);
    }

    #[test]
    fn rejects_unknown_params_and_custom_mismatch() {
        let spec = ProfileSpec::new(ProfileKind::Equal, 4).param("sigma_prime", 2.0);
        let err = make_profile(&spec).unwrap_err();
        assert!(err.to_string().contains("profile.sigma_prime"));

        let mut c = ProfileSpec::custom(vec![3.0, 1.0, 2.0]);
        assert_eq!(make_profile(&c).unwrap().sigmas(), &[1.0, 2.0, 3.0]);
        c.n = 4;
        assert!(make_profile(&c).is_err());
    }
}
