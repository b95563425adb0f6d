//! Synthetic heteroscedastic samples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::theory::{Family, SigmaProfile};

/// A generated sample with the scale that produced each value.
#[derive(Debug, Clone, PartialEq)]
pub struct Labelled {
    pub values: Vec<f64>,
    pub sigmas: Vec<f64>,
}

/// Draws `X_i = mu + sigma_i Z_i` in profile order (sorted by scale).
pub fn draw_in_profile_order<R: Rng + ?Sized>(
    rng: &mut R,
    mu: f64,
    profile: &SigmaProfile,
    family: &Family,
) -> Labelled {
    let sigmas = profile.sigmas().to_vec();
    let values = sigmas.iter().map(|s| mu + s * family.draw(rng)).collect();
    Labelled { values, sigmas }
}

/// As [`draw_in_profile_order`], then shuffles the pairs so that position
/// carries no information about the scale.
pub fn gen_labelled<R: Rng + ?Sized>(
    rng: &mut R,
    mu: f64,
    profile: &SigmaProfile,
    family: &Family,
) -> Labelled {
    let drawn = draw_in_profile_order(rng, mu, profile, family);
    let mut order: Vec<usize> = (0..drawn.values.len()).collect();
    order.shuffle(rng);
    Labelled {
        values: order.iter().map(|&i| drawn.values[i]).collect(),
        sigmas: order.iter().map(|&i| drawn.sigmas[i]).collect(),
    }
}

/// `n` shuffled draws from the heteroscedastic model.
pub fn gen_sample<R: Rng + ?Sized>(
    rng: &mut R,
    mu: f64,
    profile: &SigmaProfile,
    family: &Family,
) -> Vec<f64> {
    gen_labelled(rng, mu, profile, family).values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::rng::substream;

    fn moments(family: Family) -> (f64, f64) {
        let mut rng = substream(3, &[family.kind as u64]);
        let n = 1_000_000;
        let (mut s, mut ss) = (0.0, 0.0);
        for _ in 0..n {
            let z = family.draw(&mut rng);
            s += z;
            ss += z * z;
        }
        let mean = s / n as f64;
        (mean, ss / n as f64 - mean * mean)
    }

    #[test]
    fn unit_moments() {
        for family in [Family::gaussian(), Family::laplace()] {
            let (mean, var) = moments(family);
            assert!(mean.abs() <= 0.005, "{}: mean {mean}", family.name());
            assert!((0.99..=1.01).contains(&var), "{}: var {var}", family.name());
        }
    }

    #[test]
    fn gaussian_tail_fraction() {
        let expected = libm::erfc(3.0 / std::f64::consts::SQRT_2);
        let family = Family::gaussian();
        let mut rng = substream(5, &[]);
        let n = 1_000_000;
        let hits = (0..n).filter(|_| family.draw(&mut rng).abs() >= 3.0).count();
        let frac = hits as f64 / n as f64;
        assert!((frac - expected).abs() <= 0.0005, "{frac} vs {expected}");
    }

    #[test]
    fn degenerate_scale() {
        let profile = SigmaProfile::new(vec![1e-12; 100], "tiny").unwrap();
        let mut rng = substream(1, &[]);
        let xs = gen_sample(&mut rng, 3.5, &profile, &Family::laplace());
        assert_eq!(xs.len(), 100);
        assert!(xs.iter().all(|x| (x - 3.5).abs() <= 1e-9));
    }

    #[test]
    fn shuffle_keeps_pairs() {
        let profile = SigmaProfile::new((1..=50).map(f64::from).collect(), "q").unwrap();
        let family = Family::gaussian();
        let sorted = draw_in_profile_order(&mut substream(9, &[]), 0.0, &profile, &family);
        let shuffled = gen_labelled(&mut substream(9, &[]), 0.0, &profile, &family);
        assert_ne!(shuffled.sigmas, sorted.sigmas);
        let mut pairs: Vec<(f64, f64)> = shuffled.sigmas.iter().copied().zip(shuffled.values).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let expect: Vec<(f64, f64)> = sorted.sigmas.iter().copied().zip(sorted.values).collect();
        assert_eq!(pairs, expect);
    }
}
