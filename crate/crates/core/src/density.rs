//! Density profiles and ring diagnostics.
//!
//! The density d(rho) = |N R(rho)|^2 vanishes at the origin for every
//! admissible state and organizes into concentric rings: the radial factor
//! has l - |m| interior zeros, so the density has (l - |m|) + 1 local maxima.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::qn::QuantumNumbers;
use crate::series::{self, Eigenfunction};

/// Sampled density with located maxima.
#[derive(Debug, Clone)]
pub struct DensityProfile {
    qn: QuantumNumbers,
    samples: Vec<(f64, f64)>,
    ring_count: usize,
    peak_radii: Vec<f64>,
}

impl DensityProfile {
    pub fn qn(&self) -> &QuantumNumbers {
        &self.qn
    }

    /// (rho, density) pairs: the origin sample followed by the interior
    /// grid nodes.
    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn ring_count(&self) -> usize {
        self.ring_count
    }

    /// Dimensionless radii of the density maxima, innermost first.
    pub fn peak_radii(&self) -> &[f64] {
        &self.peak_radii
    }
}

/// Interior zeros of the radial factor, by sign scan plus bisection on the
/// even polynomial part. The roots are simple, so this is exhaustive for a
/// fine enough scan.
pub fn radial_nodes(qn: &QuantumNumbers) -> Vec<f64> {
    let series = series::recursion_coefficients(qn);
    let upper = (2.0 * f64::from(qn.lambda())).sqrt() + 2.0;
    let steps = 4096 * qn.coeff_count();
    let h = upper / steps as f64;
    let mut roots = Vec::new();
    let mut prev_x = h * h;
    let mut prev = series.polynomial_at(prev_x);
    for i in 2..=steps {
        let rho = i as f64 * h;
        let x = rho * rho;
        let cur = series.polynomial_at(x);
        if prev == 0.0 {
            roots.push(prev_x.sqrt());
        } else if prev * cur < 0.0 {
            let (mut lo, mut hi) = (prev_x, x);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if series.polynomial_at(lo) * series.polynomial_at(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            roots.push((0.5 * (lo + hi)).sqrt());
        }
        prev_x = x;
        prev = cur;
    }
    roots
}

/// Samples the normalized density on the grid and locates its maxima.
///
/// Errors with `GridTooCoarse` when the grid spacing exceeds half of the
/// smallest gap between adjacent radial zeros, since the sign analysis can
/// then no longer separate them.
pub fn density_profile(
    qn: &QuantumNumbers,
    constants: &Constants,
    grid: &RadialGrid,
) -> Result<DensityProfile> {
    let nodes = radial_nodes(qn);
    let mut bounds: Vec<f64> = Vec::with_capacity(nodes.len() + 1);
    bounds.push(0.0);
    bounds.extend(&nodes);
    let min_gap = bounds
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    if grid.spacing() > 0.5 * min_gap {
        return Err(Error::GridTooCoarse {
            detail: format!(
                "spacing {} exceeds half the minimal node gap {}",
                grid.spacing(),
                min_gap
            ),
        });
    }

    let series = series::recursion_coefficients(qn);
    let eig = Eigenfunction::normalized(series, *constants);
    let mut samples = Vec::with_capacity(grid.interior_len() + 1);
    samples.push((0.0, 0.0));
    samples.extend(grid.nodes().map(|rho| (rho, eig.density_at_rho(rho))));

    let dmax = samples.iter().map(|&(_, d)| d).fold(0.0f64, f64::max);
    let floor = 1e-12 * dmax;
    let mut peak_radii = Vec::new();
    for w in samples.windows(3) {
        let [(_, dl), (rho, d), (_, dr)] = [w[0], w[1], w[2]];
        if d > dl && d > dr && d > floor {
            peak_radii.push(rho);
        }
    }

    Ok(DensityProfile {
        qn: *qn,
        ring_count: peak_radii.len(),
        samples,
        peak_radii,
    })
}

/// The ring-count rule (l - |m|) + 1 the profiles are checked against.
pub fn expected_ring_count(qn: &QuantumNumbers) -> usize {
    (qn.ell().twice() - qn.m().twice().abs()) as usize / 2 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halfint::HalfInteger;
    use crate::qn::validate;

    fn qn(lambda: u32, m2: i64) -> QuantumNumbers {
        validate(lambda, HalfInteger::from_twice(m2), &Constants::default()).unwrap()
    }

    fn profile(lambda: u32, m2: i64) -> DensityProfile {
        density_profile(
            &qn(lambda, m2),
            &Constants::default(),
            &RadialGrid::reference(),
        )
        .unwrap()
    }

    #[test]
    fn half_spin_state_is_a_single_ring() {
        let p = profile(2, 1);
        assert_eq!(p.ring_count(), 1);
        assert_eq!(p.samples()[0], (0.0, 0.0));
        // density rho^2 e^{-rho^2} peaks at rho = 1
        assert!((p.peak_radii()[0] - 1.0).abs() < 1e-2);
    }

    #[test]
    fn stretched_state_ring_moves_outward() {
        // l = 7/2, |m| = 7/2 is still one ring, farther out than l = 1/2
        let low = profile(2, 1);
        let high = profile(8, 7);
        assert_eq!(high.ring_count(), 1);
        assert!(high.peak_radii()[0] > low.peak_radii()[0]);
        // rho^14 e^{-rho^2} peaks at rho = sqrt(7)
        assert!((high.peak_radii()[0] - 7f64.sqrt()).abs() < 1e-2);
    }

    #[test]
    fn multi_ring_state() {
        // l = 9/2, |m| = 3/2 has (9 - 3)/2 + 1 = 4 rings
        let p = profile(10, 3);
        assert_eq!(p.ring_count(), 4);
        assert_eq!(expected_ring_count(p.qn()), 4);
    }

    #[test]
    fn ring_rule_holds_through_lambda_ten() {
        for lambda in [2u32, 4, 6, 8, 10] {
            for m2 in (1..=lambda as i64 - 1).step_by(2) {
                let p = profile(lambda, m2);
                assert_eq!(
                    p.ring_count(),
                    expected_ring_count(p.qn()),
                    "lambda={lambda} m2={m2}"
                );
                assert!(p.samples().iter().all(|&(_, d)| d >= 0.0));
            }
        }
    }

    #[test]
    fn node_count_matches_the_cutoff() {
        for (lambda, m2, want) in [(2u32, 1i64, 0usize), (4, 1, 1), (6, 1, 2), (10, 3, 3)] {
            assert_eq!(radial_nodes(&qn(lambda, m2)).len(), want);
        }
    }

    #[test]
    fn coarse_grid_is_rejected_for_clustered_nodes() {
        // lambda = 10, |m| = 1/2 has nodes ~0.74 apart; spacing 0.5 cannot
        // separate them by sign analysis
        let coarse = RadialGrid::new(50.0, 100).unwrap();
        let err = density_profile(&qn(10, 1), &Constants::default(), &coarse).unwrap_err();
        assert!(matches!(err, Error::GridTooCoarse { .. }));
    }

    #[test]
    fn density_vanishes_far_out() {
        let p = profile(4, 1);
        let tail = p
            .samples()
            .iter()
            .filter(|(rho, _)| *rho > 3.0 * 2.0)
            .map(|&(_, d)| d)
            .fold(0.0f64, f64::max);
        let dmax = p.samples().iter().map(|&(_, d)| d).fold(0.0f64, f64::max);
        assert!(tail < 1e-10 * dmax);
    }
}
