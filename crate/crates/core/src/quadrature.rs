//! Adaptive quadrature for normalization integrals and radial moments.
//!
//! The engine is a 7-point Gauss / 15-point Kronrod pair with interval
//! bisection. All integrands here are polynomial-times-Gaussian, so the
//! upper limit is truncated at a point where the Gaussian tail is far below
//! the requested tolerance, and the closed-form Gamma-moment sum is kept
//! alongside as an exact cross-check route.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::constants::Constants;
use crate::qn::QuantumNumbers;
use crate::series::{self, RadialSeries};

// 15-point Kronrod abscissae and weights on [-1, 1] (positive half),
// with the embedded 7-point Gauss weights, at reference-table precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One Gauss-Kronrod panel: returns (kronrod value, |kronrod - gauss|).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kronrod = WGK[7] * f(center);
    let mut gauss = WG[3] * f(center);
    for j in 0..7 {
        let fsum = f(center - half * XGK[j]) + f(center + half * XGK[j]);
        kronrod += WGK[j] * fsum;
        // odd-indexed Kronrod nodes are the embedded Gauss nodes
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    (kronrod * half, (kronrod - gauss).abs() * half.abs())
}

/// Adaptive integral of `f` over [a, b] to relative tolerance `rel_tol`.
///
/// Work is bounded: a panel is accepted once its error estimate meets its
/// tolerance share, drops to the rounding floor of the panel value, or the
/// interval or panel budget is exhausted. The budget keeps integrands whose
/// evaluation noise exceeds the requested tolerance (heavy coefficient
/// cancellation at large lambda) from subdividing without end; accuracy then
/// degrades to the noise floor instead of hanging.
pub fn adaptive_integral<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> f64 {
    const PANEL_BUDGET: usize = 1 << 16;
    let (estimate, _) = gk15(&f, a, b);
    let tol0 = rel_tol * estimate.abs().max(f64::MIN_POSITIVE);
    let min_width = (b - a).abs() * 1e-13;
    let mut total = 0.0;
    let mut panels = 0usize;
    let mut stack = vec![(a, b, tol0)];
    while let Some((lo, hi, tol)) = stack.pop() {
        let (value, err) = gk15(&f, lo, hi);
        panels += 1;
        let converged = err <= tol || err <= 1e-16 * value.abs();
        if converged || (hi - lo).abs() <= min_width || panels >= PANEL_BUDGET {
            total += value;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, 0.5 * tol));
            stack.push((mid, hi, 0.5 * tol));
        }
    }
    total
}

/// Cutoff radius beyond which the Gaussian tail of |R|^2 rho^p is
/// negligible relative to the integral (far below 1e-14).
fn tail_cutoff(qn: &QuantumNumbers) -> f64 {
    (2.0 * f64::from(qn.lambda())).sqrt() + 8.0
}

/// Moment integral of the unnormalized series: int_0^inf R(rho)^2 rho^power d rho.
pub fn radial_moment(series: &RadialSeries, power: i32) -> f64 {
    let cut = tail_cutoff(series.qn());
    adaptive_integral(
        |rho| series::eval_radial(series, rho).powi(2) * rho.powi(power),
        0.0,
        cut,
        1e-14,
    )
}

/// Dimensionless normalization integral int_0^inf |R|^2 rho d rho.
pub fn quadrature_norm(series: &RadialSeries) -> f64 {
    radial_moment(series, 1)
}

/// Exact closed form of the normalization integral by term-by-term
/// Gamma-function moments:
///
/// ```text
/// int rho^{2j + 2k + 2s + 1} e^{-rho^2} d rho = (j + k + s)! / 2,
/// ```
///
/// summed over the exact rational coefficients. Independent of the
/// quadrature path; used to pin its accuracy.
pub fn norm_closed_form(qn: &QuantumNumbers) -> f64 {
    let coeffs = series::recursion_coefficients_exact(qn);
    let s = qn.s() as usize;
    let mut total = BigRational::zero();
    for (j, aj) in coeffs.iter().enumerate() {
        for (k, ak) in coeffs.iter().enumerate() {
            total += aj * ak * BigRational::from_integer(factorial(j + k + s));
        }
    }
    total /= BigRational::from_integer(BigInt::from(2));
    total.to_f64().expect("norm fits in f64")
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Mean physical radius `<r>` = sqrt(hbar/gamma) * `<rho>` with
/// `<rho>` = int R^2 rho^2 d rho / int R^2 rho d rho.
pub fn mean_radius(qn: &QuantumNumbers, constants: &Constants) -> f64 {
    let series = series::recursion_coefficients(qn);
    let mean_rho = radial_moment(&series, 2) / radial_moment(&series, 1);
    constants.length_scale() * mean_rho
}

/// Closed-form mean radius of the lowest state (l = 1/2, |m| = 1/2):
/// 3 sqrt(pi hbar) / 4 * gamma^{-1/2}.
pub fn mean_radius_closed_form_half_spin(constants: &Constants) -> f64 {
    0.75 * (std::f64::consts::PI * constants.hbar).sqrt() / constants.gamma.sqrt()
}
