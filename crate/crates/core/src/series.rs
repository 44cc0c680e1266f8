//! Terminating radial series and assembled eigenfunctions.
//!
//! The radial factor is the polynomial-times-Gaussian form
//!
//! ```text
//! R(rho) = rho^s exp(-rho^2/2) * sum_{n even, 0..=N} a_n rho^n,   s = 2|m|,
//! ```
//!
//! with the two-step coefficient recursion
//!
//! ```text
//! a_{n+2} = 2[(1 + s + n) - lambda] / [(n + s + 2)^2 - (2m)^2] * a_n,  a_0 = 1.
//! ```
//!
//! Coefficients are generated in exact rational arithmetic and converted to
//! floating point once at the end: the termination property (the coefficient
//! after a_N vanishes identically) and the parity-equivalence property are
//! integer facts that must not depend on rounding. Only the decaying Gaussian
//! envelope and the s = 2|m| >= 1 branch are representable: the growing
//! envelope and negative leading exponents are never constructed.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::halfint::HalfInteger;
use crate::qn::QuantumNumbers;
use crate::quadrature;

/// Finite even-index coefficient sequence of the terminating series.
///
/// `coeffs[j]` holds a_{2j}; odd-index coefficients are identically zero and
/// are not stored. The sequence is pre-normalization (a_0 = 1); the overall
/// normalization lives in [`Eigenfunction`].
#[derive(Debug, Clone, PartialEq)]
pub struct RadialSeries {
    qn: QuantumNumbers,
    s: u32,
    coeffs: Vec<f64>,
}

impl RadialSeries {
    pub fn qn(&self) -> &QuantumNumbers {
        &self.qn
    }

    /// Leading exponent s = 2|m|.
    pub fn s(&self) -> u32 {
        self.s
    }

    /// Even-index coefficients a_0, a_2, ..., a_N.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Value of the even polynomial factor at x = rho^2.
    pub fn polynomial_at(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &a| acc * x + a)
    }
}

/// One multiplicative step of the recursion in exact arithmetic.
///
/// `s_exp` is the leading exponent actually substituted (2|m| for the even
/// branch, 2|m| - 1 for the odd branch); `n` is the index of the known
/// coefficient. The denominator is strictly positive for every n >= 0 of
/// either branch, which the caller relies on.
fn step_ratio(lambda: u32, m2_abs: i64, s_exp: i64, n: i64) -> BigRational {
    let numer = BigInt::from(2 * ((1 + s_exp + n) - i64::from(lambda)));
    let d = (n + s_exp + 2) * (n + s_exp + 2) - m2_abs * m2_abs;
    debug_assert!(d > 0, "recursion denominator must stay positive");
    BigRational::new(numer, BigInt::from(d))
}

/// Exact coefficient sequence a_{n0}, a_{n0+2}, ..., a_{n_last} with
/// a_{n0} = 1, for leading exponent `s_exp`.
///
/// Exposed so the parity-equivalence and termination tests can compare the
/// two admissible branches coefficient-for-coefficient without rounding.
pub fn recursion_sequence_exact(
    lambda: u32,
    m2_abs: i64,
    s_exp: i64,
    n0: i64,
    n_last: i64,
) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(((n_last - n0) / 2 + 1).max(1) as usize);
    let mut a = BigRational::one();
    out.push(a.clone());
    let mut n = n0;
    while n + 2 <= n_last {
        a *= step_ratio(lambda, m2_abs, s_exp, n);
        out.push(a.clone());
        n += 2;
    }
    out
}

/// Exact even-branch coefficients a_0 ..= a_N for a valid tuple.
pub fn recursion_coefficients_exact(qn: &QuantumNumbers) -> Vec<BigRational> {
    let s = i64::from(qn.s());
    recursion_sequence_exact(qn.lambda(), s, s, 0, i64::from(qn.big_n()))
}

/// The coefficient the recursion produces at n = N + 2.
///
/// For every valid tuple this is exactly zero: the numerator hits
/// lambda = 1 + s + N. Kept exact so tests can assert identity, not
/// approximate smallness.
pub fn coefficient_after_cutoff(qn: &QuantumNumbers) -> BigRational {
    let s = i64::from(qn.s());
    let n_last = i64::from(qn.big_n()) + 2;
    recursion_sequence_exact(qn.lambda(), s, s, 0, n_last)
        .pop()
        .expect("sequence is nonempty")
}

/// Builds the terminating series for a valid tuple.
pub fn recursion_coefficients(qn: &QuantumNumbers) -> RadialSeries {
    let exact = recursion_coefficients_exact(qn);
    let coeffs = exact
        .iter()
        .map(|a| a.to_f64().expect("coefficient fits in f64"))
        .collect();
    RadialSeries {
        qn: *qn,
        s: qn.s(),
        coeffs,
    }
}

/// First `count` even-index coefficients of the non-terminating recursion
/// (odd lambda). None of them vanish, and a_n / a_{n-2} -> 2/n.
pub fn nonterminating_prefix(lambda: u32, m: HalfInteger, count: usize) -> Result<Vec<f64>> {
    if m.is_integer() {
        return Err(Error::NotHalfInteger { m2: m.twice() });
    }
    if lambda.is_multiple_of(2) {
        return Err(Error::EvenLambda { lambda });
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let s = m.twice().abs();
    let exact = recursion_sequence_exact(lambda, s, s, 0, 2 * (count as i64 - 1));
    debug_assert!(
        exact.iter().all(|a| !a.is_zero()),
        "odd-lambda numerators never vanish"
    );
    Ok(exact
        .iter()
        .map(|a| a.to_f64().expect("coefficient fits in f64"))
        .collect())
}

/// Unnormalized radial value rho^s exp(-rho^2/2) * P(rho^2).
pub fn eval_radial(series: &RadialSeries, rho: f64) -> f64 {
    debug_assert!(rho >= 0.0 && rho.is_finite());
    if rho == 0.0 {
        // s = 2|m| >= 1 kills the value at the origin exactly.
        return 0.0;
    }
    let x = rho * rho;
    rho.powi(series.s as i32) * (-0.5 * x).exp() * series.polynomial_at(x)
}

/// Independent closed-form cross-check: rho^{2|m|} exp(-rho^2/2)
/// L_k^{(2|m|)}(rho^2) with k = N/2, via the Laguerre three-term recurrence.
///
/// Shares no code with the series recursion; agreement up to one overall
/// constant is what the oracle-equivalence tests assert.
pub fn laguerre_oracle(qn: &QuantumNumbers, rho: f64) -> f64 {
    let k = qn.big_n() as usize / 2;
    let alpha = f64::from(qn.s());
    let x = rho * rho;
    rho.powi(qn.s() as i32) * (-0.5 * x).exp() * laguerre(k, alpha, x)
}

/// Largest pointwise mismatch between the series and the Laguerre oracle
/// over `samples`, after fixing the proportionality constant at the sample
/// where the oracle is largest (the two solutions differ by one overall
/// constant), relative to the series scale.
pub fn laguerre_agreement(qn: &QuantumNumbers, series: &RadialSeries, samples: &[f64]) -> f64 {
    let anchor = samples
        .iter()
        .copied()
        .max_by(|a, b| {
            laguerre_oracle(qn, *a)
                .abs()
                .total_cmp(&laguerre_oracle(qn, *b).abs())
        })
        .expect("samples are nonempty");
    let c = eval_radial(series, anchor) / laguerre_oracle(qn, anchor);
    let scale = samples
        .iter()
        .map(|&rho| eval_radial(series, rho).abs())
        .fold(0.0f64, f64::max);
    samples
        .iter()
        .map(|&rho| (eval_radial(series, rho) - c * laguerre_oracle(qn, rho)).abs())
        .fold(0.0, f64::max)
        / scale
}

/// Generalized Laguerre polynomial L_k^{(alpha)}(x).
pub fn laguerre(k: usize, alpha: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for i in 1..k {
        let i_f = i as f64;
        let next = ((2.0 * i_f + 1.0 + alpha - x) * cur - (i_f + alpha) * prev) / (i_f + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized, evaluatable eigenfunction psi(r, theta).
#[derive(Debug, Clone)]
pub struct Eigenfunction {
    series: RadialSeries,
    constants: Constants,
    norm_constant: f64,
}

impl Eigenfunction {
    /// Fixes the multiplicative constant so that the full-plane integral of
    /// |psi|^2 r dr dtheta equals 1 in physical units.
    pub fn normalized(series: RadialSeries, constants: Constants) -> Self {
        let radial_norm = quadrature::quadrature_norm(&series);
        let scale = constants.hbar / constants.gamma;
        let norm_constant = 1.0 / (2.0 * std::f64::consts::PI * scale * radial_norm).sqrt();
        debug_assert!(norm_constant.is_finite() && norm_constant > 0.0);
        Self {
            series,
            constants,
            norm_constant,
        }
    }

    pub fn series(&self) -> &RadialSeries {
        &self.series
    }

    pub fn constants(&self) -> &Constants {
        &self.constants
    }

    pub fn norm_constant(&self) -> f64 {
        self.norm_constant
    }

    /// psi(r, theta) = C exp(i 2 m theta / hbar) R(rho(r)).
    pub fn eval_psi(&self, r: f64, theta: f64) -> Complex64 {
        let rho = self.constants.rho_of_r(r);
        let radial = self.norm_constant * eval_radial(&self.series, rho);
        let phase = 2.0 * self.series.qn.m().to_f64() * theta / self.constants.hbar;
        Complex64::from_polar(1.0, phase) * radial
    }

    /// |psi|^2 at physical radius r; independent of theta.
    pub fn density_at_r(&self, r: f64) -> f64 {
        let v = self.norm_constant * eval_radial(&self.series, self.constants.rho_of_r(r));
        v * v
    }

    /// |psi|^2 expressed on the dimensionless axis.
    pub fn density_at_rho(&self, rho: f64) -> f64 {
        let v = self.norm_constant * eval_radial(&self.series, rho);
        v * v
    }
}
