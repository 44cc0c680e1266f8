//! Independent finite-difference oracle for the radial eigenproblem.
//!
//! The radial equation
//!
//! ```text
//! -(1/rho) d/drho (rho dR/drho) + (rho^2 + 4m^2/rho^2) R = 2 lambda R
//! ```
//!
//! is symmetrized by the substitution u = sqrt(rho) R, which turns it into
//! the self-adjoint form
//!
//! ```text
//! -u'' + (rho^2 + (4m^2 - 1/4)/rho^2) u = 2 lambda u,
//! ```
//!
//! discretized with the three-point stencil on a uniform grid with Dirichlet
//! ends. The resulting symmetric tridiagonal matrix is solved by Sturm-count
//! bisection for the lowest eigenvalues and inverse iteration for the
//! eigenvectors; the stencil is second-order, so halving the spacing shrinks
//! the eigenvalue error by about 4x.

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::halfint::HalfInteger;
use crate::qn::QuantumNumbers;
use crate::series;

/// Symmetric tridiagonal matrix (constant off-diagonal would suffice here,
/// but the solver takes a general one).
struct Tridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>, // off[i] couples i and i+1
}

impl Tridiagonal {
    fn n(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x`, by the Sturm sign count of
    /// the LDL^T pivots.
    fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.n() {
            let e2 = self.off[i - 1] * self.off[i - 1];
            let mut denom = q;
            if denom == 0.0 {
                denom = f64::MIN_POSITIVE;
            }
            q = self.diag[i] - x - e2 / denom;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// k-th smallest eigenvalue (0-based) by bisection.
    fn eigenvalue(&self, k: usize) -> f64 {
        let radius = self.off.iter().map(|e| e.abs()).fold(0.0f64, f64::max) * 2.0;
        let mut lo = self.diag.iter().cloned().fold(f64::INFINITY, f64::min) - radius;
        let mut hi = self.diag.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + radius;
        let scale = lo.abs().max(hi.abs()).max(1.0);
        while hi - lo > 1e-14 * scale {
            let mid = 0.5 * (lo + hi);
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvector for an isolated eigenvalue, by inverse iteration with a
    /// pivoted tridiagonal solve. Deterministic: fixed start and iteration
    /// count; the returned vector has unit Euclidean norm.
    fn eigenvector(&self, eigenvalue: f64) -> Vec<f64> {
        let n = self.n();
        // tiny shift keeps the factorization from landing on an exact zero
        let shift = eigenvalue * (1.0 + 1e-13) + 1e-290;
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        for _ in 0..4 {
            v = self.solve_shifted(shift, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            for x in &mut v {
                *x /= norm;
            }
        }
        v
    }

    /// Solves (T - shift I) w = rhs by LU with partial pivoting. The shift
    /// sits essentially on an eigenvalue, so the matrix is nearly singular
    /// and each solve amplifies the corresponding eigenvector.
    ///
    /// At step i the current row i is (main[i], upper[i]) and row i+1 is
    /// still pristine, (off[i], diag[i+1]-shift, off[i+1]); a row swap fills
    /// the second superdiagonal upper2[i].
    fn solve_shifted(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.n();
        let mut main: Vec<f64> = self.diag.iter().map(|d| d - shift).collect();
        let mut upper = vec![0.0; n];
        upper[..n - 1].copy_from_slice(&self.off);
        let mut upper2 = vec![0.0; n];
        let mut w: Vec<f64> = rhs.to_vec();

        let nonzero = |p: f64| if p == 0.0 { f64::MIN_POSITIVE } else { p };
        for i in 0..n - 1 {
            let sub = self.off[i];
            let off_next = if i + 1 < n - 1 { self.off[i + 1] } else { 0.0 };
            let factor;
            if sub.abs() > main[i].abs() {
                let (low_main, low_upper) = (main[i], upper[i]);
                main[i] = sub;
                upper[i] = main[i + 1];
                upper2[i] = off_next;
                factor = low_main / nonzero(main[i]);
                main[i + 1] = low_upper - factor * upper[i];
                upper[i + 1] = -factor * upper2[i];
                w.swap(i, i + 1);
            } else {
                factor = sub / nonzero(main[i]);
                main[i + 1] -= factor * upper[i];
                // upper[i+1] keeps its pristine value; upper2[i] stays zero
            }
            w[i + 1] -= factor * w[i];
        }

        w[n - 1] /= nonzero(main[n - 1]);
        if n >= 2 {
            let i = n - 2;
            w[i] = (w[i] - upper[i] * w[i + 1]) / nonzero(main[i]);
        }
        for i in (0..n.saturating_sub(2)).rev() {
            w[i] = (w[i] - upper[i] * w[i + 1] - upper2[i] * w[i + 2]) / nonzero(main[i]);
        }
        w
    }
}

fn radial_matrix(abs_m: HalfInteger, grid: &RadialGrid) -> Tridiagonal {
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let m2 = abs_m.twice().abs() as f64; // 2|m|
    let centrifugal = m2 * m2 - 0.25; // 4m^2 - 1/4
    let diag = grid
        .nodes()
        .map(|rho| 2.0 * inv_h2 + rho * rho + centrifugal / (rho * rho))
        .collect::<Vec<_>>();
    let off = vec![-inv_h2; grid.interior_len() - 1];
    Tridiagonal { diag, off }
}

/// Lowest `count` eigenvalues lambda and radial eigenvectors of the
/// discretized equation at fixed |m|.
///
/// Each returned pair is (lambda, R) with R sampled on the interior nodes
/// of `grid` (the symmetrizing substitution u = sqrt(rho) R is undone);
/// the vectors carry the arbitrary normalization and sign of the solver.
pub fn fd_eigensolve(
    abs_m: HalfInteger,
    grid: &RadialGrid,
    count: usize,
) -> Result<Vec<(f64, Vec<f64>)>> {
    if count > grid.interior_len() {
        return Err(Error::GridTooCoarse {
            detail: format!(
                "{count} eigenvalues requested but the grid has only {} interior nodes",
                grid.interior_len()
            ),
        });
    }
    let matrix = radial_matrix(abs_m, grid);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let epsilon = matrix.eigenvalue(k);
        let u = matrix.eigenvector(epsilon);
        let r = u
            .iter()
            .zip(grid.nodes())
            .map(|(ui, rho)| ui / rho.sqrt())
            .collect();
        // the discretized operator is 2 lambda
        out.push((0.5 * epsilon, r));
    }
    Ok(out)
}

/// Maximum pointwise deviation between the analytic series solution and the
/// finite-difference eigenvector for the same quantum numbers, after both
/// are normalized to unit discrete L^2(rho d rho) norm and sign-aligned.
pub fn compare_series_vs_fd(qn: &QuantumNumbers, grid: &RadialGrid) -> Result<f64> {
    let radial_index = qn.big_n() as usize / 2;
    let solutions = fd_eigensolve(qn.m().abs(), grid, radial_index + 1)?;
    let (_, fd_vector) = &solutions[radial_index];

    let series = series::recursion_coefficients(qn);
    let analytic: Vec<f64> = grid
        .nodes()
        .map(|rho| series::eval_radial(&series, rho))
        .collect();
    Ok(aligned_deviation(&analytic, fd_vector, grid))
}

/// Normalizes both vectors to unit discrete L^2(rho d rho) norm, aligns the
/// sign of the second against the first via their overlap, and returns the
/// maximum pointwise difference. Invariant under an overall sign flip of
/// either input.
pub fn aligned_deviation(reference: &[f64], candidate: &[f64], grid: &RadialGrid) -> f64 {
    let h = grid.spacing();
    let normalize = |v: &[f64]| -> Vec<f64> {
        let norm = v
            .iter()
            .zip(grid.nodes())
            .map(|(x, rho)| x * x * rho * h)
            .sum::<f64>()
            .sqrt();
        v.iter().map(|x| x / norm).collect()
    };
    let a = normalize(reference);
    let mut b = normalize(candidate);

    let overlap: f64 = a
        .iter()
        .zip(&b)
        .zip(grid.nodes())
        .map(|((x, y), rho)| x * y * rho * h)
        .sum();
    if overlap < 0.0 {
        for y in &mut b {
            *y = -*y;
        }
    }
    a.iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Analytic spectrum at fixed |m|: lambda = 1 + 2|m| + N, N = 0, 2, 4, ...
pub fn analytic_lambda(abs_m: HalfInteger, radial_index: usize) -> f64 {
    1.0 + abs_m.twice().abs() as f64 + 2.0 * radial_index as f64
}

/// Convenience used by verification reports: the largest |error| of the
/// lowest `count` finite-difference eigenvalues against the analytic ones.
pub fn max_eigenvalue_error(abs_m: HalfInteger, grid: &RadialGrid, count: usize) -> Result<f64> {
    let solved = fd_eigensolve(abs_m, grid, count)?;
    Ok(solved
        .iter()
        .enumerate()
        .map(|(k, (lambda, _))| (lambda - analytic_lambda(abs_m, k)).abs())
        .fold(0.0, f64::max))
}
