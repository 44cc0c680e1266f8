//! Dense-matrix verification of the operator-level structure in a truncated
//! two-mode number basis.
//!
//! Position and momentum act through the ladder matrices of the oscillator
//! whose length scale is set by the structure constant (x has spread
//! sqrt(hbar/2gamma)), so the quadratic combination
//!
//! ```text
//! S0 = (1/2) [ gamma (x^2 + y^2) + (px^2 + py^2) / gamma ]
//! ```
//!
//! is number-diagonal with eigenvalues hbar (n + 1) at every gamma, and
//! S3 = (x py - y px) / 2 commutes with it shell by shell. The spin-squared
//! operator is the symmetrized square of the quadratic bracket shifted by
//! the ordering constant -hbar^2/4 that fixes its spectrum to
//! hbar^2 l (l + 1):
//!
//! ```text
//! S2 = [ (px^2 + py^2) + gamma^2 (x^2 + y^2) ]^2 / (16 gamma^2) - hbar^2/4.
//! ```
//!
//! The raw square by itself equals S0^2/4 identically; the -hbar^2/4 is the
//! ordering correction, and the tests pin both facts separately.
//!
//! Truncation hygiene: products of two quadratics are wrong on the two top
//! shells, so every identity is checked on the interior block of states with
//! total excitation at most nmax - 2 (leading principal block in the basis
//! ordering used here: ascending total n, then ascending n_x).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::constants::Constants;
use crate::error::{Error, Result};

type CMat = DMatrix<Complex64>;

fn creal(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Dimension of the basis {(n_x, n_y) : n_x + n_y <= nmax}.
pub fn basis_dim(nmax: usize) -> usize {
    (nmax + 1) * (nmax + 2) / 2
}

/// Index of (n_x, n_y) in the shell-major ordering.
fn state_index(nx: usize, ny: usize) -> usize {
    let n = nx + ny;
    n * (n + 1) / 2 + nx
}

fn basis_states(nmax: usize) -> Vec<(usize, usize)> {
    let mut states = Vec::with_capacity(basis_dim(nmax));
    for n in 0..=nmax {
        for nx in 0..=n {
            states.push((nx, n - nx));
        }
    }
    states
}

/// Truncated basis representations of the coordinate, momentum, and spin
/// operators, immutable after construction.
#[derive(Debug, Clone)]
pub struct OperatorSet {
    nmax: usize,
    dim: usize,
    constants: Constants,
    x: CMat,
    y: CMat,
    px: CMat,
    py: CMat,
    s0: CMat,
    s3: CMat,
    s2: CMat,
}

/// Builds the full operator set at basis cutoff `nmax`.
pub fn build(nmax: usize, constants: &Constants) -> Result<OperatorSet> {
    if nmax < 2 {
        return Err(Error::CutoffTooSmall { nmax, min: 2 });
    }
    let dim = basis_dim(nmax);
    let states = basis_states(nmax);
    let hbar = constants.hbar;
    let gamma = constants.gamma;

    // per-mode lowering operators in the joint basis
    let mut ax = CMat::zeros(dim, dim);
    let mut ay = CMat::zeros(dim, dim);
    for (i, &(nx, ny)) in states.iter().enumerate() {
        if nx > 0 {
            ax[(state_index(nx - 1, ny), i)] = creal((nx as f64).sqrt());
        }
        if ny > 0 {
            ay[(state_index(nx, ny - 1), i)] = creal((ny as f64).sqrt());
        }
    }
    let axd = ax.adjoint();
    let ayd = ay.adjoint();

    let xs = creal((hbar / (2.0 * gamma)).sqrt());
    let ps = Complex64::new(0.0, (hbar * gamma / 2.0).sqrt());
    let x = (&ax + &axd) * xs;
    let y = (&ay + &ayd) * xs;
    let px = (&axd - &ax) * ps;
    let py = (&ayd - &ay) * ps;

    let x2y2 = &x * &x + &y * &y;
    let p2 = &px * &px + &py * &py;

    let s0 = &x2y2 * creal(0.5 * gamma) + &p2 * creal(0.5 / gamma);
    let s3 = (&x * &py - &y * &px) * creal(0.5);

    let bracket = &p2 + &x2y2 * creal(gamma * gamma);
    let s2 = &bracket * &bracket * creal(1.0 / (16.0 * gamma * gamma))
        - CMat::identity(dim, dim) * creal(hbar * hbar / 4.0);

    Ok(OperatorSet {
        nmax,
        dim,
        constants: *constants,
        x,
        y,
        px,
        py,
        s0,
        s3,
        s2,
    })
}

impl OperatorSet {
    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &Constants {
        &self.constants
    }

    pub fn x(&self) -> &CMat {
        &self.x
    }

    pub fn y(&self) -> &CMat {
        &self.y
    }

    pub fn px(&self) -> &CMat {
        &self.px
    }

    pub fn py(&self) -> &CMat {
        &self.py
    }

    pub fn s0(&self) -> &CMat {
        &self.s0
    }

    pub fn s3(&self) -> &CMat {
        &self.s3
    }

    pub fn s2(&self) -> &CMat {
        &self.s2
    }

    /// Dimension of the truncation-safe interior block (total n <= nmax - 2).
    pub fn interior_dim(&self) -> usize {
        basis_dim(self.nmax - 2)
    }

    fn interior(&self, m: &CMat) -> CMat {
        let k = self.interior_dim();
        m.view((0, 0), (k, k)).into_owned()
    }

    /// Largest elementwise deviation from self-adjointness over all seven
    /// operators.
    pub fn hermiticity_defect(&self) -> f64 {
        [
            &self.x, &self.y, &self.px, &self.py, &self.s0, &self.s3, &self.s2,
        ]
        .iter()
        .map(|m| {
            let d = *m - &m.adjoint();
            d.iter().map(|z| z.norm()).fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
    }

    /// Max-norm of [S0, S3] on the interior block.
    pub fn commutator_defect(&self) -> f64 {
        let c = &self.s0 * &self.s3 - &self.s3 * &self.s0;
        self.interior(&c)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Max-norm of S2 - (S0^2/4 - hbar^2/4) on the interior block, the
    /// spin-squared/number-squared relation through two independently
    /// assembled product routes.
    pub fn verify_identity(&self) -> f64 {
        assert!(self.nmax >= 4, "identity check needs nmax >= 4");
        let hbar = self.constants.hbar;
        let reference = &self.s0 * &self.s0 * creal(0.25)
            - CMat::identity(self.dim, self.dim) * creal(hbar * hbar / 4.0);
        let diff = &self.s2 - &reference;
        self.interior(&diff)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// The squared bracket expanded into normally ordered products with the
    /// canonical commutators,
    ///
    /// ```text
    /// P^2 + g^4 X^2 + 2 g^2 X P - 4 i hbar g^2 (x px + y py) - 4 g^2 hbar^2,
    /// ```
    ///
    /// Hermitized and scaled like [`OperatorSet::s2`] (including the
    /// -hbar^2/4 shift). Equal to `s2` in exact operator algebra; in the
    /// truncated basis the rewriting is valid only on the interior block,
    /// which makes this the negative control for truncation corruption.
    pub fn s2_normal_ordered(&self) -> CMat {
        let g2 = self.constants.gamma * self.constants.gamma;
        let hbar = self.constants.hbar;
        let xx = &self.x * &self.x + &self.y * &self.y;
        let pp = &self.px * &self.px + &self.py * &self.py;
        let dil = &self.x * &self.px + &self.y * &self.py;
        let raw = &pp * &pp
            + &xx * &xx * creal(g2 * g2)
            + &xx * &pp * creal(2.0 * g2)
            + &dil * Complex64::new(0.0, -4.0 * hbar * g2)
            - CMat::identity(self.dim, self.dim) * creal(4.0 * g2 * hbar * hbar);
        let herm = (&raw + &raw.adjoint()) * creal(0.5);
        herm * creal(1.0 / (16.0 * g2))
            - CMat::identity(self.dim, self.dim) * creal(hbar * hbar / 4.0)
    }

    /// Max-norm of s2_normal_ordered - s2 over the given leading block.
    pub fn normal_ordered_deviation(&self, block: usize) -> f64 {
        let diff = self.s2_normal_ordered() - &self.s2;
        diff.view((0, 0), (block, block))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

/// One simultaneous eigenmode of (S0, S3) on the interior block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointMode {
    /// S0 eigenvalue in units of hbar.
    pub lambda: f64,
    /// S3 eigenvalue in units of hbar.
    pub m: f64,
    /// S2 expectation in units of hbar^2.
    pub s2: f64,
}

/// Simultaneously diagonalizes S0 and S3 on the interior block.
///
/// S0 is diagonalized first; S3 is then diagonalized within each degenerate
/// S0 eigenspace. This two-stage sweep is robust precisely because the S0
/// spectrum is exactly degenerate. Modes come back sorted by (lambda, m).
pub fn joint_spectrum(ops: &OperatorSet) -> Result<Vec<JointMode>> {
    let hbar = ops.constants.hbar;
    let k = ops.interior_dim();
    let s0 = ops.interior(&ops.s0);
    let s3 = ops.interior(&ops.s3);
    let s2 = ops.interior(&ops.s2);

    let eig0 = s0
        .clone()
        .try_symmetric_eigen(1e-13, 100_000)
        .ok_or_else(|| Error::DegeneracyResolutionFailed {
            detail: "S0 eigensolve did not converge".to_owned(),
        })?;

    // cluster indices by degenerate S0 eigenvalue (exact gaps of hbar)
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| eig0.eigenvalues[a].total_cmp(&eig0.eigenvalues[b]));
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for idx in order {
        match clusters.last_mut() {
            Some(cluster)
                if (eig0.eigenvalues[idx] - eig0.eigenvalues[cluster[0]]).abs() < 0.1 * hbar =>
            {
                cluster.push(idx)
            }
            _ => clusters.push(vec![idx]),
        }
    }

    let mut modes = Vec::with_capacity(k);
    for cluster in clusters {
        let lambda = cluster.iter().map(|&i| eig0.eigenvalues[i]).sum::<f64>()
            / (cluster.len() as f64 * hbar);
        let mut subspace = CMat::zeros(k, cluster.len());
        for (col, &i) in cluster.iter().enumerate() {
            subspace.set_column(col, &eig0.eigenvectors.column(i));
        }
        let projected = subspace.adjoint() * &s3 * &subspace;
        let eig3 = projected
            .try_symmetric_eigen(1e-13, 100_000)
            .ok_or_else(|| Error::DegeneracyResolutionFailed {
                detail: format!("S3 eigensolve did not converge in the lambda = {lambda} sector"),
            })?;
        let joint = &subspace * &eig3.eigenvectors;
        for col in 0..cluster.len() {
            let w = joint.column(col);
            let m = eig3.eigenvalues[col] / hbar;
            // residual guard: w must actually be an S3 eigenvector
            let residual = (&s3 * w - w * creal(m * hbar))
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            if residual > 1e-8 * hbar {
                return Err(Error::DegeneracyResolutionFailed {
                    detail: format!("S3 residual {residual} in the lambda = {lambda} sector"),
                });
            }
            let s2_val = (w.adjoint() * &s2 * w)[(0, 0)].re / (hbar * hbar);
            modes.push(JointMode {
                lambda,
                m,
                s2: s2_val,
            });
        }
    }
    modes.sort_by(|a, b| a.lambda.total_cmp(&b.lambda).then(a.m.total_cmp(&b.m)));
    Ok(modes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn czero() -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    fn consts(gamma: f64) -> Constants {
        Constants::new(1.0, gamma, 1.0).unwrap()
    }

    #[test]
    fn basis_counting() {
        assert_eq!(basis_dim(2), 6);
        assert_eq!(build(2, &consts(1.0)).unwrap().dim(), 6);
        assert_eq!(build(8, &consts(1.0)).unwrap().interior_dim(), basis_dim(6));
    }

    #[test]
    fn cutoff_guard() {
        assert_eq!(
            build(1, &consts(1.0)).unwrap_err(),
            Error::CutoffTooSmall { nmax: 1, min: 2 }
        );
    }

    #[test]
    fn operators_are_hermitian() {
        for gamma in [0.5, 1.0, 2.0] {
            let ops = build(6, &consts(gamma)).unwrap();
            assert!(ops.hermiticity_defect() < 1e-12, "gamma = {gamma}");
        }
    }

    #[test]
    fn canonical_commutator_on_the_interior() {
        let ops = build(6, &consts(2.0)).unwrap();
        let c = ops.x() * ops.px() - ops.px() * ops.x();
        let k = ops.interior_dim();
        let expected = Complex64::new(0.0, ops.constants().hbar);
        for i in 0..k {
            for j in 0..k {
                let want = if i == j { expected } else { czero() };
                assert!((c[(i, j)] - want).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn number_spectrum_with_degeneracies() {
        for gamma in [1.0, 5.0] {
            let ops = build(6, &consts(gamma)).unwrap();
            let modes = joint_spectrum(&ops).unwrap();
            // interior shells n = 0..4 -> lambda = n + 1 with multiplicity n + 1
            let mut expected = Vec::new();
            for n in 0..=4u32 {
                for _ in 0..=n {
                    expected.push(f64::from(n + 1));
                }
            }
            let got: Vec<f64> = modes.iter().map(|md| md.lambda).collect();
            assert_eq!(got.len(), expected.len());
            for (g, e) in got.iter().zip(&expected) {
                assert!((g - e).abs() < 1e-10 * e, "gamma = {gamma}");
            }
        }
    }

    #[test]
    fn s0_and_s3_commute() {
        for gamma in [0.5, 1.0, 2.0] {
            let ops = build(6, &consts(gamma)).unwrap();
            assert!(ops.commutator_defect() < 1e-12);
        }
    }

    #[test]
    fn identity_holds_on_the_interior_block() {
        for gamma in [0.5, 1.0, 2.0] {
            let ops = build(8, &consts(gamma)).unwrap();
            assert!(ops.verify_identity() < 1e-10, "gamma = {gamma}");
        }
    }

    #[test]
    fn identity_scales_with_hbar() {
        let c = Constants::new(2.0, 1.0, 1.0).unwrap();
        let ops = build(8, &c).unwrap();
        assert!(ops.verify_identity() < 1e-10 * c.hbar * c.hbar);
        let modes = joint_spectrum(&ops).unwrap();
        for mode in modes {
            let expected = (mode.lambda * mode.lambda - 1.0) / 4.0;
            assert!((mode.s2 - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn normal_ordered_square_shows_the_truncation_boundary() {
        let ops = build(8, &consts(1.0)).unwrap();
        // exact where the commutators survive truncation
        assert!(ops.normal_ordered_deviation(ops.interior_dim()) < 1e-10);
        // corrupted at O(hbar^2) once the top shells are included
        let full = ops.normal_ordered_deviation(ops.dim());
        assert!(full > 1e-2, "full-basis deviation {full}");
    }

    #[test]
    fn raw_square_misses_the_ordering_constant() {
        // the symmetrized square alone equals S0^2/4, so adding back the
        // shift must reproduce it exactly on the interior block
        let ops = build(8, &consts(1.0)).unwrap();
        let dim = ops.dim();
        let raw = ops.s2() + CMat::identity(dim, dim) * creal(0.25);
        let quarter = ops.s0() * ops.s0() * creal(0.25);
        let k = ops.interior_dim();
        let defect = (&raw - &quarter)
            .view((0, 0), (k, k))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        assert!(defect < 1e-12);
    }

    #[test]
    fn half_spin_sector_content() {
        let ops = build(6, &consts(1.0)).unwrap();
        let modes = joint_spectrum(&ops).unwrap();
        let sector: Vec<f64> = modes
            .iter()
            .filter(|md| (md.lambda - 2.0).abs() < 1e-9)
            .map(|md| md.m)
            .collect();
        assert_eq!(sector.len(), 2);
        assert!((sector[0] + 0.5).abs() < 1e-10);
        assert!((sector[1] - 0.5).abs() < 1e-10);
        // S2 eigenvalue is l(l+1) = 3/4 in the half-spin sector
        for md in modes.iter().filter(|md| (md.lambda - 2.0).abs() < 1e-9) {
            assert!((md.s2 - 0.75).abs() < 1e-9);
        }
    }

    #[test]
    fn lambda_four_sector_content() {
        let ops = build(6, &consts(1.0)).unwrap();
        let modes = joint_spectrum(&ops).unwrap();
        let sector: Vec<f64> = modes
            .iter()
            .filter(|md| (md.lambda - 4.0).abs() < 1e-9)
            .map(|md| md.m)
            .collect();
        assert_eq!(sector.len(), 4);
        for (got, want) in sector.iter().zip([-1.5, -0.5, 0.5, 1.5]) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn eigenvalue_relation_across_gammas() {
        for gamma in [0.5, 1.0, 2.0] {
            let ops = build(8, &consts(gamma)).unwrap();
            for mode in joint_spectrum(&ops).unwrap() {
                let expected = (mode.lambda * mode.lambda - 1.0) / 4.0;
                assert!(
                    (mode.s2 - expected).abs() < 1e-9,
                    "gamma = {gamma}, lambda = {}",
                    mode.lambda
                );
            }
        }
    }

    #[test]
    fn magnetic_numbers_step_by_integers_within_a_sector() {
        let ops = build(8, &consts(1.0)).unwrap();
        let modes = joint_spectrum(&ops).unwrap();
        for n in 0..=6u32 {
            let lambda = f64::from(n + 1);
            let ms: Vec<f64> = modes
                .iter()
                .filter(|md| (md.lambda - lambda).abs() < 1e-9)
                .map(|md| md.m)
                .collect();
            let expected: Vec<f64> = (0..=n).map(|j| (2.0 * j as f64 - n as f64) / 2.0).collect();
            assert_eq!(ms.len(), expected.len());
            for (got, want) in ms.iter().zip(&expected) {
                assert!((got - want).abs() < 1e-9);
            }
        }
    }
}
