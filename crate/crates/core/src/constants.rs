/// Physical-constant conventions shared by every module.
///
/// The defaults are the dimensionless units used throughout the numerics:
/// hbar = 1, gamma = 1 (gamma is the structure constant sqrt(alpha/beta)
/// that sets the length scale rho = sqrt(gamma/hbar) * r), omega = 1.
/// Only the ratio alpha/beta ever enters a computation, so gamma is stored
/// directly. omega is an externally supplied frequency used solely for the
/// minimum-energy conversion E_min = lambda_min * hbar * omega.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub gamma: f64,
    pub omega: f64,
}

impl Constants {
    pub fn new(hbar: f64, gamma: f64, omega: f64) -> Option<Self> {
        let c = Self { hbar, gamma, omega };
        c.is_valid().then_some(c)
    }

    pub fn is_valid(&self) -> bool {
        self.hbar > 0.0
            && self.hbar.is_finite()
            && self.gamma > 0.0
            && self.gamma.is_finite()
            && self.omega > 0.0
            && self.omega.is_finite()
    }

    /// Length scale of the dimensionless variable: r = length_scale() * rho.
    pub fn length_scale(&self) -> f64 {
        (self.hbar / self.gamma).sqrt()
    }

    /// Inverse map: rho = rho_of_r(r).
    pub fn rho_of_r(&self, r: f64) -> f64 {
        r * (self.gamma / self.hbar).sqrt()
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self {
            hbar: 1.0,
            gamma: 1.0,
            omega: 1.0,
        }
    }
}
