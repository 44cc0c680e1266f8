//! Admissible quantum-number tuples.
//!
//! A terminating radial solution exists only for
//!   l  = (lambda - 1) / 2,
//!   |m| <= l,
//!   N  = lambda - 1 - 2|m|  even and >= 0,
//! which forces lambda even and m half-odd-integral. All checks run in
//! exact integer arithmetic on doubled values.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::halfint::HalfInteger;

/// A validated (lambda, l, m, N) tuple.
///
/// Construction goes through [`validate`]; the fields are read-only
/// thereafter, so a `QuantumNumbers` value is always self-consistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    lambda: u32,
    ell: HalfInteger,
    m: HalfInteger,
    big_n: u32,
}

impl QuantumNumbers {
    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn ell(&self) -> HalfInteger {
        self.ell
    }

    pub fn m(&self) -> HalfInteger {
        self.m
    }

    /// Series cutoff N (even, >= 0).
    pub fn big_n(&self) -> u32 {
        self.big_n
    }

    /// Leading exponent s = 2|m| of the radial series.
    pub fn s(&self) -> u32 {
        self.m.twice().unsigned_abs() as u32
    }

    /// Degree of the even polynomial factor: N/2 + 1 coefficients.
    pub fn coeff_count(&self) -> usize {
        self.big_n as usize / 2 + 1
    }
}

/// Validates (lambda, m) and derives l and N.
///
/// The `Constants` argument is part of the signature for parity with the
/// rest of the API; the admissibility rules themselves are unit-free.
pub fn validate(lambda: u32, m: HalfInteger, _constants: &Constants) -> Result<QuantumNumbers> {
    if m.is_integer() {
        return Err(Error::NotHalfInteger { m2: m.twice() });
    }
    if !lambda.is_multiple_of(2) {
        return Err(Error::OddLambda { lambda });
    }
    let m2_abs = m.twice().abs();
    let max2 = i64::from(lambda) - 1;
    if m2_abs > max2 {
        return Err(Error::MagneticOutOfRange { m2_abs, max2 });
    }
    // lambda even and 2m odd make N = lambda - 1 - 2|m| automatically even.
    let big_n = (i64::from(lambda) - 1 - m2_abs) as u32;
    debug_assert!(big_n.is_multiple_of(2));
    Ok(QuantumNumbers {
        lambda,
        ell: HalfInteger::from_twice(max2),
        m,
        big_n,
    })
}
