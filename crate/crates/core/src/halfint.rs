use std::fmt;

use serde::{Deserialize, Serialize};

/// Exact half-integer, stored as twice its value.
///
/// The admissibility rules for the quantum numbers are integer-arithmetic
/// facts (parity of lambda, half-integrality of m), so they must never pass
/// through floating point. All validation logic works on `twice`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    /// Builds the half-integer `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    /// True when the value is a half-odd-integer (1/2, 3/2, ...), i.e. not
    /// an ordinary integer.
    pub const fn is_half_odd(self) -> bool {
        self.twice % 2 != 0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn abs(self) -> Self {
        Self {
            twice: self.twice.abs(),
        }
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_uses_halves_only_when_needed() {
        assert_eq!(HalfInteger::from_twice(1).to_string(), "1/2");
        assert_eq!(HalfInteger::from_twice(-9).to_string(), "-9/2");
        assert_eq!(HalfInteger::from_twice(4).to_string(), "2");
        assert_eq!(HalfInteger::from_int(-3).to_string(), "-3");
    }

    #[test]
    fn parity_predicates() {
        assert!(HalfInteger::from_twice(3).is_half_odd());
        assert!(!HalfInteger::from_twice(2).is_half_odd());
        assert!(HalfInteger::from_int(7).is_integer());
    }
}
