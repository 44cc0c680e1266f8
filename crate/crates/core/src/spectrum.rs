//! Enumeration of the admissible spectrum and its multiplicities.
//!
//! Each lambda block lists the printed |m| rows exactly as the reference
//! table does: even-lambda blocks terminate (N = lambda - 1 - 2|m| even)
//! and carry the block multiplicity 2l + 1 = lambda on their final row only,
//! the earlier rows keeping the blank (`Unset`) cell; odd-lambda blocks have
//! odd N, never terminate, and are marked with infinite multiplicity.

use serde::{Deserialize, Serialize};

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::halfint::HalfInteger;

/// Multiplicity cell of a spectrum row, preserving the table's blanks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Count(u32),
    Infinite,
    /// Blank cell: the value is stated once per block, on the final row.
    Unset,
}

/// One printed row of the spectrum table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RowRepr", into = "RowRepr")]
pub struct SpectrumRow {
    pub lambda: u32,
    pub ell: HalfInteger,
    pub abs_m: HalfInteger,
    /// Cutoff index N = lambda - 1 - 2|m| as printed; odd N means the
    /// series cannot terminate and the row is unphysical.
    pub big_n: u32,
    pub multiplicity: Multiplicity,
}

impl SpectrumRow {
    pub fn is_terminating(&self) -> bool {
        self.lambda.is_multiple_of(2)
    }
}

#[derive(Serialize, Deserialize)]
struct RowRepr {
    lambda: u32,
    ell_times2: i64,
    #[serde(rename = "absM_times2")]
    abs_m_times2: i64,
    #[serde(rename = "bigN")]
    big_n: u32,
    multiplicity: Option<MultRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MultRepr {
    Count(u32),
    Marker(String),
}

impl From<SpectrumRow> for RowRepr {
    fn from(row: SpectrumRow) -> Self {
        RowRepr {
            lambda: row.lambda,
            ell_times2: row.ell.twice(),
            abs_m_times2: row.abs_m.twice(),
            big_n: row.big_n,
            multiplicity: match row.multiplicity {
                Multiplicity::Count(n) => Some(MultRepr::Count(n)),
                Multiplicity::Infinite => Some(MultRepr::Marker("inf".to_owned())),
                Multiplicity::Unset => None,
            },
        }
    }
}

impl TryFrom<RowRepr> for SpectrumRow {
    type Error = String;

    fn try_from(repr: RowRepr) -> std::result::Result<Self, String> {
        let multiplicity = match repr.multiplicity {
            Some(MultRepr::Count(n)) => Multiplicity::Count(n),
            Some(MultRepr::Marker(s)) if s == "inf" => Multiplicity::Infinite,
            Some(MultRepr::Marker(s)) => return Err(format!("unknown multiplicity marker {s:?}")),
            None => Multiplicity::Unset,
        };
        Ok(SpectrumRow {
            lambda: repr.lambda,
            ell: HalfInteger::from_twice(repr.ell_times2),
            abs_m: HalfInteger::from_twice(repr.abs_m_times2),
            big_n: repr.big_n,
            multiplicity,
        })
    }
}

/// Enumerates every block lambda = 2 ..= lambda_max in table order.
pub fn enumerate_table(lambda_max: u32) -> Result<Vec<SpectrumRow>> {
    if lambda_max < 2 {
        return Err(Error::BadBound { lambda_max });
    }
    let mut rows = Vec::new();
    for lambda in 2..=lambda_max {
        let ell2 = i64::from(lambda) - 1;
        let terminating = lambda % 2 == 0;
        // |m| runs over half-odd-integers 1/2, 3/2, ... while N >= 0
        let mut m2 = 1i64;
        while lambda as i64 - 1 - m2 >= 0 {
            let big_n = (i64::from(lambda) - 1 - m2) as u32;
            let is_last = lambda as i64 - 1 - (m2 + 2) < 0;
            let multiplicity = if !terminating {
                Multiplicity::Infinite
            } else if is_last {
                Multiplicity::Count(lambda)
            } else {
                Multiplicity::Unset
            };
            rows.push(SpectrumRow {
                lambda,
                ell: HalfInteger::from_twice(ell2),
                abs_m: HalfInteger::from_twice(m2),
                big_n,
                multiplicity,
            });
            m2 += 2;
        }
    }
    Ok(rows)
}

/// Multiplicity 2l + 1 of a half-odd-integral l.
pub fn multiplicity(ell: HalfInteger) -> Result<u32> {
    if ell.is_integer() {
        return Err(Error::IntegerEll { ell2: ell.twice() });
    }
    assert!(ell.twice() > 0, "l must be positive");
    Ok((ell.twice() + 1) as u32)
}

/// Which magnetic numbers the enumeration admits.
///
/// `HalfIntegral` is the physical rule. `Integral` is a test hook that
/// relaxes m to ordinary integers (including 0): it demonstrates that the
/// spectral gap (smallest terminating lambda of 2 rather than 1) originates
/// in the half-integrality constraint alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityRule {
    HalfIntegral,
    Integral,
}

/// Smallest lambda in 1..=lambda_max admitting a terminating series under
/// the given rule, found by scanning, not asserted.
pub fn min_terminating_lambda(rule: AdmissibilityRule, lambda_max: u32) -> Option<u32> {
    let m2_start = match rule {
        AdmissibilityRule::HalfIntegral => 1i64,
        AdmissibilityRule::Integral => 0i64,
    };
    for lambda in 1..=lambda_max {
        let mut m2 = m2_start;
        while m2 < i64::from(lambda) {
            let n = i64::from(lambda) - 1 - m2;
            if n >= 0 && n % 2 == 0 {
                return Some(lambda);
            }
            m2 += 2;
        }
        // lambda = 1 only admits m = 0, handled by the loop above when the
        // rule allows integers; nothing else to try in this block
    }
    None
}

/// Spectral lower bound, derived from the enumeration.
pub fn lambda_min() -> u32 {
    min_terminating_lambda(AdmissibilityRule::HalfIntegral, 10)
        .expect("a terminating lambda exists below 10")
}

/// Minimum energy lambda_min * hbar * omega needed to populate the lowest
/// admissible state.
pub fn e_min(constants: &Constants) -> f64 {
    f64::from(lambda_min()) * constants.hbar * constants.omega
}

/// The transcription of the reference table through lambda = 10, bundled
/// with the crate so enumeration changes are caught byte-for-byte.
pub fn golden_table_json() -> &'static str {
    include_str!("../data/tableI.json")
}

pub fn golden_table() -> Vec<SpectrumRow> {
    serde_json::from_str(golden_table_json()).expect("bundled table parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_block_is_the_half_spin_doublet() {
        let rows = enumerate_table(2).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.lambda, 2);
        assert_eq!(row.ell, HalfInteger::from_twice(1));
        assert_eq!(row.abs_m, HalfInteger::from_twice(1));
        assert_eq!(row.big_n, 0);
        assert_eq!(row.multiplicity, Multiplicity::Count(2));
    }

    #[test]
    fn odd_block_is_flagged_infinite() {
        let rows = enumerate_table(3).unwrap();
        assert_eq!(rows.len(), 2);
        let row = &rows[1];
        assert_eq!(row.lambda, 3);
        assert_eq!(row.ell, HalfInteger::from_int(1));
        assert_eq!(row.big_n, 1);
        assert!(!row.is_terminating());
        assert_eq!(row.multiplicity, Multiplicity::Infinite);
    }

    #[test]
    fn lambda_ten_block_shape() {
        let rows = enumerate_table(10).unwrap();
        let block: Vec<_> = rows.iter().filter(|r| r.lambda == 10).collect();
        assert_eq!(block.len(), 5);
        let ns: Vec<u32> = block.iter().map(|r| r.big_n).collect();
        assert_eq!(ns, vec![8, 6, 4, 2, 0]);
        assert_eq!(block[4].multiplicity, Multiplicity::Count(10));
        for row in &block[..4] {
            assert_eq!(row.multiplicity, Multiplicity::Unset);
        }
    }

    #[test]
    fn bad_bound_is_rejected() {
        assert_eq!(
            enumerate_table(1).unwrap_err(),
            Error::BadBound { lambda_max: 1 }
        );
    }

    #[test]
    fn row_counts_and_consistency() {
        let rows = enumerate_table(10).unwrap();
        assert_eq!(rows.len(), 25);
        for row in &rows {
            // N printed is always lambda - 1 - 2|m|
            assert_eq!(
                i64::from(row.big_n),
                i64::from(row.lambda) - 1 - row.abs_m.twice()
            );
            assert_eq!(row.ell.twice(), i64::from(row.lambda) - 1);
            assert!(row.abs_m.twice() <= row.ell.twice());
            if row.is_terminating() {
                assert_eq!(row.big_n % 2, 0);
            } else {
                assert_eq!(row.big_n % 2, 1);
                assert_eq!(row.multiplicity, Multiplicity::Infinite);
            }
        }
        // each even block has lambda/2 printed rows; both m signs double it
        for lambda in [2u32, 4, 6, 8, 10] {
            let count = rows.iter().filter(|r| r.lambda == lambda).count();
            assert_eq!(count as u32, lambda / 2);
        }
    }

    #[test]
    fn multiplicity_formula() {
        assert_eq!(multiplicity(HalfInteger::from_twice(1)).unwrap(), 2);
        assert_eq!(multiplicity(HalfInteger::from_twice(9)).unwrap(), 10);
        assert_eq!(
            multiplicity(HalfInteger::from_int(1)).unwrap_err(),
            Error::IntegerEll { ell2: 2 }
        );
    }

    #[test]
    fn lambda_min_is_derived_not_asserted() {
        assert_eq!(lambda_min(), 2);
        assert_eq!(
            min_terminating_lambda(AdmissibilityRule::HalfIntegral, 10),
            Some(2)
        );
        // relaxing m to integers recovers the oscillator ground state
        assert_eq!(
            min_terminating_lambda(AdmissibilityRule::Integral, 10),
            Some(1)
        );
    }

    #[test]
    fn minimum_energy_scales_linearly() {
        assert_eq!(e_min(&Constants::default()), 2.0);
        assert_eq!(e_min(&Constants::new(1.0, 1.0, 0.5).unwrap()), 1.0);
        assert_eq!(e_min(&Constants::new(2.0, 1.0, 3.0).unwrap()), 12.0);
    }

    #[test]
    fn enumeration_matches_the_bundled_table() {
        assert_eq!(enumerate_table(10).unwrap(), golden_table());
    }

    #[test]
    fn rows_round_trip_through_json() {
        let rows = enumerate_table(7).unwrap();
        let json = serde_json::to_string(&rows).unwrap();
        let back: Vec<SpectrumRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(rows, back);
    }
}
