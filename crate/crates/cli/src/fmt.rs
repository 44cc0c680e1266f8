//! Deterministic number formatting for CLI output: 12 significant digits,
//! lowercase `e` exponent, so identical flags always produce identical bytes.

/// Formats with 12 significant digits and a lowercase exponent.
pub fn sig12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // normalize -0.0
    format!("{x:.11e}")
}

/// Rounds to 12 significant digits; applied to every float that enters a
/// JSON document so the emitted numbers match the CSV convention.
pub fn round12(x: f64) -> f64 {
    sig12(x).parse().expect("formatted float parses")
}
