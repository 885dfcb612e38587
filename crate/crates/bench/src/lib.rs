//! Fixed inputs shared by the benchmarks.

use monster_core::ChartString;

/// The chart `2121…` of length `len`, alternating critical and regular steps.
pub fn alternating_chart(len: usize) -> ChartString {
    let digits: String = (0..len).map(|i| if i % 2 == 0 { '2' } else { '1' }).collect();
    digits.parse().expect("alternating chart is valid")
}

/// The chart `22…2` of length `len`.
pub fn critical_chart(len: usize) -> ChartString {
    "2".repeat(len).parse().expect("all-critical chart is valid")
}

pub const CUSP: &str = "x1 = s^2; x2 = s^3";
