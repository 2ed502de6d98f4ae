//! Inputs shared by the criterion benches.

use covseries::{BinomFactor, FactoredRational, ZTPoly};

/// Degrees benchmarked end to end.
pub const PIPELINE_DEGREES: &[u32] = &[4, 6, 8, 10, 12];

/// A rational function whose numerator is divisible by several of its
/// denominator factors, for exercising normalization.
pub fn reducible_fixture(width: u32) -> FactoredRational {
    let factors: Vec<BinomFactor> = (1..=width).map(|a| BinomFactor::simple(2 * a, a % 3)).collect();
    let numerator = factors
        .iter()
        .step_by(2)
        .fold(ZTPoly::from_terms([((0, 0), 1), ((1, 1), -2)]), |acc, f| acc.mul_one_minus(f.a, f.b));
    FactoredRational::new(numerator, factors)
}
