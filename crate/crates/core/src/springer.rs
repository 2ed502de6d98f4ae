//! Closed-form bivariate Poincare series `P_d(z, t)`.
//!
//! `P_d` is a sum over `0 <= k < d/2` of residue terms
//!
//! ```text
//! psi_{d-2k}( (-1)^k t^{k(k+1)} (1 - t^2) / ((t^2;t^2)_k (t^2;t^2)_{d-k}) ) / (1 - z t^{d-2k})
//! ```
//!
//! Each `psi` is evaluated on a polynomial numerator after lifting the
//! `(1 - t^{2e})` denominators, the terms are added over a common factored
//! denominator, and the sum is normalized. [`verify_dimensions`] checks the
//! expansion against the partition-count table.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::dims::{dim_cov_graded, dim_inv, dim_table};
use crate::error::{Error, Result};
use crate::poly::{BinomFactor, FactoredRational, TPoly};
use crate::psi::psi_rational;

/// t-exponents `{2, 4, ..., 2n}` of the factors of `(t^2; t^2)_n`.
pub fn qpochhammer_exponents(n: u32) -> Vec<u32> {
    (1..=n).map(|s| 2 * s).collect()
}

/// One summand before `psi` is applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTerm {
    pub k: u32,
    /// `(-1)^k`
    pub sign: i8,
    /// `k (k + 1)`
    pub tshift: u32,
    pub numerator: TPoly,
    /// Sorted exponents `e` of the factors `(1 - t^e)`.
    pub denom_exponents: Vec<u32>,
    /// The `psi` order `d - 2k`.
    pub order: u32,
    /// `(1 - z t^{d-2k})`
    pub cov_factor: BinomFactor,
}

impl ResidueTerm {
    /// Applies `psi_{order}` and attaches the trailing `1/(1 - z t^{order})`.
    pub fn transported(&self) -> FactoredRational {
        psi_rational(self.order, &self.numerator, &self.denom_exponents).with_factor(self.cov_factor)
    }
}

fn check_index(d: u32, k: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    if 2 * k >= d {
        return Err(Error::ResidueIndex { d, k });
    }
    Ok(())
}

fn residue_parts(d: u32, k: u32) -> (i8, u32, Vec<u32>) {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let mut exps = qpochhammer_exponents(k);
    exps.extend(qpochhammer_exponents(d - k));
    exps.sort_unstable();
    (sign, k * (k + 1), exps)
}

/// The `k`-th residue term with one `(1 - t^2)` cancelled between the
/// numerator and `(t^2; t^2)_{d-k}`.
pub fn residue_term(d: u32, k: u32) -> Result<ResidueTerm> {
    check_index(d, k)?;
    let (sign, tshift, mut exps) = residue_parts(d, k);
    // d - k >= 1, so a factor (1 - t^2) is always present
    let two = exps.iter().position(|&e| e == 2).expect("(t^2;t^2)_{d-k} contains 1 - t^2");
    exps.remove(two);
    Ok(ResidueTerm {
        k,
        sign,
        tshift,
        numerator: TPoly::monomial(tshift, i64::from(sign)),
        denom_exponents: exps,
        order: d - 2 * k,
        cov_factor: BinomFactor::simple(1, d - 2 * k),
    })
}

/// The same residue term with `(1 - t^2)` left in the numerator.
pub fn residue_term_uncancelled(d: u32, k: u32) -> Result<ResidueTerm> {
    check_index(d, k)?;
    let (sign, tshift, exps) = residue_parts(d, k);
    Ok(ResidueTerm {
        k,
        sign,
        tshift,
        numerator: TPoly::from_terms([(tshift, i64::from(sign)), (tshift + 2, -i64::from(sign))]),
        denom_exponents: exps,
        order: d - 2 * k,
        cov_factor: BinomFactor::simple(1, d - 2 * k),
    })
}

/// Sums transported residue terms in increasing `k` and normalizes.
pub fn series_from_terms(terms: &[ResidueTerm]) -> FactoredRational {
    let transported: Vec<FactoredRational> = terms.iter().map(ResidueTerm::transported).collect();
    FactoredRational::sum(&transported).normalize()
}

/// `P_d(z, t)` as a normalized factored rational function.
pub fn poincare_series(d: u32) -> Result<FactoredRational> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    let terms = (0..d.div_ceil(2))
        .map(|k| residue_term(d, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(series_from_terms(&terms))
}

/// A coefficient of the expanded series that disagrees with the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub i: u32,
    pub j: u32,
    pub expected: BigInt,
    pub got: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    /// Series coefficient against the partition-count table.
    Coefficient,
    /// Order-zero column against the invariant formula.
    Invariant,
    /// Complete row sum against the graded covariant formula.
    RowSum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub d: u32,
    pub imax: u32,
    pub jmax: u32,
    pub mismatches: Vec<(Check, Mismatch)>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the expansion of `series` with the dimension table of degree
/// `d`. Row sums are only checked for rows whose full order range
/// `0..=d*i` fits under `jmax`.
pub fn verify_series(series: &FactoredRational, d: u32, imax: u32, jmax: u32) -> VerificationReport {
    let expansion = series.expand_truncated(imax, jmax);
    let table = dim_table(d, imax, jmax);
    let mut mismatches = Vec::new();
    for i in 0..=imax {
        let mut row_sum = BigInt::default();
        for j in 0..=jmax {
            let got = expansion.coeff(i, j);
            let expected = table.get(i, j).clone();
            row_sum += &got;
            if got != expected {
                mismatches.push((Check::Coefficient, Mismatch { i, j, expected, got }));
            }
        }
        let inv = dim_inv(d, i);
        if *table.get(i, 0) != inv {
            mismatches.push((
                Check::Invariant,
                Mismatch { i, j: 0, expected: inv, got: table.get(i, 0).clone() },
            ));
        }
        if u64::from(d) * u64::from(i) <= u64::from(jmax) {
            let graded = dim_cov_graded(d, i);
            if row_sum != graded || row_sum.is_negative() {
                mismatches.push((
                    Check::RowSum,
                    Mismatch { i, j: jmax, expected: graded, got: row_sum },
                ));
            }
        }
    }
    VerificationReport { d, imax, jmax, mismatches }
}

/// Computes `P_d` and checks every coefficient in the `(imax, jmax)` box.
pub fn verify_dimensions(d: u32, imax: u32, jmax: u32) -> Result<VerificationReport> {
    Ok(verify_series(&poincare_series(d)?, d, imax, jmax))
}
