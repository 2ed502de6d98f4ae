//! Dimensions of the graded pieces of the covariant algebra.
//!
//! Three independent routes compute `dim (C_d)_{i,j}`:
//!
//! * [`dim_cov`]: a difference of two restricted partition counts [`omega`];
//! * [`dim_cov_qbin`]: a coefficient of `(1 - t) [d+i choose i]_t`, where the
//!   Gaussian polynomial comes from exact polynomial division;
//! * the expansion of the closed-form series (see [`crate::springer`]).
//!
//! Parity bookkeeping lives in the `dim_*` wrappers; [`omega`] takes the
//! already resolved weighted sum.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::poly::TPoly;

/// Counts of `n`-element multisets from `{0, 1, ..., d}` by their sum:
/// entry `m` is the number of `(a_0, ..., a_d) >= 0` with `sum a_k = n` and
/// `sum k a_k = m`, for `m = 0..=d*n`.
pub fn omega_row(d: u32, n: u32) -> Vec<BigInt> {
    let (n, top) = (n as usize, d as usize * n as usize);
    // ways[c][s]: multisets of c nonzero parts from 1..=p with sum s
    let mut ways = vec![vec![BigInt::zero(); top + 1]; n + 1];
    ways[0][0] = BigInt::one();
    for part in 1..=d as usize {
        for c in 1..=n {
            let (done, rest) = ways.split_at_mut(c);
            let prev = &done[c - 1];
            let cur = &mut rest[0];
            for s in part..=top {
                if !prev[s - part].is_zero() {
                    let add = prev[s - part].clone();
                    cur[s] += add;
                }
            }
        }
    }
    // the zero part pads any c <= n nonzero parts up to n
    let mut row = vec![BigInt::zero(); top + 1];
    for counts in &ways {
        for (s, w) in counts.iter().enumerate() {
            row[s] += w;
        }
    }
    row
}

/// Number of solutions of `a_1 + 2 a_2 + ... + d a_d = m` with
/// `a_0 + ... + a_d = n` in nonnegative integers. Zero outside `0..=d*n`.
pub fn omega(d: u32, n: u32, m: i64) -> BigInt {
    if m < 0 || m > i64::from(d) * i64::from(n) {
        return BigInt::zero();
    }
    omega_row(d, n).swap_remove(m as usize)
}

fn row_at(row: &[BigInt], m: i64) -> BigInt {
    usize::try_from(m)
        .ok()
        .and_then(|m| row.get(m).cloned())
        .unwrap_or_default()
}

/// Resolves the weight `(d i - j) / 2`, or `None` when it is negative or a
/// half-integer.
fn half_weight(d: u32, i: u32, j: u32) -> Option<i64> {
    let diff = i64::from(d) * i64::from(i) - i64::from(j);
    (diff >= 0 && diff % 2 == 0).then_some(diff / 2)
}

fn dim_from_row(row: &[BigInt], d: u32, i: u32, j: u32) -> BigInt {
    match half_weight(d, i, j) {
        Some(w) => {
            let dim = row_at(row, w) - row_at(row, w - 1);
            assert!(!dim.is_negative(), "negative dimension at d={d}, i={i}, j={j}");
            dim
        }
        None => BigInt::zero(),
    }
}

/// `dim (C_d)_{i,j}` as a difference of partition counts.
pub fn dim_cov(d: u32, i: u32, j: u32) -> BigInt {
    if half_weight(d, i, j).is_none() {
        return BigInt::zero();
    }
    dim_from_row(&omega_row(d, i), d, i, j)
}

/// Dimension of the degree-`n` invariants (the classical difference formula).
pub fn dim_inv(d: u32, n: u32) -> BigInt {
    let dn = i64::from(d) * i64::from(n);
    if dn % 2 != 0 {
        return BigInt::zero();
    }
    let row = omega_row(d, n);
    row_at(&row, dn / 2) - row_at(&row, dn / 2 - 1)
}

/// Dimension of all covariants of degree `n`, summed over orders. Of the two
/// counts only the one with an integral argument contributes.
pub fn dim_cov_graded(d: u32, n: u32) -> BigInt {
    let dn = i64::from(d) * i64::from(n);
    let row = omega_row(d, n);
    if dn % 2 == 0 {
        row_at(&row, dn / 2)
    } else {
        row_at(&row, (dn - 1) / 2)
    }
}

/// Gaussian polynomial `(1-q^{d+1})...(1-q^{d+n}) / ((1-q)...(1-q^n))`,
/// i.e. `[d+n choose n]_q`, by exact division.
pub fn qbinomial(d: u32, n: u32) -> TPoly {
    let numer = TPoly::product(&(d + 1..=d + n).map(TPoly::one_minus_power).collect::<Vec<_>>());
    let denom = TPoly::product(&(1..=n).map(TPoly::one_minus_power).collect::<Vec<_>>());
    numer
        .exact_div(&denom)
        .expect("Gaussian binomial quotient is always a polynomial")
}

/// `dim (C_d)_{i,j}` as the coefficient of `t^{(d i - j)/2}` in
/// `(1 - t) [d+i choose i]_t`.
pub fn dim_cov_qbin(d: u32, i: u32, j: u32) -> BigInt {
    match half_weight(d, i, j) {
        Some(w) => {
            let shifted = &qbinomial(d, i) * &TPoly::one_minus_power(1);
            shifted.coeff_signed(w)
        }
        None => BigInt::zero(),
    }
}

/// Dimension grid `dim (C_d)_{i,j}` for `i <= imax`, `j <= jmax`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimTable {
    pub d: u32,
    pub imax: u32,
    pub jmax: u32,
    #[serde(serialize_with = "serialize_grid")]
    entries: Vec<Vec<BigInt>>,
}

fn serialize_grid<S: serde::Serializer>(grid: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let as_strings: Vec<Vec<String>> = grid
        .iter()
        .map(|row| row.iter().map(BigInt::to_string).collect())
        .collect();
    serde::Serialize::serialize(&as_strings, s)
}

impl DimTable {
    pub fn get(&self, i: u32, j: u32) -> &BigInt {
        &self.entries[i as usize][j as usize]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Header `i\j,0,1,...,jmax`, then one line per degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i\\j");
        for j in 0..=self.jmax {
            let _ = write!(out, ",{j}");
        }
        out.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            let _ = write!(out, "{i}");
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables always serialize")
    }
}

/// Fills the grid from the partition-count route, one `omega_row` per degree.
pub fn dim_table(d: u32, imax: u32, jmax: u32) -> DimTable {
    let entries = (0..=imax)
        .map(|i| {
            let row = omega_row(d, i);
            (0..=jmax).map(|j| dim_from_row(&row, d, i, j)).collect()
        })
        .collect();
    DimTable {
        d,
        imax,
        jmax,
        entries,
    }
}
