//! The transport operators `psi_n` (univariate series to bivariate) and
//! `Psi_n` (reflection of the `t` exponent against `n * i`).
//!
//! `psi_n(t^m) = z^i t^j` where `m = n i - j` and `0 <= j < n`. Applied to a
//! rational function with denominator `prod (1 - t^k)`, each factor is first
//! promoted to `(1 - t^{n k})` by multiplying with
//! `Q_n(t^k) = 1 + t^k + ... + t^{(n-1) k}`, after which `psi_n` moves it out
//! as `(1 - z^k)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::{BinomFactor, FactoredRational, TPoly, ZTPoly};

/// Position `(i, j)` of `psi_n(t^m)`, with `m = n i - j` and `0 <= j < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsiImage {
    pub i: u32,
    pub j: u32,
}

impl PsiImage {
    /// # Panics
    /// If `n == 0`.
    pub fn of(n: u32, m: u32) -> Self {
        assert!(n >= 1, "psi image needs a positive order");
        let i = m.div_ceil(n);
        PsiImage { i, j: n * i - m }
    }

    /// Inverse map: the exponent `m = n i - j`.
    pub fn exponent(&self, n: u32) -> u32 {
        n * self.i - self.j
    }
}

/// `psi_n(t^m)`: a monomial for `n >= 1`, the constant 1 for `n = 0`, and
/// zero for negative `n`.
pub fn psi_monomial(n: i64, m: u32) -> ZTPoly {
    match n {
        n if n < 0 => ZTPoly::zero(),
        0 => ZTPoly::one(),
        n => {
            let img = PsiImage::of(n as u32, m);
            ZTPoly::monomial(img.i, img.j, BigInt::one())
        }
    }
}

/// Linear extension of [`psi_monomial`].
pub fn psi_poly(n: i64, p: &TPoly) -> ZTPoly {
    match n {
        n if n < 0 => ZTPoly::zero(),
        0 => {
            let total: BigInt = p.terms().iter().map(|(_, c)| c).sum();
            ZTPoly::monomial(0, 0, total)
        }
        n => {
            // (i, j) determines m, so no two terms collide
            let n = n as u32;
            ZTPoly::from_terms(p.terms().iter().map(|(m, c)| {
                let img = PsiImage::of(n, *m);
                ((img.i, img.j), c.clone())
            }))
        }
    }
}

/// `Q_n(t^k) = 1 + t^k + t^{2k} + ... + t^{(n-1)k}`.
pub fn qgeom(n: u32, k: u32) -> TPoly {
    TPoly::from_terms((0..n).map(|s| (s * k, 1)))
}

/// `psi_n` of `numerator / prod (1 - t^{k_i})`, returned unnormalized as
/// `psi_n(numerator * prod Q_n(t^{k_i})) / prod (1 - z^{k_i})`.
///
/// # Panics
/// If `n == 0` or some `k_i == 0`.
pub fn psi_rational(n: u32, numerator: &TPoly, denom_exponents: &[u32]) -> FactoredRational {
    assert!(n >= 1, "psi_rational needs a positive order");
    assert!(denom_exponents.iter().all(|&k| k > 0), "factors (1 - t^0) are not allowed");
    let mut sorted = denom_exponents.to_vec();
    sorted.sort_unstable();
    let lifted = sorted
        .iter()
        .fold(numerator.clone(), |acc, &k| &acc * &qgeom(n, k));
    FactoredRational::new(
        psi_poly(i64::from(n), &lifted),
        sorted.iter().map(|&k| BinomFactor::simple(k, 0)),
    )
}

/// `Psi_n(S)` truncated to `i <= imax`, `j <= jmax`, where
/// `Psi_n(z^i t^j) = z^i t^{n i - j}` and terms with `n i - j < 0` vanish.
///
/// The output coefficient at `z^i t^j` reads the input at `z^i t^{n i - j}`,
/// so `S` must be complete up to `t^{n * imax}`.
pub fn big_psi_truncated(n: u32, series: &ZTPoly, imax: u32, jmax: u32) -> ZTPoly {
    ZTPoly::from_terms(series.terms().iter().filter_map(|((i, j), c)| {
        if *i > imax {
            return None;
        }
        let reflected = i64::from(n) * i64::from(*i) - i64::from(*j);
        (0..=i64::from(jmax))
            .contains(&reflected)
            .then(|| ((*i, reflected as u32), c.clone()))
    }))
}

/// Applies `psi_n` term by term to a truncated univariate series.
pub fn psi_series(n: u32, coeffs: &[BigInt]) -> ZTPoly {
    ZTPoly::from_terms(
        coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| {
                let img = PsiImage::of(n, m as u32);
                ((img.i, img.j), c.clone())
            }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zt(terms: &[((u32, u32), i64)]) -> ZTPoly {
        ZTPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn monomial_cases() {
        for n in 0..6 {
            assert_eq!(psi_monomial(n, 0), ZTPoly::one());
        }
        for m in 0..10 {
            assert_eq!(psi_monomial(1, m), ZTPoly::monomial(m, 0, 1));
            assert_eq!(psi_monomial(0, m), ZTPoly::one());
            assert_eq!(psi_monomial(-2, m), ZTPoly::zero());
        }
        // 4 = 3*2 - 2
        assert_eq!(psi_monomial(3, 4), ZTPoly::monomial(2, 2, 1));
    }

    #[test]
    fn image_is_injective_and_inverts() {
        for n in 1..=7 {
            let mut seen = std::collections::HashSet::new();
            for m in 0..200 {
                let img = PsiImage::of(n, m);
                assert!(img.j < n);
                assert_eq!(img.exponent(n), m);
                assert!(seen.insert(img));
            }
        }
    }

    #[test]
    fn poly_cases() {
        assert_eq!(psi_poly(2, &TPoly::from_terms([(0, 1), (4, 1)])), zt(&[((0, 0), 1), ((2, 0), 1)]));
        assert_eq!(psi_poly(3, &TPoly::zero()), ZTPoly::zero());
        assert_eq!(
            psi_poly(1, &TPoly::from_dense([1, 1, 1])),
            zt(&[((0, 0), 1), ((1, 0), 1), ((2, 0), 1)])
        );
    }

    #[test]
    fn qgeom_cases() {
        assert_eq!(qgeom(1, 5), TPoly::one());
        assert_eq!(qgeom(2, 4), TPoly::from_terms([(0, 1), (4, 1)]));
        assert_eq!(qgeom(3, 2), TPoly::from_terms([(0, 1), (2, 1), (4, 1)]));
    }

    #[test]
    fn rational_cases() {
        let r = psi_rational(2, &TPoly::one(), &[4]);
        assert_eq!(
            r,
            FactoredRational::new(zt(&[((0, 0), 1), ((2, 0), 1)]), [BinomFactor::simple(4, 0)])
        );
        assert_eq!(
            r.normalize(),
            FactoredRational::new(ZTPoly::one(), [BinomFactor::simple(2, 0)])
        );
        assert_eq!(psi_rational(1, &TPoly::one(), &[]), FactoredRational::polynomial(ZTPoly::one()));
    }

    #[test]
    fn big_psi_cases() {
        // z^i t^{n i} lands on z^i t^0
        assert_eq!(big_psi_truncated(3, &ZTPoly::monomial(2, 6, 1), 4, 4), ZTPoly::monomial(2, 0, 1));
        // n i - j < 0 is dropped
        assert_eq!(big_psi_truncated(2, &ZTPoly::monomial(1, 3, 1), 4, 4), ZTPoly::zero());
        // beyond the requested box
        assert_eq!(big_psi_truncated(2, &ZTPoly::monomial(3, 0, 1), 2, 9), ZTPoly::zero());
        assert_eq!(big_psi_truncated(2, &ZTPoly::monomial(2, 0, 1), 2, 3), ZTPoly::zero());
    }
}
