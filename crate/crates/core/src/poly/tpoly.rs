//! Univariate polynomials in `t` with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::DivisionFails;

/// Sparse polynomial in `t`. Terms are kept with strictly increasing
/// exponents and no zero coefficients; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    terms: Vec<(u32, BigInt)>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: u32, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        TPoly {
            terms: vec![(exp, coeff)],
        }
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        TPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Dense constructor: `coeffs[k]` is the coefficient of `t^k`.
    pub fn from_dense<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .map(|(e, c)| (e as u32, c.into()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        TPoly { terms }
    }

    /// `1 - t^k`.
    pub fn one_minus_power(k: u32) -> Self {
        Self::from_terms([(0, 1), (k, -1)])
    }

    pub fn terms(&self) -> &[(u32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(e, _)| *e)
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(idx) => self.terms[idx].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Coefficient of `t^exp` for a possibly negative exponent.
    pub fn coeff_signed(&self, exp: i64) -> BigInt {
        u32::try_from(exp).map_or_else(|_| BigInt::zero(), |e| self.coeff(e))
    }

    pub fn to_dense(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.degree().map_or(0, |d| d as usize + 1)];
        for (e, c) in &self.terms {
            out[*e as usize] = c.clone();
        }
        out
    }

    /// `p(t) -> p(t^n)`.
    pub fn substitute_power(&self, n: u32) -> Self {
        assert!(n > 0, "substitution t -> t^0 is not a polynomial map");
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (e * n, c.clone())).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: u32) -> Self {
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Exact quotient `self / divisor`, or [`DivisionFails`] when the
    /// remainder is nonzero or a coefficient of the quotient would not be
    /// an integer.
    pub fn exact_div(&self, divisor: &TPoly) -> Result<TPoly, DivisionFails> {
        let (lead_exp, lead) = divisor.terms.last().expect("division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let deg = self.degree().unwrap();
        if deg < *lead_exp {
            return Err(DivisionFails);
        }
        let mut rem = self.to_dense();
        let qdeg = (deg - lead_exp) as usize;
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let top = &rem[k + *lead_exp as usize];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(DivisionFails);
            }
            for (e, c) in &divisor.terms {
                rem[k + *e as usize] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(DivisionFails);
        }
        Ok(TPoly::from_dense(quot))
    }

    fn mul_impl(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let deg = (self.degree().unwrap() + other.degree().unwrap()) as usize;
        let work = self.len().saturating_mul(other.len());
        if deg < work.saturating_mul(4).max(64) {
            let mut acc = vec![BigInt::zero(); deg + 1];
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    acc[(ea + eb) as usize] += ca * cb;
                }
            }
            TPoly::from_dense(acc)
        } else {
            let mut acc: BTreeMap<u32, BigInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    *acc.entry(ea + eb).or_default() += ca * cb;
                }
            }
            TPoly {
                terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            }
        }
    }

    fn add_impl(&self, other: &TPoly, negate_other: bool) -> TPoly {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let take_other = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < self.len() || j < other.len() {
            let a = self.terms.get(i);
            let b = other.terms.get(j);
            match (a, b) {
                (Some((ea, ca)), Some((eb, cb))) if ea == eb => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((ea, ca)), Some((eb, _))) if ea < eb => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (Some(_), Some((eb, cb))) | (None, Some((eb, cb))) => {
                    out.push((*eb, take_other(cb)));
                    j += 1;
                }
                (Some((ea, ca)), None) => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        TPoly { terms: out }
    }

    /// Product of `1 + t^k + ... + t^{(n-1)k}` style factors and the like.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a TPoly>) -> TPoly {
        factors.into_iter().fold(TPoly::one(), |acc, f| &acc * f)
    }
}

impl<'a> Add<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn add(self, rhs: &'a TPoly) -> TPoly {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &'a TPoly) -> TPoly {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a TPoly> for &'a TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &'a TPoly) -> TPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}
