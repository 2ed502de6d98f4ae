//! Sparse bivariate polynomials in `z` and `t`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::tpoly::TPoly;
use crate::error::DivisionFails;

/// Exponent pair `(z-exponent, t-exponent)`. The derived ordering is the
/// lexicographic order used for canonical iteration.
pub type Exps = (u32, u32);

/// Sparse polynomial in `z` and `t`, stored as a vector sorted
/// lexicographically by `(z, t)` exponents with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZTPoly {
    terms: Vec<(Exps, BigInt)>,
}

impl ZTPoly {
    pub fn zero() -> Self {
        ZTPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(z: u32, t: u32, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        ZTPoly {
            terms: vec![((z, t), coeff)],
        }
    }

    /// Builds a polynomial from `((z, t), coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exps, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<Exps, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self::from_sorted_unchecked(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn from_sorted_unchecked(terms: Vec<(Exps, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        ZTPoly { terms }
    }

    fn from_unsorted(mut terms: Vec<(Exps, BigInt)>) -> Self {
        terms.sort_unstable_by_key(|(e, _)| *e);
        let mut out: Vec<(Exps, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ZTPoly { terms: out }
    }

    /// Embeds a polynomial in `t` unchanged.
    pub fn from_t(p: &TPoly) -> Self {
        Self::from_sorted_unchecked(p.terms().iter().map(|(e, c)| ((0, *e), c.clone())).collect())
    }

    /// Renames the variable: `p(t) -> p(z)`.
    pub fn from_t_as_z(p: &TPoly) -> Self {
        Self::from_sorted_unchecked(p.terms().iter().map(|(e, c)| ((*e, 0), c.clone())).collect())
    }

    /// `1 - z^a t^b`.
    pub fn one_minus(a: u32, b: u32) -> Self {
        Self::from_terms([((0, 0), 1), ((a, b), -1)])
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Exps, BigInt)> {
        self.terms
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

    pub fn coeff(&self, z: u32, t: u32) -> BigInt {
        match self.terms.binary_search_by_key(&(z, t), |(e, _)| *e) {
            Ok(idx) => self.terms[idx].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0, 0)
    }

    /// Largest `z` exponent present.
    pub fn z_degree(&self) -> Option<u32> {
        self.terms.last().map(|((z, _), _)| *z)
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.iter().map(|((_, t), _)| *t).max()
    }

    /// Keeps only the terms with `z <= imax` and `t <= jmax`.
    pub fn truncate(&self, imax: u32, jmax: u32) -> Self {
        Self::from_sorted_unchecked(
            self.terms
                .iter()
                .filter(|((z, t), _)| *z <= imax && *t <= jmax)
                .cloned()
                .collect(),
        )
    }

    /// Multiply by `z^a t^b`; shifting preserves the lexicographic order.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        Self::from_sorted_unchecked(
            self.terms
                .iter()
                .map(|((z, t), c)| ((z + a, t + b), c.clone()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_sorted_unchecked(self.terms.iter().map(|(e, x)| (*e, x * c)).collect())
    }

    /// Multiply by `(1 - z^a t^b)`: a single merge of `self` with its shift.
    pub fn mul_one_minus(&self, a: u32, b: u32) -> Self {
        let shifted = self.shift(a, b);
        merge(&self.terms, &shifted.terms, true)
    }

    /// Exact quotient by `(1 - z^a t^b)`.
    ///
    /// The quotient `q` satisfies `q(p) = n(p) + q(p - (a, b))`, so along each
    /// line `base + s*(a, b)` it is the running sum of the numerator. The
    /// division is exact iff every line sums to zero.
    pub fn div_one_minus(&self, a: u32, b: u32) -> Result<Self, DivisionFails> {
        assert!((a, b) != (0, 0), "1 - z^0 t^0 is the zero polynomial");
        let steps = |z: u32, t: u32| -> u32 {
            match (a, b) {
                (0, b) => t / b,
                (a, 0) => z / a,
                (a, b) => (z / a).min(t / b),
            }
        };
        let mut lines: HashMap<Exps, Vec<(u32, &BigInt)>> = HashMap::new();
        for ((z, t), c) in &self.terms {
            let s = steps(*z, *t);
            lines
                .entry((z - s * a, t - s * b))
                .or_default()
                .push((s, c));
        }
        let mut out = Vec::new();
        for (base, mut points) in lines {
            points.sort_unstable_by_key(|(s, _)| *s);
            let mut running = BigInt::zero();
            for (idx, (s, c)) in points.iter().enumerate() {
                running += *c;
                if running.is_zero() {
                    continue;
                }
                let Some((next, _)) = points.get(idx + 1) else {
                    return Err(DivisionFails);
                };
                for step in *s..*next {
                    out.push(((base.0 + step * a, base.1 + step * b), running.clone()));
                }
            }
        }
        out.sort_unstable_by_key(|(e, _)| *e);
        Ok(Self::from_sorted_unchecked(out))
    }

    fn mul_impl(&self, other: &ZTPoly) -> ZTPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc: HashMap<Exps, BigInt> = HashMap::with_capacity(self.len() + other.len());
        for ((za, ta), ca) in &self.terms {
            for ((zb, tb), cb) in &other.terms {
                *acc.entry((za + zb, ta + tb)).or_default() += ca * cb;
            }
        }
        Self::from_unsorted(acc.into_iter().collect())
    }
}

fn merge(lhs: &[(Exps, BigInt)], rhs: &[(Exps, BigInt)], negate_rhs: bool) -> ZTPoly {
    let mut out = Vec::with_capacity(lhs.len() + rhs.len());
    let (mut i, mut j) = (0, 0);
    let take_rhs = |c: &BigInt| if negate_rhs { -c } else { c.clone() };
    while i < lhs.len() && j < rhs.len() {
        let (ea, ca) = &lhs[i];
        let (eb, cb) = &rhs[j];
        if ea < eb {
            out.push((*ea, ca.clone()));
            i += 1;
        } else if eb < ea {
            out.push((*eb, take_rhs(cb)));
            j += 1;
        } else {
            let c = if negate_rhs { ca - cb } else { ca + cb };
            if !c.is_zero() {
                out.push((*ea, c));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(lhs[i..].iter().cloned());
    out.extend(rhs[j..].iter().map(|(e, c)| (*e, take_rhs(c))));
    ZTPoly::from_sorted_unchecked(out)
}

impl<'a> Add<&'a ZTPoly> for &'a ZTPoly {
    type Output = ZTPoly;
    fn add(self, rhs: &'a ZTPoly) -> ZTPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a ZTPoly> for &'a ZTPoly {
    type Output = ZTPoly;
    fn sub(self, rhs: &'a ZTPoly) -> ZTPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl<'a> Mul<&'a ZTPoly> for &'a ZTPoly {
    type Output = ZTPoly;
    fn mul(self, rhs: &'a ZTPoly) -> ZTPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &ZTPoly {
    type Output = ZTPoly;
    fn neg(self) -> ZTPoly {
        ZTPoly::from_sorted_unchecked(self.terms.iter().map(|(e, c)| (*e, -c)).collect())
    }
}

/// ASCII rendering: `1-z*t+2*z^2*t^3`, terms in canonical order.
impl fmt::Display for ZTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, ((z, t), c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || (*z, *t) == (0, 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("z", *z), ("t", *t)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    e => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
