//! Rational functions kept as a numerator over a product of binomials
//! `(1 - z^a t^b)^m`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::ztpoly::{Exps, ZTPoly};
use crate::error::{DivisionFails, Error};

/// The denominator atom `(1 - z^a t^b)^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomFactor {
    pub a: u32,
    pub b: u32,
    pub m: u32,
}

impl BinomFactor {
    pub fn new(a: u32, b: u32, m: u32) -> Result<Self, Error> {
        if (a, b) == (0, 0) || m == 0 {
            return Err(Error::InvalidFactor { a, b, m });
        }
        Ok(BinomFactor { a, b, m })
    }

    /// `(1 - z^a t^b)` with multiplicity one.
    ///
    /// # Panics
    /// If `(a, b) == (0, 0)`.
    pub fn simple(a: u32, b: u32) -> Self {
        Self::new(a, b, 1).expect("(1 - z^0 t^0) is not a valid factor")
    }

    pub fn key(&self) -> Exps {
        (self.a, self.b)
    }

    /// Expanded polynomial `(1 - z^a t^b)^m`.
    pub fn expand(&self) -> ZTPoly {
        (0..self.m).fold(ZTPoly::one(), |acc, _| acc.mul_one_minus(self.a, self.b))
    }
}

/// Divides `n` by one copy of `(1 - z^a t^b)`.
pub fn exact_div_factor(n: &ZTPoly, f: &BinomFactor) -> Result<ZTPoly, DivisionFails> {
    n.div_one_minus(f.a, f.b)
}

/// `numerator / prod (1 - z^a t^b)^m`, with the denominator sorted by
/// `(a, b)` and each key appearing once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredRational {
    numerator: ZTPoly,
    denominator: Vec<BinomFactor>,
}

impl FactoredRational {
    /// Merges repeated `(a, b)` keys into multiplicities.
    pub fn new(numerator: ZTPoly, factors: impl IntoIterator<Item = BinomFactor>) -> Self {
        let mut merged: BTreeMap<Exps, u32> = BTreeMap::new();
        for f in factors {
            *merged.entry(f.key()).or_default() += f.m;
        }
        Self::from_multiplicities(numerator, merged)
    }

    fn from_multiplicities(numerator: ZTPoly, factors: BTreeMap<Exps, u32>) -> Self {
        let denominator = factors
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|((a, b), m)| BinomFactor { a, b, m })
            .collect();
        FactoredRational {
            numerator,
            denominator,
        }
    }

    pub fn polynomial(numerator: ZTPoly) -> Self {
        FactoredRational {
            numerator,
            denominator: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &ZTPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BinomFactor] {
        &self.denominator
    }

    fn multiplicities(&self) -> BTreeMap<Exps, u32> {
        self.denominator.iter().map(|f| (f.key(), f.m)).collect()
    }

    /// The expanded denominator product.
    pub fn denominator_poly(&self) -> ZTPoly {
        self.denominator
            .iter()
            .fold(ZTPoly::one(), |acc, f| (0..f.m).fold(acc, |p, _| p.mul_one_minus(f.a, f.b)))
    }

    /// Multiply by `1 / (1 - z^a t^b)`.
    pub fn with_factor(mut self, f: BinomFactor) -> Self {
        let mut mult = self.multiplicities();
        *mult.entry(f.key()).or_default() += f.m;
        self.denominator = Self::from_multiplicities(ZTPoly::zero(), mult).denominator;
        self
    }

    /// Sum over the least common denominator: each key takes its maximum
    /// multiplicity across the summands and every numerator is scaled by the
    /// factors its own denominator lacks.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a FactoredRational>) -> Self {
        let terms: Vec<&FactoredRational> = terms.into_iter().collect();
        let mut lcd: BTreeMap<Exps, u32> = BTreeMap::new();
        for term in &terms {
            for f in &term.denominator {
                let slot = lcd.entry(f.key()).or_default();
                *slot = (*slot).max(f.m);
            }
        }
        let mut numerator = ZTPoly::zero();
        for term in &terms {
            let own = term.multiplicities();
            let mut scaled = term.numerator.clone();
            for (&(a, b), &m) in &lcd {
                let missing = m - own.get(&(a, b)).copied().unwrap_or(0);
                for _ in 0..missing {
                    scaled = scaled.mul_one_minus(a, b);
                }
            }
            numerator = &numerator + &scaled;
        }
        Self::from_multiplicities(numerator, lcd)
    }

    /// Greedy cancellation in sorted factor order.
    ///
    /// Each denominator copy `(1 - u^g)`, with `u = z^(a/g) t^(b/g)` and
    /// `g = gcd(a, b)`, is removed when it divides the numerator. Otherwise it
    /// is lowered to `(1 - u^e)` for the smallest proper divisor `e` of `g`
    /// such that `(1 - u^g) / (1 - u^e)` divides the numerator. A failed
    /// divisibility test never succeeds later because the numerator only
    /// loses factors, so failures are remembered and not retried.
    pub fn normalize(&self) -> Self {
        let mut numerator = self.numerator.clone();
        let mut mult = self.multiplicities();
        if numerator.is_zero() {
            return Self::polynomial(numerator);
        }
        let mut failed: HashSet<(Exps, u32)> = HashSet::new();
        let mut worklist: BTreeSet<Exps> = mult.keys().copied().collect();
        while let Some(key) = worklist.pop_first() {
            let (a, b) = key;
            let g = a.gcd(&b);
            let (ua, ub) = (a / g, b / g);
            while mult.get(&key).copied().unwrap_or(0) > 0 {
                if !failed.contains(&(key, 0)) {
                    match numerator.div_one_minus(a, b) {
                        Ok(q) => {
                            numerator = q;
                            *mult.get_mut(&key).unwrap() -= 1;
                            continue;
                        }
                        Err(DivisionFails) => {
                            failed.insert((key, 0));
                        }
                    }
                }
                let lowered = proper_divisors(g).into_iter().find_map(|e| {
                    if failed.contains(&(key, e)) {
                        return None;
                    }
                    let trial = numerator.mul_one_minus(ua * e, ub * e).div_one_minus(a, b);
                    match trial {
                        Ok(q) => Some((e, q)),
                        Err(DivisionFails) => {
                            failed.insert((key, e));
                            None
                        }
                    }
                });
                let Some((e, q)) = lowered else { break };
                numerator = q;
                *mult.get_mut(&key).unwrap() -= 1;
                let smaller = (ua * e, ub * e);
                *mult.entry(smaller).or_default() += 1;
                worklist.insert(smaller);
            }
        }
        Self::from_multiplicities(numerator, mult)
    }

    /// Power-series coefficients of `z^i t^j` for `i <= imax`, `j <= jmax`.
    ///
    /// Works on a dense grid: each geometric factor `1/(1 - z^a t^b)` is a
    /// prefix sum along the direction `(a, b)`, applied in increasing order.
    pub fn expand_truncated(&self, imax: u32, jmax: u32) -> ZTPoly {
        let (rows, cols) = (imax as usize + 1, jmax as usize + 1);
        let mut grid = vec![BigInt::zero(); rows * cols];
        for ((z, t), c) in self.numerator.truncate(imax, jmax).terms() {
            grid[*z as usize * cols + *t as usize] = c.clone();
        }
        for f in &self.denominator {
            let (a, b) = (f.a as usize, f.b as usize);
            if a >= rows || b >= cols {
                continue;
            }
            for _ in 0..f.m {
                for i in a..rows {
                    for j in b..cols {
                        let src = grid[(i - a) * cols + (j - b)].clone();
                        if !src.is_zero() {
                            grid[i * cols + j] += src;
                        }
                    }
                }
            }
        }
        ZTPoly::from_terms(grid.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(
            |(idx, c)| (((idx / cols) as u32, (idx % cols) as u32), c),
        ))
    }
}

/// Equality as rational functions, by cross-multiplication. Factors common
/// to both denominators are cancelled before expanding.
pub fn equal_rational(lhs: &FactoredRational, rhs: &FactoredRational) -> bool {
    let lm = lhs.multiplicities();
    let rm = rhs.multiplicities();
    let mut left = lhs.numerator.clone();
    for (&(a, b), &m) in &rm {
        let excess = m.saturating_sub(lm.get(&(a, b)).copied().unwrap_or(0));
        for _ in 0..excess {
            left = left.mul_one_minus(a, b);
        }
    }
    let mut right = rhs.numerator.clone();
    for (&(a, b), &m) in &lm {
        let excess = m.saturating_sub(rm.get(&(a, b)).copied().unwrap_or(0));
        for _ in 0..excess {
            right = right.mul_one_minus(a, b);
        }
    }
    left == right
}

fn proper_divisors(g: u32) -> Vec<u32> {
    (1..g).filter(|e| g.is_multiple_of(*e)).collect()
}
