//! Polynomials in two commuting variables u, v with big-integer coefficients.
//!
//! `BiPoly` carries the weighted adjacency entries (u for positive edges, v
//! for negative ones), the weighted characteristic polynomials built from
//! them, and the tree/cotree generating functions. Terms are stored sparsely;
//! the canonical term order for display and serialization is graded
//! lexicographic: by total degree, then by u-degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Sparse bivariate polynomial over ℤ. Keys are (deg_u, deg_v); zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    /// The zero polynomial.
    pub fn new() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The monomial c·u^du·v^dv (zero coefficient gives the zero polynomial).
    pub fn monomial(du: u32, dv: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((du, dv), c);
        }
        BiPoly { terms }
    }

    /// The variable u.
    pub fn var_u() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The variable v.
    pub fn var_v() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// Coefficient of u^du·v^dv (zero if absent).
    pub fn coeff(&self, du: u32, dv: u32) -> BigInt {
        self.terms.get(&(du, dv)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in the plain (deg_u, deg_v) map order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// Terms sorted in the canonical graded-lex order: (total degree, deg_u).
    pub fn terms_graded(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut out: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c)).collect();
        out.sort_by_key(|&((du, dv), _)| (du + dv, du));
        out
    }

    /// Largest u-exponent, or None for the zero polynomial.
    pub fn deg_u(&self) -> Option<u32> {
        self.terms.keys().map(|&(du, _)| du).max()
    }

    /// Largest v-exponent, or None for the zero polynomial.
    pub fn deg_v(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, dv)| dv).max()
    }

    /// Total degree, or None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(du, dv)| du + dv).max()
    }

    /// If every term has the same total degree, return it.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|&(du, dv)| du + dv);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// True when all coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact evaluation at integer points.
    pub fn eval_int(&self, u: &BigInt, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(du, dv), c) in &self.terms {
            acc += c * u.pow(du) * v.pow(dv);
        }
        acc
    }

    /// Evaluation at u = v = 1, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// u^du · v^dv · p(1/u, 1/v): flips each exponent pair (a, b) to
    /// (du−a, dv−b). Errors if the requested exponents are below the actual
    /// degrees, which would force negative exponents.
    pub fn reciprocal_transform(&self, du: u32, dv: u32) -> Result<BiPoly> {
        let need_u = self.deg_u().unwrap_or(0);
        let need_v = self.deg_v().unwrap_or(0);
        if du < need_u {
            return Err(Error::NegativeExponent { var: 'u', requested: du, required: need_u });
        }
        if dv < need_v {
            return Err(Error::NegativeExponent { var: 'v', requested: dv, required: need_v });
        }
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| ((du - a, dv - b), c.clone()))
            .collect();
        Ok(BiPoly { terms })
    }

    fn add_term(&mut self, key: (u32, u32), c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(c)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
        self
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(mut self, rhs: BiPoly) -> BiPoly {
        for (k, c) in &rhs.terms {
            self.add_term(*k, &-c.clone());
        }
        self
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        let terms = self.terms.into_iter().map(|(k, c)| (k, -c)).collect();
        BiPoly { terms }
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::new();
        for (&(au, av), ac) in &self.terms {
            for (&(bu, bv), bc) in &rhs.terms {
                out.add_term((au + bu, av + bv), &(ac * bc));
            }
        }
        out
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::new()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(1)
    }
}

impl fmt::Display for BiPoly {
    /// Compact human form, descending total degree then descending u-degree:
    /// `2u^2v + 2uv^2 - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c)).collect();
        ordered.sort_by_key(|&((du, dv), _)| (std::cmp::Reverse(du + dv), std::cmp::Reverse(du)));
        for (i, ((du, dv), c)) in ordered.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars = (*du, *dv) != (0, 0);
            if !vars || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match du {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{du}")?,
            }
            match dv {
                0 => {}
                1 => write!(f, "v")?,
                _ => write!(f, "v^{dv}")?,
            }
        }
        Ok(())
    }
}
