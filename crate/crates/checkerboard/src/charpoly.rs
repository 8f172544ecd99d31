//! Characteristic polynomials over exact rings.
//!
//! The workhorse is a Berkowitz-style division-free recurrence, valid over any
//! commutative ring, so the same code path produces integer and bivariate
//! weighted characteristic polynomials. A trace-based variant (Newton's
//! identities over exact rationals) serves as an independent oracle for the
//! integer case.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bipoly::BiPoly;
use crate::matrix::{Matrix, Ring};
use crate::{Error, Result};

/// Monic characteristic polynomial det(xI − A), stored as ascending
/// coefficients: `coeffs[i]` multiplies x^i, and the leading coefficient is 1.
/// The degree-0 polynomial (empty matrix) is the constant 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> CharPoly<R> {
    /// Wrap an ascending coefficient vector; must be nonempty and monic.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "characteristic polynomial needs coefficients");
        assert!(coeffs.last().unwrap().is_one(), "characteristic polynomial must be monic");
        CharPoly { coeffs }
    }

    /// The constant polynomial 1 (characteristic polynomial of the empty graph).
    pub fn unit() -> Self {
        CharPoly { coeffs: vec![R::one()] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Ascending coefficient slice.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Horner evaluation at a ring point.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Product of two monic polynomials.
    pub fn mul(&self, rhs: &CharPoly<R>) -> CharPoly<R> {
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        CharPoly::from_coeffs(out)
    }

    /// Multiply by x^k (shift all exponents up).
    pub fn mul_x_pow(&self, k: usize) -> CharPoly<R> {
        let mut out = vec![R::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        CharPoly::from_coeffs(out)
    }

    /// Multiplicity of the root 0: the number of leading zero coefficients.
    pub fn x_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count().min(self.degree())
    }

    /// The alternating-sign view a_1, a_2, … defined by
    /// P(x) = x^n(1 − a_1 x^{-1} + a_2 x^{-2} − ⋯), i.e. a_i = (−1)^i·coeff(x^{n−i}).
    pub fn alternating_view(&self) -> Vec<R> {
        let n = self.degree();
        (1..=n)
            .map(|i| {
                let c = self.coeff(n - i);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }
}

impl CharPoly<BigInt> {
    /// Lift integer coefficients into ℤ[u,v].
    pub fn to_bipoly(&self) -> CharPoly<BiPoly> {
        CharPoly { coeffs: self.coeffs.iter().map(|c| BiPoly::constant(c.clone())).collect() }
    }
}

/// Substitute x := `x_value` into a weighted characteristic polynomial.
pub fn bipoly_eval(p: &CharPoly<BiPoly>, x_value: &BiPoly) -> BiPoly {
    p.eval(x_value)
}

/// Division-free characteristic polynomial of a square matrix, by the
/// Berkowitz vector recurrence: for each leading principal submatrix the
/// coefficient vector is advanced by a lower-triangular Toeplitz matrix built
/// from −a_rr and the bilinear forms −R·M^i·S of the bordering row and column.
pub fn charpoly<R: Ring>(a: &Matrix<R>) -> CharPoly<R> {
    let n = a.dim();
    if n == 0 {
        return CharPoly::unit();
    }
    // Descending coefficients of det(xI − A_r), starting with r = 1.
    let mut p = vec![R::one(), -a[(0, 0)].clone()];
    for r in 2..=n {
        // Toeplitz column t_0..t_r for the bordered submatrix.
        let mut t = Vec::with_capacity(r + 1);
        t.push(R::one());
        t.push(-a[(r - 1, r - 1)].clone());
        let mut w: Vec<R> = (0..r - 1).map(|i| a[(i, r - 1)].clone()).collect();
        for _ in 2..=r {
            let mut dot = R::zero();
            for (i, wi) in w.iter().enumerate() {
                dot = dot + a[(r - 1, i)].clone() * wi.clone();
            }
            t.push(-dot);
            if t.len() == r + 1 {
                break;
            }
            let mut next = vec![R::zero(); r - 1];
            for (i, ni) in next.iter_mut().enumerate() {
                for (j, wj) in w.iter().enumerate() {
                    if !a[(i, j)].is_zero() {
                        *ni = ni.clone() + a[(i, j)].clone() * wj.clone();
                    }
                }
            }
            w = next;
        }
        // p_new = truncated convolution of t (len r+1) with p (len r).
        let mut next = vec![R::zero(); r + 1];
        for (k, nk) in next.iter_mut().enumerate() {
            let lo = k.saturating_sub(r);
            for j in lo..=k.min(r - 1) {
                let ti = &t[k - j];
                if !ti.is_zero() && !p[j].is_zero() {
                    *nk = nk.clone() + ti.clone() * p[j].clone();
                }
            }
        }
        p = next;
    }
    p.reverse();
    CharPoly::from_coeffs(p)
}

/// Maximum dimension accepted by [`charpoly_via_traces`]; the power-trace
/// route costs O(dim⁴) big-integer work and exists only as an oracle.
pub const TRACE_ORACLE_CUTOFF: usize = 64;

/// Independent integer characteristic polynomial from the power traces
/// tr A, tr A², …, tr A^n via Newton's identities. Intermediate elementary
/// symmetric values are exact rationals that must cancel to integers; a
/// non-integer step signals an internal inconsistency, not a user error.
pub fn charpoly_via_traces(a: &Matrix<BigInt>) -> Result<CharPoly<BigInt>> {
    let n = a.dim();
    if n > TRACE_ORACLE_CUTOFF {
        return Err(Error::TraceDimTooLarge { dim: n, cutoff: TRACE_ORACLE_CUTOFF });
    }
    let mut traces = Vec::with_capacity(n + 1);
    traces.push(BigInt::zero()); // unused index 0
    let mut power = a.clone();
    for k in 1..=n {
        if k > 1 {
            power = power.matmul(a);
        }
        traces.push(power.trace());
    }
    // k·e_k = Σ_{i=1..k} (−1)^{i−1} e_{k−i} p_i, over exact rationals.
    let mut e = vec![BigRational::one()];
    for k in 1..=n {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * BigRational::from(traces[i].clone());
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from(BigInt::from(k)));
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, ek) in e.iter().enumerate() {
        if !ek.denom().is_one() {
            return Err(Error::NonIntegerNewton { step: k });
        }
        // det(xI − A) = Σ_k (−1)^k e_k x^{n−k}
        let mut c = ek.numer().clone();
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[n - k] = c;
    }
    Ok(CharPoly::from_coeffs(coeffs))
}

/// Ring elements that know whether their rendering needs parentheses when
/// used as a coefficient in front of a power of x.
pub trait CoeffDisplay: fmt::Display {
    fn is_compound(&self) -> bool;
    fn is_negative_atom(&self) -> bool;
}

impl CoeffDisplay for BigInt {
    fn is_compound(&self) -> bool {
        false
    }
    fn is_negative_atom(&self) -> bool {
        self.is_negative()
    }
}

impl CoeffDisplay for BiPoly {
    fn is_compound(&self) -> bool {
        self.num_terms() > 1
    }
    // Factor the sign out whenever every term is negative, so coefficients
    // render as `- (2u^2 + 2v^2)` rather than `+ (-2u^2 - 2v^2)`.
    fn is_negative_atom(&self) -> bool {
        self.num_terms() >= 1 && self.terms().all(|(_, c)| c.is_negative())
    }
}

impl<R: Ring + CoeffDisplay> fmt::Display for CharPoly<R> {
    /// Descending powers: `x^5 - (2u^2 + 2v^2)x^3`, `x^3 - 2x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_atom();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if neg { -c.clone() } else { c.clone() };
            let coeff_is_one = mag.is_one();
            if k == 0 || !coeff_is_one {
                if c.is_compound() && k > 0 {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
