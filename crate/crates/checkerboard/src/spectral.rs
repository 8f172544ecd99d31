//! Closed-form spectra of paths and checkerboards, and the numeric
//! verification of the toolkit's cosine-product identities:
//!
//! - `eq5`: the combined spectrum of the two parity classes of an m×n board
//!   is the product multiset {4 cos(jπ/(m+1)) cos(kπ/(n+1))};
//! - `eq8`: the Aztec-diamond tree count as an explicit cosine product;
//! - `eq13`: the even-parity charpoly of an odd×odd board reconstructed from
//!   half the product grid plus an x-power.
//!
//! Everything here runs in double-double precision ([`Dd`]); the exact
//! integer sides come from the algebra modules, so a "verify" here is a
//! genuine two-route comparison.

use serde::{Deserialize, Serialize};

use crate::charpoly::CharPoly;
use crate::dd::Dd;
use crate::graph::Parity;
use crate::trees::{checkerboard_charpoly, spanning_tree_count};
use crate::{checkerboard, Error, Result};

use num_bigint::BigInt;

/// A multiset of eigenvalues in double-double precision, kept sorted
/// descending.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumList {
    values: Vec<Dd>,
}

impl SpectrumList {
    pub fn new(mut values: Vec<Dd>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        SpectrumList { values }
    }

    pub fn values(&self) -> &[Dd] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.to_f64()).collect()
    }
}

/// Eigenvalues of the path on m vertices: {2 cos(jπ/(m+1)) : j = 1..m}.
pub fn path_eigenvalues(m: usize) -> SpectrumList {
    assert!(m >= 1);
    let d = (m + 1) as u64;
    SpectrumList::new(
        (1..=m as u64).map(|j| Dd::from(2.0) * Dd::cos_pi_frac(j, d)).collect(),
    )
}

/// The combined spectrum of both parity classes of the m×n board:
/// {4 cos(jπ/(m+1)) cos(kπ/(n+1)) : 1 ≤ j ≤ m, 1 ≤ k ≤ n}.
pub fn checkerboard_product_spectrum(m: usize, n: usize) -> SpectrumList {
    assert!(m >= 1 && n >= 1);
    let (dm, dn) = ((m + 1) as u64, (n + 1) as u64);
    let mut values = Vec::with_capacity(m * n);
    for j in 1..=m as u64 {
        let cj = Dd::cos_pi_frac(j, dm);
        for k in 1..=n as u64 {
            values.push(Dd::from(4.0) * cj * Dd::cos_pi_frac(k, dn));
        }
    }
    SpectrumList::new(values)
}

/// Which numeric identity a report is about. The lowercase serialized names
/// ("eq5", "eq8", "eq13") are this toolkit's stable identity codes, used in
/// JSON output and as CLI flags.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityKind {
    Eq5,
    Eq8,
    Eq13,
}

impl IdentityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityKind::Eq5 => "eq5",
            IdentityKind::Eq8 => "eq8",
            IdentityKind::Eq13 => "eq13",
        }
    }
}

/// Outcome of one numeric identity check on one board.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: IdentityKind,
    pub m: usize,
    pub n: usize,
    pub max_rel_err: f64,
    pub pass: bool,
}

/// Relative deviation of two values, with an absolute reading when both are
/// within 1e−12 of zero (coefficient magnitudes span many orders, so a fixed
/// absolute tolerance is meaningless away from zero).
fn deviation(a: Dd, b: Dd) -> f64 {
    let err = (a - b).abs().to_f64();
    let scale = a.abs().to_f64().max(b.abs().to_f64());
    if scale > 1e-12 {
        err / scale
    } else {
        err
    }
}

/// Worst per-coefficient deviation between a float-expanded polynomial and
/// an exact one. Pairs that are significant relative to the polynomial's
/// largest coefficient read pairwise-relatively; the rest read against that
/// largest coefficient, because root expansion leaves residue on a
/// structurally zero coefficient in proportion to the polynomial's overall
/// scale, not to the coefficient itself (from ~9×9 boards the central
/// coefficients are large enough that such residue exceeds any fixed
/// absolute cutoff). Both inputs are monic, so the norm is at least 1 and
/// small boards keep a plain absolute reading.
fn max_coeff_deviation(approx: &[Dd], exact: &[Dd]) -> f64 {
    debug_assert_eq!(approx.len(), exact.len());
    let norm = approx
        .iter()
        .chain(exact)
        .fold(1.0f64, |acc, c| acc.max(c.abs().to_f64()));
    approx
        .iter()
        .zip(exact)
        .map(|(&a, &b)| {
            let err = (a - b).abs().to_f64();
            let scale = a.abs().to_f64().max(b.abs().to_f64());
            if scale > 1e-12 * norm {
                err / scale
            } else {
                err / norm
            }
        })
        .fold(0.0f64, f64::max)
}

/// Expand ∏(x − r) into ascending monic coefficients.
fn expand_roots(roots: &[Dd]) -> Vec<Dd> {
    let mut c = vec![Dd::ONE];
    for &r in roots {
        let mut next = vec![Dd::ZERO; c.len() + 1];
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] = next[i + 1] + ci;
            next[i] = next[i] - r * ci;
        }
        c = next;
    }
    c
}

/// Evaluate an exact integer polynomial at a double-double point (Horner).
pub fn eval_dd(p: &CharPoly<BigInt>, x: Dd) -> Dd {
    let mut acc = Dd::ZERO;
    for c in p.coeffs().iter().rev() {
        acc = acc * x + Dd::from_bigint(c);
    }
    acc
}

/// Check that the float-expanded product ∏(x − 4cos·cos) over the full
/// (m,n) grid reproduces the exact integer product P(EC)·P(OC)
/// coefficient-for-coefficient within `tol` (relative).
pub fn verify_eq5(m: usize, n: usize, tol: f64) -> IdentityReport {
    let exact = checkerboard_charpoly(m, n, Parity::Even)
        .mul(&checkerboard_charpoly(m, n, Parity::Odd));
    let spectrum = checkerboard_product_spectrum(m, n);
    let expanded = expand_roots(spectrum.values());
    debug_assert_eq!(expanded.len(), exact.degree() + 1);
    let exact_dd: Vec<Dd> =
        (0..expanded.len()).map(|i| Dd::from_bigint(&exact.coeff(i))).collect();
    let max_rel_err = max_coeff_deviation(&expanded, &exact_dd);
    IdentityReport { identity: IdentityKind::Eq5, m, n, max_rel_err, pass: max_rel_err <= tol }
}

/// The Aztec-diamond closed form: the spanning-tree count of
/// OC_{2n+1,2n+1} as the cosine product
/// 4^(2n−1) ∏_{j,k=1}^{n−1} (4 − 4 c_j c_k)(4 + 4 c_j c_k),
/// c_j = cos(jπ/(2n)), evaluated in double-double precision.
pub fn aztec_count_closed_form(n: u64) -> Dd {
    assert!(n >= 1);
    let four = Dd::from(4.0);
    let mut acc = four.powi(2 * n as u32 - 1);
    for j in 1..n {
        let cj = Dd::cos_pi_frac(j, 2 * n);
        for k in 1..n {
            let c = four * cj * Dd::cos_pi_frac(k, 2 * n);
            acc = acc * (four - c) * (four + c);
        }
    }
    acc
}

/// Compare the closed form against the exact Kirchhoff count of
/// OC_{2n+1,2n+1}. The report's (m, n) fields carry the board size.
pub fn verify_eq8(n: u64, tol: f64) -> IdentityReport {
    let closed = aztec_count_closed_form(n);
    let side = 2 * n as usize + 1;
    let exact = spanning_tree_count(&checkerboard(side, side, Parity::Odd)).count;
    let max_rel_err = deviation(closed, Dd::from_bigint(&exact));
    IdentityReport {
        identity: IdentityKind::Eq8,
        m: side,
        n: side,
        max_rel_err,
        pass: max_rel_err <= tol,
    }
}

/// The even-parity charpoly of an odd×odd board in factored closed form:
/// the nonzero roots {4 cos(jπ/(m+1)) cos(kπ/(n+1)) : 1 ≤ j ≤ m,
/// 1 ≤ k ≤ ⌊n/2⌋} plus an explicit multiplicity for the root 0.
#[derive(Clone, Debug)]
pub struct EcOddForm {
    pub m: usize,
    pub n: usize,
    pub nonzero: SpectrumList,
    pub zero_multiplicity: usize,
}

impl EcOddForm {
    /// Ascending monic coefficients of x^zero_multiplicity · ∏(x − root).
    pub fn reconstruct(&self) -> Vec<Dd> {
        let mut c = vec![Dd::ZERO; self.zero_multiplicity];
        c.extend(expand_roots(self.nonzero.values()));
        c
    }
}

pub fn ec_odd_closed_form(m: usize, n: usize) -> Result<EcOddForm> {
    if m.is_multiple_of(2) || n.is_multiple_of(2) || m == 0 || n == 0 {
        return Err(Error::EvenBoardRejected { m, n });
    }
    let (dm, dn) = ((m + 1) as u64, (n + 1) as u64);
    let mut nonzero = Vec::new();
    for j in 1..=m as u64 {
        let cj = Dd::cos_pi_frac(j, dm);
        if cj.is_zero() {
            continue; // j = (m+1)/2: these products supply the x-power
        }
        for k in 1..=(n / 2) as u64 {
            nonzero.push(Dd::from(4.0) * cj * Dd::cos_pi_frac(k, dn));
        }
    }
    let degree = m * n / 2 + 1; // ⌈mn/2⌉, the vertex count of EC
    let zero_multiplicity = degree - nonzero.len();
    debug_assert_eq!(zero_multiplicity, (m + n) / 2);
    Ok(EcOddForm { m, n, nonzero: SpectrumList::new(nonzero), zero_multiplicity })
}

/// Compare the closed-form reconstruction of P(EC_{m,n}; x) against the
/// exact integer charpoly. Odd boards only.
pub fn verify_eq13(m: usize, n: usize, tol: f64) -> Result<IdentityReport> {
    let form = ec_odd_closed_form(m, n)?;
    let exact = checkerboard_charpoly(m, n, Parity::Even);
    let reconstructed = form.reconstruct();
    debug_assert_eq!(reconstructed.len(), exact.degree() + 1);
    let exact_dd: Vec<Dd> =
        (0..reconstructed.len()).map(|i| Dd::from_bigint(&exact.coeff(i))).collect();
    let max_rel_err = max_coeff_deviation(&reconstructed, &exact_dd);
    Ok(IdentityReport {
        identity: IdentityKind::Eq13,
        m,
        n,
        max_rel_err,
        pass: max_rel_err <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_eigenvalue_examples() {
        let e = path_eigenvalues(2).to_f64_vec();
        assert_eq!(e, vec![1.0, -1.0]);

        let e = path_eigenvalues(1);
        assert!(e.values()[0].is_zero());

        let e = path_eigenvalues(3).to_f64_vec();
        assert!((e[0] - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(e[1], 0.0);
        assert!((e[2] + 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn product_spectrum_examples() {
        assert_eq!(checkerboard_product_spectrum(2, 2).to_f64_vec(), vec![1.0, 1.0, -1.0, -1.0]);
        assert_eq!(
            checkerboard_product_spectrum(3, 3).to_f64_vec(),
            vec![2.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, -2.0, -2.0]
        );
        let s = checkerboard_product_spectrum(1, 1);
        assert_eq!(s.len(), 1);
        assert!(s.values()[0].is_zero());
    }

    #[test]
    fn path_roots_satisfy_exact_charpoly() {
        // closed-form eigenvalues against the exact integer charpoly
        for m in 1..=50 {
            let p = crate::charpoly::charpoly(&crate::path_graph(m).adjacency_unit());
            for &lambda in path_eigenvalues(m).values() {
                let r = eval_dd(&p, lambda).abs().to_f64();
                let bound = 1e-9 * ((m + 1) * (m + 1)) as f64;
                assert!(r < bound, "m={m}: residual {r}");
            }
        }
    }

    #[test]
    fn eq5_examples() {
        let r = verify_eq5(3, 3, 1e-9);
        assert!(r.pass, "max_rel_err {}", r.max_rel_err);
        assert!(r.max_rel_err < 1e-25);
        // both sides are x⁹ − 8x⁷ + 16x⁵
        let exact = checkerboard_charpoly(3, 3, Parity::Even)
            .mul(&checkerboard_charpoly(3, 3, Parity::Odd));
        assert_eq!(exact.to_string(), "x^9 - 8x^7 + 16x^5");

        // exact zeros on both sides: passes at tolerance 0
        let r = verify_eq5(1, 1, 0.0);
        assert!(r.pass);

        let r = verify_eq5(5, 5, 1e-9);
        assert!(r.pass);
        assert_eq!(r.identity.as_str(), "eq5");
    }

    #[test]
    fn eq5_structural_zeros_at_larger_sizes() {
        // From 8×8 on, the product polynomial's central coefficients are big
        // enough that float residue on its structurally zero coefficients
        // exceeds any fixed absolute cutoff; these sizes pin the norm-aware
        // comparison.
        for (m, n) in [(8, 8), (8, 9), (9, 9)] {
            let r = verify_eq5(m, n, 1e-9);
            assert!(r.pass, "({m},{n}): max_rel_err {}", r.max_rel_err);
            assert!(r.max_rel_err < 1e-15, "({m},{n}): max_rel_err {}", r.max_rel_err);
        }
    }

    #[test]
    fn aztec_closed_form_examples() {
        assert_eq!(aztec_count_closed_form(1).to_f64(), 4.0);
        let v = aztec_count_closed_form(2).to_f64();
        assert!((v - 768.0).abs() / 768.0 < 1e-6);
        let v = aztec_count_closed_form(3).to_f64();
        assert!((v - 18_170_880.0).abs() / 18_170_880.0 < 1e-6);
    }

    #[test]
    fn eq8_small_orders() {
        for n in 1..=4 {
            let r = verify_eq8(n, 1e-6);
            assert!(r.pass, "n={n}: max_rel_err {}", r.max_rel_err);
            assert_eq!((r.m, r.n), (2 * n as usize + 1, 2 * n as usize + 1));
        }
    }

    #[test]
    fn ec_odd_form_examples() {
        let f = ec_odd_closed_form(3, 3).unwrap();
        assert_eq!(f.zero_multiplicity, 3);
        assert_eq!(f.nonzero.to_f64_vec(), vec![2.0, -2.0]);

        let f = ec_odd_closed_form(1, 1).unwrap();
        assert_eq!(f.zero_multiplicity, 1);
        assert!(f.nonzero.is_empty());

        // x⁴(x² − 6)(x² − 2) = x⁸ − 8x⁶ + 12x⁴
        let f = ec_odd_closed_form(3, 5).unwrap();
        assert_eq!(f.zero_multiplicity, 4);
        let c = f.reconstruct();
        let expected = [0.0, 0.0, 0.0, 0.0, 12.0, 0.0, -8.0, 0.0, 1.0];
        for (got, want) in c.iter().zip(expected) {
            assert!((got.to_f64() - want).abs() < 1e-12);
        }

        assert!(matches!(
            ec_odd_closed_form(2, 3),
            Err(Error::EvenBoardRejected { m: 2, n: 3 })
        ));
    }

    #[test]
    fn eq13_odd_boards() {
        for m in (1..=9).step_by(2) {
            for n in (1..=9).step_by(2) {
                let r = verify_eq13(m, n, 1e-9).unwrap();
                assert!(r.pass, "({m},{n}): max_rel_err {}", r.max_rel_err);
            }
        }
        assert!(verify_eq13(4, 4, 1e-9).is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = verify_eq5(3, 3, 1e-9);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"identity\":\"eq5\""));
        let back: IdentityReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back.identity, IdentityKind::Eq5);
        assert_eq!((back.m, back.n), (3, 3));
    }
}
