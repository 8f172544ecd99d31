//! Wire formats for the CLI. Every shape here round-trips
//! (`parse(emit(x)) = x`), and arbitrary-precision integers always travel as
//! decimal strings — tree counts leave the 64-bit range by Aztec order 5.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bipoly::BiPoly;
use crate::charpoly::CharPoly;
use crate::cyclotomic::{FactorIndex, OrbitFactorization, OrbitProduct, SignFamily};
use crate::factorize::Factorization;
use crate::graph::{checkerboard, Parity, SignedGridGraph};
use crate::spectral::IdentityReport;
use crate::trees::TreeCountResult;
use crate::{Error, Result};

/// Graph wire format: canonical vertex order, 0-based edge endpoints.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    /// "EC" or "OC".
    pub kind: String,
    pub m: usize,
    pub n: usize,
    pub vertices: Vec<(usize, usize)>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub a: usize,
    pub b: usize,
    pub sign: i8,
}

impl From<&SignedGridGraph> for GraphJson {
    fn from(g: &SignedGridGraph) -> Self {
        GraphJson {
            kind: g.parity.kind_str().to_string(),
            m: g.m,
            n: g.n,
            vertices: g.vertices.clone(),
            edges: g.edges.iter().map(|e| EdgeJson { a: e.a, b: e.b, sign: e.sign }).collect(),
        }
    }
}

impl TryFrom<GraphJson> for SignedGridGraph {
    type Error = Error;

    /// Strict validation: the payload must be exactly the canonical
    /// checkerboard graph it claims to be.
    fn try_from(j: GraphJson) -> Result<SignedGridGraph> {
        let parity = match j.kind.as_str() {
            "EC" => Parity::Even,
            "OC" => Parity::Odd,
            other => return Err(Error::BadGraph(format!("unknown kind '{other}'"))),
        };
        let canonical = checkerboard(j.m, j.n, parity);
        if j.vertices != canonical.vertices {
            return Err(Error::BadGraph(format!(
                "vertices are not canonical {}_{{{},{}}}",
                j.kind, j.m, j.n
            )));
        }
        let edges_match = j.edges.len() == canonical.edges.len()
            && j.edges.iter().zip(&canonical.edges).all(|(a, b)| {
                (a.a, a.b, a.sign) == (b.a, b.b, b.sign)
            });
        if !edges_match {
            return Err(Error::BadGraph(format!(
                "edges are not canonical {}_{{{},{}}}",
                j.kind, j.m, j.n
            )));
        }
        Ok(canonical)
    }
}

/// Polynomial wire format. `var` is "x" for characteristic polynomials and
/// null for pure generating functions in u, v (a single xdeg-0 entry).
/// Entries are in descending xdeg order; terms in graded-lex order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: Option<String>,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CoeffJson {
    pub xdeg: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub u: u32,
    pub v: u32,
    pub c: String,
}

fn bipoly_terms(p: &BiPoly) -> Vec<TermJson> {
    p.terms_graded()
        .into_iter()
        .map(|((du, dv), c)| TermJson { u: du, v: dv, c: c.to_string() })
        .collect()
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::BadPoly(format!("'{s}' is not a decimal integer")))
}

fn parse_terms(terms: &[TermJson]) -> Result<BiPoly> {
    let mut p = BiPoly::new();
    for t in terms {
        p = p + BiPoly::monomial(t.u, t.v, parse_bigint(&t.c)?);
    }
    Ok(p)
}

impl PolyJson {
    pub fn from_charpoly_int(p: &CharPoly<BigInt>) -> Self {
        let coeffs = (0..=p.degree())
            .rev()
            .filter(|&i| !p.coeff(i).is_zero())
            .map(|i| CoeffJson {
                xdeg: i as u32,
                terms: vec![TermJson { u: 0, v: 0, c: p.coeff(i).to_string() }],
            })
            .collect();
        PolyJson { var: Some("x".to_string()), coeffs }
    }

    pub fn from_charpoly_uv(p: &CharPoly<BiPoly>) -> Self {
        let coeffs = (0..=p.degree())
            .rev()
            .filter(|&i| !p.coeff(i).is_zero())
            .map(|i| CoeffJson { xdeg: i as u32, terms: bipoly_terms(&p.coeff(i)) })
            .collect();
        PolyJson { var: Some("x".to_string()), coeffs }
    }

    /// A pure u,v generating function: no x variable at all.
    pub fn from_bipoly(p: &BiPoly) -> Self {
        PolyJson { var: None, coeffs: vec![CoeffJson { xdeg: 0, terms: bipoly_terms(p) }] }
    }

    fn coeff_map(&self) -> Result<Vec<(u32, BiPoly)>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for c in &self.coeffs {
            if !seen.insert(c.xdeg) {
                return Err(Error::BadPoly(format!("duplicate xdeg {}", c.xdeg)));
            }
            out.push((c.xdeg, parse_terms(&c.terms)?));
        }
        Ok(out)
    }

    /// Reconstruct a weighted characteristic polynomial (var must be "x").
    pub fn to_charpoly_uv(&self) -> Result<CharPoly<BiPoly>> {
        if self.var.as_deref() != Some("x") {
            return Err(Error::BadPoly("expected var \"x\"".to_string()));
        }
        let pairs = self.coeff_map()?;
        let degree = pairs.iter().map(|&(d, _)| d).max().unwrap_or(0) as usize;
        let mut coeffs = vec![BiPoly::zero(); degree + 1];
        for (d, p) in pairs {
            coeffs[d as usize] = p;
        }
        if !coeffs[degree].is_one() {
            return Err(Error::BadPoly("leading coefficient must be 1".to_string()));
        }
        Ok(CharPoly::from_coeffs(coeffs))
    }

    /// Reconstruct an integer characteristic polynomial (var "x", all terms
    /// constant in u, v).
    pub fn to_charpoly_int(&self) -> Result<CharPoly<BigInt>> {
        let uv = self.to_charpoly_uv()?;
        let mut coeffs = Vec::with_capacity(uv.degree() + 1);
        for i in 0..=uv.degree() {
            let c = uv.coeff(i);
            if c.terms().any(|(&(du, dv), _)| du != 0 || dv != 0) {
                return Err(Error::BadPoly(format!("coefficient of x^{i} involves u or v")));
            }
            coeffs.push(c.coeff(0, 0));
        }
        Ok(CharPoly::from_coeffs(coeffs))
    }

    /// Reconstruct a generating function (var must be null, single entry).
    pub fn to_bipoly(&self) -> Result<BiPoly> {
        if self.var.is_some() {
            return Err(Error::BadPoly("generating functions carry var null".to_string()));
        }
        match self.coeffs.as_slice() {
            [c] if c.xdeg == 0 => parse_terms(&c.terms),
            _ => Err(Error::BadPoly("expected a single xdeg-0 entry".to_string())),
        }
    }
}

/// Tree-count wire format; `count` is a decimal string.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TreeCountJson {
    pub m: usize,
    pub n: usize,
    pub parity: String,
    pub method: String,
    pub count: String,
    pub connected: bool,
}

impl From<&TreeCountResult> for TreeCountJson {
    fn from(r: &TreeCountResult) -> Self {
        TreeCountJson {
            m: r.m,
            n: r.n,
            parity: r.parity.as_str().to_string(),
            method: r.method.as_str().to_string(),
            count: r.count.to_string(),
            connected: r.connected,
        }
    }
}

/// Spectrum output: eigenvalues (descending) plus the product-identity check.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub m: usize,
    pub n: usize,
    pub values: Vec<f64>,
    pub eq5: IdentityReport,
}

/// Aztec factorization wire format: prefactor as "4^k", orbit indices as
/// [j, k, "+"|"-"] triples, all big integers as decimal strings.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct AztecJson {
    pub n: u32,
    pub prefactor: String,
    pub orbits: Vec<AztecOrbitJson>,
    pub total: String,
    pub primes: Vec<(String, u32)>,
    pub probable: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct AztecOrbitJson {
    pub indices: Vec<(u32, u32, char)>,
    pub product: String,
}

impl From<&OrbitFactorization> for AztecJson {
    fn from(f: &OrbitFactorization) -> Self {
        AztecJson {
            n: f.n,
            prefactor: format!("4^{}", f.prefactor_exponent),
            orbits: f
                .orbits
                .iter()
                .map(|o| AztecOrbitJson {
                    indices: o
                        .indices
                        .iter()
                        .map(|i| (i.j, i.k, i.family.as_char()))
                        .collect(),
                    product: o.product.to_string(),
                })
                .collect(),
            total: f.total.to_string(),
            primes: f
                .factorization
                .factors
                .iter()
                .map(|(p, e)| (p.to_string(), *e))
                .collect(),
            probable: f.factorization.probable,
        }
    }
}

impl TryFrom<AztecJson> for OrbitFactorization {
    type Error = Error;

    fn try_from(j: AztecJson) -> Result<OrbitFactorization> {
        let bad = |msg: String| Error::BadPoly(msg);
        let prefactor_exponent = j
            .prefactor
            .strip_prefix("4^")
            .and_then(|e| e.parse().ok())
            .ok_or_else(|| bad(format!("prefactor '{}' is not of the form 4^k", j.prefactor)))?;
        let mut orbits = Vec::with_capacity(j.orbits.len());
        for o in &j.orbits {
            let mut indices = Vec::with_capacity(o.indices.len());
            for &(jj, kk, ch) in &o.indices {
                let family = match ch {
                    '+' => SignFamily::Plus,
                    '-' => SignFamily::Minus,
                    other => return Err(bad(format!("bad sign family '{other}'"))),
                };
                indices.push(FactorIndex { j: jj, k: kk, family });
            }
            orbits.push(OrbitProduct { indices, product: parse_bigint(&o.product)? });
        }
        let total = parse_bigint(&j.total)?;
        let mut factors = Vec::with_capacity(j.primes.len());
        for (p, e) in &j.primes {
            factors.push((parse_bigint(p)?, *e));
        }
        let factorization = Factorization { factors, probable: j.probable };
        if factorization.value() != total {
            return Err(bad("primes do not multiply back to total".to_string()));
        }
        Ok(OrbitFactorization { n: j.n, prefactor_exponent, orbits, total, factorization })
    }
}
