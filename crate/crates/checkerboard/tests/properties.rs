//! Property tests: ring axioms, determinant/charpoly cross-checks, the
//! product-graph factorization identities on random bipartite pairs and on
//! path pairs, exact and numeric Kronecker spectra, and Kirchhoff
//! deletion-invariance.

use checkerboard::bipoly::BiPoly;
use checkerboard::charpoly::{charpoly, charpoly_via_traces};
use checkerboard::cyclotomic::{CycInt, CycRing};
use checkerboard::dd::Dd;
use checkerboard::graph::{checkerboard, path_graph, product_component, BipartiteGraph, Parity};
use checkerboard::json::PolyJson;
use checkerboard::matrix::Matrix;
use checkerboard::spectral::checkerboard_product_spectrum;
use checkerboard::trees::{
    kirchhoff_count, kirchhoff_count_deleting, verify_eq6, spanning_tree_count,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

// ---------------------------------------------------------------- helpers

/// Deterministic xorshift64*, so the "random pairs" suites are reproducible.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

fn random_bipartite(rng: &mut XorShift, max_part: u64) -> BipartiteGraph {
    let p = 1 + rng.below(max_part) as usize;
    let q = 1 + rng.below(max_part) as usize;
    let biadj = Matrix::from_fn(p, q, |_, _| (rng.below(2) == 1) as i64);
    BipartiteGraph::new(biadj)
}

/// Check P(E)·P(O) = P(G×H) (the full Kronecker product of the adjacency
/// matrices) and the x-power relation between P(E) and P(O).
fn check_product_identities(g: &BipartiteGraph, h: &BipartiteGraph) {
    let even = product_component(g, h, Parity::Even);
    let odd = product_component(g, h, Parity::Odd);
    let pe = charpoly(&even.adjacency_unit());
    let po = charpoly(&odd.adjacency_unit());

    let kron = g.adjacency_unit().kronecker(&h.adjacency_unit());
    let pk = charpoly(&kron);
    assert_eq!(pe.mul(&po), pk, "P(E)P(O) != P(G x H)");

    // P(E) = x^{(p−q)(r−s)}·P(O), normalized so both sides are polynomials
    let e = (g.p() as i64 - g.q() as i64) * (h.p() as i64 - h.q() as i64);
    if e >= 0 {
        assert_eq!(pe, po.mul_x_pow(e as usize), "P(E) != x^{e} P(O)");
    } else {
        assert_eq!(pe.mul_x_pow((-e) as usize), po, "x^{} P(E) != P(O)", -e);
    }
}

fn symmetric_matrix(bits: &[bool], dim: usize) -> Matrix<BigInt> {
    Matrix::from_fn(dim, dim, |i, j| {
        let (a, b) = (i.min(j), i.max(j));
        BigInt::from(bits[a * dim + b] as u8)
    })
}

// ------------------------------------------------------------ proptest lot

fn bipoly_strategy() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..5, 0u32..5), -9i64..10), 0..8).prop_map(|terms| {
        terms
            .into_iter()
            .fold(BiPoly::zero(), |acc, ((du, dv), c)| acc + BiPoly::monomial(du, dv, c))
    })
}

proptest! {
    #[test]
    fn bipoly_ring_axioms(a in bipoly_strategy(), b in bipoly_strategy(), c in bipoly_strategy()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(b.clone() + c.clone()), (&a * &b) + (&a * &c));
        prop_assert_eq!(a.clone() - a.clone(), BiPoly::zero());
        prop_assert_eq!(&a * &BiPoly::constant(1), a.clone());
        prop_assert_eq!(&a * &BiPoly::zero(), BiPoly::zero());
    }

    #[test]
    fn bipoly_json_round_trip(p in bipoly_strategy()) {
        let j = PolyJson::from_bipoly(&p);
        let s = serde_json::to_string(&j).unwrap();
        let back: PolyJson = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back.to_bipoly().unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// The division-free charpoly agrees with the independent power-trace
    /// route on random symmetric 0/1 matrices.
    #[test]
    fn berkowitz_matches_trace_oracle(
        dim in 1usize..=8,
        bits in prop::collection::vec(any::<bool>(), 64),
    ) {
        let a = symmetric_matrix(&bits, dim);
        let fast = charpoly(&a);
        let slow = charpoly_via_traces(&a).unwrap();
        prop_assert_eq!(fast, slow);
    }

    /// det(A) = (−1)^n·[x^0]charpoly(A), and the GF(2) determinant is its
    /// parity.
    #[test]
    fn determinant_relations(
        dim in 1usize..=8,
        bits in prop::collection::vec(any::<bool>(), 64),
    ) {
        let a = symmetric_matrix(&bits, dim);
        let det = a.det_bareiss();
        let p = charpoly(&a);
        let sign = if dim % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(&det, &(sign * p.coeff(0)));
        prop_assert_eq!(BigInt::from(a.det_mod2()), det.mod_floor(&BigInt::from(2)));
    }
}

// ------------------------------------------------- product-graph identities

#[test]
fn theorem1_random_bipartite_pairs() {
    let mut rng = XorShift(0x9E3779B97F4A7C15);
    for _ in 0..128 {
        let g = random_bipartite(&mut rng, 4);
        let h = random_bipartite(&mut rng, 4);
        check_product_identities(&g, &h);
    }
}

#[test]
fn theorem1_path_pairs() {
    for m in 1..=7 {
        for n in 1..=7 {
            let (g, h) = (path_graph(m), path_graph(n));
            check_product_identities(&g, &h);

            // and the product components are literally the checkerboards
            let pe = charpoly(&product_component(&g, &h, Parity::Even).adjacency_unit());
            let po = charpoly(&product_component(&g, &h, Parity::Odd).adjacency_unit());
            assert_eq!(pe, charpoly(&checkerboard(m, n, Parity::Even).adjacency_unit()));
            assert_eq!(po, charpoly(&checkerboard(m, n, Parity::Odd).adjacency_unit()));
        }
    }
}

#[test]
fn parity_shift_sweep() {
    let report = verify_eq6(9);
    assert!(report.pass);
    assert_eq!(report.rows.len(), 81);
}

// ---------------------------------------------------- Kronecker spectra

/// Exact spectra: over ℤ[ω] with ω of order lcm(2(m+1), 2(n+1)), the path
/// eigenvalues are μ_j = ω_m^j + ω_m^{−j}; expanding ∏(x − μ_jλ_k) must give
/// exactly the integer charpoly of the Kronecker product.
#[test]
fn kronecker_spectrum_exact_small() {
    for m in 1..=4usize {
        for n in 1..=4usize {
            let order = (2 * (m as u32 + 1)).lcm(&(2 * (n as u32 + 1)));
            let ring = CycRing::new(order);
            let stride_m = (order / (2 * (m as u32 + 1))) as i64;
            let stride_n = (order / (2 * (n as u32 + 1))) as i64;
            let mut roots: Vec<CycInt> = Vec::new();
            for j in 1..=m as i64 {
                for k in 1..=n as i64 {
                    let mu = ring.add(
                        &ring.omega_pow(j * stride_m),
                        &ring.omega_pow(-j * stride_m),
                    );
                    let lambda = ring.add(
                        &ring.omega_pow(k * stride_n),
                        &ring.omega_pow(-k * stride_n),
                    );
                    roots.push(ring.mul(&mu, &lambda));
                }
            }
            // expand ∏(x − root) with CycInt coefficients
            let mut coeffs = vec![ring.one()];
            for r in &roots {
                let mut next = vec![ring.zero(); coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i + 1] = ring.add(&next[i + 1], c);
                    next[i] = ring.sub(&next[i], &ring.mul(r, c));
                }
                coeffs = next;
            }
            let kron = path_graph(m)
                .adjacency_unit()
                .kronecker(&path_graph(n).adjacency_unit());
            let exact = charpoly(&kron);
            assert_eq!(coeffs.len(), exact.degree() + 1);
            for (i, c) in coeffs.iter().enumerate() {
                assert_eq!(
                    c,
                    &ring.from_bigint(exact.coeff(i)),
                    "({m},{n}) coefficient of x^{i}"
                );
            }
        }
    }
}

/// Numeric spectra for larger paths: double-double expansion of the product
/// eigenvalues against the exact integer charpoly, 1e−9 relative per
/// coefficient.
#[test]
fn kronecker_spectrum_numeric() {
    for m in 1..=7usize {
        for n in 1..=7usize {
            let spectrum = checkerboard_product_spectrum(m, n);
            let mut coeffs = vec![Dd::ONE];
            for &r in spectrum.values() {
                let mut next = vec![Dd::ZERO; coeffs.len() + 1];
                for (i, &c) in coeffs.iter().enumerate() {
                    next[i + 1] = next[i + 1] + c;
                    next[i] = next[i] - r * c;
                }
                coeffs = next;
            }
            let kron = path_graph(m)
                .adjacency_unit()
                .kronecker(&path_graph(n).adjacency_unit());
            let exact = charpoly(&kron);
            // Same convention as the library's coefficient comparison:
            // pairwise-relative, falling back to the polynomial's largest
            // coefficient for pairs that are insignificant next to it.
            let exact_dd: Vec<Dd> =
                (0..coeffs.len()).map(|i| Dd::from_bigint(&exact.coeff(i))).collect();
            let norm = coeffs
                .iter()
                .chain(&exact_dd)
                .fold(1.0f64, |acc, c| acc.max(c.abs().to_f64()));
            for (i, (&c, &e)) in coeffs.iter().zip(&exact_dd).enumerate() {
                let err = (c - e).abs().to_f64();
                let scale = e.abs().to_f64().max(c.abs().to_f64());
                let dev = if scale > 1e-12 * norm { err / scale } else { err / norm };
                assert!(dev < 1e-9, "({m},{n}) x^{i}: deviation {dev}");
            }
        }
    }
}

/// The closed-form product multiset matches numerically computed
/// eigenvalues of the two parity classes' adjacency matrices combined.
#[test]
fn product_spectrum_matches_numeric_eigenvalues() {
    for m in 1..=7usize {
        for n in 1..=7usize {
            let mut union: Vec<f64> = Vec::new();
            for parity in [Parity::Even, Parity::Odd] {
                let g = checkerboard(m, n, parity);
                let dim = g.num_vertices();
                if dim == 0 {
                    continue;
                }
                let adj = g.adjacency_unit();
                let a = nalgebra::DMatrix::<f64>::from_fn(dim, dim, |i, j| {
                    if adj[(i, j)].is_one() {
                        1.0
                    } else {
                        0.0
                    }
                });
                union.extend(a.symmetric_eigenvalues().iter());
            }
            union.sort_by(|a, b| b.partial_cmp(a).unwrap());
            let closed = checkerboard_product_spectrum(m, n).to_f64_vec();
            assert_eq!(union.len(), closed.len());
            for (u, c) in union.iter().zip(&closed) {
                assert!((u - c).abs() < 1e-8, "({m},{n}): {u} vs {c}");
            }
        }
    }
}

// ------------------------------------------------------------- Kirchhoff

#[test]
fn kirchhoff_deletion_invariance() {
    // all boards with at most 16 vertices and at least one edge
    for m in 2..=8usize {
        for n in 2..=8usize {
            for parity in [Parity::Even, Parity::Odd] {
                let g = checkerboard(m, n, parity);
                if g.num_vertices() == 0 || g.num_vertices() > 16 {
                    continue;
                }
                let adj = g.adjacency_unit();
                let base = kirchhoff_count(&adj);
                for k in 0..g.num_vertices() {
                    assert_eq!(
                        kirchhoff_count_deleting(&adj, k),
                        base,
                        "{m}x{n} {parity:?} delete {k}"
                    );
                }
            }
        }
    }
}

#[test]
fn counts_are_positive_for_connected_boards() {
    for m in 2..=9usize {
        for n in 2..=9usize {
            for parity in [Parity::Even, Parity::Odd] {
                let r = spanning_tree_count(&checkerboard(m, n, parity));
                if r.connected {
                    assert!(r.count.is_positive(), "{m}x{n} {parity:?}");
                }
            }
        }
    }
}
