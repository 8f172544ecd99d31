//! Graph constructions: paths, bipartite graphs, weak-direct-product
//! components, checkerboard graphs with signed edges, and the interior dual
//! that drives the spanning-tree correspondence.
//!
//! Conventions, fixed once for the whole crate:
//! - Checkerboard vertices are listed in lexicographic (x, y) order.
//! - The bipartition used for block forms puts x-odd vertices on the left.
//! - An edge between (x, y) and (x', y') carries sign (x−x')(y−y'): slope +1
//!   diagonals are positive (weight u), slope −1 negative (weight v).

use num_bigint::BigInt;

use crate::bipoly::BiPoly;
use crate::matrix::Matrix;
use crate::{Error, Result};

/// Which color class of the board: `Even` keeps x+y even (EC), `Odd` keeps
/// x+y odd (OC).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn opposite(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Does the lattice point (x, y) belong to this color class?
    pub fn accepts(self, x: usize, y: usize) -> bool {
        (x + y).is_multiple_of(2) == (self == Parity::Even)
    }

    /// Lowercase name, as used in CLI flags and CSV.
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    /// Graph-kind label: EC for even, OC for odd.
    pub fn kind_str(self) -> &'static str {
        match self {
            Parity::Even => "EC",
            Parity::Odd => "OC",
        }
    }
}

impl std::str::FromStr for Parity {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "even" | "ec" => Ok(Parity::Even),
            "odd" | "oc" => Ok(Parity::Odd),
            other => Err(format!("expected 'even' or 'odd', got '{other}'")),
        }
    }
}

/// Abstract bipartite graph: part sizes (p, q) and a p×q 0/1 biadjacency
/// matrix. Adjacency exists only across parts by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipartiteGraph {
    /// p×q matrix; entry (i, j) = 1 iff left vertex i ~ right vertex j.
    pub biadj: Matrix<i64>,
    /// Optional vertex annotations, one list per part.
    pub labels: Option<(Vec<String>, Vec<String>)>,
}

impl BipartiteGraph {
    pub fn new(biadj: Matrix<i64>) -> Self {
        debug_assert!((0..biadj.rows()).all(|i| (0..biadj.cols()).all(|j| {
            biadj[(i, j)] == 0 || biadj[(i, j)] == 1
        })));
        BipartiteGraph { biadj, labels: None }
    }

    /// Left part size p.
    pub fn p(&self) -> usize {
        self.biadj.rows()
    }

    /// Right part size q.
    pub fn q(&self) -> usize {
        self.biadj.cols()
    }

    pub fn num_vertices(&self) -> usize {
        self.p() + self.q()
    }

    pub fn num_edges(&self) -> usize {
        (0..self.p()).map(|i| (0..self.q()).filter(|&j| self.biadj[(i, j)] == 1).count()).sum()
    }

    /// Full (p+q)×(p+q) adjacency in block form [[0, C], [Cᵀ, 0]], with the
    /// left part first.
    pub fn adjacency_unit(&self) -> Matrix<BigInt> {
        let (p, q) = (self.p(), self.q());
        Matrix::from_fn(p + q, p + q, |i, j| {
            let val = if i < p && j >= p {
                self.biadj[(i, j - p)]
            } else if i >= p && j < p {
                self.biadj[(j, i - p)]
            } else {
                0
            };
            BigInt::from(val)
        })
    }

    /// Connectivity over the union of both parts (isolated vertices count).
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n <= 1 {
            return true;
        }
        let adj = self.adjacency_unit();
        reachable_from_zero(&adj) == n
    }
}

/// The simple path on n vertices 1–2–⋯–n as a bipartite graph: left part is
/// the odd-numbered vertices, right part the even-numbered ones, each in
/// increasing order, so part sizes are (⌈n/2⌉, ⌊n/2⌋). n = 1 gives a single
/// isolated vertex with parts (1, 0).
pub fn path_graph(n: usize) -> BipartiteGraph {
    assert!(n >= 1, "path needs at least one vertex");
    let p = n.div_ceil(2);
    let q = n / 2;
    // Left i is path vertex 2i+1, right j is path vertex 2j+2; they are
    // adjacent iff the vertex numbers differ by one.
    let biadj = Matrix::from_fn(p, q, |i, j| i64::from(i == j || i == j + 1));
    let labels = (
        (0..p).map(|i| (2 * i + 1).to_string()).collect(),
        (0..q).map(|j| (2 * j + 2).to_string()).collect(),
    );
    BipartiteGraph { biadj, labels: Some(labels) }
}

/// One component of the weak direct product G×H, where (a,b) ~ (a',b') iff
/// a ~ a' in G and b ~ b' in H. The even component pairs corresponding parts
/// (left×left ∪ right×right, pr+qs vertices, biadjacency C⊗D); the odd
/// component pairs opposite parts (ps+qr vertices, biadjacency C⊗Dᵀ). Pair
/// indices are row-major within each part.
pub fn product_component(g: &BipartiteGraph, h: &BipartiteGraph, parity: Parity) -> BipartiteGraph {
    let biadj = match parity {
        Parity::Even => g.biadj.kronecker(&h.biadj),
        Parity::Odd => g.biadj.kronecker(&h.biadj.transpose()),
    };
    let labels = match (&g.labels, &h.labels) {
        (Some((gl, gr)), Some((hl, hr))) => {
            let pair = |xs: &[String], ys: &[String]| -> Vec<String> {
                xs.iter().flat_map(|x| ys.iter().map(move |y| format!("({x},{y})"))).collect()
            };
            Some(match parity {
                Parity::Even => (pair(gl, hl), pair(gr, hr)),
                Parity::Odd => (pair(gl, hr), pair(gr, hl)),
            })
        }
        _ => None,
    };
    BipartiteGraph { biadj, labels }
}

/// A signed edge between vertex indices a < b.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// (x_a − x_b)(y_a − y_b) ∈ {+1, −1}.
    pub sign: i8,
}

/// Checkerboard graph EC_{m,n} or OC_{m,n}: one color class of the m×n board
/// with edges along the unit-cell diagonals, vertices in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedGridGraph {
    pub m: usize,
    pub n: usize,
    pub parity: Parity,
    pub vertices: Vec<(usize, usize)>,
    pub edges: Vec<Edge>,
}

/// Construct EC_{m,n} (parity even) or OC_{m,n} (parity odd). Degenerate
/// sizes (m = 0 or n = 0) yield the empty graph; they appear as base cases of
/// the dual correspondence.
pub fn checkerboard(m: usize, n: usize, parity: Parity) -> SignedGridGraph {
    let mut vertices = Vec::new();
    for x in 1..=m {
        for y in 1..=n {
            if parity.accepts(x, y) {
                vertices.push((x, y));
            }
        }
    }
    let index = |x: usize, y: usize| -> Option<usize> {
        vertices.binary_search(&(x, y)).ok()
    };
    let mut edges = Vec::new();
    for (a, &(x, y)) in vertices.iter().enumerate() {
        // Scan the two lex-greater diagonal neighbors, SE before NE, so the
        // edge list is sorted by (a, b).
        if y >= 2 {
            if let Some(b) = index(x + 1, y - 1) {
                edges.push(Edge { a, b, sign: -1 });
            }
        }
        if let Some(b) = index(x + 1, y + 1) {
            edges.push(Edge { a, b, sign: 1 });
        }
    }
    SignedGridGraph { m, n, parity, vertices, edges }
}

impl SignedGridGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Index of the vertex at (x, y), if present.
    pub fn vertex_index(&self, x: usize, y: usize) -> Option<usize> {
        self.vertices.binary_search(&(x, y)).ok()
    }

    /// (positive, negative) edge counts.
    pub fn edge_sign_split(&self) -> (usize, usize) {
        let pos = self.edges.iter().filter(|e| e.sign > 0).count();
        (pos, self.edges.len() - pos)
    }

    /// 0/1 adjacency matrix in canonical vertex order.
    pub fn adjacency_unit(&self) -> Matrix<BigInt> {
        let n = self.num_vertices();
        let mut a = Matrix::zeros(n, n);
        for e in &self.edges {
            a[(e.a, e.b)] = BigInt::from(1);
            a[(e.b, e.a)] = BigInt::from(1);
        }
        a
    }

    /// Weighted adjacency: u on positive edges, v on negative edges.
    pub fn adjacency_weighted(&self) -> Matrix<BiPoly> {
        let n = self.num_vertices();
        let mut a = Matrix::zeros(n, n);
        for e in &self.edges {
            let w = if e.sign > 0 { BiPoly::var_u() } else { BiPoly::var_v() };
            a[(e.a, e.b)] = w.clone();
            a[(e.b, e.a)] = w;
        }
        a
    }

    /// Combinatorial Laplacian D − A.
    pub fn laplacian(&self) -> Matrix<BigInt> {
        let n = self.num_vertices();
        let mut l = Matrix::zeros(n, n);
        for e in &self.edges {
            l[(e.a, e.b)] -= 1;
            l[(e.b, e.a)] -= 1;
            l[(e.a, e.a)] += 1;
            l[(e.b, e.b)] += 1;
        }
        l
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n <= 1 {
            return true;
        }
        reachable_from_zero(&self.adjacency_unit()) == n
    }

    /// The block-form view: left part = x odd, right part = x even, both in
    /// lexicographic order (a relabeling of the same graph).
    pub fn bipartite_view(&self) -> BipartiteGraph {
        let left: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| self.vertices[i].0 % 2 == 1)
            .collect();
        let right: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| self.vertices[i].0.is_multiple_of(2))
            .collect();
        let pos_in = |list: &[usize], i: usize| list.binary_search(&i).ok();
        let mut biadj = Matrix::zeros(left.len(), right.len());
        for e in &self.edges {
            // x-coordinates of edge endpoints differ by 1, so exactly one
            // endpoint is x-odd.
            let (l, r) = if self.vertices[e.a].0 % 2 == 1 { (e.a, e.b) } else { (e.b, e.a) };
            let li = pos_in(&left, l).expect("left endpoint");
            let ri = pos_in(&right, r).expect("right endpoint");
            biadj[(li, ri)] = 1;
        }
        let labels = (
            left.iter().map(|&i| format!("{:?}", self.vertices[i])).collect(),
            right.iter().map(|&i| format!("{:?}", self.vertices[i])).collect(),
        );
        BipartiteGraph { biadj, labels: Some(labels) }
    }

    /// Interior dual; see [`interior_dual`].
    pub fn interior_dual(&self) -> Result<DualCorrespondence> {
        interior_dual(self)
    }
}

/// How a dual edge inherits its u/v weight from the primal edge it crosses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeWeightRule {
    /// The dual edge takes the weight dictated by the crossed primal edge's
    /// sign (crossing swaps the slope, so this differs from the dual edge's
    /// own sign).
    SameSign,
    /// The dual edge takes the weight opposite to the crossed edge's sign,
    /// i.e. the weight matching its own slope.
    SwappedSign,
}

/// The rule that reproduces brute-force weighted tree enumeration; settled
/// empirically (see `trees::resolve_edge_weight_rule` and its regression
/// test).
pub const RESOLVED_EDGE_WEIGHT_RULE: EdgeWeightRule = EdgeWeightRule::SameSign;

/// The interior-face structure of a checkerboard graph.
///
/// Faces are the unit diamonds centered at interior lattice points of the
/// opposite color; with centers shifted by (−1, −1) the face graph is exactly
/// the opposite-parity checkerboard of size (m−2)×(n−2). Every face has four
/// boundary edges: two positive and two negative, which is why each face
/// contributes 2u+2v to the weighted degree.
#[derive(Clone, Debug)]
pub struct DualCorrespondence {
    /// Face graph = checkerboard(m−2, n−2, opposite parity); vertex i sits at
    /// the face center shifted by (−1, −1).
    pub face_graph: SignedGridGraph,
    /// For each primal edge, the one or two interior faces it borders, in
    /// lexicographic center order; `None` entries are the exterior face.
    pub face_of_edge: Vec<(Option<usize>, Option<usize>)>,
    /// For each face-graph edge, the index of the primal edge it crosses
    /// (the other diagonal of the shared unit square).
    pub crossed_primal: Vec<usize>,
    /// The resolved weight-inheritance rule.
    pub edge_weight_rule: EdgeWeightRule,
}

/// Build the interior dual of a checkerboard graph. Requires m, n ≥ 2 (a 2×2
/// board has an empty face graph; smaller boards are rejected).
pub fn interior_dual(g: &SignedGridGraph) -> Result<DualCorrespondence> {
    if g.m < 2 || g.n < 2 {
        return Err(Error::BoardTooSmall { m: g.m, n: g.n });
    }
    let face_graph = checkerboard(g.m - 2, g.n - 2, g.parity.opposite());
    // Face at center (cx, cy) ↔ face_graph vertex (cx−1, cy−1).
    let face_at = |cx: usize, cy: usize| -> Option<usize> {
        if (2..g.m).contains(&cx) && (2..g.n).contains(&cy) {
            face_graph.vertex_index(cx - 1, cy - 1)
        } else {
            None
        }
    };
    let face_of_edge = g
        .edges
        .iter()
        .map(|e| {
            let (x, y) = g.vertices[e.a];
            // Flanking lattice points: the other diagonal of the edge's unit
            // square, listed in lexicographic order.
            let (f1, f2) = if e.sign > 0 {
                ((x, y + 1), (x + 1, y)) // NE edge (x,y)–(x+1,y+1)
            } else {
                ((x, y - 1), (x + 1, y)) // SE edge (x,y)–(x+1,y-1)
            };
            (face_at(f1.0, f1.1), face_at(f2.0, f2.1))
        })
        .collect();
    let crossed_primal = face_graph
        .edges
        .iter()
        .map(|de| {
            let (sx, sy) = face_graph.vertices[de.a];
            let (cx, cy) = (sx + 1, sy + 1); // unshift to the primal board
            // Adjacent centers are diagonal neighbors; the crossed primal
            // edge is the opposite diagonal of the square between them.
            let (p1, p2) = if de.sign > 0 {
                ((cx, cy + 1), (cx + 1, cy))
            } else {
                ((cx, cy - 1), (cx + 1, cy))
            };
            let a = g.vertex_index(p1.0, p1.1).expect("crossed endpoint");
            let b = g.vertex_index(p2.0, p2.1).expect("crossed endpoint");
            g.edges
                .iter()
                .position(|e| (e.a, e.b) == (a, b))
                .expect("crossed primal edge exists")
        })
        .collect();
    Ok(DualCorrespondence {
        face_graph,
        face_of_edge,
        crossed_primal,
        edge_weight_rule: RESOLVED_EDGE_WEIGHT_RULE,
    })
}

impl DualCorrespondence {
    /// Weighted adjacency of the face graph under the stored rule.
    pub fn weighted_adjacency(&self, primal: &SignedGridGraph) -> Matrix<BiPoly> {
        self.weighted_adjacency_with_rule(primal, self.edge_weight_rule)
    }

    /// Weighted adjacency under an explicit rule (used by the empirical rule
    /// resolution and its regression test).
    pub fn weighted_adjacency_with_rule(
        &self,
        primal: &SignedGridGraph,
        rule: EdgeWeightRule,
    ) -> Matrix<BiPoly> {
        let n = self.face_graph.num_vertices();
        let mut a = Matrix::zeros(n, n);
        for (de, &pe) in self.face_graph.edges.iter().zip(&self.crossed_primal) {
            let crossed_sign = primal.edges[pe].sign;
            let effective = match rule {
                EdgeWeightRule::SameSign => crossed_sign,
                EdgeWeightRule::SwappedSign => -crossed_sign,
            };
            let w = if effective > 0 { BiPoly::var_u() } else { BiPoly::var_v() };
            a[(de.a, de.b)] = w.clone();
            a[(de.b, de.a)] = w;
        }
        a
    }
}

fn reachable_from_zero(adj: &Matrix<BigInt>) -> usize {
    use num_traits::Zero;
    let n = adj.dim();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && !adj[(i, j)].is_zero() {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_examples() {
        let p1 = path_graph(1);
        assert_eq!((p1.p(), p1.q()), (1, 0));
        assert_eq!(p1.num_edges(), 0);

        let p2 = path_graph(2);
        assert_eq!((p2.p(), p2.q()), (1, 1));
        assert_eq!(p2.biadj[(0, 0)], 1);

        let p4 = path_graph(4);
        assert_eq!((p4.p(), p4.q()), (2, 2));
        let mut rows = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                rows.push(p4.biadj[(i, j)]);
            }
        }
        assert_eq!(rows, vec![1, 0, 1, 1]);
    }

    #[test]
    fn checkerboard_3x3() {
        let oc = checkerboard(3, 3, Parity::Odd);
        assert_eq!(oc.vertices, vec![(1, 2), (2, 1), (2, 3), (3, 2)]);
        assert_eq!(oc.num_edges(), 4);
        assert_eq!(oc.edge_sign_split(), (2, 2));
        // 4-cycle: every vertex has degree 2
        let a = oc.adjacency_unit();
        for i in 0..4 {
            let deg: BigInt = (0..4).map(|j| a[(i, j)].clone()).sum();
            assert_eq!(deg, BigInt::from(2));
        }

        let ec = checkerboard(3, 3, Parity::Even);
        assert_eq!(ec.num_vertices(), 5);
        assert_eq!(ec.vertices, vec![(1, 1), (1, 3), (2, 2), (3, 1), (3, 3)]);
        // star centered at (2,2)
        let center = ec.vertex_index(2, 2).unwrap();
        assert!(ec.edges.iter().all(|e| e.a == center || e.b == center));
        assert_eq!(ec.edge_sign_split(), (2, 2));
    }

    #[test]
    fn degenerate_boards() {
        assert_eq!(checkerboard(1, 1, Parity::Odd).num_vertices(), 0);
        assert_eq!(checkerboard(1, 1, Parity::Even).num_vertices(), 1);
        assert_eq!(checkerboard(0, 5, Parity::Even).num_vertices(), 0);
        let row = checkerboard(1, 6, Parity::Odd);
        assert_eq!(row.num_vertices(), 3); // (1,2), (1,4), (1,6)
        assert_eq!(row.num_edges(), 0);
    }

    #[test]
    fn vertex_counts_match_formula() {
        for m in 1..=12 {
            for n in 1..=12 {
                let ec = checkerboard(m, n, Parity::Even).num_vertices();
                let oc = checkerboard(m, n, Parity::Odd).num_vertices();
                assert_eq!(ec, (m * n).div_ceil(2), "EC {m}x{n}");
                assert_eq!(oc, m * n / 2, "OC {m}x{n}");
            }
        }
    }

    #[test]
    fn edge_counts_and_sign_rule() {
        for m in 2..=12 {
            for n in 2..=12 {
                let ec = checkerboard(m, n, Parity::Even);
                let oc = checkerboard(m, n, Parity::Odd);
                assert_eq!(ec.num_edges() + oc.num_edges(), 2 * (m - 1) * (n - 1));
                for g in [&ec, &oc] {
                    for e in &g.edges {
                        let (xa, ya) = g.vertices[e.a];
                        let (xb, yb) = g.vertices[e.b];
                        let dx = xa as i64 - xb as i64;
                        let dy = ya as i64 - yb as i64;
                        assert_eq!(dx.abs(), 1);
                        assert_eq!(dy.abs(), 1);
                        assert_eq!(i64::from(e.sign), dx * dy);
                    }
                }
            }
        }
    }

    #[test]
    fn edge_sign_split_formula() {
        // Measured split: EC gets ⌈(m−1)(n−1)/2⌉ positive edges, OC gets
        // ⌊(m−1)(n−1)/2⌋ (cells alternate which diagonal is positive).
        for m in 2..=12 {
            for n in 2..=12 {
                let c = (m - 1) * (n - 1);
                let ec = checkerboard(m, n, Parity::Even).edge_sign_split();
                let oc = checkerboard(m, n, Parity::Odd).edge_sign_split();
                assert_eq!(ec, (c.div_ceil(2), c / 2), "EC {m}x{n}");
                assert_eq!(oc, (c / 2, c.div_ceil(2)), "OC {m}x{n}");
            }
        }
    }

    #[test]
    fn product_component_smallest() {
        let p2 = path_graph(2);
        let e = product_component(&p2, &p2, Parity::Even);
        assert_eq!((e.p(), e.q()), (1, 1));
        assert_eq!(e.num_edges(), 1);
        let o = product_component(&p2, &p2, Parity::Odd);
        assert_eq!((o.p(), o.q()), (1, 1));
        assert_eq!(o.num_edges(), 1);
    }

    #[test]
    fn product_component_matches_checkerboard() {
        // With row-major pair order and lex vertex order the biadjacency
        // matrices agree entry-for-entry, not just up to isomorphism.
        for (m, n) in [(3usize, 5usize), (3, 3), (4, 4), (5, 4), (2, 7)] {
            let pm = path_graph(m);
            let pn = path_graph(n);
            for parity in [Parity::Even, Parity::Odd] {
                let prod = product_component(&pm, &pn, parity);
                let board = checkerboard(m, n, parity).bipartite_view();
                assert_eq!(prod.biadj, board.biadj, "{m}x{n} {parity:?}");
            }
        }
    }

    #[test]
    fn product_component_p3_p3_odd_is_4_cycle() {
        let p3 = path_graph(3);
        let o = product_component(&p3, &p3, Parity::Odd);
        assert_eq!((o.p(), o.q()), (2, 2));
        assert_eq!(o.num_edges(), 4);
        // biadjacency C⊗Dᵀ with C = D = [[1],[1]]ᵀ-shaped: all-ones 2×2
        assert!((0..2).all(|i| (0..2).all(|j| o.biadj[(i, j)] == 1)));
    }

    #[test]
    fn interior_dual_examples() {
        // OC_{3,3}: single face; all four cycle edges border it + exterior.
        let oc33 = checkerboard(3, 3, Parity::Odd);
        let d = interior_dual(&oc33).unwrap();
        assert_eq!(d.face_graph.num_vertices(), 1);
        assert_eq!(d.face_graph.parity, Parity::Even);
        for faces in &d.face_of_edge {
            assert!(matches!(faces, (Some(0), None) | (None, Some(0))));
        }

        // EC_{4,4}: two faces sharing exactly one edge (OC_{2,2}).
        let ec44 = checkerboard(4, 4, Parity::Even);
        let d = interior_dual(&ec44).unwrap();
        assert_eq!(d.face_graph.num_vertices(), 2);
        assert_eq!(d.face_graph.num_edges(), 1);
        // the crossed edge of the single dual edge is the (2,2)–(3,3) diagonal
        let pe = d.crossed_primal[0];
        let e = &ec44.edges[pe];
        let pts = (ec44.vertices[e.a], ec44.vertices[e.b]);
        assert_eq!(pts, ((2, 2), (3, 3)));

        // OC_{5,5}: face graph is the 5-vertex star EC_{3,3}.
        let oc55 = checkerboard(5, 5, Parity::Odd);
        let d = interior_dual(&oc55).unwrap();
        assert_eq!(d.face_graph, checkerboard(3, 3, Parity::Even));

        // 2×2 board: dual exists but has no faces.
        let d = interior_dual(&checkerboard(2, 2, Parity::Even)).unwrap();
        assert_eq!(d.face_graph.num_vertices(), 0);

        assert!(matches!(
            interior_dual(&checkerboard(1, 3, Parity::Even)),
            Err(Error::BoardTooSmall { .. })
        ));
    }

    #[test]
    fn dual_face_graph_matches_opposite_board() {
        for m in 3..=10 {
            for n in 3..=10 {
                for parity in [Parity::Even, Parity::Odd] {
                    let g = checkerboard(m, n, parity);
                    let d = interior_dual(&g).unwrap();
                    assert_eq!(
                        d.face_graph,
                        checkerboard(m - 2, n - 2, parity.opposite()),
                        "{m}x{n} {parity:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn every_face_borders_two_positive_two_negative() {
        for (m, n, parity) in [(5, 5, Parity::Odd), (5, 7, Parity::Even), (6, 6, Parity::Odd)] {
            let g = checkerboard(m, n, parity);
            let d = interior_dual(&g).unwrap();
            let faces = d.face_graph.num_vertices();
            let mut pos = vec![0usize; faces];
            let mut neg = vec![0usize; faces];
            for (e, faces_of) in g.edges.iter().zip(&d.face_of_edge) {
                for f in [faces_of.0, faces_of.1].into_iter().flatten() {
                    if e.sign > 0 {
                        pos[f] += 1;
                    } else {
                        neg[f] += 1;
                    }
                }
            }
            assert!(pos.iter().all(|&c| c == 2));
            assert!(neg.iter().all(|&c| c == 2));
        }
    }

    #[test]
    fn bipartite_view_part_sizes() {
        let g = checkerboard(3, 5, Parity::Even);
        let b = g.bipartite_view();
        // x-odd vertices of EC_{3,5}: (1,1),(1,3),(1,5),(3,1),(3,3),(3,5)
        assert_eq!(b.p(), 6);
        assert_eq!(b.q(), 2);
        assert_eq!(b.num_edges(), g.num_edges());
    }

    #[test]
    fn connectivity() {
        assert!(checkerboard(3, 3, Parity::Odd).is_connected());
        assert!(checkerboard(8, 9, Parity::Even).is_connected());
        assert!(!checkerboard(1, 6, Parity::Odd).is_connected()); // 3 isolated vertices
        assert!(path_graph(7).is_connected());
    }
}
