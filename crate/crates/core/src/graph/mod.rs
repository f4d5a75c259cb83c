//! Weighted dual graphs of resolutions and their intersection lattices.

mod hj;
mod lattice;
mod seifert;
mod serial;

pub use hj::{hj_evaluate, hj_expand, hj_tails};
pub use lattice::{Cycle, QCycle};
pub use seifert::{seifert_of_graph, star_graph, SeifertArm, SeifertInvariant};
pub use serial::GraphSpec;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub selfint: i64,
    pub genus: u64,
}

impl Vertex {
    pub fn new(selfint: i64, genus: u64) -> Self {
        Vertex { selfint, genus }
    }

    /// `K . E_v` by adjunction.
    pub fn canonical_degree(&self) -> i64 {
        -self.selfint - 2 + 2 * self.genus as i64
    }
}

/// Centre and arms of a star-shaped graph. Each arm lists vertex ids from the
/// neighbour of the centre outwards; arms are ordered by their first vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarShape {
    pub center: usize,
    pub arms: Vec<Vec<usize>>,
}

/// Rooted spanning structure of a tree used for elimination.
#[derive(Clone, Debug)]
struct Elimination {
    /// Breadth-first order from the root; parents precede children.
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// Pivots of symmetric elimination taking leaves first.
    pivots: Vec<BigRational>,
}

impl Elimination {
    fn build(vertices: &[Vertex], adjacency: &[Vec<usize>], root: usize) -> Self {
        let n = vertices.len();
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    children[v].push(w);
                    queue.push_back(w);
                }
            }
        }
        let mut pivots = vec![BigRational::zero(); n];
        for &v in order.iter().rev() {
            let mut p = BigRational::from_integer(BigInt::from(vertices[v].selfint));
            for &c in &children[v] {
                if pivots[c].is_zero() {
                    // singular leading block; the caller sees a non-negative pivot
                    continue;
                }
                p -= pivots[c].recip();
            }
            pivots[v] = p;
        }
        Elimination {
            order,
            parent,
            children,
            pivots,
        }
    }

    fn negative_definite(&self) -> bool {
        self.pivots.iter().all(|p| p.is_negative())
    }

    /// Solves `M x = b` for a negative definite tree matrix.
    fn solve(&self, rhs: &[BigRational]) -> Vec<BigRational> {
        let n = rhs.len();
        let mut reduced = rhs.to_vec();
        for &v in self.order.iter().rev() {
            for &c in &self.children[v] {
                let t = &reduced[c] / &self.pivots[c];
                reduced[v] -= t;
            }
        }
        let mut x = vec![BigRational::zero(); n];
        for &v in &self.order {
            let r = match self.parent[v] {
                None => reduced[v].clone(),
                Some(p) => &reduced[v] - &x[p],
            };
            x[v] = r / &self.pivots[v];
        }
        x
    }
}

fn check_tree(
    n: usize,
    edges: &[(usize, usize)],
) -> Result<(Vec<(usize, usize)>, Vec<Vec<usize>>)> {
    if n == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    let mut normalized = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::InvalidInput(format!(
                "edge ({a}, {b}) refers to a missing vertex"
            )));
        }
        if a == b {
            return Err(Error::NotATree(format!("self-loop at vertex {a}")));
        }
        normalized.push((a.min(b), a.max(b)));
    }
    normalized.sort_unstable();
    if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::NotATree(format!(
            "repeated edge ({}, {})",
            w[0].0, w[0].1
        )));
    }
    if normalized.len() != n - 1 {
        return Err(Error::NotATree(format!(
            "{} vertices need {} edges, got {}",
            n,
            n - 1,
            normalized.len()
        )));
    }
    let mut adjacency = vec![Vec::new(); n];
    for &(a, b) in &normalized {
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    Ok((normalized, adjacency))
}

/// Negative definiteness of the intersection matrix of an arbitrary weighted tree.
pub fn is_negative_definite(vertices: &[Vertex], edges: &[(usize, usize)]) -> Result<bool> {
    let (_, adjacency) = check_tree(vertices.len(), edges)?;
    Ok(Elimination::build(vertices, &adjacency, 0).negative_definite())
}

/// A connected weighted tree with negative definite intersection matrix.
#[derive(Clone, Debug)]
pub struct ResolutionGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    central: Option<usize>,
    adjacency: Vec<Vec<usize>>,
    elimination: Elimination,
    star: Option<StarShape>,
}

impl PartialEq for ResolutionGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.central == other.central
    }
}

impl Eq for ResolutionGraph {}

impl ResolutionGraph {
    pub fn new(
        vertices: Vec<Vertex>,
        edges: Vec<(usize, usize)>,
        central: Option<usize>,
    ) -> Result<Self> {
        let (edges, mut adjacency) = check_tree(vertices.len(), &edges)?;
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        if let Some(c) = central {
            if c >= vertices.len() {
                return Err(Error::InvalidInput(format!(
                    "central vertex {c} does not exist"
                )));
            }
        }
        let elimination = Elimination::build(&vertices, &adjacency, central.unwrap_or(0));
        if !elimination.negative_definite() {
            return Err(Error::NotNegativeDefinite);
        }
        let star = match central {
            Some(c) => Some(star_shape_at(&vertices, &adjacency, c)?),
            None => None,
        };
        Ok(ResolutionGraph {
            vertices,
            edges,
            central,
            adjacency,
            elimination,
            star,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> Vertex {
        self.vertices[v]
    }

    /// Edges as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn central(&self) -> Option<usize> {
        self.central
    }

    /// The star decomposition: the designated centre if there is one, otherwise
    /// the unique vertex of positive genus or degree at least three (vertex 0
    /// for a chain).
    pub fn star_shape(&self) -> Result<StarShape> {
        if let Some(s) = &self.star {
            return Ok(s.clone());
        }
        let candidates: Vec<usize> = (0..self.len())
            .filter(|&v| self.vertices[v].genus > 0 || self.adjacency[v].len() >= 3)
            .collect();
        let center = match candidates.as_slice() {
            [] => 0,
            [c] => *c,
            _ => {
                return Err(Error::NotStarShaped(format!(
                    "several candidate centres: {candidates:?}"
                )))
            }
        };
        star_shape_at(&self.vertices, &self.adjacency, center)
    }

    /// This graph with `center` designated as its central vertex.
    pub fn with_central(&self, center: usize) -> Result<Self> {
        ResolutionGraph::new(self.vertices.clone(), self.edges.clone(), Some(center))
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for (v, vx) in self.vertices.iter().enumerate() {
            m[v][v] = vx.selfint;
        }
        for &(a, b) in &self.edges {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        m
    }

    /// `D . E_v` for an integral cycle.
    pub fn product_with_vertex(&self, d: &Cycle, v: usize) -> BigInt {
        let mut s = d.coeff(v) * self.vertices[v].selfint;
        for &w in &self.adjacency[v] {
            s += d.coeff(w);
        }
        s
    }

    /// All products `D . E_v`, indexed by vertex.
    pub fn products(&self, d: &Cycle) -> Vec<BigInt> {
        self.check_len(d.len());
        (0..self.len())
            .map(|v| self.product_with_vertex(d, v))
            .collect()
    }

    pub fn intersect(&self, a: &Cycle, b: &Cycle) -> BigInt {
        self.check_len(b.len());
        self.products(a)
            .iter()
            .zip(b.coefficients())
            .map(|(p, c)| p * c)
            .sum()
    }

    pub fn q_products(&self, d: &QCycle) -> Vec<BigRational> {
        self.check_len(d.len());
        (0..self.len())
            .map(|v| {
                let mut s = d.coeff(v) * BigRational::from_integer(self.vertices[v].selfint.into());
                for &w in &self.adjacency[v] {
                    s += d.coeff(w);
                }
                s
            })
            .collect()
    }

    pub fn q_intersect(&self, a: &QCycle, b: &QCycle) -> BigRational {
        self.q_products(a)
            .iter()
            .zip(b.coefficients())
            .map(|(p, c)| p * c)
            .sum()
    }

    /// `D . K`, with `K . E_v` from adjunction.
    pub fn canonical_product(&self, d: &Cycle) -> BigInt {
        self.check_len(d.len());
        self.vertices
            .iter()
            .zip(d.coefficients())
            .map(|(v, c)| c * v.canonical_degree())
            .sum()
    }

    /// The rational cycle `X` with `X . E_v = rhs[v]` for every vertex.
    pub fn solve(&self, rhs: &[BigRational]) -> QCycle {
        self.check_len(rhs.len());
        QCycle::new(self.elimination.solve(rhs))
    }

    /// `E_j^*`, characterised by `E_j^* . E_i = -delta_ij`.
    pub fn dual_cycle(&self, j: usize) -> Result<QCycle> {
        if j >= self.len() {
            return Err(Error::InvalidInput(format!("vertex {j} does not exist")));
        }
        let mut rhs = vec![BigRational::zero(); self.len()];
        rhs[j] = BigRational::from_integer(BigInt::from(-1));
        let w = self.solve(&rhs);
        if !w.coefficients().iter().all(|c| c.is_positive()) {
            return Err(Error::Internal(format!(
                "dual cycle of vertex {j} is not strictly positive"
            )));
        }
        Ok(w)
    }

    /// `Z_K` with `Z_K . E_v = -K . E_v` for every vertex.
    pub fn canonical_cycle(&self) -> QCycle {
        let rhs: Vec<BigRational> = self
            .vertices
            .iter()
            .map(|v| BigRational::from_integer(BigInt::from(-v.canonical_degree())))
            .collect();
        self.solve(&rhs)
    }

    pub fn is_numerically_gorenstein(&self) -> bool {
        self.canonical_cycle().is_integral()
    }

    fn check_len(&self, len: usize) {
        assert_eq!(len, self.len(), "cycle length does not match the graph");
    }
}

fn star_shape_at(
    vertices: &[Vertex],
    adjacency: &[Vec<usize>],
    center: usize,
) -> Result<StarShape> {
    for (v, vx) in vertices.iter().enumerate() {
        if v == center {
            continue;
        }
        if vx.genus != 0 {
            return Err(Error::NotStarShaped(format!(
                "arm vertex {v} has genus {}",
                vx.genus
            )));
        }
        if adjacency[v].len() > 2 {
            return Err(Error::NotStarShaped(format!(
                "arm vertex {v} has {} neighbours",
                adjacency[v].len()
            )));
        }
    }
    let mut firsts = adjacency[center].clone();
    firsts.sort_unstable();
    let arms = firsts
        .into_iter()
        .map(|first| {
            let mut arm = vec![first];
            let mut prev = center;
            let mut cur = first;
            while let Some(&next) = adjacency[cur].iter().find(|&&w| w != prev) {
                arm.push(next);
                prev = cur;
                cur = next;
            }
            arm
        })
        .collect();
    Ok(StarShape { center, arms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use whsing_oracles::{dense_solve, negative_definite_by_minors};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Central -2 vertex of genus 2 with three -2 leaves.
    pub(crate) fn g2334() -> ResolutionGraph {
        ResolutionGraph::new(
            vec![
                Vertex::new(-2, 2),
                Vertex::new(-2, 0),
                Vertex::new(-2, 0),
                Vertex::new(-2, 0),
            ],
            vec![(0, 1), (0, 2), (0, 3)],
            Some(0),
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_trees() {
        let v = vec![Vertex::new(-2, 0); 3];
        assert!(matches!(
            ResolutionGraph::new(v.clone(), vec![(0, 1), (1, 2), (0, 2)], None),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            ResolutionGraph::new(v.clone(), vec![(0, 1)], None),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            ResolutionGraph::new(v, vec![(0, 1), (0, 1)], None),
            Err(Error::NotATree(_))
        ));
    }

    #[test]
    fn rejects_indefinite() {
        // -1 curve meeting two -1 curves
        let v = vec![Vertex::new(-1, 0); 3];
        assert_eq!(
            ResolutionGraph::new(v, vec![(0, 1), (0, 2)], None).unwrap_err(),
            Error::NotNegativeDefinite
        );
    }

    #[test]
    fn dual_of_centre() {
        let g = g2334();
        let w = g.dual_cycle(0).unwrap();
        assert_eq!(w.to_cycle().unwrap(), Cycle::from_i64(&[2, 1, 1, 1]));
    }

    #[test]
    fn dual_of_leaf_matches_dense_solve() {
        let g = g2334();
        let w = g.dual_cycle(1).unwrap();
        let mut rhs = vec![q(0, 1); 4];
        rhs[1] = q(-1, 1);
        let expect = dense_solve(&g.intersection_matrix(), &rhs).unwrap();
        assert_eq!(w.coefficients(), expect.as_slice());
        assert_eq!(*w.coeff(1), q(1, 1));
        assert_eq!(*w.coeff(2), q(1, 2));
        let prods = g.q_products(&w);
        assert_eq!(prods, vec![q(0, 1), q(-1, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn single_vertex_dual() {
        let g = ResolutionGraph::new(vec![Vertex::new(-5, 1)], vec![], None).unwrap();
        assert_eq!(*g.dual_cycle(0).unwrap().coeff(0), q(1, 5));
    }

    #[test]
    fn canonical_cycles() {
        let g = g2334();
        let zk = g.canonical_cycle();
        assert_eq!(zk.to_cycle().unwrap(), Cycle::from_i64(&[8, 4, 4, 4]));
        assert!(g.is_numerically_gorenstein());

        // A_3 chain: rational double point
        let a3 =
            ResolutionGraph::new(vec![Vertex::new(-2, 0); 3], vec![(0, 1), (1, 2)], None).unwrap();
        assert!(a3
            .canonical_cycle()
            .coefficients()
            .iter()
            .all(|c| c.is_zero()));

        let c31 = ResolutionGraph::new(vec![Vertex::new(-3, 0)], vec![], None).unwrap();
        assert_eq!(*c31.canonical_cycle().coeff(0), q(1, 3));
        assert!(!c31.is_numerically_gorenstein());
    }

    #[test]
    fn star_shapes() {
        let g = g2334();
        let s = g.star_shape().unwrap();
        assert_eq!(s.center, 0);
        assert_eq!(s.arms, vec![vec![1], vec![2], vec![3]]);

        let chain =
            ResolutionGraph::new(vec![Vertex::new(-2, 0); 3], vec![(0, 1), (1, 2)], None).unwrap();
        assert_eq!(chain.star_shape().unwrap().arms, vec![vec![1, 2]]);
        let mid = chain.with_central(1).unwrap();
        assert_eq!(mid.star_shape().unwrap().arms, vec![vec![0], vec![2]]);
    }

    #[test]
    fn non_star_detected() {
        // two trivalent vertices
        let v = vec![Vertex::new(-3, 0); 6];
        let e = vec![(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)];
        let g = ResolutionGraph::new(v, e, None).unwrap();
        assert!(matches!(g.star_shape(), Err(Error::NotStarShaped(_))));
    }

    #[test]
    fn elimination_agrees_with_minors_on_small_trees() {
        for a in -4..=-1i64 {
            for b in -4..=-1i64 {
                for c in -4..=-1i64 {
                    let v = vec![Vertex::new(a, 0), Vertex::new(b, 0), Vertex::new(c, 0)];
                    let e = vec![(0, 1), (1, 2)];
                    let g = ResolutionGraph {
                        vertices: v.clone(),
                        edges: e.clone(),
                        central: None,
                        adjacency: vec![vec![1], vec![0, 2], vec![1]],
                        elimination: Elimination::build(&v, &[vec![1], vec![0, 2], vec![1]], 0),
                        star: None,
                    };
                    assert_eq!(
                        is_negative_definite(&v, &e).unwrap(),
                        negative_definite_by_minors(&g.intersection_matrix())
                    );
                }
            }
        }
    }

    #[test]
    fn integral_products() {
        let g = g2334();
        let z = Cycle::from_i64(&[2, 1, 1, 1]);
        assert_eq!(g.intersect(&z, &z), BigInt::from(-2));
        assert_eq!(g.canonical_product(&z), BigInt::from(4 * 2));
        let e0 = Cycle::unit(4, 0);
        assert_eq!(g.products(&e0)[1], BigInt::one());
    }
}
