//! Invariants of Brieskorn complete intersections determined by the exponents.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::cycles::{fundamental_cycle, l_n};
use crate::error::{Error, Result};
use crate::graph::{star_graph, Cycle, ResolutionGraph, SeifertArm, SeifertInvariant};
use crate::numerics::{HilbertSeries, NumericalSemigroup};
use crate::pdmodel::PDDegreeModel;

/// Arithmetic data of `(a_1, ..., a_m)`, stored with the exponents sorted
/// ascending. Index `i` below always refers to the sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrieskornData {
    pub exponents: Vec<u64>,
    /// `original_index[i]` is the position of sorted exponent `i` in the input.
    pub original_index: Vec<usize>,
    pub ell: u64,
    pub ell_i: Vec<u64>,
    pub alpha_i: Vec<u64>,
    pub alpha: u64,
    pub e: Vec<u64>,
    pub ghat: u64,
    pub ghat_i: Vec<u64>,
    pub beta: Vec<u64>,
    pub genus: u64,
    pub c0: i64,
}

fn to_u64(v: &BigInt, what: &str) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Overflow(format!("{what} = {v} does not fit in 64 bits")))
}

fn lcm_all<'a>(it: impl Iterator<Item = &'a BigInt>) -> BigInt {
    it.fold(BigInt::one(), |a, b| a.lcm(b))
}

/// Derives every invariant from the exponents. Needs `m >= 3` and each `a_i >= 2`.
pub fn bci_data(a: &[u64]) -> Result<BrieskornData> {
    let m = a.len();
    if m < 3 {
        return Err(Error::InvalidInput(format!(
            "a Brieskorn complete intersection needs at least 3 exponents, got {m}"
        )));
    }
    if let Some(bad) = a.iter().find(|&&x| x < 2) {
        return Err(Error::InvalidInput(format!(
            "exponents must be at least 2, got {bad}"
        )));
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&i| (a[i], i));
    let exps: Vec<u64> = order.iter().map(|&i| a[i]).collect();
    let big: Vec<BigInt> = exps.iter().map(|&x| BigInt::from(x)).collect();

    let ell = lcm_all(big.iter());
    let ell_i: Vec<BigInt> = (0..m)
        .map(|i| {
            lcm_all(
                big.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, x)| x),
            )
        })
        .collect();
    let alpha_i: Vec<BigInt> = ell_i.iter().map(|li| &ell / li).collect();
    let alpha: BigInt = alpha_i.iter().product();
    let e: Vec<BigInt> = big.iter().map(|x| &ell / x).collect();
    let prod: BigInt = big.iter().product();
    let ghat = &prod / &ell;
    let ghat_i: Vec<BigInt> = (0..m).map(|i| &ghat * &alpha_i[i] / &big[i]).collect();

    let mut beta = Vec::with_capacity(m);
    for i in 0..m {
        if alpha_i[i].is_one() {
            beta.push(BigInt::zero());
            continue;
        }
        // e_i * beta = -1 mod alpha_i
        let g = e[i].extended_gcd(&alpha_i[i]);
        if !g.gcd.is_one() {
            return Err(Error::Internal(format!(
                "e_{i} = {} and alpha_{i} = {} are not coprime",
                e[i], alpha_i[i]
            )));
        }
        beta.push((-g.x).mod_floor(&alpha_i[i]));
    }
    for i in 0..m {
        for j in i + 1..m {
            if !alpha_i[i].gcd(&alpha_i[j]).is_one() {
                return Err(Error::Internal(format!(
                    "alpha_{i} and alpha_{j} are not coprime"
                )));
            }
        }
    }

    let twice_g_minus_2 = BigInt::from(m as i64 - 2) * &ghat - ghat_i.iter().sum::<BigInt>();
    let (genus, r) = Integer::div_rem(&(twice_g_minus_2 + 2), &BigInt::from(2));
    if !r.is_zero() || genus < BigInt::zero() {
        return Err(Error::Internal(format!(
            "central genus is not a non-negative integer for {exps:?}"
        )));
    }
    let mut c0q = BigRational::new(prod.clone(), &ell * &ell);
    for i in 0..m {
        c0q += BigRational::new(&ghat_i[i] * &beta[i], alpha_i[i].clone());
    }
    if !c0q.is_integer() || c0q <= BigRational::zero() {
        return Err(Error::Internal(format!(
            "c0 = {c0q} is not a positive integer for {exps:?}"
        )));
    }
    let c0 = c0q
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Overflow("c0".into()))?;

    let vec_u64 = |v: &[BigInt], what: &str| -> Result<Vec<u64>> {
        v.iter().map(|x| to_u64(x, what)).collect()
    };
    let mut original_index = vec![0; m];
    for (sorted, &orig) in order.iter().enumerate() {
        original_index[sorted] = orig;
    }
    Ok(BrieskornData {
        exponents: exps,
        original_index,
        ell: to_u64(&ell, "ell")?,
        ell_i: vec_u64(&ell_i, "ell_i")?,
        alpha_i: vec_u64(&alpha_i, "alpha_i")?,
        alpha: to_u64(&alpha, "alpha")?,
        e: vec_u64(&e, "e_i")?,
        ghat: to_u64(&ghat, "ghat")?,
        ghat_i: vec_u64(&ghat_i, "ghat_i")?,
        beta: vec_u64(&beta, "beta_i")?,
        genus: to_u64(&genus, "genus")?,
        c0,
    })
}

/// `Z^{(i)}` with its central coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateCycle {
    pub index: usize,
    pub cycle: Cycle,
    pub central_coefficient: u64,
}

impl BrieskornData {
    pub fn m(&self) -> usize {
        self.exponents.len()
    }

    /// Seifert invariant; trivial orbits (`alpha_i = 1`) are omitted.
    pub fn seifert(&self) -> SeifertInvariant {
        let mut arms = Vec::new();
        for i in 0..self.m() {
            if self.alpha_i[i] >= 2 {
                for _ in 0..self.ghat_i[i] {
                    arms.push(SeifertArm::new(self.alpha_i[i], self.beta[i]));
                }
            }
        }
        SeifertInvariant {
            genus: self.genus,
            c0: self.c0,
            arms,
        }
    }

    pub fn degree_model(&self) -> PDDegreeModel {
        PDDegreeModel::from_seifert(&self.seifert())
    }

    pub fn graph(&self) -> Result<ResolutionGraph> {
        bci_graph(self)
    }

    /// Number of graph vertices, computed without building the graph.
    pub fn graph_size(&self) -> Result<u64> {
        let mut n = 1u64;
        for i in 0..self.m() {
            if self.alpha_i[i] >= 2 {
                let len = crate::graph::hj_expand(self.alpha_i[i], self.beta[i])?.len() as u64;
                n = len
                    .checked_mul(self.ghat_i[i])
                    .and_then(|k| k.checked_add(n))
                    .ok_or_else(|| Error::Overflow("graph size".into()))?;
            }
        }
        Ok(n)
    }

    /// Vertex ids of each arm of exponent `i`, in the layout of [`bci_graph`].
    pub fn arms_of(&self, i: usize) -> Result<Vec<Vec<usize>>> {
        let mut next = 1usize;
        let mut out = Vec::new();
        for j in 0..self.m() {
            if self.alpha_i[j] < 2 {
                continue;
            }
            let len = crate::graph::hj_expand(self.alpha_i[j], self.beta[j])?.len();
            for _ in 0..self.ghat_i[j] {
                if j == i {
                    out.push((next..next + len).collect());
                }
                next += len;
            }
        }
        Ok(out)
    }

    /// `ell^{m-2} * ...`: the series `(1 - t^ell)^{m-2} / prod (1 - t^{e_i})`.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        HilbertSeries::from_factors(&vec![self.ell; self.m() - 2], &self.e)
    }

    /// `a(R) = (m - 2) ell - sum e_i`.
    pub fn a_invariant(&self) -> i128 {
        (self.m() as i128 - 2) * self.ell as i128 - self.e.iter().map(|&x| x as i128).sum::<i128>()
    }

    /// The smallest `e_i`, attached to the largest exponent.
    pub fn e_min(&self) -> u64 {
        *self.e.last().expect("m >= 3")
    }

    pub fn e_semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::new(&self.e)
    }

    pub fn ghat_semigroup(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::new(&self.ghat_i)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "exponents": self.exponents,
            "original_index": self.original_index,
            "ell": self.ell,
            "ell_i": self.ell_i,
            "alpha_i": self.alpha_i,
            "alpha": self.alpha,
            "e": self.e,
            "ghat": self.ghat,
            "ghat_i": self.ghat_i,
            "beta": self.beta,
            "genus": self.genus,
            "c0": self.c0,
        })
    }
}

/// Star graph: centre `(-c0, g)` and `ghat_i` chains of type `(alpha_i, beta_i)`
/// for every `i` with `alpha_i >= 2`, in sorted exponent order.
pub fn bci_graph(data: &BrieskornData) -> Result<ResolutionGraph> {
    star_graph(&data.seifert())
}

/// `Z^{(i)}`: the sum of the duals of the leaves of the `i`-arms, or
/// `ghat_i E_0^*` when exponent `i` has no arms.
pub fn coordinate_cycle(
    data: &BrieskornData,
    graph: &ResolutionGraph,
    i: usize,
) -> Result<CoordinateCycle> {
    if i >= data.m() {
        return Err(Error::InvalidInput(format!(
            "exponent index {i} out of range for m = {}",
            data.m()
        )));
    }
    let n = graph.len();
    let mut rhs = vec![BigRational::zero(); n];
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    if data.alpha_i[i] >= 2 {
        for arm in data.arms_of(i)? {
            rhs[*arm.last().expect("arms are non-empty")] = minus_one.clone();
        }
    } else {
        rhs[0] = BigRational::from_integer(-BigInt::from(data.ghat_i[i]));
    }
    let q = graph.solve(&rhs);
    let cycle = q
        .to_cycle()
        .ok_or_else(|| Error::Internal(format!("coordinate cycle {i} is not integral: {q}")))?;
    if *cycle.coeff(0) != BigInt::from(data.e[i]) {
        return Err(Error::Internal(format!(
            "coordinate cycle {i} has central coefficient {} instead of e_i = {}",
            cycle.coeff(0),
            data.e[i]
        )));
    }
    Ok(CoordinateCycle {
        index: i,
        cycle,
        central_coefficient: data.e[i],
    })
}

/// `M_X = Z^{(m)}`, the coordinate cycle of the largest exponent.
pub fn maximal_ideal_cycle(data: &BrieskornData, graph: &ResolutionGraph) -> Result<Cycle> {
    Ok(coordinate_cycle(data, graph, data.m() - 1)?.cycle)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MzVerdict {
    pub equal: bool,
    pub e_m: u64,
    pub alpha: u64,
}

/// `M_X = Z_X` exactly when `e_m <= alpha`.
pub fn m_equals_z(data: &BrieskornData) -> MzVerdict {
    MzVerdict {
        equal: data.e_min() <= data.alpha,
        e_m: data.e_min(),
        alpha: data.alpha,
    }
}

pub fn a_invariant(data: &BrieskornData) -> i128 {
    data.a_invariant()
}

/// `(n in <e_1..e_m>, deg D_n in <ghat_1..ghat_m>)`; the two always agree.
pub fn semigroup_equivalence_check(data: &BrieskornData, n: u64) -> Result<(bool, bool)> {
    let lhs = data.e_semigroup()?.contains(n);
    let deg = data.degree_model().deg(n as i128);
    let rhs = deg >= 0 && data.ghat_semigroup()?.contains(deg as u64);
    Ok((lhs, rhs))
}

/// `Z_X` computed both ways: Laufer's iteration and `L_{min(e_m, alpha)}`.
pub fn fundamental_cycle_checked(data: &BrieskornData, graph: &ResolutionGraph) -> Result<Cycle> {
    let z = fundamental_cycle(graph);
    let via_l = l_n(graph, data.e_min().min(data.alpha) as i64)?;
    if z != via_l {
        return Err(Error::Internal(format!(
            "fundamental cycle {z} differs from L_min(e_m, alpha) = {via_l}"
        )));
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{arithmetic_genus, is_antinef};
    use crate::graph::Vertex;

    #[test]
    fn data_2334() {
        let d = bci_data(&[2, 3, 3, 4]).unwrap();
        assert_eq!(d.ell, 12);
        assert_eq!(d.e, vec![6, 4, 4, 3]);
        assert_eq!(d.alpha_i, vec![1, 1, 1, 2]);
        assert_eq!(d.alpha, 2);
        assert_eq!(d.ghat, 6);
        assert_eq!(d.ghat_i, vec![3, 2, 2, 3]);
        assert_eq!(d.beta, vec![0, 0, 0, 1]);
        assert_eq!((d.genus, d.c0), (2, 2));
        assert_eq!(d.seifert().to_string(), "(2, 2, 3(2,1))");
        assert_eq!(d.a_invariant(), 7);
        assert!(!m_equals_z(&d).equal);
    }

    #[test]
    fn data_6_10_45() {
        let d = bci_data(&[6, 10, 45]).unwrap();
        assert_eq!(d.ell, 90);
        assert_eq!(d.alpha_i, vec![1, 1, 3]);
        assert_eq!(d.e, vec![15, 9, 2]);
        assert_eq!(d.ghat, 30);
        assert_eq!(d.ghat_i, vec![5, 3, 2]);
        assert_eq!(d.beta, vec![0, 0, 1]);
        assert_eq!((d.genus, d.c0), (11, 1));
        assert_eq!(d.seifert().to_string(), "(11, 1, 2(3,1))");
        assert_eq!(d.a_invariant(), 64);
        assert!(d.e_semigroup().unwrap().contains(64));
        assert!(m_equals_z(&d).equal);
        assert_eq!(semigroup_equivalence_check(&d, 3).unwrap(), (false, false));
    }

    #[test]
    fn data_222() {
        let d = bci_data(&[2, 2, 2]).unwrap();
        assert_eq!(d.ell, 2);
        assert_eq!(d.e, vec![1, 1, 1]);
        assert_eq!(d.alpha_i, vec![1, 1, 1]);
        assert_eq!(d.ghat, 4);
        assert_eq!(d.ghat_i, vec![2, 2, 2]);
        assert_eq!((d.genus, d.c0), (0, 2));
        assert_eq!(d.a_invariant(), -1);
        assert!(m_equals_z(&d).equal);
        let g = d.graph().unwrap();
        assert_eq!(g.vertices(), &[Vertex::new(-2, 0)]);
    }

    #[test]
    fn unsorted_input_is_sorted() {
        let d = bci_data(&[4, 3, 2, 3]).unwrap();
        assert_eq!(d.exponents, vec![2, 3, 3, 4]);
        assert_eq!(d.original_index, vec![2, 1, 3, 0]);
    }

    #[test]
    fn rejects_bad_exponents() {
        assert!(bci_data(&[2, 3]).is_err());
        assert!(bci_data(&[1, 3, 4]).is_err());
    }

    #[test]
    fn cycles_2334() {
        let d = bci_data(&[2, 3, 3, 4]).unwrap();
        let g = d.graph().unwrap();
        let m = maximal_ideal_cycle(&d, &g).unwrap();
        assert_eq!(m, Cycle::from_i64(&[3, 2, 2, 2]));
        assert_eq!(m, l_n(&g, 3).unwrap());
        let z1 = coordinate_cycle(&d, &g, 0).unwrap();
        assert_eq!(z1.cycle, Cycle::from_i64(&[6, 3, 3, 3]));
        let z = fundamental_cycle_checked(&d, &g).unwrap();
        assert_eq!(z, Cycle::from_i64(&[2, 1, 1, 1]));
        assert_eq!(arithmetic_genus(&g, &z).unwrap(), BigInt::from(4));
        for i in 0..4 {
            let c = coordinate_cycle(&d, &g, i).unwrap();
            assert!(is_antinef(&g, &c.cycle));
        }
    }

    #[test]
    fn cycles_6_10_45() {
        let d = bci_data(&[6, 10, 45]).unwrap();
        let g = d.graph().unwrap();
        let z3 = coordinate_cycle(&d, &g, 2).unwrap();
        assert_eq!(z3.central_coefficient, 2);
        assert_eq!(z3.cycle, l_n(&g, 2).unwrap());
        let z = fundamental_cycle_checked(&d, &g).unwrap();
        assert_eq!(z, maximal_ideal_cycle(&d, &g).unwrap());
        assert!(g.is_numerically_gorenstein());
    }

    #[test]
    fn equivalence_examples() {
        let d = bci_data(&[2, 3, 3, 4]).unwrap();
        assert_eq!(semigroup_equivalence_check(&d, 0).unwrap(), (true, true));
        assert_eq!(semigroup_equivalence_check(&d, 7).unwrap(), (true, true));
        assert_eq!(d.degree_model().deg(7), 2);
    }

    #[test]
    fn e8_from_235() {
        let d = bci_data(&[2, 3, 5]).unwrap();
        assert_eq!(d.genus, 0);
        let g = d.graph().unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(d.graph_size().unwrap(), 8);
        let z = fundamental_cycle_checked(&d, &g).unwrap();
        assert_eq!(*z.coeff(0), BigInt::from(6));
    }
}
