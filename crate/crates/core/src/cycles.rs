//! Fundamental cycle, the minimal cycles `L_n` on star-shaped graphs, and
//! arithmetic genus of cycles.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{hj_tails, Cycle, ResolutionGraph};
use crate::json;

/// Smallest non-zero anti-nef cycle, by Laufer's iteration from the reduced
/// cycle, always raising the smallest vertex id with positive product.
pub fn fundamental_cycle(graph: &ResolutionGraph) -> Cycle {
    let n = graph.len();
    let mut z = Cycle::reduced(n);
    let mut products = graph.products(&z);
    let mut positive: BTreeSet<usize> = (0..n).filter(|&v| products[v].is_positive()).collect();
    while let Some(&v) = positive.iter().next() {
        *z.coeff_mut(v) += 1;
        products[v] += graph.vertex(v).selfint;
        if !products[v].is_positive() {
            positive.remove(&v);
        }
        for &w in graph.neighbors(v) {
            products[w] += 1;
            if products[w].is_positive() {
                positive.insert(w);
            }
        }
    }
    z
}

/// Coefficients along an arm of the smallest cycle with central coefficient
/// `m0` that is anti-nef on the arm: `m_j = ceil(m_{j-1} / d_j)`, where
/// `tails[j] = (p, q)` is `d_j = p/q`.
pub fn minimal_arm_cycle(tails: &[(u64, u64)], m0: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(tails.len());
    let mut prev = m0.clone();
    for &(p, q) in tails {
        let next = (&prev * BigInt::from(q)).div_ceil(&BigInt::from(p));
        out.push(next.clone());
        prev = next;
    }
    out
}

/// Continued-fraction tails of every arm of a star-shaped graph.
pub fn arm_tails(graph: &ResolutionGraph) -> Result<Vec<Vec<(u64, u64)>>> {
    let star = graph.star_shape()?;
    star.arms
        .iter()
        .map(|arm| {
            let chain = arm
                .iter()
                .map(|&v| {
                    let s = graph.vertex(v).selfint;
                    if s > -2 {
                        Err(Error::InvalidInput(format!(
                            "arm vertex {v} has self-intersection {s}"
                        )))
                    } else {
                        Ok(s.unsigned_abs())
                    }
                })
                .collect::<Result<Vec<u64>>>()?;
            hj_tails(&chain)
        })
        .collect()
}

/// The minimal cycle with central coefficient `n` that is anti-nef away from
/// the centre.
pub fn l_n(graph: &ResolutionGraph, n: i64) -> Result<Cycle> {
    if n < 0 {
        return Err(Error::InvalidInput(format!("L_n needs n >= 0, got {n}")));
    }
    l_n_big(graph, &BigInt::from(n))
}

pub fn l_n_big(graph: &ResolutionGraph, n: &BigInt) -> Result<Cycle> {
    if n.is_negative() {
        return Err(Error::InvalidInput(format!("L_n needs n >= 0, got {n}")));
    }
    let star = graph.star_shape()?;
    let tails = arm_tails(graph)?;
    let mut c = Cycle::zero(graph.len());
    *c.coeff_mut(star.center) = n.clone();
    for (arm, t) in star.arms.iter().zip(&tails) {
        for (&v, m) in arm.iter().zip(minimal_arm_cycle(t, n)) {
            *c.coeff_mut(v) = m;
        }
    }
    Ok(c)
}

pub fn is_antinef(graph: &ResolutionGraph, cycle: &Cycle) -> bool {
    graph.products(cycle).iter().all(|p| !p.is_positive())
}

/// `-D . E_0` for the central vertex `E_0`.
pub fn deg_on_central(graph: &ResolutionGraph, cycle: &Cycle) -> Result<BigInt> {
    let center = graph.star_shape()?.center;
    Ok(-graph.product_with_vertex(cycle, center))
}

/// `p_a(D) = 1 + (D^2 + D.K)/2` for an effective non-zero cycle.
pub fn arithmetic_genus(graph: &ResolutionGraph, cycle: &Cycle) -> Result<BigInt> {
    if !cycle.is_positive() {
        return Err(Error::InvalidInput(format!(
            "arithmetic genus needs an effective non-zero cycle, got {cycle}"
        )));
    }
    let twice = graph.intersect(cycle, cycle) + graph.canonical_product(cycle);
    let (half, rem) = twice.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "D^2 + D.K = {twice} is odd for {cycle}"
        )));
    }
    Ok(BigInt::one() + half)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleReport {
    pub cycle: Cycle,
    pub products: Vec<BigInt>,
    pub self_intersection: BigInt,
    pub pa: BigInt,
}

impl CycleReport {
    pub fn new(graph: &ResolutionGraph, cycle: &Cycle) -> Result<Self> {
        let products = graph.products(cycle);
        let self_intersection = products
            .iter()
            .zip(cycle.coefficients())
            .map(|(p, c)| p * c)
            .sum();
        Ok(CycleReport {
            cycle: cycle.clone(),
            products,
            self_intersection,
            pa: arithmetic_genus(graph, cycle)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut products = serde_json::Map::new();
        for (i, p) in self.products.iter().enumerate() {
            products.insert(i.to_string(), json::int(p));
        }
        json!({
            "cycle": json::cycle_map(&self.cycle),
            "products": products,
            "self_intersection": json::int(&self.self_intersection),
            "pa": json::int(&self.pa),
        })
    }
}
