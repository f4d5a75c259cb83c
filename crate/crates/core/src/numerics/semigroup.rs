use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::series::{is_zero_or_one, HilbertSeries};
use crate::error::{Error, Result};

/// Submonoid of the non-negative integers generated by finitely many
/// positive integers. Membership uses the Apéry set with respect to the
/// smallest generator, so generators need not be coprime; the Frobenius
/// number needs `gcd = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gcd: u64,
    /// `apery[r]` is the least element congruent to `r` modulo the smallest
    /// generator, if any.
    apery: Vec<Option<u64>>,
}

fn apery_set(gens: &[u64]) -> Result<Vec<Option<u64>>> {
    let m = gens[0];
    let max = *gens.last().expect("non-empty");
    if m.checked_mul(max).is_none() {
        return Err(Error::Overflow(format!(
            "semigroup generators {m} and {max} are too large"
        )));
    }
    let mut dist: Vec<Option<u64>> = vec![None; m as usize];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::from([Reverse((0u64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &g in &gens[1..] {
            let nd = d + g;
            let nr = (r + (g % m) as usize) % m as usize;
            if dist[nr].is_none_or(|old| nd < old) {
                dist[nr] = Some(nd);
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    Ok(dist)
}

impl NumericalSemigroup {
    pub fn new(generators: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::InvalidInput(
                "semigroup needs at least one positive generator".into(),
            ));
        }
        let mut minimal: Vec<u64> = Vec::new();
        for &g in &gens {
            let redundant = !minimal.is_empty() && {
                let ap = apery_set(&minimal)?;
                member(&ap, minimal[0], g)
            };
            if !redundant {
                minimal.push(g);
            }
        }
        let gcd = minimal.iter().fold(0u64, |a, &b| a.gcd(&b));
        let apery = apery_set(&minimal)?;
        Ok(NumericalSemigroup {
            generators: minimal,
            gcd,
            apery,
        })
    }

    /// The unique minimal generating set, ascending.
    pub fn minimal_generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Smallest positive element.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    pub fn contains(&self, n: u64) -> bool {
        member(&self.apery, self.generators[0], n)
    }

    /// Largest integer outside the semigroup; `-1` when it is all of `N`.
    pub fn frobenius(&self) -> Result<i64> {
        if self.gcd != 1 {
            return Err(Error::InvalidInput(format!(
                "Frobenius number needs coprime generators, gcd is {}",
                self.gcd
            )));
        }
        let max = self
            .apery
            .iter()
            .map(|w| w.expect("every residue is reached when gcd = 1"))
            .max()
            .unwrap_or(0);
        Ok(max as i64 - self.generators[0] as i64)
    }

    /// Builds the semigroup whose elements are the `true` entries of
    /// `support[0..]`, where every index past the table is assumed to be a
    /// member. Fails if the table is not closed under addition.
    pub fn from_support(support: &[bool]) -> Result<Self> {
        if support.first() != Some(&true) {
            return Err(Error::Inconsistent("support must contain 0".into()));
        }
        let len = support.len();
        let inside = |n: usize| n >= len || support[n];
        // every minimal generator is below frobenius + multiplicity, and the
        // frobenius number is below the table length
        let first = (1..len).find(|&n| support[n]).unwrap_or(len);
        let mut gens: Vec<u64> = Vec::new();
        for s in 1..len + first {
            if !inside(s) {
                continue;
            }
            let decomposable = (1..=s / 2).any(|a| inside(a) && inside(s - a));
            if !decomposable {
                gens.push(s as u64);
            }
        }
        let sg = NumericalSemigroup::new(&gens)?;
        if let Some(n) = (0..len).find(|&n| sg.contains(n as u64) != support[n]) {
            return Err(Error::Inconsistent(format!(
                "support is not closed under addition (disagrees at {n})"
            )));
        }
        Ok(sg)
    }
}

fn member(apery: &[Option<u64>], m: u64, n: u64) -> bool {
    match apery[(n % m) as usize] {
        Some(w) => n >= w,
        None => false,
    }
}

pub fn sg_membership(s: &NumericalSemigroup, n: u64) -> bool {
    s.contains(n)
}

pub fn sg_minimal_generators(generators: &[u64]) -> Result<Vec<u64>> {
    Ok(NumericalSemigroup::new(generators)?
        .minimal_generators()
        .to_vec())
}

pub fn sg_frobenius(s: &NumericalSemigroup) -> Result<i64> {
    s.frobenius()
}

/// Result of reading a semigroup off a series.
#[derive(Clone, Debug)]
pub struct ValueSemigroup {
    pub semigroup: NumericalSemigroup,
    /// The series multiplied by the section factors.
    pub series: HilbertSeries,
    /// Expansion order up to which the coefficients were inspected.
    pub checked_order: usize,
}

/// Multiplies `h` by `prod (1 - t^d)` over `section_degrees` and reads the
/// support of the result as a semigroup. Every coefficient must be 0 or 1 and
/// the tail must be constantly 1.
///
/// Past the numerator degree the coefficients of `N / prod_{i<k} (1 - t^{d_i})`
/// agree with a quasi-polynomial of degree below `k` and period `L = lcm(d_i)`,
/// so `k` consecutive periods of ones force all later coefficients to be 1.
/// `min_order` raises the inspected order further.
pub fn value_semigroup_from_series(
    h: &HilbertSeries,
    section_degrees: &[u64],
    min_order: Option<usize>,
) -> Result<ValueSemigroup> {
    let mut reduced = h.clone();
    for &d in section_degrees {
        reduced = reduced.mul_one_minus_t(d)?;
    }
    let dens = reduced.denominators();
    if dens.is_empty() {
        return Err(Error::Inconsistent(
            "series times the section factors is a polynomial; its support is finite".into(),
        ));
    }
    let period = dens.iter().fold(1u64, |a, &b| a.lcm(&b)) as usize;
    let start = reduced.numerator().degree().unwrap_or(0) + 1;
    let window = dens.len() * period;
    let order = (start + window).max(min_order.unwrap_or(0));
    let c = reduced.expand(order);
    if let Some((k, v)) = c.iter().enumerate().find(|(_, v)| !is_zero_or_one(v)) {
        return Err(if v < &num_bigint::BigInt::zero() {
            Error::NegativeCoefficient {
                degree: k,
                value: v.to_string(),
                context: "section series".into(),
            }
        } else {
            Error::Inconsistent(format!(
                "section series has coefficient {v} at t^{k}; expected 0 or 1"
            ))
        });
    }
    if let Some(k) = (order + 1 - window..=order).find(|&k| !c[k].is_one()) {
        return Err(Error::Inconsistent(format!(
            "section series does not stabilise at 1 (zero at t^{k})"
        )));
    }
    let support: Vec<bool> = c.iter().map(|v| v.is_one()).collect();
    let semigroup = NumericalSemigroup::from_support(&support)?;
    Ok(ValueSemigroup {
        semigroup,
        series: reduced,
        checked_order: order,
    })
}
