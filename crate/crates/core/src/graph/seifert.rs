use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::hj::{hj_evaluate, hj_expand};
use super::{ResolutionGraph, Vertex};
use crate::error::{Error, Result};

/// One exceptional orbit `(alpha, beta)`; `alpha = 1` means a trivial orbit
/// with `beta = 0` and no chain in the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertArm {
    pub alpha: u64,
    pub beta: u64,
}

impl SeifertArm {
    pub fn new(alpha: u64, beta: u64) -> Self {
        SeifertArm { alpha, beta }
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha == 0 {
            return Err(Error::InvalidInput("arm with alpha = 0".into()));
        }
        if self.alpha == 1 {
            if self.beta != 0 {
                return Err(Error::InvalidInput(format!(
                    "arm with alpha = 1 must have beta = 0, got {}",
                    self.beta
                )));
            }
            return Ok(());
        }
        if self.beta >= self.alpha || self.alpha.gcd(&self.beta) != 1 {
            return Err(Error::InvalidInput(format!(
                "arm ({}, {}) needs 0 < beta < alpha with gcd 1",
                self.alpha, self.beta
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeifertInvariant {
    pub genus: u64,
    pub c0: i64,
    pub arms: Vec<SeifertArm>,
}

impl SeifertInvariant {
    pub fn new(genus: u64, c0: i64, arms: Vec<SeifertArm>) -> Result<Self> {
        for a in &arms {
            a.validate()?;
        }
        Ok(SeifertInvariant { genus, c0, arms })
    }

    /// `deg D = c0 - sum beta_i / alpha_i`.
    pub fn degree(&self) -> BigRational {
        let mut d = BigRational::from_integer(BigInt::from(self.c0));
        for a in &self.arms {
            d -= BigRational::new(a.beta.into(), a.alpha.into());
        }
        d
    }

    /// The same invariant with trivial (`alpha = 1`) orbits removed.
    pub fn without_trivial_arms(&self) -> SeifertInvariant {
        SeifertInvariant {
            genus: self.genus,
            c0: self.c0,
            arms: self.arms.iter().copied().filter(|a| a.alpha >= 2).collect(),
        }
    }
}

impl std::fmt::Display for SeifertInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}", self.genus, self.c0)?;
        // group equal consecutive arms as k(alpha,beta)
        let mut i = 0;
        while i < self.arms.len() {
            let mut j = i;
            while j < self.arms.len() && self.arms[j] == self.arms[i] {
                j += 1;
            }
            let a = self.arms[i];
            if j - i > 1 {
                write!(f, ", {}({},{})", j - i, a.alpha, a.beta)?;
            } else {
                write!(f, ", ({},{})", a.alpha, a.beta)?;
            }
            i = j;
        }
        write!(f, ")")
    }
}

/// Builds the star-shaped graph: centre `0` with self-intersection `-c0` and
/// genus `g`, then each non-trivial arm's chain in order.
pub fn star_graph(seifert: &SeifertInvariant) -> Result<ResolutionGraph> {
    for a in &seifert.arms {
        a.validate()?;
    }
    if !seifert.degree().is_positive() {
        return Err(Error::InvalidInput(format!(
            "Seifert invariant {seifert} has non-positive degree {}",
            seifert.degree()
        )));
    }
    let mut vertices = vec![Vertex::new(-seifert.c0, seifert.genus)];
    let mut edges = Vec::new();
    for a in seifert.arms.iter().filter(|a| a.alpha >= 2) {
        let chain = hj_expand(a.alpha, a.beta)?;
        let mut prev = 0;
        for c in chain {
            let c = i64::try_from(c).map_err(|_| Error::Overflow("chain entry".into()))?;
            let id = vertices.len();
            vertices.push(Vertex::new(-c, 0));
            edges.push((prev, id));
            prev = id;
        }
    }
    ResolutionGraph::new(vertices, edges, Some(0))
}

/// Reads the Seifert invariant off a star-shaped graph. Arms must consist of
/// rational curves with self-intersection at most `-2`.
pub fn seifert_of_graph(graph: &ResolutionGraph) -> Result<SeifertInvariant> {
    let star = graph.star_shape()?;
    let center = graph.vertex(star.center);
    let mut arms = Vec::with_capacity(star.arms.len());
    for arm in &star.arms {
        let mut chain = Vec::with_capacity(arm.len());
        for &v in arm {
            let s = graph.vertex(v).selfint;
            if s > -2 {
                return Err(Error::InvalidInput(format!(
                    "arm vertex {v} has self-intersection {s}; only minimal chains are accepted"
                )));
            }
            chain.push(s.unsigned_abs());
        }
        let (alpha, beta) = hj_evaluate(&chain)?;
        arms.push(SeifertArm::new(alpha, beta));
    }
    Ok(SeifertInvariant {
        genus: center.genus,
        c0: -center.selfint,
        arms,
    })
}
