//! Pinkham–Demazure divisors on the central curve, models for the dimensions
//! `h0(D_n)`, and the geometric genus as the sum of the `h1(D_n)`.

pub mod case2334;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::brieskorn::{m_equals_z, BrieskornData};
use crate::cycles::{arm_tails, fundamental_cycle, l_n, minimal_arm_cycle};
use crate::error::{Error, Result};
use crate::graph::{seifert_of_graph, Cycle, ResolutionGraph, SeifertArm, SeifertInvariant};

pub use case2334::{case_study_2334, table1, table2, CaseReport, Overrides2334, TableRow};

/// `D = Q - sum (beta_i / alpha_i) P_i` on a curve of genus `g` with
/// `deg Q = c0`. Only degrees are tracked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDDegreeModel {
    pub genus: u64,
    pub c0: i64,
    /// Arms with `alpha = 1` are kept and contribute nothing.
    pub arms: Vec<SeifertArm>,
}

/// Admissible range `lo..=hi` for `h0(D_n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct H0Bounds {
    pub lo: i128,
    pub hi: i128,
}

impl H0Bounds {
    pub fn contains(&self, h: i128) -> bool {
        self.lo <= h && h <= self.hi
    }
}

impl PDDegreeModel {
    pub fn new(genus: u64, c0: i64, arms: Vec<SeifertArm>) -> Result<Self> {
        let s = SeifertInvariant::new(genus, c0, arms)?;
        let m = PDDegreeModel::from_seifert(&s);
        if !m.degree().is_positive() {
            return Err(Error::InvalidInput(format!(
                "deg D = {} must be positive",
                m.degree()
            )));
        }
        Ok(m)
    }

    pub fn from_seifert(s: &SeifertInvariant) -> Self {
        PDDegreeModel {
            genus: s.genus,
            c0: s.c0,
            arms: s.arms.clone(),
        }
    }

    pub fn from_graph(graph: &ResolutionGraph) -> Result<Self> {
        Ok(PDDegreeModel::from_seifert(&seifert_of_graph(graph)?))
    }

    /// `deg D_n = n c0 - sum ceil(n beta_i / alpha_i)` for `n >= 0`.
    pub fn deg(&self, n: i128) -> i128 {
        let mut d = n * self.c0 as i128;
        for a in &self.arms {
            d -= Integer::div_ceil(&(n * a.beta as i128), &(a.alpha as i128));
        }
        d
    }

    /// `deg D = c0 - sum beta_i / alpha_i`.
    pub fn degree(&self) -> BigRational {
        let mut d = BigRational::from_integer(BigInt::from(self.c0));
        for a in &self.arms {
            d -= BigRational::new(BigInt::from(a.beta), BigInt::from(a.alpha));
        }
        d
    }

    fn g(&self) -> i128 {
        self.genus as i128
    }

    /// Arms whose ceiling can lose a fraction.
    fn lossy_arms(&self) -> i128 {
        self.arms.iter().filter(|a| a.beta != 0).count() as i128
    }

    /// Smallest `n >= 0` with `n deg D > bound + k`, `k` the number of arms
    /// with `beta != 0`. Every `n` from there on has `deg D_n > bound`.
    fn first_beyond(&self, bound: i128) -> u64 {
        let target = BigRational::from_integer(BigInt::from(bound + self.lossy_arms()));
        let q = (target / self.degree()).floor().to_integer();
        if q.is_negative() {
            0
        } else {
            (q + 1u32).to_u64().unwrap_or(u64::MAX)
        }
    }

    /// Cutoff of the Pinkham sum: `deg D_n > 2g - 2` for every `n >= cutoff`.
    pub fn pinkham_cutoff(&self) -> u64 {
        self.first_beyond(2 * self.g() - 2)
    }

    /// Bounds on `h0(D_n)` from the degree alone: zero below degree 0,
    /// Riemann–Roch from `2g - 1`, Clifford in between. `D_0 = 0`.
    pub fn bounds(&self, n: u64) -> H0Bounds {
        if n == 0 {
            return H0Bounds { lo: 1, hi: 1 };
        }
        let d = self.deg(n as i128);
        let g = self.g();
        if d < 0 {
            H0Bounds { lo: 0, hi: 0 }
        } else if d >= 2 * g - 1 {
            H0Bounds {
                lo: d + 1 - g,
                hi: d + 1 - g,
            }
        } else {
            H0Bounds {
                lo: (d + 1 - g).max(0),
                hi: d / 2 + 1,
            }
        }
    }

    /// `cf_{E_0}(Z_X)`: the first `n >= 1` with `deg D_n >= 0`.
    pub fn z0(&self) -> u64 {
        (1..)
            .find(|&n| self.deg(n as i128) >= 0)
            .expect("deg D > 0")
    }

    /// Multiplicities of the arm types `(alpha, beta)` with `alpha >= 2`.
    pub fn arm_types(&self) -> BTreeMap<(u64, u64), usize> {
        let mut t = BTreeMap::new();
        for a in self.arms.iter().filter(|a| a.alpha >= 2) {
            *t.entry((a.alpha, a.beta)).or_default() += 1;
        }
        t
    }

    /// At most one arm type occurs an odd number of times, so the arm points
    /// can be a Weierstrass point plus pairs swapped by the involution.
    pub fn is_hyperelliptic_type(&self) -> bool {
        self.arm_types().values().filter(|&&k| k % 2 == 1).count() <= 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// `h0(D_n) = floor(deg/2) + 1` wherever Clifford leaves room.
    HyperellipticMax,
    /// Coefficients of the Hilbert series of the Brieskorn complete intersection.
    Bci(Box<BrieskornData>),
    /// Explicit values on top of the hyperelliptic-max model.
    Overrides(BTreeMap<u64, i128>),
}

/// A choice of `h0(D_n)` for every `n`, compatible with the degree bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyticModel {
    degrees: PDDegreeModel,
    kind: ModelKind,
    /// Series coefficients `h0(D_0..=D_cutoff)` for the BCI model.
    table: Vec<i128>,
}

fn hyperelliptic_h0(d: &PDDegreeModel, n: u64) -> i128 {
    let b = d.bounds(n);
    b.hi
}

impl AnalyticModel {
    pub fn hyperelliptic_max(degrees: PDDegreeModel) -> Self {
        AnalyticModel {
            degrees,
            kind: ModelKind::HyperellipticMax,
            table: Vec::new(),
        }
    }

    /// The model read off the Hilbert series. Every coefficient up to the
    /// Pinkham cutoff is checked against the degree bounds.
    pub fn bci(data: &BrieskornData) -> Result<Self> {
        let degrees = data.degree_model();
        let cutoff = degrees.pinkham_cutoff();
        let order = usize::try_from(cutoff)
            .map_err(|_| Error::Overflow(format!("series order {cutoff}")))?;
        let coeffs = data.hilbert_series()?.expand(order);
        let mut table = Vec::with_capacity(coeffs.len());
        for (n, c) in coeffs.iter().enumerate() {
            let h = c
                .to_i128()
                .ok_or_else(|| Error::Overflow(format!("h0(D_{n}) = {c}")))?;
            let b = degrees.bounds(n as u64);
            if !b.contains(h) {
                return Err(Error::Internal(format!(
                    "series coefficient {h} at t^{n} is outside [{}, {}] for deg D_{n} = {}",
                    b.lo,
                    b.hi,
                    degrees.deg(n as i128)
                )));
            }
            table.push(h);
        }
        Ok(AnalyticModel {
            degrees,
            kind: ModelKind::Bci(Box::new(data.clone())),
            table,
        })
    }

    /// The hyperelliptic-max model with `h0(D_n)` replaced by the given values.
    pub fn with_overrides(degrees: PDDegreeModel, overrides: &BTreeMap<u64, u64>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (&n, &h) in overrides {
            let hv = h as i128;
            let b = degrees.bounds(n);
            if !b.contains(hv) {
                return Err(Error::OutOfBounds {
                    n,
                    value: i64::try_from(h).unwrap_or(i64::MAX),
                    reason: format!(
                        "deg D_{n} = {} allows {}..={}",
                        degrees.deg(n as i128),
                        b.lo,
                        b.hi
                    ),
                });
            }
            map.insert(n, hv);
        }
        Ok(AnalyticModel {
            degrees,
            kind: ModelKind::Overrides(map),
            table: Vec::new(),
        })
    }

    pub fn degrees(&self) -> &PDDegreeModel {
        &self.degrees
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ModelKind::HyperellipticMax => "hyperelliptic_max",
            ModelKind::Bci(_) => "bci",
            ModelKind::Overrides(_) => "overrides",
        }
    }

    pub fn h0(&self, n: u64) -> i128 {
        match &self.kind {
            ModelKind::HyperellipticMax => hyperelliptic_h0(&self.degrees, n),
            ModelKind::Overrides(map) => map
                .get(&n)
                .copied()
                .unwrap_or_else(|| hyperelliptic_h0(&self.degrees, n)),
            // past the cutoff the degree is above 2g - 2
            ModelKind::Bci(_) => match self.table.get(n as usize) {
                Some(&h) => h,
                None => self.degrees.bounds(n).lo,
            },
        }
    }

    /// `h1(D_n) = h0(D_n) - (deg D_n + 1 - g)`.
    pub fn h1(&self, n: u64) -> i128 {
        self.h0(n) - (self.degrees.deg(n as i128) + 1 - self.degrees.g())
    }
}

/// `(z0, m0)`: first `n >= 1` with `deg D_n >= 0`, and with `h0(D_n) > 0`.
pub fn z0_m0(model: &AnalyticModel) -> (u64, u64) {
    let z0 = model.degrees.z0();
    let m0 = (z0..)
        .find(|&n| model.h0(n) > 0)
        .expect("h0 is positive once deg D_n >= 2g - 1 and deg D_n >= g");
    (z0, m0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PinkhamTerm {
    pub n: u64,
    pub deg: i128,
    pub h0: i128,
    pub h1: i128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinkhamSum {
    pub pg: BigInt,
    pub cutoff: u64,
    /// Terms with `h1 > 0`.
    pub terms: Vec<PinkhamTerm>,
}

impl PinkhamSum {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| {
                json!({
                    "n": t.n,
                    "deg": crate::json::int(&BigInt::from(t.deg)),
                    "h0": crate::json::int(&BigInt::from(t.h0)),
                    "h1": crate::json::int(&BigInt::from(t.h1)),
                })
            })
            .collect();
        json!({
            "pg": crate::json::int(&self.pg),
            "cutoff": self.cutoff,
            "terms": terms,
        })
    }
}

/// `sum_{n >= 0} h1(D_n)`, summed up to the cutoff where `h1` must vanish.
pub fn pinkham_sum(model: &AnalyticModel) -> Result<PinkhamSum> {
    let cutoff = model.degrees.pinkham_cutoff();
    let mut pg = BigInt::zero();
    let mut terms = Vec::new();
    for n in 0..=cutoff {
        let h1 = model.h1(n);
        if h1 < 0 {
            return Err(Error::Inconsistent(format!(
                "h0(D_{n}) = {} is below deg D_{n} + 1 - g",
                model.h0(n)
            )));
        }
        if h1 > 0 {
            pg += h1;
            terms.push(PinkhamTerm {
                n,
                deg: model.degrees.deg(n as i128),
                h0: model.h0(n),
                h1,
            });
        }
    }
    if model.h1(cutoff) != 0 {
        return Err(Error::Internal(format!(
            "h1(D_{cutoff}) is non-zero at the Pinkham cutoff"
        )));
    }
    Ok(PinkhamSum { pg, cutoff, terms })
}

pub fn pinkham_pg(model: &AnalyticModel) -> Result<BigInt> {
    Ok(pinkham_sum(model)?.pg)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgMax {
    pub value: BigInt,
    /// True when the value is attained: hyperelliptic type or `g <= 1`.
    pub exact: bool,
    pub hyperelliptic_type: bool,
}

impl PgMax {
    pub fn label(&self) -> &'static str {
        if self.exact {
            "maximum"
        } else {
            "upper bound model only"
        }
    }
}

/// Pinkham sum of the hyperelliptic-max model.
pub fn pg_max(seifert: &SeifertInvariant) -> Result<PgMax> {
    let degrees = PDDegreeModel::from_seifert(seifert);
    let value = pinkham_pg(&AnalyticModel::hyperelliptic_max(degrees.clone()))?;
    let hyperelliptic_type = degrees.is_hyperelliptic_type();
    Ok(PgMax {
        value,
        exact: hyperelliptic_type || degrees.genus <= 1,
        hyperelliptic_type,
    })
}

pub fn pg_max_of_graph(graph: &ResolutionGraph) -> Result<PgMax> {
    pg_max(&seifert_of_graph(graph)?)
}

pub const MZ_CAVEAT: &str = "m0 = z0 compares central coefficients only; M_X = Z_X further \
needs a section of D_z0 that vanishes at no arm point";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MzCriterion {
    pub holds: bool,
    /// True when `holds` decides `M_X = Z_X`; false when it only compares
    /// central coefficients.
    pub exact: bool,
    pub z0: u64,
    pub m0: u64,
    /// `(n, h0(D_n))` for `n = 1..=m0`.
    pub witnesses: Vec<(u64, i128)>,
    /// For BCI: whether `alpha` lies in `<e_1, ..., e_m>`, which alone
    /// already forces `M_X = Z_X`.
    pub alpha_in_e_semigroup: Option<bool>,
    pub caveat: Option<&'static str>,
}

impl MzCriterion {
    pub fn to_json(&self) -> Value {
        let w: Vec<Value> = self
            .witnesses
            .iter()
            .map(|&(n, h)| json!({ "n": n, "h0": crate::json::int(&BigInt::from(h)) }))
            .collect();
        json!({
            "holds": self.holds,
            "exact": self.exact,
            "z0": self.z0,
            "m0": self.m0,
            "witnesses": w,
            "alpha_in_e_semigroup": self.alpha_in_e_semigroup,
            "caveat": self.caveat,
        })
    }
}

/// Whether `M_X = Z_X` under the model. Exact for BCI (`e_m <= alpha`);
/// for the other models only `m0 = z0` is reported, with a caveat.
pub fn mz_criterion_weighted(model: &AnalyticModel) -> Result<MzCriterion> {
    let (z0, m0) = z0_m0(model);
    let witnesses = (1..=m0).map(|n| (n, model.h0(n))).collect();
    match &model.kind {
        ModelKind::Bci(data) => {
            let v = m_equals_z(data);
            if v.equal != (z0 == m0) {
                return Err(Error::Internal(format!(
                    "e_m <= alpha is {} but z0 = {z0}, m0 = {m0}",
                    v.equal
                )));
            }
            Ok(MzCriterion {
                holds: v.equal,
                exact: true,
                z0,
                m0,
                witnesses,
                alpha_in_e_semigroup: Some(data.e_semigroup()?.contains(data.alpha)),
                caveat: None,
            })
        }
        _ => Ok(MzCriterion {
            holds: z0 == m0,
            exact: false,
            z0,
            m0,
            witnesses,
            alpha_in_e_semigroup: None,
            caveat: Some(MZ_CAVEAT),
        }),
    }
}

pub const BASE_POINT_FREE: &str = "assumes O(-M) has no base points";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityBound {
    /// `-M^2`, the multiplicity when `O(-M)` is base-point free.
    pub minus_m_squared: BigInt,
    /// `-Z_X^2 + 1`.
    pub lower_bound: BigInt,
    pub hypothesis: &'static str,
}

impl MultiplicityBound {
    pub fn to_json(&self) -> Value {
        json!({
            "minus_m_squared": crate::json::int(&self.minus_m_squared),
            "lower_bound": crate::json::int(&self.lower_bound),
            "hypothesis": self.hypothesis,
        })
    }
}

pub fn multiplicity_bound(graph: &ResolutionGraph, m: &Cycle) -> Result<MultiplicityBound> {
    if m.len() != graph.len() {
        return Err(Error::InvalidInput(format!(
            "cycle has {} coefficients, graph has {} vertices",
            m.len(),
            graph.len()
        )));
    }
    let z = fundamental_cycle(graph);
    Ok(MultiplicityBound {
        minus_m_squared: -graph.intersect(m, m),
        lower_bound: 1 - graph.intersect(&z, &z),
        hypothesis: BASE_POINT_FREE,
    })
}

/// Exceptional part of the divisor of a homogeneous function of degree `n`
/// whose zeros on the central curve meet arm `i` with multiplicity
/// `vanishing[i]`: the first arm coefficient is `ceil(n beta_i / alpha_i) +
/// vanishing[i]` and the rest is minimal.
pub fn section_cycle(graph: &ResolutionGraph, n: u64, vanishing: &[u64]) -> Result<Cycle> {
    let star = graph.star_shape()?;
    if vanishing.len() != star.arms.len() {
        return Err(Error::InvalidInput(format!(
            "{} vanishing orders for {} arms",
            vanishing.len(),
            star.arms.len()
        )));
    }
    let tails = arm_tails(graph)?;
    let n_big = BigInt::from(n);
    let mut c = Cycle::zero(graph.len());
    *c.coeff_mut(star.center) = n_big.clone();
    for ((arm, t), &mu) in star.arms.iter().zip(&tails).zip(vanishing) {
        let first = minimal_arm_cycle(&t[..1], &n_big)[0].clone() + mu;
        *c.coeff_mut(arm[0]) = first.clone();
        for (&v, m) in arm[1..].iter().zip(minimal_arm_cycle(&t[1..], &first)) {
            *c.coeff_mut(v) = m;
        }
    }
    Ok(c)
}

/// Maximal ideal cycle in the hyperelliptic-max realisation: every `D_n` is
/// `deg D_n` times a Weierstrass point `P`, placed at the first arm of the
/// type occurring an odd number of times (if any). `|kP|` has `P` as a
/// simple base point exactly when `k` is odd and `1 <= k <= 2g - 1`.
/// The result is the componentwise minimum of the cycles of general
/// sections over all degrees.
pub fn hyperelliptic_maximal_ideal_cycle(graph: &ResolutionGraph) -> Result<Cycle> {
    let seifert = seifert_of_graph(graph)?;
    let degrees = PDDegreeModel::from_seifert(&seifert);
    if !degrees.is_hyperelliptic_type() {
        return Err(Error::InvalidInput(format!(
            "{seifert} is not of hyperelliptic type"
        )));
    }
    let types = degrees.arm_types();
    let weierstrass_arm = seifert
        .arms
        .iter()
        .position(|a| types.get(&(a.alpha, a.beta)).is_some_and(|k| k % 2 == 1));
    let model = AnalyticModel::hyperelliptic_max(degrees.clone());
    let g = degrees.g();
    let mut best: Option<Cycle> = None;
    for n in 1u64.. {
        let ln = l_n(graph, n as i64)?;
        if let Some(b) = &best {
            if b.le(&ln) {
                break;
            }
        }
        if model.h0(n) == 0 {
            continue;
        }
        let k = degrees.deg(n as i128);
        let mut vanishing = vec![0u64; seifert.arms.len()];
        if let Some(w) = weierstrass_arm {
            if k % 2 == 1 && k < 2 * g {
                vanishing[w] = 1;
            }
        }
        let c = section_cycle(graph, n, &vanishing)?;
        best = Some(match best {
            Some(b) => b.min(&c),
            None => c,
        });
    }
    Ok(best.expect("the loop ends only after a section was found"))
}
