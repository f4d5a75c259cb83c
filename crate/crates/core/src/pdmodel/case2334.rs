//! Singularities with resolution graph `Γ(2,3,3,4)` and `M_X = Z_X`, indexed
//! by `(h0(D_3), h0(D_4), h0(D_5), h0(D_7))`. Every other `h0(D_n)` is fixed
//! by the degree: `D_2` has a section and the remaining values agree with the
//! maximal series.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{
    hyperelliptic_maximal_ideal_cycle, multiplicity_bound, mz_criterion_weighted, pg_max,
    pinkham_pg, AnalyticModel, MzCriterion, PDDegreeModel, BASE_POINT_FREE,
};
use crate::brieskorn::{bci_data, maximal_ideal_cycle};
use crate::error::{Error, Result};
use crate::numerics::{
    complete_intersection_degrees, pg_difference, pg_from_series, value_semigroup_from_series,
    HilbertSeries, IntPolynomial, NumericalSemigroup,
};

pub const MULTIPLICITY_HYPOTHESIS: &str =
    "assumes H^0(D_m) is base-point free, so a degree-m section is a second parameter";
pub const GENERATOR_HYPOTHESIS: &str =
    "assumes products of earlier generators span as much as the series allows";
pub const CI_HYPOTHESIS: &str = "assumes the relations found greedily form a regular sequence";

/// Degrees whose `h0` the case study varies.
pub const VARIED: [u64; 4] = [3, 4, 5, 7];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Overrides2334 {
    pub h3: u64,
    pub h4: u64,
    pub h5: u64,
    pub h7: u64,
}

impl Overrides2334 {
    pub const fn new(h3: u64, h4: u64, h5: u64, h7: u64) -> Self {
        Overrides2334 { h3, h4, h5, h7 }
    }

    pub fn values(&self) -> [u64; 4] {
        [self.h3, self.h4, self.h5, self.h7]
    }

    pub fn as_map(&self) -> BTreeMap<u64, u64> {
        VARIED.iter().copied().zip(self.values()).collect()
    }

    /// All 16 vectors inside the degree bounds, in lexicographic order.
    pub fn all_in_bounds() -> Vec<Overrides2334> {
        let mut out = Vec::new();
        for h3 in 0..=1 {
            for h4 in 1..=2 {
                for h5 in 0..=1 {
                    for h7 in 1..=2 {
                        out.push(Overrides2334::new(h3, h4, h5, h7));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Overrides2334 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.h3, self.h4, self.h5, self.h7)
    }
}

impl FromStr for Overrides2334 {
    type Err = Error;

    /// `h3,h4,h5,h7`, optionally in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Vec<u64> = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidInput(format!("bad override value {x:?}")))
            })
            .collect::<Result<_>>()?;
        match v[..] {
            [h3, h4, h5, h7] => Ok(Overrides2334::new(h3, h4, h5, h7)),
            _ => Err(Error::InvalidInput(format!(
                "expected four values h3,h4,h5,h7, got {s:?}"
            ))),
        }
    }
}

/// `(1 - t^6)(1 - t^20) / ((1 - t^2)(1 - t^3)(1 - t^4)(1 - t^10))`.
pub fn maximal_series() -> HilbertSeries {
    HilbertSeries::from_factors(&[6, 20], &[2, 3, 4, 10]).expect("positive degrees")
}

fn degree_model() -> Result<PDDegreeModel> {
    Ok(bci_data(&[2, 3, 3, 4])?.degree_model())
}

/// Implications between the varied values that hold on every genus-2 curve.
fn check_rules(o: &Overrides2334) -> Result<()> {
    let fail = |msg: &str| Err(Error::Inconsistent(format!("overrides {o}: {msg}")));
    if o.h3 == 1 && o.h5 != 1 {
        // D_5 - D_3 = D_2 and both have sections
        return fail("h0(D_3) = 1 forces h0(D_5) = 1");
    }
    if o.h3 == 1 && o.h4 != o.h7 {
        // D_3 ~ 0 makes D_7 ~ D_4
        return fail("h0(D_3) = 1 forces h0(D_4) = h0(D_7)");
    }
    if o.h3 == 1 && o.h4 != 1 {
        // Gorenstein of multiplicity 3 would be a rational hypersurface
        return fail("h0(D_3) = 1 forces h0(D_4) = 1");
    }
    if o.h3 == 0 && o.h4 == 2 && o.h7 != 1 {
        // D_4 ~ K puts the base point of |D_7| at the section point of D_2
        return fail("h0(D_3) = 0 and h0(D_4) = 2 force h0(D_7) = 1");
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingChecks {
    /// `emb <= mult + 1`.
    pub abhyankar: bool,
    /// `emb <= mult`, applicable to Gorenstein rings with `mult >= 3`.
    pub sally: Option<bool>,
    /// `emb - 1 <= ` number of generators of the value semigroup.
    pub section_semigroup: bool,
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub overrides: Overrides2334,
    pub series: HilbertSeries,
    /// Degrees where `h0` falls short of the maximal series.
    pub deficiencies: Vec<u64>,
    pub pg: BigInt,
    pub pg_pinkham: BigInt,
    pub gorenstein: bool,
    /// `H (1 - t^2)`.
    pub section_series: HilbertSeries,
    /// Smallest positive degree in the support of the section series.
    pub multiplicity: u64,
    /// `H (1 - t^2)(1 - t^mult)`, the series of `R / (x, y)`.
    pub quotient_series: IntPolynomial,
    pub value_semigroup: NumericalSemigroup,
    pub generator_degrees: Vec<u64>,
    pub embedding_dimension: usize,
    pub checks: EmbeddingChecks,
    pub mz: MzCriterion,
}

/// Counts monomials of degree `d` in variables of the given degrees.
fn monomial_count(degrees: &[u64], d: usize) -> Result<BigInt> {
    Ok(HilbertSeries::from_factors(&[], degrees)?.expand(d)[d].clone())
}

/// Generators beyond `x` (degree 2) and `y` (degree `mult`), read off the
/// series `q` of `R / (x, y)`: `q_d` minus the monomials in generators of
/// lower degree, if positive.
fn quotient_generators(q: &IntPolynomial) -> Result<Vec<u64>> {
    let mut found: Vec<u64> = Vec::new();
    for (d, a) in q.coeffs().iter().enumerate().skip(1) {
        if a.is_zero() {
            continue;
        }
        let products = monomial_count(&found, d)?;
        let new = a - products.min(a.clone());
        let k = new
            .to_usize()
            .ok_or_else(|| Error::Overflow(format!("{new} generators")))?;
        found.extend(std::iter::repeat_n(d as u64, k));
    }
    Ok(found)
}

/// Runs the classification for one override vector.
pub fn case_study_2334(o: Overrides2334) -> Result<CaseReport> {
    let degrees = degree_model()?;
    let model = AnalyticModel::with_overrides(degrees, &o.as_map())?;
    check_rules(&o)?;

    let max = maximal_series();
    let c = max.expand(7);
    let mut deficit = IntPolynomial::zero();
    let mut deficiencies = Vec::new();
    for (n, h) in VARIED.iter().zip(o.values()) {
        let short = &c[*n as usize] - BigInt::from(h);
        if short.is_positive() {
            deficiencies.push(*n);
        }
        deficit = &deficit + &IntPolynomial::monomial(short, *n as usize);
    }
    let series = max.add_polynomial(&-&deficit);
    let pg = BigInt::from(10) + pg_difference(&series, &max)?;
    let pg_pinkham = pinkham_pg(&model)?;
    if pg != pg_pinkham {
        return Err(Error::Internal(format!(
            "p_g from the series is {pg}, the Pinkham sum gives {pg_pinkham}"
        )));
    }
    let pg_series = pg_from_series(&series)?;
    if pg_series != pg {
        return Err(Error::Internal(format!(
            "p_g from the quotient is {pg_series}, from the difference {pg}"
        )));
    }

    let section_series = series.mul_one_minus_t(2)?;
    let sc = section_series.expand(section_series.safety_order());
    let multiplicity = (1..sc.len())
        .find(|&k| !sc[k].is_zero())
        .ok_or_else(|| Error::Inconsistent("section series has no positive degree".into()))?
        as u64;

    let quotient = section_series.mul_one_minus_t(multiplicity)?;
    let quotient_series = quotient.as_polynomial().ok_or_else(|| {
        Error::Inconsistent(format!(
            "H(t)(1 - t^2)(1 - t^{multiplicity}) is not a polynomial"
        ))
    })?;
    if let Some((k, v)) = quotient_series
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, v)| v.is_negative())
    {
        return Err(Error::NegativeCoefficient {
            degree: k,
            value: v.to_string(),
            context: format!(
                "H(t)(1 - t^2)(1 - t^{multiplicity}) = {}",
                quotient_series.to_pretty()
            ),
        });
    }

    let value_semigroup = value_semigroup_from_series(&series, &[2], None)?.semigroup;
    if value_semigroup.multiplicity() != multiplicity {
        return Err(Error::Internal(format!(
            "value semigroup starts at {}, section series at {multiplicity}",
            value_semigroup.multiplicity()
        )));
    }

    let mut gens: BTreeSet<u64> = BTreeSet::from([2, multiplicity]);
    gens.extend(quotient_generators(&quotient_series)?);
    let generator_degrees: Vec<u64> = gens.into_iter().collect();
    let embedding_dimension = generator_degrees.len();
    let gorenstein = o.h7 == 2;
    let mult = multiplicity as usize;
    let checks = EmbeddingChecks {
        abhyankar: embedding_dimension <= mult + 1,
        sally: (gorenstein && mult >= 3).then_some(embedding_dimension <= mult),
        section_semigroup: embedding_dimension - 1 <= value_semigroup.embedding_dimension(),
    };
    let mz = mz_criterion_weighted(&model)?;

    Ok(CaseReport {
        overrides: o,
        series,
        deficiencies,
        pg,
        pg_pinkham,
        gorenstein,
        section_series,
        multiplicity,
        quotient_series,
        value_semigroup,
        generator_degrees,
        embedding_dimension,
        checks,
        mz,
    })
}

/// Lowest-terms form of the series with denominator `(1 - t^2)(1 - t^mult)`.
fn reduced_form(r: &CaseReport) -> String {
    format!(
        "({}) / ((1 - t^2) (1 - t^{}))",
        r.quotient_series.to_pretty(),
        r.multiplicity
    )
}

impl CaseReport {
    pub fn to_json(&self) -> Value {
        let ints = |c: &[BigInt]| -> Vec<Value> { c.iter().map(crate::json::int).collect() };
        json!({
            "overrides": {
                "h3": self.overrides.h3,
                "h4": self.overrides.h4,
                "h5": self.overrides.h5,
                "h7": self.overrides.h7,
            },
            "series": {
                "numerator": ints(self.series.numerator().coeffs()),
                "denominators": self.series.denominators(),
                "reduced": reduced_form(self),
                "expansion": ints(&self.series.expand(12)),
            },
            "deficiencies": self.deficiencies,
            "pg": crate::json::int(&self.pg),
            "pg_pinkham": crate::json::int(&self.pg_pinkham),
            "gorenstein": self.gorenstein,
            "multiplicity": {
                "value": self.multiplicity,
                "hypothesis": MULTIPLICITY_HYPOTHESIS,
            },
            "quotient_series": ints(self.quotient_series.coeffs()),
            "value_semigroup": self.value_semigroup.minimal_generators(),
            "generator_degrees": {
                "value": self.generator_degrees,
                "hypothesis": GENERATOR_HYPOTHESIS,
            },
            "embedding_dimension": {
                "value": self.embedding_dimension,
                "hypothesis": GENERATOR_HYPOTHESIS,
            },
            "checks": {
                "abhyankar": self.checks.abhyankar,
                "sally": self.checks.sally,
                "section_semigroup": self.checks.section_semigroup,
            },
            "m_equals_z": self.mz.to_json(),
        })
    }

    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self.generator_degrees.iter().map(u64::to_string).collect();
        let sg: Vec<String> = self
            .value_semigroup
            .minimal_generators()
            .iter()
            .map(u64::to_string)
            .collect();
        format!(
            "overrides {}\nH(t) = {}\n     = {}\np_g = {}\nGorenstein: {}\nmult = {} ({})\n\
             generator degrees = {{{}}}\nemb = {}\nvalue semigroup = <{}>\n",
            self.overrides,
            reduced_form(self),
            self.series.expansion_pretty(12),
            self.pg,
            if self.gorenstein { "yes" } else { "no" },
            self.multiplicity,
            MULTIPLICITY_HYPOTHESIS,
            gens.join(","),
            self.embedding_dimension,
            sg.join(","),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub pg: BigInt,
    pub mult: BigInt,
    pub emb: usize,
    pub gorenstein: Option<bool>,
    pub generator_degrees: Vec<u64>,
}

/// Brieskorn complete intersection and maximal `p_g` rows for `Γ(2,3,3,4)`.
pub fn table1() -> Result<Vec<TableRow>> {
    let data = bci_data(&[2, 3, 3, 4])?;
    let graph = data.graph()?;
    let h = data.hilbert_series()?;
    let (gens, _) = complete_intersection_degrees(&h, h.safety_order())?
        .ok_or_else(|| Error::Internal("Brieskorn series has no CI presentation".into()))?;
    let bci = TableRow {
        label: "Brieskorn CI".into(),
        pg: pg_from_series(&h)?,
        mult: multiplicity_bound(&graph, &maximal_ideal_cycle(&data, &graph)?)?.minus_m_squared,
        emb: gens.len(),
        gorenstein: Some(true),
        generator_degrees: gens,
    };

    let max = maximal_series();
    let pg = pg_max(&data.seifert())?.value;
    let from_series = pg_from_series(&max)?;
    if pg != from_series {
        return Err(Error::Internal(format!(
            "maximal p_g is {pg} by the Pinkham sum, {from_series} from its series"
        )));
    }
    let (gens, _) = complete_intersection_degrees(&max, max.safety_order())?
        .ok_or_else(|| Error::Internal("maximal series has no CI presentation".into()))?;
    let m = hyperelliptic_maximal_ideal_cycle(&graph)?;
    let top = TableRow {
        label: "maximal p_g".into(),
        pg,
        mult: multiplicity_bound(&graph, &m)?.minus_m_squared,
        emb: gens.len(),
        gorenstein: Some(true),
        generator_degrees: gens,
    };
    Ok(vec![bci, top])
}

/// The six admissible override vectors, in table order.
pub const TABLE2: [Overrides2334; 6] = [
    Overrides2334::new(1, 1, 1, 1),
    Overrides2334::new(0, 2, 1, 1),
    Overrides2334::new(0, 2, 0, 1),
    Overrides2334::new(0, 1, 1, 2),
    Overrides2334::new(0, 1, 1, 1),
    Overrides2334::new(0, 1, 0, 1),
];

pub fn table2() -> Result<Vec<TableRow>> {
    TABLE2
        .iter()
        .map(|&o| {
            let r = case_study_2334(o)?;
            Ok(TableRow {
                label: o.to_string(),
                pg: r.pg,
                mult: BigInt::from(r.multiplicity),
                emb: r.embedding_dimension,
                gorenstein: Some(r.gorenstein),
                generator_degrees: r.generator_degrees,
            })
        })
        .collect()
}

/// Hypothesis labels attached to each table.
pub fn table_hypotheses() -> [&'static str; 3] {
    [BASE_POINT_FREE, CI_HYPOTHESIS, MULTIPLICITY_HYPOTHESIS]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::series_difference;
    use num_traits::One;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn row_1111() {
        let r = case_study_2334(Overrides2334::new(1, 1, 1, 1)).unwrap();
        assert_eq!(r.pg, BigInt::from(8));
        assert_eq!(r.multiplicity, 3);
        assert_eq!(r.generator_degrees, vec![2, 3, 8, 10]);
        assert!(!r.gorenstein);
        assert_eq!(r.quotient_series, poly(&[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1]));
        assert_eq!(r.value_semigroup.minimal_generators(), &[3, 8, 10]);
        assert_eq!(r.deficiencies, vec![4, 7]);
        assert!(r.mz.holds);
        assert_eq!(r.mz.witnesses[1], (2, 1));
    }

    #[test]
    fn row_0211() {
        let r = case_study_2334(Overrides2334::new(0, 2, 1, 1)).unwrap();
        assert_eq!(
            (r.pg.clone(), r.multiplicity, r.embedding_dimension),
            (BigInt::from(8), 4, 4)
        );
        assert_eq!(r.value_semigroup.minimal_generators(), &[4, 5, 11]);
    }

    #[test]
    fn rejected_vector() {
        let e = case_study_2334(Overrides2334::new(0, 1, 0, 2)).unwrap_err();
        match e {
            Error::NegativeCoefficient { degree, value, .. } => {
                assert_eq!((degree, value.as_str()), (13, "-1"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rules_and_bounds() {
        assert!(matches!(
            case_study_2334(Overrides2334::new(1, 2, 1, 2)),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            case_study_2334(Overrides2334::new(2, 1, 1, 1)),
            Err(Error::OutOfBounds { n: 3, .. })
        ));
        let accepted = Overrides2334::all_in_bounds()
            .into_iter()
            .filter(|&o| case_study_2334(o).is_ok())
            .collect::<Vec<_>>();
        let mut expected = TABLE2.to_vec();
        expected.sort();
        assert_eq!(accepted, expected);
    }

    #[test]
    fn parse() {
        assert_eq!(
            "0,1,0,2".parse::<Overrides2334>().unwrap(),
            Overrides2334::new(0, 1, 0, 2)
        );
        assert!("0,1".parse::<Overrides2334>().is_err());
        assert!("a,1,0,2".parse::<Overrides2334>().is_err());
    }

    #[test]
    fn table_one() {
        let t = table1().unwrap();
        assert_eq!(
            (t[0].pg.clone(), t[0].mult.clone(), t[0].emb),
            (8.into(), 6.into(), 4)
        );
        assert_eq!(
            (t[1].pg.clone(), t[1].mult.clone(), t[1].emb),
            (10.into(), 4.into(), 4)
        );
    }

    #[test]
    fn deficiency_count_matches_genus_drop() {
        for o in TABLE2 {
            let r = case_study_2334(o).unwrap();
            let d = series_difference(&maximal_series(), &r.series).unwrap();
            assert!(d.coeffs().iter().all(|c| c.is_zero() || c.is_one()));
            assert_eq!(BigInt::from(10) - &r.pg, BigInt::from(r.deficiencies.len()));
        }
    }
}
