use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// A rational function `N(t) / prod (1 - t^d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: IntPolynomial,
    denominators: Vec<u64>,
}

impl HilbertSeries {
    pub fn new(numerator: IntPolynomial, mut denominators: Vec<u64>) -> Result<Self> {
        if denominators.contains(&0) {
            return Err(Error::InvalidInput(
                "denominator factor 1 - t^0 vanishes".into(),
            ));
        }
        denominators.sort_unstable();
        Ok(HilbertSeries {
            numerator,
            denominators,
        })
    }

    /// `prod (1 - t^n) / prod (1 - t^d)`.
    pub fn from_factors(numerator_factors: &[u64], denominators: &[u64]) -> Result<Self> {
        if numerator_factors.contains(&0) {
            return Err(Error::InvalidInput(
                "numerator factor 1 - t^0 vanishes".into(),
            ));
        }
        HilbertSeries::new(
            IntPolynomial::one_minus_t_product(numerator_factors),
            denominators.to_vec(),
        )
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        HilbertSeries {
            numerator: p,
            denominators: Vec::new(),
        }
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    /// Denominator degrees, sorted ascending with repetition.
    pub fn denominators(&self) -> &[u64] {
        &self.denominators
    }

    pub fn denominator_polynomial(&self) -> IntPolynomial {
        IntPolynomial::one_minus_t_product(&self.denominators)
    }

    /// Taylor coefficients `c_0, ..., c_order`.
    pub fn expand(&self, order: usize) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = (0..=order).map(|k| self.numerator.coeff(k)).collect();
        for &d in &self.denominators {
            let d = d as usize;
            // dividing by 1 - t^d is a prefix sum with stride d
            for k in d..=order {
                let prev = c[k - d].clone();
                c[k] += prev;
            }
        }
        c
    }

    /// Checks `c_0 = 1` and non-negativity up to `order`.
    pub fn validate(&self, order: usize) -> Result<()> {
        let c = self.expand(order);
        if !c[0].is_one() {
            return Err(Error::InvalidInput(format!(
                "series must start with 1, got {}",
                c[0]
            )));
        }
        if let Some((k, v)) = c.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(Error::NegativeCoefficient {
                degree: k,
                value: v.to_string(),
                context: "series expansion".into(),
            });
        }
        Ok(())
    }

    /// Default order for `validate`: past the numerator degree by the full
    /// denominator degree plus one extra period.
    pub fn safety_order(&self) -> usize {
        let n = self.numerator.degree().unwrap_or(0);
        let sum: u64 = self.denominators.iter().sum();
        let max = self.denominators.iter().copied().max().unwrap_or(0);
        n + (sum + max) as usize
    }

    /// Multiplies by `1 - t^d`, cancelling a denominator factor when one matches.
    pub fn mul_one_minus_t(&self, d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("factor 1 - t^0 vanishes".into()));
        }
        let mut out = self.clone();
        if let Some(pos) = out.denominators.iter().position(|&x| x == d) {
            out.denominators.remove(pos);
        } else {
            out.numerator = out.numerator.mul_one_minus_t(d as usize);
        }
        Ok(out)
    }

    /// `self + p` for a polynomial `p`.
    pub fn add_polynomial(&self, p: &IntPolynomial) -> Self {
        let shifted = p * &self.denominator_polynomial();
        HilbertSeries {
            numerator: &self.numerator + &shifted,
            denominators: self.denominators.clone(),
        }
    }

    /// The polynomial this series equals, if the denominator divides.
    pub fn as_polynomial(&self) -> Option<IntPolynomial> {
        let (q, r) = self
            .numerator
            .div_rem(&self.denominator_polynomial())
            .ok()?;
        r.is_zero().then_some(q)
    }

    /// Expansion up to `order` as `1 + t^3 + 2t^4 + ...`.
    pub fn expansion_pretty(&self, order: usize) -> String {
        let mut s = IntPolynomial::new(self.expand(order)).to_pretty();
        s.push_str(" + ...");
        s
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominators.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        write!(f, "({}) / (", self.numerator)?;
        for (i, d) in self.denominators.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *d == 1 {
                write!(f, "(1 - t)")?;
            } else {
                write!(f, "(1 - t^{d})")?;
            }
        }
        write!(f, ")")
    }
}

/// Geometric genus from the Hilbert series: write `N = Q r + p` with
/// `deg p < deg Q` and return `r(1)`.
///
/// No common factors are cancelled first: scaling `N` and `Q` by the same
/// polynomial leaves the quotient `r` unchanged.
pub fn pg_from_series(h: &HilbertSeries) -> Result<BigInt> {
    h.validate(h.safety_order())?;
    let (r, _) = h.numerator.div_rem(&h.denominator_polynomial())?;
    Ok(r.eval_at_one())
}

/// `(h1 - h2)(1)`, which must be a polynomial.
pub fn pg_difference(h1: &HilbertSeries, h2: &HilbertSeries) -> Result<BigInt> {
    Ok(series_difference(h1, h2)?.eval_at_one())
}

/// `h1 - h2` as a polynomial; an error if it is not one.
pub fn series_difference(h1: &HilbertSeries, h2: &HilbertSeries) -> Result<IntPolynomial> {
    // common denominator: multiset union of the factors
    let count = |ds: &[u64]| {
        let mut m: BTreeMap<u64, usize> = BTreeMap::new();
        for &d in ds {
            *m.entry(d).or_default() += 1;
        }
        m
    };
    let (c1, c2) = (count(&h1.denominators), count(&h2.denominators));
    let mut common = c1.clone();
    for (&d, &k) in &c2 {
        let e = common.entry(d).or_default();
        *e = (*e).max(k);
    }
    let missing = |own: &BTreeMap<u64, usize>| -> Vec<u64> {
        common
            .iter()
            .flat_map(|(&d, &k)| std::iter::repeat_n(d, k - own.get(&d).copied().unwrap_or(0)))
            .collect()
    };
    let n1 = &h1.numerator * &IntPolynomial::one_minus_t_product(&missing(&c1));
    let n2 = &h2.numerator * &IntPolynomial::one_minus_t_product(&missing(&c2));
    let all: Vec<u64> = common
        .iter()
        .flat_map(|(&d, &k)| std::iter::repeat_n(d, k))
        .collect();
    let (q, r) = (&n1 - &n2).div_rem(&IntPolynomial::one_minus_t_product(&all))?;
    if !r.is_zero() {
        return Err(Error::InvalidInput(
            "series difference is not a polynomial; the series do not share a graph".into(),
        ));
    }
    Ok(q)
}

/// Generator and relation degrees of a complete-intersection presentation
/// matching `h`, found greedily: at the first degree where `h` differs from
/// `prod (1 - t^r) / prod (1 - t^g)`, a surplus adds generators and a deficit
/// adds relations. This presumes the relations found so far form a regular
/// sequence. Returns `None` if no presentation closes up to `max_degree`.
pub fn complete_intersection_degrees(
    h: &HilbertSeries,
    max_degree: usize,
) -> Result<Option<(Vec<u64>, Vec<u64>)>> {
    let target = h.expand(max_degree);
    let (mut gens, mut rels): (Vec<u64>, Vec<u64>) = (Vec::new(), Vec::new());
    loop {
        let f = HilbertSeries::from_factors(&rels, &gens)?;
        let c = f.expand(max_degree);
        let Some(d) = (1..=max_degree).find(|&k| c[k] != target[k]) else {
            let done = series_difference(h, &f).is_ok_and(|p| p.is_zero());
            return Ok(done.then_some((gens, rels)));
        };
        let diff = &target[d] - &c[d];
        let count = diff
            .abs()
            .to_usize()
            .ok_or_else(|| Error::Overflow(format!("coefficient difference {diff}")))?;
        let list = if diff.is_positive() {
            &mut gens
        } else {
            &mut rels
        };
        list.extend(std::iter::repeat_n(d as u64, count));
    }
}

pub fn coefficient_list(c: &[BigInt]) -> Vec<String> {
    c.iter().map(|v| v.to_string()).collect()
}

pub(crate) fn is_zero_or_one(c: &BigInt) -> bool {
    c.is_zero() || c.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use whsing_oracles::{one_minus_t_product, series_long_division};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn bci_2334() -> HilbertSeries {
        HilbertSeries::from_factors(&[12, 12], &[6, 4, 4, 3]).unwrap()
    }

    fn max_pg_2334() -> HilbertSeries {
        HilbertSeries::from_factors(&[6, 20], &[2, 3, 4, 10]).unwrap()
    }

    #[test]
    fn golden_expansions() {
        assert_eq!(bci_2334().expand(8), ints(&[1, 0, 0, 1, 2, 0, 2, 2, 3]));
        assert_eq!(
            max_pg_2334().expand(10),
            ints(&[1, 0, 1, 1, 2, 1, 2, 2, 3, 2, 4])
        );
        let one = HilbertSeries::polynomial(IntPolynomial::one());
        assert_eq!(one.expand(3), ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn expansion_matches_long_division() {
        let h = HilbertSeries::from_factors(&[12, 12], &[6, 4, 4, 3]).unwrap();
        let oracle = series_long_division(
            &one_minus_t_product(&[12, 12]),
            &one_minus_t_product(&[6, 4, 4, 3]),
            200,
        );
        assert_eq!(h.expand(200), oracle);
    }

    #[test]
    fn genus_from_series() {
        assert_eq!(pg_from_series(&bci_2334()).unwrap(), BigInt::from(8));
        assert_eq!(pg_from_series(&max_pg_2334()).unwrap(), BigInt::from(10));
        let plane = HilbertSeries::from_factors(&[], &[1, 1]).unwrap();
        assert_eq!(pg_from_series(&plane).unwrap(), BigInt::zero());
    }

    #[test]
    fn genus_quotient_polynomial_2334() {
        let h = bci_2334();
        let (r, _) = h.numerator().div_rem(&h.denominator_polynomial()).unwrap();
        assert_eq!(r, IntPolynomial::from_i64(&[2, 2, 0, 2, 1, 0, 0, 1]));
    }

    #[test]
    fn differences() {
        assert_eq!(
            pg_difference(&max_pg_2334(), &bci_2334()).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            series_difference(&max_pg_2334(), &bci_2334()).unwrap(),
            IntPolynomial::from_i64(&[0, 0, 1, 0, 0, 1])
        );
        assert_eq!(
            pg_difference(&bci_2334(), &bci_2334()).unwrap(),
            BigInt::zero()
        );
        let lower =
            max_pg_2334().add_polynomial(&IntPolynomial::from_i64(&[0, 0, 0, 0, -1, 0, 0, -1]));
        assert_eq!(
            pg_difference(&lower, &max_pg_2334()).unwrap(),
            BigInt::from(-2)
        );
        let unrelated = HilbertSeries::from_factors(&[], &[1]).unwrap();
        assert!(pg_difference(&unrelated, &bci_2334()).is_err());
    }

    #[test]
    fn rejects_negative_series() {
        let h = HilbertSeries::new(IntPolynomial::from_i64(&[1, -2]), vec![1]).unwrap();
        assert!(matches!(
            pg_from_series(&h),
            Err(Error::NegativeCoefficient { degree: 1, .. })
        ));
    }

    #[test]
    fn cancelling_factor() {
        let h = max_pg_2334().mul_one_minus_t(2).unwrap();
        assert_eq!(h.denominators(), &[3, 4, 10]);
        // term-by-term c_k - c_{k-2} of the golden expansion
        assert_eq!(h.expand(10), ints(&[1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1]));
    }

    #[test]
    fn complete_intersection_presentations() {
        let (g, r) = complete_intersection_degrees(&bci_2334(), 60)
            .unwrap()
            .unwrap();
        assert_eq!((g, r), (vec![3, 4, 4, 6], vec![12, 12]));
        let (g, r) = complete_intersection_degrees(&max_pg_2334(), 60)
            .unwrap()
            .unwrap();
        assert_eq!((g, r), (vec![2, 3, 4, 10], vec![6, 20]));
        let not_ci = HilbertSeries::new(
            IntPolynomial::from_i64(&[1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1]),
            vec![2, 3],
        )
        .unwrap();
        assert_eq!(complete_intersection_degrees(&not_ci, 40).unwrap(), None);
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            bci_2334().expansion_pretty(8),
            "1 + t^3 + 2t^4 + 2t^6 + 2t^7 + 3t^8 + ..."
        );
        let h = HilbertSeries::from_factors(&[], &[1, 3]).unwrap();
        assert_eq!(h.to_string(), "(1) / ((1 - t) (1 - t^3))");
    }
}
