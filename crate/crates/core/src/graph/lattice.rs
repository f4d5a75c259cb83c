//! Integral and rational cycles supported on the vertices of a graph.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A rational combination of exceptional components, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCycle(Vec<BigRational>);

/// An integral cycle, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle(Vec<BigInt>);

impl QCycle {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        QCycle(coefficients)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }

    pub fn coeff(&self, v: usize) -> &BigRational {
        &self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    /// The integral cycle, if every coefficient is an integer.
    pub fn to_cycle(&self) -> Option<Cycle> {
        if !self.is_integral() {
            return None;
        }
        Some(Cycle(self.0.iter().map(|c| c.to_integer()).collect()))
    }

    pub fn scale(&self, k: &BigRational) -> QCycle {
        QCycle(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for QCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Cycle {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        Cycle(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Cycle(vec![BigInt::zero(); n])
    }

    /// `E = sum E_i`.
    pub fn reduced(n: usize) -> Self {
        Cycle(vec![BigInt::one(); n])
    }

    /// The single component `E_v`.
    pub fn unit(n: usize, v: usize) -> Self {
        let mut c = Cycle::zero(n);
        c.0[v] = BigInt::one();
        c
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Cycle(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, v: usize) -> &BigInt {
        &self.0[v]
    }

    pub(crate) fn coeff_mut(&mut self, v: usize) -> &mut BigInt {
        &mut self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    /// Effective and non-zero.
    pub fn is_positive(&self) -> bool {
        self.is_effective() && !self.is_zero()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Cycle) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise minimum.
    pub fn min(&self, other: &Cycle) -> Cycle {
        Cycle(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Cycle {
        Cycle(self.0.iter().map(|c| c * k).collect())
    }

    pub fn to_qcycle(&self) -> QCycle {
        QCycle(
            self.0
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.0.len(), rhs.0.len(), "cycles on different graphs");
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.0.len(), rhs.0.len(), "cycles on different graphs");
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<&Cycle> for i64 {
    type Output = Cycle;
    fn mul(self, rhs: &Cycle) -> Cycle {
        rhs.scale(&BigInt::from(self))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
