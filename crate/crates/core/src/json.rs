//! Helpers for emitting exact numbers as JSON.
//!
//! Integers are written as JSON numbers of arbitrary length; non-integral
//! rationals as strings `"p/q"`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Number, Value};

use crate::graph::{Cycle, QCycle};

pub fn int(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer is valid JSON"))
}

pub fn rational(q: &BigRational) -> Value {
    if q.is_integer() {
        Value::String(q.numer().to_string())
    } else {
        Value::String(format!("{}/{}", q.numer(), q.denom()))
    }
}

/// `{"0": c_0, "1": c_1, ...}` keyed by vertex id.
pub fn cycle_map(c: &Cycle) -> Value {
    let mut m = Map::new();
    for (i, v) in c.coefficients().iter().enumerate() {
        m.insert(i.to_string(), int(v));
    }
    Value::Object(m)
}

pub fn qcycle_map(c: &QCycle) -> Value {
    let mut m = Map::new();
    for (i, v) in c.coefficients().iter().enumerate() {
        m.insert(i.to_string(), rational(v));
    }
    Value::Object(m)
}

pub fn int_list(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_numbers_stay_exact() {
        let n = BigInt::from(10).pow(40) + 1;
        assert_eq!(
            int(&n).to_string(),
            "10000000000000000000000000000000000000001"
        );
    }

    #[test]
    fn rationals_as_strings() {
        let q = BigRational::new(2.into(), 6.into());
        assert_eq!(rational(&q), Value::String("1/3".into()));
        assert_eq!(
            rational(&BigRational::from_integer(4.into())),
            Value::String("4".into())
        );
    }

    #[test]
    fn maps_keep_vertex_order() {
        let c = Cycle::from_i64(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]);
        let keys: Vec<String> = cycle_map(&c).as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys[10], "10");
    }
}
