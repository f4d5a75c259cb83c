//! Slow, obviously-correct reference computations.
//!
//! Nothing here shares code with `whsing`: inputs are plain integer matrices
//! and coefficient lists, and every routine is the naive textbook method.
//! The test suites freeze expected values with these and compare the fast
//! paths against them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Solves `matrix * x = rhs` by Gauss-Jordan elimination with row pivoting.
/// Returns `None` for a singular matrix.
pub fn dense_solve(matrix: &[Vec<i64>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r: Vec<BigRational> = row.iter().map(|&v| q(v)).collect();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= p.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let sub = a[col][c].clone() * f.clone();
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n].clone()).collect())
}

/// Determinant by rational Gaussian elimination with row swaps.
pub fn determinant(matrix: &[Vec<i64>]) -> BigRational {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| q(v)).collect())
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() / a[col][col].clone();
            for c in col..n {
                let sub = a[col][c].clone() * f.clone();
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// Negative definiteness by the sign pattern of every leading principal minor:
/// the k-th minor must have sign (-1)^k.
pub fn negative_definite_by_minors(matrix: &[Vec<i64>]) -> bool {
    (1..=matrix.len()).all(|k| {
        let minor: Vec<Vec<i64>> = matrix[..k].iter().map(|row| row[..k].to_vec()).collect();
        let d = determinant(&minor);
        if k % 2 == 0 {
            d.is_positive()
        } else {
            d.is_negative()
        }
    })
}

/// Evaluates `c1 - 1/(c2 - 1/(... - 1/cr))` recursively.
pub fn nested_fraction(chain: &[i64]) -> BigRational {
    match chain {
        [] => panic!("empty chain"),
        [last] => q(*last),
        [first, rest @ ..] => q(*first) - nested_fraction(rest).recip(),
    }
}

/// All non-negative integer combinations of `gens` up to `limit`, by a sieve.
pub fn semigroup_members(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit + 1];
    member[0] = true;
    for n in 1..=limit {
        member[n] = gens
            .iter()
            .any(|&g| g > 0 && (g as usize) <= n && member[n - g as usize]);
    }
    member
}

/// Power-series coefficients of `num / den` up to `order` by long division.
/// `den[0]` must divide every intermediate value exactly (true for `den[0] = ±1`).
pub fn series_long_division(num: &[BigInt], den: &[BigInt], order: usize) -> Vec<BigInt> {
    assert!(!den.is_empty() && !den[0].is_zero());
    let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = num.get(k).cloned().unwrap_or_else(BigInt::zero);
        for j in 1..=k.min(den.len() - 1) {
            acc -= &den[j] * &out[k - j];
        }
        let (quot, rem) = acc.div_rem(&den[0]);
        assert!(rem.is_zero(), "inexact long division");
        out.push(quot);
    }
    out
}

/// Expands `prod (1 - t^d)` as a dense coefficient list.
pub fn one_minus_t_product(degrees: &[u64]) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for &d in degrees {
        let d = d as usize;
        let mut next = vec![BigInt::zero(); poly.len() + d];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + d] -= c;
        }
        poly = next;
    }
    poly
}

/// Smallest non-zero anti-nef cycle on a star-shaped graph, found by enumeration.
///
/// `central_selfint` is `E_0^2`; each arm is the list of self-intersections from
/// the vertex next to the centre outwards. Every coefficient is searched in
/// `1..=bound` (a non-zero anti-nef cycle dominates the reduced cycle). Returns
/// coefficients in the order centre, arm 0, arm 1, ... or `None` when no
/// anti-nef cycle fits under the bound.
pub fn min_antinef_star(central_selfint: i64, arms: &[Vec<i64>], bound: i64) -> Option<Vec<i64>> {
    let mut best: Option<Vec<i64>> = None;
    for z0 in 1..=bound {
        let mut per_arm: Vec<Vec<i64>> = Vec::new();
        let mut ok = true;
        for arm in arms {
            let feasible = enumerate_arm(z0, arm, bound);
            if feasible.is_empty() {
                ok = false;
                break;
            }
            let mut min = feasible[0].clone();
            for v in &feasible {
                for (m, x) in min.iter_mut().zip(v) {
                    *m = (*m).min(*x);
                }
            }
            if !feasible.contains(&min) {
                // The anti-nef set is closed under minima; anything else is a bug here.
                return None;
            }
            per_arm.push(min);
        }
        if !ok {
            continue;
        }
        let first_sum: i64 = per_arm.iter().map(|v| v[0]).sum();
        if central_selfint * z0 + first_sum > 0 {
            continue;
        }
        let mut cycle = vec![z0];
        for v in per_arm {
            cycle.extend(v);
        }
        best = Some(match best {
            None => cycle,
            Some(b) => b.iter().zip(&cycle).map(|(x, y)| *x.min(y)).collect(),
        });
    }
    best
}

fn enumerate_arm(z0: i64, arm: &[i64], bound: i64) -> Vec<Vec<i64>> {
    fn rec(arm: &[i64], bound: i64, prev: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let j = cur.len();
        if j == arm.len() {
            out.push(cur.clone());
            return;
        }
        for m in 1..=bound {
            // constraint at vertex j-1 (if it is an arm vertex) is now fully determined
            if j >= 1 {
                let before = if j >= 2 { cur[j - 2] } else { prev };
                if before + arm[j - 1] * cur[j - 1] + m > 0 {
                    break;
                }
            }
            cur.push(m);
            if j + 1 == arm.len() {
                let before = if j >= 1 { cur[j - 1] } else { prev };
                if before + arm[j] * m <= 0 {
                    out.push(cur.clone());
                }
                cur.pop();
                continue;
            }
            rec(arm, bound, prev, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if arm.is_empty() {
        out.push(Vec::new());
        return out;
    }
    rec(arm, bound, z0, &mut Vec::new(), &mut out);
    out
}

/// Smallest non-zero anti-nef cycle by exhaustive search over `1..=bound` in
/// every coordinate. Only usable for a handful of vertices.
pub fn min_antinef_exhaustive(matrix: &[Vec<i64>], bound: i64) -> Option<Vec<i64>> {
    let n = matrix.len();
    let mut cur = vec![1i64; n];
    let mut best: Option<Vec<i64>> = None;
    loop {
        let antinef = (0..n).all(|i| (0..n).map(|j| matrix[i][j] * cur[j]).sum::<i64>() <= 0);
        if antinef {
            best = Some(match best {
                None => cur.clone(),
                Some(b) => b.iter().zip(&cur).map(|(x, y)| *x.min(y)).collect(),
            });
        }
        let mut k = 0;
        loop {
            if k == n {
                return best;
            }
            cur[k] += 1;
            if cur[k] <= bound {
                break;
            }
            cur[k] = 1;
            k += 1;
        }
    }
}
