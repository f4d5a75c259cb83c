//! Hirzebruch–Jung (negative) continued fractions
//! `[[c1, ..., cr]] = c1 - 1/(c2 - 1/(... - 1/cr))` with every `cj >= 2`.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Expands `alpha/beta` into its unique chain with entries `>= 2`.
pub fn hj_expand(alpha: u64, beta: u64) -> Result<Vec<u64>> {
    if alpha < 2 {
        return Err(Error::InvalidInput(format!(
            "continued fraction needs alpha >= 2, got {alpha}"
        )));
    }
    if beta == 0 || beta >= alpha {
        return Err(Error::InvalidInput(format!(
            "continued fraction needs 1 <= beta < alpha, got ({alpha}, {beta})"
        )));
    }
    if alpha.gcd(&beta) != 1 {
        return Err(Error::InvalidInput(format!(
            "alpha and beta must be coprime, got ({alpha}, {beta})"
        )));
    }
    let (mut num, mut den) = (alpha, beta);
    let mut chain = Vec::new();
    while den > 0 {
        let c = num.div_ceil(den);
        chain.push(c);
        // num/den = c - den/(c*den - num)
        let next = c * den - num;
        num = den;
        den = next;
    }
    Ok(chain)
}

/// Evaluates a chain to `(alpha, beta)` with `alpha/beta = [[chain]]` in lowest terms.
pub fn hj_evaluate(chain: &[u64]) -> Result<(u64, u64)> {
    hj_tails(chain)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidInput("empty continued fraction".into()))
}

/// The values `[[c_j, ..., c_r]]` of every suffix, as `(numerator, denominator)`,
/// indexed by `j` from the front.
pub fn hj_tails(chain: &[u64]) -> Result<Vec<(u64, u64)>> {
    if let Some(bad) = chain.iter().find(|&&c| c < 2) {
        return Err(Error::InvalidInput(format!(
            "continued fraction entries must be >= 2, got {bad}"
        )));
    }
    let mut tails = vec![(0u64, 0u64); chain.len()];
    let mut acc: Option<(u64, u64)> = None;
    for (j, &c) in chain.iter().enumerate().rev() {
        let next = match acc {
            None => (c, 1),
            Some((num, den)) => {
                let top = c
                    .checked_mul(num)
                    .and_then(|v| v.checked_sub(den))
                    .ok_or_else(|| Error::Overflow("continued fraction numerator".into()))?;
                (top, num)
            }
        };
        tails[j] = next;
        acc = Some(next);
    }
    Ok(tails)
}
