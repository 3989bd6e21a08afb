//! Frobenius numbers of numerical semigroups (the coin problem).

use serde::Serialize;
use thiserror::Error;

/// Largest table the solver will allocate.
pub const MAX_TABLE: u64 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("at least one generator is required")]
    Empty,
    #[error("generators must be positive")]
    NonPositive,
    #[error("gcd of the generators is {0}, so infinitely many integers are not representable")]
    GcdNotOne(u64),
    #[error("search range {0} is too large")]
    TooLarge(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericFrobenius {
    pub inputs: Vec<u64>,
    /// Largest non-representable integer; -1 when every non-negative integer
    /// is representable.
    pub g: i64,
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Frobenius number by dynamic programming over representable integers.
///
/// The scan stops once `min(xs)` consecutive integers are representable, since
/// adding the smallest generator then covers everything above. The table never
/// grows past `min(xs) * max(xs)`, which exceeds g by Schur's bound.
pub fn numeric_frobenius(xs: &[u64]) -> Result<NumericFrobenius, NumericError> {
    let smallest = *xs.iter().min().ok_or(NumericError::Empty)?;
    if smallest == 0 {
        return Err(NumericError::NonPositive);
    }
    let g = xs.iter().fold(0, |g, &x| gcd_u64(g, x));
    if g != 1 {
        return Err(NumericError::GcdNotOne(g));
    }
    let largest = *xs.iter().max().expect("non-empty");
    let limit = smallest.saturating_mul(largest);
    if limit > MAX_TABLE {
        return Err(NumericError::TooLarge(limit));
    }
    let mut representable: Vec<bool> = vec![true];
    let mut run = 1u64;
    let mut last_gap: i64 = -1;
    let mut v: u64 = 0;
    while run < smallest {
        v += 1;
        debug_assert!(v <= limit, "Schur's bound violated");
        let ok = xs
            .iter()
            .any(|&x| x <= v && representable[(v - x) as usize]);
        representable.push(ok);
        if ok {
            run += 1;
        } else {
            run = 0;
            last_gap = v as i64;
        }
    }
    Ok(NumericFrobenius {
        inputs: xs.to_vec(),
        g: last_gap,
    })
}

/// Elements of `values` (positive, ascending or not) that are not sums of
/// two or more other elements.
pub fn minimal_generators(values: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = values.iter().copied().filter(|&v| v > 0).collect();
    sorted.sort_unstable();
    sorted.dedup();
    let Some(&top) = sorted.last() else {
        return Vec::new();
    };
    // reach[v]: v is a sum of chosen generators
    let mut reach = vec![false; top + 1];
    reach[0] = true;
    let mut generators = Vec::new();
    for &x in &sorted {
        if reach[x] {
            continue;
        }
        generators.push(x);
        for v in x..=top {
            if reach[v - x] {
                reach[v] = true;
            }
        }
    }
    generators
}
