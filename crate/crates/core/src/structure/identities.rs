//! Two subset-sum identities behind the book equalities:
//!
//! * `prod a_i = sum_S prod_{i not in S} (a_i - 1)`
//! * `sum_j prod_{i != j} a_i = sum_S |S| prod_{i not in S} (a_i - 1)`
//!
//! Left sides are evaluated directly, right sides by summing over all
//! `2^k` subsets `S`.

use crate::error::{Error, Result};
use crate::scalar::Count;

/// Subsets are enumerated explicitly, so `k` is capped.
pub const MAX_IDENTITY_TERMS: usize = 24;

fn validate(a: &[u64]) -> Result<()> {
    if a.len() > MAX_IDENTITY_TERMS {
        return Err(Error::invalid_param(format!("at most {MAX_IDENTITY_TERMS} terms")));
    }
    if a.contains(&0) {
        return Err(Error::invalid_param("terms must be at least 1"));
    }
    Ok(())
}

/// `sum_S w(|S|) prod_{i not in S} (a_i - 1)`.
fn subset_sum<T: Count>(a: &[u64], weight: impl Fn(u32) -> T) -> T {
    let less: Vec<T> = a.iter().map(|&x| T::from_u64(x - 1)).collect();
    let mut total = T::zero();
    for s in 0u32..1 << a.len() {
        let mut term = weight(s.count_ones());
        for (i, l) in less.iter().enumerate() {
            if s >> i & 1 == 0 {
                term = term * l.clone();
            }
        }
        total = total + term;
    }
    total
}

/// `(F_1, D_1)`.
pub fn identity_f1_d1<T: Count>(a: &[u64]) -> Result<(T, T)> {
    validate(a)?;
    let lhs = a.iter().fold(T::one(), |acc, &x| acc * T::from_u64(x));
    Ok((lhs, subset_sum(a, |_| T::one())))
}

/// `(F_2, D_2)`.
pub fn identity_f2_d2<T: Count>(a: &[u64]) -> Result<(T, T)> {
    validate(a)?;
    let mut lhs = T::zero();
    for j in 0..a.len() {
        let without = a.iter().enumerate().filter(|&(i, _)| i != j).fold(T::one(), |acc, (_, &x)| acc * T::from_u64(x));
        lhs = lhs + without;
    }
    Ok((lhs, subset_sum(a, |s| T::from(s))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(identity_f1_d1::<u64>(&[2, 3]).unwrap(), (6, 6));
        assert_eq!(identity_f2_d2::<u64>(&[2, 3]).unwrap(), (5, 5));
        assert_eq!(identity_f1_d1::<u64>(&[1, 1, 1, 1]).unwrap(), (1, 1));
        assert_eq!(identity_f2_d2::<u64>(&[]).unwrap(), (0, 0));
        assert!(identity_f1_d1::<u64>(&[0, 2]).is_err());
    }

    proptest! {
        #[test]
        fn sides_agree(a in proptest::collection::vec(1u64..=50, 0..=10)) {
            let (l1, r1) = identity_f1_d1::<BigUint>(&a).unwrap();
            prop_assert_eq!(l1, r1);
            let (l2, r2) = identity_f2_d2::<BigUint>(&a).unwrap();
            prop_assert_eq!(l2, r2);
        }
    }
}
