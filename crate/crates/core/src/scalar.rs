//! Integer scalar abstraction for closed forms and recurrences.

use std::fmt::{Debug, Display};

use num_traits::Num;

/// An exact, non-negative-capable integer type usable as a count.
///
/// Implemented for every type with ring operations, ordering and a lossless
/// conversion from `u32`: `u64`, `u128`, `i64`, `i128`, `BigUint`, `BigInt`.
/// Fixed-width types overflow (and panic in debug builds) on large inputs;
/// [`crate::Exact`] never does.
pub trait Count: Clone + Num + PartialOrd + From<u32> + Debug + Display + Send + Sync {
    fn from_u64(value: u64) -> Self {
        let hi = Self::from((value >> 32) as u32);
        let lo = Self::from(value as u32);
        hi * Self::from(1u32 << 16) * Self::from(1u32 << 16) + lo
    }
}

impl<T> Count for T where T: Clone + Num + PartialOrd + From<u32> + Debug + Display + Send + Sync {}

/// `2^e` in the scalar type.
pub fn pow2<T: Count>(e: u32) -> T {
    let two = T::from(2u32);
    let mut acc = T::one();
    let mut base = two;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

/// Product of a slice, one for the empty slice.
pub fn product<T: Count>(values: &[T]) -> T {
    values.iter().cloned().fold(T::one(), |acc, v| acc * v)
}

/// Serde adapter writing an [`crate::Exact`] as a decimal string.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// Same as [`decimal`] for `u128` work counters.
pub mod decimal_u128 {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn pow2_matches_shift() {
        for e in 0..64 {
            assert_eq!(pow2::<u128>(e), 1u128 << e);
        }
        assert_eq!(pow2::<BigUint>(100), BigUint::from(1u8) << 100);
    }

    #[test]
    fn from_u64_round_trips() {
        for v in [0u64, 1, u32::MAX as u64, u32::MAX as u64 + 1, u64::MAX] {
            assert_eq!(<u128 as Count>::from_u64(v), v as u128);
            assert_eq!(<BigUint as Count>::from_u64(v), BigUint::from(v));
        }
    }
}
