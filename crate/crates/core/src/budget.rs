use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on elementary evaluations (masks, matrices, colorings) a
/// brute-force routine may perform before refusing to start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget(pub u128);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 32);

    pub fn unlimited() -> Self {
        Budget(u128::MAX)
    }

    pub fn check(self, what: impl Into<String>, projected: u128) -> Result<()> {
        if projected > self.0 {
            Err(Error::BudgetExceeded {
                what: what.into(),
                projected,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }

    pub fn allows(self, projected: u128) -> bool {
        projected <= self.0
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub fn saturating_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
