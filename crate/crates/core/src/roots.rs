//! Roots of unity `ζ_N^t`, stored as exponents in `Z/NZ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    order: u64,
    exp: u64,
}

impl RootOfUnity {
    /// `ζ_N^t`, with `t` reduced into `[0, N)`.
    pub fn new(order: u64, exp: i64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSpec("ambient order must be positive".into()));
        }
        Ok(Self {
            order,
            exp: exp.rem_euclid(order as i64) as u64,
        })
    }

    pub fn one(order: u64) -> Result<Self> {
        Self::new(order, 0)
    }

    /// The ambient order `N`.
    pub fn ambient(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    /// Multiplicative order `N / gcd(N, t)`.
    pub fn order(&self) -> u64 {
        self.order / gcd(self.order, self.exp)
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Self::new(self.order, (self.exp + other.exp) as i64)
    }

    pub fn pow(&self, k: i64) -> Self {
        let n = self.order as i128;
        let exp = (self.exp as i128 * k as i128).rem_euclid(n);
        Self {
            order: self.order,
            exp: exp as u64,
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}^{}", self.order, self.exp)
    }
}

/// Checks that all roots share the ambient order of the first one.
pub fn common_order(roots: &[RootOfUnity]) -> Result<Option<u64>> {
    let Some(first) = roots.first() else {
        return Ok(None);
    };
    for r in roots {
        first.same_group(r)?;
    }
    Ok(Some(first.order))
}
