//! Exact integer and rational arithmetic shared by every other module.
//!
//! Everything here is arbitrary precision. Subgroups of ℚ generated by
//! finitely many elements are cyclic, so [`QSubgroup`] stores a single
//! nonnegative generator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("empty list")]
    EmptyList,
    #[error("entry {0} is not positive")]
    NonPositive(Int),
}

/// Shorthand for building an [`Int`] from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// Nonnegative greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

pub fn lcm_list(xs: &[Int]) -> Result<Int, NumError> {
    if xs.is_empty() {
        return Err(NumError::EmptyList);
    }
    let mut acc = Int::one();
    for x in xs {
        if !x.is_positive() {
            return Err(NumError::NonPositive(x.clone()));
        }
        acc = acc.lcm(x);
    }
    Ok(acc)
}

/// A subgroup `g·ℤ` of the additive group ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSubgroup {
    generator: Rat,
}

impl QSubgroup {
    pub fn trivial() -> Self {
        QSubgroup {
            generator: Rat::zero(),
        }
    }

    pub fn generator(&self) -> &Rat {
        &self.generator
    }

    pub fn is_trivial(&self) -> bool {
        self.generator.is_zero()
    }

    pub fn contains(&self, x: &Rat) -> bool {
        if self.is_trivial() {
            return x.is_zero();
        }
        (x / &self.generator).is_integer()
    }

    /// Index of ℤ inside this subgroup, when ℤ is a subgroup of it.
    ///
    /// That happens exactly when the generator is `1/n`; the index is `n`.
    pub fn index_of_integers(&self) -> Option<Int> {
        if self.generator.numer().is_one() {
            Some(self.generator.denom().clone())
        } else {
            None
        }
    }
}

impl fmt::Display for QSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})Z", self.generator)
    }
}

/// The subgroup of ℚ generated by `xs`.
///
/// Its generator is `gcd(numerators) / lcm(denominators)` once every entry
/// is in lowest terms. Signs are irrelevant for the generated group.
pub fn subgroup_generated(xs: &[Rat]) -> QSubgroup {
    let mut num = Int::zero();
    let mut den = Int::one();
    for x in xs {
        if x.is_zero() {
            continue;
        }
        num = num.gcd(x.numer());
        den = den.lcm(x.denom());
    }
    if num.is_zero() {
        return QSubgroup::trivial();
    }
    QSubgroup {
        generator: Rat::new(num, den),
    }
}
