//! Itoh `(k)`-valuation reports and radicality.
//!
//! For Rees integers `e_1, …, e_n` and `k >= 2`, the `j`-th Itoh
//! `(k)`-valuation ring lies over `W_j` with `d_j = gcd(e_j, k)`,
//! ramification `c_j = k/d_j` and residue degree `d_j`. Since `uW_j =
//! Q_j^{e_j}`, the element `u^{1/k}` has value `e_j·c_j/k = e_j/d_j = h_j`.
//! The ideal `u^{1/k}·T_k` is radical iff every `h_j` is one.
//!
//! Ideals of a semilocal Dedekind domain with maximal ideals `P_1, …, P_n`
//! are modeled as exponent vectors (`P_1^{a_1} ⋯ P_n^{a_n}`).

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::dvrcalc::general_k_extension;
use crate::numcore::{gcd, int, lcm_list, Int};
use crate::puiseux::{oracle_root_exponent, PuiseuxModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ItohError {
    #[error("no Rees integers given")]
    EmptyReesData,
    #[error("Rees integer {0} is not positive")]
    NonPositiveReesInteger(Int),
    #[error("k must be at least 2, got {0}")]
    BadK(Int),
    #[error("radicality tests disagree for k = {k}: {flags:?}")]
    EquivalenceViolation { k: Int, flags: [bool; 4] },
    #[error("ideals live over {left} and {right} maximal ideals")]
    IndexMismatch { left: usize, right: usize },
    #[error("the unit ideal is not allowed here")]
    UnitIdeal,
    #[error("negative exponent {0}")]
    NegativeExponent(Int),
    #[error("a semilocal ideal needs at least one maximal ideal")]
    NoMaximalIdeals,
}

/// Rees integers `e_1, …, e_n` of an ideal, in the order of its Rees
/// valuation rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReesData(Vec<Int>);

impl ReesData {
    pub fn new(rees_integers: Vec<Int>) -> Result<Self, ItohError> {
        if rees_integers.is_empty() {
            return Err(ItohError::EmptyReesData);
        }
        if let Some(bad) = rees_integers.iter().find(|e| !e.is_positive()) {
            return Err(ItohError::NonPositiveReesInteger(bad.clone()));
        }
        Ok(ReesData(rees_integers))
    }

    pub fn from_i64(xs: &[i64]) -> Result<Self, ItohError> {
        Self::new(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn integers(&self) -> &[Int] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lcm(&self) -> Int {
        lcm_list(&self.0).expect("validated nonempty and positive")
    }

    pub fn sum(&self) -> Int {
        self.0.iter().sum()
    }

    pub fn all_divide(&self, k: &Int) -> bool {
        self.0.iter().all(|e| k.is_multiple_of(e))
    }
}

impl fmt::Display for ReesData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItohValuation {
    pub rees_integer: Int,
    /// `d_j = gcd(e_j, k)`
    pub d: Int,
    /// `c_j = k / d_j`
    pub c: Int,
    /// `h_j = e_j / d_j`, the value of `u^{1/k}`.
    pub h: Int,
    pub tower_degree: Int,
    pub residue_degree: Int,
    pub ramification: Int,
    pub u_extended_exponent: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItohReport {
    pub k: Int,
    pub per_valuation: Vec<ItohValuation>,
    pub is_radical: bool,
    pub least_radical_k: Int,
}

impl ItohReport {
    pub fn root_exponents(&self) -> SemilocalIdeal {
        SemilocalIdeal(self.per_valuation.iter().map(|v| v.h.clone()).collect())
    }
}

fn check_k(k: &Int) -> Result<(), ItohError> {
    if k < &int(2) {
        return Err(ItohError::BadK(k.clone()));
    }
    Ok(())
}

pub fn itoh_structure(rees: &ReesData, k: &Int) -> Result<ItohReport, ItohError> {
    check_k(k)?;
    let per_valuation: Vec<ItohValuation> = rees
        .integers()
        .iter()
        .map(|e| {
            let d = gcd(e, k);
            let c = k / &d;
            // u·V* = N*^{e·c}, and u^{1/k} has value e·c/k = e/d.
            let u_value = e * &c;
            let h = &u_value / k;
            debug_assert!((&u_value % k).is_zero());
            ItohValuation {
                rees_integer: e.clone(),
                tower_degree: k.clone(),
                residue_degree: d.clone(),
                ramification: c.clone(),
                u_extended_exponent: h.clone(),
                d,
                c,
                h,
            }
        })
        .collect();
    let is_radical = per_valuation.iter().all(|v| v.h.is_one());
    Ok(ItohReport {
        k: k.clone(),
        per_valuation,
        is_radical,
        least_radical_k: rees.lcm(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// `u^{1/k}T_k` radical, from the Itoh report.
    pub radical_ideal: bool,
    /// Rees integers of `u^{1/k}T_k` all one, in the Dedekind model.
    pub rees_integers_one: bool,
    /// Rees integers of `(u^{1/k}S_k)_a` all one, from the value-group oracle.
    pub closure_rees_integers_one: bool,
    /// `k` is a common multiple of the Rees integers.
    pub common_multiple: bool,
}

impl EquivalenceReport {
    pub fn flags(&self) -> [bool; 4] {
        [
            self.radical_ideal,
            self.rees_integers_one,
            self.closure_rees_integers_one,
            self.common_multiple,
        ]
    }

    pub fn holds(&self) -> bool {
        self.radical_ideal
    }
}

/// Computes the four radicality statements along separate routes and checks
/// that they agree.
pub fn radicality_equivalence(rees: &ReesData, k: &Int) -> Result<EquivalenceReport, ItohError> {
    let report = itoh_structure(rees, k)?;
    let radical_ideal = report.is_radical;

    let vector = report.root_exponents();
    let rees_integers_one =
        semilocal_radical(&vector) == vector && vector.exponents().iter().all(|a| a.is_positive());

    // The S_k-level ideal has the same Rees valuations; its exponents come
    // from the oracle's ramification index with the tower calculus on the
    // side of the degree.
    let closure_rees_integers_one = rees.integers().iter().all(|e| {
        let model = PuiseuxModel::new(e.clone(), k.clone()).expect("validated");
        let value = oracle_root_exponent(&model);
        let degree_ok = general_k_extension(e, k)
            .map(|s| &s.degree == k)
            .unwrap_or(false);
        degree_ok && value.is_integer() && value.numer().is_one()
    });

    let common_multiple = rees.integers().iter().all(|e| (k % e).is_zero());

    let out = EquivalenceReport {
        radical_ideal,
        rees_integers_one,
        closure_rees_integers_one,
        common_multiple,
    };
    let flags = out.flags();
    if flags.iter().any(|&f| f != flags[0]) {
        return Err(ItohError::EquivalenceViolation {
            k: k.clone(),
            flags,
        });
    }
    Ok(out)
}

/// An ideal `P_1^{a_1} ⋯ P_n^{a_n}` of a semilocal Dedekind domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemilocalIdeal(Vec<Int>);

impl SemilocalIdeal {
    pub fn new(exponents: Vec<Int>) -> Result<Self, ItohError> {
        if exponents.is_empty() {
            return Err(ItohError::NoMaximalIdeals);
        }
        if let Some(bad) = exponents.iter().find(|a| a.is_negative()) {
            return Err(ItohError::NegativeExponent(bad.clone()));
        }
        Ok(SemilocalIdeal(exponents))
    }

    pub fn from_i64(xs: &[i64]) -> Result<Self, ItohError> {
        Self::new(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn uniform(n: usize, exponent: Int) -> Self {
        SemilocalIdeal(vec![exponent; n])
    }

    pub fn exponents(&self) -> &[Int] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    pub fn is_radical(&self) -> bool {
        semilocal_radical(self) == *self
    }

    /// `self^n`
    pub fn pow(&self, n: &Int) -> SemilocalIdeal {
        SemilocalIdeal(self.0.iter().map(|a| a * n).collect())
    }

    /// The common exponent when all exponents agree.
    pub fn uniform_exponent(&self) -> Option<&Int> {
        let first = self.0.first()?;
        self.0.iter().all(|a| a == first).then_some(first)
    }
}

impl fmt::Display for SemilocalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn same_index(a: &SemilocalIdeal, b: &SemilocalIdeal) -> Result<(), ItohError> {
    if a.len() != b.len() {
        return Err(ItohError::IndexMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

pub fn semilocal_product(
    a: &SemilocalIdeal,
    b: &SemilocalIdeal,
) -> Result<SemilocalIdeal, ItohError> {
    same_index(a, b)?;
    Ok(SemilocalIdeal(
        a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect(),
    ))
}

pub fn semilocal_radical(a: &SemilocalIdeal) -> SemilocalIdeal {
    SemilocalIdeal(
        a.0.iter()
            .map(|x| {
                if x.is_positive() {
                    Int::one()
                } else {
                    Int::zero()
                }
            })
            .collect(),
    )
}

/// The product of all `n` maximal ideals.
pub fn jacobson_radical(n: usize) -> Result<SemilocalIdeal, ItohError> {
    if n == 0 {
        return Err(ItohError::NoMaximalIdeals);
    }
    Ok(SemilocalIdeal::uniform(n, Int::one()))
}

/// In a Dedekind domain `(a^i)_a = (b^j)_a` means `i·a = j·b`, so the
/// exponent vectors must be positive rational multiples of each other.
pub fn is_projectively_equivalent(
    a: &SemilocalIdeal,
    b: &SemilocalIdeal,
) -> Result<bool, ItohError> {
    same_index(a, b)?;
    if a.is_unit() || b.is_unit() {
        return Err(ItohError::UnitIdeal);
    }
    let pivot = a.0.iter().position(|x| x.is_positive()).expect("nonunit");
    let (ap, bp) = (&a.0[pivot], &b.0[pivot]);
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x * bp == y * ap))
}

/// Every ideal projectively equivalent to `a` is a power of `a` exactly
/// when the positive exponents of `a` are coprime.
pub fn is_projectively_full(a: &SemilocalIdeal) -> Result<bool, ItohError> {
    if a.is_unit() {
        return Err(ItohError::UnitIdeal);
    }
    let g = a.0.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    Ok(g.is_one())
}
