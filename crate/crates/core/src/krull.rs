//! Consistent systems and realization planning.
//!
//! A system assigns to each Rees valuation `V_j` a list of
//! `(residue degree f, ramification e)` pairs, one per extension of `V_j`
//! to the planned field, with `Σ e·f = m`. Residue fields are tracked only
//! by their degrees.
//!
//! Realizing a system built from Rees integers `e_1, …, e_n` over the
//! semilocal Dedekind domain `D = V_1 ∩ ⋯ ∩ V_n` turns `ID = Π M_j^{e_j}`
//! into `Π_j Π_i N_{j,i}^{e_j·e_{j,i}}`, which the report records as an
//! exponent vector over the maximal ideals of the extension.

use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::dvrcalc::itoh_tower;
use crate::itoh::{
    is_projectively_equivalent, is_projectively_full, itoh_structure, jacobson_radical, ItohError,
    ReesData, SemilocalIdeal,
};
use crate::numcore::{gcd, int, lcm_list, Int};

/// Largest number of maximal ideals a realization report will enumerate.
pub const MAX_REALIZED_IDEALS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KrullError {
    #[error("k must be positive, got {0}")]
    NonPositiveK(Int),
    #[error("k must be at least 2, got {0}")]
    BadK(Int),
    #[error("system is not {m}-consistent")]
    InconsistentSystem { m: Int },
    #[error("system has {system} valuations but the Rees data has {rees}")]
    ShapeMismatch { system: usize, rees: usize },
    #[error("extended exponents are not uniform: {0}")]
    NonUniform(String),
    #[error("{e} is not a common multiple of the Rees integers {rees}")]
    NotCommonMultiple { e: Int, rees: ReesData },
    #[error("{e} is not a multiple of the lcm {lcm} of the participating Rees integers")]
    NotMultiple { e: Int, lcm: Int },
    #[error("no participating component")]
    NoParticipatingComponent,
    #[error("participating component {0} has no Rees integers")]
    EmptyComponent(usize),
    #[error("realization has {0} maximal ideals, above the enumeration limit")]
    TooLarge(Int),
    #[error(transparent)]
    Itoh(#[from] ItohError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemEntry {
    pub residue_degree: Int,
    pub ramification: Int,
    /// Number of identical extensions carrying this pair.
    pub multiplicity: Int,
}

impl SystemEntry {
    fn new(residue_degree: Int, ramification: Int, multiplicity: Int) -> Self {
        SystemEntry {
            residue_degree,
            ramification,
            multiplicity,
        }
    }

    pub fn weight(&self) -> Int {
        &self.residue_degree * &self.ramification * &self.multiplicity
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SystemFamily {
    /// `ke_j` extensions with `(f, e) = (1, d_j)`.
    S,
    /// One extension with `(f, e) = (ke_j, d_j)`.
    T,
    /// `e_j` extensions with `(f, e) = (1, kd_j)`.
    U,
    /// One extension with `(f, e) = (gcd(k, e_j), k/gcd(k, e_j))`.
    Exp2,
    Custom,
}

impl SystemFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            SystemFamily::S => "S",
            SystemFamily::T => "T",
            SystemFamily::U => "U",
            SystemFamily::Exp2 => "EXP2",
            SystemFamily::Custom => "custom",
        }
    }
}

impl fmt::Display for SystemFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistentSystem {
    pub m: Int,
    pub per_valuation: Vec<Vec<SystemEntry>>,
    pub family: SystemFamily,
}

impl ConsistentSystem {
    pub fn custom(m: Int, per_valuation: Vec<Vec<SystemEntry>>) -> Self {
        ConsistentSystem {
            m,
            per_valuation,
            family: SystemFamily::Custom,
        }
    }

    /// `s_j`: number of extensions of the `j`-th valuation.
    pub fn extension_counts(&self) -> Vec<Int> {
        self.per_valuation
            .iter()
            .map(|entries| entries.iter().map(|e| &e.multiplicity).sum())
            .collect()
    }
}

fn positive_k(k: &Int) -> Result<(), KrullError> {
    if !k.is_positive() {
        return Err(KrullError::NonPositiveK(k.clone()));
    }
    Ok(())
}

/// The `km`-consistent system `S_j = {(K_{j,i}, 1, d_j) : i ≤ ke_j}` with
/// `m = lcm(e)` and `d_j = m/e_j`.
pub fn build_system_s(rees: &ReesData, k: &Int) -> Result<ConsistentSystem, KrullError> {
    positive_k(k)?;
    let m = rees.lcm();
    let per_valuation = rees
        .integers()
        .iter()
        .map(|e| vec![SystemEntry::new(Int::one(), &m / e, k * e)])
        .collect();
    Ok(ConsistentSystem {
        m: k * m,
        per_valuation,
        family: SystemFamily::S,
    })
}

/// `T_j = {(K_{j,1}, ke_j, d_j)}`.
pub fn build_system_t(rees: &ReesData, k: &Int) -> Result<ConsistentSystem, KrullError> {
    positive_k(k)?;
    let m = rees.lcm();
    let per_valuation = rees
        .integers()
        .iter()
        .map(|e| vec![SystemEntry::new(k * e, &m / e, Int::one())])
        .collect();
    Ok(ConsistentSystem {
        m: k * m,
        per_valuation,
        family: SystemFamily::T,
    })
}

/// `U_j = {(K_{j,i}, 1, kd_j) : i ≤ e_j}`.
pub fn build_system_u(rees: &ReesData, k: &Int) -> Result<ConsistentSystem, KrullError> {
    positive_k(k)?;
    let m = rees.lcm();
    let per_valuation = rees
        .integers()
        .iter()
        .map(|e| vec![SystemEntry::new(Int::one(), k * (&m / e), e.clone())])
        .collect();
    Ok(ConsistentSystem {
        m: k * m,
        per_valuation,
        family: SystemFamily::U,
    })
}

/// The `k`-consistent system realized by the integral closure of
/// `W[u^{1/k}]`: one extension per valuation with residue degree
/// `gcd(k, e_j)` and ramification `k / gcd(k, e_j)`.
pub fn build_system_exp2(rees: &ReesData, k: &Int) -> Result<ConsistentSystem, KrullError> {
    if k < &int(2) {
        return Err(KrullError::BadK(k.clone()));
    }
    let per_valuation = rees
        .integers()
        .iter()
        .map(|e| {
            let d = gcd(k, e);
            vec![SystemEntry::new(d.clone(), k / &d, Int::one())]
        })
        .collect();
    Ok(ConsistentSystem {
        m: k.clone(),
        per_valuation,
        family: SystemFamily::Exp2,
    })
}

pub fn build_system(
    family: SystemFamily,
    rees: &ReesData,
    k: &Int,
) -> Result<ConsistentSystem, KrullError> {
    match family {
        SystemFamily::S => build_system_s(rees, k),
        SystemFamily::T => build_system_t(rees, k),
        SystemFamily::U => build_system_u(rees, k),
        SystemFamily::Exp2 => build_system_exp2(rees, k),
        SystemFamily::Custom => Err(KrullError::InconsistentSystem { m: k.clone() }),
    }
}

/// Every entry positive and every per-valuation sum `Σ e·f` equal to `m`.
pub fn is_consistent(system: &ConsistentSystem) -> bool {
    system.m.is_positive()
        && system.per_valuation.iter().all(|entries| {
            entries.iter().all(|e| {
                e.residue_degree.is_positive()
                    && e.ramification.is_positive()
                    && e.multiplicity.is_positive()
            }) && entries.iter().map(SystemEntry::weight).sum::<Int>() == system.m
        })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RealizationContext {
    /// The field has a DVR other than the given ones (e.g. altitude >= 2).
    pub has_extra_dvr: bool,
    /// The approximation condition on monic polynomials holds.
    pub has_separable_approximation: bool,
    /// Residue fields are algebraically closed.
    pub residue_fields_algebraically_closed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizabilityCondition {
    /// Some valuation has a single extension.
    SingleExtension,
    ExtraDvr,
    SeparableApproximation,
}

impl RealizabilityCondition {
    pub fn tag(self) -> u8 {
        match self {
            RealizabilityCondition::SingleExtension => 1,
            RealizabilityCondition::ExtraDvr => 2,
            RealizabilityCondition::SeparableApproximation => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Realizable(RealizabilityCondition),
    /// No sufficient condition applies; realizability is not decided.
    Undecided,
}

/// Krull's sufficient conditions, checked in order.
pub fn realizability_gate(
    system: &ConsistentSystem,
    ctx: &RealizationContext,
) -> Result<Decision, KrullError> {
    if !is_consistent(system) {
        return Err(KrullError::InconsistentSystem {
            m: system.m.clone(),
        });
    }
    let decision = if system.extension_counts().iter().any(|s| s.is_one()) {
        Decision::Realizable(RealizabilityCondition::SingleExtension)
    } else if ctx.has_extra_dvr {
        Decision::Realizable(RealizabilityCondition::ExtraDvr)
    } else if ctx.has_separable_approximation {
        Decision::Realizable(RealizabilityCondition::SeparableApproximation)
    } else {
        Decision::Undecided
    };
    Ok(decision)
}

/// Caveats the gate cannot express as a decision.
pub fn system_warnings(system: &ConsistentSystem, ctx: &RealizationContext) -> Vec<String> {
    let mut out = Vec::new();
    if system.family == SystemFamily::T && ctx.residue_fields_algebraically_closed {
        for (j, entries) in system.per_valuation.iter().enumerate() {
            if let Some(e) = entries.iter().find(|e| e.residue_degree > Int::one()) {
                out.push(format!(
                    "family T needs a residue extension of degree {} at valuation {}, \
                     impossible over an algebraically closed residue field",
                    e.residue_degree,
                    j + 1
                ));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationReport {
    pub extension_degree: Int,
    pub maximal_ideal_count: Int,
    /// Exponents of the extended ideal over the maximal ideals, grouped by
    /// the valuation they lie over.
    pub extended_ideal_exponents: SemilocalIdeal,
    /// Residue degree of each maximal ideal, in the same order.
    pub residue_degrees: Vec<Int>,
    /// `t` with `IE = J^t`, when the extended exponents are uniform.
    pub jacobson_exponent: Option<Int>,
    pub uniform_rees_integer: Option<Int>,
    /// `E = W[θ]` for a single generator.
    pub simple_extension: bool,
}

/// Numerical outcome of realizing `system` for the Rees data it was built
/// from.
pub fn realize_plan(
    system: &ConsistentSystem,
    rees: &ReesData,
) -> Result<RealizationReport, KrullError> {
    if !is_consistent(system) {
        return Err(KrullError::InconsistentSystem {
            m: system.m.clone(),
        });
    }
    if system.per_valuation.len() != rees.len() {
        return Err(KrullError::ShapeMismatch {
            system: system.per_valuation.len(),
            rees: rees.len(),
        });
    }
    let count: Int = system.extension_counts().iter().sum();
    if count.to_u64().is_none_or(|c| c > MAX_REALIZED_IDEALS) {
        return Err(KrullError::TooLarge(count));
    }

    let mut exponents = Vec::new();
    let mut residue_degrees = Vec::new();
    for (e_j, entries) in rees.integers().iter().zip(&system.per_valuation) {
        for entry in entries {
            let times = entry.multiplicity.to_u64().expect("bounded by count");
            for _ in 0..times {
                exponents.push(e_j * &entry.ramification);
                residue_degrees.push(entry.residue_degree.clone());
            }
        }
    }
    let extended = SemilocalIdeal::new(exponents)?;
    let uniform = extended.uniform_exponent().cloned();
    if uniform.is_none() && system.family != SystemFamily::Exp2 {
        return Err(KrullError::NonUniform(extended.to_string()));
    }
    Ok(RealizationReport {
        extension_degree: system.m.clone(),
        maximal_ideal_count: count,
        extended_ideal_exponents: extended,
        residue_degrees,
        jacobson_exponent: uniform.clone(),
        uniform_rees_integer: uniform,
        simple_extension: false,
    })
}

/// The realization `E = W[x]'` with `x = u^{1/e}` for a common multiple
/// `e >= 2` of the Rees integers.
pub fn theox_report(rees: &ReesData, e: &Int) -> Result<RealizationReport, KrullError> {
    if e < &int(2) {
        return Err(KrullError::BadK(e.clone()));
    }
    if !itoh_structure(rees, e)?.is_radical {
        return Err(KrullError::NotCommonMultiple {
            e: e.clone(),
            rees: rees.clone(),
        });
    }
    let mut exponents = Vec::with_capacity(rees.len());
    let mut residue_degrees = Vec::with_capacity(rees.len());
    for e_j in rees.integers() {
        let composite = itoh_tower(e_j, e)
            .map_err(|_| KrullError::NotCommonMultiple {
                e: e.clone(),
                rees: rees.clone(),
            })?
            .composite();
        exponents.push(e_j * &composite.ramification);
        residue_degrees.push(composite.residue_degree);
    }
    let extended = SemilocalIdeal::new(exponents)?;
    let uniform = extended.uniform_exponent().cloned();
    let Some(uniform) = uniform else {
        return Err(KrullError::NonUniform(extended.to_string()));
    };
    Ok(RealizationReport {
        extension_degree: e.clone(),
        maximal_ideal_count: int(rees.len() as i64),
        extended_ideal_exponents: extended,
        simple_extension: rees.integers().iter().all(|x| x == e),
        residue_degrees,
        jacobson_exponent: Some(uniform.clone()),
        uniform_rees_integer: Some(uniform),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub rees_integers: Vec<Int>,
    /// False for components where `I + z = R`.
    pub participates: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPlan {
    pub components: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ComponentOutcome {
    Planned {
        rees: ReesData,
        system: ConsistentSystem,
        report: RealizationReport,
    },
    Passthrough,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumReport {
    pub e: Int,
    pub lcm: Int,
    pub components: Vec<ComponentOutcome>,
    /// Rees integers of the whole ideal: the disjoint union over
    /// participating components.
    pub rees_union: Vec<Int>,
    pub uniform_rees_integer: Int,
}

/// Plans a degree-`e` extension of each participating component with all
/// Rees integers equal to `e`; other components pass through unchanged.
pub fn cor_co2_plan(plan: &ComponentPlan, e: &Int) -> Result<DirectSumReport, KrullError> {
    let mut rees_union = Vec::new();
    for (i, c) in plan.components.iter().enumerate() {
        if c.participates {
            if c.rees_integers.is_empty() {
                return Err(KrullError::EmptyComponent(i + 1));
            }
            rees_union.extend(c.rees_integers.iter().cloned());
        }
    }
    if rees_union.is_empty() {
        return Err(KrullError::NoParticipatingComponent);
    }
    let lcm = lcm_list(&rees_union).map_err(|_| ItohError::NonPositiveReesInteger(int(0)))?;
    if !e.is_positive() || !(e % &lcm).is_zero() {
        return Err(KrullError::NotMultiple { e: e.clone(), lcm });
    }

    let mut components = Vec::with_capacity(plan.components.len());
    let mut collected = Vec::new();
    for c in &plan.components {
        if !c.participates {
            components.push(ComponentOutcome::Passthrough);
            continue;
        }
        let rees = ReesData::new(c.rees_integers.clone())?;
        let k = e / rees.lcm();
        let system = build_system_u(&rees, &k)?;
        let report = realize_plan(&system, &rees)?;
        if report.uniform_rees_integer.as_ref() != Some(e) || &report.extension_degree != e {
            return Err(KrullError::NonUniform(
                report.extended_ideal_exponents.to_string(),
            ));
        }
        collected.extend(rees.integers().iter().cloned());
        components.push(ComponentOutcome::Planned {
            rees,
            system,
            report,
        });
    }
    debug_assert_eq!(collected, rees_union);
    Ok(DirectSumReport {
        e: e.clone(),
        lcm,
        components,
        rees_union,
        uniform_rees_integer: e.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendReport {
    pub jacobson: SemilocalIdeal,
    pub extended_ideal: SemilocalIdeal,
    /// `t` with `IE = J^t`.
    pub power: Int,
    pub radical: bool,
    pub projectively_full: bool,
    pub projectively_equivalent: bool,
}

impl ExtendReport {
    pub fn all_hold(&self) -> bool {
        self.radical && self.projectively_full && self.projectively_equivalent
    }
}

/// Realizes family `S` with `k = 1` and checks that the Jacobson radical of
/// the extension is a projectively full radical ideal projectively
/// equivalent to the extended ideal.
pub fn cor_extend_check(rees: &ReesData) -> Result<ExtendReport, KrullError> {
    let system = build_system_s(rees, &Int::one())?;
    let report = realize_plan(&system, rees)?;
    let n = report.extended_ideal_exponents.len();
    let jacobson = jacobson_radical(n)?;
    let power = report
        .jacobson_exponent
        .clone()
        .ok_or_else(|| KrullError::NonUniform(report.extended_ideal_exponents.to_string()))?;
    Ok(ExtendReport {
        radical: jacobson.is_radical(),
        projectively_full: is_projectively_full(&jacobson)?,
        projectively_equivalent: is_projectively_equivalent(
            &jacobson,
            &report.extended_ideal_exponents,
        )?,
        extended_ideal: report.extended_ideal_exponents,
        jacobson,
        power,
    })
}
