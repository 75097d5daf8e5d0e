//! Symbolic DVR extension calculus.
//!
//! DVRs are not constructed as rings. A [`DvrSpec`] records the exponent
//! `e` with `uW = Q^e` and a description of the residue field; an
//! [`ExtensionStep`] records the degree, ramification index and residue
//! degree of one finite extension. Towers multiply these invariants.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numcore::{gcd, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DvrError {
    #[error("Kummer step needs a transcendental residue generator on `{0}`")]
    NoTranscendental(String),
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: Int },
    #[error("{divisor} does not divide {value}")]
    NotMultiple { divisor: Int, value: Int },
    #[error("cannot compose: step ends at `{left}` but next starts at `{right}`")]
    LabelMismatch { left: String, right: String },
}

fn positive(name: &'static str, value: &Int) -> Result<(), DvrError> {
    if value.is_positive() {
        Ok(())
    } else {
        Err(DvrError::NonPositive {
            name,
            value: value.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueDescriptor {
    pub base_label: String,
    /// Adjoined transcendental generators, such as the image of `t·b`.
    pub transcendentals: u32,
    /// Degrees of successively adjoined Kummer generators.
    pub kummer_degrees: Vec<Int>,
}

impl ResidueDescriptor {
    pub fn new(base_label: impl Into<String>) -> Self {
        ResidueDescriptor {
            base_label: base_label.into(),
            transcendentals: 0,
            kummer_degrees: Vec::new(),
        }
    }

    /// Degree of the residue field over its base, counting Kummer
    /// generators only.
    pub fn algebraic_degree(&self) -> Int {
        self.kummer_degrees.iter().product()
    }
}

impl fmt::Display for ResidueDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base_label)?;
        if self.transcendentals > 0 {
            let s: Vec<String> = (1..=self.transcendentals)
                .map(|i| format!("s{i}"))
                .collect();
            write!(f, "({})", s.join(","))?;
        }
        for d in &self.kummer_degrees {
            write!(f, "[θ^{d}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DvrSpec {
    pub label: String,
    /// The `e` with `uW = Q^e`.
    pub uniformizer_exponent: Int,
    pub residue: ResidueDescriptor,
}

impl DvrSpec {
    pub fn new(label: impl Into<String>, uniformizer_exponent: Int) -> Result<Self, DvrError> {
        positive("uniformizer exponent", &uniformizer_exponent)?;
        let label = label.into();
        Ok(DvrSpec {
            residue: ResidueDescriptor::new(format!("k({label})")),
            label,
            uniformizer_exponent,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    UnramifiedKummer,
    TotallyRamifiedRoot,
    Composite,
}

impl StepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StepKind::UnramifiedKummer => "unramified-kummer",
            StepKind::TotallyRamifiedRoot => "totally-ramified-root",
            StepKind::Composite => "composite",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionStep {
    pub from_label: String,
    pub to_label: String,
    pub degree: Int,
    pub ramification: Int,
    pub residue_degree: Int,
    pub kind: StepKind,
    /// Set by the constructing operation when the lower DVR has a single
    /// extension and the fundamental equality holds.
    pub no_splitting: bool,
}

impl ExtensionStep {
    pub fn invariants(&self) -> (Int, Int, Int) {
        (
            self.degree.clone(),
            self.ramification.clone(),
            self.residue_degree.clone(),
        )
    }
}

impl fmt::Display for ExtensionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {}: degree {}, ramification {}, residue degree {} ({})",
            self.from_label,
            self.to_label,
            self.degree,
            self.ramification,
            self.residue_degree,
            self.kind.as_str()
        )
    }
}

/// `V ↦ W = V[tb]_{NV[tb]}`: same exponent, one more transcendental residue
/// generator, ramification one.
pub fn lift_to_rees_w(v: &DvrSpec) -> DvrSpec {
    let mut residue = v.residue.clone();
    residue.transcendentals += 1;
    DvrSpec {
        label: format!("{}[tb]", v.label),
        uniformizer_exponent: v.uniformizer_exponent.clone(),
        residue,
    }
}

/// `U = W[θ]` with `θ^e = v/(t·b)`, where `e` is the uniformizer exponent of
/// `W`. Residue-irreducibility of the Kummer polynomial needs the
/// transcendental residue element.
pub fn unramified_kummer_step(w: &DvrSpec) -> Result<ExtensionStep, DvrError> {
    if w.residue.transcendentals == 0 {
        return Err(DvrError::NoTranscendental(w.label.clone()));
    }
    let e = w.uniformizer_exponent.clone();
    Ok(ExtensionStep {
        from_label: w.label.clone(),
        to_label: "U".into(),
        degree: e.clone(),
        ramification: Int::one(),
        residue_degree: e,
        kind: StepKind::UnramifiedKummer,
        no_splitting: true,
    })
}

/// The DVR reached by an [`unramified_kummer_step`] from `w`.
pub fn kummer_target(w: &DvrSpec, step: &ExtensionStep) -> DvrSpec {
    let mut residue = w.residue.clone();
    residue.kummer_degrees.push(step.residue_degree.clone());
    DvrSpec {
        label: step.to_label.clone(),
        uniformizer_exponent: &w.uniformizer_exponent * &step.ramification,
        residue,
    }
}

/// `V* = U[π^{1/f}]`: totally ramified of degree `f`.
pub fn totally_ramified_root_step(u: &DvrSpec, f: &Int) -> Result<ExtensionStep, DvrError> {
    positive("f", f)?;
    Ok(ExtensionStep {
        from_label: u.label.clone(),
        to_label: "V*".into(),
        degree: f.clone(),
        ramification: f.clone(),
        residue_degree: Int::one(),
        kind: StepKind::TotallyRamifiedRoot,
        no_splitting: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tower {
    pub base: DvrSpec,
    pub steps: Vec<ExtensionStep>,
}

impl Tower {
    /// The whole tower as a single step; the identity step on `base` when
    /// there are no steps.
    pub fn composite(&self) -> ExtensionStep {
        let identity = ExtensionStep {
            from_label: self.base.label.clone(),
            to_label: self.base.label.clone(),
            degree: Int::one(),
            ramification: Int::one(),
            residue_degree: Int::one(),
            kind: StepKind::Composite,
            no_splitting: true,
        };
        self.steps.iter().fold(identity, |acc, s| {
            compose(&acc, s).expect("tower steps are chained by construction")
        })
    }
}

/// The tower `W ≤ U ≤ V*` over the Rees valuation ring with `uW = Q^{e_j}`,
/// for a positive multiple `e` of `e_j`.
pub fn itoh_tower(e_j: &Int, e: &Int) -> Result<Tower, DvrError> {
    positive("e_j", e_j)?;
    positive("e", e)?;
    if !(e % e_j).is_zero() {
        return Err(DvrError::NotMultiple {
            divisor: e_j.clone(),
            value: e.clone(),
        });
    }
    let v = DvrSpec::new("V", e_j.clone())?;
    let mut w = lift_to_rees_w(&v);
    w.label = "W".into();
    let kummer = unramified_kummer_step(&w)?;
    let u = kummer_target(&w, &kummer);
    let root = totally_ramified_root_step(&u, &(e / e_j))?;
    Ok(Tower {
        base: w,
        steps: vec![kummer, root],
    })
}

/// The extension of `W` (with `uW = Q^e`) by `u^{1/k}`.
///
/// With `d = gcd(e, k)` and `c = k/d` it has degree `k`, ramification `c`
/// and residue degree `d`, with no splitting.
pub fn general_k_extension(e: &Int, k: &Int) -> Result<ExtensionStep, DvrError> {
    positive("e", e)?;
    positive("k", k)?;
    let d = gcd(e, k);
    Ok(ExtensionStep {
        from_label: "W".into(),
        to_label: format!("U_{k}"),
        degree: k.clone(),
        ramification: k / &d,
        residue_degree: d,
        kind: StepKind::Composite,
        no_splitting: true,
    })
}

/// `t2 ∘ t1`: first `t1`, then `t2`.
pub fn compose(t1: &ExtensionStep, t2: &ExtensionStep) -> Result<ExtensionStep, DvrError> {
    if t1.to_label != t2.from_label {
        return Err(DvrError::LabelMismatch {
            left: t1.to_label.clone(),
            right: t2.from_label.clone(),
        });
    }
    Ok(ExtensionStep {
        from_label: t1.from_label.clone(),
        to_label: t2.to_label.clone(),
        degree: &t1.degree * &t2.degree,
        ramification: &t1.ramification * &t2.ramification,
        residue_degree: &t1.residue_degree * &t2.residue_degree,
        kind: StepKind::Composite,
        no_splitting: t1.no_splitting && t2.no_splitting,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalReport {
    pub product: Int,
    pub degree: Int,
    pub inequality_holds: bool,
    pub equality_holds: bool,
    /// Equality holds exactly when the no-splitting flag is set.
    pub consistent: bool,
}

/// Checks `ramification · residue degree <= degree` for a single extension,
/// with equality iff the step is flagged no-splitting.
pub fn check_fundamental(step: &ExtensionStep) -> FundamentalReport {
    let product = &step.ramification * &step.residue_degree;
    let inequality_holds = product <= step.degree;
    let equality_holds = product == step.degree;
    FundamentalReport {
        consistent: inequality_holds && (equality_holds == step.no_splitting),
        product,
        degree: step.degree.clone(),
        inequality_holds,
        equality_holds,
    }
}
