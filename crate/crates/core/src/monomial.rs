//! Monomial ideals in at most three variables.
//!
//! A monomial ideal `I` is carried by its minimal exponent vectors. Its Rees
//! valuations are the monomial valuations given by the primitive inner
//! normals of the Newton polyhedron `conv(gens) + ℝ≥0^d` whose supporting
//! offset is positive, and the offset is the Rees integer. The integral
//! closure of `I^k` is then cut out by `⟨a, m⟩ >= k·e_a`.
//!
//! [`oracle_is_integral`] decides the same membership without any facet
//! data, by exact linear feasibility.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub const MAX_DIM: usize = 3;
/// Largest coordinate accepted for a generator.
pub const MAX_COORD: i64 = 10_000;
/// Largest number of lattice points scanned by [`integral_closure_power`].
pub const MAX_SEARCH_POINTS: u64 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonomialError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("dimension {0} is outside 1..=3")]
    BadDimension(usize),
    #[error("generator has {found} coordinates, expected {expected}")]
    InconsistentDimension { expected: usize, found: usize },
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("exponent {0} exceeds the limit {MAX_COORD}")]
    CoordinateTooLarge(i64),
    #[error("the zero vector generates the unit ideal")]
    UnitIdeal,
    #[error("power must be at least 1, got {0}")]
    NonPositivePower(i64),
    #[error("monomial has dimension {found}, ideal has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("principal generator is the zero vector")]
    ZeroExponent,
    #[error("search box of {0} lattice points is too large")]
    SearchTooLarge(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Result<Self, MonomialError> {
        if coords.is_empty() || coords.len() > MAX_DIM {
            return Err(MonomialError::BadDimension(coords.len()));
        }
        for &c in &coords {
            if c < 0 {
                return Err(MonomialError::NegativeExponent(c));
            }
            if c > MAX_COORD {
                return Err(MonomialError::CoordinateTooLarge(c));
            }
        }
        Ok(ExponentVector(coords))
    }

    // Unchecked constructor for vectors derived from already validated data.
    fn raw(coords: Vec<i64>) -> Self {
        ExponentVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, other: &ExponentVector) -> i64 {
        dot(&self.0, &other.0)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Renders the monomial `x^a y^b z^c`, or `1` for the zero vector.
    pub fn monomial(&self) -> String {
        const VARS: [char; 3] = ['x', 'y', 'z'];
        let mut s = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 => s.push(VARS[i]),
                _ => s.push_str(&format!("{}^{}", VARS[i], c)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A proper nonzero monomial ideal, stored by its minimal generators in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn max_coord(&self) -> i64 {
        self.generators
            .iter()
            .flat_map(|g| g.0.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Whether `x^m` lies in the ideal.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.generators.iter().any(|g| m.dominates(g))
    }

    /// The ideal `I^k`, from k-fold sums of generators.
    pub fn power(&self, k: i64) -> Result<MonomialIdeal, MonomialError> {
        if k < 1 {
            return Err(MonomialError::NonPositivePower(k));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            let sums: Vec<ExponentVector> = acc
                .generators
                .iter()
                .flat_map(|a| self.generators.iter().map(move |g| a.add(g)))
                .collect();
            acc = minimal_elements(self.dim, sums);
        }
        Ok(acc)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Highest power of the first variable first: (x^2, xy^2, y^3).
        let parts: Vec<String> = self.generators.iter().rev().map(|g| g.monomial()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn minimal_elements(dim: usize, gens: Vec<ExponentVector>) -> MonomialIdeal {
    let unique: BTreeSet<ExponentVector> = gens.into_iter().collect();
    let all: Vec<ExponentVector> = unique.into_iter().collect();
    let generators = all
        .iter()
        .filter(|g| !all.iter().any(|h| h != *g && g.dominates(h)))
        .cloned()
        .collect();
    MonomialIdeal { dim, generators }
}

/// Builds the ideal generated by `gens`, dropping every generator that is
/// componentwise above another one.
pub fn minimalize(gens: &[ExponentVector]) -> Result<MonomialIdeal, MonomialError> {
    let first = gens.first().ok_or(MonomialError::EmptyGenerators)?;
    let dim = first.dim();
    for g in gens {
        if g.dim() != dim {
            return Err(MonomialError::InconsistentDimension {
                expected: dim,
                found: g.dim(),
            });
        }
        if g.is_zero() {
            return Err(MonomialError::UnitIdeal);
        }
    }
    Ok(minimal_elements(dim, gens.to_vec()))
}

/// Convenience constructor from plain coordinate rows.
pub fn ideal_from_rows(rows: &[&[i64]]) -> Result<MonomialIdeal, MonomialError> {
    let gens = rows
        .iter()
        .map(|r| ExponentVector::new(r.to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    minimalize(&gens)
}

/// A monomial Rees valuation: `v(x^m) = ⟨normal, m⟩`, with `v(I) = rees_integer`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReesValuationSpec {
    pub normal: ExponentVector,
    pub rees_integer: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesPackage {
    pub ideal: MonomialIdeal,
    /// Sorted lexicographically by normal.
    pub valuations: Vec<ReesValuationSpec>,
}

impl ReesPackage {
    pub fn rees_integers(&self) -> Vec<i64> {
        self.valuations.iter().map(|v| v.rees_integer).collect()
    }

    pub fn normals(&self) -> Vec<ExponentVector> {
        self.valuations.iter().map(|v| v.normal.clone()).collect()
    }
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g <= 1 {
        v
    } else {
        v.into_iter().map(|x| x / g).collect()
    }
}

fn spec_for(ideal: &MonomialIdeal, normal: Vec<i64>) -> Option<ReesValuationSpec> {
    let normal = ExponentVector::raw(primitive(normal));
    let offset = ideal.generators.iter().map(|g| normal.dot(g)).min()?;
    (offset > 0).then_some(ReesValuationSpec {
        normal,
        rees_integer: offset,
    })
}

/// Rees valuations of a monomial ideal: facets of its Newton polyhedron with
/// positive offset, paired with that offset.
pub fn rees_valuations(ideal: &MonomialIdeal) -> ReesPackage {
    let valuations = match ideal.dim {
        2 => facets_by_slopes(ideal),
        _ => facets_by_enumeration(ideal),
    };
    ReesPackage {
        ideal: ideal.clone(),
        valuations,
    }
}

/// 2-D facets: walk the lower-left convex chain of the generators.
fn facets_by_slopes(ideal: &MonomialIdeal) -> Vec<ReesValuationSpec> {
    // Minimal generators sorted by x ascending have y strictly descending.
    let pts: Vec<(i64, i64)> = ideal.generators.iter().map(|g| (g.0[0], g.0[1])).collect();
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (p.1 - b.1) - (b.1 - a.1) * (p.0 - b.0);
            if cross > 0 {
                break;
            }
            hull.pop();
        }
        hull.push(p);
    }

    let mut out = BTreeSet::new();
    for w in hull.windows(2) {
        let ((x1, y1), (x2, y2)) = (w[0], w[1]);
        out.extend(spec_for(ideal, vec![y1 - y2, x2 - x1]));
    }
    out.extend(spec_for(ideal, vec![1, 0]));
    out.extend(spec_for(ideal, vec![0, 1]));
    out.into_iter().collect()
}

/// Normal to `d - 1` vectors in dimension `d`.
fn orthogonal_complement(dim: usize, dirs: &[Vec<i64>]) -> Vec<i64> {
    match dim {
        1 => vec![1],
        2 => vec![-dirs[0][1], dirs[0][0]],
        _ => {
            let (u, v) = (&dirs[0], &dirs[1]);
            vec![
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            ]
        }
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Facets found by trying every hyperplane through one generator spanned by
/// differences of generators and coordinate rays. Works for any `dim <= 3`.
pub fn facets_by_enumeration(ideal: &MonomialIdeal) -> Vec<ReesValuationSpec> {
    let dim = ideal.dim;
    let gens = &ideal.generators;
    let rays: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
        .collect();

    let mut out = BTreeSet::new();
    for (i, base) in gens.iter().enumerate() {
        let mut dirs: Vec<Vec<i64>> = gens[i + 1..]
            .iter()
            .map(|g| g.0.iter().zip(&base.0).map(|(a, b)| a - b).collect())
            .collect();
        dirs.extend(rays.iter().cloned());

        for combo in combinations(dirs.len(), dim - 1) {
            let chosen: Vec<Vec<i64>> = combo.iter().map(|&c| dirs[c].clone()).collect();
            let mut normal = orthogonal_complement(dim, &chosen);
            if normal.iter().all(|&c| c == 0) {
                continue;
            }
            if normal.iter().all(|&c| c <= 0) {
                normal.iter_mut().for_each(|c| *c = -*c);
            } else if normal.iter().any(|&c| c < 0) {
                continue;
            }
            let normal = primitive(normal);
            let offset = gens.iter().map(|g| dot(&normal, &g.0)).min().unwrap_or(0);
            if dot(&normal, &base.0) != offset || offset <= 0 {
                continue;
            }
            out.insert(ReesValuationSpec {
                normal: ExponentVector::raw(normal),
                rees_integer: offset,
            });
        }
    }
    out.into_iter().collect()
}

/// Rees valuations of the principal ideal `(x^b)`: one coordinate valuation
/// per nonzero exponent.
pub fn principal_rees(b: &ExponentVector, dim: usize) -> Result<ReesPackage, MonomialError> {
    if b.dim() != dim {
        return Err(MonomialError::DimensionMismatch {
            expected: dim,
            found: b.dim(),
        });
    }
    if b.is_zero() {
        return Err(MonomialError::ZeroExponent);
    }
    let mut valuations: Vec<ReesValuationSpec> =
        b.0.iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| ReesValuationSpec {
                normal: ExponentVector::raw((0..dim).map(|j| i64::from(i == j)).collect()),
                rees_integer: c,
            })
            .collect();
    valuations.sort();
    Ok(ReesPackage {
        ideal: minimalize(std::slice::from_ref(b))?,
        valuations,
    })
}

/// Minimal generators of the integral closure of `I^k`.
pub fn integral_closure_power(
    ideal: &MonomialIdeal,
    k: i64,
) -> Result<MonomialIdeal, MonomialError> {
    if k < 1 {
        return Err(MonomialError::NonPositivePower(k));
    }
    let package = rees_valuations(ideal);
    let bound = k * ideal.max_coord();
    let points = ((bound + 1) as u64).saturating_pow(ideal.dim as u32);
    if points > MAX_SEARCH_POINTS {
        return Err(MonomialError::SearchTooLarge(points));
    }

    let member = |m: &[i64]| {
        package
            .valuations
            .iter()
            .all(|v| dot(&v.normal.0, m) >= k * v.rees_integer)
    };

    let mut gens = Vec::new();
    let mut cur = vec![0i64; ideal.dim];
    loop {
        if member(&cur) {
            let minimal = (0..ideal.dim).all(|i| {
                if cur[i] == 0 {
                    return true;
                }
                let mut below = cur.clone();
                below[i] -= 1;
                !member(&below)
            });
            if minimal {
                gens.push(ExponentVector::raw(cur.clone()));
            }
        }
        // Odometer step over [0, bound]^dim.
        let mut axis = 0;
        loop {
            if axis == ideal.dim {
                return Ok(minimal_elements(ideal.dim, gens));
            }
            if cur[axis] < bound {
                cur[axis] += 1;
                break;
            }
            cur[axis] = 0;
            axis += 1;
        }
    }
}

/// Decides `x^m ∈ (I^k)_a` as `m ∈ conv(k·gens) + ℝ≥0^d`.
///
/// The feasibility system `Σ λ_i k g_i + s = m, Σ λ_i = 1, λ, s >= 0` is
/// solvable iff it has a basic feasible solution, so every square basis of
/// its constraint matrix is tried with Cramer's rule in exact integers.
pub fn oracle_is_integral(
    ideal: &MonomialIdeal,
    k: i64,
    m: &ExponentVector,
) -> Result<bool, MonomialError> {
    if m.dim() != ideal.dim {
        return Err(MonomialError::DimensionMismatch {
            expected: ideal.dim,
            found: m.dim(),
        });
    }
    if k < 1 {
        return Err(MonomialError::NonPositivePower(k));
    }
    let dim = ideal.dim;
    let rows = dim + 1;

    let mut columns: Vec<Vec<i128>> = ideal
        .generators
        .iter()
        .map(|g| {
            let mut col: Vec<i128> = g.0.iter().map(|&c| i128::from(k * c)).collect();
            col.push(1);
            col
        })
        .collect();
    for i in 0..dim {
        let mut col = vec![0i128; rows];
        col[i] = 1;
        columns.push(col);
    }
    let mut rhs: Vec<i128> = m.0.iter().map(|&c| i128::from(c)).collect();
    rhs.push(1);

    for basis in combinations(columns.len(), rows) {
        let matrix: Vec<Vec<i128>> = basis.iter().map(|&c| columns[c].clone()).collect();
        let det = determinant(&matrix);
        if det.is_zero() {
            continue;
        }
        let feasible = (0..rows).all(|j| {
            let mut replaced = matrix.clone();
            replaced[j] = rhs.clone();
            let dj = determinant(&replaced);
            !(dj * det.signum()).is_negative()
        });
        if feasible {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Determinant of a square matrix given by columns. Uses `i128` and falls
/// back to big integers on overflow.
fn determinant(cols: &[Vec<i128>]) -> BigInt {
    match det_i128(cols) {
        Some(d) => BigInt::from(d),
        None => {
            let big: Vec<Vec<BigInt>> = cols
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            det_big(&big)
        }
    }
}

fn minor<T: Clone>(cols: &[Vec<T>], skip_col: usize) -> Vec<Vec<T>> {
    cols.iter()
        .enumerate()
        .filter(|(j, _)| *j != skip_col)
        .map(|(_, c)| c[1..].to_vec())
        .collect()
}

fn det_i128(cols: &[Vec<i128>]) -> Option<i128> {
    let n = cols.len();
    if n == 1 {
        return Some(cols[0][0]);
    }
    let mut acc: i128 = 0;
    for j in 0..n {
        if cols[j][0] == 0 {
            continue;
        }
        let term = cols[j][0].checked_mul(det_i128(&minor(cols, j))?)?;
        acc = if j % 2 == 0 {
            acc.checked_add(term)?
        } else {
            acc.checked_sub(term)?
        };
    }
    Some(acc)
}

fn det_big(cols: &[Vec<BigInt>]) -> BigInt {
    let n = cols.len();
    if n == 1 {
        return cols[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if cols[j][0].is_zero() {
            continue;
        }
        let term = &cols[j][0] * det_big(&minor(cols, j));
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// Parses the ideal text format: a `dim d` header followed by one generator
/// per line as `d` nonnegative integers. `#` starts a comment.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, ParseError> {
    let mut dim: Option<usize> = None;
    let mut gens = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| ParseError {
            line: line_no,
            message,
        };
        match dim {
            None => {
                let mut parts = content.split_whitespace();
                if parts.next() != Some("dim") {
                    return Err(err(format!("expected `dim d`, found `{content}`")));
                }
                let d: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err("missing or invalid dimension".into()))?;
                if parts.next().is_some() {
                    return Err(err("trailing tokens after dimension".into()));
                }
                if !(1..=MAX_DIM).contains(&d) {
                    return Err(err(MonomialError::BadDimension(d).to_string()));
                }
                dim = Some(d);
            }
            Some(d) => {
                let coords = content
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|_| err(format!("invalid integer `{t}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if coords.len() != d {
                    return Err(err(MonomialError::InconsistentDimension {
                        expected: d,
                        found: coords.len(),
                    }
                    .to_string()));
                }
                let g = ExponentVector::new(coords).map_err(|e| err(e.to_string()))?;
                if g.is_zero() {
                    return Err(err(MonomialError::UnitIdeal.to_string()));
                }
                gens.push(g);
            }
        }
    }
    if dim.is_none() {
        return Err(ParseError {
            line: last_line.max(1),
            message: "missing `dim d` header".into(),
        });
    }
    minimalize(&gens).map_err(|e| ParseError {
        line: last_line.max(1),
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec()).unwrap()
    }

    fn rows(ideal: &MonomialIdeal) -> Vec<Vec<i64>> {
        ideal
            .generators()
            .iter()
            .map(|g| g.coords().to_vec())
            .collect()
    }

    fn specs(pkg: &ReesPackage) -> Vec<(Vec<i64>, i64)> {
        pkg.valuations
            .iter()
            .map(|v| (v.normal.coords().to_vec(), v.rees_integer))
            .collect()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal_from_rows(&[&[2, 0], &[3, 1], &[0, 3]]).unwrap();
        assert_eq!(rows(&i), vec![vec![0, 3], vec![2, 0]]);
        let i = ideal_from_rows(&[&[1, 1]]).unwrap();
        assert_eq!(rows(&i), vec![vec![1, 1]]);
        let i = ideal_from_rows(&[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        assert_eq!(rows(&i), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn minimalize_errors() {
        assert_eq!(minimalize(&[]), Err(MonomialError::EmptyGenerators));
        assert_eq!(
            minimalize(&[ev(&[1, 0]), ev(&[1, 0, 0])]),
            Err(MonomialError::InconsistentDimension {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(minimalize(&[ev(&[0, 0])]), Err(MonomialError::UnitIdeal));
        assert_eq!(
            ExponentVector::new(vec![1, -1]),
            Err(MonomialError::NegativeExponent(-1))
        );
        assert_eq!(
            ExponentVector::new(vec![1, 1, 1, 1]),
            Err(MonomialError::BadDimension(4))
        );
    }

    #[test]
    fn rees_valuation_examples() {
        let i = ideal_from_rows(&[&[2, 0], &[0, 3]]).unwrap();
        let pkg = rees_valuations(&i);
        assert_eq!(specs(&pkg), vec![(vec![3, 2], 6)]);
        for g in i.generators() {
            assert_eq!(g.dot(&pkg.valuations[0].normal), 6);
        }

        let i = ideal_from_rows(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(specs(&rees_valuations(&i)), vec![(vec![1, 1], 1)]);

        let i = ideal_from_rows(&[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        assert_eq!(specs(&rees_valuations(&i)), vec![(vec![1, 1], 2)]);
    }

    #[test]
    fn rees_valuations_with_coordinate_facets() {
        // (x^2 y, x y^2): both coordinate valuations survive with offset 1.
        let i = ideal_from_rows(&[&[2, 1], &[1, 2]]).unwrap();
        assert_eq!(
            specs(&rees_valuations(&i)),
            vec![(vec![0, 1], 1), (vec![1, 0], 1), (vec![1, 1], 3)]
        );
    }

    #[test]
    fn one_dimensional_ideal() {
        let i = ideal_from_rows(&[&[3], &[5]]).unwrap();
        assert_eq!(specs(&rees_valuations(&i)), vec![(vec![1], 3)]);
        let c = integral_closure_power(&i, 2).unwrap();
        assert_eq!(rows(&c), vec![vec![6]]);
    }

    #[test]
    fn three_dimensional_maximal_ideal_powers() {
        let i = ideal_from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(specs(&rees_valuations(&i)), vec![(vec![1, 1, 1], 1)]);
        let c = integral_closure_power(&i, 2).unwrap();
        assert_eq!(c, i.power(2).unwrap());
        assert_eq!(c.generators().len(), 6);
    }

    #[test]
    fn three_dimensional_diagonal() {
        // (x^2, y^3, z^6): single facet 3x + 2y + z >= 6.
        let i = ideal_from_rows(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 6]]).unwrap();
        assert_eq!(specs(&rees_valuations(&i)), vec![(vec![3, 2, 1], 6)]);
    }

    #[test]
    fn slope_sort_matches_enumeration_in_2d() {
        let ideals: Vec<Vec<&[i64]>> = vec![
            vec![&[2, 0], &[0, 3]],
            vec![&[4, 0], &[1, 1], &[0, 5]],
            vec![&[6, 0], &[3, 1], &[2, 2], &[0, 6]],
            vec![&[2, 1], &[1, 2]],
            vec![&[3, 2]],
            vec![&[5, 1], &[2, 2], &[1, 4], &[0, 6]],
        ];
        for r in ideals {
            let i = ideal_from_rows(&r).unwrap();
            assert_eq!(facets_by_slopes(&i), facets_by_enumeration(&i), "{i}");
        }
    }

    #[test]
    fn closure_examples() {
        let i = ideal_from_rows(&[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(
            rows(&integral_closure_power(&i, 1).unwrap()),
            vec![vec![0, 2], vec![1, 1], vec![2, 0]]
        );
        let i = ideal_from_rows(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(
            rows(&integral_closure_power(&i, 3).unwrap()),
            vec![vec![0, 3], vec![1, 2], vec![2, 1], vec![3, 0]]
        );
        let i = ideal_from_rows(&[&[2, 0], &[0, 3]]).unwrap();
        assert_eq!(
            rows(&integral_closure_power(&i, 1).unwrap()),
            vec![vec![0, 3], vec![1, 2], vec![2, 0]]
        );
        assert_eq!(
            integral_closure_power(&i, 0),
            Err(MonomialError::NonPositivePower(0))
        );
    }

    #[test]
    fn closure_brute_force_for_x2_y2() {
        // Membership over [0,2]^2 against the single facet (1,1) with e = 2.
        let mut members = Vec::new();
        for a in 0..=2i64 {
            for b in 0..=2i64 {
                if a + b >= 2 {
                    members.push(ev(&[a, b]));
                }
            }
        }
        let expected = minimalize(&members).unwrap();
        let i = ideal_from_rows(&[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(integral_closure_power(&i, 1).unwrap(), expected);
    }

    #[test]
    fn oracle_examples() {
        let i = ideal_from_rows(&[&[2, 0], &[0, 2]]).unwrap();
        assert!(oracle_is_integral(&i, 1, &ev(&[1, 1])).unwrap());
        let i = ideal_from_rows(&[&[2, 0], &[0, 3]]).unwrap();
        assert!(!oracle_is_integral(&i, 1, &ev(&[1, 1])).unwrap());
        assert!(oracle_is_integral(&i, 1, &ev(&[1, 2])).unwrap());
        let i = ideal_from_rows(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(oracle_is_integral(&i, 1, &ev(&[1, 0])).unwrap());
        assert!(!oracle_is_integral(&i, 2, &ev(&[1, 0])).unwrap());
        assert_eq!(
            oracle_is_integral(&i, 1, &ev(&[1, 0, 0])),
            Err(MonomialError::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn oracle_agrees_in_3d() {
        let i = ideal_from_rows(&[&[2, 0, 1], &[0, 3, 0], &[1, 1, 2], &[0, 0, 4]]).unwrap();
        for k in 1..=2 {
            let closure = integral_closure_power(&i, k).unwrap();
            let b = k * i.max_coord();
            for x in 0..=b {
                for y in 0..=b {
                    for z in 0..=b {
                        let m = ev(&[x, y, z]);
                        assert_eq!(
                            closure.contains(&m),
                            oracle_is_integral(&i, k, &m).unwrap(),
                            "k={k} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn principal_examples() {
        assert_eq!(
            specs(&principal_rees(&ev(&[1, 0]), 2).unwrap()),
            vec![(vec![1, 0], 1)]
        );
        assert_eq!(
            specs(&principal_rees(&ev(&[2, 3]), 2).unwrap()),
            vec![(vec![0, 1], 3), (vec![1, 0], 2)]
        );
        assert_eq!(
            specs(&principal_rees(&ev(&[0, 4]), 2).unwrap()),
            vec![(vec![0, 1], 4)]
        );
        assert_eq!(
            principal_rees(&ev(&[0, 0]), 2).unwrap_err(),
            MonomialError::ZeroExponent
        );
    }

    #[test]
    fn principal_agrees_with_hull() {
        for b in [[2i64, 3], [0, 4], [5, 0], [1, 1]] {
            let p = principal_rees(&ev(&b), 2).unwrap();
            assert_eq!(rees_valuations(&p.ideal).valuations, p.valuations);
        }
    }

    #[test]
    fn power_of_ideal() {
        let i = ideal_from_rows(&[&[2, 0], &[0, 3]]).unwrap();
        assert_eq!(
            rows(&i.power(2).unwrap()),
            vec![vec![0, 6], vec![2, 3], vec![4, 0]]
        );
    }

    #[test]
    fn parse_format() {
        let text = "# ideal (x^2, y^3)\ndim 2\n2 0\n\n0 3  # y cubed\n";
        let i = parse_ideal(text).unwrap();
        assert_eq!(rows(&i), vec![vec![0, 3], vec![2, 0]]);

        let e = parse_ideal("dim 2\n2 0\n1 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_ideal("2 0\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_ideal("dim 2\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_ideal("dim 4\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_ideal("dim 2\n0 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_ideal("dim 2\n").is_err());
        assert!(parse_ideal("").is_err());
    }

    #[test]
    fn monomial_rendering() {
        assert_eq!(ev(&[1, 2]).monomial(), "xy^2");
        assert_eq!(ev(&[0, 0, 3]).monomial(), "z^3");
        assert_eq!(ev(&[0]).monomial(), "1");
    }

    #[test]
    fn display_orders_by_first_variable() {
        let i = ideal_from_rows(&[&[0, 3], &[2, 0], &[1, 2]]).unwrap();
        assert_eq!(i.to_string(), "(x^2, xy^2, y^3)");
    }
}
