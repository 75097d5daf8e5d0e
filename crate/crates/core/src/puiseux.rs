//! Independent check of the invariants of `F(u^{1/k}) / F(u)` at a DVR `W`
//! with `uW = Q^e`.
//!
//! Write `u = w·π^e` with `w` a unit and `π` a uniformizer, normalized so
//! that `v(π) = 1`. Then:
//!
//! - the value group of the extension is `⟨1, e/k⟩`, and the ramification
//!   index is its index over ℤ;
//! - for the least `a > 0` with `k | a·e`, the element
//!   `τ = u^{a/k}·π^{-ae/k}` is a unit with `τ^{k/a} = w`, so the residue
//!   field gains a root of `X^{k/a} - w̄`. Over `κ(s)` with `w̄ = v̄/s`, the
//!   Newton polygon of that polynomial certifies its irreducibility.
//!
//! Nothing here calls `gcd(e, k)`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numcore::{subgroup_generated, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuiseuxError {
    #[error("model parameters must be positive (e = {e}, k = {k})")]
    InvalidModel { e: Int, k: Int },
    #[error("polynomial degree must be positive, got {0}")]
    BadDegree(Int),
    #[error("constant term valuation {0} is not an integer")]
    NonIntegralSetup(Rat),
    #[error("residue polynomial of degree {degree} not certified irreducible")]
    NotCertified { degree: Int },
    #[error("ramification {ramification} times residue degree {residue_degree} is not {degree}")]
    FundamentalEqualityViolation {
        ramification: Int,
        residue_degree: Int,
        degree: Int,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxModel {
    e: Int,
    k: Int,
}

impl PuiseuxModel {
    pub fn new(e: Int, k: Int) -> Result<Self, PuiseuxError> {
        if !e.is_positive() || !k.is_positive() {
            return Err(PuiseuxError::InvalidModel { e, k });
        }
        Ok(PuiseuxModel { e, k })
    }

    pub fn e(&self) -> &Int {
        &self.e
    }

    pub fn k(&self) -> &Int {
        &self.k
    }
}

/// `X^degree - a` over `κ(s)`, with `a` of `s`-adic valuation
/// `constant_valuation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolygonInput {
    pub degree: Int,
    pub constant_valuation: Rat,
}

/// One edge of a lower convex hull of `(exponent, valuation)` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub start: (Int, Rat),
    pub end: (Int, Rat),
}

impl Segment {
    pub fn slope(&self) -> Rat {
        (&self.end.1 - &self.start.1) / Rat::from(&self.end.0 - &self.start.0)
    }

    pub fn width(&self) -> Int {
        &self.end.0 - &self.start.0
    }
}

/// Lower convex hull of the points `(i, v(c_i))` for the nonzero terms of a
/// polynomial, sorted by exponent.
pub fn newton_polygon(terms: &[(Int, Rat)]) -> Vec<Segment> {
    let mut pts: Vec<(Int, Rat)> = terms.to_vec();
    pts.sort_by(|a, b| a.0.cmp(&b.0));
    let mut hull: Vec<(Int, Rat)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            // Keep b only if it lies strictly below the chord from a to p.
            let lhs = (&b.1 - &a.1) * Rat::from(&p.0 - &a.0);
            let rhs = (&p.1 - &a.1) * Rat::from(&b.0 - &a.0);
            if lhs < rhs {
                break;
            }
            hull.pop();
        }
        hull.push(p);
    }
    hull.windows(2)
        .map(|w| Segment {
            start: w[0].clone(),
            end: w[1].clone(),
        })
        .collect()
}

/// Irreducibility of `X^d - a` by its Newton polygon: a single segment whose
/// slope has denominator exactly `d` forces every root to have valuation
/// with denominator `d`, hence degree `d` over `κ(s)`.
pub fn newton_polygon_irreducible(p: &NewtonPolygonInput) -> Result<bool, PuiseuxError> {
    if !p.degree.is_positive() {
        return Err(PuiseuxError::BadDegree(p.degree.clone()));
    }
    if !p.constant_valuation.is_integer() {
        return Err(PuiseuxError::NonIntegralSetup(p.constant_valuation.clone()));
    }
    let terms = vec![
        (Int::zero(), p.constant_valuation.clone()),
        (p.degree.clone(), Rat::zero()),
    ];
    let polygon = newton_polygon(&terms);
    Ok(match polygon.as_slice() {
        [single] => single.slope().denom() == &single.width(),
        _ => false,
    })
}

/// Ramification index: `[⟨1, e/k⟩ : ℤ]`.
pub fn oracle_ramification(m: &PuiseuxModel) -> Int {
    let group = subgroup_generated(&[Rat::one(), Rat::new(m.e.clone(), m.k.clone())]);
    group
        .index_of_integers()
        .expect("the value group contains 1")
}

/// Least `a > 0` with `a·e ≡ 0 (mod k)`.
fn least_kummer_exponent(m: &PuiseuxModel) -> Int {
    let mut a = Int::one();
    while !(&a * &m.e).is_multiple_of(&m.k) {
        a += 1;
    }
    a
}

/// Residue degree: the degree of `X^{k/a} - w̄` over `κ(s)`, certified by
/// its Newton polygon with `v_s(w̄) = -1`.
pub fn oracle_residue_degree(m: &PuiseuxModel) -> Result<Int, PuiseuxError> {
    let a = least_kummer_exponent(m);
    let d = &m.k / &a;
    let input = NewtonPolygonInput {
        degree: d.clone(),
        constant_valuation: -Rat::one(),
    };
    if newton_polygon_irreducible(&input)? {
        Ok(d)
    } else {
        Err(PuiseuxError::NotCertified { degree: d })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleExtension {
    pub ramification: Int,
    pub residue_degree: Int,
    pub degree: Int,
}

pub fn oracle_extension(m: &PuiseuxModel) -> Result<OracleExtension, PuiseuxError> {
    let ramification = oracle_ramification(m);
    let residue_degree = oracle_residue_degree(m)?;
    if &ramification * &residue_degree != m.k {
        return Err(PuiseuxError::FundamentalEqualityViolation {
            ramification,
            residue_degree,
            degree: m.k.clone(),
        });
    }
    Ok(OracleExtension {
        ramification,
        residue_degree,
        degree: m.k.clone(),
    })
}

/// Exponent of `u^{1/k}` in the extended valuation, `e·c/k`, where `c` is
/// the oracle ramification index.
pub fn oracle_root_exponent(m: &PuiseuxModel) -> Rat {
    Rat::new(&m.e * oracle_ramification(m), m.k.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::{int, rat};
    use std::collections::{BTreeMap, HashSet};

    fn model(e: i64, k: i64) -> PuiseuxModel {
        PuiseuxModel::new(int(e), int(k)).unwrap()
    }

    fn np(d: i64, v: i64) -> NewtonPolygonInput {
        NewtonPolygonInput {
            degree: int(d),
            constant_valuation: rat(v, 1),
        }
    }

    #[test]
    fn ramification_examples() {
        assert_eq!(
            subgroup_generated(&[rat(1, 1), rat(4, 6)]).generator(),
            &rat(1, 3)
        );
        assert_eq!(oracle_ramification(&model(4, 6)), int(3));
        assert_eq!(oracle_ramification(&model(1, 1)), int(1));
        assert_eq!(oracle_ramification(&model(2, 3)), int(3));
    }

    #[test]
    fn residue_degree_examples() {
        assert_eq!(least_kummer_exponent(&model(4, 6)), int(3));
        assert_eq!(oracle_residue_degree(&model(4, 6)).unwrap(), int(2));
        assert_eq!(least_kummer_exponent(&model(3, 3)), int(1));
        assert_eq!(oracle_residue_degree(&model(3, 3)).unwrap(), int(3));
        assert_eq!(least_kummer_exponent(&model(2, 3)), int(3));
        assert_eq!(oracle_residue_degree(&model(2, 3)).unwrap(), int(1));
    }

    #[test]
    fn newton_polygon_examples() {
        assert!(newton_polygon_irreducible(&np(3, -1)).unwrap());
        assert!(newton_polygon_irreducible(&np(1, -1)).unwrap());
        assert!(!newton_polygon_irreducible(&np(4, -2)).unwrap());
        assert_eq!(
            newton_polygon_irreducible(&NewtonPolygonInput {
                degree: int(2),
                constant_valuation: rat(1, 2)
            }),
            Err(PuiseuxError::NonIntegralSetup(rat(1, 2)))
        );
        assert!(newton_polygon_irreducible(&np(0, -1)).is_err());
    }

    #[test]
    fn slope_minus_one_over_d_is_always_irreducible() {
        for d in 1..=20 {
            assert!(newton_polygon_irreducible(&np(d, -1)).unwrap(), "d = {d}");
        }
    }

    #[test]
    fn polygon_drops_points_above_the_hull() {
        // 1 + s^3 X + X^2 with v = (0, 3, 0): the middle point is above.
        let terms = vec![
            (int(0), rat(0, 1)),
            (int(1), rat(3, 1)),
            (int(2), rat(0, 1)),
        ];
        let poly = newton_polygon(&terms);
        assert_eq!(poly.len(), 1);
        assert_eq!(poly[0].slope(), rat(0, 1));
        // v = (2, 0, 1): two segments with slopes -2 and 1.
        let terms = vec![
            (int(0), rat(2, 1)),
            (int(1), rat(0, 1)),
            (int(2), rat(1, 1)),
        ];
        let slopes: Vec<Rat> = newton_polygon(&terms).iter().map(|s| s.slope()).collect();
        assert_eq!(slopes, vec![rat(-2, 1), rat(1, 1)]);
    }

    #[test]
    fn extension_examples() {
        let t = |e, k| {
            let r = oracle_extension(&model(e, k)).unwrap();
            (r.ramification, r.residue_degree, r.degree)
        };
        assert_eq!(t(4, 6), (int(3), int(2), int(6)));
        assert_eq!(t(6, 6), (int(1), int(6), int(6)));
        assert_eq!(t(5, 2), (int(2), int(1), int(2)));
    }

    #[test]
    fn oracle_matches_closed_form() {
        for e in 1..=40i64 {
            for k in 1..=40i64 {
                let d = (1..=k).filter(|d| e % d == 0 && k % d == 0).max().unwrap();
                let r = oracle_extension(&model(e, k)).unwrap();
                assert_eq!(r.ramification, int(k / d));
                assert_eq!(r.residue_degree, int(d));
                assert_eq!(&r.ramification * &r.residue_degree, int(k));
            }
        }
    }

    #[test]
    fn root_exponent() {
        assert_eq!(oracle_root_exponent(&model(3, 4)), rat(3, 1));
        assert_eq!(oracle_root_exponent(&model(2, 4)), rat(1, 1));
    }

    #[test]
    fn invalid_model() {
        assert!(PuiseuxModel::new(int(0), int(2)).is_err());
        assert!(PuiseuxModel::new(int(2), int(-1)).is_err());
    }

    // Polynomials in s over ℤ, as coefficient vectors, lowest degree first.
    fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    fn all_polys(max_deg: usize, coeffs: &[i64]) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..=max_deg {
            out = out
                .into_iter()
                .flat_map(|p| {
                    coeffs.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out.into_iter()
            .filter(|p| p.iter().any(|&c| c != 0))
            .map(|mut p| {
                while p.len() > 1 && *p.last().unwrap() == 0 {
                    p.pop();
                }
                p
            })
            .collect()
    }

    #[test]
    fn brute_force_x_cubed_minus_inverse_s_has_no_root() {
        // A root p/q in ℚ(s) of X^3 - 1/s means s·p^3 = q^3. Search all
        // p, q with degree <= 6 and coefficients in {-1, 0, 1}.
        let polys = all_polys(6, &[-1, 0, 1]);
        let cubes: HashSet<Vec<i64>> = polys.iter().map(|q| poly_mul(&poly_mul(q, q), q)).collect();
        for p in &polys {
            let p3 = poly_mul(&poly_mul(p, p), p);
            let mut shifted = vec![0];
            shifted.extend(p3);
            assert!(!cubes.contains(&shifted), "root found from p = {p:?}");
        }
        // A cubic with no root has no quadratic factor either.
        assert!(newton_polygon_irreducible(&np(3, -1)).unwrap());
    }

    // Laurent polynomials in s with rational coefficients.
    type Laurent = BTreeMap<i32, Rat>;

    fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
        let mut out = Laurent::new();
        for (i, x) in a {
            for (j, y) in b {
                *out.entry(i + j).or_insert_with(Rat::zero) += x * y;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    #[test]
    fn x4_minus_inverse_s_squared_factors() {
        // (X^2 - 1/s)(X^2 + 1/s) = X^4 - 1/s^2, coefficients indexed by
        // the power of X.
        let inv_s: Laurent = [(-1, rat(1, 1))].into_iter().collect();
        let one: Laurent = [(0, rat(1, 1))].into_iter().collect();
        let neg_inv_s: Laurent = [(-1, rat(-1, 1))].into_iter().collect();
        let left = [neg_inv_s, Laurent::new(), one.clone()];
        let right = [inv_s, Laurent::new(), one];
        let mut product: Vec<Laurent> = vec![Laurent::new(); 5];
        for (i, a) in left.iter().enumerate() {
            for (j, b) in right.iter().enumerate() {
                for (pow, c) in laurent_mul(a, b) {
                    *product[i + j].entry(pow).or_insert_with(Rat::zero) += c;
                }
            }
        }
        for p in &mut product {
            p.retain(|_, v| !v.is_zero());
        }
        let expected: Vec<Laurent> = vec![
            [(-2, rat(-1, 1))].into_iter().collect(),
            Laurent::new(),
            Laurent::new(),
            Laurent::new(),
            [(0, rat(1, 1))].into_iter().collect(),
        ];
        assert_eq!(product, expected);
        assert!(!newton_polygon_irreducible(&np(4, -2)).unwrap());
    }
}
