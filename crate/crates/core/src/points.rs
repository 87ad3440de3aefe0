//! Finite sets of projective points over `GF(p)`, their vanishing ideals
//! and the evaluation codes they define.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField};
use crate::ideal::{normalized_vectors, Ideal};
use crate::linalg::{gaussian_binomial, kernel, max_over_subspaces, rank};
use crate::monomial::{Monomial, MonomialOrder, OrderKind};
use crate::parse::{parse_field, syntax, tokenize, Cursor, Tok};
use crate::poly::{PolyRing, Polynomial};

/// Distinct points of `P^{s-1}` over `GF(p)`, each scaled so its first
/// nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePointSet {
    field: PrimeField,
    s: usize,
    points: Vec<Vec<u32>>,
}

fn render_point(p: &[u32]) -> String {
    let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(":"))
}

impl ProjectivePointSet {
    /// Normalizes and collects the points; duplicates are rejected.
    pub fn new(field: PrimeField, s: usize, coords: Vec<Vec<i64>>) -> Result<Self> {
        let mut points: Vec<Vec<u32>> = Vec::with_capacity(coords.len());
        for c in coords {
            if c.len() != s {
                return Err(Error::PointLength {
                    expected: s,
                    found: c.len(),
                });
            }
            let v: Vec<u32> = c.iter().map(|&x| field.reduce_i64(x)).collect();
            let p = normalize(&field, &v)?;
            if points.contains(&p) {
                return Err(Error::DuplicatePoint(render_point(&p)));
            }
            points.push(p);
        }
        Ok(ProjectivePointSet { field, s, points })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// Number of homogeneous coordinates.
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `GF(p)[t1..ts]` with the given order.
    pub fn ring(&self, kind: OrderKind) -> Arc<PolyRing<PrimeField>> {
        let vars = (1..=self.s).map(|i| format!("t{i}")).collect();
        PolyRing::new(self.field, vars, MonomialOrder::new(kind, self.s)).expect("distinct names")
    }
}

impl fmt::Display for ProjectivePointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "points GF({}) dim={}", self.field.characteristic(), self.s)?;
        for p in &self.points {
            let parts: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            writeln!(f, "({})", parts.join(" : "))?;
        }
        Ok(())
    }
}

/// Scales a nonzero vector so its first nonzero entry is 1.
pub fn normalize(field: &PrimeField, v: &[u32]) -> Result<Vec<u32>> {
    let lead = v.iter().find(|&&c| c != 0).ok_or(Error::ZeroPoint)?;
    let inv = field.inv(lead);
    Ok(v.iter().map(|c| field.mul(c, &inv)).collect())
}

/// Reads a points file:
///
/// ```text
/// points GF(3) dim=3
/// (1 : 0 : 1)
/// (0 : 2 : 1)   -- becomes (0 : 1 : 2)
/// ```
pub fn parse_points(text: &str) -> Result<ProjectivePointSet> {
    let toks = tokenize(text, 0)?;
    let mut cur = Cursor::new(&toks);
    cur.skip_newlines();
    cur.expect_keyword("points")?;
    let field = match parse_field(&mut cur)? {
        FieldSpec::Prime(p) => PrimeField::new(p)?,
        FieldSpec::Rationals => return Err(cur.error("points need a prime field")),
    };
    cur.expect_keyword("dim")?;
    cur.expect_sym('=')?;
    let (l, c) = cur.here();
    let s: usize = cur
        .expect_int()?
        .try_into()
        .map_err(|_| syntax(l, c, "dimension out of range"))?;
    if s == 0 {
        return Err(syntax(l, c, "dimension must be positive"));
    }
    let mut coords = Vec::new();
    loop {
        cur.skip_newlines();
        if cur.at_end() {
            break;
        }
        cur.expect_sym('(')?;
        let mut pt = Vec::new();
        loop {
            let neg = cur.eat_sym('-');
            let (l, c) = cur.here();
            let n = cur.expect_int()?;
            let r = field.characteristic() as u64;
            let m: u64 = (n % num_bigint::BigInt::from(r))
                .try_into()
                .map_err(|_| syntax(l, c, "coordinate out of range"))?;
            let v = m as i64;
            pt.push(if neg { -v } else { v });
            if cur.eat_sym(')') {
                break;
            }
            if !(cur.eat_sym(':') || cur.eat_sym(',')) {
                return Err(cur.error("expected `:` or `)`"));
            }
        }
        if !matches!(cur.peek_tok(), None | Some(Tok::Newline)) {
            return Err(cur.error("expected end of line"));
        }
        coords.push(pt);
    }
    ProjectivePointSet::new(field, s, coords)
}

/// Every point of `P^{s-1}(GF(p))`.
pub fn generate_projective_space(p: u32, s: usize) -> Result<ProjectivePointSet> {
    let field = PrimeField::new(p)?;
    let elems = field.elements().expect("finite");
    let points = normalized_vectors(&elems, s);
    Ok(ProjectivePointSet { field, s, points })
}

/// The linear forms cutting out one point: a basis of the linear forms
/// vanishing at `P`.
pub fn point_prime(ring: &Arc<PolyRing<PrimeField>>, point: &[u32]) -> Vec<Polynomial<PrimeField>> {
    let field = ring.field();
    let s = ring.nvars();
    kernel(field, &[point.to_vec()], s)
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                ring,
                v.into_iter()
                    .enumerate()
                    .map(|(i, c)| (c, Monomial::variable(s, i, 1)))
                    .collect(),
            )
        })
        .collect()
}

/// `I(X)` as the intersection of the point primes, carrying the points.
pub fn vanishing_ideal(x: &ProjectivePointSet, ring: &Arc<PolyRing<PrimeField>>) -> Result<Ideal<PrimeField>> {
    if ring.nvars() != x.s {
        return Err(Error::PointLength {
            expected: ring.nvars(),
            found: x.s,
        });
    }
    if x.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let primes: Vec<Vec<Polynomial<PrimeField>>> = x.points.iter().map(|p| point_prime(ring, p)).collect();
    let mut acc: Option<Ideal<PrimeField>> = None;
    for p in &primes {
        let pi = if p.is_empty() {
            // s = 1: the single point of P^0
            return Err(Error::ZeroIdeal);
        } else {
            Ideal::new(p.clone())?
        };
        acc = Some(match acc {
            None => pi,
            Some(a) => a.intersect(&pi)?,
        });
    }
    let ideal = Ideal::new(acc.expect("nonempty").groebner_basis().to_vec())?;
    Ok(ideal.with_points(Arc::new(x.points.clone()), primes))
}

/// A Reed–Muller-type code: the image of `S_d` under evaluation at `X`,
/// given by a basis of generator rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvaluationCode {
    #[serde(skip)]
    field: PrimeField,
    pub d: u32,
    /// Length `n = |X|`.
    pub n: usize,
    /// Dimension `k = H_X(d)`.
    pub k: usize,
    /// `k × n` generator matrix.
    pub matrix: Vec<Vec<u32>>,
}

impl EvaluationCode {
    /// Rows are the evaluations of the degree-`d` standard monomials of
    /// `in(I(X))`, which give a basis of `S_d / I(X)_d`.
    pub fn new(x: &ProjectivePointSet, ideal: &Ideal<PrimeField>, d: u32) -> Result<Self> {
        let ring = ideal.ring();
        let mons = ideal.initial_ideal().standard_monomials(d, ring.order());
        let matrix: Vec<Vec<u32>> = mons
            .into_iter()
            .map(|m| {
                let f = Polynomial::from_monomial(ring, m);
                x.points.iter().map(|p| f.evaluate(p)).collect()
            })
            .collect();
        let k = matrix.len();
        if rank(&x.field, &matrix) != k {
            return Err(Error::Hypothesis(
                "standard monomials do not evaluate to independent vectors".into(),
            ));
        }
        Ok(EvaluationCode {
            field: x.field,
            d,
            n: x.len(),
            k,
            matrix,
        })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// Candidate count for `δ_r`, the number of `r`-dimensional subcodes.
    pub fn estimate(&self, r: usize) -> u128 {
        gaussian_binomial(self.k, r, self.field.characteristic() as u64)
    }

    /// `δ_r(C)`: the least support size of an `r`-dimensional subcode.
    pub fn generalized_hamming_weight(&self, r: usize, budget: u128) -> Result<u64> {
        if r == 0 || r > self.k {
            return Err(Error::RankOutOfRange { r, k: self.k });
        }
        let est = self.estimate(r);
        if est > budget {
            return Err(Error::BudgetExceeded { estimate: est, budget });
        }
        let f = &self.field;
        let elems = f.elements().expect("finite");
        let best = max_over_subspaces(&elems, self.k, r, |coef| {
            let mut support = 0i64;
            for j in 0..self.n {
                let nonzero = coef.iter().any(|row| {
                    let mut acc = 0u32;
                    for (c, g) in row.iter().zip(&self.matrix) {
                        if *c != 0 {
                            acc = f.add(&acc, &f.mul(c, &g[j]));
                        }
                    }
                    acc != 0
                });
                if nonzero {
                    support += 1;
                }
            }
            Some(-support)
        })
        .expect("r ≤ k");
        Ok((-best.score) as u64)
    }

    /// `(δ_1, ..., δ_k)`.
    pub fn weight_hierarchy(&self, budget: u128) -> Result<Vec<u64>> {
        (1..=self.k).map(|r| self.generalized_hamming_weight(r, budget)).collect()
    }
}

/// Builds `I(X)` in the default grevlex ring and the code of degree `d`.
pub fn code(x: &ProjectivePointSet, d: u32) -> Result<EvaluationCode> {
    let ideal = vanishing_ideal(x, &x.ring(OrderKind::Grevlex))?;
    EvaluationCode::new(x, &ideal, d)
}
