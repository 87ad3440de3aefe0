//! v-numbers, the minimum socle degree and the regularity index of δ.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::normal_form;
use crate::hilbert::{hilbert_numerator, HilbertData};
use crate::ideal::Ideal;
use crate::linalg::rank;
use crate::monomial::monomials_of_degree;
use crate::poly::Polynomial;

/// Default search cap for v-numbers when the regularity is unknown.
pub const DEFAULT_V_BOUND: u32 = 50;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VNumber {
    pub v: u32,
    /// One local v-number per prime, in the order of the primes.
    pub locals: Vec<u32>,
}

fn is_maximal<F: Field>(ideal: &Ideal<F>) -> bool {
    ideal.is_linear_prime() && ideal.dimension() == 0
}

fn search_bound<F: Field>(ideal: &Ideal<F>, cap: u32) -> u32 {
    ideal.hilbert_data().cm_regularity.map_or(cap, |r| r + 1)
}

/// `v(I)` and the local v-numbers `v_p(I)`. With `primes = None` the
/// ideal's own associated primes are used (monomial or point-set ideals).
pub fn v_number<F: Field>(ideal: &Ideal<F>, primes: Option<&[Vec<Polynomial<F>>]>, cap: u32) -> Result<VNumber> {
    if is_maximal(ideal) {
        return Ok(VNumber { v: 0, locals: vec![0] });
    }
    let bound = search_bound(ideal, cap);
    let s = ideal.ring().nvars();
    let locals = match (primes, ideal.points()) {
        (None, Some(points)) => point_locals(ideal.ring().field(), s, points, bound)?,
        _ => {
            let owned;
            let primes = match primes {
                Some(p) => p,
                None => {
                    owned = ideal.linear_primes().ok_or(Error::NoPrimes)?;
                    &owned
                }
            };
            if primes.is_empty() {
                return Err(Error::NoPrimes);
            }
            let base = ideal.hilbert_data();
            primes
                .iter()
                .map(|p| {
                    let colon = ideal.colon(&Ideal::new(p.clone())?)?;
                    let data = HilbertData::from_numerator(s, &hilbert_numerator(colon.initial_ideal()));
                    (1..=bound)
                        .find(|&d| base.hilbert_function(d) > data.hilbert_function(d))
                        .ok_or(Error::BoundExceeded(bound))
                })
                .collect::<Result<Vec<u32>>>()?
        }
    };
    let v = *locals.iter().min().ok_or(Error::NoPrimes)?;
    Ok(VNumber { v, locals })
}

/// For points, `v_P` is the least `d ≥ 1` where some degree-`d` form
/// vanishes on `X \ {P}` but not at `P`, read off evaluation ranks.
fn point_locals<F: Field>(field: &F, s: usize, points: &[Vec<F::Elem>], bound: u32) -> Result<Vec<u32>> {
    let n = points.len();
    let mut out = vec![None; n];
    for d in 1..=bound {
        let mons = monomials_of_degree(s, d);
        let cols: Vec<Vec<F::Elem>> = points
            .iter()
            .map(|p| {
                mons.iter()
                    .map(|m| {
                        m.exponents().iter().zip(p).fold(field.one(), |acc, (&e, c)| {
                            (0..e).fold(acc, |a, _| field.mul(&a, c))
                        })
                    })
                    .collect()
            })
            .collect();
        let full = rank(field, &cols);
        for (i, slot) in out.iter_mut().enumerate() {
            if slot.is_some() {
                continue;
            }
            let rest: Vec<Vec<F::Elem>> = cols
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| c.clone())
                .collect();
            if rank(field, &rest) < full {
                *slot = Some(d);
            }
        }
        if out.iter().all(Option::is_some) {
            break;
        }
    }
    out.into_iter().map(|x| x.ok_or(Error::BoundExceeded(bound))).collect()
}

/// Least degree of a nonzero socle element of `S/J` for `J` of dimension 0.
fn artinian_socle_degree<F: Field>(j: &Ideal<F>) -> u32 {
    let ring = j.ring();
    let field = ring.field();
    let order = ring.order();
    let s = ring.nvars();
    let gb = j.groebner_basis();
    let init = j.initial_ideal();
    let mut d = 0;
    loop {
        let basis = init.standard_monomials(d, order);
        let next = init.standard_monomials(d + 1, order);
        if next.is_empty() {
            return d;
        }
        // one column per basis monomial, rows indexed by (variable, next monomial)
        let mut cols: Vec<Vec<F::Elem>> = Vec::with_capacity(basis.len());
        for b in &basis {
            let mut col = Vec::with_capacity(s * next.len());
            for i in 0..s {
                let prod = Polynomial::from_monomial(ring, b.mul(&crate::monomial::Monomial::variable(s, i, 1)));
                let nf = normal_form(&prod, gb).expect("same ring");
                col.extend(next.iter().map(|m| nf.coefficient(m)));
            }
            cols.push(col);
        }
        if rank(field, &cols) < basis.len() {
            return d;
        }
        d += 1;
    }
}

/// Minimum socle degree `s(I)`: in dimension 0 directly, in dimension 1
/// after cutting by a regular linear form.
pub fn socle_degree<F: Field>(ideal: &Ideal<F>, form_bound: i64) -> Result<u32> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("the ideal".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Hypothesis("the ideal is the whole ring".into()));
    }
    match ideal.dimension() {
        0 => Ok(artinian_socle_degree(ideal)),
        1 => {
            let h = ideal.find_regular_linear_form(form_bound)?;
            let j = ideal.sum(&[h])?;
            Ok(artinian_socle_degree(&j))
        }
        k => Err(Error::UnsupportedDimension(k)),
    }
}

/// `reg(δ_I)`: 1 for a prime ideal, else `v(I)`.
pub fn reg_delta<F: Field>(ideal: &Ideal<F>, primes: Option<&[Vec<Polynomial<F>>]>, cap: u32) -> Result<u32> {
    if ideal.is_linear_prime() {
        return Ok(1);
    }
    Ok(v_number(ideal, primes, cap)?.v)
}

/// Whether every local v-number equals the regularity; `None` when the
/// regularity is not established.
pub fn cayley_bacharach<F: Field>(ideal: &Ideal<F>, v: &VNumber) -> Option<bool> {
    let reg = ideal.hilbert_data().cm_regularity?;
    Some(v.locals.iter().all(|&l| l == reg))
}
