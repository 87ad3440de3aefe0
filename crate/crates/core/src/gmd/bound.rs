//! Upper bound for δ from products of distinct variables.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::linalg::{binomial, max_over_subsets, subsets};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

use super::Gmd;

/// Squarefree monomials of degree `d` in `n` variables.
fn squarefree(n: usize, d: u32) -> Vec<Monomial> {
    subsets(n, d as usize)
        .into_iter()
        .map(|s| {
            let mut e = vec![0u32; n];
            for i in s {
                e[i] = 1;
            }
            Monomial::new(e)
        })
        .collect()
}

/// `deg(S/I) − max deg(S/(I,F))` over sets `F` of `r` squarefree degree-`d`
/// products of variables, reduced modulo `I`, with distinct leading
/// monomials and `(I : (F)) ≠ I`. Works over any field; `None` when no
/// candidate qualifies. The result is at least `δ_I(d,r)`.
pub fn delta_upper_bound_linear_products<F: Field>(
    gmd: &Gmd<'_, F>,
    d: u32,
    r: usize,
) -> Result<Option<(u64, Vec<Polynomial<F>>)>> {
    let ideal: &Ideal<F> = gmd.ideal();
    let ring = ideal.ring();
    let mut cands: Vec<Polynomial<F>> = Vec::new();
    for m in squarefree(ring.nvars(), d) {
        let nf = ideal.normal_form(&Polynomial::from_monomial(ring, m))?;
        if !nf.is_zero() {
            cands.push(nf.monic());
        }
    }
    if r == 0 || r > cands.len() {
        return Ok(None);
    }
    let est = binomial(cands.len(), r);
    if est > gmd.budget() {
        return Err(Error::BudgetExceeded {
            estimate: est,
            budget: gmd.budget(),
        });
    }
    let best = max_over_subsets(cands.len(), r, |idx| {
        let fs: Vec<Polynomial<F>> = idx.iter().map(|&i| cands[i].clone()).collect();
        let mut lms: Vec<&Monomial> = fs.iter().map(|f| f.leading_monomial().unwrap()).collect();
        lms.sort();
        lms.dedup();
        if lms.len() < r {
            return None;
        }
        let (qualifies, deg) = gmd.evaluate_family(&fs).ok()?;
        qualifies.then_some(deg as i64)
    });
    Ok(best.map(|b| {
        (
            ideal.degree() - b.score as u64,
            b.witness.iter().map(|&i| cands[i].clone()).collect(),
        )
    }))
}
