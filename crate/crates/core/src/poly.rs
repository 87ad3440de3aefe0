//! Polynomial rings and exact multivariate polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// `K[t_1, ..., t_s]` with a fixed term order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<Self>> {
        if vars.is_empty() {
            return Err(Error::Syntax {
                line: 1,
                column: 1,
                message: "a ring needs at least one variable".into(),
            });
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::Syntax {
                    line: 1,
                    column: 1,
                    message: "empty variable name".into(),
                });
            }
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if order.nvars() != vars.len() {
            return Err(Error::LengthMismatch(order.nvars(), vars.len()));
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same field and variables, different term order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        PolyRing::new(self.field.clone(), self.vars.clone(), order)
    }

    /// Ring with one extra variable in front that is eliminated first.
    pub(crate) fn elimination_ring(&self, name: &str) -> Arc<Self> {
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name.to_string());
        vars.extend(self.vars.iter().cloned());
        Arc::new(PolyRing {
            field: self.field.clone(),
            vars,
            order: self.order.eliminating_new_first(),
        })
    }

    pub fn banner(&self) -> String {
        format!(
            "{}[{}], order {}",
            self.field.spec(),
            self.vars.join(","),
            self.order.describe(&self.vars)
        )
    }
}

pub fn same_ring<F: Field>(a: &Arc<PolyRing<F>>, b: &Arc<PolyRing<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub type Term<F> = (<F as Field>::Elem, Monomial);

/// A polynomial as a term list sorted strictly decreasing under the ring
/// order, without zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F::Elem) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn term(ring: &Arc<PolyRing<F>>, c: F::Elem, m: Monomial) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(c, m)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_monomial(ring: &Arc<PolyRing<F>>, m: Monomial) -> Self {
        Self::term(ring, ring.field().one(), m)
    }

    pub fn var(ring: &Arc<PolyRing<F>>, i: usize) -> Self {
        Self::from_monomial(ring, Monomial::variable(ring.nvars(), i, 1))
    }

    /// Builds a normalized polynomial from terms in any order.
    pub fn from_terms(ring: &Arc<PolyRing<F>>, mut terms: Vec<Term<F>>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.1, &a.1));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            if let Some(last) = out.last_mut() {
                if last.1 == m {
                    last.0 = field.add(&last.0, &c);
                    continue;
                }
            }
            out.push((c, m));
        }
        out.retain(|(c, _)| !field.is_zero(c));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusts that `terms` are already sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing<F>>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|t| t.1.degree() == m.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        let order = self.ring.order();
        match self.terms.binary_search_by(|t| order.cmp(m, &t.1)) {
            Ok(i) => self.terms[i].0.clone(),
            Err(_) => self.field().zero(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let field = self.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let conv = |c: &F::Elem| if negate { field.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((conv(&b[j].0), b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].0, &b[j].0)
                    } else {
                        field.add(&a[i].0, &b[j].0)
                    };
                    if !field.is_zero(&c) {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (conv(&t.0), t.1.clone())));
        Polynomial::from_sorted_terms(&self.ring, out)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &small.terms {
            acc = acc.merge(&big.mul_term(c, m), false);
        }
        acc
    }

    /// `c * m * self`; the term order is multiplicative so sorting survives.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, n)| (field.mul(a, c), n.mul(m)))
            .collect();
        Polynomial::from_sorted_terms(&self.ring, terms)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => {
                let inv = self.field().inv(lc);
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.product(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// `Some(q)` with `self = q * divisor`, `None` if the division is not exact.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        let field = self.field();
        let (lc, lm) = divisor.terms.first()?;
        let lc_inv = field.inv(lc);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((c, m)) = rem.terms.first() {
            let qm = m.div(lm)?;
            let qc = field.mul(c, &lc_inv);
            rem = rem.merge(&divisor.mul_term(&field.neg(&qc), &qm), false);
            quotient.push((qc, qm));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quotient))
    }

    /// Evaluates at a point given by field elements, one per variable.
    pub fn evaluate(&self, point: &[F::Elem]) -> F::Elem {
        let field = self.field();
        let mut acc = field.zero();
        for (c, m) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v = field.mul(&v, &point[i]);
                }
            }
            acc = field.add(&acc, &v);
        }
        acc
    }

    /// Re-homes the polynomial in `ring`, mapping each monomial.
    pub fn map_into(&self, ring: &Arc<PolyRing<F>>, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Polynomial::from_terms(ring, self.terms.iter().map(|(c, m)| (c.clone(), f(m))).collect())
    }

    /// Same polynomial, re-sorted under another order of the same variables.
    pub fn reorder(&self, ring: &Arc<PolyRing<F>>) -> Self {
        self.map_into(ring, |m| m.clone())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        let names = self.ring.var_names();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            let abs = if neg { field.neg(c) } else { c.clone() };
            if k > 0 {
                f.write_str(if neg { "-" } else { "+" })?;
            } else if neg {
                f.write_str("-")?;
            }
            let coeff = field.format(&abs);
            if m.is_one() {
                f.write_str(&coeff)?;
            } else if field.is_one(&abs) {
                f.write_str(&m.render(names))?;
            } else if coeff.contains('/') {
                write!(f, "({})*{}", coeff, m.render(names))?;
            } else {
                write!(f, "{}*{}", coeff, m.render(names))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let field = self.field();
        Polynomial::from_sorted_terms(
            &self.ring,
            self.terms.iter().map(|(c, m)| (field.neg(c), m.clone())).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::OrderKind;

    fn qq(n: usize) -> Arc<PolyRing<Rationals>> {
        let vars = (1..=n).map(|i| format!("t{i}")).collect();
        PolyRing::new(Rationals, vars, MonomialOrder::new(OrderKind::Grevlex, n)).unwrap()
    }

    fn gf(p: u32, n: usize) -> Arc<PolyRing<PrimeField>> {
        let vars = (1..=n).map(|i| format!("t{i}")).collect();
        PolyRing::new(
            PrimeField::new(p).unwrap(),
            vars,
            MonomialOrder::new(OrderKind::Grevlex, n),
        )
        .unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = qq(2);
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let p = &(&a + &b) * &(&a - &b);
        assert_eq!(p.to_string(), "t1^2-t2^2");
        assert!(p.is_homogeneous());
    }

    #[test]
    fn cancellation_gives_zero() {
        let r = qq(2);
        let a = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 1);
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn frobenius_in_characteristic_three() {
        let r = gf(3, 2);
        let s = &Polynomial::var(&r, 0) + &Polynomial::var(&r, 1);
        assert_eq!(s.pow(3).to_string(), "t1^3+t2^3");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::var(&gf(3, 2), 0);
        let b = Polynomial::var(&gf(3, 3), 0);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn exact_division() {
        let r = qq(2);
        let (a, b) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let f = &a - &b;
        let g = &(&a + &b) * &f;
        assert_eq!(g.divide_exact(&f).unwrap(), &a + &b);
        assert!(a.divide_exact(&b).is_none());
    }
}
