//! Ideals with lazily computed Gröbner data, and the operations built on it.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{normal_form, reduced_groebner_basis};
use crate::hilbert::{hilbert_numerator, HilbertData};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{same_ring, PolyRing, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Verified,
    Asserted,
}

/// A yes/no property together with where the answer came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub holds: bool,
    pub provenance: Provenance,
}

impl Flag {
    pub fn verified(holds: bool) -> Flag {
        Flag {
            holds,
            provenance: Provenance::Verified,
        }
    }

    pub fn asserted() -> Flag {
        Flag {
            holds: true,
            provenance: Provenance::Asserted,
        }
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.holds { "yes" } else { "no" };
        let p = match self.provenance {
            Provenance::Verified => "verified",
            Provenance::Asserted => "asserted",
        };
        write!(f, "{v} ({p})")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Properties {
    pub unmixed: Option<Flag>,
    pub radical: Option<Flag>,
    pub complete_intersection: Option<Flag>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Unmixed,
    Radical,
    CompleteIntersection,
}

/// A nonzero ideal of a polynomial ring, given by generators.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Polynomial<F>>,
    homogeneous: bool,
    monomial: bool,
    asserted: Properties,
    primes: Option<Arc<Vec<Vec<Polynomial<F>>>>>,
    points: Option<Arc<Vec<Vec<F::Elem>>>>,
    gb: OnceLock<Vec<Polynomial<F>>>,
    initial: OnceLock<MonomialIdeal>,
    hilbert: OnceLock<HilbertData>,
    mono_primes: OnceLock<Vec<u64>>,
    min_gens: OnceLock<Vec<Polynomial<F>>>,
    ci: OnceLock<bool>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<F: Field> Ideal<F> {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(gens: Vec<Polynomial<F>>) -> Result<Self> {
        let ring = match gens.first() {
            Some(g) => g.ring().clone(),
            None => return Err(Error::ZeroIdeal),
        };
        for g in &gens {
            if !same_ring(&ring, g.ring()) {
                return Err(Error::RingMismatch);
            }
        }
        let gens: Vec<Polynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        let monomial = gens.iter().all(|g| g.is_monomial());
        Ok(Ideal {
            ring,
            gens,
            homogeneous,
            monomial,
            asserted: Properties::default(),
            primes: None,
            points: None,
            gb: OnceLock::new(),
            initial: OnceLock::new(),
            hilbert: OnceLock::new(),
            mono_primes: OnceLock::new(),
            min_gens: OnceLock::new(),
            ci: OnceLock::new(),
        })
    }

    pub fn from_monomial_ideal(ring: &Arc<PolyRing<F>>, m: &MonomialIdeal) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ideal::new(
            m.generators()
                .iter()
                .map(|g| Polynomial::from_monomial(ring, g.clone()))
                .collect(),
        )
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    /// Records the zero set of a point-set ideal; the ideal is then known
    /// to be radical and unmixed with the points' primes as associated primes.
    pub fn with_points(mut self, points: Arc<Vec<Vec<F::Elem>>>, primes: Vec<Vec<Polynomial<F>>>) -> Self {
        self.points = Some(points);
        self.primes = Some(Arc::new(primes));
        self
    }

    /// User-supplied associated primes (linear forms), taken on trust.
    pub fn with_primes(mut self, primes: Vec<Vec<Polynomial<F>>>) -> Self {
        self.primes = Some(Arc::new(primes));
        self
    }

    pub fn assert_property(mut self, p: Property) -> Self {
        let slot = match p {
            Property::Unmixed => &mut self.asserted.unmixed,
            Property::Radical => &mut self.asserted.radical,
            Property::CompleteIntersection => &mut self.asserted.complete_intersection,
        };
        *slot = Some(Flag::asserted());
        self
    }

    pub fn points(&self) -> Option<&Arc<Vec<Vec<F::Elem>>>> {
        self.points.as_ref()
    }

    pub fn groebner_basis(&self) -> &[Polynomial<F>] {
        self.gb.get_or_init(|| {
            if self.monomial {
                let m = MonomialIdeal::from_minimal(
                    self.ring.nvars(),
                    self.gens.iter().map(|g| g.leading_monomial().unwrap().clone()).collect(),
                );
                let mut out: Vec<Polynomial<F>> = m
                    .generators()
                    .iter()
                    .map(|g| Polynomial::from_monomial(&self.ring, g.clone()))
                    .collect();
                let order = self.ring.order();
                out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
                out
            } else {
                reduced_groebner_basis(&self.gens)
            }
        })
    }

    pub fn initial_ideal(&self) -> &MonomialIdeal {
        self.initial.get_or_init(|| {
            MonomialIdeal::from_minimal(
                self.ring.nvars(),
                self.groebner_basis()
                    .iter()
                    .map(|g| g.leading_monomial().unwrap().clone())
                    .collect(),
            )
        })
    }

    pub fn is_unit(&self) -> bool {
        self.initial_ideal().is_unit()
    }

    /// Hilbert data of `S/I`; the regularity is filled in when `S/I` is
    /// Cohen–Macaulay by dimension 0, dimension 1 and unmixed, or a
    /// complete intersection.
    pub fn hilbert_data(&self) -> &HilbertData {
        self.hilbert.get_or_init(|| {
            let data = HilbertData::from_numerator(self.ring.nvars(), &hilbert_numerator(self.initial_ideal()));
            let props = self.properties();
            let unmixed = props.unmixed.is_some_and(|f| f.holds);
            let ci = props.complete_intersection.is_some_and(|f| f.holds);
            let cm = self.homogeneous && (data.dim == 0 || (data.dim == 1 && unmixed) || ci);
            data.with_cohen_macaulay(cm)
        })
    }

    pub fn dimension(&self) -> usize {
        self.hilbert_data().dim
    }

    pub fn height(&self) -> usize {
        self.ring.nvars() - self.dimension()
    }

    pub fn degree(&self) -> u64 {
        self.hilbert_data().degree
    }

    pub fn hilbert_function(&self, d: u32) -> u64 {
        self.hilbert_data().hilbert_function(d)
    }

    /// Associated primes of a monomial ideal as variable bitmasks.
    pub fn monomial_primes(&self) -> Option<&[u64]> {
        if !self.monomial {
            return None;
        }
        Some(self.mono_primes.get_or_init(|| self.initial_ideal().associated_primes()))
    }

    /// Associated primes generated by linear forms, when known: computed
    /// for monomial ideals, recorded for point sets, or user-supplied.
    pub fn linear_primes(&self) -> Option<Vec<Vec<Polynomial<F>>>> {
        if let Some(p) = &self.primes {
            return Some(p.as_ref().clone());
        }
        let masks = self.monomial_primes()?;
        Some(
            masks
                .iter()
                .map(|&m| {
                    (0..self.ring.nvars())
                        .filter(|i| m >> i & 1 == 1)
                        .map(|i| Polynomial::var(&self.ring, i))
                        .collect()
                })
                .collect(),
        )
    }

    /// Whether the associated primes came from a computation rather than
    /// from the user.
    pub fn primes_verified(&self) -> bool {
        self.monomial || self.points.is_some()
    }

    /// Property flags, verified where the structure allows it.
    pub fn properties(&self) -> Properties {
        let mut p = self.asserted;
        if let Some(masks) = self.monomial_primes() {
            let unmixed = masks.windows(2).all(|w| w[0].count_ones() == w[1].count_ones());
            p.unmixed = Some(Flag::verified(unmixed));
            p.radical = Some(Flag::verified(self.initial_ideal().is_squarefree()));
        }
        if self.points.is_some() {
            p.unmixed = Some(Flag::verified(true));
            p.radical = Some(Flag::verified(true));
        }
        if self.homogeneous {
            let ci = self.is_complete_intersection();
            p.complete_intersection = Some(Flag::verified(ci));
            if ci && p.unmixed.is_none_or(|f| f.provenance == Provenance::Asserted) {
                p.unmixed = Some(Flag::verified(true));
            }
        }
        p
    }

    fn is_complete_intersection(&self) -> bool {
        *self.ci.get_or_init(|| self.compute_ci())
    }

    fn compute_ci(&self) -> bool {
        let n = self.minimal_generators().len();
        let s = self.ring.nvars();
        // height without going through the cached Hilbert data, which
        // itself consults this flag
        let dim = HilbertData::from_numerator(s, &hilbert_numerator(self.initial_ideal())).dim;
        n == s - dim
    }

    /// A minimal subset of the generators (homogeneous case): generators
    /// in increasing degree, keeping those outside the ideal of the kept ones.
    pub fn minimal_generators(&self) -> &[Polynomial<F>] {
        self.min_gens.get_or_init(|| {
            let mut sorted = self.gens.clone();
            sorted.sort_by_key(|g| g.total_degree().unwrap_or(0));
            let mut kept: Vec<Polynomial<F>> = Vec::new();
            let mut basis: Vec<Polynomial<F>> = Vec::new();
            for g in sorted {
                let r = normal_form(&g, &basis).expect("same ring");
                if !r.is_zero() {
                    kept.push(g);
                    basis = reduced_groebner_basis(&kept);
                }
            }
            kept
        })
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        normal_form(f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality through the reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    /// `I + (polys)`.
    pub fn sum(&self, polys: &[Polynomial<F>]) -> Result<Ideal<F>> {
        let mut gens = self.groebner_basis().to_vec();
        gens.extend(polys.iter().cloned());
        Ideal::new(gens)
    }

    /// `I ∩ J` by eliminating `w` from `w I + (1 - w) J`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.monomial && other.monomial {
            let m = self.initial_ideal().intersect(other.initial_ideal());
            return Ideal::from_monomial_ideal(&self.ring, &m);
        }
        let big = self.ring.elimination_ring("_w");
        let w = Polynomial::var(&big, 0);
        let one_minus_w = &Polynomial::one(&big) - &w;
        let lift = |f: &Polynomial<F>| f.map_into(&big, |m| m.prepend(0));
        let mut gens = Vec::new();
        for f in self.groebner_basis() {
            gens.push(&w * &lift(f));
        }
        for g in other.groebner_basis() {
            gens.push(&one_minus_w * &lift(g));
        }
        let gb = reduced_groebner_basis(&gens);
        let kept: Vec<Polynomial<F>> = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(_, m)| m.exponent(0) == 0))
            .map(|g| g.map_into(&self.ring, |m| m.drop_first()))
            .collect();
        Ideal::new(kept)
    }

    /// `(I : f)`.
    pub fn colon_poly(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !same_ring(&self.ring, f.ring()) {
            return Err(Error::RingMismatch);
        }
        if self.monomial && f.is_monomial() {
            let m = self.initial_ideal().colon_monomial(f.leading_monomial().unwrap());
            return Ideal::from_monomial_ideal(&self.ring, &m);
        }
        let principal = Ideal::new(vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let quotients = inter
            .groebner_basis()
            .iter()
            .map(|g| g.divide_exact(f).expect("element of (f) is divisible by f"))
            .collect();
        Ideal::new(quotients)
    }

    /// `(I : J)` as the intersection of the colons by generators of `J`.
    pub fn colon(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.gens {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("nonempty generators"))
    }

    /// Whether `h` is a non-zero-divisor on `S/I`, i.e. `(I : h) = I`.
    pub fn is_regular_element(&self, h: &Polynomial<F>) -> Result<bool> {
        if h.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !same_ring(&self.ring, h.ring()) {
            return Err(Error::RingMismatch);
        }
        if self.is_unit() {
            return Ok(true);
        }
        if let Some(masks) = self.monomial_primes() {
            // zero divisors form the union of the associated primes
            let in_some = masks
                .iter()
                .any(|&p| h.terms().iter().all(|(_, m)| m.support_mask() & p != 0));
            return Ok(!in_some);
        }
        if let Some(points) = &self.points {
            let field = self.ring.field();
            return Ok(points.iter().all(|p| !field.is_zero(&h.evaluate(p))));
        }
        if self.homogeneous && h.is_homogeneous() {
            // h regular iff the Hilbert series of S/(I,h) is (1 - x^e) that of S/I
            let e = h.total_degree().unwrap() as usize;
            let base = hilbert_numerator(self.initial_ideal());
            let with_h = self.sum(std::slice::from_ref(h))?;
            let got = hilbert_numerator(with_h.initial_ideal());
            let mut expect = base.clone();
            expect.resize(base.len() + e, 0);
            for (i, c) in base.iter().enumerate() {
                expect[i + e] -= c;
            }
            while expect.last() == Some(&0) {
                expect.pop();
            }
            return Ok(got == expect);
        }
        self.colon_poly(h)?.equals(self)
    }

    /// First regular linear form: over `GF(p)` by scanning normalized
    /// coefficient vectors in lexicographic order; over `QQ` trying
    /// `t1 + ... + ts` and then coefficients in `-bound..=bound`.
    pub fn find_regular_linear_form(&self, bound: i64) -> Result<Polynomial<F>> {
        let s = self.ring.nvars();
        let field = self.ring.field();
        let mut tried = 0u64;
        if self.dimension() == 0 {
            return Err(Error::NoRegularLinearForm(0));
        }
        let build = |coeffs: &[F::Elem]| {
            Polynomial::from_terms(
                &self.ring,
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (c.clone(), Monomial::variable(s, i, 1)))
                    .collect(),
            )
        };
        match field.elements() {
            Some(elems) => {
                for v in normalized_vectors(&elems, s) {
                    tried += 1;
                    let h = build(&v);
                    if self.is_regular_element(&h)? {
                        return Ok(h);
                    }
                }
            }
            None => {
                let ones = vec![field.one(); s];
                tried += 1;
                let h = build(&ones);
                if self.is_regular_element(&h)? {
                    return Ok(h);
                }
                let range: Vec<i64> = (-bound..=bound).collect();
                let mut idx = vec![0usize; s];
                loop {
                    let coeffs: Vec<i64> = idx.iter().map(|&i| range[i]).collect();
                    if coeffs.iter().any(|&c| c != 0) && coeffs.iter().any(|&c| c != 1) {
                        tried += 1;
                        let v: Vec<F::Elem> = coeffs.iter().map(|&c| field.from_i64(c)).collect();
                        let h = build(&v);
                        if self.is_regular_element(&h)? {
                            return Ok(h);
                        }
                    }
                    let mut k = s;
                    loop {
                        if k == 0 {
                            return Err(Error::NoRegularLinearForm(tried));
                        }
                        k -= 1;
                        idx[k] += 1;
                        if idx[k] < range.len() {
                            break;
                        }
                        idx[k] = 0;
                    }
                }
            }
        }
        Err(Error::NoRegularLinearForm(tried))
    }

    /// Whether the reduced Gröbner basis consists of linear forms, so the
    /// ideal is a linear prime.
    pub fn is_linear_prime(&self) -> bool {
        !self.is_unit() && self.groebner_basis().iter().all(|g| g.is_homogeneous() && g.total_degree() == Some(1))
    }
}

/// Nonzero vectors over `elems` (zero first, then one) whose first nonzero
/// entry is one, in lexicographic order.
pub fn normalized_vectors<E: Clone>(elems: &[E], s: usize) -> Vec<Vec<E>> {
    let q = elems.len();
    let mut out = Vec::new();
    for lead in (0..s).rev() {
        let free = (s - lead - 1) as u32;
        for mut k in 0..q.pow(free) {
            let mut v = vec![elems[0].clone(); s];
            v[lead] = elems[1].clone();
            for pos in (lead + 1..s).rev() {
                v[pos] = elems[k % q].clone();
                k /= q;
            }
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::{parse_polynomial, parse_ring, AnyRing};

    fn ring_p(decl: &str) -> Arc<PolyRing<PrimeField>> {
        match parse_ring(decl).unwrap() {
            AnyRing::Prime(r) => r,
            _ => unreachable!(),
        }
    }

    fn ring_q(decl: &str) -> Arc<PolyRing<Rationals>> {
        match parse_ring(decl).unwrap() {
            AnyRing::Rational(r) => r,
            _ => unreachable!(),
        }
    }

    fn ideal<F: Field>(r: &Arc<PolyRing<F>>, src: &[&str]) -> Ideal<F> {
        Ideal::new(src.iter().map(|s| parse_polynomial(s, r).unwrap()).collect()).unwrap()
    }

    fn p<F: Field>(r: &Arc<PolyRing<F>>, s: &str) -> Polynomial<F> {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn equality() {
        let r = ring_q("ring QQ[t1,t2]");
        assert!(ideal(&r, &["t1", "t2"]).equals(&ideal(&r, &["t2", "t1+t2"])).unwrap());
        assert!(!ideal(&r, &["t1^2"]).equals(&ideal(&r, &["t1"])).unwrap());
    }

    #[test]
    fn intersections() {
        let r = ring_q("ring QQ[t1,t2,t3]");
        let i = ideal(&r, &["t1+t2", "t3^2"]);
        assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
        let j = ideal(&r, &["t1"]).intersect(&ideal(&r, &["t2"])).unwrap();
        assert!(j.equals(&ideal(&r, &["t1*t2"])).unwrap());
        // non-monomial path
        let a = ideal(&r, &["t1-t2"]);
        let b = ideal(&r, &["t1+t2"]);
        assert!(a.intersect(&b).unwrap().equals(&ideal(&r, &["t1^2-t2^2"])).unwrap());
    }

    #[test]
    fn colons() {
        let r = ring_q("ring QQ[t1,t2]");
        let i = ideal(&r, &["t1^2", "t1*t2", "t2^2"]);
        let c = i.colon_poly(&p(&r, "t1")).unwrap();
        assert!(c.equals(&ideal(&r, &["t1", "t2"])).unwrap());
        // generic path on a binomial ideal
        let i = ideal(&r, &["t1^2-t2^2"]);
        let c = i.colon_poly(&p(&r, "t1-t2")).unwrap();
        assert!(c.equals(&ideal(&r, &["t1+t2"])).unwrap());
        assert_eq!(i.colon_poly(&Polynomial::zero(&r)).unwrap_err(), Error::ZeroDivisor);
    }

    #[test]
    fn regular_elements() {
        let r = ring_q("ring QQ[t1,t2]");
        let i = ideal(&r, &["t1*t2"]);
        assert!(!i.is_regular_element(&p(&r, "t1")).unwrap());
        assert!(i.is_regular_element(&p(&r, "t1+t2")).unwrap());
        let m = ideal(&r, &["t1", "t2"]);
        assert!(!m.is_regular_element(&p(&r, "t1+t2")).unwrap());
        assert!(matches!(m.find_regular_linear_form(2), Err(Error::NoRegularLinearForm(_))));
        // generic path agrees with the colon definition
        let i = ideal(&r, &["t1^2-t2^2"]);
        for h in ["t1", "t1-t2", "t1+t2", "t2"] {
            let h = p(&r, h);
            let by_colon = i.colon_poly(&h).unwrap().equals(&i).unwrap();
            assert_eq!(i.is_regular_element(&h).unwrap(), by_colon);
        }
    }

    #[test]
    fn minimal_generators_and_ci() {
        let r = ring_q("ring QQ[t1,t2]");
        let i = ideal(&r, &["t1", "t1^2", "t2"]);
        assert_eq!(i.minimal_generators().len(), 2);
        let r3 = ring_q("ring QQ[t1,t2,t3]");
        let i = ideal(&r3, &["t1^3", "t2*t3"]);
        assert_eq!(i.minimal_generators().len(), 2);
        assert!(i.properties().complete_intersection.unwrap().holds);
    }

    #[test]
    fn determinantal_example() {
        let r = ring_p("ring GF(3)[t1,t2,t3,t4,t5,t6]");
        let i = ideal(&r, &["t1*t6 - t3*t4", "t2*t6 - t3*t5"]);
        let h = i.hilbert_data();
        assert_eq!((h.dim, h.degree), (4, 4));
        assert_eq!(i.hilbert_function(1), 6);
        assert_eq!(i.hilbert_function(2), 19);
        assert_eq!(h.cm_regularity, Some(2));
        assert_eq!(i.minimal_generators().len(), 2);
        let props = i.properties();
        assert_eq!(props.complete_intersection, Some(Flag::verified(true)));
        assert_eq!(props.unmixed, Some(Flag::verified(true)));
        // in(I) has the same Hilbert function
        let m = i.initial_ideal();
        assert_eq!(m.hilbert_function(1), 6);
        assert_eq!(m.hilbert_function(2), 19);
    }

    #[test]
    fn normalized_linear_forms() {
        let v = normalized_vectors(&[0u32, 1, 2], 3);
        assert_eq!(v.len(), 13);
        assert_eq!(v[0], vec![0, 0, 1]);
        assert_eq!(v[1], vec![0, 1, 0]);
        assert_eq!(v[4], vec![1, 0, 0]);
        assert_eq!(v[12], vec![1, 2, 2]);
    }
}
