//! Buchberger's algorithm with the Gebauer–Möller criteria.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{same_ring, PolyRing, Polynomial, Term};

/// Leading monomials of a basis with their support masks, for fast
/// divisor lookup.
struct Divisors {
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    live: Vec<bool>,
}

impl Divisors {
    fn new() -> Self {
        Divisors {
            lms: Vec::new(),
            masks: Vec::new(),
            live: Vec::new(),
        }
    }

    fn push(&mut self, lm: Monomial) {
        self.masks.push(lm.support_mask());
        self.lms.push(lm);
        self.live.push(true);
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.lms.len())
            .find(|&i| self.live[i] && self.masks[i] & !mask == 0 && self.lms[i].divides(m))
    }
}

/// Subtracts `c * q * g` from `p[start..]` where `g` is monic and `g[0]`
/// cancels `p[start]`.
fn reduce_step<F: Field>(
    field: &F,
    ring: &PolyRing<F>,
    p: &[Term<F>],
    start: usize,
    g: &[Term<F>],
    q: &Monomial,
) -> Vec<Term<F>> {
    let order = ring.order();
    let c = p[start].0.clone();
    let a = &p[start + 1..];
    let b = &g[1..];
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    // shifted tail of g is produced lazily
    let mut shifted: Option<Monomial> = None;
    while i < a.len() && j < b.len() {
        let bm = shifted.get_or_insert_with(|| b[j].1.mul(q));
        match order.cmp(&a[i].1, bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let m = shifted.take().unwrap();
                out.push((field.neg(&field.mul(&c, &b[j].0)), m));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.sub(&a[i].0, &field.mul(&c, &b[j].0));
                if !field.is_zero(&v) {
                    out.push((v, a[i].1.clone()));
                }
                shifted = None;
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    while j < b.len() {
        let m = match shifted.take() {
            Some(m) => m,
            None => b[j].1.mul(q),
        };
        out.push((field.neg(&field.mul(&c, &b[j].0)), m));
        j += 1;
    }
    out
}

/// Full reduction of `terms` by the monic polynomials `basis` (indexed
/// through `div`).
fn full_reduce<F: Field>(
    field: &F,
    ring: &PolyRing<F>,
    mut p: Vec<Term<F>>,
    basis: &[Vec<Term<F>>],
    div: &Divisors,
) -> Vec<Term<F>> {
    let mut done: Vec<Term<F>> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        match div.find(&p[start].1) {
            Some(k) => {
                let q = p[start].1.div(&div.lms[k]).expect("divisor");
                p = reduce_step(field, ring, &p, start, &basis[k], &q);
                start = 0;
            }
            None => {
                done.push(p[start].clone());
                start += 1;
            }
        }
    }
    done
}

fn monic_terms<F: Field>(field: &F, mut t: Vec<Term<F>>) -> Vec<Term<F>> {
    if let Some((lc, _)) = t.first() {
        if !field.is_one(lc) {
            let inv = field.inv(lc);
            for term in t.iter_mut() {
                term.0 = field.mul(&term.0, &inv);
            }
        }
    }
    t
}

/// Remainder of `f` on division by `basis`; no term of the result is
/// divisible by a leading monomial of the basis.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>]) -> Result<Polynomial<F>> {
    for g in basis {
        if !same_ring(f.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let field = f.field();
    let mut div = Divisors::new();
    let mut monic = Vec::new();
    for g in basis.iter().filter(|g| !g.is_zero()) {
        div.push(g.leading_monomial().unwrap().clone());
        monic.push(g.monic().terms().to_vec());
    }
    let r = full_reduce(field, f.ring(), f.terms().to_vec(), &monic, &div);
    Ok(Polynomial::from_sorted_terms(f.ring(), r))
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let field = f.field();
    let (fm, gm) = match (f.leading_monomial(), g.leading_monomial()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Polynomial::zero(f.ring()),
    };
    let l = fm.lcm(gm);
    let a = f.mul_term(&field.inv(f.leading_coefficient().unwrap()), &l.div(fm).unwrap());
    let b = g.mul_term(&field.inv(g.leading_coefficient().unwrap()), &l.div(gm).unwrap());
    &a - &b
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine<'a, F: Field> {
    ring: &'a Arc<PolyRing<F>>,
    polys: Vec<Vec<Term<F>>>,
    sugar: Vec<u32>,
    div: Divisors,
    pairs: Vec<Pair>,
}

impl<'a, F: Field> Engine<'a, F> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.div.lms[i]
    }

    /// Gebauer–Möller update after appending basis element `h`.
    fn update(&mut self, h: usize) {
        let hm = self.lm(h).clone();
        let candidates: Vec<usize> = (0..h).filter(|&g| self.div.live[g]).collect();
        let lcms: Vec<Monomial> = candidates.iter().map(|&g| self.lm(g).lcm(&hm)).collect();
        let coprime: Vec<bool> = candidates.iter().map(|&g| self.lm(g).is_coprime(&hm)).collect();
        let n = candidates.len();
        // Criteria M and F: walk the new pairs in order, dropping one whose lcm
        // is a multiple of a pending or already kept pair's lcm; coprime pairs
        // are kept here so that they shadow their lcm class, then discarded.
        let mut keep = vec![false; n];
        for a in 0..n {
            let shadowed = (a + 1..n).any(|b| lcms[b].divides(&lcms[a]))
                || (0..a).any(|b| keep[b] && lcms[b].divides(&lcms[a]));
            keep[a] = coprime[a] || !shadowed;
        }
        // Criterion B on old pairs.
        let div = &self.div;
        self.pairs.retain(|p| {
            !(hm.divides(&p.lcm)
                && div.lms[p.i].lcm(&hm) != p.lcm
                && div.lms[p.j].lcm(&hm) != p.lcm)
        });
        for a in 0..n {
            if keep[a] && !coprime[a] {
                let g = candidates[a];
                let sg = self.sugar[g] + lcms[a].degree() - self.lm(g).degree();
                let sh = self.sugar[h] + lcms[a].degree() - hm.degree();
                self.pairs.push(Pair {
                    i: g,
                    j: h,
                    lcm: lcms[a].clone(),
                    sugar: sg.max(sh),
                });
            }
        }
        for g in candidates {
            if hm.divides(self.lm(g)) {
                self.div.live[g] = false;
            }
        }
    }

    fn add(&mut self, terms: Vec<Term<F>>, sugar: u32) {
        let lm = terms[0].1.clone();
        self.polys.push(terms);
        self.sugar.push(sugar);
        self.div.push(lm);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let c = a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm));
            if c == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Vec<Term<F>> {
        let field = self.ring.field();
        let f = Polynomial::from_sorted_terms(self.ring, self.polys[p.i].clone());
        let g = Polynomial::from_sorted_terms(self.ring, self.polys[p.j].clone());
        let a = f.mul_term(&field.one(), &p.lcm.div(self.lm(p.i)).unwrap());
        let b = g.mul_term(&field.one(), &p.lcm.div(self.lm(p.j)).unwrap());
        (&a - &b).into_terms()
    }
}

fn poly_sugar<F: Field>(t: &[Term<F>]) -> u32 {
    t.iter().map(|x| x.1.degree()).max().unwrap_or(0)
}

/// The reduced Gröbner basis of the ideal generated by `gens`, monic and
/// sorted by increasing leading monomial. The unit ideal gives `[1]`; the
/// zero ideal gives an empty basis.
pub fn reduced_groebner_basis<F: Field>(gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let ring = first.ring().clone();
    let field = ring.field().clone();
    let mut engine = Engine {
        ring: &ring,
        polys: Vec::new(),
        sugar: Vec::new(),
        div: Divisors::new(),
        pairs: Vec::new(),
    };
    // Insert generators in increasing order, each reduced by the previous.
    let mut input: Vec<&Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    input.sort_by(|a, b| {
        ring.order()
            .cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then(a.len().cmp(&b.len()))
    });
    for g in input {
        let s = poly_sugar::<F>(g.terms());
        let r = full_reduce(&field, &ring, g.terms().to_vec(), &engine.polys, &engine.div);
        if !r.is_empty() {
            if r[0].1.is_one() {
                return vec![Polynomial::one(&ring)];
            }
            engine.add(monic_terms(&field, r), s);
        }
    }
    while let Some(pair) = engine.select() {
        let sp = engine.spoly(&pair);
        let r = full_reduce(&field, &ring, sp, &engine.polys, &engine.div);
        if r.is_empty() {
            continue;
        }
        if r[0].1.is_one() {
            return vec![Polynomial::one(&ring)];
        }
        engine.add(monic_terms(&field, r), pair.sugar);
    }
    // Interreduce the surviving elements.
    let live: Vec<usize> = (0..engine.polys.len()).filter(|&i| engine.div.live[i]).collect();
    let mut out = Vec::with_capacity(live.len());
    for &i in &live {
        let mut others = Divisors::new();
        let mut bodies = Vec::new();
        for &j in &live {
            if j != i {
                others.push(engine.div.lms[j].clone());
                bodies.push(engine.polys[j].clone());
            }
        }
        let head = engine.polys[i][0].clone();
        let tail = full_reduce(&field, &ring, engine.polys[i][1..].to_vec(), &bodies, &others);
        let mut terms = Vec::with_capacity(tail.len() + 1);
        terms.push(head);
        terms.extend(tail);
        out.push(Polynomial::from_sorted_terms(&ring, terms));
    }
    out.sort_by(|a, b| ring.order().cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Checks Buchberger's criterion directly: every S-polynomial reduces to 0.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            match normal_form(&s, basis) {
                Ok(r) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}

/// Whether `basis` is reduced: monic, and no term of any element is
/// divisible by another element's leading monomial.
pub fn is_reduced<F: Field>(basis: &[Polynomial<F>]) -> bool {
    for (i, g) in basis.iter().enumerate() {
        if !g.field().is_one(g.leading_coefficient().unwrap()) {
            return false;
        }
        for (j, h) in basis.iter().enumerate() {
            if i == j {
                continue;
            }
            let lm = h.leading_monomial().unwrap();
            if g.terms().iter().any(|(_, m)| lm.divides(m)) {
                return false;
            }
        }
    }
    true
}
