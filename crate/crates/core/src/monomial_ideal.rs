//! Monomial ideals as antichains of exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};

/// A monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// `(t_i^{e_i} : i in support)`, an irreducible monomial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IrreducibleComponent {
    /// (variable, exponent) pairs, variables increasing.
    pub powers: Vec<(usize, u32)>,
}

impl IrreducibleComponent {
    pub fn support_mask(&self) -> u64 {
        self.powers.iter().fold(0, |m, &(i, _)| m | 1 << i)
    }

    pub fn height(&self) -> usize {
        self.powers.len()
    }

    pub fn to_ideal(&self, nvars: usize) -> MonomialIdeal {
        MonomialIdeal::from_minimal(
            nvars,
            self.powers.iter().map(|&(i, e)| Monomial::variable(nvars, i, e)).collect(),
        )
    }

    fn exponent(&self, var: usize) -> Option<u32> {
        self.powers.iter().find(|p| p.0 == var).map(|p| p.1)
    }

    fn contains_all_of(&self, other: &IrreducibleComponent) -> bool {
        // An irreducible ideal contains t_i^e iff it has t_i^f with f <= e,
        // so containment of ideals is a per-generator check.
        other
            .powers
            .iter()
            .all(|&(i, e)| self.exponent(i).is_some_and(|f| f <= e))
    }

    /// Whether the monomial lies in the component.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.powers.iter().any(|&(i, e)| m.exponent(i) >= e)
    }
}

/// Removes every monomial divisible by another; the result is sorted.
fn antichain(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    ms.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(ms.len());
    for m in ms {
        let mask = m.support_mask();
        if !out.iter().any(|g| g.support_mask() & !mask == 0 && g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Minimal generating set of the ideal generated by `monomials`.
pub fn minimalize(nvars: usize, monomials: Vec<Monomial>) -> Result<MonomialIdeal> {
    if monomials.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    for m in &monomials {
        if m.nvars() != nvars {
            return Err(Error::LengthMismatch(nvars, m.nvars()));
        }
    }
    Ok(MonomialIdeal {
        nvars,
        gens: antichain(monomials),
    })
}

impl MonomialIdeal {
    pub(crate) fn from_minimal(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            nvars,
            gens: antichain(gens),
        }
    }

    /// The zero ideal, used as a base case (the complement is all of `S`).
    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    /// The irrelevant ideal `(t_1, ..., t_s)`.
    pub fn maximal(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: (0..nvars).map(|i| Monomial::variable(nvars, i, 1)).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        self.gens.iter().any(|g| g.support_mask() & !mask == 0 && g.divides(m))
    }

    /// `self ⊇ other`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `self + (monomials)`.
    pub fn add(&self, monomials: &[Monomial]) -> MonomialIdeal {
        let mut all = self.gens.clone();
        all.extend(monomials.iter().cloned());
        MonomialIdeal::from_minimal(self.nvars, all)
    }

    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(m)).expect("gcd divides"))
            .collect();
        MonomialIdeal::from_minimal(self.nvars, gens)
    }

    /// `(self : other)`, the intersection of the colons by each generator.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let c = self.colon_monomial(g);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.unwrap_or_else(|| MonomialIdeal::from_minimal(self.nvars, vec![Monomial::one(self.nvars)]))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::from_minimal(self.nvars, gens)
    }

    /// Irredundant decomposition into irreducible components, sorted.
    ///
    /// Generators are added one at a time; a component missing the new
    /// generator `g` splits into one component per variable of `g`.
    pub fn irreducible_decomposition(&self) -> Vec<IrreducibleComponent> {
        if self.is_zero() || self.is_unit() {
            return Vec::new();
        }
        let mut comps = vec![IrreducibleComponent { powers: Vec::new() }];
        let mut started = false;
        for g in &self.gens {
            let mut next: Vec<IrreducibleComponent> = Vec::new();
            for c in comps {
                if started && c.contains_monomial(g) {
                    next.push(c);
                    continue;
                }
                for i in g.support() {
                    let e = g.exponent(i);
                    let mut powers: Vec<(usize, u32)> = c.powers.clone();
                    match powers.iter_mut().find(|p| p.0 == i) {
                        Some(p) => p.1 = p.1.min(e),
                        None => {
                            powers.push((i, e));
                            powers.sort();
                        }
                    }
                    next.push(IrreducibleComponent { powers });
                }
            }
            started = true;
            next.sort();
            next.dedup();
            // keep the inclusion-minimal components
            let keep: Vec<bool> = (0..next.len())
                .map(|a| {
                    !(0..next.len()).any(|b| b != a && next[a].contains_all_of(&next[b]))
                })
                .collect();
            comps = next
                .into_iter()
                .zip(keep)
                .filter_map(|(c, k)| k.then_some(c))
                .collect();
        }
        comps.sort();
        comps
    }

    /// Associated primes as variable-subset bitmasks, sorted.
    pub fn associated_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .irreducible_decomposition()
            .iter()
            .map(|c| c.support_mask())
            .collect();
        ps.sort();
        ps.dedup();
        ps
    }

    /// Minimal primes among the associated ones.
    pub fn minimal_primes(&self) -> Vec<u64> {
        let ps = self.associated_primes();
        ps.iter()
            .copied()
            .filter(|&p| !ps.iter().any(|&q| q != p && q & !p == 0))
            .collect()
    }

    pub fn is_unmixed(&self) -> bool {
        let ps = self.associated_primes();
        ps.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// Krull dimension of `S/M`.
    pub fn dimension(&self) -> usize {
        if self.is_unit() {
            return 0;
        }
        let h = self
            .associated_primes()
            .iter()
            .map(|p| p.count_ones() as usize)
            .min()
            .unwrap_or(0);
        self.nvars - h
    }

    /// Whether every generator uses exponents at most one.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// Degree-`d` monomials outside the ideal, decreasing under `order`.
    pub fn standard_monomials(&self, d: u32, order: &MonomialOrder) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars];
        self.backtrack(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| order.cmp(b, a));
        out
    }

    fn backtrack(&self, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let m = Monomial::new(cur.iter().copied());
        if self.contains(&m) {
            return;
        }
        if pos + 1 == self.nvars {
            cur[pos] = left;
            let m = Monomial::new(cur.iter().copied());
            if !self.contains(&m) {
                out.push(m);
            }
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            self.backtrack(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }

    /// Number of degree-`d` standard monomials.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        let mut count = 0u64;
        let mut cur = vec![0u32; self.nvars];
        self.count_rec(0, d, &mut cur, &mut count);
        count
    }

    fn count_rec(&self, pos: usize, left: u32, cur: &mut Vec<u32>, count: &mut u64) {
        if self.contains(&Monomial::new(cur.iter().copied())) {
            return;
        }
        if pos + 1 == self.nvars {
            cur[pos] = left;
            if !self.contains(&Monomial::new(cur.iter().copied())) {
                *count += 1;
            }
            cur[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            self.count_rec(pos + 1, left - e, cur, count);
        }
        cur[pos] = 0;
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Whether `(M : (mons)) ≠ M`, given the associated primes of `M` as
/// bitmasks: true iff some associated prime contains every monomial.
pub fn is_zero_divisor_set(primes: &[u64], mons: &[Monomial]) -> bool {
    primes
        .iter()
        .any(|&p| mons.iter().all(|m| m.support_mask() & p != 0))
}

/// Orders components by their prime, then exponents; used for reports.
pub fn compare_components(a: &IrreducibleComponent, b: &IrreducibleComponent) -> Ordering {
    a.support_mask().cmp(&b.support_mask()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::OrderKind;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        minimalize(n, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    fn reintersect(n: usize, comps: &[IrreducibleComponent]) -> MonomialIdeal {
        comps
            .iter()
            .map(|c| c.to_ideal(n))
            .reduce(|a, b| a.intersect(&b))
            .unwrap()
    }

    #[test]
    fn minimalize_drops_multiples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]).generators(), &[m(&[1, 0])]);
        assert_eq!(ideal(3, &[&[3, 0, 0], &[0, 1, 1]]).generators().len(), 2);
        assert_eq!(minimalize(2, vec![]), Err(Error::ZeroIdeal));
    }

    #[test]
    fn colon_examples() {
        assert_eq!(ideal(1, &[&[2]]).colon_monomial(&m(&[1])), ideal(1, &[&[1]]));
        assert_eq!(
            ideal(3, &[&[3, 0, 0], &[0, 1, 1]]).colon_monomial(&m(&[0, 1, 0])),
            ideal(3, &[&[3, 0, 0], &[0, 0, 1]])
        );
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]).colon_monomial(&m(&[1, 0])),
            ideal(2, &[&[1, 0], &[0, 1]])
        );
    }

    #[test]
    fn decomposition_examples() {
        let i = ideal(2, &[&[1, 1]]);
        let c = i.irreducible_decomposition();
        assert_eq!(c.len(), 2);
        assert_eq!(i.associated_primes(), vec![0b01, 0b10]);
        assert!(i.is_unmixed());

        let i = ideal(3, &[&[3, 0, 0], &[0, 1, 1]]);
        let c = i.irreducible_decomposition();
        assert_eq!(
            c,
            vec![
                IrreducibleComponent { powers: vec![(0, 3), (1, 1)] },
                IrreducibleComponent { powers: vec![(0, 3), (2, 1)] },
            ]
        );
        assert_eq!(reintersect(3, &c), i);

        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.associated_primes(), vec![0b01, 0b11]);
        assert!(!i.is_unmixed());
        assert_eq!(i.minimal_primes(), vec![0b01]);
    }

    #[test]
    fn standard_monomials_examples() {
        let i = ideal(3, &[&[3, 0, 0], &[0, 1, 1]]);
        let o = MonomialOrder::new(OrderKind::Grevlex, 3);
        assert_eq!(i.standard_monomials(1, &o).len(), 3);
        assert_eq!(i.standard_monomials(3, &o).len(), 6);
        assert_eq!(MonomialIdeal::zero(3).standard_monomials(2, &o).len(), 6);
        let sm = i.standard_monomials(2, &o);
        for w in sm.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn dimension_and_maximal() {
        assert_eq!(MonomialIdeal::maximal(3).dimension(), 0);
        assert_eq!(ideal(3, &[&[3, 0, 0], &[0, 1, 1]]).dimension(), 1);
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..4, 4), 1..6).prop_filter_map(
            "nonunit",
            |gs| {
                let i = minimalize(4, gs.into_iter().map(Monomial::new).collect()).ok()?;
                (!i.is_unit()).then_some(i)
            },
        )
    }

    proptest! {
        #[test]
        fn decomposition_reintersects(i in arb_ideal()) {
            let c = i.irreducible_decomposition();
            prop_assert_eq!(reintersect(4, &c), i.clone());
            // irredundant: no component contains another
            for a in 0..c.len() {
                for b in 0..c.len() {
                    if a != b {
                        prop_assert!(!c[a].contains_all_of(&c[b]));
                    }
                }
            }
        }

        #[test]
        fn minimal_primes_of_intersection_are_associated(a in arb_ideal(), b in arb_ideal()) {
            let both = a.intersect(&b);
            let ass = both.associated_primes();
            for p in both.minimal_primes() {
                prop_assert!(ass.contains(&p));
            }
            let mut union: Vec<u64> = a.minimal_primes();
            union.extend(b.minimal_primes());
            let mut expected: Vec<u64> = union
                .iter()
                .copied()
                .filter(|&p| !union.iter().any(|&q| q != p && q & !p == 0))
                .collect();
            expected.sort();
            expected.dedup();
            prop_assert_eq!(both.minimal_primes(), expected);
        }

        #[test]
        fn count_matches_enumeration(i in arb_ideal(), d in 0u32..6) {
            let o = MonomialOrder::new(OrderKind::Grevlex, 4);
            prop_assert_eq!(i.standard_monomials(d, &o).len() as u64, i.hilbert_function(d));
        }

        #[test]
        fn colon_by_product_is_iterated(i in arb_ideal(), a in prop::collection::vec(0u32..3, 4), b in prop::collection::vec(0u32..3, 4)) {
            let (a, b) = (Monomial::new(a), Monomial::new(b));
            prop_assert_eq!(i.colon_monomial(&a.mul(&b)), i.colon_monomial(&a).colon_monomial(&b));
        }
    }
}
