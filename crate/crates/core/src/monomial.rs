//! Monomials as exponent vectors, and the term orders used to sort them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// `t^a` for an exponent vector `a`, with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?}", self.exps.as_slice())
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            deg: 0,
        }
    }

    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn variable(nvars: usize, var: usize, power: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[var] = power;
        m.deg = power;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Bit `i` set iff variable `i` (mod 64) occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// `Some((var, power))` when the monomial is a positive power of one variable.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + other.deg,
        }
    }

    /// True when `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Exponent vector with one more variable in front (exponent `first`).
    pub fn prepend(&self, first: u32) -> Monomial {
        let mut exps = Exponents::with_capacity(self.exps.len() + 1);
        exps.push(first);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            deg: self.deg + first,
        }
    }

    /// Drops the first variable.
    pub fn drop_first(&self) -> Monomial {
        Monomial::new(self.exps[1..].iter().copied())
    }

    /// Writes the monomial with the given variable names (`1` for the unit).
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        })
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::Grlex),
            "grevlex" => Ok(OrderKind::Grevlex),
            other => Err(Error::Syntax {
                line: 1,
                column: 1,
                message: format!("unknown monomial order `{other}`"),
            }),
        }
    }
}

/// A term order: kind plus the ranking of variables, largest first.
///
/// The internal elimination variant puts variable 0 in its own lex block
/// ahead of everything else; it is only used for auxiliary rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    rank: Vec<usize>,
    eliminate_first: bool,
}

impl MonomialOrder {
    /// Declaration order `t1 > t2 > ... > ts`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            rank: (0..nvars).collect(),
            eliminate_first: false,
        }
    }

    /// `rank[0]` is the index of the largest variable.
    pub fn with_ranking(kind: OrderKind, rank: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; rank.len()];
        for &i in &rank {
            if i >= rank.len() || seen[i] {
                return Err(Error::InvalidPermutation(format!("{rank:?}")));
            }
            seen[i] = true;
        }
        Ok(MonomialOrder {
            kind,
            rank,
            eliminate_first: false,
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[usize] {
        &self.rank
    }

    pub fn nvars(&self) -> usize {
        self.rank.len() + usize::from(self.eliminate_first)
    }

    pub fn is_default_ranking(&self) -> bool {
        !self.eliminate_first && self.rank.iter().enumerate().all(|(i, &r)| i == r)
    }

    /// Order on one extra leading variable that eliminates it: any monomial
    /// with a higher power of the new variable is larger.
    pub fn eliminating_new_first(&self) -> MonomialOrder {
        assert!(!self.eliminate_first, "nested elimination orders");
        MonomialOrder {
            kind: self.kind,
            rank: self.rank.iter().map(|i| i + 1).collect(),
            eliminate_first: true,
        }
    }

    /// Compares monomials of the same length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() || a.nvars() != self.nvars() {
            return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison, the hot path.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let (da, db) = if self.eliminate_first {
            match ea[0].cmp(&eb[0]) {
                Ordering::Equal => {}
                other => return other,
            }
            (a.degree() - ea[0], b.degree() - eb[0])
        } else {
            (a.degree(), b.degree())
        };
        match self.kind {
            OrderKind::Lex => self.lex(ea, eb),
            OrderKind::Grlex => da.cmp(&db).then_with(|| self.lex(ea, eb)),
            OrderKind::Grevlex => da.cmp(&db).then_with(|| {
                for &i in self.rank.iter().rev() {
                    if ea[i] != eb[i] {
                        return eb[i].cmp(&ea[i]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    #[inline]
    fn lex(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        for &i in &self.rank {
            if ea[i] != eb[i] {
                return ea[i].cmp(&eb[i]);
            }
        }
        Ordering::Equal
    }

    pub fn describe(&self, names: &[String]) -> String {
        let vars: Vec<&str> = self.rank.iter().map(|&i| names[i].as_str()).collect();
        format!("{} ({})", self.kind, vars.join(" > "))
    }
}

/// All exponent vectors of total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial::new(cur.iter().copied()));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::new([])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::new(OrderKind::Lex, 2);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 5])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn grevlex_tie_break() {
        let o = MonomialOrder::new(OrderKind::Grevlex, 3);
        // t1*t3 < t2^2
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[1, 0, 0])), Ordering::Equal);
    }

    #[test]
    fn grevlex_degree_two_table() {
        // t1^2 > t1t2 > t2^2 > t1t3 > t2t3 > t3^2
        let expected = [
            [2, 0, 0],
            [1, 1, 0],
            [0, 2, 0],
            [1, 0, 1],
            [0, 1, 1],
            [0, 0, 2],
        ];
        let o = MonomialOrder::new(OrderKind::Grevlex, 3);
        let mut all = monomials_of_degree(3, 2);
        all.sort_by(|a, b| o.cmp(b, a));
        let got: Vec<Vec<u32>> = all.iter().map(|x| x.exponents().to_vec()).collect();
        assert_eq!(got, expected.iter().map(|e| e.to_vec()).collect::<Vec<_>>());
    }

    #[test]
    fn grlex_and_lex_degree_two_tables() {
        let o = MonomialOrder::new(OrderKind::Grlex, 3);
        let mut all = monomials_of_degree(3, 2);
        all.sort_by(|a, b| o.cmp(b, a));
        let got: Vec<Vec<u32>> = all.iter().map(|x| x.exponents().to_vec()).collect();
        // t1^2 > t1t2 > t1t3 > t2^2 > t2t3 > t3^2
        assert_eq!(
            got,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn permuted_ranking() {
        // t3 > t2 > t1 under lex
        let o = MonomialOrder::with_ranking(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        assert_eq!(o.cmp(&m(&[5, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
        assert!(MonomialOrder::with_ranking(OrderKind::Lex, vec![0, 0, 1]).is_err());
    }

    #[test]
    fn length_mismatch() {
        let o = MonomialOrder::new(OrderKind::Lex, 2);
        assert!(o.compare(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }

    #[test]
    fn elimination_block() {
        let o = MonomialOrder::new(OrderKind::Grevlex, 2).eliminating_new_first();
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn counts_of_degree() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 7).len(), 1);
    }

    fn exps(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, n).prop_map(Monomial::new)
    }

    fn kinds() -> impl Strategy<Value = OrderKind> {
        prop_oneof![Just(OrderKind::Lex), Just(OrderKind::Grlex), Just(OrderKind::Grevlex)]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_total_orders(
            kind in kinds(), a in exps(4), b in exps(4), c in exps(4),
            perm in Just(vec![0usize, 1, 2, 3]).prop_shuffle()
        ) {
            let o = MonomialOrder::with_ranking(kind, perm).unwrap();
            let one = Monomial::one(4);
            if !a.is_one() {
                prop_assert_eq!(o.cmp(&one, &a), Ordering::Less);
            }
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
            prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
            if o.cmp(&a, &b) != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
            }
        }
    }
}
