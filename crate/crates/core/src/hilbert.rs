//! Hilbert series of monomial ideals and the data read off them.

use serde::{Deserialize, Serialize};

use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;

/// Integer polynomial in one variable, coefficient `i` of `x^i`.
pub type UniPoly = Vec<i128>;

fn trim(mut p: UniPoly) -> UniPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut UniPoly, p: &[i128], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn mul_one_minus_power(p: &[i128], e: usize) -> UniPoly {
    let mut out = p.to_vec();
    out.resize(p.len() + e, 0);
    for (i, c) in p.iter().enumerate() {
        out[i + e] -= c;
    }
    out
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let mut seen = 0u64;
    for g in gens {
        let m = g.support_mask();
        if seen & m != 0 {
            return false;
        }
        seen |= m;
    }
    true
}

/// Numerator `N(x)` of the Hilbert series of `S/M` written over `(1-x)^s`.
pub fn hilbert_numerator(m: &MonomialIdeal) -> UniPoly {
    trim(numerator_rec(m))
}

fn numerator_rec(m: &MonomialIdeal) -> UniPoly {
    let gens = m.generators();
    if gens.is_empty() {
        return vec![1];
    }
    if m.is_unit() {
        return vec![0];
    }
    if pairwise_coprime(gens) {
        let mut acc = vec![1i128];
        for g in gens {
            acc = mul_one_minus_power(&acc, g.degree() as usize);
        }
        return acc;
    }
    // Pivot: the variable in most non-pure-power generators, raised to its
    // largest exponent among them.
    let n = m.nvars();
    let mut count = vec![0usize; n];
    let mut maxe = vec![0u32; n];
    for g in gens.iter().filter(|g| g.pure_power().is_none()) {
        for i in g.support() {
            count[i] += 1;
            maxe[i] = maxe[i].max(g.exponent(i));
        }
    }
    let var = (0..n).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).unwrap();
    let pivot = Monomial::variable(n, var, maxe[var]);
    let mut acc = numerator_rec(&m.add(std::slice::from_ref(&pivot)));
    let colon = numerator_rec(&m.colon_monomial(&pivot));
    add_shifted(&mut acc, &colon, maxe[var] as usize);
    acc
}

/// Dimension, degree, h-vector and regularity data of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub nvars: usize,
    pub dim: usize,
    pub degree: u64,
    pub h_vector: Vec<i64>,
    pub a_invariant: i64,
    pub reg_index: u32,
    /// Degree of the h-polynomial, filled in only when `S/I` is known to
    /// be Cohen–Macaulay.
    pub cm_regularity: Option<u32>,
}

/// `C(n, k)` as a polynomial in `n`, valid for negative `n`.
fn binom_poly(n: i128, k: usize) -> i128 {
    let mut num = 1i128;
    let mut den = 1i128;
    for j in 0..k {
        num *= n - j as i128;
        den *= j as i128 + 1;
    }
    num / den
}

impl HilbertData {
    /// Reads the data off the numerator over `(1-x)^s`.
    pub fn from_numerator(nvars: usize, numerator: &[i128]) -> HilbertData {
        let mut h: UniPoly = trim(numerator.to_vec());
        if h.is_empty() {
            return HilbertData {
                nvars,
                dim: 0,
                degree: 0,
                h_vector: Vec::new(),
                a_invariant: 0,
                reg_index: 0,
                cm_regularity: None,
            };
        }
        let mut k = nvars;
        while k > 0 && h.iter().sum::<i128>() == 0 {
            // synthetic division by (1 - x)
            let mut q = vec![0i128; h.len() - 1];
            let mut carry = 0i128;
            for i in 0..h.len() - 1 {
                carry += h[i];
                q[i] = carry;
            }
            h = trim(q);
            k -= 1;
        }
        let degree = h.iter().sum::<i128>();
        let r = h.len() - 1;
        let mut data = HilbertData {
            nvars,
            dim: k,
            degree: degree as u64,
            h_vector: h.iter().map(|&c| c as i64).collect(),
            a_invariant: r as i64 - k as i64,
            reg_index: 0,
            cm_regularity: None,
        };
        let mut n = (data.a_invariant + 1).max(0);
        while n > 0 && data.hilbert_function_i(n - 1) == data.hilbert_polynomial(n - 1) {
            n -= 1;
        }
        data.reg_index = n as u32;
        data
    }

    pub fn of_monomial_ideal(m: &MonomialIdeal) -> HilbertData {
        HilbertData::from_numerator(m.nvars(), &hilbert_numerator(m))
    }

    /// Marks `S/I` as Cohen–Macaulay, exposing the regularity.
    pub fn with_cohen_macaulay(mut self, cm: bool) -> HilbertData {
        self.cm_regularity = if cm && !self.h_vector.is_empty() {
            Some((self.h_vector.len() - 1) as u32)
        } else {
            None
        };
        self
    }

    fn hilbert_function_i(&self, d: i64) -> i128 {
        if d < 0 {
            return 0;
        }
        if self.dim == 0 {
            return self.h_vector.get(d as usize).copied().unwrap_or(0) as i128;
        }
        let k = self.dim;
        let mut acc = 0i128;
        for (i, &c) in self.h_vector.iter().enumerate() {
            let n = d - i as i64;
            if n >= 0 {
                acc += c as i128 * binom_poly(n as i128 + k as i128 - 1, k - 1);
            }
        }
        acc
    }

    /// Value of the Hilbert polynomial at `d`.
    pub fn hilbert_polynomial(&self, d: i64) -> i128 {
        if self.dim == 0 {
            return 0;
        }
        let k = self.dim;
        self.h_vector
            .iter()
            .enumerate()
            .map(|(i, &c)| c as i128 * binom_poly(d as i128 - i as i128 + k as i128 - 1, k - 1))
            .sum()
    }

    /// `H_I(d) = dim_K (S/I)_d`.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        self.hilbert_function_i(d as i64) as u64
    }

    pub fn h_polynomial_degree(&self) -> Option<u32> {
        (!self.h_vector.is_empty()).then(|| (self.h_vector.len() - 1) as u32)
    }
}

/// Hilbert data of a monomial quotient, with the Cohen–Macaulay flag set
/// when it follows from the combinatorics: dimension 0, dimension 1 and
/// unmixed, or pairwise coprime generators (a complete intersection).
pub fn monomial_hilbert_data(m: &MonomialIdeal) -> HilbertData {
    let data = HilbertData::of_monomial_ideal(m);
    let cm = data.dim == 0
        || (data.dim == 1 && m.is_unmixed())
        || pairwise_coprime(m.generators());
    data.with_cohen_macaulay(cm)
}
