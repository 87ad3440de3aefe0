//! Generalized minimum distance, footprint, hyp and Vasconcelos functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::{hilbert_numerator, HilbertData};
use crate::ideal::Ideal;
use crate::linalg::{binomial, gaussian_binomial, max_over_subsets, max_over_subspaces};
use crate::monomial::Monomial;
use crate::monomial_ideal::is_zero_divisor_set;
use crate::poly::Polynomial;

pub mod bound;
pub mod checks;
pub mod ci;
pub mod matrix;
pub mod vnumber;

pub use matrix::InvariantMatrix;

/// Default cap on the number of candidates enumerated for one cell.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Budget from `GMD_BUDGET` when set and valid, else the default.
pub fn budget_from_env() -> u128 {
    std::env::var("GMD_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Delta,
    Fp,
    Hyp,
    Vasconcelos,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Delta => "delta",
            Kind::Fp => "fp",
            Kind::Hyp => "hyp",
            Kind::Vasconcelos => "vasconcelos",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "delta" => Ok(Kind::Delta),
            "fp" => Ok(Kind::Fp),
            "hyp" => Ok(Kind::Hyp),
            "vasconcelos" => Ok(Kind::Vasconcelos),
            other => Err(format!("unknown kind `{other}`")),
        }
    }
}

/// One value of an invariant function.
///
/// When no candidate qualifies the value is the sentinel (the degree for
/// delta, fp and vasconcelos, zero for hyp) and `family_empty` is set.
/// `beyond` marks `r > H_I(d)`, shown as `inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub value: i64,
    pub family_empty: bool,
    pub beyond: bool,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.beyond {
            f.write_str("inf")
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A computed cell together with the first optimal candidate.
#[derive(Clone, Debug)]
pub struct CellResult<F: Field> {
    pub entry: Entry,
    pub witness: Option<Vec<Polynomial<F>>>,
}

/// How the test `(I : (F)) ≠ I` and the degrees are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Use point evaluations or monomial primes when available.
    Auto,
    /// Always go through Gröbner bases of `(I, F)`.
    Generic,
}

/// Evaluates the invariant functions of one ideal.
pub struct Gmd<'a, F: Field> {
    ideal: &'a Ideal<F>,
    budget: u128,
    strategy: Strategy,
}

enum Objective {
    /// maximize deg S/(I,F)
    Hyp,
    /// minimize deg S/(I:(F))
    Colon,
}

impl<'a, F: Field> Gmd<'a, F> {
    pub fn new(ideal: &'a Ideal<F>) -> Self {
        Gmd {
            ideal,
            budget: DEFAULT_BUDGET,
            strategy: Strategy::Auto,
        }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn ideal(&self) -> &Ideal<F> {
        self.ideal
    }

    pub fn budget(&self) -> u128 {
        self.budget
    }

    fn degree(&self) -> i64 {
        self.ideal.degree() as i64
    }

    /// Candidate count for a cell of the given kind, `None` when `r > H(d)`.
    pub fn estimate(&self, kind: Kind, d: u32, r: usize) -> Option<u128> {
        let h = self.ideal.hilbert_function(d) as usize;
        if r > h {
            return None;
        }
        let q = self.ideal.ring().field().size();
        Some(match (kind, q) {
            (Kind::Fp, _) => binomial(h, r),
            (Kind::Delta, None) if self.ideal.is_monomial() => binomial(h, r),
            (_, Some(q)) => gaussian_binomial(h, r, q),
            (_, None) => u128::MAX,
        })
    }

    fn check_budget(&self, kind: Kind, d: u32, r: usize) -> Result<()> {
        if let Some(est) = self.estimate(kind, d, r) {
            if est > self.budget {
                return Err(Error::BudgetExceeded {
                    estimate: est,
                    budget: self.budget,
                });
            }
        }
        Ok(())
    }

    fn beyond(&self, kind: Kind) -> CellResult<F> {
        let value = if kind == Kind::Hyp { 0 } else { self.degree() };
        CellResult {
            entry: Entry {
                value,
                family_empty: true,
                beyond: true,
            },
            witness: None,
        }
    }

    pub fn cell(&self, kind: Kind, d: u32, r: usize) -> Result<CellResult<F>> {
        match kind {
            Kind::Delta => self.delta(d, r),
            Kind::Fp => self.footprint(d, r),
            Kind::Hyp => self.hyp(d, r),
            Kind::Vasconcelos => self.vasconcelos(d, r),
        }
    }

    /// `δ_I(d,r)`. Over an infinite field only monomial ideals are
    /// accepted, and the value is computed through the footprint.
    pub fn delta(&self, d: u32, r: usize) -> Result<CellResult<F>> {
        if self.ideal.ring().field().size().is_none() {
            if self.ideal.is_monomial() {
                return self.footprint(d, r);
            }
            return Err(Error::InfiniteField);
        }
        let h = self.hyp(d, r)?;
        let deg = self.degree();
        let mut entry = h.entry;
        entry.value = deg - entry.value;
        if entry.family_empty {
            entry.value = deg;
        }
        Ok(CellResult {
            entry,
            witness: h.witness,
        })
    }

    /// `hyp_I(d,r)`: the largest `deg S/(I,F)` over the family.
    pub fn hyp(&self, d: u32, r: usize) -> Result<CellResult<F>> {
        self.search(Kind::Hyp, d, r, Objective::Hyp)
    }

    /// `ϑ_I(d,r)`: the smallest `deg S/(I:(F))` over the family.
    pub fn vasconcelos(&self, d: u32, r: usize) -> Result<CellResult<F>> {
        self.search(Kind::Vasconcelos, d, r, Objective::Colon)
    }

    fn search(&self, kind: Kind, d: u32, r: usize, objective: Objective) -> Result<CellResult<F>> {
        if r == 0 {
            return Err(Error::RankOutOfRange { r, k: 0 });
        }
        let field = self.ideal.ring().field();
        let Some(elems) = field.elements() else {
            return Err(Error::InfiniteField);
        };
        let order = self.ideal.ring().order();
        let std = self.ideal.initial_ideal().standard_monomials(d, order);
        if r > std.len() {
            return Ok(self.beyond(kind));
        }
        self.check_budget(kind, d, r)?;
        let deg = self.degree();
        let ring = self.ideal.ring();
        let build = |m: &[Vec<F::Elem>]| -> Vec<Polynomial<F>> {
            m.iter()
                .map(|row| {
                    Polynomial::from_sorted_terms(
                        ring,
                        row.iter()
                            .zip(&std)
                            .filter(|(c, _)| !field.is_zero(c))
                            .map(|(c, mono)| (c.clone(), mono.clone()))
                            .collect(),
                    )
                })
                .collect()
        };
        let best = match (self.strategy, self.ideal.points()) {
            (Strategy::Auto, Some(points)) => {
                // evaluations of the standard monomials at every point
                let evals: Vec<Vec<F::Elem>> = std
                    .iter()
                    .map(|m| {
                        let p = Polynomial::from_monomial(ring, m.clone());
                        points.iter().map(|pt| p.evaluate(pt)).collect()
                    })
                    .collect();
                let n = points.len();
                max_over_subspaces(&elems, std.len(), r, |m| {
                    let mut zeros = 0i64;
                    for pt in 0..n {
                        let all_vanish = m.iter().all(|row| {
                            let mut acc = field.zero();
                            for (c, e) in row.iter().zip(&evals) {
                                if !field.is_zero(c) {
                                    acc = field.add(&acc, &field.mul(c, &e[pt]));
                                }
                            }
                            field.is_zero(&acc)
                        });
                        if all_vanish {
                            zeros += 1;
                        }
                    }
                    if zeros == 0 {
                        return None;
                    }
                    Some(match objective {
                        Objective::Hyp => zeros,
                        Objective::Colon => -(n as i64 - zeros),
                    })
                })
            }
            _ => {
                let unmixed = self.ideal.properties().unmixed.is_some_and(|f| f.holds);
                let dim = self.ideal.dimension();
                let mono_primes = match self.strategy {
                    Strategy::Auto => self.ideal.monomial_primes(),
                    Strategy::Generic => None,
                };
                max_over_subspaces(&elems, std.len(), r, |m| {
                    let fs = build(m);
                    let qualifies_mono = mono_primes.map(|primes| {
                        primes.iter().any(|&p| {
                            fs.iter()
                                .all(|f| f.terms().iter().all(|(_, t)| t.support_mask() & p != 0))
                        })
                    });
                    if qualifies_mono == Some(false) {
                        return None;
                    }
                    match objective {
                        Objective::Hyp => {
                            let j = self.ideal.sum(&fs).expect("same ring");
                            let hd = j.hilbert_data();
                            let qualifies = match qualifies_mono {
                                Some(q) => q,
                                None if unmixed => hd.dim == dim,
                                None => self.colon_differs(&fs),
                            };
                            qualifies.then_some(hd.degree as i64)
                        }
                        Objective::Colon => {
                            let qualifies = match qualifies_mono {
                                Some(q) => q,
                                None if unmixed => {
                                    self.ideal.sum(&fs).expect("same ring").dimension() == dim
                                }
                                None => self.colon_differs(&fs),
                            };
                            if !qualifies {
                                return None;
                            }
                            let c = self.colon_ideal(&fs);
                            Some(-(c.degree() as i64))
                        }
                    }
                })
            }
        };
        Ok(match best {
            None => CellResult {
                entry: Entry {
                    value: if kind == Kind::Hyp { 0 } else { deg },
                    family_empty: true,
                    beyond: false,
                },
                witness: None,
            },
            Some(b) => CellResult {
                entry: Entry {
                    value: b.score.abs(),
                    family_empty: false,
                    beyond: false,
                },
                witness: Some(build(&b.witness)),
            },
        })
    }

    fn colon_ideal(&self, fs: &[Polynomial<F>]) -> Ideal<F> {
        let fi = Ideal::new(fs.to_vec()).expect("nonzero forms");
        self.ideal.colon(&fi).expect("same ring")
    }

    fn colon_differs(&self, fs: &[Polynomial<F>]) -> bool {
        let c = self.colon_ideal(fs);
        !c.equals(self.ideal).expect("same ring")
    }

    /// `fp_I(d,r)` over `r`-subsets of degree-`d` standard monomials.
    pub fn footprint(&self, d: u32, r: usize) -> Result<CellResult<F>> {
        if r == 0 {
            return Err(Error::RankOutOfRange { r, k: 0 });
        }
        let init = self.ideal.initial_ideal();
        let order = self.ideal.ring().order();
        let std = init.standard_monomials(d, order);
        if r > std.len() {
            return Ok(self.beyond(Kind::Fp));
        }
        self.check_budget(Kind::Fp, d, r)?;
        let deg = self.degree();
        let primes = init.associated_primes();
        let s = self.ideal.ring().nvars();
        let best = max_over_subsets(std.len(), r, |idx| {
            let ms: Vec<Monomial> = idx.iter().map(|&i| std[i].clone()).collect();
            if !is_zero_divisor_set(&primes, &ms) {
                return None;
            }
            let sum = init.add(&ms);
            Some(HilbertData::from_numerator(s, &hilbert_numerator(&sum)).degree as i64)
        });
        let ring = self.ideal.ring();
        Ok(match best {
            None => CellResult {
                entry: Entry {
                    value: deg,
                    family_empty: true,
                    beyond: false,
                },
                witness: None,
            },
            Some(b) => CellResult {
                entry: Entry {
                    value: deg - b.score,
                    family_empty: false,
                    beyond: false,
                },
                witness: Some(
                    b.witness
                        .iter()
                        .map(|&i| Polynomial::from_monomial(ring, std[i].clone()))
                        .collect(),
                ),
            },
        })
    }

    /// `deg S/(I,F)` for explicit forms, with whether `(I:(F)) ≠ I`.
    pub fn evaluate_family(&self, fs: &[Polynomial<F>]) -> Result<(bool, u64)> {
        let j = self.ideal.sum(fs)?;
        let qualifies = if self.ideal.properties().unmixed.is_some_and(|f| f.holds) {
            j.dimension() == self.ideal.dimension()
        } else {
            self.colon_differs(fs)
        };
        Ok((qualifies, j.degree()))
    }
}
