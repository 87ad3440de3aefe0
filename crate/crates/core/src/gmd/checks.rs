//! Property checks on computed invariant matrices.

use std::fmt;

use serde::Serialize;

use super::matrix::InvariantMatrix;
use super::vnumber::{reg_delta, socle_degree, v_number};
use super::{Gmd, Kind};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{Flag, Provenance};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Status {
    Pass { note: Option<String> },
    Fail { detail: String },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    /// How the hypotheses of the property were established.
    pub hypotheses: Option<Provenance>,
    #[serde(flatten)]
    pub status: Status,
}

impl CheckItem {
    pub fn is_failure(&self) -> bool {
        matches!(self.status, Status::Fail { .. })
    }
}

impl fmt::Display for CheckItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hyp = match self.hypotheses {
            Some(Provenance::Verified) => " [hypotheses verified]",
            Some(Provenance::Asserted) => " [hypotheses asserted]",
            None => "",
        };
        match &self.status {
            Status::Pass { note: None } => write!(f, "pass     {}{hyp}", self.name),
            Status::Pass { note: Some(n) } => write!(f, "pass     {}{hyp} ({n})", self.name),
            Status::Fail { detail } => write!(f, "FAIL     {}{hyp}: {detail}", self.name),
            Status::Skipped { reason } => write!(f, "skipped  {}: {reason}", self.name),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    /// A failure whose hypotheses were all verified: a counterexample.
    pub fn has_verified_violation(&self) -> bool {
        self.items
            .iter()
            .any(|i| i.is_failure() && i.hypotheses == Some(Provenance::Verified))
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.items {
            writeln!(f, "{i}")?;
        }
        Ok(())
    }
}

pub const FP_LE_DELTA: &str = "fp <= delta";
pub const ROWS: &str = "delta rows non-decreasing, 1 <= delta <= deg";
pub const COLUMNS: &str = "delta columns non-increasing";
pub const DELTA_EQ_THETA: &str = "delta = vasconcelos";
pub const DELTA_EQ_FP: &str = "delta = fp for monomial ideals";
pub const SINGLETON: &str = "delta(d) <= deg - H(d) + 1";
pub const FULL_RANK: &str = "delta(d, H(d)) = deg";
pub const REG_DELTA: &str = "reg(delta) = v, delta(d) = 1 exactly for d >= v";
pub const SOCLE: &str = "s <= v_p <= reg";
pub const STRICT_COLUMNS: &str = "delta columns strictly decrease to r";
pub const HIERARCHY: &str = "weight hierarchy r <= delta_r <= n - k + r, strictly increasing";

/// Combined provenance of several hypotheses; `None` if one fails or is unknown.
fn combine(flags: &[Option<Flag>]) -> Option<Provenance> {
    let mut out = Provenance::Verified;
    for f in flags {
        let f = (*f)?;
        if !f.holds {
            return None;
        }
        if f.provenance == Provenance::Asserted {
            out = Provenance::Asserted;
        }
    }
    Some(out)
}

struct Ctx<'a> {
    report: CheckReport,
    delta: Option<&'a InvariantMatrix>,
}

impl Ctx<'_> {
    fn push(&mut self, name: &str, hyp: Option<Provenance>, status: Status) {
        self.report.items.push(CheckItem {
            name: name.to_string(),
            hypotheses: if matches!(status, Status::Skipped { .. }) { None } else { hyp },
            status,
        });
    }

    fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.push(name, None, Status::Skipped { reason: reason.into() });
    }

    /// Runs `check` over the δ matrix when the hypotheses hold.
    fn with_delta(
        &mut self,
        name: &str,
        hyp: Option<Provenance>,
        why: &str,
        check: impl FnOnce(&InvariantMatrix) -> std::result::Result<Option<String>, String>,
    ) {
        let Some(h) = hyp else {
            return self.skip(name, format!("hypothesis not established ({why})"));
        };
        let Some(delta) = self.delta else {
            return self.skip(name, "delta not computable over this field");
        };
        let status = match check(delta) {
            Ok(note) => Status::Pass { note },
            Err(detail) => Status::Fail { detail },
        };
        self.push(name, Some(h), status);
    }
}

fn value(m: &InvariantMatrix, d: u32, r: usize) -> Option<i64> {
    m.cell(d, r).filter(|c| !c.skipped).and_then(|c| c.value)
}

/// Runs every property whose hypotheses are established, on the cells
/// `1 ≤ d ≤ dmax`, `1 ≤ r ≤ rmax`.
pub fn property_checks<F: Field>(gmd: &Gmd<'_, F>, dmax: u32, rmax: usize, v_cap: u32) -> Result<CheckReport> {
    let ideal = gmd.ideal();
    let props = ideal.properties();
    let finite = ideal.ring().field().size().is_some();
    let deg = ideal.degree() as i64;
    let dim = ideal.dimension();

    let delta = if finite || ideal.is_monomial() {
        Some(InvariantMatrix::compute(gmd, Kind::Delta, dmax, rmax)?)
    } else {
        None
    };
    let fp = InvariantMatrix::compute(gmd, Kind::Fp, dmax, rmax)?;
    let unmixed = combine(&[props.unmixed]);
    let radical_unmixed = combine(&[props.unmixed, props.radical]);
    let regular_form = dim >= 1 && ideal.find_regular_linear_form(2).is_ok();
    let primes_flag = ideal.linear_primes().map(|_| {
        if ideal.primes_verified() {
            Flag::verified(true)
        } else {
            Flag::asserted()
        }
    });
    let dim_one = Some(Flag::verified(dim == 1));
    let geramita = combine(&[props.unmixed, dim_one, primes_flag]);
    let reg_form_flag = Some(Flag::verified(regular_form));

    let mut ctx = Ctx {
        report: CheckReport::default(),
        delta: delta.as_ref(),
    };

    ctx.with_delta(FP_LE_DELTA, unmixed, "unmixed", |delta| {
        for c in &fp.cells {
            if let (Some(a), Some(b)) = (value(&fp, c.d, c.r), value(delta, c.d, c.r)) {
                if a > b {
                    return Err(format!("fp({},{}) = {a} > delta = {b}", c.d, c.r));
                }
            }
        }
        Ok(None)
    });

    ctx.with_delta(ROWS, unmixed, "unmixed", |delta| {
        for d in 1..=dmax {
            let mut prev = 0;
            for r in 1..=rmax {
                if let Some(v) = value(delta, d, r) {
                    if v < 1 || v > deg {
                        return Err(format!("delta({d},{r}) = {v} outside 1..={deg}"));
                    }
                    if v < prev {
                        return Err(format!("delta({d},{r}) = {v} < delta({d},{}) = {prev}", r - 1));
                    }
                    prev = v;
                }
            }
        }
        Ok(None)
    });

    ctx.with_delta(
        COLUMNS,
        combine(&[props.unmixed, reg_form_flag]),
        "unmixed with a regular linear form",
        |delta| {
            for r in 1..=rmax {
                for d in 1..dmax {
                    if let (Some(a), Some(b)) = (value(delta, d, r), value(delta, d + 1, r)) {
                        if b > a {
                            return Err(format!("delta({},{r}) = {b} > delta({d},{r}) = {a}", d + 1));
                        }
                    }
                }
            }
            Ok(None)
        },
    );

    if radical_unmixed.is_some() && finite {
        let theta = InvariantMatrix::compute(gmd, Kind::Vasconcelos, dmax, rmax)?;
        ctx.with_delta(DELTA_EQ_THETA, radical_unmixed, "radical and unmixed", |delta| {
            for c in &theta.cells {
                if let (Some(a), Some(b)) = (value(&theta, c.d, c.r), value(delta, c.d, c.r)) {
                    if a != b {
                        return Err(format!("vasconcelos({},{}) = {a} but delta = {b}", c.d, c.r));
                    }
                }
            }
            Ok(None)
        });
    } else if radical_unmixed.is_none() {
        ctx.skip(DELTA_EQ_THETA, "hypothesis not established (radical and unmixed)");
    } else {
        ctx.skip(DELTA_EQ_THETA, "vasconcelos function needs a finite field");
    }

    let monomial = ideal.is_monomial().then_some(Provenance::Verified);
    ctx.with_delta(DELTA_EQ_FP, monomial, "monomial ideal", |delta| {
        for c in &fp.cells {
            let other = delta.cell(c.d, c.r).expect("same shape");
            if !c.skipped && !other.skipped && c.display() != other.display() {
                return Err(format!("fp({},{}) = {} but delta = {}", c.d, c.r, c.display(), other.display()));
            }
        }
        Ok(None)
    });

    let geramita_reg = combine(&[props.unmixed, dim_one, primes_flag, reg_form_flag]);
    ctx.with_delta(
        SINGLETON,
        geramita_reg,
        "Geramita with a regular linear form",
        |delta| {
            for d in 1..=dmax {
                if let Some(v) = value(delta, d, 1) {
                    let bound = deg - ideal.hilbert_function(d) as i64 + 1;
                    if v > bound {
                        return Err(format!("delta({d}) = {v} > {bound}"));
                    }
                }
            }
            Ok(None)
        },
    );

    // δ(d, H(d)) needs a single candidate, so it is checked for every d
    match combine(&[props.unmixed, Some(Flag::verified(dim >= 1))]) {
        Some(h) if finite || ideal.is_monomial() => {
            let mut status = Status::Pass { note: None };
            for d in 1..=dmax {
                let hd = ideal.hilbert_function(d) as usize;
                if hd == 0 {
                    continue;
                }
                let v = gmd.delta(d, hd)?.entry.value;
                if v != deg {
                    status = Status::Fail {
                        detail: format!("delta({d},{hd}) = {v} != {deg}"),
                    };
                    break;
                }
            }
            ctx.push(FULL_RANK, Some(h), status);
        }
        Some(_) => ctx.skip(FULL_RANK, "delta not computable over this field"),
        None => ctx.skip(FULL_RANK, "hypothesis not established (unmixed of dimension >= 1)"),
    }

    match geramita {
        Some(h) if finite || ideal.is_monomial() => {
            let status = match reg_delta(ideal, None, v_cap) {
                Ok(v) => {
                    let mut status = Status::Pass {
                        note: Some(format!("v = {v}")),
                    };
                    for d in 1..=v + 1 {
                        let dd = match gmd.delta(d, 1) {
                            Ok(c) => c.entry.value,
                            Err(Error::BudgetExceeded { .. }) => {
                                status = Status::Pass {
                                    note: Some(format!("v = {v}, brute force stopped at d = {d} (budget)")),
                                };
                                break;
                            }
                            Err(e) => return Err(e),
                        };
                        if (d < v && dd == 1) || (d >= v && dd != 1) {
                            status = Status::Fail {
                                detail: format!("v = {v} but delta({d}) = {dd}"),
                            };
                            break;
                        }
                    }
                    status
                }
                Err(e) => Status::Skipped { reason: e.to_string() },
            };
            ctx.push(REG_DELTA, Some(h), status);
        }
        Some(_) => ctx.skip(REG_DELTA, "delta not computable over this field"),
        None => ctx.skip(REG_DELTA, "hypothesis not established (Geramita)"),
    }

    let cm = ideal.hilbert_data().cm_regularity;
    match (geramita_reg, cm) {
        (Some(h), Some(reg)) if !ideal.is_linear_prime() => {
            let status = match (socle_degree(ideal, 2), v_number(ideal, None, v_cap)) {
                (Ok(s), Ok(v)) => match v.locals.iter().find(|&&l| l < s || l > reg) {
                    Some(l) => Status::Fail {
                        detail: format!("s = {s}, v_p = {l}, reg = {reg}"),
                    },
                    None => Status::Pass {
                        note: Some(if s < v.v {
                            format!("s = {s} < v = {}", v.v)
                        } else {
                            format!("s = v = {s}")
                        }),
                    },
                },
                (Err(e), _) | (_, Err(e)) => Status::Skipped { reason: e.to_string() },
            };
            ctx.push(SOCLE, Some(h), status);
        }
        _ => ctx.skip(SOCLE, "hypothesis not established (non-prime Geramita, CM, regular linear form)"),
    }

    let points = ideal.points().map(|_| Provenance::Verified);
    ctx.with_delta(STRICT_COLUMNS, points, "vanishing ideal of points", |delta| {
        for r in 1..=rmax {
            for d in 1..dmax {
                if let (Some(a), Some(b)) = (value(delta, d, r), value(delta, d + 1, r)) {
                    let ok = if a > r as i64 { b < a } else { a == r as i64 && b == a };
                    if !ok {
                        return Err(format!("delta({d},{r}) = {a}, delta({},{r}) = {b}", d + 1));
                    }
                }
            }
        }
        Ok(None)
    });

    ctx.with_delta(HIERARCHY, points, "vanishing ideal of points", |delta| {
        let n = deg;
        for d in 1..=dmax {
            let k = ideal.hilbert_function(d) as i64;
            let mut prev = 0;
            let mut first = None;
            for r in 1..=(k as usize).min(rmax) {
                let Some(v) = value(delta, d, r) else { continue };
                let hi = n - k + r as i64;
                if v < r as i64 || v > hi || v <= prev {
                    return Err(format!("d = {d}: delta_{r} = {v} (previous {prev}, n = {n}, k = {k})"));
                }
                if r == 1 {
                    first = Some(v);
                }
                if first == Some(n - k + 1) && v != hi {
                    return Err(format!("d = {d}: MDS but delta_{r} = {v} != {hi}"));
                }
                prev = v;
            }
        }
        Ok(None)
    });

    Ok(ctx.report)
}
