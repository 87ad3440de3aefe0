//! Numerical probes of minimum distance bounds for complete intersections.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::Gmd;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Provenance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Proven,
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Satisfied { value: i64 },
    Violated { value: i64 },
    NotComputable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub statement: String,
    pub kind: BoundKind,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            BoundKind::Proven => "proven",
            BoundKind::Conjecture => "conjecture",
        };
        match &self.verdict {
            Verdict::Satisfied { value } => write!(f, "{:<38} {kind:<10} satisfied (value {value})", self.statement),
            Verdict::Violated { value } => write!(
                f,
                "{:<38} {kind:<10} violated (value {value}, would be a counterexample)",
                self.statement
            ),
            Verdict::NotComputable { reason } => {
                write!(f, "{:<38} {kind:<10} not computable at budget ({reason})", self.statement)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CiReport {
    /// `None` when the ideal is not known to be a complete intersection.
    pub complete_intersection: Option<Provenance>,
    pub height: usize,
    /// Degrees of a minimal generating set, increasing.
    pub degrees: Vec<u32>,
    pub linear_primes: bool,
    pub checks: Vec<BoundCheck>,
    pub notes: Vec<String>,
}

impl CiReport {
    pub fn violated(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.verdict, Verdict::Violated { .. }))
    }
}

impl fmt::Display for CiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ci = match self.complete_intersection {
            Some(Provenance::Verified) => "yes (verified)",
            Some(Provenance::Asserted) => "yes (asserted)",
            None => "not established",
        };
        writeln!(f, "complete intersection: {ci}")?;
        writeln!(f, "height: {}", self.height)?;
        let degs: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        writeln!(f, "generator degrees: ({})", degs.join(","))?;
        writeln!(f, "associated primes linear: {}", if self.linear_primes { "yes" } else { "unknown" })?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

struct Probe<'a, 'b, F: Field> {
    gmd: &'a Gmd<'b, F>,
    cache: HashMap<(u32, usize), std::result::Result<i64, String>>,
    checks: Vec<BoundCheck>,
}

impl<F: Field> Probe<'_, '_, F> {
    fn delta(&mut self, d: u32, r: usize) -> Result<std::result::Result<i64, String>> {
        if let Some(v) = self.cache.get(&(d, r)) {
            return Ok(v.clone());
        }
        let v = match self.gmd.delta(d, r) {
            Ok(c) => Ok(c.entry.value),
            Err(e @ Error::BudgetExceeded { .. }) => Err(e.to_string()),
            Err(e) => return Err(e),
        };
        self.cache.insert((d, r), v.clone());
        Ok(v)
    }

    /// Records `δ(d,r) ≥ bound`.
    fn at_least(&mut self, statement: String, kind: BoundKind, d: u32, r: usize, bound: i64) -> Result<()> {
        let verdict = match self.delta(d, r)? {
            Ok(v) if v >= bound => Verdict::Satisfied { value: v },
            Ok(v) => Verdict::Violated { value: v },
            Err(reason) => Verdict::NotComputable { reason },
        };
        self.checks.push(BoundCheck { statement, kind, verdict });
        Ok(())
    }

    /// Records `hyp(d,r) ≤ bound`, as `δ(d,r) ≥ deg − bound`.
    fn hyp_at_most(&mut self, statement: String, d: u32, r: usize, bound: i64) -> Result<()> {
        let deg = self.gmd.ideal().degree() as i64;
        let verdict = match self.delta(d, r)? {
            Ok(v) if deg - v <= bound => Verdict::Satisfied { value: deg - v },
            Ok(v) => Verdict::Violated { value: deg - v },
            Err(reason) => Verdict::NotComputable { reason },
        };
        self.checks.push(BoundCheck {
            statement,
            kind: BoundKind::Proven,
            verdict,
        });
        Ok(())
    }
}

/// Evaluates the bounds and conjectures that apply to the ideal. Bounds
/// that need linear associated primes or dimension one are left out when
/// those are not known.
pub fn ci_probe<F: Field>(gmd: &Gmd<'_, F>) -> Result<CiReport> {
    let ideal = gmd.ideal();
    let props = ideal.properties();
    let complete_intersection = props.complete_intersection.filter(|f| f.holds).map(|f| f.provenance);
    let height = ideal.height();
    let mut degrees: Vec<u32> = ideal
        .minimal_generators()
        .iter()
        .map(|g| g.total_degree().unwrap_or(0))
        .collect();
    degrees.sort_unstable();
    let linear_primes = ideal.linear_primes().is_some();
    let mut report = CiReport {
        complete_intersection,
        height,
        degrees: degrees.clone(),
        linear_primes,
        checks: Vec::new(),
        notes: Vec::new(),
    };
    if complete_intersection.is_none() {
        report.notes.push("not a complete intersection; nothing to probe".into());
        return Ok(report);
    }
    if complete_intersection == Some(Provenance::Asserted) {
        // with asserted CI the generator list is taken as given
        degrees = ideal.generators().iter().map(|g| g.total_degree().unwrap_or(0)).collect();
        degrees.sort_unstable();
        report.degrees = degrees.clone();
    }
    if ideal.ring().field().size().is_none() && !ideal.is_monomial() {
        report.notes.push("delta needs a finite field; nothing to probe".into());
        return Ok(report);
    }
    if !linear_primes {
        report
            .notes
            .push("associated primes not known to be linear; bounds not applicable".into());
        return Ok(report);
    }
    let c = degrees.len();
    let mut probe = Probe {
        gmd,
        cache: HashMap::new(),
        checks: Vec::new(),
    };
    let pow = |b: i64, e: usize| b.pow(e as u32);

    if degrees.iter().all(|&e| e == degrees[0]) && degrees[0] >= 2 {
        let e = degrees[0] as i64;
        probe.hyp_at_most(format!("hyp(1) <= e^(c-1) = {}", pow(e, c - 1)), 1, 1, pow(e, c - 1))?;
        probe.at_least(
            format!("delta(1) >= e^c - e^(c-1) = {}", pow(e, c) - pow(e, c - 1)),
            BoundKind::Proven,
            1,
            1,
            pow(e, c) - pow(e, c - 1),
        )?;
        for r in 2..=c {
            probe.hyp_at_most(format!("hyp(1,{r}) <= e^(c-{r}) = {}", pow(e, c - r)), 1, r, pow(e, c - r))?;
            probe.at_least(
                format!("delta(1,{r}) >= e^c - e^(c-{r}) = {}", pow(e, c) - pow(e, c - r)),
                BoundKind::Proven,
                1,
                r,
                pow(e, c) - pow(e, c - r),
            )?;
        }
    }
    if c == 2 && degrees[0] >= 2 {
        let (e1, e2) = (degrees[0] as i64, degrees[1] as i64);
        probe.hyp_at_most(format!("hyp(1) <= e2 = {e2}"), 1, 1, e2)?;
        probe.at_least(
            format!("delta(1) >= e1*e2 - e2 = {}", e1 * e2 - e2),
            BoundKind::Proven,
            1,
            1,
            e1 * e2 - e2,
        )?;
    }

    let dim_one = ideal.dimension() == 1 && c + 1 == ideal.ring().nvars() && degrees.iter().all(|&d| d >= 2);
    if dim_one {
        let ds: Vec<i64> = degrees.iter().map(|&d| d as i64).collect();
        let prod = |from: usize| ds[from..].iter().product::<i64>();
        if ds.iter().all(|&d| d == 2) {
            for d in 1..=c {
                let kind = if d == 1 || d + 1 == c || d == c {
                    BoundKind::Proven
                } else {
                    BoundKind::Conjecture
                };
                probe.at_least(
                    format!("delta({d}) >= 2^(c-{d}) = {}", pow(2, c - d)),
                    kind,
                    d as u32,
                    1,
                    pow(2, c - d),
                )?;
            }
        }
        // d = (d_1 - 1) + ... + (d_k - 1) + l with 1 <= l <= d_{k+1} - 1;
        // d = 1 gives (d1-1)d2...dc
        let top: i64 = ds.iter().map(|d| d - 1).sum::<i64>() - 1;
        for d in 1..=top {
            let mut rest = d;
            let mut k = 0;
            while rest > ds[k] - 1 {
                rest -= ds[k] - 1;
                k += 1;
            }
            let bound = (ds[k] - rest) * prod(k + 1);
            probe.at_least(
                format!("delta({d}) >= (d{}-{rest})d{}...dc = {bound}", k + 1, k + 2),
                BoundKind::Conjecture,
                d as u32,
                1,
                bound,
            )?;
        }
        if ideal.points().is_some() {
            if let Some(reg) = ideal.hilbert_data().cm_regularity {
                for d in 1..reg {
                    let bound = reg as i64 - d as i64 + 1;
                    probe.at_least(
                        format!("delta({d}) >= reg - {d} + 1 = {bound}"),
                        BoundKind::Proven,
                        d,
                        1,
                        bound,
                    )?;
                }
            }
        }
    } else {
        report
            .notes
            .push("conjectures need dimension 1, c = s - 1 and degrees >= 2".into());
    }
    report.checks = probe.checks;
    Ok(report)
}
