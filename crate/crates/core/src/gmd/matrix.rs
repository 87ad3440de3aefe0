//! Grids of invariant values with table, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Gmd, Kind};
use crate::error::{Error, Result};
use crate::field::Field;

/// One cell of a matrix. `value` is `None` when `r > H_I(d)` or the cell
/// was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixCell {
    pub d: u32,
    pub r: usize,
    pub value: Option<i64>,
    pub family_empty: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl MatrixCell {
    pub fn display(&self) -> String {
        match (self.skipped, self.value) {
            (true, _) => "skip".into(),
            (false, None) => "inf".into(),
            (false, Some(v)) => v.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantMatrix {
    pub kind: Kind,
    /// Monomial order, or `order-independent` for δ, hyp and ϑ.
    pub order: String,
    pub ring: String,
    pub degree: u64,
    pub dmax: u32,
    pub rmax: usize,
    /// Row-major, `d` from 1 and `r` from 1.
    pub cells: Vec<MatrixCell>,
}

impl InvariantMatrix {
    /// Fills the grid cell by cell; cells over budget are marked skipped.
    pub fn compute<F: Field>(gmd: &Gmd<'_, F>, kind: Kind, dmax: u32, rmax: usize) -> Result<Self> {
        let ideal = gmd.ideal();
        let ring = ideal.ring();
        let order = match kind {
            Kind::Fp => ring.order().describe(ring.var_names()),
            _ if kind == Kind::Delta && ring.field().size().is_none() => ring.order().describe(ring.var_names()),
            _ => "order-independent".to_string(),
        };
        let mut cells = Vec::new();
        for d in 1..=dmax {
            for r in 1..=rmax {
                cells.push(match gmd.cell(kind, d, r) {
                    Ok(c) => MatrixCell {
                        d,
                        r,
                        value: (!c.entry.beyond).then_some(c.entry.value),
                        family_empty: c.entry.family_empty,
                        skipped: false,
                        witness: c.witness.map(|w| w.iter().map(|f| f.to_string()).collect()),
                    },
                    Err(Error::BudgetExceeded { .. }) => MatrixCell {
                        d,
                        r,
                        value: None,
                        family_empty: false,
                        skipped: true,
                        witness: None,
                    },
                    Err(e) => return Err(e),
                });
            }
        }
        Ok(InvariantMatrix {
            kind,
            order,
            ring: ring.banner(),
            degree: ideal.degree(),
            dmax,
            rmax,
            cells,
        })
    }

    pub fn cell(&self, d: u32, r: usize) -> Option<&MatrixCell> {
        if d == 0 || r == 0 || d > self.dmax || r > self.rmax {
            return None;
        }
        self.cells.get((d as usize - 1) * self.rmax + (r - 1))
    }

    /// Displayed entries of row `d`.
    pub fn row(&self, d: u32) -> Vec<String> {
        (1..=self.rmax).filter_map(|r| self.cell(d, r)).map(MatrixCell::display).collect()
    }

    pub fn render_table(&self) -> String {
        let mut grid: Vec<Vec<String>> = vec![std::iter::once("d\\r".to_string())
            .chain((1..=self.rmax).map(|r| r.to_string()))
            .collect()];
        for d in 1..=self.dmax {
            grid.push(std::iter::once(d.to_string()).chain(self.row(d)).collect());
        }
        let width = grid.iter().flatten().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        let _ = writeln!(out, "{} matrix of {}", self.kind, self.ring);
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "deg(S/I) = {}", self.degree);
        for line in &grid {
            let cells: Vec<String> = line.iter().map(|c| format!("{c:>width$}")).collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        let witnesses: Vec<&MatrixCell> = self.cells.iter().filter(|c| c.witness.is_some()).collect();
        if !witnesses.is_empty() {
            let _ = writeln!(out, "witnesses:");
            for c in witnesses {
                let _ = writeln!(out, "  ({},{}): {}", c.d, c.r, c.witness.as_ref().unwrap().join(", "));
            }
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("d,r,value,family_empty,skipped\n");
        for c in &self.cells {
            let _ = writeln!(out, "{},{},{},{},{}", c.d, c.r, c.display(), c.family_empty, c.skipped);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::parse::{parse_polynomial, parse_ring, AnyRing};

    fn monomial_example() -> InvariantMatrix {
        let AnyRing::Rational(r) = parse_ring("ring QQ[t1,t2,t3]").unwrap() else { unreachable!() };
        let i = Ideal::new(vec![parse_polynomial("t1^3", &r).unwrap(), parse_polynomial("t2*t3", &r).unwrap()]).unwrap();
        InvariantMatrix::compute(&Gmd::new(&i), Kind::Fp, 3, 6).unwrap()
    }

    #[test]
    fn rows_and_json_round_trip() {
        let m = monomial_example();
        assert_eq!(m.row(1), ["3", "5", "6", "inf", "inf", "inf"]);
        let back = InvariantMatrix::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.render_table(), m.render_table());
        assert!(m.to_json().contains("\"value\": null"));
        assert!(m.render_csv().lines().nth(4).unwrap().starts_with("1,4,inf,true"));
    }

    #[test]
    fn skipped_cells() {
        let AnyRing::Prime(r) = parse_ring("ring GF(3)[t1,t2,t3]").unwrap() else { unreachable!() };
        let i = Ideal::new(vec![parse_polynomial("t1^2", &r).unwrap()]).unwrap();
        let m = InvariantMatrix::compute(&Gmd::new(&i).with_budget(5), Kind::Delta, 1, 2).unwrap();
        assert_eq!(m.row(1), ["skip", "skip"]);
        assert_eq!(m.order, "order-independent");
    }
}
