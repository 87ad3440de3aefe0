use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use gmd_core::gmd::checks::property_checks;
use gmd_core::gmd::ci::{ci_probe as probe, BoundKind, Verdict};
use gmd_core::gmd::vnumber::{cayley_bacharach, reg_delta, socle_degree, v_number};
use gmd_core::gmd::{Gmd, InvariantMatrix, Kind, Strategy};
use gmd_core::ideal::{Flag, Ideal, Provenance};
use gmd_core::points::EvaluationCode;
use gmd_core::{Error, Field};

use crate::input::{load, load_points, points_ideal, read, Loaded, Res};
use crate::{Common, KindArg};

const OK: u8 = 0;
const COUNTEREXAMPLE: u8 = 2;

macro_rules! dispatch {
    ($loaded:expr, $i:ident => $body:expr) => {
        match $loaded {
            Loaded::Prime($i) => $body,
            Loaded::Rational($i) => $body,
        }
    };
}

fn flag(f: Option<Flag>) -> String {
    f.map_or("not established".into(), |f| f.to_string())
}

fn flag_json(f: Option<Flag>) -> Value {
    match f {
        None => Value::Null,
        Some(f) => json!({"holds": f.holds, "provenance": f.provenance}),
    }
}

fn timing(start: Instant) {
    eprintln!("time: {:.3}s", start.elapsed().as_secs_f64());
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn render_prime<F: Field>(p: &[gmd_core::Polynomial<F>]) -> String {
    let parts: Vec<String> = p.iter().map(|f| f.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn invariants(echo: &str, path: &Path, bound: u32, common: &Common) -> Res<u8> {
    let start = Instant::now();
    let loaded = load(path, common)?;
    dispatch!(loaded, ideal => invariants_of(echo, &ideal, bound, common))?;
    timing(start);
    Ok(OK)
}

fn invariants_of<F: Field>(echo: &str, ideal: &Ideal<F>, bound: u32, common: &Common) -> Res<()> {
    let props = ideal.properties();
    let h = ideal.hilbert_data();
    let unmixed = props.unmixed.map(|f| f.holds);
    let primes: Option<Vec<String>> = match ideal.points() {
        Some(points) => {
            let field = ideal.ring().field();
            Some(
                points
                    .iter()
                    .map(|p| {
                        let c: Vec<String> = p.iter().map(|x| field.format(x)).collect();
                        format!("[{}]", c.join(":"))
                    })
                    .collect(),
            )
        }
        None => ideal.linear_primes().map(|ps| ps.iter().map(|p| render_prime(p)).collect()),
    };
    let v = match (&primes, unmixed) {
        (None, _) => Err("n/a (no primes available)".to_string()),
        (Some(_), Some(false)) => Err("n/a (not unmixed)".to_string()),
        (Some(_), None) => Err("n/a (unmixed not established)".to_string()),
        (Some(_), Some(true)) => v_number(ideal, None, bound).map_err(|e| format!("n/a ({e})")),
    };
    let rd = match &v {
        Ok(_) => reg_delta(ideal, None, bound).map_err(|e| format!("n/a ({e})")),
        Err(e) => Err(e.clone()),
    };
    let socle = socle_degree(ideal, 2).map_err(|e| format!("n/a ({e})"));
    let cb = v.as_ref().ok().map(|v| cayley_bacharach(ideal, v));

    if common.output.json {
        let v_json = match &v {
            Ok(v) => json!({"v": v.v, "locals": primes.as_ref().unwrap().iter().zip(&v.locals)
                .map(|(p, l)| json!({"prime": p, "v": l})).collect::<Vec<_>>()}),
            Err(e) => json!(e),
        };
        print_json(&json!({
            "command": echo,
            "ring": ideal.ring().banner(),
            "generators": ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "unmixed": flag_json(props.unmixed),
            "radical": flag_json(props.radical),
            "complete_intersection": flag_json(props.complete_intersection),
            "dimension": h.dim,
            "degree": h.degree,
            "h_vector": h.h_vector,
            "a_invariant": h.a_invariant,
            "regularity_index": h.reg_index,
            "cm_regularity": h.cm_regularity,
            "v_number": v_json,
            "reg_delta": rd.as_ref().map_or_else(|e| json!(e), |x| json!(x)),
            "socle_degree": socle.as_ref().map_or_else(|e| json!(e), |x| json!(x)),
            "cayley_bacharach": cb.flatten(),
        }));
        return Ok(());
    }
    println!("command: {echo}");
    println!("ring: {}", ideal.ring().banner());
    let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
    println!("generators: {}", gens.join(", "));
    println!("unmixed: {}", flag(props.unmixed));
    println!("radical: {}", flag(props.radical));
    println!("complete intersection: {}", flag(props.complete_intersection));
    println!("dimension: {}", h.dim);
    println!("degree: {}", h.degree);
    let hv: Vec<String> = h.h_vector.iter().map(i64::to_string).collect();
    println!("h-vector: ({})", hv.join(","));
    println!("a-invariant: {}", h.a_invariant);
    println!("regularity index: {}", h.reg_index);
    match h.cm_regularity {
        Some(r) => println!("cm regularity: {r}"),
        None => println!("cm regularity: n/a (CM not established)"),
    }
    match &v {
        Ok(v) => {
            println!("v-number: {}", v.v);
            for (p, l) in primes.as_ref().unwrap().iter().zip(&v.locals) {
                println!("  v_p for p = {p}: {l}");
            }
        }
        Err(e) => println!("v-number: {e}"),
    }
    match &rd {
        Ok(x) => println!("reg(delta): {x}"),
        Err(e) => println!("reg(delta): {e}"),
    }
    match &socle {
        Ok(x) => println!("socle degree: {x}"),
        Err(e) => println!("socle degree: {e}"),
    }
    match cb {
        Some(Some(b)) => println!("Cayley-Bacharach: {}", if b { "yes" } else { "no" }),
        Some(None) => println!("Cayley-Bacharach: n/a (CM not established)"),
        None => println!("Cayley-Bacharach: n/a"),
    }
    Ok(())
}

fn kind(k: KindArg) -> Kind {
    match k {
        KindArg::Delta => Kind::Delta,
        KindArg::Fp => Kind::Fp,
        KindArg::Hyp => Kind::Hyp,
        KindArg::Vasconcelos => Kind::Vasconcelos,
    }
}

pub fn matrix(_echo: &str, path: &Path, k: KindArg, dmax: u32, rmax: usize, common: &Common) -> Res<u8> {
    let start = Instant::now();
    let loaded = load(path, common)?;
    let m = dispatch!(loaded, ideal => InvariantMatrix::compute(&Gmd::new(&ideal).with_budget(common.budget), kind(k), dmax, rmax))?;
    if common.output.json {
        println!("{}", m.to_json());
    } else if common.output.csv {
        print!("{}", m.render_csv());
    } else {
        print!("{}", m.render_table());
    }
    if m.cells.iter().any(|c| c.skipped) {
        eprintln!("warning: cells marked skip exceed the budget of {}", common.budget);
    }
    timing(start);
    Ok(OK)
}

pub fn render(path: &Path, csv: bool) -> Res<u8> {
    let m = InvariantMatrix::from_json(&read(path)?)?;
    if csv {
        print!("{}", m.render_csv());
    } else {
        print!("{}", m.render_table());
    }
    Ok(OK)
}

pub fn code(
    echo: &str,
    path: &Path,
    d: u32,
    r: Option<usize>,
    hierarchy: bool,
    crosscheck: bool,
    common: &Common,
) -> Res<u8> {
    let start = Instant::now();
    let x = load_points(path)?;
    let ideal = points_ideal(&x, common)?;
    let c = EvaluationCode::new(&x, &ideal, d)?;
    let rs: Vec<usize> = match (r, hierarchy) {
        (Some(r), _) => {
            if r == 0 || r > c.k {
                return Err(Error::RankOutOfRange { r, k: c.k }.into());
            }
            vec![r]
        }
        (None, true) => (1..=c.k).collect(),
        (None, false) => vec![1],
    };
    let gmd = Gmd::new(&ideal).with_budget(common.budget).with_strategy(Strategy::Generic);
    let mut rows = Vec::new();
    let mut mismatch = false;
    for &r in &rs {
        let code_side = match c.generalized_hamming_weight(r, common.budget) {
            Ok(v) => Some(v as i64),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let ideal_side = if crosscheck {
            match gmd.delta(d, r) {
                Ok(e) => Some(e.entry.value),
                Err(Error::BudgetExceeded { .. }) => None,
                Err(e) => return Err(e.into()),
            }
        } else {
            None
        };
        if let (Some(a), Some(b)) = (code_side, ideal_side) {
            mismatch |= a != b;
        }
        rows.push((r, code_side, ideal_side));
    }
    let show = |v: Option<i64>| v.map_or("skip".to_string(), |x| x.to_string());
    if common.output.json {
        print_json(&json!({
            "command": echo,
            "field": x.field().spec().to_string(),
            "d": d,
            "length": c.n,
            "dimension": c.k,
            "weights": rows.iter().map(|(r, a, b)| {
                let mut o = json!({"r": r, "weight": a});
                if crosscheck {
                    o["delta"] = json!(b);
                    o["agree"] = json!(a.zip(*b).map(|(a, b)| a == b));
                }
                o
            }).collect::<Vec<_>>(),
        }));
    } else {
        println!("command: {echo}");
        println!("points: {} in P^{} over {}", x.len(), x.s() - 1, x.field().spec());
        println!("degree d: {d}");
        println!("length n: {}", c.n);
        println!("dimension k: {}", c.k);
        for (r, a, b) in &rows {
            if crosscheck {
                let verdict = match (a, b) {
                    (Some(a), Some(b)) if a == b => "agree",
                    (Some(_), Some(_)) => "DISAGREE",
                    _ => "not compared",
                };
                println!("delta_{r} = {}  (ideal side {}: {verdict})", show(*a), show(*b));
            } else {
                println!("delta_{r} = {}", show(*a));
            }
        }
        if hierarchy && rows.iter().all(|(_, a, _)| a.is_some()) {
            let h: Vec<String> = rows.iter().map(|(_, a, _)| a.unwrap().to_string()).collect();
            println!("weight hierarchy: ({})", h.join(","));
        }
    }
    timing(start);
    Ok(if mismatch { COUNTEREXAMPLE } else { OK })
}

pub fn vanishing_ideal(echo: &str, path: &Path, common: &Common) -> Res<u8> {
    let start = Instant::now();
    let x = load_points(path)?;
    let ideal = points_ideal(&x, common)?;
    let gb: Vec<String> = ideal.groebner_basis().iter().map(|g| g.to_string()).collect();
    let h = ideal.hilbert_data();
    if common.output.json {
        print_json(&json!({
            "command": echo,
            "ring": ideal.ring().banner(),
            "points": x.len(),
            "groebner_basis": gb,
            "dimension": h.dim,
            "degree": h.degree,
            "h_vector": h.h_vector,
            "regularity_index": h.reg_index,
            "cm_regularity": h.cm_regularity,
        }));
    } else {
        println!("command: {echo}");
        println!("ring: {}", ideal.ring().banner());
        println!("points: {}", x.len());
        println!("reduced Groebner basis:");
        for g in &gb {
            println!("  {g}");
        }
        println!("dimension: {}", h.dim);
        println!("degree: {}", h.degree);
        let hv: Vec<String> = h.h_vector.iter().map(i64::to_string).collect();
        println!("h-vector: ({})", hv.join(","));
        println!("regularity index: {}", h.reg_index);
        match h.cm_regularity {
            Some(r) => println!("cm regularity: {r}"),
            None => println!("cm regularity: n/a (CM not established)"),
        }
    }
    timing(start);
    Ok(OK)
}

pub fn check(echo: &str, path: &Path, dmax: u32, rmax: usize, bound: u32, common: &Common) -> Res<u8> {
    let start = Instant::now();
    let loaded = load(path, common)?;
    let (banner, report) = dispatch!(loaded, ideal => (
        ideal.ring().banner(),
        property_checks(&Gmd::new(&ideal).with_budget(common.budget), dmax, rmax, bound)?,
    ));
    if common.output.json {
        print_json(&json!({"command": echo, "ring": banner, "checks": report.items}));
    } else {
        println!("command: {echo}");
        println!("ring: {banner}");
        print!("{report}");
    }
    timing(start);
    Ok(if report.has_verified_violation() { COUNTEREXAMPLE } else { OK })
}

pub fn ci_probe(echo: &str, path: &Path, common: &Common) -> Res<u8> {
    let start = Instant::now();
    let loaded = load(path, common)?;
    let (banner, report) = dispatch!(loaded, ideal => (
        ideal.ring().banner(),
        probe(&Gmd::new(&ideal).with_budget(common.budget))?,
    ));
    if common.output.json {
        print_json(&json!({"command": echo, "ring": banner, "report": report}));
    } else {
        println!("command: {echo}");
        println!("ring: {banner}");
        print!("{report}");
    }
    timing(start);
    let proven_violation = report.complete_intersection == Some(Provenance::Verified)
        && report
            .checks
            .iter()
            .any(|c| c.kind == BoundKind::Proven && matches!(c.verdict, Verdict::Violated { .. }));
    Ok(if proven_violation { COUNTEREXAMPLE } else { OK })
}
