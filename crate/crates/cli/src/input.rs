use std::error::Error as StdError;
use std::path::Path;

use gmd_core::ideal::{Ideal, Property};
use gmd_core::parse::{parse_ideal_file, AnyIdealFile, IdealFile};
use gmd_core::points::{parse_points, vanishing_ideal, ProjectivePointSet};
use gmd_core::{Field, MonomialOrder, OrderKind, PrimeField, Rationals};

use crate::{Common, OrderArg};

pub type Res<T> = Result<T, Box<dyn StdError>>;

pub enum Loaded {
    Prime(Ideal<PrimeField>),
    Rational(Ideal<Rationals>),
}

fn order_kind(o: OrderArg) -> OrderKind {
    match o {
        OrderArg::Lex => OrderKind::Lex,
        OrderArg::Grlex => OrderKind::Grlex,
        OrderArg::Grevlex => OrderKind::Grevlex,
    }
}

pub fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

/// Whether the first meaningful word of the file is `points`.
fn is_points_file(text: &str) -> bool {
    text.lines()
        .map(|l| l.split("--").next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("points"))
}

pub fn load_points(path: &Path) -> Res<ProjectivePointSet> {
    Ok(parse_points(&read(path)?)?)
}

pub fn points_ideal(x: &ProjectivePointSet, common: &Common) -> Res<Ideal<PrimeField>> {
    let kind = common.order.map_or(OrderKind::Grevlex, order_kind);
    Ok(vanishing_ideal(x, &x.ring(kind))?)
}

fn build<F: Field>(file: IdealFile<F>, common: &Common) -> Res<Ideal<F>> {
    let IdealFile {
        ring,
        generators,
        primes,
    } = file;
    let (gens, primes) = match common.order {
        Some(o) => {
            let order = MonomialOrder::with_ranking(order_kind(o), ring.order().ranking().to_vec())?;
            let new = ring.with_order(order)?;
            let gens = generators.iter().map(|g| g.reorder(&new)).collect();
            let primes = primes
                .iter()
                .map(|p| p.iter().map(|g| g.reorder(&new)).collect())
                .collect();
            (gens, primes)
        }
        None => (generators, primes),
    };
    let mut ideal = Ideal::new(gens)?;
    if !primes.is_empty() {
        ideal = ideal.with_primes(primes);
    }
    let a = common.assertions;
    for (on, p) in [
        (a.assert_unmixed, Property::Unmixed),
        (a.assert_radical, Property::Radical),
        (a.assert_ci, Property::CompleteIntersection),
    ] {
        if on {
            ideal = ideal.assert_property(p);
        }
    }
    Ok(ideal)
}

/// An ideal file, or a points file turned into its vanishing ideal.
pub fn load(path: &Path, common: &Common) -> Res<Loaded> {
    let text = read(path)?;
    if is_points_file(&text) {
        let x = parse_points(&text)?;
        let ideal = points_ideal(&x, common)?;
        return Ok(Loaded::Prime(ideal));
    }
    Ok(match parse_ideal_file(&text)? {
        AnyIdealFile::Prime(f) => Loaded::Prime(build(f, common)?),
        AnyIdealFile::Rational(f) => Loaded::Rational(build(f, common)?),
    })
}
