//! Text front end: ring declarations, polynomial expressions, ideal files.
//!
//! ```text
//! ring GF(3)[t1,t2,t3] order=grevlex vars=t3,t2,t1
//! ideal: t1*t2^2 - t1^2*t2,
//!        t1*t3^3 - t1^3*t3
//! primes: (t2, t3) (t1 - t2, t3)
//! ```
//!
//! `--` starts a comment that runs to the end of the line.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::monomial::{Monomial, MonomialOrder, OrderKind};
use crate::poly::{PolyRing, Polynomial};

const MAX_EXPONENT: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Newline,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits text into tokens; `line_offset` shifts reported line numbers.
pub(crate) fn tokenize(text: &str, line_offset: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1 + line_offset;
        let content = match raw.find("--") {
            Some(i) => &raw[..i],
            None => raw,
        };
        let chars: Vec<(usize, char)> = content.char_indices().collect();
        let mut k = 0;
        while k < chars.len() {
            let (_, c) = chars[k];
            let column = k + 1;
            if c.is_whitespace() {
                k += 1;
            } else if c.is_ascii_digit() {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().map(|x| x.1).collect();
                out.push(Token {
                    tok: Tok::Int(digits.parse().expect("digits")),
                    line,
                    column,
                });
            } else if c.is_alphabetic() || c == '_' {
                let start = k;
                while k < chars.len() && (chars[k].1.is_alphanumeric() || chars[k].1 == '_') {
                    k += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..k].iter().map(|x| x.1).collect()),
                    line,
                    column,
                });
            } else if "+-*^()[],:=/><".contains(c) {
                out.push(Token {
                    tok: Tok::Sym(c),
                    line,
                    column,
                });
                k += 1;
            } else {
                return Err(syntax(line, column, format!("unexpected character `{c}`")));
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            line,
            column: content.chars().count() + 1,
        });
    }
    Ok(out)
}

pub(crate) struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Token]) -> Self {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> Option<&'a Token> {
        self.toks.get(self.pos)
    }

    pub fn peek_tok(&self) -> Option<&'a Tok> {
        self.peek().map(|t| &t.tok)
    }

    pub fn next(&mut self) -> Option<&'a Token> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn skip_newlines(&mut self) {
        while matches!(self.peek_tok(), Some(Tok::Newline)) {
            self.pos += 1;
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn here(&self) -> (usize, usize) {
        match self.peek().or_else(|| self.toks.last()) {
            Some(t) => (t.line, t.column),
            None => (1, 1),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        let (l, c) = self.here();
        syntax(l, c, message)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.peek_tok() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub fn expect_ident(&mut self) -> Result<String> {
        match self.peek_tok() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => Err(self.error("expected a name")),
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek_tok() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected `{kw}`"))),
        }
    }

    pub fn expect_int(&mut self) -> Result<BigInt> {
        match self.peek_tok() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n.clone())
            }
            _ => Err(self.error("expected an integer")),
        }
    }
}

/// Parsed ring header, before the field is instantiated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDecl {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub kind: OrderKind,
    /// Variables largest first, when `vars=` is given.
    pub ranking: Option<Vec<usize>>,
}

impl RingDecl {
    pub fn order(&self) -> Result<MonomialOrder> {
        match &self.ranking {
            None => Ok(MonomialOrder::new(self.kind, self.vars.len())),
            Some(r) => MonomialOrder::with_ranking(self.kind, r.clone()),
        }
    }

    pub fn build<F: Field>(&self, field: F) -> Result<Arc<PolyRing<F>>> {
        PolyRing::new(field, self.vars.clone(), self.order()?)
    }
}

pub(crate) fn parse_field(cur: &mut Cursor) -> Result<FieldSpec> {
    let (line, column) = cur.here();
    let name = cur.expect_ident()?;
    match name.as_str() {
        "QQ" => Ok(FieldSpec::Rationals),
        "GF" => {
            cur.expect_sym('(')?;
            let (l, c) = cur.here();
            let p = cur.expect_int()?;
            cur.expect_sym(')')?;
            let p: u64 = p
                .try_into()
                .map_err(|_| syntax(l, c, "characteristic out of range"))?;
            if p > u32::MAX as u64 {
                return Err(syntax(l, c, "characteristic out of range"));
            }
            if !crate::field::is_prime(p) {
                return Err(Error::CompositeCharacteristic(p));
            }
            Ok(FieldSpec::Prime(p as u32))
        }
        other => Err(syntax(line, column, format!("unknown field `{other}`"))),
    }
}

fn parse_ring_tokens(cur: &mut Cursor) -> Result<RingDecl> {
    cur.skip_newlines();
    cur.expect_keyword("ring")?;
    let field = parse_field(cur)?;
    cur.expect_sym('[')?;
    let mut vars = Vec::new();
    loop {
        let name = cur.expect_ident()?;
        if vars.contains(&name) {
            return Err(Error::DuplicateVariable(name));
        }
        vars.push(name);
        if cur.eat_sym(']') {
            break;
        }
        cur.expect_sym(',')?;
    }
    let mut kind = OrderKind::Grevlex;
    let mut ranking = None;
    while let Some(Tok::Ident(key)) = cur.peek_tok() {
        let key = key.clone();
        cur.next();
        cur.expect_sym('=')?;
        match key.as_str() {
            "order" => {
                let (l, c) = cur.here();
                let name = cur.expect_ident()?;
                kind = name.parse().map_err(|_| syntax(l, c, format!("unknown order `{name}`")))?;
            }
            "vars" => {
                let bracketed = cur.eat_sym('[') || cur.eat_sym('(');
                let mut perm = Vec::new();
                loop {
                    let (l, c) = cur.here();
                    let name = cur.expect_ident()?;
                    let idx = vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| syntax(l, c, format!("unknown variable `{name}`")))?;
                    perm.push(idx);
                    if !(cur.eat_sym(',') || cur.eat_sym('>')) {
                        break;
                    }
                }
                if bracketed && !(cur.eat_sym(']') || cur.eat_sym(')')) {
                    return Err(cur.error("unclosed variable list"));
                }
                if perm.len() != vars.len() {
                    return Err(Error::InvalidPermutation(format!(
                        "expected {} variables, got {}",
                        vars.len(),
                        perm.len()
                    )));
                }
                ranking = Some(perm);
            }
            other => return Err(cur.error(format!("unknown ring option `{other}`"))),
        }
    }
    if !matches!(cur.peek_tok(), None | Some(Tok::Newline)) {
        return Err(cur.error("unexpected input after ring declaration"));
    }
    let decl = RingDecl {
        field,
        vars,
        kind,
        ranking,
    };
    decl.order()?;
    Ok(decl)
}

pub fn parse_ring_decl(text: &str) -> Result<RingDecl> {
    let toks = tokenize(text, 0)?;
    let mut cur = Cursor::new(&toks);
    let decl = parse_ring_tokens(&mut cur)?;
    cur.skip_newlines();
    if !cur.at_end() {
        return Err(cur.error("unexpected input after ring declaration"));
    }
    Ok(decl)
}

/// A ring over whichever field the declaration names.
#[derive(Clone, Debug)]
pub enum AnyRing {
    Prime(Arc<PolyRing<PrimeField>>),
    Rational(Arc<PolyRing<Rationals>>),
}

pub fn parse_ring(text: &str) -> Result<AnyRing> {
    let decl = parse_ring_decl(text)?;
    instantiate(&decl)
}

pub fn instantiate(decl: &RingDecl) -> Result<AnyRing> {
    Ok(match decl.field {
        FieldSpec::Prime(p) => AnyRing::Prime(decl.build(PrimeField::new(p)?)?),
        FieldSpec::Rationals => AnyRing::Rational(decl.build(Rationals)?),
    })
}

/// Recursive-descent parser for `+ - * ^ ( )` expressions.
struct ExprParser<'r, F: Field> {
    ring: &'r Arc<PolyRing<F>>,
    depth: usize,
}

impl<'r, F: Field> ExprParser<'r, F> {
    fn skip_nl_inside(&self, cur: &mut Cursor) {
        if self.depth > 0 {
            cur.skip_newlines();
        }
    }

    fn expr(&mut self, cur: &mut Cursor) -> Result<Polynomial<F>> {
        self.skip_nl_inside(cur);
        let mut acc = self.unary(cur)?;
        loop {
            self.skip_nl_inside(cur);
            if cur.eat_sym('+') {
                cur.skip_newlines();
                acc = &acc + &self.unary(cur)?;
            } else if cur.eat_sym('-') {
                cur.skip_newlines();
                acc = &acc - &self.unary(cur)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, cur: &mut Cursor) -> Result<Polynomial<F>> {
        if cur.eat_sym('-') {
            let inner = self.unary(cur)?;
            return Ok(-&inner);
        }
        if cur.eat_sym('+') {
            return self.unary(cur);
        }
        self.product(cur)
    }

    fn product(&mut self, cur: &mut Cursor) -> Result<Polynomial<F>> {
        let mut acc = self.power(cur)?;
        loop {
            self.skip_nl_inside(cur);
            if cur.eat_sym('*') {
                cur.skip_newlines();
                let rhs = if cur.peek_tok() == Some(&Tok::Sym('-')) {
                    self.unary(cur)?
                } else {
                    self.power(cur)?
                };
                acc = &acc * &rhs;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self, cur: &mut Cursor) -> Result<Polynomial<F>> {
        let base = self.atom(cur)?;
        if cur.eat_sym('^') {
            if cur.peek_tok() == Some(&Tok::Sym('-')) {
                return Err(Error::NegativeExponent);
            }
            let e = cur.expect_int()?;
            let e: u64 = e.try_into().map_err(|_| Error::ExponentTooLarge(u64::MAX))?;
            if e > MAX_EXPONENT {
                return Err(Error::ExponentTooLarge(e));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self, cur: &mut Cursor) -> Result<Polynomial<F>> {
        let (line, column) = cur.here();
        match cur.next().map(|t| &t.tok) {
            Some(Tok::Int(n)) => Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(n))),
            Some(Tok::Ident(name)) => match self.ring.var_index(name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(Error::UnknownVariable(name.clone())),
            },
            Some(Tok::Sym('(')) => {
                self.depth += 1;
                let inner = self.expr(cur)?;
                cur.skip_newlines();
                self.depth -= 1;
                if !cur.eat_sym(')') {
                    return Err(cur.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(Tok::Sym(c)) => Err(syntax(line, column, format!("unexpected `{c}`"))),
            Some(Tok::Newline) | None => Err(syntax(line, column, "unexpected end of expression")),
        }
    }
}

pub(crate) fn parse_expr<F: Field>(cur: &mut Cursor, ring: &Arc<PolyRing<F>>) -> Result<Polynomial<F>> {
    ExprParser { ring, depth: 0 }.expr(cur)
}

/// Parses one polynomial expression in `ring`.
pub fn parse_polynomial<F: Field>(text: &str, ring: &Arc<PolyRing<F>>) -> Result<Polynomial<F>> {
    let toks = tokenize(text, 0)?;
    let mut cur = Cursor::new(&toks);
    cur.skip_newlines();
    let p = ExprParser { ring, depth: 1 }.expr(&mut cur)?;
    cur.skip_newlines();
    if !cur.at_end() {
        return Err(cur.error("unexpected input after expression"));
    }
    Ok(p)
}

/// Contents of an ideal file over a concrete field.
#[derive(Clone, Debug)]
pub struct IdealFile<F: Field> {
    pub ring: Arc<PolyRing<F>>,
    pub generators: Vec<Polynomial<F>>,
    /// User-supplied associated primes, each generated by linear forms.
    pub primes: Vec<Vec<Polynomial<F>>>,
}

#[derive(Clone, Debug)]
pub enum AnyIdealFile {
    Prime(IdealFile<PrimeField>),
    Rational(IdealFile<Rationals>),
}

pub fn parse_ideal_file(text: &str) -> Result<AnyIdealFile> {
    let toks = tokenize(text, 0)?;
    let mut cur = Cursor::new(&toks);
    let decl = parse_ring_tokens(&mut cur)?;
    Ok(match instantiate(&decl)? {
        AnyRing::Prime(r) => AnyIdealFile::Prime(parse_ideal_body(&mut cur, r)?),
        AnyRing::Rational(r) => AnyIdealFile::Rational(parse_ideal_body(&mut cur, r)?),
    })
}

/// Parses an ideal file whose field is already known to be `F`.
pub fn parse_ideal_file_in<F: Field>(text: &str, field: F) -> Result<IdealFile<F>> {
    let toks = tokenize(text, 0)?;
    let mut cur = Cursor::new(&toks);
    let decl = parse_ring_tokens(&mut cur)?;
    if decl.field != field.spec() {
        return Err(Error::RingMismatch);
    }
    let ring = decl.build(field)?;
    parse_ideal_body(&mut cur, ring)
}

fn section_header(cur: &mut Cursor, name: &str) -> bool {
    let save = cur.pos;
    if let Some(Tok::Ident(s)) = cur.peek_tok() {
        if s == name {
            cur.next();
            if cur.eat_sym(':') {
                return true;
            }
        }
    }
    cur.pos = save;
    false
}

fn parse_ideal_body<F: Field>(cur: &mut Cursor, ring: Arc<PolyRing<F>>) -> Result<IdealFile<F>> {
    cur.skip_newlines();
    if !section_header(cur, "ideal") {
        return Err(cur.error("expected `ideal:`"));
    }
    let mut generators = Vec::new();
    loop {
        cur.skip_newlines();
        if cur.at_end() {
            break;
        }
        if matches!(cur.peek_tok(), Some(Tok::Ident(s)) if s == "primes")
            && cur.toks.get(cur.pos + 1).map(|t| &t.tok) == Some(&Tok::Sym(':'))
        {
            break;
        }
        let p = parse_expr(cur, &ring)?;
        generators.push(p);
        if !(cur.eat_sym(',') || matches!(cur.peek_tok(), Some(Tok::Newline) | None)) {
            return Err(cur.error("expected `,` or a new line between generators"));
        }
    }
    let mut primes = Vec::new();
    loop {
        cur.skip_newlines();
        if cur.at_end() {
            break;
        }
        if !section_header(cur, "primes") {
            return Err(cur.error("expected `primes:`"));
        }
        loop {
            cur.skip_newlines();
            if cur.peek_tok() != Some(&Tok::Sym('(')) {
                break;
            }
            cur.next();
            let mut block = Vec::new();
            loop {
                cur.skip_newlines();
                let (l, c) = cur.here();
                let f = ExprParser {
                    ring: &ring,
                    depth: 1,
                }
                .expr(cur)?;
                if !f.is_homogeneous() || f.total_degree() != Some(1) {
                    return Err(syntax(l, c, "prime generators must be linear forms"));
                }
                block.push(f);
                cur.skip_newlines();
                if cur.eat_sym(')') {
                    break;
                }
                cur.expect_sym(',')?;
            }
            primes.push(block);
            cur.eat_sym(',');
        }
    }
    if generators.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    Ok(IdealFile {
        ring,
        generators,
        primes,
    })
}

/// Product of variables raised to the given powers, for tests and builders.
pub fn monomial_from_exponents<F: Field>(ring: &Arc<PolyRing<F>>, exps: &[u32]) -> Polynomial<F> {
    Polynomial::from_monomial(ring, Monomial::new(exps.iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ring_over_gf3() {
        let decl = parse_ring_decl("ring GF(3)[t1,t2,t3] order=grevlex").unwrap();
        assert_eq!(decl.field, FieldSpec::Prime(3));
        assert_eq!(decl.vars.len(), 3);
        assert_eq!(decl.kind, OrderKind::Grevlex);
    }

    #[test]
    fn rationals_default_grevlex() {
        let decl = parse_ring_decl("ring QQ[t1,t2,t3,t4]").unwrap();
        assert_eq!(decl.field, FieldSpec::Rationals);
        assert_eq!(decl.vars.len(), 4);
        assert_eq!(decl.kind, OrderKind::Grevlex);
        assert!(decl.ranking.is_none());
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(parse_ring_decl("ring GF(4)[x]"), Err(Error::CompositeCharacteristic(4)));
    }

    #[test]
    fn duplicate_variable_rejected() {
        assert_eq!(
            parse_ring_decl("ring QQ[x,y,x]"),
            Err(Error::DuplicateVariable("x".into()))
        );
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_ring_decl("ring QQ[x,,y]") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 11)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn permuted_lex_order() {
        let decl = parse_ring_decl("ring GF(3)[t1,t2,t3] order=lex vars=t3,t2,t1").unwrap();
        assert_eq!(decl.ranking, Some(vec![2, 1, 0]));
    }

    fn gf3(n: usize) -> Arc<PolyRing<PrimeField>> {
        let names: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
        match parse_ring(&format!("ring GF(3)[{}]", names.join(","))).unwrap() {
            AnyRing::Prime(r) => r,
            _ => unreachable!(),
        }
    }

    #[test]
    fn determinantal_generator() {
        let r = gf3(6);
        let f = parse_polynomial("t1*t6 - t3*t4", &r).unwrap();
        assert_eq!(f.len(), 2);
        // grevlex: t3*t4 > t1*t6 because t1*t6 involves the smallest variable
        assert_eq!(f.leading_monomial().unwrap().exponents(), &[0, 0, 1, 1, 0, 0]);
        assert_eq!(f.to_string(), "2*t3*t4+t1*t6");
    }

    #[test]
    fn characteristic_reduction_drops_terms() {
        let r = gf3(2);
        assert_eq!(parse_polynomial("3*t1 + t2", &r).unwrap().to_string(), "t2");
        assert_eq!(parse_polynomial("t1^3", &r).unwrap().len(), 1);
    }

    #[test]
    fn parse_errors() {
        let r = gf3(2);
        assert_eq!(parse_polynomial("t1 + x", &r), Err(Error::UnknownVariable("x".into())));
        assert_eq!(parse_polynomial("t1^-2", &r), Err(Error::NegativeExponent));
        assert!(matches!(parse_polynomial("t1 + ", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("(t1", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn ideal_file_with_primes() {
        let text = "-- ten points\nring GF(3)[t1,t2,t3]\nideal: t1*t2^2-t1^2*t2,\n  t1*t3^3-t1^3*t3\n t2*t3^3-t2^3*t3\nprimes: (t2, t3), (t1 - t2, t3)\n";
        match parse_ideal_file(text).unwrap() {
            AnyIdealFile::Prime(f) => {
                assert_eq!(f.generators.len(), 3);
                assert_eq!(f.primes.len(), 2);
                assert_eq!(f.primes[1].len(), 2);
            }
            _ => panic!("expected GF(3)"),
        }
    }

    #[test]
    fn nonlinear_prime_rejected() {
        let text = "ring GF(3)[t1,t2]\nideal: t1*t2\nprimes: (t1^2)\n";
        assert!(matches!(parse_ideal_file(text), Err(Error::Syntax { line: 3, .. })));
    }

    fn arb_poly() -> impl Strategy<Value = String> {
        let atom = prop_oneof![
            (0u32..7).prop_map(|n| n.to_string()),
            (1usize..4).prop_map(|i| format!("t{i}")),
        ];
        atom.prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})+({b})")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})-({b})")),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
                (inner, 0u32..3).prop_map(|(a, e)| format!("({a})^{e}")),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(src in arb_poly()) {
            let rq = match parse_ring("ring QQ[t1,t2,t3]").unwrap() { AnyRing::Rational(r) => r, _ => unreachable!() };
            let f = parse_polynomial(&src, &rq).unwrap();
            let g = parse_polynomial(&f.to_string(), &rq).unwrap();
            prop_assert_eq!(&f, &g);
            let r3 = gf3(3);
            let f = parse_polynomial(&src, &r3).unwrap();
            let g = parse_polynomial(&f.to_string(), &r3).unwrap();
            prop_assert_eq!(f, g);
        }
    }
}
