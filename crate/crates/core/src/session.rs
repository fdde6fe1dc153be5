//! The session input language: rings, ideals, charts, arcs, R-ideals, chart
//! sets and weight lists, with a canonical printer.
//!
//! ```text
//! ring x, y, z;
//! ideal X = x*y - z^2;
//! chart E { dim 2; map = [y1, y1*y2^2, y1*y2]; divisor = y1; exceptional = true; }
//! arc a = [t, t, t] order 4;
//! rideal A = (x, y)^(3/2) * (x^2, y^3)^(-1);
//! chartset S = { E } attest "log resolution";
//! weights W = [1, 1, 1], [2, 1, 1];
//! ```

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chart::DivisorChart;
use crate::discrepancy::MonomialValuation;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::jets::{arc_parameter_ring, TruncArc};
use crate::poly::{Poly, PolyRing};
use crate::rational::{format_rat, Rat};
use crate::rideal::{RFactor, RIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Str(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::Str(_) => write!(f, "string"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |i: &mut usize, line: &mut usize, col: &mut usize, ch: char| {
            *i += 1;
            if ch == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, c);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                let ch = chars[i];
                advance(&mut i, &mut line, &mut col, ch);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                let ch = chars[i];
                s.push(ch);
                advance(&mut i, &mut line, &mut col, ch);
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: tl,
                column: tc,
            });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                let ch = chars[i];
                s.push(ch);
                advance(&mut i, &mut line, &mut col, ch);
            }
            let n: BigInt = s.parse().expect("digits");
            out.push(Token {
                tok: Tok::Int(n),
                line: tl,
                column: tc,
            });
        } else if c == '"' {
            advance(&mut i, &mut line, &mut col, c);
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return Err(parse_error(tl, tc, "unterminated string")),
                    Some('"') => {
                        advance(&mut i, &mut line, &mut col, '"');
                        break;
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(&mut i, &mut line, &mut col, ch);
                    }
                }
            }
            out.push(Token {
                tok: Tok::Str(s),
                line: tl,
                column: tc,
            });
        } else if ";,={}[]()+-*/^".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                line: tl,
                column: tc,
            });
            advance(&mut i, &mut line, &mut col, c);
        } else {
            return Err(parse_error(tl, tc, format!("unexpected character `{c}`")));
        }
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

/// Source of one R-ideal factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorSource {
    Named(String),
    Inline(Ideal),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorDecl {
    pub source: FactorSource,
    pub exponent: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Ideal {
        name: String,
        ideal: Ideal,
    },
    Chart {
        name: String,
        chart: DivisorChart,
    },
    Arc {
        name: String,
        polys: Vec<Poly>,
        order: usize,
    },
    RIdeal {
        name: String,
        factors: Vec<FactorDecl>,
    },
    ChartSet {
        name: String,
        members: Vec<String>,
        attest: Option<String>,
    },
    Weights {
        name: String,
        vectors: Vec<Vec<u32>>,
    },
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Ideal { name, .. }
            | Item::Chart { name, .. }
            | Item::Arc { name, .. }
            | Item::RIdeal { name, .. }
            | Item::ChartSet { name, .. }
            | Item::Weights { name, .. } => name,
        }
    }
}

/// A parsed session: one ring and named declarations in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Session {
    ring: Arc<PolyRing>,
    items: Vec<Item>,
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        parse_error(t.line, t.column, message)
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!("expected `{c}`, found {}", self.peek().tok)))
        }
    }

    fn ident(&mut self) -> Result<(String, usize, usize)> {
        let t = self.next();
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.column)),
            other => Err(parse_error(
                t.line,
                t.column,
                format!("expected identifier, found {other}"),
            )),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == word => Ok(()),
            other => Err(parse_error(
                t.line,
                t.column,
                format!("expected `{word}`, found {other}"),
            )),
        }
    }

    fn usize_lit(&mut self) -> Result<usize> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => n
                .try_into()
                .map_err(|_| parse_error(t.line, t.column, "integer too large")),
            other => Err(parse_error(
                t.line,
                t.column,
                format!("expected integer, found {other}"),
            )),
        }
    }

    /// `-? int (/ int)?`
    fn rational(&mut self) -> Result<Rat> {
        let negative = if self.is_sym('-') {
            self.next();
            true
        } else {
            false
        };
        let t = self.next();
        let Tok::Int(n) = t.tok else {
            return Err(parse_error(
                t.line,
                t.column,
                format!("expected number, found {}", t.tok),
            ));
        };
        let mut value = Rat::from_integer(n);
        if self.is_sym('/') {
            self.next();
            let d = self.next();
            let Tok::Int(den) = d.tok else {
                return Err(parse_error(d.line, d.column, "expected denominator"));
            };
            if den.is_zero() {
                return Err(parse_error(d.line, d.column, "zero denominator"));
            }
            value /= Rat::from_integer(den);
        }
        Ok(if negative { -value } else { value })
    }

    fn poly(&mut self, ring: &Arc<PolyRing>) -> Result<Poly> {
        let mut acc = self.poly_term(ring)?;
        loop {
            if self.is_sym('+') {
                self.next();
                acc = &acc + &self.poly_term(ring)?;
            } else if self.is_sym('-') {
                self.next();
                acc = &acc - &self.poly_term(ring)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_term(&mut self, ring: &Arc<PolyRing>) -> Result<Poly> {
        let mut acc = self.poly_unary(ring)?;
        loop {
            if self.is_sym('*') {
                self.next();
                acc = &acc * &self.poly_unary(ring)?;
            } else if self.is_sym('/') {
                let (line, column) = (self.peek().line, self.peek().column);
                self.next();
                let divisor = self.poly_unary(ring)?;
                match divisor.constant_value() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(Rat::one() / c)),
                    _ => {
                        return Err(parse_error(
                            line,
                            column,
                            "division only by nonzero constants",
                        ))
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_unary(&mut self, ring: &Arc<PolyRing>) -> Result<Poly> {
        if self.is_sym('-') {
            self.next();
            return Ok(-&self.poly_unary(ring)?);
        }
        let base = self.poly_atom(ring)?;
        if self.is_sym('^') {
            self.next();
            let exponent = if self.is_sym('(') {
                self.next();
                let e = self.usize_lit()?;
                self.expect_sym(')')?;
                e
            } else {
                self.usize_lit()?
            };
            let e = u32::try_from(exponent).map_err(|_| self.error_here("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn poly_atom(&mut self, ring: &Arc<PolyRing>) -> Result<Poly> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok(Poly::constant(ring, Rat::from_integer(n))),
            Tok::Ident(name) => match ring.index_of(&name) {
                Some(i) => Poly::var(ring, i),
                None => Err(parse_error(
                    t.line,
                    t.column,
                    format!("unknown variable `{name}`"),
                )),
            },
            Tok::Sym('(') => {
                let p = self.poly(ring)?;
                self.expect_sym(')')?;
                Ok(p)
            }
            other => Err(parse_error(
                t.line,
                t.column,
                format!("expected polynomial, found {other}"),
            )),
        }
    }

    fn poly_list(&mut self, ring: &Arc<PolyRing>, close: char) -> Result<Vec<Poly>> {
        let mut out = vec![self.poly(ring)?];
        while self.is_sym(',') {
            self.next();
            out.push(self.poly(ring)?);
        }
        self.expect_sym(close)?;
        Ok(out)
    }

    fn exponent_suffix(&mut self) -> Result<Rat> {
        if !self.is_sym('^') {
            return Ok(Rat::one());
        }
        self.next();
        if self.is_sym('(') {
            self.next();
            let r = self.rational()?;
            self.expect_sym(')')?;
            Ok(r)
        } else {
            Ok(Rat::from_integer(self.usize_lit()?.into()))
        }
    }
}

impl Session {
    pub fn parse(text: &str) -> Result<Session> {
        let mut p = Parser {
            tokens: lex(text)?,
            pos: 0,
        };
        let mut ring: Option<Arc<PolyRing>> = None;
        let mut items: Vec<Item> = Vec::new();
        while p.peek().tok != Tok::Eof {
            let (kw, line, column) = p.ident()?;
            if kw == "ring" {
                if ring.is_some() {
                    return Err(parse_error(line, column, "ring declared twice"));
                }
                let mut names = vec![p.ident()?.0];
                while p.is_sym(',') {
                    p.next();
                    names.push(p.ident()?.0);
                }
                p.expect_sym(';')?;
                ring = Some(
                    PolyRing::new(names).map_err(|e| parse_error(line, column, e.to_string()))?,
                );
                continue;
            }
            let Some(r) = ring.clone() else {
                return Err(parse_error(
                    line,
                    column,
                    "a `ring` declaration must come first",
                ));
            };
            let (name, nl, nc) = p.ident()?;
            if items.iter().any(|it| it.name() == name) {
                return Err(parse_error(nl, nc, format!("duplicate name `{name}`")));
            }
            let item = match kw.as_str() {
                "ideal" => {
                    p.expect_sym('=')?;
                    let gens = p.poly_list(&r, ';')?;
                    Item::Ideal {
                        name,
                        ideal: Ideal::new(&r, gens)?,
                    }
                }
                "chart" => parse_chart(&mut p, &r, name, line, column)?,
                "arc" => {
                    p.expect_sym('=')?;
                    p.expect_sym('[')?;
                    let t = arc_parameter_ring();
                    let polys = p.poly_list(&t, ']')?;
                    if polys.len() != r.num_vars() {
                        return Err(parse_error(
                            line,
                            column,
                            format!(
                                "arc has {} components, ring has {} variables",
                                polys.len(),
                                r.num_vars()
                            ),
                        ));
                    }
                    p.keyword("order")?;
                    let order = p.usize_lit()?;
                    p.expect_sym(';')?;
                    Item::Arc { name, polys, order }
                }
                "rideal" => {
                    p.expect_sym('=')?;
                    let mut factors = Vec::new();
                    if matches!(&p.peek().tok, Tok::Int(n) if n.is_one()) {
                        p.next();
                    } else {
                        loop {
                            factors.push(parse_factor(&mut p, &r, &items)?);
                            if p.is_sym('*') {
                                p.next();
                            } else {
                                break;
                            }
                        }
                    }
                    p.expect_sym(';')?;
                    Item::RIdeal { name, factors }
                }
                "chartset" => {
                    p.expect_sym('=')?;
                    p.expect_sym('{')?;
                    let mut members = Vec::new();
                    if !p.is_sym('}') {
                        loop {
                            let (m, ml, mc) = p.ident()?;
                            if !items
                                .iter()
                                .any(|it| matches!(it, Item::Chart { name, .. } if *name == m))
                            {
                                return Err(parse_error(ml, mc, format!("unknown chart `{m}`")));
                            }
                            members.push(m);
                            if p.is_sym(',') {
                                p.next();
                            } else {
                                break;
                            }
                        }
                    }
                    p.expect_sym('}')?;
                    let attest = if matches!(&p.peek().tok, Tok::Ident(s) if s == "attest") {
                        p.next();
                        let t = p.next();
                        match t.tok {
                            Tok::Str(s) => Some(s),
                            other => {
                                return Err(parse_error(
                                    t.line,
                                    t.column,
                                    format!("expected string, found {other}"),
                                ))
                            }
                        }
                    } else {
                        None
                    };
                    p.expect_sym(';')?;
                    Item::ChartSet {
                        name,
                        members,
                        attest,
                    }
                }
                "weights" => {
                    p.expect_sym('=')?;
                    let mut vectors = Vec::new();
                    loop {
                        let (vl, vc) = (p.peek().line, p.peek().column);
                        p.expect_sym('[')?;
                        let mut v = Vec::new();
                        loop {
                            let w = p.usize_lit()?;
                            v.push(
                                u32::try_from(w)
                                    .map_err(|_| parse_error(vl, vc, "weight too large"))?,
                            );
                            if p.is_sym(',') {
                                p.next();
                            } else {
                                break;
                            }
                        }
                        p.expect_sym(']')?;
                        if v.len() != r.num_vars() || v.contains(&0) {
                            return Err(parse_error(
                                vl,
                                vc,
                                format!("weights need {} positive entries", r.num_vars()),
                            ));
                        }
                        vectors.push(v);
                        if p.is_sym(',') {
                            p.next();
                        } else {
                            break;
                        }
                    }
                    p.expect_sym(';')?;
                    Item::Weights { name, vectors }
                }
                other => {
                    return Err(parse_error(
                        line,
                        column,
                        format!("unknown statement `{other}`"),
                    ))
                }
            };
            items.push(item);
        }
        let Some(ring) = ring else {
            return Err(parse_error(1, 1, "missing `ring` declaration"));
        };
        Ok(Session { ring, items })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    fn find(&self, name: &str) -> Result<&Item> {
        self.items
            .iter()
            .find(|it| it.name() == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal> {
        match self.find(name)? {
            Item::Ideal { ideal, .. } => Ok(ideal),
            _ => Err(Error::UnknownName(format!("{name} is not an ideal"))),
        }
    }

    pub fn chart(&self, name: &str) -> Result<&DivisorChart> {
        match self.find(name)? {
            Item::Chart { chart, .. } => Ok(chart),
            _ => Err(Error::UnknownName(format!("{name} is not a chart"))),
        }
    }

    pub fn arc(&self, name: &str) -> Result<TruncArc> {
        match self.find(name)? {
            Item::Arc { polys, order, .. } => TruncArc::from_polys(polys.clone(), *order),
            _ => Err(Error::UnknownName(format!("{name} is not an arc"))),
        }
    }

    /// Exact arc components, re-truncated at `m`.
    pub fn arc_at(&self, name: &str, m: usize) -> Result<TruncArc> {
        Ok(self.arc(name)?.truncate(m))
    }

    pub fn rideal(&self, name: &str) -> Result<RIdeal> {
        match self.find(name)? {
            Item::RIdeal { factors, .. } => {
                let resolved = factors
                    .iter()
                    .map(|f| {
                        let ideal = match &f.source {
                            FactorSource::Named(n) => self.ideal(n)?.clone(),
                            FactorSource::Inline(i) => i.clone(),
                        };
                        Ok(RFactor {
                            ideal,
                            exponent: f.exponent.clone(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                RIdeal::new(&self.ring, resolved)
            }
            _ => Err(Error::UnknownName(format!("{name} is not an R-ideal"))),
        }
    }

    pub fn chartset(&self, name: &str) -> Result<(Vec<DivisorChart>, Option<String>)> {
        match self.find(name)? {
            Item::ChartSet {
                members, attest, ..
            } => {
                let charts = members
                    .iter()
                    .map(|m| self.chart(m).cloned())
                    .collect::<Result<Vec<_>>>()?;
                Ok((charts, attest.clone()))
            }
            _ => Err(Error::UnknownName(format!("{name} is not a chart set"))),
        }
    }

    pub fn weights(&self, name: &str) -> Result<Vec<MonomialValuation>> {
        match self.find(name)? {
            Item::Weights { vectors, .. } => vectors
                .iter()
                .map(|v| MonomialValuation::new(v.clone()))
                .collect(),
            _ => Err(Error::UnknownName(format!("{name} is not a weight list"))),
        }
    }

    /// Parses a polynomial in the session ring.
    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        parse_poly(&self.ring, text)
    }
}

fn parse_chart(
    p: &mut Parser,
    ambient: &Arc<PolyRing>,
    name: String,
    line: usize,
    column: usize,
) -> Result<Item> {
    p.expect_sym('{')?;
    p.keyword("dim")?;
    let dim = p.usize_lit()?;
    if dim == 0 {
        return Err(parse_error(
            line,
            column,
            "chart dimension must be positive",
        ));
    }
    p.expect_sym(';')?;
    let chart_ring = PolyRing::chart_ring(dim)?;
    p.keyword("map")?;
    p.expect_sym('=')?;
    p.expect_sym('[')?;
    let map = p.poly_list(&chart_ring, ']')?;
    p.expect_sym(';')?;
    p.keyword("divisor")?;
    p.expect_sym('=')?;
    let (div, dl, dc) = p.ident()?;
    let divisor_index = chart_ring
        .index_of(&div)
        .ok_or_else(|| parse_error(dl, dc, format!("unknown chart variable `{div}`")))?;
    p.expect_sym(';')?;
    p.keyword("exceptional")?;
    p.expect_sym('=')?;
    let (flag, fl, fc) = p.ident()?;
    let exceptional = match flag.as_str() {
        "true" => true,
        "false" => false,
        _ => return Err(parse_error(fl, fc, "expected `true` or `false`")),
    };
    p.expect_sym(';')?;
    p.expect_sym('}')?;
    let chart = DivisorChart::new(name.clone(), ambient, map, divisor_index, exceptional)
        .map_err(|e| parse_error(line, column, e.to_string()))?;
    Ok(Item::Chart { name, chart })
}

fn parse_factor(p: &mut Parser, ring: &Arc<PolyRing>, items: &[Item]) -> Result<FactorDecl> {
    let source = if p.is_sym('(') {
        p.next();
        let gens = p.poly_list(ring, ')')?;
        let ideal = Ideal::new(ring, gens)?;
        if ideal.is_zero() {
            return Err(p.error_here("R-ideal factor is the zero ideal"));
        }
        FactorSource::Inline(ideal)
    } else {
        let (n, l, c) = p.ident()?;
        if !items
            .iter()
            .any(|it| matches!(it, Item::Ideal { name, .. } if *name == n))
        {
            return Err(parse_error(l, c, format!("unknown ideal `{n}`")));
        }
        FactorSource::Named(n)
    };
    let exponent = p.exponent_suffix()?;
    Ok(FactorDecl { source, exponent })
}

/// Parses a standalone polynomial over `ring`.
pub fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<Poly> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let poly = p.poly(ring)?;
    if p.peek().tok != Tok::Eof {
        return Err(p.error_here(format!("unexpected {}", p.peek().tok)));
    }
    Ok(poly)
}

/// Parses a comma-separated polynomial list as an ideal.
pub fn parse_ideal(ring: &Arc<PolyRing>, text: &str) -> Result<Ideal> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let mut gens = vec![p.poly(ring)?];
    while p.is_sym(',') {
        p.next();
        gens.push(p.poly(ring)?);
    }
    if p.peek().tok != Tok::Eof {
        return Err(p.error_here(format!("unexpected {}", p.peek().tok)));
    }
    Ideal::new(ring, gens)
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Canonical form; parsing it yields an equal session.
impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {};", self.ring.names().join(", "))?;
        for item in &self.items {
            match item {
                Item::Ideal { name, ideal } => {
                    write!(f, "ideal {name} = ")?;
                    if ideal.is_zero() {
                        write!(f, "0")?;
                    } else {
                        write_list(f, ideal.generators())?;
                    }
                    writeln!(f, ";")?;
                }
                Item::Chart { name, chart } => {
                    write!(f, "chart {name} {{ dim {}; map = [", chart.chart_dim())?;
                    write_list(f, chart.map())?;
                    writeln!(
                        f,
                        "]; divisor = {}; exceptional = {}; }}",
                        chart.chart_ring().name(chart.divisor_index()),
                        chart.exceptional()
                    )?;
                }
                Item::Arc { name, polys, order } => {
                    write!(f, "arc {name} = [")?;
                    write_list(f, polys)?;
                    writeln!(f, "] order {order};")?;
                }
                Item::RIdeal { name, factors } => {
                    write!(f, "rideal {name} = ")?;
                    if factors.is_empty() {
                        write!(f, "1")?;
                    }
                    for (i, fac) in factors.iter().enumerate() {
                        if i > 0 {
                            write!(f, " * ")?;
                        }
                        match &fac.source {
                            FactorSource::Named(n) => write!(f, "{n}")?,
                            FactorSource::Inline(ideal) => {
                                write!(f, "(")?;
                                write_list(f, ideal.generators())?;
                                write!(f, ")")?;
                            }
                        }
                        write!(f, "^({})", format_rat(&fac.exponent))?;
                    }
                    writeln!(f, ";")?;
                }
                Item::ChartSet {
                    name,
                    members,
                    attest,
                } => {
                    write!(f, "chartset {name} = {{ ")?;
                    write_list(f, members)?;
                    write!(f, " }}")?;
                    if let Some(a) = attest {
                        write!(f, " attest \"{a}\"")?;
                    }
                    writeln!(f, ";")?;
                }
                Item::Weights { name, vectors } => {
                    write!(f, "weights {name} = ")?;
                    for (i, v) in vectors.iter().enumerate() {
                        if i > 0 {
                            write!(f, ", ")?;
                        }
                        write!(f, "[")?;
                        write_list(f, v)?;
                        write!(f, "]")?;
                    }
                    writeln!(f, ";")?;
                }
            }
        }
        Ok(())
    }
}
