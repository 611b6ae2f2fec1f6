//! The line-oriented text format for presentations, forms and section data.
//!
//! ```text
//! space wedge_lines(2)
//! wedge
//! chart o : R^0
//! chart x1 : R^1
//! arrow o_x1 : o -> x1 = []
//! ambient 2
//! embed x1 = [s1, 0]
//! form w : degree 1 on wedge_lines(2)
//! on x1 : (1 + s1^2) d[1]
//! section s : tangent
//! on x1 : [s1^2]
//! point = [1, 2]
//! ```
//!
//! Expressions are polynomials in `s1..sN` (`N` the source chart's dimension)
//! with `+ - * / ^`, parentheses and exact rational literals; division is
//! only by nonzero constants. `[]` is the zero germ of the right shape.
//! Differentials are `d[i1,...,ik]` with 1-based indices in lexicographic
//! wedge order. Everything after `#` is a comment.

use std::fmt::{self, Write as _};

use diffeo_core::forms::{PresentedForm, PresentedSection, SectionKind};
use diffeo_core::presentation::{Ambient, Arrow, Chart};
use diffeo_core::{GermPresentation, Poly, PolyForm, PolyMap, Rational};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// A syntax or semantic error, located by 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Everything a file can declare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub presentation: GermPresentation,
    pub forms: Vec<PresentedForm>,
    pub sections: Vec<PresentedSection>,
}

impl Document {
    pub fn form(&self, name: &str) -> Option<&PresentedForm> {
        self.forms.iter().find(|f| f.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    Arrow,
    Other(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    /// Byte offset into the line.
    at: usize,
}

struct Line<'a> {
    text: &'a str,
    number: usize,
    toks: Vec<Token>,
    pos: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let tok = if c.is_whitespace() {
            continue;
        } else if c.is_ascii_digit() {
            let mut end = i + 1;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            Tok::Num(text[i..end].parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i + 1;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            Tok::Ident(text[i..end].to_string())
        } else if c == '-' && chars.peek().map(|&(_, d)| d) == Some('>') {
            chars.next();
            Tok::Arrow
        } else if "+-*/^()[],:=".contains(c) {
            Tok::Sym(c)
        } else {
            // reported only if the parser reaches it; names may contain anything
            Tok::Other(c)
        };
        out.push(Token { tok, at: i });
    }
    out
}

impl<'a> Line<'a> {
    fn new(text: &'a str, number: usize) -> Self {
        Line {
            text,
            number,
            toks: tokenize(text),
            pos: 0,
        }
    }

    fn column_of(&self, byte: usize) -> usize {
        self.text[..byte.min(self.text.len())].chars().count() + 1
    }

    fn here(&self) -> usize {
        match self.toks.get(self.pos) {
            Some(t) => t.at,
            None => self.text.trim_end().len(),
        }
    }

    fn error_at(&self, byte: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column: self.column_of(byte),
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        match self.peek() {
            Some(Tok::Other(c)) => self.error_at(self.here(), format!("unexpected character `{c}`")),
            _ => self.error_at(self.here(), message),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn expect_arrow(&mut self) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Arrow) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error("expected `->`"))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        match self.toks.get(self.pos) {
            Some(Token {
                tok: Tok::Ident(s),
                at,
            }) => {
                let out = (s.clone(), *at);
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected `{kw}`"))),
        }
    }

    fn expect_count(&mut self, what: &str) -> Result<usize, ParseError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Num(n), .. }) => {
                let v = n.to_usize().ok_or_else(|| self.error(format!("{what} is too large")))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    /// The raw text from the current token to the end of the line.
    fn rest(&mut self) -> &'a str {
        let start = self.here();
        self.pos = self.toks.len();
        self.text[start..].trim()
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self, n: usize) -> Result<Poly, ParseError> {
        let mut acc = self.term(n)?;
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term(n)?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term(n)?;
            } else {
                return Ok(acc);
            }
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self, n: usize) -> Result<Poly, ParseError> {
        let mut acc = self.unary(n)?;
        loop {
            if self.eat_sym('*') {
                acc = &acc * &self.unary(n)?;
            } else if self.peek_sym('/') {
                acc = self.divide(acc, n)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn divide(&mut self, acc: Poly, n: usize) -> Result<Poly, ParseError> {
        self.expect_sym('/')?;
        let at = self.here();
        let d = self.unary(n)?;
        match d.as_constant() {
            Some(c) if !c.is_zero() => Ok(acc.scale(&c.recip())),
            Some(_) => Err(self.error_at(at, "division by zero")),
            None => Err(self.error_at(at, "can only divide by a nonzero constant")),
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self, n: usize) -> Result<Poly, ParseError> {
        if self.eat_sym('-') {
            Ok(-&self.unary(n)?)
        } else {
            self.power(n)
        }
    }

    // power := atom ('^' NUM)?
    fn power(&mut self, n: usize) -> Result<Poly, ParseError> {
        let base = self.atom(n)?;
        if self.eat_sym('^') {
            let at = self.here();
            let e = self.expect_count("an exponent")?;
            let e = u32::try_from(e).map_err(|_| self.error_at(at, "exponent is too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    // atom := NUM | 's' NUM | '(' expr ')'
    fn atom(&mut self, n: usize) -> Result<Poly, ParseError> {
        let Some(t) = self.toks.get(self.pos).cloned() else {
            return Err(self.error("expected an expression"));
        };
        match t.tok {
            Tok::Num(v) => {
                self.pos += 1;
                Ok(Poly::constant(n, Rational::from_integer(v)))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr(n)?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                let index = name
                    .strip_prefix('s')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| self.error_at(t.at, format!("unknown identifier `{name}`; variables are s1, s2, ...")))?;
                if index == 0 || index > n {
                    return Err(self.error_at(
                        t.at,
                        format!("variable `{name}` is out of range on a domain of dimension {n}"),
                    ));
                }
                self.pos += 1;
                Ok(Poly::var(n, index - 1))
            }
            _ => Err(self.error("expected an expression")),
        }
    }

    /// `[e1, ..., em]`; `[]` is the zero germ into `R^m`.
    fn poly_list(&mut self, n: usize, m: usize, what: &str) -> Result<PolyMap, ParseError> {
        let open = self.here();
        self.expect_sym('[')?;
        if self.eat_sym(']') {
            return Ok(PolyMap::zero(n, m));
        }
        let mut comps = vec![self.expr(n)?];
        while self.eat_sym(',') {
            comps.push(self.expr(n)?);
        }
        self.expect_sym(']')?;
        if comps.len() != m {
            return Err(self.error_at(
                open,
                format!("{what} needs {m} components, got {}", comps.len()),
            ));
        }
        Ok(PolyMap::new(n, comps).expect("components built in n variables"))
    }

    fn at_differential(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == "d")
            && matches!(self.toks.get(self.pos + 1), Some(Token { tok: Tok::Sym('['), .. }))
    }

    fn differential(&mut self, n: usize) -> Result<Vec<usize>, ParseError> {
        self.pos += 1;
        self.expect_sym('[')?;
        let mut idx = Vec::new();
        if !self.peek_sym(']') {
            loop {
                let at = self.here();
                let i = self.expect_count("a differential index")?;
                if i == 0 || i > n {
                    return Err(self.error_at(at, format!("d[{i}] is out of range on a domain of dimension {n}")));
                }
                idx.push(i - 1);
                if !self.eat_sym(',') {
                    break;
                }
            }
        }
        self.expect_sym(']')?;
        Ok(idx)
    }

    // form := fterm (('+' | '-') fterm)*
    fn form(&mut self, n: usize, k: usize) -> Result<PolyForm, ParseError> {
        let mut negate = self.eat_sym('-');
        let mut acc = PolyForm::zero(n, k);
        loop {
            let at = self.here();
            let (coeff, idx) = self.form_term(n)?;
            let coeff = if negate { -&coeff } else { coeff };
            let term = match idx {
                Some(idx) if idx.len() == k => PolyForm::monomial(n, &idx, coeff).expect("indices checked"),
                None if k == 0 => PolyForm::function(coeff),
                None if coeff.is_zero() => PolyForm::zero(n, k),
                Some(idx) => {
                    return Err(self.error_at(at, format!("term has degree {}, the form has degree {k}", idx.len())))
                }
                None => return Err(self.error_at(at, format!("term has degree 0, the form has degree {k}"))),
            };
            acc = acc.add(&term).expect("same shape");
            if self.eat_sym('+') {
                negate = false;
            } else if self.eat_sym('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    // fterm := factor (('*' | '/')? factor)* with at most one differential;
    // juxtaposition is only allowed next to a differential
    fn form_term(&mut self, n: usize) -> Result<(Poly, Option<Vec<usize>>), ParseError> {
        let mut coeff = Poly::one(n);
        let mut idx: Option<Vec<usize>> = None;
        loop {
            if self.at_differential() {
                let at = self.here();
                if idx.is_some() {
                    return Err(self.error_at(at, "a term may contain only one differential"));
                }
                idx = Some(self.differential(n)?);
            } else {
                coeff = &coeff * &self.unary(n)?;
            }
            if self.eat_sym('*') {
                continue;
            }
            if self.peek_sym('/') {
                coeff = self.divide(coeff, n)?;
                if self.eat_sym('*') || self.at_differential() {
                    continue;
                }
                return Ok((coeff, idx));
            }
            if self.at_differential() && idx.is_none() {
                continue;
            }
            return Ok((coeff, idx));
        }
    }

    fn constants(&mut self) -> Result<Vec<Rational>, ParseError> {
        self.expect_sym('[')?;
        let mut out = Vec::new();
        if self.eat_sym(']') {
            return Ok(out);
        }
        loop {
            let at = self.here();
            let e = self.expr(0)?;
            out.push(e.as_constant().ok_or_else(|| self.error_at(at, "expected a constant"))?);
            if !self.eat_sym(',') {
                break;
            }
        }
        self.expect_sym(']')?;
        Ok(out)
    }
}

enum Block {
    None,
    Form(usize),
    Section(usize),
}

struct Builder {
    space: Option<String>,
    charts: Vec<Chart>,
    arrows: Vec<Arrow>,
    wedge: bool,
    ambient: Option<(usize, usize, Vec<Option<PolyMap>>)>,
    forms: Vec<PresentedForm>,
    sections: Vec<PresentedSection>,
    block: Block,
    /// Presentation directives are rejected when parsing data for an existing space.
    frozen: bool,
}

impl Builder {
    fn chart(&self, line: &Line<'_>, id: &str, at: usize) -> Result<usize, ParseError> {
        self.charts
            .iter()
            .position(|c| c.id == id)
            .ok_or_else(|| line.error_at(at, format!("unknown chart `{id}`")))
    }

    fn check_new_id(&self, line: &Line<'_>, id: &str, at: usize) -> Result<(), ParseError> {
        if self.charts.iter().any(|c| c.id == id) || self.arrows.iter().any(|a| a.id == id) {
            Err(line.error_at(at, format!("`{id}` is already defined")))
        } else {
            Ok(())
        }
    }

    fn directive(&mut self, line: &mut Line<'_>) -> Result<(), ParseError> {
        let (kw, kw_at) = line.expect_ident("a directive")?;
        let structural = matches!(kw.as_str(), "space" | "wedge" | "chart" | "arrow" | "ambient" | "embed");
        if structural && self.frozen {
            return Err(line.error_at(kw_at, format!("`{kw}` is not allowed in a data file")));
        }
        match kw.as_str() {
            "space" => {
                let name = line.rest();
                if name.is_empty() {
                    return Err(line.error("expected a space name"));
                }
                if self.space.is_some() {
                    return Err(line.error_at(kw_at, "space is already named"));
                }
                self.space = Some(name.to_string());
                self.block = Block::None;
            }
            "wedge" => {
                line.expect_end()?;
                self.wedge = true;
            }
            "chart" => {
                let (id, at) = line.expect_ident("a chart name")?;
                self.check_new_id(line, &id, at)?;
                line.expect_sym(':')?;
                line.expect_keyword("R")?;
                line.expect_sym('^')?;
                let dim = line.expect_count("a dimension")?;
                line.expect_end()?;
                if self.ambient.is_some() {
                    return Err(line.error_at(kw_at, "charts must be declared before `ambient`"));
                }
                self.charts.push(Chart { id, dim });
            }
            "arrow" => {
                let (id, at) = line.expect_ident("an arrow name")?;
                self.check_new_id(line, &id, at)?;
                line.expect_sym(':')?;
                let (src, src_at) = line.expect_ident("a source chart")?;
                let src = self.chart(line, &src, src_at)?;
                line.expect_arrow()?;
                let (dst, dst_at) = line.expect_ident("a target chart")?;
                let dst = self.chart(line, &dst, dst_at)?;
                line.expect_sym('=')?;
                let map = line.poly_list(self.charts[src].dim, self.charts[dst].dim, &format!("arrow `{id}`"))?;
                line.expect_end()?;
                self.arrows.push(Arrow { id, src, dst, map });
            }
            "ambient" => {
                if self.ambient.is_some() {
                    return Err(line.error_at(kw_at, "ambient space is already declared"));
                }
                let dim = line.expect_count("a dimension")?;
                line.expect_end()?;
                self.ambient = Some((dim, line.number, vec![None; self.charts.len()]));
            }
            "embed" => {
                let (id, at) = line.expect_ident("a chart name")?;
                let c = self.chart(line, &id, at)?;
                let Some((dim, _, embeds)) = self.ambient.as_mut() else {
                    return Err(line.error_at(kw_at, "`embed` requires a preceding `ambient`"));
                };
                let dim = *dim;
                if embeds[c].is_some() {
                    return Err(line.error_at(at, format!("chart `{id}` is already embedded")));
                }
                line.expect_sym('=')?;
                let map = line.poly_list(self.charts[c].dim, dim, &format!("embedding of `{id}`"))?;
                line.expect_end()?;
                self.ambient.as_mut().expect("checked").2[c] = Some(map);
            }
            "form" => {
                let (name, at) = line.expect_ident("a form name")?;
                if self.forms.iter().any(|f| f.name == name) {
                    return Err(line.error_at(at, format!("form `{name}` is already defined")));
                }
                line.expect_sym(':')?;
                line.expect_keyword("degree")?;
                let k = line.expect_count("a degree")?;
                line.expect_keyword("on")?;
                let space_at = line.here();
                let space = line.rest();
                if let Some(own) = &self.space {
                    if own != space {
                        return Err(line.error_at(space_at, format!("form is declared on `{space}`, this space is `{own}`")));
                    }
                }
                let comps = self.charts.iter().map(|c| PolyForm::zero(c.dim, k)).collect();
                self.forms.push(PresentedForm::new(name, k, comps));
                self.block = Block::Form(self.forms.len() - 1);
            }
            "section" => {
                let (name, _) = line.expect_ident("a section name")?;
                line.expect_sym(':')?;
                let (kind, at) = line.expect_ident("`tangent` or `cotangent`")?;
                let kind = match kind.as_str() {
                    "tangent" => SectionKind::Tangent,
                    "cotangent" => SectionKind::Cotangent,
                    _ => return Err(line.error_at(at, "expected `tangent` or `cotangent`")),
                };
                line.expect_end()?;
                let components = self.charts.iter().map(|c| PolyMap::zero(c.dim, c.dim)).collect();
                self.sections.push(PresentedSection {
                    name,
                    kind,
                    components,
                    point: None,
                });
                self.block = Block::Section(self.sections.len() - 1);
            }
            "on" => {
                let (id, at) = line.expect_ident("a chart name")?;
                let c = self.chart(line, &id, at)?;
                line.expect_sym(':')?;
                let n = self.charts[c].dim;
                match self.block {
                    Block::Form(f) => {
                        let k = self.forms[f].degree;
                        let w = line.form(n, k)?;
                        line.expect_end()?;
                        self.forms[f].components[c] = w;
                    }
                    Block::Section(s) => {
                        let m = line.poly_list(n, n, &format!("section data on `{id}`"))?;
                        line.expect_end()?;
                        self.sections[s].components[c] = m;
                    }
                    Block::None => return Err(line.error_at(kw_at, "`on` must follow a `form` or `section` line")),
                }
            }
            "point" => {
                let Block::Section(s) = self.block else {
                    return Err(line.error_at(kw_at, "`point` must follow a `section` line"));
                };
                if self.sections[s].kind != SectionKind::Cotangent {
                    return Err(line.error_at(kw_at, "`point` only applies to cotangent sections"));
                }
                line.expect_sym('=')?;
                let values = line.constants()?;
                line.expect_end()?;
                self.sections[s].point = Some(values);
            }
            other => return Err(line.error_at(kw_at, format!("unknown directive `{other}`"))),
        }
        Ok(())
    }

    fn finish(self) -> Result<Document, ParseError> {
        let ambient = match self.ambient {
            None => None,
            Some((dim, line, embeds)) => {
                let mut out = Vec::with_capacity(embeds.len());
                for (c, e) in self.charts.iter().zip(embeds) {
                    out.push(e.ok_or_else(|| ParseError {
                        line,
                        column: 1,
                        message: format!("chart `{}` has no `embed` line", c.id),
                    })?);
                }
                Some(Ambient { dim, embeds: out })
            }
        };
        Ok(Document {
            presentation: GermPresentation {
                name: self.space.unwrap_or_else(|| "unnamed".to_string()),
                charts: self.charts,
                arrows: self.arrows,
                ambient,
                wedge: self.wedge,
            },
            forms: self.forms,
            sections: self.sections,
        })
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(code, _)| code)
}

fn run(text: &str, mut b: Builder) -> Result<Document, ParseError> {
    for (i, raw) in text.lines().enumerate() {
        let code = strip_comment(raw);
        if code.trim().is_empty() {
            continue;
        }
        let mut line = Line::new(code, i + 1);
        b.directive(&mut line)?;
    }
    b.finish()
}

/// Parses a complete file. The presentation is not validated here.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    run(
        text,
        Builder {
            space: None,
            charts: Vec::new(),
            arrows: Vec::new(),
            wedge: false,
            ambient: None,
            forms: Vec::new(),
            sections: Vec::new(),
            block: Block::None,
            frozen: false,
        },
    )
}

/// Parses a file that only declares the presentation.
pub fn parse_presentation(text: &str) -> Result<GermPresentation, ParseError> {
    parse_document(text).map(|d| d.presentation)
}

/// Parses forms and sections for an existing presentation.
pub fn parse_data(text: &str, p: &GermPresentation) -> Result<Document, ParseError> {
    let ambient = p.ambient.as_ref().map(|a| (a.dim, 0, a.embeds.iter().cloned().map(Some).collect()));
    run(
        text,
        Builder {
            space: Some(p.name.clone()),
            charts: p.charts.clone(),
            arrows: p.arrows.clone(),
            wedge: p.wedge,
            ambient,
            forms: Vec::new(),
            sections: Vec::new(),
            block: Block::None,
            frozen: true,
        },
    )
}

/// Writes a presentation in the text format.
pub fn print_presentation(p: &GermPresentation) -> String {
    let mut out = String::new();
    writeln!(out, "space {}", p.name).unwrap();
    if p.wedge {
        out.push_str("wedge\n");
    }
    for c in &p.charts {
        writeln!(out, "chart {} : R^{}", c.id, c.dim).unwrap();
    }
    for a in &p.arrows {
        writeln!(
            out,
            "arrow {} : {} -> {} = {}",
            a.id, p.charts[a.src].id, p.charts[a.dst].id, a.map
        )
        .unwrap();
    }
    if let Some(amb) = &p.ambient {
        writeln!(out, "ambient {}", amb.dim).unwrap();
        for (c, e) in p.charts.iter().zip(&amb.embeds) {
            writeln!(out, "embed {} = {}", c.id, e).unwrap();
        }
    }
    out
}

/// Writes a whole document; zero chart components are omitted.
pub fn print_document(d: &Document) -> String {
    let p = &d.presentation;
    let mut out = print_presentation(p);
    for f in &d.forms {
        writeln!(out, "form {} : degree {} on {}", f.name, f.degree, p.name).unwrap();
        for (c, w) in p.charts.iter().zip(&f.components) {
            if !w.is_zero() {
                writeln!(out, "on {} : {}", c.id, w).unwrap();
            }
        }
    }
    for s in &d.sections {
        writeln!(out, "section {} : {}", s.name, s.kind).unwrap();
        for (c, m) in p.charts.iter().zip(&s.components) {
            if m.components().iter().any(|q| !q.is_zero()) {
                writeln!(out, "on {} : {}", c.id, m).unwrap();
            }
        }
        if let Some(point) = &s.point {
            let vals: Vec<String> = point.iter().map(ToString::to_string).collect();
            writeln!(out, "point = [{}]", vals.join(", ")).unwrap();
        }
    }
    out
}
