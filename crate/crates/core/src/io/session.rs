use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightedDigraph};
use crate::ideal::{Ctx, Monomial, MonomialIdeal, VarContext, VarSet};

/// An object bound to a name in an input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Binding {
    Ideal(MonomialIdeal),
    Graph(Graph),
    Clutter(Clutter),
    Digraph(WeightedDigraph),
}

impl Binding {
    pub fn kind(&self) -> &'static str {
        match self {
            Binding::Ideal(_) => "ideal",
            Binding::Graph(_) => "graph",
            Binding::Clutter(_) => "clutter",
            Binding::Digraph(_) => "digraph",
        }
    }
}

/// A ring together with the named objects declared over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Session {
    ctx: Ctx,
    bindings: Vec<(String, Binding)>,
}

impl Session {
    /// Parse the line-oriented input language.
    ///
    /// ```text
    /// ring x1 x2 x3
    /// ideal I = x1^2*x2, x3
    /// graph G = {x1 x2}, {x2 x3}
    /// clutter C = {x1 x2 x3}
    /// digraph D = (x1 -> x2 : 3), (x2 -> x3 : 1)
    /// ```
    pub fn parse(text: &str) -> Result<Session> {
        let mut ctx: Option<Ctx> = None;
        let mut bindings: Vec<(String, Binding)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("");
            let tokens = lex(body, line)?;
            if tokens.is_empty() {
                continue;
            }
            let mut p = LineParser { tokens, pos: 0, line, end: body.chars().count() + 1 };
            let keyword = p.ident()?;
            if keyword.text == "ring" {
                if ctx.is_some() {
                    return Err(keyword.error("a second `ring` line"));
                }
                ctx = Some(p.ring()?);
                continue;
            }
            let Some(ctx) = &ctx else {
                return Err(keyword.error("the first statement must be `ring`"));
            };
            if !matches!(keyword.text.as_str(), "ideal" | "graph" | "clutter" | "digraph") {
                return Err(keyword.error(&format!("unknown statement `{}`", keyword.text)));
            }
            let name = p.ident()?;
            if bindings.iter().any(|(n, _)| *n == name.text) {
                return Err(name.error(&format!("`{}` is already bound", name.text)));
            }
            p.expect(Tok::Eq)?;
            let value = match keyword.text.as_str() {
                "ideal" => Binding::Ideal(p.ideal(ctx)?),
                "graph" => Binding::Graph(p.graph(ctx)?),
                "clutter" => Binding::Clutter(p.clutter(ctx)?),
                _ => Binding::Digraph(p.digraph(ctx)?),
            };
            p.finish()?;
            bindings.push((name.text, value));
        }
        let ctx = ctx.ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing `ring` line".into(),
        })?;
        Ok(Session { ctx, bindings })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn bindings(&self) -> &[(String, Binding)] {
        &self.bindings
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }

    /// Bind a new object; the name must be fresh and the object must live
    /// in the session ring.
    pub fn bind(&mut self, name: &str, value: Binding) -> Result<()> {
        if lex(name, 1).map(|t| t.len() != 1 || !matches!(t[0].tok, Tok::Ident(_))).unwrap_or(true) {
            return Err(Error::precondition(format!("`{name}` is not an identifier")));
        }
        if self.get(name).is_some() {
            return Err(Error::precondition(format!("`{name}` is already bound")));
        }
        let ctx = match &value {
            Binding::Ideal(i) => i.ctx(),
            Binding::Graph(g) => g.ctx(),
            Binding::Clutter(c) => c.ctx(),
            Binding::Digraph(d) => d.ctx(),
        };
        crate::ideal::ensure_same(&self.ctx, ctx)?;
        self.bindings.push((name.to_string(), value));
        Ok(())
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ctx.names().join(" "))?;
        for (name, value) in &self.bindings {
            let mut rhs = String::new();
            match value {
                Binding::Ideal(i) => {
                    let gens: Vec<String> = i.gens().iter().map(Monomial::to_string).collect();
                    rhs.push_str(&gens.join(", "));
                }
                Binding::Graph(g) => rhs = g.display_edges(),
                Binding::Clutter(c) => rhs = c.display_edges(),
                Binding::Digraph(d) => {
                    for (k, &(t, h)) in d.arcs().iter().enumerate() {
                        if k > 0 {
                            rhs.push_str(", ");
                        }
                        let _ = write!(
                            rhs,
                            "({} -> {} : {})",
                            self.ctx.name(t),
                            self.ctx.name(h),
                            d.weight(h)
                        );
                    }
                }
            }
            writeln!(f, "{} {name} = {rhs}", value.kind())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u32),
    Eq,
    Comma,
    Star,
    Caret,
    Colon,
    Arrow,
    LBrace,
    RBrace,
    LParen,
    RParen,
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

fn lex(text: &str, line: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '=' => Some(Tok::Eq),
            ',' => Some(Tok::Comma),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            ':' => Some(Tok::Colon),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        let tok = if let Some(t) = single {
            i += 1;
            t
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            i += 2;
            Tok::Arrow
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            Tok::Int(digits.parse().map_err(|_| {
                parse_error(line, column, format!("integer `{digits}` is too large"))
            })?)
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || matches!(chars[i], '_' | '\'' | '.')) {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else {
            return Err(parse_error(line, column, format!("unexpected character `{c}`")));
        };
        out.push(Token { tok, line, column });
    }
    Ok(out)
}

struct Name {
    text: String,
    line: usize,
    column: usize,
}

impl Name {
    fn error(&self, message: &str) -> Error {
        parse_error(self.line, self.column, message)
    }
}

struct LineParser {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end: usize,
}

impl LineParser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map_or((self.line, self.end), |t| (t.line, t.column))
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.here();
        parse_error(line, column, message)
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of line".into(),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(t) => format!("{t:?}"),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {tok:?}, found {}", self.describe())))
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<Name> {
        let (line, column) = self.here();
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let text = s.clone();
                self.pos += 1;
                Ok(Name { text, line, column })
            }
            _ => Err(self.error(format!("expected a name, found {}", self.describe()))),
        }
    }

    fn int(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error(format!("expected an integer, found {}", self.describe()))),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.tokens.len() {
            Ok(())
        } else {
            Err(self.error(format!("unexpected {}", self.describe())))
        }
    }

    fn var(&mut self, ctx: &Ctx) -> Result<usize> {
        let name = self.ident()?;
        ctx.index_of(&name.text)
            .ok_or_else(|| name.error(&format!("unknown variable `{}`", name.text)))
    }

    fn ring(&mut self) -> Result<Ctx> {
        let mut names = Vec::new();
        while self.peek().is_some() {
            let name = self.ident()?;
            if names.contains(&name.text) {
                return Err(name.error(&format!("variable `{}` declared twice", name.text)));
            }
            names.push(name.text);
        }
        if names.is_empty() {
            return Err(self.error("`ring` needs at least one variable"));
        }
        VarContext::new(names).map_err(|e| self.error(e.to_string()))
    }

    fn comma_list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let mut out = vec![item(self)?];
        while self.eat(&Tok::Comma) {
            out.push(item(self)?);
        }
        Ok(out)
    }

    fn monomial(&mut self, ctx: &Ctx) -> Result<Monomial> {
        let mut exps = vec![0u32; ctx.len()];
        if self.eat(&Tok::Int(1)) {
            return Ok(Monomial::new(ctx, exps).expect("length matches"));
        }
        loop {
            let v = self.var(ctx)?;
            let e = if self.eat(&Tok::Caret) { self.int()? } else { 1 };
            exps[v] = exps[v]
                .checked_add(e)
                .ok_or_else(|| self.error("exponent overflow"))?;
            if !self.eat(&Tok::Star) {
                break;
            }
        }
        Ok(Monomial::new(ctx, exps).expect("length matches"))
    }

    fn ideal(&mut self, ctx: &Ctx) -> Result<MonomialIdeal> {
        let gens = self.comma_list(|p| p.monomial(ctx))?;
        MonomialIdeal::new(ctx, gens).map_err(|e| self.error(e.to_string()))
    }

    fn vertex_set(&mut self, ctx: &Ctx) -> Result<(VarSet, usize, (usize, usize))> {
        let at = self.here();
        self.expect(Tok::LBrace)?;
        let mut set = VarSet::EMPTY;
        let mut count = 0;
        while self.peek() != Some(&Tok::RBrace) {
            set = set.with(self.var(ctx)?);
            count += 1;
        }
        self.expect(Tok::RBrace)?;
        Ok((set, count, at))
    }

    fn graph(&mut self, ctx: &Ctx) -> Result<Graph> {
        let edges = self.comma_list(|p| {
            let (set, count, (line, column)) = p.vertex_set(ctx)?;
            if count != 2 || set.len() != 2 {
                return Err(parse_error(line, column, "a graph edge needs two distinct vertices"));
            }
            let v: Vec<usize> = set.iter().collect();
            Ok((v[0], v[1]))
        })?;
        Graph::new(ctx, edges).map_err(|e| self.error(e.to_string()))
    }

    fn clutter(&mut self, ctx: &Ctx) -> Result<Clutter> {
        let edges = self.comma_list(|p| {
            let (set, _, at) = p.vertex_set(ctx)?;
            if set.is_empty() {
                return Err(parse_error(at.0, at.1, "a clutter edge must be nonempty"));
            }
            Ok((set, at))
        })?;
        for (k, (e, (line, column))) in edges.iter().enumerate() {
            for (l, (f, _)) in edges.iter().enumerate() {
                if k != l && e.is_subset(*f) {
                    let what = if e == f { "repeats" } else { "is contained in" };
                    return Err(parse_error(
                        *line,
                        *column,
                        format!("clutter edge {what} another edge"),
                    ));
                }
            }
        }
        Clutter::new(ctx, edges.into_iter().map(|(e, _)| e).collect())
            .map_err(|e| self.error(e.to_string()))
    }

    fn digraph(&mut self, ctx: &Ctx) -> Result<WeightedDigraph> {
        let mut weights: BTreeMap<usize, u32> = BTreeMap::new();
        let arcs = self.comma_list(|p| {
            p.expect(Tok::LParen)?;
            let tail = p.var(ctx)?;
            p.expect(Tok::Arrow)?;
            let head_at = p.here();
            let head = p.var(ctx)?;
            p.expect(Tok::Colon)?;
            let w_at = p.here();
            let w = p.int()?;
            p.expect(Tok::RParen)?;
            if tail == head {
                return Err(parse_error(head_at.0, head_at.1, "loops are not allowed"));
            }
            if w == 0 {
                return Err(parse_error(w_at.0, w_at.1, "weights must be positive"));
            }
            match weights.insert(head, w) {
                Some(old) if old != w => Err(parse_error(
                    w_at.0,
                    w_at.1,
                    format!("`{}` already has weight {old}", ctx.name(head)),
                )),
                _ => Ok((tail, head)),
            }
        })?;
        let w = (0..ctx.len()).map(|v| weights.get(&v).copied().unwrap_or(1)).collect();
        WeightedDigraph::new(ctx, arcs, w).map_err(|e| self.error(e.to_string()))
    }
}
