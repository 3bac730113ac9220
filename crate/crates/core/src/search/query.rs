//! Predicate queries over spaces and their subsets.
//!
//! ```text
//! query   := disj
//! disj    := conj (("OR" | "∨" | "||") conj)*
//! conj    := unary (("AND" | "∧" | "&&") unary)*
//! unary   := ("NOT" | "¬" | "!") unary | quant | "(" query ")" | atom
//! quant   := ("EXISTS" | "FORALL" | "∃" | "∀") VAR ("," VAR)* ":" disj
//! atom    := FLAG | CLASS "(" set ")"
//! set     := inter (("∪" | "|" | "UNION") inter)*
//! inter   := prim (("∩" | "&" | "INTER") prim)*
//! prim    := VAR | "(" set ")" | ("~" | "∁" | "COMP") prim
//! ```
//!
//! `FLAG` is an axiom flag name (`semi_T1`, ...), `CLASS` a set class
//! name (`semi_open`, ...). Quantified variables range over all subsets of
//! the ground set, in ascending mask order.

use std::fmt;

use thiserror::Error;

use crate::axioms::{AxiomFlag, AxiomProfile};
use crate::classes::{SetClass, SetClassification};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("variable `{0}` is not bound by a quantifier")]
    UnboundVariable(String),
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

impl QueryError {
    pub fn kind(&self) -> &'static str {
        match self {
            QueryError::UnknownAtom(_) => "UnknownAtom",
            QueryError::UnboundVariable(_) => "UnboundVariable",
            QueryError::Syntax { .. } => "Syntax",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    Exists,
    Forall,
}

/// Set-valued term; variables are slot indices into the binding frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Var(usize),
    Union(Box<SetExpr>, Box<SetExpr>),
    Intersection(Box<SetExpr>, Box<SetExpr>),
    Complement(Box<SetExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredicateExpr {
    Flag(AxiomFlag),
    Class(SetClass, SetExpr),
    Not(Box<PredicateExpr>),
    And(Vec<PredicateExpr>),
    Or(Vec<PredicateExpr>),
    Quantified { quantifier: Quantifier, slots: Vec<usize>, body: Box<PredicateExpr> },
}

/// A parsed query with its variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub expr: PredicateExpr,
    /// Name of each variable slot.
    pub variables: Vec<String>,
}

/// One variable assignment reported with a witness.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Binding {
    pub variable: String,
    pub subset: Subset,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Colon,
    And,
    Or,
    Not,
    Exists,
    Forall,
    Cup,
    Cap,
    Comp,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            other => write!(f, "{other:?}"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, QueryError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = match word.as_str() {
                "AND" | "and" => Tok::And,
                "OR" | "or" => Tok::Or,
                "NOT" | "not" => Tok::Not,
                "EXISTS" | "exists" => Tok::Exists,
                "FORALL" | "forall" => Tok::Forall,
                "UNION" => Tok::Cup,
                "INTER" => Tok::Cap,
                "COMP" => Tok::Comp,
                _ => Tok::Ident(word),
            };
            out.push((pos, tok));
            continue;
        }
        chars.next();
        let two = |chars: &mut std::iter::Peekable<std::str::CharIndices>, next: char| {
            if chars.peek().map(|&(_, c)| c) == Some(next) {
                chars.next();
                true
            } else {
                false
            }
        };
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ':' => Tok::Colon,
            '∧' => Tok::And,
            '∨' => Tok::Or,
            '¬' | '!' => Tok::Not,
            '∃' => Tok::Exists,
            '∀' => Tok::Forall,
            '∪' => Tok::Cup,
            '∩' => Tok::Cap,
            '~' | '∁' => Tok::Comp,
            '&' => {
                if two(&mut chars, '&') {
                    Tok::And
                } else {
                    Tok::Cap
                }
            }
            '|' => {
                if two(&mut chars, '|') {
                    Tok::Or
                } else {
                    Tok::Cup
                }
            }
            other => {
                return Err(QueryError::Syntax { offset: pos, message: format!("unexpected character `{other}`") })
            }
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    scopes: Vec<(String, usize)>,
    variables: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, QueryError> {
        Err(QueryError::Syntax { offset: self.offset(), message: message.into() })
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), QueryError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            match self.peek() {
                Some(t) => self.err(format!("expected {tok}, found {t}")),
                None => self.err(format!("expected {tok}, found end of query")),
            }
        }
    }

    fn ident(&mut self) -> Result<String, QueryError> {
        match self.peek().cloned() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s)
            }
            Some(t) => self.err(format!("expected a name, found {t}")),
            None => self.err("expected a name, found end of query"),
        }
    }

    fn disj(&mut self) -> Result<PredicateExpr, QueryError> {
        let mut terms = vec![self.conj()?];
        while self.eat(&Tok::Or) {
            terms.push(self.conj()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { PredicateExpr::Or(terms) })
    }

    fn conj(&mut self) -> Result<PredicateExpr, QueryError> {
        let mut terms = vec![self.unary()?];
        while self.eat(&Tok::And) {
            terms.push(self.unary()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { PredicateExpr::And(terms) })
    }

    fn unary(&mut self) -> Result<PredicateExpr, QueryError> {
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(PredicateExpr::Not(Box::new(self.unary()?)))
            }
            Some(Tok::Exists) | Some(Tok::Forall) => {
                let quantifier = if self.eat(&Tok::Exists) {
                    Quantifier::Exists
                } else {
                    self.pos += 1;
                    Quantifier::Forall
                };
                let mut slots = Vec::new();
                loop {
                    let name = self.ident()?;
                    let slot = self.variables.len();
                    self.variables.push(name.clone());
                    slots.push(slot);
                    if !self.eat(&Tok::Comma) {
                        break;
                    }
                }
                self.expect(Tok::Colon)?;
                let depth = self.scopes.len();
                for &slot in &slots {
                    self.scopes.push((self.variables[slot].clone(), slot));
                }
                let body = self.disj()?;
                self.scopes.truncate(depth);
                Ok(PredicateExpr::Quantified { quantifier, slots, body: Box::new(body) })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.disj()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Ident(_)) => self.atom(),
            Some(t) => {
                let t = t.clone();
                self.err(format!("unexpected {t}"))
            }
            None => self.err("unexpected end of query"),
        }
    }

    fn atom(&mut self) -> Result<PredicateExpr, QueryError> {
        let name = self.ident()?;
        if self.peek() == Some(&Tok::LParen) {
            let class: SetClass = name.parse().map_err(|_| QueryError::UnknownAtom(name.clone()))?;
            self.pos += 1;
            let arg = self.set()?;
            self.expect(Tok::RParen)?;
            return Ok(PredicateExpr::Class(class, arg));
        }
        match name.parse::<AxiomFlag>() {
            Ok(flag) => Ok(PredicateExpr::Flag(flag)),
            Err(()) => Err(QueryError::UnknownAtom(name)),
        }
    }

    fn set(&mut self) -> Result<SetExpr, QueryError> {
        let mut e = self.inter()?;
        while self.eat(&Tok::Cup) {
            e = SetExpr::Union(Box::new(e), Box::new(self.inter()?));
        }
        Ok(e)
    }

    fn inter(&mut self) -> Result<SetExpr, QueryError> {
        let mut e = self.set_prim()?;
        while self.eat(&Tok::Cap) {
            e = SetExpr::Intersection(Box::new(e), Box::new(self.set_prim()?));
        }
        Ok(e)
    }

    fn set_prim(&mut self) -> Result<SetExpr, QueryError> {
        if self.eat(&Tok::Comp) {
            return Ok(SetExpr::Complement(Box::new(self.set_prim()?)));
        }
        if self.eat(&Tok::LParen) {
            let e = self.set()?;
            self.expect(Tok::RParen)?;
            return Ok(e);
        }
        let name = self.ident()?;
        match self.scopes.iter().rev().find(|(v, _)| *v == name) {
            Some(&(_, slot)) => Ok(SetExpr::Var(slot)),
            None => Err(QueryError::UnboundVariable(name)),
        }
    }
}

impl Query {
    pub fn parse(src: &str) -> Result<Query, QueryError> {
        let toks = tokenize(src)?;
        let mut p = Parser { toks, pos: 0, end: src.len(), scopes: Vec::new(), variables: Vec::new() };
        let expr = p.disj()?;
        if p.pos != p.toks.len() {
            let t = p.toks[p.pos].1.clone();
            return p.err(format!("unexpected {t} after complete query"));
        }
        Ok(Query { expr, variables: p.variables })
    }

    /// Whether any atom needs the space-level profile.
    pub fn uses_flags(&self) -> bool {
        fn walk(e: &PredicateExpr) -> bool {
            match e {
                PredicateExpr::Flag(_) => true,
                PredicateExpr::Class(..) => false,
                PredicateExpr::Not(x) => walk(x),
                PredicateExpr::And(xs) | PredicateExpr::Or(xs) => xs.iter().any(walk),
                PredicateExpr::Quantified { body, .. } => walk(body),
            }
        }
        walk(&self.expr)
    }

    /// Evaluates the query. On success returns the bindings chosen by the
    /// existential quantifiers on the path that made it true, each the
    /// least assignment in ascending mask order.
    pub fn evaluate(&self, ctx: &EvalContext<'_>) -> Option<Vec<Binding>> {
        let mut frame = vec![Subset::empty(ctx.n); self.variables.len()];
        let mut chosen = Vec::new();
        if eval(&self.expr, ctx, &mut frame, &mut chosen) {
            Some(
                chosen
                    .into_iter()
                    .map(|(slot, subset)| Binding { variable: self.variables[slot].clone(), subset })
                    .collect(),
            )
        } else {
            None
        }
    }
}

/// What a query is evaluated against: one space's profile and its
/// per-subset classification table indexed by mask.
pub struct EvalContext<'a> {
    pub n: usize,
    pub profile: Option<&'a AxiomProfile>,
    pub classes: &'a [SetClassification],
}

fn eval_set(e: &SetExpr, frame: &[Subset]) -> Subset {
    match e {
        SetExpr::Var(slot) => frame[*slot],
        SetExpr::Union(a, b) => eval_set(a, frame) | eval_set(b, frame),
        SetExpr::Intersection(a, b) => eval_set(a, frame) & eval_set(b, frame),
        SetExpr::Complement(a) => !eval_set(a, frame),
    }
}

fn eval(e: &PredicateExpr, ctx: &EvalContext<'_>, frame: &mut Vec<Subset>, chosen: &mut Vec<(usize, Subset)>) -> bool {
    match e {
        PredicateExpr::Flag(f) => ctx.profile.expect("profile required for flag atoms").get(*f),
        PredicateExpr::Class(c, arg) => {
            let a = eval_set(arg, frame);
            ctx.classes[a.bits() as usize].get(*c)
        }
        PredicateExpr::Not(x) => {
            let mut scratch = Vec::new();
            !eval(x, ctx, frame, &mut scratch)
        }
        PredicateExpr::And(xs) => {
            let mark = chosen.len();
            let ok = xs.iter().all(|x| eval(x, ctx, frame, chosen));
            if !ok {
                chosen.truncate(mark);
            }
            ok
        }
        PredicateExpr::Or(xs) => xs.iter().any(|x| eval(x, ctx, frame, chosen)),
        PredicateExpr::Quantified { quantifier, slots, body } => {
            let size = 1usize << ctx.n;
            let total = size.pow(slots.len() as u32);
            for code in 0..total {
                // first variable is the most significant digit
                let mut rest = code;
                for &slot in slots.iter().rev() {
                    frame[slot] = Subset::from_bits(ctx.n, (rest % size) as u32).unwrap();
                    rest /= size;
                }
                match quantifier {
                    Quantifier::Exists => {
                        let mark = chosen.len();
                        for &slot in slots {
                            chosen.push((slot, frame[slot]));
                        }
                        if eval(body, ctx, frame, chosen) {
                            return true;
                        }
                        chosen.truncate(mark);
                    }
                    Quantifier::Forall => {
                        let mut scratch = Vec::new();
                        if !eval(body, ctx, frame, &mut scratch) {
                            return false;
                        }
                    }
                }
            }
            *quantifier == Quantifier::Forall
        }
    }
}
