use std::collections::HashMap;

use super::lexer::{syntax, tokenize, Tok, Token};
use crate::automaton::{Acceptance, Alphabet, ColourSet, StateId, Symbol, Tela, MAX_COLOURS};
use crate::error::{Error, Result};

/// Label expression over atomic propositions.
#[derive(Clone, Debug)]
enum Label {
    True,
    False,
    Ap(usize),
    Not(Box<Label>),
    And(Box<Label>, Box<Label>),
    Or(Box<Label>, Box<Label>),
}

impl Label {
    fn eval(&self, symbol: Symbol) -> bool {
        match self {
            Label::True => true,
            Label::False => false,
            Label::Ap(j) => symbol >> j & 1 == 1,
            Label::Not(l) => !l.eval(symbol),
            Label::And(l, r) => l.eval(symbol) && r.eval(symbol),
            Label::Or(l, r) => l.eval(symbol) || r.eval(symbol),
        }
    }
}

/// Acceptance as written, before `t` and `f` are given colours.
enum Cond {
    True,
    False,
    Atom(Acceptance),
    And(Box<Cond>, Box<Cond>),
    Or(Box<Cond>, Box<Cond>),
}

enum EdgeLabel {
    Expr(Label),
    /// The n-th unlabelled edge of a state stands for the n-th valuation.
    Implicit(Symbol),
}

struct Edge {
    source: StateId,
    label: EdgeLabel,
    target: StateId,
    colours: ColourSet,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    aliases: HashMap<String, Label>,
    ap_count: usize,
}

const MAX_APS: usize = 16;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> Error {
        let t = &self.toks[self.pos];
        syntax(t.line, t.column, message)
    }

    fn expect_punct(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Punct(c) {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!("expected `{c}`")))
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.next();
                Ok(n)
            }
            _ => Err(self.error_here("expected a number")),
        }
    }

    fn small(&mut self, what: &str, bound: u64) -> Result<usize> {
        let t = self.toks[self.pos].clone();
        let n = self.int()?;
        if n >= bound {
            return Err(syntax(t.line, t.column, format!("{what} {n} is too large")));
        }
        Ok(n as usize)
    }

    /// A state id, rejecting conjunctions of states (alternation).
    fn state(&mut self) -> Result<StateId> {
        let q = self.small("state", 1 << 24)?;
        if *self.peek() == Tok::Punct('&') {
            return Err(Error::Unsupported("alternation".into()));
        }
        Ok(q)
    }

    fn label_or(&mut self) -> Result<Label> {
        let mut l = self.label_and()?;
        while *self.peek() == Tok::Punct('|') {
            self.next();
            let r = self.label_and()?;
            l = Label::Or(Box::new(l), Box::new(r));
        }
        Ok(l)
    }

    fn label_and(&mut self) -> Result<Label> {
        let mut l = self.label_atom()?;
        while *self.peek() == Tok::Punct('&') {
            self.next();
            let r = self.label_atom()?;
            l = Label::And(Box::new(l), Box::new(r));
        }
        Ok(l)
    }

    fn label_atom(&mut self) -> Result<Label> {
        let t = self.next();
        match t.tok {
            Tok::Ident(ref s) if s == "t" => Ok(Label::True),
            Tok::Ident(ref s) if s == "f" => Ok(Label::False),
            Tok::Int(n) => {
                if n as usize >= self.ap_count {
                    return Err(syntax(t.line, t.column, format!("proposition {n} is not declared")));
                }
                Ok(Label::Ap(n as usize))
            }
            Tok::Alias(ref a) => self
                .aliases
                .get(a)
                .cloned()
                .ok_or_else(|| syntax(t.line, t.column, format!("unknown alias @{a}"))),
            Tok::Punct('!') => Ok(Label::Not(Box::new(self.label_atom()?))),
            Tok::Punct('(') => {
                let l = self.label_or()?;
                self.expect_punct(')')?;
                Ok(l)
            }
            _ => Err(syntax(t.line, t.column, "expected a label expression")),
        }
    }

    fn cond_or(&mut self, sets: u32) -> Result<Cond> {
        let mut l = self.cond_and(sets)?;
        while *self.peek() == Tok::Punct('|') {
            self.next();
            let r = self.cond_and(sets)?;
            l = Cond::Or(Box::new(l), Box::new(r));
        }
        Ok(l)
    }

    fn cond_and(&mut self, sets: u32) -> Result<Cond> {
        let mut l = self.cond_atom(sets)?;
        while *self.peek() == Tok::Punct('&') {
            self.next();
            let r = self.cond_atom(sets)?;
            l = Cond::And(Box::new(l), Box::new(r));
        }
        Ok(l)
    }

    fn cond_atom(&mut self, sets: u32) -> Result<Cond> {
        let t = self.next();
        match t.tok {
            Tok::Ident(ref s) if s == "t" => Ok(Cond::True),
            Tok::Ident(ref s) if s == "f" => Ok(Cond::False),
            Tok::Ident(ref s) if s == "Inf" || s == "Fin" => {
                self.expect_punct('(')?;
                if *self.peek() == Tok::Punct('!') {
                    return Err(Error::Unsupported("negated acceptance sets".into()));
                }
                let at = self.toks[self.pos].clone();
                let c = self.int()?;
                if c >= sets as u64 {
                    return Err(syntax(
                        at.line,
                        at.column,
                        format!("acceptance set {c} exceeds the declared {sets}"),
                    ));
                }
                self.expect_punct(')')?;
                let c = c as u32;
                Ok(Cond::Atom(if s == "Inf" {
                    Acceptance::Inf(c)
                } else {
                    Acceptance::Fin(c)
                }))
            }
            Tok::Punct('(') => {
                let c = self.cond_or(sets)?;
                self.expect_punct(')')?;
                Ok(c)
            }
            _ => Err(syntax(t.line, t.column, "expected an acceptance condition")),
        }
    }

    /// `{0 1 ..}`, if present.
    fn acc_sig(&mut self, sets: u32) -> Result<ColourSet> {
        let mut cs = ColourSet::EMPTY;
        if *self.peek() != Tok::Punct('{') {
            return Ok(cs);
        }
        self.next();
        while *self.peek() != Tok::Punct('}') {
            let at = self.toks[self.pos].clone();
            let c = self.int()?;
            if c >= sets as u64 {
                return Err(syntax(
                    at.line,
                    at.column,
                    format!("acceptance set {c} exceeds the declared {sets}"),
                ));
            }
            cs.insert(c as u32);
        }
        self.next();
        Ok(cs)
    }

    fn skip_header_values(&mut self) {
        while !matches!(self.peek(), Tok::Header(_) | Tok::BodyStart | Tok::Eof | Tok::End) {
            self.next();
        }
    }
}

/// `t` and `f` have no atom of their own: each gets a colour no transition
/// carries (`Fin` of it always holds, `Inf` of it never does).
fn resolve(c: Cond, fresh: &mut u32) -> Acceptance {
    match c {
        Cond::Atom(a) => a,
        Cond::True | Cond::False => {
            let k = *fresh;
            *fresh += 1;
            if matches!(c, Cond::True) {
                Acceptance::Fin(k)
            } else {
                Acceptance::Inf(k)
            }
        }
        Cond::And(l, r) => {
            let l = resolve(*l, fresh);
            l.and(resolve(*r, fresh))
        }
        Cond::Or(l, r) => {
            let l = resolve(*l, fresh);
            l.or(resolve(*r, fresh))
        }
    }
}

/// Reads an automaton in HOA format. Labels are expanded over the explicit
/// alphabet of proposition valuations and state acceptance is moved onto the
/// outgoing transitions.
pub fn parse_hoa(text: &str) -> Result<Tela> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        aliases: HashMap::new(),
        ap_count: 0,
    };
    match p.peek().clone() {
        Tok::Header(h) if h == "HOA" => {
            p.next();
            match p.next().tok {
                Tok::Ident(v) if v == "v1" => {}
                _ => return Err(Error::Unsupported("only HOA v1 is supported".into())),
            }
        }
        _ => return Err(p.error_here("expected `HOA: v1`")),
    }

    let mut declared_states: Option<usize> = None;
    let mut starts: Vec<StateId> = Vec::new();
    let mut aps: Option<Vec<String>> = None;
    let mut acceptance: Option<(u32, Cond)> = None;
    loop {
        let t = p.next();
        match t.tok {
            Tok::BodyStart => break,
            Tok::Header(h) => match h.as_str() {
                "States" => declared_states = Some(p.small("state count", 1 << 24)?),
                "Start" => starts.push(p.state()?),
                "AP" => {
                    let n = p.small("proposition count", MAX_APS as u64 + 1)?;
                    let mut names = Vec::with_capacity(n);
                    for _ in 0..n {
                        match p.next().tok {
                            Tok::Str(s) => names.push(s),
                            _ => return Err(syntax(t.line, t.column, "AP expects quoted names")),
                        }
                    }
                    p.ap_count = n;
                    aps = Some(names);
                }
                "Alias" => {
                    let name = match p.next().tok {
                        Tok::Alias(a) => a,
                        _ => return Err(syntax(t.line, t.column, "Alias expects @name")),
                    };
                    let l = p.label_or()?;
                    p.aliases.insert(name, l);
                }
                "Acceptance" => {
                    let sets = p.small("acceptance set count", MAX_COLOURS as u64 + 1)? as u32;
                    let cond = p.cond_or(sets)?;
                    acceptance = Some((sets, cond));
                }
                "univ-branch" => return Err(Error::Unsupported("alternation".into())),
                _ => p.skip_header_values(),
            },
            _ => return Err(syntax(t.line, t.column, "expected a header item")),
        }
    }
    let (sets, cond) =
        acceptance.ok_or_else(|| syntax(1, 1, "missing `Acceptance:` header"))?;
    let aps = aps.unwrap_or_default();

    // body
    let mut edges: Vec<Edge> = Vec::new();
    let mut names: Vec<(StateId, String)> = Vec::new();
    let mut max_state = starts.iter().copied().max();
    let mut seen_states = Vec::new();
    loop {
        let t = p.next();
        match t.tok {
            Tok::End => break,
            Tok::Header(h) if h == "State" => {
                let state_label = if *p.peek() == Tok::Punct('[') {
                    p.next();
                    let l = p.label_or()?;
                    p.expect_punct(']')?;
                    Some(l)
                } else {
                    None
                };
                let q = p.state()?;
                if seen_states.contains(&q) {
                    return Err(syntax(t.line, t.column, format!("state {q} is defined twice")));
                }
                seen_states.push(q);
                max_state = max_state.max(Some(q));
                if let Tok::Str(s) = p.peek().clone() {
                    p.next();
                    names.push((q, s));
                }
                let state_acc = p.acc_sig(sets)?;
                let mut implicit = 0usize;
                loop {
                    let label = match p.peek() {
                        Tok::Punct('[') => {
                            p.next();
                            let l = p.label_or()?;
                            p.expect_punct(']')?;
                            Some(l)
                        }
                        Tok::Int(_) => None,
                        _ => break,
                    };
                    let label = match (label, &state_label) {
                        (Some(l), _) => EdgeLabel::Expr(l),
                        (None, Some(l)) => EdgeLabel::Expr(l.clone()),
                        (None, None) => {
                            implicit += 1;
                            EdgeLabel::Implicit(implicit - 1)
                        }
                    };
                    let target = p.state()?;
                    max_state = max_state.max(Some(target));
                    let colours = p.acc_sig(sets)?.union(state_acc);
                    edges.push(Edge {
                        source: q,
                        label,
                        target,
                        colours,
                    });
                }
            }
            _ => return Err(syntax(t.line, t.column, "expected `State:` or `--END--`")),
        }
    }

    let states = match declared_states {
        Some(n) => {
            if let Some(m) = max_state.filter(|&m| m >= n) {
                return Err(syntax(1, 1, format!("state {m} exceeds the declared {n} states")));
            }
            n
        }
        None => max_state.map_or(0, |m| m + 1),
    };
    let mut fresh = sets;
    let acc = resolve(cond, &mut fresh);
    if fresh > MAX_COLOURS {
        return Err(Error::TooManyColours(fresh));
    }
    let alphabet = Alphabet::new(aps);
    let symbols = alphabet.len();
    let mut tela = Tela::new(alphabet, states, fresh, acc);
    for q in starts {
        tela.add_initial(q);
    }
    for e in edges {
        match e.label {
            EdgeLabel::Implicit(sym) if sym < symbols => {
                tela.add_transition(e.source, sym, e.target, e.colours)
            }
            EdgeLabel::Implicit(_) => {
                return Err(Error::InvalidAutomaton(format!(
                    "state {} has more unlabelled edges than valuations",
                    e.source
                )))
            }
            EdgeLabel::Expr(l) => {
                for a in 0..symbols {
                    if l.eval(a) {
                        tela.add_transition(e.source, a, e.target, e.colours);
                    }
                }
            }
        }
    }
    for (q, n) in names {
        tela.set_name(q, n);
    }
    Ok(tela)
}
