//! Recursive-descent parser for terms, justification formulas and
//! probabilistic formulas. `->` and `|` are accepted as sugar and desugared
//! into `~`/`&` immediately; `P<s a` becomes `~P>=s a`.

use super::{JFormula, PFormula, Term};
use crate::error::{Error, Result};
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Amp,
    Bar,
    Arrow,
    Tilde,
    LParen,
    RParen,
    Colon,
    Dot,
    Plus,
    Bang,
    Slash,
    Ge,
    Lt,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(text[start..i].to_string()), start));
            continue;
        }
        let two = &text[i..(i + 2).min(text.len())];
        let tok = match (c, two) {
            (_, "->") => {
                i += 2;
                Tok::Arrow
            }
            (_, ">=") => {
                i += 2;
                Tok::Ge
            }
            ('<', _) => {
                i += 1;
                Tok::Lt
            }
            ('&', _) => {
                i += 1;
                Tok::Amp
            }
            ('|', _) => {
                i += 1;
                Tok::Bar
            }
            ('~', _) => {
                i += 1;
                Tok::Tilde
            }
            ('(', _) => {
                i += 1;
                Tok::LParen
            }
            (')', _) => {
                i += 1;
                Tok::RParen
            }
            (':', _) => {
                i += 1;
                Tok::Colon
            }
            ('.', _) => {
                i += 1;
                Tok::Dot
            }
            ('+', _) => {
                i += 1;
                Tok::Plus
            }
            ('!', _) => {
                i += 1;
                Tok::Bang
            }
            ('/', _) => {
                i += 1;
                Tok::Slash
            }
            _ => return Err(Error::parse(start, format!("unexpected character `{c}`"))),
        };
        out.push((tok, start));
    }
    Ok(out)
}

fn indexed(name: &str, prefix: char) -> Option<u32> {
    let rest = name.strip_prefix(prefix)?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    rest.parse().ok()
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        let found = match self.peek() {
            Some(t) => format!("{t:?}"),
            None => "end of input".to_string(),
        };
        Error::parse(self.offset(), format!("{}, found {found}", msg.into()))
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.error("expected end of input"))
        }
    }

    // ---- terms

    fn term(&mut self) -> Result<Term> {
        let mut t = self.tfactor()?;
        while self.eat(&Tok::Plus) {
            let r = self.tfactor()?;
            t = Term::sum(t, r);
        }
        Ok(t)
    }

    fn tfactor(&mut self) -> Result<Term> {
        let mut t = self.tprim()?;
        while self.eat(&Tok::Dot) {
            let r = self.tprim()?;
            t = Term::app(t, r);
        }
        Ok(t)
    }

    fn tprim(&mut self) -> Result<Term> {
        match self.peek().cloned() {
            Some(Tok::Bang) => {
                self.pos += 1;
                Ok(Term::bang(self.tprim()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(t)
            }
            Some(Tok::Ident(name)) => {
                if indexed(&name, 'p').is_some() {
                    return Err(self.error("proposition used as a term"));
                }
                self.pos += 1;
                Ok(match indexed(&name, 'x') {
                    Some(i) => Term::Var(i),
                    None => Term::Const(name),
                })
            }
            _ => Err(self.error("expected a term")),
        }
    }

    // ---- justification formulas

    fn jformula(&mut self) -> Result<JFormula> {
        let left = self.jor()?;
        if self.eat(&Tok::Arrow) {
            let right = self.jformula()?;
            return Ok(JFormula::implies(left, right));
        }
        Ok(left)
    }

    fn jor(&mut self) -> Result<JFormula> {
        let mut f = self.jand()?;
        while self.eat(&Tok::Bar) {
            let r = self.jand()?;
            f = JFormula::or(f, r);
        }
        Ok(f)
    }

    fn jand(&mut self) -> Result<JFormula> {
        let mut f = self.jfactor()?;
        while self.eat(&Tok::Amp) {
            let r = self.jfactor()?;
            f = JFormula::and(f, r);
        }
        Ok(f)
    }

    fn jfactor(&mut self) -> Result<JFormula> {
        match self.peek().cloned() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(JFormula::not(self.jfactor()?))
            }
            Some(Tok::Ident(name)) if indexed(&name, 'p').is_some() => {
                self.pos += 1;
                Ok(JFormula::Prop(indexed(&name, 'p').unwrap()))
            }
            Some(Tok::LParen) => {
                // `(term):body` or `(jformula)`
                let save = self.pos;
                if let Ok(t) = self.term() {
                    if self.eat(&Tok::Colon) {
                        let body = self.jfactor()?;
                        return Ok(JFormula::assert(t, body));
                    }
                }
                self.pos = save + 1;
                let f = self.jformula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(f)
            }
            Some(Tok::Ident(_)) | Some(Tok::Bang) => {
                let t = self.term()?;
                self.expect(&Tok::Colon, "`:` after justification term")?;
                let body = self.jfactor()?;
                Ok(JFormula::assert(t, body))
            }
            _ => Err(self.error("expected a justification formula")),
        }
    }

    // ---- probabilistic formulas

    fn pformula(&mut self) -> Result<PFormula> {
        let left = self.por()?;
        if self.eat(&Tok::Arrow) {
            let right = self.pformula()?;
            return Ok(PFormula::implies(left, right));
        }
        Ok(left)
    }

    fn por(&mut self) -> Result<PFormula> {
        let mut f = self.pand()?;
        while self.eat(&Tok::Bar) {
            let r = self.pand()?;
            f = PFormula::or(f, r);
        }
        Ok(f)
    }

    fn pand(&mut self) -> Result<PFormula> {
        let mut f = self.pfactor()?;
        while self.eat(&Tok::Amp) {
            let r = self.pfactor()?;
            f = PFormula::and(f, r);
        }
        Ok(f)
    }

    fn pfactor(&mut self) -> Result<PFormula> {
        match self.peek().cloned() {
            Some(Tok::Tilde) => {
                self.pos += 1;
                Ok(PFormula::not(self.pfactor()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.pformula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(f)
            }
            Some(Tok::Ident(name)) if name == "P" => {
                let strict = match self.peek_at(1) {
                    Some(Tok::Ge) => false,
                    Some(Tok::Lt) => true,
                    _ => {
                        self.pos += 1;
                        return Err(self.error("expected `>=` or `<` after `P`"));
                    }
                };
                self.pos += 2;
                let at = self.offset();
                let s = self.rational()?;
                if s < Rational::zero() || s > Rational::one() {
                    return Err(Error::parse(at, format!("threshold {s} outside [0, 1]")));
                }
                let body = self.jfactor()?;
                let lit = PFormula::AtLeast(s, body);
                Ok(if strict { PFormula::not(lit) } else { lit })
            }
            _ => Err(self.error("expected a probabilistic formula")),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let num = match self.peek().cloned() {
            Some(Tok::Num(n)) => n,
            _ => return Err(self.error("expected a rational threshold")),
        };
        self.pos += 1;
        let den = if self.eat(&Tok::Slash) {
            match self.peek().cloned() {
                Some(Tok::Num(d)) => {
                    self.pos += 1;
                    d
                }
                _ => return Err(self.error("expected a denominator")),
            }
        } else {
            "1".to_string()
        };
        let n: BigInt = num.parse().expect("lexer yields digits");
        let d: BigInt = den.parse().expect("lexer yields digits");
        if d.is_zero() {
            return Err(self.error("zero denominator"));
        }
        Ok(Rational::new(n, d))
    }
}

pub fn parse_pformula(text: &str) -> Result<PFormula> {
    let mut p = Parser::new(text)?;
    let f = p.pformula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_jformula(text: &str) -> Result<JFormula> {
    let mut p = Parser::new(text)?;
    let f = p.jformula()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_term(text: &str) -> Result<Term> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}
