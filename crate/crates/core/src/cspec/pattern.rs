//! Formulas and terms with metavariables, shared by axiom schemes and the
//! derivation search. Formula metavariables and term metavariables live in
//! separate namespaces.

use crate::syntax::{JFormula, Term};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PTerm {
    Meta(u32),
    Const(String),
    Var(u32),
    App(Box<PTerm>, Box<PTerm>),
    Sum(Box<PTerm>, Box<PTerm>),
    Bang(Box<PTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    Meta(u32),
    Prop(u32),
    Not(Box<Pattern>),
    And(Box<Pattern>, Box<Pattern>),
    Assert(PTerm, Box<Pattern>),
}

impl PTerm {
    pub fn app(l: PTerm, r: PTerm) -> PTerm {
        PTerm::App(Box::new(l), Box::new(r))
    }

    pub fn sum(l: PTerm, r: PTerm) -> PTerm {
        PTerm::Sum(Box::new(l), Box::new(r))
    }

    pub fn to_ground(&self) -> Option<Term> {
        Some(match self {
            PTerm::Meta(_) => return None,
            PTerm::Const(c) => Term::Const(c.clone()),
            PTerm::Var(i) => Term::Var(*i),
            PTerm::App(l, r) => Term::app(l.to_ground()?, r.to_ground()?),
            PTerm::Sum(l, r) => Term::sum(l.to_ground()?, r.to_ground()?),
            PTerm::Bang(t) => Term::bang(t.to_ground()?),
        })
    }

    fn shift(&self, by: u32) -> PTerm {
        match self {
            PTerm::Meta(m) => PTerm::Meta(m + by),
            PTerm::Const(_) | PTerm::Var(_) => self.clone(),
            PTerm::App(l, r) => PTerm::app(l.shift(by), r.shift(by)),
            PTerm::Sum(l, r) => PTerm::sum(l.shift(by), r.shift(by)),
            PTerm::Bang(t) => PTerm::Bang(Box::new(t.shift(by))),
        }
    }

    pub fn contains_meta(&self, m: u32) -> bool {
        match self {
            PTerm::Meta(k) => *k == m,
            PTerm::Const(_) | PTerm::Var(_) => false,
            PTerm::App(l, r) | PTerm::Sum(l, r) => l.contains_meta(m) || r.contains_meta(m),
            PTerm::Bang(t) => t.contains_meta(m),
        }
    }

    fn collect_metas(&self, out: &mut BTreeSet<u32>) {
        match self {
            PTerm::Meta(k) => {
                out.insert(*k);
            }
            PTerm::Const(_) | PTerm::Var(_) => {}
            PTerm::App(l, r) | PTerm::Sum(l, r) => {
                l.collect_metas(out);
                r.collect_metas(out);
            }
            PTerm::Bang(t) => t.collect_metas(out),
        }
    }
}

impl From<&Term> for PTerm {
    fn from(t: &Term) -> PTerm {
        match t {
            Term::Const(c) => PTerm::Const(c.clone()),
            Term::Var(i) => PTerm::Var(*i),
            Term::App(l, r) => PTerm::app(l.as_ref().into(), r.as_ref().into()),
            Term::Sum(l, r) => PTerm::sum(l.as_ref().into(), r.as_ref().into()),
            Term::Bang(i) => PTerm::Bang(Box::new(i.as_ref().into())),
        }
    }
}

impl Pattern {
    #[allow(clippy::should_implement_trait)]
    pub fn not(p: Pattern) -> Pattern {
        Pattern::Not(Box::new(p))
    }

    pub fn and(l: Pattern, r: Pattern) -> Pattern {
        Pattern::And(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Pattern, r: Pattern) -> Pattern {
        Pattern::not(Pattern::and(l, Pattern::not(r)))
    }

    pub fn assert(t: PTerm, body: Pattern) -> Pattern {
        Pattern::Assert(t, Box::new(body))
    }

    pub fn to_ground(&self) -> Option<JFormula> {
        Some(match self {
            Pattern::Meta(_) => return None,
            Pattern::Prop(i) => JFormula::Prop(*i),
            Pattern::Not(p) => JFormula::not(p.to_ground()?),
            Pattern::And(l, r) => JFormula::and(l.to_ground()?, r.to_ground()?),
            Pattern::Assert(t, b) => JFormula::assert(t.to_ground()?, b.to_ground()?),
        })
    }

    /// Renames every metavariable `m` (of both sorts) to `m + by`.
    pub fn shift(&self, by: u32) -> Pattern {
        match self {
            Pattern::Meta(m) => Pattern::Meta(m + by),
            Pattern::Prop(_) => self.clone(),
            Pattern::Not(p) => Pattern::not(p.shift(by)),
            Pattern::And(l, r) => Pattern::and(l.shift(by), r.shift(by)),
            Pattern::Assert(t, b) => Pattern::assert(t.shift(by), b.shift(by)),
        }
    }

    pub fn contains_meta(&self, m: u32) -> bool {
        match self {
            Pattern::Meta(k) => *k == m,
            Pattern::Prop(_) => false,
            Pattern::Not(p) => p.contains_meta(m),
            Pattern::And(l, r) => l.contains_meta(m) || r.contains_meta(m),
            Pattern::Assert(_, b) => b.contains_meta(m),
        }
    }

    /// Formula metavariables and term metavariables occurring in the pattern.
    pub fn metas(&self) -> (BTreeSet<u32>, BTreeSet<u32>) {
        fn walk(p: &Pattern, fs: &mut BTreeSet<u32>, ts: &mut BTreeSet<u32>) {
            match p {
                Pattern::Meta(k) => {
                    fs.insert(*k);
                }
                Pattern::Prop(_) => {}
                Pattern::Not(q) => walk(q, fs, ts),
                Pattern::And(l, r) => {
                    walk(l, fs, ts);
                    walk(r, fs, ts);
                }
                Pattern::Assert(t, b) => {
                    t.collect_metas(ts);
                    walk(b, fs, ts);
                }
            }
        }
        let mut fs = BTreeSet::new();
        let mut ts = BTreeSet::new();
        walk(self, &mut fs, &mut ts);
        (fs, ts)
    }
}

impl From<&JFormula> for Pattern {
    fn from(f: &JFormula) -> Pattern {
        match f {
            JFormula::Prop(i) => Pattern::Prop(*i),
            JFormula::Not(p) => Pattern::not(p.as_ref().into()),
            JFormula::And(l, r) => Pattern::and(l.as_ref().into(), r.as_ref().into()),
            JFormula::Assert(t, b) => Pattern::assert(t.into(), b.as_ref().into()),
        }
    }
}

/// Bindings produced by one-sided matching of a pattern against a ground formula.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Match {
    pub formulas: HashMap<u32, JFormula>,
    pub terms: HashMap<u32, Term>,
}

fn match_term(p: &PTerm, t: &Term, m: &mut Match) -> bool {
    match (p, t) {
        (PTerm::Meta(k), _) => match m.terms.get(k) {
            Some(bound) => bound == t,
            None => {
                m.terms.insert(*k, t.clone());
                true
            }
        },
        (PTerm::Const(a), Term::Const(b)) => a == b,
        (PTerm::Var(a), Term::Var(b)) => a == b,
        (PTerm::App(pl, pr), Term::App(tl, tr)) | (PTerm::Sum(pl, pr), Term::Sum(tl, tr)) => {
            match_term(pl, tl, m) && match_term(pr, tr, m)
        }
        (PTerm::Bang(p), Term::Bang(t)) => match_term(p, t, m),
        _ => false,
    }
}

fn match_formula(p: &Pattern, f: &JFormula, m: &mut Match) -> bool {
    match (p, f) {
        (Pattern::Meta(k), _) => match m.formulas.get(k) {
            Some(bound) => bound == f,
            None => {
                m.formulas.insert(*k, f.clone());
                true
            }
        },
        (Pattern::Prop(a), JFormula::Prop(b)) => a == b,
        (Pattern::Not(p), JFormula::Not(f)) => match_formula(p, f, m),
        (Pattern::And(pl, pr), JFormula::And(fl, fr)) => {
            match_formula(pl, fl, m) && match_formula(pr, fr, m)
        }
        (Pattern::Assert(pt, pb), JFormula::Assert(ft, fb)) => {
            match_term(pt, ft, m) && match_formula(pb, fb, m)
        }
        _ => false,
    }
}

/// One-sided matching: binds metavariables of `pattern` to parts of `ground`.
/// Linear in the size of `ground` up to the cost of comparing repeated bindings.
pub fn match_ground(pattern: &Pattern, ground: &JFormula) -> Option<Match> {
    let mut m = Match::default();
    match_formula(pattern, ground, &mut m).then_some(m)
}

fn formula_meta_name(k: u32) -> String {
    match k {
        0..=2 => ["A", "B", "C"][k as usize].to_string(),
        _ => format!("A{k}"),
    }
}

fn term_meta_name(k: u32) -> String {
    match k {
        0..=2 => ["S", "T", "U"][k as usize].to_string(),
        _ => format!("S{k}"),
    }
}

impl fmt::Display for PTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PTerm::Meta(k) => write!(f, "{}", term_meta_name(*k)),
            PTerm::Const(c) => write!(f, "{c}"),
            PTerm::Var(i) => write!(f, "x{i}"),
            PTerm::App(l, r) => write!(f, "({l}.{r})"),
            PTerm::Sum(l, r) => write!(f, "({l} + {r})"),
            PTerm::Bang(t) => write!(f, "!{t}"),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Pattern::Not(inner) = self {
            if let Pattern::And(a, nb) = inner.as_ref() {
                if let Pattern::Not(b) = nb.as_ref() {
                    return write!(f, "({a} -> {b})");
                }
            }
        }
        match self {
            Pattern::Meta(k) => write!(f, "{}", formula_meta_name(*k)),
            Pattern::Prop(i) => write!(f, "p{i}"),
            Pattern::Not(p) => write!(f, "~{p}"),
            Pattern::And(l, r) => write!(f, "({l} & {r})"),
            Pattern::Assert(t, b) => write!(f, "{t}:{b}"),
        }
    }
}
