//! Abstract syntax of justification terms, justification formulas (LJ) and
//! probabilistic formulas (LP), with parsing, printing and the structural
//! measures used by the solver: subformulas, basic-formula bases, atoms,
//! formula size and threshold norm.

mod atom;
mod measure;
mod parse;
mod print;

pub use atom::{atoms_of, Atom, AtomIter, Basis, DEFAULT_ATOM_CAP};
pub use measure::{basis_of, basis_of_j, norm, size_p, size_rat, subf, subf_j, Subformula};
pub use parse::{parse_jformula, parse_pformula, parse_term};

use crate::error::{Error, Result};
use crate::rational::Rational;
use num_traits::{One, Zero};

/// Justification term: `c | x | (t.t) | (t+t) | !t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Const(String),
    Var(u32),
    App(Box<Term>, Box<Term>),
    Sum(Box<Term>, Box<Term>),
    Bang(Box<Term>),
}

impl Term {
    pub fn constant(name: impl Into<String>) -> Term {
        Term::Const(name.into())
    }

    pub fn app(left: Term, right: Term) -> Term {
        Term::App(Box::new(left), Box::new(right))
    }

    pub fn sum(left: Term, right: Term) -> Term {
        Term::Sum(Box::new(left), Box::new(right))
    }

    pub fn bang(inner: Term) -> Term {
        Term::Bang(Box::new(inner))
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::App(l, r) | Term::Sum(l, r) => 1 + l.depth().max(r.depth()),
            Term::Bang(t) => 1 + t.depth(),
        }
    }

    /// All subterms, including `self`, children before parents.
    pub fn subterms(&self) -> Vec<&Term> {
        fn walk<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
            match t {
                Term::Const(_) | Term::Var(_) => {}
                Term::App(l, r) | Term::Sum(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                Term::Bang(i) => walk(i, out),
            }
            if !out.contains(&t) {
                out.push(t);
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// Justification formula: `p | ~a | a & a | t:a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JFormula {
    Prop(u32),
    Not(Box<JFormula>),
    And(Box<JFormula>, Box<JFormula>),
    Assert(Term, Box<JFormula>),
}

impl JFormula {
    pub fn prop(index: u32) -> JFormula {
        JFormula::Prop(index)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: JFormula) -> JFormula {
        JFormula::Not(Box::new(inner))
    }

    pub fn and(left: JFormula, right: JFormula) -> JFormula {
        JFormula::And(Box::new(left), Box::new(right))
    }

    /// `a -> b`, stored as `~(a & ~b)`.
    pub fn implies(left: JFormula, right: JFormula) -> JFormula {
        JFormula::not(JFormula::and(left, JFormula::not(right)))
    }

    /// `a | b`, stored as `~(~a & ~b)`.
    pub fn or(left: JFormula, right: JFormula) -> JFormula {
        JFormula::not(JFormula::and(JFormula::not(left), JFormula::not(right)))
    }

    pub fn assert(term: Term, body: JFormula) -> JFormula {
        JFormula::Assert(term, Box::new(body))
    }

    /// Propositions and justification assertions are the basic formulas.
    pub fn is_basic(&self) -> bool {
        matches!(self, JFormula::Prop(_) | JFormula::Assert(..))
    }

    /// Left-nested conjunction of the given formulas; `None` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = JFormula>) -> Option<JFormula> {
        parts.into_iter().reduce(JFormula::and)
    }

    /// Splits a conjunction tree into its conjuncts, left to right.
    pub fn conjuncts(&self) -> Vec<&JFormula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                JFormula::And(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
                other => out.push(other),
            }
        }
        out
    }

    /// Matches `~(a & ~b)` and returns `(a, b)`.
    pub fn as_implication(&self) -> Option<(&JFormula, &JFormula)> {
        match self {
            JFormula::Not(inner) => match inner.as_ref() {
                JFormula::And(a, nb) => match nb.as_ref() {
                    JFormula::Not(b) => Some((a, b)),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }
}

/// Probabilistic formula: `P>=s a | ~A | A & A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PFormula {
    AtLeast(Rational, JFormula),
    Not(Box<PFormula>),
    And(Box<PFormula>, Box<PFormula>),
}

impl PFormula {
    /// Panics if `threshold` is outside `[0, 1]`; see [`PFormula::try_at_least`].
    pub fn at_least(threshold: Rational, body: JFormula) -> PFormula {
        PFormula::try_at_least(threshold, body).expect("threshold in [0, 1]")
    }

    pub fn try_at_least(threshold: Rational, body: JFormula) -> Result<PFormula> {
        if threshold < Rational::zero() || threshold > Rational::one() {
            return Err(Error::parse(
                0,
                format!("threshold {threshold} outside [0, 1]"),
            ));
        }
        Ok(PFormula::AtLeast(threshold, body))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: PFormula) -> PFormula {
        PFormula::Not(Box::new(inner))
    }

    pub fn and(left: PFormula, right: PFormula) -> PFormula {
        PFormula::And(Box::new(left), Box::new(right))
    }

    /// `A -> B`, stored as `~(A & ~B)`.
    pub fn implies(left: PFormula, right: PFormula) -> PFormula {
        PFormula::not(PFormula::and(left, PFormula::not(right)))
    }

    pub fn or(left: PFormula, right: PFormula) -> PFormula {
        PFormula::not(PFormula::and(PFormula::not(left), PFormula::not(right)))
    }

    /// Every `P>=s a` node, left to right, with repetitions.
    pub fn at_least_nodes(&self) -> Vec<(&Rational, &JFormula)> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                PFormula::AtLeast(s, a) => out.push((s, a)),
                PFormula::Not(inner) => stack.push(inner),
                PFormula::And(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        out
    }

    /// Rebuilds the formula with every probability body replaced by `f(body)`.
    pub fn map_bodies(&self, f: &mut impl FnMut(&JFormula) -> JFormula) -> PFormula {
        match self {
            PFormula::AtLeast(s, a) => PFormula::AtLeast(s.clone(), f(a)),
            PFormula::Not(inner) => PFormula::not(inner.map_bodies(f)),
            PFormula::And(l, r) => {
                let l = l.map_bodies(f);
                PFormula::and(l, r.map_bodies(f))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implication_round_trip() {
        let f = JFormula::implies(JFormula::prop(1), JFormula::prop(2));
        let (a, b) = f.as_implication().unwrap();
        assert_eq!(a, &JFormula::prop(1));
        assert_eq!(b, &JFormula::prop(2));
        assert!(JFormula::prop(1).as_implication().is_none());
    }

    #[test]
    fn conjuncts_flatten_both_sides() {
        let f = JFormula::and(
            JFormula::and(JFormula::prop(1), JFormula::prop(2)),
            JFormula::and(JFormula::prop(3), JFormula::prop(4)),
        );
        let cs: Vec<_> = f.conjuncts().into_iter().cloned().collect();
        assert_eq!(cs, (1..=4).map(JFormula::prop).collect::<Vec<_>>());
    }

    #[test]
    fn threshold_range_checked() {
        assert!(PFormula::try_at_least(crate::rational::ratio(3, 2), JFormula::prop(1)).is_err());
        assert!(PFormula::try_at_least(crate::rational::int(0), JFormula::prop(1)).is_ok());
    }

    #[test]
    fn subterms_children_first() {
        let t = Term::app(Term::Var(1), Term::sum(Term::Var(2), Term::Var(1)));
        let subs = t.subterms();
        assert_eq!(subs.len(), 4);
        assert_eq!(subs.last().unwrap(), &&t);
        assert_eq!(t.depth(), 3);
    }
}
