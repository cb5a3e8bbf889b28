//! First-order unification over the two-sorted pattern language.

use crate::cspec::{PTerm, Pattern};
use std::collections::HashMap;

/// Triangular substitution: bindings may mention other bound metavariables.
/// [`Substitution::apply`] resolves them fully.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    formulas: HashMap<u32, Pattern>,
    terms: HashMap<u32, PTerm>,
}

/// Source of metavariable ids that are unique within one search.
#[derive(Clone, Debug)]
pub struct MetaSupply {
    next: u32,
}

impl MetaSupply {
    /// Ids start above every metavariable the caller already uses.
    pub fn starting_at(next: u32) -> MetaSupply {
        MetaSupply { next }
    }

    pub fn fresh(&mut self) -> u32 {
        self.reserve(1)
    }

    /// Reserves `n` consecutive ids and returns the first.
    pub fn reserve(&mut self, n: u32) -> u32 {
        let first = self.next;
        self.next += n.max(1);
        first
    }
}

impl Default for MetaSupply {
    fn default() -> Self {
        MetaSupply::starting_at(0)
    }
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty() && self.terms.is_empty()
    }

    pub fn formula_binding(&self, m: u32) -> Option<Pattern> {
        self.formulas.get(&m).map(|p| self.apply(p))
    }

    pub fn term_binding(&self, m: u32) -> Option<PTerm> {
        self.terms.get(&m).map(|t| self.apply_term(t))
    }

    fn walk<'a>(&'a self, mut p: &'a Pattern) -> &'a Pattern {
        while let Pattern::Meta(m) = p {
            match self.formulas.get(m) {
                Some(next) => p = next,
                None => break,
            }
        }
        p
    }

    fn walk_term<'a>(&'a self, mut t: &'a PTerm) -> &'a PTerm {
        while let PTerm::Meta(m) = t {
            match self.terms.get(m) {
                Some(next) => t = next,
                None => break,
            }
        }
        t
    }

    pub fn apply(&self, p: &Pattern) -> Pattern {
        match self.walk(p) {
            Pattern::Meta(m) => Pattern::Meta(*m),
            Pattern::Prop(i) => Pattern::Prop(*i),
            Pattern::Not(q) => Pattern::not(self.apply(q)),
            Pattern::And(l, r) => Pattern::and(self.apply(l), self.apply(r)),
            Pattern::Assert(t, b) => Pattern::assert(self.apply_term(t), self.apply(b)),
        }
    }

    pub fn apply_term(&self, t: &PTerm) -> PTerm {
        match self.walk_term(t) {
            PTerm::Meta(m) => PTerm::Meta(*m),
            PTerm::Const(c) => PTerm::Const(c.clone()),
            PTerm::Var(i) => PTerm::Var(*i),
            PTerm::App(l, r) => PTerm::app(self.apply_term(l), self.apply_term(r)),
            PTerm::Sum(l, r) => PTerm::sum(self.apply_term(l), self.apply_term(r)),
            PTerm::Bang(i) => PTerm::Bang(Box::new(self.apply_term(i))),
        }
    }

    fn occurs(&self, m: u32, p: &Pattern) -> bool {
        match self.walk(p) {
            Pattern::Meta(k) => *k == m,
            Pattern::Prop(_) => false,
            Pattern::Not(q) => self.occurs(m, q),
            Pattern::And(l, r) => self.occurs(m, l) || self.occurs(m, r),
            // formula metavariables never occur inside terms
            Pattern::Assert(_, b) => self.occurs(m, b),
        }
    }

    fn occurs_term(&self, m: u32, t: &PTerm) -> bool {
        match self.walk_term(t) {
            PTerm::Meta(k) => *k == m,
            PTerm::Const(_) | PTerm::Var(_) => false,
            PTerm::App(l, r) | PTerm::Sum(l, r) => self.occurs_term(m, l) || self.occurs_term(m, r),
            PTerm::Bang(i) => self.occurs_term(m, i),
        }
    }

    fn unify_terms(&mut self, a: &PTerm, b: &PTerm) -> bool {
        let a = self.walk_term(a).clone();
        let b = self.walk_term(b).clone();
        match (&a, &b) {
            (PTerm::Meta(x), PTerm::Meta(y)) if x == y => true,
            (PTerm::Meta(x), other) | (other, PTerm::Meta(x)) => {
                if self.occurs_term(*x, other) {
                    return false;
                }
                self.terms.insert(*x, other.clone());
                true
            }
            (PTerm::Const(x), PTerm::Const(y)) => x == y,
            (PTerm::Var(x), PTerm::Var(y)) => x == y,
            (PTerm::App(al, ar), PTerm::App(bl, br)) | (PTerm::Sum(al, ar), PTerm::Sum(bl, br)) => {
                self.unify_terms(al, bl) && self.unify_terms(ar, br)
            }
            (PTerm::Bang(x), PTerm::Bang(y)) => self.unify_terms(x, y),
            _ => false,
        }
    }

    fn unify_patterns(&mut self, a: &Pattern, b: &Pattern) -> bool {
        let a = self.walk(a).clone();
        let b = self.walk(b).clone();
        match (&a, &b) {
            (Pattern::Meta(x), Pattern::Meta(y)) if x == y => true,
            (Pattern::Meta(x), other) | (other, Pattern::Meta(x)) => {
                if self.occurs(*x, other) {
                    return false;
                }
                self.formulas.insert(*x, other.clone());
                true
            }
            (Pattern::Prop(x), Pattern::Prop(y)) => x == y,
            (Pattern::Not(x), Pattern::Not(y)) => self.unify_patterns(x, y),
            (Pattern::And(al, ar), Pattern::And(bl, br)) => {
                self.unify_patterns(al, bl) && self.unify_patterns(ar, br)
            }
            (Pattern::Assert(at, ab), Pattern::Assert(bt, bb)) => {
                self.unify_terms(at, bt) && self.unify_patterns(ab, bb)
            }
            _ => false,
        }
    }
}

/// Most general unifier of `x` and `y` extending `sigma`, if any.
pub fn unify(x: &Pattern, y: &Pattern, sigma: &Substitution) -> Option<Substitution> {
    let mut s = sigma.clone();
    s.unify_patterns(x, y).then_some(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_jformula;

    fn g(text: &str) -> Pattern {
        (&parse_jformula(text).unwrap()).into()
    }

    #[test]
    fn binds_antecedent() {
        let x = Pattern::implies(Pattern::Meta(0), g("p1"));
        let s = unify(&x, &g("p2 -> p1"), &Substitution::new()).unwrap();
        assert_eq!(s.formula_binding(0), Some(g("p2")));
        assert_eq!(s.apply(&x), g("p2 -> p1"));
    }

    #[test]
    fn binds_both_sorts() {
        let x = Pattern::assert(PTerm::Meta(0), Pattern::Meta(0));
        let y = g("t:(p1 & p2)");
        let s = unify(&x, &y, &Substitution::new()).unwrap();
        assert_eq!(s.term_binding(0), Some(PTerm::Const("t".into())));
        assert_eq!(s.formula_binding(0), Some(g("p1 & p2")));
    }

    #[test]
    fn occurs_check() {
        let a = Pattern::Meta(0);
        assert!(unify(&a, &Pattern::not(a.clone()), &Substitution::new()).is_none());
        let t = Pattern::assert(PTerm::Meta(1), g("p1"));
        let u = Pattern::assert(PTerm::app(PTerm::Meta(1), PTerm::Var(1)), g("p1"));
        assert!(unify(&t, &u, &Substitution::new()).is_none());
    }

    #[test]
    fn chains_through_bindings() {
        // A = B, B = p1 & C, C = p2
        let mut s = unify(&Pattern::Meta(0), &Pattern::Meta(1), &Substitution::new()).unwrap();
        s = unify(
            &Pattern::Meta(1),
            &Pattern::and(g("p1"), Pattern::Meta(2)),
            &s,
        )
        .unwrap();
        s = unify(&Pattern::Meta(2), &g("p2"), &s).unwrap();
        assert_eq!(s.formula_binding(0), Some(g("p1 & p2")));
        assert!(unify(&Pattern::Meta(0), &g("p1 & p3"), &s).is_none());
        // indirect cycle
        let c = unify(
            &Pattern::Meta(5),
            &Pattern::not(Pattern::Meta(6)),
            &Substitution::new(),
        )
        .unwrap();
        assert!(unify(
            &Pattern::Meta(6),
            &Pattern::and(Pattern::Meta(5), g("p1")),
            &c
        )
        .is_none());
    }

    #[test]
    fn clash() {
        assert!(unify(&g("p1"), &g("p2"), &Substitution::new()).is_none());
        assert!(unify(&g("s:p1"), &g("t:p1"), &Substitution::new()).is_none());
    }
}
