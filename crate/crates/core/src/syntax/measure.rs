use super::{JFormula, PFormula};
use crate::rational::{self, Rational};
use std::collections::BTreeSet;

/// An element of `subf(A)`: an LP or an LJ formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subformula {
    P(PFormula),
    J(JFormula),
}

fn collect_j(f: &JFormula, out: &mut BTreeSet<Subformula>) {
    out.insert(Subformula::J(f.clone()));
    match f {
        JFormula::Prop(_) => {}
        JFormula::Not(inner) => collect_j(inner, out),
        JFormula::And(l, r) => {
            collect_j(l, out);
            collect_j(r, out);
        }
        JFormula::Assert(_, body) => collect_j(body, out),
    }
}

fn collect_p(f: &PFormula, out: &mut BTreeSet<Subformula>) {
    out.insert(Subformula::P(f.clone()));
    match f {
        PFormula::AtLeast(_, body) => collect_j(body, out),
        PFormula::Not(inner) => collect_p(inner, out),
        PFormula::And(l, r) => {
            collect_p(l, out);
            collect_p(r, out);
        }
    }
}

pub fn subf(f: &PFormula) -> BTreeSet<Subformula> {
    let mut out = BTreeSet::new();
    collect_p(f, &mut out);
    out
}

pub fn subf_j(f: &JFormula) -> BTreeSet<Subformula> {
    let mut out = BTreeSet::new();
    collect_j(f, &mut out);
    out
}

fn basic_parts(f: &JFormula, out: &mut BTreeSet<JFormula>) {
    match f {
        JFormula::Prop(_) => {
            out.insert(f.clone());
        }
        JFormula::Not(inner) => basic_parts(inner, out),
        JFormula::And(l, r) => {
            basic_parts(l, out);
            basic_parts(r, out);
        }
        JFormula::Assert(_, body) => {
            out.insert(f.clone());
            basic_parts(body, out);
        }
    }
}

/// Sorts basic formulas canonically: propositions by index, then assertions
/// by their printed form.
pub(crate) fn canonical_order(set: impl IntoIterator<Item = JFormula>) -> Vec<JFormula> {
    let mut props = Vec::new();
    let mut asserts = Vec::new();
    for f in set {
        match f {
            JFormula::Prop(i) => props.push(i),
            other => asserts.push((other.to_string(), other)),
        }
    }
    props.sort_unstable();
    props.dedup();
    asserts.sort_by(|a, b| a.0.cmp(&b.0));
    asserts.dedup_by(|a, b| a.1 == b.1);
    props
        .into_iter()
        .map(JFormula::Prop)
        .chain(asserts.into_iter().map(|(_, f)| f))
        .collect()
}

/// The propositions and justification assertions among `subf(f)`, in
/// canonical order.
pub fn basis_of(f: &PFormula) -> Vec<JFormula> {
    let mut set = BTreeSet::new();
    for (_, body) in f.at_least_nodes() {
        basic_parts(body, &mut set);
    }
    canonical_order(set)
}

pub fn basis_of_j(f: &JFormula) -> Vec<JFormula> {
    let mut set = BTreeSet::new();
    basic_parts(f, &mut set);
    canonical_order(set)
}

/// `|P>=s a| = 2`, `|~B| = 1 + |B|`, `|B & C| = |B| + 1 + |C|`.
pub fn size_p(f: &PFormula) -> u64 {
    match f {
        PFormula::AtLeast(..) => 2,
        PFormula::Not(inner) => 1 + size_p(inner),
        PFormula::And(l, r) => size_p(l) + 1 + size_p(r),
    }
}

pub fn size_rat(r: &Rational) -> u64 {
    rational::size_rat(r)
}

/// Largest threshold size occurring in the formula.
pub fn norm(f: &PFormula) -> u64 {
    f.at_least_nodes()
        .into_iter()
        .map(|(s, _)| size_rat(s))
        .max()
        .expect("every LP formula has a P>= leaf")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::syntax::{parse_jformula, parse_pformula, Term};

    fn j(text: &str) -> JFormula {
        parse_jformula(text).unwrap()
    }

    fn js(items: &[&str]) -> BTreeSet<Subformula> {
        items.iter().map(|t| Subformula::J(j(t))).collect()
    }

    #[test]
    fn subf_prop() {
        assert_eq!(subf_j(&j("p1")), js(&["p1"]));
    }

    #[test]
    fn subf_assertion() {
        assert_eq!(subf_j(&j("t:p1")), js(&["t:p1", "p1"]));
    }

    #[test]
    fn subf_probabilistic() {
        let a = parse_pformula("P>=1/2 (p1 & p2)").unwrap();
        let mut expect = js(&["p1 & p2", "p1", "p2"]);
        expect.insert(Subformula::P(a.clone()));
        assert_eq!(subf(&a), expect);
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            basis_of(&parse_pformula("P>=1/2 p1").unwrap()),
            vec![j("p1")]
        );
        assert_eq!(
            basis_of(&parse_pformula("P>=1/2 t:s:p1").unwrap()),
            vec![j("p1"), j("s:p1"), j("t:s:p1")]
        );
        assert_eq!(
            basis_of(&parse_pformula("P>=1 (p1 & ~p1)").unwrap()),
            vec![j("p1")]
        );
    }

    #[test]
    fn basis_is_canonical() {
        let f = parse_pformula("P>=1 (x1:p2 & p10 & p2 & c:p1) & ~P>=1/2 (p3 & c:p1)").unwrap();
        assert_eq!(
            basis_of(&f),
            vec![j("p1"), j("p2"), j("p3"), j("p10"), j("c:p1"), j("x1:p2")]
        );
        let _ = Term::Var(0);
    }

    #[test]
    fn sizes() {
        assert_eq!(size_p(&parse_pformula("P>=1/2 p1").unwrap()), 2);
        assert_eq!(size_p(&parse_pformula("~P>=1/2 p1").unwrap()), 3);
        assert_eq!(size_p(&parse_pformula("P>=1 p1 & ~P>=1/2 p2").unwrap()), 6);
        assert_eq!(size_rat(&int(0)), 2);
        assert_eq!(size_rat(&ratio(1, 2)), 3);
        assert_eq!(size_rat(&ratio(3, 4)), 5);
    }

    #[test]
    fn norms() {
        assert_eq!(norm(&parse_pformula("P>=1/2 p1").unwrap()), 3);
        assert_eq!(norm(&parse_pformula("P>=3/4 p1 & ~P>=1/2 p2").unwrap()), 5);
        assert_eq!(norm(&parse_pformula("P>=0 p1").unwrap()), size_rat(&int(0)));
    }
}
