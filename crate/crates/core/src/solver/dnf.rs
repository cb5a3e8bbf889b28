use crate::rational::Rational;
use crate::syntax::{JFormula, PFormula};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LitRel {
    Ge,
    Lt,
}

/// `P>=s a` (`Ge`) or `P<s a` (`Lt`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PLiteral {
    pub body: JFormula,
    pub rel: LitRel,
    pub threshold: Rational,
}

impl PLiteral {
    fn negated(&self) -> PLiteral {
        let rel = match self.rel {
            LitRel::Ge => LitRel::Lt,
            LitRel::Lt => LitRel::Ge,
        };
        PLiteral {
            rel,
            ..self.clone()
        }
    }

    /// Truth of the literal given the measure of its body.
    pub fn holds(&self, measure: &Rational) -> bool {
        match self.rel {
            LitRel::Ge => *measure >= self.threshold,
            LitRel::Lt => *measure < self.threshold,
        }
    }
}

impl fmt::Display for PLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at_least = PFormula::AtLeast(self.threshold.clone(), self.body.clone());
        match self.rel {
            LitRel::Ge => write!(f, "{at_least}"),
            LitRel::Lt => write!(f, "{}", PFormula::not(at_least)),
        }
    }
}

/// Disjunction of conjunctions of probability literals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PDnf {
    pub disjuncts: Vec<Vec<PLiteral>>,
}

fn merge(a: &[PLiteral], b: &[PLiteral]) -> Option<Vec<PLiteral>> {
    let mut out = a.to_vec();
    for lit in b {
        if out.contains(&lit.negated()) {
            return None;
        }
        if !out.contains(lit) {
            out.push(lit.clone());
        }
    }
    Some(out)
}

fn push_unique(out: &mut Vec<Vec<PLiteral>>, conj: Vec<PLiteral>) {
    let same = |c: &Vec<PLiteral>| c.len() == conj.len() && conj.iter().all(|l| c.contains(l));
    if !out.iter().any(same) {
        out.push(conj);
    }
}

fn dnf(a: &PFormula, positive: bool) -> Vec<Vec<PLiteral>> {
    match a {
        PFormula::AtLeast(s, body) => {
            let rel = if positive { LitRel::Ge } else { LitRel::Lt };
            vec![vec![PLiteral {
                body: body.clone(),
                rel,
                threshold: s.clone(),
            }]]
        }
        PFormula::Not(inner) => dnf(inner, !positive),
        PFormula::And(l, r) if positive => {
            let (dl, dr) = (dnf(l, true), dnf(r, true));
            let mut out = Vec::new();
            for x in &dl {
                for y in &dr {
                    if let Some(c) = merge(x, y) {
                        push_unique(&mut out, c);
                    }
                }
            }
            out
        }
        PFormula::And(l, r) => {
            let mut out = dnf(l, false);
            for c in dnf(r, false) {
                push_unique(&mut out, c);
            }
            out
        }
    }
}

/// Disjunctive normal form over the `P>=` occurrences of `a`, treating each
/// distinct occurrence as a Boolean variable. Contradictory conjunctions are
/// dropped, so the result is empty iff `a` is truth-functionally unsatisfiable.
pub fn p_dnf(a: &PFormula) -> PDnf {
    PDnf {
        disjuncts: dnf(a, true),
    }
}
