//! Justification-logic semantics at the level of atoms.
//!
//! An atom fixes the truth of every basic formula. It is J-satisfiable iff no
//! negated assertion `~s:g` is forced by the least evidence function that
//! contains the atom's positive assertions and the constant specification and
//! is closed under application and sum. Membership in that least function is
//! decided by [`AtomContext::derives`], a goal-directed search that follows
//! the structure of the term and instantiates application antecedents only
//! through unification.

mod unify;

pub use unify::{unify, MetaSupply, Substitution};

use crate::cspec::{ConstantSpec, Pattern};
use crate::error::{Error, Result};
use crate::syntax::{atoms_of, Atom, Basis, JFormula, Term};
use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

/// Evidence hypotheses of an atom plus the constant specification.
#[derive(Clone, Debug)]
pub struct AtomContext<'cs> {
    positives: HashMap<Term, Vec<Pattern>>,
    negatives: Vec<(Term, JFormula)>,
    prop_signs: BTreeMap<u32, bool>,
    cs: &'cs ConstantSpec,
}

type Cont<'k> = dyn FnMut(Substitution, &mut MetaSupply) -> ControlFlow<()> + 'k;

impl<'cs> AtomContext<'cs> {
    pub fn new(atom: &Atom, cs: &'cs ConstantSpec) -> AtomContext<'cs> {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut prop_signs = BTreeMap::new();
        for (f, sign) in atom.literals() {
            match f {
                JFormula::Prop(i) => {
                    prop_signs.insert(*i, sign);
                }
                JFormula::Assert(t, body) => {
                    let entry = (t.clone(), body.as_ref().clone());
                    if sign {
                        pos.push(entry)
                    } else {
                        neg.push(entry)
                    }
                }
                _ => unreachable!("atoms range over basic formulas"),
            }
        }
        let mut ctx = AtomContext::from_assertions(pos, neg, cs);
        ctx.prop_signs = prop_signs;
        ctx
    }

    pub fn from_assertions(
        positives: Vec<(Term, JFormula)>,
        negatives: Vec<(Term, JFormula)>,
        cs: &'cs ConstantSpec,
    ) -> AtomContext<'cs> {
        let mut map: HashMap<Term, Vec<Pattern>> = HashMap::new();
        for (t, f) in positives {
            map.entry(t).or_default().push((&f).into());
        }
        AtomContext {
            positives: map,
            negatives,
            prop_signs: BTreeMap::new(),
            cs,
        }
    }

    pub fn negatives(&self) -> &[(Term, JFormula)] {
        &self.negatives
    }

    pub fn prop_signs(&self) -> &BTreeMap<u32, bool> {
        &self.prop_signs
    }

    /// Every substitution extending `sigma` under which `goal` is in the
    /// least evidence set of `t`. Duplicates are possible.
    pub fn derives(&self, t: &Term, goal: &Pattern, sigma: &Substitution) -> Vec<Substitution> {
        let mut supply = MetaSupply::starting_at(first_free_meta(goal, sigma));
        let mut out = Vec::new();
        let _ = self.search(t, goal, sigma, &mut supply, &mut |s, _| {
            out.push(s);
            ControlFlow::Continue(())
        });
        out
    }

    /// Whether the ground formula `goal` is in the least evidence set of `t`.
    pub fn derivable(&self, t: &Term, goal: &JFormula) -> bool {
        let goal: Pattern = goal.into();
        let mut supply = MetaSupply::starting_at(0);
        self.search(t, &goal, &Substitution::new(), &mut supply, &mut |_, _| {
            ControlFlow::Break(())
        })
        .is_break()
    }

    fn search(
        &self,
        t: &Term,
        goal: &Pattern,
        sigma: &Substitution,
        supply: &mut MetaSupply,
        k: &mut Cont<'_>,
    ) -> ControlFlow<()> {
        // hypotheses: t:psi in the atom
        if let Some(hyps) = self.positives.get(t) {
            for psi in hyps {
                if let Some(s) = unify(goal, psi, sigma) {
                    k(s, supply)?;
                }
            }
        }
        match t {
            Term::Const(c) => {
                for scheme in self.cs.schemes_of(c) {
                    let offset = supply.reserve(scheme.meta_span());
                    let instance = scheme.pattern.shift(offset);
                    if let Some(s) = unify(goal, &instance, sigma) {
                        k(s, supply)?;
                    }
                }
                for f in self.cs.finite_of(c) {
                    if let Some(s) = unify(goal, &f.into(), sigma) {
                        k(s, supply)?;
                    }
                }
            }
            Term::App(u, v) => {
                let x = supply.fresh();
                let major = Pattern::implies(Pattern::Meta(x), goal.clone());
                let minor = Pattern::Meta(x);
                self.search(u, &major, sigma, supply, &mut |s1, sup| {
                    self.search(v, &minor, &s1, sup, k)
                })?;
            }
            Term::Sum(u, v) => {
                self.search(u, goal, sigma, supply, k)?;
                self.search(v, goal, sigma, supply, k)?;
            }
            // no closure rule for `!`; variables carry only hypotheses
            Term::Bang(_) | Term::Var(_) => {}
        }
        ControlFlow::Continue(())
    }

    /// True iff no negated assertion is forced by the positive ones.
    pub fn consistent(&self) -> bool {
        self.negatives.iter().all(|(s, g)| !self.derivable(s, g))
    }
}

fn first_free_meta(goal: &Pattern, sigma: &Substitution) -> u32 {
    let resolved = sigma.apply(goal);
    let (fs, ts) = resolved.metas();
    let (gf, gt) = goal.metas();
    fs.into_iter()
        .chain(ts)
        .chain(gf)
        .chain(gt)
        .max()
        .map_or(0, |m| m + 1)
        .max(1 << 20)
}

/// J-satisfiability of a single atom under `cs`.
pub fn atom_jsat(atom: &Atom, cs: &ConstantSpec) -> bool {
    AtomContext::new(atom, cs).consistent()
}

/// Truth value of `phi` under the literal assignment of `atom`.
pub fn eval_under_atom(phi: &JFormula, atom: &Atom) -> Result<bool> {
    Ok(match phi {
        JFormula::Prop(_) | JFormula::Assert(..) => atom
            .sign_of(phi)
            .ok_or_else(|| Error::BasisMismatch(phi.to_string()))?,
        JFormula::Not(inner) => !eval_under_atom(inner, atom)?,
        JFormula::And(l, r) => eval_under_atom(l, atom)? && eval_under_atom(r, atom)?,
    })
}

/// An atom of `alpha` that makes it true and is J-satisfiable, if one exists.
pub fn jformula_witness(alpha: &JFormula, cs: &ConstantSpec, cap: usize) -> Result<Option<Atom>> {
    let basis = Basis::of_jformula(alpha);
    for atom in atoms_of(&basis, cap)? {
        if eval_under_atom(alpha, &atom)? && atom_jsat(&atom, cs) {
            return Ok(Some(atom));
        }
    }
    Ok(None)
}

pub fn jformula_sat(alpha: &JFormula, cs: &ConstantSpec, cap: usize) -> Result<bool> {
    Ok(jformula_witness(alpha, cs, cap)?.is_some())
}
