//! Bounded forward saturation of evidence sets, as an oracle for atom
//! J-satisfiability. Constant evidence is restricted to a finite candidate
//! universe built from the atom's subformulas and subterms.

use pjsat::cspec::{builtin_schemes, ConstantSpec, PTerm, Pattern};
use pjsat::syntax::{Atom, JFormula, Term};
use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

fn subformulas(f: &JFormula, out: &mut BTreeSet<JFormula>) {
    out.insert(f.clone());
    match f {
        JFormula::Prop(_) => {}
        JFormula::Not(g) => subformulas(g, out),
        JFormula::And(l, r) => {
            subformulas(l, out);
            subformulas(r, out);
        }
        JFormula::Assert(_, b) => subformulas(b, out),
    }
}

fn subterms(t: &Term, out: &mut BTreeSet<Term>) {
    out.insert(t.clone());
    match t {
        Term::App(l, r) | Term::Sum(l, r) => {
            subterms(l, out);
            subterms(r, out);
        }
        Term::Bang(i) => subterms(i, out),
        _ => {}
    }
}

fn body_terms(f: &JFormula, out: &mut BTreeSet<Term>) {
    match f {
        JFormula::Prop(_) => {}
        JFormula::Not(g) => body_terms(g, out),
        JFormula::And(l, r) => {
            body_terms(l, out);
            body_terms(r, out);
        }
        JFormula::Assert(t, b) => {
            subterms(t, out);
            body_terms(b, out);
        }
    }
}

fn instantiate_term(p: &PTerm, terms: &[Term]) -> Term {
    match p {
        PTerm::Meta(k) => terms[*k as usize].clone(),
        PTerm::Const(c) => Term::Const(c.clone()),
        PTerm::Var(i) => Term::Var(*i),
        PTerm::App(l, r) => Term::app(instantiate_term(l, terms), instantiate_term(r, terms)),
        PTerm::Sum(l, r) => Term::sum(instantiate_term(l, terms), instantiate_term(r, terms)),
        PTerm::Bang(i) => Term::bang(instantiate_term(i, terms)),
    }
}

pub fn instantiate(p: &Pattern, fs: &[JFormula], ts: &[Term]) -> JFormula {
    match p {
        Pattern::Meta(k) => fs[*k as usize].clone(),
        Pattern::Prop(i) => JFormula::Prop(*i),
        Pattern::Not(q) => JFormula::not(instantiate(q, fs, ts)),
        Pattern::And(l, r) => JFormula::and(instantiate(l, fs, ts), instantiate(r, fs, ts)),
        Pattern::Assert(t, b) => JFormula::assert(instantiate_term(t, ts), instantiate(b, fs, ts)),
    }
}

fn tuples<T: Clone>(pool: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pool.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Candidate formulas: subformulas `B` of the atom, implications `B -> B` and
/// `B -> (B -> B)`, and every scheme instance whose formula metavariables
/// range over `B` and term metavariables over the atom's subterms.
pub fn candidates(atom_formulas: &[JFormula], terms: &BTreeSet<Term>) -> BTreeSet<JFormula> {
    let mut base = BTreeSet::new();
    for f in atom_formulas {
        subformulas(f, &mut base);
    }
    let b: Vec<JFormula> = base.iter().cloned().collect();
    let ts: Vec<Term> = terms.iter().cloned().collect();
    let mut out = base.clone();
    for x in &b {
        for y in &b {
            let xy = JFormula::implies(x.clone(), y.clone());
            for z in &b {
                out.insert(JFormula::implies(z.clone(), xy.clone()));
            }
            out.insert(xy);
        }
    }
    for scheme in builtin_schemes() {
        let (fm, tm) = scheme.pattern.metas();
        let fcount = fm.iter().max().map_or(0, |m| m + 1) as usize;
        let tcount = tm.iter().max().map_or(0, |m| m + 1) as usize;
        for fs in tuples(&b, fcount) {
            for tsel in tuples(&ts, tcount) {
                out.insert(instantiate(&scheme.pattern, &fs, &tsel));
            }
        }
    }
    out
}

type AtomKey = (Vec<JFormula>, Vec<bool>);

thread_local! {
    static DEFAULT_CACHE: RefCell<HashMap<AtomKey, bool>> = RefCell::new(HashMap::new());
}

/// Oracle verdict: no negated assertion of the atom lies in the saturated
/// evidence of its term. Verdicts under the default specification are memoized.
pub fn forward_jsat(atom: &Atom, cs: &ConstantSpec) -> bool {
    if *cs != ConstantSpec::default_spec() {
        return saturate(atom, cs);
    }
    let key = (atom.basis().formulas().to_vec(), atom.signs().to_vec());
    if let Some(v) = DEFAULT_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let v = saturate(atom, cs);
    DEFAULT_CACHE.with(|c| c.borrow_mut().insert(key, v));
    v
}

fn saturate(atom: &Atom, cs: &ConstantSpec) -> bool {
    let mut pos: HashMap<Term, BTreeSet<JFormula>> = HashMap::new();
    let mut neg = Vec::new();
    let mut formulas = Vec::new();
    let mut terms = BTreeSet::new();
    for (f, sign) in atom.literals() {
        if let JFormula::Assert(t, b) = f {
            formulas.push(b.as_ref().clone());
            subterms(t, &mut terms);
            body_terms(b, &mut terms);
            if sign {
                pos.entry(t.clone()).or_default().insert(b.as_ref().clone());
            } else {
                neg.push((t.clone(), b.as_ref().clone()));
            }
        }
    }
    let universe = candidates(&formulas, &terms);

    // evidence for every subterm, children first
    let mut order: Vec<Term> = terms.iter().cloned().collect();
    order.sort_by_key(|t| t.depth());
    let mut ev: HashMap<Term, BTreeSet<JFormula>> = HashMap::new();
    for t in &order {
        let mut e: BTreeSet<JFormula> = pos.get(t).cloned().unwrap_or_default();
        match t {
            Term::Const(c) => {
                e.extend(universe.iter().filter(|f| cs.contains(c, f)).cloned());
            }
            Term::App(u, v) => {
                let eu = &ev[u.as_ref()];
                let ev_v = &ev[v.as_ref()];
                for f in eu {
                    if let Some((a, b)) = f.as_implication() {
                        if ev_v.contains(a) {
                            e.insert(b.clone());
                        }
                    }
                }
            }
            Term::Sum(u, v) => {
                e.extend(ev[u.as_ref()].iter().cloned());
                e.extend(ev[v.as_ref()].iter().cloned());
            }
            Term::Var(_) | Term::Bang(_) => {}
        }
        ev.insert(t.clone(), e);
    }
    neg.iter().all(|(s, g)| !ev[s].contains(g))
}
