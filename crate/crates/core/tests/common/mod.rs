//! Shared oracles and seeded generators for the integration tests.
#![allow(dead_code)]

pub mod closure;
pub mod fm;

use pjsat::syntax::{Atom, Basis, JFormula, PFormula, Term};
use pjsat::Rational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub const THRESHOLDS: [(i64, i64); 7] = [(0, 1), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)];

pub fn thresholds() -> Vec<Rational> {
    THRESHOLDS.iter().map(|&(n, d)| q(n, d)).collect()
}

pub const DEFAULT_CONSTANTS: [&str; 6] = [
    "c_taut1", "c_taut2", "c_taut3", "c_app", "c_sum_l", "c_sum_r",
];

/// Random term of depth at most `depth` over variables `x1..x3` and the
/// default constants.
pub fn gen_term(r: &mut impl Rng, depth: usize) -> Term {
    if depth == 0 || r.gen_bool(0.35) {
        return if r.gen_bool(0.6) {
            Term::Var(r.gen_range(1..=3))
        } else {
            Term::constant(*DEFAULT_CONSTANTS.choose(r).unwrap())
        };
    }
    match r.gen_range(0..5) {
        0 | 1 => Term::app(gen_term(r, depth - 1), gen_term(r, depth - 1)),
        2 | 3 => Term::sum(gen_term(r, depth - 1), gen_term(r, depth - 1)),
        _ => Term::bang(gen_term(r, depth - 1)),
    }
}

/// Random formula over `p1..p{props}`; assertions appear only while
/// `assert_depth > 0`.
pub fn gen_jformula(r: &mut impl Rng, depth: usize, props: u32, assert_depth: usize) -> JFormula {
    if depth == 0 || r.gen_bool(0.3) {
        return JFormula::prop(r.gen_range(1..=props));
    }
    let pick = r.gen_range(0..if assert_depth > 0 { 5 } else { 4 });
    match pick {
        0 => JFormula::not(gen_jformula(r, depth - 1, props, assert_depth)),
        1 => JFormula::and(
            gen_jformula(r, depth - 1, props, assert_depth),
            gen_jformula(r, depth - 1, props, assert_depth),
        ),
        2 => JFormula::implies(
            gen_jformula(r, depth - 1, props, assert_depth),
            gen_jformula(r, depth - 1, props, assert_depth),
        ),
        3 => JFormula::or(
            gen_jformula(r, depth - 1, props, assert_depth),
            gen_jformula(r, depth - 1, props, assert_depth),
        ),
        _ => JFormula::assert(
            gen_term(r, 2),
            gen_jformula(r, depth - 1, props, assert_depth - 1),
        ),
    }
}

pub fn gen_pformula(r: &mut impl Rng, depth: usize) -> PFormula {
    if depth == 0 || r.gen_bool(0.3) {
        let t = thresholds().choose(r).unwrap().clone();
        return PFormula::at_least(t, gen_jformula(r, 2, 2, 1));
    }
    match r.gen_range(0..3) {
        0 => PFormula::not(gen_pformula(r, depth - 1)),
        1 => PFormula::and(gen_pformula(r, depth - 1), gen_pformula(r, depth - 1)),
        _ => PFormula::or(gen_pformula(r, depth - 1), gen_pformula(r, depth - 1)),
    }
}

pub fn random_atom(r: &mut impl Rng, basis: &Basis) -> Atom {
    Atom::new(
        basis.clone(),
        (0..basis.len()).map(|_| r.gen_bool(0.5)).collect(),
    )
}

/// Index of an atom in enumeration order: first basis entry is the most
/// significant bit, positive literal is bit 0.
pub fn atom_index(signs: &[bool]) -> usize {
    signs.iter().fold(0, |acc, &s| (acc << 1) | usize::from(!s))
}

/// Truth table of `phi` over all sign assignments of `basis`, indexed as in
/// [`atom_index`]. `None` when `phi` mentions a basic formula outside the basis.
pub fn truth_table(phi: &JFormula, basis: &[JFormula]) -> Option<Vec<bool>> {
    let n = basis.len();
    let rows = 1usize << n;
    Some(match phi {
        JFormula::Prop(_) | JFormula::Assert(..) => {
            let i = basis.iter().position(|b| b == phi)?;
            (0..rows).map(|k| (k >> (n - 1 - i)) & 1 == 0).collect()
        }
        JFormula::Not(g) => truth_table(g, basis)?.into_iter().map(|v| !v).collect(),
        JFormula::And(a, b) => {
            let (ta, tb) = (truth_table(a, basis)?, truth_table(b, basis)?);
            ta.iter().zip(&tb).map(|(x, y)| *x && *y).collect()
        }
    })
}

pub fn truth_value(phi: &JFormula, atom: &Atom) -> Option<bool> {
    truth_table(phi, atom.basis().formulas()).map(|t| t[atom_index(atom.signs())])
}

/// Basic formulas occurring in `phi`, outermost only (no recursion into
/// assertion bodies).
pub fn top_basics(phi: &JFormula, out: &mut Vec<JFormula>) {
    match phi {
        JFormula::Prop(_) | JFormula::Assert(..) => {
            if !out.contains(phi) {
                out.push(phi.clone());
            }
        }
        JFormula::Not(g) => top_basics(g, out),
        JFormula::And(a, b) => {
            top_basics(a, out);
            top_basics(b, out);
        }
    }
}
