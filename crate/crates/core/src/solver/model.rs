use crate::error::{Error, Result};
use crate::jsem::eval_under_atom;
use crate::rational::{fmt_ratio, parse_rational, size_rat, within_size_bound, Rational};
use crate::syntax::{basis_of, norm, size_p, Atom, Basis, JFormula, PFormula};
use num_traits::{One, Signed};
use std::fmt;

/// Finite probabilistic model: distinct atoms as worlds, positive rational
/// weights summing to one. Every set of worlds is measurable and its measure
/// is the sum of its weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallModel {
    basis: Basis,
    worlds: Vec<(Atom, Rational)>,
}

impl SmallModel {
    pub fn new(basis: Basis, worlds: Vec<(Atom, Rational)>) -> SmallModel {
        assert!(
            worlds.iter().all(|(a, _)| *a.basis() == basis),
            "worlds share the model basis"
        );
        SmallModel { basis, worlds }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn worlds(&self) -> &[(Atom, Rational)] {
        &self.worlds
    }

    /// Measure of a set of worlds, given by index.
    pub fn measure(&self, worlds: &[usize]) -> Rational {
        worlds.iter().map(|&i| &self.worlds[i].1).sum()
    }

    /// Indices of the worlds whose atom makes `body` true.
    pub fn extension(&self, body: &JFormula) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, (atom, _)) in self.worlds.iter().enumerate() {
            if eval_under_atom(body, atom)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub fn measure_of(&self, body: &JFormula) -> Result<Rational> {
        Ok(self.measure(&self.extension(body)?))
    }

    /// Every condition a certified model of `a` must meet, as messages; empty
    /// when the model is a valid small model of `a`.
    ///
    /// The weight bound is the shrink bound with `r = size_p(a)` and
    /// `l = norm(a)`. A solver system has `1 + k <= size_p(a)` rows for `k`
    /// literals, and integerizing a row with threshold `n/d` multiplies it by
    /// `d`, leaving coefficients `0`, `d` and `n`, each of size at most
    /// `size(n/d) <= norm(a)`.
    pub fn violations(&self, a: &PFormula) -> Result<Vec<String>> {
        let mut out = Vec::new();
        let size = size_p(a);
        if self.worlds.len() as u64 > size {
            out.push(format!("{} worlds exceed |A| = {size}", self.worlds.len()));
        }
        let total: Rational = self.worlds.iter().map(|(_, w)| w).sum();
        if !total.is_one() {
            out.push(format!("weights sum to {total}"));
        }
        let norm = norm(a);
        for (i, (atom, w)) in self.worlds.iter().enumerate() {
            if !w.is_positive() {
                out.push(format!("world {} has non-positive weight {w}", i + 1));
            }
            if !within_size_bound(size_rat(w), size, norm) {
                out.push(format!(
                    "world {} weight {w} has size {} above the bound",
                    i + 1,
                    size_rat(w)
                ));
            }
            if self.worlds[..i].iter().any(|(b, _)| b == atom) {
                out.push(format!("world {} repeats atom {atom}", i + 1));
            }
        }
        if !check_model(self, a)? {
            out.push("model does not satisfy the formula".into());
        }
        Ok(out)
    }

    /// Reads the line format written by `Display`, optionally preceded by a
    /// `SAT` or `UNSAT` header as printed by the CLI. The basis is recovered
    /// from the literals of the first world.
    pub fn parse(text: &str) -> Result<Option<SmallModel>> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .peekable();
        let err = |line: usize, msg: &str| Error::Model {
            line,
            msg: msg.to_string(),
        };
        match lines.peek() {
            Some((_, "UNSAT")) => return Ok(None),
            Some((_, "SAT")) => {
                lines.next();
            }
            Some((_, l)) if l.starts_with("world ") => {}
            Some((n, _)) => return Err(err(*n, "expected SAT, UNSAT or a world line")),
            None => return Err(err(1, "empty model file")),
        }
        let mut raw = Vec::new();
        for (n, line) in lines {
            if line.starts_with("check ") {
                continue;
            }
            let rest = line
                .strip_prefix("world ")
                .ok_or_else(|| err(n, "expected `world`"))?;
            let (_index, rest) = rest
                .split_once(" weight ")
                .ok_or_else(|| err(n, "expected `weight`"))?;
            let (weight, atom) = rest
                .split_once(" atom ")
                .ok_or_else(|| err(n, "expected `atom`"))?;
            let weight = parse_rational(weight).ok_or_else(|| err(n, "bad weight"))?;
            raw.push((n, weight, atom.to_string()));
        }
        let Some((first_line, _, first_atom)) = raw.first() else {
            return Err(err(1, "SAT model without worlds"));
        };
        let literals = crate::syntax::parse_jformula(first_atom)
            .map_err(|e| err(*first_line, &e.to_string()))?;
        let basis = Basis::new(literals.conjuncts().into_iter().map(|l| match l {
            JFormula::Not(inner) => inner.as_ref().clone(),
            other => other.clone(),
        }));
        if basis.formulas().iter().any(|f| !f.is_basic()) {
            return Err(err(*first_line, "atom literals must be basic"));
        }
        let mut worlds = Vec::new();
        for (n, w, text) in raw {
            let atom = Atom::parse(&basis, &text).map_err(|e| err(n, &e.to_string()))?;
            worlds.push((atom, w));
        }
        Ok(Some(SmallModel::new(basis, worlds)))
    }
}

impl fmt::Display for SmallModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (atom, w)) in self.worlds.iter().enumerate() {
            writeln!(f, "world {} weight {} atom {atom}", i + 1, fmt_ratio(w))?;
        }
        Ok(())
    }
}

/// Evaluates `a` in the model: each `P>=s b` is true iff the measure of the
/// worlds satisfying `b` is at least `s`.
pub fn check_model(model: &SmallModel, a: &PFormula) -> Result<bool> {
    for f in basis_of(a) {
        if model.basis.index_of(&f).is_none() {
            return Err(Error::BasisMismatch(f.to_string()));
        }
    }
    fn eval(model: &SmallModel, a: &PFormula) -> Result<bool> {
        Ok(match a {
            PFormula::AtLeast(s, body) => model.measure_of(body)? >= *s,
            PFormula::Not(inner) => !eval(model, inner)?,
            PFormula::And(l, r) => eval(model, l)? && eval(model, r)?,
        })
    }
    eval(model, a)
}
