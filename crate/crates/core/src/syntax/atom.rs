use super::measure::{basis_of, basis_of_j, canonical_order};
use super::{parse_jformula, JFormula, PFormula};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Default limit on the number of basic formulas whose atoms are enumerated.
pub const DEFAULT_ATOM_CAP: usize = 20;

#[derive(Debug)]
struct BasisInner {
    formulas: Vec<JFormula>,
    index: HashMap<JFormula, usize>,
}

/// Distinct basic formulas in canonical order. Cheap to clone.
#[derive(Clone, Debug)]
pub struct Basis(Arc<BasisInner>);

impl Basis {
    /// Deduplicates and orders canonically. Panics on a non-basic formula.
    pub fn new(formulas: impl IntoIterator<Item = JFormula>) -> Basis {
        let formulas = canonical_order(formulas);
        assert!(
            formulas.iter().all(JFormula::is_basic),
            "basis entries must be propositions or assertions"
        );
        let index = formulas
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, f)| (f, i))
            .collect();
        Basis(Arc::new(BasisInner { formulas, index }))
    }

    pub fn of_pformula(f: &PFormula) -> Basis {
        Basis::new(basis_of(f))
    }

    pub fn of_jformula(f: &JFormula) -> Basis {
        Basis::new(basis_of_j(f))
    }

    pub fn formulas(&self) -> &[JFormula] {
        &self.0.formulas
    }

    pub fn len(&self) -> usize {
        self.0.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.formulas.is_empty()
    }

    pub fn index_of(&self, f: &JFormula) -> Option<usize> {
        self.0.index.get(f).copied()
    }

    pub fn contains_all(&self, other: &[JFormula]) -> bool {
        other.iter().all(|f| self.index_of(f).is_some())
    }
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.formulas == other.0.formulas
    }
}

impl Eq for Basis {}

/// A signed conjunction over every formula of a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atom {
    basis: Basis,
    signs: Vec<bool>,
}

impl Atom {
    pub fn new(basis: Basis, signs: Vec<bool>) -> Atom {
        assert_eq!(basis.len(), signs.len(), "one sign per basis entry");
        Atom { basis, signs }
    }

    /// Atom number `index` in canonical enumeration order: the first basis
    /// entry is the most significant bit and positive literals come first.
    pub fn from_index(basis: Basis, index: u64) -> Atom {
        let n = basis.len();
        let signs = (0..n).map(|j| (index >> (n - 1 - j)) & 1 == 0).collect();
        Atom { basis, signs }
    }

    pub fn index(&self) -> u64 {
        self.signs
            .iter()
            .fold(0u64, |acc, &s| (acc << 1) | u64::from(!s))
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    /// Sign of a basic formula, or `None` when it is not in the basis.
    pub fn sign_of(&self, f: &JFormula) -> Option<bool> {
        self.basis.index_of(f).map(|i| self.signs[i])
    }

    pub fn literals(&self) -> impl Iterator<Item = (&JFormula, bool)> {
        self.basis.formulas().iter().zip(self.signs.iter().copied())
    }

    /// The atom as a conjunction of literals.
    pub fn to_formula(&self) -> JFormula {
        let lits = self.literals().map(|(f, s)| {
            if s {
                f.clone()
            } else {
                JFormula::not(f.clone())
            }
        });
        JFormula::conjunction(lits).expect("non-empty basis")
    }

    /// Reads an atom back from its printed form over a known basis. Literals
    /// may appear in any order but must cover the basis exactly once.
    pub fn parse(basis: &Basis, text: &str) -> Result<Atom> {
        let f = parse_jformula(text)?;
        let mut signs: Vec<Option<bool>> = vec![None; basis.len()];
        for lit in f.conjuncts() {
            let (g, sign) = match lit {
                JFormula::Not(inner) if inner.is_basic() => (inner.as_ref(), false),
                other if other.is_basic() => (other, true),
                other => return Err(Error::parse(0, format!("`{other}` is not a literal"))),
            };
            let i = basis
                .index_of(g)
                .ok_or_else(|| Error::BasisMismatch(g.to_string()))?;
            if signs[i].replace(sign).is_some() {
                return Err(Error::parse(0, format!("`{g}` occurs twice in the atom")));
            }
        }
        let signs = signs
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| Error::parse(0, format!("atom omits `{}`", basis.formulas()[i])))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Atom::new(basis.clone(), signs))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, s)) in self.literals().enumerate() {
            if i > 0 {
                write!(f, " & ")?;
            }
            if s {
                write!(f, "{g}")?;
            } else {
                write!(f, "{}", JFormula::not(g.clone()))?;
            }
        }
        Ok(())
    }
}

/// Enumerates all `2^n` atoms of a basis in canonical order.
pub struct AtomIter {
    basis: Basis,
    next: u64,
    end: u64,
}

impl Iterator for AtomIter {
    type Item = Atom;

    fn next(&mut self) -> Option<Atom> {
        if self.next >= self.end {
            return None;
        }
        let a = Atom::from_index(self.basis.clone(), self.next);
        self.next += 1;
        Some(a)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for AtomIter {}

pub fn atoms_of(basis: &Basis, cap: usize) -> Result<AtomIter> {
    if basis.len() > cap || basis.len() >= 63 {
        return Err(Error::ResourceCap {
            size: basis.len(),
            cap,
        });
    }
    Ok(AtomIter {
        basis: basis.clone(),
        next: 0,
        end: 1u64 << basis.len(),
    })
}
