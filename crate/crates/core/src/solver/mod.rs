//! The decision procedure for probabilistic formulas.
//!
//! A formula is put in disjunctive normal form over its probability literals.
//! Each disjunct yields a linear system with one variable per J-satisfiable
//! atom of the formula: the weights sum to one, and every literal bounds the
//! total weight of the atoms that make its body true. The formula is
//! satisfiable iff some disjunct's system is feasible; a feasible point is
//! shrunk so that at most `|A|` atoms carry weight, each of bounded size, and
//! those atoms become the worlds of the returned model.

mod dnf;
mod model;

pub use dnf::{p_dnf, LitRel, PDnf, PLiteral};
pub use model::{check_model, SmallModel};

use crate::cspec::ConstantSpec;
use crate::error::{Error, Result};
use crate::jsem::{atom_jsat, eval_under_atom};
use crate::linrat::{feasible, integerize, shrink_solution, LinearSystem, Relation};
use crate::rational::Rational;
use crate::syntax::{atoms_of, Atom, Basis, JFormula, PFormula};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Sat(SmallModel),
    Unsat,
}

impl Verdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }

    pub fn model(&self) -> Option<&SmallModel> {
        match self {
            Verdict::Sat(m) => Some(m),
            Verdict::Unsat => None,
        }
    }
}

/// Verdict plus the intermediate objects, for dumping and inspection.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub verdict: Verdict,
    pub basis: Basis,
    /// J-satisfiable atoms, in canonical order; the variables of every system.
    pub sat_atoms: Vec<Atom>,
    /// Systems of the disjuncts tried, in order; the last one is feasible on SAT.
    pub systems: Vec<LinearSystem>,
}

/// One variable per atom; `sum z = 1`; per literal, the weight of the atoms
/// satisfying its body compared against the threshold.
pub fn build_system(conj: &[PLiteral], sat_atoms: &[Atom]) -> Result<LinearSystem> {
    let n = sat_atoms.len();
    let mut system = LinearSystem::new(n);
    system.push(vec![Rational::one(); n], Relation::Eq, Rational::one());
    for lit in conj {
        let mut coeffs = Vec::with_capacity(n);
        for atom in sat_atoms {
            let member = eval_under_atom(&lit.body, atom)?;
            coeffs.push(if member {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        let rel = match lit.rel {
            LitRel::Ge => Relation::Ge,
            LitRel::Lt => Relation::Lt,
        };
        system.push(coeffs, rel, lit.threshold.clone());
    }
    Ok(system)
}

pub fn solve(a: &PFormula, cs: &ConstantSpec, atom_cap: usize) -> Result<SolveReport> {
    let basis = Basis::of_pformula(a);
    let sat_atoms: Vec<Atom> = atoms_of(&basis, atom_cap)?
        .filter(|atom| atom_jsat(atom, cs))
        .collect();
    let dnf = p_dnf(a);
    let mut systems = Vec::new();
    for conj in &dnf.disjuncts {
        let system = build_system(conj, &sat_atoms)?;
        let found = feasible(&system);
        systems.push(system);
        let Some(x) = found else { continue };
        let system = systems.last().expect("just pushed");
        let (integral, _) = integerize(system);
        let small = shrink_solution(&integral, &x)?;
        let worlds = small
            .values()
            .iter()
            .zip(&sat_atoms)
            .filter(|(w, _)| w.is_positive())
            .map(|(w, atom)| (atom.clone(), w.clone()))
            .collect();
        let model = SmallModel::new(basis.clone(), worlds);
        let problems = model.violations(a)?;
        if !problems.is_empty() {
            return Err(Error::Internal(format!(
                "emitted model fails certification: {}",
                problems.join("; ")
            )));
        }
        return Ok(SolveReport {
            verdict: Verdict::Sat(model),
            basis,
            sat_atoms,
            systems,
        });
    }
    Ok(SolveReport {
        verdict: Verdict::Unsat,
        basis,
        sat_atoms,
        systems,
    })
}

pub fn solve_sat(a: &PFormula, cs: &ConstantSpec, atom_cap: usize) -> Result<Verdict> {
    Ok(solve(a, cs, atom_cap)?.verdict)
}

/// `a` is valid iff `~a` is unsatisfiable.
pub fn valid(a: &PFormula, cs: &ConstantSpec, atom_cap: usize) -> Result<bool> {
    Ok(!solve_sat(&PFormula::not(a.clone()), cs, atom_cap)?.is_sat())
}

pub fn lift_to_p1(alpha: &JFormula) -> PFormula {
    PFormula::AtLeast(Rational::one(), alpha.clone())
}
