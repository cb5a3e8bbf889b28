//! Fourier-Motzkin feasibility for systems over non-negative variables with
//! `=`, `<=`, `>=`, `<` rows. Exact, exponential, test-only.

use num_traits::{Signed, Zero};
use pjsat::linrat::{LinearSystem, Relation};
use pjsat::Rational;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Ineq {
    coeffs: Vec<Rational>,
    rhs: Rational,
    strict: bool,
}

impl Ineq {
    /// Scales so the first nonzero coefficient has magnitude one.
    fn normalized(mut self) -> Ineq {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).cloned() {
            let s = lead.abs();
            for c in self.coeffs.iter_mut() {
                *c /= &s;
            }
            self.rhs /= &s;
        }
        self
    }
}

/// Merges variables with identical coefficient columns; feasibility over the
/// non-negative orthant is unchanged.
fn merge_columns(system: &LinearSystem) -> LinearSystem {
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for j in 0..system.var_count {
        let col: Vec<Rational> = system.rows.iter().map(|r| r.coeffs[j].clone()).collect();
        if !columns.contains(&col) {
            columns.push(col);
        }
    }
    let mut out = LinearSystem::new(columns.len());
    for (i, row) in system.rows.iter().enumerate() {
        out.push(
            columns.iter().map(|c| c[i].clone()).collect(),
            row.rel,
            row.rhs.clone(),
        );
    }
    out
}

pub fn fm_feasible(system: &LinearSystem) -> bool {
    let system = merge_columns(system);
    let n = system.var_count;
    let mut cons: Vec<Ineq> = Vec::new();
    for row in &system.rows {
        let neg: Vec<Rational> = row.coeffs.iter().map(|c| -c.clone()).collect();
        match row.rel {
            Relation::Le => cons.push(Ineq {
                coeffs: row.coeffs.clone(),
                rhs: row.rhs.clone(),
                strict: false,
            }),
            Relation::Lt => cons.push(Ineq {
                coeffs: row.coeffs.clone(),
                rhs: row.rhs.clone(),
                strict: true,
            }),
            Relation::Ge => cons.push(Ineq {
                coeffs: neg,
                rhs: -row.rhs.clone(),
                strict: false,
            }),
            Relation::Eq => {
                cons.push(Ineq {
                    coeffs: row.coeffs.clone(),
                    rhs: row.rhs.clone(),
                    strict: false,
                });
                cons.push(Ineq {
                    coeffs: neg,
                    rhs: -row.rhs.clone(),
                    strict: false,
                });
            }
        }
    }
    for j in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[j] = -Rational::from_integer(1.into());
        cons.push(Ineq {
            coeffs: c,
            rhs: Rational::zero(),
            strict: false,
        });
    }
    let mut cons: Vec<Ineq> = cons.into_iter().map(Ineq::normalized).collect();
    cons.sort();
    cons.dedup();

    for k in 0..n {
        let (mut pos, mut negs, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cons {
            if c.coeffs[k].is_positive() {
                pos.push(c);
            } else if c.coeffs[k].is_negative() {
                negs.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &negs {
                let a = p.coeffs[k].clone();
                let b = -q.coeffs[k].clone();
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| x / &a + y / &b)
                    .collect();
                let rhs = &p.rhs / &a + &q.rhs / &b;
                rest.push(
                    Ineq {
                        coeffs,
                        rhs,
                        strict: p.strict || q.strict,
                    }
                    .normalized(),
                );
            }
        }
        rest.sort();
        rest.dedup();
        // stop at the first violated variable-free row
        for c in &rest {
            if c.coeffs.iter().all(Zero::is_zero) && !satisfied_constant(c) {
                return false;
            }
        }
        cons = rest;
    }
    cons.iter().all(satisfied_constant)
}

fn satisfied_constant(c: &Ineq) -> bool {
    if c.strict {
        c.rhs.is_positive()
    } else {
        !c.rhs.is_negative()
    }
}
