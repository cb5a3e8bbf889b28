//! Exact rational linear feasibility over non-negative variables, with
//! strict inequalities, and solution shrinking with certified entry sizes.

mod elim;
mod shrink;
mod simplex;

pub use elim::{rank, solve_square};
pub use shrink::{reduce_support, shrink_solution, SizeBound};

use crate::rational::{fmt_ratio, size_rat, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Le,
    Ge,
    Lt,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Lt => lhs < rhs,
        }
    }

    pub fn is_strict(self) -> bool {
        matches!(self, Relation::Lt)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Lt => "<",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    pub rhs: Rational,
}

impl Row {
    pub fn new(coeffs: Vec<Rational>, rel: Relation, rhs: Rational) -> Row {
        Row { coeffs, rel, rhs }
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        self.rel.holds(&self.lhs(x), &self.rhs)
    }
}

/// Rows over `var_count` variables, all implicitly non-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub var_count: usize,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    pub fn new(var_count: usize) -> LinearSystem {
        LinearSystem {
            var_count,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) {
        assert_eq!(
            coeffs.len(),
            self.var_count,
            "row width must match var_count"
        );
        self.rows.push(Row::new(coeffs, rel, rhs));
    }

    pub fn has_strict(&self) -> bool {
        self.rows.iter().any(|r| r.rel.is_strict())
    }

    pub fn is_equality_system(&self) -> bool {
        self.rows.iter().all(|r| r.rel == Relation::Eq)
    }

    /// Non-negativity plus every row, strict rows strictly.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.var_count
            && x.iter().all(|v| !v.is_negative())
            && self.rows.iter().all(|r| r.holds(x))
    }

    /// Largest size of any coefficient or right-hand side.
    pub fn coef_size(&self) -> u64 {
        self.rows
            .iter()
            .flat_map(|r| r.coeffs.iter().chain(std::iter::once(&r.rhs)))
            .map(|c| {
                if c.is_integer() {
                    crate::rational::int_size(&c.numer().abs().to_biguint().unwrap())
                } else {
                    size_rat(c)
                }
            })
            .max()
            .unwrap_or(1)
    }

    pub fn is_integral(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.coeffs.iter().all(Rational::is_integer) && r.rhs.is_integer())
    }
}

impl fmt::Display for LinearSystem {
    /// One row per line: `coef*z1 + ... REL rhs`; zero coefficients are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let terms: Vec<String> = row
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("{}*z{}", fmt_ratio(c), i + 1))
                .collect();
            let lhs = if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            };
            writeln!(f, "{lhs} {} {}", row.rel.symbol(), fmt_ratio(&row.rhs))?;
        }
        Ok(())
    }
}

/// A non-negative assignment to the variables of a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution(pub Vec<Rational>);

impl Solution {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn support(&self) -> Vec<usize> {
        support(&self.0)
    }
}

pub(crate) fn support(x: &[Rational]) -> Vec<usize> {
    x.iter()
        .enumerate()
        .filter(|(_, v)| v.is_positive())
        .map(|(i, _)| i)
        .collect()
}

/// A non-negative solution, or `None` when the system is infeasible.
///
/// Strict rows `a.z < b` become `a.z + e <= b` with `0 <= e <= 1`, and `e` is
/// maximised; the system is feasible iff the optimum is positive. The returned
/// point is a basic solution of that program.
pub fn feasible(system: &LinearSystem) -> Option<Solution> {
    let all: Vec<usize> = (0..system.var_count).collect();
    simplex::vertex_on_support(system, &all).map(Solution)
}

/// Scales every row by the lcm of its denominators. Returns the integral
/// system and the largest coefficient size `l` (right-hand sides included).
pub fn integerize(system: &LinearSystem) -> (LinearSystem, u64) {
    let mut out = LinearSystem::new(system.var_count);
    for row in &system.rows {
        let lcm = row
            .coeffs
            .iter()
            .chain(std::iter::once(&row.rhs))
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = Rational::from_integer(lcm);
        out.rows.push(Row::new(
            row.coeffs.iter().map(|c| c * &scale).collect(),
            row.rel,
            &row.rhs * &scale,
        ));
    }
    let l = out.coef_size();
    (out, l)
}
