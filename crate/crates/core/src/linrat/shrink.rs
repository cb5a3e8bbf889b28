//! Support reduction and solution shrinking.
//!
//! `shrink_solution` first moves to a basic point of the system restricted to
//! the support of the given solution. It then pins every row as an equality
//! at that point and repeats the following until a square nonsingular system
//! remains: drop dependent equalities, and while there are fewer equalities
//! than variables, reduce the support with kernel steps and zero out the
//! vanished variables. The unique solution of the final square system is the
//! answer.

use super::elim::{independent_rows, kernel_vector, solve_square};
use super::simplex::vertex_on_support;
use super::{integerize, support, LinearSystem, Relation, Solution};
use crate::error::{Error, Result};
use crate::rational::{size_rat, within_size_bound, Rational};
use num_traits::{Signed, Zero};

/// Entry size bound `2 (r l + r log2 r + 1)` for a system with `r` rows and
/// integral coefficients of size at most `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeBound {
    pub rows: u64,
    pub coef_size: u64,
}

impl SizeBound {
    /// The bound for `system` after clearing denominators row by row.
    pub fn for_system(system: &LinearSystem) -> SizeBound {
        let (_, l) = integerize(system);
        SizeBound {
            rows: system.rows.len() as u64,
            coef_size: l,
        }
    }

    pub fn admits(&self, value: &Rational) -> bool {
        within_size_bound(size_rat(value), self.rows, self.coef_size)
    }

    pub fn as_f64(&self) -> f64 {
        crate::rational::size_bound_f64(self.rows, self.coef_size)
    }
}

/// Walks `x` along kernel directions of its support columns until at most
/// `r` entries (the number of equalities) are positive.
pub fn reduce_support(system: &LinearSystem, x: &Solution) -> Result<Solution> {
    if !system.is_equality_system() {
        return Err(Error::NotASolution(
            "reduce_support expects equalities only".into(),
        ));
    }
    if !system.satisfied_by(x.values()) {
        return Err(Error::NotASolution(format!("{:?}", x.values())));
    }
    let r = system.rows.len();
    let mut x = x.values().to_vec();
    loop {
        let supp = support(&x);
        if supp.len() <= r {
            return Ok(Solution(x));
        }
        let sub: Vec<Vec<Rational>> = system
            .rows
            .iter()
            .map(|row| supp.iter().map(|&j| row.coeffs[j].clone()).collect())
            .collect();
        let mut d = kernel_vector(&sub, supp.len()).ok_or_else(|| {
            Error::Internal("more support columns than rows but no kernel".into())
        })?;
        if !d.iter().any(Signed::is_positive) {
            d.iter_mut().for_each(|v| *v = -v.clone());
        }
        let step = supp
            .iter()
            .zip(&d)
            .filter(|(_, dj)| dj.is_positive())
            .map(|(&j, dj)| &x[j] / dj)
            .min()
            .expect("kernel vector has a positive entry");
        for (&j, dj) in supp.iter().zip(&d) {
            x[j] -= &step * dj;
            if x[j].is_negative() {
                return Err(Error::Internal(
                    "support walk left the non-negative orthant".into(),
                ));
            }
        }
    }
}

pub fn shrink_solution(system: &LinearSystem, x: &Solution) -> Result<Solution> {
    if !system.satisfied_by(x.values()) {
        return Err(Error::NotASolution(format!("{:?}", x.values())));
    }
    let start = vertex_on_support(system, &x.support())
        .ok_or_else(|| Error::Internal("restriction to the support lost feasibility".into()))?;

    let mut cols = support(&start);
    let mut current = start;
    // every row pinned as an equality at the current point
    let mut eqs: Vec<(Vec<Rational>, Rational)> = system
        .rows
        .iter()
        .map(|row| {
            (
                cols.iter().map(|&j| row.coeffs[j].clone()).collect(),
                row.lhs(&current),
            )
        })
        .collect();

    loop {
        let (e, v) = (eqs.len(), cols.len());
        if e == v {
            let a: Vec<Vec<Rational>> = eqs.iter().map(|(c, _)| c.clone()).collect();
            let b: Vec<Rational> = eqs.iter().map(|(_, r)| r.clone()).collect();
            if let Some(sol) = solve_square(&a, &b) {
                let mut out = vec![Rational::zero(); system.var_count];
                for (&j, val) in cols.iter().zip(sol) {
                    out[j] = val;
                }
                current = out;
                break;
            }
        } else if e < v {
            let mut sub = LinearSystem::new(v);
            for (c, r) in &eqs {
                sub.push(c.clone(), Relation::Eq, r.clone());
            }
            let local = Solution(cols.iter().map(|&j| current[j].clone()).collect());
            let reduced = reduce_support(&sub, &local)?;
            let keep: Vec<usize> = (0..v).filter(|&k| reduced.0[k].is_positive()).collect();
            let mut next = vec![Rational::zero(); system.var_count];
            for &k in &keep {
                next[cols[k]] = reduced.0[k].clone();
            }
            current = next;
            cols = keep.iter().map(|&k| cols[k]).collect();
            eqs = eqs
                .into_iter()
                .map(|(c, r)| (keep.iter().map(|&k| c[k].clone()).collect(), r))
                .collect();
            continue;
        }
        let coeffs: Vec<Vec<Rational>> = eqs.iter().map(|(c, _)| c.clone()).collect();
        let keep = independent_rows(&coeffs);
        if keep.len() == eqs.len() {
            return Err(Error::Internal(
                "square system is singular but its rows are independent".into(),
            ));
        }
        eqs = keep.into_iter().map(|i| eqs[i].clone()).collect();
    }

    let result = Solution(current);
    if !system.satisfied_by(result.values()) {
        return Err(Error::Internal(
            "shrunk vector no longer solves the system".into(),
        ));
    }
    let orig = x.support();
    if result.support().iter().any(|j| !orig.contains(j))
        || result.support().len() > system.rows.len()
    {
        return Err(Error::Internal(
            "shrunk vector violates the support conditions".into(),
        ));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrat::tests::sys;
    use crate::rational::{int, ratio};

    #[test]
    fn reduce_to_one_entry() {
        let s = sys(3, &[(&[int(1), int(1), int(1)], Relation::Eq, int(1))]);
        let x = Solution(vec![ratio(1, 3), ratio(1, 3), ratio(1, 3)]);
        let y = reduce_support(&s, &x).unwrap();
        assert_eq!(y.support().len(), 1);
        assert!(s.satisfied_by(y.values()));
    }

    #[test]
    fn reduce_is_identity_when_small() {
        let s = sys(
            2,
            &[
                (&[int(1), int(1)], Relation::Eq, int(1)),
                (&[int(1), int(-1)], Relation::Eq, int(0)),
            ],
        );
        let x = Solution(vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(reduce_support(&s, &x).unwrap(), x);
        let z = sys(2, &[(&[int(1), int(-1)], Relation::Eq, int(0))]);
        let zero = Solution(vec![int(0), int(0)]);
        assert_eq!(reduce_support(&z, &zero).unwrap(), zero);
    }

    #[test]
    fn reduce_rejects_non_solutions() {
        let s = sys(2, &[(&[int(1), int(1)], Relation::Eq, int(1))]);
        assert!(reduce_support(&s, &Solution(vec![int(1), int(1)])).is_err());
        let t = sys(2, &[(&[int(1), int(1)], Relation::Le, int(1))]);
        assert!(reduce_support(&t, &Solution(vec![int(0), int(0)])).is_err());
    }

    #[test]
    fn bound_expression() {
        let b = SizeBound {
            rows: 2,
            coef_size: 2,
        };
        assert!((b.as_f64() - 14.0).abs() < 1e-12);
    }

    #[test]
    fn square_nonsingular_is_fixed() {
        let s = sys(
            2,
            &[
                (&[int(2), int(1)], Relation::Eq, int(3)),
                (&[int(1), int(3)], Relation::Eq, int(5)),
            ],
        );
        let x = Solution(vec![ratio(4, 5), ratio(7, 5)]);
        assert_eq!(shrink_solution(&s, &x).unwrap(), x);
    }

    #[test]
    fn mixed_rows() {
        let s = sys(
            2,
            &[
                (&[int(1), int(1)], Relation::Eq, int(1)),
                (&[int(1), int(0)], Relation::Ge, ratio(1, 4)),
            ],
        );
        let (si, l) = integerize(&s);
        assert_eq!(l, 3);
        let x = Solution(vec![ratio(1, 2), ratio(1, 2)]);
        let y = shrink_solution(&si, &x).unwrap();
        assert!(s.satisfied_by(y.values()));
        assert!(y.support().len() <= 2);
        let bound = SizeBound::for_system(&si);
        assert!(y.values().iter().all(|v| bound.admits(v)));
        // with the unscaled system the same vector is produced
        assert_eq!(shrink_solution(&s, &x).unwrap(), y);
    }

    #[test]
    fn strict_rows_stay_strict() {
        let s = sys(
            3,
            &[
                (&[int(1), int(1), int(1)], Relation::Eq, int(1)),
                (&[int(1), int(0), int(0)], Relation::Lt, ratio(1, 3)),
            ],
        );
        let x = Solution(vec![ratio(1, 10), ratio(1, 10), ratio(8, 10)]);
        let y = shrink_solution(&s, &x).unwrap();
        assert!(s.satisfied_by(y.values()));
        assert!(y.support().len() <= 2);
    }

    #[test]
    fn rejects_non_solution() {
        let s = sys(1, &[(&[int(1)], Relation::Lt, int(1))]);
        assert!(matches!(
            shrink_solution(&s, &Solution(vec![int(1)])),
            Err(Error::NotASolution(_))
        ));
    }
}
