//! Dense two-phase simplex over exact rationals with Bland's rule.

use super::{LinearSystem, Relation};
use crate::rational::Rational;
use num_traits::{One, Signed, Zero};

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    /// Maximises `cost . x` over columns where `allowed` holds.
    fn maximize(&mut self, cost: &[Rational], allowed: &dyn Fn(usize) -> bool) -> Outcome {
        loop {
            let entering = (0..self.cols).find(|&j| {
                if !allowed(j) || self.basis.contains(&j) {
                    return false;
                }
                let mut d = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        d -= &cost[b] * &self.rows[i][j];
                    }
                }
                d.is_positive()
            });
            let Some(j) = entering else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((i, _)) => self.pivot(i, j),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn value(&self, col: usize) -> Rational {
        self.basis
            .iter()
            .position(|&b| b == col)
            .map_or_else(Rational::zero, |i| self.rhs[i].clone())
    }
}

/// A basic solution of `system` with every variable outside `support` fixed
/// at zero. With strict rows, the slack `e` of `a.z + e <= b` is maximised
/// over `[0, 1]` and the point is returned only when `e > 0`.
pub(super) fn vertex_on_support(system: &LinearSystem, support: &[usize]) -> Option<Vec<Rational>> {
    let n = support.len();
    let strict = system.has_strict();
    let eps = n; // column of the strict slack, when present
    let base_cols = n + usize::from(strict);

    // constraint rows over the restricted variables: (coeffs, rel, rhs)
    let mut cons: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for row in &system.rows {
        let mut c: Vec<Rational> = support.iter().map(|&j| row.coeffs[j].clone()).collect();
        let rel = if row.rel.is_strict() {
            c.push(Rational::one());
            Relation::Le
        } else {
            if strict {
                c.push(Rational::zero());
            }
            row.rel
        };
        cons.push((c, rel, row.rhs.clone()));
    }
    if strict {
        let mut cap = vec![Rational::zero(); base_cols];
        cap[eps] = Rational::one();
        cons.push((cap, Relation::Le, Rational::one()));
    }

    // slack columns, then artificial columns
    let m = cons.len();
    let slack_count = cons
        .iter()
        .filter(|(_, rel, _)| *rel != Relation::Eq)
        .count();
    let first_art = base_cols + slack_count;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_rows = Vec::new();
    let mut next_slack = base_cols;
    for (coeffs, rel, b) in &cons {
        let mut r = coeffs.clone();
        r.resize(first_art, Rational::zero());
        let mut slack_sign = None;
        match rel {
            Relation::Le => slack_sign = Some(Rational::one()),
            Relation::Ge => slack_sign = Some(-Rational::one()),
            _ => {}
        }
        let slack_col = slack_sign.map(|s| {
            r[next_slack] = s;
            next_slack += 1;
            next_slack - 1
        });
        let mut b = b.clone();
        if b.is_negative() {
            for v in r.iter_mut() {
                *v = -v.clone();
            }
            b = -b;
        }
        match slack_col {
            Some(c) if r[c].is_positive() => basis.push(c),
            _ => {
                basis.push(usize::MAX);
                art_rows.push(rows.len());
            }
        }
        rows.push(r);
        rhs.push(b);
    }
    let cols = first_art + art_rows.len();
    for r in rows.iter_mut() {
        r.resize(cols, Rational::zero());
    }
    for (k, &i) in art_rows.iter().enumerate() {
        rows[i][first_art + k] = Rational::one();
        basis[i] = first_art + k;
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis,
        cols,
    };

    // phase 1: drive artificials to zero
    if !art_rows.is_empty() {
        let cost: Vec<Rational> = (0..cols)
            .map(|j| {
                if j >= first_art {
                    -Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        t.maximize(&cost, &|_| true);
        if (first_art..cols).any(|j| !t.value(j).is_zero()) {
            return None;
        }
        // pivot remaining (zero-level) artificials out, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= first_art {
                match (0..first_art).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    if strict {
        let mut cost = vec![Rational::zero(); cols];
        cost[eps] = Rational::one();
        match t.maximize(&cost, &|j| j < first_art) {
            Outcome::Optimal => {}
            Outcome::Unbounded => unreachable!("e is capped at 1"),
        }
        if !t.value(eps).is_positive() {
            return None;
        }
    }

    let mut x = vec![Rational::zero(); system.var_count];
    for (k, &j) in support.iter().enumerate() {
        x[j] = t.value(k);
    }
    Some(x)
}
