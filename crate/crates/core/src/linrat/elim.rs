//! Exact Gaussian elimination helpers.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Indices of a maximal linearly independent subset of `rows`, keeping the
/// earliest row of every dependent group.
pub fn independent_rows(rows: &[Vec<Rational>]) -> Vec<usize> {
    let mut kept: Vec<Vec<Rational>> = Vec::new();
    let mut idx = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        kept.push(row.clone());
        if rank(&kept) == kept.len() {
            idx.push(i);
        } else {
            kept.pop();
        }
    }
    idx
}

/// A nonzero vector `d` with `m d = 0`, if the columns are dependent.
pub fn kernel_vector(m: &[Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, cols);
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut d = vec![Rational::zero(); cols];
    d[free] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        d[pc] = -a[r][free].clone();
    }
    Some(d)
}

/// Unique solution of a square system, or `None` when it is singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), n, "square system");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    if rref(&mut m, n).len() < n {
        return None;
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[1, 2], &[2, 5]])), 2);
        assert_eq!(rank(&m(&[&[0, 0]])), 0);
    }

    #[test]
    fn independent_subset() {
        assert_eq!(
            independent_rows(&m(&[&[0, 0], &[1, 1], &[2, 2], &[1, 0]])),
            vec![1, 3]
        );
    }

    #[test]
    fn kernel() {
        let a = m(&[&[1, 1, 1]]);
        let d = kernel_vector(&a, 3).unwrap();
        assert!(d.iter().any(|v| !v.is_zero()));
        let s: Rational = d.iter().sum();
        assert!(s.is_zero());
        assert!(kernel_vector(&m(&[&[1, 0], &[0, 1]]), 2).is_none());
    }

    #[test]
    fn square_solve() {
        let x = solve_square(&m(&[&[2, 1], &[1, 3]]), &[int(3), int(5)]).unwrap();
        assert_eq!(
            x,
            vec![crate::rational::ratio(4, 5), crate::rational::ratio(7, 5)]
        );
        assert!(solve_square(&m(&[&[1, 2], &[2, 4]]), &[int(1), int(2)]).is_none());
        assert_eq!(solve_square(&[], &[]), Some(vec![]));
    }
}
