//! Dense linear algebra over a scalar field.

use crate::scalar::Scalar;

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns.
pub fn rref<C: Scalar>(m: &mut [Vec<C>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f.mul_ref(y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<C: Scalar>(m: &[Vec<C>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// A basis of `{v : m v = 0}`; `ncols` is needed when `m` has no rows.
pub fn nullspace<C: Scalar>(m: &[Vec<C>], ncols: usize, domain: &C::Domain) -> Vec<Vec<C>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![C::from_i64_in(domain, 0); ncols];
            v[f] = C::from_i64_in(domain, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// `m v`.
pub fn mat_vec<C: Scalar>(m: &[Vec<C>], v: &[C]) -> Vec<C> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(C::zero(), |acc, (a, b)| acc + a.mul_ref(b)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};
    use num_traits::Zero;

    #[test]
    fn nullspace_of_rank_two() {
        let r = |v: i64| Rational::from(v);
        let m = vec![vec![r(1), r(2), r(3)], vec![r(2), r(4), r(6)], vec![r(0), r(1), r(1)]];
        assert_eq!(rank(&m), 2);
        let ns = nullspace(&m, 3, &());
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&m, &ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn full_rank_over_fp() {
        let f = |v: i64| Fp::new(v, 101);
        let m = vec![vec![f(1), f(2)], vec![f(3), f(4)]];
        assert!(nullspace(&m, 2, &101).is_empty());
    }
}
