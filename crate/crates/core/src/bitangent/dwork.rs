//! Recovering the fifth powers c_i^5 of a rational curve
//! t -> [c_i Π_j (t - r_ij)] lying on some member of the Dwork pencil.
//!
//! The curve lies on Σ x_i^5 - 5ψ Π x_i = 0 for some ψ exactly when
//! Σ_i c_i^5 Π_j (t - r_ij)^5 is proportional to Π_{i,j} (t - r_ij); so it
//! vanishes at every root, which is a linear system in the c_i^5.

use crate::bitangent::BitangentError;
use crate::linalg::{mat_vec, nullspace};
use crate::scalar::Scalar;
use crate::Fp;

/// Rows indexed by the roots r (coordinate-major), columns by i:
/// Π_j (r - r_ij)^5.
pub fn dwork_matrix<C: Scalar>(roots: &[Vec<C>]) -> Vec<Vec<C>> {
    let all: Vec<&C> = roots.iter().flatten().collect();
    all.iter()
        .map(|&r| {
            roots
                .iter()
                .map(|row| {
                    row.iter()
                        .fold(C::one(), |acc, rij| acc * (r.clone() - rij.clone()).pow_u64(5))
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DworkSolution<C> {
    /// [c_0^5 : .. : c_4^5], first nonzero entry scaled to 1
    pub c5: Vec<C>,
    /// the system evaluated at `c5`
    pub residuals: Vec<C>,
}

impl<C: Scalar> DworkSolution<C> {
    pub fn certified(&self) -> bool {
        self.residuals.iter().all(|r| r.is_zero())
    }
}

/// `roots[i]` lists the roots of coordinate i; a curve of degree d has d
/// roots per coordinate.
pub fn dwork_cover_solve<C: Scalar>(roots: &[Vec<C>]) -> Result<DworkSolution<C>, BitangentError> {
    if roots.len() != 5 {
        return Err(BitangentError::BadRoots(format!("{} coordinates", roots.len())));
    }
    let d = roots[0].len();
    if d == 0 || roots.iter().any(|r| r.len() != d) {
        return Err(BitangentError::BadRoots("rows of unequal or zero length".into()));
    }
    let domain = roots[0][0].domain();
    let a = dwork_matrix(roots);
    let ker = nullspace(&a, 5, &domain);
    match ker.len() {
        0 => Err(BitangentError::EmptyKernel),
        1 => {
            let mut v = ker.into_iter().next().expect("one vector");
            let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero").inv().expect("unit");
            for x in v.iter_mut() {
                *x *= &lead;
            }
            let residuals = mat_vec(&a, &v);
            Ok(DworkSolution { c5: v, residuals })
        }
        k => Err(BitangentError::FatKernel(k)),
    }
}

/// Number of points [c] of P^4 over F_p with [c_i^5] = [c5], c_0 = 1
/// normalizing the scale; 625 when 5 | p - 1 and every ratio is a fifth
/// power.
pub fn projective_lift_count(c5: &[Fp]) -> usize {
    let w0 = c5[0].inv().expect("nonzero first coordinate");
    c5[1..].iter().map(|w| (*w * w0).roots(5).len()).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_rows_give_fat_kernel() {
        let p = 101;
        let f = |v: i64| Fp::new(v, p);
        // every coordinate has the same root: all rows vanish
        let roots = vec![vec![f(3)]; 5];
        assert_eq!(dwork_cover_solve(&roots), Err(BitangentError::FatKernel(5)));
    }

    #[test]
    fn shape_errors() {
        let roots = vec![vec![Fp::new(1, 7)]; 4];
        assert!(matches!(dwork_cover_solve(&roots), Err(BitangentError::BadRoots(_))));
    }

    #[test]
    fn lift_count_is_625() {
        let p = 11;
        let w: Vec<Fp> = [1, 1, 10, 1, 10].iter().map(|&v| Fp::new(v, p)).collect();
        assert_eq!(projective_lift_count(&w), 625);
    }
}
