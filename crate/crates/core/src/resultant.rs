//! Sylvester resultants and fraction-free determinants.

use crate::error::PolyError;
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Determinant of a square matrix of polynomials by Bareiss elimination.
/// Every intermediate division is exact.
pub fn bareiss_det<C: Scalar>(mut a: Vec<Vec<MultiPoly<C>>>) -> MultiPoly<C> {
    let n = a.len();
    assert!(n > 0 && a.iter().all(|r| r.len() == n), "square matrix expected");
    let mut sign_flip = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return a[0][0].zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step is exact");
            }
            a[i][k] = a[i][k].zero_like();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

/// Sylvester matrix of `f` and `g` in variable `i`: `deg g` shifted rows of
/// `f` coefficients (highest power first) followed by `deg f` rows of `g`.
pub fn sylvester_matrix<C: Scalar>(f: &MultiPoly<C>, g: &MultiPoly<C>, i: usize) -> Vec<Vec<MultiPoly<C>>> {
    let fc = f.coeffs_in(i);
    let gc = g.coeffs_in(i);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    let size = m + n;
    let zero = f.zero_like();
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in fc.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in gc.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of `f` and `g` with respect to variable `i`, as the
/// determinant of [`sylvester_matrix`].
pub fn resultant<C: Scalar>(f: &MultiPoly<C>, g: &MultiPoly<C>, i: usize) -> Result<MultiPoly<C>, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::Domain("resultant of a zero polynomial".into()));
    }
    f.checked_add(g)?;
    if f.degree_in(i) == 0 || g.degree_in(i) == 0 {
        return Err(PolyError::Domain(
            "resultant needs positive degree in the variable".into(),
        ));
    }
    Ok(bareiss_det(sylvester_matrix(f, g, i)))
}

pub fn resultant_named<C: Scalar>(f: &MultiPoly<C>, g: &MultiPoly<C>, var: &str) -> Result<MultiPoly<C>, PolyError> {
    let i = f
        .vars()
        .index(var)
        .ok_or_else(|| PolyError::Domain(format!("unknown variable {var}")))?;
    resultant(f, g, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Vars;
    use crate::Rational;

    #[test]
    fn linear_resultant() {
        let v = Vars::new(&["x", "y", "z"]);
        let g = MultiPoly::<Rational>::gens(&v, &());
        let r = resultant(&(&g[2] - &g[0]), &(&g[2] - &g[1]), 2).unwrap();
        assert_eq!(r, &g[0] - &g[1]);
    }

    #[test]
    fn sign_convention() {
        // det [[1,0,-x],[1,0,0],[0,1,0]] = -x with f rows first
        let v = Vars::new(&["x", "z"]);
        let g = MultiPoly::<Rational>::gens(&v, &());
        let f = &(&g[1] * &g[1]) - &g[0];
        assert_eq!(resultant(&f, &g[1], 1).unwrap(), -&g[0]);
        assert!(resultant(&f, &f.zero_like(), 1).is_err());
    }

    #[test]
    fn determinant_needing_pivot() {
        let v = Vars::new(&["x"]);
        let x = MultiPoly::<Rational>::var(&v, &(), 0);
        let o = x.one_like();
        let z = x.zero_like();
        // [[0,1],[x,0]] has determinant -x
        let det = bareiss_det(vec![vec![z.clone(), o.clone()], vec![x.clone(), z.clone()]]);
        assert_eq!(det, -&x);
    }
}
