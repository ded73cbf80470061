//! Arithmetic with a generic root t of f(t) = Π (t - u_i), i.e. in
//! Q[e1..e5][t] / (t^5 - e1 t^4 + e2 t^3 - e3 t^2 + e4 t - e5).
//!
//! A symmetric sum Σ_i h(u_i) / f'(u_i) equals the t^4 coefficient of the
//! reduced form of h. Since M_i / δ = n_i / f'(u_i), every S_mn is such a sum,
//! which gives a route to S tables that never leaves the e-ring.

use crate::resultant::bareiss_det;
use crate::symfun::esym::e_symbols;
use crate::QPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct RootElem {
    /// coefficients of t^0..t^4
    pub c: [QPoly; 5],
}

impl RootElem {
    pub fn from_coeffs(coeffs: &[QPoly]) -> Self {
        let e = e_symbols();
        let zero = e[1].zero_like();
        let mut c: Vec<QPoly> = coeffs.to_vec();
        // reduce t^k for k >= 5 using t^5 = e1 t^4 - e2 t^3 + e3 t^2 - e4 t + e5
        while c.len() > 5 {
            let top = c.pop().expect("nonempty");
            let k = c.len(); // the popped power
            if top.is_zero() {
                continue;
            }
            for j in 1..=5 {
                let t = &top * &e[j];
                let idx = k - j;
                c[idx] = if j % 2 == 1 { &c[idx] + &t } else { &c[idx] - &t };
            }
        }
        while c.len() < 5 {
            c.push(zero.clone());
        }
        RootElem {
            c: c.try_into().expect("five coefficients"),
        }
    }

    pub fn constant(p: QPoly) -> Self {
        Self::from_coeffs(&[p])
    }

    /// t^k, reduced.
    pub fn t_pow(k: usize) -> Self {
        let e = e_symbols();
        let mut c = vec![e[1].zero_like(); k + 1];
        c[k] = e[0].clone();
        Self::from_coeffs(&c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let zero = self.c[0].zero_like();
        let mut prod = vec![zero; 9];
        for i in 0..5 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..5 {
                if other.c[j].is_zero() {
                    continue;
                }
                prod[i + j] = &prod[i + j] + &(&self.c[i] * &other.c[j]);
            }
        }
        Self::from_coeffs(&prod)
    }

    pub fn add(&self, other: &Self) -> Self {
        let c: Vec<QPoly> = (0..5).map(|i| &self.c[i] + &other.c[i]).collect();
        Self::from_coeffs(&c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let c: Vec<QPoly> = (0..5).map(|i| &self.c[i] - &other.c[i]).collect();
        Self::from_coeffs(&c)
    }

    pub fn scale(&self, p: &QPoly) -> Self {
        let c: Vec<QPoly> = (0..5).map(|i| &self.c[i] * p).collect();
        Self::from_coeffs(&c)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(e_symbols()[0].clone());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Σ_i h(u_i) / f'(u_i) for the element h.
    pub fn residue_sum(&self) -> &QPoly {
        &self.c[4]
    }

    /// Matrix of multiplication by this element on the basis 1, t, .., t^4;
    /// column j is self * t^j.
    pub fn mult_matrix(&self) -> Vec<Vec<QPoly>> {
        let cols: Vec<RootElem> = (0..5).map(|j| self.mul(&RootElem::t_pow(j))).collect();
        (0..5).map(|i| (0..5).map(|j| cols[j].c[i].clone()).collect()).collect()
    }

    /// The norm Π_i h(u_i).
    pub fn norm(&self) -> QPoly {
        bareiss_det(self.mult_matrix())
    }

    /// The element g with g(u_i) = Π_{j≠i} h(u_j), so that h g = norm(h).
    pub fn adjugate(&self) -> RootElem {
        // g is the first column of adj(M): the cofactors C_{0,i}
        let m = self.mult_matrix();
        let mut coeffs = Vec::with_capacity(5);
        for i in 0..5 {
            let minor: Vec<Vec<QPoly>> = (0..5)
                .filter(|&r| r != 0)
                .map(|r| (0..5).filter(|&c| c != i).map(|c| m[r][c].clone()).collect())
                .collect();
            let det = bareiss_det(minor);
            coeffs.push(if i % 2 == 0 { det } else { -det });
        }
        RootElem::from_coeffs(&coeffs)
    }
}

/// e_k(i) with u_i replaced by the generic root.
pub fn partial_e_root(k: usize) -> RootElem {
    let e = e_symbols();
    // Σ_j (-t)^j e_{k-j}
    let mut c = vec![e[1].zero_like(); k + 1];
    for j in 0..=k {
        c[j] = if j % 2 == 0 { e[k - j].clone() } else { -&e[k - j] };
    }
    RootElem::from_coeffs(&c)
}

/// n(t) = e2(t)^2 - e1(t) e3(t), whose value at u_i is n_i.
pub fn n_root() -> RootElem {
    let e1 = partial_e_root(1);
    let e2 = partial_e_root(2);
    let e3 = partial_e_root(3);
    e2.mul(&e2).sub(&e1.mul(&e3))
}

/// Σ M_i u_i^m l_i^n / δ where `l` is the frame coordinate as a root element.
pub fn smn_by_residues(m: u32, n: u32, l: &RootElem) -> QPoly {
    let h = n_root().mul(&RootElem::t_pow(m as usize)).mul(&l.pow(n));
    h.residue_sum().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::esym::e_to_u;
    use crate::symfun::kernel::kernel;

    #[test]
    fn residue_route_matches_division_for_power_sums() {
        let k = kernel();
        let zero = RootElem::constant(e_symbols()[0].zero_like());
        for m in 0..8u32 {
            let via_root = smn_by_residues(m, 0, &zero);
            let via_div = k.div_delta(&k.power_moment(m)).unwrap();
            assert_eq!(e_to_u(&via_root, &k.esym), via_div, "m = {m}");
        }
    }

    #[test]
    fn norm_and_adjugate() {
        let k = kernel();
        let n = n_root();
        let norm = n.norm();
        let prod = k.n.iter().fold(k.delta.one_like(), |a, b| &a * b);
        assert_eq!(e_to_u(&norm, &k.esym), prod);
        let adj = n.adjugate();
        assert_eq!(n.mul(&adj), RootElem::constant(norm));
    }
}
