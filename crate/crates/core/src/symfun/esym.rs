//! Elementary symmetric polynomials in u0..u4 and the polynomial ring in
//! e1..e5.

use std::sync::OnceLock;

use crate::monomial::{Exp, Monomial, Vars};
use crate::QPoly;

pub fn u_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| Vars::indexed("u", 5)).clone()
}

pub fn e_vars() -> Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| Vars::new(&["e1", "e2", "e3", "e4", "e5"])).clone()
}

pub fn u_gens() -> Vec<QPoly> {
    QPoly::gens(&u_vars(), &())
}

/// `e_k` of the given linear forms.
pub fn elementary(xs: &[QPoly], k: usize) -> QPoly {
    // e_k via the generating product  prod (1 + x_i T)
    let one = xs[0].one_like();
    let mut es = vec![one];
    for x in xs {
        let mut next = es.clone();
        next.push(x.zero_like());
        for j in 1..next.len() {
            next[j] = &next[j] + &(&es[j - 1] * x);
        }
        es = next;
    }
    es.get(k).cloned().unwrap_or_else(|| xs[0].zero_like())
}

/// Elementary symmetric polynomials in u0..u4 and their partial versions
/// omitting one variable.
#[derive(Clone, Debug)]
pub struct ESymTable {
    /// `e[k]` for k = 0..=5
    pub e: Vec<QPoly>,
    /// `partial[i][k]` is e_k of the four variables other than u_i, k = 0..=4
    pub partial: Vec<Vec<QPoly>>,
}

impl ESymTable {
    pub fn new() -> Self {
        let u = u_gens();
        let e = (0..=5).map(|k| elementary(&u, k)).collect();
        let partial = (0..5)
            .map(|i| {
                let rest: Vec<QPoly> = (0..5).filter(|&j| j != i).map(|j| u[j].clone()).collect();
                (0..=4).map(|k| elementary(&rest, k)).collect()
            })
            .collect();
        ESymTable { e, partial }
    }

    pub fn e(&self, k: usize) -> &QPoly {
        &self.e[k]
    }

    pub fn ei(&self, k: usize, i: usize) -> &QPoly {
        &self.partial[i][k]
    }

    /// The five images `e_k(u)` used to rewrite e-polynomials in u.
    pub fn images(&self) -> Vec<QPoly> {
        self.e[1..].to_vec()
    }
}

impl Default for ESymTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Rewrites a polynomial in e1..e5 as a polynomial in u0..u4.
pub fn e_to_u(p: &QPoly, table: &ESymTable) -> QPoly {
    p.compose(&table.images()).expect("same ring")
}

/// `p(1/u0, ..., 1/u4) * (u0 u1 u2 u3 u4)^k`, defined when no exponent of
/// `p` exceeds `k`.
pub fn reciprocal(p: &QPoly, k: Exp) -> Option<QPoly> {
    let mut terms = Vec::with_capacity(p.nterms());
    for (m, c) in p.terms() {
        let mut e = Vec::with_capacity(m.nvars());
        for &a in m.exps() {
            e.push(k.checked_sub(a)?);
        }
        terms.push((Monomial::from_exps(&e), c.clone()));
    }
    Some(QPoly::from_terms(p.vars(), p.domain(), terms))
}

/// The involution on the e-ring: `p(e_k -> e_{5-k}/e5, e5 -> 1/e5) * e5^k`,
/// defined when every term has at most `k` factors.
pub fn reciprocal_e(p: &QPoly, k: u32) -> Option<QPoly> {
    let mut terms = Vec::with_capacity(p.nterms());
    for (m, c) in p.terms() {
        let a = m.exps();
        let count: u32 = m.degree();
        let rest = k.checked_sub(count)? as Exp;
        // e_j (j = 1..4) becomes e_{5-j}
        let e = [a[3], a[2], a[1], a[0], rest];
        terms.push((Monomial::from_exps(&e), c.clone()));
    }
    Some(QPoly::from_terms(p.vars(), p.domain(), terms))
}

/// `e_k(i)` written with `u_i = t` and the full e's: Σ_j (-t)^j e_{k-j}.
pub fn partial_e_in_t(k: usize, t: &QPoly, e: &[QPoly]) -> QPoly {
    let mut acc = t.zero_like();
    let mut tp = t.one_like();
    for j in 0..=k {
        let term = &tp * &e[k - j];
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        tp = &tp * t;
    }
    acc
}

/// e_k as a polynomial in the e-ring (with e0 = 1).
pub fn e_symbol(k: usize) -> QPoly {
    let v = e_vars();
    if k == 0 {
        QPoly::from_i64(&v, &(), 1)
    } else if k <= 5 {
        QPoly::var(&v, &(), k - 1)
    } else {
        QPoly::zero(&v, &())
    }
}

pub fn e_symbols() -> Vec<QPoly> {
    (0..=5).map(e_symbol).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_relation() {
        let t = ESymTable::new();
        let u = u_gens();
        for i in 0..5 {
            for k in 1..=5 {
                let lhs = t.e(k);
                let ek_i = if k <= 4 { t.ei(k, i).clone() } else { lhs.zero_like() };
                let rhs = &ek_i + &(&u[i] * t.ei(k - 1, i));
                assert_eq!(lhs, &rhs, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn reciprocal_of_e2_is_e3() {
        let t = ESymTable::new();
        assert_eq!(reciprocal(t.e(2), 1).unwrap(), *t.e(3));
        assert!(reciprocal(t.e(2), 0).is_none());
    }

    #[test]
    fn e_involution_matches_u_involution() {
        let t = ESymTable::new();
        // e2 * e4 in e-coordinates, reciprocal with two factors
        let p = &e_symbol(2) * &e_symbol(4);
        let r = reciprocal_e(&p, 2).unwrap();
        assert_eq!(r, &e_symbol(3) * &e_symbol(1));
        let pu = e_to_u(&p, &t);
        assert_eq!(reciprocal(&pu, 2).unwrap(), e_to_u(&r, &t));
    }
}
