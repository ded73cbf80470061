//! S_mn tables: Σ_i M_i u_i^m l_i^n = δ S_mn for a frame point R = [l_i].

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use serde_json::{Map, Value};

use crate::error::NotDivisible;
use crate::json::poly_to_value;
use crate::rational::binomial;
use crate::symfun::esym::{e_symbols, e_to_u, u_gens};
use crate::symfun::kernel::kernel;
use crate::symfun::root::{smn_by_residues, RootElem};
use crate::{QPoly, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum FrameKind {
    /// l_i = S80 u_i^5 - S90 u_i^4
    Option1,
    /// l_i = e2(i) Π_{j≠i} n_j
    Option2,
    Explicit,
}

/// S_{m,0} in e1..e5 by the Newton-type recurrence
/// S_m = e1 S_{m-1} - e2 S_{m-2} + e3 S_{m-3} - e4 S_{m-4} + e5 S_{m-5},
/// seeded by S_0..S_4 = 0, 0, e2, e3, 0.
pub fn newton_s(m: usize) -> QPoly {
    static MEMO: OnceLock<Mutex<Vec<QPoly>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| {
        let e = e_symbols();
        let z = e[1].zero_like();
        Mutex::new(vec![z.clone(), z.clone(), e[2].clone(), e[3].clone(), z])
    });
    let mut s = memo.lock().expect("newton memo");
    let e = e_symbols();
    while s.len() <= m {
        let k = s.len();
        let mut acc = e[1].zero_like();
        for j in 1..=5 {
            let t = &e[j] * &s[k - j];
            acc = if j % 2 == 1 { &acc + &t } else { &acc - &t };
        }
        s.push(acc);
    }
    s[m].clone()
}

/// Option-1 S_mn by the binomial lift
/// S_mn = Σ_k C(n,k) S80^k (-S90)^(n-k) S_{m+4n+k,0}.
pub fn smn_option1(m: usize, n: usize) -> QPoly {
    let s80 = newton_s(8);
    let ms90 = -newton_s(9);
    let mut acc = s80.zero_like();
    for k in 0..=n {
        let c = Rational::from(binomial(n as u64, k as u64));
        let t = &(&s80.pow(k as u32) * &ms90.pow((n - k) as u32)) * &newton_s(m + 4 * n + k);
        acc = &acc + &t.scale(&c);
    }
    acc
}

/// The Option-1 frame coordinate as a root element: S80 t^5 - S90 t^4.
pub fn option1_root() -> RootElem {
    let z = e_symbols()[1].zero_like();
    RootElem::from_coeffs(&[z.clone(), z.clone(), z.clone(), z, -newton_s(9), newton_s(8)])
}

/// Option-1 frame coordinates l_i in u0..u4.
pub fn option1_l() -> Vec<QPoly> {
    let k = kernel();
    let s80 = e_to_u(&newton_s(8), &k.esym);
    let s90 = e_to_u(&newton_s(9), &k.esym);
    u_gens()
        .iter()
        .map(|u| &(&s80 * &u.pow(5)) - &(&s90 * &u.pow(4)))
        .collect()
}

/// Exact quotient of Σ M_i u_i^m l_i^n by δ over u0..u4.
pub fn smn_from_frame(m: u32, n: u32, l: &[QPoly]) -> Result<QPoly, NotDivisible<Rational>> {
    let k = kernel();
    if n > 0 && l.iter().all(|x| x.is_zero()) {
        return Ok(k.delta.zero_like());
    }
    k.div_delta(&k.moment(m, l, n))
}

/// Option-1 S_mn through residues of the generic root; independent of the
/// binomial lift.
pub fn smn_option1_by_residues(m: u32, n: u32) -> QPoly {
    smn_by_residues(m, n, &option1_root())
}

#[derive(Debug, Clone)]
pub struct SmnTable {
    pub frame: FrameKind,
    /// polynomials in e1..e5 (frames from this module) or in whatever ring
    /// the explicit frame used
    pub entries: BTreeMap<(u32, u32), QPoly>,
}

impl SmnTable {
    pub fn new(frame: FrameKind) -> Self {
        SmnTable {
            frame,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, m: u32, n: u32) -> Option<&QPoly> {
        self.entries.get(&(m, n))
    }

    /// S_mn, panicking if absent.
    pub fn s(&self, m: u32, n: u32) -> &QPoly {
        self.entries
            .get(&(m, n))
            .unwrap_or_else(|| panic!("S_{m}{n} missing from table"))
    }

    pub fn insert(&mut self, m: u32, n: u32, p: QPoly) {
        self.entries.insert((m, n), p);
    }

    /// JSON object keyed `S_m_n`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for ((m, n), p) in &self.entries {
            map.insert(format!("S_{m}_{n}"), poly_to_value(p));
        }
        Value::Object(map)
    }
}

/// The Option-1 table for m + n ≤ `max_total`, by the binomial lift.
pub fn option1_table(max_total: u32) -> SmnTable {
    let mut t = SmnTable::new(FrameKind::Option1);
    for n in 0..=max_total {
        for m in 0..=max_total - n {
            t.insert(m, n, smn_option1(m as usize, n as usize));
        }
    }
    t
}

/// Weighted degree of an e-polynomial (e_k has weight k), i.e. its degree
/// as a polynomial in u; `None` if not weighted-homogeneous.
pub fn weighted_degree(p: &QPoly) -> Option<u32> {
    let mut deg = None;
    for (m, _) in p.terms() {
        let w: u32 = m
            .exps()
            .iter()
            .enumerate()
            .map(|(i, &a)| (i as u32 + 1) * a as u32)
            .sum();
        match deg {
            None => deg = Some(w),
            Some(d) if d != w => return None,
            _ => {}
        }
    }
    deg.or(Some(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::esym::e_symbol;

    #[test]
    fn newton_seed_and_six() {
        assert_eq!(newton_s(2), e_symbol(2));
        assert_eq!(newton_s(3), e_symbol(3));
        assert!(newton_s(4).is_zero() && newton_s(5).is_zero());
        assert_eq!(newton_s(6), &e_symbol(3).square() - &(&e_symbol(2) * &e_symbol(4)));
    }

    #[test]
    fn lift_collapses_and_vanishes() {
        for m in 0..=10 {
            assert_eq!(smn_option1(m, 0), newton_s(m));
        }
        assert!(smn_option1(4, 1).is_zero());
        assert!(smn_option1(0, 1).is_zero());
        assert_eq!(smn_option1(1, 1), &newton_s(8) * &newton_s(6));
    }

    #[test]
    fn two_routes_agree() {
        for n in 0..=2u32 {
            for m in 0..=(5 - n) {
                assert_eq!(
                    smn_option1(m as usize, n as usize),
                    smn_option1_by_residues(m, n),
                    "S_{m}{n}"
                );
            }
        }
    }

    #[test]
    fn degenerate_frame() {
        let z = vec![kernel().delta.zero_like(); 5];
        assert!(smn_from_frame(0, 1, &z).unwrap().is_zero());
    }
}
