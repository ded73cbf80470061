//! The discriminant, partial discriminants, quartics n_i and the kernel
//! vector M_i = (-1)^i d_i n_i.

use std::sync::OnceLock;

use crate::error::NotDivisible;
use crate::poly::sum_polys;
use crate::report::Report;
use crate::symfun::esym::{u_gens, ESymTable};
use crate::{QPoly, Rational};

#[derive(Clone, Debug)]
pub struct BitangentKernel {
    pub esym: ESymTable,
    /// Π_{j>k} (u_j - u_k)
    pub delta: QPoly,
    /// the ten linear factors of `delta`
    pub delta_factors: Vec<QPoly>,
    pub d: Vec<QPoly>,
    pub n: Vec<QPoly>,
    pub m: Vec<QPoly>,
}

pub fn build_kernel() -> BitangentKernel {
    let esym = ESymTable::new();
    let u = u_gens();
    let mut delta_factors = Vec::new();
    for j in 0..5 {
        for k in 0..j {
            delta_factors.push(&u[j] - &u[k]);
        }
    }
    let delta = delta_factors.iter().fold(u[0].one_like(), |acc, f| &acc * f);
    let d: Vec<QPoly> = (0..5)
        .map(|i| {
            let mut acc = u[0].one_like();
            for j in 0..5 {
                for k in 0..j {
                    if j != i && k != i {
                        acc = &acc * &(&u[j] - &u[k]);
                    }
                }
            }
            acc
        })
        .collect();
    let n: Vec<QPoly> = (0..5)
        .map(|i| &esym.ei(2, i).square() - &(esym.ei(1, i) * esym.ei(3, i)))
        .collect();
    let m = (0..5)
        .map(|i| {
            let p = &d[i] * &n[i];
            if i % 2 == 1 {
                -p
            } else {
                p
            }
        })
        .collect();
    BitangentKernel {
        esym,
        delta,
        delta_factors,
        d,
        n,
        m,
    }
}

/// Process-wide kernel, built on first use.
pub fn kernel() -> &'static BitangentKernel {
    static K: OnceLock<BitangentKernel> = OnceLock::new();
    K.get_or_init(build_kernel)
}

impl BitangentKernel {
    /// Exact division by δ, one linear factor at a time.
    pub fn div_delta(&self, p: &QPoly) -> Result<QPoly, NotDivisible<Rational>> {
        let mut q = p.clone();
        for f in &self.delta_factors {
            q = q.div_exact(f)?;
        }
        Ok(q)
    }

    /// Σ_i M_i u_i^m l_i^n.
    pub fn moment(&self, m: u32, l: &[QPoly], n: u32) -> QPoly {
        let u = u_gens();
        let parts: Vec<QPoly> = (0..5)
            .map(|i| {
                let mut t = &self.m[i] * &u[i].pow(m);
                if n > 0 {
                    t = &t * &l[i].pow(n);
                }
                t
            })
            .collect();
        sum_polys(&self.delta.zero_like(), parts.iter())
    }

    /// Σ_i M_i u_i^m.
    pub fn power_moment(&self, m: u32) -> QPoly {
        self.moment(m, &[], 0)
    }

    pub fn e(&self, k: usize) -> &QPoly {
        self.esym.e(k)
    }
}

/// Σ M_i u_i^m = 0 for m in {0, 1, 4, 5}, with m = 2 as a control.
pub fn verify_vandermonde_kernel(k: &BitangentKernel) -> Report {
    let mut r = Report::new("vandermonde kernel");
    for m in [0u32, 1, 4, 5] {
        let s = k.power_moment(m);
        r.check(
            format!("sum M_i u_i^{m} = 0"),
            s.is_zero(),
            if s.is_zero() {
                String::new()
            } else {
                format!("residual {}", s.abbreviated(4))
            },
        );
    }
    let s2 = k.power_moment(2);
    let ok = !s2.is_zero() && k.div_delta(&s2).map(|q| q == *k.e(2)).unwrap_or(false);
    r.check("sum M_i u_i^2 = delta * e2 (control)", ok, "");
    let s3 = k.power_moment(3);
    let ok = k.div_delta(&s3).map(|q| q == *k.e(3)).unwrap_or(false);
    r.check("sum M_i u_i^3 = delta * e3 (control)", ok, "");
    r
}

/// The symbolic identities behind the base-locus description.
pub fn base_locus_identities(k: &BitangentKernel) -> Report {
    let mut r = Report::new("base locus identities");
    let u = u_gens();
    let e = |j| k.e(j);
    let n = &k.n;
    let zero = u[0].zero_like();
    let sum_n = sum_polys(&zero, n.iter());
    let rhs = &e(2).square().scale(&Rational::from(3)) - &(e(1) * e(3)).scale(&Rational::from(4));
    r.check("sum n_i = 3 e2^2 - 4 e1 e3", sum_n == rhs, "");
    let sum_un = sum_polys(&zero, (0..5).map(|i| &u[i] * &n[i]).collect::<Vec<_>>().iter());
    r.check("sum u_i n_i = e2 e3", sum_un == e(2) * e(3), "");
    let sum_uun = sum_polys(&zero, (0..5).map(|i| &u[i].square() * &n[i]).collect::<Vec<_>>().iter());
    let rhs = &e(3).square().scale(&Rational::from(3)) - &(e(4) * e(2)).scale(&Rational::from(4));
    r.check("sum u_i^2 n_i = 3 e3^2 - 4 e4 e2", sum_uun == rhs, "");
    let mut printed_ok = true;
    for i in 0..5 {
        for j in i + 1..5 {
            for l in j + 1..5 {
                let lhs = &(&(&n[i] * &(&u[j] - &u[l])) + &(&n[j] * &(&u[l] - &u[i]))) + &(&n[l] * &(&u[i] - &u[j]));
                let rhs = &(&(&(&u[j] - &u[l]) * &(&u[l] - &u[i])) * &(&u[i] - &u[j])) * e(2);
                printed_ok &= lhs == rhs;
                let diff = &lhs + &rhs;
                r.check(
                    format!("triple ({i},{j},{l})"),
                    diff.is_zero(),
                    if diff.is_zero() {
                        String::new()
                    } else {
                        diff.abbreviated(4)
                    },
                );
            }
        }
    }
    r.check(
        "triple identity with +e2 as printed",
        printed_ok,
        if printed_ok { "" } else { "holds only with -e2" },
    );
    if !printed_ok {
        r.note("n_i(u_j-u_k) + n_j(u_k-u_i) + n_k(u_i-u_j) = -(u_j-u_k)(u_k-u_i)(u_i-u_j) e2; the printed sign is +");
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_shapes() {
        let k = kernel();
        for i in 0..5 {
            assert!(k.m[i].is_homogeneous());
            assert_eq!(k.m[i].degree(), 10);
            assert_eq!(k.n[i].degree(), 4);
        }
        assert_eq!(k.delta.degree(), 10);
    }

    #[test]
    fn kernel_rows_vanish() {
        assert!(verify_vandermonde_kernel(kernel()).passed());
    }

    #[test]
    fn base_locus() {
        let r = base_locus_identities(kernel());
        for c in &r.items {
            assert_eq!(c.passed, !c.name.contains("as printed"), "{r}");
        }
    }
}
