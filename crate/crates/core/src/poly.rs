//! Sparse multivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::error::{NotDivisible, PolyError};
use crate::monomial::{Exp, Monomial, Vars};
use crate::scalar::Scalar;

/// A polynomial as a list of nonzero terms sorted in strictly descending
/// graded reverse lexicographic order.
#[derive(Clone)]
pub struct MultiPoly<C: Scalar> {
    vars: Vars,
    domain: C::Domain,
    terms: Vec<(Monomial, C)>,
}

impl<C: Scalar> PartialEq for MultiPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.vars.same(&other.vars) && C::join_domains(&self.domain, &other.domain).is_ok() && self.terms == other.terms
    }
}

impl<C: Scalar> Eq for MultiPoly<C> {}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(vars: &Vars, domain: &C::Domain) -> Self {
        MultiPoly {
            vars: vars.clone(),
            domain: domain.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: &Vars, domain: &C::Domain, c: C) -> Self {
        let mut p = Self::zero(vars, domain);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn from_i64(vars: &Vars, domain: &C::Domain, v: i64) -> Self {
        Self::constant(vars, domain, C::from_i64_in(domain, v))
    }

    pub fn var(vars: &Vars, domain: &C::Domain, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        Self::term(vars, domain, Monomial::var(vars.len(), i, 1), C::from_i64_in(domain, 1))
    }

    pub fn var_named(vars: &Vars, domain: &C::Domain, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .index(name)
            .ok_or_else(|| PolyError::Domain(format!("unknown variable {name}")))?;
        Ok(Self::var(vars, domain, i))
    }

    /// All variables of `vars` as degree-one polynomials.
    pub fn gens(vars: &Vars, domain: &C::Domain) -> Vec<Self> {
        (0..vars.len()).map(|i| Self::var(vars, domain, i)).collect()
    }

    pub fn term(vars: &Vars, domain: &C::Domain, m: Monomial, c: C) -> Self {
        assert_eq!(m.nvars(), vars.len());
        let mut p = Self::zero(vars, domain);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted, zero)
    /// terms.
    pub fn from_terms(vars: &Vars, domain: &C::Domain, terms: Vec<(Monomial, C)>) -> Self {
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len());
            accumulate(&mut acc, m, &c);
        }
        Self::from_map(vars, domain, acc)
    }

    fn from_map(vars: &Vars, domain: &C::Domain, acc: FxHashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly {
            vars: vars.clone(),
            domain: domain.clone(),
            terms,
        }
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted(vars: &Vars, domain: &C::Domain, terms: Vec<(Monomial, C)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MultiPoly {
            vars: vars.clone(),
            domain: domain.clone(),
            terms,
        }
    }

    pub fn zero_like(&self) -> Self {
        Self::zero(&self.vars, &self.domain)
    }

    pub fn one_like(&self) -> Self {
        Self::from_i64(&self.vars, &self.domain, 1)
    }

    pub fn from_i64_like(&self, v: i64) -> Self {
        Self::from_i64(&self.vars, &self.domain, v)
    }

    pub fn constant_like(&self, c: C) -> Self {
        Self::constant(&self.vars, &self.domain, c)
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn domain(&self) -> &C::Domain {
        &self.domain
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant term.
    pub fn constant_term(&self) -> C {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => C::from_i64_in(&self.domain, 0),
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn min_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).min().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(i) as u32).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.first().map_or(true, |(m0, _)| {
            self.terms.iter().all(|(m, _)| m.degree() == m0.degree())
        })
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => C::from_i64_in(&self.domain, 0),
        }
    }

    pub fn coefficient_of(&self, exps: &[Exp]) -> C {
        self.coefficient(&Monomial::from_exps(exps))
    }

    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .collect()
    }

    fn check(&self, other: &Self) -> Result<C::Domain, PolyError> {
        if !self.vars.same(&other.vars) {
            return Err(PolyError::Domain(format!(
                "variable lists differ: {:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        C::join_domains(&self.domain, &other.domain).map_err(|e| PolyError::Domain(e.to_string()))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        let d = self.check(other)?;
        Ok(self.merge(other, &d, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let d = self.check(other)?;
        Ok(self.merge(other, &d, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let d = self.check(other)?;
        Ok(self.mul_impl(other, &d))
    }

    fn merge(&self, other: &Self, d: &C::Domain, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    if negate {
                        c -= &b[j].1;
                    } else {
                        c += &b[j].1;
                    }
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Self::from_sorted(&self.vars, d, out)
    }

    fn mul_impl(&self, other: &Self, d: &C::Domain) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.vars, d);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term_in(m, c, d);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term_in(m, c, d);
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        acc.reserve(big.terms.len() * 2);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                accumulate(&mut acc, m, &c);
            }
        }
        Self::from_map(&self.vars, d, acc)
    }

    fn mul_term_in(&self, m: &Monomial, c: &C, d: &C::Domain) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars, d);
        }
        // a monomial order is compatible with multiplication, so the order
        // is preserved
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, a)| {
                let v = a.mul_ref(c);
                (!v.is_zero()).then(|| (t.mul(m), v))
            })
            .collect();
        Self::from_sorted(&self.vars, d, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        let d = C::join_domains(&self.domain, &c.domain()).expect("coefficient domain");
        self.mul_term_in(m, c, &d)
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(self.vars.len()), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Divides every coefficient by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.vars.len(), "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                (m.with_exp(i, e - 1), c.mul_ref(&C::from_i64_in(&self.domain, e as i64)))
            })
            .collect();
        Self::from_terms(&self.vars, &self.domain, terms)
    }

    pub fn partial_named(&self, name: &str) -> Result<Self, PolyError> {
        let i = self
            .vars
            .index(name)
            .ok_or_else(|| PolyError::Domain(format!("unknown variable {name}")))?;
        Ok(self.partial(i))
    }

    /// Value at a point given for every variable.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.vars.len());
        let pows: Vec<Vec<C>> = (0..self.vars.len())
            .map(|i| power_table(&point[i], self.degree_in(i) as usize, &self.domain))
            .collect();
        let mut acc = C::from_i64_in(&self.domain, 0);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= &pows[i][e as usize];
                }
            }
            acc += &t;
        }
        acc
    }

    /// Sets variable `i` to a constant, keeping the variable list.
    pub fn specialize(&self, i: usize, value: &C) -> Self {
        let pows = power_table(value, self.degree_in(i) as usize, &self.domain);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exp(i, 0), c.mul_ref(&pows[m.exp(i) as usize])))
            .collect();
        Self::from_terms(&self.vars, &self.domain, terms)
    }

    /// Replaces every variable `i` with `images[i]`; all images share one
    /// target ring.
    pub fn compose(&self, images: &[MultiPoly<C>]) -> Result<Self, PolyError> {
        assert_eq!(images.len(), self.vars.len());
        let first = images.first().ok_or_else(|| PolyError::Domain("no images".into()))?;
        let mut d = C::join_domains(&first.domain, &self.domain).map_err(|e| PolyError::Domain(e.to_string()))?;
        for im in images {
            if !im.vars.same(&first.vars) {
                return Err(PolyError::Domain("images live in different rings".into()));
            }
            d = C::join_domains(&d, &im.domain).map_err(|e| PolyError::Domain(e.to_string()))?;
        }
        let target = first.vars.clone();
        let mut cache: Vec<Vec<MultiPoly<C>>> = images
            .iter()
            .map(|im| vec![MultiPoly::from_i64(&target, &d, 1), im.clone()])
            .collect();
        let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, &d, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = &cache[i][cache[i].len() - 1] * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            for (mm, cc) in t.terms {
                accumulate(&mut acc, mm, &cc);
            }
        }
        Ok(Self::from_map(&target, &d, acc))
    }

    /// Substitutes named variables. Unbound variables are carried over by
    /// name into the images' ring, which must contain them.
    pub fn substitute(&self, bindings: &[(&str, MultiPoly<C>)]) -> Result<Self, PolyError> {
        let target = match bindings.first() {
            Some((_, p)) => p.vars.clone(),
            None => return Ok(self.clone()),
        };
        let d = bindings[0].1.domain.clone();
        let mut images: Vec<Option<MultiPoly<C>>> = vec![None; self.vars.len()];
        for (name, p) in bindings {
            let i = self
                .vars
                .index(name)
                .ok_or_else(|| PolyError::Domain(format!("unknown variable {name}")))?;
            if !p.vars.same(&target) {
                return Err(PolyError::Domain("inconsistent target rings".into()));
            }
            images[i] = Some(p.clone());
        }
        let mut full = Vec::with_capacity(images.len());
        for (i, im) in images.into_iter().enumerate() {
            match im {
                Some(p) => full.push(p),
                None => {
                    if self.degree_in(i) == 0 {
                        full.push(MultiPoly::zero(&target, &d));
                    } else {
                        full.push(MultiPoly::var_named(&target, &d, self.vars.name(i))?);
                    }
                }
            }
        }
        self.compose(&full)
    }

    /// Reinterprets the polynomial in another variable list by name.
    pub fn embed(&self, target: &Vars) -> Result<Self, PolyError> {
        if self.vars.same(target) {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        let used = self.support_vars();
        for i in 0..self.vars.len() {
            match target.index(self.vars.name(i)) {
                Some(j) => map.push(j),
                None if !used.contains(&i) => map.push(0),
                None => {
                    return Err(PolyError::Domain(format!(
                        "variable {} missing from target",
                        self.vars.name(i)
                    )))
                }
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(&map, target.len()), c.clone()))
            .collect();
        Ok(Self::from_terms(target, &self.domain, terms))
    }

    pub fn map_coeffs<D: Scalar>(&self, domain: &D::Domain, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect();
        MultiPoly::from_terms(&self.vars, domain, terms)
    }

    /// Coefficients with respect to variable `i`: entry `k` multiplies
    /// `x_i^k`. The variable list is unchanged.
    pub fn coeffs_in(&self, i: usize) -> Vec<Self> {
        let n = self.degree_in(i) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); n + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(i) as usize].push((m.with_exp(i, 0), c.clone()));
        }
        if self.is_zero() {
            return vec![self.clone()];
        }
        buckets
            .into_iter()
            .map(|t| Self::from_terms(&self.vars, &self.domain, t))
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(coeffs: &[Self], i: usize) -> Self {
        let first = &coeffs[0];
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                terms.push((m.with_exp(i, m.exp(i) + k as Exp), a.clone()));
            }
        }
        Self::from_terms(&first.vars, &first.domain, terms)
    }

    /// Homogeneous component of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == k).cloned().collect();
        Self::from_sorted(&self.vars, &self.domain, terms)
    }

    /// Exact quotient `self / g`, or the remainder of multivariate division
    /// as witness.
    pub fn div_exact(&self, g: &Self) -> Result<Self, NotDivisible<C>> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let d = self.check(g).expect("division operands must share a ring");
        if g.terms.len() == 1 {
            let (gm, gc) = &g.terms[0];
            let gi = gc.inv().expect("nonzero");
            if self.terms.iter().all(|(m, _)| gm.divides(m)) {
                let terms = self
                    .terms
                    .iter()
                    .map(|(m, c)| (gm.quotient_of(m), c.mul_ref(&gi)))
                    .collect();
                return Ok(Self::from_sorted(&self.vars, &d, terms));
            }
        }
        let (gm, gc) = g.terms[0].clone();
        let gi = gc.inv().expect("nonzero leading coefficient");
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let mut leftover = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !gm.divides(&m) {
                leftover.push((m, c));
                continue;
            }
            let qm = gm.quotient_of(&m);
            let qc = c.mul_ref(&gi);
            for (tm, tc) in &g.terms[1..] {
                let key = tm.mul(&qm);
                let delta = tc.mul_ref(&qc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        if leftover.is_empty() {
            Ok(Self::from_sorted(&self.vars, &d, quot))
        } else {
            Err(NotDivisible {
                remainder: Self::from_sorted(&self.vars, &d, leftover),
            })
        }
    }

    /// Quotient and remainder by `g` in variable `i`, where the leading
    /// coefficient of `g` in `x_i` is a nonzero constant.
    pub fn div_rem_monic_in(&self, g: &Self, i: usize) -> Result<(Self, Self), PolyError> {
        self.check(g)?;
        let gc = g.coeffs_in(i);
        let m = gc.len() - 1;
        let lc = &gc[m];
        if !lc.is_constant() || lc.is_zero() {
            return Err(PolyError::Domain("divisor is not monic in the variable".into()));
        }
        let lci = lc.constant_term().inv().expect("nonzero");
        let mut fc = self.coeffs_in(i);
        if fc.len() <= m {
            return Ok((self.zero_like(), self.clone()));
        }
        let mut qc = vec![self.zero_like(); fc.len() - m];
        for k in (m..fc.len()).rev() {
            let c = fc[k].scale(&lci);
            if c.is_zero() {
                continue;
            }
            for (j, gj) in gc.iter().enumerate() {
                fc[k - m + j] = &fc[k - m + j] - &(&c * gj);
            }
            qc[k - m] = c;
        }
        fc.truncate(m.max(1));
        Ok((Self::from_coeffs_in(&qc, i), Self::from_coeffs_in(&fc, i)))
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) f = q g + r` in
    /// variable `i`.
    pub fn pseudo_rem_in(&self, g: &Self, i: usize) -> Result<Self, PolyError> {
        self.check(g)?;
        let gc = g.coeffs_in(i);
        let m = gc.len() - 1;
        let lc = gc[m].clone();
        let mut fc = self.coeffs_in(i);
        if fc.len() <= m || self.is_zero() {
            return Ok(self.clone());
        }
        let steps = fc.len() - m;
        for k in (m..fc.len()).rev() {
            let c = fc[k].clone();
            for f in fc.iter_mut().take(k) {
                *f = &*f * &lc;
            }
            fc[k] = self.zero_like();
            if c.is_zero() {
                continue;
            }
            for (j, gj) in gc.iter().enumerate().take(m) {
                fc[k - m + j] = &fc[k - m + j] - &(&c * gj);
            }
        }
        // each step multiplied the lower part by lc exactly once
        debug_assert!(steps >= 1);
        fc.truncate(m.max(1));
        Ok(Self::from_coeffs_in(&fc, i))
    }

    /// Renders with at most `max_terms` terms, for error messages.
    pub fn abbreviated(&self, max_terms: usize) -> String {
        if self.terms.len() <= max_terms {
            return self.to_string();
        }
        let head = Self::from_sorted(&self.vars, &self.domain, self.terms[..max_terms].to_vec());
        format!("{head} + ... ({} terms)", self.terms.len())
    }
}

fn accumulate<C: Scalar>(acc: &mut FxHashMap<Monomial, C>, m: Monomial, c: &C) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

fn power_table<C: Scalar>(x: &C, n: usize, d: &C::Domain) -> Vec<C> {
    let mut v = Vec::with_capacity(n + 1);
    v.push(C::from_i64_in(d, 1));
    for k in 1..=n {
        let next = v[k - 1].mul_ref(x);
        v.push(next);
    }
    v
}

impl<C: Scalar> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.vars.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, 'b, C: Scalar> $tr<&'b MultiPoly<C>> for &'a MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $m(self, rhs: &'b MultiPoly<C>) -> MultiPoly<C> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Scalar> $tr<MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $m(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<'b, C: Scalar> $tr<&'b MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $m(self, rhs: &'b MultiPoly<C>) -> MultiPoly<C> {
                (&self).$m(rhs)
            }
        }
        impl<'a, C: Scalar> $tr<MultiPoly<C>> for &'a MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $m(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                self.$m(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        MultiPoly::from_sorted(&self.vars, &self.domain, terms)
    }
}

impl<C: Scalar> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}

/// Sum of an iterator of polynomials in one ring.
pub fn sum_polys<'a, C: Scalar>(
    zero: &MultiPoly<C>,
    items: impl IntoIterator<Item = &'a MultiPoly<C>>,
) -> MultiPoly<C> {
    let mut acc: FxHashMap<Monomial, C> = FxHashMap::default();
    for p in items {
        assert!(p.vars.same(&zero.vars));
        for (m, c) in &p.terms {
            accumulate(&mut acc, m.clone(), c);
        }
    }
    MultiPoly::from_map(&zero.vars, &zero.domain, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type Q = MultiPoly<Rational>;

    fn ring(names: &[&str]) -> (Vars, Vec<Q>) {
        let v = Vars::new(names);
        let g = Q::gens(&v, &());
        (v, g)
    }

    #[test]
    fn binomial_square() {
        let (_, g) = ring(&["x", "y"]);
        let (x, y) = (&g[0], &g[1]);
        let s = (x + y).pow(2);
        assert_eq!(s, &(&(x * x) + &(x * y).scale(&Rational::from(2))) + &(y * y));
        assert_eq!(s.to_string(), "x^2 + 2*x*y + y^2");
        assert!((&s * &s.zero_like()).is_zero());
    }

    #[test]
    fn multinomial_coefficient() {
        let (_, g) = ring(&["x0", "x1", "x2", "x3", "x4"]);
        let s = g.iter().fold(g[0].zero_like(), |a, b| &a + b).pow(5);
        assert_eq!(s.coefficient_of(&[2, 3, 0, 0, 0]), Rational::from(10));
        assert_eq!(s.coefficient_of(&[1, 1, 1, 1, 1]), Rational::from(120));
    }

    #[test]
    fn derivatives() {
        let (v, g) = ring(&["t", "b", "s"]);
        let (t, b, s) = (&g[0], &g[1], &g[2]);
        let f = &(t * t) + &(&(b * t) * s);
        let expect = &t.scale(&Rational::from(2)) + &(b * s);
        assert_eq!(f.partial(0), expect);
        assert!(Q::from_i64(&v, &(), 7).partial(1).is_zero());
        assert!(f.partial_named("q").is_err());
    }

    #[test]
    fn exact_division() {
        let (_, g) = ring(&["x", "y"]);
        let (x, y) = (&g[0], &g[1]);
        let f = &(x * x) - &(y * y);
        assert_eq!(f.div_exact(&(x - y)).unwrap(), x + y);
        let err = (&f + &x.one_like()).div_exact(&(x - y)).unwrap_err();
        assert!(!err.remainder.is_zero());
    }

    #[test]
    fn substitution_and_embedding() {
        let (_, g) = ring(&["x", "y"]);
        let (v2, h) = ring(&["s", "t", "y"]);
        let f = &(&g[0] * &g[0]) + &g[1];
        // x <- s + t, y carried by name
        let r = f.substitute(&[("x", &h[0] + &h[1])]).unwrap();
        assert_eq!(r, &(&h[0] + &h[1]).pow(2) + &h[2]);
        assert_eq!(g[1].embed(&v2).unwrap(), h[2]);
        assert!(g[0].embed(&v2).is_err());
    }

    #[test]
    fn monic_and_pseudo_remainders() {
        let (_, g) = ring(&["x", "z"]);
        let (x, z) = (&g[0], &g[1]);
        let f = &(&z.pow(3) + &(x * z)) + x;
        let d = z - x;
        let (q, r) = f.div_rem_monic_in(&d, 1).unwrap();
        assert_eq!(&(&q * &d) + &r, f);
        assert_eq!(r, &(&x.pow(3) + &(x * x)) + x);
        // pseudo remainder with a non-monic divisor
        let d2 = &(x * z) - &x.one_like();
        let pr = f.pseudo_rem_in(&d2, 1).unwrap();
        assert_eq!(pr.degree_in(1), 0);
        let lc3 = x.pow(3);
        let lhs = &lc3 * &f;
        assert!((&lhs - &pr).div_exact(&d2).is_ok());
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let (_, g) = ring(&["x", "y"]);
        let (_, h) = ring(&["x", "z"]);
        assert!(g[0].checked_add(&h[0]).is_err());
    }
}
