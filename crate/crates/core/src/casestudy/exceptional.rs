//! Plane sections through a tangency pair in the exceptional locus, for the
//! tag k = [0:0:0:2:2] and the h = 0 cone.
//!
//! Everything lives in Q[t, a, b, c] modulo a^5 + b^5 + c^5, with normal
//! forms of degree < 5 in a.

use crate::algebra::Algebra;
use crate::conicsystem::{build_system, PencilChoice, SValues};
use crate::monomial::Vars;
use crate::ratfunc::RatFunc;
use crate::report::Report;
use crate::resultant::bareiss_det;
use crate::{QPoly, Rational};

pub const T: usize = 0;
pub const A: usize = 1;
pub const B: usize = 2;
pub const C: usize = 3;

fn q(v: i64) -> Rational {
    Rational::from(v)
}

#[derive(Debug, Clone)]
pub struct ExceptionalFrame {
    pub vars: Vars,
    /// a^5 + b^5 + c^5
    pub relation: QPoly,
    pub p: [QPoly; 5],
    pub q: [QPoly; 5],
    pub s: [QPoly; 5],
    pub t_point: [QPoly; 5],
    /// R = tT + S
    pub r: [QPoly; 5],
}

impl Default for ExceptionalFrame {
    fn default() -> Self {
        Self::new()
    }
}

impl ExceptionalFrame {
    pub fn new() -> Self {
        let vars = Vars::new(&["t", "a", "b", "c"]);
        let g = QPoly::gens(&vars, &());
        let (t, a, b, c) = (&g[T], &g[A], &g[B], &g[C]);
        let zero = t.zero_like();
        let one = t.one_like();
        let relation = &(&a.pow(5) + &b.pow(5)) + &c.pow(5);
        let p = [a.clone(), b.clone(), c.clone(), one.clone(), -&one];
        let q = [a.clone(), b.clone(), c.clone(), -&one, one.clone()];
        let s = [zero.clone(), -b, zero.clone(), zero.clone(), b.pow(5)];
        let t_point = [zero.clone(), zero.clone(), -c, c.pow(5), zero.clone()];
        let r = std::array::from_fn(|i| &(t * &t_point[i]) + &s[i]);
        ExceptionalFrame {
            vars,
            relation,
            p,
            q,
            s,
            t_point,
            r,
        }
    }

    pub fn gens(&self) -> Vec<QPoly> {
        QPoly::gens(&self.vars, &())
    }

    /// Normal form modulo a^5 + b^5 + c^5 (a^5 ↦ −b^5 − c^5).
    pub fn reduce(&self, p: &QPoly) -> QPoly {
        p.div_rem_monic_in(&self.relation, A).expect("relation is monic in a").1
    }

    pub fn is_zero_mod(&self, p: &QPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// a^4 x0 + b^4 x1 + c^4 x2 + x3 + x4 evaluated at a point.
    pub fn tangent_form(&self, x: &[QPoly; 5]) -> QPoly {
        let p = &self.p;
        (0..5).fold(self.relation.zero_like(), |acc, i| &acc + &(&p[i].pow(4) * &x[i]))
    }

    /// P, Q, S, T lie on the tangent hyperplane at P and span it when
    /// abc ≠ 0.
    pub fn span_report(&self) -> Report {
        let mut r = Report::new("tangent hyperplane");
        for (name, pt) in [("P", &self.p), ("Q", &self.q), ("S", &self.s), ("T", &self.t_point)] {
            let v = self.reduce(&self.tangent_form(pt));
            r.check(
                format!("{name} on the tangent hyperplane"),
                v.is_zero(),
                v.abbreviated(4),
            );
        }
        let rows = [&self.p, &self.q, &self.s, &self.t_point];
        let minor = |cols: [usize; 4]| {
            let m: Vec<Vec<QPoly>> = rows
                .iter()
                .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
                .collect();
            self.reduce(&bareiss_det(m))
        };
        let g = self.gens();
        let abc = &(&g[A] * &g[B]) * &g[C];
        let m0123 = minor([0, 1, 2, 3]);
        r.check(
            "minor on x0..x3 is -2abc",
            m0123 == abc.scale(&q(-2)),
            m0123.to_string(),
        );
        let bc = &g[B] * &g[C];
        let all_divisible = [[0, 1, 2, 4], [0, 1, 3, 4], [0, 2, 3, 4]]
            .into_iter()
            .all(|cols| minor(cols).div_exact(&abc).is_ok());
        r.check("minors through x0 are divisible by abc", all_divisible, "");
        let m1234 = minor([1, 2, 3, 4]);
        r.check(
            "minor on x1..x4 is -2a^5bc",
            m1234 == self.reduce(&(&g[A].pow(5) * &bc).scale(&q(-2))),
            m1234.to_string(),
        );
        r.note("P, Q, S, T are dependent when a = 0 as well as when bc = 0");
        r
    }

    /// S_mn = Σ_i p_i^(5-m-n) q_i^m r_i^n, reduced.
    pub fn smn(&self) -> SValues<QPoly> {
        SValues::from_fn(self.relation.zero_like(), |m, n| {
            let sum = (0..5).fold(self.relation.zero_like(), |acc, i| {
                let term = &(&self.p[i].pow(5 - m - n) * &self.q[i].pow(m)) * &self.r[i].pow(n);
                &acc + &term
            });
            self.reduce(&sum)
        })
    }

    /// The table as displayed, before reduction.
    pub fn displayed_smn(&self) -> Vec<((u32, u32), QPoly)> {
        let g = self.gens();
        let (t, b, c) = (&g[T], &g[B], &g[C]);
        let zero = t.zero_like();
        let tc = |k: u32| t.pow(k);
        let s11 = (&(t * &c.pow(5)) + &b.pow(5)).scale(&q(-2));
        let s02 = &(&(&tc(2) * &(&c.pow(5) + &c.pow(10))) + &b.pow(5)) - &b.pow(10);
        let s12 = &(&(&tc(2) * &(&c.pow(5) - &c.pow(10))) + &b.pow(5)) + &b.pow(10);
        let s03 = &(&(-&(&tc(3) * &(&c.pow(5) - &c.pow(15)))) - &b.pow(5)) + &b.pow(15);
        let s13 = &(&(-&(&tc(3) * &(&c.pow(5) + &c.pow(15)))) - &b.pow(5)) - &b.pow(15);
        let s14 = &(&(&tc(4) * &(&c.pow(5) - &c.pow(20))) + &b.pow(5)) + &b.pow(20);
        let s04 = &(&(&tc(4) * &(&c.pow(5) + &c.pow(20))) + &b.pow(5)) - &b.pow(20);
        let s05 = &(&(-&(&tc(5) * &(&c.pow(5) - &c.pow(25)))) - &b.pow(5)) + &b.pow(25);
        let mut out: Vec<((u32, u32), QPoly)> = (0..=5).map(|m| ((m, 0), zero.clone())).collect();
        for k in [(0, 1), (2, 1), (4, 1)] {
            out.push((k, zero.clone()));
        }
        out.extend([
            ((1, 1), s11.clone()),
            ((3, 1), s11),
            ((0, 2), s02.clone()),
            ((2, 2), s02),
            ((1, 2), s12.clone()),
            ((3, 2), s12),
            ((0, 3), s03.clone()),
            ((2, 3), s03),
            ((1, 3), s13),
            ((1, 4), s14),
            ((0, 4), s04),
            ((0, 5), s05),
        ]);
        out
    }

    pub fn smn_report(&self, s: &SValues<QPoly>) -> Report {
        let mut r = Report::new("exceptional S table");
        for ((m, n), v) in self.displayed_smn() {
            let diff = &s.get(m, n) - &self.reduce(&v);
            r.check(
                format!("S{m}{n}"),
                diff.is_zero(),
                if diff.is_zero() {
                    String::new()
                } else {
                    diff.abbreviated(4)
                },
            );
        }
        r
    }
}

/// q_1..q_5 with α = A/D, β = B/D, D = 2 S11, A = −S12, B = −S02, stored
/// with the denominator cleared: `scaled[k] = q_k D^w_k` for w = 1, 1, 2, 2, 3.
#[derive(Debug, Clone)]
pub struct ExceptionalSystem {
    pub s: SValues<QPoly>,
    pub d: QPoly,
    pub alpha_num: QPoly,
    pub beta_num: QPoly,
    pub scaled: [QPoly; 5],
}

pub const Q_WEIGHTS: [u32; 5] = [1, 1, 2, 2, 3];

impl ExceptionalSystem {
    pub fn new(frame: &ExceptionalFrame, s: SValues<QPoly>) -> Self {
        let g = |m, n| s.get(m, n);
        let d = g(1, 1).scale(&q(2));
        let al = -&g(1, 2);
        let be = -&g(0, 2);
        let d2 = d.square();
        let d3 = &d2 * &d;
        // q1 = 10 S03 + 30 β S12
        let q1 = &g(0, 3).scale(&q(10)) * &d + (&be * &g(1, 2)).scale(&q(30));
        // q2 = 10 S23 + 30 α S22
        let q2 = &g(2, 3).scale(&q(10)) * &d + (&al * &g(2, 2)).scale(&q(30));
        // q3 = 5 S04 + 20 β S13 + 20 β² S02
        let q3 = &(&(&g(0, 4).scale(&q(5)) * &d2) + &(&(&be * &g(1, 3)) * &d).scale(&q(20)))
            + &(&be.square() * &g(0, 2)).scale(&q(20));
        // q4 = 5 S14 + 20 α S13 + 20 α² S12
        let q4 = &(&(&g(1, 4).scale(&q(5)) * &d2) + &(&(&al * &g(1, 3)) * &d).scale(&q(20)))
            + &(&al.square() * &g(1, 2)).scale(&q(20));
        // q5 = S05 − 5 S04 α − 5 S14 β − 60 αβ S13 − 40 α²β S32 − 40 αβ² S02
        let ab = &al * &be;
        let q5 = &(&(&(&(&(&g(0, 5) * &d3) - &(&(&g(0, 4) * &al) * &d2).scale(&q(5)))
            - &(&(&g(1, 4) * &be) * &d2).scale(&q(5)))
            - &(&(&ab * &g(1, 3)) * &d).scale(&q(60)))
            - &(&(&ab * &al) * &g(3, 2)).scale(&q(40)))
            - &(&(&ab * &be) * &g(0, 2)).scale(&q(40));
        let scaled = [q1, q2, q3, q4, q5].map(|p| frame.reduce(&p));
        ExceptionalSystem {
            s,
            d,
            alpha_num: al,
            beta_num: be,
            scaled,
        }
    }

    /// q_k as a fraction.
    pub fn q(&self, k: usize) -> RatFunc<Rational> {
        RatFunc::new(self.scaled[k - 1].clone(), self.d.pow(Q_WEIGHTS[k - 1])).expect("S11 is not zero")
    }

    pub fn pencil(&self) -> PencilChoice<RatFunc<Rational>> {
        PencilChoice {
            alpha: RatFunc::new(self.alpha_num.clone(), self.d.clone()).expect("S11 != 0"),
            beta: RatFunc::new(self.beta_num.clone(), self.d.clone()).expect("S11 != 0"),
            branch: (1, 1),
        }
    }

    /// f3 = q3 S11² − q1 S12 S11, f4 = q4 S11² − q1 S02 S11,
    /// f5 = q5 S11³ − q1 S13 S11², all reduced.
    pub fn f345(&self, frame: &ExceptionalFrame) -> [QPoly; 3] {
        let s = &self.s;
        let [q1, _, q3, q4, q5] = &self.scaled;
        let quarter = Rational::new(1, 4);
        let half = Rational::new(1, 2);
        let f3 = &q3.scale(&quarter) - &(q1 * &s.get(1, 2)).scale(&half);
        let f4 = &q4.scale(&quarter) - &(q1 * &s.get(0, 2)).scale(&half);
        let f5 = &q5.scale(&Rational::new(1, 8)) - &(&(q1 * &s.get(1, 3)) * &self.d).scale(&quarter);
        [f3, f4, f5].map(|p| frame.reduce(&p))
    }
}

/// The same q's read off the general conic system: with λ = αβ − d,
/// E_k = q_k + 20 X_k λ for k ≤ 4 (X = S11, S31, S32, S02) and
/// E5 − αE3 − βE4 = q5 + 20 S13 λ.
pub fn cross_check_with_system(frame: &ExceptionalFrame, sys: &ExceptionalSystem) -> Report {
    let mut r = Report::new("exceptional system vs main equations");
    let vars = Vars::new(&["t", "a", "b", "c", "lam"]);
    let lift = |p: &QPoly| p.embed(&vars).expect("subring");
    let liftf = |f: &RatFunc<Rational>| RatFunc::new(lift(f.num()), lift(f.den())).expect("nonzero denominator");
    let lam = RatFunc::from_poly(QPoly::var(&vars, &(), 4));
    let zero = lam.zero_like();
    let s = sys.s.map(zero.clone(), |p| RatFunc::from_poly(lift(p)));
    let ch = sys.pencil();
    let ch = PencilChoice {
        alpha: liftf(&ch.alpha),
        beta: liftf(&ch.beta),
        branch: ch.branch,
    };
    let [ra, rb] = ch.quadratic_residuals(&s);
    r.check(
        "alpha and beta solve the pencil quadratics",
        frame_zero(frame, &ra) && frame_zero(frame, &rb),
        "",
    );
    let system = build_system(&s, &ch);
    let d = ch.alpha.times(&ch.beta).minus(&lam);
    let e = system.eval(&d);
    let xs = [(1, 1), (3, 1), (3, 2), (0, 2)];
    for k in 0..4 {
        let rhs = liftf(&sys.q(k + 1)).plus(&s.get(xs[k].0, xs[k].1).times(&lam).scaled_by(20));
        r.check(
            format!("E{} = q{} + 20 S{}{} lambda", k + 1, k + 1, xs[k].0, xs[k].1),
            frame_zero(frame, &e[k].minus(&rhs)),
            "",
        );
    }
    let combo = e[4].minus(&ch.alpha.times(&e[2])).minus(&ch.beta.times(&e[3]));
    let rhs = liftf(&sys.q(5)).plus(&s.get(1, 3).times(&lam).scaled_by(20));
    r.check(
        "E5 - alpha E3 - beta E4 = q5 + 20 S13 lambda",
        frame_zero(frame, &combo.minus(&rhs)),
        "",
    );
    r
}

/// Numerator vanishes modulo the curve relation (carried into the λ ring).
fn frame_zero(frame: &ExceptionalFrame, f: &RatFunc<Rational>) -> bool {
    let rel = frame.relation.embed(f.vars()).expect("subring");
    f.num().div_rem_monic_in(&rel, A).expect("monic in a").1.is_zero()
}

/// The paper-side targets for f3, f4 and the displayed f5 specializations.
pub struct F5Specialization {
    pub label: &'static str,
    pub computed: QPoly,
    pub displayed: QPoly,
}

pub fn f5_specializations(frame: &ExceptionalFrame, f5: &QPoly) -> Vec<F5Specialization> {
    let g = frame.gens();
    let (t, a, b) = (&g[T], &g[A], &g[B]);
    let one = t.one_like();
    let zero = Rational::from(0);
    let b20 = b.pow(20);
    let two = |p: QPoly| p.scale(&q(2));
    let b_part = two(&b20 * &(&b20 - &one));
    let at = |p: &QPoly, var: usize, v: i64| frame.reduce(&p.specialize(var, &q(v)));
    let c_to_minus_b = |p: &QPoly| {
        let mut imgs = g.clone();
        imgs[C] = -b;
        frame.reduce(&p.compose(&imgs).expect("same ring"))
    };
    vec![
        F5Specialization {
            label: "t=0",
            computed: at(f5, T, 0),
            displayed: frame.reduce(&b_part),
        },
        F5Specialization {
            label: "t=1",
            computed: at(f5, T, 1),
            displayed: frame.reduce(&(&a.pow(4) * &(&a.pow(20) - &one))),
        },
        F5Specialization {
            label: "c=0",
            computed: frame.reduce(&f5.specialize(C, &zero)),
            displayed: frame.reduce(&(&t.pow(8) * &b_part)).specialize(C, &zero),
        },
        F5Specialization {
            label: "b+c=0",
            computed: c_to_minus_b(f5),
            displayed: c_to_minus_b(&(&(t - &one).pow(8) * &b_part)),
        },
    ]
}

/// −20 t²(t−1)² a⁵ b⁵ c⁵, reduced.
pub fn f34_target(frame: &ExceptionalFrame) -> QPoly {
    let g = frame.gens();
    let (t, a, b, c) = (&g[T], &g[A], &g[B], &g[C]);
    let one = t.one_like();
    let p = &(&(&t.square() * &(t - &one).square()) * &a.pow(5)) * &(&b.pow(5) * &c.pow(5));
    frame.reduce(&p.scale(&q(-20)))
}

#[derive(Debug, Clone)]
pub struct CaseStudy {
    pub s: SValues<QPoly>,
    pub system: ExceptionalSystem,
    pub f: [QPoly; 3],
}

pub fn compute(frame: &ExceptionalFrame) -> CaseStudy {
    let s = frame.smn();
    let system = ExceptionalSystem::new(frame, s.clone());
    let f = system.f345(frame);
    CaseStudy { s, system, f }
}

/// Recognizes `p` as k·x²⁰(x²⁰ − 1) times a power of t for a variable x in
/// {a, b, c}, for readable mismatch details.
pub fn describe(frame: &ExceptionalFrame, p: &QPoly) -> String {
    let g = frame.gens();
    let one = g[T].one_like();
    for (name, var) in [("a", A), ("b", B), ("c", C)] {
        let x20 = g[var].pow(20);
        let base = frame.reduce(&(&x20 * &(&x20 - &one)));
        for tp in 0..=8u32 {
            let cand = frame.reduce(&(&g[T].pow(tp) * &base));
            if cand.is_zero() {
                continue;
            }
            let lead = cand.leading().expect("nonzero").clone();
            let k = p.coefficient(&lead.0) * lead.1.recip();
            if frame.reduce(&(p - &cand.scale(&k))).is_zero() {
                let tpart = match tp {
                    0 => String::new(),
                    1 => "t ".into(),
                    _ => format!("t^{tp} "),
                };
                return format!("{k} {tpart}{name}^20({name}^20-1)");
            }
        }
    }
    p.abbreviated(6)
}

pub fn f_report(frame: &ExceptionalFrame, cs: &CaseStudy) -> Report {
    let mut r = Report::new("exceptional f3 f4 f5");
    let [q1, q2, ..] = &cs.system.scaled;
    r.check("q1 = q2", q1 == q2, "");
    let target = f34_target(frame);
    for (name, f) in [("f3", &cs.f[0]), ("f4", &cs.f[1])] {
        let diff = f - &target;
        r.check(
            format!("{name} = -20 t^2(t-1)^2 a^5 b^5 c^5"),
            diff.is_zero(),
            if diff.is_zero() {
                String::new()
            } else {
                diff.abbreviated(4)
            },
        );
    }
    for sp in f5_specializations(frame, &cs.f[2]) {
        let ok = sp.computed == sp.displayed;
        r.check(
            format!("f5|{} as displayed", sp.label),
            ok,
            if ok {
                String::new()
            } else {
                format!("computed {}", describe(frame, &sp.computed))
            },
        );
    }
    let b0 = frame.reduce(&cs.f[2].specialize(B, &Rational::from(0)));
    r.note(format!("f5|b=0 = {}", describe(frame, &b0)));
    r
}
