//! Solution families of f3 = f4 = f5 = 0 on the exceptional frame.

use rand::SeedableRng;

use crate::casestudy::exceptional::{describe, CaseStudy, ExceptionalFrame, A, B, C, T};
use crate::fp::{reduce_mod, Fp};
use crate::report::Report;
use crate::{QPoly, Rational};

/// Homogeneous weights of f3, f4, f5 in the pencil coordinate of R.
pub const F_WEIGHTS: [u32; 3] = [6, 6, 8];

fn x20_family(frame: &ExceptionalFrame, var: usize) -> QPoly {
    let g = frame.gens();
    let x20 = g[var].pow(20);
    frame.reduce(&(&x20 * &(&x20 - &g[T].one_like())).scale(&Rational::from(2)))
}

/// Substitutes t = num/den into a polynomial of t-degree ≤ w and clears
/// den^w.
fn homogenized_at(p: &QPoly, w: u32, num: &QPoly, den: &QPoly) -> QPoly {
    let cs = p.coeffs_in(T);
    assert!(cs.len() as u32 <= w + 1);
    cs.iter().enumerate().fold(p.zero_like(), |acc, (k, c)| {
        &acc + &(&(c * &num.pow(k as u32)) * &den.pow(w - k as u32))
    })
}

pub fn classify_solutions(frame: &ExceptionalFrame, cs: &CaseStudy) -> Report {
    let mut r = Report::new("solution families");
    let g = frame.gens();
    let (t, a, b, c) = (&g[T], &g[A], &g[B], &g[C]);
    let zero = Rational::from(0);
    let one = Rational::from(1);
    let f = &cs.f;

    // t = 0
    let at0: Vec<QPoly> = f.iter().map(|p| frame.reduce(&p.specialize(T, &zero))).collect();
    r.check(
        "t=0: f3 = f4 = 0 and f5 = 2 b^20(b^20-1)",
        at0[0].is_zero() && at0[1].is_zero() && at0[2] == x20_family(frame, B),
        describe(frame, &at0[2]),
    );

    // t = ∞: leading coefficients at the homogeneous weights
    let lead: Vec<QPoly> = f
        .iter()
        .zip(F_WEIGHTS)
        .map(|(p, w)| {
            let cs = p.coeffs_in(T);
            cs.get(w as usize).cloned().unwrap_or_else(|| p.zero_like())
        })
        .collect();
    r.check(
        "t=inf: f3 = f4 = 0 and f5 = 2 c^20(c^20-1)",
        lead[0].is_zero() && lead[1].is_zero() && frame.reduce(&lead[2]) == x20_family(frame, C),
        describe(frame, &lead[2]),
    );

    // t = 1
    let at1: Vec<QPoly> = f.iter().map(|p| frame.reduce(&p.specialize(T, &one))).collect();
    let ok = at1[0].is_zero() && at1[1].is_zero() && at1[2] == x20_family(frame, A);
    r.check(
        "t=1: f3 = f4 = 0 and f5 = 2 a^20(a^20-1), zero set a^4(a^20-1) = 0",
        ok,
        describe(frame, &at1[2]),
    );

    // generic t is not a solution
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xfa11);
    let p = 10009u64;
    let fifth_root = |x: Fp| {
        // 5 is invertible mod p - 1, so x ↦ x^5 is a bijection
        let e = (1..p - 1).find(|e| (5 * e) % (p - 1) == 1).expect("5 invertible");
        x.pow(e)
    };
    let mut nonzero = 0;
    for _ in 0..5 {
        let bv = Fp::random(&mut rng, p);
        let cv = Fp::random(&mut rng, p);
        let av = fifth_root(-(bv.pow(5) + cv.pow(5)));
        let pt = [Fp::new(2, p), av, bv, cv];
        let vals: Vec<Fp> = f
            .iter()
            .map(|q| reduce_mod(q, p).expect("p is a unit").eval(&pt))
            .collect();
        if vals.iter().any(|v| v.value() != 0) {
            nonzero += 1;
        }
    }
    r.check(
        "t=2 at random F_10009 points: some f is nonzero",
        nonzero == 5,
        format!("{nonzero}/5"),
    );

    // the t=1 plane: c(a^4 x0 + x3 + x4) = a^5 x2 and c x1 = b x2
    let r1: Vec<QPoly> = frame.r.iter().map(|x| x.specialize(T, &one)).collect();
    let plane = |x: &[QPoly]| {
        let l1 = &(c * &(&(&(&a.pow(4) * &x[0]) + &x[3]) + &x[4])) - &(&a.pow(5) * &x[2]);
        let l2 = &(c * &x[1]) - &(b * &x[2]);
        frame.is_zero_mod(&l1) && frame.is_zero_mod(&l2)
    };
    r.check(
        "t=1: P, Q, R lie on c(a^4 x0 + x3 + x4) = a^5 x2, c x1 = b x2",
        plane(&frame.p) && plane(&frame.q) && plane(&r1),
        "",
    );

    // orbit witness: y = (μ x0, x3, x4, x1, x2) with μ = a^4 carries the
    // t=1 plane to the S3 plane c(y0+y1+y2) = a' y4, c y3 = b y4, a' = a^5
    let to_y = |x: &[QPoly]| {
        [
            &a.pow(4) * &x[0],
            x[3].clone(),
            x[4].clone(),
            x[1].clone(),
            x[2].clone(),
        ]
    };
    let s3_plane = |y: &[QPoly; 5]| {
        let l1 = &(c * &(&(&y[0] + &y[1]) + &y[2])) - &(&a.pow(5) * &y[4]);
        let l2 = &(c * &y[3]) - &(b * &y[4]);
        frame.is_zero_mod(&l1) && frame.is_zero_mod(&l2)
    };
    let rho0 = frame.reduce(&(&(&a.pow(25) + &b.pow(5)) + &c.pow(5)));
    let family = frame.reduce(&(&a.pow(5) * &(&a.pow(20) - &t.one_like())));
    r.check(
        "t=1: x0 -> a^4 x0 and a permutation map the plane to the S3 family",
        s3_plane(&to_y(&frame.p)) && s3_plane(&to_y(&frame.q)) && s3_plane(&to_y(&r1)),
        "",
    );
    r.check(
        "t=1: a^20 = 1 makes a^4 a fifth root of unity and (a^5, b, c) a point of the S3 curve at psi = 0",
        rho0 == family,
        "",
    );

    // S11 = 0, i.e. t = -b^5/c^5
    let s = &cs.s;
    let num = -&b.pow(5);
    let den = c.pow(5);
    let s02 = homogenized_at(&s.get(0, 2), 2, &num, &den);
    let s12 = homogenized_at(&s.get(1, 2), 2, &num, &den);
    let expected = &(&b.pow(5) * &c.pow(5)) * &(&b.pow(5) + &c.pow(5));
    r.check(
        "S11=0: c^10 S02 = c^10 S12 = b^5 c^5 (b^5 + c^5)",
        frame.reduce(&s02) == frame.reduce(&expected) && frame.reduce(&s12) == frame.reduce(&expected),
        "",
    );
    r.note("S11 = S02 = S12 = 0 with bc != 0 forces b^5 = -c^5, hence t = 1 and a = 0; t = -1 does not occur");
    r.note("t=0 and t=inf families are checked through f3, f4, f5 only; no orbit witness is computed for them");
    r
}
