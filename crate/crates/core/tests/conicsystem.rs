use fermconic::conicsystem::{
    build_system, eliminate_d, formal_to_poly, pencil_roots_fp, FormalFrame, SValues, S_KEYS, ZERO_KEYS,
};
use fermconic::{Fp, FpPoly, QPoly};
use rand::{Rng, SeedableRng};

fn to_fp(p: &QPoly, modulus: u64) -> FpPoly {
    p.map_coeffs(&modulus, |c| {
        fermconic::Scalar::from_ratio_in(&modulus, &c.numer(), &c.denom()).unwrap()
    })
}

#[test]
fn formal_system_specializes_to_the_numeric_one() {
    let frame = FormalFrame::new();
    let sys = build_system(frame.s(), frame.principal());
    let p = 1_000_003u64;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 5 {
        let vals: Vec<Fp> = (0..S_KEYS.len()).map(|_| Fp::random(&mut rng, p)).collect();
        let s = SValues::from_fn(Fp::new(0, p), |m, n| match S_KEYS.iter().position(|&k| k == (m, n)) {
            Some(i) => vals[i],
            None => {
                assert!(ZERO_KEYS.contains(&(m, n)));
                Fp::new(0, p)
            }
        });
        let Ok(choices) = pencil_roots_fp(&s) else { continue };
        let c = &choices[0];
        let d = Fp::new(rng.gen_range(0..p as i64), p);
        let numeric = build_system(&s, c).eval(&d);
        for (k, e) in sys.equations.iter().enumerate() {
            let (num, den) = formal_to_poly(e, &frame.vars);
            let mut point = vals.clone();
            point.extend([Fp::new(0, p), Fp::new(0, p), c.alpha, c.beta, d]);
            let v = to_fp(&num, p).eval(&point) * fermconic::Scalar::inv(&to_fp(&den, p).eval(&point)).unwrap();
            assert_eq!(v, numeric[k], "E{}", k + 1);
        }
        checked += 1;
    }
}

#[test]
fn formal_elimination() {
    let frame = FormalFrame::new();
    let sys = build_system(frame.s(), frame.principal());
    let t = std::time::Instant::now();
    let r = eliminate_d(&sys).unwrap();
    eprintln!("eliminate_d: {:?}", t.elapsed());
    for (i, ri) in r.iter().enumerate() {
        let (num, _) = formal_to_poly(&fermconic::conicsystem::DPoly::constant(ri.clone()), &frame.vars);
        eprintln!("R{}: {} terms", i + 1, num.nterms());
        assert!(!num.is_zero());
    }
    // R1 and R2 are exchanged by the swap of P and Q
    assert_eq!(frame.tau(&r[0]), r[1]);
}
