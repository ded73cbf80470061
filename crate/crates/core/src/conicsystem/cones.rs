//! Tangent cones at the two tangency points and the discriminant lemma.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::bitangent::{elementary_values, kernel_coords};
use crate::conicsystem::{delta_prime_r, delta_r, ConicError, SValues};
use crate::monomial::Vars;
use crate::report::Report;
use crate::symfun::{
    e_to_u, kernel, option1_l, option1_table, option2_l, option2_table, smn_from_frame, u_vars, FrameKind, SmnTable,
};
use crate::{QPoly, Rational};

/// Γ_U = Σ M_i v_i² and Γ_ι(U) = Σ M_i u_i³ v_i² over u0..u4, v0..v4.
pub fn tangent_cone_quadrics() -> (QPoly, QPoly) {
    let mut names: Vec<String> = u_vars().names().to_vec();
    names.extend((0..5).map(|i| format!("v{i}")));
    let vars = Vars::new(&names);
    let g = QPoly::gens(&vars, &());
    let k = kernel();
    let mut p = g[0].zero_like();
    let mut q = g[0].zero_like();
    for i in 0..5 {
        let m = k.m[i].embed(&vars).expect("u-ring embeds");
        let t = &m * &g[5 + i].square();
        q = &q + &(&t * &g[i].pow(3));
        p = &p + &t;
    }
    (p, q)
}

/// A third point R = [l_i] of Λ together with its S table.
#[derive(Debug, Clone)]
pub struct SimplexFrame {
    pub kind: FrameKind,
    /// coordinates of R in u0..u4
    pub l: Vec<QPoly>,
    /// entries in e1..e5 for the two built-in frames and in u0..u4 for an
    /// explicit one
    pub table: SmnTable,
}

impl SimplexFrame {
    pub fn option1(max_total: u32) -> Self {
        SimplexFrame {
            kind: FrameKind::Option1,
            l: option1_l(),
            table: option1_table(max_total),
        }
    }

    pub fn option2(max_total: u32) -> Self {
        SimplexFrame {
            kind: FrameKind::Option2,
            l: option2_l(),
            table: option2_table(max_total),
        }
    }

    /// A user-supplied R; both Λ equations are checked exactly and the table
    /// is computed by exact division by δ.
    pub fn explicit(l: Vec<QPoly>, max_total: u32) -> Result<Self, ConicError> {
        if l.len() != 5 || l.iter().any(|p| !p.vars().same(&u_vars())) {
            return Err(ConicError::InvalidFrame("need five polynomials in u0..u4".into()));
        }
        let k = kernel();
        for (m, what) in [(0u32, "sum M_i l_i"), (4, "sum M_i u_i^4 l_i")] {
            if !k.moment(m, &l, 1).is_zero() {
                return Err(ConicError::InvalidFrame(format!("{what} is not zero")));
            }
        }
        let mut table = SmnTable::new(FrameKind::Explicit);
        for n in 0..=max_total {
            for m in 0..=max_total - n {
                let s = smn_from_frame(m, n, &l).map_err(|e| ConicError::InvalidFrame(e.to_string()))?;
                table.insert(m, n, s);
            }
        }
        Ok(SimplexFrame {
            kind: FrameKind::Explicit,
            l,
            table,
        })
    }

    pub fn s_values(&self) -> SValues<QPoly> {
        let zero = self.table.s(0, 0).zero_like();
        let mut s = SValues::new(zero);
        for (&(m, n), p) in &self.table.entries {
            s.insert(m, n, p.clone());
        }
        s
    }

    /// S_mn evaluated at a rational U.
    pub fn s_at(&self, u: &[Rational; 5]) -> SValues<Rational> {
        let point: Vec<Rational> = match self.kind {
            FrameKind::Explicit => u.to_vec(),
            _ => elementary_values(u, &Rational::from(0))[1..].to_vec(),
        };
        self.s_values().map(Rational::from(0), |p| p.eval(&point))
    }

    /// Σ M_i l_i and Σ M_i u_i⁴ l_i, computed in the u-ring.
    pub fn lambda_residuals(&self) -> [QPoly; 2] {
        let k = kernel();
        [k.moment(0, &self.l, 1), k.moment(4, &self.l, 1)]
    }

    /// The table entries in u0..u4.
    pub fn table_in_u(&self, m: u32, n: u32) -> QPoly {
        match self.kind {
            FrameKind::Explicit => self.table.s(m, n).clone(),
            _ => e_to_u(self.table.s(m, n), &kernel().esym),
        }
    }
}

/// Inner-product symbols: with ⟨a,b⟩ = Σ M_i a_i b_i for the weight M_i and
/// ⟨a,b⟩' for the weight M_i u_i³, Δ and Δ' of x P + y Q + z R are quadratic
/// forms in x, y, z whose coefficients are products of these.
const GRAM: [&str; 12] = [
    "g11", "g1u", "guu", "g1l", "gul", "gll", "h11", "h1u", "huu", "h1l", "hul", "hll",
];

/// Δ(V) = ⟨u,v⟩² − ⟨u,u⟩⟨v,v⟩ and Δ'(V) = ⟨1,v⟩'² − ⟨1,1⟩'⟨v,v⟩' for
/// v = x·1 + y·u + z·l, over the symbols [`GRAM`] and x, y, z.
fn gram_discriminants() -> (Vars, QPoly, QPoly) {
    let mut names: Vec<String> = GRAM.iter().map(|s| s.to_string()).collect();
    names.extend(["x", "y", "z"].map(String::from));
    let vars = Vars::new(&names);
    let g = QPoly::gens(&vars, &());
    let (x, y, z) = (&g[12], &g[13], &g[14]);
    // symmetric bilinear form on the basis (1, u, l)
    let at = |o: usize, a: usize, b: usize| {
        let idx = match (a.min(b), a.max(b)) {
            (0, 0) => 0,
            (0, 1) => 1,
            (1, 1) => 2,
            (0, 2) => 3,
            (1, 2) => 4,
            _ => 5,
        };
        g[o + idx].clone()
    };
    let coeffs = [x.clone(), y.clone(), z.clone()];
    let pair = |o: usize, a: &[QPoly; 3], b: &[QPoly; 3]| {
        let mut acc = x.zero_like();
        for i in 0..3 {
            for j in 0..3 {
                acc = &acc + &(&(&a[i] * &b[j]) * &at(o, i, j));
            }
        }
        acc
    };
    let one = x.one_like();
    let zero = x.zero_like();
    let e_one = [one.clone(), zero.clone(), zero.clone()];
    let e_u = [zero.clone(), one.clone(), zero.clone()];
    let uv = pair(0, &e_u, &coeffs);
    let uu = pair(0, &e_u, &e_u);
    let vv = pair(0, &coeffs, &coeffs);
    let delta = &uv.square() - &(&uu * &vv);
    let onev = pair(6, &e_one, &coeffs);
    let oneone = pair(6, &e_one, &e_one);
    let vv2 = pair(6, &coeffs, &coeffs);
    let delta2 = &onev.square() - &(&oneone * &vv2);
    (vars, delta, delta2)
}

/// Discriminant lemma: Δ(xP + yQ + zR) = Δ(R) z² and the same for Δ′, for
/// every R in Λ.
///
/// The symbolic part expands Δ and Δ′ bilinearly in the inner products
/// Σ M_i a_i b_i, substitutes the products that vanish identically in the
/// u-ring, and shows the remainder is a multiple of Σ M_i l_i (resp.
/// Σ M_i u_i⁴ l_i). The frame part then checks, at random rational U with
/// l3, l4 solved from the two Λ equations, that the residual polynomial in
/// x, y, z is zero, and compares Δ(R), Δ′(R) with the frame's S table.
pub fn discriminant_check(frame: &SimplexFrame) -> Result<Report, ConicError> {
    for (m, n) in [(2, 0), (1, 1), (0, 2), (3, 0), (3, 1), (3, 2)] {
        if frame.table.get(m, n).is_none() {
            return Err(ConicError::InvalidFrame(format!("table lacks S{m}{n}")));
        }
    }
    let mut r = Report::new("discriminant lemma");
    let k = kernel();

    // exact values of the u-only inner products
    let zero_products = [
        ("g11", "sum M_i", k.power_moment(0)),
        ("g1u", "sum M_i u_i", k.power_moment(1)),
        ("h1u", "sum M_i u_i^4", k.power_moment(4)),
        ("huu", "sum M_i u_i^5", k.power_moment(5)),
    ];
    for (_, what, p) in &zero_products {
        r.check(format!("{what} = 0 in the u-ring"), p.is_zero(), "");
    }
    let a2 = k.power_moment(2);
    let a3 = k.power_moment(3);
    r.check(
        "sum M_i u_i^2 = delta e2",
        k.div_delta(&a2).map(|q| q == *k.e(2)).unwrap_or(false),
        "",
    );
    r.check(
        "sum M_i u_i^3 = delta e3",
        k.div_delta(&a3).map(|q| q == *k.e(3)).unwrap_or(false),
        "",
    );

    let (vars, delta, delta2) = gram_discriminants();
    let g = QPoly::gens(&vars, &());
    let idx = |s: &str| vars.index(s).expect("gram symbol");
    let kill = |p: &QPoly| {
        let mut q = p.clone();
        for (s, _, _) in &zero_products {
            q = q.specialize(idx(s), &Rational::from(0));
        }
        q
    };
    let (x, y, z) = (&g[12], &g[13], &g[14]);
    let z2 = z.square();
    let delta_r_sym = &g[idx("gul")].square() - &(&g[idx("guu")] * &g[idx("gll")]);
    let delta2_r_sym = &g[idx("h1l")].square() - &(&g[idx("h11")] * &g[idx("hll")]);
    let res = kill(&(&delta - &(&delta_r_sym * &z2)));
    let want = (&(&(x * z) * &g[idx("guu")]) * &g[idx("g1l")]).scale(&Rational::from(-2));
    r.check(
        "Delta(xP+yQ+zR) - Delta(R) z^2 = -2xz (sum M_i u_i^2)(sum M_i l_i)",
        res == want,
        if res == want { String::new() } else { res.abbreviated(6) },
    );
    let res2 = kill(&(&delta2 - &(&delta2_r_sym * &z2)));
    let want2 = (&(&(y * z) * &g[idx("h11")]) * &g[idx("hul")]).scale(&Rational::from(-2));
    r.check(
        "Delta'(xP+yQ+zR) - Delta'(R) z^2 = -2yz (sum M_i u_i^3)(sum M_i u_i^4 l_i)",
        res2 == want2,
        if res2 == want2 {
            String::new()
        } else {
            res2.abbreviated(6)
        },
    );
    // Δ(Q), Δ′(P) vanish formally; Δ(P), Δ′(Q) by the kernel rows
    let at = |p: &QPoly, v: [i64; 3]| {
        let mut q = p.clone();
        for (i, c) in v.iter().enumerate() {
            q = q.specialize(12 + i, &Rational::from(*c));
        }
        q
    };
    r.check("Delta(Q) = 0", at(&delta, [0, 1, 0]).is_zero(), "");
    r.check("Delta'(P) = 0", at(&delta2, [1, 0, 0]).is_zero(), "");
    r.check("Delta(P) = 0", kill(&at(&delta, [1, 0, 0])).is_zero(), "");
    r.check("Delta'(Q) = 0", kill(&at(&delta2, [0, 1, 0])).is_zero(), "");

    // cross term over free M_i, u_i, l_i
    let mut cnames = Vec::new();
    for s in ["M", "u", "l"] {
        cnames.extend((0..5).map(|i| format!("{s}{i}")));
    }
    let cv = Vars::new(&cnames);
    let c = QPoly::gens(&cv, &());
    let (mm, uu, ll) = (&c[0..5], &c[5..10], &c[10..15]);
    let mut cross = c[0].zero_like();
    for i in 0..5 {
        for j in 0..i {
            let t = &(&mm[i] * &mm[j]) * &(&uu[i] - &uu[j]);
            cross = &cross + &(&t * &(&(&uu[i] * &ll[j]) - &(&uu[j] * &ll[i])));
        }
    }
    let sum = |f: &dyn Fn(usize) -> QPoly| (0..5).fold(c[0].zero_like(), |acc, i| &acc + &f(i));
    let s_uu = sum(&|i| &mm[i] * &uu[i].square());
    let s_l = sum(&|i| &mm[i] * &ll[i]);
    let s_u = sum(&|i| &mm[i] * &uu[i]);
    let s_ul = sum(&|i| &(&mm[i] * &uu[i]) * &ll[i]);
    let generic = &(&s_uu * &s_l) - &(&s_ul * &s_u);
    r.check(
        "sum_{i>j} M_i M_j (u_i-u_j)(u_i l_j-u_j l_i) = (sum M u^2)(sum M l) - (sum M u l)(sum M u)",
        cross == generic,
        "",
    );
    r.check(
        "cross-term sum = 0 on Lambda (sum M l = 0, sum M u = 0)",
        cross == generic && k.power_moment(1).is_zero(),
        "",
    );

    // the 2x2 system for l3, l4
    let u = crate::symfun::u_gens();
    let minor = &(&k.m[3] * &k.m[4]) * &(&u[4].pow(4) - &u[3].pow(4));
    if minor.is_zero() {
        return Err(ConicError::DegenerateExtension(
            "the l3, l4 elimination minor vanishes".into(),
        ));
    }
    r.check("elimination minor M3 M4 (u4^4 - u3^4) is nonzero", true, "");

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut done = 0;
    let mut tries = 0;
    while done < 3 && tries < 100 {
        tries += 1;
        let uvals: [Rational; 5] = std::array::from_fn(|_| Rational::from(rng.gen_range(-9i64..=9)));
        let m = kernel_coords(&uvals);
        let q4: Vec<Rational> = (0..5)
            .map(|i| m[i].clone() * crate::algebra::power(&uvals[i], 4))
            .collect();
        let det = m[3].clone() * q4[4].clone() - m[4].clone() * q4[3].clone();
        if det.is_zero_elem() || m.iter().all(|v| v.is_zero_elem()) {
            continue;
        }
        done += 1;
        let mut l: [Rational; 5] = std::array::from_fn(|_| Rational::from(rng.gen_range(-9i64..=9)));
        // m3 l3 + m4 l4 = -a, q3 l3 + q4 l4 = -b
        let a0 = -(0..3).fold(Rational::from(0), |s, i| s + m[i].clone() * l[i].clone());
        let b0 = -(0..3).fold(Rational::from(0), |s, i| s + q4[i].clone() * l[i].clone());
        let inv = det.inv_checked();
        l[3] = (a0.clone() * q4[4].clone() - m[4].clone() * b0.clone()) * inv.clone();
        l[4] = (m[3].clone() * b0 - a0 * q4[3].clone()) * inv;
        let ok = numeric_lemma(&uvals, &m, &l);
        r.check(format!("point {done}: Delta and Delta' restricted to Lambda"), ok, "");

        // the frame's own R at the same U
        let lr: [Rational; 5] = std::array::from_fn(|i| frame.l[i].eval(&uvals));
        let dl = vandermonde(&uvals);
        let s = frame.s_at(&uvals);
        let d2 = dl.clone() * dl.clone();
        let dr =
            inner(&m, &uvals, &lr, 1, 1).square_r() - inner(&m, &uvals, &uvals, 2, 0) * inner(&m, &uvals, &lr, 0, 2);
        r.check(
            format!("point {done}: Delta(R) = delta^2 (S11^2 - S20 S02)"),
            dr == d2.clone() * delta_r(&s),
            "",
        );
        let w3: [Rational; 5] = std::array::from_fn(|i| m[i].clone() * crate::algebra::power(&uvals[i], 3));
        let dpr = inner(&w3, &uvals, &lr, 0, 1).square_r()
            - w3.iter().fold(Rational::from(0), |a, b| a + b.clone()) * inner(&w3, &uvals, &lr, 0, 2);
        r.check(
            format!("point {done}: Delta'(R) = delta^2 (S31^2 - S30 S32)"),
            dpr == d2.clone() * delta_prime_r(&s),
            "",
        );
        // restriction of Γ_U: Σ M_i v_i² with v = x + u y + l z has
        // coefficients δ(0, 0, S20, 0, 2 S11, S02) on x², xy, y², xz, yz, z²
        let g_yy = inner(&m, &uvals, &uvals, 2, 0);
        let g_yz = inner(&m, &uvals, &lr, 1, 1);
        let g_zz = inner(&m, &uvals, &lr, 0, 2);
        let g_x = m.iter().fold(Rational::from(0), |a, b| a + b.clone());
        let g_xy = inner(&m, &uvals, &lr, 1, 0);
        let g_xz = inner(&m, &uvals, &lr, 0, 1);
        r.check(
            format!("point {done}: Gamma_U on Lambda = delta (S20 y^2 + 2 S11 yz + S02 z^2)"),
            g_x.is_zero_elem()
                && g_xy.is_zero_elem()
                && g_xz.is_zero_elem()
                && g_yy == dl.clone() * s.get(2, 0)
                && g_yz == dl.clone() * s.get(1, 1)
                && g_zz == dl * s.get(0, 2),
            "",
        );
    }
    if done < 3 {
        return Err(ConicError::DegenerateExtension(
            "no admissible random points for the l3, l4 elimination".into(),
        ));
    }
    Ok(r)
}

trait SquareR {
    fn square_r(&self) -> Self;
    fn inv_checked(&self) -> Self;
}

impl SquareR for Rational {
    fn square_r(&self) -> Self {
        self.clone() * self.clone()
    }
    fn inv_checked(&self) -> Self {
        crate::Scalar::inv(self).expect("nonzero")
    }
}

/// Σ_i w_i u_i^a l_i^b.
fn inner(w: &[Rational; 5], u: &[Rational; 5], l: &[Rational; 5], a: u32, b: u32) -> Rational {
    (0..5).fold(Rational::from(0), |acc, i| {
        acc + w[i].clone() * crate::algebra::power(&u[i], a) * crate::algebra::power(&l[i], b)
    })
}

fn vandermonde(u: &[Rational; 5]) -> Rational {
    let mut acc = Rational::from(1);
    for j in 0..5 {
        for k in 0..j {
            acc = acc * (u[j].clone() - u[k].clone());
        }
    }
    acc
}

/// Δ(xP+yQ+zR) − Δ(R) z² and the primed version, as polynomials in x, y, z
/// with rational coefficients, both zero.
fn numeric_lemma(u: &[Rational; 5], m: &[Rational; 5], l: &[Rational; 5]) -> bool {
    let vars = Vars::new(&["x", "y", "z"]);
    let g = QPoly::gens(&vars, &());
    let c = |v: &Rational| QPoly::constant(&vars, &(), v.clone());
    let v: Vec<QPoly> = (0..5)
        .map(|i| &(&g[0] + &(&g[1] * &c(&u[i]))) + &(&g[2] * &c(&l[i])))
        .collect();
    let sum = |f: &dyn Fn(usize) -> QPoly| (0..5).fold(g[0].zero_like(), |a, i| &a + &f(i));
    let u3: Vec<Rational> = (0..5).map(|i| crate::algebra::power(&u[i], 3)).collect();
    let delta = &sum(&|i| &v[i] * &c(&(m[i].clone() * u[i].clone()))).square()
        - &(&sum(&|i| c(&(m[i].clone() * u[i].clone() * u[i].clone()))) * &sum(&|i| &v[i].square() * &c(&m[i])));
    let delta2 = &sum(&|i| &v[i] * &c(&(m[i].clone() * u3[i].clone()))).square()
        - &(&sum(&|i| c(&(m[i].clone() * u3[i].clone())))
            * &sum(&|i| &v[i].square() * &c(&(m[i].clone() * u3[i].clone()))));
    let z2 = g[2].square();
    let dr = inner(m, u, l, 1, 1).square_r() - inner(m, u, u, 1, 1) * inner(m, u, l, 0, 2);
    let w3: [Rational; 5] = std::array::from_fn(|i| m[i].clone() * u3[i].clone());
    let dpr = inner(&w3, u, l, 0, 1).square_r()
        - w3.iter().fold(Rational::from(0), |a, b| a + b.clone()) * inner(&w3, u, l, 0, 2);
    (&delta - &(&z2 * &c(&dr))).is_zero() && (&delta2 - &(&z2 * &c(&dpr))).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cones_contain_their_vertices() {
        let (p, q) = tangent_cone_quadrics();
        let mut on_p = p.clone();
        for i in 0..5 {
            on_p = on_p.specialize(5 + i, &Rational::from(1));
        }
        assert!(on_p.is_zero());
        // v_i = u_i on Γ_ι(U) gives Σ M_i u_i^5
        let vars = q.vars().clone();
        let g = QPoly::gens(&vars, &());
        let mut images = g.clone();
        for i in 0..5 {
            images[5 + i] = g[i].clone();
        }
        assert!(q.compose(&images).unwrap().is_zero());
    }

    #[test]
    fn lemma_on_first_frame() {
        assert!(discriminant_check(&SimplexFrame::option1(2)).is_err());
        let f = SimplexFrame::option1(5);
        let r = discriminant_check(&f).unwrap();
        assert!(r.passed(), "{r}");
        let [a, b] = f.lambda_residuals();
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn explicit_frame_rejects_points_off_lambda() {
        let u = crate::symfun::u_gens();
        let sq: Vec<QPoly> = u.iter().map(|x| x.square()).collect();
        assert!(matches!(
            SimplexFrame::explicit(sq, 1),
            Err(ConicError::InvalidFrame(_))
        ));
        // Q itself lies in Λ
        let f = SimplexFrame::explicit(u, 2).unwrap();
        assert!(f.table_in_u(1, 1) == f.table_in_u(2, 0));
    }
}
