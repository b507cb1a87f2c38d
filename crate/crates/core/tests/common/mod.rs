//! Example varieties, seeded samplers and independent oracles shared by the
//! integration tests.
#![allow(dead_code)]

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use segre_toolkit::variety::{Point, RealVariety};
use segre_toolkit::{GaussianRational as Q, Monomial, Polynomial, VarContext};

pub const CONE: &str = "vars: z, w\neq: z*conj(z) - w*conj(w) = 0\n";
pub const SURFACE: &str = "vars: z, w\neq: w = z*conj(z)\n";
pub const MAX_ND: &str = "vars: z, w\neq: w = z^2 + conj(z)^2\n";
pub const UMBRELLA: &str = "vars: z, w\nrealvars: x y, s t\neq: (x^2 + y^2)*s = x^3\n";
pub const POWERS: &str = "vars: z, w1, w2\neq: w1 = z^2*conj(z)^2\neq: w2 = z^3*conj(z)^3\n";
pub const NONCOHERENT: &str = "vars: z, w\neq: w^3*conj(z)^3 + 3*w^2*conj(w)*z*conj(z)^2 \
    + 3*w*conj(w)^2*z^2*conj(z) - 8*w^2*conj(w)^2*z*conj(z) + conj(w)^3*z^3\n";
pub const BIHOM: &str = "vars: z1, z2, z3\neq: (z1 - conj(z3))*z1^2 + conj(z3)*z2^2 \
    + (conj(z1) - z3)*conj(z1)^2 + z3*conj(z2)^2\n";
pub const REAL_LINE: &str = "vars: z\neq: z = conj(z)\n";
pub const REAL_PLANE: &str = "vars: z, w\neq: z = conj(z)\neq: w = conj(w)\n";

pub const EXAMPLES: [(&str, &str); 9] = [
    ("cone", CONE),
    ("surface", SURFACE),
    ("max_nondegenerate", MAX_ND),
    ("umbrella", UMBRELLA),
    ("powers", POWERS),
    ("noncoherent", NONCOHERENT),
    ("bihomogenized", BIHOM),
    ("real_line", REAL_LINE),
    ("real_plane", REAL_PLANE),
];

pub fn variety(text: &str) -> RealVariety {
    RealVariety::parse(text).expect("example parses")
}

pub fn pt(s: &str) -> Point {
    Point::parse(s).expect("point parses")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// A Gaussian rational with small numerators and denominators.
pub fn small_rational(r: &mut impl Rng) -> Q {
    let re = Q::from_ratio(r.gen_range(-5..=5), r.gen_range(1..=4));
    let im = Q::from_ratio(r.gen_range(-5..=5), r.gen_range(1..=4));
    re + im * Q::i()
}

pub fn small_gaussian_integer(r: &mut impl Rng) -> Q {
    Q::from_parts((r.gen_range(-3..=3), 1), (r.gen_range(-3..=3), 1))
}

fn nonzero_gaussian(r: &mut impl Rng) -> Q {
    loop {
        let c = small_gaussian_integer(r);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_point(r: &mut impl Rng, n: usize) -> Point {
    Point::new((0..n).map(|_| small_rational(r)).collect())
}

/// `(1 − t² + 2ti)/(1 + t²)`, a rational point of the unit circle.
pub fn unit(r: &mut impl Rng) -> Q {
    let t = Q::from_ratio(r.gen_range(-6..=6), r.gen_range(1..=5));
    let t2 = &t * &t;
    let num = &(&q(1) - &t2) + &(&(&t * &q(2)) * &Q::i());
    &num / &(&q(1) + &t2)
}

fn re(c: &Q) -> Q {
    Q::new(c.re().clone(), Zero::zero())
}

fn im(c: &Q) -> Q {
    Q::new(c.im().clone(), Zero::zero())
}

/// Rational points constructed to lie on the named example.
pub fn points_on(name: &str, r: &mut impl Rng) -> Point {
    let z = small_rational(r);
    let coords = match name {
        "cone" => vec![z.clone(), &z * &unit(r)],
        "surface" => vec![z.clone(), Q::new(z.norm_sqr(), Zero::zero())],
        "max_nondegenerate" => {
            let z2 = &z * &z;
            vec![z.clone(), &z2 + &z2.conj()]
        }
        "umbrella" => {
            let (x, y) = (re(&z), im(&z));
            let nrm = &(&x * &x) + &(&y * &y);
            let t = im(&small_rational(r));
            let s = if nrm.is_zero() { small_rational(r) } else { &x.pow(3) / &nrm };
            let s = re(&s);
            vec![z.clone(), &s + &(&t * &Q::i())]
        }
        "powers" => {
            let m = Q::new(z.norm_sqr(), Zero::zero());
            vec![z.clone(), m.pow(2), m.pow(3)]
        }
        "noncoherent" => {
            let t = re(&z);
            vec![t.clone(), t]
        }
        "bihomogenized" => {
            let (a, b) = (re(&z), im(&z));
            let d = &(&a * &a) - &(&b * &b);
            if r.gen_bool(0.5) || d.is_zero() {
                vec![q(0), q(0), small_rational(r)]
            } else {
                vec![a.clone(), b, &a.pow(3) / &d]
            }
        }
        "real_line" => vec![re(&z)],
        "real_plane" => vec![re(&z), im(&z)],
        other => panic!("no sampler for {other}"),
    };
    Point::new(coords)
}

/// Random homogeneous polynomial of degree `deg` with `nterms` terms.
pub fn random_homogeneous(r: &mut impl Rng, ctx: &VarContext, deg: u32, nterms: usize) -> Polynomial {
    let monos = monomials_of_degree(ctx.len(), deg);
    let terms = (0..nterms).map(|_| {
        let m = monos.choose(r).unwrap().clone();
        (m, nonzero_gaussian(r))
    });
    Polynomial::from_terms(ctx, terms)
}

/// Random dense-ish polynomial of total degree at most `deg`.
pub fn random_poly(r: &mut impl Rng, ctx: &VarContext, deg: u32, nterms: usize) -> Polynomial {
    let monos: Vec<Monomial> = (0..=deg).flat_map(|d| monomials_of_degree(ctx.len(), d)).collect();
    let terms = (0..nterms).map(|_| (monos.choose(r).unwrap().clone(), small_gaussian_integer(r)));
    Polynomial::from_terms(ctx, terms)
}

pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    fn go(nvars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(deg);
            out.push(Monomial::from_exponents(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=deg).rev() {
            prefix.push(e);
            go(nvars, deg - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if deg == 0 {
            out.push(Monomial::from_exponents(vec![]));
        }
        return out;
    }
    go(nvars, deg, &mut Vec::new(), &mut out);
    out
}

/// Whether `v` lies in the row span of `rows`, by Gaussian elimination.
pub fn in_span(rows: &[Vec<Q>], v: &[Q]) -> bool {
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
    let reduce = |basis: &[(usize, Vec<Q>)], mut row: Vec<Q>| -> Vec<Q> {
        for (piv, b) in basis {
            if !row[*piv].is_zero() {
                let f = row[*piv].clone();
                for (x, y) in row.iter_mut().zip(b) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        row
    };
    for row in rows {
        let row = reduce(&basis, row.clone());
        if let Some(piv) = row.iter().position(|c| !c.is_zero()) {
            let inv = row[piv].inv().unwrap();
            let row: Vec<Q> = row.iter().map(|c| c * &inv).collect();
            for (_, b) in basis.iter_mut() {
                if !b[piv].is_zero() {
                    let f = b[piv].clone();
                    for (x, y) in b.iter_mut().zip(&row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            basis.push((piv, row));
        }
    }
    reduce(&basis, v.to_vec()).iter().all(|c| c.is_zero())
}

/// Membership of a homogeneous `f` in the ideal of homogeneous `gens`,
/// decided in the degree-`deg f` Macaulay matrix.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial]) -> bool {
    if f.is_zero() {
        return true;
    }
    let ctx = f.context();
    let d = f.total_degree() as u32;
    let cols = monomials_of_degree(ctx.len(), d);
    let index = |m: &Monomial| cols.iter().position(|c| c == m).expect("homogeneous input");
    let vector = |p: &Polynomial| {
        let mut v = vec![Q::zero(); cols.len()];
        for (m, c) in p.terms() {
            v[index(m)] = c.clone();
        }
        v
    };
    let mut rows = Vec::new();
    for g in gens {
        let gd = g.total_degree() as u32;
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(ctx.len(), d - gd) {
            rows.push(vector(&g.mul_monomial(&m)));
        }
    }
    in_span(&rows, &vector(f))
}

pub struct MembershipInstance {
    pub gens: Vec<Polynomial>,
    pub f: Polynomial,
    pub constructed_member: bool,
}

/// Homogeneous instances in 3 variables with generators of degree ≤ 3;
/// even-numbered ones are built as `Σ h_i g_i`.
pub fn membership_instances(seed: u64, count: usize) -> Vec<MembershipInstance> {
    let ctx = VarContext::new(&["x", "y", "z"]).unwrap();
    let mut r = rng(seed);
    (0..count)
        .map(|k| {
            let ngens = r.gen_range(1..=3);
            let gens: Vec<Polynomial> = (0..ngens)
                .map(|_| {
                    let (d, nterms) = (r.gen_range(1..=3), r.gen_range(1..=3));
                    random_homogeneous(&mut r, &ctx, d, nterms)
                })
                .filter(|g| !g.is_zero())
                .collect();
            let target_deg = 3 + r.gen_range(0..=1);
            if k % 2 == 0 {
                let mut f = Polynomial::zero(&ctx);
                for g in &gens {
                    let gd = g.total_degree() as u32;
                    if gd <= target_deg {
                        let h = random_homogeneous(&mut r, &ctx, target_deg - gd, 2);
                        f = &f + &(&h * g);
                    }
                }
                MembershipInstance { gens, f, constructed_member: true }
            } else {
                let nterms = r.gen_range(1..=4);
                let f = random_homogeneous(&mut r, &ctx, target_deg, nterms);
                MembershipInstance { gens, f, constructed_member: false }
            }
        })
        .collect()
}

/// Same ideal, different presentation: shuffled, with scaled duplicates.
pub fn reshuffled(r: &mut impl Rng, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = gens.to_vec();
    for g in gens {
        if r.gen_bool(0.3) {
            out.push(g.scale(&nonzero_gaussian(r)));
        }
    }
    if gens.len() >= 2 && r.gen_bool(0.5) {
        out.push(&gens[0] + &gens[1]);
    }
    out.shuffle(r);
    out
}

pub fn basis_string(gens: &[Polynomial]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("; ")
}
