mod common;

use common::*;
use rand::Rng;
use segre_toolkit::groebner::{buchberger, elimination_ideal, is_groebner_basis, krull_dimension, Ideal};
use segre_toolkit::{MonomialOrder, Polynomial, VarContext};

#[test]
fn macaulay_oracle_sanity() {
    let ctx = VarContext::new(&["x", "y", "z"]).unwrap();
    let p = |s: &str| Polynomial::parse(&ctx, s).unwrap();
    assert!(macaulay_member(&p("x^2*y + y^3"), &[p("x^2 + y^2")]));
    assert!(!macaulay_member(&p("x^2*y"), &[p("x^2 + y^2")]));
    assert!(macaulay_member(&p("x*y*z"), &[p("x*y"), p("z^2")]));
}

#[test]
fn membership_agrees_with_macaulay() {
    let instances = membership_instances(11, 50);
    let mut members = 0;
    for (k, inst) in instances.iter().enumerate() {
        let ideal = Ideal::new(inst.f.context(), inst.gens.clone()).unwrap();
        let gb = ideal.contains(&inst.f).unwrap();
        assert_eq!(gb, macaulay_member(&inst.f, &inst.gens), "instance {k}: f = {}", inst.f);
        if inst.constructed_member {
            assert!(gb, "instance {k}");
        }
        members += gb as usize;
    }
    assert!((25..50).contains(&members), "{members} members");
}

#[test]
fn constructed_inhomogeneous_members() {
    let ctx = VarContext::new(&["x", "y", "z"]).unwrap();
    let mut r = rng(5);
    for _ in 0..30 {
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=3)).map(|_| random_poly(&mut r, &ctx, 3, 3)).collect();
        let mut f = Polynomial::zero(&ctx);
        for g in &gens {
            f = &f + &(&random_poly(&mut r, &ctx, 2, 2) * g);
        }
        let ideal = Ideal::new(&ctx, gens.clone()).unwrap();
        assert!(ideal.contains(&f).unwrap(), "{f} in {gens:?}");
    }
}

#[test]
fn reduced_basis_is_presentation_independent() {
    let mut r = rng(23);
    for (k, inst) in membership_instances(11, 50).iter().enumerate() {
        for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let reference = buchberger(&inst.gens, &ord).unwrap();
            assert!(is_groebner_basis(&reference, &ord));
            let expected = basis_string(&reference);
            for _ in 0..10 {
                let again = buchberger(&reshuffled(&mut r, &inst.gens), &ord).unwrap();
                assert_eq!(basis_string(&again), expected, "instance {k}");
            }
        }
    }
}

/// Largest `S` with `I ∩ k[S] = 0`, by elimination.
fn brute_force_dimension(ideal: &Ideal) -> i64 {
    if ideal.is_unit().unwrap() {
        return -1;
    }
    let names: Vec<&str> = ideal.context().names().iter().map(|s| s.as_str()).collect();
    let n = names.len();
    (0..1u32 << n)
        .filter(|mask| {
            let keep: Vec<&str> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| names[i]).collect();
            elimination_ideal(ideal, &keep).unwrap().is_zero_ideal()
        })
        .map(|mask| mask.count_ones() as i64)
        .max()
        .unwrap()
}

#[test]
fn krull_dimension_matches_elimination_oracle() {
    for (name, text) in EXAMPLES {
        let c = variety(text).complexification();
        assert_eq!(krull_dimension(&c).unwrap(), brute_force_dimension(&c), "{name}");
    }
    let ctx = VarContext::new(&["x", "y", "z"]).unwrap();
    let mut r = rng(99);
    for _ in 0..25 {
        let gens: Vec<Polynomial> = (0..r.gen_range(1..=3)).map(|_| random_poly(&mut r, &ctx, 2, 3)).collect();
        let ideal = Ideal::new(&ctx, gens).unwrap();
        assert_eq!(krull_dimension(&ideal).unwrap(), brute_force_dimension(&ideal));
    }
}
