//! Buchberger's algorithm with the Gebauer–Möller pair update (coprime and
//! chain criteria) and normal pair selection.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::coeff::GaussianRational;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, VarContext};

/// Polynomial with terms sorted ascending under a fixed order, so the
/// leading term is the last element.
#[derive(Clone, Debug)]
pub(crate) struct Sorted {
    terms: Vec<(Monomial, GaussianRational)>,
}

impl Sorted {
    pub(crate) fn new(p: &Polynomial, ord: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        Sorted { terms }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn lc(&self) -> &GaussianRational {
        &self.terms.last().expect("nonzero").1
    }

    fn make_monic(&mut self) {
        if let Some(inv) = self.terms.last().and_then(|(_, c)| c.inv()) {
            if !inv.is_one() {
                for (_, c) in &mut self.terms {
                    *c = &*c * &inv;
                }
            }
        }
    }

    pub(crate) fn into_poly(self, ctx: &VarContext) -> Polynomial {
        Polynomial::from_terms(ctx, self.terms)
    }

    /// `self - c·m·g`, merging two ascending lists.
    fn sub_scaled(&mut self, c: &GaussianRational, m: &Monomial, g: &Sorted, ord: &MonomialOrder) {
        let a = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut ia = a.into_iter().peekable();
        let mut ib = g.terms.iter().map(|(t, d)| (t.mul(m), -(d * c))).peekable();
        loop {
            let step = match (ia.peek(), ib.peek()) {
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match step {
                Ordering::Less => out.push(ia.next().unwrap()),
                Ordering::Greater => out.push(ib.next().unwrap()),
                Ordering::Equal => {
                    let (mx, cx) = ia.next().unwrap();
                    let (_, cy) = ib.next().unwrap();
                    let s = &cx + &cy;
                    if !s.is_zero() {
                        out.push((mx, s));
                    }
                }
            }
        }
        self.terms = out;
    }
}

/// Fully reduce `f` modulo `divisors` (every term, not only the leading one).
pub(crate) fn reduce(f: Sorted, divisors: &[&Sorted], ord: &MonomialOrder) -> Sorted {
    let mut p = f;
    let mut rem: Vec<(Monomial, GaussianRational)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last().cloned() {
        match divisors.iter().find(|g| g.lm().divides(&lm)) {
            Some(g) => {
                let q = g.lm().quotient_of(&lm).expect("divides");
                let c = &lc / g.lc();
                p.sub_scaled(&c, &q, g, ord);
            }
            None => {
                p.terms.pop();
                rem.push((lm, lc));
            }
        }
    }
    rem.reverse();
    Sorted { terms: rem }
}

/// Multivariate division remainder of `f` by `basis` under `ord`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    let mut sorted = Vec::with_capacity(basis.len());
    for b in basis {
        if b.context() != f.context() {
            return Err(Error::ContextMismatch);
        }
        if b.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        sorted.push(Sorted::new(b, ord));
    }
    let refs: Vec<&Sorted> = sorted.iter().collect();
    Ok(reduce(Sorted::new(f, ord), &refs, ord).into_poly(f.context()))
}

fn s_polynomial(f: &Sorted, g: &Sorted, ord: &MonomialOrder) -> Sorted {
    let lcm = f.lm().lcm(g.lm());
    let mf = f.lm().quotient_of(&lcm).expect("lcm");
    let mg = g.lm().quotient_of(&lcm).expect("lcm");
    let mut s = Sorted {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c / f.lc())).collect(),
    };
    s.sub_scaled(&g.lc().inv().expect("nonzero"), &mg, g, ord);
    s
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Bounds on the amount of work a Gröbner computation may do.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Limits {
    /// Maximum number of S-pairs reduced before giving up.
    pub max_pairs: Option<usize>,
}

struct State<'a> {
    ord: &'a MonomialOrder,
    polys: Vec<Sorted>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn active_refs(&self) -> Vec<&Sorted> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p).collect()
    }

    /// Gebauer–Möller update after inserting polynomial `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let candidates: Vec<Pair> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| Pair { i: g, j: h, lcm: self.polys[g].lm().lcm(&lm_h) })
            .collect();

        let coprime = |p: &Pair| self.polys[p.i].lm().is_coprime(&lm_h);
        let mut pending: std::collections::VecDeque<Pair> = candidates.into();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = pending.pop_front() {
            let dominated = pending.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime(&p) || !dominated {
                kept.push(p);
            }
        }
        let fresh: Vec<Pair> = kept.into_iter().filter(|p| !coprime(p)).collect();

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && polys[p.i].lm().lcm(&lm_h) != p.lcm
                && polys[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        self.pairs.extend(fresh);

        for g in 0..h {
            if self.active[g] && lm_h.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    /// Index of the pair with the smallest lcm (ties by insertion order).
    fn select(&self) -> Option<usize> {
        (0..self.pairs.len()).min_by(|&a, &b| {
            self.ord
                .cmp(&self.pairs[a].lcm, &self.pairs[b].lcm)
                .then((self.pairs[a].i, self.pairs[a].j).cmp(&(self.pairs[b].i, self.pairs[b].j)))
        })
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted ascending
/// by leading monomial under `ord`, every element monic.
pub fn buchberger(gens: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    buchberger_with_limits(gens, ord, Limits::default())
}

pub fn buchberger_with_limits(
    gens: &[Polynomial],
    ord: &MonomialOrder,
    limits: Limits,
) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ctx = first.context().clone();
    if gens.iter().any(|g| g.context() != &ctx) {
        return Err(Error::ContextMismatch);
    }

    let mut state = State { ord, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    // Insert generators one at a time, reducing each against what is there.
    let mut input: Vec<Sorted> = gens.iter().filter(|g| !g.is_zero()).map(|g| Sorted::new(g, ord)).collect();
    input.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    for g in input {
        let mut h = reduce(g, &state.active_refs(), ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            return Ok(vec![Polynomial::one(&ctx)]);
        }
        state.polys.push(h);
        state.active.push(false);
        let idx = state.polys.len() - 1;
        state.update(idx);
    }

    let mut processed = 0usize;
    while let Some(k) = state.select() {
        let pair = state.pairs.swap_remove(k);
        processed += 1;
        if let Some(max) = limits.max_pairs {
            if processed > max {
                return Err(Error::LimitExceeded(format!(
                    "more than {max} S-pairs processed in Buchberger's algorithm"
                )));
            }
        }
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j], ord);
        let mut h = reduce(s, &state.active_refs(), ord);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            return Ok(vec![Polynomial::one(&ctx)]);
        }
        state.polys.push(h);
        state.active.push(false);
        let idx = state.polys.len() - 1;
        state.update(idx);
    }

    // Active elements have pairwise non-dividing leading monomials; reduce tails.
    let minimal: Vec<Sorted> = state
        .polys
        .into_iter()
        .zip(state.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (k, g) in minimal.iter().enumerate() {
        let others: Vec<&Sorted> =
            minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p).collect();
        let mut lead = g.clone();
        let head = lead.terms.pop().expect("nonzero");
        let mut tail = reduce(lead, &others, ord);
        tail.terms.push(head);
        tail.make_monic();
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));
    Ok(reduced.into_iter().map(|s| s.into_poly(&ctx)).collect())
}

/// Whether every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial], ord: &MonomialOrder) -> bool {
    let sorted: Vec<Sorted> = basis.iter().filter(|b| !b.is_zero()).map(|b| Sorted::new(b, ord)).collect();
    let refs: Vec<&Sorted> = sorted.iter().collect();
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let s = s_polynomial(&sorted[i], &sorted[j], ord);
            if !reduce(s, &refs, ord).is_zero() {
                return false;
            }
        }
    }
    true
}
