use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, VarContext};
use crate::coeff::GaussianRational;
use crate::error::{Error, Result};

/// Value assigned to a variable by [`Polynomial::substitute`].
#[derive(Clone, Debug)]
pub enum Subst {
    Const(GaussianRational),
    Poly(Polynomial),
}

impl From<GaussianRational> for Subst {
    fn from(c: GaussianRational) -> Self {
        Subst::Const(c)
    }
}

impl From<Polynomial> for Subst {
    fn from(p: Polynomial) -> Self {
        Subst::Poly(p)
    }
}

/// Sparse polynomial over ℚ(i).
///
/// Terms are kept sorted in descending grevlex order with no zero
/// coefficients, so structural equality is polynomial equality and
/// iteration order is reproducible.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: VarContext,
    terms: Vec<(Monomial, GaussianRational)>,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(a, b)
}

impl Polynomial {
    pub fn zero(ctx: &VarContext) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &VarContext) -> Self {
        Self::constant(ctx, GaussianRational::one())
    }

    pub fn constant(ctx: &VarContext, c: GaussianRational) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn monomial(ctx: &VarContext, m: Monomial, c: GaussianRational) -> Self {
        debug_assert_eq!(m.len(), ctx.len());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ctx: ctx.clone(), terms }
    }

    /// The variable at index `i`.
    pub fn var_at(ctx: &VarContext, i: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.len(), i, 1), GaussianRational::one())
    }

    pub fn var(ctx: &VarContext, name: &str) -> Result<Self> {
        Ok(Self::var_at(ctx, ctx.require(name)?))
    }

    /// Build from arbitrary terms; duplicates are summed and zeros dropped.
    pub fn from_terms<I>(ctx: &VarContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut acc: HashMap<Monomial, GaussianRational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ctx.len());
            *acc.entry(m).or_insert_with(GaussianRational::zero) += &c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
        Polynomial { ctx: ctx.clone(), terms }
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Whether variable `i` occurs with a positive exponent.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[i] > 0)
    }

    /// Whether every occurring variable satisfies `allowed`.
    pub fn only_involves(&self, allowed: impl Fn(usize) -> bool) -> bool {
        self.terms.iter().all(|(m, _)| m.support().all(&allowed))
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms
            .binary_search_by(|(t, _)| canonical_cmp(m, t))
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| GaussianRational::zero())
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut acc: HashMap<Monomial, GaussianRational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                *acc.entry(m).or_insert_with(GaussianRational::zero) += &(ca * cb);
            }
        }
        Ok(Polynomial::from_terms(&self.ctx, acc))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &GaussianRational| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match canonical_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial { ctx: self.ctx.clone(), terms: out }
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn try_pow(&self, exp: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ctx);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        self.try_pow(exp).expect("polynomial degree overflow")
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(Monomial, GaussianRational)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Divide by the leading coefficient under `ord`. Zero stays zero.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            Ok((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            Err(_) => self.clone(),
        }
    }

    /// Conjugate every coefficient, leaving monomials alone.
    pub fn conj_coeffs(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Rename variables: exponent of variable `i` moves to `perm[i]` in
    /// `target`, which must have the same number of variables.
    pub fn permute_vars(&self, perm: &[usize], target: &VarContext) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())),
        )
    }

    /// Re-express in `target` by matching variable names. Variables that
    /// occur must exist in `target`.
    pub fn embed(&self, target: &VarContext) -> Result<Polynomial> {
        if &self.ctx == target {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> =
            self.ctx.names().iter().map(|n| target.index_of(n)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownVariable(self.ctx.name(i).into()))?;
                e[j] = x;
            }
            terms.push((Monomial::from_exponents(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Substitute variables by name. Unassigned variables pass through;
    /// polynomial values must live in this polynomial's context.
    pub fn substitute(&self, assignment: &[(&str, Subst)]) -> Result<Polynomial> {
        let mut by_index: Vec<Option<Polynomial>> = vec![None; self.ctx.len()];
        for (name, value) in assignment {
            let i = self.ctx.require(name)?;
            let p = match value {
                Subst::Const(c) => Polynomial::constant(&self.ctx, c.clone()),
                Subst::Poly(p) => {
                    self.check_ctx(p)?;
                    p.clone()
                }
            };
            by_index[i] = Some(p);
        }
        self.substitute_indexed(&by_index)
    }

    /// Substitute by variable index; `None` leaves a variable unchanged.
    pub fn substitute_indexed(&self, values: &[Option<Polynomial>]) -> Result<Polynomial> {
        debug_assert_eq!(values.len(), self.ctx.len());
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut kept = vec![0u32; self.ctx.len()];
            let mut term = Polynomial::constant(&self.ctx, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &values[i] {
                    None => kept[i] = e,
                    Some(v) => {
                        let pw = match powers.get(&(i, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = v.try_pow(e)?;
                                powers.insert((i, e), p.clone());
                                p
                            }
                        };
                        term = term.try_mul(&pw)?;
                    }
                }
                if term.is_zero() {
                    break;
                }
            }
            let term = term.mul_monomial(&Monomial::from_exponents(kept));
            acc = acc.merge(&term, false);
        }
        Ok(acc)
    }

    /// Replace variable `i` by `values[i]`, producing a polynomial in
    /// `target`. Every value must live in `target`.
    pub fn compose(&self, target: &VarContext, values: &[Polynomial]) -> Result<Polynomial> {
        if values.len() != self.ctx.len() {
            return Err(Error::ContextMismatch);
        }
        if values.iter().any(|v| v.context() != target) {
            return Err(Error::ContextMismatch);
        }
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = match powers.entry((i, e)) {
                    std::collections::hash_map::Entry::Occupied(o) => o.into_mut(),
                    std::collections::hash_map::Entry::Vacant(v) => v.insert(values[i].try_pow(e)?),
                };
                term = term.try_mul(pw)?;
            }
            acc = acc.merge(&term, false);
        }
        Ok(acc)
    }

    /// Evaluate at a full point given in context order.
    pub fn evaluate(&self, point: &[GaussianRational]) -> GaussianRational {
        debug_assert_eq!(point.len(), self.ctx.len());
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exponents()[i] > 0).map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            let k = e[i];
            e[i] -= 1;
            (Monomial::from_exponents(e), c * &GaussianRational::from_integer(k as i64))
        });
        Polynomial::from_terms(&self.ctx, terms)
    }

    fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical text: terms in descending grevlex, coefficients as
/// `a/b+c/d*i`, re-parseable by the equation parser.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let several = self.terms.len() > 1;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative_simple();
            let c = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                if c.is_compound() && several {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
                continue;
            }
            if c.is_compound() {
                write!(f, "({c})*")?;
            } else if !c.is_one() {
                write!(f, "{c}*")?;
            }
            self.fmt_monomial(m, f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on context mismatch; use the `try_` variant to handle it.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).expect("polynomial arithmetic")
            }
        }
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
