use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::buchberger::{buchberger_with_limits, normal_form, Limits};
use crate::error::{Error, Result};
use crate::polyring::{MonomialOrder, Polynomial, VarContext};

/// A polynomial ideal given by generators, with a per-order memo of reduced
/// Gröbner bases.
///
/// The memo is write-once per order: a reader either finds no entry or a
/// complete reduced basis. Reduced bases are unique, so racing writers would
/// store identical values; the first insert wins.
pub struct Ideal {
    ctx: VarContext,
    gens: Vec<Polynomial>,
    limits: Limits,
    cache: RwLock<HashMap<MonomialOrder, Arc<[Polynomial]>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            limits: self.limits,
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must live in `ctx`.
    pub fn new(ctx: &VarContext, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| g.context() != ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            limits: Limits::default(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// The zero ideal, whose variety is the whole space.
    pub fn zero(ctx: &VarContext) -> Self {
        Ideal::new(ctx, Vec::new()).expect("no generators")
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn context(&self) -> &VarContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// A new ideal with extra generators, sharing the work limits.
    pub fn extended(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ok(Ideal::new(&self.ctx, gens)?.with_limits(self.limits))
    }

    /// Reduced Gröbner basis under `ord`, computed once and memoized.
    pub fn groebner_basis(&self, ord: &MonomialOrder) -> Result<Arc<[Polynomial]>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(ord) {
            return Ok(gb.clone());
        }
        let gb: Arc<[Polynomial]> = buchberger_with_limits(&self.gens, ord, self.limits)?.into();
        let mut cache = self.cache.write().expect("cache lock");
        Ok(cache.entry(ord.clone()).or_insert(gb).clone())
    }

    /// The reduced grevlex basis, used as the canonical generator list.
    pub fn reduced_generators(&self) -> Result<Vec<Polynomial>> {
        Ok(self.groebner_basis(&MonomialOrder::Grevlex)?.to_vec())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.context() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let gb = self.groebner_basis(&MonomialOrder::Grevlex)?;
        if gb.is_empty() {
            return Ok(f.is_zero());
        }
        Ok(normal_form(f, &gb, &MonomialOrder::Grevlex)?.is_zero())
    }

    /// Whether the ideal is `(0)`.
    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether `1 ∈ I`, i.e. the variety is empty.
    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner_basis(&MonomialOrder::Grevlex)?;
        Ok(gb.iter().any(|g| g.is_constant()))
    }

    /// Equality as ideals (mutual containment); contexts must agree.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        Ok(self.groebner_basis(&MonomialOrder::Grevlex)?
            == other.groebner_basis(&MonomialOrder::Grevlex)?)
    }

    /// `I ∩ k[keep]` as an ideal in the context of the kept variables
    /// (original relative order; the pairing survives when `keep` is closed
    /// under it). Computed with a block order that puts the eliminated
    /// variables first.
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal> {
        let n = self.ctx.len();
        let mut kept = vec![false; n];
        for &k in keep {
            if k >= n {
                return Err(Error::UnknownVariable(format!("#{k}")));
            }
            kept[k] = true;
        }
        let sub = self.sub_context(&kept)?;
        let eliminated: Vec<usize> = (0..n).filter(|&i| !kept[i]).collect();
        if eliminated.is_empty() {
            let gens = self.gens.iter().map(|g| g.embed(&sub)).collect::<Result<Vec<_>>>()?;
            return Ok(Ideal::new(&sub, gens)?.with_limits(self.limits));
        }
        let ord = MonomialOrder::eliminating(&eliminated, n);
        let gb = self.groebner_basis(&ord)?;
        let mut gens = Vec::new();
        for g in gb.iter() {
            if g.only_involves(|v| kept[v]) {
                gens.push(g.embed(&sub)?);
            }
        }
        // The surviving elements are already the reduced grevlex basis of the
        // elimination ideal: the block order restricts to grevlex on `keep`.
        gens.sort_by(|a, b| {
            let ga = a.leading_term(&MonomialOrder::Grevlex).expect("nonzero").0;
            let gb = b.leading_term(&MonomialOrder::Grevlex).expect("nonzero").0;
            MonomialOrder::Grevlex.cmp(&ga, &gb)
        });
        let ideal = Ideal::new(&sub, gens.clone())?.with_limits(self.limits);
        ideal
            .cache
            .write()
            .expect("cache lock")
            .insert(MonomialOrder::Grevlex, gens.into());
        Ok(ideal)
    }

    /// [`Ideal::eliminate`] with variables given by name.
    pub fn eliminate_names(&self, keep: &[&str]) -> Result<Ideal> {
        let idx = keep.iter().map(|n| self.ctx.require(n)).collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx)
    }

    fn sub_context(&self, kept: &[bool]) -> Result<VarContext> {
        let old_to_new: Vec<Option<usize>> = {
            let mut next = 0;
            kept.iter()
                .map(|&k| {
                    k.then(|| {
                        next += 1;
                        next - 1
                    })
                })
                .collect()
        };
        let names: Vec<String> = (0..kept.len())
            .filter(|&i| kept[i])
            .map(|i| self.ctx.name(i).to_string())
            .collect();
        if kept.iter().all(|&k| k) {
            return Ok(self.ctx.clone());
        }
        if self.ctx.has_pairing() {
            let closed = (0..kept.len())
                .all(|i| !kept[i] || kept[self.ctx.partner(i).expect("paired")]);
            if closed {
                let pairs: Vec<(usize, usize)> = self
                    .ctx
                    .holomorphic()?
                    .into_iter()
                    .filter(|&z| kept[z])
                    .map(|z| {
                        let xi = self.ctx.partner(z).expect("paired");
                        (old_to_new[z].expect("kept"), old_to_new[xi].expect("kept"))
                    })
                    .collect();
                return VarContext::with_pairing(names, &pairs);
            }
        }
        VarContext::new(&names)
    }

    /// Krull dimension of `V(I)` over ℂ: the largest set of variables that
    /// contains the support of no leading monomial of the reduced grevlex
    /// basis. `-1` for the unit ideal.
    pub fn dimension(&self) -> Result<i64> {
        let n = self.ctx.len();
        if n > 24 {
            return Err(Error::LimitExceeded(format!(
                "dimension search over {n} variables"
            )));
        }
        let gb = self.groebner_basis(&MonomialOrder::Grevlex)?;
        if gb.iter().any(|g| g.is_constant()) {
            return Ok(-1);
        }
        let lead_masks: Vec<u32> = gb
            .iter()
            .map(|g| {
                let (m, _) = g.leading_term(&MonomialOrder::Grevlex).expect("nonzero");
                m.support().fold(0u32, |acc, v| acc | (1 << v))
            })
            .collect();
        let best = (0u32..(1u32 << n))
            .filter(|s| lead_masks.iter().all(|lm| lm & !s != 0))
            .map(|s| s.count_ones())
            .max()
            .unwrap_or(0);
        Ok(best as i64)
    }

    /// Whether `V(I)` is finite over the coordinates not in `eliminated`:
    /// under the block order with `eliminated` first, every eliminated
    /// variable has a pure power among the leading monomials.
    pub fn finite_over_kept_vars(&self, eliminated: &[usize]) -> Result<bool> {
        let n = self.ctx.len();
        if eliminated.iter().any(|&v| v >= n) {
            return Err(Error::UnknownVariable("eliminated index out of range".into()));
        }
        if eliminated.is_empty() {
            return Ok(true);
        }
        let ord = MonomialOrder::eliminating(eliminated, n);
        let gb = self.groebner_basis(&ord)?;
        let pure: Vec<usize> = gb
            .iter()
            .filter_map(|g| g.leading_term(&ord).ok())
            .filter_map(|(m, _)| if m.is_one() { None } else { m.pure_power_var() })
            .collect();
        if gb.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(eliminated.iter().all(|v| pure.contains(v)))
    }
}

/// `f ∈ I`.
pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

/// `I ∩ k[keep]`, see [`Ideal::eliminate`].
pub fn elimination_ideal(ideal: &Ideal, keep: &[&str]) -> Result<Ideal> {
    ideal.eliminate_names(keep)
}

/// See [`Ideal::dimension`].
pub fn krull_dimension(ideal: &Ideal) -> Result<i64> {
    ideal.dimension()
}

/// See [`Ideal::finite_over_kept_vars`].
pub fn finite_over_kept_vars(ideal: &Ideal, eliminated: &[&str]) -> Result<bool> {
    let idx = eliminated
        .iter()
        .map(|n| ideal.context().require(n))
        .collect::<Result<Vec<_>>>()?;
    ideal.finite_over_kept_vars(&idx)
}
