use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Prefix used for the antiholomorphic twin of a variable unless a name is
/// given explicitly.
pub const TWIN_PREFIX: &str = "xi_";

/// Role of a variable in a paired context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    /// A holomorphic coordinate `z_j`; holds the index of its twin.
    Holomorphic(usize),
    /// The complexified conjugate `ξ_j`; holds the index of `z_j`.
    Antiholomorphic(usize),
}

struct ContextData {
    names: Vec<String>,
    slots: Option<Vec<Slot>>,
    index: HashMap<String, usize>,
}

impl std::hash::Hash for VarContext {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.names.hash(state);
        self.0.slots.hash(state);
    }
}

/// Ordered list of variable names, optionally with a perfect matching
/// `z_j ↔ ξ_j`. Index order is the canonical variable order
/// (index 0 is the largest variable).
///
/// Cloning is cheap; contexts compare by value.
#[derive(Clone)]
pub struct VarContext(Arc<ContextData>);

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.names == other.0.names && self.0.slots == other.0.slots)
    }
}

impl Eq for VarContext {}

impl VarContext {
    /// Unpaired context.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::build(names.iter().map(|s| s.as_ref().to_string()).collect(), None)
    }

    /// Paired context `z_1..z_n, ξ_1..ξ_n` with default twin names `xi_<z>`.
    pub fn paired<S: AsRef<str>>(holomorphic: &[S]) -> Result<Self> {
        let pairs: Vec<(String, String)> = holomorphic
            .iter()
            .map(|z| (z.as_ref().to_string(), format!("{TWIN_PREFIX}{}", z.as_ref())))
            .collect();
        Self::paired_with(&pairs)
    }

    /// Paired context from explicit `(z_j, ξ_j)` name pairs, laid out as
    /// all holomorphic names followed by all twins.
    pub fn paired_with(pairs: &[(String, String)]) -> Result<Self> {
        let n = pairs.len();
        let mut names: Vec<String> = pairs.iter().map(|(z, _)| z.clone()).collect();
        names.extend(pairs.iter().map(|(_, xi)| xi.clone()));
        let slots = (0..n)
            .map(|j| Slot::Holomorphic(j + n))
            .chain((0..n).map(Slot::Antiholomorphic))
            .collect();
        Self::build(names, Some(slots))
    }

    /// Arbitrary layout: `pairs` lists `(holomorphic index, twin index)`.
    /// Every variable must appear in exactly one pair.
    pub fn with_pairing(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut slots: Vec<Option<Slot>> = vec![None; names.len()];
        for &(z, xi) in pairs {
            if z >= names.len() || xi >= names.len() || z == xi {
                return Err(Error::InvalidContext("pair index out of range".into()));
            }
            if slots[z].is_some() || slots[xi].is_some() {
                return Err(Error::InvalidContext("variable paired twice".into()));
            }
            slots[z] = Some(Slot::Holomorphic(xi));
            slots[xi] = Some(Slot::Antiholomorphic(z));
        }
        let slots = slots
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidContext("pairing is not a perfect matching".into()))?;
        Self::build(names, Some(slots))
    }

    fn build(names: Vec<String>, slots: Option<Vec<Slot>>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!("`{name}` is not a valid variable name")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::InvalidContext(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VarContext(Arc::new(ContextData { names, slots, index })))
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn has_pairing(&self) -> bool {
        self.0.slots.is_some()
    }

    pub fn slot(&self, i: usize) -> Option<Slot> {
        self.0.slots.as_ref().map(|s| s[i])
    }

    /// Index of the σ-partner of variable `i`.
    pub fn partner(&self, i: usize) -> Result<usize> {
        match self.slot(i).ok_or(Error::NoPairing)? {
            Slot::Holomorphic(j) | Slot::Antiholomorphic(j) => Ok(j),
        }
    }

    /// Holomorphic variable indices in canonical order.
    pub fn holomorphic(&self) -> Result<Vec<usize>> {
        let slots = self.0.slots.as_ref().ok_or(Error::NoPairing)?;
        Ok(slots
            .iter()
            .enumerate()
            .filter(|(_, s)| matches!(s, Slot::Holomorphic(_)))
            .map(|(i, _)| i)
            .collect())
    }

    /// Twin indices, listed in the order of their holomorphic partners.
    pub fn antiholomorphic(&self) -> Result<Vec<usize>> {
        self.holomorphic()?.into_iter().map(|i| self.partner(i)).collect()
    }

    /// The σ-permutation of indices. Requires a pairing.
    pub fn sigma_permutation(&self) -> Result<Vec<usize>> {
        (0..self.len()).map(|i| self.partner(i)).collect()
    }
}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.names.iter()).finish()
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    s != "i" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paired_layout() {
        let ctx = VarContext::paired(&["z", "w"]).unwrap();
        assert_eq!(ctx.names(), &["z", "w", "xi_z", "xi_w"]);
        assert_eq!(ctx.partner(0).unwrap(), 2);
        assert_eq!(ctx.partner(3).unwrap(), 1);
        assert_eq!(ctx.holomorphic().unwrap(), vec![0, 1]);
        assert_eq!(ctx.antiholomorphic().unwrap(), vec![2, 3]);
    }

    #[test]
    fn rejects_duplicates_and_reserved_names() {
        assert!(VarContext::new(&["z", "z"]).is_err());
        assert!(VarContext::new(&["i"]).is_err());
        assert!(VarContext::new(&["2x"]).is_err());
    }

    #[test]
    fn pairing_must_be_perfect() {
        let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        assert!(VarContext::with_pairing(names, &[(0, 1)]).is_err());
    }

    #[test]
    fn unpaired_has_no_partner() {
        let ctx = VarContext::new(&["x"]).unwrap();
        assert_eq!(ctx.partner(0), Err(Error::NoPairing));
    }
}
