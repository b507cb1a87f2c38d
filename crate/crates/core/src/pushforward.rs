//! Images of complexifications under polynomial maps, through graph ideals.
//!
//! A map `F: ℂⁿ → ℂᵐ` with holomorphic polynomial components complexifies to
//! `ℱ(z, ξ) = (F(z), conj-coefficient F(ξ))`. The image of `V(C)` is cut out
//! by eliminating the source variables from `C + (t_j − ℱ_j)`.

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::groebner::Ideal;
use crate::polyring::{Polynomial, VarContext};
use crate::variety::{
    directives, parse_realvars, parse_var_decl, sigma, CoordResolver, Coordinates, Directive,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    source: VarContext,
    target: VarContext,
    components: Vec<Polynomial>,
}

impl PolyMap {
    /// `source` and `target` are paired contexts with disjoint names; one
    /// component per holomorphic target variable, each free of `ξ`.
    pub fn new(source: &VarContext, target: &VarContext, components: Vec<Polynomial>) -> Result<Self> {
        let m = target.holomorphic()?.len();
        source.holomorphic()?;
        if components.len() != m {
            return Err(Error::Semantic(format!(
                "{} components for {m} target variables",
                components.len()
            )));
        }
        if let Some(n) = target.names().iter().find(|n| source.index_of(n).is_some()) {
            return Err(Error::Semantic(format!("target variable `{n}` clashes with a source variable")));
        }
        for c in &components {
            if c.context() != source {
                return Err(Error::ContextMismatch);
            }
            if !c.only_involves(|i| matches!(source.slot(i), Some(crate::polyring::Slot::Holomorphic(_)))) {
                return Err(Error::Semantic(format!("component `{c}` involves conjugate variables")));
            }
        }
        Ok(PolyMap { source: source.clone(), target: target.clone(), components })
    }

    /// The identity map onto a renamed copy of the source.
    pub fn identity(source: &VarContext, target: &VarContext) -> Result<Self> {
        let comps = source.holomorphic()?.into_iter().map(|i| Polynomial::var_at(source, i)).collect();
        PolyMap::new(source, target, comps)
    }

    pub fn source(&self) -> &VarContext {
        &self.source
    }

    pub fn target(&self) -> &VarContext {
        &self.target
    }

    pub fn source_n(&self) -> usize {
        self.source.len() / 2
    }

    pub fn target_n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// `self ∘ inner`.
    pub fn compose_after(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.target != self.source {
            return Err(Error::ContextMismatch);
        }
        let mut values = vec![Polynomial::zero(&inner.source); self.source.len()];
        for (k, (h, a)) in pairs(&self.source)?.into_iter().enumerate() {
            values[h] = inner.components[k].clone();
            values[a] = sigma(&inner.components[k])?;
        }
        let comps = self
            .components
            .iter()
            .map(|c| c.compose(&inner.source, &values))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(&inner.source, &self.target, comps)
    }
}

fn pairs(ctx: &VarContext) -> Result<Vec<(usize, usize)>> {
    ctx.holomorphic()?.into_iter().map(|h| Ok((h, ctx.partner(h)?))).collect()
}

/// `F(z)` followed by the σ-twins `conj-coefficient F(ξ)`.
pub fn complexify_map(f: &PolyMap) -> Result<Vec<Polynomial>> {
    let twins = f.components.iter().map(sigma).collect::<Result<Vec<_>>>()?;
    Ok(f.components.iter().cloned().chain(twins).collect())
}

/// `C + (t_j − ℱ_j)` in the source variables followed by the target ones.
pub fn graph_ideal(c: &Ideal, f: &PolyMap) -> Result<Ideal> {
    if c.context() != &f.source {
        return Err(Error::ContextMismatch);
    }
    let (src, tgt) = (&f.source, &f.target);
    let names: Vec<String> = src.names().iter().chain(tgt.names()).cloned().collect();
    let off = src.len();
    let mut pairing = pairs(src)?;
    pairing.extend(pairs(tgt)?.into_iter().map(|(h, a)| (h + off, a + off)));
    let graph = VarContext::with_pairing(names, &pairing)?;
    let mut gens = c.generators().iter().map(|g| g.embed(&graph)).collect::<Result<Vec<_>>>()?;
    let calf = complexify_map(f)?;
    let m = f.target_n();
    for (k, (h, a)) in pairs(tgt)?.into_iter().enumerate() {
        for (var, comp) in [(h, &calf[k]), (a, &calf[k + m])] {
            gens.push(&Polynomial::var_at(&graph, var + off) - &comp.embed(&graph)?);
        }
    }
    Ok(Ideal::new(&graph, gens)?.with_limits(c.limits()))
}


fn image_from_graph(graph: &Ideal, f: &PolyMap) -> Result<Ideal> {
    let keep: Vec<usize> = (f.source.len()..graph.context().len()).collect();
    let image = graph.eliminate(&keep)?;
    if image.context() == &f.target {
        return Ok(image);
    }
    let gens = image.generators().iter().map(|g| g.embed(&f.target)).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(&f.target, gens)?.with_limits(graph.limits()))
}

/// Zariski closure of `ℱ(V(C))` in the target variables.
pub fn image_complexification(c: &Ideal, f: &PolyMap) -> Result<Ideal> {
    image_from_graph(&graph_ideal(c, f)?, f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionCheck {
    pub src_dim: i64,
    pub img_dim: i64,
    pub equal: bool,
}

pub fn dimension_preserved(c: &Ideal, f: &PolyMap) -> Result<DimensionCheck> {
    let src_dim = c.dimension()?;
    let img_dim = image_complexification(c, f)?.dimension()?;
    Ok(DimensionCheck { src_dim, img_dim, equal: src_dim == img_dim })
}

/// Whether `ℱ` restricted to `V(C)` has finite fibers, by the pure-power
/// criterion on the graph ideal with the source variables eliminated.
pub fn finiteness_certificate(c: &Ideal, f: &PolyMap) -> Result<bool> {
    let graph = graph_ideal(c, f)?;
    graph.finite_over_kept_vars(&(0..f.source.len()).collect::<Vec<_>>())
}

#[derive(Clone, Debug)]
pub struct Pushforward {
    pub image: Ideal,
    pub dims: DimensionCheck,
    pub finite: bool,
}

/// Image, dimensions and finiteness from one graph ideal.
pub fn pushforward(c: &Ideal, f: &PolyMap) -> Result<Pushforward> {
    let graph = graph_ideal(c, f)?;
    let image = image_from_graph(&graph, f)?;
    let finite = graph.finite_over_kept_vars(&(0..f.source.len()).collect::<Vec<_>>())?;
    let src_dim = c.dimension()?;
    let img_dim = image.dimension()?;
    Ok(Pushforward { image, dims: DimensionCheck { src_dim, img_dim, equal: src_dim == img_dim }, finite })
}

/// A parsed map file: the map, target coordinates and membership checks.
#[derive(Clone, Debug)]
pub struct MapFile {
    pub map: PolyMap,
    pub target_coords: Coordinates,
    /// Source text and complexified polynomial of each `check:` line.
    pub checks: Vec<(String, Polynomial)>,
}

fn directive_err(d: &Directive<'_>, msg: impl Into<String>) -> Error {
    ParseError::new(d.line, d.value_col, ParseErrorKind::Directive(msg.into())).into()
}

/// Parse a map file against the source coordinates.
///
/// ```text
/// targets: w:omega
/// comp: z^2
/// ```
///
/// Optional `realvars:` names the real parts of the targets; `check:` lines
/// are target polynomials tested for membership in the image.
pub fn parse_map(text: &str, source: &Coordinates) -> Result<MapFile> {
    let ds = directives(text)?;
    let mut target: Option<Coordinates> = None;
    let mut comps = Vec::new();
    let mut checks = Vec::new();
    let need = |d: &Directive<'_>, t: &Option<Coordinates>| -> Result<Coordinates> {
        t.clone().ok_or_else(|| directive_err(d, "`targets:` must come first"))
    };
    for d in &ds {
        match d.key {
            "targets" => {
                if target.is_some() {
                    return Err(directive_err(d, "duplicate `targets:` line"));
                }
                let ctx = VarContext::paired_with(&parse_var_decl(d)?).map_err(|e| directive_err(d, e.to_string()))?;
                target = Some(Coordinates::with_default_names(ctx).map_err(|e| directive_err(d, e.to_string()))?);
            }
            "realvars" => {
                let t = need(d, &target)?;
                if !checks.is_empty() {
                    return Err(directive_err(d, "`realvars:` must precede checks"));
                }
                target = Some(
                    Coordinates::new(t.complex().clone(), &parse_realvars(d)?)
                        .map_err(|e| directive_err(d, e.to_string()))?,
                );
            }
            "comp" => {
                need(d, &target)?;
                comps.push(crate::variety::parse_equation(d, &CoordResolver::new(source))?);
            }
            "check" => {
                let t = need(d, &target)?;
                let p = crate::variety::parse_equation(d, &CoordResolver::new(&t))?;
                checks.push((d.value.trim().to_string(), p));
            }
            other => {
                return Err(ParseError::new(
                    d.line,
                    1,
                    ParseErrorKind::Directive(format!("unknown directive `{other}`")),
                )
                .into())
            }
        }
    }
    let target_coords = target.ok_or_else(|| ParseError::new(1, 1, ParseErrorKind::Directive("missing `targets:` line".into())))?;
    let map = PolyMap::new(source.complex(), target_coords.complex(), comps)?;
    Ok(MapFile { map, target_coords, checks })
}
