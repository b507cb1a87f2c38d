//! Segre varieties `Σ_p = {z : ρ(z, conj p) = 0}` and Segre degeneracy.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Polynomial, VarContext};
use crate::variety::{Point, RealVariety};

/// `Σ_p` as an ideal in the holomorphic variables.
#[derive(Clone, Debug)]
pub struct SegreFiber {
    pub base_point: Point,
    pub ideal: Ideal,
    /// Krull dimension, `-1` if the fiber is empty.
    pub dim: i64,
}

/// Context of the holomorphic variables of a paired context.
pub(crate) fn holomorphic_context(ctx: &VarContext) -> Result<VarContext> {
    let names: Vec<String> = ctx.holomorphic()?.into_iter().map(|i| ctx.name(i).to_string()).collect();
    VarContext::new(&names)
}

/// Substitute `ξ := conj(p)` into every generator of `c`.
pub fn segre_fiber(c: &Ideal, p: &Point) -> Result<SegreFiber> {
    let ctx = c.context();
    let holo = ctx.holomorphic()?;
    if p.len() != holo.len() {
        return Err(Error::PointDimension { expected: holo.len(), got: p.len() });
    }
    let zctx = holomorphic_context(ctx)?;
    let mut values: Vec<Option<Polynomial>> = vec![None; ctx.len()];
    for (j, &z) in holo.iter().enumerate() {
        values[ctx.partner(z)?] = Some(Polynomial::constant(ctx, p.0[j].conj()));
    }
    let gens = c
        .generators()
        .iter()
        .map(|g| g.substitute_indexed(&values)?.embed(&zctx))
        .collect::<Result<Vec<_>>>()?;
    let ideal = Ideal::new(&zctx, gens)?.with_limits(c.limits());
    let dim = ideal.dimension()?;
    Ok(SegreFiber { base_point: p.clone(), ideal, dim })
}

/// Whether `q ∈ Σ_p`, by direct evaluation of `ρ(q, conj p)`.
pub fn in_segre_variety(c: &Ideal, p: &Point, q: &Point) -> Result<bool> {
    let ctx = c.context();
    let holo = ctx.holomorphic()?;
    for pt in [p, q] {
        if pt.len() != holo.len() {
            return Err(Error::PointDimension { expected: holo.len(), got: pt.len() });
        }
    }
    let mut vals = vec![Default::default(); ctx.len()];
    for (j, &z) in holo.iter().enumerate() {
        vals[z] = q.0[j].clone();
        vals[ctx.partner(z)?] = p.0[j].conj();
    }
    Ok(c.generators().iter().all(|g| num_traits::Zero::is_zero(&g.evaluate(&vals))))
}

/// Dimension of the generic Segre fiber over the closure of the
/// ξ-projection: `dim C − dim (C ∩ k[ξ])`.
pub fn generic_segre_dim(c: &Ideal) -> Result<i64> {
    let total = c.dimension()?;
    if total < 0 {
        return Ok(-1);
    }
    let image = c.eliminate(&c.context().antiholomorphic()?)?;
    Ok(total - image.dimension()?)
}

/// Whether the projection of `V(C)` to `(z, kept ξ)` has finite fibers.
pub fn check_finite_projection(c: &Ideal, kept_barred: &[&str]) -> Result<bool> {
    let ctx = c.context();
    let twins = ctx.antiholomorphic()?;
    let mut kept = Vec::with_capacity(kept_barred.len());
    for name in kept_barred {
        let i = ctx.require(name)?;
        if !twins.contains(&i) {
            return Err(Error::Semantic(format!("`{name}` is not a conjugate variable")));
        }
        kept.push(i);
    }
    let eliminated: Vec<usize> = twins.into_iter().filter(|i| !kept.contains(i)).collect();
    c.finite_over_kept_vars(&eliminated)
}

/// Segre data of a variety at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClassification {
    pub point: Point,
    pub on_variety: bool,
    pub segre_dim: i64,
    pub generic_segre_dim: i64,
    /// `segre_dim > generic_segre_dim`.
    pub degenerate: bool,
    /// `segre_dim == n − codim_k`.
    pub max_nondegenerate: bool,
    /// Real codimension `2n − dim_ℝ X`.
    pub codim_k: i64,
    /// Reduced generators of the fiber ideal.
    pub fiber_generators: Vec<Polynomial>,
}

/// Quantities shared by every point of one variety.
#[derive(Clone, Debug)]
pub struct SegreContext {
    pub complexification: Ideal,
    pub n: usize,
    pub real_dim: i64,
    pub generic_segre_dim: i64,
}

impl SegreContext {
    pub fn new(v: &RealVariety) -> Result<Self> {
        let complexification = v.complexification();
        let real_dim = complexification.dimension()?;
        let generic_segre_dim = generic_segre_dim(&complexification)?;
        Ok(SegreContext { complexification, n: v.n(), real_dim, generic_segre_dim })
    }

    pub fn codim(&self) -> i64 {
        2 * self.n as i64 - self.real_dim
    }

    pub fn classify(&self, v: &RealVariety, p: &Point) -> Result<PointClassification> {
        let on_variety = v.contains_point(p)?;
        let fiber = segre_fiber(&self.complexification, p)?;
        let codim_k = self.codim();
        Ok(PointClassification {
            point: p.clone(),
            on_variety,
            segre_dim: fiber.dim,
            generic_segre_dim: self.generic_segre_dim,
            degenerate: fiber.dim > self.generic_segre_dim,
            max_nondegenerate: fiber.dim == self.n as i64 - codim_k,
            codim_k,
            fiber_generators: fiber.ideal.reduced_generators()?,
        })
    }
}

pub fn classify_point(v: &RealVariety, p: &Point) -> Result<PointClassification> {
    SegreContext::new(v)?.classify(v, p)
}

/// Classification over a user-supplied sample of points.
#[derive(Clone, Debug)]
pub struct GridReport {
    pub points: Vec<PointClassification>,
    pub generic_segre_dim: i64,
    /// Segre dimensions at the sampled points that lie on `X`.
    pub diagonal_dims: Vec<i64>,
    /// All on-variety samples share one Segre dimension.
    pub nondegenerate_on_sample: bool,
    /// All on-variety samples have Segre dimension `n − k`.
    pub max_nondegenerate_on_sample: bool,
    /// The smallest diagonal Segre dimension differs from the value over
    /// the ξ-image closure.
    pub generic_disagrees_with_diagonal: bool,
}

impl fmt::Display for GridReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.points {
            writeln!(
                f,
                "{}: on_variety={} segre_dim={} degenerate={}",
                c.point, c.on_variety, c.segre_dim, c.degenerate
            )?;
        }
        write!(f, "generic_segre_dim={}", self.generic_segre_dim)
    }
}

/// Classify every point; points are handled on separate threads and the
/// results keep the input order.
pub fn classify_grid(v: &RealVariety, points: &[Point]) -> Result<GridReport> {
    let ctx = SegreContext::new(v)?;
    let results: Vec<Result<PointClassification>> = std::thread::scope(|s| {
        let handles: Vec<_> = points.iter().map(|p| s.spawn(|| ctx.classify(v, p))).collect();
        handles.into_iter().map(|h| h.join().expect("classification thread")).collect()
    });
    let points = results.into_iter().collect::<Result<Vec<_>>>()?;
    let diagonal_dims: Vec<i64> = points.iter().filter(|c| c.on_variety).map(|c| c.segre_dim).collect();
    let nondegenerate_on_sample = diagonal_dims.windows(2).all(|w| w[0] == w[1]);
    let max_nondegenerate_on_sample =
        points.iter().filter(|c| c.on_variety).all(|c| c.max_nondegenerate);
    let generic_disagrees_with_diagonal = diagonal_dims
        .iter()
        .min()
        .is_some_and(|&m| m != ctx.generic_segre_dim);
    Ok(GridReport {
        points,
        generic_segre_dim: ctx.generic_segre_dim,
        diagonal_dims,
        nondegenerate_on_sample,
        max_nondegenerate_on_sample,
        generic_disagrees_with_diagonal,
    })
}
