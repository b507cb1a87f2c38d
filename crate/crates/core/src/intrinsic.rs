//! Intrinsic complexification: the Zariski closure of the projection of the
//! complexification onto the holomorphic variables.

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::segre::{segre_fiber, SegreContext};
use crate::variety::{Point, RealVariety};

/// Caveat attached to every pointwise intrinsic-dimension estimate.
pub const NONCOHERENCE_CAVEAT: &str =
    "polynomial-ideal semantics; germ values may differ at noncoherent points";

/// Caveat attached when the defining system drops rank at the point.
pub const SINGULAR_POINT_CAVEAT: &str = "noncoherence: the defining system is singular at this point; \
     the germ of X here may be lower-dimensional than X, so the germ-level intrinsic \
     dimension can be smaller than the global estimate";

#[derive(Clone, Debug)]
pub struct IntrinsicResult {
    /// Elimination ideal in the holomorphic variables.
    pub ideal: Ideal,
    pub dim: i64,
    /// The ideal is `(0)`.
    pub generic: bool,
}

pub fn intrinsic_ideal(c: &Ideal) -> Result<IntrinsicResult> {
    let ideal = c.eliminate(&c.context().holomorphic()?)?;
    let dim = ideal.dimension()?;
    let generic = ideal.is_zero_ideal();
    Ok(IntrinsicResult { ideal, dim, generic })
}

/// Both sides of `dim Y = dim_ℝ X − dim Σ_p` at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimFormulaCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub equal: bool,
    pub segre_dim: i64,
    pub generic_segre_dim: i64,
    /// `Σ_p` has the generic dimension, so the formula is expected to hold.
    pub hypothesis_held: bool,
}

pub fn intrinsic_dim_formula_check(v: &RealVariety, p: &Point) -> Result<DimFormulaCheck> {
    if !v.contains_point(p)? {
        return Err(Error::PointNotOnVariety(p.to_string()));
    }
    let c = v.complexification();
    let lhs = intrinsic_ideal(&c)?.dim;
    let ctx = SegreContext::new(v)?;
    let segre_dim = segre_fiber(&c, p)?.dim;
    let rhs = ctx.real_dim - segre_dim;
    Ok(DimFormulaCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
        segre_dim,
        generic_segre_dim: ctx.generic_segre_dim,
        hypothesis_held: segre_dim == ctx.generic_segre_dim,
    })
}

/// Pointwise estimate `dim_ℝ X − dim Σ_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointEstimate {
    pub point: Point,
    pub estimate: i64,
    pub segre_dim: i64,
    pub hypothesis_held: bool,
    pub caveats: Vec<String>,
}

/// Points approaching `base`.
#[derive(Clone, Debug)]
pub struct PointSequence {
    pub base: Point,
    pub approach: Vec<Point>,
}

#[derive(Clone, Debug)]
pub struct SequenceVerdict {
    pub base: PointEstimate,
    pub approach: Vec<PointEstimate>,
    /// The base estimate is smaller than every valid estimate along the
    /// sequence, with nondegeneracy holding at the base.
    pub violation: bool,
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub estimates: Vec<PointEstimate>,
    pub global_dim: i64,
    pub sequences: Vec<SequenceVerdict>,
}

impl ProbeReport {
    pub fn violations(&self) -> usize {
        self.sequences.iter().filter(|s| s.violation).count()
    }
}

fn estimate(v: &RealVariety, ctx: &SegreContext, p: &Point) -> Result<PointEstimate> {
    if !v.contains_point(p)? {
        return Err(Error::PointNotOnVariety(p.to_string()));
    }
    let segre_dim = segre_fiber(&ctx.complexification, p)?.dim;
    let mut caveats = vec![NONCOHERENCE_CAVEAT.to_string()];
    if (v.jacobian_rank_at(p)? as i64) < ctx.codim() {
        caveats.push(SINGULAR_POINT_CAVEAT.to_string());
    }
    Ok(PointEstimate {
        point: p.clone(),
        estimate: ctx.real_dim - segre_dim,
        segre_dim,
        hypothesis_held: segre_dim == ctx.generic_segre_dim,
        caveats,
    })
}

/// Pointwise estimates, plus a semicontinuity verdict for each sequence.
pub fn upper_semicontinuity_probe(
    v: &RealVariety,
    points: &[Point],
    sequences: &[PointSequence],
) -> Result<ProbeReport> {
    let ctx = SegreContext::new(v)?;
    let global_dim = intrinsic_ideal(&ctx.complexification)?.dim;
    let all = |pts: &[Point]| -> Result<Vec<PointEstimate>> {
        std::thread::scope(|s| {
            let hs: Vec<_> = pts.iter().map(|p| s.spawn(|| estimate(v, &ctx, p))).collect();
            hs.into_iter().map(|h| h.join().expect("probe thread")).collect()
        })
    };
    let estimates = all(points)?;
    let mut verdicts = Vec::with_capacity(sequences.len());
    for seq in sequences {
        let base = estimate(v, &ctx, &seq.base)?;
        let approach = all(&seq.approach)?;
        let tail_min = approach.iter().filter(|e| e.hypothesis_held).map(|e| e.estimate).min();
        let violation = base.hypothesis_held && tail_min.is_some_and(|m| base.estimate < m);
        verdicts.push(SequenceVerdict { base, approach, violation });
    }
    Ok(ProbeReport { estimates, global_dim, sequences: verdicts })
}
