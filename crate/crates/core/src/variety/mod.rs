//! Real-algebraic subvarieties of ℂⁿ and their complexifications.
//!
//! A variety is stored through defining polynomials `ρ(z, ξ)` in a paired
//! context `z_1..z_n, ξ_1..ξ_n`, where `ξ_j` stands for `conj(z_j)`. The real
//! points are `{z : ρ(z, conj z) = 0}`; the complexification is the complex
//! variety `{(z, ξ) : ρ(z, ξ) = 0}` in ℂ²ⁿ.

mod input;

use std::fmt;

use num_traits::Zero;

use crate::coeff::GaussianRational;
use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::groebner::{Ideal, Limits};
use crate::linalg;
use crate::polyring::parse::{parse_expression, ContextResolver, Resolver};
use crate::polyring::{Polynomial, VarContext, TWIN_PREFIX};

pub(crate) use input::{directives, list_items, parse_equation, Directive};

/// A point of ℂⁿ with Gaussian-rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point(pub Vec<GaussianRational>);

impl Point {
    pub fn new(coords: Vec<GaussianRational>) -> Self {
        Point(coords)
    }

    pub fn origin(n: usize) -> Self {
        Point(vec![GaussianRational::zero(); n])
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conj(&self) -> Point {
        Point(self.0.iter().map(|c| c.conj()).collect())
    }

    /// Parse comma-separated constants such as `1/2+3/4*i, -1, i`.
    pub fn parse(text: &str) -> Result<Point, ParseError> {
        let empty = VarContext::new::<&str>(&[]).expect("empty context");
        let mut coords = Vec::new();
        let mut col = 1;
        for piece in text.split(',') {
            let p = parse_expression(piece, &ContextResolver(&empty), 1, col)?;
            coords.push(p.as_constant().expect("no variables in an empty context"));
            col += piece.chars().count() + 1;
        }
        Ok(Point(coords))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// The paired complex context together with the real coordinates
/// `z_j = x_j + i·y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinates {
    complex: VarContext,
    real: VarContext,
}

impl Coordinates {
    /// `complex` must be laid out as `z_1..z_n, ξ_1..ξ_n`; `real_names`
    /// holds `(x_j, y_j)` per holomorphic variable.
    pub fn new(complex: VarContext, real_names: &[(String, String)]) -> Result<Self> {
        let holo = complex.holomorphic()?;
        if real_names.len() != holo.len() {
            return Err(Error::InvalidContext(format!(
                "{} real coordinate pairs for {} complex variables",
                real_names.len(),
                holo.len()
            )));
        }
        let names: Vec<String> =
            real_names.iter().flat_map(|(x, y)| [x.clone(), y.clone()]).collect();
        if names.iter().any(|r| complex.index_of(r).is_some()) {
            return Err(Error::InvalidContext("real and complex names overlap".into()));
        }
        Ok(Coordinates { complex, real: VarContext::new(&names)? })
    }

    /// Default real names `x_<z>`, `y_<z>`.
    pub fn with_default_names(complex: VarContext) -> Result<Self> {
        let names: Vec<(String, String)> = complex
            .holomorphic()?
            .into_iter()
            .map(|i| (format!("x_{}", complex.name(i)), format!("y_{}", complex.name(i))))
            .collect();
        Self::new(complex, &names)
    }

    pub fn complex(&self) -> &VarContext {
        &self.complex
    }

    pub fn real(&self) -> &VarContext {
        &self.real
    }

    fn n(&self) -> usize {
        self.real.len() / 2
    }

    /// `x_j` and `y_j` written in `z_j, ξ_j`.
    fn real_parts(&self, j: usize) -> (Polynomial, Polynomial) {
        let z_idx = self.complex.holomorphic().expect("paired")[j];
        let xi_idx = self.complex.partner(z_idx).expect("paired");
        let z = Polynomial::var_at(&self.complex, z_idx);
        let xi = Polynomial::var_at(&self.complex, xi_idx);
        let half = GaussianRational::from_ratio(1, 2);
        let x = (&z + &xi).scale(&half);
        // 1/(2i) = -i/2
        let y = (&z - &xi).scale(&GaussianRational::from_parts((0, 1), (-1, 2)));
        (x, y)
    }

    /// Rewrite a real-coordinate polynomial in `z, ξ` via
    /// `x = (z + ξ)/2`, `y = (z − ξ)/(2i)`.
    pub fn complexify(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.context() != &self.real {
            return Err(Error::ContextMismatch);
        }
        let values: Vec<Polynomial> = (0..self.n())
            .flat_map(|j| {
                let (x, y) = self.real_parts(j);
                [x, y]
            })
            .collect();
        g.compose(&self.complex, &values)
    }

    /// Rewrite a `z, ξ` polynomial in real coordinates via
    /// `z = x + i·y`, `ξ = x − i·y`.
    pub fn realify(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.context() != &self.complex {
            return Err(Error::ContextMismatch);
        }
        let mut values = vec![Polynomial::zero(&self.real); self.complex.len()];
        for (j, z_idx) in self.complex.holomorphic()?.into_iter().enumerate() {
            let x = Polynomial::var_at(&self.real, 2 * j);
            let iy = Polynomial::var_at(&self.real, 2 * j + 1).scale(&GaussianRational::i());
            values[z_idx] = &x + &iy;
            values[self.complex.partner(z_idx)?] = &x - &iy;
        }
        f.compose(&self.real, &values)
    }
}

/// The conjugation involution: swap every `z_j ↔ ξ_j` and conjugate the
/// coefficients. Real-valued defining functions are fixed points.
pub fn sigma(f: &Polynomial) -> Result<Polynomial> {
    let perm = f.context().sigma_permutation()?;
    Ok(f.permute_vars(&perm, f.context()).conj_coeffs())
}

/// A real-algebraic subvariety of ℂⁿ given by polynomial defining functions
/// in mixed `(z, conj z)` form.
#[derive(Clone, Debug)]
pub struct RealVariety {
    coords: Coordinates,
    gens: Vec<Polynomial>,
    source: String,
    limits: Limits,
}

fn proportional(a: &Polynomial, b: &Polynomial) -> bool {
    match (a.terms().first(), b.terms().first()) {
        (Some((ma, ca)), Some((mb, cb))) if ma == mb && a.num_terms() == b.num_terms() => {
            let ratio = ca / cb;
            b.scale(&ratio) == *a
        }
        _ => false,
    }
}

impl RealVariety {
    /// Build from generators in `coords.complex()`, appending the σ-image of
    /// every generator that has no proportional partner already present.
    pub fn new(coords: Coordinates, gens: Vec<Polynomial>, source: impl Into<String>) -> Result<Self> {
        let mut closed: Vec<Polynomial> = Vec::new();
        for g in gens {
            if g.context() != coords.complex() {
                return Err(Error::ContextMismatch);
            }
            if g.is_zero() || closed.iter().any(|h| proportional(h, &g)) {
                continue;
            }
            closed.push(g);
        }
        let mut images = Vec::new();
        for g in &closed {
            let s = sigma(g)?;
            if !closed.iter().chain(images.iter()).any(|h| proportional(h, &s)) {
                images.push(s);
            }
        }
        closed.extend(images);
        Ok(RealVariety { coords, gens: closed, source: source.into(), limits: Limits::default() })
    }

    /// Parse the line-oriented input format (see the module docs of
    /// `variety::input`).
    pub fn parse(text: &str) -> Result<Self> {
        parse_variety(text)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Ambient complex dimension `n`.
    pub fn n(&self) -> usize {
        self.coords.real().len() / 2
    }

    pub fn coordinates(&self) -> &Coordinates {
        &self.coords
    }

    pub fn context(&self) -> &VarContext {
        self.coords.complex()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// The ideal of `ρ(z, ξ)` in ℂ²ⁿ.
    pub fn complexification(&self) -> Ideal {
        Ideal::new(self.context(), self.gens.clone())
            .expect("generators share the context")
            .with_limits(self.limits)
    }

    /// `dim_ℝ X = dim_ℂ` of the complexification, assuming the generators
    /// define the full ideal of `X`.
    pub fn real_dim(&self) -> Result<i64> {
        self.complexification().dimension()
    }

    /// Real codimension `k = 2n − dim_ℝ X`.
    pub fn codim(&self) -> Result<i64> {
        Ok(2 * self.n() as i64 - self.real_dim()?)
    }

    pub fn realify(&self) -> Result<Vec<Polynomial>> {
        self.gens.iter().map(|g| self.coords.realify(g)).collect()
    }

    fn check_point(&self, p: &Point) -> Result<()> {
        if p.len() != self.n() {
            return Err(Error::PointDimension { expected: self.n(), got: p.len() });
        }
        Ok(())
    }

    /// Values for the whole context at `(z, ξ) = (p, conj p)`.
    pub(crate) fn diagonal_values(&self, p: &Point) -> Vec<GaussianRational> {
        let ctx = self.context();
        let mut vals = vec![GaussianRational::zero(); ctx.len()];
        for (j, z) in ctx.holomorphic().expect("paired").into_iter().enumerate() {
            vals[z] = p.0[j].clone();
            vals[ctx.partner(z).expect("paired")] = p.0[j].conj();
        }
        vals
    }

    pub fn contains_point(&self, p: &Point) -> Result<bool> {
        self.check_point(p)?;
        let vals = self.diagonal_values(p);
        Ok(self.gens.iter().all(|g| g.evaluate(&vals).is_zero()))
    }

    fn require_on_variety(&self, p: &Point) -> Result<()> {
        if !self.contains_point(p)? {
            return Err(Error::PointNotOnVariety(p.to_string()));
        }
        Ok(())
    }

    /// Rank of `(∂ρ_i/∂ξ_j)` at `(p, conj p)`; the CR dimension at a CR
    /// regular point is `n − rank`.
    pub fn cr_rank_at(&self, p: &Point) -> Result<CrRank> {
        self.require_on_variety(p)?;
        let ctx = self.context();
        let twins = ctx.antiholomorphic()?;
        let vals = self.diagonal_values(p);
        let rows: Vec<Vec<GaussianRational>> = self
            .gens
            .iter()
            .map(|g| twins.iter().map(|&xi| g.derivative(xi).evaluate(&vals)).collect())
            .collect();
        let rank = linalg::rank(&rows);
        Ok(CrRank { rank, cr_dim: self.n() - rank })
    }

    /// Rank of the full Jacobian of the generators in all `2n` variables at
    /// `(p, conj p)`. Below the codimension the point is singular for the
    /// defining system.
    pub fn jacobian_rank_at(&self, p: &Point) -> Result<usize> {
        self.check_point(p)?;
        let vals = self.diagonal_values(p);
        let rows: Vec<Vec<GaussianRational>> = self
            .gens
            .iter()
            .map(|g| (0..self.context().len()).map(|v| g.derivative(v).evaluate(&vals)).collect())
            .collect();
        Ok(linalg::rank(&rows))
    }
}

/// Result of [`RealVariety::cr_rank_at`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrRank {
    pub rank: usize,
    pub cr_dim: usize,
}

/// See [`RealVariety::parse`].
pub fn parse_equations(text: &str) -> Result<RealVariety> {
    RealVariety::parse(text)
}

/// See [`RealVariety::realify`].
pub fn realify(v: &RealVariety) -> Result<Vec<Polynomial>> {
    v.realify()
}

/// See [`Coordinates::complexify`].
pub fn complexify_coords(coords: &Coordinates, g: &Polynomial) -> Result<Polynomial> {
    coords.complexify(g)
}

/// See [`RealVariety::complexification`].
pub fn complexification(v: &RealVariety) -> Ideal {
    v.complexification()
}

/// See [`RealVariety::real_dim`].
pub fn real_dim(v: &RealVariety) -> Result<i64> {
    v.real_dim()
}

/// See [`RealVariety::contains_point`].
pub fn contains_point(v: &RealVariety, p: &Point) -> Result<bool> {
    v.contains_point(p)
}

/// See [`RealVariety::cr_rank_at`].
pub fn cr_rank_at(v: &RealVariety, p: &Point) -> Result<CrRank> {
    v.cr_rank_at(p)
}

/// Resolves complex names, twin names, `conj(..)` and real coordinate names.
pub(crate) struct CoordResolver<'a> {
    pub coords: &'a Coordinates,
    pub real_parts: Vec<(Polynomial, Polynomial)>,
}

impl<'a> CoordResolver<'a> {
    pub(crate) fn new(coords: &'a Coordinates) -> Self {
        let real_parts = (0..coords.n()).map(|j| coords.real_parts(j)).collect();
        CoordResolver { coords, real_parts }
    }

    fn real_var(&self, name: &str) -> Option<Polynomial> {
        let r = self.coords.real.index_of(name)?;
        let (x, y) = &self.real_parts[r / 2];
        Some(if r % 2 == 0 { x.clone() } else { y.clone() })
    }
}

impl Resolver for CoordResolver<'_> {
    fn context(&self) -> &VarContext {
        &self.coords.complex
    }

    fn variable(&self, name: &str) -> Option<Polynomial> {
        Polynomial::var(&self.coords.complex, name).ok().or_else(|| self.real_var(name))
    }

    fn conjugate(&self, name: &str) -> Option<Polynomial> {
        if let Some(x) = self.real_var(name) {
            return Some(x);
        }
        let ctx = &self.coords.complex;
        let i = ctx.index_of(name)?;
        Some(Polynomial::var_at(ctx, ctx.partner(i).ok()?))
    }
}

/// Parse a `vars:` item list into `(z, twin)` name pairs.
pub(crate) fn parse_var_decl(d: &Directive<'_>) -> Result<Vec<(String, String)>, ParseError> {
    let mut pairs = Vec::new();
    for (item, col) in list_items(d) {
        let (z, twin) = match item.split_once(':') {
            Some((z, t)) => (z.trim().to_string(), t.trim().to_string()),
            None => (item.clone(), format!("{TWIN_PREFIX}{item}")),
        };
        if !crate::polyring::is_identifier(&z) || !crate::polyring::is_identifier(&twin) {
            return Err(ParseError::new(
                d.line,
                col,
                ParseErrorKind::Directive(format!("invalid variable declaration `{item}`")),
            ));
        }
        pairs.push((z, twin));
    }
    if pairs.is_empty() {
        return Err(ParseError::new(
            d.line,
            d.value_col,
            ParseErrorKind::Directive("empty variable list".into()),
        ));
    }
    Ok(pairs)
}

pub(crate) fn parse_realvars(d: &Directive<'_>) -> Result<Vec<(String, String)>, ParseError> {
    let mut out = Vec::new();
    for (item, col) in list_items(d) {
        let names: Vec<&str> = item.split_whitespace().collect();
        match names.as_slice() {
            [x, y] => out.push((x.to_string(), y.to_string())),
            _ => {
                return Err(ParseError::new(
                    d.line,
                    col,
                    ParseErrorKind::Directive(format!("expected `re im` names, got `{item}`")),
                ))
            }
        }
    }
    Ok(out)
}

fn directive_err(d: &Directive<'_>, msg: String) -> Error {
    Error::Parse(ParseError::new(d.line, d.value_col, ParseErrorKind::Directive(msg)))
}

fn parse_variety(text: &str) -> Result<RealVariety> {
    let ds = directives(text)?;
    let mut coords: Option<Coordinates> = None;
    let mut gens = Vec::new();
    for d in &ds {
        match d.key {
            "vars" => {
                if coords.is_some() {
                    return Err(directive_err(d, "duplicate `vars:` line".into()));
                }
                let pairs = parse_var_decl(d)?;
                let ctx = VarContext::paired_with(&pairs).map_err(|e| directive_err(d, e.to_string()))?;
                coords = Some(
                    Coordinates::with_default_names(ctx).map_err(|e| directive_err(d, e.to_string()))?,
                );
            }
            "realvars" => {
                let Some(c) = &coords else {
                    return Err(ParseError::new(d.line, 1, ParseErrorKind::MissingVars).into());
                };
                if !gens.is_empty() {
                    return Err(directive_err(d, "`realvars:` must precede equations".into()));
                }
                let names = parse_realvars(d)?;
                coords = Some(
                    Coordinates::new(c.complex().clone(), &names)
                        .map_err(|e| directive_err(d, e.to_string()))?,
                );
            }
            "eq" => {
                let Some(c) = &coords else {
                    return Err(ParseError::new(d.line, 1, ParseErrorKind::MissingVars).into());
                };
                gens.push(parse_equation(d, &CoordResolver::new(c))?);
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
    let coords = coords.ok_or_else(|| ParseError::new(1, 1, ParseErrorKind::MissingVars))?;
    RealVariety::new(coords, gens, text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn parse_cone() {
        let v = RealVariety::parse("vars: z, w\neq: z*conj(z) - w*conj(w) = 0\n").unwrap();
        assert_eq!(strings(v.generators()), vec!["z*xi_z - w*xi_w"]);
        assert_eq!(v.n(), 2);
    }

    #[test]
    fn parse_appends_sigma_image() {
        let v = RealVariety::parse("vars: z, w\neq: w = z*conj(z)\n").unwrap();
        assert_eq!(strings(v.generators()), vec!["-z*xi_z + w", "-z*xi_z + xi_w"]);
    }

    #[test]
    fn parse_real_line() {
        let v = RealVariety::parse("vars: z\neq: z = conj(z)").unwrap();
        assert_eq!(strings(v.generators()), vec!["z - xi_z"]);
    }

    #[test]
    fn parse_real_coordinates() {
        let v = RealVariety::parse("vars: z, w\nrealvars: x y, s t\neq: (x^2 + y^2)*s = x^3\n").unwrap();
        assert_eq!(v.generators().len(), 1);
        let ctx = v.context();
        let expected = Polynomial::parse(ctx, "z*xi_z*(w + xi_w)/2 - ((z + xi_z)/2)^3").unwrap();
        assert_eq!(v.generators()[0], expected);
    }

    #[test]
    fn custom_twin_names() {
        let v = RealVariety::parse("vars: z:zeta\neq: z = conj(z)").unwrap();
        assert_eq!(strings(v.generators()), vec!["z - zeta"]);
    }

    #[test]
    fn parse_errors() {
        let e = RealVariety::parse("eq: z = 0").unwrap_err();
        assert!(matches!(e, Error::Parse(ParseError { kind: ParseErrorKind::MissingVars, .. })));
        let e = RealVariety::parse("vars: z\neq: sqrt(z) = 0").unwrap_err();
        let Error::Parse(pe) = e else { panic!() };
        assert_eq!(pe.kind, ParseErrorKind::UnknownFunction("sqrt".into()));
        assert_eq!((pe.line, pe.column), (2, 5));
        let e = RealVariety::parse("vars: z\neq: z^conj(z) = 0").unwrap_err();
        let Error::Parse(pe) = e else { panic!() };
        assert_eq!(pe.kind, ParseErrorKind::NonConstantExponent);
        assert_eq!(pe.column, 7);
        let e = RealVariety::parse("vars: z\nfoo: 1").unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let e = RealVariety::parse("vars: z\neq: z = 1 = 2").unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn sigma_examples() {
        let ctx = VarContext::paired(&["z", "w"]).unwrap();
        let f = Polynomial::parse(&ctx, "w - z*xi_z").unwrap();
        assert_eq!(sigma(&f).unwrap(), Polynomial::parse(&ctx, "xi_w - xi_z*z").unwrap());
        let g = Polynomial::parse(&ctx, "z*xi_z - w*xi_w").unwrap();
        assert_eq!(sigma(&g).unwrap(), g);
        let h = Polynomial::parse(&ctx, "(1+2*i)*z^2*xi_w - i").unwrap();
        assert_eq!(sigma(&sigma(&h).unwrap()).unwrap(), h);
        assert_eq!(sigma(&h).unwrap(), Polynomial::parse(&ctx, "(1-2*i)*xi_z^2*w + i").unwrap());
        let plain = Polynomial::parse(&VarContext::new(&["z"]).unwrap(), "z").unwrap();
        assert_eq!(sigma(&plain), Err(Error::NoPairing));
    }

    #[test]
    fn realify_examples() {
        let v = RealVariety::parse("vars: z, w\neq: z*conj(z) = w*conj(w)").unwrap();
        let r = v.realify().unwrap();
        let real = v.coordinates().real();
        assert_eq!(r[0], Polynomial::parse(real, "x_z^2 + y_z^2 - x_w^2 - y_w^2").unwrap());
        let line = RealVariety::parse("vars: z\neq: z = conj(z)").unwrap();
        let r = line.realify().unwrap();
        assert_eq!(r[0], Polynomial::parse(line.coordinates().real(), "2*i*y_z").unwrap());
    }

    #[test]
    fn complexify_examples() {
        let v = RealVariety::parse("vars: z, w\nrealvars: x y, s t").unwrap();
        let c = v.coordinates();
        let x = Polynomial::parse(c.real(), "x").unwrap();
        assert_eq!(c.complexify(&x).unwrap(), Polynomial::parse(c.complex(), "(z + xi_z)/2").unwrap());
        let r2 = Polynomial::parse(c.real(), "y^2 + x^2").unwrap();
        assert_eq!(c.complexify(&r2).unwrap(), Polynomial::parse(c.complex(), "z*xi_z").unwrap());
        let umbrella = Polynomial::parse(c.real(), "(x^2 + y^2)*s - x^3").unwrap();
        let cz = c.complexify(&umbrella).unwrap();
        assert_eq!(cz, Polynomial::parse(c.complex(), "z*xi_z*(w + xi_w)/2 - ((z + xi_z)/2)^3").unwrap());
        assert_eq!(c.realify(&cz).unwrap(), umbrella);
    }

    #[test]
    fn complexification_and_dimensions() {
        let cone = RealVariety::parse("vars: z, w\neq: z*conj(z) - w*conj(w)").unwrap();
        assert_eq!(cone.real_dim().unwrap(), 3);
        let surf = RealVariety::parse("vars: z, w\neq: w = z*conj(z)").unwrap();
        assert_eq!(surf.real_dim().unwrap(), 2);
        let umbrella =
            RealVariety::parse("vars: z, w\nrealvars: x y, s t\neq: (x^2 + y^2)*s = x^3").unwrap();
        assert_eq!(umbrella.real_dim().unwrap(), 3);
        let empty = RealVariety::parse("vars: z, w").unwrap();
        assert!(empty.complexification().is_zero_ideal());
        assert_eq!(empty.real_dim().unwrap(), 4);
    }

    #[test]
    fn point_membership() {
        let cone = RealVariety::parse("vars: z, w\neq: z*conj(z) - w*conj(w)").unwrap();
        assert!(cone.contains_point(&Point::parse("1,1").unwrap()).unwrap());
        assert!(!cone.contains_point(&Point::parse("1,0").unwrap()).unwrap());
        let surf = RealVariety::parse("vars: z, w\neq: w = z*conj(z)").unwrap();
        assert!(surf.contains_point(&Point::parse("1+i, 2").unwrap()).unwrap());
        assert!(matches!(
            cone.contains_point(&Point::parse("1").unwrap()),
            Err(Error::PointDimension { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn cr_ranks() {
        let surf = RealVariety::parse("vars: z, w\neq: w = z*conj(z)").unwrap();
        assert_eq!(surf.cr_rank_at(&Point::origin(2)).unwrap(), CrRank { rank: 1, cr_dim: 1 });
        assert_eq!(surf.cr_rank_at(&Point::parse("1,1").unwrap()).unwrap(), CrRank { rank: 2, cr_dim: 0 });
        let line = RealVariety::parse("vars: z\neq: z = conj(z)").unwrap();
        assert_eq!(line.cr_rank_at(&Point::parse("3/7").unwrap()).unwrap(), CrRank { rank: 1, cr_dim: 0 });
        assert!(matches!(
            surf.cr_rank_at(&Point::parse("1,0").unwrap()),
            Err(Error::PointNotOnVariety(_))
        ));
    }

    #[test]
    fn point_parse_and_display() {
        let p = Point::parse("1/2+3/4*i, -1, i").unwrap();
        assert_eq!(p.to_string(), "(1/2+3/4*i, -1, i)");
        assert!(Point::parse("1, z").is_err());
    }
}
