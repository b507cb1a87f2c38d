//! Command implementations behind the `segre` binary.
//!
//! Every command turns input text into a [`Report`]; the binary only reads
//! files, picks an output format and maps errors to exit codes.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::groebner::{Ideal, Limits};
use crate::intrinsic::{intrinsic_dim_formula_check, intrinsic_ideal, upper_semicontinuity_probe, PointEstimate, NONCOHERENCE_CAVEAT};
use crate::pushforward::{complexify_map, parse_map, pushforward};
use crate::segre::{classify_grid, segre_fiber, PointClassification, SegreContext};
use crate::variety::{Point, RealVariety};

/// Outcome of one command. Serializes with sorted keys.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub caveats: Vec<String>,
}

impl Report {
    fn new(command: &str, inputs: Value, results: Value) -> Self {
        Report { command: command.into(), inputs, results, caveats: Vec::new() }
    }

    fn caveat(&mut self, c: &str) {
        if !self.caveats.iter().any(|x| x == c) {
            self.caveats.push(c.to_string());
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "caveats": self.caveats,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        render(&self.results, 0, &mut out);
        for c in &self.caveats {
            out.push_str(&format!("caveat: {c}\n"));
        }
        out
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_flat(val) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, depth + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(item, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(a) => a.is_empty(),
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) if a.is_empty() => "[]".into(),
        other => other.to_string(),
    }
}

/// Options shared by the point-based commands.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub at: Option<Point>,
    pub grid: Vec<Point>,
    pub limits: Limits,
}

/// Points separated by `;`, each a comma-separated coordinate list.
pub fn parse_grid(text: &str) -> Result<Vec<Point>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Point::parse(s).map_err(Error::from))
        .collect()
}

fn strings<'a>(ps: impl IntoIterator<Item = &'a crate::Polynomial>) -> Vec<String> {
    ps.into_iter().map(|p| p.to_string()).collect()
}

/// `(g1, g2, ..)`, or `(0)` for the zero ideal.
pub fn ideal_string(gens: &[String]) -> String {
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", gens.join(", "))
    }
}

fn ideal_value(i: &Ideal) -> Result<Value> {
    let gens = strings(&i.reduced_generators()?);
    Ok(json!({ "generators": gens, "ideal": ideal_string(&gens), "variables": i.context().names() }))
}

fn point_value(p: &Point) -> Value {
    json!(p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn check_point(v: &RealVariety, p: &Point) -> Result<()> {
    if p.len() != v.n() {
        return Err(Error::PointDimension { expected: v.n(), got: p.len() });
    }
    Ok(())
}

fn load(text: &str, opts: &Options) -> Result<RealVariety> {
    let v = RealVariety::parse(text)?.with_limits(opts.limits);
    for p in opts.at.iter().chain(&opts.grid) {
        check_point(&v, p)?;
    }
    Ok(v)
}

fn variety_inputs(v: &RealVariety, opts: &Options) -> Value {
    let mut m = Map::new();
    m.insert("generators".into(), json!(strings(v.generators())));
    m.insert("n".into(), json!(v.n()));
    m.insert("variables".into(), json!(v.context().names()));
    m.insert("real_variables".into(), json!(v.coordinates().real().names()));
    if let Some(p) = &opts.at {
        m.insert("at".into(), point_value(p));
    }
    if !opts.grid.is_empty() {
        m.insert("grid".into(), Value::Array(opts.grid.iter().map(point_value).collect()));
    }
    Value::Object(m)
}

pub fn cmd_complexify(text: &str, opts: &Options) -> Result<Report> {
    let v = load(text, opts)?;
    let c = v.complexification();
    let real_dim = c.dimension()?;
    let mut results = json!({
        "codim": 2 * v.n() as i64 - real_dim,
        "generators": strings(c.generators()),
        "real_dim": real_dim,
        "real_generators": strings(&v.realify()?),
    });
    if v.generators().is_empty() {
        results["message"] = json!(format!("no equations: real_dim = 2n = {}", 2 * v.n()));
    }
    Ok(Report::new("complexify", variety_inputs(&v, opts), results))
}

fn classification_value(c: &PointClassification) -> Value {
    let gens = strings(&c.fiber_generators);
    json!({
        "point": point_value(&c.point),
        "on_variety": c.on_variety,
        "fiber_generators": gens,
        "fiber_ideal": ideal_string(&gens),
        "segre_dim": c.segre_dim,
        "generic_segre_dim": c.generic_segre_dim,
        "degenerate": c.degenerate,
        "max_nondegenerate": c.max_nondegenerate,
        "codim_k": c.codim_k,
    })
}

fn grid_value(v: &RealVariety, grid: &[Point]) -> Result<Value> {
    let g = classify_grid(v, grid)?;
    Ok(json!({
        "points": g.points.iter().map(classification_value).collect::<Vec<_>>(),
        "diagonal_segre_dims": g.diagonal_dims,
        "generic_segre_dim": g.generic_segre_dim,
        "segre_nondegenerate_on_sample": g.nondegenerate_on_sample,
        "max_nondegenerate_on_sample": g.max_nondegenerate_on_sample,
        "generic_disagrees_with_diagonal": g.generic_disagrees_with_diagonal,
    }))
}

pub fn cmd_segre(text: &str, opts: &Options) -> Result<Report> {
    let v = load(text, opts)?;
    if opts.at.is_none() && opts.grid.is_empty() {
        return Err(Error::Semantic("segre needs --at or --grid".into()));
    }
    let mut results = Map::new();
    if let Some(p) = &opts.at {
        let ctx = SegreContext::new(&v)?;
        let c = ctx.classify(&v, p)?;
        let fiber = segre_fiber(&ctx.complexification, p)?;
        let mut entry = classification_value(&c);
        entry["fiber_input_generators"] = json!(strings(fiber.ideal.generators()));
        results.insert("at".into(), entry);
    }
    if !opts.grid.is_empty() {
        results.insert("grid".into(), grid_value(&v, &opts.grid)?);
    }
    Ok(Report::new("segre", variety_inputs(&v, opts), Value::Object(results)))
}

fn estimate_value(e: &PointEstimate) -> Value {
    json!({
        "point": point_value(&e.point),
        "estimate": e.estimate,
        "segre_dim": e.segre_dim,
        "hypothesis_held": e.hypothesis_held,
        "caveats": e.caveats,
    })
}

pub fn cmd_intrinsic(text: &str, opts: &Options) -> Result<Report> {
    let v = load(text, opts)?;
    let r = intrinsic_ideal(&v.complexification())?;
    let mut results = ideal_value(&r.ideal)?;
    results["dim"] = json!(r.dim);
    results["generic"] = json!(r.generic);
    let mut report = Report::new("intrinsic", variety_inputs(&v, opts), Value::Null);
    let mut points: Vec<Point> = opts.at.iter().cloned().collect();
    points.extend(opts.grid.iter().cloned());
    if let Some(p) = &opts.at {
        let f = intrinsic_dim_formula_check(&v, p)?;
        results["formula_check"] = json!({
            "lhs": f.lhs,
            "rhs": f.rhs,
            "equal": f.equal,
            "segre_dim": f.segre_dim,
            "generic_segre_dim": f.generic_segre_dim,
            "hypothesis_held": f.hypothesis_held,
        });
    }
    if !points.is_empty() {
        let probe = upper_semicontinuity_probe(&v, &points, &[])?;
        for e in &probe.estimates {
            for c in &e.caveats {
                report.caveat(c);
            }
        }
        results["pointwise_estimates"] = Value::Array(probe.estimates.iter().map(estimate_value).collect());
    }
    report.caveat(NONCOHERENCE_CAVEAT);
    report.results = results;
    Ok(report)
}

pub fn cmd_pushforward(variety_text: &str, map_text: &str, opts: &Options) -> Result<Report> {
    let v = load(variety_text, opts)?;
    let m = parse_map(map_text, v.coordinates())?;
    let c = v.complexification();
    let p = pushforward(&c, &m.map)?;
    let mut results = ideal_value(&p.image)?;
    results["src_dim"] = json!(p.dims.src_dim);
    results["img_dim"] = json!(p.dims.img_dim);
    results["dims_equal"] = json!(p.dims.equal);
    results["finite"] = json!(p.finite);
    results["complexified_map"] = json!(strings(&complexify_map(&m.map)?));
    let checks = m
        .checks
        .iter()
        .map(|(src, poly)| {
            Ok(json!({ "input": src, "polynomial": poly.to_string(), "member": p.image.contains(poly)? }))
        })
        .collect::<Result<Vec<_>>>()?;
    results["checks"] = Value::Array(checks);
    let mut inputs = variety_inputs(&v, opts);
    inputs["map"] = json!({
        "components": strings(m.map.components()),
        "targets": m.map.target().names(),
        "target_real_variables": m.target_coords.real().names(),
    });
    let mut report = Report::new("pushforward", inputs, results);
    if !p.finite {
        report.caveat("finiteness not certified by the pure-power criterion; the image dimension may drop");
    }
    Ok(report)
}

/// Segre, CR and dimension-formula data per point; the origin when no
/// point is given.
pub fn cmd_classify(text: &str, opts: &Options) -> Result<Report> {
    let v = load(text, opts)?;
    let mut points: Vec<Point> = opts.at.iter().cloned().collect();
    points.extend(opts.grid.iter().cloned());
    if points.is_empty() {
        points.push(Point::origin(v.n()));
    }
    let g = classify_grid(&v, &points)?;
    let probe_points: Vec<Point> = g.points.iter().filter(|c| c.on_variety).map(|c| c.point.clone()).collect();
    let probe = upper_semicontinuity_probe(&v, &probe_points, &[])?;
    let mut report = Report::new("classify", variety_inputs(&v, opts), Value::Null);
    let mut entries = Vec::new();
    let mut estimates = probe.estimates.iter();
    for c in &g.points {
        let mut e = classification_value(c);
        if c.on_variety {
            let cr = v.cr_rank_at(&c.point)?;
            e["cr_rank"] = json!(cr.rank);
            e["cr_dim"] = json!(cr.cr_dim);
            let est = estimates.next().expect("one estimate per on-variety point");
            e["intrinsic_estimate"] = json!(est.estimate);
            e["hypothesis_held"] = json!(est.hypothesis_held);
            for cv in &est.caveats {
                report.caveat(cv);
            }
        }
        entries.push(e);
    }
    report.caveat(NONCOHERENCE_CAVEAT);
    report.results = json!({
        "points": entries,
        "real_dim": SegreContext::new(&v)?.real_dim,
        "intrinsic_dim": probe.global_dim,
        "generic_segre_dim": g.generic_segre_dim,
        "segre_nondegenerate_on_sample": g.nondegenerate_on_sample,
        "max_nondegenerate_on_sample": g.max_nondegenerate_on_sample,
        "generic_disagrees_with_diagonal": g.generic_disagrees_with_diagonal,
    });
    Ok(report)
}
