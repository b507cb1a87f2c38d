mod common;

use std::io::Write;
use std::process::{Command, Output};

use common::*;
use segre_toolkit::{Polynomial, VarContext};
use serde_json::Value;
use tempfile::NamedTempFile;

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_segre")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn complexify_examples() {
    let cone = file(CONE);
    let r = json(&["complexify", path(&cone)]);
    assert_eq!(r["results"]["generators"], serde_json::json!(["z*xi_z - w*xi_w"]));
    assert_eq!(r["results"]["real_dim"], 3);
    let surf = file(SURFACE);
    let r = json(&["complexify", path(&surf)]);
    assert_eq!(r["results"]["generators"].as_array().unwrap().len(), 2);
    assert_eq!(r["results"]["real_dim"], 2);
    let empty = file("vars: z, w\n");
    let r = json(&["complexify", path(&empty)]);
    assert_eq!(r["results"]["real_dim"], 4);
    assert!(r["results"]["message"].as_str().unwrap().contains("2n"));
}

#[test]
fn segre_examples() {
    let cone = file(CONE);
    let r = json(&["segre", path(&cone), "--at", "0,0"]);
    assert_eq!(r["results"]["at"]["segre_dim"], 2);
    assert_eq!(r["results"]["at"]["degenerate"], true);
    let r = json(&["segre", path(&cone), "--at", "1,1"]);
    assert_eq!(r["results"]["at"]["segre_dim"], 1);
    assert_eq!(r["results"]["at"]["degenerate"], false);
    let umb = file(UMBRELLA);
    let r = json(&["segre", path(&umb), "--at", "0,0"]);
    assert_eq!(r["results"]["at"]["fiber_ideal"], "(z^3)");
    assert_eq!(r["results"]["at"]["segre_dim"], 1);
    let r = json(&["segre", path(&cone), "--grid", "0,0;1,1;2,2"]);
    assert_eq!(r["results"]["grid"]["diagonal_segre_dims"], serde_json::json!([2, 1, 1]));
    assert_eq!(r["results"]["grid"]["segre_nondegenerate_on_sample"], false);
}

#[test]
fn intrinsic_examples() {
    let powers = file(POWERS);
    let r = json(&["intrinsic", path(&powers)]);
    let gens: Vec<&str> = r["results"]["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    assert!(gens.contains(&"w1^3 - w2^2"));
    assert_eq!(r["results"]["dim"], 2);
    for text in [SURFACE, REAL_LINE] {
        let f = file(text);
        let r = json(&["intrinsic", path(&f)]);
        assert_eq!(r["results"]["ideal"], "(0)");
        assert_eq!(r["results"]["generic"], true);
    }
    let umb = file(UMBRELLA);
    let r = json(&["intrinsic", path(&umb), "--at", "0,1/2"]);
    let caveats = r["caveats"].as_array().unwrap();
    assert!(caveats.iter().any(|c| c.as_str().unwrap().contains("noncoherence")));
    let r = json(&["intrinsic", path(&umb), "--at", "0,0"]);
    assert_eq!(r["results"]["formula_check"]["lhs"], 2);
    assert_eq!(r["results"]["formula_check"]["rhs"], 2);
}

#[test]
fn pushforward_examples() {
    let line = file(REAL_LINE);
    let sq = file("targets: w:omega\ncomp: z^2\n");
    let r = json(&["pushforward", path(&line), path(&sq)]);
    assert_eq!(r["results"]["ideal"], "(w - omega)");
    assert_eq!((r["results"]["src_dim"].as_i64(), r["results"]["img_dim"].as_i64()), (Some(1), Some(1)));
    let plane = file(REAL_PLANE);
    let whitney = file("targets: zeta, omega\nrealvars: x y, s t\ncomp: z + i*z*w\ncomp: w^2\ncheck: y^2 - x^2*s\ncheck: t\n");
    let r = json(&["pushforward", path(&plane), path(&whitney)]);
    assert_eq!(r["results"]["img_dim"], 2);
    assert_eq!(r["results"]["dims_equal"], true);
    assert!(r["results"]["checks"].as_array().unwrap().iter().all(|c| c["member"] == true));
    let cone = file(CONE);
    let id = file("targets: u, v\ncomp: z\ncomp: w\n");
    let r = json(&["pushforward", path(&cone), path(&id)]);
    assert_eq!(r["results"]["generators"], serde_json::json!(["u*xi_u - v*xi_v"]));
}

#[test]
fn classify_defaults_to_origin() {
    let surf = file(SURFACE);
    let r = json(&["classify", path(&surf)]);
    let p = &r["results"]["points"][0];
    assert_eq!(p["segre_dim"], 1);
    assert_eq!(p["cr_rank"], 1);
    assert_eq!(p["cr_dim"], 1);
    let r = json(&["classify", path(&surf), "--at", "1,1"]);
    assert_eq!(r["results"]["points"][0]["cr_rank"], 2);
}

#[test]
fn exit_codes() {
    let cone = file(CONE);
    let bad = file("vars: z\neq: z + * 2\n");
    assert_eq!(run(&["complexify", path(&bad)]).status.code(), Some(2));
    let unknown = file("vars: z\neq: sin(z)\n");
    assert_eq!(run(&["complexify", path(&unknown)]).status.code(), Some(2));
    assert_eq!(run(&["segre", path(&cone), "--at", "1,("]).status.code(), Some(2));
    assert_eq!(run(&["segre", path(&cone), "--at", "1"]).status.code(), Some(3));
    assert_eq!(run(&["intrinsic", path(&cone), "--at", "1,0"]).status.code(), Some(3));
    let two = file("targets: u, v\ncomp: z\n");
    let line = file(REAL_LINE);
    assert_eq!(run(&["pushforward", path(&line), path(&two)]).status.code(), Some(3));
    let powers = file(POWERS);
    let out = run(&["--max-pairs", "2", "intrinsic", path(&powers)]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit exceeded"));
    let huge = file("vars: z\neq: z^3000000000\n");
    assert_eq!(run(&["complexify", path(&huge)]).status.code(), Some(4));
    assert_eq!(run(&["complexify", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic_and_sorted() {
    let umb = file(UMBRELLA);
    let args = ["--json", "classify", path(&umb), "--grid", "0,0;0,1;1,1"];
    let a = run(&args).stdout;
    let b = run(&args).stdout;
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    let resorted = serde_json::to_string_pretty(&v).unwrap();
    assert_eq!(String::from_utf8(a).unwrap().trim_end(), resorted);
}

#[test]
fn printed_generators_reparse() {
    for (name, text) in EXAMPLES {
        let f = file(text);
        let r = json(&["complexify", path(&f)]);
        let vars: Vec<String> =
            r["inputs"]["variables"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect();
        let ctx = VarContext::new(&vars).unwrap();
        for g in r["results"]["generators"].as_array().unwrap() {
            let s = g.as_str().unwrap();
            assert_eq!(Polynomial::parse(&ctx, s).unwrap().to_string(), s, "{name}");
        }
    }
}

#[test]
fn text_output() {
    let cone = file(CONE);
    let out = run(&["segre", path(&cone), "--at", "1,1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: segre\n"));
    assert!(text.contains("segre_dim: 1"));
}
