//! Parsing of the `--shape` argument: inline JSON or `@file`, covering the
//! built-in shapes plus a small catalog of named convex function graphs.

use std::fs;
use std::sync::Arc;

use serde::Deserialize;

use constangle::{ConvexShape, FunctionGraph, ShapeSpec};

/// CLI-level graph description; the catalog names fix (f, f', f'').
#[derive(Debug, Deserialize)]
struct GraphSpec {
    kind: String,
    name: String,
    a: f64,
    b: f64,
}

fn catalog_graph(name: &str, a: f64, b: f64) -> Result<FunctionGraph, String> {
    let (f, df, ddf): (constangle::RealFn, constangle::RealFn, constangle::RealFn) = match name {
        "exp" => (
            Arc::new(f64::exp),
            Arc::new(f64::exp),
            Arc::new(f64::exp),
        ),
        "cosh" => (
            Arc::new(f64::cosh),
            Arc::new(f64::sinh),
            Arc::new(f64::cosh),
        ),
        "x4" => (
            Arc::new(|x: f64| x.powi(4)),
            Arc::new(|x: f64| 4.0 * x.powi(3)),
            Arc::new(|x: f64| 12.0 * x * x),
        ),
        other => return Err(format!("unknown graph '{other}' (available: exp, cosh, x4)")),
    };
    FunctionGraph::new(f, df, ddf, a, b).map_err(|e| e.to_string())
}

/// Parse a `--shape` value. A leading `@` reads the JSON from a file.
pub fn parse_shape(arg: &str) -> Result<ConvexShape, String> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    } else {
        arg.to_string()
    };
    if let Ok(spec) = serde_json::from_str::<ShapeSpec>(&text) {
        return spec.build().map_err(|e| e.to_string());
    }
    if let Ok(g) = serde_json::from_str::<GraphSpec>(&text) {
        if g.kind == "graph" {
            return catalog_graph(&g.name, g.a, g.b).map(ConvexShape::function_graph);
        }
    }
    Err(format!(
        "invalid shape JSON: {text}\nexpected one of kinds: wedge, parabola, ellipse, sine, polygon, graph"
    ))
}
