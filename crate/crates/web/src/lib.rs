//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings or numbers and returns a JSON string:
//! either the result object or `{"error": "..."}`.

use bitangent_core::expr::{format_quartic, parse_int_list, parse_quartic};
use bitangent_core::projective::{Line, ProjPoint};
use bitangent_core::quadratic_points::{bitangents_through_point, quadratic_points_batch, tangent_section};
use bitangent_core::tangency::{
    classify_tangency, contact_points, example_quartic, restrict_quartic_to_line, verify_example,
};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest parameter range accepted by [`quadratic_points`].
pub const MAX_PARAMS: i64 = 200;

type Res<T> = Result<T, String>;

fn point(text: &str) -> Res<ProjPoint> {
    let v = parse_int_list(text, 4).map_err(|e| e.to_string())?;
    ProjPoint::new([v[0], v[1], v[2], v[3]]).map_err(|e| e.to_string())
}

fn line(text: &str) -> Res<Line> {
    let (a, b) = text.split_once(';').ok_or("expected two points separated by ';'")?;
    Line::from_points(point(a)?, point(b)?).map_err(|e| e.to_string())
}

fn finish(r: Res<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

/// Tangency type of the line `"a0,a1,a2,a3; b0,b1,b2,b3"` on the surface.
#[wasm_bindgen]
pub fn classify(quartic: &str, line_text: &str) -> String {
    finish((|| {
        let f = parse_quartic(quartic).map_err(|e| e.to_string())?;
        let l = line(line_text)?;
        let t = classify_tangency(&f, &l);
        let contacts = if t.kind.is_bitangent() { contact_points(&f, &l).ok() } else { None };
        Ok(json!({
            "quartic": format_quartic(&f),
            "plucker": l.plucker(),
            "restriction": restrict_quartic_to_line(&f, &l).to_string(),
            "kind": t.kind.name(),
            "partition": t.partition(),
            "contacts": value(&contacts),
        }))
    })())
}

/// Symbolic check of the example family under both readings.
#[wasm_bindgen]
pub fn family_report() -> String {
    finish(Ok(value(&verify_example())))
}

/// The member of the example family at `(s0 : s1)`: the line through
/// `(s1^3, 0, s0^3, 0)` and `(0, s0, 0, s1)`, classified on the example surface.
#[wasm_bindgen]
pub fn family_member(s0: i32, s1: i32) -> String {
    finish((|| {
        let (s0, s1) = (i64::from(s0), i64::from(s1));
        let a = ProjPoint::new([s1.pow(3), 0, s0.pow(3), 0]).map_err(|e| e.to_string())?;
        let b = ProjPoint::new([0, s0, 0, s1]).map_err(|e| e.to_string())?;
        let l = Line::from_points(a, b).map_err(|e| e.to_string())?;
        let f = example_quartic();
        let t = classify_tangency(&f, &l);
        let contacts = if t.kind.is_bitangent() { contact_points(&f, &l).ok() } else { None };
        Ok(json!({
            "param": [s0, s1],
            "plucker": l.plucker(),
            "restriction": restrict_quartic_to_line(&f, &l).to_string(),
            "kind": t.kind.name(),
            "contacts": value(&contacts),
        }))
    })())
}

/// Tangent section at `point`, bitangents through it, and quadratic points
/// on the pencil lines `(t : 1)` for `t` in `lo..=hi`.
#[wasm_bindgen]
pub fn quadratic_points(quartic: &str, point_text: &str, lo: i32, hi: i32) -> String {
    finish((|| {
        let f = parse_quartic(quartic).map_err(|e| e.to_string())?;
        let p = point(point_text)?;
        let (lo, hi) = (i64::from(lo), i64::from(hi));
        if hi < lo || hi - lo >= MAX_PARAMS {
            return Err(format!("range must be nonempty and hold at most {MAX_PARAMS} values"));
        }
        let section = tangent_section(&f, &p).map_err(|e| e.to_string())?;
        let through = bitangents_through_point(&f, &p).map_err(|e| e.to_string())?;
        let params: Vec<(i64, i64)> = (lo..=hi).map(|t| (t, 1)).collect();
        let batch = quadratic_points_batch(&f, &p, &params).map_err(|e| e.to_string());
        let directions: Vec<Value> = through
            .rational
            .iter()
            .map(|d| {
                json!({
                    "param": format!("{}:{}", d.param.0, d.param.1),
                    "kind": d.tangency.kind.name(),
                    "certified": d.certified,
                    "plucker": d.line.plucker(),
                })
            })
            .collect();
        Ok(json!({
            "section": value(&section),
            "directions": directions,
            "through_point": value(&through),
            "batch": match batch {
                Ok(b) => value(&b),
                Err(e) => json!({ "error": e }),
            },
        }))
    })())
}
