//! Canonical JSON emission. Maps are emitted with sorted keys and lists in
//! the deterministic orders the computation layers guarantee, so identical
//! invocations produce byte-identical output.

use crate::characters::Character;
use crate::lattice::Weight;
use crate::lp::{IdentityReport, MultiPoly, UniPoly};
use crate::rat::fmt_q;
use crate::reports::{
    NullspaceCheck, RelationOutcome, RowStatus, SmallNormOutcome, Table1Row, TableRowResult,
};
use crate::roots::{RootSystem, SubRootSystem};
use crate::subsystems;
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn weight_value(w: &Weight) -> Value {
    Value::Array(w.coords.iter().map(|c| Value::String(fmt_q(c))).collect())
}

fn bigints_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn rootsystem_value(psi: &RootSystem) -> Value {
    json!({
        "label": psi.label.to_string(),
        "rank": psi.rank(),
        "dim": psi.space.dim(),
        "num_roots": psi.num_roots(),
        "simple_roots": psi.simple_roots().iter().map(weight_value).collect::<Vec<_>>(),
        "roots": psi.roots().iter().map(weight_value).collect::<Vec<_>>(),
    })
}

pub fn subsystem_value(phi: &SubRootSystem) -> Value {
    let parent = &phi.parent;
    json!({
        "parent": parent.label.to_string(),
        "type": subsystems::canonical_type_name(phi),
        "num_roots": phi.len(),
        "roots": phi.roots().map(weight_value).collect::<Vec<_>>(),
    })
}

/// Character dump: terms sorted by (squared length, coordinates), with
/// fundamental-weight coordinates when they are integral.
pub fn character_value(c: &Character) -> Value {
    let psi = &c.sym.base;
    let terms: Vec<Value> = c
        .sorted_keys()
        .into_iter()
        .map(|k| {
            let fw = psi.fw_coords(k);
            let fw_int: Option<Vec<BigInt>> =
                fw.iter().map(crate::rat::as_integer).collect();
            json!({
                "weight": weight_value(k),
                "fw": fw_int.map(|v| bigints_value(&v)).unwrap_or(Value::Null),
                "norm2": fmt_q(&psi.space.norm2(k)),
                "coeff": fmt_q(&c.terms[k]),
            })
        })
        .collect();
    json!({
        "parent": psi.label.to_string(),
        "group": if c.sym.has_outer() { "extended" } else { "weyl" },
        "terms": terms,
    })
}

pub fn multipoly_value(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            json!({
                "exponents": m.exponents(),
                "coeff": fmt_q(c),
            })
        })
        .collect();
    json!({ "variables": "x0,x1,...", "terms": terms })
}

pub fn unipoly_value(p: &UniPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "power": e, "coeff": fmt_q(c) }))
        .collect();
    json!({ "variable": "t", "terms": terms })
}

pub fn identity_report_value(r: &IdentityReport) -> Value {
    let items: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "n": c.n,
                "degree": c.degree,
                "status": if c.pass { "pass" } else { "fail" },
            })
        })
        .collect();
    json!({ "all_pass": r.all_pass(), "checks": items })
}

pub fn table1_value(rows: &[Table1Row]) -> Value {
    let items: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "label": r.label,
                "expected": r.expected,
                "computed": fmt_q(&r.computed),
                "status": if r.pass() { "pass" } else { "fail" },
            })
        })
        .collect();
    json!({ "rows": items })
}

fn row_status_str(s: &RowStatus) -> &'static str {
    match s {
        RowStatus::Ok => "ok",
        RowStatus::PaperInconsistent => "reported",
        RowStatus::Mismatch => "fail",
    }
}

pub fn table_report_value(rows: &[TableRowResult]) -> Value {
    let items: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "parent": r.parent,
                "name": r.name,
                "expected_fw": r.expected_fw,
                "expected_e": r.expected_e,
                "computed_fw": r.computed_fw.as_ref().map(|v| bigints_value(v)).unwrap_or(Value::Null),
                "computed_e": fmt_q(&r.computed_e),
                "status": row_status_str(&r.status),
            })
        })
        .collect();
    json!({ "rows": items })
}

pub fn relation_report_value(rows: &[RelationOutcome]) -> Value {
    let items: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "id": r.id,
                "parent": r.parent,
                "holds": r.holds,
                "residual_terms": r.residual_terms,
                "terms": r.terms.iter().map(|t| json!({
                    "coeff": t.coeff,
                    "name": t.name,
                    "leading": t.leading_fw,
                    "weyl_order": t.weyl_order,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "relations": items })
}

pub fn nullspace_value(c: &NullspaceCheck) -> Value {
    json!({
        "parent": c.parent,
        "class_count": c.class_count,
        "classes": c.class_names,
        "nullspace_dim": c.nullspace_dim,
        "catalog_rank": c.catalog_rank,
        "catalog_inside": c.catalog_inside,
    })
}

pub fn small_norm_value(o: &SmallNormOutcome) -> Value {
    json!({
        "parent": o.parent,
        "pass": o.pass,
        "flagged": o.flagged,
        "counts": o.counts.iter().map(|(n, c)| json!({"norm2": n, "orbits": c})).collect::<Vec<_>>(),
    })
}

pub fn relation_vectors_value(names: &[String], vectors: &[Vec<BigInt>]) -> Value {
    json!({
        "characters": names,
        "relations": vectors.iter().map(|v| bigints_value(v)).collect::<Vec<_>>(),
    })
}
