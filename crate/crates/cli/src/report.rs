//! Report assembly and rendering. Every command produces one envelope
//! holding the command echo, the resolved configuration, parameters,
//! results and warnings; the JSON and human renderings are two views of
//! the same data. Numeric values are serialized as decimal strings so
//! that arbitrary-precision results survive the trip.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use k3cone_core::cone::Rank2Config;
use k3cone_core::ray::Ray;
use k3cone_core::{DiscriminantGroup, DivisibilityProfile, GramLattice, IVec2};

pub struct Report {
    pub command: String,
    pub config: Value,
    pub params: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    /// Human-readable body lines.
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            config: Value::Null,
            params: Value::Null,
            result: Value::Null,
            warnings: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        map.insert("config".into(), self.config.clone());
        map.insert("params".into(), self.params.clone());
        map.insert("result".into(), self.result.clone());
        map.insert(
            "warnings".into(),
            Value::Array(
                self.warnings
                    .iter()
                    .map(|w| Value::String(w.clone()))
                    .collect(),
            ),
        );
        Value::Object(map)
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

pub fn big_str(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn gram_json(lattice: &GramLattice) -> Value {
    Value::Array(
        lattice
            .gram()
            .iter()
            .map(|row| Value::Array(row.iter().map(big_str).collect()))
            .collect(),
    )
}

pub fn profile_json(profile: Option<&DivisibilityProfile>) -> Value {
    match profile {
        Some(p) => Value::Array(p.divisors().iter().map(big_str).collect()),
        None => Value::Null,
    }
}

pub fn vec_json(v: &IVec2) -> Value {
    json!([v.0.to_string(), v.1.to_string()])
}

pub fn disc_group_json(d: &DiscriminantGroup) -> Value {
    json!({
        "cyclic_orders": d.cyclic_orders.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
        "q_values": d.q_values.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
    })
}

/// "109g - 38tau" style rendering of a coordinate vector against basis
/// labels. Terms are reordered so the leading printed term is positive
/// whenever one positive term exists.
pub fn format_class(v: &IVec2, labels: &[String]) -> String {
    use num_traits::Signed;
    let mut terms: Vec<(BigInt, &str)> = vec![
        (v.0.clone(), labels[0].as_str()),
        (v.1.clone(), labels[1].as_str()),
    ];
    terms.retain(|(c, _)| !num_traits::Zero::is_zero(c));
    if terms.is_empty() {
        return "0".to_string();
    }
    if terms[0].0.is_negative() && terms.len() == 2 && terms[1].0.is_positive() {
        terms.swap(0, 1);
    }
    let mut out = String::new();
    for (i, (c, label)) in terms.iter().enumerate() {
        let mag = c.magnitude();
        let coeff = if mag == &num_bigint::BigUint::from(1u8) {
            String::new()
        } else {
            mag.to_string()
        };
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&coeff);
        out.push_str(label);
    }
    out
}

pub fn ray_json(cfg: &Rank2Config, ray: &Ray) -> Value {
    let square = k3cone_core::cone::ray_square(cfg, ray);
    match ray.as_lattice() {
        Some(v) => json!({
            "type": "lattice",
            "coords": vec_json(v),
            "display": format_class(v, cfg.lattice().labels()),
            "square": square.to_string(),
        }),
        None => json!({
            "type": "irrational",
            "display": ray.to_string(),
            "square": square.to_string(),
        }),
    }
}

pub fn ray_human(cfg: &Rank2Config, ray: &Ray) -> String {
    match ray.as_lattice() {
        Some(v) => format!(
            "{} {} (square {})",
            format_class(v, cfg.lattice().labels()),
            v,
            k3cone_core::cone::ray_square(cfg, ray)
        ),
        None => format!("{ray} (square 0)"),
    }
}

pub fn config_json(
    name: &str,
    lattice: &GramLattice,
    profile: Option<&DivisibilityProfile>,
    g: Option<&IVec2>,
) -> Value {
    json!({
        "preset": name,
        "labels": lattice.labels(),
        "gram": gram_json(lattice),
        "profile": profile_json(profile),
        "g": g.map(vec_json).unwrap_or(Value::Null),
    })
}

pub const CONJECTURAL_CONES: &str =
    "conjectural: nodal and ample-cone outputs are the predictions of the effective-curve and ample-cone conjectures for fourfolds of this deformation type, not theorems";

pub const CONJECTURAL_FIBRATION: &str =
    "conjectural: a primitive square-zero boundary class is predicted to induce an abelian-surface fibration";

pub const CONJECTURAL_SCROLLS: &str =
    "conjectural: rows are numerical predictions for scrolls traced by nodal rational curves";
