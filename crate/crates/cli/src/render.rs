//! Text and JSON forms of results. JSON lists terms in canonical order
//! (weight, then larger parts first) and has sorted keys.

use grothendieck::quiver::SweepReport;
use grothendieck::{GammaElement, Partition, Poly, QuiverElement, Tensor2};
use serde_json::{json, Value};

pub struct Output {
    text: String,
    json: Value,
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

impl Output {
    pub fn text(&self) -> String {
        self.text.clone()
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("JSON values always serialize")
    }

    pub fn poly(p: &Poly, mut meta: Value) -> Self {
        let terms: Vec<Value> = p
            .sorted_terms()
            .iter()
            .map(|(m, c)| json!({ "x": &m.x_exps()[..p.nx()], "y": &m.y_exps()[..p.ny()], "coeff": c }))
            .collect();
        meta["nx"] = json!(p.nx());
        meta["ny"] = json!(p.ny());
        meta["terms"] = json!(terms);
        meta["text"] = json!(p.to_string());
        Output { text: p.to_string(), json: meta }
    }

    pub fn gamma(e: &GammaElement) -> Self {
        let terms: Vec<Value> = e.iter().map(|(l, c)| json!({ "lambda": parts(l), "coeff": c })).collect();
        Output {
            text: e.to_string(),
            json: json!({ "terms": terms, "text": e.to_string() }),
        }
    }

    pub fn tensor(e: &Tensor2) -> Self {
        let terms: Vec<Value> = e
            .iter()
            .map(|((a, b), c)| json!({ "left": parts(a), "right": parts(b), "coeff": c }))
            .collect();
        Output {
            text: e.to_string(),
            json: json!({ "terms": terms, "text": e.to_string() }),
        }
    }

    pub fn quiver(e: &QuiverElement, codim: usize) -> Self {
        let terms: Vec<Value> = e
            .iter()
            .map(|(mu, c)| json!({ "mu": mu.iter().map(parts).collect::<Vec<_>>(), "coeff": c }))
            .collect();
        Output {
            text: e.to_string(),
            json: json!({ "codim": codim, "terms": terms, "text": e.to_string() }),
        }
    }

    pub fn integer(c: i64) -> Self {
        Output { text: c.to_string(), json: json!({ "coeff": c }) }
    }

    pub fn check(holds: bool) -> Self {
        Output {
            text: if holds { "OK" } else { "FAIL" }.into(),
            json: json!({ "holds": holds }),
        }
    }

    pub fn sweep(r: &SweepReport) -> Self {
        let text = format!(
            "bundles {}, max rank {}: {} rank conditions, {} diagrams, {} coefficients, max weight {}, {} violations",
            r.bundles,
            r.max_rank,
            r.rank_conditions,
            r.diagrams,
            r.coefficients,
            r.max_weight,
            r.violations.len()
        );
        let mut text = text;
        for v in &r.violations {
            text.push_str(&format!("\n  {} [{}] {}: {}", v.diagram, v.mu.join(" | "), v.coeff, v.reason));
        }
        Output {
            text,
            json: serde_json::to_value(r).expect("reports always serialize"),
        }
    }
}
