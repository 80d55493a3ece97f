use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::Engine;
use crate::quiver::{RankConditions, RectangleDiagram};
use crate::scalar::sign;

/// A coefficient contradicting the expected sign pattern.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub diagram: String,
    pub mu: Vec<String>,
    pub coeff: i64,
    pub reason: String,
}

/// Outcome of a sign sweep. Everything except `wall_time_secs` is a
/// deterministic function of the inputs.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub bundles: usize,
    pub max_rank: u32,
    /// Valid rank conditions enumerated.
    pub rank_conditions: usize,
    /// Distinct rectangle diagrams among them.
    pub diagrams: usize,
    /// Nonzero coefficients inspected.
    pub coefficients: usize,
    /// Largest total weight `|mu|` seen.
    pub max_weight: usize,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub wall_time_secs: f64,
}

/// Every valid rank array for `bundles` bundles of rank at most `max_rank`.
pub fn all_rank_conditions(bundles: usize, max_rank: u32) -> Vec<RankConditions> {
    let mut out = Vec::new();
    if bundles == 0 {
        return out;
    }
    let mut ranks = vec![0u32; bundles];
    loop {
        fill_diagonal(&ranks, 1, &mut vec![ranks.clone()], &mut out);
        let mut k = 0;
        loop {
            if k == bundles {
                return out;
            }
            ranks[k] += 1;
            if ranks[k] <= max_rank {
                break;
            }
            ranks[k] = 0;
            k += 1;
        }
    }
}

/// `diags[k][i] = r_{i,i+k}`; fills diagonal `k` entry by entry.
fn fill_diagonal(ranks: &[u32], k: usize, diags: &mut Vec<Vec<u32>>, out: &mut Vec<RankConditions>) {
    let m = ranks.len();
    if k == m {
        let r = RankConditions::from_fn(ranks, |i, j| diags[j - i][i]);
        debug_assert!(r.validate());
        out.push(r);
        return;
    }
    diags.push(Vec::with_capacity(m - k));
    fill_entry(ranks, k, 0, diags, out);
    diags.pop();
}

fn fill_entry(ranks: &[u32], k: usize, i: usize, diags: &mut Vec<Vec<u32>>, out: &mut Vec<RankConditions>) {
    let m = ranks.len();
    if i + k == m {
        fill_diagonal(ranks, k + 1, diags, out);
        return;
    }
    let left = diags[k - 1][i];
    let below = diags[k - 1][i + 1];
    let hi = left.min(below);
    let lo = if k >= 2 {
        (left as i64 + below as i64 - diags[k - 2][i + 1] as i64).max(0) as u32
    } else {
        0
    };
    for v in lo..=hi {
        diags[k].push(v);
        fill_entry(ranks, k, i + 1, diags, out);
        diags[k].pop();
    }
}

/// Checks on one diagram: `(-1)^{|mu| - d} c_mu >= 0`, `|mu| >= d`, and a
/// nonempty nonnegative layer at `|mu| = d`.
fn check_diagram(engine: &Engine, d: &RectangleDiagram) -> (usize, usize, Vec<Violation>) {
    let p = engine.quiver_for_diagram(d);
    let codim = d.codim();
    let mut bad = Vec::new();
    let mut max_weight = 0;
    let mut bottom = 0usize;
    let mk = |mu: &Vec<crate::Partition>, c: i64, reason: &str| Violation {
        diagram: d.to_string(),
        mu: mu.iter().map(|p| p.to_string()).collect(),
        coeff: c,
        reason: reason.to_string(),
    };
    for (mu, &c) in p.iter() {
        let w: usize = mu.iter().map(|p| p.weight()).sum();
        max_weight = max_weight.max(w);
        if w < codim {
            bad.push(mk(mu, c, "weight below codimension"));
            continue;
        }
        if w == codim {
            bottom += 1;
        }
        if sign::<i64>((w - codim) as i64) * c < 0 {
            bad.push(mk(mu, c, "sign"));
        }
    }
    if bottom == 0 {
        bad.push(Violation {
            diagram: d.to_string(),
            mu: Vec::new(),
            coeff: 0,
            reason: "empty lowest layer".into(),
        });
    }
    (p.len(), max_weight, bad)
}

/// Tests the alternating sign pattern of `c_mu(r)` for all rank
/// conditions on `bundles` bundles of rank at most `max_rank`, once per
/// rectangle diagram, in parallel.
pub fn conjecture_sweep(engine: &Engine, bundles: usize, max_rank: u32) -> SweepReport {
    let start = Instant::now();
    let all = all_rank_conditions(bundles, max_rank);
    let diagrams: BTreeSet<RectangleDiagram> = all
        .iter()
        .map(|r| r.rectangle_diagram().expect("enumerated ranks are valid"))
        .collect();
    let diagrams: Vec<RectangleDiagram> = diagrams.into_iter().collect();
    // small diagrams first so that larger ones find their reductions cached
    let mut by_size = diagrams.clone();
    by_size.sort_by_key(|d| (d.n(), d.codim()));
    let results: Vec<(usize, usize, Vec<Violation>)> =
        by_size.par_iter().map(|d| check_diagram(engine, d)).collect();
    let mut violations: Vec<Violation> = results.iter().flat_map(|r| r.2.clone()).collect();
    violations.sort();
    SweepReport {
        bundles,
        max_rank,
        rank_conditions: all.len(),
        diagrams: diagrams.len(),
        coefficients: results.iter().map(|r| r.0).sum(),
        max_weight: results.iter().map(|r| r.1).max().unwrap_or(0),
        violations,
        wall_time_secs: start.elapsed().as_secs_f64(),
    }
}
