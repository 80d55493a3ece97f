use std::collections::BTreeMap;
use std::sync::Arc;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::gamma::rect_coprod;
use crate::quiver::{RankConditions, RectangleDiagram};
use crate::scalar::sign;
use crate::shapes::{IntSeq, Partition};
use crate::QuiverElement;

/// `R_{i-1,i}` with `sigma` glued to its right side and `tau` below, as
/// row lengths top to bottom.
fn glued(rows: u32, cols: u32, sigma: &Partition, tau: &Partition) -> IntSeq {
    let mut v: Vec<i64> = (0..rows as usize)
        .map(|k| cols as i64 + sigma.get(k) as i64)
        .collect();
    v.extend(tau.parts().iter().map(|&t| t as i64));
    IntSeq::new(v)
}

impl Engine {
    /// The quiver coefficients `P_r = sum c_mu(r) G_{mu_1} (x) .. (x) G_{mu_n}`.
    pub fn quiver_coeffs(&self, r: &RankConditions) -> Result<Arc<QuiverElement>> {
        Ok(self.quiver_for_diagram(&r.rectangle_diagram()?))
    }

    /// `P_r` depends only on the rectangle diagram of `r`.
    pub fn quiver_for_diagram(&self, d: &RectangleDiagram) -> Arc<QuiverElement> {
        if let Some(v) = self.lookup(&self.quiver, d) {
            return v;
        }
        self.count_quiver();
        let v = match d.n() {
            0 => QuiverElement::basis(Vec::new()),
            1 => QuiverElement::basis(vec![d.partition(0, 1)]),
            _ => self.quiver_step(d),
        };
        self.store(&self.quiver, d.clone(), v)
    }

    /// Replaces each `G_{mu_1} (x) .. (x) G_{mu_{n-1}}` of the reduced
    /// element by the sum over coproduct splittings `(sigma_i, tau_i)` of
    /// `mu_i`, gluing `sigma_i` right of `R_{i-1,i}` and `tau_{i-1}` below it.
    fn quiver_step(&self, d: &RectangleDiagram) -> QuiverElement {
        let n = d.n();
        let reduced = self.quiver_for_diagram(&d.reduced());
        let mut out = QuiverElement::zero();
        let empty = Partition::empty();
        for (mu, c) in reduced.iter() {
            // (factors so far, tau_{i-1}) -> coefficient
            let mut states: BTreeMap<(Vec<Partition>, Partition), i64> = BTreeMap::new();
            states.insert((Vec::new(), empty.clone()), *c);
            for i in 1..=n {
                let (rows, cols) = d.rect(i - 1, i);
                let table = if i < n {
                    self.coproduct_table(&mu[i - 1])
                } else {
                    Arc::new(vec![(empty.clone(), empty.clone(), 1)])
                };
                let mut next: BTreeMap<(Vec<Partition>, Partition), i64> = BTreeMap::new();
                for ((prefix, tau_prev), coeff) in &states {
                    for (sigma, tau, dc) in table.iter() {
                        if sigma.len() > rows as usize {
                            continue;
                        }
                        let factor = self.straighten(&glued(rows, cols, sigma, tau_prev));
                        for (lambda, delta) in factor.iter() {
                            let mut p = prefix.clone();
                            p.push(lambda.clone());
                            let e = next.entry((p, tau.clone())).or_insert(0);
                            *e += coeff * dc * delta;
                        }
                    }
                }
                next.retain(|_, v| *v != 0);
                states = next;
            }
            for ((factors, _), v) in states {
                out.add_term(factors, v);
            }
        }
        out
    }

    /// `P_r` for rank conditions whose rectangles `R_ij` are empty when
    /// `j - i > 2`: the signed sum of `G_{mu_1} (x) .. (x) G_{mu_n}` over
    /// `mu_i = (R_{i-1,i} + sigma_i, tau_{i-1})` with `sigma_i`, `tau_i`
    /// splitting `R_{i-1,i+1}` by the rook strip rule.
    pub fn complexes_coeffs(&self, r: &RankConditions) -> Result<QuiverElement> {
        let d = r.rectangle_diagram()?;
        if !d.empty_below_row_two() {
            return Err(Error::Precondition(format!(
                "rectangle diagram {d} is not empty below the second row"
            )));
        }
        complexes_for_diagram(&d)
    }
}

fn complexes_for_diagram(d: &RectangleDiagram) -> Result<QuiverElement> {
    let n = d.n();
    if n == 0 {
        return Ok(QuiverElement::basis(Vec::new()));
    }
    let codim = d.codim() as i64;
    let empty = Partition::empty();
    // the splittings (sigma_i, tau_i) of R_{i-1,i+1}, i = 1..n-1
    let splits: Vec<Vec<(Partition, Partition)>> = (1..n)
        .map(|i| {
            let rect = d.partition(i - 1, i + 1);
            let (q, p) = d.rect(i - 1, i + 1);
            let subs = rect.subpartitions();
            let mut v = Vec::new();
            for s in &subs {
                for t in &subs {
                    if rect_coprod(p, q as usize, s, t) != 0 {
                        v.push((s.clone(), t.clone()));
                    }
                }
            }
            v
        })
        .collect();
    let mut out = QuiverElement::zero();
    let mut choice = vec![0usize; n - 1];
    loop {
        let mut factors = Vec::with_capacity(n);
        for i in 1..=n {
            let sigma = if i < n { &splits[i - 1][choice[i - 1]].0 } else { &empty };
            let tau_prev = if i > 1 { &splits[i - 2][choice[i - 2]].1 } else { &empty };
            let (rows, cols) = d.rect(i - 1, i);
            let seq = glued(rows, cols, sigma, tau_prev);
            let mu = seq.as_partition().ok_or_else(|| {
                Error::Internal(format!("glued shape {seq} is not a partition"))
            })?;
            factors.push(mu);
        }
        let weight: usize = factors.iter().map(Partition::weight).sum();
        out.add_term(factors, sign(weight as i64 - codim));
        // next choice
        let mut k = 0;
        loop {
            if k == n - 1 {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < splits[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
