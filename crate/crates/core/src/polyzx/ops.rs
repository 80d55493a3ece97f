use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::polyzx::{Monomial, MultiPoly};
use crate::scalar::{binomial, Coeff};

/// The isobaric divided difference
/// `pi_i(f) = ((1 - x_{i+1}) f - (1 - x_i) s_i f) / (x_i - x_{i+1})`.
pub fn divided_difference<C: Coeff>(f: &MultiPoly<C>, i: usize) -> MultiPoly<C> {
    try_divided_difference(f, i).expect("divided difference must divide exactly")
}

/// As [`divided_difference`], reporting a non-exact division as an error.
pub fn try_divided_difference<C: Coeff>(f: &MultiPoly<C>, i: usize) -> Result<MultiPoly<C>> {
    let nx = f.nx().max(i + 1);
    let one = MultiPoly::one(nx, f.ny());
    let g = &(&one - &MultiPoly::x(i + 1, nx, f.ny())) * f;
    let num = &g - &g.swap_x(i, i + 1);
    divide_by_difference(&num, i)
}

/// Divides by `x_i - x_{i+1}` with synthetic division in `x_i`, one
/// coefficient class (all other exponents fixed) at a time.
pub(crate) fn divide_by_difference<C: Coeff>(num: &MultiPoly<C>, i: usize) -> Result<MultiPoly<C>> {
    // rest monomial -> (exp of x_i -> (exp of x_{i+1} -> coeff))
    let mut groups: FxHashMap<Monomial, BTreeMap<u8, BTreeMap<u8, C>>> = FxHashMap::default();
    for (m, c) in num.terms() {
        let mut rest = *m;
        rest.set_x(i, 0);
        rest.set_x(i + 1, 0);
        *groups
            .entry(rest)
            .or_default()
            .entry(m.x_exp(i))
            .or_default()
            .entry(m.x_exp(i + 1))
            .or_insert_with(C::zero) += c.clone();
    }
    let mut out = MultiPoly::zero(num.nx(), num.ny());
    for (rest, mut rows) in groups {
        // c a^p b^q = c a^{p-1} b^q (a - b) + c a^{p-1} b^{q+1}
        while let Some((&p, _)) = rows.iter().next_back() {
            if p == 0 {
                break;
            }
            let row = rows.remove(&p).unwrap();
            for (q, c) in row {
                if c.is_zero() {
                    continue;
                }
                let mut m = rest;
                m.set_x(i, p - 1);
                m.set_x(i + 1, q);
                out.add_term(m, c.clone());
                let q1 = q.checked_add(1).ok_or_else(|| Error::Internal("exponent overflow".into()))?;
                *rows.entry(p - 1).or_default().entry(q1).or_insert_with(C::zero) += c;
            }
        }
        if let Some(rem) = rows.get(&0) {
            if rem.values().any(|c| !c.is_zero()) {
                return Err(Error::Internal(format!(
                    "x{} - x{} does not divide the numerator",
                    i,
                    i + 1
                )));
            }
        }
    }
    Ok(out)
}

/// Complete homogeneous symmetric polynomial `h_d(x_1..x_n)`.
pub fn h_complete<C: Coeff>(d: i64, n: usize) -> MultiPoly<C> {
    let mut out = MultiPoly::zero(n, 0);
    if d < 0 {
        return out;
    }
    if n == 0 {
        if d == 0 {
            out.add_term(Monomial::ONE, C::one());
        }
        return out;
    }
    let mut exps = vec![0u8; n];
    fill_compositions(d as u32, 0, &mut exps, &mut |e| {
        out.add_term(Monomial::from_exponents(e, &[]), C::one());
    });
    out
}

fn fill_compositions<F: FnMut(&[u8])>(rest: u32, k: usize, exps: &mut [u8], emit: &mut F) {
    if k + 1 == exps.len() {
        exps[k] = rest as u8;
        emit(exps);
        return;
    }
    for v in (0..=rest).rev() {
        exps[k] = v as u8;
        fill_compositions(rest - v, k + 1, exps, emit);
    }
    exps[k] = 0;
}

/// `h_k(x_1..x_n / 1^i)`: the `t^k` coefficient of `(1-t)^i / prod (1 - x_j t)`.
pub fn h_mod<C: Coeff>(k: i64, n: usize, i: usize) -> MultiPoly<C> {
    let mut out = MultiPoly::zero(n, 0);
    for a in 0..=(i as i64).min(k.max(-1)) {
        let c = binomial(i as i64, a) * if a % 2 == 0 { 1 } else { -1 };
        out += &h_complete::<C>(k - a, n).scale(&C::from_int(c));
    }
    out
}

/// Determinant by Laplace expansion along the rows, memoizing the minors
/// of the bottom rows by their column set.
pub fn det<C: Coeff>(m: &[Vec<MultiPoly<C>>]) -> MultiPoly<C> {
    det_mod(m, None)
}

/// The determinant modulo the ideal `(x_1^{e+1}, .., x_nx^{e+1})` for
/// `max_x_exp = Some(e)`. Reduction is a ring map, so this is the exact
/// determinant whenever that has x-degree at most `e` in each variable,
/// and intermediate minors stay small.
pub fn det_mod<C: Coeff>(m: &[Vec<MultiPoly<C>>], max_x_exp: Option<u8>) -> MultiPoly<C> {
    let reduce = |p: MultiPoly<C>| match max_x_exp {
        Some(e) => p.filter(|mono| mono.x_exps().iter().all(|&v| v <= e)),
        None => p,
    };
    let m: Vec<Vec<MultiPoly<C>>> = m
        .iter()
        .map(|row| row.iter().map(|p| reduce(p.clone())).collect())
        .collect();
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    assert!(n <= 30);
    let (nx, ny) = m
        .iter()
        .flatten()
        .fold((0, 0), |(a, b), p| (a.max(p.nx()), b.max(p.ny())));
    if n == 0 {
        return MultiPoly::one(nx, ny);
    }
    // minors of rows r..n keyed by column subsets of size n - r
    let mut level: FxHashMap<u32, MultiPoly<C>> = FxHashMap::default();
    for (j, e) in m[n - 1].iter().enumerate() {
        if !e.is_zero() {
            level.insert(1 << j, e.clone());
        }
    }
    for r in (0..n - 1).rev() {
        let mut next: FxHashMap<u32, MultiPoly<C>> = FxHashMap::default();
        for (&cols, minor) in &level {
            for (j, e) in m[r].iter().enumerate() {
                if cols & (1 << j) != 0 || e.is_zero() {
                    continue;
                }
                // sign from the position of column j inside cols | j
                let before = (cols & ((1u32 << j) - 1)).count_ones();
                let term = reduce(e * minor);
                let slot = next
                    .entry(cols | (1 << j))
                    .or_insert_with(|| MultiPoly::zero(nx, ny));
                if before % 2 == 0 {
                    *slot += &term;
                } else {
                    *slot -= &term;
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        level = next;
    }
    level
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| MultiPoly::zero(nx, ny))
        .with_widths(nx, ny)
}
