//! Double Grothendieck polynomials, their stable limits, and evaluations of
//! the stable polynomials `G_lambda` in finitely many variables.

mod eval;

use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::polyzx::{divided_difference, Monomial, MAX_X};
use crate::shapes::Permutation;
use crate::Poly;

pub use eval::{eval_g_double, eval_g_single, lenart_det, x_to_y};

/// Which ascent to follow when descending from the longest element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Chain {
    #[default]
    SmallestAscent,
    LargestAscent,
}

/// `𝔊_w(x; y)` computed inside `S_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrothPoly {
    pub w: Permutation,
    pub n: usize,
    pub value: Poly,
}

impl fmt::Display for GrothPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

type GrothMemo = RwLock<FxHashMap<(usize, Permutation), Arc<Poly>>>;

fn memo() -> &'static GrothMemo {
    static MEMO: OnceLock<GrothMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `x_i + y_j - x_i y_j`, which is `x_i` when `y_j` is not kept.
fn factor(i: usize, j: usize, nx: usize, ny: usize) -> Poly {
    if j > ny {
        return Poly::x(i, nx, ny);
    }
    let mut p = Poly::x(i, nx, ny) + Poly::y(j, nx, ny);
    p.add_term(Monomial::x(i).mul(&Monomial::y(j)), -1);
    p
}

/// `prod_{(i,j) in D} (x_i + y_j - x_i y_j)` over the diagram of a
/// partition, keeping `y_1..y_ny` and every term of degree at most `cap`.
fn dominant_poly(code: &[u32], nx: usize, ny: usize, cap: Option<u32>) -> Poly {
    let mut p = Poly::one(nx, ny);
    for (i, &c) in code.iter().enumerate() {
        for j in 1..=c as usize {
            p = p.mul_truncated(&factor(i + 1, j, nx, ny), cap);
        }
    }
    p
}

/// The staircase product for the longest element of `S_n`.
pub fn longest_element_poly(n: usize) -> Poly {
    let code: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let k = n.saturating_sub(1);
    dominant_poly(&code, n.max(1), k, None)
}

/// `𝔊_w(x; y)` over the trimmed window of `w`, memoized.
pub fn groth_double(w: &Permutation) -> GrothPoly {
    groth_double_in_window(w, w.size().max(1))
}

/// `𝔊_w` computed inside `S_n` for `n >= w.size()`; by stability the
/// value does not depend on `n`.
pub fn groth_double_in_window(w: &Permutation, n: usize) -> GrothPoly {
    assert!(n >= w.size(), "window {n} is smaller than the permutation");
    let value = (*descend_memo(w, n)).clone();
    GrothPoly {
        w: w.clone(),
        n,
        value,
    }
}

fn descend_memo(w: &Permutation, n: usize) -> Arc<Poly> {
    let key = (n, w.clone());
    if let Some(v) = memo().read().unwrap().get(&key) {
        return v.clone();
    }
    let v = Arc::new(match w.ascents(n).first() {
        None => longest_element_poly(n),
        Some(&i) => divided_difference(&descend_memo(&w.swap_positions(i), n), i),
    });
    memo().write().unwrap().insert(key, v.clone());
    v
}

/// `𝔊_w` along an explicit chain, without the memo.
pub fn groth_double_with_chain(w: &Permutation, n: usize, chain: Chain) -> Poly {
    assert!(n >= w.size(), "window {n} is smaller than the permutation");
    let mut steps = Vec::new();
    let mut u = w.clone();
    loop {
        let asc = u.ascents(n);
        let i = match chain {
            Chain::SmallestAscent => asc.first(),
            Chain::LargestAscent => asc.last(),
        };
        match i {
            Some(&i) => {
                steps.push(i);
                u = u.swap_positions(i);
            }
            None => break,
        }
    }
    let mut p = longest_element_poly(n);
    for &i in steps.iter().rev() {
        p = divided_difference(&p, i);
    }
    p
}

/// Single Grothendieck polynomial `𝔊_w(x; 0)`.
pub fn groth_single(w: &Permutation) -> Poly {
    let g = groth_double(w).value;
    g.restrict(g.nx(), 0)
}

/// `𝔊_{1^m x w}` restricted to `x_1..x_{m_vars}`, `y_1..y_{k_vars}` and
/// degree at most `d`.
///
/// Starts from the dominant permutation reached by bubbling the code of
/// `1^m x w` to the front, whose polynomial is a product of linear
/// factors, and applies the recorded isobaric divided differences back.
/// A divided difference lowers degree by at most one, so with `r` steps
/// remaining only degrees up to `d + r` are kept.
fn shifted_truncation(w: &Permutation, m: usize, m_vars: usize, k_vars: usize, d: u32) -> Result<Poly> {
    let u = w.shift(m);
    let size = u.size();
    let mut code = u.code();
    let mut steps = Vec::new();
    'bubble: loop {
        for i in 0..code.len().saturating_sub(1) {
            if code[i] <= code[i + 1] && code[i + 1] > 0 {
                let (a, b) = (code[i], code[i + 1]);
                code[i] = b + 1;
                code[i + 1] = a;
                steps.push(i + 1);
                continue 'bubble;
            }
        }
        break;
    }
    let nx = size.max(m_vars).max(1);
    if nx > MAX_X {
        return Err(Error::TooManyVariables(format!(
            "stabilization needs {nx} x variables, at most {MAX_X} are supported"
        )));
    }
    let r = steps.len() as u32;
    let mut p = dominant_poly(&code, nx, k_vars, Some(d + r));
    for (done, &i) in steps.iter().rev().enumerate() {
        let remaining = r - done as u32 - 1;
        p = divided_difference(&p, i).truncate(d + remaining);
    }
    Ok(p.restrict(m_vars, k_vars).truncate(d))
}

/// Degree `<= d` part of the stable polynomial `G_w(x_1..x_{m_vars}; y_1..y_{k_vars})`,
/// the limit of `𝔊_{1^m x w}` as `m` grows. Iterates `m = 0, 1, ..` until
/// two consecutive truncations agree.
///
/// Exceeding `m = d + l(w) + size(w)` would contradict stability and is
/// reported as [`Error::Internal`].
pub fn stable_truncation(w: &Permutation, m_vars: usize, k_vars: usize, d: u32) -> Result<Poly> {
    let cap = d as usize + w.length() + w.size();
    let mut prev = shifted_truncation(w, 0, m_vars, k_vars, d)?;
    for m in 1..=cap + 1 {
        let next = shifted_truncation(w, m, m_vars, k_vars, d)?;
        if next == prev {
            return Ok(next.with_widths(m_vars, k_vars));
        }
        prev = next;
    }
    Err(Error::Internal(format!(
        "no stabilization for {w} up to m = {}",
        cap + 1
    )))
}
