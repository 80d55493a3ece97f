//! Independent oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls the tableau search, the straightening or
//! the quiver code of the library; polynomial arithmetic is reused.

#![allow(dead_code)]

use std::collections::BTreeMap;

use grothendieck::polyzx::Monomial;
use grothendieck::{GammaElement, Partition, Poly};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Every partition of weight at most `w` with at most `l` parts.
pub fn partitions_up_to(w: usize, l: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for k in 0..=w {
        out.extend(Partition::all_of_weight_bounded(k, l));
    }
    out
}

/// Set-valued tableaux of shape `lambda`, entries in `1..=n`, with at most
/// `cap` entries in total, by plain backtracking over subsets. Calls
/// `f(content)` for each.
pub fn brute_svt<F: FnMut(&[u32])>(lambda: &[u32], n: usize, cap: usize, mut f: F) {
    let mut cells = Vec::new();
    let mut start = Vec::new();
    for (r, &len) in lambda.iter().enumerate() {
        start.push(cells.len());
        for c in 0..len as usize {
            let left = (c > 0).then(|| cells.len() - 1);
            let up = (r > 0).then(|| start[r - 1] + c);
            cells.push((left, up));
        }
    }
    if cells.len() > cap {
        return;
    }
    struct St<'a, F> {
        cells: &'a [(Option<usize>, Option<usize>)],
        n: usize,
        cap: usize,
        sets: Vec<u32>,
        f: F,
    }
    fn go<F: FnMut(&[u32])>(k: usize, used: usize, st: &mut St<'_, F>) {
        if k == st.cells.len() {
            let mut content = vec![0u32; st.n];
            for s in st.sets.iter() {
                for (e, c) in content.iter_mut().enumerate() {
                    *c += s >> e & 1;
                }
            }
            (st.f)(&content);
            return;
        }
        let (left, up) = st.cells[k];
        let spare = st.cap - used - (st.cells.len() - k);
        for s in 1u32..(1 << st.n) {
            let size = s.count_ones() as usize;
            if size - 1 > spare {
                continue;
            }
            let lo = s.trailing_zeros();
            if let Some(l) = left {
                if 31 - st.sets[l].leading_zeros() > lo {
                    continue;
                }
            }
            if let Some(u) = up {
                if 31 - st.sets[u].leading_zeros() >= lo {
                    continue;
                }
            }
            st.sets[k] = s;
            go(k + 1, used + size, st);
        }
        st.sets[k] = 0;
    }
    let mut st = St { cells: &cells, n, cap, sets: vec![0; cells.len()], f: &mut f };
    go(0, 0, &mut st);
}

/// `G_lambda(x_1..x_n)` from the brute force enumeration.
pub fn oracle_g(lambda: &Partition, n: usize) -> Poly {
    oracle_g_upto(lambda, n, usize::MAX)
}

/// `G_lambda(x_1..x_n)` truncated above degree `cap`.
pub fn oracle_g_upto(lambda: &Partition, n: usize, cap: usize) -> Poly {
    let mut p = Poly::zero(n, 0);
    let base = lambda.weight() as i64;
    brute_svt(lambda.parts(), n, cap, |content| {
        let e: Vec<u8> = content.iter().map(|&c| c as u8).collect();
        let deg: i64 = content.iter().map(|&c| c as i64).sum();
        let s = if (deg - base) % 2 == 0 { 1 } else { -1 };
        p.add_term(Monomial::from_exponents(&e, &[]), s);
    });
    p
}

/// Schur polynomial by semistandard tableaux.
pub fn schur(lambda: &Partition, n: usize) -> Poly {
    let mut p = Poly::zero(n, 0);
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut fill = vec![0u32; cells.len()];
    fn go(k: usize, cells: &[(usize, usize)], lambda: &Partition, n: usize, fill: &mut Vec<u32>, p: &mut Poly) {
        if k == cells.len() {
            let mut e = vec![0u8; n];
            for &v in fill.iter() {
                e[v as usize - 1] += 1;
            }
            p.add_term(Monomial::from_exponents(&e, &[]), 1);
            return;
        }
        let (r, c) = cells[k];
        let at = |rr: usize, cc: usize| (0..rr).map(|i| lambda.get(i) as usize).sum::<usize>() + cc;
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(fill[at(r, c - 1)]);
        }
        if r > 0 {
            lo = lo.max(fill[at(r - 1, c)] + 1);
        }
        for v in lo..=n as u32 {
            fill[k] = v;
            go(k + 1, cells, lambda, n, fill, p);
        }
        fill[k] = 0;
    }
    go(0, &cells, lambda, n, &mut fill, &mut p);
    p
}

/// Expands `f` in a basis `{b_nu}` whose lowest-degree part has leading
/// x-monomial `x^nu` with coefficient 1, by repeatedly cancelling the
/// lex-largest dominant x-monomial of lowest degree. Terms of degree above
/// `cap` are ignored. Returns `None` if the remainder cannot be cleared.
pub fn expand_in_basis<B: FnMut(&Partition) -> Poly>(
    f: &Poly,
    cap: u32,
    mut basis: B,
) -> Option<GammaElement> {
    let mut rest = f.truncate(cap);
    let mut out = GammaElement::zero();
    let mut cache: BTreeMap<Partition, Poly> = BTreeMap::new();
    while !rest.is_zero() {
        let d = rest.min_degree().unwrap();
        let lead = rest
            .terms()
            .filter(|(m, _)| m.degree() == d && m.y_degree() == 0)
            .filter(|(m, _)| m.x_exps().windows(2).all(|w| w[0] >= w[1]))
            .map(|(m, c)| (m.x_exps().to_vec(), *c))
            .max()?;
        let nu = Partition::sorted(lead.0.iter().map(|&v| v as u32).collect());
        let b = cache
            .entry(nu.clone())
            .or_insert_with(|| basis(&nu).truncate(cap));
        if b.coeff(&Monomial::from_exponents(&lead.0, &[])) != 1 {
            return None;
        }
        rest -= &b.scale(&lead.1);
        out.add_term(nu, lead.1);
    }
    Some(out)
}

/// `G_lambda G_mu` expanded by the polynomial oracle in
/// `n = l(lambda) + l(mu) + 1` variables, through weight `cap`. Every term
/// of weight at most `cap` is exact: a term of lowest weight is read off
/// the lowest-degree part, which is a Schur expansion.
pub fn oracle_product(lambda: &Partition, mu: &Partition, cap: u32) -> GammaElement {
    let n = lambda.len() + mu.len() + 1;
    let c = cap as usize;
    let prod = (&oracle_g_upto(lambda, n, c) * &oracle_g_upto(mu, n, c)).truncate(cap);
    expand_in_basis(&prod, cap, |nu| oracle_g_upto(nu, n, c)).expect("oracle expansion failed")
}

/// Deterministic generator for the randomized suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_seq(r: &mut ChaCha8Rng, max_len: usize, lo: i64, hi: i64) -> Vec<i64> {
    let len = r.gen_range(0..=max_len);
    (0..len).map(|_| r.gen_range(lo..=hi)).collect()
}

/// Runs a check, turning a panic into a failure message.
pub fn guarded<F: FnOnce() -> Result<(), String> + std::panic::UnwindSafe>(f: F) -> Result<(), String> {
    match std::panic::catch_unwind(f) {
        Ok(r) => r,
        Err(e) => Err(e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())),
    }
}

/// `Err(msg)` unless `cond`.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub mod checks;
