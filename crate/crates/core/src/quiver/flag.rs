use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::quiver::RankConditions;
use crate::shapes::{Partition, Permutation};
use crate::{GammaElement, QuiverElement};

/// Rank conditions of `F_1 ⊂ .. ⊂ F_n -> H_n ->> .. ->> H_1` cutting out
/// the degeneracy locus of `w ∈ S_{n+1}`. Slot `a < n` holds `F_{a+1}`,
/// slot `a >= n` holds `H_{2n-a}`; the map `F_q -> H_p` has rank `r_w(p, q)`.
pub fn flag_rank_conditions(w: &Permutation, n: usize) -> Result<RankConditions> {
    if w.size() > n + 1 {
        return Err(Error::Precondition(format!("{w} is not in S_{}", n + 1)));
    }
    let slots = 2 * n;
    let rank = |a: usize| if a < n { a as u32 + 1 } else { (slots - a) as u32 };
    let ranks: Vec<u32> = (0..slots).map(rank).collect();
    Ok(RankConditions::from_fn(&ranks, |a, b| {
        if b < n {
            a as u32 + 1
        } else if a >= n {
            (slots - b) as u32
        } else {
            w.rank(slots - b, a + 1) as u32
        }
    }))
}

/// The window `n` with `w ∈ S_{n+1}` used for `w`.
fn window(w: &Permutation) -> usize {
    w.size().saturating_sub(1)
}

/// The quiver element of `flag_rank_conditions(w, n)` for the smallest window.
pub fn flag_quiver(engine: &Engine, w: &Permutation) -> Result<(usize, QuiverElement)> {
    let n = window(w);
    if n == 0 {
        return Ok((0, QuiverElement::basis(Vec::new())));
    }
    let r = flag_rank_conditions(w, n)?;
    Ok((n, (*engine.quiver_coeffs(&r)?).clone()))
}

/// Terms whose first `n - 1` factors are not rows or whose last `n - 1`
/// factors are not columns. These vanish after specializing the flag
/// bundles, whatever their coefficient.
pub fn non_hook_terms(engine: &Engine, w: &Permutation) -> Result<QuiverElement> {
    let (n, p) = flag_quiver(engine, w)?;
    let mut out = QuiverElement::zero();
    for (mu, c) in p.iter() {
        let rows_ok = mu[..n.saturating_sub(1)].iter().all(|l| l.len() <= 1);
        let cols_ok = mu[n.min(mu.len())..].iter().all(|l| l.first() <= 1);
        if !(rows_ok && cols_ok) {
            out.add_term(mu.clone(), *c);
        }
    }
    Ok(out)
}

/// `G_w = sum_lambda c_w(0, 0, lambda) G_lambda`: the terms of the flag
/// quiver element that are empty outside the middle factor.
pub fn expand_gw(engine: &Engine, w: &Permutation) -> Result<GammaElement> {
    let (n, p) = flag_quiver(engine, w)?;
    if n == 0 {
        return Ok(GammaElement::basis(Partition::empty()));
    }
    let mut out = GammaElement::zero();
    for (mu, c) in p.iter() {
        let others_empty = mu
            .iter()
            .enumerate()
            .all(|(k, l)| k == n - 1 || l.is_empty());
        if others_empty {
            out.add_term(mu[n - 1].clone(), *c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn flag_ranks() {
        let r = flag_rank_conditions(&perm(&[2, 1]), 1).unwrap();
        assert_eq!(r.ranks(), vec![1, 1]);
        assert_eq!(r.get(0, 1), 0);
        assert_eq!(r.expected_codim().unwrap(), 1);
        let id = flag_rank_conditions(&Permutation::identity(), 3).unwrap();
        assert_eq!(id.expected_codim().unwrap(), 0);
        for w in Permutation::all(4) {
            let r = flag_rank_conditions(&w, 3).unwrap();
            assert!(r.validate(), "{w}");
            assert_eq!(r.expected_codim().unwrap(), w.length(), "{w}");
        }
    }

    #[test]
    fn grassmannian_examples() {
        let e = Engine::new();
        assert_eq!(expand_gw(&e, &perm(&[2, 1])).unwrap().to_string(), "G[1]");
        assert_eq!(expand_gw(&e, &perm(&[3, 1, 2])).unwrap().to_string(), "G[2]");
        assert_eq!(expand_gw(&e, &Permutation::identity()).unwrap().to_string(), "G[]");
    }
}
