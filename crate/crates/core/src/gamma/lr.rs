//! Products and coproducts through set-valued tableaux on `lambda * mu`.
//!
//! In the reverse reading order of `lambda * mu` the cells of the top
//! piece `mu` come first, and the lattice condition forces row `i` of that
//! piece to hold `{i}` in every box. So only the bottom piece is
//! enumerated, starting from content `mu`.

use std::sync::Arc;

use crate::engine::Engine;
use crate::gamma::{GammaElement, Tensor2};
use crate::scalar::sign;
use crate::shapes::{Partition, SkewShape, SvtSearch};

/// The nonzero `(lambda, mu, d^nu_{lambda mu})` for one `nu`, sorted.
pub type CoproductTable = Vec<(Partition, Partition, i64)>;

fn content_partition(content: &[u32]) -> Partition {
    Partition::from_sorted(content.to_vec())
}

fn search_for(bottom: &Partition, top: &Partition) -> SvtSearch {
    let max_entry = (bottom.len() + top.len()) as u32;
    SvtSearch::new(&SkewShape::straight(bottom.clone()), max_entry, true)
        .with_initial_content(top.parts().to_vec())
}

/// `(bottom, top)` with the heavier partition on top, which leaves fewer
/// cells to enumerate.
fn orient<'a>(a: &'a Partition, b: &'a Partition) -> (&'a Partition, &'a Partition) {
    if a.weight() > b.weight() || (a.weight() == b.weight() && a > b) {
        (b, a)
    } else {
        (a, b)
    }
}

/// `G_lambda G_mu` with every term of weight above `cap` dropped.
pub(crate) fn lr_expand_raw(lambda: &Partition, mu: &Partition, cap: Option<usize>) -> GammaElement {
    let (bottom, top) = orient(lambda, mu);
    let base = lambda.weight() + mu.weight();
    let mut out = GammaElement::zero();
    if cap.is_some_and(|c| c < base) {
        return out;
    }
    let mut search = search_for(bottom, top);
    if let Some(c) = cap {
        search = search.with_budget(c - top.weight());
    }
    search.run(|_, content| {
        let nu = content_partition(content);
        let e = (nu.weight() - base) as i64;
        out.add_term(nu, sign(e));
    });
    out
}

/// `c^nu_{lambda mu}` by a single pruned enumeration.
pub(crate) fn lr_count_raw(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let base = lambda.weight() + mu.weight();
    if nu.weight() < base || nu.len() > lambda.len() + mu.len() {
        return 0;
    }
    let (bottom, top) = orient(lambda, mu);
    let mut count = 0i64;
    search_for(bottom, top)
        .with_bound(nu.parts().to_vec())
        .run(|_, content| {
            if content_partition(content) == *nu {
                count += 1;
            }
        });
    sign::<i64>((nu.weight() - base) as i64) * count
}

/// `d^nu_{lambda mu} = c^rho_{nu R}` for the rectangle `R = (p)^q`, which
/// must contain `lambda` and `mu`.
pub(crate) fn coprod_coeff_in_rect(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    p: u32,
    q: usize,
) -> i64 {
    let rect = Partition::rectangle(p, q);
    assert!(
        rect.contains(lambda) && rect.contains(mu),
        "rectangle must contain both partitions"
    );
    let mut rho: Vec<u32> = (0..q).map(|i| p + lambda.get(i)).collect();
    rho.extend_from_slice(mu.parts());
    lr_count_raw(nu, &rect, &Partition::from_sorted(rho))
}

/// The coproduct table of `G_nu` in one enumeration: with `R` the bounding
/// rectangle of `nu`, every content `rho` of a lattice filling of `nu * R`
/// splits as `rho = (p + lambda, mu)`.
pub(crate) fn coproduct_table_raw(nu: &Partition) -> CoproductTable {
    let p = nu.first();
    let q = nu.len();
    let rect = Partition::rectangle(p, q);
    let mut acc = Tensor2::zero();
    SvtSearch::new(&SkewShape::straight(nu.clone()), (2 * q) as u32, true)
        .with_initial_content(rect.parts().to_vec())
        .run(|_, content| {
            let lambda: Vec<u32> = content[..q].iter().map(|&c| c - p).collect();
            if lambda.first().is_some_and(|&l| l > p) {
                return;
            }
            let mu: Vec<u32> = content[q..].to_vec();
            if mu.first().is_some_and(|&m| m > p) {
                return;
            }
            let lambda = Partition::from_sorted(lambda);
            let mu = Partition::from_sorted(mu);
            let e = (lambda.weight() + mu.weight()) as i64 - nu.weight() as i64;
            acc.add_term((lambda, mu), sign(e));
        });
    acc.iter().map(|((a, b), c)| (a.clone(), b.clone(), *c)).collect()
}

/// `d^R_{sigma tau}` for a rectangle `R = (p)^q` by the rook strip rule:
/// `(-1)^{|sigma|+|tau|-|R|}` when `sigma` and the 180 degree rotation of
/// `tau` into the bottom right corner cover `R` and overlap in a rook strip.
pub fn rect_coprod(p: u32, q: usize, sigma: &Partition, tau: &Partition) -> i64 {
    let rect = Partition::rectangle(p, q);
    if !rect.contains(sigma) || !rect.contains(tau) {
        return 0;
    }
    let mut rows_used = vec![false; q];
    let mut cols_used = vec![false; p as usize];
    for i in 0..q {
        for j in 0..p as usize {
            let in_sigma = (j as u32) < sigma.get(i);
            let in_hat = ((p as usize - 1 - j) as u32) < tau.get(q - 1 - i);
            if !in_sigma && !in_hat {
                return 0;
            }
            if in_sigma && in_hat {
                if rows_used[i] || cols_used[j] {
                    return 0;
                }
                rows_used[i] = true;
                cols_used[j] = true;
            }
        }
    }
    sign((sigma.weight() + tau.weight()) as i64 - rect.weight() as i64)
}

impl Engine {
    /// `G_lambda G_mu`.
    pub fn product_basis(&self, lambda: &Partition, mu: &Partition) -> Arc<GammaElement> {
        let key = if lambda <= mu {
            (lambda.clone(), mu.clone())
        } else {
            (mu.clone(), lambda.clone())
        };
        if let Some(v) = self.lookup(&self.products, &key) {
            return v;
        }
        self.count_lr();
        let v = lr_expand_raw(&key.0, &key.1, None);
        self.store(&self.products, key, v)
    }

    /// `c^nu_{lambda mu}`.
    pub fn lr_coeff(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        let key = if lambda <= mu {
            (lambda.clone(), mu.clone())
        } else {
            (mu.clone(), lambda.clone())
        };
        if let Some(v) = self.lookup(&self.products, &key) {
            return v.coeff(nu);
        }
        self.count_lr();
        lr_count_raw(lambda, mu, nu)
    }

    /// Bilinear product.
    pub fn product(&self, a: &GammaElement, b: &GammaElement) -> GammaElement {
        self.product_truncated(a, b, None)
    }

    /// Product with every term of weight above `cap` dropped.
    pub fn product_truncated(&self, a: &GammaElement, b: &GammaElement, cap: Option<usize>) -> GammaElement {
        let mut out = GammaElement::zero();
        for (la, ca) in a.iter() {
            for (lb, cb) in b.iter() {
                if cap.is_some_and(|c| la.weight() + lb.weight() > c) {
                    continue;
                }
                let prod = self.product_basis(la, lb);
                out.add_scaled(&prod, &(ca * cb));
            }
        }
        if let Some(c) = cap {
            out.retain(|k, _| k.weight() <= c);
        }
        out
    }

    /// The nonzero coproduct constants of `G_nu`.
    pub fn coproduct_table(&self, nu: &Partition) -> Arc<CoproductTable> {
        if let Some(v) = self.lookup(&self.coproducts, nu) {
            return v;
        }
        self.count_coproduct();
        let v = coproduct_table_raw(nu);
        self.store(&self.coproducts, nu.clone(), v)
    }

    /// `d^nu_{lambda mu}` through the smallest rectangle containing
    /// `lambda` and `mu`.
    pub fn coprod_coeff(&self, lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        if let Some(t) = self.lookup(&self.coproducts, nu) {
            return t
                .iter()
                .find(|(a, b, _)| a == lambda && b == mu)
                .map_or(0, |t| t.2);
        }
        self.count_coproduct();
        let p = lambda.first().max(mu.first());
        let q = lambda.len().max(mu.len());
        coprod_coeff_in_rect(lambda, mu, nu, p, q)
    }

    /// `Delta a`, the linear extension of the coproduct.
    pub fn coproduct(&self, a: &GammaElement) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (nu, c) in a.iter() {
            for (l, m, d) in self.coproduct_table(nu).iter() {
                out.add_term((l.clone(), m.clone()), c * d);
            }
        }
        out
    }
}

/// `d^nu_{lambda mu}` computed in an explicit rectangle `(p)^q`; any
/// rectangle containing `lambda` and `mu` gives the same value.
pub fn coprod_coeff_with_rectangle(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    p: u32,
    q: usize,
) -> i64 {
    coprod_coeff_in_rect(lambda, mu, nu, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn single_box_product() {
        let e = lr_expand_raw(&p(&[1]), &p(&[1]), None);
        assert_eq!(e.to_string(), "G[2] + G[1,1] - G[2,1]");
        assert_eq!(lr_count_raw(&p(&[1]), &p(&[1]), &p(&[2, 1])), -1);
        assert_eq!(lr_count_raw(&Partition::empty(), &p(&[2, 1]), &p(&[2, 1])), 1);
    }

    #[test]
    fn truncated_product_agrees() {
        let full = lr_expand_raw(&p(&[2, 1]), &p(&[2]), None);
        for cap in 0..=full.max_weight().unwrap() + 1 {
            let mut t = full.clone();
            t.retain(|k, _| k.weight() <= cap);
            assert_eq!(lr_expand_raw(&p(&[2, 1]), &p(&[2]), Some(cap)), t, "cap {cap}");
        }
    }

    #[test]
    fn single_box_coproduct() {
        let t = coproduct_table_raw(&p(&[1]));
        let e = Partition::empty();
        assert_eq!(
            t,
            vec![(e.clone(), p(&[1]), 1), (p(&[1]), e.clone(), 1), (p(&[1]), p(&[1]), -1)]
        );
        assert_eq!(coprod_coeff_in_rect(&p(&[1]), &p(&[1]), &p(&[1]), 1, 1), -1);
        assert_eq!(coprod_coeff_in_rect(&p(&[1]), &p(&[1]), &p(&[1]), 2, 2), -1);
    }

    #[test]
    fn rook_strip_rule() {
        let e = Partition::empty();
        assert_eq!(rect_coprod(1, 1, &p(&[1]), &e), 1);
        assert_eq!(rect_coprod(1, 1, &p(&[1]), &p(&[1])), -1);
        assert_eq!(rect_coprod(1, 1, &e, &e), 0);
    }
}
