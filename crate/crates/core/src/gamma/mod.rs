//! The bialgebra spanned by the stable Grothendieck polynomials `G_lambda`.
//!
//! The free functions use [`Engine::global`]; pass an explicit [`Engine`]
//! to control caching.

mod cmyd;
mod lincomb;
mod lr;
mod series;
mod straighten;

pub use cmyd::{cmyd_sum, enumerate_cmyd, Cmyd};
pub use lincomb::LinComb;
pub use lr::{coprod_coeff_with_rectangle, rect_coprod, CoproductTable};
pub use series::{series_identities_check, series_identity_sides, GammaSeries, SeriesIdentity};

pub use crate::engine::Engine;
pub use crate::GammaElement;

use crate::shapes::{IntSeq, Partition};

/// An element of the tensor square, keyed by pairs of partitions.
pub type Tensor2 = LinComb<(Partition, Partition), i64>;

/// `c^nu_{lambda mu}`.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    Engine::global().lr_coeff(lambda, mu, nu)
}

pub fn product(a: &GammaElement, b: &GammaElement) -> GammaElement {
    Engine::global().product(a, b)
}

/// `d^nu_{lambda mu}`.
pub fn coprod_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    Engine::global().coprod_coeff(lambda, mu, nu)
}

pub fn coproduct(a: &GammaElement) -> Tensor2 {
    Engine::global().coproduct(a)
}

pub fn straighten(seq: &IntSeq) -> GammaElement {
    (*Engine::global().straighten(seq)).clone()
}

/// `G_{I // lambda}`.
pub fn skew(seq: &IntSeq, lambda: &Partition) -> GammaElement {
    Engine::global().skew(seq, lambda)
}

pub fn jacobi_trudi_check(a: i64, seq: &IntSeq, d: usize) -> bool {
    Engine::global().jacobi_trudi_check(a, seq, d)
}

/// The linear map `G_nu -> G_{nu~}` dropping the first `d` columns; a ring
/// homomorphism.
pub fn remove_columns(a: &GammaElement, d: u32) -> GammaElement {
    let mut out = GammaElement::zero();
    for (nu, c) in a.iter() {
        out.add_term(nu.remove_columns(d), *c);
    }
    out
}

/// The counit: the coefficient of `G_()`.
pub fn counit(a: &GammaElement) -> i64 {
    a.coeff(&Partition::empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_removal() {
        let g31 = GammaElement::basis(Partition::from([3, 1]));
        assert_eq!(remove_columns(&g31, 0), g31);
        assert_eq!(remove_columns(&g31, 1).to_string(), "G[2]");
        let g1 = GammaElement::basis(Partition::row(1));
        let lhs = remove_columns(&product(&g1, &g1), 1);
        let r = remove_columns(&g1, 1);
        assert_eq!(lhs, product(&r, &r));
    }
}
