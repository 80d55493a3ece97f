mod common;

use common::*;
use grothendieck::gamma::{
    cmyd_sum, coprod_coeff, coprod_coeff_with_rectangle, lr_coeff, product, rect_coprod,
    series_identities_check, skew, straighten, GammaSeries, SeriesIdentity,
};
use grothendieck::grothpoly::{eval_g_single, lenart_det};
use grothendieck::{Engine, GammaElement, IntSeq, Partition, Poly};
use proptest::prelude::*;

fn basis(p: &[u32]) -> GammaElement {
    GammaElement::basis(part(p))
}

fn small_element() -> impl Strategy<Value = GammaElement> {
    prop::collection::vec((prop::collection::vec(1u32..=2, 0..=2), -2i64..=2), 0..=3).prop_map(|terms| {
        let mut e = GammaElement::zero();
        for (p, c) in terms {
            e.add_term(Partition::sorted(p), c);
        }
        e
    })
}

fn seq() -> impl Strategy<Value = IntSeq> {
    prop::collection::vec(-2i64..=4, 0..=4).prop_map(IntSeq::new)
}

fn evaluate(a: &GammaElement, n: usize) -> Poly {
    let mut out = Poly::zero(n, 0);
    for (lambda, c) in a.iter() {
        out += &eval_g_single(lambda, n).scale(c);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_commutative_and_unital(a in small_element(), b in small_element()) {
        prop_assert_eq!(product(&a, &b), product(&b, &a));
        prop_assert_eq!(product(&GammaElement::basis(Partition::empty()), &a), a);
    }

    #[test]
    fn straightening_sums_to_one(s in seq()) {
        let g = straighten(&s);
        let bar = s.suffix_max();
        prop_assert_eq!(g.total(), 1);
        prop_assert_eq!(g.coeff(&bar), 1);
        prop_assert!(g.keys().all(|l| bar.contains(l)));
    }

    #[test]
    fn straightening_evaluates_to_the_determinant(s in prop::collection::vec(-2i64..=3, 0..=3), extra in 1usize..=2) {
        let s = IntSeq::new(s);
        let n = s.len() + extra;
        prop_assume!((1..=s.len()).all(|i| n as i64 >= i as i64 - s.get(i)));
        prop_assert_eq!(evaluate(&straighten(&s), n), lenart_det(&s, n).unwrap());
    }

    #[test]
    fn jacobi_trudi(a in -2i64..=4, s in prop::collection::vec(-2i64..=4, 0..=3)) {
        prop_assert!(Engine::global().jacobi_trudi_check(a, &IntSeq::new(s), 7));
    }
}

#[test]
fn lr_signs_alternate() {
    let ps = partitions_up_to(4, 4);
    for a in &ps {
        for b in &ps {
            for (nu, c) in product(&GammaElement::basis(a.clone()), &GammaElement::basis(b.clone())).iter() {
                let s = nu.weight() as i64 - a.weight() as i64 - b.weight() as i64;
                assert!(s >= 0 && *c != 0 && (s % 2 == 0) == (*c > 0), "c^{nu}_({a})({b}) = {c}");
            }
        }
    }
}

#[test]
fn lr_matches_the_polynomial_oracle_on_small_shapes() {
    for a in partitions_up_to(2, 2) {
        for b in partitions_up_to(3, 2) {
            let lib = product(&GammaElement::basis(a.clone()), &GammaElement::basis(b.clone()));
            let cap = lib.max_weight().unwrap() as u32 + 2;
            assert_eq!(lib, oracle_product(&a, &b, cap), "{a} * {b}");
        }
    }
    assert_eq!(lr_coeff(&part(&[1]), &part(&[1]), &part(&[2, 1])), -1);
    let oracle = oracle_product(&part(&[2]), &part(&[1, 1]), 6);
    assert_eq!(lr_coeff(&part(&[2]), &part(&[1, 1]), &part(&[3, 1])), oracle.coeff(&part(&[3, 1])));
}

#[test]
fn bialgebra_axioms() {
    assert_eq!(common::checks::bialgebra(), Ok(()));
}

#[test]
fn coproduct_does_not_depend_on_the_rectangle() {
    for nu in partitions_up_to(4, 3) {
        for a in nu.subpartitions() {
            for b in nu.subpartitions() {
                let d = coprod_coeff(&a, &b, &nu);
                let p = a.first().max(b.first());
                let q = a.len().max(b.len());
                for (pp, qq) in [(p + 1, q), (p, q + 1), (p + 2, q + 2)] {
                    assert_eq!(coprod_coeff_with_rectangle(&a, &b, &nu, pp, qq), d, "d^{nu}_({a})({b}) in {pp}x{qq}");
                }
            }
        }
    }
    assert_eq!(coprod_coeff(&part(&[1]), &part(&[1]), &part(&[1])), -1);
    assert_eq!(coprod_coeff_with_rectangle(&part(&[1]), &part(&[1]), &part(&[1]), 2, 2), -1);
}

#[test]
fn rook_strip_rule_matches_coproduct() {
    let r = Partition::rectangle(2, 2);
    for s in r.subpartitions() {
        for t in r.subpartitions() {
            assert_eq!(rect_coprod(2, 2, &s, &t), coprod_coeff(&s, &t, &r), "{s}, {t}");
        }
    }
}

#[test]
fn diagram_sums_match_products() {
    for mu in partitions_up_to(3, 3) {
        for p in 0..=3 {
            for q in 0..=mu.len() {
                let route = product(
                    &GammaElement::basis(Partition::row(p as u32)),
                    &skew(&IntSeq::from(&mu), &Partition::column(q)),
                );
                assert_eq!(cmyd_sum(&mu, p, q), route, "mu = {mu}, p = {p}, q = {q}");
            }
        }
    }
}

#[test]
fn skew_examples() {
    assert_eq!(skew(&IntSeq::new(vec![2, 1]), &Partition::empty()), basis(&[2, 1]));
    assert!(skew(&IntSeq::new(vec![]), &Partition::empty()).coeff(&Partition::empty()) == 1);
    assert_ne!(skew(&IntSeq::new(vec![2, 1]), &part(&[2, 1])), GammaElement::basis(Partition::empty()));
    assert_eq!(straighten(&IntSeq::new(vec![2, 0, -1])), basis(&[2]));
}

#[test]
fn column_removal_is_multiplicative() {
    assert_eq!(common::checks::column_removal(), Ok(()));
}

#[test]
fn series_identity_grids() {
    for k in -2..=4 {
        for nx in 1..=3 {
            assert!(series_identities_check(SeriesIdentity::Gtos { k }, nx, 0, 5).unwrap(), "k = {k}");
        }
    }
    for m in -1..=2 {
        for i in 0..=3i64 {
            for ny in 0..=(i as usize).min(3) {
                let kind = SeriesIdentity::Gysin { m, i };
                assert!(series_identities_check(kind, 2, ny, 5).unwrap(), "m = {m}, i = {i}, {ny} y");
            }
        }
    }
    assert!(series_identities_check(SeriesIdentity::Gysin { m: 0, i: 1 }, 1, 2, 5).is_err());
}

#[test]
fn series_truncation() {
    let s = GammaSeries::new(&basis(&[2]) + &basis(&[3, 1]), 3);
    assert_eq!(s.element(), &basis(&[2]));
    assert!(s.retruncate(4).is_err());
    assert_eq!(s.retruncate(1).unwrap().element(), &GammaElement::zero());
}
