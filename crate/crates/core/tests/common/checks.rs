//! Structural checks shared by the module suites and the acceptance
//! harness. Each returns the first counterexample found.

use grothendieck::gamma::{coproduct, counit, product, remove_columns, straighten};
use grothendieck::grothpoly::{
    eval_g_single, groth_double_in_window, groth_double_with_chain, Chain,
};
use grothendieck::polyzx::{divided_difference, Monomial};
use grothendieck::quiver::{all_rank_conditions, RankConditions};
use grothendieck::{Engine, GammaElement, IntSeq, Partition, Permutation, Poly, Tensor2};
use rand::Rng;

use super::{ensure, partitions_up_to, random_seq, rng, schur};

pub type Check = Result<(), String>;

pub fn random_poly(r: &mut impl Rng, nx: usize, max_deg: u32, terms: usize) -> Poly {
    let mut p = Poly::zero(nx, 0);
    for _ in 0..terms {
        let mut e = vec![0u8; nx];
        let deg = r.gen_range(0..=max_deg);
        for _ in 0..deg {
            e[r.gen_range(0..nx)] += 1;
        }
        p.add_term(Monomial::from_exponents(&e, &[]), r.gen_range(-5..=5));
    }
    p
}

/// `pi_i^2 = pi_i` and the braid relation on random polynomials of degree
/// at most 5 in at most 4 variables.
pub fn coxeter(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..cases {
        let nx = r.gen_range(2..=4);
        let f = random_poly(&mut r, nx, 5, 6);
        for i in 1..nx {
            let once = divided_difference(&f, i);
            ensure(divided_difference(&once, i) == once, || format!("pi_{i}^2 != pi_{i} on {f}"))?;
            if i + 1 < nx {
                let a = divided_difference(&divided_difference(&once, i + 1), i);
                let b = divided_difference(&divided_difference(&divided_difference(&f, i + 1), i), i + 1);
                ensure(a == b, || format!("braid relation fails at {i} on {f}"))?;
            }
        }
    }
    Ok(())
}

/// Both descent chains agree on `S_4`, and embedding `w` in a larger
/// window changes nothing for `w` in `S_3`, `S_4`.
pub fn chains_and_windows() -> Check {
    for w in Permutation::all(4) {
        let a = groth_double_with_chain(&w, 4, Chain::SmallestAscent);
        let b = groth_double_with_chain(&w, 4, Chain::LargestAscent);
        ensure(a == b, || format!("chains differ for {w}"))?;
    }
    for n in [3, 4] {
        for w in Permutation::all(n) {
            let small = groth_double_in_window(&w, n).value;
            let big = groth_double_in_window(&w, n + 1).value;
            ensure(small == big, || format!("window {n} vs {} differ for {w}", n + 1))?;
        }
    }
    Ok(())
}

/// `G_lambda(x_1..x_n)` is symmetric, for `|lambda| <= 5`, `n <= 4`.
pub fn symmetry() -> Check {
    for lambda in partitions_up_to(5, 5) {
        for n in 1..=4 {
            let g = eval_g_single(&lambda, n);
            for i in 1..n {
                ensure(g.is_symmetric_in_x(i), || format!("G_{lambda} in {n} variables, x{i}"))?;
            }
        }
    }
    Ok(())
}

/// The lowest-degree part of `G_lambda(x_1..x_n)` is `s_lambda`, for
/// `|lambda| <= 6`, `n <= 4`.
pub fn schur_shadow() -> Check {
    for lambda in partitions_up_to(6, 6) {
        for n in 1..=4 {
            let g = eval_g_single(&lambda, n);
            let low = g.homogeneous(lambda.weight() as u32);
            let s = schur(&lambda, n);
            ensure(low == s, || format!("lowest part of G_{lambda} in {n} variables"))?;
            ensure(g.min_degree().map_or(true, |d| d as usize == lambda.weight()), || {
                format!("G_{lambda} has terms below degree |lambda|")
            })?;
        }
    }
    Ok(())
}

pub fn tensor_mul(engine: &Engine, a: &Tensor2, b: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((l1, r1), c1) in a.iter() {
        for ((l2, r2), c2) in b.iter() {
            let left = engine.product_basis(l1, l2);
            let right = engine.product_basis(r1, r2);
            for (p, cp) in left.iter() {
                for (q, cq) in right.iter() {
                    out.add_term((p.clone(), q.clone()), c1 * c2 * cp * cq);
                }
            }
        }
    }
    out
}

/// Multiplicativity of the coproduct, coassociativity and the counit
/// axioms on `{G_lambda : |lambda| <= 3}`.
pub fn bialgebra() -> Check {
    let engine = Engine::global();
    let basis = partitions_up_to(3, 3);
    for a in &basis {
        let da = coproduct(&GammaElement::basis(a.clone()));
        for b in &basis {
            let db = coproduct(&GammaElement::basis(b.clone()));
            let lhs = coproduct(&product(&GammaElement::basis(a.clone()), &GammaElement::basis(b.clone())));
            let rhs = tensor_mul(engine, &da, &db);
            ensure(lhs == rhs, || format!("coproduct of G_{a} G_{b} is not multiplicative"))?;
        }
        let mut left = LinCombTriple::new();
        let mut right = LinCombTriple::new();
        for ((x, y), c) in da.iter() {
            for ((p, q), d) in coproduct(&GammaElement::basis(x.clone())).iter() {
                left.add((p.clone(), q.clone(), y.clone()), c * d);
            }
            for ((p, q), d) in coproduct(&GammaElement::basis(y.clone())).iter() {
                right.add((x.clone(), p.clone(), q.clone()), c * d);
            }
        }
        ensure(left.clean() == right.clean(), || format!("coassociativity fails on G_{a}"))?;
        let mut l = GammaElement::zero();
        let mut r = GammaElement::zero();
        for ((x, y), c) in da.iter() {
            l.add_term(y.clone(), c * counit(&GammaElement::basis(x.clone())));
            r.add_term(x.clone(), c * counit(&GammaElement::basis(y.clone())));
        }
        let g = GammaElement::basis(a.clone());
        ensure(l == g && r == g, || format!("counit axiom fails on G_{a}"))?;
    }
    Ok(())
}

type Triple = (Partition, Partition, Partition);

struct LinCombTriple(std::collections::BTreeMap<Triple, i64>);

impl LinCombTriple {
    fn new() -> Self {
        Self(Default::default())
    }
    fn add(&mut self, k: Triple, c: i64) {
        *self.0.entry(k).or_insert(0) += c;
    }
    fn clean(mut self) -> std::collections::BTreeMap<Triple, i64> {
        self.0.retain(|_, c| *c != 0);
        self.0
    }
}

/// `sum_lambda delta_{I,lambda} = 1`, `delta_{I,Ī} = 1`, and every
/// `lambda` in the support lies inside `Ī`, for random sequences.
pub fn straightening(seed: u64, cases: usize) -> Check {
    let mut r = rng(seed);
    for _ in 0..cases {
        let seq = IntSeq::new(random_seq(&mut r, 4, -2, 4));
        let s = straighten(&seq);
        let bar = seq.suffix_max();
        ensure(s.total() == 1, || format!("sum of delta for {seq} is {}", s.total()))?;
        ensure(s.coeff(&bar) == 1, || format!("delta at the suffix maximum of {seq}"))?;
        ensure(s.keys().all(|l| bar.contains(l)), || format!("support of {seq} leaves {bar}"))?;
    }
    Ok(())
}

/// Rank conditions shifted by a constant have the same rectangle diagram
/// and the same quiver coefficients, computed without any memo.
pub fn rectangle_invariance(bundles: usize, max_rank: u32) -> Check {
    let engine = Engine::uncached();
    for r in all_rank_conditions(bundles, max_rank) {
        let ranks: Vec<u32> = r.ranks().iter().map(|v| v + 2).collect();
        let shifted = RankConditions::from_fn(&ranks, |i, j| r.get(i, j) + 2);
        ensure(shifted.validate(), || format!("shift of {} is not valid", r.to_json()))?;
        let (d1, d2) = (r.rectangle_diagram().unwrap(), shifted.rectangle_diagram().unwrap());
        ensure(d1 == d2, || format!("diagrams differ for {}", r.to_json()))?;
        let a = engine.quiver_coeffs(&r).map_err(|e| e.to_string())?;
        let b = engine.quiver_coeffs(&shifted).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("coefficients differ for {}", r.to_json()))?;
    }
    Ok(())
}

/// Dropping the first `d` columns is multiplicative on `|lambda|, |mu| <= 3`.
pub fn column_removal() -> Check {
    let basis = partitions_up_to(3, 3);
    for a in &basis {
        for b in &basis {
            let (ga, gb) = (GammaElement::basis(a.clone()), GammaElement::basis(b.clone()));
            for d in 0..=2 {
                let lhs = remove_columns(&product(&ga, &gb), d);
                let rhs = product(&remove_columns(&ga, d), &remove_columns(&gb, d));
                ensure(lhs == rhs, || format!("column removal {d} on G_{a} G_{b}"))?;
            }
        }
    }
    Ok(())
}
