//! Truncated elements of the degree completion of the bialgebra, and the
//! series identities checked on truncations.

use std::fmt;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::gamma::GammaElement;
use crate::grothpoly::{eval_g_double, eval_g_single, x_to_y};
use crate::polyzx::h_complete;
use crate::scalar::{modified_binomial, sign};
use crate::shapes::{IntSeq, Partition};
use crate::Poly;

/// `sum a_lambda G_lambda` known up to weight `cutoff`.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaSeries {
    cutoff: usize,
    terms: GammaElement,
}

impl GammaSeries {
    /// Drops every term of weight above `cutoff`.
    pub fn new(mut terms: GammaElement, cutoff: usize) -> Self {
        terms.retain(|k, _| k.weight() <= cutoff);
        GammaSeries { cutoff, terms }
    }

    pub fn zero(cutoff: usize) -> Self {
        Self::new(GammaElement::zero(), cutoff)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn element(&self) -> &GammaElement {
        &self.terms
    }

    /// The same series with a smaller cutoff.
    pub fn retruncate(&self, cutoff: usize) -> Result<Self> {
        if cutoff > self.cutoff {
            return Err(Error::Precondition(format!(
                "cannot raise the cutoff from {} to {cutoff}",
                self.cutoff
            )));
        }
        Ok(Self::new(self.terms.clone(), cutoff))
    }

    fn same_cutoff(&self, other: &Self) -> Result<()> {
        if self.cutoff != other.cutoff {
            return Err(Error::Precondition(format!(
                "cutoffs {} and {} differ; retruncate first",
                self.cutoff, other.cutoff
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_cutoff(other)?;
        Ok(Self::new(&self.terms + &other.terms, self.cutoff))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_cutoff(other)?;
        Ok(Self::new(&self.terms - &other.terms, self.cutoff))
    }

    pub fn mul(&self, other: &Self, engine: &Engine) -> Result<Self> {
        self.same_cutoff(other)?;
        let p = engine.product_truncated(&self.terms, &other.terms, Some(self.cutoff));
        Ok(Self::new(p, self.cutoff))
    }
}

impl fmt::Display for GammaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.terms, self.cutoff + 1)
    }
}

impl fmt::Debug for GammaSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `G_k` with the convention `G_k = 1` for `k <= 0`.
fn g_row(k: i64) -> GammaElement {
    GammaElement::basis(Partition::row(k.max(0) as u32))
}

impl Engine {
    /// Both sides of the Jacobi-Trudi expansion
    /// `G_{a,I} = sum_{q,t >= 0} (-1)^q [[q-1+t, t]] G_{a+q+t} G_{I // (1^q)}`
    /// up to weight `d`.
    pub fn jacobi_trudi_sides(&self, a: i64, seq: &IntSeq, d: usize) -> (GammaSeries, GammaSeries) {
        let mut full = vec![a];
        full.extend_from_slice(seq.entries());
        let lhs = GammaSeries::new((*self.straighten(&IntSeq::new(full))).clone(), d);

        let qmax = self.straighten(seq).keys().map(Partition::len).max().unwrap_or(0);
        let mut rhs = GammaElement::zero();
        for q in 0..=qmax as i64 {
            let skewed = self.skew(seq, &Partition::column(q as usize));
            if skewed.is_zero() {
                continue;
            }
            let tmax = d as i64 - a - q;
            for t in 0..=tmax {
                let c = sign::<i64>(q) * modified_binomial(q - 1 + t, t);
                if c == 0 {
                    continue;
                }
                let p = self.product_truncated(&g_row(a + q + t), &skewed, Some(d));
                rhs.add_scaled(&p, &c);
            }
        }
        (lhs, GammaSeries::new(rhs, d))
    }

    pub fn jacobi_trudi_check(&self, a: i64, seq: &IntSeq, d: usize) -> bool {
        let (l, r) = self.jacobi_trudi_sides(a, seq, d);
        l == r
    }
}

/// The two truncated series identities between stable polynomials and
/// complete symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesIdentity {
    /// `G_k(x) = (1 - G_1(x)) sum_{i >= 0} h_{k+i}(x)`.
    Gtos { k: i64 },
    /// `sum_{k >= 0} G_{m+k}(x) G_{i // (k)}(0; y) = G_{m+i}(x; y)`,
    /// valid when `i` is at least the number of `y` variables.
    Gysin { m: i64, i: i64 },
}

fn g_row_poly(k: i64, nx: usize) -> Poly {
    if k <= 0 {
        Poly::one(nx, 0)
    } else {
        eval_g_single(&Partition::row(k as u32), nx)
    }
}

/// Both sides of `kind` evaluated in `nx` x-variables and `ny` y-variables,
/// truncated at degree `d`.
pub fn series_identity_sides(
    engine: &Engine,
    kind: SeriesIdentity,
    nx: usize,
    ny: usize,
    d: u32,
) -> Result<(Poly, Poly)> {
    match kind {
        SeriesIdentity::Gtos { k } => {
            let lhs = g_row_poly(k, nx).truncate(d);
            let mut tail = Poly::zero(nx, 0);
            for j in k.max(0)..=d as i64 {
                tail += &h_complete::<i64>(j, nx);
            }
            let one_minus = &Poly::one(nx, 0) - &g_row_poly(1, nx);
            Ok((lhs, one_minus.mul_truncated(&tail, Some(d))))
        }
        SeriesIdentity::Gysin { m, i } => {
            if i < ny as i64 {
                return Err(Error::Precondition(format!(
                    "need i >= {ny} for {ny} y variables, got i = {i}"
                )));
            }
            let seq = IntSeq::new(vec![i]);
            let mut lhs = Poly::zero(nx, ny);
            for k in 0..=i.max(0) {
                let skewed = engine.skew(&seq, &Partition::row(k as u32));
                let mut ypart = Poly::zero(0, ny);
                for (mu, c) in skewed.iter() {
                    ypart += &x_to_y(&eval_g_single(&mu.conjugate(), ny)).scale(c);
                }
                lhs += &g_row_poly(m + k, nx).mul_truncated(&ypart, Some(d));
            }
            let rhs = if m + i <= 0 {
                Poly::one(nx, ny)
            } else {
                eval_g_double(&Partition::row((m + i) as u32), nx, ny)
            };
            Ok((lhs.truncate(d), rhs.truncate(d)))
        }
    }
}

pub fn series_identities_check(kind: SeriesIdentity, nx: usize, ny: usize, d: u32) -> Result<bool> {
    let (l, r) = series_identity_sides(Engine::global(), kind, nx, ny, d)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_cutoffs_refused() {
        let e = Engine::uncached();
        let a = GammaSeries::new(GammaElement::basis(Partition::row(1)), 3);
        let b = GammaSeries::new(GammaElement::basis(Partition::row(2)), 4);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b, &e).is_err());
        let b = b.retruncate(3).unwrap();
        assert_eq!(a.mul(&b, &e).unwrap().element().to_string(), "G[3] + G[2,1]");
        assert!(a.retruncate(5).is_err());
    }

    #[test]
    fn jacobi_trudi_instances() {
        let e = Engine::new();
        assert!(e.jacobi_trudi_check(0, &IntSeq::default(), 4));
        assert!(e.jacobi_trudi_check(3, &IntSeq::new(vec![2, 1]), 6));
        assert!(e.jacobi_trudi_check(1, &IntSeq::new(vec![2]), 5));
    }

    #[test]
    fn identity_examples() {
        assert!(series_identities_check(SeriesIdentity::Gtos { k: 0 }, 2, 0, 5).unwrap());
        assert!(series_identities_check(SeriesIdentity::Gtos { k: -1 }, 2, 0, 5).unwrap());
        assert!(series_identities_check(SeriesIdentity::Gysin { m: 0, i: 2 }, 2, 2, 5).unwrap());
        assert!(series_identities_check(SeriesIdentity::Gysin { m: 0, i: 1 }, 2, 2, 5).is_err());
    }
}
