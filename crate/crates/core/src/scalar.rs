//! Coefficient rings.
//!
//! Every algebraic container in this crate ([`MultiPoly`](crate::MultiPoly),
//! [`LinComb`](crate::LinComb)) is generic over an exact signed integer type.
//! `i64` is the working type for structure constants; `i128` and
//! [`BigInt`](num_bigint::BigInt) are available when intermediate
//! polynomials grow.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, NumAssign, Signed};

/// An exact signed integer coefficient.
pub trait Coeff:
    Signed + NumAssign + FromPrimitive + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("coefficient type cannot represent an i64")
    }
}

impl<T> Coeff for T where
    T: Signed + NumAssign + FromPrimitive + Clone + Eq + Hash + Debug + Display + Send + Sync + 'static
{
}

/// `(-1)^e`
pub fn sign<C: Coeff>(e: i64) -> C {
    if e.rem_euclid(2) == 0 {
        C::one()
    } else {
        -C::one()
    }
}

/// Binomial coefficient `C(n, k)` for `n >= 0`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// The modified binomial `[[n, m]]`: the usual binomial for `0 <= m <= n`,
/// `[[-1, 0]] = 1`, zero otherwise.
pub fn modified_binomial(n: i64, m: i64) -> i64 {
    if n == -1 && m == 0 {
        1
    } else if 0 <= m && m <= n {
        binomial(n, m)
    } else {
        0
    }
}
