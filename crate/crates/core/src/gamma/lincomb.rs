use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};


use crate::scalar::Coeff;
use crate::shapes::Partition;

/// A finitely supported integer combination of basis elements indexed by `K`.
/// Zero coefficients are never stored, so equality is coefficientwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, C = i64> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element `k`.
    pub fn basis(k: K) -> Self {
        Self::term(k, C::one())
    }

    pub fn term(k: K, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Adds `c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn coeff(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> C {
        self.terms.values().fold(C::zero(), |a, b| a + b.clone())
    }

    /// Applies a linear map defined on basis elements.
    pub fn map_basis<L: Ord + Clone, F: FnMut(&K) -> LinComb<L, C>>(&self, mut f: F) -> LinComb<L, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn retain<F: FnMut(&K, &C) -> bool>(&mut self, mut f: F) {
        self.terms.retain(|k, c| f(k, c));
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Add for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn add(self, rhs: &LinComb<K, C>) -> LinComb<K, C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Sub for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn sub(self, rhs: &LinComb<K, C>) -> LinComb<K, C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl<K: Ord + Clone, C: Coeff> Neg for &LinComb<K, C> {
    type Output = LinComb<K, C>;
    fn neg(self) -> LinComb<K, C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> LinComb<Partition, C> {
    /// Terms in display order: positive coefficients first, then negative
    /// ones, each group by weight and then larger parts first.
    pub fn display_terms(&self) -> Vec<(&Partition, &C)> {
        let mut v: Vec<(&Partition, &C)> = self.terms.iter().collect();
        v.sort_by_key(|(k, c)| (c.is_negative(), *k));
        v
    }

    /// Lowest weight in the support.
    pub fn min_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).min()
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }
}

fn write_signed<C: Coeff>(f: &mut fmt::Formatter<'_>, first: bool, c: &C, body: &str) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let a = c.abs();
    if a.is_one() {
        f.write_str(body)
    } else {
        write!(f, "{a}*{body}")
    }
}

/// `G[3,2,2] + G[3,3,2] - 2*G[2,2,2]`; the zero element is `0`.
impl<C: Coeff> fmt::Display for LinComb<Partition, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.display_terms().into_iter().enumerate() {
            write_signed(f, n == 0, c, &format!("G[{k}]"))?;
        }
        Ok(())
    }
}

fn tensor_text(ks: &[&Partition]) -> String {
    ks.iter()
        .map(|k| format!("G[{k}]"))
        .collect::<Vec<_>>()
        .join(" (x) ")
}

/// `G[1] (x) G[] - G[1] (x) G[1]`
impl<C: Coeff> fmt::Display for LinComb<Vec<Partition>, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(k, c)| (c.is_negative(), k.iter().map(Partition::weight).sum::<usize>(), *k));
        for (n, (k, c)) in v.into_iter().enumerate() {
            let refs: Vec<&Partition> = k.iter().collect();
            write_signed(f, n == 0, c, &tensor_text(&refs))?;
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Display for LinComb<(Partition, Partition), C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|((a, b), c)| (c.is_negative(), a.weight() + b.weight(), (*a).clone(), (*b).clone()));
        for (n, ((a, b), c)) in v.into_iter().enumerate() {
            write_signed(f, n == 0, c, &tensor_text(&[a, b]))?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GammaElement;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn text_form() {
        let e: GammaElement = [
            (p(&[2, 2, 2]), -2),
            (p(&[3, 2, 2]), 1),
            (p(&[3, 3, 3]), 1),
            (p(&[3, 3, 2]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(e.to_string(), "G[3,2,2] + G[3,3,2] + G[3,3,3] - 2*G[2,2,2]");
        assert_eq!(GammaElement::basis(Partition::empty()).to_string(), "G[]");
        assert_eq!(GammaElement::zero().to_string(), "0");
    }

    #[test]
    fn zero_coefficients_vanish() {
        let mut e = GammaElement::basis(p(&[1]));
        e.add_term(p(&[1]), -1);
        assert!(e.is_zero());
        let a = GammaElement::basis(p(&[2]));
        assert_eq!(&(&a + &a) - &a.scale(&2), GammaElement::zero());
    }
}
