use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::parse::parse_int_list;

/// A weakly decreasing sequence of positive integers, stored without
/// trailing zeros.
///
/// Partitions order by weight first and then lexicographically with larger
/// parts first, so `(3) < (2,1) < (1,1,1) < (4)`. This is the order used for
/// every rendered linear combination.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn sorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(cols)^rows`
    pub fn rectangle(cols: u32, rows: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![cols; rows],
        }
    }

    /// A single row `(a)`.
    pub fn row(a: u32) -> Self {
        Self::rectangle(a, 1)
    }

    /// A single column `(1^b)`.
    pub fn column(b: usize) -> Self {
        Self::rectangle(1, b)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Part `i` (0-based), zero beyond the length.
    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> u32 {
        self.get(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.first() as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 1..=self.first() {
            out.push(self.parts.iter().take_while(|&&p| p >= j).count() as u32);
        }
        Partition { parts: out }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.parts[i] <= self.parts[i])
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Drops the first `d` columns.
    pub fn remove_columns(&self, d: u32) -> Self {
        Self::from_sorted(self.parts.iter().map(|&p| p.saturating_sub(d)).collect())
    }

    /// Boxes `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// All partitions contained in `self`, in no particular order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        sub_rec(&self.parts, u32::MAX, &mut cur, &mut out);
        out
    }

    /// All partitions of `n`.
    pub fn all_of_weight(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        weight_rec(n as u32, n as u32, usize::MAX, &mut cur, &mut out);
        out
    }

    /// All partitions of `n` with at most `max_len` parts.
    pub fn all_of_weight_bounded(n: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        weight_rec(n as u32, n as u32, max_len, &mut cur, &mut out);
        out
    }
}

fn sub_rec(bound: &[u32], cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition::from_sorted(cur.clone()));
    let i = cur.len();
    if i >= bound.len() {
        return;
    }
    let top = bound[i].min(cap);
    for v in 1..=top {
        cur.push(v);
        sub_rec(bound, v, cur, out);
        cur.pop();
    }
}

fn weight_rec(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    if cur.len() >= max_len {
        return;
    }
    for v in (1..=rest.min(cap)).rev() {
        cur.push(v);
        weight_rec(rest - v, v, max_len, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"3,1"`; `""`, `"()"` and `"0"` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let vals = parse_int_list(s, false)?;
        if vals.iter().any(|&v| v < 0) {
            return Err(Error::NotAPartition(vals));
        }
        let parts: Vec<u32> = vals.iter().map(|&v| v as u32).collect();
        Partition::new(parts).map_err(|_| Error::NotAPartition(vals))
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::from(&parts[..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn conjugate_is_involution_up_to_weight_10() {
        for n in 0..=10 {
            for lam in Partition::all_of_weight(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().weight(), n);
            }
        }
    }

    #[test]
    fn canonical_form_trims_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn ordering_is_weight_then_larger_parts_first() {
        let mut v = vec![p(&[2, 1]), p(&[1, 1, 1]), p(&[3]), Partition::empty(), p(&[1])];
        v.sort();
        assert_eq!(v, vec![Partition::empty(), p(&[1]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of_weight(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(p(&[2, 1]).subpartitions().len(), 5);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "3,1");
        assert!("1,3".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
    }

    #[test]
    fn remove_columns_drops_left_columns() {
        assert_eq!(p(&[3, 1]).remove_columns(1), p(&[2]));
        assert_eq!(p(&[3, 1]).remove_columns(0), p(&[3, 1]));
    }
}
