use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::parse::parse_int_list;
use crate::shapes::Partition;

/// A permutation in one-line notation with trailing fixed points trimmed,
/// so `2,1` and `2,1,3` are the same value. The identity has an empty window.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    window: Vec<u32>,
}

impl Permutation {
    pub fn new(window: Vec<u32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(Error::NotAPermutation {
                    window: window.clone(),
                    n,
                });
            }
            seen[v as usize] = true;
        }
        Ok(Self::from_window(window))
    }

    pub(crate) fn from_window(mut window: Vec<u32>) -> Self {
        while let Some(&last) = window.last() {
            if last as usize == window.len() {
                window.pop();
            } else {
                break;
            }
        }
        Permutation { window }
    }

    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// `n (n-1) ... 1`
    pub fn longest(n: usize) -> Self {
        Self::from_window((1..=n as u32).rev().collect())
    }

    /// The trimmed one-line window.
    pub fn window(&self) -> &[u32] {
        &self.window
    }

    /// Smallest `n` with `self` in `S_n`.
    pub fn size(&self) -> usize {
        self.window.len()
    }

    /// The window padded with fixed points up to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.window.clone();
        v.extend(self.window.len() as u32 + 1..=n as u32);
        v
    }

    /// `w(i)` for 1-based `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> u32 {
        self.window.get(i - 1).copied().unwrap_or(i as u32)
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut n = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// `r_w(p,q) = #{ i <= p : w(i) <= q }`.
    pub fn rank(&self, p: usize, q: usize) -> usize {
        (1..=p).filter(|&i| self.apply(i) as usize <= q).count()
    }

    /// `w * s_i`: swaps positions `i` and `i+1` (1-based).
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut v = self.padded(self.size().max(i + 1));
        v.swap(i - 1, i);
        Self::from_window(v)
    }

    /// Positions `i` (1-based, `i < n`) with `w(i) < w(i+1)` inside `S_n`.
    pub fn ascents(&self, n: usize) -> Vec<usize> {
        (1..n).filter(|&i| self.apply(i) < self.apply(i + 1)).collect()
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.apply(i) > self.apply(i + 1))
            .collect()
    }

    /// Lehmer code `c_i = #{ j > i : w(j) < w(i) }` over the window.
    pub fn code(&self) -> Vec<u32> {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count() as u32)
            .collect()
    }

    /// `1^m x w`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_identity() {
            return Self::identity();
        }
        let mut v: Vec<u32> = (1..=m as u32).collect();
        v.extend(self.window.iter().map(|&x| x + m as u32));
        Self::from_window(v)
    }

    /// The Grassmannian permutation for `lambda` with its descent at `p`.
    pub fn grassmannian(lambda: &Partition, p: usize) -> Result<Self> {
        if p < lambda.len() {
            return Err(Error::DescentTooSmall {
                p,
                len: lambda.len(),
            });
        }
        let n = p + lambda.first() as usize;
        let head: Vec<u32> = (1..=p)
            .map(|i| i as u32 + lambda.get(p - i))
            .collect();
        let mut rest: Vec<u32> = (1..=n as u32).filter(|v| !head.contains(v)).collect();
        rest.sort_unstable();
        let mut w = head;
        w.extend(rest);
        Ok(Self::from_window(w))
    }

    /// The partition of a Grassmannian permutation, if it has at most one descent.
    pub fn grassmannian_shape(&self) -> Option<Partition> {
        let d = self.descents();
        match d.len() {
            0 => Some(Partition::empty()),
            1 => {
                let p = d[0];
                let parts = (1..=p).rev().map(|i| self.apply(i) - i as u32).collect();
                Some(Partition::from_sorted(parts))
            }
            _ => None,
        }
    }

    /// All permutations of `S_n` in lexicographic order of their windows.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Self::from_window(cur.clone()));
            // next permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return f.write_str("1");
        }
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Parses `"2,1,3"`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let vals = parse_int_list(s, false)?;
        let n = vals.len();
        if vals.iter().any(|&v| v < 1 || v as usize > n) {
            return Err(Error::NotAPermutation {
                window: vals.iter().map(|&v| v.max(0) as u32).collect(),
                n,
            });
        }
        Permutation::new(vals.iter().map(|&v| v as u32).collect())
    }
}

impl<const N: usize> From<[u32; N]> for Permutation {
    fn from(w: [u32; N]) -> Self {
        Permutation::new(w.to_vec()).expect("not a permutation")
    }
}
