use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::parse::parse_int_list;
use crate::shapes::Partition;

/// A finite integer sequence `(I_1, ..., I_l)`; entries past the end read as 0.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IntSeq {
    entries: Vec<i64>,
}

impl IntSeq {
    pub fn new(entries: Vec<i64>) -> Self {
        IntSeq { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `I_j` with 1-based `j`; zero beyond the stored length.
    pub fn get(&self, j: usize) -> i64 {
        if j == 0 {
            return 0;
        }
        self.entries.get(j - 1).copied().unwrap_or(0)
    }

    /// Drops the trailing run of non-positive entries. `G_{I,J} = G_I` for
    /// such a tail, so this is the canonical key for straightening.
    pub fn without_nonpositive_tail(&self) -> IntSeq {
        let keep = self
            .entries
            .iter()
            .rposition(|&v| v > 0)
            .map_or(0, |i| i + 1);
        IntSeq::new(self.entries[..keep].to_vec())
    }

    /// The partition of suffix maxima `Ī_j = max_{k >= j} I_k` (clipped at 0).
    pub fn suffix_max(&self) -> Partition {
        let mut out = vec![0u32; self.entries.len()];
        let mut run = 0i64;
        for (i, &v) in self.entries.iter().enumerate().rev() {
            run = run.max(v);
            out[i] = run as u32;
        }
        Partition::from_sorted(out)
    }

    /// Returns the partition when the sequence is weakly decreasing after
    /// removing its non-positive tail.
    pub fn as_partition(&self) -> Option<Partition> {
        let t = self.without_nonpositive_tail();
        if t.entries.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition::from_sorted(
                t.entries.iter().map(|&v| v as u32).collect(),
            ))
        } else {
            None
        }
    }
}

impl From<&Partition> for IntSeq {
    fn from(p: &Partition) -> Self {
        IntSeq::new(p.parts().iter().map(|&v| v as i64).collect())
    }
}

impl From<Vec<i64>> for IntSeq {
    fn from(v: Vec<i64>) -> Self {
        IntSeq::new(v)
    }
}

impl fmt::Display for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for IntSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"[1,1,3]"`.
impl FromStr for IntSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_int_list(s, true).map(IntSeq::new)
    }
}
