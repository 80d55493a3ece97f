use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::shapes::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StripKind {
    /// At most one box in every row and column. Also horizontal and vertical.
    Rook,
    /// No two boxes in the same column.
    Horizontal,
    /// No two boxes in the same row.
    Vertical,
    None,
}

/// The skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(shape: Partition) -> Self {
        SkewShape {
            outer: shape,
            inner: Partition::empty(),
        }
    }

    /// `lambda * mu`: `mu` in the top right, `lambda` in the bottom left,
    /// touching corner to corner.
    pub fn star(lambda: &Partition, mu: &Partition) -> Self {
        let l1 = lambda.first();
        let mut outer: Vec<u32> = mu.parts().iter().map(|&m| m + l1).collect();
        outer.extend_from_slice(lambda.parts());
        SkewShape {
            outer: Partition::from_sorted(outer),
            inner: Partition::rectangle(l1, mu.len()),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Boxes `(row, col)`, 0-based, row by row left to right.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.outer.len() {
            for j in self.inner.get(i)..self.outer.get(i) {
                out.push((i, j as usize));
            }
        }
        out
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        let c = col as u32;
        c >= self.inner.get(row) && c < self.outer.get(row)
    }

    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.get(i + 1) <= self.inner.get(i))
    }

    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.get(i) - self.inner.get(i) <= 1)
    }

    pub fn strip_kind(&self) -> StripKind {
        match (self.is_horizontal_strip(), self.is_vertical_strip()) {
            (true, true) => StripKind::Rook,
            (true, false) => StripKind::Horizontal,
            (false, true) => StripKind::Vertical,
            (false, false) => StripKind::None,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Parses `"3,1/1"`; a missing `/` means a straight shape.
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            None => Ok(SkewShape::straight(s.parse()?)),
            Some((o, i)) => {
                let outer: Partition = o.parse()?;
                let inner: Partition = i.parse().map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: pos + o.len() + 1,
                        msg,
                    },
                    other => other,
                })?;
                SkewShape::new(outer, inner)
            }
        }
    }
}
