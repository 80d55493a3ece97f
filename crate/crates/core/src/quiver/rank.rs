use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::Partition;

/// Rank conditions `r_ij` (`0 <= i <= j <= n`) for a sequence of `n + 1`
/// bundles; `r_ii` are the bundle ranks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankConditions {
    /// `rows[i][k] = r_{i,i+k}`.
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RankJson {
    ranks: Vec<u32>,
    r: BTreeMap<String, u32>,
}

impl RankConditions {
    /// Builds from the bundle ranks and a function giving `r_ij` for `i < j`.
    pub fn from_fn<F: FnMut(usize, usize) -> u32>(ranks: &[u32], mut f: F) -> Self {
        let m = ranks.len();
        let rows = (0..m)
            .map(|i| {
                (i..m)
                    .map(|j| if i == j { ranks[i] } else { f(i, j) })
                    .collect()
            })
            .collect();
        RankConditions { rows }
    }

    /// Builds from the triangular array `rows[i][k] = r_{i,i+k}`.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let m = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != m - i {
                return Err(Error::Precondition(format!(
                    "row {i} of the rank array needs {} entries",
                    m - i
                )));
            }
        }
        Ok(RankConditions { rows })
    }

    /// Parses `{"ranks":[..],"r":{"i,j":r_ij,..}}`; every `r_ij` with
    /// `i < j` must be present.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RankJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column().saturating_sub(1),
            msg: e.to_string(),
        })?;
        let m = raw.ranks.len();
        if m == 0 {
            return Err(Error::Precondition("at least one rank is required".into()));
        }
        let mut given: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (k, v) in &raw.r {
            let bad = || Error::Precondition(format!("bad rank key \"{k}\""));
            let (a, b) = k.split_once(',').ok_or_else(bad)?;
            let i: usize = a.trim().parse().map_err(|_| bad())?;
            let j: usize = b.trim().parse().map_err(|_| bad())?;
            if i > j || j >= m {
                return Err(bad());
            }
            if i == j && *v != raw.ranks[i] {
                return Err(Error::Precondition(format!(
                    "r_{i}{i} = {v} disagrees with rank {}",
                    raw.ranks[i]
                )));
            }
            given.insert((i, j), *v);
        }
        for i in 0..m {
            for j in i + 1..m {
                if !given.contains_key(&(i, j)) {
                    return Err(Error::Precondition(format!("missing rank r_{i},{j}")));
                }
            }
        }
        Ok(Self::from_fn(&raw.ranks, |i, j| given[&(i, j)]))
    }

    pub fn to_json(&self) -> String {
        let mut r = BTreeMap::new();
        for i in 0..=self.n() {
            for j in i + 1..=self.n() {
                r.insert(format!("{i},{j}"), self.get(i, j));
            }
        }
        serde_json::to_string(&RankJson { ranks: self.ranks(), r }).unwrap()
    }

    /// Number of bundles minus one.
    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn ranks(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r[0]).collect()
    }

    /// `r_ij` for `i <= j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j - i]
    }

    /// The occurrence conditions `r_ij <= min(r_{i,j-1}, r_{i+1,j})` and
    /// `r_{i+1,j-1} - r_{i,j-1} - r_{i+1,j} + r_ij >= 0`.
    pub fn validate(&self) -> bool {
        let n = self.n();
        for i in 0..=n {
            for j in i + 1..=n {
                let r = self.get(i, j) as i64;
                let left = self.get(i, j - 1) as i64;
                let below = self.get(i + 1, j) as i64;
                if r > left.min(below) {
                    return false;
                }
                if j - i >= 2 && self.get(i + 1, j - 1) as i64 - left - below + r < 0 {
                    return false;
                }
            }
        }
        true
    }

    fn require_valid(&self) -> Result<()> {
        if self.validate() {
            Ok(())
        } else {
            Err(Error::InvalidRanks(self.to_json()))
        }
    }

    /// `d(r) = sum_{i<j} (r_{i,j-1} - r_ij)(r_{i+1,j} - r_ij)`.
    pub fn expected_codim(&self) -> Result<usize> {
        Ok(self.rectangle_diagram()?.codim())
    }

    pub fn rectangle_diagram(&self) -> Result<RectangleDiagram> {
        self.require_valid()?;
        let n = self.n();
        let rects = (0..n)
            .map(|i| {
                (i + 1..=n)
                    .map(|j| {
                        let r = self.get(i, j);
                        (self.get(i + 1, j) - r, self.get(i, j - 1) - r)
                    })
                    .collect()
            })
            .collect();
        Ok(RectangleDiagram { n, rects })
    }
}

/// The rectangles `R_ij` (`0 <= i < j <= n`) of a rank diagram, with
/// `r_{i+1,j} - r_ij` rows and `r_{i,j-1} - r_ij` columns.
///
/// Text form: the rows of the diagram separated by `;`, row `k` listing
/// `R_{0,k}, R_{1,k+1}, ..` as `rowsxcols`, e.g. `1x0,0x1;1x1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectangleDiagram {
    n: usize,
    /// `rects[i][j - i - 1] = (rows, cols)` of `R_ij`.
    rects: Vec<Vec<(u32, u32)>>,
}

impl RectangleDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `(rows, cols)` of `R_ij`.
    pub fn rect(&self, i: usize, j: usize) -> (u32, u32) {
        self.rects[i][j - i - 1]
    }

    pub fn rows(&self, i: usize, j: usize) -> u32 {
        self.rect(i, j).0
    }

    pub fn cols(&self, i: usize, j: usize) -> u32 {
        self.rect(i, j).1
    }

    /// `R_ij` as a partition `(cols)^rows`.
    pub fn partition(&self, i: usize, j: usize) -> Partition {
        let (rows, cols) = self.rect(i, j);
        Partition::rectangle(cols, rows as usize)
    }

    pub fn is_empty_rect(&self, i: usize, j: usize) -> bool {
        let (r, c) = self.rect(i, j);
        r == 0 || c == 0
    }

    /// `d(r)`, the total area.
    pub fn codim(&self) -> usize {
        self.rects
            .iter()
            .flatten()
            .map(|&(r, c)| r as usize * c as usize)
            .sum()
    }

    /// The diagram of the rank conditions with the top row dropped:
    /// `R'_ij = R_{i,j+1}`.
    pub fn reduced(&self) -> RectangleDiagram {
        assert!(self.n >= 1);
        let n = self.n - 1;
        let rects = (0..n).map(|i| self.rects[i][1..].to_vec()).collect();
        RectangleDiagram { n, rects }
    }

    /// Whether every `R_ij` with `j - i > 2` is empty.
    pub fn empty_below_row_two(&self) -> bool {
        (0..self.n).all(|i| (i + 3..=self.n).all(|j| self.is_empty_rect(i, j)))
    }
}

impl fmt::Display for RectangleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 1..=self.n {
            if k > 1 {
                write!(f, ";")?;
            }
            for i in 0..=self.n - k {
                if i > 0 {
                    write!(f, ",")?;
                }
                let (r, c) = self.rect(i, i + k);
                write!(f, "{r}x{c}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for RectangleDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RectangleDiagram {
                n: 0,
                rects: Vec::new(),
            });
        }
        let rows: Vec<&str> = s.split(';').collect();
        let n = rows.len();
        let mut rects = vec![Vec::new(); n];
        let mut pos = 0;
        for (k0, row) in rows.iter().enumerate() {
            let entries: Vec<&str> = row.split(',').collect();
            if entries.len() != n - k0 {
                return Err(Error::Parse {
                    pos,
                    msg: format!("row {} needs {} rectangles", k0 + 1, n - k0),
                });
            }
            for (i, e) in entries.iter().enumerate() {
                let bad = || Error::Parse {
                    pos,
                    msg: format!("expected ROWSxCOLS, found \"{e}\""),
                };
                let (r, c) = e.trim().split_once('x').ok_or_else(bad)?;
                let r: u32 = r.parse().map_err(|_| bad())?;
                let c: u32 = c.parse().map_err(|_| bad())?;
                rects[i].push((r, c));
                pos += e.len() + 1;
            }
        }
        Ok(RectangleDiagram { n, rects })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> RankConditions {
        RankConditions::from_json(r#"{"ranks":[1,2,1],"r":{"0,1":1,"1,2":1,"0,2":0}}"#).unwrap()
    }

    #[test]
    fn validation_examples() {
        let two = RankConditions::from_fn(&[2, 2], |_, _| 1);
        assert!(two.validate());
        assert_eq!(two.expected_codim().unwrap(), 1);
        assert!(example().validate());
        assert_eq!(example().expected_codim().unwrap(), 1);
        let bad = RankConditions::from_fn(&[1, 1, 1], |i, j| if j - i == 1 { 1 } else { 0 });
        assert!(!bad.validate());
        assert!(bad.expected_codim().is_err());
        let generic = RankConditions::from_fn(&[3, 1, 2], |i, j| (i..=j).map(|k| [3, 1, 2][k]).min().unwrap());
        assert_eq!(generic.expected_codim().unwrap(), 0);
    }

    #[test]
    fn diagram_text() {
        let d = example().rectangle_diagram().unwrap();
        assert_eq!(d.to_string(), "1x0,0x1;1x1");
        assert_eq!(d.to_string().parse::<RectangleDiagram>().unwrap(), d);
        assert_eq!(d.reduced().to_string(), "1x1");
        assert_eq!("".parse::<RectangleDiagram>().unwrap().n(), 0);
        assert!("1x0;1x1".parse::<RectangleDiagram>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = example();
        assert_eq!(RankConditions::from_json(&r.to_json()).unwrap(), r);
        assert!(RankConditions::from_json(r#"{"ranks":[1,2],"r":{}}"#).is_err());
        assert!(RankConditions::from_json("{").is_err());
    }
}
