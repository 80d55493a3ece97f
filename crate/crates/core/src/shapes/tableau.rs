use crate::error::{Error, Result};
use crate::shapes::{IntSeq, SkewShape};

/// A filling of a skew shape by nonempty sets of positive integers, rows
/// weakly increasing (`max(a) <= min(b)`) and columns strictly increasing
/// (`max(a) < min(b)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    shape: SkewShape,
    /// One sorted set per cell, in the order of `shape.cells()`.
    boxes: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordContent {
    pub word: Vec<u32>,
    pub content: IntSeq,
    pub is_reverse_lattice: bool,
}

impl SetValuedTableau {
    pub fn new(shape: SkewShape, mut boxes: Vec<Vec<u32>>) -> Result<Self> {
        let cells = shape.cells();
        if boxes.len() != cells.len() {
            return Err(Error::Precondition(format!(
                "{} boxes given for a shape with {} cells",
                boxes.len(),
                cells.len()
            )));
        }
        for b in &mut boxes {
            b.sort_unstable();
            b.dedup();
            if b.is_empty() || b[0] == 0 {
                return Err(Error::Precondition(
                    "every box needs a nonempty set of positive integers".into(),
                ));
            }
        }
        let at = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
        for (k, &(r, c)) in cells.iter().enumerate() {
            let lo = boxes[k][0];
            if let Some(l) = c.checked_sub(1).and_then(|c0| at(r, c0)) {
                if *boxes[l].last().unwrap() > lo {
                    return Err(Error::Precondition(format!("row {} is not weakly increasing", r + 1)));
                }
            }
            if let Some(u) = r.checked_sub(1).and_then(|r0| at(r0, c)) {
                if *boxes[u].last().unwrap() >= lo {
                    return Err(Error::Precondition(format!(
                        "column {} is not strictly increasing",
                        c + 1
                    )));
                }
            }
        }
        Ok(SetValuedTableau { shape, boxes })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn boxes(&self) -> &[Vec<u32>] {
        &self.boxes
    }

    /// `|T|`, the total number of entries.
    pub fn degree(&self) -> usize {
        self.boxes.iter().map(Vec::len).sum()
    }

    /// Reading word (rows bottom to top, each left to right, box entries
    /// increasing), its content, and whether every suffix has partition content.
    pub fn word_content(&self) -> WordContent {
        let cells = self.shape.cells();
        let mut order: Vec<usize> = (0..cells.len()).collect();
        order.sort_by_key(|&k| (std::cmp::Reverse(cells[k].0), cells[k].1));
        let word: Vec<u32> = order
            .iter()
            .flat_map(|&k| self.boxes[k].iter().copied())
            .collect();
        let top = word.iter().copied().max().unwrap_or(0) as usize;
        let mut content = vec![0i64; top];
        let mut lattice = true;
        for &a in word.iter().rev() {
            let a = a as usize;
            content[a - 1] += 1;
            if a >= 2 && content[a - 1] > content[a - 2] {
                lattice = false;
            }
        }
        WordContent {
            word,
            content: IntSeq::new(content),
            is_reverse_lattice: lattice,
        }
    }
}

/// Every set-valued tableau of `shape` with entries in `1..=max_entry`.
/// With `lattice_only` only tableaux whose word is a reverse lattice word
/// are produced. The order is fixed: cells are filled top row first, each
/// row right to left, and the sets in a box are tried largest entry first.
pub fn enumerate_svt(
    shape: &SkewShape,
    max_entry: u32,
    lattice_only: bool,
) -> std::vec::IntoIter<SetValuedTableau> {
    let search = SvtSearch::new(shape, max_entry, lattice_only);
    let cells = shape.cells();
    let mut out = Vec::new();
    search.run(|masks, _| {
        let mut boxes = vec![Vec::new(); cells.len()];
        for (k, &m) in masks.iter().enumerate() {
            let pos = search.cell_index[k];
            boxes[pos] = mask_entries(m);
        }
        out.push(SetValuedTableau {
            shape: shape.clone(),
            boxes,
        });
    });
    out.into_iter()
}

pub(crate) fn mask_entries(mut m: u64) -> Vec<u32> {
    let mut v = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        v.push(m.trailing_zeros());
        m &= m - 1;
    }
    v
}

#[derive(Clone, Copy)]
struct FillCell {
    right: Option<usize>,
    up: Option<usize>,
}

/// Backtracking search over set-valued fillings. Entries are bit positions
/// of a `u64`, so `max_entry <= 63`.
pub(crate) struct SvtSearch {
    cells: Vec<FillCell>,
    /// Position of each fill-order cell in `SkewShape::cells()` order.
    cell_index: Vec<usize>,
    max_entry: u32,
    lattice: bool,
    initial: Vec<u32>,
    bound: Option<Vec<u32>>,
    budget: Option<usize>,
}

impl SvtSearch {
    pub(crate) fn new(shape: &SkewShape, max_entry: u32, lattice: bool) -> Self {
        assert!(max_entry <= 63, "entries above 63 are not supported");
        let rowmajor = shape.cells();
        let mut fill: Vec<(usize, usize)> = rowmajor.clone();
        fill.sort_by_key(|&(r, c)| (r, std::cmp::Reverse(c)));
        let find = |r: usize, c: usize| fill.iter().position(|&x| x == (r, c));
        let cells = fill
            .iter()
            .map(|&(r, c)| FillCell {
                right: find(r, c + 1),
                up: r.checked_sub(1).and_then(|r0| find(r0, c)),
            })
            .collect();
        let cell_index = fill
            .iter()
            .map(|x| rowmajor.iter().position(|y| y == x).unwrap())
            .collect();
        SvtSearch {
            cells,
            cell_index,
            max_entry,
            lattice,
            initial: Vec::new(),
            bound: None,
            budget: None,
        }
    }

    /// Content already present before the first cell is read; used when a
    /// fixed piece of the word precedes the cells being enumerated.
    pub(crate) fn with_initial_content(mut self, initial: Vec<u32>) -> Self {
        self.initial = initial;
        self
    }

    /// Prunes every branch whose content exceeds `bound` entrywise.
    pub(crate) fn with_bound(mut self, bound: Vec<u32>) -> Self {
        self.bound = Some(bound);
        self
    }

    /// Caps the number of entries placed in the cells.
    pub(crate) fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    /// Calls `visit(masks, content)` for every filling; `masks` are in fill
    /// order and `content[k-1]` counts the entry `k`.
    pub(crate) fn run<F: FnMut(&[u64], &[u32])>(&self, mut visit: F) {
        let width = self.max_entry as usize + 1;
        let mut content = vec![0u32; width];
        for (k, &c) in self.initial.iter().enumerate() {
            content[k + 1] = c;
        }
        if let Some(b) = &self.bound {
            if (1..width).any(|k| content[k] > b.get(k - 1).copied().unwrap_or(0)) {
                return;
            }
        }
        let mut masks = vec![0u64; self.cells.len()];
        let mut st = State {
            content,
            masks: &mut masks,
            placed: 0,
        };
        self.fill(0, &mut st, &mut visit);
    }

    fn fill<F: FnMut(&[u64], &[u32])>(&self, idx: usize, st: &mut State<'_>, visit: &mut F) {
        if idx == self.cells.len() {
            visit(st.masks, &st.content[1..]);
            return;
        }
        let cell = self.cells[idx];
        let lo = cell.up.map_or(1, |u| 64 - st.masks[u].leading_zeros());
        let hi = cell
            .right
            .map_or(self.max_entry, |r| st.masks[r].trailing_zeros());
        if lo > hi {
            return;
        }
        self.choose(idx, lo, hi, 0, st, visit);
    }

    /// Adds entries to cell `idx` in decreasing order; `cap` is the largest
    /// entry still allowed.
    fn choose<F: FnMut(&[u64], &[u32])>(
        &self,
        idx: usize,
        lo: u32,
        cap: u32,
        mask: u64,
        st: &mut State<'_>,
        visit: &mut F,
    ) {
        for k in (lo..=cap).rev() {
            let ku = k as usize;
            if self.lattice && ku >= 2 && st.content[ku] + 1 > st.content[ku - 1] {
                continue;
            }
            if let Some(b) = &self.bound {
                if st.content[ku] + 1 > b.get(ku - 1).copied().unwrap_or(0) {
                    continue;
                }
            }
            if self.budget.is_some_and(|b| st.placed >= b) {
                break;
            }
            st.content[ku] += 1;
            st.placed += 1;
            let m = mask | (1u64 << k);
            st.masks[idx] = m;
            self.fill(idx + 1, st, visit);
            if k > lo {
                self.choose(idx, lo, k - 1, m, st, visit);
            }
            st.content[ku] -= 1;
            st.placed -= 1;
        }
        st.masks[idx] = mask;
    }
}

struct State<'a> {
    /// `content[k]` for entry `k`; index 0 is unused.
    content: Vec<u32>,
    masks: &'a mut Vec<u64>,
    placed: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn single_box() {
        let all: Vec<_> = enumerate_svt(&sk("1/"), 2, false).collect();
        let sets: Vec<Vec<u32>> = all.iter().map(|t| t.boxes()[0].clone()).collect();
        assert_eq!(sets.len(), 3);
        assert!(sets.contains(&vec![1]) && sets.contains(&vec![2]) && sets.contains(&vec![1, 2]));
        assert_eq!(enumerate_svt(&sk("1/"), 1, false).count(), 1);
    }

    #[test]
    fn displayed_word() {
        let shape = SkewShape::new(Partition::from([4, 3, 3]), Partition::from([2, 1])).unwrap();
        let boxes = vec![
            vec![1],
            vec![2, 3],
            vec![1, 2],
            vec![2, 3, 4],
            vec![2],
            vec![3, 5],
            vec![7],
        ];
        let t = SetValuedTableau::new(shape, boxes).unwrap();
        assert_eq!(t.word_content().word, vec![2, 3, 5, 7, 1, 2, 2, 3, 4, 1, 2, 3]);
        assert_eq!(t.degree(), 12);
    }

    #[test]
    fn single_box_words() {
        let one = SetValuedTableau::new(sk("1/"), vec![vec![1]]).unwrap();
        let wc = one.word_content();
        assert_eq!((wc.word, wc.content, wc.is_reverse_lattice), (vec![1], IntSeq::new(vec![1]), true));
        let two = SetValuedTableau::new(sk("1/"), vec![vec![2]]).unwrap();
        let wc = two.word_content();
        assert_eq!(wc.content, IntSeq::new(vec![0, 1]));
        assert!(!wc.is_reverse_lattice);
    }

    #[test]
    fn invalid_fillings_are_rejected() {
        assert!(SetValuedTableau::new(sk("2/"), vec![vec![2], vec![1]]).is_err());
        assert!(SetValuedTableau::new(sk("1,1/"), vec![vec![1], vec![1]]).is_err());
        assert!(SetValuedTableau::new(sk("2/"), vec![vec![1, 2], vec![2]]).is_ok());
    }

    #[test]
    fn lattice_filter_matches_word_predicate() {
        let shape = SkewShape::star(&Partition::from([2, 1]), &Partition::from([1, 1]));
        let all: Vec<_> = enumerate_svt(&shape, 4, false).collect();
        let lat: Vec<_> = enumerate_svt(&shape, 4, true).collect();
        let filtered: Vec<_> = all
            .iter()
            .filter(|t| t.word_content().is_reverse_lattice)
            .cloned()
            .collect();
        assert_eq!(lat, filtered);
        for t in &all {
            SetValuedTableau::new(t.shape().clone(), t.boxes().to_vec()).unwrap();
        }
    }

    #[test]
    fn product_of_single_boxes() {
        // contents of lattice fillings of (1)*(1) give G1*G1 = G2 + G11 - G21
        let shape = SkewShape::star(&Partition::from([1]), &Partition::from([1]));
        let mut contents: Vec<IntSeq> = enumerate_svt(&shape, 2, true)
            .map(|t| t.word_content().content)
            .collect();
        contents.sort();
        assert_eq!(
            contents,
            vec![IntSeq::new(vec![1, 1]), IntSeq::new(vec![2]), IntSeq::new(vec![2, 1])]
        );
    }
}
