use crate::gamma::GammaElement;
use crate::scalar::sign;
use crate::shapes::{Partition, SkewShape};

/// A colored and marked Young diagram `lambda0 ⊆ lambda ⊆ nu0 ⊆ nu`
/// relative to a partition `mu`: white boxes `lambda`, gray boxes
/// `nu / lambda`, marked boxes `lambda / lambda0` and `nu / nu0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cmyd {
    pub lambda0: Partition,
    pub lambda: Partition,
    pub nu0: Partition,
    pub nu: Partition,
}

impl Cmyd {
    /// Unmarked gray boxes, `|nu0 / lambda|`.
    pub fn g(&self) -> usize {
        self.nu0.weight() - self.lambda.weight()
    }

    /// Unmarked white boxes, `|lambda0|`.
    pub fn w(&self) -> usize {
        self.lambda0.weight()
    }

    /// Unmarked boxes.
    pub fn u(&self) -> usize {
        self.g() + self.w()
    }

    /// Marked boxes, `|lambda / lambda0| + |nu / nu0|`.
    pub fn m(&self) -> usize {
        self.lambda.weight() - self.lambda0.weight() + self.nu.weight() - self.nu0.weight()
    }

    /// Checks the axioms against `mu`.
    pub fn is_valid(&self, mu: &Partition) -> bool {
        let skew = |o: &Partition, i: &Partition| SkewShape::new(o.clone(), i.clone()).ok();
        let (Some(white_free), Some(marked_white), Some(gray), Some(marked_gray)) = (
            skew(mu, &self.lambda0),
            skew(&self.lambda, &self.lambda0),
            skew(&self.nu, &self.lambda),
            skew(&self.nu, &self.nu0),
        ) else {
            return false;
        };
        if !mu.contains(&self.lambda) || !self.nu0.contains(&self.lambda) {
            return false;
        }
        let rook = |s: &SkewShape| s.is_horizontal_strip() && s.is_vertical_strip();
        if !white_free.is_vertical_strip()
            || !gray.is_horizontal_strip()
            || !rook(&marked_white)
            || !rook(&marked_gray)
        {
            return false;
        }
        match top_gray_row(&self.lambda, &self.nu) {
            Some(r) => self.nu0.get(r) == self.nu.get(r),
            None => true,
        }
    }
}

fn top_gray_row(lambda: &Partition, nu: &Partition) -> Option<usize> {
    (0..nu.len()).find(|&i| nu.get(i) > lambda.get(i))
}

/// Every CMYD relative to `mu` with `g` unmarked gray and `w` unmarked
/// white boxes, sorted.
pub fn enumerate_cmyd(mu: &Partition, g: usize, w: usize) -> Vec<Cmyd> {
    let mut out = Vec::new();
    let l = mu.len();
    // lambda0_i in {mu_i - 1, mu_i}
    for drop in 0u32..(1 << l) {
        let lambda0: Vec<u32> = (0..l)
            .map(|i| mu.get(i) - ((drop >> i) & 1))
            .collect();
        if lambda0.windows(2).any(|x| x[0] < x[1]) {
            continue;
        }
        let lambda0 = Partition::from_sorted(lambda0);
        if lambda0.weight() != w {
            continue;
        }
        // lambda_i in {lambda0_i, mu_i}
        for keep in 0u32..(1 << l) {
            if keep & !drop != 0 {
                continue;
            }
            let lambda: Vec<u32> = (0..l)
                .map(|i| lambda0.get(i) + ((keep >> i) & 1))
                .collect();
            if lambda.windows(2).any(|x| x[0] < x[1]) {
                continue;
            }
            let lambda = Partition::from_sorted(lambda);
            if !SkewShape::new(lambda.clone(), lambda0.clone())
                .unwrap()
                .is_horizontal_strip()
            {
                continue;
            }
            let max_gray = g + lambda.len() + 1;
            let mut nu = Vec::new();
            horizontal_strips(&lambda, 0, max_gray, &mut nu, &mut |nu| {
                let nu = Partition::from_sorted(nu.to_vec());
                marked_gray(&lambda, &nu, g, &mut |nu0| {
                    out.push(Cmyd {
                        lambda0: lambda0.clone(),
                        lambda: lambda.clone(),
                        nu0,
                        nu: nu.clone(),
                    });
                });
            });
        }
    }
    out.sort();
    out
}

/// All `nu ⊇ lambda` with `nu / lambda` a horizontal strip of at most
/// `budget` boxes.
fn horizontal_strips<F: FnMut(&[u32])>(
    lambda: &Partition,
    i: usize,
    budget: usize,
    cur: &mut Vec<u32>,
    emit: &mut F,
) {
    if i > lambda.len() {
        emit(cur);
        return;
    }
    let lo = lambda.get(i);
    let hi = if i == 0 {
        lo + budget as u32
    } else {
        lambda.get(i - 1).min(lo + budget as u32)
    };
    for v in lo..=hi {
        cur.push(v);
        horizontal_strips(lambda, i + 1, budget - (v - lo) as usize, cur, emit);
        cur.pop();
    }
}

/// All `nu0` with `lambda ⊆ nu0 ⊆ nu`, `nu / nu0` a rook strip avoiding the
/// top gray row, and `|nu0 / lambda| = g`.
fn marked_gray<F: FnMut(Partition)>(lambda: &Partition, nu: &Partition, g: usize, emit: &mut F) {
    let gray = nu.weight() - lambda.weight();
    if gray < g {
        return;
    }
    let marks = gray - g;
    let top = top_gray_row(lambda, nu);
    let rows: Vec<usize> = (0..nu.len()).filter(|&i| nu.get(i) > lambda.get(i)).collect();
    if marks > rows.len() {
        return;
    }
    for set in 0u32..(1 << rows.len()) {
        if set.count_ones() as usize != marks {
            continue;
        }
        let mut nu0: Vec<u32> = nu.parts().to_vec();
        let mut ok = true;
        for (b, &r) in rows.iter().enumerate() {
            if set >> b & 1 == 1 {
                if Some(r) == top {
                    ok = false;
                    break;
                }
                nu0[r] -= 1;
            }
        }
        if !ok || nu0.windows(2).any(|x| x[0] < x[1]) {
            continue;
        }
        let nu0 = Partition::from_sorted(nu0);
        let strip = SkewShape::new(nu.clone(), nu0.clone()).unwrap();
        if strip.is_horizontal_strip() && nu0.contains(lambda) {
            emit(nu0);
        }
    }
}

/// `sum_D (-1)^{m(D)} G_{nu(D)}` over CMYDs relative to `mu` with
/// `g(D) = p` and `w(D) = |mu| - q`. Equals `G_p G_{mu // (1^q)}`.
pub fn cmyd_sum(mu: &Partition, p: usize, q: usize) -> GammaElement {
    if q > mu.weight() {
        return GammaElement::zero();
    }
    enumerate_cmyd(mu, p, mu.weight() - q)
        .into_iter()
        .map(|d| {
            let s = sign(d.m() as i64);
            (d.nu, s)
        })
        .collect()
}
