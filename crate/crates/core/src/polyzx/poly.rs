use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rustc_hash::FxHashMap;

use crate::polyzx::monomial::{Monomial, MAX_X, MAX_Y};
use crate::scalar::Coeff;

/// A variable of the ambient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
}

/// A sparse polynomial in `x_1..x_nx` and `y_1..y_ny` with exact integer
/// coefficients. No zero coefficient is ever stored.
///
/// The widths `nx`, `ny` record the ambient ring. Arithmetic between
/// different widths works in the wider ring, and equality ignores widths
/// (two polynomials are equal when their terms are).
#[derive(Clone)]
pub struct MultiPoly<C = i64> {
    nx: usize,
    ny: usize,
    terms: FxHashMap<Monomial, C>,
}

fn check_widths(nx: usize, ny: usize) {
    assert!(nx <= MAX_X, "at most {MAX_X} x variables are supported");
    assert!(ny <= MAX_Y, "at most {MAX_Y} y variables are supported");
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nx: usize, ny: usize) -> Self {
        check_widths(nx, ny);
        MultiPoly {
            nx,
            ny,
            terms: FxHashMap::default(),
        }
    }

    pub fn constant(c: C, nx: usize, ny: usize) -> Self {
        let mut p = Self::zero(nx, ny);
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        Self::constant(C::one(), nx, ny)
    }

    pub fn x(i: usize, nx: usize, ny: usize) -> Self {
        assert!(i <= nx);
        let mut p = Self::zero(nx, ny);
        p.add_term(Monomial::x(i), C::one());
        p
    }

    pub fn y(j: usize, nx: usize, ny: usize) -> Self {
        assert!(j <= ny);
        let mut p = Self::zero(nx, ny);
        p.add_term(Monomial::y(j), C::one());
        p
    }

    pub fn monomial(m: Monomial, c: C, nx: usize, ny: usize) -> Self {
        let mut p = Self::zero(nx, ny);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I, nx: usize, ny: usize) -> Self {
        let mut p = Self::zero(nx, ny);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    /// Same terms, widths replaced. Panics if a term uses a dropped variable.
    pub fn with_widths(mut self, nx: usize, ny: usize) -> Self {
        check_widths(nx, ny);
        debug_assert!(self
            .terms
            .keys()
            .all(|m| m.x_support() <= nx && m.y_support() <= ny));
        self.nx = nx;
        self.ny = ny;
        self
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Unordered term iterator.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Terms in display order: total degree ascending, then exponent
    /// vectors lexicographically descending.
    pub fn sorted_terms(&self) -> Vec<(Monomial, C)> {
        let mut v: Vec<(Monomial, C)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| display_order(&a.0, &b.0));
        v
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert!(m.x_support() <= self.nx.max(MAX_X) && m.y_support() <= MAX_Y);
        self.nx = self.nx.max(m.x_support());
        self.ny = self.ny.max(m.y_support());
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree, `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        self.filter(|m| m.degree() <= d)
    }

    /// The homogeneous component of degree `d`.
    pub fn homogeneous(&self, d: u32) -> Self {
        self.filter(|m| m.degree() == d)
    }

    /// The lowest-degree homogeneous component.
    pub fn lowest_part(&self) -> Self {
        match self.min_degree() {
            Some(d) => self.homogeneous(d),
            None => self.clone(),
        }
    }

    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        MultiPoly {
            nx: self.nx,
            ny: self.ny,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Sets every listed variable to zero.
    pub fn substitute_zero(&self, vars: &[Var]) -> Self {
        self.filter(|m| {
            vars.iter().all(|v| match *v {
                Var::X(i) => m.x_exp(i) == 0,
                Var::Y(j) => m.y_exp(j) == 0,
            })
        })
    }

    /// Sets `x_i = 0` for `i > nx` and `y_j = 0` for `j > ny`, and shrinks
    /// the widths accordingly.
    pub fn restrict(&self, nx: usize, ny: usize) -> Self {
        let mut p = self.filter(|m| m.x_support() <= nx && m.y_support() <= ny);
        p.nx = nx.min(MAX_X);
        p.ny = ny.min(MAX_Y);
        p
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nx, self.ny);
        }
        MultiPoly {
            nx: self.nx,
            ny: self.ny,
            terms: self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, m: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(self.nx, self.ny);
        for (k, v) in &self.terms {
            out.add_term(k.mul(m), v.clone() * c.clone());
        }
        out
    }

    /// Product keeping only terms of total degree `<= cutoff`.
    pub fn mul_truncated(&self, other: &Self, cutoff: Option<u32>) -> Self {
        let mut out = Self::zero(self.nx.max(other.nx), self.ny.max(other.ny));
        if self.is_zero() || other.is_zero() {
            return out;
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let large_terms: Vec<(Monomial, u32, &C)> =
            large.terms.iter().map(|(m, c)| (*m, m.degree(), c)).collect();
        for (ma, ca) in &small.terms {
            let da = ma.degree();
            for (mb, db, cb) in &large_terms {
                if let Some(d) = cutoff {
                    if da + db > d {
                        continue;
                    }
                }
                out.add_term(ma.mul(mb), ca.clone() * (*cb).clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nx, self.ny);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_x(&self, i: usize, j: usize) -> Self {
        MultiPoly {
            nx: self.nx,
            ny: self.ny,
            terms: self.terms.iter().map(|(m, c)| (m.swap_x(i, j), c.clone())).collect(),
        }
    }

    /// Leading term in the lexicographic order of exponent arrays.
    pub fn leading_term(&self) -> Option<(Monomial, C)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0)).map(|(m, c)| (*m, c.clone()))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nx, self.ny);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            if !(c.clone() % lc.clone()).is_zero() {
                return None;
            }
            let qc = c / lc.clone();
            rem = &rem - &d.shift(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Converts coefficients into another ring.
    pub fn map_coeffs<D: Coeff, F: Fn(&C) -> D>(&self, f: F) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))), self.nx, self.ny)
    }

    /// True when exchanging `x_i` and `x_{i+1}` leaves the polynomial fixed.
    pub fn is_symmetric_in_x(&self, i: usize) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| self.terms.get(&m.swap_x(i, i + 1)) == Some(c))
    }
}

/// Total degree ascending, then exponent arrays descending.
pub(crate) fn display_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

impl<C: Coeff> PartialEq for MultiPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<C: Coeff> Eq for MultiPoly<C> {}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C: Coeff> AddAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn add_assign(&mut self, rhs: &MultiPoly<C>) {
        self.nx = self.nx.max(rhs.nx);
        self.ny = self.ny.max(rhs.ny);
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&MultiPoly<C>> for MultiPoly<C> {
    fn sub_assign(&mut self, rhs: &MultiPoly<C>) {
        self.nx = self.nx.max(rhs.nx);
        self.ny = self.ny.max(rhs.ny);
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<C: Coeff> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
        self.mul_truncated(rhs, None)
    }
}

impl<C: Coeff> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> Add for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(mut self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(mut self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Mul for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        -&self
    }
}
