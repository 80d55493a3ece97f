use std::fmt;

/// Number of `x` variables a [`Monomial`] can hold.
pub const MAX_X: usize = 24;
/// Number of `y` variables a [`Monomial`] can hold.
pub const MAX_Y: usize = 8;

/// A monomial `x^a y^b` as a dense exponent array: `x_i` sits at index
/// `i-1`, `y_j` at index `MAX_X + j - 1`.
///
/// The derived order is lexicographic on that array, so `x_1` is the
/// largest variable and every `x` precedes every `y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial([u8; MAX_X + MAX_Y]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_X + MAX_Y]);

    /// `x_i` (1-based).
    pub fn x(i: usize) -> Self {
        Self::x_pow(i, 1)
    }

    /// `y_j` (1-based).
    pub fn y(j: usize) -> Self {
        Self::y_pow(j, 1)
    }

    pub fn x_pow(i: usize, e: u8) -> Self {
        assert!((1..=MAX_X).contains(&i), "x_{i} is out of range");
        let mut m = Self::ONE;
        m.0[i - 1] = e;
        m
    }

    pub fn y_pow(j: usize, e: u8) -> Self {
        assert!((1..=MAX_Y).contains(&j), "y_{j} is out of range");
        let mut m = Self::ONE;
        m.0[MAX_X + j - 1] = e;
        m
    }

    /// Builds `x^xs y^ys` from exponent slices.
    pub fn from_exponents(xs: &[u8], ys: &[u8]) -> Self {
        assert!(xs.len() <= MAX_X && ys.len() <= MAX_Y);
        let mut m = Self::ONE;
        m.0[..xs.len()].copy_from_slice(xs);
        m.0[MAX_X..MAX_X + ys.len()].copy_from_slice(ys);
        m
    }

    #[inline]
    pub fn x_exp(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    #[inline]
    pub fn y_exp(&self, j: usize) -> u8 {
        self.0[MAX_X + j - 1]
    }

    pub fn x_exps(&self) -> &[u8] {
        &self.0[..MAX_X]
    }

    pub fn y_exps(&self) -> &[u8] {
        &self.0[MAX_X..]
    }

    pub(crate) fn set_x(&mut self, i: usize, e: u8) {
        self.0[i - 1] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn x_degree(&self) -> u32 {
        self.x_exps().iter().map(|&e| e as u32).sum()
    }

    pub fn y_degree(&self) -> u32 {
        self.y_exps().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Largest `i` with a nonzero `x_i` exponent, or 0.
    pub fn x_support(&self) -> usize {
        self.x_exps().iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Largest `j` with a nonzero `y_j` exponent, or 0.
    pub fn y_support(&self) -> usize {
        self.y_exps().iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Product; panics if an exponent overflows `u8`.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o = o.checked_add(*e).expect("exponent overflow");
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o = o.checked_sub(*e)?;
        }
        Some(Monomial(out))
    }

    /// Exchanges the exponents of `x_i` and `x_j`.
    pub fn swap_x(&self, i: usize, j: usize) -> Monomial {
        let mut out = self.0;
        out.swap(i - 1, j - 1);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, name: char, idx: usize, e: u8| -> fmt::Result {
            if e == 0 {
                return Ok(());
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}{idx}")
            } else {
                write!(f, "{name}{idx}^{e}")
            }
        };
        for i in 1..=MAX_X {
            put(f, 'x', i, self.x_exp(i))?;
        }
        for j in 1..=MAX_Y {
            put(f, 'y', j, self.y_exp(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
