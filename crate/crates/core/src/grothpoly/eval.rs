use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::polyzx::{det_mod, h_mod, Monomial, MAX_X};
use crate::scalar::sign;
use crate::shapes::{IntSeq, Partition, SkewShape, SvtSearch};
use crate::Poly;

/// `G_lambda(x_1..x_n) = sum_T (-1)^{|T|-|lambda|} x^T` over set-valued
/// tableaux of shape `lambda` with entries at most `n`.
pub fn eval_g_single(lambda: &Partition, n: usize) -> Poly {
    assert!(n <= MAX_X, "at most {MAX_X} variables are supported");
    let mut out = Poly::zero(n, 0);
    let base = lambda.weight() as i64;
    SvtSearch::new(&SkewShape::straight(lambda.clone()), n as u32, false).run(|_, content| {
        let exps: Vec<u8> = content.iter().map(|&c| c as u8).collect();
        let deg: u32 = content.iter().sum();
        out.add_term(Monomial::from_exponents(&exps, &[]), sign(deg as i64 - base));
    });
    out
}

/// `G_lambda(x_1..x_m; y_1..y_k) = sum d^lambda_{sigma tau} G_sigma(x) G_{tau'}(y)`.
pub fn eval_g_double(lambda: &Partition, m: usize, k: usize) -> Poly {
    let mut out = Poly::zero(m, k);
    for (sigma, tau, d) in Engine::global().coproduct_table(lambda).iter() {
        if sigma.len() > m || tau.first() as usize > k {
            continue;
        }
        let gx = eval_g_single(sigma, m);
        let gy = x_to_y(&eval_g_single(&tau.conjugate(), k));
        out += &(&gx * &gy).scale(d);
    }
    out
}

/// Renames `x_i` to `y_i`. The input must not involve `y`.
pub fn x_to_y(p: &Poly) -> Poly {
    assert!(
        p.terms().all(|(m, _)| m.y_degree() == 0),
        "polynomial already involves y"
    );
    let mut out = Poly::zero(0, p.nx());
    for (m, c) in p.terms() {
        out.add_term(Monomial::from_exponents(&[], &m.x_exps()[..p.nx()]), *c);
    }
    out
}

/// Lenart's determinant `det(h_{I_i+n-j}(x_1..x_n / 1^{i-1}))_{i,j <= n}`.
///
/// Computed modulo `x_k^{max(I)+1}`, which loses nothing because the
/// determinant has degree at most `max(I)` in each variable.
///
/// Columns run from the highest index down, as in the classical
/// Jacobi-Trudi matrix; listing them in increasing order instead changes
/// the determinant by `(-1)^{n(n-1)/2}` and gives `-G_1` for `I = (1)`,
/// `n = 2`.
pub fn lenart_det(seq: &IntSeq, n: usize) -> Result<Poly> {
    let l = seq.len();
    if n <= l {
        return Err(Error::Precondition(format!(
            "need more than {l} variables for a sequence of length {l}"
        )));
    }
    for i in 1..=l {
        if (n as i64) < i as i64 - seq.get(i) {
            return Err(Error::Precondition(format!(
                "need n >= {} for entry {i}",
                i as i64 - seq.get(i)
            )));
        }
    }
    if n > MAX_X {
        return Err(Error::TooManyVariables(format!("{n} variables requested")));
    }
    let matrix: Vec<Vec<Poly>> = (1..=n)
        .map(|i| {
            let ii = if i <= l { seq.get(i) } else { 0 };
            (1..=n)
                .map(|j| h_mod(ii + (n - j) as i64, n, i - 1))
                .collect()
        })
        .collect();
    // the determinant is a combination of G_lambda with lambda_1 <= max(I),
    // so no variable occurs to a higher power
    let cap = seq.entries().iter().copied().max().unwrap_or(0).max(0);
    Ok(det_mod(&matrix, Some(cap.min(u8::MAX as i64) as u8)).with_widths(n, 0))
}
