//! Alexander polynomials of knot closures from the reduced Burau
//! representation: Δ(t) ≐ det(B(w) − I)·(t − 1)/(t^k − 1) for a word w on
//! k strands, made canonical by centering and unit normalization.

use crate::algebra::{determinant, LaurentPoly};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

fn mono(coef: i64, exp: i64) -> LaurentPoly {
    LaurentPoly::term(coef, exp)
}

/// Reduced Burau matrix of a single generator on k strands, acting on
/// column vectors; (k−1)×(k−1), deviating from the identity only in the
/// rows and columns neighbouring the generator index.
fn burau_matrix(k: usize, letter: i32) -> Vec<Vec<LaurentPoly>> {
    let n = k - 1;
    let i = letter.unsigned_abs() as usize;
    let mut m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect();
    let e = if letter > 0 { 1 } else { -1 };
    // Row/column index of the generator's diagonal −t (or −t⁻¹) entry.
    let d = i - 1;
    m[d][d] = mono(-1, e);
    if i >= 2 {
        // Entry above the diagonal pivot.
        m[d - 1][d] = if letter > 0 { mono(1, 1) } else { LaurentPoly::one() };
    }
    if i <= n - 1 {
        // Entry below the diagonal pivot.
        m[d + 1][d] = if letter > 0 { LaurentPoly::one() } else { mono(1, -1) };
    }
    m
}

fn mat_mul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for r in 0..n {
        for (k, row_b) in b.iter().enumerate() {
            if a[r][k].is_zero() {
                continue;
            }
            for c in 0..n {
                if row_b[c].is_zero() {
                    continue;
                }
                out[r][c] = out[r][c].add(&a[r][k].mul(&row_b[c]));
            }
        }
    }
    out
}

/// Alexander polynomial of the closure of w, which must be a knot.
pub fn alexander_burau(w: &BraidWord) -> Result<LaurentPoly> {
    if w.closure_components() != 1 {
        return Err(Error::MultiComponent);
    }
    let k = w.strands();
    let n = k - 1;
    let mut m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| if r == c { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect();
    for &letter in w.letters() {
        m = mat_mul(&m, &burau_matrix(k, letter));
    }
    for (r, row) in m.iter_mut().enumerate() {
        row[r] = row[r].sub(&LaurentPoly::one());
    }
    let det = determinant(&m)?;
    let numerator = det.mul(&LaurentPoly::from_terms([(1, 1i64), (0, -1)]));
    let quotient = numerator.divide_exact(&LaurentPoly::from_terms([(k as i64, 1i64), (0, -1)]))?;
    quotient.normalize_symmetric()
}
