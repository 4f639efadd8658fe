//! Exact signatures of symmetric rational matrices via congruent
//! diagonalization (simultaneous row and column operations).

use num::{Signed, Zero};

use crate::algebra::{rat_int, Rational};

/// Signature (positive minus negative diagonal entries after congruent
/// diagonalization) of a symmetric matrix. Panics if the input is not
/// square and symmetric. The empty matrix has signature 0.
pub fn signature_symmetric(mat: &[Vec<Rational>]) -> i64 {
    let n = mat.len();
    for (i, row) in mat.iter().enumerate() {
        assert_eq!(row.len(), n, "matrix must be square");
        for j in 0..n {
            assert_eq!(mat[i][j], mat[j][i], "matrix must be symmetric");
        }
    }
    let mut m: Vec<Vec<Rational>> = mat.to_vec();
    let mut positive = 0i64;
    let mut negative = 0i64;
    for i in 0..n {
        if m[i][i].is_zero() {
            match (i + 1..n).find(|&j| !m[i][j].is_zero()) {
                // Row i is zero in the active block: a zero eigenvalue.
                None => continue,
                Some(j) => {
                    // Adding (or, when that would cancel, subtracting) row
                    // and column j produces the nonzero pivot ±2m[i][j] + m[j][j].
                    let doubled = rat_int(2) * &m[i][j] + &m[j][j];
                    let sign = if doubled.is_zero() { rat_int(-1) } else { rat_int(1) };
                    for c in 0..n {
                        let t = &sign * &m[j][c];
                        m[i][c] += t;
                    }
                    for r in 0..n {
                        let t = &sign * &m[r][j];
                        m[r][i] += t;
                    }
                }
            }
        }
        let pivot = m[i][i].clone();
        debug_assert!(!pivot.is_zero());
        if pivot.is_positive() {
            positive += 1;
        } else {
            negative += 1;
        }
        for r in i + 1..n {
            let f = &m[r][i] / &pivot;
            if f.is_zero() {
                continue;
            }
            for c in i..n {
                let t = &f * &m[i][c];
                m[r][c] -= t;
            }
        }
        // Mirror the row operations on columns to keep the matrix symmetric.
        for c in i + 1..n {
            let f = &m[i][c] / &pivot;
            if f.is_zero() {
                continue;
            }
            for r in i..n {
                let t = &f * &m[r][i];
                m[r][c] -= t;
            }
        }
    }
    positive - negative
}

/// Convenience wrapper for integer matrices.
pub fn signature_symmetric_int(mat: &[Vec<i64>]) -> i64 {
    let lifted: Vec<Vec<Rational>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| rat_int(x)).collect())
        .collect();
    signature_symmetric(&lifted)
}
