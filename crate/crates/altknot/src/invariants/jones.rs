//! Jones polynomials of knot closures, computed in the algebra of planar
//! matchings on the braid's strands so the cost stays linear in word length.
//!
//! Each braid letter acts as A·(identity) + A⁻¹·(cup-cap) — with the powers
//! swapped for inverse letters — on a state vector indexed by noncrossing
//! matchings of 2k boundary points. Closing the braid turns each matching
//! into circles, and the resulting bracket is writhe-normalized into the
//! Jones polynomial in t = A⁻⁴.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::LaurentPoly;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// δ = −A² − A⁻², the value of a closed circle.
fn circle_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1i64), (-2, -1)])
}

/// Boundary points sit on a circle: top strand j at position j, bottom
/// strand j at position 2k−1−j. A matching is its own partner array.
struct Tables {
    dim: usize,
    identity: usize,
    /// action[i−1][b] = (index of b composed with the cup-cap at strands
    /// i, i+1; closed loops the composition produces).
    action: Vec<Vec<(usize, usize)>>,
    /// Circles formed when a matching's top is glued to its bottom.
    closure_circles: Vec<usize>,
}

/// All noncrossing perfect matchings of n points on a circle, in a stable
/// enumeration order.
fn noncrossing_matchings(n: usize) -> Vec<Vec<usize>> {
    fn extend(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(a) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] != usize::MAX {
                continue;
            }
            let inside_open = (a + 1..b).filter(|&i| partner[i] == usize::MAX).count();
            let crosses = (a + 1..b).any(|i| {
                let p = partner[i];
                p != usize::MAX && !(a < p && p < b)
            });
            if inside_open % 2 == 1 || crosses {
                continue;
            }
            partner[a] = b;
            partner[b] = a;
            extend(partner, out);
            partner[a] = usize::MAX;
            partner[b] = usize::MAX;
        }
    }
    let mut out = Vec::new();
    extend(&mut vec![usize::MAX; n], &mut out);
    out
}

/// Stacks matching x above matching y, gluing x's bottom to y's top.
/// Returns the boundary matching of the result and the count of closed
/// loops swallowed in the middle.
fn compose(k: usize, x: &[usize], y: &[usize]) -> (Vec<usize>, usize) {
    let n = 2 * k;
    // Nodes 0..n are x's points, n..2n are y's points; gluing connects
    // node v to 2n−1−v for the middle band k ≤ v < 3k.
    let pairing = |v: usize| if v < n { x[v] } else { y[v - n] + n };
    let glue = |v: usize| 2 * n - 1 - v;
    let is_middle = |v: usize| (k..3 * k).contains(&v);
    let mut seen = vec![false; 2 * n];
    let mut result = vec![usize::MAX; n];
    let new_pos = |v: usize| if v < k { v } else { v - n };
    for start in (0..k).chain(3 * k..2 * n) {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut v = pairing(start);
        while is_middle(v) {
            seen[v] = true;
            v = glue(v);
            seen[v] = true;
            v = pairing(v);
        }
        seen[v] = true;
        result[new_pos(start)] = new_pos(v);
        result[new_pos(v)] = new_pos(start);
    }
    let mut loops = 0;
    for start in k..3 * k {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut v = start;
        loop {
            seen[v] = true;
            let w = glue(v);
            seen[w] = true;
            v = pairing(w);
            if v == start {
                break;
            }
        }
    }
    (result, loops)
}

/// The cup-cap matching joining strands i and i+1 (1-based) on both sides.
fn cup_cap(k: usize, i: usize) -> Vec<usize> {
    let n = 2 * k;
    let mut m: Vec<usize> = (0..n).map(|j| n - 1 - j).collect();
    m[i - 1] = i;
    m[i] = i - 1;
    m[n - 1 - i] = n - i;
    m[n - i] = n - 1 - i;
    m
}

fn closure_circles(matching: &[usize]) -> usize {
    let n = matching.len();
    let mut seen = vec![false; n];
    let mut circles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut v = start;
        loop {
            seen[v] = true;
            let w = matching[v];
            seen[w] = true;
            v = n - 1 - w;
            if v == start {
                break;
            }
        }
    }
    circles
}

fn build_tables(k: usize) -> Tables {
    let matchings = noncrossing_matchings(2 * k);
    let index: HashMap<&[usize], usize> = matchings
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let identity = index[(0..2 * k).map(|j| 2 * k - 1 - j).collect::<Vec<_>>().as_slice()];
    let action = (1..k)
        .map(|i| {
            let e = cup_cap(k, i);
            matchings
                .iter()
                .map(|m| {
                    let (result, loops) = compose(k, m, &e);
                    (index[result.as_slice()], loops)
                })
                .collect()
        })
        .collect();
    let closure_circles = matchings.iter().map(|m| closure_circles(m)).collect();
    Tables {
        dim: matchings.len(),
        identity,
        action,
        closure_circles,
    }
}

/// Tables are built once per strand count and shared; initialization is
/// protected by a lock, so concurrent first use is safe and idempotent.
fn tables(k: usize) -> Arc<Tables> {
    static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    let registry = REGISTRY.get_or_init(Mutex::default);
    let mut guard = registry.lock().expect("table registry lock");
    guard
        .entry(k)
        .or_insert_with(|| Arc::new(build_tables(k)))
        .clone()
}

/// Kauffman bracket of the braid closure, in the smoothing variable.
fn bracket_of_braid(w: &BraidWord) -> LaurentPoly {
    let k = w.strands();
    let tb = tables(k);
    let delta = circle_value();
    let mut coeffs = vec![LaurentPoly::zero(); tb.dim];
    coeffs[tb.identity] = LaurentPoly::one();
    for &letter in w.letters() {
        let i = letter.unsigned_abs() as usize;
        let (keep_exp, swap_exp) = if letter > 0 { (1, -1) } else { (-1, 1) };
        let mut next = vec![LaurentPoly::zero(); tb.dim];
        for (b, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[b] = next[b].add(&c.mul(&LaurentPoly::term(1, keep_exp)));
            let (res, loops) = tb.action[i - 1][b];
            let moved = c
                .mul(&LaurentPoly::term(1, swap_exp))
                .mul(&delta.pow(loops as u32));
            next[res] = next[res].add(&moved);
        }
        coeffs = next;
    }
    let mut bracket = LaurentPoly::zero();
    for (b, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        bracket = bracket.add(&c.mul(&delta.pow(tb.closure_circles[b] as u32 - 1)));
    }
    bracket
}

/// Writhe-normalizes a bracket — multiplication by (−A³)^{−writhe} — and
/// substitutes t = A⁻⁴. Fails if the normalized exponents are not all
/// multiples of four, which cannot happen for a knot diagram's bracket.
pub fn bracket_to_jones(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly> {
    let mut f = bracket.mul(&LaurentPoly::term(1, -3 * writhe));
    if writhe % 2 != 0 {
        f = f.neg();
    }
    let mut terms = Vec::new();
    for (exp, coef) in f.terms_desc() {
        if exp % 4 != 0 {
            return Err(Error::Invalid(format!(
                "normalized bracket exponent {exp} is not a multiple of 4"
            )));
        }
        terms.push((-exp / 4, coef.clone()));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// Jones polynomial of the closure of w, which must be a knot.
pub fn jones_braid(w: &BraidWord) -> Result<LaurentPoly> {
    if w.closure_components() != 1 {
        return Err(Error::MultiComponent);
    }
    bracket_to_jones(&bracket_of_braid(w), w.writhe())
}
