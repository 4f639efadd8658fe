//! Left-greedy Garside normal form for braid words, giving an exact
//! solution to the braid-group word problem.
//!
//! Every braid word equals Δ^d · A_1 · A_2 · … · A_m where Δ is the half
//! twist, each A_i is a nonidentity, non-Δ permutation braid, and each
//! consecutive pair is left-weighted. The triple (strand count, d, factor
//! permutations) is a complete invariant: two words are equal in the braid
//! group iff their normal forms coincide.

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Garside normal form Δ^delta_power · factors, with factors stored as
/// permutation arrays (`f[i]` = exit slot of the strand entering slot `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Vec<usize>>,
}

fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

/// Permutation of the half twist Δ: slot i maps to slot k−1−i.
fn omega(k: usize) -> Vec<usize> {
    (0..k).rev().collect()
}

/// Conjugation by Δ: τ(π) = ω π ω (an involution on factors; moving a Δ
/// across a factor replaces the factor by its τ-image).
fn tau(p: &[usize]) -> Vec<usize> {
    let k = p.len();
    let mut out = vec![0; k];
    for i in 0..k {
        out[k - 1 - i] = k - 1 - p[i];
    }
    out
}

/// Swap the values j and j+1 in the array: the permutation "p then t_j",
/// i.e. appending σ_{j+1} to a factor's word.
fn append_swap(p: &mut [usize], j: usize) {
    for v in p.iter_mut() {
        if *v == j {
            *v = j + 1;
        } else if *v == j + 1 {
            *v = j;
        }
    }
}

/// Left-weights the ordered pair (a, b) by sliding initial generators of b
/// onto the tail of a while some σ_{j+1} starts b but cannot finish a.
/// Returns true if any generator moved.
fn left_weight_pair(a: &mut [usize], b: &mut [usize]) -> bool {
    let k = a.len();
    let mut moved = false;
    loop {
        let a_inv = invert(a);
        let slid = (0..k - 1).find(|&j| b[j] > b[j + 1] && a_inv[j] < a_inv[j + 1]);
        match slid {
            None => return moved,
            Some(j) => {
                append_swap(a, j);
                b.swap(j, j + 1);
                moved = true;
            }
        }
    }
}

/// Computes the left-greedy normal form of a braid word.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let k = w.strands();
    let omega = omega(k);
    let mut delta_power = 0i64;
    let mut factors: Vec<Vec<usize>> = Vec::new();
    for &l in w.letters() {
        let j = l.unsigned_abs() as usize - 1;
        if l > 0 {
            let mut t: Vec<usize> = (0..k).collect();
            t.swap(j, j + 1);
            factors.push(t);
        } else {
            // σ_{j+1}⁻¹ = Δ⁻¹ · A_x with x = "Δ's word minus a final σ_{j+1}";
            // the Δ⁻¹ commutes to the front past the factors read so far.
            delta_power -= 1;
            for f in factors.iter_mut() {
                *f = tau(f);
            }
            let mut x = omega.clone();
            append_swap(&mut x, j);
            factors.push(x);
        }
    }
    loop {
        let mut changed = false;
        for i in (0..factors.len().saturating_sub(1)).rev() {
            let (head, tail) = factors.split_at_mut(i + 1);
            changed |= left_weight_pair(&mut head[i], &mut tail[0]);
        }
        let before = factors.len();
        factors.retain(|f| !is_identity(f));
        changed |= factors.len() != before;
        while let Some(pos) = factors.iter().position(|f| *f == omega) {
            factors.remove(pos);
            for f in factors[..pos].iter_mut() {
                *f = tau(f);
            }
            delta_power += 1;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    NormalForm { strands: k, delta_power, factors }
}

/// Whether two words on the same strand count represent the same braid.
pub fn equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch(w1.strands(), w2.strands()));
    }
    Ok(normal_form(w1) == normal_form(w2))
}

/// Positive word for a permutation braid: bubble passes over the current
/// arrangement, emitting σ_{x+1} whenever the strands at slots x, x+1 still
/// have to cross. Each strand pair crosses at most once.
fn perm_to_word(p: &[usize]) -> Vec<i32> {
    let k = p.len();
    let mut at_slot: Vec<usize> = (0..k).collect();
    let mut letters = Vec::new();
    loop {
        let mut swapped = false;
        for x in 0..k.saturating_sub(1) {
            if p[at_slot[x]] > p[at_slot[x + 1]] {
                letters.push(x as i32 + 1);
                at_slot.swap(x, x + 1);
                swapped = true;
            }
        }
        if !swapped {
            return letters;
        }
    }
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    /// The permutation-braid factors following the Δ power.
    pub fn factors(&self) -> &[Vec<usize>] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// A braid word representing the same group element.
    pub fn to_word(&self) -> BraidWord {
        let delta_word = perm_to_word(&omega(self.strands));
        let mut letters = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                letters.extend_from_slice(&delta_word);
            }
        } else {
            let inv: Vec<i32> = delta_word.iter().rev().map(|l| -l).collect();
            for _ in 0..-self.delta_power {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(perm_to_word(f));
        }
        BraidWord::new(self.strands, letters).expect("normal-form letters are in range")
    }
}
