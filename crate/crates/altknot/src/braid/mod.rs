//! Braid words on a fixed strand count, torus braids, crossing flips, and
//! the band-presented full-twist words on four strands.

pub mod garside;

pub use garside::{equal, normal_form, NormalForm};

use crate::error::{Error, Result};

/// A word in the braid group B_k, as a sequence of signed generator letters:
/// the letter `i > 0` is σ_i (strand at slot i crosses over slot i+1, 1-based)
/// and `-i` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Selects one of the two band-presented words of [`band_words`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandKind {
    /// Two parallel bands making a full twist: equal to (σ1σ2σ3)⁴ in B4.
    FullTwist,
    /// Two parallel bands making a twist and a half: equal to (σ1σ2σ3)⁶.
    FullAndHalf,
}

impl BraidWord {
    /// A word on `strands` strands. Every letter must be a nonzero generator
    /// index of magnitude at most `strands - 1`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::Invalid("strand count must be at least 1".into()));
        }
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= strands {
                return Err(Error::IndexOutOfRange(idx, strands.saturating_sub(1)));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("empty word is valid on any strand count")
    }

    /// Parses whitespace-separated signed generator indices, e.g. `1 2 -3`.
    /// With `strands = None` the strand count is inferred as max |letter| + 1
    /// (an empty word infers a single strand).
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))?;
            letters.push(l);
        }
        let k = strands.unwrap_or_else(|| {
            letters
                .iter()
                .map(|l| l.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1)
        });
        Self::new(k, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum of the word.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Underlying permutation: `perm[i]` is the slot (0-based) at which the
    /// strand entering slot `i` leaves the braid.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at_slot: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let j = l.unsigned_abs() as usize - 1;
            at_slot.swap(j, j + 1);
        }
        let mut perm = vec![0; self.strands];
        for (slot, &strand) in at_slot.iter().enumerate() {
            perm[strand] = slot;
        }
        perm
    }

    /// Number of components of the braid closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// Negates the letters at the given positions (a set: duplicates are
    /// ignored), modelling crossing changes on the closure diagram.
    pub fn flip(&self, positions: &[usize]) -> Result<Self> {
        let mut letters = self.letters.clone();
        let mut done = vec![false; letters.len()];
        for &p in positions {
            if p >= letters.len() {
                return Err(Error::IndexOutOfRange(p, letters.len().saturating_sub(1)));
            }
            if !done[p] {
                letters[p] = -letters[p];
                done[p] = true;
            }
        }
        Ok(Self { strands: self.strands, letters })
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn repeat(&self, times: usize) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        Self { strands: self.strands, letters }
    }

    /// Mirror image: every crossing sign negated.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Group inverse: reversed word with negated letters.
    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// The standard torus braid (σ1 σ2 … σ_{p−1})^q on p strands, whose closure
/// is the torus link T(p, q).
pub fn torus_braid(p: usize, q: usize) -> BraidWord {
    assert!(p >= 2, "torus braid needs at least two strands");
    assert!(q >= 1, "torus braid needs a positive twist count");
    let row: Vec<i32> = (1..p as i32).collect();
    BraidWord::new(p, row)
        .expect("generator indices are in range by construction")
        .repeat(q)
}

/// Band-presented four-strand words for a full twist and for a twist and a
/// half of two parallel two-strand bands. Writing b = σ2σ1σ3σ2 for the move
/// that crosses the bands as planar strips (so bσ1 = σ3b and bσ3 = σ1b),
/// the bands' internal twisting contributes σ1 and σ3 powers: b²σ1²σ3²
/// equals (σ1σ2σ3)⁴ and b³σ1²σ3⁴ equals (σ1σ2σ3)⁶. Both identities are
/// locked in by Garside-normal-form equality tests.
pub fn band_words(kind: BandKind) -> BraidWord {
    let cross = [2, 1, 3, 2];
    let (band_crossings, left_twists, right_twists) = match kind {
        BandKind::FullTwist => (2, 2, 2),
        BandKind::FullAndHalf => (3, 2, 4),
    };
    let mut letters = Vec::new();
    for _ in 0..band_crossings {
        letters.extend_from_slice(&cross);
    }
    letters.extend(std::iter::repeat(1).take(left_twists));
    letters.extend(std::iter::repeat(3).take(right_twists));
    BraidWord::new(4, letters).expect("band letters are valid on four strands")
}

/// Appends positive letters until the closure is a knot; used by property
/// tests that need arbitrary words with single-component closures.
#[cfg(test)]
pub(crate) fn knotted(mut w: BraidWord) -> BraidWord {
    while w.closure_components() > 1 {
        let before = w.closure_components();
        for j in 1..w.strands() as i32 {
            let candidate = w
                .concat(&BraidWord::new(w.strands(), vec![j]).unwrap())
                .unwrap();
            if candidate.closure_components() < before {
                w = candidate;
                break;
            }
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(k: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(k, letters.to_vec()).unwrap()
    }

    #[test]
    fn torus_braid_words() {
        assert_eq!(torus_braid(2, 3).letters(), &[1, 1, 1]);
        assert_eq!(torus_braid(4, 5).len(), 15);
        assert_eq!(torus_braid(3, 4).closure_components(), 1);
    }

    #[test]
    fn permutations_and_closure_components() {
        assert_eq!(word(2, &[1]).permutation(), vec![1, 0]);
        assert_eq!(word(2, &[1]).closure_components(), 1);
        // (σ1σ2σ3)² sends 1↔3 and 2↔4.
        let half = torus_braid(4, 2);
        assert_eq!(half.permutation(), vec![2, 3, 0, 1]);
        assert_eq!(half.closure_components(), 2);
        for n in 1..=5 {
            let w = torus_braid(4, 2 * n + 1);
            assert_eq!(w.closure_components(), 1, "T(4,{}) closes to a knot", 2 * n + 1);
        }
    }

    #[test]
    fn writhe_is_the_exponent_sum() {
        assert_eq!(word(2, &[1, 1, 1]).writhe(), 3);
        assert_eq!(word(2, &[1, -1]).writhe(), 0);
        assert_eq!(torus_braid(4, 9).writhe(), 27);
    }

    #[test]
    fn flip_negates_selected_letters() {
        let w = word(2, &[1, 1, 1]);
        assert_eq!(w.flip(&[1]).unwrap().letters(), &[1, -1, 1]);
        assert_eq!(w.flip(&[]).unwrap(), w);
        assert_eq!(w.flip(&[2]).unwrap().flip(&[2]).unwrap(), w);
        assert_eq!(w.flip(&[1, 1]).unwrap().letters(), &[1, -1, 1]);
        assert!(matches!(w.flip(&[3]), Err(Error::IndexOutOfRange(3, 2))));
    }

    #[test]
    fn flip_adjusts_writhe_by_twice_the_flipped_signs() {
        let w = word(3, &[1, 2, -1, 2, 1]);
        let flipped = w.flip(&[0, 2]).unwrap();
        // One positive and one negative letter flipped: net writhe change 0.
        assert_eq!(flipped.writhe(), w.writhe());
        let flipped = w.flip(&[0, 1]).unwrap();
        assert_eq!(flipped.writhe(), w.writhe() - 4);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let w = BraidWord::parse("1 2 3 1 2 3 -2", None).unwrap();
        assert_eq!(w.strands(), 4);
        assert_eq!(w.to_string(), "1 2 3 1 2 3 -2");
        let narrow = BraidWord::parse("1 1", Some(4)).unwrap();
        assert_eq!(narrow.strands(), 4);
        assert!(BraidWord::parse("1 0 2", None).is_err());
        assert!(BraidWord::parse("3", Some(2)).is_err());
        assert!(BraidWord::parse("x", None).is_err());
        assert_eq!(BraidWord::parse("", None).unwrap(), BraidWord::empty(1));
    }

    #[test]
    fn inverse_and_mirror() {
        let w = word(3, &[1, -2, 2, 1]);
        assert_eq!(w.inverse().letters(), &[-1, -2, 2, -1]);
        assert_eq!(w.mirror().letters(), &[-1, 2, -2, -1]);
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn band_word_shapes() {
        let full = band_words(BandKind::FullTwist);
        assert_eq!(full.letters(), &[2, 1, 3, 2, 2, 1, 3, 2, 1, 1, 3, 3]);
        assert_eq!(full.permutation(), vec![0, 1, 2, 3]);
        let more = band_words(BandKind::FullAndHalf);
        assert_eq!(more.len(), 18);
        assert_eq!(more.writhe(), 18);
    }
}
