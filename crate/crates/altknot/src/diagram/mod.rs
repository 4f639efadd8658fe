//! Planar diagrams (PD codes): braid closures, strand walks, alternating
//! assignments and distances, nugatory-crossing detection, and the standard
//! alternating diagrams of connected sums of (2, q) torus knots.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// One crossing of a planar diagram. `arcs` lists the four incident arc
/// labels counterclockwise starting from the incoming under-strand arc, so
/// `arcs[0]` → `arcs[2]` is the under strand. For `sign = +1` the over
/// strand runs `arcs[1]` → `arcs[3]`; for `sign = -1` it runs `arcs[3]` →
/// `arcs[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub arcs: [usize; 4],
    pub sign: i8,
}

/// A planar diagram of an oriented link: a list of crossings over arcs
/// labelled 0..2m−1, plus a count of crossing-free circle components
/// (which PD crossing lists cannot carry).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCode {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

/// How a strand passes a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Passage {
    Over,
    Under,
}

impl Crossing {
    fn over_in(&self) -> usize {
        if self.sign >= 0 {
            self.arcs[1]
        } else {
            self.arcs[3]
        }
    }

    fn over_out(&self) -> usize {
        if self.sign >= 0 {
            self.arcs[3]
        } else {
            self.arcs[1]
        }
    }

    /// The same crossing with over and under strands exchanged. The incoming
    /// over arc becomes the incoming under arc (the new quad basepoint) and
    /// the sign negates.
    fn flipped(&self) -> Crossing {
        let [a0, a1, a2, a3] = self.arcs;
        if self.sign >= 0 {
            Crossing { arcs: [a1, a2, a3, a0], sign: -1 }
        } else {
            Crossing { arcs: [a3, a0, a1, a2], sign: 1 }
        }
    }
}

impl PdCode {
    /// Validates that arc labels are exactly 0..2m−1 with every label
    /// occurring exactly twice.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        let m = crossings.len();
        let mut seen = vec![0usize; 2 * m];
        for c in &crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::Invalid(format!("crossing sign {} is not ±1", c.sign)));
            }
            for &a in &c.arcs {
                if a >= 2 * m {
                    return Err(Error::Invalid(format!(
                        "arc label {a} out of range for {m} crossings"
                    )));
                }
                seen[a] += 1;
            }
        }
        if let Some(a) = seen.iter().position(|&n| n != 2) {
            return Err(Error::Invalid(format!(
                "arc label {a} occurs {} times, expected 2",
                seen[a]
            )));
        }
        Ok(Self { crossings, free_loops })
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// For each arc: which crossing consumes it, and how. Index 0 of the
    /// result is the in-role map, index 1 the out-role map. Fails unless
    /// every arc is consumed exactly once and produced exactly once.
    fn roles(&self) -> Result<(Vec<(usize, Passage)>, Vec<(usize, Passage)>)> {
        let m = self.crossings.len();
        let mut ins = vec![None; 2 * m];
        let mut outs = vec![None; 2 * m];
        let record = |map: &mut Vec<Option<(usize, Passage)>>,
                      arc: usize,
                      entry: (usize, Passage)| {
            let slot = &mut map[arc];
            if slot.is_some() {
                return Err(Error::Invalid(format!(
                    "arc {arc} plays the same flow role at two crossings"
                )));
            }
            *slot = Some(entry);
            Ok(())
        };
        for (ci, c) in self.crossings.iter().enumerate() {
            record(&mut ins, c.arcs[0], (ci, Passage::Under))?;
            record(&mut ins, c.over_in(), (ci, Passage::Over))?;
            record(&mut outs, c.arcs[2], (ci, Passage::Under))?;
            record(&mut outs, c.over_out(), (ci, Passage::Over))?;
        }
        let unwrap_all = |v: Vec<Option<(usize, Passage)>>| {
            v.into_iter()
                .map(|o| o.ok_or_else(|| Error::Invalid("arc with a missing flow role".into())))
                .collect::<Result<Vec<_>>>()
        };
        Ok((unwrap_all(ins)?, unwrap_all(outs)?))
    }

    /// The passage sequence of the single closed strand, starting from arc 0.
    /// Errors with MultiComponent if the diagram has more than one component.
    pub fn walk(&self) -> Result<Vec<(usize, Passage)>> {
        let m = self.crossings.len();
        if m == 0 {
            return match self.free_loops {
                0 => Err(Error::Invalid("empty diagram has no strand to walk".into())),
                1 => Ok(Vec::new()),
                _ => Err(Error::MultiComponent),
            };
        }
        if self.free_loops > 0 {
            return Err(Error::MultiComponent);
        }
        let (ins, _) = self.roles()?;
        let mut passages = Vec::with_capacity(2 * m);
        let mut arc = 0usize;
        loop {
            let (ci, kind) = ins[arc];
            passages.push((ci, kind));
            let c = &self.crossings[ci];
            arc = match kind {
                Passage::Under => c.arcs[2],
                Passage::Over => c.over_out(),
            };
            if arc == 0 {
                break;
            }
            if passages.len() > 2 * m {
                return Err(Error::Invalid("strand walk does not close up".into()));
            }
        }
        if passages.len() < 2 * m {
            return Err(Error::MultiComponent);
        }
        Ok(passages)
    }

    /// Hamming distances from this diagram's over/under assignment to the
    /// two alternating assignments of its shadow (the one putting the walk's
    /// even passages over, and its global flip).
    pub fn assignment_distances(&self) -> Result<(usize, usize)> {
        let walk = self.walk()?;
        let m = self.crossings.len();
        let mut first_passage: Vec<Option<(usize, Passage)>> = vec![None; m];
        let mut mismatches = 0usize;
        for (pos, &(ci, kind)) in walk.iter().enumerate() {
            match first_passage[ci] {
                None => {
                    first_passage[ci] = Some((pos, kind));
                    let expected = if pos % 2 == 0 { Passage::Over } else { Passage::Under };
                    if kind != expected {
                        mismatches += 1;
                    }
                }
                Some((prev, _)) => {
                    if (pos - prev) % 2 == 0 {
                        return Err(Error::Invalid(
                            "shadow violates the Gauss parity condition; \
                             no alternating assignment exists"
                                .into(),
                        ));
                    }
                }
            }
        }
        Ok((mismatches, m - mismatches))
    }

    /// Minimum number of crossing changes on this diagram that make it
    /// alternating.
    pub fn alternating_distance(&self) -> Result<usize> {
        let (a, b) = self.assignment_distances()?;
        Ok(a.min(b))
    }

    /// Whether over and under passages alternate along the strand.
    pub fn is_alternating(&self) -> Result<bool> {
        Ok(self.alternating_distance()? == 0)
    }

    /// Whether some crossing is a cut vertex of the underlying 4-valent
    /// graph: removing it disconnects its four incident arcs from each other.
    pub fn has_nugatory(&self) -> bool {
        let m = self.crossings.len();
        (0..m).any(|removed| {
            let mut dsu = DisjointSets::new(2 * m);
            for (ci, c) in self.crossings.iter().enumerate() {
                if ci == removed {
                    continue;
                }
                for w in c.arcs.windows(2) {
                    dsu.union(w[0], w[1]);
                }
            }
            let anchor = self.crossings[removed].arcs[0];
            self.crossings[removed]
                .arcs
                .iter()
                .any(|&a| dsu.find(a) != dsu.find(anchor))
        })
    }

    /// The diagram with every crossing changed.
    pub fn flip_all(&self) -> PdCode {
        PdCode {
            crossings: self.crossings.iter().map(Crossing::flipped).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Relabels arcs along the strand orientation: the walk from arc 0 gets
    /// labels 0, 1, 2, …; each further component continues from the smallest
    /// unvisited arc. Crossing order and quad basepoints are unchanged.
    fn renumber_along_walk(self) -> Result<PdCode> {
        let m = self.crossings.len();
        if m == 0 {
            return Ok(self);
        }
        let (ins, _) = self.roles()?;
        let mut label = vec![None; 2 * m];
        let mut next = 0usize;
        for start in 0..2 * m {
            if label[start].is_some() {
                continue;
            }
            let mut arc = start;
            while label[arc].is_none() {
                label[arc] = Some(next);
                next += 1;
                let (ci, kind) = ins[arc];
                let c = &self.crossings[ci];
                arc = match kind {
                    Passage::Under => c.arcs[2],
                    Passage::Over => c.over_out(),
                };
            }
        }
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                arcs: c.arcs.map(|a| label[a].expect("every arc was walked")),
                sign: c.sign,
            })
            .collect();
        Ok(PdCode { crossings, free_loops: self.free_loops })
    }

    /// Parses the text form `PD[X[1,4,2,3],...]` with 1-based arc labels.
    /// Crossing signs are recovered from the labels (the over strand runs
    /// from `arcs[1]` to `arcs[3]` along consecutive labels); a crossing
    /// where both readings are consistent (a curl through one arc) defaults
    /// to positive. The JSON form carries signs explicitly instead.
    pub fn parse(text: &str) -> Result<PdCode> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = s
            .strip_prefix("PD[")
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("expected PD[...]".into()))?;
        let mut quads: Vec<[usize; 4]> = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            rest = rest.strip_prefix(',').unwrap_or(rest);
            let body = rest
                .strip_prefix("X[")
                .ok_or_else(|| Error::Parse("expected X[a,b,c,d]".into()))?;
            let end = body
                .find(']')
                .ok_or_else(|| Error::Parse("unterminated X[...]".into()))?;
            let nums: Vec<usize> = body[..end]
                .split(',')
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad arc label {t:?}")))
                })
                .collect::<Result<_>>()?;
            let [a, b, c, d] = nums[..] else {
                return Err(Error::Parse("X[...] needs exactly four labels".into()));
            };
            if a == 0 || b == 0 || c == 0 || d == 0 {
                return Err(Error::Parse("arc labels are 1-based".into()));
            }
            quads.push([a - 1, b - 1, c - 1, d - 1]);
            rest = &body[end + 1..];
        }
        let two_m = 2 * quads.len();
        let follows = |next: usize, prev: usize| next == (prev + 1) % two_m;
        let crossings = quads
            .into_iter()
            .map(|arcs| {
                let sign = if follows(arcs[3], arcs[1]) {
                    1
                } else if follows(arcs[1], arcs[3]) {
                    -1
                } else {
                    1
                };
                Crossing { arcs, sign }
            })
            .collect();
        PdCode::new(crossings, 0)
    }
}

impl std::fmt::Display for PdCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PD[")?;
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let [a, b, c, d] = c.arcs;
            write!(f, "X[{},{},{},{}]", a + 1, b + 1, c + 1, d + 1)?;
        }
        write!(f, "]")
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// The closure diagram of a braid word, with strands flowing downward and
/// σ_i crossing the strand in slot i over the strand in slot i+1. Arcs are
/// numbered along the orientation starting from the closure arc of the
/// leftmost crossed strand; uncrossed strands close into free loops.
pub fn closure_diagram(w: &BraidWord) -> PdCode {
    let k = w.strands();
    let mut cur: Vec<usize> = (0..k).collect();
    let mut fresh = k;
    let mut crossings = Vec::with_capacity(w.len());
    for &l in w.letters() {
        let j = l.unsigned_abs() as usize - 1;
        let (left, right) = (cur[j], cur[j + 1]);
        let (below_left, below_right) = (fresh, fresh + 1);
        fresh += 2;
        crossings.push(if l > 0 {
            Crossing { arcs: [right, left, below_left, below_right], sign: 1 }
        } else {
            Crossing { arcs: [left, below_left, below_right, right], sign: -1 }
        });
        cur[j] = below_left;
        cur[j + 1] = below_right;
    }
    // Close up: the arc leaving the bottom of slot s is the arc that entered
    // its top. Slots never involved in a crossing close into free loops.
    let mut free_loops = 0;
    let mut relabel: Vec<Option<usize>> = vec![None; fresh];
    for s in 0..k {
        if cur[s] == s {
            free_loops += 1;
        } else {
            relabel[cur[s]] = Some(s);
        }
    }
    for c in &mut crossings {
        for a in &mut c.arcs {
            if let Some(initial) = relabel[*a] {
                *a = initial;
            }
        }
    }
    // Compact the surviving labels into 0..2m−1, preserving order so that
    // the smallest label stays the leftmost crossed strand's closure arc.
    let mut present: Vec<usize> = crossings.iter().flat_map(|c| c.arcs).collect();
    present.sort_unstable();
    present.dedup();
    let mut compact = vec![0usize; fresh];
    for (new, &old) in present.iter().enumerate() {
        compact[old] = new;
    }
    for c in &mut crossings {
        for a in &mut c.arcs {
            *a = compact[*a];
        }
    }
    PdCode::new(crossings, free_loops)
        .expect("braid closures satisfy the double-occurrence invariant")
        .renumber_along_walk()
        .expect("braid closures have consistent strand flow")
}

/// The standard reduced alternating diagram of the connected sum
/// T(2, q1) # T(2, q2) of positive (2, q) torus knots, built by splicing
/// the two braid-closure diagrams along an arc of each.
pub fn connected_sum_t2(q1: usize, q2: usize) -> Result<PdCode> {
    for q in [q1, q2] {
        if q < 3 || q % 2 == 0 {
            return Err(Error::Invalid(format!(
                "connected summand T(2,{q}) requires odd q ≥ 3"
            )));
        }
    }
    let left = closure_diagram(&crate::braid::torus_braid(2, q1));
    let right = closure_diagram(&crate::braid::torus_braid(2, q2));
    let offset = 2 * q1;
    for beta in 0..2 * q2 {
        let mut crossings = left.crossings().to_vec();
        crossings.extend(right.crossings().iter().map(|c| Crossing {
            arcs: c.arcs.map(|a| a + offset),
            sign: c.sign,
        }));
        // Splice arc 0 of the left diagram with arc beta of the right:
        // rewire so that arc 0 flows into beta's consumer and beta flows
        // into arc 0's consumer.
        let alpha = 0usize;
        let beta = beta + offset;
        let mut swapped = 0;
        for c in &mut crossings {
            let over_in_slot = if c.sign >= 0 { 1 } else { 3 };
            for slot in [0, over_in_slot] {
                if c.arcs[slot] == alpha {
                    c.arcs[slot] = beta;
                    swapped += 1;
                } else if c.arcs[slot] == beta {
                    c.arcs[slot] = alpha;
                    swapped += 1;
                }
            }
        }
        debug_assert_eq!(swapped, 2, "each splice arc has one consumer");
        let candidate = PdCode::new(crossings, 0)?.renumber_along_walk()?;
        if candidate.walk().is_ok()
            && candidate.is_alternating()?
            && !candidate.has_nugatory()
        {
            return Ok(candidate);
        }
    }
    Err(Error::ConstructionFailed(format!(
        "no alternating splice found for T(2,{q1}) # T(2,{q2})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;

    fn closure(k: usize, letters: &[i32]) -> PdCode {
        closure_diagram(&BraidWord::new(k, letters.to_vec()).unwrap())
    }

    #[test]
    fn closure_crossing_counts() {
        assert_eq!(closure(2, &[1, 1, 1]).crossing_count(), 3);
        assert_eq!(closure_diagram(&torus_braid(4, 9)).crossing_count(), 27);
        let unknot = closure_diagram(&BraidWord::empty(1));
        assert_eq!(unknot.crossing_count(), 0);
        assert_eq!(unknot.free_loops(), 1);
        assert!(unknot.is_alternating().unwrap());
        assert!(!unknot.has_nugatory());
    }

    #[test]
    fn torus_two_strand_closures_alternate() {
        let d = closure(2, &[1, 1, 1]);
        assert!(d.is_alternating().unwrap());
        assert_eq!(d.alternating_distance().unwrap(), 0);
    }

    #[test]
    fn near_trivial_word_is_one_flip_from_alternating() {
        let d = closure(2, &[1, -1, 1]);
        assert_eq!(d.alternating_distance().unwrap(), 1);
        assert!(!d.is_alternating().unwrap());
    }

    #[test]
    fn three_strand_torus_closures_do_not_alternate() {
        let d = closure_diagram(&torus_braid(3, 4));
        assert!(!d.is_alternating().unwrap());
    }

    #[test]
    fn multi_component_closures_are_rejected_for_alternation() {
        let d = closure(2, &[1, 1]);
        assert!(matches!(d.is_alternating(), Err(Error::MultiComponent)));
        let with_idle_strand = closure(3, &[1, 1, 1]);
        assert!(matches!(
            with_idle_strand.alternating_distance(),
            Err(Error::MultiComponent)
        ));
    }

    #[test]
    fn nugatory_detection() {
        assert!(!closure(2, &[1, 1, 1]).has_nugatory());
        assert!(!closure_diagram(&torus_braid(3, 4)).has_nugatory());
        // A lone σ2 among σ1-crossings closes into a Reidemeister-I curl.
        assert!(closure(3, &[1, 1, 1, 2]).has_nugatory());
        assert!(closure(2, &[1]).has_nugatory());
    }

    #[test]
    fn connected_sums_are_reduced_alternating_with_additive_crossings() {
        for (q1, q2) in [(3, 3), (5, 5), (7, 7), (3, 5)] {
            let d = connected_sum_t2(q1, q2).unwrap();
            assert_eq!(d.crossing_count(), q1 + q2);
            assert!(d.is_alternating().unwrap());
            assert!(!d.has_nugatory());
            assert_eq!(d.walk().unwrap().len(), 2 * (q1 + q2));
            assert_eq!(d.writhe(), (q1 + q2) as i64);
        }
        assert!(connected_sum_t2(4, 3).is_err());
        assert!(connected_sum_t2(3, 1).is_err());
    }

    #[test]
    fn text_roundtrip_preserves_arcs_and_signs() {
        for w in [
            closure(2, &[1, 1, 1]),
            closure(2, &[-1, -1, -1]),
            closure(3, &[1, 2, 1, -2]),
            closure_diagram(&torus_braid(3, 4)),
        ] {
            let text = w.to_string();
            let parsed = PdCode::parse(&text).unwrap();
            assert_eq!(parsed, w, "text form {text} did not roundtrip");
        }
        assert_eq!(
            closure(2, &[1, 1, 1]).to_string(),
            "PD[X[4,1,5,2],X[2,5,3,6],X[6,3,1,4]]"
        );
    }

    #[test]
    fn json_roundtrip_carries_signs_and_loops() {
        let d = closure(2, &[1, -1, 1]);
        let json = serde_json::to_string(&d).unwrap();
        let back: PdCode = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!(PdCode::parse("X[1,2,3,4]").is_err());
        assert!(PdCode::parse("PD[X[1,2,3]]").is_err());
        assert!(PdCode::parse("PD[X[0,1,2,3]]").is_err());
        assert!(PdCode::parse("PD[X[1,1,1,1]]").is_err());
        assert!(PdCode::parse("PD[X[1,2,2,1]").is_err());
    }

    #[test]
    fn global_flip_swaps_assignment_distances() {
        let d = closure_diagram(&torus_braid(3, 4));
        let (a, b) = d.assignment_distances().unwrap();
        let (fa, fb) = d.flip_all().assignment_distances().unwrap();
        assert_eq!((a, b), (fb, fa));
        assert_eq!(
            d.alternating_distance().unwrap(),
            d.flip_all().alternating_distance().unwrap()
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_word() -> impl Strategy<Value = BraidWord> {
            (2usize..=4).prop_flat_map(|k| {
                let letter = (1i32..k as i32, proptest::bool::ANY)
                    .prop_map(|(g, neg)| if neg { -g } else { g });
                proptest::collection::vec(letter, 1..14)
                    .prop_map(move |letters| BraidWord::new(k, letters).unwrap())
            })
        }

        proptest! {
            #[test]
            fn closure_arcs_occur_twice_and_count_matches(w in arb_word()) {
                // PdCode::new re-validates the double-occurrence invariant.
                let d = closure_diagram(&w);
                prop_assert_eq!(d.crossing_count(), w.len());
                let rebuilt = PdCode::new(d.crossings().to_vec(), d.free_loops());
                prop_assert!(rebuilt.is_ok());
                prop_assert_eq!(d.writhe(), w.writhe());
            }

            #[test]
            fn knot_closure_distance_zero_iff_alternating(w in arb_word()) {
                let d = closure_diagram(&w);
                if let Ok(dist) = d.alternating_distance() {
                    prop_assert_eq!(dist == 0, d.is_alternating().unwrap());
                    let (a, b) = d.assignment_distances().unwrap();
                    let (fa, fb) = d.flip_all().assignment_distances().unwrap();
                    prop_assert_eq!((a, b), (fb, fa));
                }
            }

            #[test]
            fn knot_closure_text_roundtrips(w in arb_word()) {
                let d = closure_diagram(&w);
                let parsed = PdCode::parse(&d.to_string()).unwrap();
                for (p, q) in parsed.crossings().iter().zip(d.crossings()) {
                    prop_assert_eq!(p.arcs, q.arcs);
                }
            }
        }
    }
}
