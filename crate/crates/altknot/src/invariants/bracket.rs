//! Exhaustive state-sum evaluation of the Kauffman bracket.
//!
//! Every crossing is resolved both planar ways; a state with a type-A
//! resolutions, b type-B resolutions, and c resulting circles contributes
//! A^(a−b)·δ^(c−1), where δ = −A² − A⁻². The cost is 2^m over m crossings,
//! so the routine is capped and meant as a small-diagram oracle for the
//! diagram-algebra evaluation, not as a production path.

use crate::algebra::LaurentPoly;
use crate::diagram::PdCode;
use crate::error::{Error, Result};

/// Largest crossing count the state sum will enumerate.
pub const MAX_STATESUM_CROSSINGS: usize = 22;

/// δ = −A² − A⁻², the value of a closed circle.
fn circle_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1i64), (-2, -1)])
}

/// Kauffman bracket of a diagram, in the smoothing variable (printed as t).
/// The type-A resolution joins quadrant edges 0–3 and 1–2 of each crossing;
/// type B joins 0–1 and 2–3.
pub fn kauffman_bracket_statesum(d: &PdCode) -> Result<LaurentPoly> {
    let m = d.crossing_count();
    if m > MAX_STATESUM_CROSSINGS {
        return Err(Error::TooLarge(m, MAX_STATESUM_CROSSINGS));
    }
    if m == 0 {
        if d.free_loops() == 0 {
            return Err(Error::Invalid("empty diagram has no bracket".into()));
        }
        return Ok(circle_value().pow(d.free_loops() as u32 - 1));
    }

    let arcs = 2 * m;
    // tally[a][c] = number of states with a type-A resolutions and c circles
    let mut tally = vec![vec![0u64; arcs + d.free_loops() + 1]; m + 1];
    let mut parent = vec![0usize; arcs];
    for state in 0u64..(1 << m) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut components = arcs;
        let mut join = |parent: &mut Vec<usize>, x: usize, y: usize| {
            let (mut x, mut y) = (x, y);
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            while parent[y] != y {
                parent[y] = parent[parent[y]];
                y = parent[y];
            }
            if x != y {
                parent[x] = y;
                components -= 1;
            }
        };
        let mut a_count = 0;
        for (ci, c) in d.crossings().iter().enumerate() {
            let [e0, e1, e2, e3] = c.arcs;
            if state >> ci & 1 == 0 {
                a_count += 1;
                join(&mut parent, e0, e3);
                join(&mut parent, e1, e2);
            } else {
                join(&mut parent, e0, e1);
                join(&mut parent, e2, e3);
            }
        }
        tally[a_count][components + d.free_loops()] += 1;
    }

    let delta = circle_value();
    let mut bracket = LaurentPoly::zero();
    for (a, row) in tally.iter().enumerate() {
        for (c, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let term = LaurentPoly::term(count, 2 * a as i64 - m as i64);
            bracket = bracket.add(&term.mul(&delta.pow(c as u32 - 1)));
        }
    }
    Ok(bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, BraidWord};
    use crate::diagram::closure_diagram;

    fn braid(strands: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(strands, letters.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn crossingless_diagrams_evaluate_to_circle_powers() {
        let one = PdCode::new(vec![], 1).unwrap();
        assert_eq!(kauffman_bracket_statesum(&one).unwrap(), LaurentPoly::one());
        let two = PdCode::new(vec![], 2).unwrap();
        assert_eq!(kauffman_bracket_statesum(&two).unwrap(), circle_value());
        let none = PdCode::new(vec![], 0).unwrap();
        assert!(kauffman_bracket_statesum(&none).is_err());
    }

    #[test]
    fn kinks_contribute_a_cubed_units() {
        let positive = closure_diagram(&braid(2, &[1]));
        assert_eq!(
            kauffman_bracket_statesum(&positive).unwrap(),
            poly(&[(3, -1)])
        );
        let negative = closure_diagram(&braid(2, &[-1]));
        assert_eq!(
            kauffman_bracket_statesum(&negative).unwrap(),
            poly(&[(-3, -1)])
        );
    }

    #[test]
    fn trefoil_bracket_from_eight_states() {
        let d = closure_diagram(&torus_braid(2, 3));
        assert_eq!(
            kauffman_bracket_statesum(&d).unwrap(),
            poly(&[(5, -1), (-3, -1), (-7, 1)])
        );
    }

    #[test]
    fn mirrored_diagram_inverts_the_variable() {
        for word in [vec![1, 1, 1], vec![1, 2, 1, 2], vec![1, -2, 1, -2, 1]] {
            let w = braid(3, &word);
            let direct = kauffman_bracket_statesum(&closure_diagram(&w)).unwrap();
            let mirrored = kauffman_bracket_statesum(&closure_diagram(&w.mirror())).unwrap();
            assert_eq!(mirrored, direct.map_exponents(|e| -e));
        }
    }

    #[test]
    fn oversized_diagrams_are_refused() {
        let d = closure_diagram(&torus_braid(2, 23));
        assert_eq!(
            kauffman_bracket_statesum(&d),
            Err(Error::TooLarge(23, MAX_STATESUM_CROSSINGS))
        );
    }
}
