//! Classical invariants of torus knots and braid closures.
//!
//! The polynomial invariants are computed along two independent routes
//! wherever possible (closed form vs. Burau for Alexander, diagram algebra
//! vs. state sum for Jones) so that each route can serve as an oracle for
//! the other in the test suite.

pub mod bracket;
pub mod burau;
pub mod jones;
pub mod seifert;

pub use bracket::kauffman_bracket_statesum;
pub use burau::alexander_burau;
pub use jones::{bracket_to_jones, jones_braid};
pub use seifert::{alexander_seifert, seifert_matrix, signature_of};

use std::fmt;

use crate::algebra::LaurentPoly;
use crate::braid::{torus_braid, BraidWord};
use crate::error::{Error, Result};

/// A positive torus knot T(p, q), stored with p < q and gcd(p, q) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    p: i64,
    q: i64,
}

impl TorusKnot {
    /// Canonicalizes the parameter order; rejects non-coprime pairs and
    /// parameters below 2 (those name unknots or links, not torus knots).
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        if p < 2 {
            return Err(Error::Invalid(format!(
                "torus knot parameters ({p},{q}) must both be at least 2"
            )));
        }
        if num::integer::gcd(p, q) != 1 {
            return Err(Error::Invalid(format!(
                "torus knot parameters ({p},{q}) must be coprime"
            )));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The braid (σ1…σ_{p−1})^q whose closure is this knot.
    pub fn braid(&self) -> BraidWord {
        torus_braid(self.p as usize, self.q as usize)
    }

    /// Seifert genus (p−1)(q−1)/2.
    pub fn genus(&self) -> i64 {
        (self.p - 1) * (self.q - 1) / 2
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// A knot described by how it is built, which determines which invariants
/// can be attached exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotSpec {
    Unknot,
    Torus(TorusKnot),
    ConnectedSum(Vec<KnotSpec>),
    BraidClosure(BraidWord),
}

/// Alexander polynomial of a torus knot in closed form:
/// (t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1)), centered and unit-normalized.
pub fn alexander_torus(k: TorusKnot) -> LaurentPoly {
    let cyc = |n: i64| LaurentPoly::from_terms([(n, 1i64), (0, -1)]);
    let num = cyc(k.p * k.q).mul(&cyc(1));
    let den = cyc(k.p).mul(&cyc(k.q));
    num.divide_exact(&den)
        .expect("(t^pq-1)(t-1) is divisible by (t^p-1)(t^q-1) for coprime p, q")
        .normalize_symmetric()
        .expect("torus knot Alexander polynomials are symmetric units")
}

/// Genus, tau, and Rasmussen s of a positive torus knot; all three are
/// determined by g = (p−1)(q−1)/2, with τ = g and s = 2g.
pub fn genus_tau_s(k: TorusKnot) -> (i64, i64, i64) {
    let g = k.genus();
    (g, g, 2 * g)
}

/// Everything this crate can say about one knot.  The optional fields are
/// filled in when the description pins them down exactly (the unknot, torus
/// knots, and their connected sums) and omitted for raw braid closures.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct InvariantSet {
    pub alexander: LaurentPoly,
    pub jones: LaurentPoly,
    pub signature: i64,
    pub determinant: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tau: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub upsilon1: Option<i64>,
}

/// |Δ(−1)|, always positive for a knot.
fn determinant_from(alexander: &LaurentPoly) -> u64 {
    use num::ToPrimitive;
    alexander
        .eval_at_minus_one()
        .magnitude()
        .to_u64()
        .expect("knot determinants in this artifact fit in u64")
}

/// Computes the full invariant set of a knot description.
///
/// Connected sums compose ingredient-wise: Alexander and Jones multiply, the
/// signature and the optional concordance invariants add, and the determinant
/// is re-read off the composed Alexander polynomial.
pub fn invariant_set(k: &KnotSpec) -> Result<InvariantSet> {
    let zip_add = |a: Option<i64>, b: Option<i64>| Some(a? + b?);
    match k {
        KnotSpec::Unknot => Ok(InvariantSet {
            alexander: LaurentPoly::one(),
            jones: LaurentPoly::one(),
            signature: 0,
            determinant: 1,
            genus: Some(0),
            tau: Some(0),
            s: Some(0),
            upsilon1: Some(0),
        }),
        KnotSpec::Torus(t) => {
            let alexander = alexander_torus(*t);
            let (genus, tau, s) = genus_tau_s(*t);
            Ok(InvariantSet {
                determinant: determinant_from(&alexander),
                alexander,
                jones: jones_braid(&t.braid())?,
                signature: signature_of(k)?,
                genus: Some(genus),
                tau: Some(tau),
                s: Some(s),
                upsilon1: Some(crate::upsilon::upsilon1(*t)?),
            })
        }
        KnotSpec::ConnectedSum(parts) => {
            let mut acc = invariant_set(&KnotSpec::Unknot)?;
            for part in parts {
                let next = invariant_set(part)?;
                acc = InvariantSet {
                    alexander: acc.alexander.mul(&next.alexander),
                    jones: acc.jones.mul(&next.jones),
                    signature: acc.signature + next.signature,
                    determinant: 0,
                    genus: zip_add(acc.genus, next.genus),
                    tau: zip_add(acc.tau, next.tau),
                    s: zip_add(acc.s, next.s),
                    upsilon1: zip_add(acc.upsilon1, next.upsilon1),
                };
            }
            acc.determinant = determinant_from(&acc.alexander);
            Ok(acc)
        }
        KnotSpec::BraidClosure(w) => {
            let alexander = alexander_burau(w)?;
            Ok(InvariantSet {
                determinant: determinant_from(&alexander),
                alexander,
                jones: jones_braid(w)?,
                signature: signature_of(k)?,
                genus: None,
                tau: None,
                s: None,
                upsilon1: None,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    fn poly(text: &str) -> LaurentPoly {
        LaurentPoly::parse(text).unwrap()
    }

    #[test]
    fn parameters_are_canonicalized() {
        assert_eq!(t(4, 3), t(3, 4));
        assert_eq!(t(3, 4).p(), 3);
        assert_eq!(t(3, 4).q(), 4);
        assert_eq!(t(2, 9).to_string(), "T(2,9)");
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        assert!(TorusKnot::new(2, 4).is_err());
        assert!(TorusKnot::new(3, 3).is_err());
        assert!(TorusKnot::new(1, 5).is_err());
        assert!(TorusKnot::new(5, 1).is_err());
    }

    #[test]
    fn alexander_closed_form_matches_known_polynomials() {
        assert_eq!(alexander_torus(t(2, 3)), poly("t - 1 + t^-1"));
        assert_eq!(
            alexander_torus(t(3, 4)),
            poly("t^3 - t^2 + 1 - t^-2 + t^-3")
        );
        assert_eq!(
            alexander_torus(t(4, 5)),
            poly("t^6 - t^5 + t^2 - 1 + t^-2 - t^-5 + t^-6")
        );
    }

    #[test]
    fn alexander_is_a_symmetric_unit_of_top_degree_genus() {
        for p in 2..=5i64 {
            for q in (p + 1)..=19 {
                if num::integer::gcd(p, q) != 1 {
                    continue;
                }
                let k = t(p, q);
                let delta = alexander_torus(k);
                assert!(delta.is_symmetric(), "asymmetric for {k}");
                assert_eq!(delta.eval_at_one(), 1.into(), "unit value for {k}");
                assert_eq!(delta.max_exp(), Some(k.genus()), "degree for {k}");
            }
        }
    }

    #[test]
    fn genus_tau_s_follow_the_closed_form() {
        assert_eq!(genus_tau_s(t(3, 4)), (3, 3, 6));
        assert_eq!(genus_tau_s(t(2, 3)).0, 1);
        for n in 1..=4i64 {
            assert_eq!(genus_tau_s(t(4, 2 * n + 1)).1, 3 * n);
        }
    }

    #[test]
    fn determinant_of_the_smallest_knots() {
        // |Δ(−1)| for the trefoil and T(3,4).
        assert_eq!(alexander_torus(t(2, 3)).eval_at_minus_one(), (-3).into());
        assert_eq!(alexander_torus(t(3, 4)).eval_at_minus_one(), (-3).into());
    }

    #[test]
    fn unknot_invariants_are_all_trivial() {
        let set = invariant_set(&KnotSpec::Unknot).unwrap();
        assert!(set.alexander.is_one());
        assert!(set.jones.is_one());
        assert_eq!(set.signature, 0);
        assert_eq!(set.determinant, 1);
        assert_eq!(
            (set.genus, set.tau, set.s, set.upsilon1),
            (Some(0), Some(0), Some(0), Some(0))
        );
    }

    #[test]
    fn torus_knots_fill_every_field() {
        let set = invariant_set(&KnotSpec::Torus(t(3, 4))).unwrap();
        assert_eq!(set.alexander, alexander_torus(t(3, 4)));
        assert_eq!(set.jones, jones_braid(&t(3, 4).braid()).unwrap());
        assert_eq!(set.signature, -6);
        assert_eq!(set.determinant, 3);
        assert_eq!(set.genus, Some(3));
        assert_eq!(set.tau, Some(3));
        assert_eq!(set.s, Some(6));
        assert_eq!(set.upsilon1, Some(-2));
    }

    #[test]
    fn connected_sums_compose_ingredient_wise() {
        let sum = KnotSpec::ConnectedSum(vec![
            KnotSpec::Torus(t(2, 5)),
            KnotSpec::Torus(t(2, 5)),
        ]);
        let set = invariant_set(&sum).unwrap();
        let part = alexander_torus(t(2, 5));
        assert_eq!(set.alexander, part.mul(&part));
        assert_eq!(set.alexander, poly("t^2 - t + 1 - t^-1 + t^-2").pow(2));
        let jones_part = jones_braid(&t(2, 5).braid()).unwrap();
        assert_eq!(set.jones, jones_part.mul(&jones_part));
        assert_eq!(set.signature, -8);
        assert_eq!(set.determinant, 25);
        assert_eq!(set.genus, Some(4));
        assert_eq!(set.tau, Some(4));
        assert_eq!(set.s, Some(8));
        assert_eq!(set.upsilon1, Some(-4));
        // The empty sum is the unknot.
        assert_eq!(
            invariant_set(&KnotSpec::ConnectedSum(vec![])).unwrap(),
            invariant_set(&KnotSpec::Unknot).unwrap()
        );
    }

    #[test]
    fn braid_closures_report_only_what_is_knowable() {
        let w = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let set = invariant_set(&KnotSpec::BraidClosure(w)).unwrap();
        let reference = invariant_set(&KnotSpec::Torus(t(2, 3))).unwrap();
        assert_eq!(set.alexander, reference.alexander);
        assert_eq!(set.jones, reference.jones);
        assert_eq!(set.signature, reference.signature);
        assert_eq!(set.determinant, reference.determinant);
        assert_eq!((set.genus, set.tau, set.s, set.upsilon1), (None, None, None, None));
    }

    #[test]
    fn determinants_are_odd_and_match_the_evaluation_route() {
        for p in 2..=4i64 {
            for q in (p + 1)..=11 {
                if num::integer::gcd(p, q) != 1 {
                    continue;
                }
                let set = invariant_set(&KnotSpec::Torus(t(p, q))).unwrap();
                assert_eq!(set.determinant % 2, 1, "even determinant for T({p},{q})");
                assert_eq!(
                    num::BigInt::from(set.determinant),
                    set.alexander.eval_at_minus_one().magnitude().clone().into(),
                    "determinant route mismatch for T({p},{q})"
                );
            }
        }
    }

    #[test]
    fn invariant_sets_roundtrip_through_json() {
        let torus = invariant_set(&KnotSpec::Torus(t(3, 5))).unwrap();
        let json = serde_json::to_string(&torus).unwrap();
        assert_eq!(serde_json::from_str::<InvariantSet>(&json).unwrap(), torus);

        let w = BraidWord::new(3, vec![1, -2, 1, 1]).unwrap();
        let closure = invariant_set(&KnotSpec::BraidClosure(w)).unwrap();
        let json = serde_json::to_string(&closure).unwrap();
        assert!(!json.contains("genus"), "absent fields must be omitted: {json}");
        assert_eq!(serde_json::from_str::<InvariantSet>(&json).unwrap(), closure);
    }

    #[test]
    fn errors_from_ingredient_routes_propagate() {
        let two_component = BraidWord::new(3, vec![1, 1]).unwrap();
        assert!(matches!(
            invariant_set(&KnotSpec::BraidClosure(two_component)),
            Err(Error::MultiComponent)
        ));
    }
}
