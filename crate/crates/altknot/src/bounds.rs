//! Lower bounds, upper bounds, and exact values for the alternating number
//! of torus knots of braid index at most four.
//!
//! The lower bounds combine pairs of concordance invariants; the upper
//! bounds come from explicit dealternation diagrams (index 3) and from the
//! crossing-change deformation certified in [`crate::construction`]
//! (index 4).  Where the two sides meet, the value is exact: ⌊g/3⌋.

use num::{Signed, ToPrimitive};

use crate::algebra::{rat, rat_int, Rational};
use crate::error::{Error, Result};
use crate::invariants::{genus_tau_s, signature_of, KnotSpec, TorusKnot};
use crate::upsilon::upsilon1;

/// Everything known about alt(K) for one knot: a lower bound, an optional
/// upper bound, the exact value when the two meet, and the methods used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltBounds {
    pub lower: i64,
    pub upper: Option<i64>,
    pub exact: Option<i64>,
    /// (method tag, method description) pairs, one per contributing bound.
    pub provenance: Vec<(String, String)>,
}

/// An asymptotic lower bound for alt(T(p, q))/q as q grows along the family
/// of fixed p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticBound {
    pub p: i64,
    pub lower: Rational,
}

/// |x − y|: any two knot invariants that agree on alternating knots and
/// change by at most one per crossing change bound alt(K) from below by
/// their absolute difference.  The caller is responsible for feeding a pair
/// with those two properties.
pub fn pair_lower_bound(x: &Rational, y: &Rational) -> Rational {
    (x - y).abs()
}

/// |τ + υ| = |(−τ) − Υ(1)|, the strongest pairwise lower bound used here.
pub fn tau_upsilon_bound(k: TorusKnot) -> Result<i64> {
    let (_, tau, _) = genus_tau_s(k);
    let upsilon = upsilon1(k)?;
    let bound = pair_lower_bound(&rat_int(-tau), &rat_int(upsilon));
    Ok(bound.to_integer().to_i64().expect("bound fits in i64"))
}

/// |s/2 − (−σ/2)| = |s + σ|/2, the Rasmussen/signature lower bound.  Weaker
/// than [`tau_upsilon_bound`] on every knot in this artifact's corpus but
/// kept for the comparison table.
pub fn abe_bound(k: TorusKnot) -> Result<Rational> {
    let (_, _, s) = genus_tau_s(k);
    let sigma = signature_of(&KnotSpec::Torus(k))?;
    Ok(pair_lower_bound(&rat(s, 2), &rat(-sigma, 2)))
}

/// The exact alternating number where it is known: 0 for braid index 2
/// (those knots are alternating) and ⌊g/3⌋ for braid indices 3 and 4; `None`
/// for braid index 5 and beyond, where the value is open.
///
/// The braid index of T(p, q) is min(p, q), which the canonicalized
/// [`TorusKnot`] stores as `p`.
pub fn alt_exact(k: TorusKnot) -> Option<i64> {
    match k.p() {
        2 => Some(0),
        3 | 4 => Some(k.genus() / 3),
        _ => None,
    }
}

/// The superseded band-surgery bounds for T(4, 2n+1), kept only so the
/// comparison output can show how much the deformation construction
/// improves on them: n − 1 ≤ alt ≤ (3n − 1)/2.
pub fn superseded_band_surgery_range(n: i64) -> (i64, Rational) {
    (n - 1, rat(3 * n - 1, 2))
}

/// The best upper bound with its provenance, or `None` for braid index ≥ 5.
///
/// All three families give n: trivially 0 for index 2, a diagram with n
/// dealternating crossings for index 3, and the n-flip deformation to a
/// connected sum for index 4.
pub fn upper_bounds(k: TorusKnot) -> Option<(i64, Vec<(String, String)>)> {
    let tag = |t: &str, d: &str| (t.to_string(), d.to_string());
    match k.p() {
        2 => Some((0, vec![tag("alternating", "index-2 torus knots are alternating")])),
        3 => Some((
            k.genus() / 3,
            vec![tag(
                "dealternation-diagram",
                "standard diagram turns alternating after n crossing changes",
            )],
        )),
        4 => {
            let n = (k.q() - 1) / 2;
            let (old_lower, old_upper) = superseded_band_surgery_range(n);
            Some((
                k.genus() / 3,
                vec![
                    tag(
                        "deformation-certificate",
                        "n crossing changes deform the braid to a connected sum of \
                         two alternating torus knots (see the certify subcommand)",
                    ),
                    tag(
                        "band-surgery-superseded",
                        &format!(
                            "older band-surgery range {old_lower} <= alt <= {old_upper}, \
                             kept for comparison"
                        ),
                    ),
                ],
            ))
        }
        _ => None,
    }
}

/// Assembles the full bounds record for one torus knot and checks its
/// internal consistency.
pub fn alt_bounds(k: TorusKnot) -> Result<AltBounds> {
    let tau_upsilon = tau_upsilon_bound(k)?;
    let abe = abe_bound(k)?;
    let abe_ceil = abe.ceil().to_integer().to_i64().expect("bound fits in i64");
    let lower = tau_upsilon.max(abe_ceil).max(0);
    let mut provenance = vec![(
        "tau-upsilon".to_string(),
        "lower bound |tau + upsilon(1)|".to_string(),
    )];
    let upper = match upper_bounds(k) {
        Some((value, mut tags)) => {
            provenance.append(&mut tags);
            Some(value)
        }
        None => None,
    };
    let exact = alt_exact(k);
    if exact.is_some() {
        provenance.push((
            "floor-genus-over-3".to_string(),
            "matching lower and upper bounds give floor(genus/3)".to_string(),
        ));
    }
    if let Some(u) = upper {
        if lower > u {
            return Err(Error::Invalid(format!(
                "bounds for {k} are inconsistent: lower {lower} > upper {u}"
            )));
        }
    }
    if let Some(e) = exact {
        if lower != e || upper != Some(e) {
            return Err(Error::Invalid(format!(
                "exact value {e} for {k} does not close the sandwich [{lower}, {upper:?}]"
            )));
        }
    }
    Ok(AltBounds { lower, upper, exact, provenance })
}

/// (p−1)²/4 for odd p and p(p−2)/4 for even p: the limit lower bound for
/// alt(T(p, q))/q along fixed p.  Known to be the exact limit for p ≤ 4,
/// open beyond.
pub fn asymptotic_lower(p: i64) -> Result<AsymptoticBound> {
    if p < 2 {
        return Err(Error::Invalid(format!("asymptotic bound needs p >= 2, got {p}")));
    }
    let lower = if p % 2 == 1 {
        rat((p - 1) * (p - 1), 4)
    } else {
        rat(p * (p - 2), 4)
    };
    Ok(AsymptoticBound { p, lower })
}

/// Transfers a known alt value along a family: alt changes by at most
/// ⌊(p−1)|k−l|/2⌋ between T(p,k) and T(p,l).  Returns the closed interval
/// [alt_k − r, alt_k + r] clamped to be nonnegative.
pub fn lipschitz_transfer(p: i64, k: i64, l: i64, alt_k: i64) -> Result<(i64, i64)> {
    if p < 2 || num::integer::gcd(p, k) != 1 || num::integer::gcd(p, l) != 1 {
        return Err(Error::Invalid(format!(
            "lipschitz transfer needs p >= 2 and gcd(p,k) = gcd(p,l) = 1; got p={p}, k={k}, l={l}"
        )));
    }
    let radius = (p - 1) * (k - l).abs() / 2;
    Ok(((alt_k - radius).max(0), alt_k + radius))
}

/// Header for the bounds table emitted by the `table` subcommand.
pub const CSV_HEADER: &str = "p,q,g,tau,upsilon1,lower_tau_upsilon,lower_abe,upper,exact,provenance";

/// One CSV row matching [`CSV_HEADER`]; empty cells where no bound is known.
pub fn csv_row(k: TorusKnot) -> Result<String> {
    let (g, tau, _) = genus_tau_s(k);
    let upsilon = upsilon1(k)?;
    let bounds = alt_bounds(k)?;
    let cell = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
    let tags: Vec<&str> = bounds.provenance.iter().map(|(t, _)| t.as_str()).collect();
    Ok(format!(
        "{},{},{},{},{},{},{},{},{},{}",
        k.p(),
        k.q(),
        g,
        tau,
        upsilon,
        tau_upsilon_bound(k)?,
        abe_bound(k)?,
        cell(bounds.upper),
        cell(bounds.exact),
        tags.join("+"),
    ))
}
