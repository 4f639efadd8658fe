//! Laurent polynomials in one variable `t` over arbitrary-precision integers.
//!
//! The zero polynomial has no terms; all stored coefficients are nonzero.
//! Text form writes terms in descending exponent order, e.g.
//! `t^3 - t^2 + 1 - t^-2 + t^-3`; JSON form is a list of
//! `{"exp": e, "coef": c}` objects in the same order.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    /// exponent → nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(1, 0)
    }

    /// The monomial `c · t^e` (the zero polynomial when `c = 0`).
    pub fn term<C: Into<BigInt>>(coef: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        let c: BigInt = coef.into();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds from `(exp, coef)` pairs, summing duplicates and dropping zeros.
    pub fn from_terms<C: Into<BigInt>, I: IntoIterator<Item = (i64, C)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coef(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Terms in descending exponent order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: i64, coef: &BigInt) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, &(-c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c: BigInt = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, k)| (*e, k * &c)).collect(),
        }
    }

    /// Multiplies by the unit `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Alternating sum of coefficients, i.e. the value at `t = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            if e.rem_euclid(2) == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Applies `exp → f(exp)` to every exponent. `f` must be injective on the support.
    pub fn map_exponents<F: Fn(i64) -> i64>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c);
        }
        assert_eq!(out.num_terms(), self.num_terms(), "exponent map collided");
        out
    }

    /// True when the polynomial is invariant under `t ↔ t⁻¹`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.coef(-e) == *c)
    }

    /// Exact division in the Laurent ring; fails with `NotDivisible` when the
    /// quotient does not exist over the integers.
    pub fn divide_exact(&self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Shift both to ordinary polynomials and run schoolbook division from
        // the top; each leading-coefficient division must be exact.
        let num_lo = self.min_exp().unwrap();
        let den_lo = den.min_exp().unwrap();
        let mut rem = self.shift(-num_lo);
        let d = den.shift(-den_lo);
        let d_deg = d.max_exp().unwrap();
        let d_lead = d.coef(d_deg);
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().unwrap();
            if r_deg < d_deg {
                return Err(Error::NotDivisible);
            }
            let r_lead = rem.coef(r_deg);
            let (q, r) = num::Integer::div_rem(&r_lead, &d_lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            let mono = Self::term(q, r_deg - d_deg);
            rem = rem.sub(&mono.mul(&d));
            quot = quot.add(&mono);
        }
        Ok(quot.shift(num_lo - den_lo))
    }

    /// Multiplies by the unique unit `±t^k` that makes the polynomial
    /// symmetric under `t ↔ t⁻¹` with value +1 at `t = 1`.
    pub fn normalize_symmetric(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotNormalizable("zero polynomial".into()));
        }
        let at_one = self.eval_at_one();
        let signed = if at_one.is_one() {
            self.clone()
        } else if (-&at_one).is_one() {
            self.neg()
        } else {
            return Err(Error::NotNormalizable(format!(
                "value at t = 1 is {at_one}, not a unit"
            )));
        };
        let lo = signed.min_exp().unwrap();
        let hi = signed.max_exp().unwrap();
        if (lo + hi).rem_euclid(2) != 0 {
            return Err(Error::NotNormalizable(
                "exponent span has no integer center".into(),
            ));
        }
        let centered = signed.shift(-(lo + hi) / 2);
        if !centered.is_symmetric() {
            return Err(Error::NotNormalizable(
                "no unit shift is symmetric".into(),
            ));
        }
        Ok(centered)
    }

    /// Parses the text form, e.g. `t^3 - t^2 + 1 - t^-2 + t^-3` or `0`.
    pub fn parse(text: &str) -> Result<Self> {
        let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero();
        let mut i = 0;
        let mut first = true;
        while i < s.len() {
            let mut negative = false;
            match s[i] {
                '+' => i += 1,
                '-' => {
                    negative = true;
                    i += 1;
                }
                _ if first => {}
                c => return Err(Error::Parse(format!("expected '+' or '-', found '{c}'"))),
            }
            first = false;
            let digits_start = i;
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
            let coef_digits = &s[digits_start..i];
            let mut coef = if coef_digits.is_empty() {
                None
            } else {
                let text: String = coef_digits.iter().collect();
                Some(
                    text.parse::<BigInt>()
                        .map_err(|e| Error::Parse(format!("bad coefficient: {e}")))?,
                )
            };
            let mut exp = 0i64;
            if i < s.len() && s[i] == 't' {
                i += 1;
                exp = 1;
                if i < s.len() && s[i] == '^' {
                    i += 1;
                    let mut exp_neg = false;
                    if i < s.len() && s[i] == '-' {
                        exp_neg = true;
                        i += 1;
                    }
                    let e_start = i;
                    while i < s.len() && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    if e_start == i {
                        return Err(Error::Parse("missing exponent after '^'".into()));
                    }
                    let text: String = s[e_start..i].iter().collect();
                    exp = text
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("bad exponent: {e}")))?;
                    if exp_neg {
                        exp = -exp;
                    }
                }
                if coef.is_none() {
                    coef = Some(BigInt::one());
                }
            }
            let Some(mut coef) = coef else {
                return Err(Error::Parse("expected a term".into()));
            };
            if negative {
                coef = -coef;
            }
            out.add_term(exp, &coef);
        }
        Ok(out)
    }
}

/// Determinant of a square matrix over the Laurent ring, by fraction-free
/// (Bareiss) elimination; every interior division is exact.
pub fn determinant(mat: &[Vec<LaurentPoly>]) -> crate::error::Result<LaurentPoly> {
    let n = mat.len();
    for row in mat {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut m: Vec<Vec<LaurentPoly>> = mat.to_vec();
    let mut prev = LaurentPoly::one();
    let mut sign_flips = 0usize;
    for step in 0..n - 1 {
        if m[step][step].is_zero() {
            let Some(swap) = (step + 1..n).find(|&r| !m[r][step].is_zero()) else {
                return Ok(LaurentPoly::zero());
            };
            m.swap(step, swap);
            sign_flips += 1;
        }
        for r in step + 1..n {
            for c in step + 1..n {
                let cross = m[step][step].mul(&m[r][c]).sub(&m[r][step].mul(&m[step][c]));
                m[r][c] = cross.divide_exact(&prev)?;
            }
            m[r][step] = LaurentPoly::zero();
        }
        prev = m[step][step].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign_flips % 2 == 1 {
        det = det.neg();
    }
    Ok(det)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (exp, coef)) in self.terms_desc().enumerate() {
            let mag = coef.abs();
            if idx == 0 {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match exp {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag.is_one() {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{mag}t")?;
                    }
                }
                e => {
                    if mag.is_one() {
                        write!(f, "t^{e}")?;
                    } else {
                        write!(f, "{mag}t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: i64,
    coef: i64,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (exp, coef) in self.terms_desc() {
            let coef = i64::try_from(coef).map_err(|_| {
                serde::ser::Error::custom("coefficient exceeds the JSON integer range")
            })?;
            seq.serialize_element(&JsonTerm { exp, coef })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut out = Self::zero();
        for t in raw {
            if out.coef(t.exp) != BigInt::zero() {
                return Err(D::Error::custom(format!("duplicate exponent {}", t.exp)));
            }
            out.add_term(t.exp, &BigInt::from(t.coef));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> LaurentPoly {
        LaurentPoly::parse(text).unwrap()
    }

    #[test]
    fn parse_display_roundtrip() {
        for text in [
            "t^3 - t^2 + 1 - t^-2 + t^-3",
            "0",
            "1",
            "-1",
            "t",
            "-t^-1",
            "2t^2 - 3t + 5 - 7t^-4",
        ] {
            let poly = p(text);
            assert_eq!(poly.to_string(), text);
            assert_eq!(LaurentPoly::parse(&poly.to_string()).unwrap(), poly);
        }
    }

    #[test]
    fn parse_accepts_loose_whitespace() {
        assert_eq!(p("t^2-t+1"), p("t^2 - t + 1"));
        assert_eq!(p("+t"), p("t"));
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        // (t - 1 + t^-1)(t + 1 + t^-1) = t^2 + 1 + t^-2
        let a = p("t - 1 + t^-1");
        let b = p("t + 1 + t^-1");
        assert_eq!(a.mul(&b), p("t^2 + 1 + t^-2"));
        assert_eq!(a.add(&b), p("2t + 2t^-1"));
        assert_eq!(a.sub(&a), LaurentPoly::zero());
    }

    #[test]
    fn divide_exact_recovers_quotient() {
        // (t^6 - 1)(t - 1) / ((t^2 - 1)(t^3 - 1)) = t^2 - t + 1
        let num = p("t^6 - 1").mul(&p("t - 1"));
        let den = p("t^2 - 1").mul(&p("t^3 - 1"));
        assert_eq!(num.divide_exact(&den).unwrap(), p("t^2 - t + 1"));
        // Laurent shifts divide out exactly.
        let num = p("t^2 - t + 1").mul(&p("t^-3 + 2"));
        assert_eq!(num.divide_exact(&p("t^-3 + 2")).unwrap(), p("t^2 - t + 1"));
    }

    #[test]
    fn divide_rejects_inexact() {
        assert_eq!(
            p("t^2 + 1").divide_exact(&p("t + 1")),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            p("2t + 2").divide_exact(&p("4")),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn normalize_symmetric_centers_and_signs() {
        assert_eq!(
            p("t^2 - t + 1").normalize_symmetric().unwrap(),
            p("t - 1 + t^-1")
        );
        // Unit sign is forced by the value at t = 1.
        assert_eq!(
            p("-t^4 + t^3 - t^2").normalize_symmetric().unwrap(),
            p("t - 1 + t^-1")
        );
        assert!(p("t + 1").normalize_symmetric().is_err());
        assert!(p("t^2 + t - 1").normalize_symmetric().is_err());
    }

    #[test]
    fn evaluation_at_units() {
        let a = p("t^3 - t^2 + 1 - t^-2 + t^-3");
        assert_eq!(a.eval_at_one(), BigInt::from(1));
        assert_eq!(a.eval_at_minus_one(), BigInt::from(-3));
    }

    #[test]
    fn determinant_of_small_matrices() {
        assert_eq!(determinant(&[]).unwrap(), LaurentPoly::one());
        assert_eq!(determinant(&[vec![p("t - 1")]]).unwrap(), p("t - 1"));
        // [[t, 1], [1, t^-1]] is singular; [[t, 1], [2, t^-1]] is not.
        assert_eq!(
            determinant(&[vec![p("t"), p("1")], vec![p("1"), p("t^-1")]]).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(
            determinant(&[vec![p("t"), p("1")], vec![p("2"), p("t^-1")]]).unwrap(),
            p("-1")
        );
        // 3x3 with a zero pivot forcing a row swap.
        let m = vec![
            vec![p("0"), p("1"), p("0")],
            vec![p("1"), p("0"), p("0")],
            vec![p("0"), p("0"), p("t")],
        ];
        assert_eq!(determinant(&m).unwrap(), p("-t"));
    }

    #[test]
    fn determinant_multiplies_under_block_products() {
        // det of a product equals the product of dets for 2x2 samples.
        let a = vec![vec![p("t"), p("1 - t")], vec![p("t^-1"), p("t^2 + 1")]];
        let b = vec![vec![p("1"), p("t")], vec![p("-t"), p("t - 1")]];
        let mut ab = vec![vec![LaurentPoly::zero(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for (k, item) in b.iter().enumerate() {
                    ab[i][j] = ab[i][j].add(&a[i][k].mul(&item[j]));
                }
            }
        }
        assert_eq!(
            determinant(&ab).unwrap(),
            determinant(&a).unwrap().mul(&determinant(&b).unwrap())
        );
    }

    #[test]
    fn json_terms_are_sorted_descending() {
        let a = p("t^2 - 3 + t^-1");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"[{"exp":2,"coef":1},{"exp":0,"coef":-3},{"exp":-1,"coef":1}]"#
        );
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6)
                .prop_map(LaurentPoly::from_terms)
        }

        proptest! {
            #[test]
            fn mul_distributes_over_add(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            }

            #[test]
            fn mul_is_commutative(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(a.mul(&b), b.mul(&a));
            }

            #[test]
            fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!b.is_zero());
                prop_assert_eq!(a.mul(&b).divide_exact(&b).unwrap(), a);
            }

            #[test]
            fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(a.mul(&b).eval_at_minus_one(),
                                a.eval_at_minus_one() * b.eval_at_minus_one());
                prop_assert_eq!(a.add(&b).eval_at_one(),
                                a.eval_at_one() + b.eval_at_one());
            }

            #[test]
            fn text_roundtrip(a in arb_poly()) {
                prop_assert_eq!(LaurentPoly::parse(&a.to_string()).unwrap(), a);
            }
        }
    }
}
