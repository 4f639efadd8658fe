//! Exact piecewise-linear functions on the interval [0, 2] and upper
//! envelopes of finite line families, all over arbitrary-precision rationals.

use num::{Signed, Zero};

use crate::algebra::{rat_int, Rational};

/// The affine function `t ↦ intercept + slope · t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub intercept: Rational,
    pub slope: Rational,
}

impl Line {
    pub fn new(intercept: Rational, slope: Rational) -> Self {
        Self { intercept, slope }
    }

    pub fn value_at(&self, t: &Rational) -> Rational {
        &self.intercept + &self.slope * t
    }
}

/// A continuous piecewise-linear function on [0, 2], stored as breakpoints
/// with strictly increasing abscissae; the first is at t = 0, the last at
/// t = 2, and no interior breakpoint is collinear with its neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinear {
    breakpoints: Vec<(Rational, Rational)>,
}

impl PiecewiseLinear {
    /// Canonicalizes a breakpoint list: validates the domain, checks strict
    /// monotonicity of abscissae, and merges collinear interior points.
    pub fn from_breakpoints(points: Vec<(Rational, Rational)>) -> Self {
        assert!(points.len() >= 2, "need at least the two endpoints");
        assert!(points.first().unwrap().0.is_zero(), "domain starts at 0");
        assert_eq!(points.last().unwrap().0, rat_int(2), "domain ends at 2");
        for w in points.windows(2) {
            assert!(w[0].0 < w[1].0, "abscissae must strictly increase");
        }
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(points.len());
        for p in points {
            while merged.len() >= 2 {
                let b = &merged[merged.len() - 1];
                let a = &merged[merged.len() - 2];
                // Collinear when (t_b - t_a)(v_p - v_b) == (t_p - t_b)(v_b - v_a).
                let lhs = (&b.0 - &a.0) * (&p.1 - &b.1);
                let rhs = (&p.0 - &b.0) * (&b.1 - &a.1);
                if lhs == rhs {
                    merged.pop();
                } else {
                    break;
                }
            }
            merged.push(p);
        }
        Self { breakpoints: merged }
    }

    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.breakpoints
    }

    /// Segment slopes, left to right.
    pub fn slopes(&self) -> Vec<Rational> {
        self.breakpoints
            .windows(2)
            .map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0))
            .collect()
    }

    /// Exact value at `t ∈ [0, 2]`.
    pub fn value_at(&self, t: &Rational) -> Rational {
        assert!(
            !t.is_negative() && *t <= rat_int(2),
            "t = {t} is outside [0, 2]"
        );
        let pts = &self.breakpoints;
        for w in pts.windows(2) {
            if *t <= w[1].0 {
                let dt = &w[1].0 - &w[0].0;
                let dv = &w[1].1 - &w[0].1;
                return &w[0].1 + dv * (t - &w[0].0) / dt;
            }
        }
        pts.last().unwrap().1.clone()
    }
}

/// Pointwise maximum of a nonempty family of lines, restricted to [0, 2].
///
/// Between consecutive candidate abscissae (0, 2, and every pairwise
/// intersection inside the interval) the maximizing line cannot change, so
/// the envelope is the canonicalized interpolation through the pointwise
/// maxima at those abscissae.
pub fn upper_envelope(lines: &[Line]) -> PiecewiseLinear {
    assert!(!lines.is_empty(), "envelope of an empty family");
    let mut cuts: Vec<Rational> = vec![rat_int(0), rat_int(2)];
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if a.slope == b.slope {
                continue;
            }
            let t = (&b.intercept - &a.intercept) / (&a.slope - &b.slope);
            if t.is_positive() && t < rat_int(2) {
                cuts.push(t);
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let points = cuts
        .into_iter()
        .map(|t| {
            let v = lines
                .iter()
                .map(|l| l.value_at(&t))
                .max()
                .expect("nonempty family");
            (t, v)
        })
        .collect();
    PiecewiseLinear::from_breakpoints(points)
}
