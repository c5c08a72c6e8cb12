//! Seeded sampling checks of the monotonicity and minimum properties of
//! `b_j` on the nonnegative orthant.
//!
//! Points are rationals with denominators at most [`MAX_DENOMINATOR`] drawn
//! from a ChaCha stream, so every check is exact and reproducible. Sample
//! points are generated sequentially; evaluation may run in parallel but the
//! violation list is always in sample order.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::degree::GapVector;
use crate::purefun::{c_j, GapPoint};
use crate::rational::{self, binomial, factorial, int, Rational};

pub const MAX_DENOMINATOR: i64 = 64;
/// Coordinates are drawn from `[0, COORD_MAX]`.
pub const COORD_MAX: i64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub e: Vec<String>,
    pub j: usize,
    pub k: Option<usize>,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub samples: usize,
    pub seed: u64,
    pub violations: Vec<Violation>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn violation(e: &GapVector, j: usize, k: Option<usize>, value: &Rational) -> Violation {
    Violation {
        e: e.coords().iter().map(rational::format).collect(),
        j,
        k,
        value: rational::format(value),
        note: None,
    }
}

fn random_rational<R: Rng>(rng: &mut R, max: i64) -> Rational {
    let den = rng.gen_range(1..=MAX_DENOMINATOR);
    let num = rng.gen_range(0..=max * den);
    rational::ratio(num, den)
}

/// A point of `[0, COORD_MAX]^s`; each coordinate is pinned to 0 with
/// probability 1/4 so the boundary of the orthant is exercised.
pub fn random_point<R: Rng>(rng: &mut R, s: usize) -> GapVector {
    GapVector::new(
        (0..s)
            .map(|_| {
                if rng.gen_ratio(1, 4) {
                    Rational::zero()
                } else {
                    random_rational(rng, COORD_MAX)
                }
            })
            .collect(),
    )
}

/// A point with `e_1 >= e_2 + ... + e_s`; a quarter of the samples sit on
/// the equality face.
pub fn random_constrained_point<R: Rng>(rng: &mut R, s: usize) -> GapVector {
    let tail = random_point(rng, s - 1);
    let sum: Rational = tail.coords().iter().sum();
    let slack = if rng.gen_ratio(1, 4) {
        Rational::zero()
    } else {
        random_rational(rng, COORD_MAX)
    };
    let mut coords = vec![sum + slack];
    coords.extend(tail.coords().iter().cloned());
    GapVector::new(coords)
}

fn sample_points<F>(s_max: usize, samples: usize, seed: u64, mut draw: F) -> Vec<GapVector>
where
    F: FnMut(&mut ChaCha8Rng, usize) -> GapVector,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s_max = s_max.max(1);
    (0..samples)
        .map(|_| {
            let s = rng.gen_range(1..=s_max);
            draw(&mut rng, s)
        })
        .collect()
}

#[cfg(feature = "parallel")]
fn check_all<F>(points: &[GapVector], check: F) -> Vec<Violation>
where
    F: Fn(&GapVector) -> Vec<Violation> + Sync + Send,
{
    use rayon::prelude::*;
    points.par_iter().map(check).collect::<Vec<_>>().concat()
}

#[cfg(not(feature = "parallel"))]
fn check_all<F>(points: &[GapVector], check: F) -> Vec<Violation>
where
    F: Fn(&GapVector) -> Vec<Violation>,
{
    points.iter().flat_map(check).collect()
}

/// `d b_j / d e_1 >= 0` for every `j`.
pub fn check_upshifting_at(e: &GapVector) -> Vec<Violation> {
    let pt = GapPoint::new(e);
    (1..=e.len())
        .filter_map(|j| {
            let g = pt.gradient(j).expect("no poles on the orthant");
            (g[0] < Rational::zero()).then(|| violation(e, j, Some(1), &g[0]))
        })
        .collect()
}

/// `(d/de_j - d/de_k) b_j <= 0` for `k < j` and
/// `(d/de_{j+1} - d/de_k) b_j <= 0` for `k > j + 1`.
pub fn check_jtozero_at(e: &GapVector) -> Vec<Violation> {
    let s = e.len();
    let pt = GapPoint::new(e);
    let mut out = Vec::new();
    for j in 1..=s {
        let g = pt.gradient(j).expect("no poles on the orthant");
        for k in 1..j {
            let v = &g[j - 1] - &g[k - 1];
            if v > Rational::zero() {
                out.push(violation(e, j, Some(k), &v));
            }
        }
        for k in j + 2..=s {
            let v = &g[j] - &g[k - 1];
            if v > Rational::zero() {
                out.push(violation(e, j, Some(k), &v));
            }
        }
    }
    out
}

fn rising(from: i64, to: i64, shift: &Rational) -> Rational {
    (from..=to).map(|i| int(i) + shift).product()
}

/// `b_j(e) >= C(s, j)` at a constrained point, plus the closed forms on the
/// reduced faces the minimization argument lands on.
pub fn check_pure_min_at(e: &GapVector) -> Vec<Violation> {
    let s = e.len();
    let pt = GapPoint::new(e);
    let mut out = Vec::new();
    for j in 1..=s {
        let b = pt.b_j(j).expect("no poles on the orthant");
        if b < binomial(s, j) {
            out.push(violation(e, j, None, &b));
        }
    }

    let e1 = e.e(1).clone();
    let mut noted = |pt: &GapVector, j: usize, value: &Rational, note: &str| {
        let mut v = violation(pt, j, None, value);
        v.note = Some(note.to_string());
        out.push(v);
    };

    // e = (e1, 0, ..., 0): b_1 = (2+e1)...(s+e1)/(s-1)! >= s
    let mut axis = vec![Rational::zero(); s];
    axis[0] = e1.clone();
    let axis = GapVector::new(axis);
    let axis_pt = GapPoint::new(&axis);
    let fact = factorial(s as u64 - 1);
    let b1 = axis_pt.b_j(1).unwrap();
    if b1 != rising(2, s as i64, &e1) / &fact || b1 < int(s as i64) {
        noted(&axis, 1, &b1, "b_1 closed form");
    }
    // same point: b_s = (1+e1)...(s-1+e1)/(s-1)! >= 1
    let bs = axis_pt.b_j(s).unwrap();
    if s >= 2 && (bs != rising(1, s as i64 - 1, &e1) / &fact || bs < Rational::one()) {
        noted(&axis, s, &bs, "b_s closed form");
    }
    // e = (e1, 0, ..., 0, e1): b_s is identically 1
    if s >= 2 {
        let mut ends = vec![Rational::zero(); s];
        ends[0] = e1.clone();
        ends[s - 1] = e1.clone();
        let ends = GapVector::new(ends);
        let v = GapPoint::new(&ends).b_j(s).unwrap();
        if !v.is_one() {
            noted(&ends, s, &v, "b_s on e_s = e_1");
        }
    }
    // middle j: c_j(t, e1) = b_j(e1, .., t e1, (1-t) e1, ..) >= C(s, j)
    if s >= 3 {
        let t = if e1.is_zero() {
            rational::ratio(1, 2)
        } else {
            (e.e(2) / &e1).min(Rational::one())
        };
        for j in 2..s {
            let c = c_j(j, s, &t, &e1).unwrap();
            let mut red = vec![Rational::zero(); s];
            red[0] = e1.clone();
            red[j - 1] = &t * &e1;
            red[j] = (Rational::one() - &t) * &e1;
            let red = GapVector::new(red);
            let b = GapPoint::new(&red).b_j(j).unwrap();
            if c != b || c < binomial(s, j) {
                noted(&red, j, &c, "c_j reduction");
            }
        }
    }
    out
}

pub fn verify_upshifting(s_max: usize, samples: usize, seed: u64) -> LemmaReport {
    let points = sample_points(s_max, samples, seed, random_point);
    LemmaReport {
        lemma: "upshifting".into(),
        samples,
        seed,
        violations: check_all(&points, check_upshifting_at),
    }
}

pub fn verify_jtozero(s_max: usize, samples: usize, seed: u64) -> LemmaReport {
    let points = sample_points(s_max, samples, seed, random_point);
    LemmaReport {
        lemma: "jtozero".into(),
        samples,
        seed,
        violations: check_all(&points, check_jtozero_at),
    }
}

pub fn verify_pure_min(s_max: usize, samples: usize, seed: u64) -> LemmaReport {
    let points = sample_points(s_max, samples, seed, random_constrained_point);
    LemmaReport {
        lemma: "pure_min".into(),
        samples,
        seed,
        violations: check_all(&points, check_pure_min_at),
    }
}

/// All three checks with the same parameters.
pub fn verify_all(s_max: usize, samples: usize, seed: u64) -> Vec<LemmaReport> {
    vec![
        verify_upshifting(s_max, samples, seed),
        verify_jtozero(s_max, samples, seed),
        verify_pure_min(s_max, samples, seed),
    ]
}
