//! Lower bounds for `beta_j(S/I^t)` when `I` is generated in one degree
//! `delta`, has codimension `c` and asymptotic regularity defect `b`.
//!
//! The pure-diagram argument gives the exact product
//!
//! `[(1+t delta)...(j-1+t delta) (j+1+t delta+b)...(c+t delta+b)]
//!  / [(1+b)...(j-1+b) (1+b)...(c-j+b)]`
//!
//! whose leading term in `t` is
//! `(b!)^2 delta^(c-1) / ((j-1+b)! (c-j+b)!) * t^(c-1)`.

use serde::{Deserialize, Serialize};

use crate::degree::GapVector;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::purefun::b_j;
use crate::rational::{self, factorial, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticParams {
    pub codim: u32,
    pub delta: u32,
    pub defect: u32,
    pub j: u32,
    pub t: u32,
}

impl AsymptoticParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::ParamError(m.to_string()));
        if self.codim < 1 {
            return bad("codim must be >= 1");
        }
        if self.delta < 1 {
            return bad("delta must be >= 1");
        }
        if self.t < 1 {
            return bad("t must be >= 1");
        }
        if !(1..=self.codim).contains(&self.j) {
            return bad("j must lie in 1..=codim");
        }
        Ok(())
    }

    pub fn with_t(self, t: u32) -> Self {
        Self { t, ..self }
    }
}

/// The exact product bound as a polynomial in `t`, cut off at length `s`
/// (`s = codim` is the bound itself; `s > codim` keeps the extra factors).
pub fn bound_polynomial(p: &AsymptoticParams, s: u32) -> Result<Polynomial> {
    p.validate()?;
    if s < p.codim {
        return Err(Error::ParamError(format!("length {s} below codim {}", p.codim)));
    }
    let (j, b) = (p.j as i64, p.defect as i64);
    let delta = int(p.delta as i64);
    let mut num = Polynomial::constant(int(1));
    for i in 1..j {
        num = &num * &Polynomial::linear(int(i), delta.clone());
    }
    for i in j + 1..=s as i64 {
        num = &num * &Polynomial::linear(int(i + b), delta.clone());
    }
    let mut den = int(1);
    for i in 1..j {
        den *= int(i + b);
    }
    for i in 1..=(s as i64 - j) {
        den *= int(i + b);
    }
    Ok(num.scale(&den.recip()))
}

fn eval_at_t(poly: &Polynomial, t: u32) -> Rational {
    poly.eval(&int(t as i64))
}

/// The exact product bound at the given `t`.
pub fn exact_lower_bound(p: &AsymptoticParams) -> Result<Rational> {
    Ok(eval_at_t(&bound_polynomial(p, p.codim)?, p.t))
}

/// Same product at length `s >= codim`, before the factors above `codim`
/// are dropped.
pub fn pre_truncation_bound(p: &AsymptoticParams, s: u32) -> Result<Rational> {
    Ok(eval_at_t(&bound_polynomial(p, s)?, p.t))
}

pub fn leading_coefficient(p: &AsymptoticParams) -> Result<Rational> {
    p.validate()?;
    let (c, j, b) = (p.codim as u64, p.j as u64, p.defect as u64);
    let bf = factorial(b);
    let mut delta_pow = int(1);
    for _ in 1..c {
        delta_pow *= int(p.delta as i64);
    }
    Ok(&bf * &bf * delta_pow / (factorial(j - 1 + b) * factorial(c - j + b)))
}

/// `(b!)^2 delta^(c-1) t^(c-1) / ((j-1+b)! (c-j+b)!)`
pub fn leading_bound(p: &AsymptoticParams) -> Result<Rational> {
    let mut tp = int(1);
    for _ in 1..p.codim {
        tp *= int(p.t as i64);
    }
    Ok(leading_coefficient(p)? * tp)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PureComparison {
    pub t: u32,
    pub gaps: Vec<String>,
    pub b_j: String,
    pub exact_bound: String,
    pub leading: String,
    pub pass: bool,
}

/// Evaluates `b_j` at `e = (t delta, e_2, ..., e_s)` and compares it with both
/// bounds. `e_tail` must be nonnegative with sum at most `b`, and `s >= c`.
pub fn bound_vs_pure(p: &AsymptoticParams, e_tail: &[i64]) -> Result<PureComparison> {
    p.validate()?;
    let s = e_tail.len() + 1;
    if s < p.codim as usize {
        return Err(Error::ParamError(format!(
            "gap vector length {s} below codim {}",
            p.codim
        )));
    }
    if e_tail.iter().any(|&x| x < 0) {
        return Err(Error::ConstraintError("negative tail coordinate".into()));
    }
    let total: i64 = e_tail.iter().sum();
    if total > p.defect as i64 {
        return Err(Error::ConstraintError(format!(
            "tail sum {total} exceeds defect {}",
            p.defect
        )));
    }
    let mut coords = vec![int(p.t as i64 * p.delta as i64)];
    coords.extend(e_tail.iter().map(|&x| int(x)));
    let e = GapVector::new(coords);
    let value = b_j(p.j as usize, &e)?;
    let exact = exact_lower_bound(p)?;
    let leading = leading_bound(p)?;
    Ok(PureComparison {
        t: p.t,
        gaps: e.coords().iter().map(rational::format).collect(),
        pass: value >= exact && exact >= leading,
        b_j: rational::format(&value),
        exact_bound: rational::format(&exact),
        leading: rational::format(&leading),
    })
}

/// The extremal tail from the reduction: defect mass at positions `j` and
/// `j + 1` (as far as the length allows), zero elsewhere.
pub fn extremal_tail(p: &AsymptoticParams, s: usize) -> Vec<i64> {
    let mut tail = vec![0; s.saturating_sub(1)];
    let j = p.j as usize;
    let b = p.defect as i64;
    // tail index of e_k is k - 2
    if j >= 2 && j <= s {
        tail[j - 2] = b;
    } else if j < s {
        tail[j - 1] = b;
    }
    tail
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymptoticRow {
    pub t: u32,
    pub leading: String,
    pub exact_bound: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_j: Option<String>,
}

/// Rows `t = 1..=t_max`; with `tail` given, also `b_j((t delta, tail))`.
pub fn table(p: &AsymptoticParams, t_max: u32, tail: Option<&[i64]>) -> Result<Vec<AsymptoticRow>> {
    (1..=t_max)
        .map(|t| {
            let q = p.with_t(t);
            let b_j = match tail {
                Some(tail) => Some(bound_vs_pure(&q, tail)?.b_j),
                None => None,
            };
            Ok(AsymptoticRow {
                t,
                leading: rational::format(&leading_bound(&q)?),
                exact_bound: rational::format(&exact_lower_bound(&q)?),
                b_j,
            })
        })
        .collect()
}

/// Smallest `t` from which the exact bound dominates the leading term; the
/// product has every factor at least `t delta`, so this is 1.
pub fn dominance_start(p: &AsymptoticParams, t_max: u32) -> Option<u32> {
    let mut start = None;
    for t in (1..=t_max).rev() {
        let q = p.with_t(t);
        let (Ok(e), Ok(l)) = (exact_lower_bound(&q), leading_bound(&q)) else {
            return None;
        };
        if e >= l {
            start = Some(t);
        } else {
            break;
        }
    }
    start
}

/// Leading coefficient of the exact bound as a polynomial in `t`, with its
/// degree.
pub fn expanded_leading_term(p: &AsymptoticParams) -> Result<(i64, Rational)> {
    let poly = bound_polynomial(p, p.codim)?;
    Ok((poly.degree().unwrap_or(0), poly.leading_coeff()))
}
