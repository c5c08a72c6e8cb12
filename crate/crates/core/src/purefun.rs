//! Normalized pure diagrams and the rational functions of the gap vector that
//! compute their Betti numbers.
//!
//! For a gap vector `e = (e_1, ..., e_s)` the linear forms are
//!
//! * `T_i = i + e_1 + ... + e_i`
//! * `U_{i,j} = (j - i + 1) + e_i + ... + e_j` for `i <= j`
//! * `V_{i,j} = (i - j) + e_{j+1} + ... + e_i` for `i > j`
//!
//! and `b_j(e) = prod_{i != j} T_i / (prod_{i=2}^{j} U_{i,j} * prod_{i=j+1}^{s} V_{i,j})`,
//! which equals `beta_j` of the normalized pure diagram with degrees
//! `d_j = j + e_1 + ... + e_j`. The `U` product runs up to `i = j`: the
//! factor `U_{j,j} = 1 + e_j` is `|d_j - d_{j-1}|`.

use num_traits::{One, Signed, Zero};

use crate::degree::{DegreeSequence, GapVector};
use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// A normalized pure diagram: one entry per column at `(i, d_i)`, with
/// `beta_{0,d_0} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureDiagram {
    pub degrees: DegreeSequence,
    pub diagram: BettiDiagram,
}

impl PureDiagram {
    /// Column totals `beta_0, ..., beta_s`.
    pub fn betti(&self) -> Vec<Rational> {
        self.diagram.values_at(&self.degrees)
    }

    pub fn beta(&self, i: usize) -> Rational {
        self.diagram.get(i, self.degrees.degrees()[i])
    }
}

/// `beta_i = prod_{1 <= k <= s, k != i} |d_k - d_0| / |d_k - d_i|`
pub fn herzog_kuhl(d: &DegreeSequence) -> PureDiagram {
    let deg = d.degrees();
    let s = d.len_s();
    let diagram = BettiDiagram::from_entries((0..=s).map(|i| {
        let mut beta = Rational::one();
        for k in (1..=s).filter(|&k| k != i) {
            beta *= rational::ratio((deg[k] - deg[0]).abs(), (deg[k] - deg[i]).abs());
        }
        (i, deg[i], beta)
    }));
    PureDiagram {
        degrees: d.clone(),
        diagram,
    }
}

/// Checked constructor from raw degrees.
pub fn pure_diagram(degrees: &[i64]) -> Result<PureDiagram> {
    Ok(herzog_kuhl(&DegreeSequence::new(degrees.to_vec())?))
}

/// `constant + sum_k coefficients[k-1] * e_k`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub constant: Rational,
    pub coefficients: Vec<Rational>,
}

impl LinearForm {
    /// `constant + e_lo + ... + e_hi` (1-based, inclusive; empty if `lo > hi`).
    fn range_sum(s: usize, constant: i64, lo: usize, hi: usize) -> Self {
        let coefficients = (1..=s)
            .map(|k| {
                if lo <= k && k <= hi {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Self {
            constant: int(constant),
            coefficients,
        }
    }

    pub fn eval(&self, e: &GapVector) -> Rational {
        debug_assert_eq!(e.len(), self.coefficients.len());
        let mut acc = self.constant.clone();
        for (c, x) in self.coefficients.iter().zip(e.coords()) {
            if !c.is_zero() {
                acc += c * x;
            }
        }
        acc
    }

    /// Coefficient of `e_k` (1-based).
    pub fn coefficient(&self, k: usize) -> &Rational {
        &self.coefficients[k - 1]
    }
}

pub fn t_form(i: usize, s: usize) -> Result<LinearForm> {
    if !(1..=s).contains(&i) {
        return Err(Error::IndexError(format!("T_{i} needs 1 <= i <= {s}")));
    }
    Ok(LinearForm::range_sum(s, i as i64, 1, i))
}

/// Defined for `1 <= i <= j <= s`, including the diagonal `U_{j,j} = 1 + e_j`.
pub fn u_form(i: usize, j: usize, s: usize) -> Result<LinearForm> {
    if !(1 <= i && i <= j && j <= s) {
        return Err(Error::IndexError(format!(
            "U_{{{i},{j}}} needs 1 <= i <= j <= {s}"
        )));
    }
    Ok(LinearForm::range_sum(s, (j - i + 1) as i64, i, j))
}

pub fn v_form(i: usize, j: usize, s: usize) -> Result<LinearForm> {
    if !(1 <= j && j < i && i <= s) {
        return Err(Error::IndexError(format!(
            "V_{{{i},{j}}} needs 1 <= j < i <= {s}"
        )));
    }
    Ok(LinearForm::range_sum(s, (i - j) as i64, j + 1, i))
}

#[allow(non_snake_case)]
pub fn T(i: usize, e: &GapVector) -> Result<Rational> {
    Ok(t_form(i, e.len())?.eval(e))
}

#[allow(non_snake_case)]
pub fn U(i: usize, j: usize, e: &GapVector) -> Result<Rational> {
    Ok(u_form(i, j, e.len())?.eval(e))
}

#[allow(non_snake_case)]
pub fn V(i: usize, j: usize, e: &GapVector) -> Result<Rational> {
    Ok(v_form(i, j, e.len())?.eval(e))
}

/// Numerator and denominator linear forms of `b_j`.
pub fn b_j_factors(j: usize, s: usize) -> Result<(Vec<LinearForm>, Vec<LinearForm>)> {
    check_j(j, s)?;
    let num = (1..=s)
        .filter(|&i| i != j)
        .map(|i| t_form(i, s))
        .collect::<Result<Vec<_>>>()?;
    let den = (2..=j)
        .map(|i| u_form(i, j, s))
        .chain((j + 1..=s).map(|i| v_form(i, j, s)))
        .collect::<Result<Vec<_>>>()?;
    Ok((num, den))
}

fn check_j(j: usize, s: usize) -> Result<()> {
    if !(1..=s).contains(&j) {
        return Err(Error::IndexError(format!("j = {j} outside 1..={s}")));
    }
    Ok(())
}

fn check_domain(e: &GapVector) -> Result<()> {
    if !e.is_nonnegative() {
        return Err(Error::DomainError(e.to_string()));
    }
    Ok(())
}

/// A form value and the range `e_lo..=e_hi` it sums.
type Factor = (Rational, usize, usize);

/// Values of all `T`, `U`, `V` forms at one point, from prefix sums of `e`.
#[derive(Debug, Clone)]
pub struct GapPoint {
    e: GapVector,
    prefix: Vec<Rational>,
}

impl GapPoint {
    pub fn new(e: &GapVector) -> Self {
        let mut prefix = Vec::with_capacity(e.len() + 1);
        prefix.push(Rational::zero());
        for x in e.coords() {
            let next = prefix.last().unwrap() + x;
            prefix.push(next);
        }
        Self {
            e: e.clone(),
            prefix,
        }
    }

    pub fn s(&self) -> usize {
        self.e.len()
    }

    pub fn gaps(&self) -> &GapVector {
        &self.e
    }

    fn t(&self, i: usize) -> Rational {
        int(i as i64) + &self.prefix[i]
    }

    fn u(&self, i: usize, j: usize) -> Rational {
        int((j - i + 1) as i64) + &self.prefix[j] - &self.prefix[i - 1]
    }

    fn v(&self, i: usize, j: usize) -> Rational {
        int((i - j) as i64) + &self.prefix[i] - &self.prefix[j]
    }

    /// `(value, covers e_k?)` for every numerator and denominator factor.
    fn factors(&self, j: usize) -> (Vec<Factor>, Vec<Factor>) {
        let s = self.s();
        // (value, lo, hi): the form contains e_lo..=e_hi with coefficient 1
        let num = (1..=s)
            .filter(|&i| i != j)
            .map(|i| (self.t(i), 1, i))
            .collect();
        let den = (2..=j)
            .map(|i| (self.u(i, j), i, j))
            .chain((j + 1..=s).map(|i| (self.v(i, j), j + 1, i)))
            .collect();
        (num, den)
    }

    pub fn b_j(&self, j: usize) -> Result<Rational> {
        check_j(j, self.s())?;
        let (num, den) = self.factors(j);
        let mut value = Rational::one();
        for (v, _, _) in &num {
            value *= v;
        }
        for (v, lo, hi) in &den {
            if v.is_zero() {
                return Err(Error::PoleError(format!(
                    "denominator form over e_{lo}..e_{hi} at {}",
                    self.e
                )));
            }
            value /= v;
        }
        Ok(value)
    }

    /// `d/de_k log b_j`, for all `k = 1..=s` (index `k - 1`).
    pub fn log_gradient(&self, j: usize) -> Result<Vec<Rational>> {
        check_j(j, self.s())?;
        let (num, den) = self.factors(j);
        let mut grad = vec![Rational::zero(); self.s()];
        for (sign, factors) in [(1i64, &num), (-1i64, &den)] {
            for (v, lo, hi) in factors {
                if v.is_zero() {
                    return Err(Error::PoleError(format!(
                        "form over e_{lo}..e_{hi} vanishes at {}",
                        self.e
                    )));
                }
                let term = int(sign) / v;
                for g in &mut grad[lo - 1..*hi] {
                    *g += &term;
                }
            }
        }
        Ok(grad)
    }

    /// `grad b_j = b_j * grad log b_j`
    pub fn gradient(&self, j: usize) -> Result<Vec<Rational>> {
        let b = self.b_j(j)?;
        Ok(self
            .log_gradient(j)?
            .into_iter()
            .map(|g| g * &b)
            .collect())
    }
}

/// `b_j(e)` on the closed nonnegative orthant.
pub fn b_j(j: usize, e: &GapVector) -> Result<Rational> {
    check_domain(e)?;
    GapPoint::new(e).b_j(j)
}

/// Exact `d b_j / d e_k`.
pub fn db_j(j: usize, k: usize, e: &GapVector) -> Result<Rational> {
    if !(1..=e.len()).contains(&k) {
        return Err(Error::IndexError(format!("k = {k} outside 1..={}", e.len())));
    }
    Ok(GapPoint::new(e).gradient(j)?.swap_remove(k - 1))
}

/// The reduced function from the minimization argument for `1 < j < s`:
///
/// `c_j(t, e1) = (1+e1)...(j-1+e1) (j+1+2e1)...(s+2e1)
///              / ((1+t e1)...(j-1+t e1) (1+(1-t)e1)...((s-j)+(1-t)e1))`
pub fn c_j(j: usize, s: usize, t: &Rational, e1: &Rational) -> Result<Rational> {
    if !(1 < j && j < s) {
        return Err(Error::DomainError(format!("c_j needs 1 < j < s, got j={j}, s={s}")));
    }
    if t.is_negative() || t > &Rational::one() || e1.is_negative() {
        return Err(Error::DomainError(format!(
            "t = {}, e1 = {}",
            rational::format(t),
            rational::format(e1)
        )));
    }
    let one_minus_t = Rational::one() - t;
    let mut value = Rational::one();
    for i in 1..j {
        value *= int(i as i64) + e1;
        value /= int(i as i64) + t * e1;
    }
    for i in j + 1..=s {
        value *= int(i as i64) + e1 * int(2);
    }
    for i in 1..=s - j {
        value /= int(i as i64) + &one_minus_t * e1;
    }
    Ok(value)
}

/// `d_0 <= 0` and `d_s - s <= 2 d_1 - 2`.
pub fn pure_shape_check(d: &DegreeSequence) -> bool {
    d.pure_shape_check()
}
