//! Laurent polynomials in one variable `t` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

/// Sparse map exponent -> coefficient; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<i64, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `a + b t`
    pub fn linear(a: Rational, b: Rational) -> Self {
        let mut p = Self::constant(a);
        p.add_term(1, b);
        p
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in coeffs {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow(t, *e);
        }
        acc
    }

    /// Exact quotient by `(1 - t)` if it divides, otherwise `None`.
    ///
    /// With `p = (1 - t) q`, the coefficients of `q` are the prefix sums of
    /// the coefficients of `p`; divisibility is `p(1) = 0`.
    pub fn div_one_minus_t(&self) -> Option<Polynomial> {
        let (lo, hi) = match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => (*lo, *hi),
            _ => return Some(Self::zero()),
        };
        let mut q = Self::zero();
        let mut prefix = Rational::zero();
        for e in lo..hi {
            prefix += self.coeff(e);
            q.add_term(e, prefix.clone());
        }
        prefix += self.coeff(hi);
        prefix.is_zero().then_some(q)
    }

    /// Order of vanishing at `t = 1`; `None` for the zero polynomial.
    pub fn vanishing_order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut order = 0;
        let mut p = self.clone();
        while let Some(q) = p.div_one_minus_t() {
            order += 1;
            p = q;
        }
        Some(order)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Self::from_coeffs(self.terms.iter().map(|(e, v)| (*e, v * c)))
    }
}

fn pow(t: &Rational, e: i64) -> Rational {
    let base = if e < 0 { t.recip() } else { t.clone() };
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.terms.iter().map(|(e, c)| (*e, -c)))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coef = rational::format(&abs);
            match *e {
                0 => write!(f, "{coef}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{coef}")?;
                    }
                    if *e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
