//! Rank lower bounds `beta_j >= beta_0 * C(c, j)`, the regularity shape
//! hypothesis that guarantees them, and exhaustive scans over pure diagrams.

use std::fmt;
use std::ops::RangeInclusive;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::decomposition::{decompose, Decomposition};
use crate::degree::DegreeSequence;
use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::purefun::herzog_kuhl;
use crate::rational::{self, binomial, Rational};

/// Largest `s` accepted by [`scan`].
pub const SCAN_MAX_S: usize = 8;
/// Largest `d_max` accepted by [`scan`].
pub const SCAN_MAX_DEGREE: i64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnCheck {
    pub j: usize,
    pub actual: String,
    pub required: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BehReport {
    pub codim: usize,
    pub beta0: String,
    pub per_j: Vec<ColumnCheck>,
    pub hypothesis_met: bool,
    /// Degree shift applied so generators sit in degrees `<= 0`.
    pub shift: i64,
    /// Every column meets its bound with equality.
    pub equality: bool,
    pub overall: bool,
}

impl BehReport {
    pub fn first_failure(&self) -> Option<&ColumnCheck> {
        self.per_j.iter().find(|c| !c.pass)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for BehReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "codim {}, beta_0 = {}, shape hypothesis: {}",
            self.codim,
            self.beta0,
            if self.hypothesis_met { "met" } else { "not met" }
        )?;
        for c in &self.per_j {
            let rel = if c.pass { ">=" } else { "<" };
            writeln!(
                f,
                "j={}: {} {} {}{}",
                c.j,
                c.actual,
                rel,
                c.required,
                if c.pass { "" } else { "  FAIL" }
            )?;
        }
        write!(f, "overall: {}", if self.overall { "pass" } else { "fail" })
    }
}

/// Translation bringing the generators into degrees `<= 0`; zero if they
/// already are.
pub fn generator_shift(d: &BettiDiagram) -> Result<i64> {
    let top = d.max_degrees()?[0];
    Ok(if top > 0 { -top } else { 0 })
}

/// `reg(D) <= 2 d_min_1 - 2` with generators in degrees `<= 0`, after the
/// translation from [`generator_shift`].
pub fn shape_hypothesis(d: &BettiDiagram) -> Result<bool> {
    let shifted = d.shift(generator_shift(d)?);
    let mins = shifted.min_degrees()?;
    if mins.len() < 2 {
        return Err(Error::NoFirstSyzygy);
    }
    let top = shifted.max_degrees()?[0];
    Ok(top <= 0 && shifted.regularity()? <= 2 * mins[1] - 2)
}

fn column_checks(totals: &[Rational], beta0: &Rational, codim: usize) -> Vec<ColumnCheck> {
    (0..=codim)
        .map(|j| {
            let actual = totals.get(j).cloned().unwrap_or_default();
            let required = beta0 * binomial(codim, j);
            ColumnCheck {
                j,
                pass: actual >= required,
                actual: rational::format(&actual),
                required: rational::format(&required),
            }
        })
        .collect()
}

fn totals(d: &BettiDiagram, upto: usize) -> Vec<Rational> {
    (0..=upto).map(|i| d.total_betti(i)).collect()
}

/// Compares `beta_j(D)` with `beta_0(D) * C(c, j)` for `j = 0..=c`. The
/// codimension defaults to the Hilbert-numerator computation.
pub fn beh_check(d: &BettiDiagram, codim: Option<usize>) -> Result<BehReport> {
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let codim = match codim {
        Some(c) => c,
        None => d.codim()?,
    };
    let shift = generator_shift(d)?;
    let hypothesis_met = match shape_hypothesis(d) {
        Ok(h) => h,
        Err(Error::NoFirstSyzygy) => false,
        Err(e) => return Err(e),
    };
    let beta0 = d.total_betti(0);
    let per_j = column_checks(&totals(d, codim), &beta0, codim);
    Ok(report(codim, beta0, per_j, hypothesis_met, shift))
}

fn report(
    codim: usize,
    beta0: Rational,
    per_j: Vec<ColumnCheck>,
    hypothesis_met: bool,
    shift: i64,
) -> BehReport {
    BehReport {
        codim,
        beta0: rational::format(&beta0),
        overall: per_j.iter().all(|c| c.pass),
        equality: per_j.iter().all(|c| c.actual == c.required),
        per_j,
        hypothesis_met,
        shift,
    }
}

/// `beta_j(pi(d)) >= C(s, j)`; the hypothesis flag is the pure shape check.
pub fn pure_beh_check(d: &DegreeSequence) -> BehReport {
    let pure = herzog_kuhl(d);
    let s = d.len_s();
    let per_j = column_checks(&pure.betti(), &Rational::one(), s);
    report(s, Rational::one(), per_j, d.pure_shape_check(), 0)
}

/// Evidence that the regularity hypothesis forces the rank bound on a
/// concrete diagram: decompose, check each pure summand, check the total.
#[derive(Debug, Clone)]
pub struct EndToEnd {
    pub hypothesis_met: bool,
    pub decomposition: Decomposition,
    /// Every summand passes the pure shape check.
    pub summands_shaped: bool,
    /// Every summand of length `s + 1` has `beta_j >= C(s, j) >= C(c, j)`.
    pub summands_bounded: bool,
    pub report: BehReport,
}

pub fn end_to_end(d: &BettiDiagram) -> Result<EndToEnd> {
    let shifted = d.shift(generator_shift(d)?);
    let hypothesis_met = shape_hypothesis(&shifted)?;
    let codim = shifted.codim()?;
    let decomposition = decompose(&shifted)?;
    let summands_shaped = decomposition
        .terms
        .iter()
        .all(|t| t.degrees.pure_shape_check());
    let summands_bounded = decomposition.terms.iter().all(|t| {
        let s = t.degrees.len_s();
        let betti = herzog_kuhl(&t.degrees).betti();
        s >= codim && (0..=s).all(|j| betti[j] >= binomial(s, j) && binomial(s, j) >= binomial(codim, j))
    });
    let report = beh_check(d, Some(codim))?;
    Ok(EndToEnd {
        hypothesis_met,
        decomposition,
        summands_shaped,
        summands_bounded,
        report,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Pure shape check holds; assert the rank bound.
    ShapeVerify,
    /// Any sequence whose pure diagram fails `beta_j >= C(s, j)`.
    FindViolations,
    /// The smallest integral multiple `m * pi(d)` fails the ungraded bound
    /// `beta_j >= C(s, j)`.
    IntegralViolations,
}

impl std::str::FromStr for ScanMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shape-verify" => Ok(Self::ShapeVerify),
            "find-violations" => Ok(Self::FindViolations),
            "integral-violations" => Ok(Self::IntegralViolations),
            other => Err(Error::Parse(format!("unknown scan mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub degrees: DegreeSequence,
    pub shape: bool,
    pub beh_pass: bool,
    pub first_violating_j: Option<usize>,
    /// Column totals of `pi(d)`, or of its smallest integral multiple in
    /// integral mode.
    pub totals: Vec<Rational>,
    /// 1 except in integral mode.
    pub multiple: Rational,
}

impl ScanRow {
    pub fn csv_line(&self) -> String {
        let degs: Vec<String> = self.degrees.degrees().iter().map(i64::to_string).collect();
        let tot: Vec<String> = self.totals.iter().map(rational::format).collect();
        format!(
            "{};{};{};{};{};{}",
            degs.join(","),
            self.degrees.len_s(),
            self.shape,
            self.beh_pass,
            self.first_violating_j.map(|j| j.to_string()).unwrap_or_default(),
            tot.join(",")
        )
    }
}

pub const SCAN_CSV_HEADER: &str = "degrees;s;shape;beh_pass;first_violating_j;betti_totals";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub mode: ScanMode,
    /// Number of sequences enumerated.
    pub sequences: usize,
    /// Number of `(sequence, column)` comparisons made.
    pub column_checks: usize,
    pub rows: Vec<ScanRow>,
    /// Rows contradicting the rank bound under the mode's hypothesis; in
    /// shape-verify mode this must stay empty.
    pub violations: usize,
}

impl ScanReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(SCAN_CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.csv_line());
            out.push('\n');
        }
        out
    }
}

/// All strictly increasing `(0, d_1, ..., d_s)` with `d_s <= d_max`, in
/// lexicographic order.
pub fn enumerate_sequences(s: usize, d_max: i64) -> Vec<DegreeSequence> {
    fn rec(prefix: &mut Vec<i64>, left: usize, d_max: i64, out: &mut Vec<DegreeSequence>) {
        if left == 0 {
            out.push(DegreeSequence::new(prefix.clone()).expect("increasing by construction"));
            return;
        }
        let last = *prefix.last().unwrap();
        // leave room for the remaining entries
        for d in last + 1..=d_max - (left as i64 - 1) {
            prefix.push(d);
            rec(prefix, left - 1, d_max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], s, d_max, &mut out);
    out
}

fn scan_one(d: &DegreeSequence, mode: ScanMode) -> (usize, Option<ScanRow>) {
    let s = d.len_s();
    let shape = d.pure_shape_check();
    if mode == ScanMode::ShapeVerify && !shape {
        return (0, None);
    }
    let betti = herzog_kuhl(d).betti();
    let (multiple, totals) = match mode {
        ScanMode::IntegralViolations => {
            let m = Rational::from_integer(rational::common_denominator(&betti));
            let scaled = betti.iter().map(|b| b * &m).collect();
            (m, scaled)
        }
        _ => (Rational::one(), betti),
    };
    let first_violating_j = (0..=s).find(|&j| totals[j] < binomial(s, j));
    let row = ScanRow {
        degrees: d.clone(),
        shape,
        beh_pass: first_violating_j.is_none(),
        first_violating_j,
        totals,
        multiple,
    };
    let keep = match mode {
        ScanMode::ShapeVerify => true,
        _ => !row.beh_pass,
    };
    (s + 1, keep.then_some(row))
}

#[cfg(feature = "parallel")]
fn scan_all(seqs: &[DegreeSequence], mode: ScanMode) -> Vec<(usize, Option<ScanRow>)> {
    use rayon::prelude::*;
    seqs.par_iter().map(|d| scan_one(d, mode)).collect()
}

#[cfg(not(feature = "parallel"))]
fn scan_all(seqs: &[DegreeSequence], mode: ScanMode) -> Vec<(usize, Option<ScanRow>)> {
    seqs.iter().map(|d| scan_one(d, mode)).collect()
}

/// Exhaustive scan over sequences with `d_0 = 0`, `s` in `s_range` and
/// `d_s <= d_max`.
pub fn scan(s_range: RangeInclusive<usize>, d_max: i64, mode: ScanMode) -> Result<ScanReport> {
    if *s_range.start() < 1 || *s_range.end() > SCAN_MAX_S || s_range.is_empty() {
        return Err(Error::BoundsError(format!(
            "s range {}..={} must lie in 1..={SCAN_MAX_S}",
            s_range.start(),
            s_range.end()
        )));
    }
    if !(1..=SCAN_MAX_DEGREE).contains(&d_max) {
        return Err(Error::BoundsError(format!(
            "d_max {d_max} must lie in 1..={SCAN_MAX_DEGREE}"
        )));
    }
    let mut seqs: Vec<DegreeSequence> = s_range
        .flat_map(|s| enumerate_sequences(s, d_max))
        .collect();
    seqs.sort();
    let results = scan_all(&seqs, mode);
    let column_checks = results.iter().map(|(n, _)| n).sum();
    let rows: Vec<ScanRow> = results.into_iter().filter_map(|(_, r)| r).collect();
    let violations = match mode {
        ScanMode::ShapeVerify => rows.iter().filter(|r| !r.beh_pass).count(),
        _ => rows.len(),
    };
    Ok(ScanReport {
        mode,
        sequences: seqs.len(),
        column_checks,
        rows,
        violations,
    })
}
