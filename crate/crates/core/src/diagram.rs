//! Sparse Betti diagrams with exact rational entries.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::degree::DegreeSequence;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Map `(i, j) -> beta_{i,j}` with zero entries pruned, so equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct BettiDiagram {
    entries: BTreeMap<(usize, i64), Rational>,
}

impl BettiDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, i64, Rational)>,
    {
        let mut d = Self::new();
        for (i, j, v) in entries {
            d.add_entry(i, j, v);
        }
        d
    }

    /// Convenience for tests and examples: integer entries.
    pub fn from_ints(entries: &[(usize, i64, i64)]) -> Self {
        Self::from_entries(entries.iter().map(|&(i, j, v)| (i, j, rational::int(v))))
    }

    pub fn add_entry(&mut self, i: usize, j: i64, v: Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn get(&self, i: usize, j: i64) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, &Rational)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            out.add_entry(i, j, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-rational::int(1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_entries(self.entries().map(|(i, j, v)| (i, j, v * c)))
    }

    /// Translates every internal degree by `by`.
    pub fn shift(&self, by: i64) -> Self {
        Self::from_entries(self.entries().map(|(i, j, v)| (i, j + by, v.clone())))
    }

    /// `sum_j beta_{i,j}`
    pub fn total_betti(&self, i: usize) -> Rational {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest homological index with a nonzero entry.
    pub fn proj_dim(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    fn column_degrees(&self, i: usize) -> impl DoubleEndedIterator<Item = i64> + '_ {
        self.entries
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, j), _)| j)
    }

    fn column_extremes(&self, pick_max: bool) -> Result<Vec<i64>> {
        let p = self.proj_dim().ok_or(Error::EmptyDiagram)?;
        (0..=p)
            .map(|i| {
                let mut col = self.column_degrees(i);
                let d = if pick_max { col.next_back() } else { col.next() };
                d.ok_or(Error::GapColumn(i))
            })
            .collect()
    }

    /// `(d_min_0, ..., d_min_p)`; errors on an interior zero column.
    pub fn min_degrees(&self) -> Result<Vec<i64>> {
        self.column_extremes(false)
    }

    pub fn max_degrees(&self) -> Result<Vec<i64>> {
        self.column_extremes(true)
    }

    /// `max { j - i : beta_{i,j} != 0 }`
    pub fn regularity(&self) -> Result<i64> {
        self.entries
            .keys()
            .map(|&(i, j)| j - i as i64)
            .max()
            .ok_or(Error::EmptyDiagram)
    }

    /// `K(t) = sum (-1)^i beta_{i,j} t^j`
    pub fn hilbert_numerator(&self) -> Polynomial {
        Polynomial::from_coeffs(self.entries().map(|(i, j, v)| {
            let v = if i % 2 == 0 { v.clone() } else { -v };
            (j, v)
        }))
    }

    /// Order of vanishing of the Hilbert numerator at `t = 1`.
    pub fn codim(&self) -> Result<usize> {
        self.hilbert_numerator()
            .vanishing_order_at_one()
            .ok_or(Error::ZeroNumerator)
    }

    /// Entries of the pure-shaped sub-table at the given degrees, if every
    /// column carries a nonzero value there.
    pub fn values_at(&self, d: &DegreeSequence) -> Vec<Rational> {
        d.degrees()
            .iter()
            .enumerate()
            .map(|(i, &j)| self.get(i, j))
            .collect()
    }

    pub fn to_json(&self) -> DiagramFile {
        DiagramFile {
            entries: self
                .entries()
                .map(|(i, j, v)| EntryRecord {
                    i,
                    j,
                    value: rational::format(v),
                })
                .collect(),
        }
    }

    pub fn from_json(file: &DiagramFile) -> Result<Self> {
        let mut d = Self::new();
        for e in &file.entries {
            d.add_entry(e.i, e.j, rational::parse(&e.value)?);
        }
        Ok(d)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("diagram serializes")
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    /// Macaulay2-style table: rows indexed by `j - i`, columns by `i`, `.`
    /// for zero.
    pub fn render_table(&self) -> String {
        let Some(p) = self.proj_dim() else {
            return "(zero diagram)\n".to_string();
        };
        let rows: Vec<i64> = {
            let mut r: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
            r.sort_unstable();
            r.dedup();
            (r[0]..=r[r.len() - 1]).collect()
        };
        let mut grid: Vec<(String, Vec<String>)> = Vec::new();
        grid.push((
            String::new(),
            (0..=p).map(|i| i.to_string()).collect(),
        ));
        grid.push((
            "total:".to_string(),
            (0..=p).map(|i| rational::format(&self.total_betti(i))).collect(),
        ));
        for r in rows {
            grid.push((
                format!("{r}:"),
                (0..=p)
                    .map(|i| {
                        let v = self.get(i, r + i as i64);
                        if v.is_zero() {
                            ".".to_string()
                        } else {
                            rational::format(&v)
                        }
                    })
                    .collect(),
            ));
        }
        let label_w = grid.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..=p)
            .map(|c| grid.iter().map(|(_, cells)| cells[c].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for (label, cells) in &grid {
            out.push_str(&format!("{label:>label_w$}"));
            for (cell, w) in cells.iter().zip(&widths) {
                out.push_str(&format!(" {cell:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_table())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub i: usize,
    pub j: i64,
    pub value: String,
}

/// On-disk diagram format: `{"entries": [{"i":0,"j":0,"value":"1"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramFile {
    pub entries: Vec<EntryRecord>,
}
