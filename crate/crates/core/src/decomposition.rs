//! Greedy Boij-Söderberg decomposition into normalized pure diagrams.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::degree::DegreeSequence;
use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::purefun::herzog_kuhl;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coefficient: Rational,
    pub degrees: DegreeSequence,
}

/// Terms in order of production; the degree sequences form a chain.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub terms: Vec<Term>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_json(&self) -> DecompositionFile {
        DecompositionFile {
            terms: self
                .terms
                .iter()
                .map(|t| TermRecord {
                    coefficient: rational::format(&t.coefficient),
                    degrees: t.degrees.degrees().to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(file: &DecompositionFile) -> Result<Self> {
        let terms = file
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coefficient: rational::parse(&t.coefficient)?,
                    degrees: DegreeSequence::new(t.degrees.clone())?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { terms })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("decomposition serializes")
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coefficient: String,
    pub degrees: Vec<i64>,
}

/// `{"terms": [{"coefficient": "p/q", "degrees": [0,1,3]}, ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionFile {
    pub terms: Vec<TermRecord>,
}

/// Repeatedly strips the largest multiple of the pure diagram at the
/// current minimal degrees.
pub fn decompose(d: &BettiDiagram) -> Result<Decomposition> {
    if d.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    if !d.is_nonnegative() {
        return Err(Error::NotInCone("negative entry in input".into()));
    }
    let max_steps = d.nnz();
    let mut rest = d.clone();
    let mut terms = Vec::new();
    while !rest.is_empty() {
        if terms.len() == max_steps {
            return Err(Error::NotInCone("greedy did not terminate".into()));
        }
        let mins = rest.min_degrees().map_err(|e| match e {
            Error::GapColumn(i) => Error::NotInCone(format!("column {i} emptied before the last")),
            other => other,
        })?;
        let degrees = DegreeSequence::new(mins)
            .map_err(|e| Error::NotInCone(format!("minimal degrees not increasing: {e}")))?;
        let pure = herzog_kuhl(&degrees);
        let lambda = rest
            .values_at(&degrees)
            .iter()
            .zip(pure.betti())
            .map(|(have, unit)| have / unit)
            .min()
            .expect("nonempty sequence");
        rest = rest.sub(&pure.diagram.scale(&lambda));
        if !rest.is_nonnegative() {
            return Err(Error::NotInCone(format!(
                "negative entry after removing {} * pi{}",
                rational::format(&lambda),
                degrees
            )));
        }
        terms.push(Term {
            coefficient: lambda,
            degrees,
        });
    }
    Ok(Decomposition { terms })
}

/// `sum coefficient * pi(degrees)`
pub fn recompose(dec: &Decomposition) -> BettiDiagram {
    dec.terms.iter().fold(BettiDiagram::new(), |acc, t| {
        acc.add(&herzog_kuhl(&t.degrees).diagram.scale(&t.coefficient))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermCheck {
    pub degrees: Vec<i64>,
    pub s: usize,
    pub lower_ok: bool,
    pub upper_ok: bool,
    pub length_ok: bool,
    pub coefficient_positive: bool,
}

impl TermCheck {
    pub fn passed(&self) -> bool {
        self.lower_ok && self.upper_ok && self.length_ok && self.coefficient_positive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub codim: usize,
    pub proj_dim: usize,
    pub min_degrees: Vec<i64>,
    pub max_degrees: Vec<i64>,
    pub chain: bool,
    pub terms: Vec<TermCheck>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.chain && self.terms.iter().all(TermCheck::passed)
    }
}

/// Checks every term against `tau_s(d_min) <= d <= tau_s(d_max)` and
/// `codim <= s <= pd`, and that the terms form a chain.
pub fn validate_bounds(dec: &Decomposition, d: &BettiDiagram) -> Result<BoundsReport> {
    let lo = d.min_degrees()?;
    let hi = d.max_degrees()?;
    let codim = d.codim()?;
    let pd = lo.len() - 1;
    let terms = dec
        .terms
        .iter()
        .map(|t| {
            let s = t.degrees.len_s();
            let deg = t.degrees.degrees();
            let in_range = s <= pd;
            TermCheck {
                degrees: deg.to_vec(),
                s,
                lower_ok: in_range && lo[..=s].iter().zip(deg).all(|(a, b)| a <= b),
                upper_ok: in_range && deg.iter().zip(&hi[..=s]).all(|(a, b)| a <= b),
                length_ok: codim <= s && s <= pd,
                coefficient_positive: t.coefficient.is_positive(),
            }
        })
        .collect();
    let chain = dec
        .terms
        .windows(2)
        .all(|w| w[0].degrees.prefix_leq(&w[1].degrees));
    Ok(BoundsReport {
        codim,
        proj_dim: pd,
        min_degrees: lo,
        max_degrees: hi,
        chain,
        terms,
    })
}

/// Total coefficient mass; equals `beta_0` of the recomposed diagram.
pub fn total_coefficient(dec: &Decomposition) -> Rational {
    dec.terms
        .iter()
        .fold(Rational::zero(), |acc, t| acc + &t.coefficient)
}
