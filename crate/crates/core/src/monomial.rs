//! Betti diagrams of `S/I` for monomial ideals `I`, from the Taylor complex
//! tensored with the residue field.
//!
//! After tensoring, the differential only keeps the faces `S -> S \ {g}` with
//! `lcm(S \ {g}) = lcm(S)`, so the complex splits into strands indexed by the
//! lcm multidegree. Betti numbers are the homology ranks of each strand,
//! computed over the rationals.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::Polynomial;
use crate::rational::{int, Rational};

/// `2^20` subsets.
pub const MAX_GENERATORS: usize = 20;

pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub generators: Vec<Monomial>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn degree(m: &[u32]) -> i64 {
    m.iter().map(|&x| x as i64).sum()
}

fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Drops generators divisible by another one; sorts by degree, then
/// lexicographically with `x_1 > x_2 > ...`.
pub fn minimalize(nvars: usize, gens: &[Monomial]) -> Result<MonomialIdeal> {
    if let Some(g) = gens.iter().find(|g| g.len() != nvars) {
        return Err(Error::Parse(format!(
            "generator {g:?} does not have {nvars} exponents"
        )));
    }
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|g| (degree(g), Reverse(g.clone())));
    sorted.dedup();
    let mut keep: Vec<Monomial> = Vec::new();
    for g in sorted {
        // anything dividing g has degree <= deg g and was seen first
        if !keep.iter().any(|h| divides(h, &g)) {
            keep.push(g);
        }
    }
    Ok(MonomialIdeal {
        nvars,
        generators: keep,
    })
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::Parse("nvars must be >= 1".into()));
        }
        minimalize(nvars, &gens)
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        let raw: MonomialIdeal = serde_json::from_str(s)?;
        Self::new(raw.nvars, raw.generators)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("ideal serializes")
    }

    /// lcm of every subset of generators, indexed by bitmask.
    fn subset_lcms(&self) -> Result<Vec<Monomial>> {
        let r = self.generators.len();
        if r > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(r));
        }
        let mut lcms: Vec<Monomial> = Vec::with_capacity(1 << r);
        lcms.push(vec![0; self.nvars]);
        for mask in 1usize..(1 << r) {
            let low = mask.trailing_zeros() as usize;
            let rest = &lcms[mask & (mask - 1)];
            lcms.push(lcm(rest, &self.generators[low]));
        }
        Ok(lcms)
    }

    /// `sum_S (-1)^|S| t^{deg lcm(S)}`, the Hilbert numerator by
    /// inclusion-exclusion.
    pub fn taylor_numerator(&self) -> Result<Polynomial> {
        let lcms = self.subset_lcms()?;
        Ok(Polynomial::from_coeffs(lcms.iter().enumerate().map(|(mask, m)| {
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            (degree(m), int(sign))
        })))
    }
}

/// Multigraded Betti numbers of one lcm strand, by homological degree.
fn strand_betti(masks: &[usize]) -> BTreeMap<usize, usize> {
    let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &m in masks {
        by_size.entry(m.count_ones() as usize).or_default().push(m);
    }
    let index: HashMap<usize, usize> = by_size
        .values()
        .flat_map(|faces| faces.iter().enumerate().map(|(k, &m)| (m, k)))
        .collect();
    // rank of the differential out of homological degree i
    let mut ranks: BTreeMap<usize, usize> = BTreeMap::new();
    for (&i, faces) in &by_size {
        if i == 0 {
            continue;
        }
        let Some(targets) = by_size.get(&(i - 1)) else {
            continue;
        };
        let rows: Vec<Vec<Rational>> = faces
            .iter()
            .map(|&face| {
                let mut row = vec![int(0); targets.len()];
                let mut bits = face;
                let mut pos = 0;
                while bits != 0 {
                    let g = bits.trailing_zeros();
                    bits &= bits - 1;
                    let sub = face & !(1 << g);
                    if let Some(&col) = index.get(&sub) {
                        row[col] = int(if pos % 2 == 0 { 1 } else { -1 });
                    }
                    pos += 1;
                }
                row
            })
            .collect();
        ranks.insert(i, linalg::rank(rows));
    }
    by_size
        .iter()
        .filter_map(|(&i, faces)| {
            let out = ranks.get(&i).copied().unwrap_or(0);
            let incoming = ranks.get(&(i + 1)).copied().unwrap_or(0);
            let b = faces.len() - out - incoming;
            (b > 0).then_some((i, b))
        })
        .collect()
}

/// Strands keyed by `(degree, multidegree)` for a deterministic order.
fn strands(lcms: &[Monomial]) -> BTreeMap<(i64, Monomial), Vec<usize>> {
    let mut out: BTreeMap<(i64, Monomial), Vec<usize>> = BTreeMap::new();
    for (mask, m) in lcms.iter().enumerate() {
        out.entry((degree(m), m.clone())).or_default().push(mask);
    }
    out
}

#[cfg(feature = "parallel")]
fn all_strand_betti(strands: &BTreeMap<(i64, Monomial), Vec<usize>>) -> Vec<(i64, BTreeMap<usize, usize>)> {
    use rayon::prelude::*;
    let list: Vec<_> = strands.iter().collect();
    list.par_iter()
        .map(|((deg, _), masks)| (*deg, strand_betti(masks)))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn all_strand_betti(strands: &BTreeMap<(i64, Monomial), Vec<usize>>) -> Vec<(i64, BTreeMap<usize, usize>)> {
    strands
        .iter()
        .map(|((deg, _), masks)| (*deg, strand_betti(masks)))
        .collect()
}

/// Graded Betti diagram of `S/I` over a field of characteristic zero.
pub fn taylor_betti(ideal: &MonomialIdeal) -> Result<BettiDiagram> {
    let lcms = ideal.subset_lcms()?;
    let strands = strands(&lcms);
    let mut d = BettiDiagram::new();
    for (deg, betti) in all_strand_betti(&strands) {
        for (i, b) in betti {
            d.add_entry(i, deg, int(b as i64));
        }
    }
    Ok(d)
}

/// Named parametric families of monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `m^d` in `n` variables.
    PowerOfMaximal { n: usize, d: u32 },
    /// `V + m^(d+1)` for a list `V` of degree-`d` monomials.
    VPlusM { n: usize, d: u32, v: Vec<Monomial> },
    /// Edge ideal of the path on `k + 1` vertices.
    SquareFreeExample { k: usize },
}

/// All exponent vectors of degree `d` in `n` variables, in graded-lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            let used: u32 = prefix.iter().sum();
            let mut m = prefix.clone();
            m.push(d - used);
            out.push(m);
            return;
        }
        let used: u32 = prefix.iter().sum();
        for e in (0..=d - used).rev() {
            prefix.push(e);
            rec(n, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

impl Family {
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        match self {
            Family::PowerOfMaximal { n, d } => {
                if *n == 0 || *d == 0 {
                    return Err(Error::Parse("power-of-maximal needs n, d >= 1".into()));
                }
                MonomialIdeal::new(*n, monomials_of_degree(*n, *d))
            }
            Family::VPlusM { n, d, v } => {
                if *n == 0 || *d == 0 {
                    return Err(Error::Parse("vplusm needs n, d >= 1".into()));
                }
                if let Some(g) = v.iter().find(|g| g.len() != *n || degree(g) != *d as i64) {
                    return Err(Error::Parse(format!("{g:?} is not a degree-{d} monomial")));
                }
                let mut gens = v.clone();
                gens.extend(monomials_of_degree(*n, d + 1));
                MonomialIdeal::new(*n, gens)
            }
            Family::SquareFreeExample { k } => {
                if *k == 0 {
                    return Err(Error::Parse("square-free-example needs k >= 1".into()));
                }
                let n = k + 1;
                let gens = (0..*k)
                    .map(|i| {
                        let mut m = vec![0; n];
                        m[i] = 1;
                        m[i + 1] = 1;
                        m
                    })
                    .collect();
                MonomialIdeal::new(n, gens)
            }
        }
    }

    /// Parses `power-of-maximal(n,d)`, `vplusm(n,d,[[..],..])` or
    /// `square-free-example(k)`.
    pub fn parse(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownName(name.to_string());
        let name = name.trim();
        let (head, rest) = name.split_once('(').ok_or_else(unknown)?;
        let args = rest.strip_suffix(')').ok_or_else(unknown)?;
        let int_arg = |s: &str| s.trim().parse::<u64>().map_err(|_| unknown());
        match head.trim() {
            "power-of-maximal" => {
                let (n, d) = args.split_once(',').ok_or_else(unknown)?;
                Ok(Family::PowerOfMaximal {
                    n: int_arg(n)? as usize,
                    d: int_arg(d)? as u32,
                })
            }
            "vplusm" => {
                let mut parts = args.splitn(3, ',');
                let n = int_arg(parts.next().ok_or_else(unknown)?)? as usize;
                let d = int_arg(parts.next().ok_or_else(unknown)?)? as u32;
                let v: Vec<Monomial> = match parts.next() {
                    Some(list) => serde_json::from_str(list.trim())?,
                    None => Vec::new(),
                };
                Ok(Family::VPlusM { n, d, v })
            }
            "square-free-example" => Ok(Family::SquareFreeExample {
                k: int_arg(args)? as usize,
            }),
            _ => Err(unknown()),
        }
    }
}

/// `corpus("power-of-maximal(2,2)")` etc.
pub fn corpus(name: &str) -> Result<MonomialIdeal> {
    Family::parse(name)?.ideal()
}

/// The family members exercised by the test suites.
pub fn standard_corpus() -> Vec<(String, MonomialIdeal)> {
    let names = [
        "power-of-maximal(1,3)",
        "power-of-maximal(2,1)",
        "power-of-maximal(2,2)",
        "power-of-maximal(2,3)",
        "power-of-maximal(3,1)",
        "power-of-maximal(3,2)",
        "power-of-maximal(3,3)",
        "power-of-maximal(4,2)",
        "vplusm(2,2,[[2,0]])",
        "vplusm(2,2,[[1,1]])",
        "vplusm(2,3,[[3,0],[0,3]])",
        "vplusm(3,2,[[2,0,0]])",
        "vplusm(3,2,[[2,0,0],[0,1,1]])",
        "vplusm(3,2,[[1,1,0],[0,1,1],[1,0,1]])",
        "vplusm(2,1,[[1,0]])",
        "square-free-example(1)",
        "square-free-example(2)",
        "square-free-example(3)",
        "square-free-example(4)",
    ];
    names
        .iter()
        .map(|n| (n.to_string(), corpus(n).expect("valid corpus name")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(2, &[&[2, 0], &[2, 1], &[0, 1]]);
        assert_eq!(i.generators, vec![vec![0, 1], vec![2, 0]]);
        let j = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(j.generators, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let mut gens = monomials_of_degree(2, 3);
        gens.push(vec![1, 0]);
        let k = MonomialIdeal::new(2, gens).unwrap();
        assert_eq!(k.generators, vec![vec![1, 0], vec![0, 3]]);
    }

    #[test]
    fn degree_monomials() {
        assert_eq!(
            monomials_of_degree(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 4), vec![vec![4]]);
    }

    #[test]
    fn families() {
        assert_eq!(
            corpus("power-of-maximal(2,2)").unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(
            corpus("vplusm(2,2,[[2,0]])").unwrap().generators,
            vec![vec![2, 0], vec![1, 2], vec![0, 3]]
        );
        assert_eq!(
            corpus("power-of-maximal(3,1)").unwrap().generators,
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(
            corpus("square-free-example(2)").unwrap().generators,
            vec![vec![1, 1, 0], vec![0, 1, 1]]
        );
        assert!(matches!(corpus("nope(1)"), Err(Error::UnknownName(_))));
        assert!(matches!(corpus("power-of-maximal"), Err(Error::UnknownName(_))));
        assert!(corpus("vplusm(2,2,[[1,0]])").is_err());
    }

    #[test]
    fn taylor_examples() {
        let koszul = taylor_betti(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(koszul, BettiDiagram::from_ints(&[(0, 0, 1), (1, 1, 3), (2, 2, 3), (3, 3, 1)]));
        let m2 = taylor_betti(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        assert_eq!(m2, BettiDiagram::from_ints(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]));
        let x2_xy = taylor_betti(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(x2_xy, BettiDiagram::from_ints(&[(0, 0, 1), (1, 2, 2), (2, 3, 1)]));
    }

    #[test]
    fn zero_ideal_and_unit_ideal() {
        let zero = MonomialIdeal::new(2, vec![]).unwrap();
        assert_eq!(taylor_betti(&zero).unwrap(), BettiDiagram::from_ints(&[(0, 0, 1)]));
        let unit = MonomialIdeal::new(2, vec![vec![0, 0], vec![1, 0]]).unwrap();
        assert!(taylor_betti(&unit).unwrap().is_empty());
    }

    #[test]
    fn generator_guard() {
        let gens: Vec<Monomial> = (0..21)
            .map(|i| {
                let mut m = vec![0; 21];
                m[i] = 1;
                m
            })
            .collect();
        let big = MonomialIdeal::new(21, gens).unwrap();
        assert_eq!(taylor_betti(&big), Err(Error::TooManyGenerators(21)));
    }

    #[test]
    fn json_format() {
        let i = MonomialIdeal::parse_json(r#"{"nvars": 2, "generators": [[2,0],[1,1],[0,2]]}"#)
            .unwrap();
        assert_eq!(i, ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(MonomialIdeal::parse_json(&i.to_json_string()).unwrap(), i);
        assert!(MonomialIdeal::parse_json(r#"{"nvars": 2, "generators": [[2]]}"#).is_err());
    }
}
