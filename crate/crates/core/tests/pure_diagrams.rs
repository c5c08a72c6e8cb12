use betti_core::beh::enumerate_sequences;
use betti_core::purefun::{b_j, T, U, V};
use betti_core::rational::{int, ratio, Rational};
use betti_core::{herzog_kuhl, DegreeSequence, GapVector};
use num_traits::{One, Zero};

/// Every integer vector in `[0, max]^s`.
fn integer_points(s: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=max).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Normalized Herzog-Kühl entry, written out directly.
fn hk_entry(d: &[i64], i: usize) -> Rational {
    let mut v = Rational::one();
    for k in 1..d.len() {
        if k != i {
            v *= ratio((d[k] - d[0]).abs(), (d[k] - d[i]).abs());
        }
    }
    v
}

fn all_sequences(s_max: usize, d_max: i64) -> Vec<DegreeSequence> {
    (1..=s_max).flat_map(|s| enumerate_sequences(s, d_max)).collect()
}

#[test]
fn b_j_matches_herzog_kuhl_on_integer_gaps() {
    let mut checked = 0;
    for s in 1..=5 {
        for e in integer_points(s, 4) {
            let gaps = GapVector::from_ints(&e);
            let d = DegreeSequence::from_gaps(&gaps, 0).unwrap();
            let pure = herzog_kuhl(&d);
            for j in 1..=s {
                assert_eq!(b_j(j, &gaps).unwrap(), pure.beta(j), "e = {e:?}, j = {j}");
                checked += 1;
            }
        }
    }
    assert!(checked > 15_000);
}

#[test]
fn printed_denominator_range_breaks_the_identity() {
    // U ranging over i = 2..j-1 instead of 2..j
    let e = GapVector::from_ints(&[1, 0, 1]);
    let j = 3;
    let num: Rational = (1..=3).filter(|&i| i != j).map(|i| T(i, &e).unwrap()).product();
    let printed: Rational = (2..j).map(|i| U(i, j, &e).unwrap()).product();
    let corrected: Rational = (2..=j).map(|i| U(i, j, &e).unwrap()).product();
    let v: Rational = (j + 1..=3).map(|i| V(i, j, &e).unwrap()).product();
    assert_eq!(&num / (&printed * &v), int(2));
    assert_eq!(&num / (&corrected * &v), int(1));
    let d = DegreeSequence::from_gaps(&e, 0).unwrap();
    assert_eq!(herzog_kuhl(&d).beta(3), int(1));
}

#[test]
fn herzog_kuhl_matches_direct_product() {
    for d in all_sequences(5, 10) {
        let pure = herzog_kuhl(&d);
        for i in 0..=d.len_s() {
            assert_eq!(pure.beta(i), hk_entry(d.degrees(), i), "{d}");
        }
    }
}

#[test]
fn herzog_kuhl_equations() {
    for d in all_sequences(5, 10) {
        let betti = herzog_kuhl(&d).betti();
        let degs = d.degrees();
        for t in 0..d.len_s() as u32 {
            let mut sum = Rational::zero();
            for (i, b) in betti.iter().enumerate() {
                let term = int(degs[i].pow(t)) * b;
                if i % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            assert!(sum.is_zero(), "{d}, t = {t}");
        }
    }
}

#[test]
fn normalization_and_codimension() {
    for d in all_sequences(5, 10) {
        let pure = herzog_kuhl(&d);
        assert_eq!(pure.beta(0), int(1));
        assert_eq!(pure.diagram.codim().unwrap(), d.len_s(), "{d}");
    }
}

#[test]
fn totals_are_translation_invariant() {
    for d in all_sequences(4, 8) {
        let base = herzog_kuhl(&d).betti();
        for c in [-5, -1, 3, 7] {
            let moved = herzog_kuhl(&d.shift(c));
            assert_eq!(moved.betti(), base, "{d} shifted by {c}");
            assert_eq!(moved.diagram, herzog_kuhl(&d).diagram.shift(c));
        }
    }
}

#[test]
fn shaped_pure_diagrams_meet_the_rank_bound() {
    let mut shaped = 0;
    for d in all_sequences(6, 12) {
        if !d.pure_shape_check() {
            continue;
        }
        shaped += 1;
        let s = d.len_s();
        let betti = herzog_kuhl(&d).betti();
        let mut binom = int(1);
        for (j, b) in betti.iter().enumerate() {
            assert!(*b >= binom, "{d}: beta_{j} = {b} < {binom}");
            binom = binom * int((s - j) as i64) / int(j as i64 + 1);
        }
    }
    assert_eq!(shaped, 447);
}
