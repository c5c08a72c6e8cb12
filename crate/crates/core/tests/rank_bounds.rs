use betti_core::beh::{beh_check, end_to_end, enumerate_sequences, scan, shape_hypothesis, ScanMode};
use betti_core::decomposition::decompose;
use betti_core::monomial::{standard_corpus, taylor_betti};
use betti_core::rational::{binomial, int, ratio, Rational};
use betti_core::{herzog_kuhl, BettiDiagram, DegreeSequence};

#[test]
fn shape_hypothesis_examples() {
    let koszul = herzog_kuhl(&DegreeSequence::koszul(3)).diagram;
    assert!(shape_hypothesis(&koszul).unwrap());
    let square = BettiDiagram::from_ints(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)]);
    assert!(shape_hypothesis(&square).unwrap());
    assert!(beh_check(&square, Some(2)).unwrap().overall);
    let generic = BettiDiagram::from_ints(&[(0, 0, 2), (1, 1, 3), (2, 3, 1)]);
    assert!(!shape_hypothesis(&generic).unwrap());
}

#[test]
fn koszul_meets_every_bound_with_equality() {
    for n in 1..=6 {
        let report = beh_check(&herzog_kuhl(&DegreeSequence::koszul(n)).diagram, None).unwrap();
        assert!(report.overall && report.equality, "n = {n}");
    }
}

#[test]
fn bounds_add_up_over_decompositions() {
    for (name, ideal) in standard_corpus() {
        let d = taylor_betti(&ideal).unwrap();
        let c = d.codim().unwrap();
        let dec = decompose(&d).unwrap();
        let weight: Rational = dec.terms.iter().map(|t| t.coefficient.clone()).sum();
        assert_eq!(weight, d.total_betti(0), "{name}");
        let terms_bounded = dec.terms.iter().all(|t| {
            let s = t.degrees.len_s();
            let betti = herzog_kuhl(&t.degrees).betti();
            s >= c && (0..=s).all(|j| betti[j] >= binomial(s, j))
        });
        if terms_bounded {
            for j in 0..=c {
                assert!(d.total_betti(j) >= &weight * binomial(c, j), "{name}, j = {j}");
            }
        }
    }
}

#[test]
fn end_to_end_on_the_corpus() {
    for (name, ideal) in standard_corpus() {
        let d = taylor_betti(&ideal).unwrap();
        let run = end_to_end(&d).unwrap();
        if run.hypothesis_met {
            assert!(run.summands_shaped, "{name}");
            assert!(run.summands_bounded, "{name}");
            assert!(run.report.overall, "{name}: {}", run.report);
        }
    }
}

#[test]
fn shifted_inputs_are_translated() {
    let d = BettiDiagram::from_ints(&[(0, 3, 1), (1, 5, 3), (2, 6, 2)]);
    let report = beh_check(&d, None).unwrap();
    assert_eq!(report.shift, -3);
    assert!(report.hypothesis_met && report.overall);
}

#[test]
fn enumeration_is_complete_and_sorted() {
    for s in 1..=5 {
        let seqs = enumerate_sequences(s, 9);
        // choose d_1 < ... < d_s from 1..=9
        assert_eq!(int(seqs.len() as i64), binomial(9, s));
        assert!(seqs.windows(2).all(|w| w[0].degrees() < w[1].degrees()));
    }
}

#[test]
fn scans_are_reproducible() {
    for mode in [ScanMode::ShapeVerify, ScanMode::FindViolations, ScanMode::IntegralViolations] {
        let a = scan(1..=5, 10, mode).unwrap();
        let b = scan(1..=5, 10, mode).unwrap();
        assert_eq!(a, b);
        assert!(a.rows.windows(2).all(|w| w[0].degrees.degrees() < w[1].degrees.degrees()));
    }
}

#[test]
fn half_integral_violator_is_caught_at_its_integral_multiple() {
    let target = [0, 1, 2, 3, 5, 6];
    let raw = scan(5..=5, 8, ScanMode::FindViolations).unwrap();
    let row = raw.rows.iter().find(|r| r.degrees.degrees() == target).unwrap();
    assert_eq!(row.totals[1], ratio(9, 2));
    assert_eq!(row.first_violating_j, Some(1));

    let integral = scan(5..=5, 8, ScanMode::IntegralViolations).unwrap();
    let row = integral.rows.iter().find(|r| r.degrees.degrees() == target).unwrap();
    assert_eq!(row.multiple, int(2));
    let expected: Vec<Rational> = [2, 9, 15, 10, 3, 1].iter().map(|&x| int(x)).collect();
    assert_eq!(row.totals, expected);
}

#[test]
fn shaped_scan_has_no_violations() {
    let report = scan(1..=6, 12, ScanMode::ShapeVerify).unwrap();
    assert_eq!(report.sequences, 2509);
    assert_eq!(report.violations, 0);
}
