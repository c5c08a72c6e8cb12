//! Target-independent implementations behind the wasm exports, so they can
//! be tested natively.

use betti_core::asymptotics::{self, AsymptoticParams};
use betti_core::beh::{beh_check, pure_beh_check, shape_hypothesis};
use betti_core::decomposition::{decompose, recompose, validate_bounds};
use betti_core::monomial::{corpus, taylor_betti};
use betti_core::rational::{self, Rational};
use betti_core::{herzog_kuhl, BettiDiagram, DegreeSequence};
use serde_json::{json, Value};

/// Upper bound on `t_max` for the plot.
pub const MAX_T: u32 = 200;

fn parse_degrees(text: &str) -> Result<DegreeSequence, String> {
    let degrees = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| format!("not an integer: {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    DegreeSequence::new(degrees).map_err(|e| e.to_string())
}

fn numbers(values: &[Rational]) -> Value {
    json!({
        "exact": values.iter().map(rational::format).collect::<Vec<_>>(),
        "approx": values.iter().map(rational::to_f64).collect::<Vec<_>>(),
    })
}

/// `"0,1,2,4"` -> table, column totals and the rank-bound report.
pub fn pure_diagram(degrees: &str) -> Result<String, String> {
    let d = parse_degrees(degrees)?;
    let pure = herzog_kuhl(&d);
    let report = pure_beh_check(&d);
    Ok(json!({
        "degrees": d.degrees(),
        "gaps": d.gaps().coords().iter().map(rational::format).collect::<Vec<_>>(),
        "table": pure.diagram.render_table(),
        "betti": numbers(&pure.betti()),
        "shape": d.pure_shape_check(),
        "report": report,
    })
    .to_string())
}

/// Diagram JSON, or a monomial family such as `power-of-maximal(3,2)`.
fn read_diagram(input: &str) -> Result<BettiDiagram, String> {
    let input = input.trim();
    if input.starts_with('{') {
        BettiDiagram::parse_json(input).map_err(|e| e.to_string())
    } else {
        let ideal = corpus(input).map_err(|e| e.to_string())?;
        taylor_betti(&ideal).map_err(|e| e.to_string())
    }
}

pub fn decompose_diagram(input: &str) -> Result<String, String> {
    let d = read_diagram(input)?;
    let dec = decompose(&d).map_err(|e| e.to_string())?;
    debug_assert_eq!(recompose(&dec), d);
    let bounds = validate_bounds(&dec, &d).map_err(|e| e.to_string())?;
    let report = beh_check(&d, None).map_err(|e| e.to_string())?;
    let terms: Vec<Value> = dec
        .terms
        .iter()
        .map(|t| {
            json!({
                "coefficient": rational::format(&t.coefficient),
                "weight": rational::to_f64(&t.coefficient),
                "degrees": t.degrees.degrees(),
                "shape": t.degrees.pure_shape_check(),
                "table": herzog_kuhl(&t.degrees).diagram.render_table(),
            })
        })
        .collect();
    Ok(json!({
        "table": d.render_table(),
        "terms": terms,
        "bounds_ok": bounds.passed(),
        "shape_hypothesis": shape_hypothesis(&d).ok(),
        "report": report,
    })
    .to_string())
}

/// Leading term, exact bound and `b_j` at the extremal gap vector for
/// `t = 1..=t_max`.
pub fn asymptotic_curve(
    codim: u32,
    delta: u32,
    defect: u32,
    j: u32,
    t_max: u32,
) -> Result<String, String> {
    if !(1..=MAX_T).contains(&t_max) {
        return Err(format!("t_max must lie in 1..={MAX_T}"));
    }
    let p = AsymptoticParams {
        codim,
        delta,
        defect,
        j,
        t: 1,
    };
    p.validate().map_err(|e| e.to_string())?;
    let tail = asymptotics::extremal_tail(&p, codim as usize);
    let mut rows = Vec::new();
    for t in 1..=t_max {
        let cmp = asymptotics::bound_vs_pure(&p.with_t(t), &tail).map_err(|e| e.to_string())?;
        let f = |s: &str| rational::parse(s).map(|r| rational::to_f64(&r)).unwrap_or(f64::NAN);
        rows.push(json!({
            "t": t,
            "leading": cmp.leading,
            "exact": cmp.exact_bound,
            "pure": cmp.b_j,
            "leading_f": f(&cmp.leading),
            "exact_f": f(&cmp.exact_bound),
            "pure_f": f(&cmp.b_j),
        }));
    }
    let coeff = asymptotics::leading_coefficient(&p).map_err(|e| e.to_string())?;
    Ok(json!({
        "leading_coefficient": rational::format(&coeff),
        "gaps_tail": tail,
        "rows": rows,
    })
    .to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn pure_explorer() {
        let v = parse(&pure_diagram("0,1,2,4").unwrap());
        assert_eq!(v["betti"]["exact"], json!(["1", "8/3", "2", "1/3"]));
        assert_eq!(v["shape"], false);
        assert_eq!(v["report"]["overall"], false);
        assert!(pure_diagram("0,2,1").is_err());
        assert!(pure_diagram("0,x").is_err());
    }

    #[test]
    fn decomposition_pane() {
        let v = parse(&decompose_diagram("power-of-maximal(2,2)").unwrap());
        assert_eq!(v["terms"][0]["degrees"], json!([0, 2, 3]));
        assert_eq!(v["bounds_ok"], true);
        let text = r#"{"entries":[{"i":0,"j":0,"value":"1"},{"i":1,"j":2,"value":"2"},{"i":2,"j":3,"value":"1"}]}"#;
        let v = parse(&decompose_diagram(text).unwrap());
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        assert_eq!(v["terms"][1]["coefficient"], "1/2");
        assert!(decompose_diagram("bogus").is_err());
    }

    #[test]
    fn asymptotic_plot() {
        let v = parse(&asymptotic_curve(2, 2, 0, 1, 5).unwrap());
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0]["exact"], "4");
        assert_eq!(rows[0]["leading"], "2");
        assert_eq!(v["leading_coefficient"], "2");
        assert!(asymptotic_curve(2, 2, 0, 3, 5).is_err());
        assert!(asymptotic_curve(2, 2, 0, 1, 0).is_err());
    }
}
