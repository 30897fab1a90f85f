//! Fast internal checks run by `freebraid selftest`.

use crate::geometry::{compile, full_twist_program, pure_braid_generator_program};
use crate::group::{bounded_equal, EqualityVerdict, GWord, GenTriple};
use crate::index::{action_consistency, relation_census, Lemma};
use crate::reconstruction::{kernel_witness, KernelVerdict};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, body: impl FnOnce() -> Result<(bool, String), String>) -> CheckResult {
    match body() {
        Ok((passed, detail)) => CheckResult {
            name,
            passed,
            detail,
        },
        Err(detail) => CheckResult {
            name,
            passed: false,
            detail,
        },
    }
}

fn good_set(side: &[(GenTriple, crate::index::LetterStatus)]) -> Vec<GenTriple> {
    let mut v: Vec<GenTriple> = side
        .iter()
        .filter(|(_, s)| s.is_good())
        .map(|(g, _)| *g)
        .collect();
    v.sort();
    v
}

pub fn run_all() -> Vec<CheckResult> {
    vec![
        check("square census n=4", || {
            let r = relation_census(4, Lemma::Square).map_err(|e| e.to_string())?;
            Ok((r.violation_count() == 0, r.summary()))
        }),
        check("commute census n=5", || {
            let r = relation_census(5, Lemma::Commute).map_err(|e| e.to_string())?;
            Ok((r.violation_count() == 0, r.summary()))
        }),
        check("action n=4,5", || {
            let mut detail = Vec::new();
            let mut ok = true;
            for n in [4, 5] {
                let (checked, bad) = action_consistency(n).map_err(|e| e.to_string())?;
                ok &= bad == 0;
                detail.push(format!("n={n}: {checked} cases, {bad} violations"));
            }
            Ok((ok, detail.join("; ")))
        }),
        // The {0,1,4} count condition is reported, not checked: see the census output.
        check("tetra census sides agree", || {
            let r = relation_census(4, Lemma::Tetra).map_err(|e| e.to_string())?;
            let agree = r
                .rows
                .iter()
                .all(|row| good_set(&row.lhs) == good_set(&row.rhs));
            Ok((agree, r.summary()))
        }),
        check("full twists emit no letters", || {
            for m in [1, 2, 3] {
                let out = compile(&full_twist_program(4, m).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                if !out.word.is_empty() {
                    return Ok((false, format!("m={m}: {}", out.word)));
                }
            }
            Ok((true, String::from("m = 1, 2, 3")))
        }),
        check("kernel witness A13", || {
            let p = pure_braid_generator_program(4, 1, 3).map_err(|e| e.to_string())?;
            let w = compile(&p).map_err(|e| e.to_string())?.word;
            let v = kernel_witness(&w).map_err(|e| e.to_string())?;
            let empty =
                kernel_witness(&GWord::empty(4).expect("n = 4")).map_err(|e| e.to_string())?;
            let ok = matches!(v, KernelVerdict::NontrivialByLinking { .. })
                && empty == KernelVerdict::TrivialConsistent;
            Ok((ok, format!("{v}; empty: {empty}")))
        }),
        check("tetrahedron equality", || {
            let a = GWord::parse("a123 a124 a134 a234", 4).map_err(|e| e.to_string())?;
            let b = GWord::parse("a234 a134 a124 a123", 4).map_err(|e| e.to_string())?;
            let v = bounded_equal(&a, &b, 1000, 8).map_err(|e| e.to_string())?;
            Ok((matches!(v, EqualityVerdict::Equal(_)), v.to_string()))
        }),
    ]
}
