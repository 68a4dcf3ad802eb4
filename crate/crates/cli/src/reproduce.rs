//! The single acceptance entry point: run every claim in a fixed order and
//! print one PASS/FAIL line per claim.

use skewrec_core::digraph::{duality_batch_check, duality_check};
use skewrec_core::error::{Error, Result};
use skewrec_core::families::{lambda_poly, mu_poly};
use skewrec_core::matrix::{companion, is_irreducible, primitivity};
use skewrec_core::poly::{check_coefficient_constraints, is_skew_reciprocal, IntPoly};
use skewrec_core::search::g3::g3_case_enumeration;
use skewrec_core::search::minimality::{verify_minimum, Mode};
use skewrec_core::search::sequences::{
    comparison_verdicts, limit_check, monotonicity_check, sequence_table,
};

use crate::{RunError, RunResult};

pub const DUALITY_SEED: u64 = 0x5EED_0001;

type Claim = (&'static str, Box<dyn Fn() -> Result<String>>);

fn claim_duality() -> Result<String> {
    let batch = duality_batch_check(500, 6, DUALITY_SEED)?;
    let mut families = 0;
    for g in 1..=8 {
        for poly in [
            Some(lambda_poly(g)?),
            (g >= 2).then(|| mu_poly(g)).transpose()?,
        ]
        .into_iter()
        .flatten()
        {
            let c = companion(&poly)?;
            if !duality_check(&c)? {
                return Err(Error::verification(
                    "duality",
                    format!("family companion for {} fails", poly.to_coeff_string()),
                ));
            }
            families += 1;
        }
    }
    Ok(format!(
        "{} random matrices (seed {:#x}) + {} family companions",
        batch.checked, batch.seed, families
    ))
}

fn claim_constraints() -> Result<String> {
    let mut checked = 0usize;
    for g in 1..=3usize {
        let free = 2 * g - 1;
        let mut counter = vec![0i64; free];
        loop {
            for c0 in [-1i64, 1] {
                let mut coeffs = vec![c0];
                coeffs.extend(counter.iter().map(|&v| v - 2));
                coeffs.push(1);
                let p = IntPoly::from_i64s(&coeffs);
                let verdict = check_coefficient_constraints(&p, g)?.verdict;
                let predicate = is_skew_reciprocal(&p)?;
                if verdict != predicate {
                    return Err(Error::verification(
                        "constraints",
                        format!(
                            "checker says {verdict}, functional identity says {predicate} for {}",
                            p.to_coeff_string()
                        ),
                    ));
                }
                checked += 1;
            }
            let mut i = 0;
            while i < free {
                counter[i] += 1;
                if counter[i] < 5 {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if i == free {
                break;
            }
        }
    }
    Ok(format!("{checked} monic candidates, degrees 2/4/6"))
}

fn claim_realizability() -> Result<String> {
    for g in 1..=8usize {
        let lam = companion(&lambda_poly(g)?)?;
        if !lam.is_nonnegative() || !is_irreducible(&lam)? {
            return Err(Error::verification(
                "realizability",
                format!("lambda companion at g={g} not nonnegative irreducible"),
            ));
        }
        let pr = primitivity(&lam)?;
        if g % 2 == 1 && g > 1
            && (pr.is_primitive || pr.cycle_gcd != Some(g)) {
                return Err(Error::verification(
                    "realizability",
                    format!("lambda companion at odd g={g} should have cycle gcd {g}"),
                ));
            }
        if g >= 2 {
            let mu = companion(&mu_poly(g)?)?;
            let pr = primitivity(&mu)?;
            if !pr.is_primitive || pr.wielandt_exponent.is_none() {
                return Err(Error::verification(
                    "realizability",
                    format!("mu companion at g={g} should be primitive"),
                ));
            }
        }
    }
    Ok("lambda and mu companions, g <= 8".into())
}

fn claim_minimality(mode: Mode) -> Result<String> {
    let mut ties = Vec::new();
    for g in 1..=8usize {
        let report = verify_minimum(g, mode)?;
        let expected = match (mode, g) {
            (Mode::Irreducible, 2) => 2,
            _ => 1,
        };
        if report.minimizers.len() != expected {
            return Err(Error::verification(
                "minimality",
                format!(
                    "g={g} {mode}: expected {expected} minimizers, found {:?}",
                    report.minimizers
                ),
            ));
        }
        if expected == 2 {
            ties.push(format!("g={g}: {}", report.minimizers.join(" and ")));
        }
    }
    Ok(if ties.is_empty() {
        "unique minimizer for every g <= 8".into()
    } else {
        format!("minimums confirmed; ties: {}", ties.join("; "))
    })
}

fn claim_monotonicity() -> Result<String> {
    for g in 2..=8 {
        monotonicity_check(g)?;
    }
    Ok("strict growth in d for g = 2..8".into())
}

fn claim_g3() -> Result<String> {
    let r = g3_case_enumeration()?;
    Ok(format!(
        "{} -> {} -> {}; survivor {}",
        r.total,
        r.stage1_count,
        r.stage2_count,
        r.survivor.unwrap_or_default()
    ))
}

fn claim_sequences() -> Result<String> {
    let table = sequence_table(30)?;
    comparison_verdicts(12)?;
    limit_check(30)?;
    limit_check(31)?;
    Ok(format!(
        "table to g=30, comparisons to g=12, limits at g=30/31; g2 = phi^4: {}",
        table.g2_equals_phi_fourth == Some(true)
    ))
}

pub fn run() -> RunResult {
    let claims: Vec<Claim> = vec![
        ("duality oracle", Box::new(claim_duality)),
        ("coefficient constraints", Box::new(claim_constraints)),
        ("family realizability", Box::new(claim_realizability)),
        (
            "minimality (irreducible)",
            Box::new(|| claim_minimality(Mode::Irreducible)),
        ),
        (
            "minimality (primitive)",
            Box::new(|| claim_minimality(Mode::Primitive)),
        ),
        ("monotonicity in d", Box::new(claim_monotonicity)),
        ("dimension-six enumeration", Box::new(claim_g3)),
        ("normalized sequences and limits", Box::new(claim_sequences)),
    ];
    let total = claims.len();
    let mut out = String::new();
    let mut failures = Vec::new();
    for (i, (name, claim)) in claims.iter().enumerate() {
        match claim() {
            Ok(detail) => {
                out.push_str(&format!("[{}/{}] {name}: PASS ({detail})\n", i + 1, total));
            }
            Err(e) => {
                out.push_str(&format!("[{}/{}] {name}: FAIL ({e})\n", i + 1, total));
                failures.push(name.to_string());
            }
        }
    }
    if failures.is_empty() {
        out.push_str("all claims pass\n");
        Ok(out)
    } else {
        out.push_str(&format!("{} claim(s) failed\n", failures.len()));
        Err(RunError::Failure(
            out,
            Error::verification("reproduce-paper", failures.join(", ")),
        ))
    }
}
