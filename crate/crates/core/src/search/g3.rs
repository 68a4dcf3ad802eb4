//! The dimension-six case analysis: 231 constrained candidates, the
//! modulus-window filter and the maximal-modulus filter, plus the eigenvalue
//! orbit / determinant bookkeeping for skew-reciprocal sextics.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::mu_poly;
use crate::parallel::ordered_map;
use crate::poly::roots::{
    isolate_real_roots, isolate_real_roots_in, isolate_square, largest_real_root_isolated,
    max_root_modulus, root_product_poly, roots_equal, square_transform, MaxRootModulus,
    RootBracket,
};
use crate::poly::{is_skew_reciprocal, IntPoly};
use crate::rat::rat;

/// One candidate `P(t) = t^6 + a t^5 + b t^4 + c t^3 - b t^2 + a t - 1`
/// from the constrained coefficient box `a ∈ {-2..0}`, `b ∈ {-8..2}`,
/// `c ∈ {-2a-3..-2a+3}` (231 in total).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct G3Candidate {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl G3Candidate {
    pub fn poly(&self) -> IntPoly {
        IntPoly::from_i64s(&[-1, self.a, -self.b, self.c, self.b, self.a, 1])
    }
}

/// The candidate box in lexicographic `(a, b, c)` order.
pub fn candidates() -> Vec<G3Candidate> {
    let mut out = Vec::with_capacity(231);
    for a in -2..=0 {
        for b in -8..=2 {
            for c in -2 * a - 3..=-2 * a + 3 {
                out.push(G3Candidate { a, b, c });
            }
        }
    }
    out
}

/// Real roots with modulus strictly between 1.41 and 1.42 (exact window
/// endpoints 141/100 and 142/100, both sign windows).
pub fn window_roots(p: &IntPoly) -> Result<Vec<crate::poly::roots::IsolatedRoot>> {
    let mut roots = isolate_real_roots_in(p, &rat(141, 100), &rat(142, 100))?;
    roots.extend(isolate_real_roots_in(p, &rat(-142, 100), &rat(-141, 100))?);
    Ok(roots)
}

/// Stage-1 predicate: some real root has modulus in the open window.
pub fn has_window_root(p: &IntPoly) -> Result<bool> {
    Ok(!window_roots(p)?.is_empty())
}

/// Stage-2 predicate: some window root is maximal in modulus among all
/// complex roots. Decided exactly: the squared window root (a root of the
/// square transform) must equal the largest real root of the composed
/// product, which is the squared maximal modulus.
pub fn window_root_is_maximal(p: &IntPoly) -> Result<bool> {
    let window = window_roots(p)?;
    if window.is_empty() {
        return Ok(false);
    }
    let p2 = root_product_poly(p)?;
    let msq = largest_real_root_isolated(&p2)?.expect("composed product has a positive real root");
    let gsq = square_transform(p)?;
    for root in &window {
        let sq = isolate_square(root, &gsq)?;
        if roots_equal(&sq, &msq)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct G3Entry {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub poly: String,
    /// Certified brackets for the window roots (of the squarefree part).
    pub window_roots: Vec<RootBracket>,
    /// Present for stage-1 survivors: certified maximal modulus data.
    pub max_modulus: Option<MaxRootModulus>,
    pub window_root_is_maximal: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct G3Report {
    pub total: usize,
    pub stage1_count: usize,
    pub stage2_count: usize,
    pub stage1: Vec<G3Entry>,
    pub survivor: Option<String>,
}

/// Run the full pipeline and check the stage counts 231 -> 3 -> 1; the
/// unique survivor must be `t^6 - t^5 - t - 1`.
pub fn g3_case_enumeration() -> Result<G3Report> {
    let cands = candidates();
    let total = cands.len();
    if total != 231 {
        return Err(Error::verification(
            "g3 candidate box",
            format!("expected 231 candidates, generated {total}"),
        ));
    }

    let window_flags = ordered_map(&cands, |c| has_window_root(&c.poly()));
    let mut stage1: Vec<&G3Candidate> = Vec::new();
    for (cand, flag) in cands.iter().zip(window_flags) {
        if flag? {
            stage1.push(cand);
        }
    }

    let mut entries = Vec::new();
    let mut stage2 = Vec::new();
    for cand in &stage1 {
        let p = cand.poly();
        let tol = rat(1, 1_000_000_000);
        let window: Vec<RootBracket> = window_roots(&p)?
            .into_iter()
            .map(|mut r| {
                r.refine_to(&tol);
                r.to_bracket()
            })
            .collect();
        let maximal = window_root_is_maximal(&p)?;
        let modulus = max_root_modulus(&p, &tol)?;
        entries.push(G3Entry {
            a: cand.a,
            b: cand.b,
            c: cand.c,
            poly: p.to_coeff_string(),
            window_roots: window,
            max_modulus: Some(modulus),
            window_root_is_maximal: Some(maximal),
        });
        if maximal {
            stage2.push(cand.poly());
        }
    }

    if stage1.len() != 3 {
        return Err(Error::verification(
            "g3 stage 1",
            format!(
                "expected 3 window survivors, found {}: {:?}",
                stage1.len(),
                stage1.iter().map(|c| (c.a, c.b, c.c)).collect::<Vec<_>>()
            ),
        ));
    }
    if stage2.len() != 1 {
        return Err(Error::verification(
            "g3 stage 2",
            format!(
                "expected a unique maximal-modulus survivor, found {}: {:?}",
                stage2.len(),
                stage2
                    .iter()
                    .map(|p| p.to_coeff_string())
                    .collect::<Vec<_>>()
            ),
        ));
    }
    let survivor = stage2.pop().unwrap();
    let expected = mu_poly(3)?;
    if survivor != expected {
        return Err(Error::verification(
            "g3 stage 2",
            format!(
                "survivor {} differs from {}",
                survivor.to_coeff_string(),
                expected.to_coeff_string()
            ),
        ));
    }
    Ok(G3Report {
        total,
        stage1_count: entries.len(),
        stage2_count: 1,
        stage1: entries,
        survivor: Some(survivor.to_coeff_string()),
    })
}

/// Eigenvalue orbit summary for a monic skew-reciprocal sextic: real roots
/// pair as `{λ, -1/λ}` (each pair contributes -1 to the determinant),
/// `±i` pairs contribute +1, and the remaining non-real quadruples
/// `{λ, -1/λ, conj λ, -conj(1/λ)}` contribute +1. The determinant must come
/// out equal to `p(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub real_pairs: usize,
    pub imaginary_pairs: usize,
    pub quadruples: usize,
    pub determinant: i64,
}

fn real_root_count_with_multiplicity(p: &IntPoly) -> Result<usize> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(0);
    }
    let distinct = isolate_real_roots(p)?.len();
    let pp = p.primitive_part();
    let u = pp.gcd(&pp.derivative());
    if u.degree().unwrap_or(0) >= 1 {
        Ok(distinct + real_root_count_with_multiplicity(&u)?)
    } else {
        Ok(distinct)
    }
}

pub fn g3_determinant_analysis(p: &IntPoly) -> Result<OrbitSummary> {
    if p.degree() != Some(6) || !p.is_monic() {
        return Err(Error::invalid("orbit analysis expects a monic sextic"));
    }
    if !is_skew_reciprocal(p)? {
        return Err(Error::invalid(
            "orbit analysis expects a skew-reciprocal polynomial",
        ));
    }
    // Multiplicity of the (t^2 + 1) factor.
    let i_factor = IntPoly::from_i64s(&[1, 0, 1]);
    let mut imaginary_pairs = 0usize;
    let mut rest = p.clone();
    while let Some(q) = rest.exact_quotient(&i_factor) {
        imaginary_pairs += 1;
        rest = q;
    }
    let real = real_root_count_with_multiplicity(p)?;
    if real % 2 != 0 {
        return Err(Error::verification(
            "orbit analysis",
            format!("odd number of real roots ({real}) cannot pair under t -> -1/t"),
        ));
    }
    let real_pairs = real / 2;
    let remaining = 6usize
        .checked_sub(2 * real_pairs + 2 * imaginary_pairs)
        .ok_or_else(|| Error::verification("orbit analysis", "orbit sizes exceed the degree"))?;
    if remaining % 4 != 0 {
        return Err(Error::verification(
            "orbit analysis",
            format!("non-real non-i roots ({remaining}) do not split into quadruples"),
        ));
    }
    let quadruples = remaining / 4;
    let determinant = if real_pairs % 2 == 0 { 1 } else { -1 };
    let constant = p.constant_term();
    let expected = if constant.is_negative() { -1 } else { 1 };
    if determinant != expected {
        return Err(Error::verification(
            "orbit analysis",
            format!("orbit determinant {determinant} differs from p(0) = {constant}"),
        ));
    }
    Ok(OrbitSummary {
        real_pairs,
        imaginary_pairs,
        quadruples,
        determinant,
    })
}
