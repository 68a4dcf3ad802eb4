//! Enumeration and verification pipelines: the constrained candidate
//! enumerator, the dimension-six case analysis, minimality verification over
//! the classification shapes, monotonicity checks and normalized-sequence
//! tables.

pub mod g3;
pub mod minimality;
pub mod sequences;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{check_coefficient_constraints, IntPoly};

/// All monic degree-`2g` skew-reciprocal polynomials with constant term ±1,
/// coefficients bounded by `coeff_bound` in absolute value, and at most
/// `support_bound` nonzero non-leading coefficients, in lexicographic order
/// of their ascending coefficient vectors.
///
/// Only the free half of the coefficients is enumerated; the mirror half is
/// determined by the skew-reciprocity relation `a_d = f(0) (-1)^d a_(2g-d)`.
pub fn enumerate_skew_reciprocal(
    g: usize,
    coeff_bound: u32,
    support_bound: Option<usize>,
) -> Result<Vec<IntPoly>> {
    if g < 1 {
        return Err(Error::invalid("need g >= 1"));
    }
    if coeff_bound == 0 || coeff_bound > 10 {
        return Err(Error::invalid("coefficient bound must be in 1..=10"));
    }
    let bound = coeff_bound as i64;
    let mut out = Vec::new();
    for &a0 in &[-1i64, 1] {
        // a_g is free exactly when f(0) * (-1)^g = 1.
        let sign = |d: usize| -> i64 { a0 * if d.is_multiple_of(2) { 1 } else { -1 } };
        let middle_free = sign(g) == 1;
        let free = g - 1;
        let mut counter = vec![0i64; free];
        loop {
            let middles: Vec<i64> = if middle_free {
                (-bound..=bound).collect()
            } else {
                vec![0]
            };
            for &ag in &middles {
                let mut coeffs = vec![0i64; 2 * g + 1];
                coeffs[0] = a0;
                coeffs[2 * g] = 1;
                coeffs[g] = ag;
                for d in 1..g {
                    let v = counter[d - 1] - bound;
                    coeffs[d] = v;
                    coeffs[2 * g - d] = sign(d) * v;
                }
                if let Some(sb) = support_bound {
                    let nonzero = coeffs[..2 * g].iter().filter(|&&c| c != 0).count();
                    if nonzero > sb {
                        continue;
                    }
                }
                let p = IntPoly::from_i64s(&coeffs);
                debug_assert!(check_coefficient_constraints(&p, g)
                    .map(|r| r.verdict)
                    .unwrap_or(false));
                out.push(p);
            }
            let mut i = 0;
            while i < free {
                counter[i] += 1;
                if counter[i] <= 2 * bound {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
            if free == 0 || i == free {
                break;
            }
        }
    }
    out.sort_by(|a, b| cmp_coeff_vectors(a, b, 2 * g));
    out.dedup();
    Ok(out)
}

fn cmp_coeff_vectors(a: &IntPoly, b: &IntPoly, deg: usize) -> std::cmp::Ordering {
    for k in 0..=deg {
        let (ca, cb) = (a.coeff(k), b.coeff(k));
        match ca.cmp(&cb) {
            std::cmp::Ordering::Equal => {}
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

pub fn max_abs_coeff(p: &IntPoly) -> BigInt {
    p.coeffs()
        .iter()
        .map(num_traits::Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::is_skew_reciprocal;

    #[test]
    fn degree_two_enumeration() {
        let polys = enumerate_skew_reciprocal(1, 1, None).unwrap();
        let expect: Vec<IntPoly> = [
            vec![-1i64, -1, 1], // t^2 - t - 1
            vec![-1, 0, 1],     // t^2 - 1
            vec![-1, 1, 1],     // t^2 + t - 1
            vec![1, 0, 1],      // t^2 + 1
        ]
        .iter()
        .map(|c| IntPoly::from_i64s(c))
        .collect();
        let mut sorted = expect.clone();
        sorted.sort_by(|a, b| cmp_coeff_vectors(a, b, 2));
        assert_eq!(polys, sorted);
        for p in &polys {
            assert!(is_skew_reciprocal(p).unwrap());
        }
    }

    #[test]
    fn degree_four_support_bound() {
        let polys = enumerate_skew_reciprocal(2, 1, Some(3)).unwrap();
        let a = IntPoly::from_i64s(&[-1, -1, 0, -1, 1]); // t^4 - t^3 - t - 1
        let b = IntPoly::from_i64s(&[-1, 1, 0, 1, 1]); // t^4 + t^3 + t - 1
        assert!(polys.contains(&a));
        assert!(polys.contains(&b));
        for p in &polys {
            assert!(is_skew_reciprocal(p).unwrap());
            let nonzero = (0..4).filter(|&k| !p.coeff(k).is_zero()).count();
            assert!(nonzero <= 3);
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_skew_reciprocal(2, 2, None).unwrap();
        let b = enumerate_skew_reciprocal(2, 2, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_arguments() {
        assert!(enumerate_skew_reciprocal(0, 1, None).is_err());
        assert!(enumerate_skew_reciprocal(2, 0, None).is_err());
        assert!(enumerate_skew_reciprocal(2, 11, None).is_err());
    }
}
