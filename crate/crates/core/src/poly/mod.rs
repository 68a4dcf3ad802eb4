//! Exact integer polynomial arithmetic, reciprocity and skew-reciprocity
//! predicates, and the coefficient-constraint checker for monic degree-2g
//! candidates.
//!
//! Coefficients are arbitrary-precision integers stored in ascending order
//! of power; the zero polynomial is the empty coefficient vector and every
//! nonzero polynomial keeps a nonzero last entry.

pub mod roots;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Exact sign of `p(a/b)` computed by scaled integer evaluation of
    /// `Σ c_k a^k b^(n-k)`; avoids building huge reduced rationals.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let n = self.coeffs.len() - 1;
        let a = x.numer();
        let b = x.denom();
        let mut a_pow = BigInt::one();
        let mut terms: Vec<BigInt> = Vec::with_capacity(n + 1);
        for c in &self.coeffs {
            terms.push(c * &a_pow);
            a_pow *= a;
        }
        let mut b_pow = BigInt::one();
        let mut acc = BigInt::zero();
        for term in terms.into_iter().rev() {
            acc += term * &b_pow;
            b_pow *= b;
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut k: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// `p(-t)`
    pub fn substitute_neg(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    /// gcd of the absolute coefficient values (zero polynomial -> 0).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content; sign of the leading coefficient is preserved.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Exact quotient over the integers, or `None` when `d` does not divide
    /// `self` in `Z[t]`.
    pub fn exact_quotient(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (dn, dl) = (d.degree().unwrap(), d.leading().unwrap().clone());
        let mut rem = self.coeffs.clone();
        if rem.len() - 1 < dn {
            return None;
        }
        let qn = rem.len() - 1 - dn;
        let mut q = vec![BigInt::zero(); qn + 1];
        for k in (0..=qn).rev() {
            let lead = rem[k + dn].clone();
            if lead.is_zero() {
                continue;
            }
            let (qc, r) = lead.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let prod = dc * &qc;
                rem[k + j] -= prod;
            }
            q[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Pseudo-remainder `r` with `m * self = s * d + r` for a positive
    /// integer `m`; `deg self >= deg d` is required.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero());
        let dn = d.degree().unwrap();
        let sn = match self.degree() {
            Some(n) if n >= dn => n,
            _ => return self.clone(),
        };
        let delta = (sn - dn + 1) as u32;
        let lc = d.leading().unwrap();
        let mult = num_traits::pow::pow(lc.clone(), delta as usize);
        let mut rem = self.mul_scalar(&mult).coeffs;
        for k in (dn..=sn).rev() {
            if k >= rem.len() || rem[k].is_zero() {
                continue;
            }
            let (qc, r) = rem[k].div_rem(lc);
            debug_assert!(r.is_zero(), "pseudo-remainder division must be exact");
            for (j, dc) in d.coeffs.iter().enumerate() {
                let prod = dc * &qc;
                rem[k - dn + j] -= prod;
            }
        }
        let mut out = IntPoly::from_coeffs(rem);
        // Keep the remainder a *positive* multiple of the true remainder so
        // Sturm sign patterns survive.
        if mult.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.normalize_sign().primitive_part();
        }
        if other.is_zero() {
            return self.normalize_sign().primitive_part();
        }
        let mut p = self.primitive_part();
        let mut q = other.primitive_part();
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = p.pseudo_rem(&q).primitive_part();
            p = q;
            q = r;
        }
        p.normalize_sign()
    }

    fn normalize_sign(&self) -> IntPoly {
        match self.leading() {
            Some(l) if l.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Product of the distinct irreducible factors, positive leading
    /// coefficient; content is dropped.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        if self.degree() == Some(0) {
            return IntPoly::one();
        }
        let pp = self.primitive_part().normalize_sign();
        let u = pp.gcd(&pp.derivative());
        if u.degree() == Some(0) {
            return pp;
        }
        pp.exact_quotient(&u)
            .expect("gcd divides its primitive argument")
            .normalize_sign()
    }

    /// Largest `k` such that the polynomial is a polynomial in `t^k`
    /// (gcd of the exponents carrying nonzero coefficients); 0 for constants.
    pub fn exponent_gcd(&self) -> usize {
        let mut g = 0usize;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 && !c.is_zero() {
                g = g.gcd(&k);
                if g == 1 {
                    break;
                }
            }
        }
        g
    }

    /// Comma-separated ascending coefficients, e.g. `-1,-1,0,0,0,-1,1`.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse(s: &str) -> Result<IntPoly> {
        let coeffs = s
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// Human-readable form for report text, highest power first.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push('t'),
                _ => {
                    out.push_str("t^");
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.pretty())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_coeff_string())
    }
}

fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// `t^n * p(1/t)`: coefficient of `t^k` in the result is the coefficient of
/// `t^(n-k)` in `p`.
pub fn reciprocal_transform(p: &IntPoly, n: usize) -> Result<IntPoly> {
    let deg = p.degree().unwrap_or(0);
    if !p.is_zero() && deg > n {
        return Err(Error::invalid(format!(
            "degree bound {n} below degree {deg}"
        )));
    }
    if p.is_zero() {
        return Ok(IntPoly::zero());
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, c) in p.coeffs().iter().enumerate() {
        coeffs[n - k] = c.clone();
    }
    Ok(IntPoly::from_coeffs(coeffs))
}

/// `t^deg(p) * p(-1/t)`.
pub fn skew_star(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::invalid("skew_star of the zero polynomial"));
    }
    let n = p.degree().unwrap();
    let coeffs = (0..=n)
        .map(|k| {
            let c = p.coeff(n - k);
            if (n - k) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Ok(IntPoly::from_coeffs(coeffs))
}

/// Root multiset invariant under `t -> -1/t`, i.e. `skew_star(p) = ±p`.
pub fn is_skew_reciprocal(p: &IntPoly) -> Result<bool> {
    let star = skew_star(p)?;
    Ok(star == *p || star == p.neg())
}

/// Root multiset invariant under `t -> 1/t`, i.e. the coefficient reversal
/// equals `±p`.
pub fn is_reciprocal(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::invalid("is_reciprocal of the zero polynomial"));
    }
    let rev = reciprocal_transform(p, p.degree().unwrap())?;
    Ok(rev == *p || rev == p.neg())
}

/// `d | p` over `Z[t]`.
pub fn divides(d: &IntPoly, p: &IntPoly) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::invalid("division by the zero polynomial"));
    }
    Ok(p.exact_quotient(d).is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstraintCase {
    #[serde(rename = "even-g/f(0)=1")]
    EvenGConstPos,
    #[serde(rename = "even-g/f(0)=-1")]
    EvenGConstNeg,
    #[serde(rename = "odd-g/f(0)=1")]
    OddGConstPos,
    #[serde(rename = "odd-g/f(0)=-1")]
    OddGConstNeg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairRelation {
    Equal,
    SignFlip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCheck {
    pub d: usize,
    pub relation: PairRelation,
    pub ok: bool,
}

/// Outcome of the coefficient-constraint classification for a monic
/// degree-2g polynomial with constant term ±1. The verdict agrees with
/// [`is_skew_reciprocal`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    pub case: ConstraintCase,
    pub checks: Vec<PairCheck>,
    pub middle_must_vanish: bool,
    pub verdict: bool,
}

/// Classify by the parity of `g` and the sign of `p(0)` and check, for each
/// `d < g`, the equal/sign-flip relation between the coefficients of `t^d`
/// and `t^(2g-d)`; when the case forces a vanishing middle coefficient that
/// check is appended as the `d = g` entry.
pub fn check_coefficient_constraints(p: &IntPoly, g: usize) -> Result<ConstraintReport> {
    if g == 0 {
        return Err(Error::invalid("g must be positive"));
    }
    if !p.is_monic() {
        return Err(Error::invalid("polynomial must be monic"));
    }
    if p.degree() != Some(2 * g) {
        return Err(Error::invalid(format!(
            "degree must be {} (got {:?})",
            2 * g,
            p.degree()
        )));
    }
    let f0 = p.constant_term();
    if !f0.abs().is_one() {
        return Err(Error::invalid("constant coefficient must be ±1"));
    }
    let const_pos = f0.is_positive();
    let case = match (g.is_multiple_of(2), const_pos) {
        (true, true) => ConstraintCase::EvenGConstPos,
        (true, false) => ConstraintCase::EvenGConstNeg,
        (false, true) => ConstraintCase::OddGConstPos,
        (false, false) => ConstraintCase::OddGConstNeg,
    };

    // Skew-reciprocity is exactly a_d = f(0) * (-1)^d * a_(2g-d) for all d.
    let relation_for = |d: usize| -> PairRelation {
        let sign = if d.is_multiple_of(2) { 1 } else { -1 } * if const_pos { 1 } else { -1 };
        if sign == 1 {
            PairRelation::Equal
        } else {
            PairRelation::SignFlip
        }
    };

    let mut checks = Vec::with_capacity(g + 1);
    for d in 0..g {
        let relation = relation_for(d);
        let lo = p.coeff(d);
        let hi = p.coeff(2 * g - d);
        let ok = match relation {
            PairRelation::Equal => lo == hi,
            PairRelation::SignFlip => lo == -hi,
        };
        checks.push(PairCheck { d, relation, ok });
    }
    let middle_must_vanish = relation_for(g) == PairRelation::SignFlip;
    if middle_must_vanish {
        checks.push(PairCheck {
            d: g,
            relation: PairRelation::SignFlip,
            ok: p.coeff(g).is_zero(),
        });
    }
    let verdict = checks.iter().all(|c| c.ok);
    Ok(ConstraintReport {
        case,
        checks,
        middle_must_vanish,
        verdict,
    })
}
