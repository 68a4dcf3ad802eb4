//! Certified real-root isolation and exact root comparisons.
//!
//! Everything here is sign-change or Sturm-count based on exact rational
//! arithmetic; floating point is never trusted. The maximal root modulus is
//! decided through the composed-product polynomial whose roots are all
//! pairwise products of the input's roots: its largest real root is exactly
//! the squared maximal modulus.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

/// Sturm chain of the squarefree part of a polynomial.
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::invalid("Sturm chain of the zero polynomial"));
        }
        let f0 = p.squarefree_part();
        let mut chain = vec![f0.clone()];
        if f0.degree() > Some(0) {
            let mut prev = f0.clone();
            let mut cur = f0.derivative();
            chain.push(cur.clone());
            while cur.degree() > Some(0) {
                // pseudo_rem keeps the remainder a positive multiple of the
                // rational remainder, so negation preserves the chain's sign
                // semantics; the primitive part only rescales positively.
                let next = prev.pseudo_rem(&cur).primitive_part().neg();
                if next.is_zero() {
                    break;
                }
                prev = cur;
                cur = next;
                chain.push(cur.clone());
            }
        }
        Ok(SturmChain { chain })
    }

    pub fn squarefree(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut count = 0;
        let mut last = 0;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|f| f.sign_at(x)))
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`;
    /// requires both endpoints to be non-roots.
    pub fn count_in(&self, lo: &BigRational, hi: &BigRational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::invalid("degenerate interval"));
        }
        if self.squarefree().sign_at(lo) == 0 || self.squarefree().sign_at(hi) == 0 {
            return Err(Error::invalid("interval endpoint is a root"));
        }
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        Ok(a.saturating_sub(b))
    }
}

/// Rational bound `B` with every real root of `p` inside `(-B, B)` and
/// `p(±B) != 0`.
pub fn root_bound(p: &IntPoly) -> BigRational {
    let f = p.squarefree_part();
    if f.degree().unwrap_or(0) == 0 {
        return BigRational::one();
    }
    let lead = f.leading().unwrap().abs();
    let max = f
        .coeffs()
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    // 1 + ceil(max|c_i| / |lc|) strictly exceeds the Cauchy bound.
    let mut b = BigRational::from_integer(BigInt::from(2) + (&max + &lead - BigInt::one()) / &lead);
    loop {
        let nb = -&b;
        if f.sign_at(&b) != 0 && f.sign_at(&nb) != 0 {
            return b;
        }
        b += BigRational::one();
    }
}

/// An isolating interval for one real root of a squarefree polynomial.
/// Invariants: the open interval `(lo, hi)` contains exactly one root of
/// `poly`, and neither endpoint is a root; consequently `poly` changes sign
/// across the interval.
#[derive(Clone, Debug)]
pub struct IsolatedRoot {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

impl IsolatedRoot {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / two()
    }

    pub fn refine_step(&mut self) {
        let mid = self.midpoint();
        let s = self.poly.sign_at(&mid);
        if s == 0 {
            // The midpoint is the root itself; shrink symmetrically.
            let mut delta = self.width() / BigRational::from_integer(BigInt::from(8));
            loop {
                let lo = &mid - &delta;
                let hi = &mid + &delta;
                if lo > self.lo && hi < self.hi {
                    self.lo = lo;
                    self.hi = hi;
                    return;
                }
                delta /= two();
            }
        }
        if s == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to(&mut self, tol: &BigRational) {
        while self.width() > *tol {
            self.refine_step();
        }
    }

    /// Exact comparison against a rational point.
    pub fn cmp_rational(&mut self, x: &BigRational) -> Ordering {
        if self.poly.sign_at(x) == 0 && *x > self.lo && *x < self.hi {
            return Ordering::Equal;
        }
        loop {
            if self.hi <= *x {
                return Ordering::Less;
            }
            if self.lo >= *x {
                return Ordering::Greater;
            }
            self.refine_step();
        }
    }

    /// Interval for the `k`-th power; requires a nonnegative lower endpoint
    /// (refine first for positive roots).
    pub fn pow_interval(&self, k: usize) -> (BigRational, BigRational) {
        assert!(
            !self.lo.is_negative(),
            "pow_interval needs a nonnegative bracket"
        );
        (
            crate::rat::rat_pow(&self.lo, k),
            crate::rat::rat_pow(&self.hi, k),
        )
    }

    pub fn to_bracket(&self) -> RootBracket {
        RootBracket {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            sign_lo: self.poly.sign_at(&self.lo),
            sign_hi: self.poly.sign_at(&self.hi),
        }
    }

    pub fn to_f64(&self) -> f64 {
        crate::rat::to_f64(&self.midpoint())
    }
}

/// A certified bracket around a real root: the isolation polynomial has the
/// recorded (opposite) signs at the two rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBracket {
    #[serde(with = "crate::rat::serde_rational")]
    pub lo: BigRational,
    #[serde(with = "crate::rat::serde_rational")]
    pub hi: BigRational,
    pub sign_lo: i32,
    pub sign_hi: i32,
}

impl RootBracket {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / two()
    }

    pub fn to_f64(&self) -> f64 {
        crate::rat::to_f64(&self.midpoint())
    }
}

/// All real roots of (the squarefree part of) `p`, in increasing order.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<IsolatedRoot>> {
    let chain = SturmChain::new(p)?;
    let f0 = chain.squarefree().clone();
    if f0.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let bound = root_bound(&f0);
    let neg = -&bound;
    let mut out = Vec::new();
    let mut stack = vec![(
        neg.clone(),
        bound.clone(),
        chain.variations_at(&neg),
        chain.variations_at(&bound),
    )];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let n = vlo.saturating_sub(vhi);
        match n {
            0 => {}
            1 => out.push(IsolatedRoot {
                poly: f0.clone(),
                lo,
                hi,
            }),
            _ => {
                let mut mid = (&lo + &hi) / two();
                while f0.sign_at(&mid) == 0 {
                    mid = (&lo + &mid) / two();
                }
                let vm = chain.variations_at(&mid);
                stack.push((lo, mid.clone(), vlo, vm));
                stack.push((mid, hi, vm, vhi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Strip factors of `t`, returning the remaining polynomial and the order of
/// vanishing at zero.
fn strip_zero_roots(p: &IntPoly) -> (IntPoly, usize) {
    if p.is_zero() {
        return (IntPoly::zero(), 0);
    }
    let v = p
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let coeffs = p.coeffs()[v..].to_vec();
    (IntPoly::from_coeffs(coeffs), v)
}

/// Isolating interval for the largest real root, provided that root is
/// positive; `None` when `p` has no positive real root.
pub fn largest_real_root_isolated(p: &IntPoly) -> Result<Option<IsolatedRoot>> {
    if p.is_zero() {
        return Err(Error::invalid("root of the zero polynomial"));
    }
    let (q, _) = strip_zero_roots(p);
    if q.degree().unwrap_or(0) == 0 {
        return Ok(None);
    }
    let roots = isolate_real_roots(&q)?;
    let Some(mut last) = roots.into_iter().next_back() else {
        return Ok(None);
    };
    // Zero is not a root of q, so the sign of the largest root is decidable.
    let zero = BigRational::zero();
    match last.cmp_rational(&zero) {
        Ordering::Greater => Ok(Some(last)),
        _ => Ok(None),
    }
}

/// Certified bracket of width at most `tol` around the largest real root;
/// `None` when there is no positive real root.
pub fn largest_real_root(p: &IntPoly, tol: &BigRational) -> Result<Option<RootBracket>> {
    if !tol.is_positive() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    match largest_real_root_isolated(p)? {
        None => Ok(None),
        Some(mut iso) => {
            iso.refine_to(tol);
            Ok(Some(iso.to_bracket()))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCountDetail {
    pub count: usize,
    pub lo_was_root: bool,
    pub hi_was_root: bool,
}

/// Exact number of distinct real roots in the open interval `(lo, hi)`.
/// Endpoints that happen to be roots are excluded (and flagged in the
/// detailed variant).
pub fn count_real_roots_in(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    Ok(count_real_roots_in_detail(p, lo, hi)?.count)
}

pub fn count_real_roots_in_detail(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<RootCountDetail> {
    if p.is_zero() {
        return Err(Error::invalid("root count of the zero polynomial"));
    }
    if lo >= hi {
        return Err(Error::invalid("degenerate interval"));
    }
    let q = p.squarefree_part();
    if q.degree().unwrap_or(0) == 0 {
        return Ok(RootCountDetail {
            count: 0,
            lo_was_root: false,
            hi_was_root: false,
        });
    }
    let lo_was_root = q.sign_at(lo) == 0;
    let hi_was_root = q.sign_at(hi) == 0;
    let count = isolate_real_roots_in(&q, lo, hi)?.len();
    Ok(RootCountDetail {
        count,
        lo_was_root,
        hi_was_root,
    })
}

/// Isolating intervals for the distinct real roots lying strictly inside
/// the open interval `(lo, hi)`; endpoint roots are excluded and each
/// returned interval is refined to sit inside `(lo, hi)`.
pub fn isolate_real_roots_in(
    p: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<IsolatedRoot>> {
    if p.is_zero() {
        return Err(Error::invalid("roots of the zero polynomial"));
    }
    if lo >= hi {
        return Err(Error::invalid("degenerate interval"));
    }
    let q = p.squarefree_part();
    if q.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let lo_root = q.sign_at(lo) == 0;
    let hi_root = q.sign_at(hi) == 0;
    let mut out = Vec::new();
    for mut root in isolate_real_roots(&q)? {
        loop {
            if root.hi <= *lo || root.lo >= *hi {
                break;
            }
            if lo_root && *lo > root.lo && *lo < root.hi {
                break;
            }
            if hi_root && *hi > root.lo && *hi < root.hi {
                break;
            }
            if root.lo >= *lo && root.hi <= *hi {
                out.push(root);
                break;
            }
            root.refine_step();
        }
    }
    Ok(out)
}

/// Exact equality of two isolated algebraic numbers via a gcd witness: the
/// roots are equal iff the gcd of the two isolation polynomials has a root
/// in the intersection of the two isolating intervals.
pub fn roots_equal(a: &IsolatedRoot, b: &IsolatedRoot) -> Result<bool> {
    let lo = a.lo.clone().max(b.lo.clone());
    let hi = a.hi.clone().min(b.hi.clone());
    if lo >= hi {
        return Ok(false);
    }
    let d = a.poly.gcd(&b.poly);
    if d.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    // The overlap endpoints come from isolating intervals, so they are not
    // roots of the respective polynomials, hence not of their gcd.
    let chain = SturmChain::new(&d)?;
    Ok(chain.count_in(&lo, &hi)? == 1)
}

/// Total ordering of two isolated algebraic numbers.
pub fn compare_roots(a: &mut IsolatedRoot, b: &mut IsolatedRoot) -> Result<Ordering> {
    if roots_equal(a, b)? {
        return Ok(Ordering::Equal);
    }
    loop {
        if a.hi <= b.lo {
            return Ok(Ordering::Less);
        }
        if b.hi <= a.lo {
            return Ok(Ordering::Greater);
        }
        a.refine_step();
        b.refine_step();
    }
}

/// Decide whether `b - a > gap` for isolated roots `a < b`; returns `false`
/// as well when the roots coincide.
pub fn gap_exceeds(a: &mut IsolatedRoot, b: &mut IsolatedRoot, gap: &BigRational) -> Result<bool> {
    if roots_equal(a, b)? {
        return Ok(false);
    }
    for _ in 0..10_000 {
        if &b.lo - &a.hi > *gap {
            return Ok(true);
        }
        if &b.hi - &a.lo < *gap {
            return Ok(false);
        }
        a.refine_step();
        b.refine_step();
    }
    Err(Error::verification(
        "gap_exceeds",
        "could not separate the two roots from the requested gap",
    ))
}

// ---------------------------------------------------------------------------
// Composed products and the maximal root modulus.
// ---------------------------------------------------------------------------

/// Determinant of a square matrix over `Z[x]` by fraction-free elimination.
fn poly_matrix_det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut sign = 1i32;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return IntPoly::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_quotient(&prev)
                    .expect("Bareiss division is exact");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}

/// Resultant in `y` of two polynomials with coefficients in `Z[x]`, given in
/// descending order of `y`-degree.
fn resultant_y(f: &[IntPoly], g: &[IntPoly]) -> IntPoly {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![IntPoly::zero(); size];
        for (j, c) in f.iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![IntPoly::zero(); size];
        for (j, c) in g.iter().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    poly_matrix_det(rows)
}

/// The composed product `p ⊗ p`: a polynomial (up to a nonzero constant)
/// whose roots are all pairwise products `z_i * z_j` of the roots of `p`.
/// Factors of `t` must be stripped beforehand.
pub fn root_product_poly(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::invalid("composed product of the zero polynomial"));
    }
    if p.constant_term().is_zero() {
        return Err(Error::invalid("composed product requires nonzero roots"));
    }
    let n = p.degree().unwrap();
    if n == 0 {
        return Ok(IntPoly::one());
    }
    // f(y) = p(y); g(y) = y^n p(x/y) has coefficient c_k x^k at y^(n-k).
    let f: Vec<IntPoly> = (0..=n)
        .rev()
        .map(|k| IntPoly::constant(p.coeff(k)))
        .collect();
    let g: Vec<IntPoly> = (0..=n)
        .map(|k| IntPoly::constant(p.coeff(k)).shift_up(k))
        .collect();
    let res = resultant_y(&f, &g);
    debug_assert_eq!(res.degree(), Some(n * n));
    Ok(res.primitive_part())
}

/// Polynomial (up to sign) of degree `deg p` whose roots are the squares of
/// the roots of `p`: with `p(t) = E(t^2) + t O(t^2)` this is `E^2 - x O^2`.
pub fn square_transform(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::invalid("square transform of the zero polynomial"));
    }
    let coeffs = p.coeffs();
    let even: Vec<BigInt> = coeffs.iter().step_by(2).cloned().collect();
    let odd: Vec<BigInt> = coeffs.iter().skip(1).step_by(2).cloned().collect();
    let e = IntPoly::from_coeffs(even);
    let o = IntPoly::from_coeffs(odd);
    let g = e.mul(&e).sub(&o.mul(&o).shift_up(1));
    let g = if g.leading().is_some_and(Signed::is_negative) {
        g.neg()
    } else {
        g
    };
    debug_assert_eq!(g.degree(), p.degree());
    Ok(g)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MaxRootModulus {
    /// Rational approximation (midpoint of the certified bracket).
    #[serde(with = "crate::rat::serde_rational")]
    pub value: BigRational,
    #[serde(with = "crate::rat::serde_rational")]
    pub lo: BigRational,
    #[serde(with = "crate::rat::serde_rational")]
    pub hi: BigRational,
    /// Always true on success: the value comes from exact isolation of the
    /// composed-product polynomial, never from floating point.
    pub certified: bool,
    /// The maximum modulus is attained by a positive real root.
    pub attained_positive_real: bool,
    /// The maximum modulus is attained by a negative real root.
    pub attained_negative_real: bool,
}

impl MaxRootModulus {
    pub fn attained_by_real(&self) -> bool {
        self.attained_positive_real || self.attained_negative_real
    }
}

/// Isolate the square of an isolated root as a root of `target` (which must
/// vanish on that square, e.g. the square transform). The input bracket is
/// refined until its squared interval isolates.
pub fn isolate_square(root: &IsolatedRoot, target: &IntPoly) -> Result<IsolatedRoot> {
    let tsf = target.squarefree_part();
    let chain = SturmChain::new(&tsf)?;
    let mut r = root.clone();
    // Work with a bracket of constant sign so squaring is monotone.
    let zero = BigRational::zero();
    let negative = match r.cmp_rational(&zero) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => return Err(Error::invalid("cannot square-isolate a zero root")),
    };
    for _ in 0..10_000 {
        let (mut lo, mut hi) = if negative {
            (crate::rat::rat_pow(&r.hi, 2), crate::rat::rat_pow(&r.lo, 2))
        } else {
            (crate::rat::rat_pow(&r.lo, 2), crate::rat::rat_pow(&r.hi, 2))
        };
        if lo > hi {
            std::mem::swap(&mut lo, &mut hi);
        }
        if lo < hi && tsf.sign_at(&lo) != 0 && tsf.sign_at(&hi) != 0
            && chain.count_in(&lo, &hi)? == 1 {
                return Ok(IsolatedRoot { poly: tsf, lo, hi });
            }
        r.refine_step();
    }
    Err(Error::verification(
        "isolate_square",
        "failed to isolate the squared root",
    ))
}

/// Maximal modulus among all complex roots, certified through the composed
/// product; `tol` bounds the width of the returned bracket.
pub fn max_root_modulus(p: &IntPoly, tol: &BigRational) -> Result<MaxRootModulus> {
    if !tol.is_positive() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    if p.is_zero() || p.degree() == Some(0) {
        return Err(Error::invalid("need a polynomial of positive degree"));
    }
    let (q, zeros) = strip_zero_roots(p);
    if q.degree() == Some(0) {
        // All roots are zero.
        return Ok(MaxRootModulus {
            value: BigRational::zero(),
            lo: BigRational::zero(),
            hi: BigRational::zero(),
            certified: true,
            attained_positive_real: zeros > 0,
            attained_negative_real: false,
        });
    }
    let p2 = root_product_poly(&q)?;
    let mut msq = largest_real_root_isolated(&p2)?
        .expect("the squared maximal modulus is a positive real root of the composed product");

    // sqrt bracket: refine the squared bracket, then bisect a rational
    // square-root enclosure until it is narrower than tol.
    let (lo, hi);
    loop {
        let zero = BigRational::zero();
        if msq.lo() <= &zero {
            msq.refine_step();
            continue;
        }
        let (l, h) = (msq.lo().clone(), msq.hi().clone());
        let mut a = BigRational::zero();
        let mut b = &BigRational::one() + &h;
        // Invariant: a^2 <= l and b^2 >= h, so the modulus lies in [a, b].
        for _ in 0..4_000 {
            if &b - &a <= *tol {
                break;
            }
            let m = (&a + &b) / two();
            let m2 = crate::rat::rat_pow(&m, 2);
            if m2 <= l {
                a = m;
            } else if m2 >= h {
                b = m;
            } else {
                break;
            }
        }
        if &b - &a <= *tol {
            lo = a;
            hi = b;
            break;
        }
        msq.refine_step();
    }

    // Which roots attain the maximum: compare the squared extreme real roots
    // of q against the largest real root of the composed product, exactly.
    let gsq = square_transform(&q)?;
    let mut attained_pos = false;
    let mut attained_neg = false;
    if let Some(rp) = largest_real_root_isolated(&q)? {
        let sq = isolate_square(&rp, &gsq)?;
        attained_pos = roots_equal(&sq, &msq)?;
    }
    if let Some(rn) = largest_real_root_isolated(&q.substitute_neg())? {
        let sq = isolate_square(&rn, &gsq)?;
        attained_neg = roots_equal(&sq, &msq)?;
    }

    Ok(MaxRootModulus {
        value: (&lo + &hi) / two(),
        lo,
        hi,
        certified: true,
        attained_positive_real: attained_pos,
        attained_negative_real: attained_neg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    #[test]
    fn golden_ratio_bracket() {
        let golden = p(&[-1, -1, 1]);
        let tol = rat(1, 1_000_000_000_000);
        let b = largest_real_root(&golden, &tol).unwrap().unwrap();
        assert!(b.width() <= tol);
        assert_ne!(b.sign_lo, b.sign_hi);
        let phi = 1.618033988749894_f64;
        assert!((b.to_f64() - phi).abs() < 1e-9);
    }

    #[test]
    fn mu6_bracket() {
        let mu6 = p(&[-1, -1, 0, 0, 0, -1, 1]);
        let tol = rat(1, 1_000_000);
        let b = largest_real_root(&mu6, &tol).unwrap().unwrap();
        assert!(b.lo >= rat(14195, 10000) && b.hi <= rat(14197, 10000));
    }

    #[test]
    fn no_positive_root() {
        let tol = rat(1, 1000);
        assert!(largest_real_root(&p(&[1, 0, 1]), &tol).unwrap().is_none());
        assert!(largest_real_root(&p(&[1, 1]), &tol).unwrap().is_none()); // root -1
        assert!(largest_real_root(&IntPoly::zero(), &tol).is_err());
        assert!(largest_real_root(&p(&[-1, -1, 1]), &rat_int(0)).is_err());
    }

    #[test]
    fn count_roots_examples() {
        let golden = p(&[-1, -1, 1]);
        assert_eq!(
            count_real_roots_in(&golden, &rat_int(1), &rat_int(2)).unwrap(),
            1
        );
        let mu6 = p(&[-1, -1, 0, 0, 0, -1, 1]);
        assert_eq!(
            count_real_roots_in(&mu6, &rat(141, 100), &rat(142, 100)).unwrap(),
            1
        );
        let quad = p(&[1, 0, -3, 0, 1]);
        assert_eq!(
            count_real_roots_in(&quad, &rat_int(0), &rat_int(1)).unwrap(),
            1
        );
        assert!(count_real_roots_in(&quad, &rat_int(1), &rat_int(1)).is_err());
    }

    #[test]
    fn count_roots_endpoint_adjustment() {
        // (t-1)(t-2): roots 1 and 2; open interval excludes endpoint roots.
        let q = p(&[2, -3, 1]);
        let d = count_real_roots_in_detail(&q, &rat_int(1), &rat_int(2)).unwrap();
        assert_eq!(d.count, 0);
        assert!(d.lo_was_root && d.hi_was_root);
        let d = count_real_roots_in_detail(&q, &rat_int(0), &rat_int(2)).unwrap();
        assert_eq!(d.count, 1);
        assert!(!d.lo_was_root && d.hi_was_root);
    }

    #[test]
    fn count_collapses_multiplicity() {
        let golden = p(&[-1, -1, 1]);
        let cube = golden.mul(&golden).mul(&golden);
        assert_eq!(
            count_real_roots_in(&cube, &rat_int(0), &rat_int(2)).unwrap(),
            1
        );
    }

    #[test]
    fn equality_and_comparison() {
        // Largest root of t^4-3t^2+1 equals the golden ratio.
        let quart = p(&[1, 0, -3, 0, 1]);
        let golden = p(&[-1, -1, 1]);
        let a = largest_real_root_isolated(&quart).unwrap().unwrap();
        let b = largest_real_root_isolated(&golden).unwrap().unwrap();
        assert!(roots_equal(&a, &b).unwrap());

        let mut a = largest_real_root_isolated(&p(&[-1, -1, 0, 0, 0, -1, 1]))
            .unwrap()
            .unwrap(); // mu_6 ≈ 1.4196
        let mut b = largest_real_root_isolated(&golden).unwrap().unwrap();
        assert_eq!(compare_roots(&mut a, &mut b).unwrap(), Ordering::Less);
        assert!(gap_exceeds(&mut a, &mut b, &rat(1, 1_000_000_000)).unwrap());
    }

    #[test]
    fn composed_product_golden() {
        // Roots of t^2-t-1 are phi and -1/phi; pairwise products are
        // phi^2, -1, -1, 1/phi^2, i.e. (x+1)^2 (x^2 - 3x + 1) up to scale.
        let p2 = root_product_poly(&p(&[-1, -1, 1])).unwrap();
        let expected = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[1, -3, 1]));
        assert_eq!(
            p2.primitive_part().squarefree_part(),
            expected.squarefree_part()
        );
    }

    #[test]
    fn max_modulus_examples() {
        let tol = rat(1, 1_000_000);
        // mu_6 poly: maximum modulus is the positive real root ≈ 1.4196.
        let m = max_root_modulus(&p(&[-1, -1, 0, 0, 0, -1, 1]), &tol).unwrap();
        assert!(m.certified);
        assert!(m.attained_positive_real && !m.attained_negative_real);
        assert!((crate::rat::to_f64(&m.value) - 1.419632762822).abs() < 1e-5);

        // Sign-flipped: maximal root is real and negative.
        let m = max_root_modulus(&p(&[-1, 1, 0, 0, 0, 1, 1]), &tol).unwrap();
        assert!(m.attained_negative_real && !m.attained_positive_real);

        // t^2 + 1: modulus 1, attained only by ±i.
        let m = max_root_modulus(&p(&[1, 0, 1]), &tol).unwrap();
        assert!(!m.attained_by_real());
        assert!((crate::rat::to_f64(&m.value) - 1.0).abs() < 1e-5);

        // t^2 - 1: modulus 1 attained by both real signs.
        let m = max_root_modulus(&p(&[-1, 0, 1]), &tol).unwrap();
        assert!(m.attained_positive_real && m.attained_negative_real);
    }

    #[test]
    fn bracket_serialization_round_trip() {
        let golden = p(&[-1, -1, 1]);
        let b = largest_real_root(&golden, &rat(1, 1024)).unwrap().unwrap();
        let text = serde_json::to_string(&b).unwrap();
        let back: RootBracket = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
