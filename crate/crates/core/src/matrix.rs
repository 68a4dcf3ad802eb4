//! Dense exact integer matrices: companion construction, characteristic
//! polynomial, determinant, nonnegativity/irreducibility, and the two
//! primitivity certificates (simple-cycle gcd and Wielandt powers).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::poly::roots::{largest_real_root_isolated, RootBracket};
use crate::poly::IntPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<IntMatrix> {
        if entries.len() != n * n {
            return Err(Error::invalid(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn zero(n: usize) -> IntMatrix {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::invalid("matrix rows must all have length n"));
            }
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix::new(n, entries)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.n + j]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    /// File format: first line `n`, then `n` lines of `n` whitespace
    /// separated integers.
    pub fn parse(text: &str) -> Result<IntMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("first line must be the dimension".into()))?;
        let mut entries = Vec::with_capacity(n * n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing matrix row".into()))?;
            for tok in line.split_whitespace() {
                let v: BigInt = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad matrix entry {tok:?}")))?;
                entries.push(v);
            }
        }
        IntMatrix::new(n, entries)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{}:", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Companion matrix with superdiagonal ones and the negated non-leading
/// coefficients in the last row; its characteristic polynomial is `p`.
pub fn companion(p: &IntPoly) -> Result<IntMatrix> {
    if !p.is_monic() {
        return Err(Error::invalid("companion matrix needs a monic polynomial"));
    }
    let n = p.degree().unwrap();
    if n == 0 {
        return Err(Error::invalid("companion matrix needs degree >= 1"));
    }
    let mut m = IntMatrix::zero(n);
    for i in 0..n - 1 {
        *m.get_mut(i, i + 1) = BigInt::one();
    }
    for j in 0..n {
        *m.get_mut(n - 1, j) = -p.coeff(j);
    }
    Ok(m)
}

/// Exact monic characteristic polynomial `det(tI - A)` by the
/// Faddeev-LeVerrier recurrence (all divisions are exact over `Z`).
pub fn char_poly(a: &IntMatrix) -> IntPoly {
    let n = a.dim();
    if n == 0 {
        return IntPoly::one();
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = a.clone();
    let mut c = -m.trace();
    coeffs[n - 1] = c.clone();
    for k in 2..=n {
        let mut shifted = m;
        for i in 0..n {
            *shifted.get_mut(i, i) += &c;
        }
        m = a.mul(&shifted);
        let t = m.trace();
        c = -t / BigInt::from(k);
        coeffs[n - k] = c.clone();
    }
    IntPoly::from_coeffs(coeffs)
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det(a: &IntMatrix) -> BigInt {
    let n = a.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).clone()).collect())
        .collect();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

fn support_adjacency(a: &IntMatrix) -> Vec<Vec<usize>> {
    let n = a.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| a.get(i, j).is_positive())
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Strong connectivity of the digraph with an edge `i -> j` whenever
/// `A_ij > 0`. A single vertex counts as strongly connected.
pub fn is_irreducible(a: &IntMatrix) -> Result<bool> {
    if !a.is_nonnegative() {
        return Err(Error::invalid(
            "irreducibility is defined for nonnegative matrices",
        ));
    }
    let n = a.dim();
    if n == 0 {
        return Ok(true);
    }
    let fwd = support_adjacency(a);
    let mut rev = vec![Vec::new(); n];
    for (i, outs) in fwd.iter().enumerate() {
        for &j in outs {
            rev[j].push(i);
        }
    }
    let reach = |adj: &Vec<Vec<usize>>| -> usize {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count
    };
    Ok(reach(&fwd) == n && reach(&rev) == n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimitivityMethod {
    CycleGcd,
    WielandtPower,
}

/// Both primitivity witnesses for a nonnegative matrix. For a primitive
/// matrix the simple-cycle lengths have gcd one and some power up to the
/// Wielandt bound `(n-1)^2 + 1` is strictly positive; the two methods are
/// checked against each other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Primitivity {
    pub is_primitive: bool,
    pub irreducible: bool,
    /// Sorted distinct lengths of simple directed cycles.
    pub cycle_lengths: Vec<usize>,
    pub cycle_gcd: Option<usize>,
    /// Minimal exponent with `A^k > 0`, when one exists within the bound.
    pub wielandt_exponent: Option<usize>,
}

fn wielandt_exponent(a: &IntMatrix) -> Option<usize> {
    let n = a.dim();
    if n == 0 {
        return None;
    }
    let words = n.div_ceil(64);
    let full: Vec<u64> = (0..words)
        .map(|w| {
            let bits = (n - w * 64).min(64);
            if bits == 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            }
        })
        .collect();
    let base: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in 0..n {
                if a.get(i, j).is_positive() {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let bound = (n - 1) * (n - 1) + 1;
    let mut power = base.clone();
    for k in 1..=bound {
        if power.iter().all(|row| row == &full) {
            return Some(k);
        }
        if k == bound {
            break;
        }
        let mut next = vec![vec![0u64; words]; n];
        for i in 0..n {
            for j in 0..n {
                if power[i][j / 64] >> (j % 64) & 1 == 1 {
                    for w in 0..words {
                        next[i][w] |= base[j][w];
                    }
                }
            }
        }
        power = next;
    }
    None
}

/// Primitivity decision with both certificates.
pub fn primitivity(a: &IntMatrix) -> Result<Primitivity> {
    if !a.is_nonnegative() {
        return Err(Error::invalid(
            "primitivity is defined for nonnegative matrices",
        ));
    }
    let irreducible = is_irreducible(a)?;
    let cycles = Digraph::from_matrix_support(a)?.simple_cycles()?;
    let mut lengths: Vec<usize> = cycles.iter().map(|c| c.weight as usize).collect();
    lengths.sort_unstable();
    lengths.dedup();
    let cycle_gcd = if lengths.is_empty() {
        None
    } else {
        Some(lengths.iter().fold(0usize, |g, &l| g.gcd(&l)))
    };
    let by_cycles = irreducible && cycle_gcd == Some(1);
    let wielandt = wielandt_exponent(a);
    if by_cycles != wielandt.is_some() {
        return Err(Error::verification(
            "primitivity",
            format!(
                "cycle-gcd verdict {by_cycles} disagrees with Wielandt verdict {}",
                wielandt.is_some()
            ),
        ));
    }
    Ok(Primitivity {
        is_primitive: by_cycles,
        irreducible,
        cycle_lengths: lengths,
        cycle_gcd,
        wielandt_exponent: wielandt,
    })
}

pub fn is_primitive(a: &IntMatrix) -> Result<bool> {
    Ok(primitivity(a)?.is_primitive)
}

/// Certified bracket around the Perron root of a nonnegative irreducible
/// matrix; cross-checked against a floating-point power iteration.
pub fn spectral_radius(a: &IntMatrix, tol: &BigRational) -> Result<RootBracket> {
    if !tol.is_positive() {
        return Err(Error::invalid("tolerance must be positive"));
    }
    if !a.is_nonnegative() {
        return Err(Error::invalid(
            "spectral radius bracket needs a nonnegative matrix",
        ));
    }
    if !is_irreducible(a)? {
        return Err(Error::invalid(
            "spectral radius bracket needs an irreducible matrix",
        ));
    }
    let cp = char_poly(a);
    let mut iso = largest_real_root_isolated(&cp)?.ok_or_else(|| {
        Error::invalid("matrix has no positive spectral radius (zero Perron root)")
    })?;
    iso.refine_to(tol);
    let bracket = iso.to_bracket();
    let estimate = crate::numeric::power_iteration(a);
    let mid = crate::rat::to_f64(&bracket.midpoint());
    let slack = crate::rat::to_f64(tol) * 10.0 + 1e-9;
    if (estimate - mid).abs() > slack {
        return Err(Error::verification(
            "spectral_radius",
            format!("power iteration {estimate} disagrees with certified bracket midpoint {mid}"),
        ));
    }
    Ok(bracket)
}
