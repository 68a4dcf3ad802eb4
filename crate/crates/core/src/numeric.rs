//! Floating-point diagnostics: a polynomial root finder and a Perron-root
//! power iteration. These never feed certified results; they serve as
//! independent cross-checks and report decoration.

use num_traits::ToPrimitive;

use crate::matrix::IntMatrix;
use crate::poly::IntPoly;

/// All complex roots by Aberth-Ehrlich iteration. Adequate for the moderate
/// degrees used in reports and oracle tests.
pub fn complex_roots(p: &IntPoly) -> Vec<(f64, f64)> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Vec::new(),
    };
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::MAX))
        .collect();
    let lead = coeffs[n];
    let a: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();

    let eval = |z: (f64, f64)| -> ((f64, f64), (f64, f64)) {
        // Horner for p and p' simultaneously.
        let (mut pr, mut pi) = (0.0f64, 0.0f64);
        let (mut dr, mut di) = (0.0f64, 0.0f64);
        for k in (0..=n).rev() {
            let (nr, ni) = (dr * z.0 - di * z.1 + pr, dr * z.1 + di * z.0 + pi);
            dr = nr;
            di = ni;
            let (qr, qi) = (pr * z.0 - pi * z.1 + a[k], pr * z.1 + pi * z.0);
            pr = qr;
            pi = qi;
        }
        ((pr, pi), (dr, di))
    };

    let radius = 1.0 + a[..n].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.35) / n as f64 + 0.401;
            (radius * 0.8 * theta.cos(), radius * 0.8 * theta.sin())
        })
        .collect();

    for _ in 0..400 {
        let mut moved: f64 = 0.0;
        for k in 0..n {
            let (p_val, d_val) = eval(z[k]);
            let pnorm = p_val.0 * p_val.0 + p_val.1 * p_val.1;
            if pnorm < 1e-60 {
                continue;
            }
            // newton = p/p'
            let dnorm = d_val.0 * d_val.0 + d_val.1 * d_val.1;
            if dnorm < 1e-300 {
                continue;
            }
            let nr = (p_val.0 * d_val.0 + p_val.1 * d_val.1) / dnorm;
            let ni = (p_val.1 * d_val.0 - p_val.0 * d_val.1) / dnorm;
            // Aberth correction: sum over sibling roots of 1/(z_k - z_j).
            let (mut sr, mut si) = (0.0f64, 0.0f64);
            for j in 0..n {
                if j == k {
                    continue;
                }
                let (dx, dy) = (z[k].0 - z[j].0, z[k].1 - z[j].1);
                let norm = dx * dx + dy * dy;
                if norm < 1e-300 {
                    continue;
                }
                sr += dx / norm;
                si += -dy / norm;
            }
            let denom_r = 1.0 - (nr * sr - ni * si);
            let denom_i = -(nr * si + ni * sr);
            let dn = denom_r * denom_r + denom_i * denom_i;
            if dn < 1e-300 {
                continue;
            }
            let step_r = (nr * denom_r + ni * denom_i) / dn;
            let step_i = (ni * denom_r - nr * denom_i) / dn;
            z[k].0 -= step_r;
            z[k].1 -= step_i;
            moved = moved.max(step_r.hypot(step_i));
        }
        if moved < 1e-14 {
            break;
        }
    }
    z.sort_by(|a, b| {
        (a.0, a.1)
            .partial_cmp(&(b.0, b.1))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    z
}

/// Kills the imaginary part of roots that are numerically real.
pub fn real_roots(p: &IntPoly) -> Vec<f64> {
    complex_roots(p)
        .into_iter()
        .filter(|z| z.1.abs() < 1e-8)
        .map(|z| z.0)
        .collect()
}

/// Power iteration for the Perron root of a nonnegative matrix. Iterates on
/// `A + I` so periodic (imprimitive) spectra still converge, then shifts
/// back.
pub fn power_iteration(a: &IntMatrix) -> f64 {
    let n = a.dim();
    if n == 0 {
        return 0.0;
    }
    let m: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| a.get(i, j).to_f64().unwrap_or(0.0) + if i == j { 1.0 } else { 0.0 })
                .collect()
        })
        .collect();
    let mut v = vec![1.0f64; n];
    let mut lambda = 0.0f64;
    for _ in 0..20_000 {
        let mut w = vec![0.0f64; n];
        for i in 0..n {
            for j in 0..n {
                w[i] += m[i][j] * v[j];
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        for x in &mut w {
            *x /= norm;
        }
        let mut rayleigh = 0.0;
        for i in 0..n {
            let mut mw = 0.0;
            for j in 0..n {
                mw += m[i][j] * w[j];
            }
            rayleigh += mw * w[i];
        }
        if (rayleigh - lambda).abs() < 1e-13 {
            lambda = rayleigh;
            break;
        }
        lambda = rayleigh;
        v = w;
    }
    lambda - 1.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::companion;

    #[test]
    fn roots_of_golden() {
        let roots = real_roots(&IntPoly::from_i64s(&[-1, -1, 1]));
        assert_eq!(roots.len(), 2);
        assert!((roots[1] - 1.618033988749894).abs() < 1e-10);
        assert!((roots[0] + 0.618033988749894).abs() < 1e-10);
    }

    #[test]
    fn complex_pair() {
        let roots = complex_roots(&IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert!(r.0.abs() < 1e-10 && (r.1.abs() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn power_iteration_fibonacci() {
        let fib = IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).unwrap();
        assert!((power_iteration(&fib) - 1.618033988749894).abs() < 1e-9);
        // Imprimitive: period-3 spectrum converges thanks to the +I shift.
        let c = companion(&IntPoly::from_i64s(&[-1, 0, 0, -1, 0, 0, 1])).unwrap();
        assert!((power_iteration(&c) - 1.1739849967053285).abs() < 1e-7);
    }
}
