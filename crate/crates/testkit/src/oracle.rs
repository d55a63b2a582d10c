//! Slow, independent reference evaluations.

use crate::quad::integrate;
use std::f64::consts::PI;

/// ln Γ(x) from the Stirling series after shifting the argument above 30.
pub fn log_gamma_stirling(x: f64) -> f64 {
    assert!(x > 0.0);
    let mut shift = 0.0;
    let mut y = x;
    while y < 30.0 {
        shift += y.ln();
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let series =
        inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    (y - 0.5) * y.ln() - y + 0.5 * (2.0 * PI).ln() + series - shift
}

/// ζ(k) by direct summation with an Euler–Maclaurin tail.
pub fn zeta(k: u32) -> f64 {
    assert!(k >= 2);
    let n = 100_000u32;
    let mut s = 0.0;
    for j in (1..n).rev() {
        s += (j as f64).powi(-(k as i32));
    }
    let nf = n as f64;
    let kf = k as f64;
    s + nf.powf(1.0 - kf) / (kf - 1.0) + 0.5 * nf.powf(-kf) + kf * nf.powf(-kf - 1.0) / 12.0
}

/// ln Γ(1 + z) from the Taylor series −γz + Σ (−1)^k ζ(k) z^k / k, |z| ≤ 0.1.
pub fn log_gamma_near_one(z: f64) -> f64 {
    assert!(z.abs() <= 0.1);
    const GAMMA: f64 = 0.577_215_664_901_532_9;
    let mut acc = -GAMMA * z;
    for k in 2..20u32 {
        acc += (-z).powi(k as i32) * zeta(k) / k as f64;
    }
    acc
}

/// P(a, x) by quadrature of t^{a−1} e^{−t}, normalised by the same
/// quadrature over [0, ∞).
pub fn lower_inc_gamma_quadrature(a: f64, x: f64) -> f64 {
    let f = |t: f64| if t <= 0.0 { 0.0 } else { ((a - 1.0) * t.ln() - t).exp() };
    let upper = (a + 60.0 * a.sqrt() + 60.0).max(x);
    let total = integrate(f, 0.0, upper, 1e-15);
    integrate(f, 0.0, x, 1e-15) / total
}

/// I_x(a, b) by quadrature of t^{a−1}(1−t)^{b−1} over [0, x] and [0, 1].
pub fn inc_beta_quadrature(a: f64, b: f64, x: f64) -> f64 {
    let f = |t: f64| {
        if t <= 0.0 || t >= 1.0 {
            0.0
        } else {
            ((a - 1.0) * t.ln() + (b - 1.0) * (1.0 - t).ln()).exp()
        }
    };
    integrate(f, 0.0, x, 1e-15) / integrate(f, 0.0, 1.0, 1e-15)
}

/// erf from its Maclaurin series truncated after `terms` terms.
pub fn erf_taylor(x: f64, terms: usize) -> f64 {
    let mut sum = 0.0;
    let mut factorial = 1.0;
    for n in 0..terms {
        if n > 0 {
            factorial *= n as f64;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * x.powi(2 * n as i32 + 1) / (factorial * (2 * n + 1) as f64);
    }
    2.0 / PI.sqrt() * sum
}

/// Φ(z) from the Maclaurin series of erf; accurate for |z| ≤ 5.
pub fn normal_cdf_taylor(z: f64) -> f64 {
    0.5 * (1.0 + erf_taylor(z / std::f64::consts::SQRT_2, 120))
}

/// Plain bisection for a nondecreasing `f` on [lo, hi].
pub fn bisect<F: Fn(f64) -> f64>(f: F, p: f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Binomial pmf table for k = 0..=n by the ratio recurrence in log space.
pub fn binomial_pmf_table(n: u64, p: f64) -> Vec<f64> {
    if p == 0.0 {
        let mut t = vec![0.0; n as usize + 1];
        t[0] = 1.0;
        return t;
    }
    if p == 1.0 {
        let mut t = vec![0.0; n as usize + 1];
        t[n as usize] = 1.0;
        return t;
    }
    let odds = (p / (1.0 - p)).ln();
    let mut ln = n as f64 * (-p).ln_1p();
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(ln.exp());
    for k in 1..=n {
        ln += ((n - k + 1) as f64 / k as f64).ln() + odds;
        out.push(ln.exp());
    }
    out
}

/// Poisson pmf for k = 0..=kmax.
pub fn poisson_pmf_table(lambda: f64, kmax: u64) -> Vec<f64> {
    let mut ln = -lambda;
    let mut out = vec![ln.exp()];
    for k in 1..=kmax {
        ln += lambda.ln() - (k as f64).ln();
        out.push(ln.exp());
    }
    out
}

/// Negative binomial (failures before the r-th success) pmf for k = 0..=kmax.
pub fn neg_binomial_pmf_table(r: f64, p: f64, kmax: u64) -> Vec<f64> {
    if p == 1.0 {
        let mut t = vec![0.0; kmax as usize + 1];
        t[0] = 1.0;
        return t;
    }
    let mut ln = r * p.ln();
    let mut out = vec![ln.exp()];
    let lq = (-p).ln_1p();
    for k in 1..=kmax {
        ln += ((k as f64 - 1.0 + r) / k as f64).ln() + lq;
        out.push(ln.exp());
    }
    out
}

/// Geometric pmf p(1−p)^k, k = 0..=kmax (failures before the first success).
pub fn geometric_pmf_table(p: f64, kmax: u64) -> Vec<f64> {
    (0..=kmax).map(|k| p * (1.0 - p).powf(k as f64)).collect()
}

fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// Hypergeometric pmf over its support, returned with the smallest support
/// point: population `big_n`, `k_succ` successes, `n` draws.
pub fn hypergeometric_pmf_table(big_n: u64, k_succ: u64, n: u64) -> (u64, Vec<f64>) {
    let lo = n.saturating_sub(big_n - k_succ);
    let hi = n.min(k_succ);
    let ln_choose = |a: u64, b: u64| ln_factorial(a) - ln_factorial(b) - ln_factorial(a - b);
    let mut ln = ln_choose(k_succ, lo) + ln_choose(big_n - k_succ, n - lo) - ln_choose(big_n, n);
    let mut out = vec![ln.exp()];
    for k in lo..hi {
        let num = (k_succ - k) as f64 * (n - k) as f64;
        let den = (k + 1) as f64 * (big_n - k_succ + k + 1 - n) as f64;
        ln += (num / den).ln();
        out.push(ln.exp());
    }
    (lo, out)
}

/// Least-squares line from the 2×2 normal equations, solved by Gaussian
/// elimination with partial pivoting. Returns (intercept, slope).
pub fn normal_equations(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let sy: f64 = y.iter().sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let mut m = [[n, sx, sy], [sx, sxx, sxy]];
    if m[1][0].abs() > m[0][0].abs() {
        m.swap(0, 1);
    }
    let factor = m[1][0] / m[0][0];
    let [pivot, row] = &mut m;
    for (r, p) in row.iter_mut().zip(pivot.iter()) {
        *r -= factor * p;
    }
    let b1 = m[1][2] / m[1][1];
    let b0 = (m[0][2] - m[0][1] * b1) / m[0][0];
    (b0, b1)
}

/// Rounds to four decimals, half away from zero, using the decimal digits
/// of a long fixed-point rendering.
pub fn round4_decimal(v: f64) -> String {
    let s = format!("{:.60}", v.abs());
    let (int_part, frac) = s.split_once('.').unwrap();
    let kept = &frac[..4];
    let rest = &frac[4..];
    let round_up = rest.as_bytes()[0] >= b'5';
    let mut digits: Vec<u8> = format!("{int_part}{kept}").into_bytes();
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, b'1');
                break;
            }
            i -= 1;
            if digits[i] == b'9' {
                digits[i] = b'0';
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let text = String::from_utf8(digits).unwrap();
    let split = text.len() - 4;
    let out = format!("{}.{}", &text[..split], &text[split..]);
    if v < 0.0 && out.bytes().any(|b| (b'1'..=b'9').contains(&b)) {
        format!("-{out}")
    } else {
        out
    }
}
