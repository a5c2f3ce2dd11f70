//! Knots on the truncated line and the two quadrature rules of the Nystrom
//! scheme: trigonometric weights for the periodic logarithmic kernel and the
//! plain `pi/N` rule for the smooth remainder.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Equidistant knots `t_j = -cut + j pi/N` covering `[-cut, cut]`.
#[derive(Debug, Clone)]
pub struct Discretization {
    /// refinement parameter; knot spacing is `pi/n`
    pub n: usize,
    /// half-width of the truncation window, a multiple of `pi/n`
    pub cut: f64,
    pub knots: Vec<f64>,
    pub step: f64,
}

/// Build the knot set. `2 N cut / pi` must be an integer so that the window
/// is an exact multiple of the spacing (endpoints included).
pub fn make_discretization(cut: f64, n: usize) -> Result<Discretization, String> {
    if n == 0 {
        return Err("refinement N must be at least 1".into());
    }
    if !(cut > 0.0) {
        return Err("cut must be positive".into());
    }
    let q = 2.0 * n as f64 * cut / PI;
    let count = q.round();
    if (q - count).abs() > 1e-9 * q.max(1.0) {
        return Err(format!(
            "cut = {cut} is not a multiple of the knot spacing pi/{n} (2 N cut / pi = {q})"
        ));
    }
    let count = count as usize;
    let step = PI / n as f64;
    let knots = (0..=count).map(|j| -cut + j as f64 * step).collect();
    Ok(Discretization { n, cut, knots, step })
}

/// Quadrature weight `R_j^{(N)}(s)` for the periodic logarithmic kernel:
///
/// ```text
/// R_j^{(N)}(s) = -(1/N) [ sum_{m=1}^{N-1} cos(m (s - t_j)) / m
///                          + cos(N (s - t_j)) / (2N) ]
/// ```
pub fn log_weight(n: usize, s: f64, t_j: f64) -> f64 {
    let u = s - t_j;
    let mut sum = 0.0;
    for m in 1..n {
        sum += (m as f64 * u).cos() / m as f64;
    }
    sum += (n as f64 * u).cos() / (2.0 * n as f64);
    -sum / n as f64
}

/// `R^{(N)}` sampled at all distinct knot offsets: entry `k` holds the weight
/// for `s - t_j = k pi/N`, `k = 0..2N-1`. On an equidistant grid the weight
/// between knots `i` and `j` is entry `(i - j) mod 2N`; this is an exact
/// rearrangement, not an approximation.
pub fn log_weight_table(n: usize) -> Vec<f64> {
    (0..2 * n)
        .map(|k| log_weight(n, k as f64 * PI / n as f64, 0.0))
        .collect()
}

/// `(1/2pi) int ln(4 sin^2((s-t)/2)) phi(t) dt  ~  sum_j R_j^{(N)}(s) phi(t_j)`
/// for per-knot 2-vector samples `phi(t_j)` (usually `B(s,t_j) psi(t_j)`).
pub fn apply_log_rule(
    n: usize,
    s: f64,
    knots: &[f64],
    samples: &[[Complex64; 2]],
) -> [Complex64; 2] {
    assert_eq!(knots.len(), samples.len());
    let mut out = [Complex64::ZERO; 2];
    for (t_j, v) in knots.iter().zip(samples) {
        let w = log_weight(n, s, *t_j);
        out[0] += w * v[0];
        out[1] += w * v[1];
    }
    out
}

/// `int C(s,t) psi(t) dt  ~  (pi/N) sum_j` of the per-knot samples.
pub fn apply_smooth_rule(n: usize, knots: &[f64], samples: &[[Complex64; 2]]) -> [Complex64; 2] {
    assert_eq!(knots.len(), samples.len());
    let mut out = [Complex64::ZERO; 2];
    for v in samples {
        out[0] += v[0];
        out[1] += v[1];
    }
    let h = PI / n as f64;
    [h * out[0], h * out[1]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn discretization_examples() {
        let d = make_discretization(10.0 * PI, 8).unwrap();
        assert_eq!(d.knots.len(), 161);
        assert_eq!(d.knots[0], -10.0 * PI);
        assert!((d.knots[160] - 10.0 * PI).abs() < 1e-12);

        let d = make_discretization(PI, 1).unwrap();
        assert_eq!(d.knots.len(), 3);
        assert!((d.knots[1]).abs() < 1e-15);

        let d = make_discretization(10.0 * PI, 3).unwrap();
        assert_eq!(d.knots.len(), 61);
        assert!((d.step - PI / 3.0).abs() < 1e-15);

        assert!(make_discretization(1.0, 1).is_err());
        assert!(make_discretization(10.0 * PI, 0).is_err());
        assert!(make_discretization(-PI, 4).is_err());
    }

    #[test]
    fn weight_examples() {
        // N=2, s=t_j: -(1/2)(1 + 1/4)
        assert!((log_weight(2, 0.7, 0.7) + 0.625).abs() < 1e-15);
        // N=2, s=0 over one period of knots
        let want = [-0.625, 0.125, 0.375, 0.125];
        for (j, w) in want.iter().enumerate() {
            let t_j = j as f64 * PI / 2.0;
            assert!((log_weight(2, 0.0, t_j) - w).abs() < 1e-14, "weight {j}");
        }
    }

    #[test]
    fn weight_sums_vanish() {
        for n in [2usize, 4, 8, 16] {
            for s in [0.0, 0.3, -1.9, 2.7] {
                let sum: f64 = (0..2 * n)
                    .map(|j| log_weight(n, s, -1.0 + j as f64 * PI / n as f64))
                    .sum();
                assert!(sum.abs() <= 1e-13, "N={n} s={s}: {sum:e}");
            }
        }
    }

    #[test]
    fn weight_parity_and_periodicity() {
        let t_j = 0.4;
        for n in [2usize, 5, 16] {
            for i in 0..=20 {
                let u = PI * i as f64 / 20.0;
                let a = log_weight(n, t_j + u, t_j);
                let b = log_weight(n, t_j - u, t_j);
                assert!((a - b).abs() <= 1e-14);
                let c = log_weight(n, t_j + u + 2.0 * PI, t_j);
                assert!((a - c).abs() <= 1e-13);
            }
        }
    }

    #[test]
    fn table_matches_direct_weights() {
        let n = 12;
        let tab = log_weight_table(n);
        let d = make_discretization(3.0 * PI, n).unwrap();
        for i in (0..d.knots.len()).step_by(7) {
            for j in (0..d.knots.len()).step_by(5) {
                let k = (i as i64 - j as i64).rem_euclid(2 * n as i64) as usize;
                let direct = log_weight(n, d.knots[i], d.knots[j]);
                assert!((tab[k] - direct).abs() <= 1e-13);
            }
        }
    }

    fn scalar_samples(vals: impl Iterator<Item = f64>) -> Vec<[C; 2]> {
        vals.map(|v| [C::new(v, 0.0), C::ZERO]).collect()
    }

    #[test]
    fn log_rule_fourier_exactness() {
        // one period: 2N knots t_j = j pi/N on [0, 2pi)
        let n = 16usize;
        let knots: Vec<f64> = (0..2 * n).map(|j| j as f64 * PI / n as f64).collect();
        for s in [0.35, 1.2, -0.7] {
            // (1/2pi) int ln(4 sin^2((s-t)/2)) cos(mt) dt = -cos(ms)/m
            for m in 1..n {
                let samples = scalar_samples(knots.iter().map(|t| (m as f64 * t).cos()));
                let got = apply_log_rule(n, s, &knots, &samples)[0].re;
                let want = -(m as f64 * s).cos() / m as f64;
                assert!((got - want).abs() <= 1e-12, "m={m} s={s}: {got} vs {want}");
            }
            // degree N: the half-weight correction makes the rule exact too
            let samples = scalar_samples(knots.iter().map(|t| (n as f64 * t).cos()));
            let got = apply_log_rule(n, s, &knots, &samples)[0].re;
            let want = -(n as f64 * s).cos() / n as f64;
            assert!((got - want).abs() <= 1e-12);
            // constants: the kernel has zero mean
            let samples = scalar_samples(knots.iter().map(|_| 1.0));
            let got = apply_log_rule(n, s, &knots, &samples)[0];
            assert!(got.norm() <= 1e-13);
        }
    }

    #[test]
    fn log_rule_converges_superalgebraically() {
        // compactly supported bump, period 2pi
        let phi = |t: f64| {
            let x: f64 = t / 1.5;
            if x.abs() >= 1.0 {
                0.0
            } else {
                (-1.0 / (1.0 - x * x)).exp()
            }
        };
        let s = 0.3;
        let reference = {
            let n = 512usize;
            let knots: Vec<f64> = (0..2 * n).map(|j| -PI + j as f64 * PI / n as f64).collect();
            let samples = scalar_samples(knots.iter().map(|t| phi(*t)));
            apply_log_rule(n, s, &knots, &samples)[0].re
        };
        let mut errs = Vec::new();
        for n in [8usize, 16, 32, 64] {
            let knots: Vec<f64> = (0..2 * n).map(|j| -PI + j as f64 * PI / n as f64).collect();
            let samples = scalar_samples(knots.iter().map(|t| phi(*t)));
            let got = apply_log_rule(n, s, &knots, &samples)[0].re;
            errs.push((got - reference).abs());
        }
        for w in errs.windows(2) {
            assert!(
                w[1] <= w[0] / 8.0 + 1e-15,
                "convergence slower than N^-3: {errs:?}"
            );
        }
    }

    #[test]
    fn smooth_rule_examples() {
        let d = make_discretization(10.0 * PI, 4).unwrap();
        let ones: Vec<[C; 2]> = d.knots.iter().map(|_| [C::new(1.0, 0.0); 2]).collect();
        let got = apply_smooth_rule(d.n, &d.knots, &ones)[0].re;
        assert!((got - (20.0 * PI + PI / 4.0)).abs() < 1e-12);

        let d = make_discretization(10.0 * PI, 32).unwrap();
        let gauss = scalar_samples(d.knots.iter().map(|t| (-t * t).exp()));
        let got = apply_smooth_rule(d.n, &d.knots, &gauss)[0].re;
        assert!((got - PI.sqrt()).abs() <= 1e-12, "{got} vs sqrt(pi)");
    }

    #[test]
    fn rules_are_linear() {
        let d = make_discretization(PI, 8).unwrap();
        let a: Vec<[C; 2]> = d
            .knots
            .iter()
            .map(|t| [C::new(t.sin(), 0.2 * t), C::new(0.1, t.cos())])
            .collect();
        let b: Vec<[C; 2]> = d
            .knots
            .iter()
            .map(|t| [C::new(0.5 - t, 1.0), C::new(t * t, -0.3)])
            .collect();
        let sum: Vec<[C; 2]> = a
            .iter()
            .zip(&b)
            .map(|(x, y)| [x[0] + y[0], x[1] + y[1]])
            .collect();
        let rules: [(fn(usize, &[f64], &[[C; 2]]) -> [C; 2], &str); 2] = [
            (|n, k, v| apply_log_rule(n, 0.25, k, v), "log"),
            (|n, k, v| apply_smooth_rule(n, k, v), "smooth"),
        ];
        for (rule, label) in rules {
            let ra = rule(d.n, &d.knots, &a);
            let rb = rule(d.n, &d.knots, &b);
            let rs = rule(d.n, &d.knots, &sum);
            for c in 0..2 {
                assert!((rs[c] - ra[c] - rb[c]).norm() <= 1e-13, "{label}");
            }
        }
    }
}
