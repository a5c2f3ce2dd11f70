//! Split of the boundary-operator kernel `A(s,t)` into a periodic-log part
//! and a smooth remainder,
//!
//! ```text
//! A(s,t) = (1/2pi) B(s,t) ln(4 sin^2((s-t)/2)) + C(s,t),
//! ```
//!
//! where `A = -i eta A1 + A2 - A3` combines the single-layer, double-layer
//! and image kernels. `B` is built from Bessel-J combinations (entire
//! functions), `C` from the remainders, with closed-form diagonal values and
//! a series-stabilized branch close to the diagonal where the naive
//! `A - B ln|s-t|` cancellation would lose precision.
//!
//! ```
//! use escat::kernel_split::chi;
//! assert_eq!(chi(0.5), 1.0);
//! assert_eq!(chi(4.0), 0.0);
//! assert!((chi(2.0) - 0.5310) < 1e-3);
//! ```

use crate::navier_green::{green_tensor, green_traction, image_combined, ComplexMat2, ElasticMedium};
use crate::specfun::{bessel_j, harmonic, j_over_pow, EULER_GAMMA};
use crate::surface::SurfaceProfile;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Smooth even cutoff: 1 on `|u| <= 1`, 0 on `|u| >= pi`,
/// `1 / (1 + exp(1/(pi-|u|) + 1/(1-|u|)))` in between.
pub fn chi(u: f64) -> f64 {
    let a = u.abs();
    if a <= 1.0 {
        1.0
    } else if a >= PI {
        0.0
    } else {
        let e = 1.0 / (PI - a) + 1.0 / (1.0 - a);
        if e > 700.0 {
            0.0
        } else {
            1.0 / (1.0 + e.exp())
        }
    }
}

/// `alpha = 1 + (2i/pi)(C_E - ln 2)`, the constant of the diagonal limits.
fn alpha() -> Complex64 {
    Complex64::new(1.0, 2.0 / PI * (EULER_GAMMA - 2f64.ln()))
}

/// Below `0.05 min(1, 1/kappa_s)` in `|s-t|` the ascending-series forms
/// replace the direct `A - B ln|s-t|` evaluation.
fn series_threshold(m: &ElasticMedium) -> f64 {
    0.05 * (1.0f64).min(1.0 / m.kappa_s)
}

/// Single-layer kernel `A1(s,t) = 2 G(x(s), y(t)) sqrt(1 + f'(t)^2)`.
pub fn kernel_a1(m: &ElasticMedium, surf: &SurfaceProfile, s: f64, t: f64) -> ComplexMat2 {
    assert!(s != t, "A1 is singular on the diagonal; use the split pieces");
    let jac = surf.jacobian(t);
    2.0 * jac * green_tensor(m, surf.point(s), surf.point(t))
}

/// Image kernel `A3(s,t)`: smooth everywhere including the diagonal.
pub fn kernel_a3(m: &ElasticMedium, surf: &SurfaceProfile, s: f64, t: f64) -> ComplexMat2 {
    let jac = surf.jacobian(t);
    2.0 * jac * image_combined(m, surf, surf.point(s), t)
}

/// Double-layer kernel `A2(s,t) = 2 traction sqrt(1 + f'(t)^2)`.
pub fn kernel_a2(m: &ElasticMedium, surf: &SurfaceProfile, s: f64, t: f64) -> ComplexMat2 {
    let jac = surf.jacobian(t);
    2.0 * jac * green_traction(m, surf, surf.point(s), t)
}

/// `kappa_s^n J_n(kappa_s r) - kappa_p^n J_n(kappa_p r)` (zero-safe through
/// `j_over_pow` where a power of `r` is divided out by the caller).
fn jd(m: &ElasticMedium, n: usize, r: f64) -> f64 {
    m.kappa_s.powi(n as i32) * bessel_j(n, m.kappa_s * r)
        - m.kappa_p.powi(n as i32) * bessel_j(n, m.kappa_p * r)
}

/// Geometry bundle shared by the B/C formulas.
struct Pieces {
    r: f64,
    jac: f64,
    /// chord `x(s) - y(t)`
    d: [f64; 2],
    /// `(f(s) - f(t), -(s - t))`
    e: [f64; 2],
    /// `(-f'(t), 1)`
    l: [f64; 2],
    /// `(1, f'(t))`
    lp: [f64; 2],
    /// `(s-t) f'(t) + f(t) - f(s)`
    w: f64,
    xi: f64,
    zeta: [[f64; 2]; 2],
    r_ratio: f64,
}

fn pieces(surf: &SurfaceProfile, s: f64, t: f64) -> Pieces {
    let (fs, ft) = (surf.f(s), surf.f(t));
    let g = surf.geometry(s, t);
    Pieces {
        r: g.r,
        jac: g.jacobian_t,
        d: [s - t, fs - ft],
        e: [fs - ft, -(s - t)],
        l: g.l_t,
        lp: g.l_perp_t,
        w: surf.chord_defect(s, t),
        xi: surf.xi(s, t),
        zeta: surf.zeta(s, t),
        r_ratio: surf.r_ratio(s, t),
    }
}

/// `B1(s,t)`: coefficient of `ln|s-t|` in the single-layer kernel.
/// Entire in `r`, hence also valid on the diagonal.
fn b1_at(m: &ElasticMedium, p: &Pieces) -> ComplexMat2 {
    let r = p.r;
    // (kappa_s J1(ks r) - kappa_p J1(kp r)) / r, continuous at r = 0
    let j1_over_r = m.kappa_s.powi(2) * j_over_pow(1, m.kappa_s * r)
        - m.kappa_p.powi(2) * j_over_pow(1, m.kappa_p * r);
    let diag = -m.c_s2 * bessel_j(0, m.kappa_s * r) + j1_over_r / (m.omega * m.omega);
    let zeta_coeff = -jd(m, 2, r) / (m.omega * m.omega);
    let mut out = ComplexMat2::ZERO;
    for j in 0..2 {
        for k in 0..2 {
            let mut v = zeta_coeff * p.zeta[j][k];
            if j == k {
                v += diag;
            }
            out.0[j][k] = Complex64::new(v * p.jac / PI, 0.0);
        }
    }
    out
}

/// `B2(s,t)`: coefficient of `ln|s-t|` in the double-layer kernel.
/// All terms carry a factor vanishing on the diagonal, so `B2(s,s) = 0`.
fn b2_at(m: &ElasticMedium, p: &Pieces) -> ComplexMat2 {
    let r = p.r;
    let w2 = m.omega * m.omega;
    let mm = m.mu + m.mu_tilde;
    let j1_over_r = m.kappa_s.powi(2) * j_over_pow(1, m.kappa_s * r); // ks J1(ks r)/r
    let j2_over_r2 = m.kappa_s.powi(4) * j_over_pow(2, m.kappa_s * r)
        - m.kappa_p.powi(4) * j_over_pow(2, m.kappa_p * r); // J2-combination / r^2
    let j3_over_r3 = m.kappa_s.powi(6) * j_over_pow(3, m.kappa_s * r)
        - m.kappa_p.powi(6) * j_over_pow(3, m.kappa_p * r); // J3-combination / r^3
    let diag_w = (m.c_s2 * j1_over_r - j2_over_r2 / w2) / PI;
    let dd_w = j3_over_r3 / (PI * w2);
    let mixed = j2_over_r2 / (PI * w2);
    let dl = m.lambda_tilde
        * (-m.c_s2 * j1_over_r + 4.0 * j2_over_r2 / w2 - r * r * j3_over_r3 / w2)
        / PI;
    let elp = m.mu_tilde * m.c_s2 * j1_over_r / PI;
    let mut out = ComplexMat2::ZERO;
    for j in 0..2 {
        for k in 0..2 {
            let mut v = mm * p.w * (dd_w * p.d[j] * p.d[k]);
            if j == k {
                v += mm * p.w * diag_w;
            }
            v += mm * mixed * (p.d[j] * p.l[k] + p.d[k] * p.l[j]);
            v += dl * p.d[j] * p.l[k];
            v += elp * p.e[j] * p.lp[k];
            out.0[j][k] = Complex64::new(v, 0.0);
        }
    }
    out
}

/// `1 + (2i/pi)(C_E + ln(kappa (r/|s-t|) / 2))`: the stable form of the
/// `1 + (2i/pi)(C_E + ln(kappa r / (2|s-t|)))` prefactor of the series.
fn bracket(kappa: f64, r_ratio: f64) -> Complex64 {
    Complex64::new(1.0, 2.0 / PI * (EULER_GAMMA + (kappa * r_ratio / 2.0).ln()))
}

const SERIES_TERMS: usize = 14;

/// `rho_0(kappa_s) = H_0(ks r) - (2i/pi) J_0(ks r) ln|s-t|`, ascending form.
fn rho0(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let ks = m.kappa_s;
    let mut sum = 0.0;
    let mut pw = 1.0; // (ks r / 2)^(2p) / (p!)^2
    for p in 1..SERIES_TERMS {
        pw *= -(ks * r / 2.0) * (ks * r / 2.0) / ((p * p) as f64);
        sum += pw * harmonic(p);
    }
    bracket(ks, rr) * bessel_j(0, ks * r) - Complex64::new(0.0, 2.0 / PI) * sum
}

/// `kappa_s r rho_1(kappa_s)`, ascending form (contains a `-2i/pi` offset).
fn rho1_scaled(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let ks = m.kappa_s;
    let z2 = (ks * r / 2.0) * (ks * r / 2.0);
    let mut sum = 0.0;
    let mut pw = z2; // (ks r/2)^(2p+2) / (p! (p+1)!)
    for p in 0..SERIES_TERMS {
        sum += pw * (harmonic(p) + harmonic(p + 1));
        pw *= -z2 / ((p + 1) as f64 * (p + 2) as f64);
    }
    bracket(ks, rr) * (ks * r * bessel_j(1, ks * r)) - Complex64::new(0.0, 2.0 / PI) * (1.0 + sum)
}

/// `(kappa_s r rho_1 + 2i/pi) / r^2`: the regular part, finite at `r = 0`.
fn rho1_hat(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let ks = m.kappa_s;
    let z2 = (ks * r / 2.0) * (ks * r / 2.0);
    let mut sum = 0.0;
    let mut pw = 1.0; // (ks r/2)^(2p) / (p!(p+1)!)
    for p in 0..SERIES_TERMS {
        sum += pw * (harmonic(p) + harmonic(p + 1));
        pw *= -z2 / ((p + 1) as f64 * (p + 2) as f64);
    }
    bracket(ks, rr) * (ks * ks * j_over_pow(1, ks * r))
        - Complex64::new(0.0, ks * ks / (2.0 * PI)) * sum
}

/// Difference-series tail `sum_p (-1)^p (phi(p)+phi(p+n))/(p!(p+n)!) *
/// (r/2)^(2p) (ks^(2p+2n') - kp^(2p+2n'))` building block. Returns the sum
/// with the stated normalization for the given order.
fn kappa_diff_series(m: &ElasticMedium, n: usize, r: f64) -> f64 {
    let (ks2, kp2) = (m.kappa_s * m.kappa_s, m.kappa_p * m.kappa_p);
    let r2 = (r / 2.0) * (r / 2.0);
    let mut sum = 0.0;
    let mut p_fact = 1.0;
    let mut pn_fact = (1..=n).map(|k| k as f64).product::<f64>();
    let mut ks_pow = ks2.powi(n as i32);
    let mut kp_pow = kp2.powi(n as i32);
    let mut r_pow = 1.0;
    let mut sign = 1.0;
    for p in 0..SERIES_TERMS {
        sum += sign * (harmonic(p) + harmonic(p + n)) / (p_fact * pn_fact)
            * r_pow
            * (ks_pow - kp_pow);
        sign = -sign;
        p_fact *= (p + 1) as f64;
        pn_fact *= (p + 1 + n) as f64;
        ks_pow *= ks2;
        kp_pow *= kp2;
        r_pow *= r2;
    }
    sum
}

/// `gamma_1 = (ks rho_1(ks) - kp rho_1(kp)) / r`, stable difference form.
fn gamma1(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let j1s = m.kappa_s.powi(2) * j_over_pow(1, m.kappa_s * r);
    let j1p = m.kappa_p.powi(2) * j_over_pow(1, m.kappa_p * r);
    bracket(m.kappa_s, rr) * j1s - bracket(m.kappa_p, rr) * j1p
        - Complex64::new(0.0, 1.0 / (2.0 * PI)) * kappa_diff_series(m, 1, r)
}

/// `gamma_2 = ks^2 rho_2(ks) - kp^2 rho_2(kp)`, stable difference form.
fn gamma2(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let dk2 = m.kappa_s * m.kappa_s - m.kappa_p * m.kappa_p;
    bracket(m.kappa_s, rr) * (m.kappa_s * m.kappa_s * bessel_j(2, m.kappa_s * r))
        - bracket(m.kappa_p, rr) * (m.kappa_p * m.kappa_p * bessel_j(2, m.kappa_p * r))
        - Complex64::new(0.0, dk2 / PI)
        - Complex64::new(0.0, r * r / (4.0 * PI)) * kappa_diff_series(m, 2, r)
}

/// `(gamma_2 + i (ks^2 - kp^2)/pi) / r^2`: regular part, finite at `r = 0`.
fn gamma2_hat(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let j2s = m.kappa_s.powi(4) * j_over_pow(2, m.kappa_s * r);
    let j2p = m.kappa_p.powi(4) * j_over_pow(2, m.kappa_p * r);
    bracket(m.kappa_s, rr) * j2s - bracket(m.kappa_p, rr) * j2p
        - Complex64::new(0.0, 1.0 / (4.0 * PI)) * kappa_diff_series(m, 2, r)
}

/// `gamma_3 = r (ks^3 rho_3(ks) - kp^3 rho_3(kp))`, stable difference form.
fn gamma3(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let dk2 = m.kappa_s * m.kappa_s - m.kappa_p * m.kappa_p;
    let dk4 = m.kappa_s.powi(4) - m.kappa_p.powi(4);
    bracket(m.kappa_s, rr) * (m.kappa_s.powi(3) * r * bessel_j(3, m.kappa_s * r))
        - bracket(m.kappa_p, rr) * (m.kappa_p.powi(3) * r * bessel_j(3, m.kappa_p * r))
        - Complex64::new(0.0, 2.0 * dk2 / PI)
        - Complex64::new(0.0, r * r * dk4 / (4.0 * PI))
        - Complex64::new(0.0, r * r * r * r / (8.0 * PI)) * kappa_diff_series(m, 3, r)
}

/// `(gamma_3 + 2i (ks^2 - kp^2)/pi) / r^2`: regular part, finite at `r = 0`.
fn gamma3_hat(m: &ElasticMedium, r: f64, rr: f64) -> Complex64 {
    let dk4 = m.kappa_s.powi(4) - m.kappa_p.powi(4);
    let j3s = m.kappa_s.powi(6) * r * r * j_over_pow(3, m.kappa_s * r);
    let j3p = m.kappa_p.powi(6) * r * r * j_over_pow(3, m.kappa_p * r);
    bracket(m.kappa_s, rr) * j3s - bracket(m.kappa_p, rr) * j3p
        - Complex64::new(0.0, dk4 / (4.0 * PI))
        - Complex64::new(0.0, r * r / (8.0 * PI)) * kappa_diff_series(m, 3, r)
}

/// `C1` by the near-diagonal series form.
fn c1_series(m: &ElasticMedium, p: &Pieces) -> ComplexMat2 {
    let i = Complex64::i();
    let w2 = m.omega * m.omega;
    let diag = i / (2.0 * m.mu) * rho0(m, p.r, p.r_ratio) - i / (2.0 * w2) * gamma1(m, p.r, p.r_ratio);
    let zc = i / (2.0 * w2) * gamma2(m, p.r, p.r_ratio);
    let mut out = ComplexMat2::ZERO;
    for j in 0..2 {
        for k in 0..2 {
            let mut v = zc * p.zeta[j][k];
            if j == k {
                v += diag;
            }
            out.0[j][k] = v * p.jac;
        }
    }
    out
}

/// `sigma` of the stabilized `C2` form, written with the regular `hat`
/// combinations so no term needs `1/r^2` of a vanishing quantity.
fn sigma(m: &ElasticMedium, p: &Pieces) -> ComplexMat2 {
    let i = Complex64::i();
    let w2 = m.omega * m.omega;
    let a0 = (m.lambda + m.mu) / (PI * (m.lambda + 3.0 * m.mu));
    let r1h = rho1_hat(m, p.r, p.r_ratio);
    let g2h = gamma2_hat(m, p.r, p.r_ratio);
    let g3h = gamma3_hat(m, p.r, p.r_ratio);
    let mm = m.mu + m.mu_tilde;
    let mut out = ComplexMat2::ZERO;
    for j in 0..2 {
        for k in 0..2 {
            let dl = p.d[j] * p.l[k];
            let mut v = i / (2.0 * m.mu)
                * (m.lambda_tilde * dl - m.mu_tilde * p.e[j] * p.lp[k])
                * r1h;
            v -= i / (2.0 * w2)
                * (mm * (dl + p.d[k] * p.l[j]) + 4.0 * m.lambda_tilde * dl)
                * g2h;
            v += i * m.lambda_tilde / (2.0 * w2) * dl * g3h;
            if j == k {
                v += a0 * p.xi;
            }
            out.0[j][k] = v;
        }
    }
    out
}

/// `C2` by the near-diagonal series form.
fn c2_series(m: &ElasticMedium, p: &Pieces) -> ComplexMat2 {
    let i = Complex64::i();
    let w2 = m.omega * m.omega;
    let mm = m.mu + m.mu_tilde;
    let diag = -i / (2.0 * m.mu) * rho1_scaled(m, p.r, p.r_ratio)
        + i / (2.0 * w2) * gamma2(m, p.r, p.r_ratio);
    let zc = -i / (2.0 * w2) * gamma3(m, p.r, p.r_ratio);
    let mut out = sigma(m, p);
    for j in 0..2 {
        for k in 0..2 {
            let mut v = zc * p.zeta[j][k];
            if j == k {
                v += diag;
            }
            out.0[j][k] += mm * p.xi * v;
        }
    }
    out
}

/// Closed-form diagonal of `B1` (a multiple of the identity).
fn b1_diag(m: &ElasticMedium, surf: &SurfaceProfile, s: f64) -> ComplexMat2 {
    let jac = surf.jacobian(s);
    let v = (-m.c_s2 + (m.c_s2 - m.c_p2) / 2.0) * jac / PI;
    Complex64::new(v, 0.0) * ComplexMat2::identity()
}

/// Closed-form diagonal of `C1`.
fn c1_diag(m: &ElasticMedium, surf: &SurfaceProfile, s: f64) -> ComplexMat2 {
    let jac = surf.jacobian(s);
    let (ls, lp_) = ((m.kappa_s * jac).ln(), (m.kappa_p * jac).ln());
    let zd = surf.zeta(s, s);
    let dterm = Complex64::i() / 4.0 * alpha() * (m.c_s2 + m.c_p2)
        - Complex64::new(
            (m.c_s2 * ls + m.c_p2 * lp_) / (2.0 * PI) + (m.c_s2 - m.c_p2) / (4.0 * PI),
            0.0,
        );
    let zc = (m.c_s2 - m.c_p2) / (2.0 * PI);
    let mut out = ComplexMat2::ZERO;
    for j in 0..2 {
        for k in 0..2 {
            let mut v = Complex64::new(zc * zd[j][k], 0.0);
            if j == k {
                v += dterm;
            }
            out.0[j][k] = v * jac;
        }
    }
    out
}

/// Closed-form diagonal of `C2` (proportional to `f''(s)` through `xi`).
fn c2_diag(m: &ElasticMedium, surf: &SurfaceProfile, s: f64) -> ComplexMat2 {
    let xi_d = surf.xi(s, s);
    let zd = surf.zeta(s, s);
    let mm = m.mu + m.mu_tilde;
    let dterm = -1.0 + mm / 2.0 * (m.c_s2 - m.c_p2);
    let zc = mm * (m.c_p2 - m.c_s2);
    let mut out = ComplexMat2::ZERO;
    for j in 0..2 {
        for k in 0..2 {
            let mut v = zc * zd[j][k];
            if j == k {
                v += dterm;
            }
            out.0[j][k] = Complex64::new(v * xi_d / PI, 0.0);
        }
    }
    out
}

/// The split `A1 = B1 ln|s-t| + C1`. Valid for all `(s,t)` including `s = t`.
pub fn kernel_b1_c1(
    m: &ElasticMedium,
    surf: &SurfaceProfile,
    s: f64,
    t: f64,
) -> (ComplexMat2, ComplexMat2) {
    if s == t {
        return (b1_diag(m, surf, s), c1_diag(m, surf, s));
    }
    let p = pieces(surf, s, t);
    let b1 = b1_at(m, &p);
    let c1 = if (s - t).abs() < series_threshold(m) {
        c1_series(m, &p)
    } else {
        let mut a1 = kernel_a1(m, surf, s, t);
        let lg = (s - t).abs().ln();
        for j in 0..2 {
            for k in 0..2 {
                a1.0[j][k] -= b1.0[j][k] * lg;
            }
        }
        a1
    };
    (b1, c1)
}

/// The split `A2 = B2 ln|s-t| + C2`. Valid for all `(s,t)` including `s = t`.
pub fn kernel_b2_c2(
    m: &ElasticMedium,
    surf: &SurfaceProfile,
    s: f64,
    t: f64,
) -> (ComplexMat2, ComplexMat2) {
    if s == t {
        return (ComplexMat2::ZERO, c2_diag(m, surf, s));
    }
    let p = pieces(surf, s, t);
    let b2 = b2_at(m, &p);
    let c2 = if (s - t).abs() < series_threshold(m) {
        c2_series(m, &p)
    } else {
        let mut a2 = kernel_a2(m, surf, s, t);
        let lg = (s - t).abs().ln();
        for j in 0..2 {
            for k in 0..2 {
                a2.0[j][k] -= b2.0[j][k] * lg;
            }
        }
        a2
    };
    (b2, c2)
}

/// `ln(sin(x)/x)` with the removable singularity handled by series.
fn ln_sinc(x: f64) -> f64 {
    if x.abs() < 1e-3 {
        let x2 = x * x;
        -x2 / 6.0 - x2 * x2 / 180.0 - x2 * x2 * x2 / 2835.0
    } else {
        (x.sin() / x).ln()
    }
}

/// The final kernel split: evaluators for `B(s,t)` and `C(s,t)`.
pub struct KernelPair<'a> {
    pub medium: &'a ElasticMedium,
    pub surface: &'a SurfaceProfile,
}

/// Build the `(B, C)` pair for a medium and surface.
pub fn kernel_pair<'a>(medium: &'a ElasticMedium, surface: &'a SurfaceProfile) -> KernelPair<'a> {
    KernelPair { medium, surface }
}

impl KernelPair<'_> {
    /// `B* = -i eta B1 + B2` and `C* = -i eta C1 + C2 - A3`.
    fn star(&self, s: f64, t: f64) -> (ComplexMat2, ComplexMat2) {
        let (m, surf) = (self.medium, self.surface);
        let ie = Complex64::i() * m.eta;
        let (b1, c1) = kernel_b1_c1(m, surf, s, t);
        let (b2, c2) = kernel_b2_c2(m, surf, s, t);
        let a3 = kernel_a3(m, surf, s, t);
        let bs = b2 - ie * b1;
        let cs = (c2 - ie * c1) - a3;
        (bs, cs)
    }

    /// Evaluate `B(s,t)` and `C(s,t)` together (they share all kernel work).
    pub fn evaluate(&self, s: f64, t: f64) -> (ComplexMat2, ComplexMat2) {
        let u = s - t;
        if u == 0.0 {
            let (bs, cs) = self.star(s, t);
            return (PI * bs, cs);
        }
        let (bs, cs) = self.star(s, t);
        let x = chi(u);
        let b = (PI * x) * bs;
        let c = if u.abs() >= PI {
            u.abs().ln() * bs + cs
        } else {
            let factor = (1.0 - x) * u.abs().ln() - x * ln_sinc(u / 2.0);
            factor * bs + cs
        };
        (b, c)
    }

    /// `B(s,t)`: supported on `|s-t| < pi`.
    pub fn b(&self, s: f64, t: f64) -> ComplexMat2 {
        if (s - t).abs() >= PI {
            return ComplexMat2::ZERO;
        }
        self.evaluate(s, t).0
    }

    /// `C(s,t)`: the smooth remainder.
    pub fn c(&self, s: f64, t: f64) -> ComplexMat2 {
        self.evaluate(s, t).1
    }
}
