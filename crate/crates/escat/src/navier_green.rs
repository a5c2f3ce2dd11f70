//! Free-space Green's tensor of the 2D Navier equation, its generalized
//! traction, and the image-point combined kernel.
//!
//! The tensor is written as `G(x,y) = a(r) I + b(r) d (x) d` with `d = x - y`,
//! `r = |d|` and
//!
//! ```text
//! a(r) = (i/4mu) H0(ks r) - (i/(4w^2)) (ks H1(ks r) - kp H1(kp r)) / r
//! b(r) = (i/(4w^2)) (ks^2 H2(ks r) - kp^2 H2(kp r)) / r^2
//! ```
//!
//! Applying the generalized stress operator
//! `P u = (mu + mu~) du/dnu + lambda~ nu div u - mu~ nu_perp div_perp u`
//! to the columns of `G` in closed form (via `a'`, `b'`) gives the
//! double-layer kernel; the same applied through the reflection
//! `y -> (y1, 2h - y2)` gives the image kernel.
//!
//! ```
//! use escat::navier_green::ElasticMedium;
//! let m = ElasticMedium::with_default_eta(1.0, 1.0, 20.0);
//! assert!(m.kappa_s > m.kappa_p);
//! assert!((m.mu_tilde + m.lambda_tilde - (m.lambda + m.mu)).abs() < 1e-14);
//! ```

use crate::specfun::hankel1;
use crate::surface::SurfaceProfile;
use num_complex::Complex64;

/// 2x2 complex matrix in row-major layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMat2(pub [[Complex64; 2]; 2]);

impl ComplexMat2 {
    pub const ZERO: Self = Self([[Complex64::new(0.0, 0.0); 2]; 2]);

    pub fn identity() -> Self {
        let mut m = Self::ZERO;
        m.0[0][0] = Complex64::new(1.0, 0.0);
        m.0[1][1] = Complex64::new(1.0, 0.0);
        m
    }

    /// `u (x) v` (outer product of real 2-vectors).
    pub fn outer(u: [f64; 2], v: [f64; 2]) -> Self {
        let mut m = Self::ZERO;
        for j in 0..2 {
            for k in 0..2 {
                m.0[j][k] = Complex64::new(u[j] * v[k], 0.0);
            }
        }
        m
    }

    pub fn matvec(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    pub fn transpose(&self) -> Self {
        let mut m = *self;
        m.0[0][1] = self.0[1][0];
        m.0[1][0] = self.0[0][1];
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

impl std::ops::Add for ComplexMat2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for j in 0..2 {
            for k in 0..2 {
                m.0[j][k] += rhs.0[j][k];
            }
        }
        m
    }
}

impl std::ops::Sub for ComplexMat2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut m = self;
        for j in 0..2 {
            for k in 0..2 {
                m.0[j][k] -= rhs.0[j][k];
            }
        }
        m
    }
}

impl std::ops::Mul<ComplexMat2> for Complex64 {
    type Output = ComplexMat2;
    fn mul(self, rhs: ComplexMat2) -> ComplexMat2 {
        let mut m = rhs;
        for j in 0..2 {
            for k in 0..2 {
                m.0[j][k] *= self;
            }
        }
        m
    }
}

impl std::ops::Mul<ComplexMat2> for f64 {
    type Output = ComplexMat2;
    fn mul(self, rhs: ComplexMat2) -> ComplexMat2 {
        Complex64::new(self, 0.0) * rhs
    }
}

/// Material and frequency data with all derived constants.
#[derive(Debug, Clone, Copy)]
pub struct ElasticMedium {
    pub lambda: f64,
    pub mu: f64,
    pub omega: f64,
    /// shear wavenumber `omega / sqrt(mu)`
    pub kappa_s: f64,
    /// compressional wavenumber `omega / sqrt(lambda + 2 mu)`
    pub kappa_p: f64,
    /// `1 / mu`
    pub c_s2: f64,
    /// `1 / (lambda + 2 mu)`
    pub c_p2: f64,
    /// `mu (lambda + mu) / (lambda + 3 mu)`
    pub mu_tilde: f64,
    /// `(lambda + mu)(lambda + 2 mu) / (lambda + 3 mu)`
    pub lambda_tilde: f64,
    /// coupling parameter, `Re(eta) > 0`
    pub eta: Complex64,
}

impl ElasticMedium {
    pub fn new(lambda: f64, mu: f64, omega: f64, eta: Complex64) -> Self {
        assert!(mu > 0.0, "mu must be positive");
        assert!(lambda + 2.0 * mu > 0.0, "lambda + 2 mu must be positive");
        assert!(omega > 0.0, "omega must be positive");
        assert!(eta.re > 0.0, "Re(eta) must be positive");
        Self {
            lambda,
            mu,
            omega,
            kappa_s: omega / mu.sqrt(),
            kappa_p: omega / (lambda + 2.0 * mu).sqrt(),
            c_s2: 1.0 / mu,
            c_p2: 1.0 / (lambda + 2.0 * mu),
            mu_tilde: mu * (lambda + mu) / (lambda + 3.0 * mu),
            lambda_tilde: (lambda + mu) * (lambda + 2.0 * mu) / (lambda + 3.0 * mu),
            eta,
        }
    }

    /// Default coupling `eta = kappa_s`.
    pub fn with_default_eta(lambda: f64, mu: f64, omega: f64) -> Self {
        let ks = omega / mu.sqrt();
        Self::new(lambda, mu, omega, Complex64::new(ks, 0.0))
    }

    /// `kappa_s^2 H2(kappa_s r) - kappa_p^2 H2(kappa_p r)` and friends.
    fn h_delta(&self, n: usize, r: f64) -> Complex64 {
        self.kappa_s.powi(n as i32) * hankel1(n, self.kappa_s * r)
            - self.kappa_p.powi(n as i32) * hankel1(n, self.kappa_p * r)
    }

    /// Radial parts `a`, `b` and derivatives `a'`, `b'` of the Green tensor.
    fn radial(&self, r: f64) -> (Complex64, Complex64, Complex64, Complex64) {
        let i = Complex64::i();
        let w2 = self.omega * self.omega;
        let a = i / (4.0 * self.mu) * hankel1(0, self.kappa_s * r) - i / (4.0 * w2) * self.h_delta(1, r) / r;
        let b = i / (4.0 * w2) * self.h_delta(2, r) / (r * r);
        let ap = -i / (4.0 * self.mu) * self.kappa_s * hankel1(1, self.kappa_s * r)
            + i / (4.0 * w2) * self.h_delta(2, r) / r;
        let bp = -i / (4.0 * w2) * self.h_delta(3, r) / (r * r);
        (a, b, ap, bp)
    }
}

fn diff(x: [f64; 2], y: [f64; 2]) -> ([f64; 2], f64) {
    let d = [x[0] - y[0], x[1] - y[1]];
    (d, d[0].hypot(d[1]))
}

/// Free-space Green's tensor `G(x, y)`.
///
/// # Panics
/// If `x == y`.
pub fn green_tensor(medium: &ElasticMedium, x: [f64; 2], y: [f64; 2]) -> ComplexMat2 {
    let (d, r) = diff(x, y);
    assert!(r > 0.0, "green_tensor is singular at x = y");
    let (a, b, _, _) = medium.radial(r);
    a * ComplexMat2::identity() + b * ComplexMat2::outer(d, d)
}

/// Double-layer kernel entries `[P^(y) G(x, y(t))]_jk` at the surface point
/// `y(t)`, before the factor `2 sqrt(1 + f'(t)^2)`.
///
/// # Panics
/// If `x` coincides with the surface point.
pub fn green_traction(
    medium: &ElasticMedium,
    surface: &SurfaceProfile,
    x: [f64; 2],
    t: f64,
) -> ComplexMat2 {
    let (d, r) = diff(x, surface.point(t));
    assert!(r > 0.0, "green_traction is singular at x = y(t)");
    let (_, b, ap, bp) = medium.radial(r);
    let g = surface.geometry(t, t);
    let nu = g.nu_t;
    let nu_perp = [nu[1], -nu[0]];
    let nu_dot_d = nu[0] * d[0] + nu[1] * d[1];
    let e = [d[1], -d[0]];
    let mm = medium.mu + medium.mu_tilde;

    // normal-derivative part
    let mut p = Complex64::new(-mm, 0.0)
        * (ap / r * nu_dot_d * ComplexMat2::identity()
            + bp / r * nu_dot_d * ComplexMat2::outer(d, d)
            + b * (ComplexMat2::outer(nu, d) + ComplexMat2::outer(d, nu)));
    // divergence part: div_y G_(j.) = -(a'/r + b' r + 3b) d_j
    p = p - medium.lambda_tilde * ((ap / r + bp * r + 3.0 * b) * ComplexMat2::outer(d, nu));
    // rotated-divergence part: div_perp_y G_(j.) = -(a'/r - b) e_j
    p = p + medium.mu_tilde * ((ap / r - b) * ComplexMat2::outer(e, nu_perp));
    p
}

/// Image-point combined kernel: traction through the reflection
/// `y -> y' = (y1, 2h - y2)` minus `i eta G(x, y'(t))`.
///
/// The reflection enters through the Jacobian `diag(-1, 1)`; writing
/// `q = (-1, 1)` the chain rule gives, with `d = x - y'(t)`:
///
/// ```text
/// d(G(x, y'(y)))_l / dy_m = q_m [a' d_m / r I + b' d_m / r d(x)d
///                                + b (delta_(jm) d_l + delta_(lm) d_j)]
/// ```
///
/// which is assembled below into the three parts of `P`. Never singular on
/// the surface since `y'` stays below the image line.
pub fn image_combined(
    medium: &ElasticMedium,
    surface: &SurfaceProfile,
    x: [f64; 2],
    t: f64,
) -> ComplexMat2 {
    let (d, r) = diff(x, surface.image_point(t));
    assert!(r > 0.0, "degenerate geometry: x on the image point");
    let (a, b, ap, bp) = medium.radial(r);
    let g = surface.geometry(t, t);
    let nu = g.nu_t;
    let nu_perp = [nu[1], -nu[0]];
    let qd = [-d[0], d[1]];
    let nu_qd = nu[0] * qd[0] + nu[1] * qd[1];
    let qnu = [-nu[0], nu[1]];
    let mm = medium.mu + medium.mu_tilde;

    let mut p = Complex64::new(mm, 0.0)
        * (ap / r * nu_qd * ComplexMat2::identity()
            + bp / r * nu_qd * ComplexMat2::outer(d, d)
            + b * (ComplexMat2::outer(qnu, d) + ComplexMat2::outer(d, qnu)));
    // div of the reflected columns: (a'/r + b) q_j d_j + b'/r (d2^2 - d1^2) d_j
    let div = [
        (ap / r + b) * qd[0] + bp / r * (d[1] * d[1] - d[0] * d[0]) * d[0],
        (ap / r + b) * qd[1] + bp / r * (d[1] * d[1] - d[0] * d[0]) * d[1],
    ];
    for j in 0..2 {
        for k in 0..2 {
            p.0[j][k] += medium.lambda_tilde * div[j] * nu[k];
        }
    }
    // rotated div: (a'/r + b)(d2, d1)_j + 2 b'/r d1 d2 d_j
    let divp = [
        (ap / r + b) * d[1] + 2.0 * bp / r * d[0] * d[1] * d[0],
        (ap / r + b) * d[0] + 2.0 * bp / r * d[0] * d[1] * d[1],
    ];
    for j in 0..2 {
        for k in 0..2 {
            p.0[j][k] -= medium.mu_tilde * divp[j] * nu_perp[k];
        }
    }

    let green_image = a * ComplexMat2::identity() + b * ComplexMat2::outer(d, d);
    p - Complex64::i() * medium.eta * green_image
}

#[cfg(test)]
mod tests;
