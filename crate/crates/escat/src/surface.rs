//! Rough-surface profiles and the geometric quantities the kernels need:
//! chord distances, image distances, normals and the smooth ratios with
//! their diagonal limits.
//!
//! A profile is the graph of a twice-differentiable function `f`, supplied
//! in closed form together with its first two derivatives. The image line
//! `x2 = h` sits strictly below the surface.
//!
//! ```
//! use escat::surface::SurfaceProfile;
//! let surf = SurfaceProfile::flat(-1.0);
//! let g = surf.geometry(0.0, 3.0);
//! assert_eq!(g.r, 3.0);
//! assert_eq!(g.nu_t, [0.0, 1.0]);
//! ```

/// Height profile with derivatives and the image line level `h < inf f`.
pub struct SurfaceProfile {
    f: Box<dyn Fn(f64) -> f64 + Sync + Send>,
    df: Box<dyn Fn(f64) -> f64 + Sync + Send>,
    ddf: Box<dyn Fn(f64) -> f64 + Sync + Send>,
    /// Image line level `h`.
    pub image_level: f64,
}

/// All geometry entering the kernel formulas at a pair `(s, t)`.
#[derive(Debug, Clone, Copy)]
pub struct GeometryAt {
    /// `|x(s) - y(t)|`
    pub r: f64,
    /// `|x(s) - y'(t)|` with `y'` reflected across `x2 = h`
    pub r_image: f64,
    /// unit upward normal at `y(t)`
    pub nu_t: [f64; 2],
    /// `sqrt(1 + f'(t)^2) * nu(t) = (-f'(t), 1)`
    pub l_t: [f64; 2],
    /// `(1, f'(t))`
    pub l_perp_t: [f64; 2],
    /// `sqrt(1 + f'(t)^2)`
    pub jacobian_t: f64,
}

impl SurfaceProfile {
    /// Build a profile from closed-form `f`, `f'`, `f''` and image level `h`.
    pub fn new(
        f: impl Fn(f64) -> f64 + Sync + Send + 'static,
        df: impl Fn(f64) -> f64 + Sync + Send + 'static,
        ddf: impl Fn(f64) -> f64 + Sync + Send + 'static,
        image_level: f64,
    ) -> Self {
        Self { f: Box::new(f), df: Box::new(df), ddf: Box::new(ddf), image_level }
    }

    /// `f = 0`.
    pub fn flat(image_level: f64) -> Self {
        Self::new(|_| 0.0, |_| 0.0, |_| 0.0, image_level)
    }

    /// `f(t) = 0.084 sin(0.6 pi t) + 0.084 sin(0.24 pi t) + 0.03 sin(1.5 pi (t - 1))`.
    pub fn periodic(image_level: f64) -> Self {
        use std::f64::consts::PI;
        let (a1, w1) = (0.084, 0.6 * PI);
        let (a2, w2) = (0.084, 0.24 * PI);
        let (a3, w3) = (0.03, 1.5 * PI);
        Self::new(
            move |t| a1 * (w1 * t).sin() + a2 * (w2 * t).sin() + a3 * (w3 * (t - 1.0)).sin(),
            move |t| {
                a1 * w1 * (w1 * t).cos() + a2 * w2 * (w2 * t).cos()
                    + a3 * w3 * (w3 * (t - 1.0)).cos()
            },
            move |t| {
                -a1 * w1 * w1 * (w1 * t).sin() - a2 * w2 * w2 * (w2 * t).sin()
                    - a3 * w3 * w3 * (w3 * (t - 1.0)).sin()
            },
            image_level,
        )
    }

    /// `f(t) = 0.1 cos(0.1 t^2) exp(-sin t)`.
    pub fn rough(image_level: f64) -> Self {
        let f = |t: f64| 0.1 * (0.1 * t * t).cos() * (-t.sin()).exp();
        let df = |t: f64| {
            let (c, s) = ((0.1 * t * t).cos(), (0.1 * t * t).sin());
            (-0.02 * t * s - 0.1 * c * t.cos()) * (-t.sin()).exp()
        };
        let ddf = |t: f64| {
            let (c, s) = ((0.1 * t * t).cos(), (0.1 * t * t).sin());
            let g = -0.02 * t * s - 0.1 * c * t.cos();
            let gp = -0.02 * s - 0.004 * t * t * c + 0.02 * t * s * t.cos() + 0.1 * c * t.sin();
            (gp - g * t.cos()) * (-t.sin()).exp()
        };
        Self::new(f, df, ddf, image_level)
    }

    pub fn f(&self, t: f64) -> f64 {
        (self.f)(t)
    }
    pub fn df(&self, t: f64) -> f64 {
        (self.df)(t)
    }
    pub fn ddf(&self, t: f64) -> f64 {
        (self.ddf)(t)
    }

    /// Surface point `y(t) = (t, f(t))`.
    pub fn point(&self, t: f64) -> [f64; 2] {
        [t, self.f(t)]
    }

    /// Image point `y'(t) = (t, 2h - f(t))`.
    pub fn image_point(&self, t: f64) -> [f64; 2] {
        [t, 2.0 * self.image_level - self.f(t)]
    }

    /// `sqrt(1 + f'(t)^2)`.
    pub fn jacobian(&self, t: f64) -> f64 {
        self.df(t).hypot(1.0)
    }

    /// Minimum of `f` sampled at resolution `step` over `[a, b]`.
    pub fn sampled_min(&self, a: f64, b: f64, step: f64) -> f64 {
        let mut m = f64::INFINITY;
        let mut t = a;
        while t <= b {
            m = m.min(self.f(t));
            t += step;
        }
        m
    }

    /// All geometric quantities at `(s, t)`.
    pub fn geometry(&self, s: f64, t: f64) -> GeometryAt {
        let (fs, ft, dft) = (self.f(s), self.f(t), self.df(t));
        let jac = dft.hypot(1.0);
        let h = self.image_level;
        GeometryAt {
            r: (s - t).hypot(fs - ft),
            r_image: (s - t).hypot(fs + ft - 2.0 * h),
            nu_t: [-dft / jac, 1.0 / jac],
            l_t: [-dft, 1.0],
            l_perp_t: [1.0, dft],
            jacobian_t: jac,
        }
    }

    /// `r(s,t) / |s - t|`, extended by `sqrt(1 + f'(s)^2)` on the diagonal.
    pub fn r_ratio(&self, s: f64, t: f64) -> f64 {
        if (s - t).abs() < DIAG_EPS {
            self.jacobian(s)
        } else {
            self.geometry(s, t).r / (s - t).abs()
        }
    }

    /// Second-order chord defect `w(s,t) = (s-t) f'(t) + f(t) - f(s)`.
    ///
    /// The direct formula cancels catastrophically for small `|s-t|`
    /// (`w = O((s-t)^2)` built from `O(s-t)` pieces), so below a small
    /// separation it is replaced by the exact Taylor-remainder integral
    /// `w = -(s-t)^2 int_0^1 (1-sigma) f''(t + (s-t) sigma) dsigma`
    /// evaluated with a Gauss-Legendre rule.
    pub fn chord_defect(&self, s: f64, t: f64) -> f64 {
        let u = s - t;
        if u.abs() >= 1e-2 {
            return u * self.df(t) + self.f(t) - self.f(s);
        }
        // 4-point Gauss-Legendre on [0,1]
        const NODES: [f64; 4] = [
            0.069431844202973714,
            0.330009478207571868,
            0.669990521792428132,
            0.930568155797026286,
        ];
        const WEIGHTS: [f64; 4] = [
            0.173927422568726929,
            0.326072577431273071,
            0.326072577431273071,
            0.173927422568726929,
        ];
        let mut acc = 0.0;
        for (x, w) in NODES.iter().zip(WEIGHTS) {
            acc += w * (1.0 - x) * self.ddf(t + u * x);
        }
        -u * u * acc
    }

    /// `xi(s,t) = ((s-t) f'(t) + f(t) - f(s)) / r^2`,
    /// extended by `-f''(s) / (2 (1 + f'(s)^2))` on the diagonal.
    pub fn xi(&self, s: f64, t: f64) -> f64 {
        if (s - t).abs() < DIAG_EPS {
            let dfs = self.df(s);
            return -self.ddf(s) / (2.0 * (1.0 + dfs * dfs));
        }
        let g = self.geometry(s, t);
        self.chord_defect(s, t) / (g.r * g.r)
    }

    /// `zeta_jk = (x_j - y_j)(x_k - y_k) / r^2`: outer product of the unit
    /// chord, extended by `l_perp l_perp^T / (1 + f'^2)` on the diagonal.
    pub fn zeta(&self, s: f64, t: f64) -> [[f64; 2]; 2] {
        let d = if (s - t).abs() < DIAG_EPS {
            [1.0, self.df(s)]
        } else {
            [s - t, self.f(s) - self.f(t)]
        };
        let n2 = d[0] * d[0] + d[1] * d[1];
        [
            [d[0] * d[0] / n2, d[0] * d[1] / n2],
            [d[1] * d[0] / n2, d[1] * d[1] / n2],
        ]
    }
}

/// Below this separation the closed-form diagonal limits replace the direct
/// quotients, which lose about half the significant digits there.
pub const DIAG_EPS: f64 = 1e-7;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_geometry() {
        let surf = SurfaceProfile::flat(-1.0);
        let g = surf.geometry(0.0, 3.0);
        assert_eq!(g.r, 3.0);
        assert_eq!(g.nu_t, [0.0, 1.0]);
        assert_eq!(g.jacobian_t, 1.0);
        assert_eq!(surf.geometry(0.0, 0.0).r_image, 2.0);
    }

    #[test]
    fn parabola_chord() {
        let surf = SurfaceProfile::new(|t| t * t, |t| 2.0 * t, |_| 2.0, -1.0);
        assert!((surf.geometry(0.0, 1.0).r - 2f64.sqrt()).abs() < 1e-15);
        assert!((surf.xi(0.0, 0.0) - (-1.0)).abs() < 1e-15);
    }

    #[test]
    fn normal_is_unit_and_scaled() {
        let surf = SurfaceProfile::rough(-0.5);
        for t in [-3.0, 0.4, 7.7] {
            let g = surf.geometry(0.0, t);
            let n = g.nu_t[0].hypot(g.nu_t[1]);
            assert!((n - 1.0).abs() < 1e-14);
            assert!((g.l_t[0] - g.jacobian_t * g.nu_t[0]).abs() < 1e-14);
            assert!((g.l_t[1] - g.jacobian_t * g.nu_t[1]).abs() < 1e-14);
        }
    }

    #[test]
    fn r_ratio_limits() {
        let surf = SurfaceProfile::flat(-1.0);
        assert_eq!(surf.r_ratio(0.3, 2.0), 1.0);
        let surf = SurfaceProfile::new(|t| t.sin(), |t| t.cos(), |t| -t.sin(), -2.0);
        assert_eq!(surf.r_ratio(0.0, 0.0), 2f64.sqrt());
        assert!((surf.r_ratio(0.0, 1e-6) - 2f64.sqrt()).abs() < 2e-6);
    }

    #[test]
    fn xi_limit_sweep() {
        let surf = SurfaceProfile::new(|t| t.sin(), |t| t.cos(), |t| -t.sin(), -2.0);
        let s = 0.1;
        let diag = surf.xi(s, s);
        assert!((surf.xi(s, s + 1e-5) - diag).abs() < 1e-4);
    }

    #[test]
    fn zeta_structure() {
        let flat = SurfaceProfile::flat(-1.0);
        assert_eq!(flat.zeta(0.0, 0.0), [[1.0, 0.0], [0.0, 0.0]]);
        let slope = SurfaceProfile::new(|t| t, |_| 1.0, |_| 0.0, -1.0);
        let z = slope.zeta(2.0, 2.0);
        for row in z {
            for v in row {
                assert!((v - 0.5).abs() < 1e-15);
            }
        }
        let surf = SurfaceProfile::rough(-0.5);
        for (s, t) in [(0.0, 1.0), (2.0, -0.3), (5.0, 5.0)] {
            let z = surf.zeta(s, t);
            assert!((z[0][0] + z[1][1] - 1.0).abs() < 1e-14);
            assert!((z[0][1] - z[1][0]).abs() < 1e-15);
            // eigenvalues of a rank-one projection are 0 and 1
            let det = z[0][0] * z[1][1] - z[0][1] * z[1][0];
            assert!(det.abs() < 1e-14);
        }
    }

    #[test]
    fn diagonal_richardson_consistency() {
        let surf = SurfaceProfile::periodic(-0.7);
        let s = 0.35;
        for (diag, f) in [
            (surf.r_ratio(s, s), &(|e: f64| surf.r_ratio(s, s + e)) as &dyn Fn(f64) -> f64),
            (surf.xi(s, s), &|e: f64| surf.xi(s, s + e)),
        ] {
            let mut last = f64::INFINITY;
            for e in [1e-2, 1e-3, 1e-4] {
                let err = (f(e) - diag).abs();
                assert!(err < last * 1.01, "diagonal approach not improving");
                last = err;
            }
            assert!(last < 1e-4);
        }
    }

    #[test]
    fn image_distance_positive() {
        let surf = SurfaceProfile::rough(-0.6);
        let mut min_r = f64::INFINITY;
        for i in 0..50 {
            for j in 0..50 {
                let (s, t) = (-10.0 + 0.4 * i as f64, -10.0 + 0.4 * j as f64);
                min_r = min_r.min(surf.geometry(s, t).r_image);
            }
        }
        assert!(min_r > 0.0);
        let flat = SurfaceProfile::flat(-1.0);
        assert!(flat.geometry(0.0, 0.0).r_image >= 2.0 * (1.0 - 1e-12));
    }
}
