use super::*;
use num_complex::Complex64 as C;

fn medium() -> ElasticMedium {
    ElasticMedium::with_default_eta(1.0, 1.0, 20.0)
}

fn assert_mat_close(got: ComplexMat2, want: &[C], tol: f64, label: &str) {
    for j in 0..2 {
        for k in 0..2 {
            let w = want[2 * j + k];
            assert!(
                (got.0[j][k] - w).norm() <= tol * w.norm().max(1.0),
                "{label}[{j}][{k}]: got {} want {w}",
                got.0[j][k]
            );
        }
    }
}

#[test]
fn frozen_green_value() {
    let m = medium();
    let surf = SurfaceProfile::periodic(-0.7);
    let g = green_tensor(&m, [0.3, 1.2], surf.point(0.9));
    let want = [
        C::new(2.60522886735580807e-02, 1.34601388968782366e-02),
        C::new(2.21928669902753568e-02, 2.65583037974994121e-03),
        C::new(2.21928669902753568e-02, 2.65583037974994121e-03),
        C::new(-1.44713850088656198e-03, 1.01692700718808322e-02),
    ];
    assert_mat_close(g, &want, 1e-13, "green");
}

#[test]
fn frozen_traction_values() {
    let m = medium();
    let surf = SurfaceProfile::periodic(-0.7);
    let want = [
        C::new(2.37393738448008096e-01, -4.14133408541400627e-01),
        C::new(3.87340233119253599e-02, -6.08556660716110032e-01),
        C::new(5.74809269617328894e-02, -3.93110097085653809e-01),
        C::new(3.59188807872353077e-01, 1.56716689875199933e-01),
    ];
    assert_mat_close(green_traction(&m, &surf, [0.3, 1.2], 0.9), &want, 1e-12, "traction");

    let rough = SurfaceProfile::rough(-0.6);
    let want = [
        C::new(7.62267988018513754e-02, 4.56563006800155859e-03),
        C::new(4.36042172343243384e-01, 2.75809125238754838e-01),
        C::new(1.40661634017631099e-01, 1.01360196818069653e-01),
        C::new(4.74109871834808433e-02, -2.66771938036964307e-02),
    ];
    assert_mat_close(green_traction(&m, &rough, [-1.3, 2.0], 0.4), &want, 1e-12, "traction rough");
}

#[test]
fn frozen_image_values() {
    let m = medium();
    let surf = SurfaceProfile::periodic(-0.7);
    let want = [
        C::new(6.35267889265059803e-03, -8.85149284608105491e-02),
        C::new(7.03944949086487970e-03, 3.42066903537993461e-01),
        C::new(-1.46121280086911678e-02, -1.69404169660997694e-02),
        C::new(-1.13669145236523439e-01, 6.27177871187502983e-02),
    ];
    assert_mat_close(image_combined(&m, &surf, [0.3, 1.2], 0.9), &want, 1e-12, "image");

    let flat = SurfaceProfile::flat(-1.0);
    let want = [
        C::new(-2.57970144039212229e-03, 8.28004660472736465e-03),
        C::new(0.0, 0.0),
        C::new(0.0, 0.0),
        C::new(1.26262822647637579e-01, 8.93804052624040946e-02),
    ];
    assert_mat_close(image_combined(&m, &flat, [0.0, 0.0], 0.0), &want, 1e-12, "image flat");

    let rough = SurfaceProfile::rough(-0.6);
    let want = [
        C::new(1.64978154123775478e-02, 4.30681153698941888e-03),
        C::new(4.46448896746305834e-01, 3.36796721094049289e-01),
        C::new(5.99041290740045529e-02, 6.74795291013468024e-02),
        C::new(2.76616644043986504e-01, 2.22966438902696157e-01),
    ];
    assert_mat_close(image_combined(&m, &rough, [-1.3, 2.0], 0.4), &want, 1e-12, "image rough");
}

fn lcg_pairs(n: usize) -> Vec<([f64; 2], [f64; 2])> {
    // simple deterministic pseudo-random point pairs
    let mut state = 0x12345678u64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    (0..n)
        .map(|_| {
            let x = [4.0 * next() - 2.0, 4.0 * next() - 2.0];
            let y = [x[0] + 3.0 * next() + 0.1, x[1] + 3.0 * next() + 0.1];
            (x, y)
        })
        .collect()
}

#[test]
fn reciprocity() {
    let m = medium();
    for (x, y) in lcg_pairs(100) {
        let g = green_tensor(&m, x, y);
        let gt = green_tensor(&m, y, x).transpose();
        let scale = g.max_abs();
        assert!((g - gt).max_abs() <= 1e-13 * scale, "reciprocity at {x:?} {y:?}");
    }
}

#[test]
fn translation_invariance() {
    let m = medium();
    let (x, y) = ([0.4, 1.7], [-0.9, 0.2]);
    let d = [2.3, -5.1];
    let g1 = green_tensor(&m, x, y);
    let g2 = green_tensor(&m, [x[0] + d[0], x[1] + d[1]], [y[0] + d[0], y[1] + d[1]]);
    assert!((g1 - g2).max_abs() <= 1e-12 * g1.max_abs());
}

#[test]
fn rotation_equivariance() {
    let m = medium();
    let th: f64 = 0.83;
    let (c, s) = (th.cos(), th.sin());
    let rot = |v: [f64; 2]| [c * v[0] - s * v[1], s * v[0] + c * v[1]];
    for (x, y) in lcg_pairs(20) {
        let g = green_tensor(&m, x, y);
        let gr = green_tensor(&m, rot(x), rot(y));
        // Q G Q^T
        let q = [[c, -s], [s, c]];
        let mut want = ComplexMat2::ZERO;
        for j in 0..2 {
            for k in 0..2 {
                for a in 0..2 {
                    for b in 0..2 {
                        want.0[j][k] += q[j][a] * g.0[a][b] * q[k][b];
                    }
                }
            }
        }
        assert!((gr - want).max_abs() <= 1e-12 * g.max_abs());
    }
}

#[test]
fn navier_residual_finite_difference() {
    // mu Lap G_(.k) + (lambda + mu) grad div G_(.k) + w^2 G_(.k) = 0 away from y
    let m = medium();
    let y = [0.0, 0.0];
    let x = [0.6, 0.8]; // |x - y| = 1
    let h = 1e-4;
    let g = |p: [f64; 2]| green_tensor(&m, p, y);
    let scale = g(x).max_abs();
    for k in 0..2 {
        let col = |p: [f64; 2], j: usize| g(p).0[j][k];
        for j in 0..2 {
            let lap = (col([x[0] + h, x[1]], j) + col([x[0] - h, x[1]], j)
                + col([x[0], x[1] + h], j)
                + col([x[0], x[1] - h], j)
                - 4.0 * col(x, j))
                / (h * h);
            // grad_j (div u) by second differences
            let div_at = |p: [f64; 2]| {
                (col([p[0] + h, p[1]], 0) - col([p[0] - h, p[1]], 0)
                    + col([p[0], p[1] + h], 1)
                    - col([p[0], p[1] - h], 1))
                    / (2.0 * h)
            };
            let grad_div = if j == 0 {
                (div_at([x[0] + h, x[1]]) - div_at([x[0] - h, x[1]])) / (2.0 * h)
            } else {
                (div_at([x[0], x[1] + h]) - div_at([x[0], x[1] - h])) / (2.0 * h)
            };
            let res = m.mu * lap + (m.lambda + m.mu) * grad_div
                + m.omega * m.omega * col(x, j);
            assert!(res.norm() <= 1e-4 * scale * m.omega * m.omega, "residual {res} at ({j},{k})");
        }
    }
}

/// Apply the generalized stress operator to a vector field by central
/// differences: `P u = (mu + mu~) du/dnu + lambda~ nu div u - mu~ nu_perp div_perp u`.
fn traction_fd(
    m: &ElasticMedium,
    phi: &dyn Fn([f64; 2]) -> [Complex64; 2],
    y: [f64; 2],
    nu: [f64; 2],
) -> [Complex64; 2] {
    let h = 1e-6;
    let gradc = |comp: usize| {
        let gx = (phi([y[0] + h, y[1]])[comp] - phi([y[0] - h, y[1]])[comp]) / (2.0 * h);
        let gy = (phi([y[0], y[1] + h])[comp] - phi([y[0], y[1] - h])[comp]) / (2.0 * h);
        [gx, gy]
    };
    let (g0, g1) = (gradc(0), gradc(1));
    let div = g0[0] + g1[1];
    let divp = g0[1] - g1[0];
    let nup = [nu[1], -nu[0]];
    let mm = m.mu + m.mu_tilde;
    [
        mm * (nu[0] * g0[0] + nu[1] * g0[1]) + m.lambda_tilde * nu[0] * div
            - m.mu_tilde * nup[0] * divp,
        mm * (nu[0] * g1[0] + nu[1] * g1[1]) + m.lambda_tilde * nu[1] * div
            - m.mu_tilde * nup[1] * divp,
    ]
}

#[test]
fn traction_matches_finite_difference() {
    let m = medium();
    let surf = SurfaceProfile::periodic(-0.7);
    let x = [0.3, 1.2];
    let t = 0.9;
    let closed = green_traction(&m, &surf, x, t);
    let y = surf.point(t);
    let nu = surf.geometry(t, t).nu_t;
    for j in 0..2 {
        let phi = |p: [f64; 2]| {
            let g = green_tensor(&m, x, p);
            [g.0[j][0], g.0[j][1]]
        };
        let fd = traction_fd(&m, &phi, y, nu);
        for k in 0..2 {
            assert!(
                (closed.0[j][k] - fd[k]).norm() <= 1e-5,
                "traction FD mismatch at ({j},{k}): {} vs {}",
                closed.0[j][k],
                fd[k]
            );
        }
    }
}

#[test]
fn image_matches_finite_difference() {
    let m = medium();
    let surf = SurfaceProfile::flat(-1.0);
    let x = [0.2, 0.6];
    let t = -0.4;
    let closed = image_combined(&m, &surf, x, t);
    let y = surf.point(t);
    let nu = surf.geometry(t, t).nu_t;
    let h2 = 2.0 * surf.image_level;
    let g_img = green_tensor(&m, x, surf.image_point(t));
    for j in 0..2 {
        let phi = |p: [f64; 2]| {
            let g = green_tensor(&m, x, [p[0], h2 - p[1]]);
            [g.0[j][0], g.0[j][1]]
        };
        let fd = traction_fd(&m, &phi, y, nu);
        for k in 0..2 {
            let want = fd[k] - Complex64::i() * m.eta * g_img.0[j][k];
            assert!(
                (closed.0[j][k] - want).norm() <= 1e-5,
                "image FD mismatch at ({j},{k}): {} vs {want}",
                closed.0[j][k]
            );
        }
    }
}

#[test]
fn image_eta_linearity() {
    let m1 = medium();
    let m2 = ElasticMedium::new(1.0, 1.0, 20.0, 2.0 * m1.eta);
    let surf = SurfaceProfile::periodic(-0.7);
    let (x, t) = ([0.3, 1.2], 0.9);
    let d = image_combined(&m1, &surf, x, t) - image_combined(&m2, &surf, x, t);
    let want = Complex64::i() * m1.eta * green_tensor(&m1, x, surf.image_point(t));
    assert!((d - want).max_abs() <= 1e-13 * want.max_abs());
}

#[test]
fn traction_far_field_decay() {
    let m = medium();
    let surf = SurfaceProfile::flat(-1.0);
    let mut prev = f64::INFINITY;
    for k in 0..4 {
        let dist = 10.0 * 2f64.powi(k);
        let v = green_traction(&m, &surf, [0.3 * dist, dist], 0.0).max_abs();
        if prev.is_finite() {
            // r^(-1/2) decay: halving expected within 20%
            let ratio = v / prev;
            let want = 1.0 / 2f64.sqrt();
            assert!((ratio - want).abs() < 0.2 * want, "decay ratio {ratio}");
        }
        prev = v;
    }
}
