//! Incident fields, closed-form reference solutions, and evaluation of the
//! scattered field from the solved boundary density.

use crate::navier_green::{green_tensor, green_traction, image_combined, ElasticMedium};
use crate::nystrom_solver::Density;
use crate::surface::SurfaceProfile;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Incident wave hitting the surface from above.
#[derive(Debug, Clone)]
pub enum IncidentField {
    /// compressional plane wave `theta e^{i kappa_p x.theta}`
    PlaneP { theta: [f64; 2] },
    /// shear plane wave `theta_perp e^{i kappa_s x.theta}`
    PlaneS { theta: [f64; 2] },
    /// elastic point source `G(x,z) q` with `z` below the surface
    PointSource { z: [f64; 2], q: [f64; 2] },
    /// `alpha u_p + beta u_s` mixture along a shared direction
    Combined {
        alpha: Complex64,
        beta: Complex64,
        theta: [f64; 2],
    },
}

/// Scattering configurations with a known closed-form scattered field.
#[derive(Debug, Clone)]
pub enum ExactSolution {
    /// flat surface at height 0, vertical P-wave: reflection `(0, e^{i kappa_p x2})`
    FlatP,
    /// flat surface at height 0, vertical S-wave: reflection `(e^{i kappa_s x2}, 0)`
    FlatS,
    /// point source below the surface: scattered field is `-G(x,z) q`
    PointSource { z: [f64; 2], q: [f64; 2] },
}

fn unit(theta: [f64; 2]) -> [f64; 2] {
    let n = theta[0].hypot(theta[1]);
    assert!((n - 1.0).abs() < 1e-12, "direction must be a unit vector");
    theta
}

/// Evaluate the incident field at a point.
pub fn incident_eval(field: &IncidentField, m: &ElasticMedium, x: [f64; 2]) -> [Complex64; 2] {
    match field {
        IncidentField::PlaneP { theta } => {
            let th = unit(*theta);
            let ph = (Complex64::i() * m.kappa_p * (x[0] * th[0] + x[1] * th[1])).exp();
            [th[0] * ph, th[1] * ph]
        }
        IncidentField::PlaneS { theta } => {
            let th = unit(*theta);
            let perp = [th[1], -th[0]];
            let ph = (Complex64::i() * m.kappa_s * (x[0] * th[0] + x[1] * th[1])).exp();
            [perp[0] * ph, perp[1] * ph]
        }
        IncidentField::PointSource { z, q } => {
            assert!(x != *z, "incident point-source field is singular at its source");
            let g = green_tensor(m, x, *z);
            g.matvec([Complex64::new(q[0], 0.0), Complex64::new(q[1], 0.0)])
        }
        IncidentField::Combined { alpha, beta, theta } => {
            let p = incident_eval(&IncidentField::PlaneP { theta: *theta }, m, x);
            let s = incident_eval(&IncidentField::PlaneS { theta: *theta }, m, x);
            [alpha * p[0] + beta * s[0], alpha * p[1] + beta * s[1]]
        }
    }
}

/// Closed-form scattered field for the reference configurations.
pub fn exact_scattered(ex: &ExactSolution, m: &ElasticMedium, x: [f64; 2]) -> [Complex64; 2] {
    match ex {
        ExactSolution::FlatP => {
            [Complex64::ZERO, (Complex64::i() * m.kappa_p * x[1]).exp()]
        }
        ExactSolution::FlatS => {
            [(Complex64::i() * m.kappa_s * x[1]).exp(), Complex64::ZERO]
        }
        ExactSolution::PointSource { z, q } => {
            let g = green_tensor(m, x, *z);
            let v = g.matvec([Complex64::new(q[0], 0.0), Complex64::new(q[1], 0.0)]);
            [-v[0], -v[1]]
        }
    }
}

/// Scattered field from the solved density by the discretized combined
/// layer potential (plain `pi/N` rule; all kernels are smooth for `x` off
/// the surface):
///
/// ```text
/// u(x) = (pi/N) sum_j [ traction(x,t_j) - i eta G(x,y(t_j)) - image(x,t_j) ]
///          psi(t_j) sqrt(1 + f'(t_j)^2)
/// ```
pub fn scattered_eval(
    m: &ElasticMedium,
    surf: &SurfaceProfile,
    density: &Density,
    x: [f64; 2],
) -> [Complex64; 2] {
    assert!(
        x[1] > surf.f(x[0]),
        "evaluation point must lie strictly above the surface"
    );
    let ie = Complex64::i() * m.eta;
    let mut acc = [Complex64::ZERO; 2];
    for (j, t_j) in density.disc.knots.iter().enumerate() {
        let t = *t_j;
        let k = green_traction(m, surf, x, t) - ie * green_tensor(m, x, surf.point(t))
            - image_combined(m, surf, x, t);
        let v = k.matvec(density.values[j]);
        let jac = surf.jacobian(t);
        acc[0] += jac * v[0];
        acc[1] += jac * v[1];
    }
    let h = PI / density.disc.n as f64;
    [h * acc[0], h * acc[1]]
}
