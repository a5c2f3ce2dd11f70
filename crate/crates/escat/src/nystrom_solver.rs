//! Assembly and dense solve of the discrete second-kind collocation system
//!
//! ```text
//! psi(t_i) + sum_j [ R_j^{(N)}(t_i) B(t_i,t_j) + (pi/N) C(t_i,t_j) ] psi(t_j)
//!   = 2 g(t_i),
//! ```
//!
//! plus natural Nystrom interpolation of the density between knots.

use crate::kernel_split::KernelPair;
use crate::linalg::solve_in_place;
use crate::navier_green::ComplexMat2;
use crate::quadrature::{log_weight, log_weight_table, Discretization};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Solved boundary density at the knots.
#[derive(Debug, Clone)]
pub struct Density {
    pub disc: Discretization,
    /// `psi(t_j)` per knot
    pub values: Vec<[Complex64; 2]>,
}

/// Right-hand side `g(s)` of the boundary condition, `g = -u_inc` on the
/// surface for the scattering problems.
pub struct BoundaryData<'a> {
    pub g: Box<dyn Fn(f64) -> [Complex64; 2] + Sync + 'a>,
}

impl<'a> BoundaryData<'a> {
    pub fn new(g: impl Fn(f64) -> [Complex64; 2] + Sync + 'a) -> Self {
        BoundaryData { g: Box::new(g) }
    }
}

/// One 2x2 collocation block `delta_ij I + R_(i-j) B(t_i,t_j) + (pi/N) C(t_i,t_j)`.
fn block_at(
    kp: &KernelPair,
    disc: &Discretization,
    rtab: &[f64],
    i: usize,
    j: usize,
) -> ComplexMat2 {
    let (s, t) = (disc.knots[i], disc.knots[j]);
    let (b, c) = kp.evaluate(s, t);
    let r = rtab[(i as i64 - j as i64).rem_euclid(2 * disc.n as i64) as usize];
    let h = PI / disc.n as f64;
    let mut m = r * b + h * c;
    if i == j {
        m.0[0][0] += 1.0;
        m.0[1][1] += 1.0;
    }
    m
}

/// Assemble the full `2K x 2K` system matrix in column-major layout
/// (identity included). Columns are filled in parallel.
pub fn assemble(kp: &KernelPair, disc: &Discretization) -> Vec<Complex64> {
    let k = disc.knots.len();
    let m = 2 * k;
    let rtab = log_weight_table(disc.n);
    let mut a = vec![Complex64::ZERO; m * m];
    // each chunk is the two columns belonging to knot j
    a.par_chunks_exact_mut(2 * m).enumerate().for_each(|(j, cols)| {
        let (col0, col1) = cols.split_at_mut(m);
        for i in 0..k {
            let blk = block_at(kp, disc, &rtab, i, j);
            col0[2 * i] = blk.0[0][0];
            col0[2 * i + 1] = blk.0[1][0];
            col1[2 * i] = blk.0[0][1];
            col1[2 * i + 1] = blk.0[1][1];
        }
    });
    a
}

/// Apply the assembled operator `(I + A)` to a stacked vector without
/// storing the matrix (blocks are recomputed); used for residual checks.
pub fn apply_operator(kp: &KernelPair, disc: &Discretization, x: &[Complex64]) -> Vec<Complex64> {
    let k = disc.knots.len();
    assert_eq!(x.len(), 2 * k);
    let rtab = log_weight_table(disc.n);
    let mut y = vec![Complex64::ZERO; 2 * k];
    y.par_chunks_exact_mut(2).enumerate().for_each(|(i, out)| {
        let mut acc = [Complex64::ZERO; 2];
        for j in 0..k {
            let blk = block_at(kp, disc, &rtab, i, j);
            let v = blk.matvec([x[2 * j], x[2 * j + 1]]);
            acc[0] += v[0];
            acc[1] += v[1];
        }
        out[0] = acc[0];
        out[1] = acc[1];
    });
    y
}

/// Assemble and solve the collocation system for the given boundary data.
/// The solution is verified a posteriori: the residual of the second-kind
/// system must not exceed `1e-10` of the data norm.
pub fn solve(
    kp: &KernelPair,
    disc: &Discretization,
    data: &BoundaryData,
) -> Result<Density, String> {
    let k = disc.knots.len();
    let mut a = assemble(kp, disc);
    let mut rhs = vec![Complex64::ZERO; 2 * k];
    for (i, t) in disc.knots.iter().enumerate() {
        let g = (data.g)(*t);
        rhs[2 * i] = 2.0 * g[0];
        rhs[2 * i + 1] = 2.0 * g[1];
    }
    let rhs_norm = rhs.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let rhs_copy = rhs.clone();
    solve_in_place(2 * k, &mut a, &mut rhs)?;
    drop(a);
    if !rhs.iter().all(|v| v.is_finite()) {
        return Err("solver produced non-finite density values".into());
    }
    let resid = apply_operator(kp, disc, &rhs)
        .iter()
        .zip(&rhs_copy)
        .map(|(y, b)| (y - b).norm())
        .fold(0.0, f64::max);
    if rhs_norm > 0.0 && resid > 1e-10 * rhs_norm {
        return Err(format!(
            "ill-conditioned system: residual {resid:e} exceeds 1e-10 of data norm {rhs_norm:e} \
             (check that Re(eta) > 0 and the surface parameters are sane)"
        ));
    }
    let values = (0..k).map(|i| [rhs[2 * i], rhs[2 * i + 1]]).collect();
    Ok(Density { disc: disc.clone(), values })
}

/// Natural Nystrom interpolation: the discrete equation rearranged for
/// `psi(s)` at an arbitrary point of the knot window.
pub fn interpolate_density(
    density: &Density,
    kp: &KernelPair,
    data: &BoundaryData,
    s: f64,
) -> Result<[Complex64; 2], String> {
    let disc = &density.disc;
    if s < -disc.cut - 1e-12 || s > disc.cut + 1e-12 {
        return Err(format!("point {s} outside the knot window [{}, {}]", -disc.cut, disc.cut));
    }
    let h = PI / disc.n as f64;
    let g = (data.g)(s);
    let mut acc = [2.0 * g[0], 2.0 * g[1]];
    for (j, t_j) in disc.knots.iter().enumerate() {
        let (b, c) = kp.evaluate(s, *t_j);
        let r = log_weight(disc.n, s, *t_j);
        let alpha = r * b + h * c;
        let v = alpha.matvec(density.values[j]);
        acc[0] -= v[0];
        acc[1] -= v[1];
    }
    Ok(acc)
}
