//! Dense complex linear solve through LAPACK's `zgesv` (LU with partial
//! pivoting), linked from the system OpenBLAS.

use num_complex::Complex64;

extern "C" {
    fn zgesv_(
        n: *const i32,
        nrhs: *const i32,
        a: *mut Complex64,
        lda: *const i32,
        ipiv: *mut i32,
        b: *mut Complex64,
        ldb: *const i32,
        info: *mut i32,
    );
}

/// Solve `A x = b` in place; `a` is column-major `n x n` and is overwritten
/// by its LU factors, `b` by the solution.
pub fn solve_in_place(n: usize, a: &mut [Complex64], b: &mut [Complex64]) -> Result<(), String> {
    assert_eq!(a.len(), n * n);
    assert_eq!(b.len(), n);
    let ni = i32::try_from(n).map_err(|_| "system too large for LAPACK".to_string())?;
    let nrhs = 1i32;
    let mut ipiv = vec![0i32; n];
    let mut info = 0i32;
    unsafe {
        zgesv_(
            &ni,
            &nrhs,
            a.as_mut_ptr(),
            &ni,
            ipiv.as_mut_ptr(),
            b.as_mut_ptr(),
            &ni,
            &mut info,
        );
    }
    match info {
        0 => Ok(()),
        i if i > 0 => Err(format!("singular system: zero pivot at position {i}")),
        i => Err(format!("invalid argument {} to zgesv", -i)),
    }
}
