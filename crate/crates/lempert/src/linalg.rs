//! Small complex-linear-algebra helpers shared by the frame and scaling code.

use crate::point::ComplexVector;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Unitary U with U · (v/|v|) = e_1 (complex Householder reflection composed
/// with a phase). Panics on the zero vector.
pub fn householder_to_e1(v: &ComplexVector) -> DMatrix<Complex64> {
    let d = v.dim();
    let n = v.norm();
    assert!(n > 0.0, "householder_to_e1 needs a nonzero vector");
    let x: Vec<Complex64> = v.iter().map(|c| c / n).collect();
    let one = Complex64::new(1.0, 0.0);
    let phi = if x[0].norm() < 1e-300 {
        one
    } else {
        x[0] / x[0].norm()
    };
    let mut u = x.clone();
    u[0] += phi;
    let usq: f64 = u.iter().map(|c| c.norm_sqr()).sum();
    let mut h = DMatrix::identity(d, d);
    if usq > 0.0 {
        for j in 0..d {
            for k in 0..d {
                h[(j, k)] -= 2.0 * u[j] * u[k].conj() / usq;
            }
        }
    }
    // H x = −φ e1; prepend a phase so the image is exactly e1.
    let mut scale = DMatrix::identity(d, d);
    scale[(0, 0)] = -phi.conj();
    scale * h
}

/// Orthonormal basis (d−1 vectors) of the Hermitian orthogonal complement of v.
pub fn orthogonal_complement(v: &ComplexVector) -> Vec<ComplexVector> {
    let d = v.dim();
    let u = householder_to_e1(v);
    // rows 2..d of U are an orthonormal basis of v^⊥ after conjugation:
    // columns 2..d of U^H are orthogonal to v.
    let uh = u.adjoint();
    (1..d)
        .map(|k| ComplexVector((0..d).map(|j| uh[(j, k)]).collect()))
        .collect()
}
