//! Kobayashi distances, extremal analytic discs and complex geodesics in
//! bounded convex model domains of ℂ^d.

#[cfg(test)]
mod smoke {
    use nalgebra::{Complex, DMatrix};

    #[test]
    fn hermitian_eigen_complex() {
        let i = Complex::new(0.0, 1.0);
        let a = DMatrix::from_row_slice(
            2,
            2,
            &[
                Complex::new(2.0, 0.0),
                Complex::new(0.3, 0.0) + 0.1 * i,
                Complex::new(0.3, 0.0) - 0.1 * i,
                Complex::new(1.0, 0.0),
            ],
        );
        let eig = a.clone().symmetric_eigen();
        // reconstruct
        let q = &eig.eigenvectors;
        let lam = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex::new(x, 0.0)));
        let rec = q * lam * q.adjoint();
        let err: f64 = (rec - a).iter().map(|c| c.norm()).sum();
        assert!(err < 1e-12, "reconstruction error {err}");
    }
}
