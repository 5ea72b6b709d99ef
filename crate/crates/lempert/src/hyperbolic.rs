//! Hyperbolic geometry of the unit disc Δ and the left half-plane {Re < 0}.
//!
//! These one-dimensional quantities are exact (closed form) and serve as the
//! oracles every higher-dimensional bound reduces to.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Largest |t| accepted by [`atanh`]; beyond it the distance is treated as an
/// overflow rather than silently clamped to an enormous float.
pub const ATANH_MAX: f64 = 1.0 - 1e-15;

/// A point of the open unit disc.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscPoint(Complex64);

impl DiscPoint {
    pub fn new(value: Complex64) -> Result<Self> {
        if value.norm() >= 1.0 {
            return Err(Error::OutsideDomain(format!(
                "|{value}| = {} is not < 1",
                value.norm()
            )));
        }
        Ok(DiscPoint(value))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }
}

/// tanh⁻¹ t = ½ log((1+t)/(1−t)) for t ∈ [0, 1−1e−15].
pub fn atanh(t: f64) -> Result<f64> {
    if !(0.0..=ATANH_MAX).contains(&t) {
        return Err(Error::AtanhOverflow(t));
    }
    Ok(0.5 * ((1.0 + t) / (1.0 - t)).ln())
}

/// Poincaré distance of the unit disc, k_Δ(ζ,η) = tanh⁻¹ |(ζ−η)/(1−ζ̄η)|.
pub fn disc_distance(zeta: DiscPoint, eta: DiscPoint) -> Result<f64> {
    let (z, w) = (zeta.0, eta.0);
    let t = ((z - w) / (Complex64::new(1.0, 0.0) - z.conj() * w)).norm();
    atanh(t)
}

/// Poincaré metric of the unit disc: |X| / (1 − |ζ|²).
pub fn disc_metric(zeta: DiscPoint, x: Complex64) -> f64 {
    x.norm() / (1.0 - zeta.0.norm_sqr())
}

/// Boundary distance inside Δ: δ_Δ(ζ) = 1 − |ζ|.
pub fn disc_boundary_dist(zeta: DiscPoint) -> f64 {
    1.0 - zeta.0.norm()
}

/// Poincaré distance of the left half-plane Π = {Re < 0}:
/// tanh⁻¹ |(a−b)/(a+b̄)|. Satisfies k ≥ ½|log(Re b / Re a)| with equality on
/// the real axis.
pub fn halfplane_distance(a: Complex64, b: Complex64) -> Result<f64> {
    if a.re >= 0.0 || b.re >= 0.0 {
        return Err(Error::OutsideDomain(format!(
            "half-plane points need Re < 0, got {a} and {b}"
        )));
    }
    let t = ((a - b) / (a + b.conj())).norm();
    atanh(t)
}

/// Chordal lower bound for the disc distance:
/// log(1 + |ζ−η| / (2 δ_Δ(ζ)^{1/2} δ_Δ(η)^{1/2})). Always ≤ k_Δ(ζ,η).
pub fn disc_lower_bound(zeta: DiscPoint, eta: DiscPoint) -> f64 {
    let num = (zeta.0 - eta.0).norm();
    let den = 2.0 * (disc_boundary_dist(zeta) * disc_boundary_dist(eta)).sqrt();
    (1.0 + num / den).ln()
}

/// Disc automorphism m_a(ζ) = (a − ζ)/(1 − ā ζ); involutive, swaps 0 and a.
pub fn disc_automorphism(a: Complex64, zeta: Complex64) -> Complex64 {
    (a - zeta) / (Complex64::new(1.0, 0.0) - a.conj() * zeta)
}

/// Cayley transform of the left half-plane onto Δ: w ↦ (1+w)/(1−w).
/// Sends −1 ↦ 0 and the imaginary axis onto the unit circle.
pub fn cayley_left_halfplane(w: Complex64) -> Complex64 {
    (Complex64::new(1.0, 0.0) + w) / (Complex64::new(1.0, 0.0) - w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp(re: f64, im: f64) -> DiscPoint {
        DiscPoint::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn distance_at_origin_pair() {
        assert_eq!(disc_distance(dp(0.0, 0.0), dp(0.0, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn distance_zero_to_half() {
        // tanh⁻¹ 0.5 = ½ log 3
        let d = disc_distance(dp(0.0, 0.0), dp(0.5, 0.0)).unwrap();
        assert!((d - 0.5 * 3.0_f64.ln()).abs() < 1e-15, "got {d}");
        assert!((d - 0.549306).abs() < 1e-6);
    }

    #[test]
    fn distance_is_moebius_invariant_at_sample() {
        // k(0.3, 0.3i) equals k(0, m(0.3i)) for the automorphism m sending 0.3 → 0.
        let a = Complex64::new(0.3, 0.0);
        let z = Complex64::new(0.0, 0.3);
        let lhs = disc_distance(dp(0.3, 0.0), DiscPoint::new(z).unwrap()).unwrap();
        let mz = disc_automorphism(a, z);
        let rhs = disc_distance(dp(0.0, 0.0), DiscPoint::new(mz).unwrap()).unwrap();
        assert!((lhs - rhs).abs() < 1e-14, "{lhs} vs {rhs}");
    }

    #[test]
    fn metric_values() {
        assert_eq!(disc_metric(dp(0.0, 0.0), Complex64::new(1.0, 0.0)), 1.0);
        // 1/(1−|ζ|²) at ζ = 0.5 is 4/3
        let m = disc_metric(dp(0.5, 0.0), Complex64::new(1.0, 0.0));
        assert!((m - 4.0 / 3.0).abs() < 1e-15);
        // homogeneity in X
        let m2 = disc_metric(dp(0.5, 0.0), Complex64::new(0.0, 2.0));
        assert!((m2 - 8.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn boundary_dist_values() {
        assert_eq!(disc_boundary_dist(dp(0.0, 0.0)), 1.0);
        assert_eq!(disc_boundary_dist(dp(0.5, 0.0)), 0.5);
        assert!((disc_boundary_dist(dp(0.3, 0.4)) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn halfplane_same_point_is_zero() {
        let a = Complex64::new(-1.0, 0.0);
        assert_eq!(halfplane_distance(a, a).unwrap(), 0.0);
    }

    #[test]
    fn halfplane_minus_one_minus_two() {
        let d = halfplane_distance(Complex64::new(-1.0, 0.0), Complex64::new(-2.0, 0.0)).unwrap();
        assert!((d - 0.5 * 2.0_f64.ln()).abs() < 1e-15, "got {d}");
        // Cayley-transform oracle
        let ca = cayley_left_halfplane(Complex64::new(-1.0, 0.0));
        let cb = cayley_left_halfplane(Complex64::new(-2.0, 0.0));
        let via_disc = disc_distance(
            DiscPoint::new(ca).unwrap(),
            DiscPoint::new(cb).unwrap(),
        )
        .unwrap();
        assert!((d - via_disc).abs() < 1e-14);
    }

    #[test]
    fn halfplane_complex_pair_matches_cayley_oracle() {
        let a = Complex64::new(-1.0, 0.0);
        let b = Complex64::new(-1.0, 1.0);
        let d = halfplane_distance(a, b).unwrap();
        assert!(d > 0.0);
        let via_disc = disc_distance(
            DiscPoint::new(cayley_left_halfplane(a)).unwrap(),
            DiscPoint::new(cayley_left_halfplane(b)).unwrap(),
        )
        .unwrap();
        assert!((d - via_disc).abs() < 1e-14, "{d} vs {via_disc}");
    }

    #[test]
    fn halfplane_rejects_right_halfplane() {
        assert!(halfplane_distance(Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)).is_err());
        assert!(halfplane_distance(Complex64::new(-1.0, 0.0), Complex64::new(0.5, 0.0)).is_err());
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(disc_lower_bound(dp(0.0, 0.0), dp(0.0, 0.0)), 0.0);
        // log(1 + 0.5/(2·√0.5)) — frozen from direct evaluation of the formula
        let lb = disc_lower_bound(dp(0.0, 0.0), dp(0.5, 0.0));
        let expect = (1.0 + 0.5 / (2.0 * 0.5_f64.sqrt())).ln();
        assert!((lb - expect).abs() < 1e-15);
        assert!((lb - 0.302733).abs() < 1e-6, "got {lb}");
    }

    #[test]
    fn atanh_overflow_is_an_error() {
        assert!(atanh(1.0 - 1e-16).is_err());
        assert!(atanh(1.0).is_err());
        assert!(atanh(0.999999).is_ok());
    }

    #[test]
    fn disc_point_rejects_boundary() {
        assert!(DiscPoint::new(Complex64::new(1.0, 0.0)).is_err());
        assert!(DiscPoint::new(Complex64::new(0.8, 0.7)).is_err());
    }
}
