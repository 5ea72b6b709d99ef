//! Points and tangent vectors of ℂ^d.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::ops::{Add, Index, Mul, Sub};

/// A point of ℂ^d stored as d complex coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexPoint(pub Vec<Complex64>);

/// A tangent vector of ℂ^d.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexVector(pub Vec<Complex64>);

macro_rules! common_impl {
    ($t:ty) => {
        impl $t {
            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn zero(d: usize) -> Self {
                Self(vec![Complex64::new(0.0, 0.0); d])
            }

            /// Euclidean norm.
            pub fn norm(&self) -> f64 {
                self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
            }

            pub fn norm_sqr(&self) -> f64 {
                self.0.iter().map(|c| c.norm_sqr()).sum::<f64>()
            }

            pub fn is_finite(&self) -> bool {
                self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
            }

            pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
                self.0.iter()
            }

            pub fn as_slice(&self) -> &[Complex64] {
                &self.0
            }
        }

        impl Index<usize> for $t {
            type Output = Complex64;
            fn index(&self, i: usize) -> &Complex64 {
                &self.0[i]
            }
        }
    };
}

common_impl!(ComplexPoint);
common_impl!(ComplexVector);

impl ComplexPoint {
    pub fn new(coords: Vec<Complex64>) -> Self {
        assert!(!coords.is_empty(), "dimension must be at least 1");
        ComplexPoint(coords)
    }

    /// Real-coordinate point (x1, y1, ..., xd, yd) convenience constructor.
    pub fn from_re(coords: &[f64]) -> Self {
        ComplexPoint(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn as_vector(&self) -> ComplexVector {
        ComplexVector(self.0.clone())
    }
}

impl ComplexVector {
    pub fn new(coords: Vec<Complex64>) -> Self {
        assert!(!coords.is_empty(), "dimension must be at least 1");
        ComplexVector(coords)
    }

    pub fn from_re(coords: &[f64]) -> Self {
        ComplexVector(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Standard Hermitian product ⟨self, other⟩ = Σ self_j · conj(other_j).
    pub fn herm(&self, other: &ComplexVector) -> Complex64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    pub fn scale(&self, s: Complex64) -> ComplexVector {
        ComplexVector(self.0.iter().map(|c| c * s).collect())
    }

    /// Unit vector in the same direction; `None` for the zero vector.
    pub fn normalized(&self) -> Option<ComplexVector> {
        let n = self.norm();
        if n == 0.0 {
            None
        } else {
            Some(self.scale(Complex64::new(1.0 / n, 0.0)))
        }
    }
}

impl Sub for &ComplexPoint {
    type Output = ComplexVector;
    fn sub(self, rhs: &ComplexPoint) -> ComplexVector {
        ComplexVector(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Add<&ComplexVector> for &ComplexPoint {
    type Output = ComplexPoint;
    fn add(self, rhs: &ComplexVector) -> ComplexPoint {
        ComplexPoint(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Add for &ComplexVector {
    type Output = ComplexVector;
    fn add(self, rhs: &ComplexVector) -> ComplexVector {
        ComplexVector(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &ComplexVector {
    type Output = ComplexVector;
    fn sub(self, rhs: &ComplexVector) -> ComplexVector {
        ComplexVector(
            self.0
                .iter()
                .zip(rhs.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul<f64> for &ComplexVector {
    type Output = ComplexVector;
    fn mul(self, s: f64) -> ComplexVector {
        self.scale(Complex64::new(s, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn herm_is_conjugate_linear_in_second_slot() {
        let i = Complex64::new(0.0, 1.0);
        let a = ComplexVector::new(vec![Complex64::new(1.0, 2.0), i]);
        let b = ComplexVector::new(vec![Complex64::new(0.5, 0.0), Complex64::new(0.0, -1.0)]);
        let lhs = a.herm(&b.scale(i));
        let rhs = a.herm(&b) * i.conj();
        assert!((lhs - rhs).norm() < 1e-15);
    }

    #[test]
    fn norm_matches_herm() {
        let a = ComplexVector::new(vec![Complex64::new(3.0, 0.0), Complex64::new(0.0, 4.0)]);
        assert!((a.norm() - 5.0).abs() < 1e-15);
        assert!((a.herm(&a).re - 25.0).abs() < 1e-12);
    }
}
