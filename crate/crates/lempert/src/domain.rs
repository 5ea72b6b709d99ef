//! Bounded convex model domains given by a defining function r with r < 0 inside.
//!
//! Three variants are supported: the unit ball (r = |z|² − 1), axis ellipsoids
//! (r = Σ a_j |z_j|² − 1) and polynomially perturbed balls
//! (r = |z|² − 1 + η q(z) with q a real polynomial of total degree ≤ 4 in
//! Re z_j, Im z_j). Strict convexity of a perturbed ball is audited, not assumed.

use crate::error::{Error, Result};
use crate::point::{ComplexPoint, ComplexVector};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Numerical validity region for the model domains: |z| ≤ 2.
pub const VALIDITY_RADIUS: f64 = 2.0;

/// A real polynomial in the 2d real coordinates (x_1, y_1, ..., x_d, y_d).
///
/// `exps[v]` is the exponent of variable v, where variable 2j is Re z_{j+1}
/// and variable 2j+1 is Im z_{j+1}.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoly {
    dim: usize,
    monomials: Vec<(Vec<u8>, f64)>,
}

impl RealPoly {
    pub fn new(dim: usize, monomials: Vec<(Vec<u8>, f64)>) -> Result<Self> {
        for (exps, _) in &monomials {
            if exps.len() != 2 * dim {
                return Err(Error::Parse(format!(
                    "monomial exponent list has length {}, expected {}",
                    exps.len(),
                    2 * dim
                )));
            }
            let total: u32 = exps.iter().map(|&e| e as u32).sum();
            if total > 4 {
                return Err(Error::Parse(format!(
                    "monomial total degree {total} exceeds the cap 4"
                )));
            }
        }
        Ok(RealPoly { dim, monomials })
    }

    pub fn zero(dim: usize) -> Self {
        RealPoly {
            dim,
            monomials: Vec::new(),
        }
    }

    /// Parses keys like "x1^2*y2" (1-based coordinate indices, '*'-separated
    /// factors, optional '^k'); "1" denotes the constant monomial.
    pub fn from_map(dim: usize, map: &BTreeMap<String, f64>) -> Result<Self> {
        let mut monomials = Vec::new();
        for (key, &coeff) in map {
            let mut exps = vec![0u8; 2 * dim];
            let key = key.trim();
            if key != "1" && !key.is_empty() {
                for factor in key.split('*') {
                    let factor = factor.trim();
                    let (name, pow) = match factor.split_once('^') {
                        Some((n, p)) => (
                            n,
                            p.parse::<u8>().map_err(|_| {
                                Error::Parse(format!("bad exponent in monomial '{key}'"))
                            })?,
                        ),
                        None => (factor, 1),
                    };
                    let (kind, idx_str) = name.split_at(1);
                    let idx: usize = idx_str
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable '{name}' in '{key}'")))?;
                    if idx == 0 || idx > dim {
                        return Err(Error::Parse(format!(
                            "variable index {idx} out of range 1..={dim} in '{key}'"
                        )));
                    }
                    let var = match kind {
                        "x" => 2 * (idx - 1),
                        "y" => 2 * (idx - 1) + 1,
                        _ => {
                            return Err(Error::Parse(format!(
                                "variable '{name}' must start with x or y in '{key}'"
                            )))
                        }
                    };
                    exps[var] = exps[var].saturating_add(pow);
                }
            }
            monomials.push((exps, coeff));
        }
        RealPoly::new(dim, monomials)
    }

    pub fn to_map(&self) -> BTreeMap<String, f64> {
        let mut map = BTreeMap::new();
        for (exps, coeff) in &self.monomials {
            let mut parts = Vec::new();
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if v % 2 == 0 { "x" } else { "y" };
                let idx = v / 2 + 1;
                if e == 1 {
                    parts.push(format!("{name}{idx}"));
                } else {
                    parts.push(format!("{name}{idx}^{e}"));
                }
            }
            let key = if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            };
            *map.entry(key).or_insert(0.0) += coeff;
        }
        map
    }

    fn coords(z: &ComplexPoint) -> Vec<f64> {
        let mut v = Vec::with_capacity(2 * z.dim());
        for c in z.iter() {
            v.push(c.re);
            v.push(c.im);
        }
        v
    }

    pub fn eval(&self, z: &ComplexPoint) -> f64 {
        let x = Self::coords(z);
        self.monomials
            .iter()
            .map(|(exps, c)| {
                c * exps
                    .iter()
                    .enumerate()
                    .map(|(v, &e)| x[v].powi(e as i32))
                    .product::<f64>()
            })
            .sum()
    }

    /// Real gradient in the 2d real variables.
    pub fn grad(&self, z: &ComplexPoint) -> Vec<f64> {
        let x = Self::coords(z);
        let mut g = vec![0.0; 2 * self.dim];
        for (exps, c) in &self.monomials {
            for v in 0..2 * self.dim {
                if exps[v] == 0 {
                    continue;
                }
                let mut term = c * exps[v] as f64;
                for (u, &e) in exps.iter().enumerate() {
                    let p = if u == v { e - 1 } else { e };
                    term *= x[u].powi(p as i32);
                }
                g[v] += term;
            }
        }
        g
    }

    /// Real Hessian (2d × 2d, symmetric) in the 2d real variables.
    pub fn hessian(&self, z: &ComplexPoint) -> DMatrix<f64> {
        let x = Self::coords(z);
        let n = 2 * self.dim;
        let mut h = DMatrix::zeros(n, n);
        for (exps, c) in &self.monomials {
            for v in 0..n {
                for u in v..n {
                    let fac = if u == v {
                        if exps[v] < 2 {
                            continue;
                        }
                        (exps[v] as f64) * (exps[v] as f64 - 1.0)
                    } else {
                        if exps[v] == 0 || exps[u] == 0 {
                            continue;
                        }
                        (exps[v] as f64) * (exps[u] as f64)
                    };
                    let mut term = c * fac;
                    for (t, &e) in exps.iter().enumerate() {
                        let mut p = e;
                        if t == v {
                            p -= 1;
                        }
                        if t == u {
                            p -= 1;
                        }
                        term *= x[t].powi(p as i32);
                    }
                    h[(v, u)] += term;
                    if u != v {
                        h[(u, v)] += term;
                    }
                }
            }
        }
        h
    }
}

/// A bounded convex model domain with defining function r (negative inside).
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    UnitBall {
        dim: usize,
    },
    Ellipsoid {
        dim: usize,
        axes: Vec<f64>,
    },
    PerturbedBall {
        dim: usize,
        eta: f64,
        q: RealPoly,
    },
}

impl DomainSpec {
    pub fn ball(dim: usize) -> Self {
        DomainSpec::UnitBall { dim }
    }

    pub fn ellipsoid(axes: Vec<f64>) -> Result<Self> {
        if axes.iter().any(|&a| a <= 0.0) {
            return Err(Error::Parse("ellipsoid axes must be positive".into()));
        }
        Ok(DomainSpec::Ellipsoid {
            dim: axes.len(),
            axes,
        })
    }

    pub fn perturbed_ball(dim: usize, eta: f64, q: RealPoly) -> Result<Self> {
        if q.dim != dim {
            return Err(Error::Parse("perturbation dimension mismatch".into()));
        }
        Ok(DomainSpec::PerturbedBall { dim, eta, q })
    }

    pub fn dim(&self) -> usize {
        match self {
            DomainSpec::UnitBall { dim } => *dim,
            DomainSpec::Ellipsoid { dim, .. } => *dim,
            DomainSpec::PerturbedBall { dim, .. } => *dim,
        }
    }

    /// Defining function r(z); r < 0 inside the domain.
    pub fn defining(&self, z: &ComplexPoint) -> f64 {
        match self {
            DomainSpec::UnitBall { .. } => z.norm_sqr() - 1.0,
            DomainSpec::Ellipsoid { axes, .. } => {
                z.iter()
                    .zip(axes.iter())
                    .map(|(c, a)| a * c.norm_sqr())
                    .sum::<f64>()
                    - 1.0
            }
            DomainSpec::PerturbedBall { eta, q, .. } => z.norm_sqr() - 1.0 + eta * q.eval(z),
        }
    }

    pub fn contains(&self, z: &ComplexPoint) -> bool {
        self.defining(z) < 0.0
    }

    /// Holomorphic (Wirtinger) gradient ∂r/∂z_j = ½(∂_x − i ∂_y) r.
    pub fn gradient(&self, z: &ComplexPoint) -> ComplexVector {
        match self {
            DomainSpec::UnitBall { .. } => ComplexVector(z.iter().map(|c| c.conj()).collect()),
            DomainSpec::Ellipsoid { axes, .. } => ComplexVector(
                z.iter()
                    .zip(axes.iter())
                    .map(|(c, a)| a * c.conj())
                    .collect(),
            ),
            DomainSpec::PerturbedBall { eta, q, .. } => {
                let g = q.grad(z);
                ComplexVector(
                    z.iter()
                        .enumerate()
                        .map(|(j, c)| {
                            c.conj() + 0.5 * eta * Complex64::new(g[2 * j], -g[2 * j + 1])
                        })
                        .collect(),
                )
            }
        }
    }

    /// Real gradient of r in the interleaved coordinates (x1, y1, ..., xd, yd).
    pub fn real_gradient(&self, z: &ComplexPoint) -> Vec<f64> {
        // ∇r = 2 · (Re ∂r, Im ∂̄r)-encoding: ∂/∂x_j r = 2 Re ∂_j r, ∂/∂y_j r = −2 Im ∂_j r
        let g = self.gradient(z);
        let mut out = Vec::with_capacity(2 * z.dim());
        for c in g.iter() {
            out.push(2.0 * c.re);
            out.push(-2.0 * c.im);
        }
        out
    }

    /// Levi matrix L_{jk} = ∂²r/∂z_j ∂z̄_k (Hermitian).
    pub fn levi_matrix(&self, z: &ComplexPoint) -> DMatrix<Complex64> {
        let d = self.dim();
        match self {
            DomainSpec::UnitBall { .. } => DMatrix::identity(d, d),
            DomainSpec::Ellipsoid { axes, .. } => {
                DMatrix::from_fn(d, d, |j, k| {
                    if j == k {
                        Complex64::new(axes[j], 0.0)
                    } else {
                        Complex64::new(0.0, 0.0)
                    }
                })
            }
            DomainSpec::PerturbedBall { eta, q, .. } => {
                let h = q.hessian(z);
                DMatrix::from_fn(d, d, |j, k| {
                    let base = if j == k { 1.0 } else { 0.0 };
                    // ∂²/∂z_j∂z̄_k = ¼ [r_xx + r_yy + i (r_{x_j y_k} − r_{y_j x_k})]
                    let re = 0.25 * (h[(2 * j, 2 * k)] + h[(2 * j + 1, 2 * k + 1)]);
                    let im = 0.25 * (h[(2 * j, 2 * k + 1)] - h[(2 * j + 1, 2 * k)]);
                    Complex64::new(base + eta * re, eta * im)
                })
            }
        }
    }

    /// Holomorphic Hessian H_{jk} = ∂²r/∂z_j ∂z_k (symmetric).
    pub fn holo_hessian(&self, z: &ComplexPoint) -> DMatrix<Complex64> {
        let d = self.dim();
        match self {
            DomainSpec::UnitBall { .. } | DomainSpec::Ellipsoid { .. } => DMatrix::zeros(d, d),
            DomainSpec::PerturbedBall { eta, q, .. } => {
                let h = q.hessian(z);
                DMatrix::from_fn(d, d, |j, k| {
                    // ∂²/∂z_j∂z_k = ¼ [r_xx − r_yy − i (r_{x_j y_k} + r_{y_j x_k})]
                    let re = 0.25 * (h[(2 * j, 2 * k)] - h[(2 * j + 1, 2 * k + 1)]);
                    let im = -0.25 * (h[(2 * j, 2 * k + 1)] + h[(2 * j + 1, 2 * k)]);
                    eta * Complex64::new(re, im)
                })
            }
        }
    }

    /// Real Hessian of r (2d × 2d, interleaved coordinates).
    pub fn real_hessian(&self, z: &ComplexPoint) -> DMatrix<f64> {
        let n = 2 * self.dim();
        match self {
            DomainSpec::UnitBall { .. } => DMatrix::identity(n, n) * 2.0,
            DomainSpec::Ellipsoid { axes, .. } => {
                DMatrix::from_fn(n, n, |j, k| {
                    if j == k {
                        2.0 * axes[j / 2]
                    } else {
                        0.0
                    }
                })
            }
            DomainSpec::PerturbedBall { eta, q, .. } => {
                let mut h = q.hessian(z) * *eta;
                for j in 0..n {
                    h[(j, j)] += 2.0;
                }
                h
            }
        }
    }

    /// Scale t > 0 at which t·u hits the boundary along the ray through u ≠ 0.
    /// Newton on t ↦ r(t u), seeded at the ball estimate.
    pub fn radial_boundary_scale(&self, u: &ComplexVector) -> Result<f64> {
        let un = u.norm();
        if un == 0.0 {
            return Err(Error::Degenerate("radial direction is zero".into()));
        }
        let mut t = 1.0 / un;
        for _ in 0..100 {
            let p = ComplexPoint(u.iter().map(|c| c * t).collect());
            let r = self.defining(&p);
            // d/dt r(tu) = 2 Re ⟨∂r(tu), ū⟩ = 2 Re Σ ∂_j r · u_j
            let g = self.gradient(&p);
            let dr: f64 = 2.0
                * g.iter()
                    .zip(u.iter())
                    .map(|(gj, uj)| (gj * uj).re)
                    .sum::<f64>();
            if dr.abs() < 1e-300 {
                return Err(Error::Numerical("flat radial derivative".into()));
            }
            let step = r / dr;
            t -= step;
            if step.abs() < 1e-14 * t.abs().max(1.0) {
                return Ok(t);
            }
        }
        Err(Error::Numerical("radial boundary solve stalled".into()))
    }

    /// Minkowski functional μ(w) = inf{t > 0 : w/t ∈ D} for the balanced
    /// variants (ball and ellipsoid).
    pub fn minkowski(&self, w: &ComplexPoint) -> Result<f64> {
        match self {
            DomainSpec::UnitBall { .. } => Ok(w.norm()),
            DomainSpec::Ellipsoid { axes, .. } => Ok(w
                .iter()
                .zip(axes.iter())
                .map(|(c, a)| a * c.norm_sqr())
                .sum::<f64>()
                .sqrt()),
            DomainSpec::PerturbedBall { .. } => Err(Error::UnsupportedDomain(
                "Minkowski functional requires a balanced domain".into(),
            )),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DomainJson = serde_json::from_str(text)?;
        raw.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DomainJson::from(self)).expect("domain serializes")
    }
}

/// Wire representation of a domain:
/// `{"variant": "ball"|"ellipsoid"|"perturbed_ball", "dim": d, "a": [...], "eta": x, "q": {...}}`.
#[derive(Debug, Serialize, Deserialize)]
struct DomainJson {
    variant: String,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<BTreeMap<String, f64>>,
}

impl TryFrom<DomainJson> for DomainSpec {
    type Error = Error;
    fn try_from(raw: DomainJson) -> Result<Self> {
        if raw.dim == 0 {
            return Err(Error::Parse("dim must be at least 1".into()));
        }
        match raw.variant.as_str() {
            "ball" => Ok(DomainSpec::ball(raw.dim)),
            "ellipsoid" => {
                let a = raw
                    .a
                    .ok_or_else(|| Error::Parse("ellipsoid requires field 'a'".into()))?;
                if a.len() != raw.dim {
                    return Err(Error::Parse("field 'a' length must equal dim".into()));
                }
                DomainSpec::ellipsoid(a)
            }
            "perturbed_ball" => {
                let eta = raw
                    .eta
                    .ok_or_else(|| Error::Parse("perturbed_ball requires field 'eta'".into()))?;
                let q = raw
                    .q
                    .ok_or_else(|| Error::Parse("perturbed_ball requires field 'q'".into()))?;
                DomainSpec::perturbed_ball(raw.dim, eta, RealPoly::from_map(raw.dim, &q)?)
            }
            other => Err(Error::Parse(format!("unknown domain variant '{other}'"))),
        }
    }
}

impl From<&DomainSpec> for DomainJson {
    fn from(d: &DomainSpec) -> Self {
        match d {
            DomainSpec::UnitBall { dim } => DomainJson {
                variant: "ball".into(),
                dim: *dim,
                a: None,
                eta: None,
                q: None,
            },
            DomainSpec::Ellipsoid { dim, axes } => DomainJson {
                variant: "ellipsoid".into(),
                dim: *dim,
                a: Some(axes.clone()),
                eta: None,
                q: None,
            },
            DomainSpec::PerturbedBall { dim, eta, q } => DomainJson {
                variant: "perturbed_ball".into(),
                dim: *dim,
                a: None,
                eta: Some(*eta),
                q: Some(q.to_map()),
            },
        }
    }
}

#[cfg(test)]
pub(crate) fn test_perturbation(dim: usize) -> RealPoly {
    // x1³ + x1·y2² − x2²·y1: a generic degree-3 perturbation used across tests
    let mut m = BTreeMap::new();
    m.insert("x1^3".to_string(), 1.0);
    m.insert("x1*y2^2".to_string(), 1.0);
    m.insert("x2^2*y1".to_string(), -1.0);
    RealPoly::from_map(dim, &m).unwrap()
}
