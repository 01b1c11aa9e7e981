//! Closed-form flow and invariant geometry of `u' = u^2` in complex time.
//!
//! The scalar equation has the explicit solution `U(t) = 1/(1/U_0 - t)`,
//! which exists as a map into the Riemann sphere for every complex `t`. In
//! the inverse chart `1/U` the flow is a rigid translation, so `Im(1/U)` is
//! conserved along real time. Level sets of the conserved quantity with
//! `Im(U) > 0` are circles through the origin centered on the positive
//! imaginary axis; their interiors are the trapping disks that the maximum
//! principle transfers to the PDE. This module is the pure-ODE oracle used
//! by the evolution and experiment layers.

use num_complex::Complex64;
use thiserror::Error;

/// Relative tolerance for classifying `1/u0 == t` as a blow-up hit.
pub const BLOWUP_MATCH_TOL: f64 = 1e-14;

#[derive(Debug, Error, PartialEq)]
pub enum QuadOdeError {
    #[error("conserved quantity is undefined at u = 0")]
    ZeroInput,
    #[error("sample list is empty")]
    EmptySamples,
    #[error("sample {index} = {value} is not strictly in the upper half-plane")]
    NotUpperHalfPlane { index: usize, value: Complex64 },
    #[error("angle {0} is outside (0, pi)")]
    AngleOutOfRange(f64),
    #[error("parameter {name} = {value} is outside its domain")]
    InvalidParameter { name: &'static str, value: f64 },
}

/// A point of the flow on the Riemann sphere: either a finite complex value
/// or the explicit point at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OdePoint {
    Finite(Complex64),
    Infinity,
}

impl OdePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, OdePoint::Infinity)
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<Complex64> {
        match self {
            OdePoint::Finite(z) => Some(*z),
            OdePoint::Infinity => None,
        }
    }
}

/// Circle through the origin centered at `i R`; its interior is invariant
/// under the real-time flow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionDisk {
    radius: f64,
}

impl SolutionDisk {
    pub fn new(radius: f64) -> Result<Self, QuadOdeError> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(QuadOdeError::InvalidParameter {
                name: "radius",
                value: radius,
            });
        }
        Ok(Self { radius })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Center of the circle, fixed on the positive imaginary axis.
    pub fn center(&self) -> Complex64 {
        Complex64::new(0.0, self.radius)
    }

    /// Whether `z` lies in the closed disk, with slack `tol` on the radius.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        (z - self.center()).norm() <= self.radius + tol
    }
}

/// Half-line `z(s) = s e^{i phi}`, `s >= 0`, with `phi` in (0, pi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfLine {
    angle: f64,
}

impl HalfLine {
    pub fn new(angle: f64) -> Result<Self, QuadOdeError> {
        if !(angle > 0.0 && angle < std::f64::consts::PI) {
            return Err(QuadOdeError::AngleOutOfRange(angle));
        }
        Ok(Self { angle })
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }
}

/// Closed-form flow `U(t) = 1/(1/u0 - t)` of `u' = u^2`.
///
/// Total on its domain: blow-up is reported as [`OdePoint::Infinity`] when
/// `1/u0` matches `t` to [`BLOWUP_MATCH_TOL`], never as an error. `u0 = 0`
/// is the constant zero solution.
pub fn ode_flow(t: Complex64, u0: Complex64) -> OdePoint {
    if u0 == Complex64::new(0.0, 0.0) {
        return OdePoint::Finite(u0);
    }
    let pole = u0.inv();
    if (pole - t).norm() <= BLOWUP_MATCH_TOL * t.norm().max(1.0) {
        return OdePoint::Infinity;
    }
    OdePoint::Finite((pole - t).inv())
}

/// `Im(1/u)`, conserved along the real-time flow.
pub fn conserved_quantity(u: Complex64) -> Result<f64, QuadOdeError> {
    if u == Complex64::new(0.0, 0.0) {
        return Err(QuadOdeError::ZeroInput);
    }
    Ok(u.inv().im)
}

/// Smallest solution disk containing every sample together with the origin.
///
/// For a point `y + i z` with `z > 0` the circle through it and the origin
/// centered at `i R` has `R(y, z) = (y^2 + z^2) / (2 z)`; the enclosing
/// radius is the maximum over the samples.
pub fn enclosing_disk(samples: &[Complex64]) -> Result<SolutionDisk, QuadOdeError> {
    if samples.is_empty() {
        return Err(QuadOdeError::EmptySamples);
    }
    let mut radius: f64 = 0.0;
    for (index, &z) in samples.iter().enumerate() {
        if !(z.im > 0.0) {
            return Err(QuadOdeError::NotUpperHalfPlane { index, value: z });
        }
        radius = radius.max(z.norm_sqr() / (2.0 * z.im));
    }
    SolutionDisk::new(radius)
}

/// Minimal argument over samples in the open upper half-plane; the returned
/// angle parameterizes the half-line that the samples lie to the left of.
pub fn min_angle(samples: &[Complex64]) -> Result<f64, QuadOdeError> {
    if samples.is_empty() {
        return Err(QuadOdeError::EmptySamples);
    }
    let mut angle = std::f64::consts::PI;
    for (index, &z) in samples.iter().enumerate() {
        if !(z.im > 0.0) {
            return Err(QuadOdeError::NotUpperHalfPlane { index, value: z });
        }
        angle = angle.min(z.arg());
    }
    Ok(angle)
}

/// Sup-norm envelope for the flow of data inside the solution disk of
/// `s0 e^{i phi}`:
///
/// ```text
/// bound(t) = ((cos(phi)/s0 - t)^2 + sin(phi)^2/s0^2)^(-1/2)   cos(phi) t <  1/s0
///          = (cos(phi) sin(phi) t)^(-1)                       cos(phi) t >= 1/s0
/// ```
///
/// The second branch is a simplification that over-estimates the first at
/// the switch point by the factor `1/cos(phi)`; both branches bound the
/// flow, and for `phi >= pi/2` the switch never activates.
pub fn supnorm_bound(t: f64, s0: f64, phi: f64) -> Result<f64, QuadOdeError> {
    if !(phi > 0.0 && phi < std::f64::consts::PI) {
        return Err(QuadOdeError::AngleOutOfRange(phi));
    }
    if !(s0 > 0.0) {
        return Err(QuadOdeError::InvalidParameter {
            name: "s0",
            value: s0,
        });
    }
    if !(t >= 0.0) {
        return Err(QuadOdeError::InvalidParameter { name: "t", value: t });
    }
    let alpha = phi.cos();
    let beta = phi.sin();
    if alpha * t < 1.0 / s0 {
        let a = alpha / s0 - t;
        let b = beta / s0;
        Ok((a * a + b * b).sqrt().recip())
    } else {
        Ok((alpha * beta * t).recip())
    }
}

/// Curvature of the image of the half-line `s -> s e^{i phi}` under the
/// time-`t` flow:
///
/// ```text
/// kappa(s) = 2 t sin(phi) / ((s t - cos(phi))^2 + sin(phi)^2)^3,
/// ```
///
/// strictly positive for `t > 0` and `phi` in (0, pi), so the transported
/// line stays convex.
pub fn line_curvature(s: f64, t: f64, phi: f64) -> f64 {
    let denom = (s * t - phi.cos()).powi(2) + phi.sin().powi(2);
    2.0 * t * phi.sin() / denom.powi(3)
}
