//! Spatial discretization of (-1, 1) with homogeneous Dirichlet conditions.
//!
//! States live on the uniform interior grid `x_j = -1 + 2j/(N+1)`,
//! `j = 1..N`, and transform to coefficients in the sine eigenbasis
//! `e_n(x) = sin(n pi (x+1)/2)` with Laplacian eigenvalues
//! `lambda_n = -(n pi / 2)^2`. The forward/inverse pair is the DST-I,
//! evaluated through one complex FFT of the odd extension of length
//! `2(N+1)`. Real and imaginary parts are unpacked separately, so the
//! transform maps real data to exactly real coefficients and commutes with
//! complex conjugation to the last bit; the reality and conjugation
//! invariants of the evolution rely on this.

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpatialError {
    #[error("grid must have at least one interior point")]
    EmptyGrid,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Uniform interior grid of (-1, 1) with an attached FFT plan for the
/// sine transform of size `2(N+1)`.
#[derive(Clone)]
pub struct SpatialGrid {
    n: usize,
    points: Vec<f64>,
    fft: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for SpatialGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpatialGrid").field("n", &self.n).finish()
    }
}

impl PartialEq for SpatialGrid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl SpatialGrid {
    pub fn new(n_interior: usize) -> Result<Self, SpatialError> {
        if n_interior == 0 {
            return Err(SpatialError::EmptyGrid);
        }
        let m = n_interior + 1;
        let points = (1..=n_interior)
            .map(|j| -1.0 + 2.0 * j as f64 / m as f64)
            .collect();
        let fft = FftPlanner::new().plan_fft_forward(2 * m);
        Ok(Self {
            n: n_interior,
            points,
            fft,
        })
    }

    pub fn n_interior(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Grid spacing `2/(N+1)`, also the quadrature weight of the discrete
    /// L^2 inner product.
    pub fn spacing(&self) -> f64 {
        2.0 / (self.n + 1) as f64
    }

    /// Unnormalized sine transform `S(f)_n = sum_j f_j sin(pi j n / (N+1))`.
    ///
    /// Self-inverse up to the factor `(N+1)/2`. Applied to the real and
    /// imaginary parts independently through one packed FFT.
    fn sine_apply(&self, data: &[Complex64]) -> Vec<Complex64> {
        debug_assert_eq!(data.len(), self.n);
        let m = self.n + 1;
        let len = 2 * m;
        let mut buf = vec![Complex64::new(0.0, 0.0); len];
        for (j, &v) in data.iter().enumerate() {
            buf[j + 1] = v;
            buf[len - 1 - j] = -v;
        }
        self.fft.process(&mut buf);
        // With Y = FFT(odd extension), the transform of the real part is
        // -(Im Y_n - Im Y_{L-n})/4 and of the imaginary part
        // (Re Y_n - Re Y_{L-n})/4.
        (1..=self.n)
            .map(|n| {
                let a = buf[n];
                let b = buf[len - n];
                Complex64::new(-(a.im - b.im) / 4.0, (a.re - b.re) / 4.0)
            })
            .collect()
    }
}

/// Complex-valued profile on the interior grid; boundary values are
/// implicitly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct StateField {
    grid: SpatialGrid,
    values: Vec<Complex64>,
}

impl StateField {
    pub fn zeros(grid: &SpatialGrid) -> Self {
        Self {
            grid: grid.clone(),
            values: vec![Complex64::new(0.0, 0.0); grid.n_interior()],
        }
    }

    pub fn from_values(grid: &SpatialGrid, values: Vec<Complex64>) -> Result<Self, SpatialError> {
        if values.len() != grid.n_interior() {
            return Err(SpatialError::LengthMismatch {
                expected: grid.n_interior(),
                got: values.len(),
            });
        }
        Ok(Self {
            grid: grid.clone(),
            values,
        })
    }

    pub fn from_fn(grid: &SpatialGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let values = grid.points().iter().map(|&x| f(x)).collect();
        Self {
            grid: grid.clone(),
            values,
        }
    }

    pub fn from_real_fn(grid: &SpatialGrid, f: impl Fn(f64) -> f64) -> Self {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    pub fn grid(&self) -> &SpatialGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Real parts of the values.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }

    pub fn conj(&self) -> StateField {
        Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    pub fn max_imag_abs(&self) -> f64 {
        self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }
}

/// Coefficients in the sine eigenbasis, `a_n` for `n = 1..N`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeVector {
    coeffs: Vec<Complex64>,
}

impl ModeVector {
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs }
    }

    /// The basis vector `e_k` on a grid with `n` interior points (1-based).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
        coeffs[k - 1] = Complex64::new(1.0, 0.0);
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// l^2 norm of the coefficients; by Parseval this equals the discrete
    /// L^2 norm of the field.
    pub fn l2(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// `lambda_n = -(n pi / 2)^2` for the 1-based mode index.
pub fn laplacian_eigenvalue(n: usize) -> f64 {
    let half = n as f64 * std::f64::consts::PI / 2.0;
    -(half * half)
}

/// Forward transform: field values to sine coefficients.
pub fn to_modes(f: &StateField) -> ModeVector {
    let m = f.grid.n_interior() + 1;
    let scale = 2.0 / m as f64;
    let coeffs = f
        .grid
        .sine_apply(&f.values)
        .into_iter()
        .map(|c| c * scale)
        .collect();
    ModeVector { coeffs }
}

/// Inverse transform: sine coefficients to field values on `grid`.
pub fn from_modes(m: &ModeVector, grid: &SpatialGrid) -> Result<StateField, SpatialError> {
    if m.len() != grid.n_interior() {
        return Err(SpatialError::LengthMismatch {
            expected: grid.n_interior(),
            got: m.len(),
        });
    }
    let values = grid.sine_apply(&m.coeffs);
    Ok(StateField {
        grid: grid.clone(),
        values,
    })
}

/// Spectral Laplacian: componentwise multiplication by `lambda_n`.
pub fn laplacian(m: &ModeVector) -> ModeVector {
    let coeffs = m
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| c * laplacian_eigenvalue(i + 1))
        .collect();
    ModeVector { coeffs }
}

/// Number of retained modes under the 2/3 rule.
pub fn dealias_keep(n_interior: usize) -> usize {
    2 * n_interior / 3
}

/// Pointwise square followed by 2/3-rule truncation in mode space.
pub fn square_dealiased(f: &StateField) -> StateField {
    let squared = StateField {
        grid: f.grid.clone(),
        values: f.values.iter().map(|&v| v * v).collect(),
    };
    let mut modes = to_modes(&squared);
    let keep = dealias_keep(f.grid.n_interior());
    for c in modes.coeffs.iter_mut().skip(keep) {
        *c = Complex64::new(0.0, 0.0);
    }
    from_modes(&modes, &f.grid).expect("mode count matches grid")
}

/// Sup norm and discrete L^2 norm (`sqrt(dx sum |f_j|^2)`).
pub fn norms(f: &StateField) -> (f64, f64) {
    let sup = f.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let l2 = (f.grid.spacing() * f.values.iter().map(|v| v.norm_sqr()).sum::<f64>()).sqrt();
    (sup, l2)
}

/// Discrete L^2 inner product `dx sum conj(f_j) g_j`.
pub fn l2_inner(f: &StateField, g: &StateField) -> Complex64 {
    let dx = f.grid.spacing();
    f.values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| a.conj() * b)
        .sum::<Complex64>()
        * dx
}
