//! Dense complex matrices and kets.
//!
//! A [`Ket`] stores raw amplitudes together with a radicand `r`; the vector it
//! represents is `amplitudes / √r`. This keeps normalisers such as
//! `1/√(2(1+δ))` exact in the rational backend. Anything quadratic in a ket
//! (norms, expectations, variances, residuals) stays exact; inner products
//! need `√(r₁r₂)` to be rational.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{cr, Real, C};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R: Real> {
    rows: usize,
    cols: usize,
    data: Vec<C<R>>,
}

impl<R: Real> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = C::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<C<R>>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Panics on ragged input; meant for literal fixtures.
    pub fn from_rows(rows: Vec<Vec<C<R>>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix literal");
        Self { rows: n, cols: m, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn entries(&self) -> &[C<R>] {
        &self.data
    }
    pub fn get(&self, i: usize, j: usize) -> &C<R> {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: C<R>) {
        self.data[i * self.cols + j] = v;
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn square(&self, what: &str) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("{what} needs a square matrix, got {}x{}", self.rows, self.cols)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Self { data, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Self { data, ..*self })
    }

    pub fn scale(&self, z: &C<R>) -> Self {
        Self { data: self.data.iter().map(|a| a * z).collect(), ..*self }
    }

    pub fn scale_real(&self, x: &R) -> Self {
        self.scale(&cr(x.clone()))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "matmul: {}x{} · {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] = &out.data[i * other.cols + j] + a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product; the first factor selects the row block, so
    /// `|a⟩⊗|b⟩` lands at index `a·dim(b) + b`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i * self.cols + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] =
                            a * &other.data[k * other.cols + l];
                    }
                }
            }
        }
        out
    }

    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<C<R>> {
        self.square("trace")?;
        Ok((0..self.rows).fold(C::zero(), |acc, i| acc + &self.data[i * self.cols + i]))
    }

    /// Determinant by Gaussian elimination, pivoting on the largest |·|².
    /// Exact in the rational backend.
    pub fn det(&self) -> Result<C<R>> {
        self.square("det")?;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = C::<R>::one();
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a[r * n + col].is_zero())
                .max_by(|&x, &y| {
                    a[x * n + col]
                        .norm_sqr()
                        .partial_cmp(&a[y * n + col].norm_sqr())
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
            let Some(p) = pivot else { return Ok(C::zero()) };
            if p != col {
                for j in 0..n {
                    a.swap(col * n + j, p * n + j);
                }
                det = -det;
            }
            let pv = a[col * n + col].clone();
            det = det * &pv;
            for r in col + 1..n {
                let f = &a[r * n + col] / &pv;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let t = &f * &a[col * n + j];
                    a[r * n + j] = &a[r * n + j] - t;
                }
            }
        }
        Ok(det)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.square("commutator")?;
        self.matmul(other)?.sub(&other.matmul(self)?)
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.square("anticommutator")?;
        self.matmul(other)?.add(&other.matmul(self)?)
    }

    /// Largest entry modulus squared, exact.
    pub fn max_abs_sqr(&self) -> R {
        self.data.iter().map(C::norm_sqr).fold(R::zero(), |m, x| if x > m { x } else { m })
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.max_abs_sqr().to_f64().sqrt()
    }

    /// Elementwise max |a − b|; `f64::INFINITY` on shape mismatch.
    pub fn max_diff(&self, other: &Self) -> f64 {
        self.sub(other).map_or(f64::INFINITY, |d| d.max_abs())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && self.max_diff(&self.dagger()) == 0.0
    }

    /// Matrix–vector product on raw amplitudes.
    pub fn apply_raw(&self, v: &[C<R>]) -> Result<Vec<C<R>>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!("{}x{} applied to dim {}", self.rows, self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(C::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Entries as `f64` complex numbers.
    pub fn to_c64(&self) -> Vec<num_complex::Complex64> {
        self.data.iter().map(crate::scalar::to_c64).collect()
    }
}

/// Cofactor-expansion determinant; the reference for [`Matrix::det`].
pub fn det_cofactor<R: Real>(m: &Matrix<R>) -> C<R> {
    assert!(m.is_square());
    let n = m.rows();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = C::zero();
    for j in 0..n {
        let minor: Vec<C<R>> = (1..n)
            .flat_map(|r| (0..n).filter(move |&c| c != j).map(move |c| (r, c)))
            .map(|(r, c)| m.get(r, c).clone())
            .collect();
        let sub = Matrix::from_vec(n - 1, n - 1, minor).expect("minor shape");
        let term = m.get(0, j) * det_cofactor(&sub);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ket<R: Real> {
    amplitudes: Vec<C<R>>,
    radicand: R,
}

impl<R: Real> Ket<R> {
    pub fn new(amplitudes: Vec<C<R>>) -> Self {
        Self { amplitudes, radicand: R::one() }
    }

    /// `amplitudes / √radicand`; the radicand must be positive.
    pub fn with_radicand(amplitudes: Vec<C<R>>, radicand: R) -> Self {
        assert!(radicand > R::zero(), "ket radicand must be positive");
        Self { amplitudes, radicand }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut a = vec![C::zero(); dim];
        a[index] = C::one();
        Self::new(a)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }
    pub fn raw(&self) -> &[C<R>] {
        &self.amplitudes
    }
    pub fn radicand(&self) -> &R {
        &self.radicand
    }

    /// Amplitudes as `f64` complex numbers, normaliser applied.
    pub fn to_c64(&self) -> Vec<num_complex::Complex64> {
        let s = self.radicand.to_f64().sqrt();
        self.amplitudes.iter().map(|a| crate::scalar::to_c64(a) / s).collect()
    }

    /// Amplitude `k` when it is representable (√radicand rational).
    pub fn amplitude(&self, k: usize) -> Result<C<R>> {
        let s = self.sqrt_radicand()?;
        Ok(&self.amplitudes[k] / cr(s))
    }

    fn sqrt_radicand(&self) -> Result<R> {
        self.radicand
            .sqrt_exact()
            .ok_or_else(|| Error::Inexact(format!("√{}", self.radicand)))
    }

    pub fn norm_sqr(&self) -> R {
        raw_norm_sqr(&self.amplitudes) / self.radicand.clone()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        let n = self.norm_sqr();
        if R::EXACT {
            n == R::one()
        } else {
            (n.to_f64() - 1.0).abs() <= tol
        }
    }

    pub fn require_normalized(&self, tol: f64) -> Result<()> {
        if self.is_normalized(tol) {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.norm_sqr().to_f64()))
        }
    }

    /// Same direction, unit norm. Always exact.
    pub fn normalized(&self) -> Result<Self> {
        let n = raw_norm_sqr(&self.amplitudes);
        if n.is_zero() {
            return Err(Error::InvalidParameter("cannot normalize the zero vector".into()));
        }
        Ok(Self { amplitudes: self.amplitudes.clone(), radicand: n })
    }

    pub fn scale(&self, z: &C<R>) -> Self {
        Self { amplitudes: self.amplitudes.iter().map(|a| a * z).collect(), radicand: self.radicand.clone() }
    }

    /// Multiply by `√q`, `q > 0`.
    pub fn scale_sqrt(&self, q: &R) -> Self {
        assert!(*q > R::zero(), "scale_sqrt needs a positive factor");
        Self { amplitudes: self.amplitudes.clone(), radicand: self.radicand.clone() / q.clone() }
    }

    /// Divide by `√q`, `q > 0`.
    pub fn div_sqrt(&self, q: &R) -> Self {
        assert!(*q > R::zero(), "div_sqrt needs a positive factor");
        Self { amplitudes: self.amplitudes.clone(), radicand: self.radicand.clone() * q.clone() }
    }

    /// Sum of two kets. Needs `radicand ratio` to be a perfect square in the
    /// exact backend.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::Dimension(format!("ket add: {} vs {}", self.dim(), other.dim())));
        }
        // a/√ra + b/√rb = (a + b·√(ra/rb)) / √ra
        let f = (self.radicand.clone() / other.radicand.clone())
            .sqrt_exact()
            .ok_or_else(|| Error::Inexact(format!("√({}/{})", self.radicand, other.radicand)))?;
        let f = cr(f);
        let amplitudes = self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a + b * &f).collect();
        Ok(Self { amplitudes, radicand: self.radicand.clone() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-C::<R>::one()))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self { amplitudes, radicand: self.radicand.clone() * other.radicand.clone() }
    }

    pub fn apply(&self, op: &Matrix<R>) -> Result<Self> {
        Ok(Self { amplitudes: op.apply_raw(&self.amplitudes)?, radicand: self.radicand.clone() })
    }

    /// `⟨self|other⟩`; exact only when `√(r₁r₂)` is rational.
    pub fn inner(&self, other: &Self) -> Result<C<R>> {
        let raw = raw_inner(&self.amplitudes, &other.amplitudes)?;
        let s = (self.radicand.clone() * other.radicand.clone())
            .sqrt_exact()
            .ok_or_else(|| Error::Inexact("inner product normaliser".into()))?;
        Ok(raw / cr(s))
    }

    /// `⟨self|other⟩` in `f64`, available for every backend.
    pub fn inner_c64(&self, other: &Self) -> Result<num_complex::Complex64> {
        let raw = raw_inner(&self.amplitudes, &other.amplitudes)?;
        let s = (self.radicand.to_f64() * other.radicand.to_f64()).sqrt();
        Ok(crate::scalar::to_c64(&raw) / s)
    }

    /// `|⟨self|other⟩|²`, always exact.
    pub fn overlap_sqr(&self, other: &Self) -> Result<R> {
        let raw = raw_inner(&self.amplitudes, &other.amplitudes)?;
        Ok(raw.norm_sqr() / (self.radicand.clone() * other.radicand.clone()))
    }

    /// `⟨self|op|self⟩`, divided by the squared norm.
    pub fn quadratic_form(&self, op: &Matrix<R>) -> Result<C<R>> {
        let v = op.apply_raw(&self.amplitudes)?;
        Ok(raw_inner(&self.amplitudes, &v)? / cr(self.radicand.clone()))
    }

    /// `‖self − other‖`, exact-zero aware. Fails only when the two radicands
    /// are incompatible in the exact backend.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        Ok(self.try_sub(other)?.norm_sqr().to_f64().sqrt())
    }
}

fn raw_norm_sqr<R: Real>(v: &[C<R>]) -> R {
    v.iter().fold(R::zero(), |acc, a| acc + a.norm_sqr())
}

fn raw_inner<R: Real>(a: &[C<R>], b: &[C<R>]) -> Result<C<R>> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("inner product: {} vs {}", a.len(), b.len())));
    }
    Ok(a.iter().zip(b).fold(C::zero(), |acc, (x, y)| acc + x.conj() * y))
}

/// `⟨ψ|op|ψ⟩` for normalized ψ.
pub fn expectation<R: Real>(op: &Matrix<R>, psi: &Ket<R>, tol: f64) -> Result<C<R>> {
    check_op(op, psi)?;
    psi.require_normalized(tol)?;
    psi.quadratic_form(op)
}

/// `⟨op²⟩ − ⟨op⟩²`, real part (real for Hermitian `op`).
pub fn variance<R: Real>(op: &Matrix<R>, psi: &Ket<R>, tol: f64) -> Result<R> {
    Ok(covariance(op, op, psi, tol)?.re)
}

/// `⟨ab⟩ − ⟨a⟩⟨b⟩`.
pub fn covariance<R: Real>(a: &Matrix<R>, b: &Matrix<R>, psi: &Ket<R>, tol: f64) -> Result<C<R>> {
    check_op(a, psi)?;
    check_op(b, psi)?;
    psi.require_normalized(tol)?;
    let ab = psi.quadratic_form(&a.matmul(b)?)?;
    Ok(ab - psi.quadratic_form(a)? * psi.quadratic_form(b)?)
}

fn check_op<R: Real>(op: &Matrix<R>, psi: &Ket<R>) -> Result<()> {
    if !op.is_square() || op.rows() != psi.dim() {
        return Err(Error::Dimension(format!("{}x{} operator on dim {}", op.rows(), op.cols(), psi.dim())));
    }
    Ok(())
}

/// `‖op·v − λv‖₂`.
pub fn eigen_residual<R: Real>(op: &Matrix<R>, v: &Ket<R>, lambda: &C<R>) -> Result<f64> {
    check_op(op, v)?;
    let w = op.apply_raw(v.raw())?;
    let d: Vec<C<R>> = w.iter().zip(v.raw()).map(|(x, y)| x - lambda * y).collect();
    Ok(Ket::with_radicand(d, v.radicand().clone()).norm_sqr().to_f64().sqrt())
}
