//! Dense square complex matrices, sized for few-body spin problems.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds from row-major entries; `entries.len()` must be a perfect square.
    pub fn from_rows(entries: Vec<Complex<T>>) -> Result<Self> {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        if dim * dim != entries.len() {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        Ok(Self { dim, data: entries })
    }

    pub fn from_real_diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(d, T::zero());
        }
        m
    }

    /// Outer product |v⟩⟨v|.
    pub fn outer(v: &[Complex<T>]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z.scale(s)).collect(),
        }
    }

    pub fn scale_complex(&self, s: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self[(i, i)]
        })
    }

    /// Real parts of the diagonal.
    pub fn diagonal_real(&self) -> Vec<T> {
        (0..self.dim).map(|i| self[(i, i)].re).collect()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, z| m.max(z.norm()))
    }

    /// Largest off-diagonal entry modulus.
    pub fn max_off_diagonal(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    m = m.max(self[(i, j)].norm());
                }
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    /// max |A(i,j) − conj(A(j,i))|.
    pub fn hermitian_defect(&self) -> T {
        let mut m = T::zero();
        for i in 0..self.dim {
            for j in i..self.dim {
                m = m.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        m
    }

    /// Hermitian to within `1e-14` of the largest entry.
    pub fn is_hermitian(&self) -> bool {
        self.hermitian_defect() <= T::tolerance(1e-14) * self.max_abs()
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length must match matrix dimension"
        );
        (0..self.dim)
            .map(|i| {
                let row = &self.data[i * self.dim..(i + 1) * self.dim];
                row.iter()
                    .zip(v)
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (&a, &b)| {
                        acc + a * b
                    })
            })
            .collect()
    }

    /// AB − BA.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    fn assert_same_dim(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimensions differ");
    }
}

/// Kronecker product with row-major blocks:
/// `(A⊗B)[(i·dimB + k), (j·dimB + l)] = A(i,j)·B(k,l)`.
pub fn kron<T: Real>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> ComplexMatrix<T> {
    let db = b.dim;
    ComplexMatrix::from_fn(a.dim * db, |r, c| a[(r / db, c / db)] * b[(r % db, c % db)])
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<'a, T: Real> Mul<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn mul(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.assert_same_dim(rhs);
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl<'a, T: Real> Add<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn add(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.assert_same_dim(rhs);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }
}

impl<'a, T: Real> Sub<&'a ComplexMatrix<T>> for &'a ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;

    fn sub(self, rhs: &'a ComplexMatrix<T>) -> ComplexMatrix<T> {
        self.assert_same_dim(rhs);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }
}
