//! Small dense complex vector kernel.
//!
//! Everything here works on `Nt`-length vectors with `Nt` in the single or low
//! double digits, so plain loops are used throughout. Projections go through
//! an orthonormal basis built by modified Gram-Schmidt rather than a
//! pseudo-inverse.

use alloc::vec::Vec;
use core::ops::Index;

use num_complex::Complex;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Relative factor applied to the largest input norm to get the default
/// Gram-Schmidt rank tolerance.
pub const RANK_TOL_FACTOR: f64 = 1e-10;

/// A nonempty complex vector with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVec(Vec<C64>);

impl ComplexVec {
    pub fn new(entries: Vec<C64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(Self(entries))
    }

    /// Builds a vector from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(re, im)| C64::new(re, im)).collect())
    }

    /// Builds a purely real vector.
    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&re| C64::new(re, 0.0)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        assert!(len > 0, "ComplexVec must be nonempty");
        Self(alloc::vec![C64::new(0.0, 0.0); len])
    }

    /// The `index`-th canonical basis vector of length `len`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[index] = C64::new(1.0, 0.0);
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, C64> {
        self.0.iter()
    }

    pub fn into_inner(self) -> Vec<C64> {
        self.0
    }

    fn check_len(&self, other: &ComplexVec) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(())
    }

    /// Hermitian inner product `selfᴴ other`.
    pub fn inner(&self, other: &ComplexVec) -> Result<C64> {
        self.check_len(other)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &ComplexVec) -> C64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(C64::new(0.0, 0.0), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, factor: C64) -> ComplexVec {
        ComplexVec(self.0.iter().map(|z| z * factor).collect())
    }

    pub fn scale_real(&self, factor: f64) -> ComplexVec {
        ComplexVec(self.0.iter().map(|z| z * factor).collect())
    }

    pub fn add(&self, other: &ComplexVec) -> Result<ComplexVec> {
        self.check_len(other)?;
        Ok(ComplexVec(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &ComplexVec) -> Result<ComplexVec> {
        self.check_len(other)?;
        Ok(ComplexVec(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// `self + factor * other`, lengths assumed equal.
    pub(crate) fn axpy_unchecked(&self, factor: C64, other: &ComplexVec) -> ComplexVec {
        debug_assert_eq!(self.len(), other.len());
        ComplexVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + factor * b)
                .collect(),
        )
    }

    /// Unit-norm copy, or `None` for the zero vector.
    pub fn normalized(&self) -> Option<ComplexVec> {
        let n = self.norm();
        if n > 0.0 {
            Some(self.scale_real(1.0 / n))
        } else {
            None
        }
    }
}

impl Index<usize> for ComplexVec {
    type Output = C64;

    fn index(&self, index: usize) -> &C64 {
        &self.0[index]
    }
}

/// Mutually orthonormal vectors spanning some subspace of `C^n`.
///
/// An empty basis spans `{0}`: projecting onto it gives zero and projecting
/// onto its complement is the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthonormalBasis {
    vectors: Vec<ComplexVec>,
    tol: f64,
}

impl OrthonormalBasis {
    pub fn empty() -> Self {
        Self {
            vectors: Vec::new(),
            tol: 0.0,
        }
    }

    pub fn vectors(&self) -> &[ComplexVec] {
        &self.vectors
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    fn check_dim(&self, v: &ComplexVec) -> Result<()> {
        match self.vectors.first() {
            Some(b) if b.len() != v.len() => Err(Error::DimensionMismatch {
                expected: b.len(),
                got: v.len(),
            }),
            _ => Ok(()),
        }
    }
}

/// Default rank tolerance for [`gram_schmidt`]: `1e-10` times the largest
/// column norm.
pub fn rank_tolerance(columns: &[ComplexVec]) -> f64 {
    let max_norm = columns.iter().map(ComplexVec::norm).fold(0.0, f64::max);
    let tol = RANK_TOL_FACTOR * max_norm;
    if tol > 0.0 {
        tol
    } else {
        f64::MIN_POSITIVE
    }
}

/// Orthonormalizes `columns` with modified Gram-Schmidt (two passes).
///
/// Columns whose residual norm after deflation is `<= tol` are dropped, so the
/// returned basis has the rank of the input span.
pub fn gram_schmidt(columns: &[ComplexVec], tol: f64) -> Result<OrthonormalBasis> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::InvalidArgument {
            name: "tol",
            value: tol,
        });
    }
    if let Some(first) = columns.first() {
        for c in &columns[1..] {
            first.check_len(c)?;
        }
    }

    let mut vectors: Vec<ComplexVec> = Vec::with_capacity(columns.len());
    for col in columns {
        let mut r = col.clone();
        // Second pass restores orthogonality lost to cancellation.
        for _ in 0..2 {
            for q in &vectors {
                let coeff = q.inner_unchecked(&r);
                r = r.axpy_unchecked(-coeff, q);
            }
        }
        let n = r.norm();
        if n > tol {
            vectors.push(r.scale_real(1.0 / n));
        }
    }
    Ok(OrthonormalBasis { vectors, tol })
}

/// `Π_A v = Σ ⟨b_i, v⟩ b_i` for the basis vectors `b_i` of `A`.
pub fn project_onto(v: &ComplexVec, basis: &OrthonormalBasis) -> Result<ComplexVec> {
    basis.check_dim(v)?;
    let mut out = ComplexVec::zeros(v.len());
    for b in &basis.vectors {
        let coeff = b.inner_unchecked(v);
        out = out.axpy_unchecked(coeff, b);
    }
    Ok(out)
}

/// `Π⊥_A v = v - Π_A v`.
pub fn project_complement(v: &ComplexVec, basis: &OrthonormalBasis) -> Result<ComplexVec> {
    let p = project_onto(v, basis)?;
    v.sub(&p)
}

/// Squared cosine of the angle between two channel vectors,
/// `|h1ᴴ h2|² / (‖h1‖² ‖h2‖²)`, clamped to `[0, 1]`.
pub fn angle_theta(h1: &ComplexVec, h2: &ComplexVec) -> Result<f64> {
    h1.check_len(h2)?;
    let n1 = h1.norm_sqr();
    let n2 = h2.norm_sqr();
    if n1 == 0.0 || n2 == 0.0 {
        return Err(Error::ZeroNorm);
    }
    let ip = h1.inner_unchecked(h2).norm_sqr();
    Ok((ip / (n1 * n2)).clamp(0.0, 1.0))
}

/// Angle in radians between the line spanned by `w` and the direction of
/// `h`, ignoring phase. Zero `w` or `h` yields `π/2`.
pub fn beam_deviation(w: &ComplexVec, h: &ComplexVec) -> Result<f64> {
    w.check_len(h)?;
    let Some(h_unit) = h.normalized() else {
        return Ok(core::f64::consts::FRAC_PI_2);
    };
    let along = h_unit.inner_unchecked(w);
    let perp = w.axpy_unchecked(-along, &h_unit).norm();
    if along.norm() == 0.0 && perp == 0.0 {
        return Ok(core::f64::consts::FRAC_PI_2);
    }
    Ok(perp.atan2(along.norm()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cv(pairs: &[(f64, f64)]) -> ComplexVec {
        ComplexVec::from_pairs(pairs).unwrap()
    }

    fn close(a: &ComplexVec, b: &ComplexVec, tol: f64) -> bool {
        a.sub(b).unwrap().norm() <= tol
    }

    #[test]
    fn rejects_empty_and_nonfinite() {
        assert_eq!(ComplexVec::new(vec![]), Err(Error::EmptyVector));
        assert_eq!(
            ComplexVec::from_real(&[1.0, f64::NAN]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn gram_schmidt_keeps_orthonormal_input() {
        let cols = [cv(&[(1.0, 0.0), (0.0, 0.0)]), cv(&[(0.0, 0.0), (1.0, 0.0)])];
        let basis = gram_schmidt(&cols, 1e-10).unwrap();
        assert_eq!(basis.rank(), 2);
        assert!(close(&basis.vectors()[0], &cols[0], 1e-15));
        assert!(close(&basis.vectors()[1], &cols[1], 1e-15));
    }

    #[test]
    fn gram_schmidt_drops_dependent_column() {
        let cols = [cv(&[(1.0, 0.0), (0.0, 0.0)]), cv(&[(2.0, 0.0), (0.0, 0.0)])];
        let basis = gram_schmidt(&cols, rank_tolerance(&cols)).unwrap();
        assert_eq!(basis.rank(), 1);
        assert!(close(&basis.vectors()[0], &cols[0], 1e-15));
    }

    #[test]
    fn gram_schmidt_full_rank_reconstructs_inputs() {
        let s = 0.5f64.sqrt();
        let cols = [cv(&[(s, 0.0), (s, 0.0)]), cv(&[(1.0, 0.0), (0.0, 0.0)])];
        let basis = gram_schmidt(&cols, 1e-10).unwrap();
        assert_eq!(basis.rank(), 2);
        for c in &cols {
            let p = project_onto(c, &basis).unwrap();
            assert!(close(&p, c, 1e-14));
        }
    }

    #[test]
    fn gram_schmidt_dimension_mismatch() {
        let cols = [cv(&[(1.0, 0.0)]), cv(&[(1.0, 0.0), (0.0, 0.0)])];
        assert!(matches!(
            gram_schmidt(&cols, 1e-10),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn projections_of_in_span_and_orthogonal_vectors() {
        let basis = gram_schmidt(&[cv(&[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0)])], 1e-10).unwrap();
        let inside = cv(&[(0.0, 3.0), (0.0, 0.0), (0.0, 0.0)]);
        let outside = cv(&[(0.0, 0.0), (1.0, -1.0), (2.0, 0.0)]);
        assert!(close(
            &project_onto(&inside, &basis).unwrap(),
            &inside,
            1e-15
        ));
        assert!(project_onto(&outside, &basis).unwrap().norm() < 1e-15);
        assert!(project_complement(&inside, &basis).unwrap().norm() < 1e-15);
        assert!(close(
            &project_complement(&outside, &basis).unwrap(),
            &outside,
            1e-15
        ));
    }

    #[test]
    fn empty_basis_is_identity_complement() {
        let v = cv(&[(1.0, 2.0), (3.0, -4.0)]);
        let basis = OrthonormalBasis::empty();
        assert_eq!(project_complement(&v, &basis).unwrap(), v);
        assert_eq!(project_onto(&v, &basis).unwrap().norm(), 0.0);
    }

    #[test]
    fn projection_dimension_mismatch() {
        let basis = gram_schmidt(&[cv(&[(1.0, 0.0), (0.0, 0.0)])], 1e-10).unwrap();
        let v = cv(&[(1.0, 0.0)]);
        assert!(project_onto(&v, &basis).is_err());
        assert!(project_complement(&v, &basis).is_err());
    }

    #[test]
    fn angle_theta_examples() {
        let s = 0.5f64.sqrt();
        let h1 = cv(&[(1.0, 0.0), (0.0, 0.0)]);
        let h2 = cv(&[(s, 0.0), (s, 0.0)]);
        assert!((angle_theta(&h1, &h1).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(
            angle_theta(&h1, &cv(&[(0.0, 0.0), (0.0, 1.0)])).unwrap(),
            0.0
        );
        assert!((angle_theta(&h1, &h2).unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(
            angle_theta(&h1, &ComplexVec::zeros(2)),
            Err(Error::ZeroNorm)
        );
    }

    #[test]
    fn beam_deviation_small_angle() {
        let h = cv(&[(1.0, 0.0), (0.0, 0.0)]);
        let w = cv(&[(0.0, 1.0), (1e-6, 0.0)]);
        let dev = beam_deviation(&w, &h).unwrap();
        assert!((dev - 1e-6).abs() < 1e-15);
    }
}
