//! Dense complex linear algebra at the fixed dimensions 2, 4 and 8, plus the
//! gamma-matrix / Clifford layer in the chiral and standard representations.
//!
//! The metric signature is fixed to (+,-,-,-) throughout.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Allowed vector/matrix dimensions.
pub const DIMS: [usize; 3] = [2, 4, 8];

/// Minkowski metric g = diag(+1, -1, -1, -1).
pub fn metric(mu: usize, nu: usize) -> f64 {
    if mu != nu {
        0.0
    } else if mu == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Real scalar as a complex number.
pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Imaginary scalar as a complex number.
pub fn ci(im: f64) -> Complex64 {
    Complex64::new(0.0, im)
}

/// Gamma-matrix representation tag.
///
/// `Chiral` is the library-wide default: gamma5 is diagonal and the top
/// 2-spinor block of a 4-spinor is right-handed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum GammaBasis {
    Chiral,
    Standard,
}

impl std::fmt::Display for GammaBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GammaBasis::Chiral => write!(f, "chiral"),
            GammaBasis::Standard => write!(f, "standard"),
        }
    }
}

/// Dense complex vector of dimension 2, 4 or 8.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector {
    entries: Vec<Complex64>,
}

impl ComplexVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        assert!(DIMS.contains(&entries.len()), "dimension must be 2, 4 or 8");
        Self { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![Complex64::ZERO; dim])
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [Complex64] {
        &mut self.entries
    }

    pub fn conj(&self) -> Self {
        Self::new(self.entries.iter().map(|z| z.conj()).collect())
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.entries.iter().map(|z| z * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Hermitian inner product `<self, other>` (conjugates `self`).
    pub fn dot(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).re.sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Stack two vectors of equal dimension into one of twice the size.
    pub fn stack(top: &Self, bottom: &Self) -> Self {
        assert_eq!(top.dim(), bottom.dim());
        let mut entries = top.entries.clone();
        entries.extend_from_slice(&bottom.entries);
        Self::new(entries)
    }

    /// Split an even-dimensional vector into its top and bottom halves.
    pub fn split(&self) -> (Self, Self) {
        let h = self.dim() / 2;
        (
            Self::new(self.entries[..h].to_vec()),
            Self::new(self.entries[h..].to_vec()),
        )
    }

    /// Least-squares eigenvalue fit: the minimum over scalars `c` of
    /// `|a - c*self| / |self|` with `a = op(self)` precomputed by the caller.
    /// Zero exactly when `self` is an eigenvector of the underlying map.
    pub fn eigen_fit_ratio(&self, image: &Self) -> f64 {
        let nn = self.dot(self).re;
        assert!(nn > 0.0, "eigen fit on zero vector");
        let c = self.dot(image) / nn;
        image.sub(&self.scale(c)).norm() / nn.sqrt()
    }
}

impl std::ops::Index<usize> for ComplexVector {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.entries[i]
    }
}

impl std::ops::IndexMut<usize> for ComplexVector {
    fn index_mut(&mut self, i: usize) -> &mut Complex64 {
        &mut self.entries[i]
    }
}

/// Dense row-major complex matrix with rows, cols in {2, 4, 8}.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(DIMS.contains(&rows) && DIMS.contains(&cols));
        Self {
            rows,
            cols,
            data: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = cr(1.0);
        }
        m
    }

    /// Build from nested row slices.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, z) in row.iter().enumerate() {
                m[(i, j)] = *z;
            }
        }
        m
    }

    /// Assemble a square matrix of dimension 2n from four n-by-n blocks
    /// [[tl, tr], [bl, br]].
    pub fn from_blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Self {
        let n = tl.rows;
        for b in [tl, tr, bl, br] {
            assert!(b.rows == n && b.cols == n);
        }
        let mut m = Self::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = tl[(i, j)];
                m[(i, j + n)] = tr[(i, j)];
                m[(i + n, j)] = bl[(i, j)];
                m[(i + n, j + n)] = br[(i, j)];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &ComplexVector) -> ComplexVector {
        assert_eq!(self.cols, v.dim());
        let mut out = ComplexVector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = Complex64::ZERO;
            for j in 0..self.cols {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.conj();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Determinant by cofactor expansion; exact for small integer matrices.
    pub fn det(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols);
        fn det_rec(n: usize, at: &dyn Fn(usize, usize) -> Complex64) -> Complex64 {
            if n == 1 {
                return at(0, 0);
            }
            let mut acc = Complex64::ZERO;
            let mut sign = 1.0;
            for k in 0..n {
                let pivot = at(0, k);
                if pivot != Complex64::ZERO {
                    let minor = move |i: usize, j: usize| at(i + 1, if j < k { j } else { j + 1 });
                    acc += cr(sign) * pivot * det_rec(n - 1, &minor);
                }
                sign = -sign;
            }
            acc
        }
        let at = |i: usize, j: usize| self[(i, j)];
        det_rec(self.rows, &at)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    /// Max entrywise deviation from the identity of U * U^dagger.
    pub fn unitarity_residual(&self) -> f64 {
        self.mul(&self.adjoint())
            .sub(&Self::identity(self.rows))
            .max_abs()
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Pauli matrix sigma^i for i in 1..=3.
pub fn pauli(i: usize) -> Result<ComplexMatrix> {
    let m = match i {
        1 => ComplexMatrix::from_rows(&[vec![cr(0.0), cr(1.0)], vec![cr(1.0), cr(0.0)]]),
        2 => ComplexMatrix::from_rows(&[vec![cr(0.0), ci(-1.0)], vec![ci(1.0), cr(0.0)]]),
        3 => ComplexMatrix::from_rows(&[vec![cr(1.0), cr(0.0)], vec![cr(0.0), cr(-1.0)]]),
        _ => return Err(Error::IndexOutOfRange { what: "pauli index", value: i, max: 3 }),
    };
    Ok(m)
}

/// sigma . a for a real 3-vector a.
pub fn sigma_dot(a: [f64; 3]) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![cr(a[2]), Complex64::new(a[0], -a[1])],
        vec![Complex64::new(a[0], a[1]), cr(-a[2])],
    ])
}

/// gamma^mu in the requested representation.
///
/// Chiral: gamma^0 = offdiag(1,1), gamma^i = [[0, -sigma^i], [sigma^i, 0]].
/// Standard: gamma^0 = diag(1,1,-1,-1), gamma^i = [[0, sigma^i], [-sigma^i, 0]].
pub fn gamma(mu: usize, basis: GammaBasis) -> Result<ComplexMatrix> {
    if mu > 3 {
        return Err(Error::IndexOutOfRange { what: "gamma index", value: mu, max: 3 });
    }
    let id2 = ComplexMatrix::identity(2);
    let z2 = ComplexMatrix::zeros(2, 2);
    let m = match (basis, mu) {
        (GammaBasis::Chiral, 0) => ComplexMatrix::from_blocks(&z2, &id2, &id2, &z2),
        (GammaBasis::Chiral, i) => {
            let s = pauli(i)?;
            ComplexMatrix::from_blocks(&z2, &s.scale(cr(-1.0)), &s, &z2)
        }
        (GammaBasis::Standard, 0) => {
            ComplexMatrix::from_blocks(&id2, &z2, &z2, &id2.scale(cr(-1.0)))
        }
        (GammaBasis::Standard, i) => {
            let s = pauli(i)?;
            ComplexMatrix::from_blocks(&z2, &s, &s.scale(cr(-1.0)), &z2)
        }
    };
    Ok(m)
}

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3; diag(1,1,-1,-1) in the chiral basis.
pub fn gamma5(basis: GammaBasis) -> ComplexMatrix {
    let g0 = gamma(0, basis).expect("fixed index");
    let g1 = gamma(1, basis).expect("fixed index");
    let g2 = gamma(2, basis).expect("fixed index");
    let g3 = gamma(3, basis).expect("fixed index");
    g0.mul(&g1).mul(&g2).mul(&g3).scale(ci(1.0))
}

/// Max residual of the Clifford relation {gamma^mu, gamma^nu} = 2 g^{mu nu} 1
/// over all index pairs, for a caller-supplied set of candidate matrices.
pub fn clifford_residual_for(gammas: &[ComplexMatrix; 4]) -> f64 {
    let n = gammas[0].rows();
    let id = ComplexMatrix::identity(n);
    let mut worst: f64 = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            let lhs = gammas[mu].anticommutator(&gammas[nu]);
            let rhs = id.scale(cr(2.0 * metric(mu, nu)));
            worst = worst.max(lhs.sub(&rhs).max_abs());
        }
    }
    worst
}

/// Max residual of the Clifford relation for the 4x4 representation `basis`.
pub fn clifford_residual(basis: GammaBasis) -> f64 {
    let gs = [
        gamma(0, basis).expect("fixed index"),
        gamma(1, basis).expect("fixed index"),
        gamma(2, basis).expect("fixed index"),
        gamma(3, basis).expect("fixed index"),
    ];
    clifford_residual_for(&gs)
}

/// 8x8 block off-diagonal Gamma^mu with gamma^mu blocks.
pub fn big_gamma(mu: usize, basis: GammaBasis) -> Result<ComplexMatrix> {
    let g = gamma(mu, basis)?;
    let z4 = ComplexMatrix::zeros(4, 4);
    Ok(ComplexMatrix::from_blocks(&z4, &g, &g, &z4))
}

/// 8x8 block-diagonal diag(gamma5, -gamma5) in the chiral basis.
pub fn ell5() -> ComplexMatrix {
    let g5 = gamma5(GammaBasis::Chiral);
    let z4 = ComplexMatrix::zeros(4, 4);
    ComplexMatrix::from_blocks(&g5, &z4, &z4, &g5.scale(cr(-1.0)))
}

/// The fixed standard <-> chiral change-of-basis unitary
/// S = (1/sqrt 2) [[1, 1], [1, -1]] in 2x2 blocks. S is Hermitian, unitary
/// and involutory, so it serves both directions.
pub fn basis_change_matrix() -> ComplexMatrix {
    let id2 = ComplexMatrix::identity(2);
    let r = cr(std::f64::consts::FRAC_1_SQRT_2);
    ComplexMatrix::from_blocks(&id2, &id2, &id2, &id2.scale(cr(-1.0))).scale(r)
}

/// Conjugate a 4x4 operator between representations: M -> S M S^dagger.
pub fn change_basis(m: &ComplexMatrix, from: GammaBasis, to: GammaBasis) -> ComplexMatrix {
    if from == to {
        return m.clone();
    }
    let s = basis_change_matrix();
    s.mul(m).mul(&s)
}

/// Map 4-spinor components between representations: v -> S v.
pub fn change_basis_vector(v: &ComplexVector, from: GammaBasis, to: GammaBasis) -> ComplexVector {
    if from == to {
        return v.clone();
    }
    basis_change_matrix().mul_vec(v)
}

/// Contraction gamma^mu p_mu = gamma^0 E - gamma^i p^i for on-shell momenta.
pub fn gamma_slash(e: f64, p: [f64; 3], basis: GammaBasis) -> ComplexMatrix {
    let mut m = gamma(0, basis).expect("fixed index").scale(cr(e));
    for i in 0..3 {
        m = m.sub(&gamma(i + 1, basis).expect("fixed index").scale(cr(p[i])));
    }
    m
}

/// Gamma^mu p_mu in the 8-component representation.
pub fn big_gamma_slash(e: f64, p: [f64; 3], basis: GammaBasis) -> ComplexMatrix {
    let mut m = big_gamma(0, basis).expect("fixed index").scale(cr(e));
    for i in 0..3 {
        m = m.sub(&big_gamma(i + 1, basis).expect("fixed index").scale(cr(p[i])));
    }
    m
}

mod numeric {
    //! Thin wrappers around nalgebra for the two dense solves the library
    //! needs: Hermitian eigenvalues and smallest singular pairs.

    use super::{ComplexMatrix, ComplexVector};
    use nalgebra::DMatrix;
    use num_complex::Complex64;

    fn to_na(m: &ComplexMatrix) -> DMatrix<Complex64> {
        DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)])
    }

    /// Eigenvalues of a Hermitian matrix, ascending.
    pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
        let eig = to_na(m).symmetric_eigen();
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        vals
    }

    /// Smallest singular value and the corresponding right-singular vector.
    pub fn smallest_singular_pair(m: &ComplexMatrix) -> (f64, ComplexVector) {
        let svd = to_na(m).svd(true, true);
        let v_t = svd.v_t.expect("right singular vectors requested");
        let (idx, sigma) = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.partial_cmp(b.1).expect("finite singular values"))
            .map(|(i, s)| (i, *s))
            .expect("nonempty spectrum");
        // Kernel vector = column idx of V = conjugated row idx of V^H.
        let entries: Vec<Complex64> = (0..m.cols()).map(|j| v_t[(idx, j)].conj()).collect();
        (sigma, ComplexVector::new(entries))
    }
}

pub use numeric::{hermitian_eigenvalues, smallest_singular_pair};

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-14;

    #[test]
    fn pauli_fixed_values() {
        let s3 = pauli(3).unwrap();
        assert_eq!(s3[(0, 0)], cr(1.0));
        assert_eq!(s3[(1, 1)], cr(-1.0));
        assert_eq!(s3[(0, 1)], cr(0.0));
        let s1 = pauli(1).unwrap();
        assert!(s1.mul(&s1).sub(&ComplexMatrix::identity(2)).max_abs() == 0.0);
    }

    #[test]
    fn pauli_commutator_oracle() {
        // Direct 2x2 multiplication: sigma1 sigma2 - sigma2 sigma1 = 2i sigma3.
        let s1 = pauli(1).unwrap();
        let s2 = pauli(2).unwrap();
        let s3 = pauli(3).unwrap();
        let comm = s1.commutator(&s2);
        assert!(comm.sub(&s3.scale(ci(2.0))).max_abs() < TOL);
    }

    #[test]
    fn pauli_index_out_of_range() {
        assert!(pauli(0).is_err());
        assert!(pauli(4).is_err());
    }

    #[test]
    fn gamma0_standard_is_diag() {
        let g0 = gamma(0, GammaBasis::Standard).unwrap();
        let expect = ComplexMatrix::from_rows(&[
            vec![cr(1.0), cr(0.0), cr(0.0), cr(0.0)],
            vec![cr(0.0), cr(1.0), cr(0.0), cr(0.0)],
            vec![cr(0.0), cr(0.0), cr(-1.0), cr(0.0)],
            vec![cr(0.0), cr(0.0), cr(0.0), cr(-1.0)],
        ]);
        assert_eq!(g0, expect);
    }

    #[test]
    fn gamma0_chiral_squares_to_identity() {
        let g0 = gamma(0, GammaBasis::Chiral).unwrap();
        assert!(g0.mul(&g0).sub(&ComplexMatrix::identity(4)).max_abs() < TOL);
    }

    #[test]
    fn gamma_index_out_of_range() {
        assert!(gamma(4, GammaBasis::Chiral).is_err());
        assert!(big_gamma(5, GammaBasis::Chiral).is_err());
    }

    #[test]
    fn gamma5_chiral_diagonal() {
        let g5 = gamma5(GammaBasis::Chiral);
        let expect = ComplexMatrix::from_rows(&[
            vec![cr(1.0), cr(0.0), cr(0.0), cr(0.0)],
            vec![cr(0.0), cr(1.0), cr(0.0), cr(0.0)],
            vec![cr(0.0), cr(0.0), cr(-1.0), cr(0.0)],
            vec![cr(0.0), cr(0.0), cr(0.0), cr(-1.0)],
        ]);
        assert!(g5.sub(&expect).max_abs() < TOL);
    }

    #[test]
    fn gamma5_squares_and_anticommutes() {
        for basis in [GammaBasis::Chiral, GammaBasis::Standard] {
            let g5 = gamma5(basis);
            assert!(g5.mul(&g5).sub(&ComplexMatrix::identity(4)).max_abs() < TOL);
            for mu in 0..4 {
                let g = gamma(mu, basis).unwrap();
                assert!(g5.anticommutator(&g).max_abs() < TOL);
            }
        }
    }

    #[test]
    fn clifford_relation_both_bases() {
        assert!(clifford_residual(GammaBasis::Chiral) < 1e-15);
        assert!(clifford_residual(GammaBasis::Standard) < 1e-15);
    }

    #[test]
    fn clifford_negative_control() {
        // Corrupting one gamma^1 entry by 1e-3 must surface in the residual.
        let mut gs = [
            gamma(0, GammaBasis::Chiral).unwrap(),
            gamma(1, GammaBasis::Chiral).unwrap(),
            gamma(2, GammaBasis::Chiral).unwrap(),
            gamma(3, GammaBasis::Chiral).unwrap(),
        ];
        gs[1][(0, 2)] += cr(1e-3);
        assert!(clifford_residual_for(&gs) >= 1e-3);
    }

    #[test]
    fn big_gamma_blocks_and_clifford() {
        let g1 = gamma(1, GammaBasis::Chiral).unwrap();
        let bg1 = big_gamma(1, GammaBasis::Chiral).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(bg1[(i, j + 4)], g1[(i, j)]);
            }
        }
        let bg0 = big_gamma(0, GammaBasis::Chiral).unwrap();
        assert!(bg0.mul(&bg0).sub(&ComplexMatrix::identity(8)).max_abs() < TOL);
        let bgs = [
            bg0,
            big_gamma(1, GammaBasis::Chiral).unwrap(),
            big_gamma(2, GammaBasis::Chiral).unwrap(),
            big_gamma(3, GammaBasis::Chiral).unwrap(),
        ];
        assert!(clifford_residual_for(&bgs) < 1e-15);
    }

    #[test]
    fn ell5_properties() {
        let l5 = ell5();
        assert!(l5.mul(&l5).sub(&ComplexMatrix::identity(8)).max_abs() < TOL);
        assert!(l5.trace().norm() < TOL);
        // diag(gamma5, -gamma5) commutes with every off-diagonal Gamma^mu:
        // the gamma5 sign flip across blocks cancels the anticommutation.
        for mu in 0..4 {
            let bg = big_gamma(mu, GammaBasis::Chiral).unwrap();
            assert!(l5.commutator(&bg).max_abs() < TOL);
        }
    }

    #[test]
    fn change_basis_maps_the_representations() {
        for mu in 0..4 {
            let chi = gamma(mu, GammaBasis::Chiral).unwrap();
            let std = gamma(mu, GammaBasis::Standard).unwrap();
            let mapped = change_basis(&chi, GammaBasis::Chiral, GammaBasis::Standard);
            assert!(mapped.sub(&std).max_abs() < TOL);
        }
        let g5s = change_basis(
            &gamma5(GammaBasis::Chiral),
            GammaBasis::Chiral,
            GammaBasis::Standard,
        );
        assert!(g5s.sub(&gamma5(GammaBasis::Standard)).max_abs() < TOL);
        // off-diag(1,1) shape
        assert_eq!(g5s[(0, 2)].re.round(), 1.0);

        let id = ComplexMatrix::identity(4);
        assert_eq!(change_basis(&id, GammaBasis::Chiral, GammaBasis::Chiral), id);
        let s = basis_change_matrix();
        assert!(s.unitarity_residual() < TOL);
    }

    #[test]
    fn determinant_of_permutations_is_exact() {
        let mut p = ComplexMatrix::zeros(4, 4);
        p[(0, 0)] = cr(1.0);
        p[(1, 2)] = cr(1.0);
        p[(2, 1)] = cr(1.0);
        p[(3, 3)] = cr(1.0);
        assert_eq!(p.det(), cr(-1.0));
        assert_eq!(ComplexMatrix::identity(8).det(), cr(1.0));
    }

    #[test]
    fn hermitian_eigenvalues_of_sigma3() {
        let vals = hermitian_eigenvalues(&pauli(3).unwrap());
        assert!((vals[0] + 1.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn smallest_singular_pair_finds_kernel() {
        // sigma3 - 1 has kernel spanned by e1.
        let m = pauli(3).unwrap().sub(&ComplexMatrix::identity(2));
        let (sigma, v) = smallest_singular_pair(&m);
        assert!(sigma < 1e-14);
        assert!(m.mul_vec(&v).norm() < 1e-14);
        assert!((v.norm() - 1.0).abs() < 1e-12);
    }
}
