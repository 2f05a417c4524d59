//! On-shell four-momenta, Wigner boosts for the (1/2,0) and (0,1/2) blocks,
//! helicity 2-spinors and the azimuthal phase matrix.

use num_complex::Complex64;

use crate::algebra::{ci, cr, pauli, sigma_dot, ComplexMatrix, ComplexVector};
use crate::error::{Error, Result};

/// On-shell four-momentum on the positive-energy branch E = +sqrt(p^2 + m^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    pub m: f64,
    pub e: f64,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
}

impl FourMomentum {
    /// Build an on-shell momentum. Rejects negative mass and the massless
    /// rest case (no shell contains it).
    pub fn new(m: f64, px: f64, py: f64, pz: f64) -> Result<Self> {
        if m < 0.0 {
            return Err(Error::NegativeMass(m));
        }
        let p2 = px * px + py * py + pz * pz;
        if m == 0.0 && p2 == 0.0 {
            return Err(Error::MasslessZeroMomentum);
        }
        let e = (p2 + m * m).sqrt();
        Ok(Self { m, e, px, py, pz })
    }

    pub fn rest(m: f64) -> Result<Self> {
        Self::new(m, 0.0, 0.0, 0.0)
    }

    pub fn p_abs(&self) -> f64 {
        (self.px * self.px + self.py * self.py + self.pz * self.pz).sqrt()
    }

    /// p+ = E + pz.
    pub fn p_plus(&self) -> f64 {
        self.e + self.pz
    }

    /// p- = E - pz.
    pub fn p_minus(&self) -> f64 {
        self.e - self.pz
    }

    /// p_r = px + i py.
    pub fn p_r(&self) -> Complex64 {
        Complex64::new(self.px, self.py)
    }

    /// p_l = px - i py.
    pub fn p_l(&self) -> Complex64 {
        Complex64::new(self.px, -self.py)
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.px, self.py, self.pz]
    }

    /// Same shell with the spatial part negated.
    pub fn mirrored(&self) -> Self {
        Self { m: self.m, e: self.e, px: -self.px, py: -self.py, pz: -self.pz }
    }

    pub fn is_at_rest(&self) -> bool {
        self.px == 0.0 && self.py == 0.0 && self.pz == 0.0
    }

    /// Unit direction; (0,0,1) at rest by convention.
    pub fn direction(&self) -> [f64; 3] {
        let p = self.p_abs();
        if p == 0.0 {
            [0.0, 0.0, 1.0]
        } else {
            [self.px / p, self.py / p, self.pz / p]
        }
    }

    /// Azimuthal angle of the spatial part; 0 on the z-axis by convention.
    pub fn azimuth(&self) -> f64 {
        if self.px == 0.0 && self.py == 0.0 {
            0.0
        } else {
            self.py.atan2(self.px)
        }
    }

    /// Polar angle of the spatial part; 0 at rest by convention.
    pub fn polar(&self) -> f64 {
        let p = self.p_abs();
        if p == 0.0 {
            0.0
        } else {
            (self.pz / p).clamp(-1.0, 1.0).acos()
        }
    }

    /// E^2 - p^2 - m^2, the on-shell closure defect.
    pub fn shell_residual(&self) -> f64 {
        self.e * self.e - self.p_abs().powi(2) - self.m * self.m
    }
}

/// Boost parameters cosh(phi) = gamma, sinh(phi) = beta gamma along n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParameters {
    pub gamma: f64,
    pub beta_gamma: f64,
    pub phi: f64,
    pub n: [f64; 3],
}

/// Extract the boost parameters carrying the rest frame to `p`.
pub fn boost_parameters(p: &FourMomentum) -> Result<BoostParameters> {
    if p.m == 0.0 {
        return Err(Error::InfiniteRapidity);
    }
    let gamma = p.e / p.m;
    let beta_gamma = p.p_abs() / p.m;
    Ok(BoostParameters {
        gamma,
        beta_gamma,
        phi: gamma.acosh(),
        n: p.direction(),
    })
}

/// Right-handed Wigner boost Lambda_R = exp(+(sigma/2) . n phi)
/// = ((E + m) + sigma . p) / sqrt(2 m (E + m)). Hermitian, positive definite.
pub fn lambda_r(p: &FourMomentum) -> Result<ComplexMatrix> {
    boost_block(p, 1.0)
}

/// Left-handed Wigner boost Lambda_L = exp(-(sigma/2) . n phi)
/// = ((E + m) - sigma . p) / sqrt(2 m (E + m)).
pub fn lambda_l(p: &FourMomentum) -> Result<ComplexMatrix> {
    boost_block(p, -1.0)
}

fn boost_block(p: &FourMomentum, sign: f64) -> Result<ComplexMatrix> {
    if p.m == 0.0 {
        return Err(Error::InfiniteRapidity);
    }
    let scale = 1.0 / (2.0 * p.m * (p.e + p.m)).sqrt();
    let sp = sigma_dot(p.spatial()).scale(cr(sign));
    Ok(ComplexMatrix::identity(2)
        .scale(cr(p.e + p.m))
        .add(&sp)
        .scale(cr(scale)))
}

/// Helicity label for 2-spinors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Helicity {
    Up,
    Down,
}

/// Helicity 2-spinor for the direction (theta, phi_az):
/// xi_up = N e^{i alpha} (cos(theta/2), sin(theta/2) e^{i phi}),
/// xi_down = N e^{i beta} (sin(theta/2), -cos(theta/2) e^{i phi}).
/// Eigenvector of sigma . n with eigenvalue +1 / -1. The overall phases are
/// free and exposed as parameters.
pub fn xi_helicity(
    theta: f64,
    phi_az: f64,
    h: Helicity,
    alpha: f64,
    beta: f64,
    n: f64,
) -> Result<ComplexVector> {
    if n <= 0.0 {
        return Err(Error::NonPositiveNorm(n));
    }
    let half = theta / 2.0;
    let e_phi = Complex64::from_polar(1.0, phi_az);
    let v = match h {
        Helicity::Up => {
            let phase = Complex64::from_polar(n, alpha);
            ComplexVector::new(vec![phase * half.cos(), phase * half.sin() * e_phi])
        }
        Helicity::Down => {
            let phase = Complex64::from_polar(n, beta);
            ComplexVector::new(vec![phase * half.sin(), -phase * half.cos() * e_phi])
        }
    };
    Ok(v)
}

/// The unitary connecting the two helicity spinors:
/// xi_down = e^{i(beta - alpha)} [[0, e^{-i phi}], [-e^{i phi}, 0]] xi_up.
pub fn xi_connecting_unitary(phi_az: f64, alpha: f64, beta: f64) -> ComplexMatrix {
    let phase = Complex64::from_polar(1.0, beta - alpha);
    ComplexMatrix::from_rows(&[
        vec![Complex64::ZERO, phase * Complex64::from_polar(1.0, -phi_az)],
        vec![-phase * Complex64::from_polar(1.0, phi_az), Complex64::ZERO],
    ])
}

/// Diagonal azimuthal phase matrix Xi = diag(e^{i phi}, e^{-i phi}).
/// Conjugation by Xi complex-conjugates the Wigner boosts of any momentum
/// with azimuth phi.
pub fn xi_matrix(phi_az: f64) -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![Complex64::from_polar(1.0, phi_az), Complex64::ZERO],
        vec![Complex64::ZERO, Complex64::from_polar(1.0, -phi_az)],
    ])
}

/// Wigner matrix Theta = -i sigma2 = [[0, -1], [1, 0]].
pub fn wigner_theta() -> ComplexMatrix {
    pauli(2).expect("fixed index").scale(ci(-1.0))
}
