//! Dirac u/v 4-spinors in both representations and normalizations, their
//! equation residuals, parity action and the rest-frame charge-eigenstate
//! condition.

use num_complex::Complex64;

use crate::algebra::{
    change_basis_vector, cr, gamma, gamma5, gamma_slash, sigma_dot, ComplexVector, GammaBasis,
};
use crate::error::{Error, Result};
use crate::kinematics::{lambda_l, lambda_r, FourMomentum};

/// Spin projection label sigma = +1/2 or -1/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SpinProjection {
    Plus,
    Minus,
}

impl SpinProjection {
    /// The rest-frame 2-spinor carrying this label.
    pub fn two_spinor(&self) -> ComplexVector {
        match self {
            SpinProjection::Plus => ComplexVector::new(vec![cr(1.0), cr(0.0)]),
            SpinProjection::Minus => ComplexVector::new(vec![cr(0.0), cr(1.0)]),
        }
    }
}

/// Normalization convention for u/v spinors.
///
/// `UnitNorm` is the printed closed form with ubar u = +1; `MassDim` scales
/// it by sqrt(m) so ubar u = +m and the rest norm is sqrt(m). `MassDim` is
/// the convention the Majorana connection uses, and the only one defined in
/// the massless limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum NormConvention {
    UnitNorm,
    MassDim,
}

/// Solution family label: u solves (gamma.p - m)u = 0, v solves (gamma.p + m)v = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum SpinorKind {
    U,
    V,
}

/// A labeled momentum-space Dirac 4-spinor.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpinor {
    pub components: ComplexVector,
    pub kind: SpinorKind,
    pub sigma: SpinProjection,
    pub momentum: FourMomentum,
    pub basis: GammaBasis,
    pub norm_convention: NormConvention,
}

fn norm_factor(p: &FourMomentum, convention: NormConvention) -> Result<f64> {
    match convention {
        // sqrt((E+m)/2m) divides by m and has no massless limit.
        NormConvention::UnitNorm => {
            if p.m == 0.0 {
                Err(Error::MasslessNormalization("UnitNorm"))
            } else {
                Ok(((p.e + p.m) / (2.0 * p.m)).sqrt())
            }
        }
        NormConvention::MassDim => Ok(((p.e + p.m) / 2.0).sqrt()),
    }
}

/// u spinor from the printed standard-representation closed form, mapped to
/// the requested representation. Valid for m = 0 only under `MassDim`.
pub fn u_spinor(
    p: &FourMomentum,
    sigma: SpinProjection,
    basis: GammaBasis,
    convention: NormConvention,
) -> Result<DiracSpinor> {
    let n = norm_factor(p, convention)?;
    let d = p.e + p.m;
    let comps = match sigma {
        SpinProjection::Plus => vec![cr(n), cr(0.0), cr(n * p.pz / d), cr(n / d) * p.p_r()],
        SpinProjection::Minus => vec![cr(0.0), cr(n), cr(n / d) * p.p_l(), cr(-n * p.pz / d)],
    };
    let std = ComplexVector::new(comps);
    Ok(DiracSpinor {
        components: change_basis_vector(&std, GammaBasis::Standard, basis),
        kind: SpinorKind::U,
        sigma,
        momentum: *p,
        basis,
        norm_convention: convention,
    })
}

/// v spinor from the printed standard-representation closed form
/// (equivalently gamma5 u in any representation).
pub fn v_spinor(
    p: &FourMomentum,
    sigma: SpinProjection,
    basis: GammaBasis,
    convention: NormConvention,
) -> Result<DiracSpinor> {
    let n = norm_factor(p, convention)?;
    let d = p.e + p.m;
    let comps = match sigma {
        SpinProjection::Plus => vec![cr(n * p.pz / d), cr(n / d) * p.p_r(), cr(n), cr(0.0)],
        SpinProjection::Minus => vec![cr(n / d) * p.p_l(), cr(-n * p.pz / d), cr(0.0), cr(n)],
    };
    let std = ComplexVector::new(comps);
    Ok(DiracSpinor {
        components: change_basis_vector(&std, GammaBasis::Standard, basis),
        kind: SpinorKind::V,
        sigma,
        momentum: *p,
        basis,
        norm_convention: convention,
    })
}

/// u spinor by the Wigner route: stack (Lambda_R phi(0), Lambda_L phi(0))
/// in the chiral representation with phi_R(0) = +phi_L(0), then map to the
/// requested representation. Requires m > 0.
pub fn u_spinor_boost(
    p: &FourMomentum,
    sigma: SpinProjection,
    basis: GammaBasis,
    convention: NormConvention,
) -> Result<DiracSpinor> {
    let rest_scale = match convention {
        NormConvention::UnitNorm => {
            if p.m == 0.0 {
                return Err(Error::MasslessNormalization("UnitNorm"));
            }
            (0.5f64).sqrt()
        }
        NormConvention::MassDim => {
            if p.m == 0.0 {
                return Err(Error::InfiniteRapidity);
            }
            (p.m / 2.0).sqrt()
        }
    };
    let phi0 = sigma.two_spinor().scale(cr(rest_scale));
    let top = lambda_r(p)?.mul_vec(&phi0);
    let bottom = lambda_l(p)?.mul_vec(&phi0);
    let chiral = ComplexVector::stack(&top, &bottom);
    Ok(DiracSpinor {
        components: change_basis_vector(&chiral, GammaBasis::Chiral, basis),
        kind: SpinorKind::U,
        sigma,
        momentum: *p,
        basis,
        norm_convention: convention,
    })
}

/// v spinor by the Wigner route: v = gamma5 u.
pub fn v_spinor_boost(
    p: &FourMomentum,
    sigma: SpinProjection,
    basis: GammaBasis,
    convention: NormConvention,
) -> Result<DiracSpinor> {
    let u = u_spinor_boost(p, sigma, basis, convention)?;
    Ok(DiracSpinor {
        components: gamma5(basis).mul_vec(&u.components),
        kind: SpinorKind::V,
        ..u
    })
}

/// Residual |(gamma.p -/+ m) psi| with the sign fixed by the spinor kind.
pub fn dirac_residual(s: &DiracSpinor) -> f64 {
    let p = &s.momentum;
    let slash = gamma_slash(p.e, p.spatial(), s.basis);
    let mass_sign = match s.kind {
        SpinorKind::U => -1.0,
        SpinorKind::V => 1.0,
    };
    let op = slash.add(&crate::algebra::ComplexMatrix::identity(4).scale(cr(mass_sign * p.m)));
    op.mul_vec(&s.components).norm()
}

/// Dirac inner product abar b = a^dagger gamma^0 b. Errors on basis mismatch.
pub fn dirac_bilinear(a: &DiracSpinor, b: &DiracSpinor) -> Result<Complex64> {
    if a.basis != b.basis {
        return Err(Error::BasisMismatch { left: a.basis, right: b.basis });
    }
    Ok(bar_product(&a.components, &b.components, a.basis))
}

/// abar b on raw components in a given representation.
pub fn bar_product(a: &ComplexVector, b: &ComplexVector, basis: GammaBasis) -> Complex64 {
    let g0b = gamma(0, basis).expect("fixed index").mul_vec(b);
    a.dot(&g0b)
}

/// Momentum-space parity image of raw components: (gamma^0 c, -p spatial).
pub fn parity_image(
    c: &ComplexVector,
    p: &FourMomentum,
    basis: GammaBasis,
) -> (ComplexVector, FourMomentum) {
    (gamma(0, basis).expect("fixed index").mul_vec(c), p.mirrored())
}

impl DiracSpinor {
    /// Parity-transformed spinor: components gamma^0 c at the mirrored
    /// momentum. Equals +u / -v freshly constructed there.
    pub fn parity(&self) -> DiracSpinor {
        let (components, momentum) = parity_image(&self.components, &self.momentum, self.basis);
        DiracSpinor { components, momentum, ..self.clone() }
    }

    /// Same spinor expressed in another representation.
    pub fn to_basis(&self, basis: GammaBasis) -> DiracSpinor {
        DiracSpinor {
            components: change_basis_vector(&self.components, self.basis, basis),
            basis,
            ..self.clone()
        }
    }

    /// Helicity-operator image h psi with h = blockdiag(sigma.n, sigma.n)
    /// for this spinor's momentum direction.
    pub fn helicity_image(&self) -> ComplexVector {
        let sn = sigma_dot(self.momentum.direction());
        let (top, bottom) = self.components.split();
        ComplexVector::stack(&sn.mul_vec(&top), &sn.mul_vec(&bottom))
    }
}

/// Sign of the rest-frame charge-eigenstate condition phi_R(0) = +/- phi_L(0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeParity {
    Plus,
    Minus,
}

/// Detects whether the rest 2-spinors are related by phi_R(0) = +/- phi_L(0)
/// within `tol`; `None` when they are not proportional with sign +/-1
/// (the state is then not a charge eigenstate).
pub fn charge_rest_check(
    phi_r0: &ComplexVector,
    phi_l0: &ComplexVector,
    tol: f64,
) -> Result<Option<ChargeParity>> {
    if phi_r0.norm() == 0.0 || phi_l0.norm() == 0.0 {
        return Err(Error::ZeroVector);
    }
    let scale = phi_r0.norm().max(phi_l0.norm());
    if phi_r0.sub(phi_l0).norm() <= tol * scale {
        Ok(Some(ChargeParity::Plus))
    } else if phi_r0.add(phi_l0).norm() <= tol * scale {
        Ok(Some(ChargeParity::Minus))
    } else {
        Ok(None)
    }
}
