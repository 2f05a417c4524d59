//! Self/anti-self charge-conjugate lambda/rho 4-spinors in the momentum
//! representation: the antilinear conjugation operator, closed-form and
//! Wigner-route constructions, the bi-orthonormal pairing table, parity and
//! family cross-maps, the connection to the Dirac set, and the gamma5 / Xi
//! transformation families.
//!
//! Everything here lives in the chiral representation with the mass-dimension
//! normalization (rest norm sqrt(m)); comparisons with standard-basis spinors
//! go through `algebra::change_basis_vector`.

use num_complex::Complex64;

use crate::algebra::{
    ci, cr, gamma, gamma5, ComplexMatrix, ComplexVector, GammaBasis,
};
use crate::dirac::{bar_product, parity_image, u_spinor, v_spinor, NormConvention, SpinProjection};
use crate::error::Result;
use crate::kinematics::{wigner_theta, xi_matrix, FourMomentum, lambda_l, lambda_r};
use crate::report::VerificationReport;

/// Which 2-spinor block carries the boosted content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Family {
    /// lambda = (+/- i Theta phi_L*, phi_L)
    Lambda,
    /// rho = (phi_R, -/+ i Theta phi_R*)
    Rho,
}

/// Conjugacy class under C: self-conjugate (C psi = +psi) or
/// anti-self-conjugate (C psi = -psi).
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ConjClass {
    S,
    A,
}

impl ConjClass {
    pub fn sign(&self) -> f64 {
        match self {
            ConjClass::S => 1.0,
            ConjClass::A => -1.0,
        }
    }
}

/// Chiral-helicity index carried over from the rest-frame table. These
/// spinors are not helicity eigenstates; the label is bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Eta {
    Up,
    Down,
}

impl Eta {
    fn two_spinor(&self) -> ComplexVector {
        match self {
            Eta::Up => ComplexVector::new(vec![cr(1.0), cr(0.0)]),
            Eta::Down => ComplexVector::new(vec![cr(0.0), cr(1.0)]),
        }
    }

    pub fn other(&self) -> Eta {
        match self {
            Eta::Up => Eta::Down,
            Eta::Down => Eta::Up,
        }
    }
}

/// A labeled lambda/rho 4-spinor (chiral representation, mass dimension).
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaSpinor {
    pub components: ComplexVector,
    pub family: Family,
    pub conj_class: ConjClass,
    pub eta: Eta,
    pub momentum: FourMomentum,
    pub basis: GammaBasis,
}

/// The antilinear charge conjugation C = e^{i theta} M K with matrix part
/// M = -gamma^2 (chiral representation) and K complex conjugation.
///
/// C^2 = 1 for every phase theta: the antilinear action conjugates the
/// phase away.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChargeConjugation {
    pub theta: f64,
}

impl Default for ChargeConjugation {
    fn default() -> Self {
        Self { theta: 0.0 }
    }
}

impl ChargeConjugation {
    pub fn new(theta: f64) -> Self {
        Self { theta }
    }

    /// The linear matrix part e^{i theta} (-gamma^2); antidiagonal
    /// (-i, i, i, -i) at theta = 0.
    pub fn matrix_part(&self) -> ComplexMatrix {
        gamma(2, GammaBasis::Chiral)
            .expect("fixed index")
            .scale(-Complex64::from_polar(1.0, self.theta))
    }

    /// True: C acts antilinearly (conjugates its argument).
    pub fn antilinear(&self) -> bool {
        true
    }

    /// Apply C to chiral-basis components.
    pub fn apply(&self, v: &ComplexVector) -> ComplexVector {
        self.matrix_part().mul_vec(&v.conj())
    }
}

/// C with phase theta applied to chiral components.
pub fn charge_conjugate(v: &ComplexVector, theta: f64) -> ComplexVector {
    ChargeConjugation::new(theta).apply(v)
}

/// phi_L(p) block for a given rest 2-spinor xi (unit scale):
/// ((E + m) - sigma.p) xi / (2 sqrt(E + m)).
///
/// This equals Lambda_L(p) sqrt(m/2) xi for m > 0 and extends continuously
/// to the massless shell.
fn phi_l_closed(p: &FourMomentum, xi: &ComplexVector) -> ComplexVector {
    let scale = 1.0 / (2.0 * (p.e + p.m).sqrt());
    let em = ComplexMatrix::identity(2).scale(cr(p.e + p.m));
    em.sub(&crate::algebra::sigma_dot(p.spatial()))
        .mul_vec(xi)
        .scale(cr(scale))
}

/// phi_R(p) block, as `phi_l_closed` with the opposite boost sign.
fn phi_r_closed(p: &FourMomentum, xi: &ComplexVector) -> ComplexVector {
    let scale = 1.0 / (2.0 * (p.e + p.m).sqrt());
    let em = ComplexMatrix::identity(2).scale(cr(p.e + p.m));
    em.add(&crate::algebra::sigma_dot(p.spatial()))
        .mul_vec(xi)
        .scale(cr(scale))
}

/// lambda-type 4-spinor from an arbitrary rest 2-spinor xi:
/// (sign i Theta phi_L*, phi_L) with sign +1 for S, -1 for A.
pub fn lambda_from_rest_two_spinor(
    p: &FourMomentum,
    class: ConjClass,
    xi: &ComplexVector,
) -> ComplexVector {
    let phi_l = phi_l_closed(p, xi);
    let top = wigner_theta()
        .mul_vec(&phi_l.conj())
        .scale(ci(class.sign()));
    ComplexVector::stack(&top, &phi_l)
}

/// rho-type 4-spinor from an arbitrary rest 2-spinor xi:
/// (phi_R, -sign i Theta phi_R*) with sign +1 for S, -1 for A.
pub fn rho_from_rest_two_spinor(
    p: &FourMomentum,
    class: ConjClass,
    xi: &ComplexVector,
) -> ComplexVector {
    let phi_r = phi_r_closed(p, xi);
    let bottom = wigner_theta()
        .mul_vec(&phi_r.conj())
        .scale(ci(-class.sign()));
    ComplexVector::stack(&phi_r, &bottom)
}

/// lambda^{S,A}_eta(p) in the printed closed form.
pub fn lambda_spinor(p: &FourMomentum, class: ConjClass, eta: Eta) -> MajoranaSpinor {
    let s = 1.0 / (2.0 * (p.e + p.m).sqrt());
    let (pm, pp) = (cr(p.p_minus() + p.m), cr(p.p_plus() + p.m));
    let (pl, pr) = (p.p_l(), p.p_r());
    let comps = match (class, eta) {
        (ConjClass::S, Eta::Up) => vec![ci(1.0) * pl, ci(1.0) * pm, pm, -pr],
        (ConjClass::S, Eta::Down) => vec![ci(-1.0) * pp, ci(-1.0) * pr, -pl, pp],
        (ConjClass::A, Eta::Up) => vec![ci(-1.0) * pl, ci(-1.0) * pm, pm, -pr],
        (ConjClass::A, Eta::Down) => vec![ci(1.0) * pp, ci(1.0) * pr, -pl, pp],
    };
    MajoranaSpinor {
        components: ComplexVector::new(comps).scale(cr(s)),
        family: Family::Lambda,
        conj_class: class,
        eta,
        momentum: *p,
        basis: GammaBasis::Chiral,
    }
}

/// rho^{S,A}_eta(p) in the printed closed form.
pub fn rho_spinor(p: &FourMomentum, class: ConjClass, eta: Eta) -> MajoranaSpinor {
    let s = 1.0 / (2.0 * (p.e + p.m).sqrt());
    let (pm, pp) = (cr(p.p_minus() + p.m), cr(p.p_plus() + p.m));
    let (pl, pr) = (p.p_l(), p.p_r());
    let comps = match (class, eta) {
        (ConjClass::S, Eta::Up) => vec![pp, pr, ci(1.0) * pl, ci(-1.0) * pp],
        (ConjClass::S, Eta::Down) => vec![pl, pm, ci(1.0) * pm, ci(-1.0) * pr],
        (ConjClass::A, Eta::Up) => vec![pp, pr, ci(-1.0) * pl, ci(1.0) * pp],
        (ConjClass::A, Eta::Down) => vec![pl, pm, ci(-1.0) * pm, ci(1.0) * pr],
    };
    MajoranaSpinor {
        components: ComplexVector::new(comps).scale(cr(s)),
        family: Family::Rho,
        conj_class: class,
        eta,
        momentum: *p,
        basis: GammaBasis::Chiral,
    }
}

/// Same spinor by the Wigner route: boost the rest 2-spinor with
/// Lambda_{L,R} and insert into the defining block form. Requires m > 0.
pub fn majorana_spinor_boost(
    p: &FourMomentum,
    family: Family,
    class: ConjClass,
    eta: Eta,
) -> Result<MajoranaSpinor> {
    let rest = eta.two_spinor().scale(cr((p.m / 2.0).sqrt()));
    let components = match family {
        Family::Lambda => {
            let phi_l = lambda_l(p)?.mul_vec(&rest);
            let top = wigner_theta().mul_vec(&phi_l.conj()).scale(ci(class.sign()));
            ComplexVector::stack(&top, &phi_l)
        }
        Family::Rho => {
            let phi_r = lambda_r(p)?.mul_vec(&rest);
            let bottom = wigner_theta().mul_vec(&phi_r.conj()).scale(ci(-class.sign()));
            ComplexVector::stack(&phi_r, &bottom)
        }
    };
    Ok(MajoranaSpinor { components, family, conj_class: class, eta, momentum: *p, basis: GammaBasis::Chiral })
}

/// All eight spinors at `p` in the canonical order
/// [λS↑, λS↓, λA↑, λA↓, ρS↑, ρS↓, ρA↑, ρA↓].
pub fn all_eight(p: &FourMomentum) -> Vec<MajoranaSpinor> {
    let mut out = Vec::with_capacity(8);
    for family in [Family::Lambda, Family::Rho] {
        for class in [ConjClass::S, ConjClass::A] {
            for eta in [Eta::Up, Eta::Down] {
                out.push(match family {
                    Family::Lambda => lambda_spinor(p, class, eta),
                    Family::Rho => rho_spinor(p, class, eta),
                });
            }
        }
    }
    out
}

/// |C psi -/+ psi| with the sign fixed by the conjugacy class.
pub fn selfconj_residual(s: &MajoranaSpinor) -> f64 {
    selfconj_residual_with_theta(s, 0.0)
}

/// Same, with an explicit C phase.
pub fn selfconj_residual_with_theta(s: &MajoranaSpinor, theta: f64) -> f64 {
    let image = charge_conjugate(&s.components, theta);
    image.sub(&s.components.scale(cr(s.conj_class.sign()))).norm()
}

/// The full 8x8 table of Dirac-conjugate pairings psibar_i psi_j over the
/// canonical order of `all_eight`.
pub fn biorthonormal_table(p: &FourMomentum) -> Vec<Vec<Complex64>> {
    let spinors = all_eight(p);
    spinors
        .iter()
        .map(|a| {
            spinors
                .iter()
                .map(|b| bar_product(&a.components, &b.components, GammaBasis::Chiral))
                .collect()
        })
        .collect()
}

/// The exact expected pairing table. The within-family entries are the
/// printed +/- i m pattern; the cross-family entries (= m) follow from the
/// rho <-> lambda relations (e.g. lambdabar^S_up rho^A_up =
/// i lambdabar^S_up lambda^S_down = m). Everything else is zero.
pub fn biorthonormal_expected(m: f64) -> Vec<Vec<Complex64>> {
    let mut t = vec![vec![Complex64::ZERO; 8]; 8];
    let im = ci(m);
    // lambda block: [λS↑, λS↓, λA↑, λA↓]
    t[0][1] = -im;
    t[1][0] = im;
    t[2][3] = im;
    t[3][2] = -im;
    // rho block: [ρS↑, ρS↓, ρA↑, ρA↓]
    t[4][5] = im;
    t[5][4] = -im;
    t[6][7] = -im;
    t[7][6] = im;
    // cross-family mass pairings
    for (i, j) in [(0, 6), (1, 7), (2, 4), (3, 5)] {
        t[i][j] = cr(m);
        t[j][i] = cr(m);
    }
    t
}

/// Max deviation of the realized table from the expected one.
pub fn biorthonormal_max_error(p: &FourMomentum) -> f64 {
    let got = biorthonormal_table(p);
    let want = biorthonormal_expected(p.m);
    let mut worst: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            worst = worst.max((got[i][j] - want[i][j]).norm());
        }
    }
    worst
}

fn spinor_scale(p: &FourMomentum) -> f64 {
    (p.e.max(p.m)).sqrt()
}

/// Find which eta label of `candidates` best matches `target`; returns
/// (eta, residual norm).
fn best_eta_match(target: &ComplexVector, candidates: [(&MajoranaSpinor, Eta); 2]) -> (Eta, f64) {
    let mut best = (candidates[0].1, f64::INFINITY);
    for (s, eta) in candidates {
        let r = target.sub(&s.components).norm();
        if r < best.1 {
            best = (eta, r);
        }
    }
    best
}

/// Verifies the parity cross-maps P lambda^{S,A} = rho^{A,S} and
/// P rho^{S,A} = lambda^{A,S}, searching over eta labels and reporting the
/// matched pairing. Also cross-checks that the Dirac u stays u under the
/// same action, and that lambda itself is not a parity eigenstate.
pub fn parity_map_check(p: &FourMomentum, tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new("parity-maps");
    let scale = spinor_scale(p);
    let mirror = p.mirrored();
    for class in [ConjClass::S, ConjClass::A] {
        let target_class = match class {
            ConjClass::S => ConjClass::A,
            ConjClass::A => ConjClass::S,
        };
        for eta in [Eta::Up, Eta::Down] {
            // (P lambda)(mirror) = gamma0 lambda(p) must equal rho at mirror.
            let lam = lambda_spinor(p, class, eta);
            let (img, at) = parity_image(&lam.components, p, GammaBasis::Chiral);
            let cands = (
                rho_spinor(&at, target_class, Eta::Up),
                rho_spinor(&at, target_class, Eta::Down),
            );
            let (matched, res) =
                best_eta_match(&img, [(&cands.0, Eta::Up), (&cands.1, Eta::Down)]);
            rep.push(
                format!("P.lambda{:?}{:?}->rho{:?}{:?}", class, eta, target_class, matched),
                "P lambda^{S,A} = rho^{A,S}",
                res / scale,
                tol,
            );

            let rho = rho_spinor(p, class, eta);
            let (img, at) = parity_image(&rho.components, p, GammaBasis::Chiral);
            let cands = (
                lambda_spinor(&at, target_class, Eta::Up),
                lambda_spinor(&at, target_class, Eta::Down),
            );
            let (matched, res) =
                best_eta_match(&img, [(&cands.0, Eta::Up), (&cands.1, Eta::Down)]);
            rep.push(
                format!("P.rho{:?}{:?}->lambda{:?}{:?}", class, eta, target_class, matched),
                "P rho^{S,A} = lambda^{A,S}",
                res / scale,
                tol,
            );
        }
    }

    // Dirac cross-check: u maps to +u under the same parity action.
    if p.m > 0.0 {
        let u = u_spinor(p, SpinProjection::Plus, GammaBasis::Chiral, NormConvention::MassDim)
            .expect("massive");
        let pu = u.parity();
        let u_mirror =
            u_spinor(&mirror, SpinProjection::Plus, GammaBasis::Chiral, NormConvention::MassDim)
                .expect("massive");
        rep.push(
            "P.u->+u",
            "P u_sigma = +u_sigma",
            pu.components.sub(&u_mirror.components).norm() / scale,
            tol,
        );
    }

    // lambda/rho are NOT parity eigenstates off the rest frame.
    if !p.is_at_rest() {
        let lam = lambda_spinor(p, ConjClass::S, Eta::Up);
        let (img, _) = parity_image(&lam.components, p, GammaBasis::Chiral);
        rep.push_floor(
            "lambda-not-parity-eigenstate",
            "min_c |P lambda - c lambda| / |lambda| stays large",
            lam.components.eigen_fit_ratio(&img),
            0.1,
        );
    }
    rep
}

/// Verifies the four printed +/- i identifications between the rho and
/// lambda sets componentwise.
pub fn rho_lambda_relation_check(p: &FourMomentum, tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new("rho-lambda");
    let scale = spinor_scale(p);
    let rel: [(ConjClass, Eta, ConjClass, Eta, Complex64, &str); 4] = [
        (ConjClass::S, Eta::Up, ConjClass::A, Eta::Down, ci(-1.0), "rho^S_up = -i lambda^A_down"),
        (ConjClass::S, Eta::Down, ConjClass::A, Eta::Up, ci(1.0), "rho^S_down = +i lambda^A_up"),
        (ConjClass::A, Eta::Up, ConjClass::S, Eta::Down, ci(1.0), "rho^A_up = +i lambda^S_down"),
        (ConjClass::A, Eta::Down, ConjClass::S, Eta::Up, ci(-1.0), "rho^A_down = -i lambda^S_up"),
    ];
    for (rc, re, lc, le, coef, identity) in rel {
        let rho = rho_spinor(p, rc, re);
        let lam = lambda_spinor(p, lc, le);
        let res = rho.components.sub(&lam.components.scale(coef)).norm();
        rep.push(format!("rho{:?}{:?}", rc, re), identity, res / scale, tol);
    }
    rep
}

/// The printed 1/2-coefficient matrix of the Dirac -> lambda connection.
pub fn connection_matrix() -> ComplexMatrix {
    ComplexMatrix::from_rows(&[
        vec![cr(1.0), ci(1.0), cr(-1.0), ci(1.0)],
        vec![ci(-1.0), cr(1.0), ci(-1.0), cr(-1.0)],
        vec![cr(1.0), ci(-1.0), cr(-1.0), ci(-1.0)],
        vec![ci(1.0), cr(1.0), ci(1.0), cr(-1.0)],
    ])
    .scale(cr(0.5))
}

/// Checks that the 1/2-coefficient matrix carries (u_+, u_-, v_+, v_-)
/// (chiral, mass dimension, v = gamma5 u) onto (λS↑, λS↓, λA↑, λA↓), and
/// that the matrix is unitary.
pub fn dirac_to_majorana(p: &FourMomentum, tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new("connect");
    let scale = spinor_scale(p);
    let k = connection_matrix();
    rep.push("unitary", "K K^dagger = 1", k.unitarity_residual(), tol * 1e-2);

    let dirac: Vec<ComplexVector> = vec![
        u_spinor(p, SpinProjection::Plus, GammaBasis::Chiral, NormConvention::MassDim)
            .expect("massive")
            .components,
        u_spinor(p, SpinProjection::Minus, GammaBasis::Chiral, NormConvention::MassDim)
            .expect("massive")
            .components,
        v_spinor(p, SpinProjection::Plus, GammaBasis::Chiral, NormConvention::MassDim)
            .expect("massive")
            .components,
        v_spinor(p, SpinProjection::Minus, GammaBasis::Chiral, NormConvention::MassDim)
            .expect("massive")
            .components,
    ];
    let targets = [
        lambda_spinor(p, ConjClass::S, Eta::Up),
        lambda_spinor(p, ConjClass::S, Eta::Down),
        lambda_spinor(p, ConjClass::A, Eta::Up),
        lambda_spinor(p, ConjClass::A, Eta::Down),
    ];
    for (row, target) in targets.iter().enumerate() {
        let mut acc = ComplexVector::zeros(4);
        for (col, d) in dirac.iter().enumerate() {
            acc = acc.add(&d.scale(k[(row, col)]));
        }
        let res = acc.sub(&target.components).norm();
        rep.push(
            format!("row-{}", row),
            "(lambda rows) = K (u_+, u_-, v_+, v_-)",
            res / scale,
            tol,
        );
    }
    rep
}

/// gamma5 phase rotation: lambda-family spinors transform with
/// (cos a - i gamma5 sin a), rho-family with (cos a + i gamma5 sin a).
/// The conjugacy class is preserved.
pub fn gauge_transform(s: &MajoranaSpinor, alpha: f64) -> MajoranaSpinor {
    let sign = match s.family {
        Family::Lambda => -1.0,
        Family::Rho => 1.0,
    };
    let op = ComplexMatrix::identity(4)
        .scale(cr(alpha.cos()))
        .add(&gamma5(s.basis).scale(ci(sign * alpha.sin())));
    MajoranaSpinor { components: op.mul_vec(&s.components), ..s.clone() }
}

/// The four Xi-built block transformations of a lambda-type spinor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XiKind {
    I,
    II,
    III,
    IV,
}

impl XiKind {
    pub const ALL: [XiKind; 4] = [XiKind::I, XiKind::II, XiKind::III, XiKind::IV];

    /// The 4x4 block matrix built from Xi(phi).
    pub fn block_matrix(&self, phi_az: f64) -> ComplexMatrix {
        let xi = xi_matrix(phi_az);
        let z = ComplexMatrix::zeros(2, 2);
        match self {
            XiKind::I => ComplexMatrix::from_blocks(&xi, &z, &z, &xi),
            XiKind::II => {
                ComplexMatrix::from_blocks(&xi.scale(ci(1.0)), &z, &z, &xi.scale(ci(-1.0)))
            }
            XiKind::III => {
                ComplexMatrix::from_blocks(&z, &xi.scale(ci(1.0)), &xi.scale(ci(1.0)), &z)
            }
            XiKind::IV => ComplexMatrix::from_blocks(&z, &xi, &xi.scale(cr(-1.0)), &z),
        }
    }
}

/// Applies the Xi block transformation for `which` to the spinor, using the
/// azimuth of its momentum (0 on the z-axis). The result stays in the
/// self-conjugate class regardless of the input gauge.
pub fn xi_transform(s: &MajoranaSpinor, which: XiKind) -> MajoranaSpinor {
    let m = which.block_matrix(s.momentum.azimuth());
    MajoranaSpinor {
        components: m.mul_vec(&s.components),
        conj_class: ConjClass::S,
        ..s.clone()
    }
}

/// Azimuth-adapted lambda spinor: the canonical spinor rotated by the
/// gamma5 gauge angle -/+ phi_az/2 (up/down), which makes the rest 2-spinor
/// satisfy Xi xi = xi*. The four printed Xi identifications hold exactly in
/// this gauge at every momentum (and reduce to the canonical forms on-axis,
/// where the gauge angle vanishes).
pub fn lambda_spinor_adapted(p: &FourMomentum, class: ConjClass, eta: Eta) -> MajoranaSpinor {
    let angle = match eta {
        Eta::Up => -p.azimuth() / 2.0,
        Eta::Down => p.azimuth() / 2.0,
    };
    gauge_transform(&lambda_spinor(p, class, eta), angle)
}

/// Verifies all four Xi-transform identifications
/// (I: lambda^A*, II: -i lambda^S*, III: i gamma0 lambda^A*, IV: gamma0 lambda^S*)
/// on the azimuth-adapted spinors, plus conjugacy-class preservation.
pub fn xi_transform_check(p: &FourMomentum, eta: Eta, tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new("xi");
    let scale = spinor_scale(p);
    let g0 = gamma(0, GammaBasis::Chiral).expect("fixed index");
    let source = lambda_spinor_adapted(p, ConjClass::S, eta);
    let conj_s = lambda_spinor_adapted(p, ConjClass::S, eta).components.conj();
    let conj_a = lambda_spinor_adapted(p, ConjClass::A, eta).components.conj();

    let targets: [(XiKind, ComplexVector, &str); 4] = [
        (XiKind::I, conj_a.clone(), "diag(Xi,Xi) lambda_S = lambda_A*"),
        (XiKind::II, conj_s.scale(ci(-1.0)), "diag(iXi,-iXi) lambda_S = -i lambda_S*"),
        (
            XiKind::III,
            g0.mul_vec(&conj_a).scale(ci(1.0)),
            "offdiag(iXi,iXi) lambda_S = i gamma0 lambda_A*",
        ),
        (
            XiKind::IV,
            g0.mul_vec(&lambda_spinor_adapted(p, ConjClass::S, eta).components.conj()),
            "offdiag(Xi,-Xi) lambda_S = gamma0 lambda_S*",
        ),
    ];
    for (kind, target, identity) in targets {
        let out = xi_transform(&source, kind);
        rep.push(
            format!("xi-{:?}", kind),
            identity,
            out.components.sub(&target).norm() / scale,
            tol,
        );
        rep.push(
            format!("xi-{:?}-selfconj", kind),
            "Xi transforms stay self-conjugate",
            selfconj_residual(&out) / scale,
            tol,
        );
    }
    rep
}

/// Norm ratios |lambda(p; m)| / sqrt(E) for a fixed spatial momentum and a
/// decreasing mass sequence, with the rest 2-spinor taken as the helicity
/// eigenspinor of sigma . p_hat. For the up label the sequence vanishes
/// linearly in m; for the down label it approaches sqrt(2).
pub fn massless_norm_ratios(
    class: ConjClass,
    eta: Eta,
    p_vec: [f64; 3],
    masses: &[f64],
) -> Result<Vec<f64>> {
    use crate::kinematics::{xi_helicity, Helicity};
    let pmag = (p_vec[0] * p_vec[0] + p_vec[1] * p_vec[1] + p_vec[2] * p_vec[2]).sqrt();
    let mut probe = FourMomentum::new(1.0, p_vec[0], p_vec[1], p_vec[2])?;
    let (theta, phi) = (probe.polar(), probe.azimuth());
    let h = match eta {
        Eta::Up => Helicity::Up,
        Eta::Down => Helicity::Down,
    };
    let xi = xi_helicity(theta, phi, h, 0.0, 0.0, 1.0)?;
    let mut out = Vec::with_capacity(masses.len());
    for &m in masses {
        probe = FourMomentum::new(m, p_vec[0], p_vec[1], p_vec[2])?;
        let lam = lambda_from_rest_two_spinor(&probe, class, &xi);
        out.push(lam.norm() / probe.e.sqrt());
    }
    let _ = pmag;
    Ok(out)
}

impl MajoranaSpinor {
    /// Components expressed in another representation (labels unchanged).
    pub fn to_basis(&self, basis: GammaBasis) -> MajoranaSpinor {
        MajoranaSpinor {
            components: crate::algebra::change_basis_vector(&self.components, self.basis, basis),
            basis,
            ..self.clone()
        }
    }
}
