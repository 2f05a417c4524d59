//! The named verification suites driven by the CLI and the acceptance
//! tests. Every suite is a pure function of a [`SuiteConfig`]; identical
//! configs produce identical reports.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    big_gamma, change_basis, ci, clifford_residual, clifford_residual_for, cr, ell5, gamma,
    gamma5, ComplexMatrix, ComplexVector, GammaBasis,
};
use crate::dirac::{
    charge_rest_check, dirac_bilinear, dirac_residual, u_spinor, u_spinor_boost, v_spinor,
    v_spinor_boost, ChargeParity, NormConvention, SpinProjection,
};
use crate::equations::{
    barut_dispersion_residual, barut_masses, coupled_residual, diagonalize_chiral_helicity,
    diagonalize_helicity, eight_component_residual, generalized_mass_residual,
    generalized_mass_shell, markov_pair_residual, noncommutative_chain_check,
    noncommutative_spectrum, noncommutative_spectrum_closed, not_chiral_eigenstate_check,
    EightSpinor, FrequencyConvention, ParityClass, ThetaVector,
};
use crate::kinematics::{
    lambda_l, lambda_r, xi_connecting_unitary, xi_helicity, xi_matrix, FourMomentum, Helicity,
};
use crate::majorana::{
    all_eight, biorthonormal_max_error, charge_conjugate, dirac_to_majorana, gauge_transform,
    lambda_from_rest_two_spinor, massless_norm_ratios, parity_map_check,
    rho_lambda_relation_check, selfconj_residual, xi_transform_check, ConjClass, Eta,
};
use crate::report::VerificationReport;

/// Deliberate corruption hooks for exercising the failure paths end to end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeControl {
    /// Zero one component of a constructed spinor (dirac-residuals suite).
    CorruptSpinor,
    /// Flip the mass sign in the coupled system (coupled suite).
    WrongSignMass,
}

/// Shared configuration for all suites.
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Base tolerance; each check scales it by its own factor (the defaults
    /// correspond to 1e-12).
    pub tolerance: f64,
    pub samples: usize,
    pub seed: u64,
    pub basis: GammaBasis,
    pub frequency: FrequencyConvention,
    pub negative_control: Option<NegativeControl>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            samples: 100,
            seed: 42,
            basis: GammaBasis::Chiral,
            frequency: FrequencyConvention::Positive,
            negative_control: None,
        }
    }
}

impl SuiteConfig {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Threshold for a check whose stated default is `factor * 1e-12`.
    fn thr(&self, factor: f64) -> f64 {
        self.tolerance * factor
    }
}

/// Seeded random massive momentum: m uniform in [0.1, 10], |p| uniform in
/// [0, 10 m], direction uniform on the sphere.
pub fn random_momentum(rng: &mut ChaCha8Rng) -> FourMomentum {
    let m = rng.random_range(0.1..10.0);
    let pmag = rng.random_range(0.0..10.0 * m);
    let z: f64 = rng.random_range(-1.0..1.0);
    let az: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    FourMomentum::new(m, pmag * r * az.cos(), pmag * r * az.sin(), pmag * z)
        .expect("massive on-shell momentum")
}

/// All suite names in reporting order.
pub const SUITE_NAMES: [&str; 19] = [
    "clifford",
    "dirac-norms",
    "dirac-residuals",
    "parity",
    "selfconj",
    "biorthonormal",
    "parity-maps",
    "rho-lambda",
    "connect",
    "gauge",
    "xi",
    "massless-limit",
    "coupled",
    "eight-component",
    "markov",
    "operator-zoo",
    "gd1",
    "barut",
    "noncommutative",
];

/// Run one suite by name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<VerificationReport> {
    let rep = match name {
        "clifford" => clifford_suite(cfg),
        "dirac-norms" => dirac_norms_suite(cfg),
        "dirac-residuals" => dirac_residuals_suite(cfg),
        "parity" => parity_suite(cfg),
        "selfconj" => selfconj_suite(cfg),
        "biorthonormal" => biorthonormal_suite(cfg),
        "parity-maps" => parity_maps_suite(cfg),
        "rho-lambda" => rho_lambda_suite(cfg),
        "connect" => connect_suite(cfg),
        "gauge" => gauge_suite(cfg),
        "xi" => xi_suite(cfg),
        "massless-limit" => massless_limit_suite(cfg),
        "coupled" => coupled_suite(cfg),
        "eight-component" => eight_component_suite(cfg),
        "markov" => markov_suite(cfg),
        "operator-zoo" => operator_zoo_suite(cfg),
        "gd1" => gd1_suite(cfg),
        "barut" => barut_suite(cfg),
        "noncommutative" => noncommutative_suite(cfg),
        _ => return None,
    };
    Some(rep)
}

/// Run every suite in order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<VerificationReport> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, cfg).expect("known name"))
        .collect()
}

fn clifford_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("clifford");
    let thr = cfg.thr(1e-2);
    rep.push("chiral", "{gamma^mu, gamma^nu} = 2 g^{mu nu} (chiral)", clifford_residual(GammaBasis::Chiral), thr);
    rep.push(
        "standard",
        "{gamma^mu, gamma^nu} = 2 g^{mu nu} (standard)",
        clifford_residual(GammaBasis::Standard),
        thr,
    );
    for basis in [GammaBasis::Chiral, GammaBasis::Standard] {
        let g5 = gamma5(basis);
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            worst = worst.max(g5.anticommutator(&gamma(mu, basis).expect("fixed")).max_abs());
        }
        rep.push(
            format!("gamma5-anticommute-{}", basis),
            "{gamma5, gamma^mu} = 0",
            worst,
            thr,
        );
    }
    let bgs = [
        big_gamma(0, GammaBasis::Chiral).expect("fixed"),
        big_gamma(1, GammaBasis::Chiral).expect("fixed"),
        big_gamma(2, GammaBasis::Chiral).expect("fixed"),
        big_gamma(3, GammaBasis::Chiral).expect("fixed"),
    ];
    rep.push("eight-dim", "{Gamma^mu, Gamma^nu} = 2 g^{mu nu} 1_8", clifford_residual_for(&bgs), thr);

    let l5 = ell5();
    let mut worst: f64 = 0.0;
    for bg in &bgs {
        worst = worst.max(l5.commutator(bg).max_abs());
    }
    rep.push("ell5-commutes", "[diag(gamma5, -gamma5), Gamma^mu] = 0", worst, thr);
    rep.push(
        "ell5-involution",
        "diag(gamma5,-gamma5)^2 = 1, trace = 0",
        l5.mul(&l5).sub(&ComplexMatrix::identity(8)).max_abs() + l5.trace().norm(),
        thr,
    );

    // change_basis is an algebra homomorphism on random 4x4 matrices.
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples.min(25) {
        let a = random_matrix(&mut rng);
        let b = random_matrix(&mut rng);
        let lhs = change_basis(&a.mul(&b), GammaBasis::Chiral, GammaBasis::Standard);
        let rhs = change_basis(&a, GammaBasis::Chiral, GammaBasis::Standard)
            .mul(&change_basis(&b, GammaBasis::Chiral, GammaBasis::Standard));
        worst = worst.max(lhs.sub(&rhs).max_abs() / a.max_abs().max(1.0) / b.max_abs().max(1.0));
    }
    rep.push("basis-homomorphism", "S(AB)S* = (SAS*)(SBS*)", worst, cfg.thr(1e-2));
    rep
}

fn random_matrix(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            m[(i, j)] = num_complex::Complex64::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            );
        }
    }
    m
}

fn dirac_norms_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("dirac-norms");
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let p = random_momentum(&mut rng);
        let us = [
            u_spinor(&p, SpinProjection::Plus, cfg.basis, NormConvention::UnitNorm).expect("massive"),
            u_spinor(&p, SpinProjection::Minus, cfg.basis, NormConvention::UnitNorm).expect("massive"),
        ];
        let vs = [
            v_spinor(&p, SpinProjection::Plus, cfg.basis, NormConvention::UnitNorm).expect("massive"),
            v_spinor(&p, SpinProjection::Minus, cfg.basis, NormConvention::UnitNorm).expect("massive"),
        ];
        for i in 0..2 {
            for j in 0..2 {
                let delta = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dirac_bilinear(&us[i], &us[j]).expect("same basis") - cr(delta)).norm());
                worst = worst.max((dirac_bilinear(&vs[i], &vs[j]).expect("same basis") + cr(delta)).norm());
                worst = worst.max(dirac_bilinear(&us[i], &vs[j]).expect("same basis").norm());
            }
        }
    }
    rep.push("table", "ubar u = +delta, vbar v = -delta, ubar v = 0", worst, cfg.thr(1.0));

    // Rest-frame charge-eigenstate condition.
    let e1 = ComplexVector::new(vec![cr(1.0), cr(0.0)]);
    let plus = charge_rest_check(&e1, &e1, cfg.thr(1.0)).expect("nonzero");
    let minus = charge_rest_check(&e1, &e1.scale(cr(-1.0)), cfg.thr(1.0)).expect("nonzero");
    let e2 = ComplexVector::new(vec![cr(0.0), cr(1.0)]);
    let none = charge_rest_check(&e1, &e2, cfg.thr(1.0)).expect("nonzero");
    let ok = plus == Some(ChargeParity::Plus) && minus == Some(ChargeParity::Minus) && none.is_none();
    rep.push(
        "charge-eigenstate",
        "phi_R(0) = +/- phi_L(0) classified",
        if ok { 0.0 } else { 1.0 },
        cfg.thr(1.0),
    );
    rep
}

fn dirac_residuals_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("dirac-residuals");
    let mut rng = cfg.rng();
    let mut worst_eq: f64 = 0.0;
    let mut worst_routes: f64 = 0.0;
    let corrupt = cfg.negative_control == Some(NegativeControl::CorruptSpinor);
    for _ in 0..cfg.samples {
        let p = random_momentum(&mut rng);
        let scale = p.e + p.m;
        for sigma in [SpinProjection::Plus, SpinProjection::Minus] {
            for conv in [NormConvention::UnitNorm, NormConvention::MassDim] {
                let mut u = u_spinor(&p, sigma, cfg.basis, conv).expect("massive");
                let ub = u_spinor_boost(&p, sigma, cfg.basis, conv).expect("massive");
                let v = v_spinor(&p, sigma, cfg.basis, conv).expect("massive");
                let vb = v_spinor_boost(&p, sigma, cfg.basis, conv).expect("massive");
                if corrupt {
                    u.components[0] = num_complex::Complex64::ZERO;
                }
                worst_eq = worst_eq.max(dirac_residual(&u) / scale);
                worst_eq = worst_eq.max(dirac_residual(&v) / scale);
                worst_routes = worst_routes.max(u.components.sub(&ub.components).max_abs());
                worst_routes = worst_routes.max(v.components.sub(&vb.components).max_abs());
            }
        }
    }
    rep.push(
        "equation",
        "|(gamma.p -/+ m) {u,v}| < tol (E + m)",
        worst_eq,
        cfg.thr(1.0),
    );
    rep.push(
        "routes",
        "closed form = Wigner route componentwise",
        worst_routes,
        cfg.thr(1.0),
    );
    rep
}

fn parity_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("parity");
    let mut rng = cfg.rng();
    let mut worst_u: f64 = 0.0;
    let mut worst_v: f64 = 0.0;
    for _ in 0..cfg.samples {
        let p = random_momentum(&mut rng);
        let scale = p.m.sqrt().max(1.0);
        for sigma in [SpinProjection::Plus, SpinProjection::Minus] {
            let u = u_spinor(&p, sigma, cfg.basis, NormConvention::MassDim).expect("massive");
            let pu = u.parity();
            let u_ref = u_spinor(&pu.momentum, sigma, cfg.basis, NormConvention::MassDim).expect("massive");
            worst_u = worst_u.max(pu.components.sub(&u_ref.components).max_abs() / scale);

            let v = v_spinor(&p, sigma, cfg.basis, NormConvention::MassDim).expect("massive");
            let pv = v.parity();
            let v_ref = v_spinor(&pv.momentum, sigma, cfg.basis, NormConvention::MassDim).expect("massive");
            worst_v = worst_v.max(pv.components.add(&v_ref.components).max_abs() / scale);
        }
    }
    rep.push("u", "P u_sigma = +u_sigma", worst_u, cfg.thr(1.0));
    rep.push("v", "P v_sigma = -v_sigma", worst_v, cfg.thr(1.0));

    // Rest spinors are gamma0 eigenvectors with eigenvalues +/-1.
    let rest = FourMomentum::rest(1.0).expect("massive");
    let g0 = gamma(0, cfg.basis).expect("fixed");
    let u = u_spinor(&rest, SpinProjection::Plus, cfg.basis, NormConvention::UnitNorm).expect("massive");
    let v = v_spinor(&rest, SpinProjection::Plus, cfg.basis, NormConvention::UnitNorm).expect("massive");
    let res = g0.mul_vec(&u.components).sub(&u.components).norm()
        + g0.mul_vec(&v.components).add(&v.components).norm();
    rep.push("rest-eigen", "gamma0 eigenvalues +/-1 at rest", res, cfg.thr(1.0));
    rep
}

fn selfconj_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("selfconj");
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let p = random_momentum(&mut rng);
        for s in all_eight(&p) {
            worst = worst.max(selfconj_residual(&s) / p.e.sqrt());
        }
    }
    rep.push(
        "classes",
        "C lambda^{S,A} = +/- lambda^{S,A}, C rho^{S,A} = +/- rho^{S,A}",
        worst,
        cfg.thr(1.0),
    );

    // C^2 = 1 with theta = 0 (and for any phase, by antilinearity).
    let v = ComplexVector::new(vec![
        num_complex::Complex64::new(0.4, -0.9),
        num_complex::Complex64::new(1.2, 0.3),
        num_complex::Complex64::new(-0.7, 0.1),
        num_complex::Complex64::new(0.2, 0.8),
    ]);
    let mut worst: f64 = 0.0;
    for theta in [0.0, 1.1] {
        worst = worst.max(charge_conjugate(&charge_conjugate(&v, theta), theta).sub(&v).norm());
    }
    rep.push("involution", "C C psi = psi", worst, cfg.thr(1.0));
    rep
}

fn biorthonormal_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("biorthonormal");
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let p = random_momentum(&mut rng);
        worst = worst.max(biorthonormal_max_error(&p) / p.m);
    }
    rep.push(
        "table",
        "8x8 pairing table matches the +/- i m pattern; all else zero",
        worst,
        cfg.thr(1.0),
    );

    // Pairing magnitude follows |cos(t1 + t2)| of the 2-spinor phases.
    let p = FourMomentum::new(1.0, 0.3, -0.5, 0.8).expect("massive");
    let mut worst: f64 = 0.0;
    for (t1, t2) in [(0.0, 0.0), (0.9, std::f64::consts::FRAC_PI_2 - 0.9), (0.5, std::f64::consts::PI - 0.5)] {
        let up = ComplexVector::new(vec![num_complex::Complex64::from_polar(1.0, t1), cr(0.0)]);
        let down = ComplexVector::new(vec![cr(0.0), num_complex::Complex64::from_polar(1.0, t2)]);
        let a = lambda_from_rest_two_spinor(&p, ConjClass::S, &up);
        let b = lambda_from_rest_two_spinor(&p, ConjClass::S, &down);
        let got = crate::dirac::bar_product(&a, &b, GammaBasis::Chiral);
        let expect = ci(-p.m) * cr((t1 + t2).cos());
        worst = worst.max((got - expect).norm());
    }
    rep.push(
        "phase-dependence",
        "lambdabar^S_up lambda^S_down = -i m cos(t1 + t2)",
        worst,
        cfg.thr(1.0),
    );
    rep
}

fn parity_maps_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("parity-maps");
    let rest = FourMomentum::rest(1.0).expect("massive");
    rep.absorb(parity_map_check(&rest, cfg.thr(1.0)));
    let mut rng = cfg.rng();
    for _ in 0..cfg.samples.min(10) {
        let p = random_momentum(&mut rng);
        rep.absorb(parity_map_check(&p, cfg.thr(1.0)));
    }
    rep
}

fn rho_lambda_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("rho-lambda");
    let rest = FourMomentum::rest(1.0).expect("massive");
    rep.absorb(rho_lambda_relation_check(&rest, cfg.thr(1.0)));
    let mut rng = cfg.rng();
    for _ in 0..cfg.samples.min(10) {
        let p = random_momentum(&mut rng);
        rep.absorb(rho_lambda_relation_check(&p, cfg.thr(1.0)));
    }
    rep
}

fn connect_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("connect");
    let rest = FourMomentum::rest(1.0).expect("massive");
    rep.absorb(dirac_to_majorana(&rest, cfg.thr(1.0)));
    let mut rng = cfg.rng();
    for _ in 0..cfg.samples.min(50) {
        let p = random_momentum(&mut rng);
        rep.absorb(dirac_to_majorana(&p, cfg.thr(1.0)));
    }
    rep
}

fn gauge_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("gauge");
    let mut rng = cfg.rng();
    let angles = [
        std::f64::consts::FRAC_PI_6,
        std::f64::consts::FRAC_PI_3,
        std::f64::consts::FRAC_PI_2,
    ];
    let mut worst_class: f64 = 0.0;
    let mut worst_within: f64 = 0.0;
    let mut worst_cross: f64 = 0.0;
    for _ in 0..cfg.samples.min(20) {
        let p = random_momentum(&mut rng);
        for &alpha in &angles {
            for s in all_eight(&p) {
                let t = gauge_transform(&s, alpha);
                worst_class = worst_class.max(selfconj_residual(&t) / p.e.sqrt());
            }
            // Within-family pairings rotate by cos(2 alpha) (the phase law
            // with t1 = t2 = alpha); lambda-rho mass pairings are exactly
            // invariant because the two families rotate oppositely.
            let a = gauge_transform(&crate::majorana::lambda_spinor(&p, ConjClass::S, Eta::Up), alpha);
            let b = gauge_transform(&crate::majorana::lambda_spinor(&p, ConjClass::S, Eta::Down), alpha);
            let prod = crate::dirac::bar_product(&a.components, &b.components, GammaBasis::Chiral);
            worst_within =
                worst_within.max((prod - ci(-p.m) * cr((2.0 * alpha).cos())).norm() / p.m);
            let r = gauge_transform(&crate::majorana::rho_spinor(&p, ConjClass::A, Eta::Up), alpha);
            let cross = crate::dirac::bar_product(&a.components, &r.components, GammaBasis::Chiral);
            worst_cross = worst_cross.max((cross - cr(p.m)).norm() / p.m);
        }
    }
    rep.push(
        "class-preserved",
        "(cos a -/+ i gamma5 sin a) keeps the conjugacy class",
        worst_class,
        cfg.thr(1.0),
    );
    rep.push(
        "within-family-phase-law",
        "lambdabar'^S_up lambda'^S_down = -i m cos(2a)",
        worst_within,
        cfg.thr(1.0),
    );
    rep.push(
        "cross-family-invariant",
        "lambdabar'^S rho'^A mass pairings invariant",
        worst_cross,
        cfg.thr(1.0),
    );
    rep
}

fn xi_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("xi");
    // Helicity 2-spinor machinery.
    let (theta, phi) = (std::f64::consts::FRAC_PI_3, std::f64::consts::FRAC_PI_4);
    let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
    let up = xi_helicity(theta, phi, Helicity::Up, 0.2, -0.4, 1.0).expect("positive norm");
    let down = xi_helicity(theta, phi, Helicity::Down, 0.2, -0.4, 1.0).expect("positive norm");
    let sn = crate::algebra::sigma_dot(n);
    let res = sn.mul_vec(&up).sub(&up).norm() + sn.mul_vec(&down).add(&down).norm();
    rep.push("helicity-eigen", "(sigma.n) xi_{up,down} = +/- xi", res, cfg.thr(1.0));
    let u = xi_connecting_unitary(phi, 0.2, -0.4);
    rep.push(
        "xi-up-down-unitary",
        "xi_down = e^{i(b-a)} U xi_up",
        u.mul_vec(&up).sub(&down).norm() + u.unitarity_residual(),
        cfg.thr(1.0),
    );

    // Xi conjugates the boosts of any momentum with matching azimuth.
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples.min(20) {
        let p = random_momentum(&mut rng);
        let xi = xi_matrix(p.azimuth());
        for lam in [lambda_r(&p).expect("massive"), lambda_l(&p).expect("massive")] {
            worst = worst.max(xi.mul(&lam).mul(&xi.adjoint()).sub(&lam.conj()).max_abs());
        }
    }
    rep.push("boost-conjugation", "Xi Lambda_{R,L} Xi^-1 = Lambda*_{R,L}", worst, cfg.thr(1.0));

    // The four block transformations at rest and at random momenta.
    let rest = FourMomentum::rest(1.0).expect("massive");
    for eta in [Eta::Up, Eta::Down] {
        rep.absorb(xi_transform_check(&rest, eta, cfg.thr(1.0)));
    }
    for _ in 0..cfg.samples.min(10) {
        let p = random_momentum(&mut rng);
        for eta in [Eta::Up, Eta::Down] {
            rep.absorb(xi_transform_check(&p, eta, cfg.thr(1.0)));
        }
    }
    rep
}

// The thresholds here are the physical bounds 2m/|p| and exact zero, not
// float tolerances, so the config tolerance does not enter.
fn massless_limit_suite(_cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("massless-limit");
    let p_vec = [0.0, 0.0, 1.0];
    for class in [ConjClass::S, ConjClass::A] {
        let ratios = massless_norm_ratios(class, Eta::Up, p_vec, &[1e-3, 1e-6, 0.0]).expect("valid");
        rep.push(
            format!("{:?}-up-1e-3", class),
            "|lambda_up(p; m)| / sqrt(E) < 2 m / |p|",
            ratios[0],
            2e-3,
        );
        rep.push(
            format!("{:?}-up-1e-6", class),
            "|lambda_up(p; m)| / sqrt(E) < 2 m / |p|",
            ratios[1],
            2e-6,
        );
        rep.push(
            format!("{:?}-up-exact-zero", class),
            "lambda_up vanishes identically at m = 0 on-axis",
            ratios[2],
            0.0,
        );
    }
    // The down label does not vanish: ratio -> sqrt(2).
    let down = massless_norm_ratios(ConjClass::S, Eta::Down, p_vec, &[1e-6]).expect("valid");
    rep.push(
        "down-survives",
        "|lambda_down| / sqrt(E) -> sqrt(2)",
        (down[0] - 2f64.sqrt()).abs(),
        1e-5,
    );
    rep
}

fn coupled_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("coupled");
    let mut rng = cfg.rng();
    let wrong_mass = cfg.negative_control == Some(NegativeControl::WrongSignMass);
    let mut worst: f64 = 0.0;
    let rest = FourMomentum::rest(1.0).expect("massive");
    let mut eval = |p: &FourMomentum| {
        for eta in [Eta::Up, Eta::Down] {
            let rs = coupled_residual(p, eta, cfg.frequency);
            for r in rs {
                worst = worst.max(r / (p.e + p.m));
            }
        }
    };
    eval(&rest);
    for _ in 0..cfg.samples {
        eval(&random_momentum(&mut rng));
    }
    if wrong_mass {
        // Flip the mass sign: residuals jump to ~2m|spinor|/(E+m).
        let slash = crate::algebra::gamma_slash(rest.e, rest.spatial(), GammaBasis::Chiral);
        let lam = crate::majorana::lambda_spinor(&rest, ConjClass::S, Eta::Up).components;
        let rho = crate::majorana::rho_spinor(&rest, ConjClass::A, Eta::Up).components;
        worst = worst.max(slash.mul_vec(&lam).add(&rho.scale(cr(rest.m))).norm() / (rest.e + rest.m));
    }
    rep.push(
        "four-equations",
        "gamma.p {lambda,rho} = +/- m {rho,lambda} under the declared frequency convention",
        worst,
        cfg.thr(1.0),
    );
    rep
}

fn eight_component_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("eight-component");
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    let mut worst_split: f64 = 0.0;
    let rest = FourMomentum::rest(1.0).expect("massive");
    let mut eval = |p: &FourMomentum| {
        for eta in [Eta::Up, Eta::Down] {
            for class in [ParityClass::Plus, ParityClass::Minus] {
                let s = EightSpinor::new(p, class, eta);
                let r = eight_component_residual(&s);
                worst = worst.max(r / (p.e + p.m));
                let rs = coupled_residual(p, eta, FrequencyConvention::Positive);
                let pair = match class {
                    ParityClass::Plus => rs[0].max(rs[1]),
                    ParityClass::Minus => rs[2].max(rs[3]),
                };
                worst_split = worst_split.max((r - pair).abs());
            }
        }
    };
    eval(&rest);
    for _ in 0..cfg.samples {
        eval(&random_momentum(&mut rng));
    }
    rep.push("residual", "[Gamma.p -/+ m] Psi_{(+/-)} = 0", worst, cfg.thr(1.0));
    rep.push(
        "block-max",
        "8-component residual = max of its two coupled parts",
        worst_split,
        cfg.thr(1e-2),
    );
    rep
}

fn markov_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("markov");
    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    let rest = FourMomentum::rest(1.0).expect("massive");
    let mut eval = |p: &FourMomentum| {
        for sigma in [SpinProjection::Plus, SpinProjection::Minus] {
            let psi1 = u_spinor(p, sigma, GammaBasis::Chiral, NormConvention::UnitNorm).expect("massive");
            let mut psi2 = psi1.clone();
            psi2.components = gamma5(GammaBasis::Chiral).mul_vec(&psi1.components);
            psi2.kind = crate::dirac::SpinorKind::V;
            let res = markov_pair_residual(&psi1, &psi2).expect("same basis");
            worst = worst.max(res.max() / (p.e + p.m));
        }
    };
    eval(&rest);
    for _ in 0..cfg.samples {
        eval(&random_momentum(&mut rng));
    }
    rep.push(
        "pair-and-recombination",
        "(gamma.p -/+ m) psi_{1,2} = 0 and gamma.p chi = m eta, gamma.p eta = m chi",
        worst,
        cfg.thr(1.0),
    );
    rep
}

fn operator_zoo_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("operator-zoo");
    let thr = cfg.thr(1.0);
    // Dirac algebra of alpha, beta.
    let beta = crate::equations::beta_matrix();
    let mut worst = beta.mul(&beta).sub(&ComplexMatrix::identity(4)).max_abs();
    for i in 1..=3 {
        let ai = crate::equations::alpha_matrix(i).expect("fixed");
        worst = worst.max(ai.anticommutator(&beta).max_abs());
        for j in 1..=3 {
            let aj = crate::equations::alpha_matrix(j).expect("fixed");
            let delta = if i == j { 2.0 } else { 0.0 };
            worst = worst.max(
                ai.anticommutator(&aj)
                    .sub(&ComplexMatrix::identity(4).scale(cr(delta)))
                    .max_abs(),
            );
        }
    }
    rep.push("alpha-beta", "beta^2 = 1, {alpha^i, beta} = 0, {alpha^i, alpha^j} = 2 delta", worst, thr);

    let axis = FourMomentum::new(1.0, 0.0, 0.0, 1.0).expect("massive");
    rep.absorb(diagonalize_helicity(&axis, thr).expect("safe direction"));
    rep.absorb(diagonalize_chiral_helicity(&axis, thr).expect("safe direction"));
    let mut rng = cfg.rng();
    for _ in 0..cfg.samples.min(10) {
        // Keep clear of the -z singular axis; the error path is unit-tested.
        let mut p = random_momentum(&mut rng);
        if p.p_abs() + p.pz <= 1e-9 * p.p_abs() {
            p = axis;
        }
        rep.absorb(diagonalize_helicity(&p, thr).expect("safe direction"));
        rep.absorb(diagonalize_chiral_helicity(&p, thr).expect("safe direction"));
    }
    rep
}

fn gd1_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("gd1");
    rep.push(
        "shell-dirac-limit",
        "shell(m1, 0) = m1 exactly",
        (generalized_mass_shell(2.5, 0.0).expect("real") - 2.5).abs(),
        0.0,
    );
    rep.push(
        "shell-massless-limit",
        "shell(m, m) = 0 exactly",
        generalized_mass_shell(1.3, 1.3).expect("real"),
        0.0,
    );

    let shell = generalized_mass_shell(2.0, 1.0).expect("real");
    rep.push(
        "shell-value",
        "shell(2, 1) = sqrt(3)",
        (shell - 3f64.sqrt()).abs(),
        cfg.thr(1.0),
    );
    let mut worst: f64 = 0.0;
    let mut rng = cfg.rng();
    for _ in 0..cfg.samples.min(20) {
        let m1 = rng.random_range(0.5..3.0);
        let m2 = rng.random_range(0.0..m1);
        let shell = generalized_mass_shell(m1, m2).expect("real");
        let p = FourMomentum::new(
            shell,
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        )
        .expect("on-shell");
        worst = worst.max(generalized_mass_residual(&p, m1, m2).expect("on-shell"));
    }
    rep.push("kernel-residual", "|(gamma.p - m1 - m2 gamma5) psi| for the kernel solution", worst, cfg.thr(1.0));

    let massless = FourMomentum::new(0.0, 0.0, 0.0, 1.0).expect("lightlike");
    rep.absorb(not_chiral_eigenstate_check(&massless, 1.0, 1.0, cfg.thr(1.0)).expect("on-shell"));
    rep
}

fn barut_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("barut");
    let roots = barut_masses(1.0, 1.0, 1.0).expect("real roots");
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let frozen = [golden - 1.0, golden];
    let mut worst = (roots.len() as f64 - 2.0).abs();
    for (r, f) in roots.iter().zip(frozen.iter()) {
        worst = worst.max((r - f).abs());
    }
    rep.push("golden-pair", "alpha = beta = m = 1 gives ((sqrt5 - 1)/2, (sqrt5 + 1)/2)", worst, cfg.thr(1.0));

    let mut rng = cfg.rng();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples.min(25) {
        let alpha = rng.random_range(0.1..3.0);
        let beta = rng.random_range(0.0..3.0);
        let m = rng.random_range(0.1..5.0);
        for mu in barut_masses(alpha, beta, m).expect("real roots") {
            worst = worst.max(barut_dispersion_residual(mu, alpha, beta, m));
        }
    }
    rep.push("dispersion", "each mass solves alpha mu^2 / m +/- mu - beta = 0", worst, cfg.thr(1.0));

    let collapsed = barut_masses(0.0, 0.8, 1.0).expect("real roots");
    let res = if collapsed == vec![0.8] { 0.0 } else { 1.0 };
    rep.push("alpha-zero", "alpha -> 0 collapses to the single mass beta", res, cfg.thr(1.0));
    rep
}

fn noncommutative_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut rep = VerificationReport::new("noncommutative");
    // Frozen small case.
    let got = noncommutative_spectrum([0.0; 3], 1.0, &ThetaVector::new(0.0, 0.0, 0.1));
    let expect = [0.9, 0.9, 1.1, 1.1];
    let mut worst: f64 = 0.0;
    for (a, b) in got.iter().zip(expect.iter()) {
        worst = worst.max((a - b).abs());
    }
    rep.push("frozen-case", "E^2 in {0.9, 0.9, 1.1, 1.1} at m = 1, p = 0, |theta| = 0.1", worst, cfg.thr(1.0));

    let mut rng = cfg.rng();
    let mut worst_match: f64 = 0.0;
    let mut worst_rot: f64 = 0.0;
    for _ in 0..cfg.samples {
        let m = rng.random_range(0.1..10.0);
        let p = [
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
            rng.random_range(-5.0..5.0),
        ];
        let theta = ThetaVector::new(
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
            rng.random_range(-2.0..2.0),
        );
        let scale = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m + theta.magnitude()).max(1.0);
        let numeric = noncommutative_spectrum(p, m, &theta);
        let closed = noncommutative_spectrum_closed(p, m, &theta);
        for (a, b) in numeric.iter().zip(closed.iter()) {
            worst_match = worst_match.max((a - b).abs() / scale);
        }
        // Rotate theta about z: the spectrum only sees |theta|.
        let angle: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let (s, c) = angle.sin_cos();
        let rotated = ThetaVector::new(c * theta.x - s * theta.y, s * theta.x + c * theta.y, theta.z);
        let spun = noncommutative_spectrum(p, m, &rotated);
        for (a, b) in numeric.iter().zip(spun.iter()) {
            worst_rot = worst_rot.max((a - b).abs() / scale);
        }
    }
    rep.push("closed-vs-eigensolver", "E^2 = p^2 + m^2 +/- |theta| (x2) matches the eigensolver", worst_match, cfg.thr(1.0));
    rep.push("rotation-invariance", "spectrum invariant under rotations of theta", worst_rot, cfg.thr(1.0));

    for theta in [ThetaVector::new(0.3, -0.1, 0.4), ThetaVector::new(0.0, 0.0, -0.5)] {
        rep.absorb(noncommutative_chain_check(&theta, cfg.thr(1.0)));
    }
    rep
}
