//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `--nocapture`). Run with
//! `cargo test -p spinor-forge-cli --test acceptance`.

use std::process::Command;

use num_complex::Complex64;

use spinor_forge::algebra::{
    big_gamma, clifford_residual, clifford_residual_for, cr, gamma5, ComplexVector, GammaBasis,
};
use spinor_forge::dirac::{
    dirac_bilinear, dirac_residual, parity_image, u_spinor, u_spinor_boost, v_spinor,
    v_spinor_boost, NormConvention, SpinProjection,
};
use spinor_forge::equations::{
    barut_dispersion_residual, barut_masses, coupled_residual, diagonalize_chiral_helicity,
    diagonalize_helicity, eight_component_residual, gd1_kernel, gd1_operator,
    generalized_mass_shell, markov_pair_residual, noncommutative_spectrum,
    noncommutative_spectrum_closed, u2_matrix, u3_matrix, EightSpinor, FrequencyConvention,
    ParityClass, ThetaVector,
};
use spinor_forge::kinematics::FourMomentum;
use spinor_forge::majorana::{
    all_eight, biorthonormal_max_error, charge_conjugate, connection_matrix, dirac_to_majorana,
    gauge_transform, lambda_spinor, massless_norm_ratios, parity_map_check,
    rho_lambda_relation_check, selfconj_residual, xi_transform_check, ConjClass, Eta,
};
use spinor_forge::suites::random_momentum;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seeded_momenta(n: usize) -> Vec<FourMomentum> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    (0..n).map(|_| random_momentum(&mut rng)).collect()
}

fn report(criterion: &str, worst: f64, bound: f64) {
    let verdict = if worst <= bound { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {verdict} (worst {worst:.3e}, bound {bound:.3e})");
    assert!(worst <= bound, "criterion {criterion}: worst {worst:.3e} > bound {bound:.3e}");
}

#[test]
fn criterion_01_clifford() {
    let mut worst = clifford_residual(GammaBasis::Chiral).max(clifford_residual(GammaBasis::Standard));
    let bgs = [
        big_gamma(0, GammaBasis::Chiral).unwrap(),
        big_gamma(1, GammaBasis::Chiral).unwrap(),
        big_gamma(2, GammaBasis::Chiral).unwrap(),
        big_gamma(3, GammaBasis::Chiral).unwrap(),
    ];
    worst = worst.max(clifford_residual_for(&bgs));
    report("01 clifford", worst, 1e-14);
}

#[test]
fn criterion_02_dirac_normalization_table() {
    let mut worst: f64 = 0.0;
    for p in seeded_momenta(100) {
        let us = [
            u_spinor(&p, SpinProjection::Plus, GammaBasis::Chiral, NormConvention::UnitNorm).unwrap(),
            u_spinor(&p, SpinProjection::Minus, GammaBasis::Chiral, NormConvention::UnitNorm).unwrap(),
        ];
        let vs = [
            v_spinor(&p, SpinProjection::Plus, GammaBasis::Chiral, NormConvention::UnitNorm).unwrap(),
            v_spinor(&p, SpinProjection::Minus, GammaBasis::Chiral, NormConvention::UnitNorm).unwrap(),
        ];
        for i in 0..2 {
            for j in 0..2 {
                let delta = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dirac_bilinear(&us[i], &us[j]).unwrap() - cr(delta)).norm());
                worst = worst.max((dirac_bilinear(&vs[i], &vs[j]).unwrap() + cr(delta)).norm());
                worst = worst.max(dirac_bilinear(&us[i], &vs[j]).unwrap().norm());
            }
        }
    }
    report("02 dirac-norms", worst, 1e-12);
}

#[test]
fn criterion_03_dirac_residuals_both_routes() {
    let mut worst_eq: f64 = 0.0;
    let mut worst_routes: f64 = 0.0;
    for p in seeded_momenta(100) {
        let scale = p.e + p.m;
        for sigma in [SpinProjection::Plus, SpinProjection::Minus] {
            for basis in [GammaBasis::Chiral, GammaBasis::Standard] {
                let u = u_spinor(&p, sigma, basis, NormConvention::UnitNorm).unwrap();
                let ub = u_spinor_boost(&p, sigma, basis, NormConvention::UnitNorm).unwrap();
                let v = v_spinor(&p, sigma, basis, NormConvention::UnitNorm).unwrap();
                let vb = v_spinor_boost(&p, sigma, basis, NormConvention::UnitNorm).unwrap();
                worst_eq = worst_eq
                    .max(dirac_residual(&u) / scale)
                    .max(dirac_residual(&ub) / scale)
                    .max(dirac_residual(&v) / scale)
                    .max(dirac_residual(&vb) / scale);
                worst_routes = worst_routes
                    .max(u.components.sub(&ub.components).max_abs())
                    .max(v.components.sub(&vb.components).max_abs());
            }
        }
    }
    report("03 dirac-residuals (equation)", worst_eq, 1e-12);
    report("03 dirac-residuals (route agreement)", worst_routes, 1e-12);
}

#[test]
fn criterion_04_self_conjugacy() {
    let mut worst: f64 = 0.0;
    for p in seeded_momenta(100) {
        for s in all_eight(&p) {
            worst = worst.max(selfconj_residual(&s) / p.e.sqrt());
        }
    }
    report("04 selfconj (classes)", worst, 1e-12);

    let v = ComplexVector::new(vec![
        Complex64::new(0.3, -0.4),
        Complex64::new(1.1, 0.2),
        Complex64::new(-0.8, 0.9),
        Complex64::new(0.5, -0.1),
    ]);
    let twice = charge_conjugate(&charge_conjugate(&v, 0.0), 0.0);
    report("04 selfconj (C^2 = 1)", twice.sub(&v).norm(), 1e-14);
}

#[test]
fn criterion_05_biorthonormal_table() {
    let mut worst: f64 = 0.0;
    for p in seeded_momenta(100) {
        worst = worst.max(biorthonormal_max_error(&p) / p.m);
    }
    report("05 biorthonormal", worst, 1e-12);
}

#[test]
fn criterion_06_parity_maps_and_non_eigenstate() {
    let generic = FourMomentum::new(1.0, 0.7, -0.4, 1.2).unwrap();
    let rep = parity_map_check(&generic, 1e-12);
    let map_worst = rep
        .checks
        .iter()
        .filter(|c| c.id.starts_with("P."))
        .map(|c| c.residual)
        .fold(0.0, f64::max);
    report("06 parity-maps (cross maps)", map_worst, 1e-12);

    let lam = lambda_spinor(&generic, ConjClass::S, Eta::Up);
    let (img, _) = parity_image(&lam.components, &generic, GammaBasis::Chiral);
    let ratio = lam.components.eigen_fit_ratio(&img);
    println!("criterion 06 parity-maps (non-eigenstate ratio): {} (must exceed 0.1)", ratio);
    assert!(ratio > 0.1);
}

#[test]
fn criterion_07_rho_lambda_relations() {
    let mut worst: f64 = 0.0;
    for p in seeded_momenta(100) {
        let rep = rho_lambda_relation_check(&p, 1e-12);
        worst = worst.max(rep.max_residual());
        assert!(rep.all_passed());
    }
    report("07 rho-lambda", worst, 1e-12);
}

#[test]
fn criterion_08_dirac_majorana_connection() {
    report("08 connect (unitarity)", connection_matrix().unitarity_residual(), 1e-14);
    let mut worst: f64 = 0.0;
    let rest = FourMomentum::rest(1.0).unwrap();
    let rep = dirac_to_majorana(&rest, 1e-12);
    worst = worst.max(rep.max_residual());
    assert!(rep.all_passed());
    for p in seeded_momenta(50) {
        let rep = dirac_to_majorana(&p, 1e-12);
        worst = worst.max(rep.max_residual());
        assert!(rep.all_passed());
    }
    report("08 connect (maps)", worst, 1e-12);
}

#[test]
fn criterion_09_coupled_eight_component_markov() {
    let mut worst: f64 = 0.0;
    for p in seeded_momenta(100) {
        let scale = p.e + p.m;
        for eta in [Eta::Up, Eta::Down] {
            for r in coupled_residual(&p, eta, FrequencyConvention::Positive) {
                worst = worst.max(r / scale);
            }
            for class in [ParityClass::Plus, ParityClass::Minus] {
                worst = worst.max(eight_component_residual(&EightSpinor::new(&p, class, eta)) / scale);
            }
        }
        for sigma in [SpinProjection::Plus, SpinProjection::Minus] {
            let psi1 = u_spinor(&p, sigma, GammaBasis::Chiral, NormConvention::UnitNorm).unwrap();
            let mut psi2 = psi1.clone();
            psi2.components = gamma5(GammaBasis::Chiral).mul_vec(&psi1.components);
            psi2.kind = spinor_forge::dirac::SpinorKind::V;
            worst = worst.max(markov_pair_residual(&psi1, &psi2).unwrap().max() / scale);
        }
    }
    report("09 coupled/eight-component/markov", worst, 1e-12);
}

#[test]
fn criterion_10_operator_zoo_equivalence() {
    // Exact determinants of the two printed permutations.
    assert_eq!(u2_matrix().det(), cr(-1.0));
    assert_eq!(u3_matrix().det(), cr(-1.0));
    println!("criterion 10 operator-zoo (det U2 = det U3 = -1): PASS (exact)");

    let mut worst: f64 = 0.0;
    for p in [
        FourMomentum::new(1.0, 0.0, 0.0, 2.0).unwrap(),
        FourMomentum::new(1.0, 1.0, 1.0, 1.0).unwrap(),
        FourMomentum::new(0.7, -0.6, 0.8, 0.3).unwrap(),
    ] {
        let rep = diagonalize_helicity(&p, 1e-12).unwrap();
        worst = worst.max(rep.max_residual());
        assert!(rep.all_passed());
        let rep = diagonalize_chiral_helicity(&p, 1e-12).unwrap();
        worst = worst.max(rep.max_residual());
        assert!(rep.all_passed());
    }
    report("10 operator-zoo (chains and spectra)", worst, 1e-12);
}

#[test]
fn criterion_11_massless_limit() {
    let p_vec = [0.0, 0.0, 1.0];
    let ratios = massless_norm_ratios(ConjClass::S, Eta::Up, p_vec, &[1e-3, 1e-6, 0.0]).unwrap();
    println!(
        "criterion 11 massless-limit: ratios {:.3e} (< 2e-3), {:.3e} (< 2e-6), {} (= 0)",
        ratios[0], ratios[1], ratios[2]
    );
    assert!(ratios[0] < 2e-3, "|lambda|/sqrt(E) must be < 2m/|p| at m = 1e-3");
    assert!(ratios[1] < 2e-6, "|lambda|/sqrt(E) must be < 2m/|p| at m = 1e-6");
    assert_eq!(ratios[2], 0.0, "exact zero at m = 0");
}

#[test]
fn criterion_12_gauge_and_xi_transforms() {
    let mut worst_gauge: f64 = 0.0;
    for p in seeded_momenta(25) {
        for alpha in [
            std::f64::consts::FRAC_PI_6,
            std::f64::consts::FRAC_PI_3,
            std::f64::consts::FRAC_PI_2,
        ] {
            for s in all_eight(&p) {
                worst_gauge = worst_gauge.max(selfconj_residual(&gauge_transform(&s, alpha)) / p.e.sqrt());
            }
        }
    }
    report("12 gauge (class preservation)", worst_gauge, 1e-12);

    let mut worst_xi: f64 = 0.0;
    let rest = FourMomentum::rest(1.0).unwrap();
    for eta in [Eta::Up, Eta::Down] {
        let rep = xi_transform_check(&rest, eta, 1e-12);
        worst_xi = worst_xi.max(rep.max_residual());
        assert!(rep.all_passed());
    }
    for p in seeded_momenta(25) {
        for eta in [Eta::Up, Eta::Down] {
            let rep = xi_transform_check(&p, eta, 1e-12);
            worst_xi = worst_xi.max(rep.max_residual());
            assert!(rep.all_passed());
        }
    }
    report("12 xi (four identifications)", worst_xi, 1e-12);
}

#[test]
fn criterion_13_gd1_kernel_and_chiral_helicity() {
    // Shell masses.
    assert_eq!(generalized_mass_shell(2.5, 0.0).unwrap(), 2.5);
    assert_eq!(generalized_mass_shell(1.3, 1.3).unwrap(), 0.0);

    let shell = generalized_mass_shell(2.0, 1.0).unwrap();
    let p = FourMomentum::new(shell, 0.5, -0.3, 1.1).unwrap();
    let psi = gd1_kernel(&p, 2.0, 1.0).unwrap();
    let kernel_res = gd1_operator(&p, 2.0, 1.0).mul_vec(&psi).norm();
    report("13 gd1 (kernel residual)", kernel_res, 1e-12);

    // m1 = m2: kernel solutions are not eta eigenstates.
    let massless = FourMomentum::new(0.0, 0.0, 0.0, 1.0).unwrap();
    let psi = gd1_kernel(&massless, 1.0, 1.0).unwrap();
    let eta_op = spinor_forge::equations::chiral_helicity_operator(massless.direction());
    let ratio = psi.eigen_fit_ratio(&eta_op.mul_vec(&psi));
    println!("criterion 13 gd1 (non-eigenstate ratio): {} (must exceed 0.01)", ratio);
    assert!(ratio > 0.01);

    // Control: the on-axis massless Dirac solution is an eta eigenstate.
    let ctrl = u_spinor(&massless, SpinProjection::Plus, GammaBasis::Chiral, NormConvention::MassDim)
        .unwrap();
    let ctrl_ratio = ctrl.components.eigen_fit_ratio(&eta_op.mul_vec(&ctrl.components));
    report("13 gd1 (massless Dirac control)", ctrl_ratio, 1e-12);
}

#[test]
fn criterion_14_noncommutative_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst: f64 = 0.0;
    let mut worst_rot: f64 = 0.0;
    use rand::Rng;
    for _ in 0..100 {
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
        // Values reach p^2 + m^2 ~ 1e2, so the comparison is scale-relative.
        let scale = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m + theta.magnitude()).max(1.0);
        let numeric = noncommutative_spectrum(p, m, &theta);
        let closed = noncommutative_spectrum_closed(p, m, &theta);
        for (a, b) in numeric.iter().zip(closed.iter()) {
            worst = worst.max((a - b).abs() / scale);
        }
        let angle: f64 = rng.random_range(0.0..std::f64::consts::TAU);
        let (s, c) = angle.sin_cos();
        let rotated = ThetaVector::new(c * theta.x - s * theta.y, s * theta.x + c * theta.y, theta.z);
        let spun = noncommutative_spectrum(p, m, &rotated);
        for (a, b) in numeric.iter().zip(spun.iter()) {
            worst_rot = worst_rot.max((a - b).abs() / scale);
        }
    }
    report("14 noncommutative (closed vs eigensolver)", worst, 1e-12);
    report("14 noncommutative (rotation invariance)", worst_rot, 1e-12);
}

#[test]
fn criterion_15_barut_spectrum() {
    let mut worst: f64 = 0.0;
    for (alpha, beta, m) in [(1.0, 1.0, 1.0), (0.5, 2.0, 1.5), (2.0, 0.3, 0.7)] {
        for mu in barut_masses(alpha, beta, m).unwrap() {
            worst = worst.max(barut_dispersion_residual(mu, alpha, beta, m));
        }
    }
    report("15 barut (dispersion)", worst, 1e-12);
    assert_eq!(barut_masses(0.0, 0.8, 1.0).unwrap(), vec![0.8]);
    println!("criterion 15 barut (alpha -> 0 collapses to beta): PASS");
}

fn cli_binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spinor-forge"));
    cmd.env_remove("SPINOR_FORGE_TOL");
    cmd
}

#[test]
fn criterion_16_cli_contract() {
    // verify all --seed 42 exits 0.
    let out = cli_binary()
        .args(["verify", "all", "--seed", "42", "--samples", "25", "--format", "json"])
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "verify all must exit 0");

    // Byte-identical output on repeat.
    let again = cli_binary()
        .args(["verify", "all", "--seed", "42", "--samples", "25", "--format", "json"])
        .output()
        .expect("binary runs");
    assert_eq!(out.stdout, again.stdout, "identical command + seed must be byte-identical");

    // JSON round-trips through the typed document.
    let body = String::from_utf8(out.stdout.clone()).expect("utf-8");
    let doc: spinor_forge_cli::VerifyDocument =
        serde_json::from_str(body.trim_end()).expect("parseable report");
    assert!(doc.all_passed);
    assert_eq!(doc.suites.len(), 19, "19 suites reported");
    let regenerated = spinor_forge_cli::to_json(&doc);
    assert_eq!(regenerated, body.trim_end(), "parse + regenerate must be identical");

    // Negative controls exit 1.
    let corrupted = cli_binary()
        .args(["verify", "dirac-residuals", "--negative-control", "corrupt-spinor", "--samples", "5"])
        .output()
        .expect("binary runs");
    assert_eq!(corrupted.status.code(), Some(1), "corrupted spinor must exit 1");
    let wrong_mass = cli_binary()
        .args(["verify", "coupled", "--negative-control", "wrong-sign-mass", "--samples", "5"])
        .output()
        .expect("binary runs");
    assert_eq!(wrong_mass.status.code(), Some(1), "wrong-sign mass must exit 1");

    // Unachievable tolerance is a verification failure, not a usage error.
    let tight = cli_binary()
        .args(["verify", "connect", "--tol", "1e-30", "--samples", "5"])
        .output()
        .expect("binary runs");
    assert_eq!(tight.status.code(), Some(1));

    println!("criterion 16 cli: PASS (exit codes, determinism, json round-trip)");
}
