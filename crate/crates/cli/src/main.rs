use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

use spinor_forge::algebra::GammaBasis;
use spinor_forge::dirac::{u_spinor, v_spinor, NormConvention, SpinProjection};
use spinor_forge::equations::{
    barut_masses, generalized_mass_shell, noncommutative_spectrum, FrequencyConvention,
    ThetaVector,
};
use spinor_forge::kinematics::FourMomentum;
use spinor_forge::majorana::{
    biorthonormal_max_error, lambda_spinor, rho_spinor, ConjClass, Eta,
};
use spinor_forge::suites::{run_suite, NegativeControl, SuiteConfig, SUITE_NAMES};

use spinor_forge_cli::{
    ComplexField, ConfigEcho, EmitDocument, ScanDocument, SpectrumDocument, VerifyDocument,
};

#[derive(Parser)]
#[command(name = "spinor-forge", version)]
#[command(about = "Momentum-space Dirac/Majorana spinor tables, identity verification, grid scans and spectra")]
struct Cli {
    /// Base residual tolerance (default 1e-12; the SPINOR_FORGE_TOL
    /// environment variable overrides the default)
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Gamma-matrix representation
    #[arg(long, global = true, value_enum, default_value_t = BasisArg::Chiral)]
    basis: BasisArg,

    /// Seed for the random-momentum suites
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Random momenta per suite
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Frequency association for the coupled lambda/rho system
    #[arg(long = "frequency-convention", global = true, value_enum, default_value_t = FreqArg::Positive)]
    frequency_convention: FreqArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Chiral,
    Standard,
}

impl From<BasisArg> for GammaBasis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Chiral => GammaBasis::Chiral,
            BasisArg::Standard => GammaBasis::Standard,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FreqArg {
    Positive,
    Negative,
}

impl From<FreqArg> for FrequencyConvention {
    fn from(f: FreqArg) -> Self {
        match f {
            FreqArg::Positive => FrequencyConvention::Positive,
            FreqArg::Negative => FrequencyConvention::Negative,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ControlArg {
    /// Zero one spinor component inside the dirac-residuals suite
    CorruptSpinor,
    /// Flip the mass sign inside the coupled suite
    WrongSignMass,
}

#[derive(Subcommand)]
enum Command {
    /// Print the components of one labeled spinor
    Emit {
        /// Spinor kind: u | v | lambda | rho
        kind: String,
        /// Labels: "+1/2" | "-1/2" for u/v; "S|A up|down" for lambda/rho
        labels: Vec<String>,
        /// Mass
        #[arg(long)]
        m: f64,
        /// Spatial momentum "px,py,pz"
        #[arg(long)]
        p: String,
        /// Normalization for u/v spinors
        #[arg(long, value_enum, default_value_t = NormArg::Unit)]
        norm: NormArg,
    },
    /// Run verification suites (all by default); exit 0 iff all pass
    Verify {
        /// Suite names (see --help for the list); empty or "all" runs all
        suites: Vec<String>,
        /// Deliberately corrupt the named pipeline so the run fails
        #[arg(long, value_enum)]
        negative_control: Option<ControlArg>,
    },
    /// Sweep a grid and print one row per point
    Scan {
        /// Quantity: biorthonormal | residuals | spectrum
        quantity: ScanQuantity,
        /// Mass value or range "start:end:count"
        #[arg(long, default_value = "1")]
        m: String,
        /// |p| value or range "start:end:count" (fixed direction (2,1,2)/3)
        #[arg(long)]
        pmag: Option<String>,
        /// Fixed spatial momentum "px,py,pz" (alternative to --pmag)
        #[arg(long)]
        p: Option<String>,
        /// |theta| value or range "start:end:count" (direction +z)
        #[arg(long = "theta-mag")]
        theta_mag: Option<String>,
    },
    /// Print a mass/energy spectrum
    Spectrum {
        /// Kind: noncommutative | barut | gd1
        kind: SpectrumKind,
        /// Mass (noncommutative)
        #[arg(long)]
        m: Option<f64>,
        /// Spatial momentum "px,py,pz" (noncommutative)
        #[arg(long)]
        p: Option<String>,
        /// Theta vector "tx,ty,tz" (noncommutative)
        #[arg(long)]
        theta: Option<String>,
        /// Quadratic-term coefficient (barut)
        #[arg(long)]
        alpha: Option<f64>,
        /// Constant mass term (barut)
        #[arg(long)]
        beta: Option<f64>,
        /// Scalar mass m1 (gd1)
        #[arg(long)]
        m1: Option<f64>,
        /// Pseudoscalar mass m2 (gd1)
        #[arg(long)]
        m2: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Unit,
    Mass,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanQuantity {
    Biorthonormal,
    Residuals,
    Spectrum,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumKind {
    Noncommutative,
    Barut,
    Gd1,
}

/// Usage/config error -> exit 2 with a message naming the offending flag.
struct UsageError(String);

type CliResult<T> = Result<T, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn main() -> ExitCode {
    // The spin label "-1/2" would otherwise parse as a flag.
    let args = std::env::args().map(|a| if a == "-1/2" { "minus".to_string() } else { a });
    let cli = Cli::parse_from(args);
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn resolve_tolerance(flag: Option<f64>) -> CliResult<f64> {
    if let Some(t) = flag {
        if !(t.is_finite() && t > 0.0) {
            return Err(usage(format!("--tol must be positive and finite, got {t}")));
        }
        return Ok(t);
    }
    match std::env::var("SPINOR_FORGE_TOL") {
        Ok(raw) => raw
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t > 0.0)
            .ok_or_else(|| usage(format!("SPINOR_FORGE_TOL must be a positive number, got {raw:?}"))),
        Err(_) => Ok(1e-12),
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let tolerance = resolve_tolerance(cli.tol)?;
    let config = SuiteConfig {
        tolerance,
        samples: cli.samples.max(1),
        seed: cli.seed,
        basis: cli.basis.into(),
        frequency: cli.frequency_convention.into(),
        negative_control: None,
    };
    let echo = ConfigEcho {
        tolerance,
        basis: GammaBasis::from(cli.basis).to_string(),
        seed: cli.seed,
        samples: config.samples,
        frequency_convention: FrequencyConvention::from(cli.frequency_convention).to_string(),
    };
    match cli.command {
        Command::Emit { kind, labels, m, p, norm } => {
            let doc = emit(&kind, &labels, m, &p, norm, cli.basis.into())?;
            print_output(cli.format, &doc, EmitDocument::render_text, EmitDocument::render_csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suites, negative_control } => {
            verify(suites, negative_control, config, echo, cli.format)
        }
        Command::Scan { quantity, m, pmag, p, theta_mag } => {
            let doc = scan(quantity, &m, pmag.as_deref(), p.as_deref(), theta_mag.as_deref(), &config)?;
            print_output(cli.format, &doc, ScanDocument::render_text, ScanDocument::render_csv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { kind, m, p, theta, alpha, beta, m1, m2 } => {
            let doc = spectrum(kind, m, p.as_deref(), theta.as_deref(), alpha, beta, m1, m2)?;
            print_output(cli.format, &doc, SpectrumDocument::render_text, SpectrumDocument::render_csv);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_output<T: serde::Serialize>(
    format: FormatArg,
    doc: &T,
    text: impl Fn(&T) -> String,
    csv: impl Fn(&T) -> String,
) {
    match format {
        FormatArg::Text => print!("{}", text(doc)),
        FormatArg::Json => println!("{}", spinor_forge_cli::to_json(doc)),
        FormatArg::Csv => print!("{}", csv(doc)),
    }
}

fn parse_vec3(raw: &str, flag: &str) -> CliResult<[f64; 3]> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 3 {
        return Err(usage(format!("{flag} expects \"x,y,z\", got {raw:?}")));
    }
    let mut out = [0.0; 3];
    for (i, part) in parts.iter().enumerate() {
        out[i] = part
            .trim()
            .parse::<f64>()
            .map_err(|_| usage(format!("{flag}: {part:?} is not a number")))?;
    }
    Ok(out)
}

/// "start:end:count" inclusive linear range, or a single value.
fn parse_range(raw: &str, flag: &str) -> CliResult<Vec<f64>> {
    if let Some((a, rest)) = raw.split_once(':') {
        let (b, n) = rest
            .split_once(':')
            .ok_or_else(|| usage(format!("{flag} expects \"start:end:count\", got {raw:?}")))?;
        let start: f64 = a.parse().map_err(|_| usage(format!("{flag}: bad start {a:?}")))?;
        let end: f64 = b.parse().map_err(|_| usage(format!("{flag}: bad end {b:?}")))?;
        let count: usize = n.parse().map_err(|_| usage(format!("{flag}: bad count {n:?}")))?;
        if count == 0 {
            return Err(usage(format!("{flag}: empty grid (count = 0)")));
        }
        if count == 1 {
            return Ok(vec![start]);
        }
        let step = (end - start) / (count - 1) as f64;
        Ok((0..count).map(|i| start + step * i as f64).collect())
    } else {
        let v: f64 = raw.parse().map_err(|_| usage(format!("{flag}: {raw:?} is not a number")))?;
        Ok(vec![v])
    }
}

fn make_momentum(m: f64, p: [f64; 3], flag: &str) -> CliResult<FourMomentum> {
    FourMomentum::new(m, p[0], p[1], p[2]).map_err(|e| usage(format!("{flag}: {e}")))
}

fn emit(
    kind: &str,
    labels: &[String],
    m: f64,
    p_raw: &str,
    norm: NormArg,
    basis: GammaBasis,
) -> CliResult<EmitDocument> {
    let p = parse_vec3(p_raw, "--p")?;
    let momentum = make_momentum(m, p, "--m/--p")?;
    let norm_convention = match norm {
        NormArg::Unit => NormConvention::UnitNorm,
        NormArg::Mass => NormConvention::MassDim,
    };

    let (components, kind_name, labels_out, norm_name) = match kind {
        "u" | "v" => {
            let sigma = match labels {
                [s] if s == "+1/2" || s == "up" || s == "plus" => SpinProjection::Plus,
                [s] if s == "-1/2" || s == "down" || s == "minus" => SpinProjection::Minus,
                _ => {
                    return Err(usage(format!(
                        "emit {kind} expects one spin label \"+1/2\" or \"-1/2\", got {labels:?}"
                    )))
                }
            };
            let spinor = if kind == "u" {
                u_spinor(&momentum, sigma, basis, norm_convention)
            } else {
                v_spinor(&momentum, sigma, basis, norm_convention)
            }
            .map_err(|e| usage(format!("emit {kind}: {e}")))?;
            let label = if sigma == SpinProjection::Plus { "+1/2" } else { "-1/2" };
            let norm_name = match norm_convention {
                NormConvention::UnitNorm => "unit",
                NormConvention::MassDim => "mass",
            };
            (spinor.components, kind.to_string(), vec![label.to_string()], norm_name)
        }
        "lambda" | "λ" | "rho" | "ρ" => {
            let (class, eta) = match labels {
                [c, e] => {
                    let class = match c.as_str() {
                        "S" | "s" => ConjClass::S,
                        "A" | "a" => ConjClass::A,
                        _ => return Err(usage(format!("class label must be S or A, got {c:?}"))),
                    };
                    let eta = match e.as_str() {
                        "up" => Eta::Up,
                        "down" => Eta::Down,
                        _ => return Err(usage(format!("eta label must be up or down, got {e:?}"))),
                    };
                    (class, eta)
                }
                _ => {
                    return Err(usage(format!(
                        "emit {kind} expects labels \"S|A up|down\", got {labels:?}"
                    )))
                }
            };
            let family_is_lambda = kind == "lambda" || kind == "λ";
            let spinor = if family_is_lambda {
                lambda_spinor(&momentum, class, eta)
            } else {
                rho_spinor(&momentum, class, eta)
            };
            // lambda/rho are defined in the chiral representation; other
            // bases go through the fixed change-of-basis unitary.
            let spinor = spinor.to_basis(basis);
            let kind_name = if family_is_lambda { "lambda" } else { "rho" };
            let class_label = match class {
                ConjClass::S => "S",
                ConjClass::A => "A",
            };
            let eta_label = match eta {
                Eta::Up => "up",
                Eta::Down => "down",
            };
            (
                spinor.components,
                kind_name.to_string(),
                vec![class_label.to_string(), eta_label.to_string()],
                "mass",
            )
        }
        other => {
            return Err(usage(format!(
                "unknown spinor kind {other:?} (expected u, v, lambda or rho)"
            )))
        }
    };

    Ok(EmitDocument {
        command: "emit".to_string(),
        kind: kind_name,
        labels: labels_out,
        mass: m,
        momentum: p,
        energy: momentum.e,
        p_plus: momentum.p_plus(),
        p_minus: momentum.p_minus(),
        basis: basis.to_string(),
        norm_convention: norm_name.to_string(),
        components: components.entries().iter().map(|z| ComplexField::from(*z)).collect(),
        norm: components.norm(),
    })
}

fn verify(
    suites: Vec<String>,
    control: Option<ControlArg>,
    mut config: SuiteConfig,
    echo: ConfigEcho,
    format: FormatArg,
) -> CliResult<ExitCode> {
    let names: Vec<String> = if suites.is_empty() || suites == ["all"] {
        SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        suites
    };
    for name in &names {
        if !SUITE_NAMES.contains(&name.as_str()) {
            return Err(usage(format!(
                "unknown suite {name:?}; known suites: {}",
                SUITE_NAMES.join(", ")
            )));
        }
    }
    if let Some(c) = control {
        let (nc, target) = match c {
            ControlArg::CorruptSpinor => (NegativeControl::CorruptSpinor, "dirac-residuals"),
            ControlArg::WrongSignMass => (NegativeControl::WrongSignMass, "coupled"),
        };
        if names.len() != 1 || names[0] != target {
            return Err(usage(format!(
                "--negative-control {} applies to the single suite {target:?}",
                match c {
                    ControlArg::CorruptSpinor => "corrupt-spinor",
                    ControlArg::WrongSignMass => "wrong-sign-mass",
                }
            )));
        }
        config.negative_control = Some(nc);
    }

    let reports: Vec<_> = names
        .iter()
        .map(|name| run_suite(name, &config).expect("validated suite name"))
        .collect();
    let doc = VerifyDocument::new(echo, reports);
    print_output(format, &doc, VerifyDocument::render_text, VerifyDocument::render_csv);
    Ok(if doc.all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Fixed scan direction for --pmag grids.
const SCAN_DIRECTION: [f64; 3] = [2.0 / 3.0, 1.0 / 3.0, 2.0 / 3.0];

fn scan(
    quantity: ScanQuantity,
    m_raw: &str,
    pmag_raw: Option<&str>,
    p_raw: Option<&str>,
    theta_raw: Option<&str>,
    config: &SuiteConfig,
) -> CliResult<ScanDocument> {
    let masses = parse_range(m_raw, "--m")?;
    if pmag_raw.is_some() && p_raw.is_some() {
        return Err(usage("--pmag and --p are mutually exclusive"));
    }
    // Momentum grid: magnitudes along the fixed direction, or one fixed vector.
    let momenta: Vec<[f64; 3]> = if let Some(raw) = pmag_raw {
        parse_range(raw, "--pmag")?
            .into_iter()
            .map(|mag| {
                [
                    mag * SCAN_DIRECTION[0],
                    mag * SCAN_DIRECTION[1],
                    mag * SCAN_DIRECTION[2],
                ]
            })
            .collect()
    } else if let Some(raw) = p_raw {
        vec![parse_vec3(raw, "--p")?]
    } else {
        vec![[0.0, 0.0, 0.0]]
    };

    let mut columns = vec!["m".to_string(), "px".to_string(), "py".to_string(), "pz".to_string()];
    let mut rows: Vec<Vec<f64>> = Vec::new();
    match quantity {
        ScanQuantity::Biorthonormal => {
            if theta_raw.is_some() {
                return Err(usage("--theta-mag does not apply to scan biorthonormal"));
            }
            columns.push("max_table_error".to_string());
            for &m in &masses {
                for &p in &momenta {
                    let mom = make_momentum(m, p, "--m/--pmag")?;
                    if mom.m == 0.0 {
                        return Err(usage("scan biorthonormal requires m > 0"));
                    }
                    rows.push(vec![m, p[0], p[1], p[2], biorthonormal_max_error(&mom)]);
                }
            }
        }
        ScanQuantity::Residuals => {
            if theta_raw.is_some() {
                return Err(usage("--theta-mag does not apply to scan residuals"));
            }
            columns.push("max_residual".to_string());
            for &m in &masses {
                for &p in &momenta {
                    let mom = make_momentum(m, p, "--m/--pmag")?;
                    if mom.m == 0.0 {
                        return Err(usage("scan residuals requires m > 0"));
                    }
                    rows.push(vec![m, p[0], p[1], p[2], residual_sweep(&mom, config)]);
                }
            }
        }
        ScanQuantity::Spectrum => {
            let thetas = parse_range(theta_raw.unwrap_or("0"), "--theta-mag")?;
            columns.push("theta_mag".to_string());
            for i in 1..=4 {
                columns.push(format!("e2_{}", i));
            }
            for &m in &masses {
                for &p in &momenta {
                    for &t in &thetas {
                        let spec = noncommutative_spectrum(p, m, &ThetaVector::new(0.0, 0.0, t));
                        let mut row = vec![m, p[0], p[1], p[2], t];
                        row.extend_from_slice(&spec);
                        rows.push(row);
                    }
                }
            }
        }
    }
    Ok(ScanDocument {
        command: "scan".to_string(),
        quantity: match quantity {
            ScanQuantity::Biorthonormal => "biorthonormal",
            ScanQuantity::Residuals => "residuals",
            ScanQuantity::Spectrum => "spectrum",
        }
        .to_string(),
        columns,
        rows,
    })
}

/// Max equation residual over the u/v and coupled systems at one momentum,
/// normalized by (E + m).
fn residual_sweep(p: &FourMomentum, config: &SuiteConfig) -> f64 {
    let mut worst: f64 = 0.0;
    for sigma in [SpinProjection::Plus, SpinProjection::Minus] {
        for (kind, ctor) in [("u", true), ("v", false)] {
            let _ = kind;
            let s = if ctor {
                u_spinor(p, sigma, config.basis, NormConvention::MassDim)
            } else {
                v_spinor(p, sigma, config.basis, NormConvention::MassDim)
            }
            .expect("massive momentum");
            worst = worst.max(spinor_forge::dirac::dirac_residual(&s) / (p.e + p.m));
        }
    }
    for eta in [Eta::Up, Eta::Down] {
        for r in spinor_forge::equations::coupled_residual(p, eta, config.frequency) {
            worst = worst.max(r / (p.e + p.m));
        }
    }
    worst
}

#[allow(clippy::too_many_arguments)]
fn spectrum(
    kind: SpectrumKind,
    m: Option<f64>,
    p_raw: Option<&str>,
    theta_raw: Option<&str>,
    alpha: Option<f64>,
    beta: Option<f64>,
    m1: Option<f64>,
    m2: Option<f64>,
) -> CliResult<SpectrumDocument> {
    match kind {
        SpectrumKind::Noncommutative => {
            let m = m.ok_or_else(|| usage("spectrum noncommutative requires --m"))?;
            let p = parse_vec3(p_raw.unwrap_or("0,0,0"), "--p")?;
            let t = parse_vec3(theta_raw.ok_or_else(|| usage("spectrum noncommutative requires --theta"))?, "--theta")?;
            if m < 0.0 {
                return Err(usage(format!("--m must be non-negative, got {m}")));
            }
            let values = noncommutative_spectrum(p, m, &ThetaVector::new(t[0], t[1], t[2]));
            Ok(SpectrumDocument {
                command: "spectrum".to_string(),
                kind: "noncommutative".to_string(),
                identity: "E^2 = p^2 + m^2 +/- |theta|, each twice".to_string(),
                values: values.to_vec(),
            })
        }
        SpectrumKind::Barut => {
            let alpha = alpha.ok_or_else(|| usage("spectrum barut requires --alpha"))?;
            let beta = beta.ok_or_else(|| usage("spectrum barut requires --beta"))?;
            let m = m.ok_or_else(|| usage("spectrum barut requires --m"))?;
            let values =
                barut_masses(alpha, beta, m).map_err(|e| usage(format!("--alpha/--beta/--m: {e}")))?;
            Ok(SpectrumDocument {
                command: "spectrum".to_string(),
                kind: "barut".to_string(),
                identity: "alpha mu^2 / m +/- mu - beta = 0, non-negative roots".to_string(),
                values,
            })
        }
        SpectrumKind::Gd1 => {
            let m1 = m1.ok_or_else(|| usage("spectrum gd1 requires --m1"))?;
            let m2 = m2.ok_or_else(|| usage("spectrum gd1 requires --m2"))?;
            let shell =
                generalized_mass_shell(m1, m2).map_err(|e| usage(format!("--m1/--m2: {e}")))?;
            Ok(SpectrumDocument {
                command: "spectrum".to_string(),
                kind: "gd1".to_string(),
                identity: "p^2 = m1^2 - m2^2 from squaring gamma.p - m1 - m2 gamma5".to_string(),
                values: vec![shell],
            })
        }
    }
}
