//! Output documents and rendering shared between the `spinor-forge` binary
//! and its tests: fixed-precision number formatting, JSON with 17
//! significant digits, text with 12, and RFC 4180 CSV.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use spinor_forge::report::VerificationReport;

/// Format with `sig` significant digits, decimal where reasonable,
/// scientific otherwise (printf %g style).
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -4 || exp >= sig as i32 {
        let m = trim_zeros(mantissa);
        return format!("{m}e{exp}");
    }
    // Render in plain decimal with `sig` significant digits.
    let decimals = (sig as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x))
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0');
        t.trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Complex number rendered as "a + bi" with 12 significant digits.
pub fn fmt_complex(z: Complex64) -> String {
    let re = fmt_sig(z.re, 12);
    let im = fmt_sig(z.im.abs(), 12);
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re} {sign} {im}i")
}

/// JSON serializer writing every float with 17 significant digits so a
/// parse/regenerate cycle is byte-identical.
pub fn to_json(value: &impl Serialize) -> String {
    struct SigFormatter;
    impl serde_json::ser::Formatter for SigFormatter {
        fn write_f64<W: ?Sized + std::io::Write>(
            &mut self,
            writer: &mut W,
            value: f64,
        ) -> std::io::Result<()> {
            write!(writer, "{:.16e}", value)
        }
    }
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFormatter);
    value.serialize(&mut ser).expect("serializable document");
    String::from_utf8(out).expect("json is utf-8")
}

/// Complex number as a serializable {re, im} pair.
#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq)]
pub struct ComplexField {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexField {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// Shared config echo in every document.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConfigEcho {
    pub tolerance: f64,
    pub basis: String,
    pub seed: u64,
    pub samples: usize,
    pub frequency_convention: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmitDocument {
    pub command: String,
    pub kind: String,
    pub labels: Vec<String>,
    pub mass: f64,
    pub momentum: [f64; 3],
    pub energy: f64,
    pub p_plus: f64,
    pub p_minus: f64,
    pub basis: String,
    pub norm_convention: String,
    pub components: Vec<ComplexField>,
    pub norm: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub command: String,
    pub config: ConfigEcho,
    pub suites: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
    pub all_passed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScanDocument {
    pub command: String,
    pub quantity: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumDocument {
    pub command: String,
    pub kind: String,
    pub identity: String,
    pub values: Vec<f64>,
}

impl VerifyDocument {
    pub fn new(config: ConfigEcho, suites: Vec<VerificationReport>) -> Self {
        let passed = suites.iter().map(|s| s.passed).sum();
        let failed = suites.iter().map(|s| s.failed).sum();
        Self {
            command: "verify".to_string(),
            config,
            all_passed: failed == 0,
            passed,
            failed,
            suites,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            out.push_str(&format!(
                "suite {}: {}/{} passed\n",
                suite.suite,
                suite.passed,
                suite.passed + suite.failed
            ));
            for c in &suite.checks {
                out.push_str(&format!(
                    "  [{}] {:<40} residual {:>12}  threshold {:>12}  {}\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.id,
                    fmt_sig(c.residual, 12),
                    fmt_sig(c.threshold, 12),
                    c.identity
                ));
            }
        }
        out.push_str(&format!(
            "total: {} passed, {} failed -> {}\n",
            self.passed,
            self.failed,
            if self.all_passed { "OK" } else { "FAILED" }
        ));
        out
    }

    pub fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "check", "identity", "residual", "threshold", "pass"])
            .expect("csv record");
        for suite in &self.suites {
            for c in &suite.checks {
                w.write_record([
                    suite.suite.as_str(),
                    c.id.as_str(),
                    c.identity.as_str(),
                    &fmt_sig(c.residual, 17),
                    &fmt_sig(c.threshold, 17),
                    if c.pass { "true" } else { "false" },
                ])
                .expect("csv record");
            }
        }
        String::from_utf8(w.into_inner().expect("csv buffer")).expect("csv utf-8")
    }
}

impl EmitDocument {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "kind: {} {}   basis: {}   norm: {}\n",
            self.kind,
            self.labels.join(" "),
            self.basis,
            self.norm_convention
        ));
        out.push_str(&format!(
            "m: {}  p: ({}, {}, {})\n",
            fmt_sig(self.mass, 12),
            fmt_sig(self.momentum[0], 12),
            fmt_sig(self.momentum[1], 12),
            fmt_sig(self.momentum[2], 12)
        ));
        out.push_str(&format!(
            "E: {}  p+: {}  p-: {}\n",
            fmt_sig(self.energy, 12),
            fmt_sig(self.p_plus, 12),
            fmt_sig(self.p_minus, 12)
        ));
        for (i, c) in self.components.iter().enumerate() {
            out.push_str(&format!("c{}: {}\n", i + 1, fmt_complex(Complex64::new(c.re, c.im))));
        }
        out.push_str(&format!("norm: {}\n", fmt_sig(self.norm, 12)));
        out
    }

    pub fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "kind".to_string(),
            "labels".to_string(),
            "m".to_string(),
            "px".to_string(),
            "py".to_string(),
            "pz".to_string(),
            "E".to_string(),
            "p_plus".to_string(),
            "p_minus".to_string(),
        ];
        for i in 1..=self.components.len() {
            header.push(format!("c{}_re", i));
            header.push(format!("c{}_im", i));
        }
        header.push("norm".to_string());
        w.write_record(&header).expect("csv record");
        let mut row = vec![
            self.kind.clone(),
            self.labels.join(" "),
            fmt_sig(self.mass, 17),
            fmt_sig(self.momentum[0], 17),
            fmt_sig(self.momentum[1], 17),
            fmt_sig(self.momentum[2], 17),
            fmt_sig(self.energy, 17),
            fmt_sig(self.p_plus, 17),
            fmt_sig(self.p_minus, 17),
        ];
        for c in &self.components {
            row.push(fmt_sig(c.re, 17));
            row.push(fmt_sig(c.im, 17));
        }
        row.push(fmt_sig(self.norm, 17));
        w.write_record(&row).expect("csv record");
        String::from_utf8(w.into_inner().expect("csv buffer")).expect("csv utf-8")
    }
}

impl ScanDocument {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join("  "));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| fmt_sig(*x, 12)).collect();
            out.push_str(&cells.join("  "));
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("csv record");
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| fmt_sig(*x, 17)).collect();
            w.write_record(&cells).expect("csv record");
        }
        String::from_utf8(w.into_inner().expect("csv buffer")).expect("csv utf-8")
    }
}

impl SpectrumDocument {
    pub fn render_text(&self) -> String {
        let values: Vec<String> = self.values.iter().map(|x| fmt_sig(*x, 12)).collect();
        format!("{}: {}\n{}\n", self.kind, values.join(", "), self.identity)
    }

    pub fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["kind".to_string()];
        for i in 1..=self.values.len() {
            header.push(format!("value_{}", i));
        }
        w.write_record(&header).expect("csv record");
        let mut row = vec![self.kind.clone()];
        for v in &self.values {
            row.push(fmt_sig(*v, 17));
        }
        w.write_record(&row).expect("csv record");
        String::from_utf8(w.into_inner().expect("csv buffer")).expect("csv utf-8")
    }
}
