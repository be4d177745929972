//! Command-line harness: builds instances under the standard marked-state
//! conventions, runs sweeps, and emits CSV/JSON/SVG.
//!
//! Output is deterministic: identical config and seed give byte-identical
//! files. Floats in CSV and SVG carry 12 significant digits.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use serde::Serialize;

use crate::closed_forms::{binomial, dicke_entanglement, ghz_entanglement, w_entanglement, DickeSpec};
use crate::error::{Error, Result};
use crate::geometric::{self, e_max, max_overlap, OverlapCoefficients};
use crate::grover::{AngleConvention, GroverInstance, MarkedProfile};
use crate::product_oracle;
use crate::statevector;

/// Marked-state selection conventions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MarkedSpec {
    /// `{|0..0>}`; forces `m = 1`.
    AllZeros,
    /// `{|0..0>, |1..1>}`; forces `m = 2`.
    ZerosAndOnes,
    /// `{|0..0>, |1..1>}` plus the first `m - 2` balanced-weight patterns in
    /// ascending numeric order; `n` must be even.
    PaperConventionM,
    /// The `n` patterns with a single 1 bit; forces `m = n`.
    WeightOne,
    /// A literal pattern list.
    Explicit(Vec<u64>),
}

impl MarkedSpec {
    /// Parses the `--marked` flag value.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "all-zeros" => Ok(Self::AllZeros),
            "zeros-ones" => Ok(Self::ZerosAndOnes),
            "paper-m" => Ok(Self::PaperConventionM),
            "weight-one" => Ok(Self::WeightOne),
            other => {
                if let Some(list) = other.strip_prefix("explicit:") {
                    let patterns = list
                        .split(',')
                        .map(|tok| {
                            tok.trim().parse::<u64>().map_err(|_| {
                                Error::InfeasibleSpec(format!("bad pattern {tok:?}"))
                            })
                        })
                        .collect::<Result<Vec<u64>>>()?;
                    Ok(Self::Explicit(patterns))
                } else {
                    Err(Error::InfeasibleSpec(format!(
                        "unknown marked spec {other:?}; expected all-zeros, zeros-ones, \
                         paper-m, weight-one, or explicit:<comma-list>"
                    )))
                }
            }
        }
    }

    /// Convention used when `--marked` is omitted: the one the published
    /// curves use for that `m`.
    pub fn default_for(m: u64) -> Self {
        match m {
            1 => Self::AllZeros,
            2 => Self::ZerosAndOnes,
            _ => Self::PaperConventionM,
        }
    }

    fn name(&self) -> String {
        match self {
            Self::AllZeros => "all-zeros".into(),
            Self::ZerosAndOnes => "zeros-ones".into(),
            Self::PaperConventionM => "paper-m".into(),
            Self::WeightOne => "weight-one".into(),
            Self::Explicit(list) => {
                let mut s = String::from("explicit:");
                for (i, p) in list.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    let _ = write!(s, "{p}");
                }
                s
            }
        }
    }
}

/// Builds the marked set for a spec.
///
/// Balanced patterns are taken in ascending numeric order; the entanglement
/// depends only on the weight multiset, so the tie-break is immaterial (and
/// tested to be).
pub fn build_marked_set(spec: &MarkedSpec, n: u32, m: u64) -> Result<Vec<u64>> {
    if !(crate::grover::MIN_QUBITS..=crate::grover::MAX_QUBITS).contains(&n) {
        return Err(Error::QubitCount {
            n,
            min: crate::grover::MIN_QUBITS,
            max: crate::grover::MAX_QUBITS,
        });
    }
    let n_states = 1u64 << n;
    match spec {
        MarkedSpec::AllZeros => {
            if m != 1 {
                return Err(Error::InfeasibleSpec(format!(
                    "all-zeros fixes m = 1, got m = {m}"
                )));
            }
            Ok(vec![0])
        }
        MarkedSpec::ZerosAndOnes => {
            if m != 2 {
                return Err(Error::InfeasibleSpec(format!(
                    "zeros-ones fixes m = 2, got m = {m}"
                )));
            }
            Ok(vec![0, n_states - 1])
        }
        MarkedSpec::PaperConventionM => {
            if !n.is_multiple_of(2) {
                return Err(Error::InfeasibleSpec(format!(
                    "paper-m needs an even qubit count, got n = {n}"
                )));
            }
            if m < 2 {
                return Err(Error::InfeasibleSpec(format!(
                    "paper-m needs m >= 2, got m = {m}"
                )));
            }
            let balanced_available = binomial(n, n / 2) as u64;
            if m - 2 > balanced_available {
                return Err(Error::InfeasibleSpec(format!(
                    "paper-m with m = {m} needs {} balanced patterns, only {} exist",
                    m - 2,
                    balanced_available
                )));
            }
            let mut out = vec![0, n_states - 1];
            let mut x = 0u64;
            while (out.len() as u64) < m {
                if x.count_ones() == n / 2 {
                    out.push(x);
                }
                x += 1;
            }
            out.sort_unstable();
            Ok(out)
        }
        MarkedSpec::WeightOne => {
            if m != u64::from(n) {
                return Err(Error::InfeasibleSpec(format!(
                    "weight-one fixes m = n = {n}, got m = {m}"
                )));
            }
            Ok((0..n).map(|j| 1u64 << j).collect())
        }
        MarkedSpec::Explicit(list) => {
            if m != list.len() as u64 {
                return Err(Error::InfeasibleSpec(format!(
                    "explicit list holds {} patterns but m = {m}",
                    list.len()
                )));
            }
            Ok(list.clone())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Curve,
    Table1,
    Ghz,
    Wstate,
    Dicke,
    Closedforms,
    Validate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

impl OutputFormat {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "svg" => Ok(Self::Svg),
            other => Err(Error::InfeasibleSpec(format!(
                "unknown format {other:?}; expected csv, json, or svg"
            ))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Json => "json",
            Self::Svg => "svg",
        }
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub command: CommandKind,
    pub n: u32,
    pub m: u64,
    pub marked_spec: MarkedSpec,
    pub angle_convention: AngleConvention,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub tol: f64,
    pub seed: u64,
    pub restarts: u32,
    /// Upper bound on `m` for the `validate` sweep.
    pub max_m: u64,
}

impl SweepConfig {
    fn convention_name(&self) -> &'static str {
        match self.angle_convention {
            AngleConvention::PaperStep => "paper",
            AngleConvention::ExactRotation => "exact",
        }
    }
}

/// What a command produced, for exit-status mapping.
#[derive(Debug, Clone, Default)]
pub struct RunOutcome {
    /// Checks that failed in a `validate` run; nonzero maps to exit code 2.
    pub validation_failures: u32,
}

#[derive(Serialize)]
struct ConfigJson {
    command: &'static str,
    n: u32,
    m: u64,
    marked_spec: String,
    marked: Vec<u64>,
    angle: &'static str,
    format: &'static str,
    tol: f64,
    seed: u64,
    restarts: u32,
}

#[derive(Serialize)]
struct CurveRow {
    r: u32,
    theta_r: f64,
    #[serde(rename = "E")]
    e: f64,
    phi_star: f64,
    bound: f64,
    concurrence: f64,
    success_prob: f64,
}

#[derive(Serialize)]
struct Table1Row {
    m: u64,
    r_opt: u32,
    peak_r: u32,
    peak_ratio: f64,
    #[serde(rename = "E_max")]
    e_max: f64,
    note: String,
}

#[derive(Serialize)]
struct DickeRow {
    k: u32,
    #[serde(rename = "E_closed")]
    closed: f64,
    #[serde(rename = "E_numeric")]
    numeric: f64,
    abs_diff: f64,
}

#[derive(Serialize)]
struct ClosedFormsRow {
    n: u32,
    ghz: f64,
    w: f64,
    dicke_k: u32,
    #[serde(rename = "dicke_E")]
    dicke_e: f64,
}

#[derive(Serialize)]
struct ValidateRow {
    check: String,
    passed: bool,
    detail: String,
}

/// 12 significant digits, scientific; fixed layout so outputs are
/// byte-reproducible.
fn fmt12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Executes a resolved configuration and writes its report to the output
/// path (or stdout when none is set).
pub fn run_command(config: &SweepConfig) -> Result<RunOutcome> {
    if !(crate::grover::MIN_QUBITS..=crate::grover::MAX_QUBITS).contains(&config.n) {
        return Err(Error::QubitCount {
            n: config.n,
            min: crate::grover::MIN_QUBITS,
            max: crate::grover::MAX_QUBITS,
        });
    }
    match config.command {
        CommandKind::Curve | CommandKind::Ghz | CommandKind::Wstate => curve_command(config),
        CommandKind::Table1 => table1_command(config),
        CommandKind::Dicke => dicke_command(config),
        CommandKind::Closedforms => closedforms_command(config),
        CommandKind::Validate => validate_command(config),
    }
}

fn config_json(config: &SweepConfig, marked: &[u64]) -> ConfigJson {
    ConfigJson {
        command: match config.command {
            CommandKind::Curve => "curve",
            CommandKind::Table1 => "table1",
            CommandKind::Ghz => "ghz",
            CommandKind::Wstate => "wstate",
            CommandKind::Dicke => "dicke",
            CommandKind::Closedforms => "closedforms",
            CommandKind::Validate => "validate",
        },
        n: config.n,
        m: config.m,
        marked_spec: config.marked_spec.name(),
        marked: marked.to_vec(),
        angle: config.convention_name(),
        format: config.output_format.name(),
        tol: config.tol,
        seed: config.seed,
        restarts: config.restarts,
    }
}

fn curve_command(config: &SweepConfig) -> Result<RunOutcome> {
    let marked = build_marked_set(&config.marked_spec, config.n, config.m)?;
    let instance = GroverInstance::new(config.n, marked.iter().copied(), config.angle_convention)?;
    let curve = geometric::entanglement_curve(&instance, config.tol)?;
    let rows: Vec<CurveRow> = curve
        .records()
        .iter()
        .zip(curve.concurrence())
        .map(|(rec, &c)| CurveRow {
            r: rec.r,
            theta_r: instance.theta(rec.r),
            e: rec.e,
            phi_star: rec.phi_star,
            bound: rec.bound,
            concurrence: c,
            success_prob: instance.success_probability(rec.r),
        })
        .collect();

    let body = match config.output_format {
        OutputFormat::Csv => {
            let mut out = String::from("r,theta_r,E,phi_star,bound,concurrence,success_prob\n");
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    row.r,
                    fmt12(row.theta_r),
                    fmt12(row.e),
                    fmt12(row.phi_star),
                    fmt12(row.bound),
                    fmt12(row.concurrence),
                    fmt12(row.success_prob)
                );
            }
            out
        }
        OutputFormat::Json => json_report(&config_json(config, &marked), &rows)?,
        OutputFormat::Svg => curve_svg(config, &marked, &rows),
    };
    write_output(config, &body)?;
    Ok(RunOutcome::default())
}

fn table1_command(config: &SweepConfig) -> Result<RunOutcome> {
    let mut rows = Vec::new();
    for m in [1u64, 2, 3, 5, 10] {
        let spec = MarkedSpec::default_for(m);
        let marked = build_marked_set(&spec, config.n, m)?;
        let instance =
            GroverInstance::new(config.n, marked.iter().copied(), config.angle_convention)?;
        let curve = geometric::entanglement_curve(&instance, config.tol)?;
        let (peak_r, peak_e) = e_max(&curve);
        let r_opt = instance.r_opt();
        let note = if config.n == 10 && m == 1 {
            "closest-integer formula gives 25; the published table lists 24".to_string()
        } else {
            String::new()
        };
        rows.push(Table1Row {
            m,
            r_opt,
            peak_r,
            peak_ratio: f64::from(peak_r) / f64::from(r_opt),
            e_max: peak_e,
            note,
        });
    }

    let marked = build_marked_set(&MarkedSpec::AllZeros, config.n, 1)?;
    let body = match config.output_format {
        OutputFormat::Csv => {
            let mut out = String::from("m,r_opt,peak_r,peak_ratio,E_max,note\n");
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    row.m,
                    row.r_opt,
                    row.peak_r,
                    fmt12(row.peak_ratio),
                    fmt12(row.e_max),
                    row.note
                );
            }
            out
        }
        _ => json_report(&config_json(config, &marked), &rows)?,
    };
    write_output(config, &body)?;
    Ok(RunOutcome::default())
}

fn dicke_command(config: &SweepConfig) -> Result<RunOutcome> {
    let mut rows = Vec::new();
    for k in 0..=config.n {
        let spec = DickeSpec::new(config.n, k)?;
        let closed = dicke_entanglement(spec);
        let count = binomial(config.n, k);
        let profile =
            MarkedProfile::from_weights(config.n, std::iter::repeat_n(k, count as usize))?;
        let coeffs = OverlapCoefficients::new(0.0, 1.0 / count.sqrt(), profile);
        let (_, ov) = max_overlap(&coeffs, config.tol)?;
        let numeric = (1.0 - ov * ov).max(0.0);
        rows.push(DickeRow {
            k,
            closed,
            numeric,
            abs_diff: (closed - numeric).abs(),
        });
    }
    let body = match config.output_format {
        OutputFormat::Csv => {
            let mut out = String::from("k,E_closed,E_numeric,abs_diff\n");
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    row.k,
                    fmt12(row.closed),
                    fmt12(row.numeric),
                    fmt12(row.abs_diff)
                );
            }
            out
        }
        _ => json_report(&config_json(config, &[]), &rows)?,
    };
    write_output(config, &body)?;
    Ok(RunOutcome::default())
}

fn closedforms_command(config: &SweepConfig) -> Result<RunOutcome> {
    let mut rows = Vec::new();
    for n in 2..=config.n {
        let k = n / 2;
        rows.push(ClosedFormsRow {
            n,
            ghz: ghz_entanglement(n),
            w: w_entanglement(n),
            dicke_k: k,
            dicke_e: dicke_entanglement(DickeSpec::new(n, k)?),
        });
    }
    let body = match config.output_format {
        OutputFormat::Csv => {
            let mut out = String::from("n,ghz,w,dicke_k,dicke_E\n");
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.n,
                    fmt12(row.ghz),
                    fmt12(row.w),
                    row.dicke_k,
                    fmt12(row.dicke_e)
                );
            }
            out
        }
        _ => json_report(&config_json(config, &[]), &rows)?,
    };
    write_output(config, &body)?;
    Ok(RunOutcome::default())
}

fn validate_command(config: &SweepConfig) -> Result<RunOutcome> {
    let mut rows: Vec<ValidateRow> = Vec::new();
    let mut push = |check: String, passed: bool, detail: String| {
        rows.push(ValidateRow {
            check,
            passed,
            detail,
        });
    };

    // Oracle #1: dense simulation vs the two-amplitude model, any marked set.
    for m in 1..=config.max_m.min((1 << config.n) - 1) {
        let marked: Vec<u64> = (0..m).collect();
        let instance =
            GroverInstance::new(config.n, marked.iter().copied(), AngleConvention::ExactRotation)?;
        let mut worst_amp = 0.0f64;
        let mut worst_overlap = 0.0f64;
        let mut state = statevector::uniform_state(config.n)?;
        for r in 0..=instance.r_opt() {
            let expect = instance.subspace_state(r);
            for (i, &a) in state.amplitudes().iter().enumerate() {
                let want = if (i as u64) < m {
                    expect.amp_marked
                } else {
                    expect.amp_unmarked
                };
                worst_amp = worst_amp.max((a - want).abs());
            }
            let coeffs = OverlapCoefficients::from_instance_at(&instance, r);
            for phi in [0.3, 1.1, 1.9, 2.7] {
                let diff =
                    (statevector::dense_overlap(&state, phi) - geometric::overlap(phi, &coeffs))
                        .abs();
                worst_overlap = worst_overlap.max(diff);
            }
            state = statevector::grover_iterate(&state, &marked)?;
        }
        push(
            format!("dense-vs-subspace n={} m={m}", config.n),
            worst_amp <= 1e-12,
            format!("max amplitude deviation {}", fmt12(worst_amp)),
        );
        push(
            format!("dense-overlap-vs-symmetric n={} m={m}", config.n),
            worst_overlap <= 1e-12,
            format!("max overlap deviation {}", fmt12(worst_overlap)),
        );
    }

    // Oracle #2: shared-angle value vs unrestricted product search on the
    // permutation-closed conventions, within the nonnegative-amplitude range.
    let mut closed_sets: Vec<(String, Vec<u64>)> =
        vec![("all-zeros".into(), build_marked_set(&MarkedSpec::AllZeros, config.n, 1)?)];
    if config.max_m >= 2 {
        closed_sets.push((
            "zeros-ones".into(),
            build_marked_set(&MarkedSpec::ZerosAndOnes, config.n, 2)?,
        ));
    }
    if config.max_m >= u64::from(config.n) {
        closed_sets.push((
            "weight-one".into(),
            build_marked_set(&MarkedSpec::WeightOne, config.n, u64::from(config.n))?,
        ));
    }
    for (name, marked) in closed_sets {
        let instance =
            GroverInstance::new(config.n, marked.iter().copied(), AngleConvention::ExactRotation)?;
        let mut worst = 0.0f64;
        for r in 0..=instance.r_opt() {
            if instance.theta(r) > std::f64::consts::FRAC_PI_2 + 1e-12 {
                continue;
            }
            let gap = product_oracle::symmetric_restriction_gap(
                &instance,
                r,
                config.restarts,
                config.tol.min(1e-12),
                config.seed,
            )?;
            worst = worst.max(gap.abs());
        }
        push(
            format!("symmetric-vs-general n={} {name}", config.n),
            worst <= 1e-6,
            format!("max |gap| {}", fmt12(worst)),
        );
    }

    let failures = rows.iter().filter(|r| !r.passed).count() as u32;
    let body = match config.output_format {
        OutputFormat::Json => json_report(&config_json(config, &[]), &rows)?,
        _ => {
            let mut out = String::new();
            for row in &rows {
                let _ = writeln!(
                    out,
                    "{} {}: {}",
                    if row.passed { "PASS" } else { "FAIL" },
                    row.check,
                    row.detail
                );
            }
            let _ = writeln!(
                out,
                "{} of {} checks passed",
                rows.len() - failures as usize,
                rows.len()
            );
            out
        }
    };
    write_output(config, &body)?;
    Ok(RunOutcome {
        validation_failures: failures,
    })
}

fn json_report<T: Serialize>(config: &ConfigJson, records: &[T]) -> Result<String> {
    #[derive(Serialize)]
    struct Report<'a, T> {
        config: &'a ConfigJson,
        records: &'a [T],
    }
    let mut body = serde_json::to_string_pretty(&Report { config, records })
        .map_err(|e| Error::InfeasibleSpec(format!("json serialization failed: {e}")))?;
    body.push('\n');
    Ok(body)
}

/// Static line plot of the entanglement and concurrence series; the numeric
/// rows ride along as XML comments so the plot is self-describing.
fn curve_svg(config: &SweepConfig, marked: &[u64], rows: &[CurveRow]) -> String {
    const W: f64 = 720.0;
    const H: f64 = 480.0;
    const L: f64 = 64.0;
    const R: f64 = 24.0;
    const T: f64 = 40.0;
    const B: f64 = 52.0;

    let r_max = rows.last().map_or(1.0, |row| f64::from(row.r)).max(1.0);
    let y_max = rows
        .iter()
        .flat_map(|row| [row.e, row.concurrence])
        .fold(0.0f64, f64::max)
        .max(1e-6)
        * 1.08;
    let x = |r: f64| L + (W - L - R) * r / r_max;
    let y = |v: f64| H - B - (H - B - T) * v / y_max;

    let poly = |pick: &dyn Fn(&CurveRow) -> f64| -> String {
        rows.iter()
            .map(|row| format!("{:.3},{:.3}", x(f64::from(row.r)), y(pick(row))))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(
        svg,
        "<!-- entanglement sweep: n={} m={} marked={:?} angle={} -->",
        config.n,
        config.m,
        marked,
        config.convention_name()
    );
    let _ = writeln!(svg, "<!-- columns: r,E,concurrence -->");
    for row in rows {
        let _ = writeln!(
            svg,
            "<!-- {},{},{} -->",
            row.r,
            fmt12(row.e),
            fmt12(row.concurrence)
        );
    }
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="24" font-family="monospace" font-size="14">entanglement across iterations: n={} m={} ({})</text>"#,
        L,
        config.n,
        config.m,
        config.convention_name()
    );
    // Axes.
    let _ = writeln!(
        svg,
        r#"<line x1="{L}" y1="{T}" x2="{L}" y2="{:.1}" stroke="black"/>"#,
        H - B
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{L}" y1="{:.1}" x2="{:.1}" y2="{:.1}" stroke="black"/>"#,
        H - B,
        W - R,
        H - B
    );
    // Y ticks.
    for i in 0..=4 {
        let v = y_max * f64::from(i) / 4.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{:.3}" x2="{L}" y2="{:.3}" stroke="black"/>"#,
            L - 4.0,
            y(v),
            y(v)
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.3}" font-family="monospace" font-size="11" text-anchor="end">{:.3}</text>"#,
            L - 7.0,
            y(v) + 4.0,
            v
        );
    }
    // X ticks at integer iterations, thinned for long runs.
    let stride = ((r_max / 16.0).ceil() as u32).max(1);
    for row in rows.iter().step_by(stride as usize) {
        let xr = x(f64::from(row.r));
        let _ = writeln!(
            svg,
            r#"<line x1="{xr:.3}" y1="{:.1}" x2="{xr:.3}" y2="{:.1}" stroke="black"/>"#,
            H - B,
            H - B + 4.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{xr:.3}" y="{:.1}" font-family="monospace" font-size="11" text-anchor="middle">{}</text>"#,
            H - B + 18.0,
            row.r
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" font-family="monospace" font-size="12" text-anchor="middle">iteration r</text>"#,
        (L + W - R) / 2.0,
        H - 14.0
    );
    let _ = writeln!(
        svg,
        r##"<polyline points="{}" fill="none" stroke="#1f77b4" stroke-width="2"/>"##,
        poly(&|row| row.e)
    );
    let _ = writeln!(
        svg,
        r##"<polyline points="{}" fill="none" stroke="#d62728" stroke-width="2" stroke-dasharray="6 3"/>"##,
        poly(&|row| row.concurrence)
    );
    let _ = writeln!(
        svg,
        r##"<text x="{:.1}" y="{:.1}" font-family="monospace" font-size="12" fill="#1f77b4">E</text>"##,
        W - R - 130.0,
        T + 16.0
    );
    let _ = writeln!(
        svg,
        r##"<text x="{:.1}" y="{:.1}" font-family="monospace" font-size="12" fill="#d62728">concurrence</text>"##,
        W - R - 130.0,
        T + 34.0
    );
    svg.push_str("</svg>\n");
    svg
}

fn write_output(config: &SweepConfig, body: &str) -> Result<()> {
    match &config.output_path {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            file.write_all(body.as_bytes())?;
            Ok(())
        }
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}
