use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;

use trioct::io::{write_octonion_rows, write_scalar_rows, Format};
use trioct::paramfile::parse_params;
use trioct::scalar::{format_complex, format_real, parse_rational};
use trioct::{
    cubic_roots, direct_sum, generating_function, partial_sum_formula, seq_terms, AnyOctonion,
    Exact, OctSequenceContext, Octonion, Preset, RecurrenceParams, SuiteConfig,
};

use crate::args::{
    Command, FormatArg, OctCmd, Output, ParamCmd, ParamSource, RangeCmd, ReportArg, SumCmd,
    VerifyCmd,
};

pub enum Outcome {
    Success,
    VerificationFailed,
}

#[derive(Debug)]
pub enum CliError {
    Core(trioct::Error),
    Usage(String),
    Range(String),
    Config { path: PathBuf, message: String },
    Io { target: String, source: io::Error },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Range(m) => write!(f, "malformed range: {m}"),
            CliError::Config { path, message } => {
                write!(f, "malformed config {}: {message}", path.display())
            }
            CliError::Io { target, source } => write!(f, "cannot write {target}: {source}"),
        }
    }
}

impl From<trioct::Error> for CliError {
    fn from(e: trioct::Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Seq(cmd) => seq(cmd),
        Command::Oct(cmd) => oct(cmd),
        Command::Roots(cmd) => roots(cmd),
        Command::Genfunc(cmd) => genfunc(cmd),
        Command::Sum(cmd) => sum(cmd),
        Command::Verify(cmd) => verify(cmd),
    }
    .map(|ok| ok.unwrap_or(Outcome::Success))
}

/// Integer parameters take the integer path; anything else stays rational.
enum Params {
    Int(RecurrenceParams<BigInt>),
    Rational(RecurrenceParams<BigRational>),
}

macro_rules! with_params {
    ($params:expr, |$p:ident| $body:expr) => {
        match $params {
            Params::Int($p) => $body,
            Params::Rational($p) => $body,
        }
    };
}

enum Resolved {
    AllPresets,
    Preset(Preset),
    Custom(Box<RecurrenceParams<BigRational>>),
}

fn resolve(source: &ParamSource, allow_all: bool) -> Result<Option<Resolved>> {
    let explicit = [
        &source.r, &source.s, &source.t, &source.v0, &source.v1, &source.v2,
    ];
    let any_explicit = explicit.iter().any(|v| v.is_some());
    let given = [
        source.preset.is_some(),
        source.config.is_some(),
        any_explicit,
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given > 1 {
        return Err(CliError::Usage(
            "give exactly one of --preset, --config or the --r/--s/--t/--v0/--v1/--v2 flags".into(),
        ));
    }
    if let Some(name) = &source.preset {
        if name.eq_ignore_ascii_case("all") {
            if !allow_all {
                return Err(CliError::Usage(
                    "`--preset all` is only accepted by verify".into(),
                ));
            }
            return Ok(Some(Resolved::AllPresets));
        }
        return Ok(Some(Resolved::Preset(name.parse()?)));
    }
    if let Some(path) = &source.config {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config {
            path: path.clone(),
            message: e.to_string(),
        })?;
        let params = parse_params(&text).map_err(|e| CliError::Config {
            path: path.clone(),
            message: e.to_string(),
        })?;
        return Ok(Some(Resolved::Custom(Box::new(params))));
    }
    if any_explicit {
        const NAMES: [&str; 6] = ["r", "s", "t", "v0", "v1", "v2"];
        let mut values = Vec::with_capacity(6);
        for (name, v) in NAMES.iter().zip(explicit) {
            let text = v.as_deref().ok_or_else(|| {
                CliError::Usage(format!(
                    "missing --{name}; explicit parameters need all six flags"
                ))
            })?;
            values.push(parse_rational(text)?);
        }
        let [r, s, t, v0, v1, v2]: [BigRational; 6] = values.try_into().expect("six values");
        return Ok(Some(Resolved::Custom(Box::new(RecurrenceParams::new(
            r, s, t, v0, v1, v2,
        )))));
    }
    Ok(None)
}

fn single_params(source: &ParamSource) -> Result<Params> {
    match resolve(source, false)? {
        Some(Resolved::Preset(p)) => Ok(Params::Int(p.params())),
        Some(Resolved::Custom(p)) => Ok(narrow(*p)),
        Some(Resolved::AllPresets) => unreachable!("rejected by resolve"),
        None => Err(CliError::Usage(
            "no parameters: give --preset, --config or the --r/--s/--t/--v0/--v1/--v2 flags".into(),
        )),
    }
}

fn narrow(p: RecurrenceParams<BigRational>) -> Params {
    let all = [&p.r, &p.s, &p.t, &p.v0, &p.v1, &p.v2];
    if all.iter().all(|x| x.is_integer()) {
        let [r, s, t, v0, v1, v2] = all.map(|x| x.to_integer());
        Params::Int(RecurrenceParams::new(r, s, t, v0, v1, v2))
    } else {
        Params::Rational(p)
    }
}

fn parse_range(text: &str) -> Result<(u64, u64)> {
    let bad = |why: &str| CliError::Range(format!("`{text}` {why}"));
    let num = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| bad("needs nonnegative integers, as `A` or `A..B`"))
    };
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let a = num(text)?;
            (a, a)
        }
    };
    if a > b {
        return Err(bad("is decreasing"));
    }
    Ok((a, b))
}

fn format_of(arg: FormatArg) -> Format {
    match arg {
        FormatArg::Csv => Format::Csv,
        FormatArg::Jsonl => Format::JsonLines,
        FormatArg::Text => Format::Text,
    }
}

fn emit(output: &Output, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<()> {
    let target = output.out.as_deref().map_or_else(
        || "standard output".to_string(),
        |p| p.display().to_string(),
    );
    let wrap = |source| CliError::Io {
        target: target.clone(),
        source,
    };
    let mut sink: Box<dyn Write> = match output.out.as_deref() {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(wrap)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    body(&mut *sink).map_err(wrap)?;
    sink.flush().map_err(wrap)
}

fn to_any<T: Exact>(o: &Octonion<T>) -> AnyOctonion {
    AnyOctonion::from_scalars(o.components().clone().map(|x| x.to_scalar()))
        .expect("components share one ring")
}

fn seq(cmd: RangeCmd) -> Result<Option<Outcome>> {
    let params = single_params(&cmd.source)?;
    let (a, b) = parse_range(&cmd.n)?;
    let rows = with_params!(params, |p| {
        let terms = seq_terms(&p, b as usize + 1);
        (a..=b)
            .map(|n| (n, terms[n as usize].to_scalar()))
            .collect::<Vec<_>>()
    });
    emit(&cmd.output, |w| {
        write_scalar_rows(w, format_of(cmd.format), "V", rows)
    })?;
    Ok(None)
}

fn oct(cmd: OctCmd) -> Result<Option<Outcome>> {
    let OctCmd { range, m } = cmd;
    let params = single_params(&range.source)?;
    let (a, b) = parse_range(&range.n)?;
    let rows = with_params!(params, |p| oct_rows(p, a, b, m)?);
    emit(&range.output, |w| {
        write_octonion_rows(w, format_of(range.format), rows)
    })?;
    Ok(None)
}

fn oct_rows<T: Exact>(
    p: RecurrenceParams<T>,
    a: u64,
    b: u64,
    shift: Option<usize>,
) -> Result<Vec<(u64, AnyOctonion)>> {
    let ctx = OctSequenceContext::new(p, b as usize + shift.unwrap_or(0));
    (a..=b)
        .map(|n| match shift {
            None => Ok((n, to_any(&ctx.oct_term(n as usize)))),
            Some(m) => {
                let (_, rhs) = ctx.shift_formula(n as usize, m)?;
                Ok((n + m as u64, to_any(&rhs)))
            }
        })
        .collect()
}

fn roots(cmd: ParamCmd) -> Result<Option<Outcome>> {
    let params = single_params(&cmd.source)?;
    let roots = with_params!(params, |p| cubic_roots(&p)?);
    let lines = [
        ("alpha", format_real(roots.alpha)),
        ("omega1", format_complex(roots.omega1)),
        ("omega2", format_complex(roots.omega2)),
        ("discriminant", format_real(roots.delta_disc)),
        ("P", format_complex(roots.p)),
        ("Q", format_complex(roots.q)),
        ("R", format_complex(roots.r)),
    ];
    emit(&cmd.output, |w| {
        lines
            .iter()
            .try_for_each(|(label, value)| writeln!(w, "{label} = {value}"))
    })?;
    Ok(None)
}

fn genfunc(cmd: ParamCmd) -> Result<Option<Outcome>> {
    let params = single_params(&cmd.source)?;
    let text = with_params!(params, |p| {
        generating_function(&OctSequenceContext::new(p, 3)).to_string()
    });
    emit(&cmd.output, |w| writeln!(w, "{text}"))?;
    Ok(None)
}

fn sum(cmd: SumCmd) -> Result<Option<Outcome>> {
    let SumCmd { range, octonion } = cmd;
    let params = single_params(&range.source)?;
    let (a, b) = parse_range(&range.n)?;
    let format = format_of(range.format);
    if octonion {
        let rows = with_params!(params, |p| octonion_sums(p, a, b));
        emit(&range.output, |w| write_octonion_rows(w, format, rows))?;
    } else {
        let rows = with_params!(params, |p| scalar_sums(&p, a, b));
        emit(&range.output, |w| write_scalar_rows(w, format, "S", rows))?;
    }
    Ok(None)
}

fn scalar_sums<T: Exact>(p: &RecurrenceParams<T>, a: u64, b: u64) -> Vec<(u64, trioct::Scalar)> {
    let degenerate = p.delta().is_zero();
    if degenerate {
        eprintln!("note: r + s + t - 1 = 0, the closed form is undefined; summing directly");
    }
    (a..=b)
        .map(|n| {
            let v = if degenerate {
                direct_sum(p, n).to_scalar()
            } else {
                let q = partial_sum_formula(p, n).expect("delta is nonzero");
                narrow_scalar::<T>(q)
            };
            (n, v)
        })
        .collect()
}

/// Keeps integer parameter sets printing in the integer ring when the
/// closed form lands on an integer.
fn narrow_scalar<T: Exact>(q: BigRational) -> trioct::Scalar {
    match T::KIND {
        trioct::ScalarKind::ExactInt if q.is_integer() => trioct::Scalar::Int(q.to_integer()),
        _ => trioct::Scalar::Rational(q),
    }
}

fn octonion_sums<T: Exact>(p: RecurrenceParams<T>, a: u64, b: u64) -> Vec<(u64, AnyOctonion)> {
    let degenerate = p.delta().is_zero();
    if degenerate {
        eprintln!("note: r + s + t - 1 = 0, the closed form is undefined; summing directly");
    }
    let ctx = OctSequenceContext::new(p, b as usize);
    (a..=b)
        .map(|n| {
            let o = if degenerate {
                to_any(&ctx.direct_sum(n as usize))
            } else {
                let q = ctx.sum_octonions(n as usize).expect("delta is nonzero");
                match T::KIND {
                    trioct::ScalarKind::ExactInt
                        if q.components().iter().all(|x| x.is_integer()) =>
                    {
                        to_any(&q.map(|x| x.to_integer()))
                    }
                    _ => to_any(&q),
                }
            };
            (n, o)
        })
        .collect()
}

fn verify(cmd: VerifyCmd) -> Result<Option<Outcome>> {
    let mut config = SuiteConfig {
        n_max: cmd.n_max,
        m_max: cmd.m,
        random_sets: cmd.random,
        seed: cmd.seed,
        ..SuiteConfig::default()
    };
    match resolve(&cmd.source, true)? {
        None | Some(Resolved::AllPresets) => {}
        Some(Resolved::Preset(p)) => config.presets = vec![p],
        Some(Resolved::Custom(p)) => {
            config.presets.clear();
            config.custom = vec![*p];
        }
    }
    let report = trioct::run_suite(&config)?;
    let body = match cmd.report {
        ReportArg::Json => report.to_json(),
        ReportArg::Text => report.to_text(),
    };
    emit(&cmd.output, |w| writeln!(w, "{body}"))?;
    Ok(Some(if report.passed() {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    }))
}
