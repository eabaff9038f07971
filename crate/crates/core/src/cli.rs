//! The `fq` command line.
//!
//! Exit status: 0 on success, 1 when a scale fails validation or a command
//! fails (I/O, malformed input, `verify` over tolerance), 2 on usage errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::audio::{render_scale, RenderConfig};
use crate::error::Error;
use crate::export::{read_scale_descriptor, write_frequency_csv, write_scl};
use crate::oracle::{differential_sweep, SINGLE_PRECISION_TOLERANCE};
use crate::pitch::{scale_frequencies, DEFAULT_BASE_FREQUENCY};
use crate::quantizer::{Calibration, Precision, QuantizerConfig};
use crate::scale::{FamilyKind, ScaleFamily, ScaleSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fq", version, about = "Functionally quantized scales: quantize, tabulate, export, audition")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the bundled scale families and their generator functions.
    List,
    /// Check a scale against the f(0)=1, f(1)=2, strictly increasing contract.
    Validate(ScaleArgs),
    /// Write a CSV frequency table.
    Table {
        #[command(flatten)]
        scale: ScaleArgs,
        #[command(flatten)]
        octaves: OctaveArgs,
        #[arg(long, default_value_t = DEFAULT_BASE_FREQUENCY)]
        base_freq: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quantize a CSV voltage trace (`time,voltage` or one voltage per line).
    Quantize {
        #[command(flatten)]
        scale: ScaleArgs,
        #[command(flatten)]
        quant: QuantArgs,
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a Scala .scl tuning file.
    Scl {
        #[command(flatten)]
        scale: ScaleArgs,
        #[arg(long)]
        description: Option<String>,
        /// Omit the tool-name comment line.
        #[arg(long)]
        no_banner: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the scale as a sine-tone WAV file.
    Render {
        #[command(flatten)]
        scale: ScaleArgs,
        #[command(flatten)]
        octaves: OctaveArgs,
        #[arg(long, default_value_t = DEFAULT_BASE_FREQUENCY)]
        base_freq: f64,
        /// Seconds per note.
        #[arg(long, default_value_t = 0.5)]
        note_duration: f64,
        #[arg(long, default_value_t = 44_100)]
        sample_rate: u32,
        #[arg(long, default_value_t = 0.5)]
        amplitude: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare single-precision quantization against the double-precision reference.
    Verify {
        #[command(flatten)]
        scale: ScaleArgs,
        #[command(flatten)]
        quant: QuantArgs,
        /// Voltage range as `lo:hi`.
        #[arg(long, default_value = "0:10", value_parser = parse_range, allow_hyphen_values = true)]
        range: (f64, f64),
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = SINGLE_PRECISION_TOLERANCE)]
        tolerance: f64,
    },
}

#[derive(Debug, Args)]
struct ScaleArgs {
    /// Bundled family name (see `fq list`).
    #[arg(long, required_unless_present = "descriptor", conflicts_with = "descriptor")]
    scale: Option<String>,
    /// JSON scale descriptor file.
    #[arg(long, conflicts_with_all = ["tones", "param"])]
    descriptor: Option<PathBuf>,
    /// Tones per octave.
    #[arg(long)]
    tones: Option<u32>,
    /// Family parameter, as `a=<value>`.
    #[arg(long, value_parser = parse_param)]
    param: Option<f64>,
}

#[derive(Debug, Args)]
struct QuantArgs {
    /// Volts per octave.
    #[arg(long, env = "FQ_DEFAULT_VREF", default_value_t = 1.0)]
    vref: f64,
    #[arg(long, default_value = "double", value_parser = parse_precision)]
    precision: Precision,
}

#[derive(Debug, Args)]
struct OctaveArgs {
    /// Number of octaves.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    octaves: u32,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    first_octave: i32,
}

impl OctaveArgs {
    fn range(&self) -> std::ops::RangeInclusive<i32> {
        self.first_octave..=self.first_octave + self.octaves as i32 - 1
    }
}

fn parse_param(s: &str) -> Result<f64, String> {
    let value = s
        .strip_prefix("a=")
        .ok_or_else(|| format!("expected `a=<value>`, got `{s}`"))?;
    value.parse().map_err(|_| format!("`{value}` is not a number"))
}

fn parse_precision(s: &str) -> Result<Precision, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected `lo:hi`, got `{s}`"))?;
    let lo: f64 = lo.trim().parse().map_err(|_| format!("bad range start `{lo}`"))?;
    let hi: f64 = hi.trim().parse().map_err(|_| format!("bad range end `{hi}`"))?;
    Ok((lo, hi))
}

enum Failure {
    Usage(String),
    Failed(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Failed(e)
    }
}

type CliResult<T> = Result<T, Failure>;

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> Failure + '_ {
    move |source| {
        Failure::Failed(Error::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

impl ScaleArgs {
    fn spec(&self) -> CliResult<ScaleSpec> {
        if let Some(path) = &self.descriptor {
            let text = std::fs::read_to_string(path).map_err(io_error(path))?;
            return read_scale_descriptor(&text).map_err(|e| match e {
                Error::DescriptorParse(msg) => Failure::Failed(Error::DescriptorParse(format!(
                    "{}: {msg}",
                    path.display()
                ))),
                other => Failure::Failed(other),
            });
        }
        let name = self.scale.as_deref().expect("clap enforces a scale source");
        let kind: FamilyKind = name.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
        if kind == FamilyKind::Custom {
            return Err(Failure::Usage("custom scales need --descriptor".into()));
        }
        match (kind.takes_parameter(), self.param) {
            (true, None) => {
                return Err(Failure::Usage(format!(
                    "--param a=<value> is required for `{}`",
                    kind.name()
                )))
            }
            (false, Some(_)) => {
                return Err(Failure::Usage(format!("`{}` takes no --param", kind.name())))
            }
            _ => {}
        }
        let family = ScaleFamily::from_name(kind.name(), self.param)?;
        let spec = ScaleSpec::new(family, self.tones.unwrap_or(12))?;
        Ok(spec)
    }
}

impl QuantArgs {
    fn config(&self, spec: ScaleSpec) -> CliResult<QuantizerConfig> {
        let calibration = Calibration::new(self.vref).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(QuantizerConfig::new(spec, calibration, self.precision)?)
    }
}

/// Runs `fq` with `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Failed(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::List => {
            for kind in FamilyKind::BUNDLED {
                let param = if kind.takes_parameter() { "  (requires --param a=<value>)" } else { "" };
                writeln!(stdout, "{:<18} {}{param}", kind.name(), kind.formula()).map_err(stdout_error)?;
            }
            Ok(EXIT_OK)
        }
        Command::Validate(scale) => {
            let spec = scale.spec()?;
            let report = spec.validate();
            let mut text = format!(
                "scale: {spec}\nformula: {}\nboundary residual: {:e}\n",
                spec.family().formula(),
                report.boundary_residual
            );
            for v in &report.violations {
                text.push_str(&format!("violation: {v}\n"));
            }
            let (status, code) = if report.is_valid() {
                ("valid", EXIT_OK)
            } else {
                ("invalid", EXIT_FAILURE)
            };
            text.push_str(&format!("status: {status}\n"));
            stdout.write_all(text.as_bytes()).map_err(stdout_error)?;
            Ok(code)
        }
        Command::Table {
            scale,
            octaves,
            base_freq,
            out,
        } => {
            let spec = scale.spec()?;
            if !(base_freq.is_finite() && base_freq > 0.0) {
                return Err(Failure::Usage(format!("--base-freq must be positive, got {base_freq}")));
            }
            let table = scale_frequencies(&spec, base_freq, octaves.range())?;
            emit(out.as_deref(), write_frequency_csv(&table).as_bytes(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Quantize {
            scale,
            quant,
            input,
            out,
        } => {
            let config = quant.config(scale.spec()?)?;
            let reader: Box<dyn BufRead + '_> = match &input {
                Some(path) => Box::new(BufReader::new(File::open(path).map_err(io_error(path))?)),
                None => Box::new(BufReader::new(stdin)),
            };
            let source = input.as_deref().unwrap_or(Path::new("<stdin>"));
            match &out {
                Some(path) => {
                    let file = File::create(path).map_err(io_error(path))?;
                    let mut w = BufWriter::new(file);
                    quantize_stream(&config, reader, &mut w, source)?;
                    w.flush().map_err(io_error(path))?;
                }
                None => {
                    let mut w = BufWriter::new(stdout);
                    quantize_stream(&config, reader, &mut w, source)?;
                    w.flush().map_err(stdout_error)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Scl {
            scale,
            description,
            no_banner,
            out,
        } => {
            let spec = scale.spec()?;
            let description = description.unwrap_or_else(|| default_description(&spec));
            let text = write_scl(&spec, &description, !no_banner)?;
            emit(out.as_deref(), text.as_bytes(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Render {
            scale,
            octaves,
            base_freq,
            note_duration,
            sample_rate,
            amplitude,
            out,
        } => {
            let spec = scale.spec()?;
            let cfg = RenderConfig {
                sample_rate,
                note_duration,
                amplitude,
            };
            cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            if !(base_freq.is_finite() && base_freq > 0.0) {
                return Err(Failure::Usage(format!("--base-freq must be positive, got {base_freq}")));
            }
            let wav = render_scale(&spec, base_freq, octaves.range(), &cfg)?;
            std::fs::write(&out, wav).map_err(io_error(&out))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            scale,
            quant,
            range: (lo, hi),
            samples,
            tolerance,
        } => {
            let config = quant.config(scale.spec()?)?;
            let report = differential_sweep(&config, lo, hi, samples).map_err(|e| Failure::Usage(e.to_string()))?;
            let pass = report.within(tolerance);
            writeln!(
                stdout,
                "scale: {}\nv_ref: {}\nrange: {lo}:{hi}\nsamples_tested: {}\nsamples_excluded: {}\nmax_abs_error: {:e}\nargmax_input: {}\ntolerance: {:e}\nstatus: {}",
                config.spec(),
                config.calibration().v_ref(),
                report.samples_tested,
                report.samples_excluded,
                report.max_abs_error,
                report.argmax_input,
                tolerance,
                if pass { "pass" } else { "fail" },
            )
            .map_err(stdout_error)?;
            Ok(if pass { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

fn default_description(spec: &ScaleSpec) -> String {
    format!(
        "{} scale, {} tones per octave: {}",
        spec.family(),
        spec.tones_per_octave(),
        spec.family().formula()
    )
}

fn stdout_error(source: io::Error) -> Failure {
    io_error(Path::new("<stdout>"))(source)
}

fn emit(out: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(io_error(path)),
        None => stdout.write_all(bytes).map_err(stdout_error),
    }
}

/// Quantizes a CSV trace record by record, so memory does not grow with the
/// input. Each line is either `time,voltage` or a bare voltage; the output
/// keeps the shape of the input line. A non-numeric first line is treated as
/// a header and passed through.
fn quantize_stream(
    config: &QuantizerConfig,
    input: impl Read,
    out: &mut impl Write,
    source: &Path,
) -> CliResult<()> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(input);
    let bad = |line: u64, message: String| {
        Failure::Failed(Error::InvalidTrace(format!("{}:{line}: {message}", source.display())))
    };
    let write_err = |e: io::Error| stdout_error(e);

    let mut record = csv::StringRecord::new();
    let mut previous_time: Option<f64> = None;
    let mut first = true;
    loop {
        match reader.read_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                return Err(bad(line, e.to_string()));
            }
        }
        let line = record.position().map_or(0, |p| p.line());
        let is_first = std::mem::replace(&mut first, false);
        match record.len() {
            1 => {
                let Ok(v) = record[0].parse::<f64>() else {
                    if is_first {
                        writeln!(out, "{}", &record[0]).map_err(write_err)?;
                        continue;
                    }
                    return Err(bad(line, format!("`{}` is not a voltage", &record[0])));
                };
                let q = quantize_line(config, v).map_err(|e| bad(line, e))?;
                writeln!(out, "{q:.6}").map_err(write_err)?;
            }
            2 => {
                let (t, v) = (record[0].parse::<f64>(), record[1].parse::<f64>());
                let (Ok(t), Ok(v)) = (t, v) else {
                    if is_first {
                        writeln!(out, "{},{}", &record[0], &record[1]).map_err(write_err)?;
                        continue;
                    }
                    return Err(bad(line, format!("`{},{}` is not a time,voltage pair", &record[0], &record[1])));
                };
                if !t.is_finite() || previous_time.is_some_and(|p| !(t > p)) {
                    return Err(bad(line, format!("time {t} does not increase")));
                }
                previous_time = Some(t);
                let q = quantize_line(config, v).map_err(|e| bad(line, e))?;
                writeln!(out, "{},{q:.6}", &record[0]).map_err(write_err)?;
            }
            n => return Err(bad(line, format!("expected 1 or 2 columns, got {n}"))),
        }
    }
    Ok(())
}

fn quantize_line(config: &QuantizerConfig, v: f64) -> Result<f64, String> {
    config.quantize(v).map_err(|e| e.to_string())
}
