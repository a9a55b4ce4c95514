//! Command-line front end. Exit status: 0 success, 1 validation or I/O
//! error, 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::alphabet::{load_alphabet, to_numbers, to_text, Alphabet, BUILTIN_ID};
use crate::container::{deserialize, serialize, CipherStream, MAGIC};
use crate::error::{Error, Result};
use crate::repro::repro_report;
use crate::scheme::lagrange::DEFAULT_BLOCK_SIZE;
use crate::scheme::pair_line::validate_pl;
use crate::scheme::Scheme;
use crate::stats::{max_dimension, scheme_stats};
use crate::svg::{render_svg, PlotInput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "geocipher", version, about = "Encode text as exact geometric coefficients and back")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlphabetArgs {
    /// Tab-separated "symbol<TAB>code" table; defaults to A-Z and "_" as 1..27.
    #[arg(long, value_name = "FILE")]
    alphabet: Option<PathBuf>,
    /// Identifier recorded in the container; defaults to the file stem.
    #[arg(long, value_name = "TOKEN", requires = "alphabet")]
    alphabet_id: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode a plaintext file into a container.
    Encode {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long, value_name = "G")]
        block_size: Option<usize>,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Decode the result in strict mode before writing it.
        #[arg(long)]
        strict: bool,
        #[arg(short, default_value = "-")]
        i: PathBuf,
        #[arg(short, default_value = "-")]
        o: PathBuf,
    },
    /// Decode a container back to text.
    Decode {
        #[arg(long, value_name = "FILE")]
        alphabet: Option<PathBuf>,
        /// Cross-check every recovered symbol and fail on disagreement.
        #[arg(long)]
        strict: bool,
        #[arg(short, default_value = "-")]
        i: PathBuf,
        #[arg(short, default_value = "-")]
        o: PathBuf,
    },
    /// Report why a plaintext cannot be encoded with a scheme.
    Validate {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(long, value_name = "G")]
        block_size: Option<usize>,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(short, default_value = "-")]
        i: PathBuf,
    },
    /// Record and rational counts for a plaintext length.
    Stats {
        #[arg(long, value_parser = parse_scheme)]
        scheme: Scheme,
        #[arg(short)]
        n: usize,
        #[arg(long, value_name = "G")]
        block_size: Option<usize>,
    },
    /// Largest point dimension usable for a plaintext length.
    Maxdim {
        #[arg(short)]
        n: usize,
    },
    /// Regenerate the worked-example tables and discrepancy list.
    Repro {
        #[arg(long)]
        out: PathBuf,
    },
    /// Plot a container (or a plaintext) as SVG.
    Plot {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(short)]
        i: PathBuf,
        #[arg(short)]
        o: PathBuf,
    },
}

fn parse_scheme(s: &str) -> std::result::Result<Scheme, String> {
    s.parse::<Scheme>().map_err(|_| {
        let names: Vec<&str> = Scheme::ALL.iter().map(|s| s.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

enum Failure {
    Usage(String),
    Invalid(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(Error::Io(e))
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut buf)?;
    } else {
        buf = fs::read(path).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    }
    Ok(buf)
}

fn write_output(path: &Path, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    if path.as_os_str() == "-" {
        stdout.write_all(bytes)?;
    } else {
        fs::write(path, bytes).map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

/// Plaintext file contents with one trailing line feed removed.
fn read_text(path: &Path) -> Result<String> {
    let bytes = read_input(path)?;
    let mut text = String::from_utf8(bytes).map_err(|_| Error::format("plaintext is not valid UTF-8"))?;
    if text.ends_with('\n') {
        text.pop();
    }
    Ok(text)
}

fn alphabet_from(args: &AlphabetArgs) -> Result<Alphabet> {
    let Some(path) = &args.alphabet else {
        return Ok(Alphabet::builtin());
    };
    let id = match &args.alphabet_id {
        Some(id) => id.clone(),
        None => path
            .file_stem()
            .and_then(|s| s.to_str())
            .map(str::to_owned)
            .ok_or_else(|| Error::format("cannot derive an alphabet id from the file name; pass --alphabet-id"))?,
    };
    let source = String::from_utf8(read_input(path)?).map_err(|_| Error::format("alphabet file is not valid UTF-8"))?;
    load_alphabet(&source, &id)
}

fn block_size_for(scheme: Scheme, block_size: Option<usize>) -> std::result::Result<usize, Failure> {
    match (scheme, block_size) {
        (Scheme::Lagrange, g) => Ok(g.unwrap_or(DEFAULT_BLOCK_SIZE)),
        (_, None) => Ok(DEFAULT_BLOCK_SIZE),
        (_, Some(_)) => Err(Failure::Usage(format!("--block-size applies only to the lagrange scheme, not {scheme}"))),
    }
}

fn run(command: Command, stdout: &mut dyn Write) -> std::result::Result<(), Failure> {
    match command {
        Command::Encode { scheme, block_size, alphabet, strict, i, o } => {
            let g = block_size_for(scheme, block_size)?;
            let alphabet = alphabet_from(&alphabet)?;
            let seq = to_numbers(&read_text(&i)?, &alphabet)?;
            let stream = CipherStream::encode(&seq, &alphabet, scheme, g)?;
            if strict && stream.decode(true)? != seq {
                return Err(Error::Integrity {
                    position: 0,
                    reason: "encoded stream does not decode to its plaintext".into(),
                }
                .into());
            }
            write_output(&o, &serialize(&stream), stdout)?;
        }
        Command::Decode { alphabet, strict, i, o } => {
            let stream = deserialize(&read_input(&i)?)?;
            let alphabet = match alphabet {
                Some(path) => alphabet_from(&AlphabetArgs {
                    alphabet: Some(path),
                    alphabet_id: Some(stream.alphabet_id().to_owned()),
                })?,
                None if stream.alphabet_id() == BUILTIN_ID => Alphabet::builtin(),
                None => {
                    return Err(Error::format(format!(
                        "stream uses alphabet {:?}; pass it with --alphabet",
                        stream.alphabet_id()
                    ))
                    .into());
                }
            };
            let text = to_text(&stream.decode(strict)?, &alphabet)?;
            write_output(&o, format!("{text}\n").as_bytes(), stdout)?;
        }
        Command::Validate { scheme, block_size, alphabet, i } => {
            let g = block_size_for(scheme, block_size)?;
            let alphabet = alphabet_from(&alphabet)?;
            let seq = to_numbers(&read_text(&i)?, &alphabet)?;
            if scheme == Scheme::PairLine {
                let report = validate_pl(&seq, alphabet.interval_code());
                for issue in &report.issues {
                    writeln!(stdout, "{issue}")?;
                }
                if let Some(first) = report.issues.into_iter().next() {
                    return Err(first.into_error().into());
                }
            } else {
                CipherStream::encode(&seq, &alphabet, scheme, g)?;
            }
            writeln!(stdout, "ok")?;
        }
        Command::Stats { scheme, n, block_size } => {
            let g = block_size_for(scheme, block_size)?;
            let stats = scheme_stats(scheme, n, Some(g))?;
            writeln!(stdout, "scheme {scheme}")?;
            if scheme == Scheme::Lagrange {
                writeln!(stdout, "block_size {g}")?;
            }
            writeln!(stdout, "symbols {n}")?;
            writeln!(stdout, "records {}", stats.records)?;
            writeln!(stdout, "rationals {}", stats.rationals)?;
            writeln!(stdout, "expansion {}", stats.expansion)?;
        }
        Command::Maxdim { n } => {
            writeln!(stdout, "{}", max_dimension(n)?)?;
        }
        Command::Repro { out } => {
            for path in repro_report(&out)? {
                writeln!(stdout, "{}", path.display())?;
            }
        }
        Command::Plot { alphabet, i, o } => {
            let bytes = read_input(&i)?;
            let svg = if bytes.starts_with(format!("{MAGIC} ").as_bytes()) {
                render_svg(PlotInput::Stream(&deserialize(&bytes)?))?
            } else {
                let alphabet = alphabet_from(&alphabet)?;
                let mut text = String::from_utf8(bytes).map_err(|_| Error::format("plaintext is not valid UTF-8"))?;
                if text.ends_with('\n') {
                    text.pop();
                }
                render_svg(PlotInput::Plain(&to_numbers(&text, &alphabet)?))?
            };
            write_output(&o, svg.as_bytes(), stdout)?;
        }
    }
    Ok(())
}

/// Runs the CLI with explicit output streams.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match run(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "geocipher: usage: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(stderr, "geocipher: {}: {e}", e.kind());
            EXIT_INVALID
        }
    }
}

pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
