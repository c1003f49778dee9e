//! `gnomon` command line: construction, counting, enumeration, verification,
//! classical families and SVG rendering.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

pub mod commands;
pub mod record;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gnomon::{BigUint, Stage};
use num_rational::Ratio;
use num_traits::Zero;

pub use commands::{
    cmd_count, cmd_enumerate, cmd_families, cmd_render, cmd_triples, cmd_verify, Bound, CliError,
    Family, RenderRequest, VerifyReport,
};
pub use record::{Format, OutputRecord, RecordWriter};

#[derive(Debug, Parser)]
#[command(
    name = "gnomon",
    version,
    about = "Primitive Pythagorean triples from the generating square"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row per partition of an even side.
    Triples {
        #[arg(long, value_parser = parse_natural)]
        s: BigUint,
    },
    /// Number of partitions of an even side, 2^r.
    Count {
        #[arg(long, value_parser = parse_natural)]
        s: BigUint,
    },
    /// Stream every row up to a side or hypotenuse bound.
    #[command(group = clap::ArgGroup::new("bound").required(true).args(["max_s", "max_z"]))]
    Enumerate {
        #[arg(long, value_parser = parse_natural)]
        max_s: Option<BigUint>,
        #[arg(long, value_parser = parse_natural)]
        max_z: Option<BigUint>,
    },
    /// Check the construction against brute force and Euclid's formulas.
    Verify {
        #[arg(long, value_parser = parse_natural)]
        max_z: BigUint,
    },
    /// Classical generators.
    Families {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long, value_parser = parse_natural)]
        k: Option<BigUint>,
        #[arg(long, value_parser = parse_natural)]
        m: Option<BigUint>,
        #[arg(long, value_parser = parse_natural)]
        n: Option<BigUint>,
    },
    /// Draw one partition as SVG.
    Render {
        #[arg(long, value_parser = parse_natural)]
        s: BigUint,
        #[arg(long, value_parser = parse_natural)]
        index: BigUint,
        #[arg(long, value_enum)]
        stage: StageArg,
        /// Output path, or `-` for standard output.
        #[arg(long)]
        out: PathBuf,
        /// Drawing units per integer unit, e.g. `10` or `1/4`.
        #[arg(long, value_parser = parse_scale, default_value = "10")]
        scale: Ratio<BigUint>,
        #[arg(long)]
        no_labels: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Pythagoras,
    Plato,
    Euclid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum StageArg {
    SquareSequence,
    GnomonT,
    GnomonU,
}

impl From<StageArg> for Stage {
    fn from(s: StageArg) -> Self {
        match s {
            StageArg::SquareSequence => Stage::SquareSequence,
            StageArg::GnomonT => Stage::GnomonT,
            StageArg::GnomonU => Stage::GnomonU,
        }
    }
}

/// Non-negative integer of any size; `a^b` is accepted for powers.
pub fn parse_natural(text: &str) -> Result<BigUint, String> {
    let text = text.trim().replace('_', "");
    let parse = |t: &str| {
        t.parse::<BigUint>()
            .map_err(|_| format!("{t:?} is not a non-negative integer"))
    };
    match text.split_once('^') {
        Some((base, exp)) => {
            let exp: usize = exp.parse().map_err(|_| format!("bad exponent {exp:?}"))?;
            Ok(num_traits::pow(parse(base)?, exp))
        }
        None => parse(&text),
    }
}

fn parse_scale(text: &str) -> Result<Ratio<BigUint>, String> {
    let scale = match text.split_once('/') {
        Some((n, d)) => {
            let d = parse_natural(d)?;
            if d.is_zero() {
                return Err("scale denominator must be positive".into());
            }
            Ratio::new(parse_natural(n)?, d)
        }
        None => Ratio::from_integer(parse_natural(text)?),
    };
    if scale.is_zero() {
        return Err("scale must be positive".into());
    }
    Ok(scale)
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let code = e.exit_code();
            if code != 0 {
                let _ = writeln!(stderr, "error: {e}");
            }
            code
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Triples { s } => {
            let records = cmd_triples(&s)?;
            write_records(stdout, format, &records)?;
        }
        Command::Count { s } => {
            let count = cmd_count(&s)?;
            match format {
                Format::Table => writeln!(stdout, "{count}")?,
                Format::Jsonl => writeln!(stdout, "{{\"s\":{s},\"count\":{count}}}")?,
            }
        }
        Command::Enumerate { max_s, max_z } => {
            let bound = Bound::from_flags(max_s.as_ref(), max_z.as_ref())?;
            let mut out = RecordWriter::new(&mut *stdout, format, bound.widths());
            for record in cmd_enumerate(bound) {
                out.write(&record)?;
            }
        }
        Command::Verify { max_z } => {
            let report = cmd_verify(&max_z)?;
            match format {
                Format::Table => writeln!(stdout, "{}", report.to_text())?,
                Format::Jsonl => writeln!(stdout, "{}", report.to_json())?,
            }
            return Ok(report.exit_code());
        }
        Command::Families { family, k, m, n } => {
            let missing = |flag: &str| CliError::Usage(format!("{family:?} needs --{flag}"));
            let family = match family {
                FamilyName::Pythagoras => Family::Pythagoras {
                    k: k.ok_or_else(|| missing("k"))?,
                },
                FamilyName::Plato => Family::Plato {
                    m: m.ok_or_else(|| missing("m"))?,
                },
                FamilyName::Euclid => Family::Euclid {
                    m: m.ok_or_else(|| missing("m"))?,
                    n: n.ok_or_else(|| missing("n"))?,
                },
            };
            write_records(stdout, format, &cmd_families(&family)?)?;
        }
        Command::Render {
            s,
            index,
            stage,
            out,
            scale,
            no_labels,
        } => {
            let svg = cmd_render(&RenderRequest {
                s,
                index,
                stage: stage.into(),
                scale,
                labels: !no_labels,
            })?;
            if out.as_os_str() == "-" {
                stdout.write_all(svg.as_bytes())?;
            } else {
                fs::write(&out, svg)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", out.display())))?;
            }
        }
    }
    stdout.flush()?;
    Ok(0)
}

fn write_records(
    stdout: &mut dyn Write,
    format: Format,
    records: &[OutputRecord],
) -> Result<(), CliError> {
    let mut out = RecordWriter::new(stdout, format, RecordWriter::<Vec<u8>>::widths_for(records));
    for r in records {
        out.write(r)?;
    }
    Ok(())
}
