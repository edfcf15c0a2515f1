//! The `irrepcount` command line.
//!
//! Exit codes: 0 success, 1 usage/configuration/I-O error, 2 `verify` found
//! at least one violated claim (reports are still written), 3 integrality
//! fault (a formula produced a non-integer, i.e. a bug).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::census::{self, CensusConfig, CensusTable, Convention, RecordWriter};
use crate::claims::{self, ClaimId, ClaimReport, Verdict, REPORT_CSV_HEADER};
use crate::lie::{self, Family, GroupId, WeightTuple};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "irrepcount",
    version,
    about = "Dimensions and censuses of irreducible representations of simple complex Lie groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the dimension of one irreducible representation.
    ///
    /// Weights: partitions `lambda_1 >= ... >= lambda_n >= 0` for so-odd,
    /// so-even and sp; SHIFTED labels `a_i >= 1` (Dynkin label + 1, length
    /// n-1) for sl, so `--rank 3 --weight 2,1` is the defining
    /// representation of SL_3; Dynkin labels (Bourbaki order) for g2..e8.
    Dim {
        #[arg(long)]
        family: Family,
        /// `n` in SL_n, SO_{2n+1}, SO_{2n}, Sp_{2n}; optional for exceptional families.
        #[arg(long)]
        rank: Option<u64>,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Write every irreducible of dimension <= N as CSV records.
    Census {
        #[command(flatten)]
        census: CensusArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write the r_k / R_k table for k = 1..=N.
    Table {
        #[command(flatten)]
        census: CensusArgs,
        /// Build the table from a records CSV written by `census` instead of
        /// enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check claims and write reports.
    Verify {
        /// Claim id, or `all`.
        #[arg(long, default_value = "all")]
        claim: String,
        #[arg(long)]
        max_dim: u64,
        #[arg(long, default_value = "paper")]
        convention: Convention,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long)]
    max_dim: u64,
    /// Comma-separated family names (default: all nine).
    #[arg(long, value_delimiter = ',')]
    families: Option<Vec<Family>>,
    #[arg(long, default_value = "paper")]
    convention: Convention,
}

impl CensusArgs {
    fn config(&self) -> CensusConfig {
        let mut c = CensusConfig::new(self.max_dim).with_convention(self.convention);
        if let Some(f) = &self.families {
            c = c.with_families(f);
        }
        c
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    #[value(alias = "json-like-report")]
    Json,
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write + Send>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    match workers {
        None => f(),
        Some(0) => Err(Error::OutOfRange("--workers must be >= 1".into())),
        Some(k) => {
            rayon::ThreadPoolBuilder::new().num_threads(k).build().map_err(|e| Error::Io(e.to_string()))?.install(f)
        }
    }
}

fn cmd_dim(family: Family, rank: Option<u64>, weight: &str) -> Result<()> {
    let group = match (family.exceptional_rank(), rank) {
        (Some(_), None) => GroupId::exceptional(family)?,
        (_, Some(r)) => GroupId::new(family, r)?,
        (None, None) => return Err(Error::Parse(format!("--rank is required for {family}"))),
    };
    let w = WeightTuple::parse(weight)?;
    println!("{}", lie::dim(group, &w)?);
    Ok(())
}

fn cmd_census(args: &CensusArgs, out: &OutputArgs) -> Result<()> {
    let config = args.config();
    let mut w = RecordWriter::new(open_out(&out.out)?)?;
    with_workers(out.workers, || census::for_each_record(&config, |r| w.write(&r)))?;
    w.finish()
}

fn cmd_table(args: &CensusArgs, input: &Option<PathBuf>, out: &OutputArgs) -> Result<()> {
    let config = args.config();
    let table = match input {
        Some(p) => {
            let f = File::open(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            let records = census::read_records_csv(io::BufReader::new(f))?;
            CensusTable::from_records(config, &records)?
        }
        None => with_workers(out.workers, || census::census(&config))?,
    };
    let mut sink = open_out(&out.out)?;
    table.write_csv(&mut sink)?;
    sink.flush()?;
    Ok(())
}

fn write_reports(reports: &[ClaimReport], format: Format, sink: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => sink.write_all(claims::reports_to_json(reports).as_bytes())?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(REPORT_CSV_HEADER)?;
            for r in reports {
                w.write_record(r.csv_row())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Returns whether any claim was violated.
fn cmd_verify(claim: &str, n: u64, convention: Convention, format: Format, out: &OutputArgs) -> Result<bool> {
    let ids: Vec<ClaimId> = if claim.trim().eq_ignore_ascii_case("all") {
        ClaimId::ALL.to_vec()
    } else {
        claim.split(',').map(str::parse).collect::<Result<_>>()?
    };
    if n == 0 {
        return Err(Error::OutOfRange("--max-dim must be >= 1".into()));
    }
    let reports = with_workers(out.workers, || claims::verify(&ids, n, convention))?;
    let mut sink = open_out(&out.out)?;
    write_reports(&reports, format, &mut sink)?;
    sink.flush()?;
    Ok(reports.iter().any(|r| r.verdict() == Verdict::Violated))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::IntegralityFault { .. } => 3,
        _ => 1,
    }
}

/// Parse `argv` (including the program name) and run. Returns the process
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let outcome = match &cli.command {
        Command::Dim { family, rank, weight } => cmd_dim(*family, *rank, weight).map(|_| false),
        Command::Census { census, output } => cmd_census(census, output).map(|_| false),
        Command::Table { census, input, output } => cmd_table(census, input, output).map(|_| false),
        Command::Verify { claim, max_dim, convention, format, output } => {
            cmd_verify(claim, *max_dim, *convention, *format, output)
        }
    };
    match outcome {
        Ok(false) => 0,
        Ok(true) => 2,
        Err(e) => {
            eprintln!("irrepcount: {e}");
            exit_code(&e)
        }
    }
}
