//! Command-line front end: argument types and the command implementations.
//! `main.rs` only parses and maps errors to exit codes.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::cipher::{self, sample_states, superpose, EncryptionContext};
use crate::ent::{analyze, report_kv, report_table, EntReport};
use crate::error::Error;
use crate::keyschedule::{xor_randomize, KeyMaterial, MIN_KEY_LEN};
use crate::pads::PermutationPad;

pub const DEFAULT_SHOTS: usize = 20_000;
pub const DEFAULT_SEED: u64 = 0xC0FFEE;
/// Per-stage cap on sampled bytes in `demo`.
pub const DEMO_SAMPLE_CAP: usize = 1 << 20;

const EXIT_CODES: &str = "\
Exit codes:
  0   success
  1   internal error
  2   invalid command line
  10  key file shorter than 32 bytes
  11  keygen length below 32 bytes
  12  I/O error
  13  not a QPPS file (bad magic)
  14  unsupported QPPS version
  15  truncated QPPS file
  16  trailing bytes after QPPS payload
  17  invalid pad_bits in QPPS header
  18  QPPS state not normalized
  19  decryption did not land on a basis state (wrong key or corrupted states)
  20  block count not a multiple of 4
  21  dispatch length mismatch
  22  input too short to analyze (< 6 bytes)";

#[derive(Debug, Parser)]
#[command(name = "qpp", version, about = "Quantum Permutation Pad over superposition states", after_help = EXIT_CODES)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a fresh key from the OS entropy source.
    Keygen {
        #[arg(long)]
        out: PathBuf,
        /// Key length in bytes.
        #[arg(long, default_value_t = MIN_KEY_LEN)]
        length: usize,
    },
    /// Encrypt a file to QPPS statevectors (or raw bytes in basis mode).
    Encrypt(EncryptArgs),
    /// Decrypt a QPPS file (or basis-mode ciphertext).
    Decrypt(DecryptArgs),
    /// Run the randomness battery on a file.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Encrypt a file and compare randomness at every stage.
    Demo(DemoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Superposition,
    Basis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Kv,
}

#[derive(Debug, Clone, Args)]
pub struct SamplingArgs {
    /// Measurements per ciphertext state.
    #[arg(long, default_value_t = DEFAULT_SHOTS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub shots: u64,
    /// Shot sampling seed, hex.
    #[arg(long, env = "QPP_SEED", default_value = "C0FFEE", value_parser = parse_hex_seed)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct EncryptArgs {
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Superposition)]
    pub mode: Mode,
    /// Also write sampled measurement bits of the ciphertext states here.
    #[arg(long)]
    pub emit_samples: Option<PathBuf>,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DecryptArgs {
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Superposition)]
    pub mode: Mode,
}

#[derive(Debug, Clone, Args)]
pub struct DemoArgs {
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub report: ReportFormat,
    #[command(flatten)]
    pub sampling: SamplingArgs,
}

pub fn parse_hex_seed(s: &str) -> Result<u64, String> {
    let digits = s.trim().trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|e| format!("invalid hex seed {s:?}: {e}"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Qpp(#[from] Error),
    #[error("key length {0} is below the {MIN_KEY_LEN}-byte minimum")]
    LengthTooSmall(usize),
    #[error("{0}")]
    InvalidArgs(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Qpp(Error::Io(e))
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidArgs(_) => 2,
            CliError::LengthTooSmall(_) => 11,
            CliError::Qpp(e) => match e {
                Error::KeyTooShort { .. } => 10,
                Error::Io(_) => 12,
                Error::BadMagic => 13,
                Error::BadVersion(_) => 14,
                Error::TruncatedStream { .. } => 15,
                Error::TrailingBytes(_) => 16,
                Error::BadPadBits(_) => 17,
                Error::NormViolation { .. } => 18,
                Error::NotBasisState { .. } => 19,
                Error::BadBlockCount(_) => 20,
                Error::DispatchMismatch { .. } => 21,
                Error::InputTooShort { .. } => 22,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Writes through a temp file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn read_input(path: &Path) -> CliResult<Vec<u8>> {
    Ok(std::fs::read(path)?)
}

/// Writes `length` OS-random bytes to `out`; returns the pad fingerprint.
pub fn cmd_keygen(length: usize, out: &Path) -> CliResult<u64> {
    if length < MIN_KEY_LEN {
        return Err(CliError::LengthTooSmall(length));
    }
    let mut bytes = vec![0u8; length];
    getrandom::fill(&mut bytes)
        .map_err(|e| std::io::Error::other(format!("OS entropy source: {e}")))?;
    let key = KeyMaterial::new(bytes)?;
    write_atomic(out, key.as_bytes())?;
    Ok(PermutationPad::build(&key).fingerprint())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncryptSummary {
    pub blocks: usize,
    pub bytes_written: usize,
    pub sample_bytes: Option<usize>,
    pub fingerprint: u64,
}

pub fn cmd_encrypt(args: &EncryptArgs) -> CliResult<EncryptSummary> {
    let key = KeyMaterial::from_file(&args.key)?;
    let plaintext = read_input(&args.input)?;
    let ctx = EncryptionContext::for_message(&key, plaintext.len());
    let fingerprint = ctx.pad().fingerprint();
    match args.mode {
        Mode::Basis => {
            if args.emit_samples.is_some() {
                return Err(CliError::InvalidArgs(
                    "--emit-samples needs superposition mode".into(),
                ));
            }
            let ct = ctx.encrypt_basis(&plaintext)?;
            write_atomic(&args.out, &ct)?;
            Ok(EncryptSummary {
                blocks: 4 * plaintext.len(),
                bytes_written: ct.len(),
                sample_bytes: None,
                fingerprint,
            })
        }
        Mode::Superposition => {
            let cs = ctx.encrypt(&plaintext)?;
            let bytes = cipher::serialize(&cs);
            write_atomic(&args.out, &bytes)?;
            let sample_bytes = match &args.emit_samples {
                Some(path) => {
                    let samples = sample_states(&cs, args.sampling.shots as usize, args.sampling.seed);
                    write_atomic(path, &samples)?;
                    Some(samples.len())
                }
                None => None,
            };
            Ok(EncryptSummary {
                blocks: cs.block_count(),
                bytes_written: bytes.len(),
                sample_bytes,
                fingerprint,
            })
        }
    }
}

/// Returns the number of plaintext bytes written.
pub fn cmd_decrypt(args: &DecryptArgs) -> CliResult<usize> {
    let key = KeyMaterial::from_file(&args.key)?;
    let input = read_input(&args.input)?;
    let plaintext = match args.mode {
        Mode::Basis => cipher::decrypt_basis(&key, &input)?,
        Mode::Superposition => cipher::decrypt(&key, &cipher::deserialize(&input)?)?,
    };
    write_atomic(&args.out, &plaintext)?;
    Ok(plaintext.len())
}

pub fn cmd_analyze(input: &Path, format: ReportFormat) -> CliResult<String> {
    let report = analyze(&read_input(input)?)?;
    Ok(match format {
        ReportFormat::Text => report_table(&[("Data", report)]),
        ReportFormat::Kv => report_kv(&[("", report)]),
    })
}

/// Every staged buffer of the demo and its statistics.
#[derive(Debug, Clone)]
pub struct DemoReport {
    pub shots_per_state: usize,
    pub stages: Vec<(&'static str, EntReport)>,
}

impl DemoReport {
    pub fn stage(&self, name: &str) -> Option<&EntReport> {
        self.stages.iter().find(|(n, _)| *n == name).map(|(_, r)| r)
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => format!(
                "shots per state: {} (adversary column: 1)\n{}",
                self.shots_per_state,
                report_table(&self.stages)
            ),
            ReportFormat::Kv => {
                let keyed: Vec<_> = self.stages.iter().map(|&(n, r)| (stage_key(n), r)).collect();
                format!("shots_per_state={}\n{}", self.shots_per_state, report_kv(&keyed))
            }
        }
    }
}

pub const STAGE_ORIGINAL: &str = "Original plaintext";
pub const STAGE_RANDOMIZED: &str = "Randomized plaintext";
pub const STAGE_SUPERPOSITION: &str = "Superposition states";
pub const STAGE_CIPHERTEXT: &str = "Ciphertext";
pub const STAGE_ADVERSARY: &str = "Ciphertext after Ĥ†";

/// Short key used for a stage in `kv` reports.
pub fn stage_key(stage: &str) -> &str {
    match stage {
        STAGE_ORIGINAL => "original",
        STAGE_RANDOMIZED => "randomized",
        STAGE_SUPERPOSITION => "superposition",
        STAGE_CIPHERTEXT => "ciphertext",
        STAGE_ADVERSARY => "adversary",
        other => other,
    }
}

/// Shots per state so one sampled stage stays within [`DEMO_SAMPLE_CAP`] bytes.
pub fn demo_shots(requested: usize, blocks: usize) -> usize {
    if blocks == 0 {
        return requested.max(1);
    }
    requested.min((4 * DEMO_SAMPLE_CAP / blocks).max(1)).max(1)
}

/// Analyzes the plaintext at each stage of encryption. The adversary column
/// applies Ĥ† to each ciphertext state and measures it once.
pub fn run_demo(key: &KeyMaterial, plaintext: &[u8], shots: usize, seed: u64) -> CliResult<DemoReport> {
    let cs = cipher::encrypt(key, plaintext)?;
    let shots = demo_shots(shots, cs.block_count());
    let stages = vec![
        (STAGE_ORIGINAL, analyze(plaintext)?),
        (STAGE_RANDOMIZED, analyze(&xor_randomize(plaintext, key))?),
        (
            STAGE_SUPERPOSITION,
            analyze(&sample_states(&superpose(key, plaintext), shots, seed))?,
        ),
        (STAGE_CIPHERTEXT, analyze(&sample_states(&cs, shots, seed))?),
        (
            STAGE_ADVERSARY,
            analyze(&sample_states(&cs.adversary_view(), 1, seed))?,
        ),
    ];
    Ok(DemoReport {
        shots_per_state: shots,
        stages,
    })
}

pub fn cmd_demo(args: &DemoArgs) -> CliResult<String> {
    let key = KeyMaterial::from_file(&args.key)?;
    let plaintext = read_input(&args.input)?;
    let report = run_demo(&key, &plaintext, args.sampling.shots as usize, args.sampling.seed)?;
    let text = report.render(args.report);
    if let Some(out) = &args.out {
        write_atomic(out, text.as_bytes())?;
    }
    Ok(text)
}
