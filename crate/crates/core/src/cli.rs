//! The `freebraid` command line.
//!
//! Exit codes: 0 on success, 1 for domain or validation failures
//! (genericity, realisability, adjacency, census violations), 2 for parse
//! and usage errors.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::geometry::{
    compile_checked, embed_at_infinity, full_twist_program, pure_braid_generator_program,
    GeometryError, MoveProgram,
};
use crate::group::{bounded_equal, generator_parity, EqualityVerdict, GWord, GroupError};
use crate::index::{
    classify_word, project_once, relation_census, stable_projection, IndexError, Lemma,
};
use crate::reconstruction::{annular_invariants, reconstruct_axis, ReconstructionError};

#[derive(Debug, Parser)]
#[command(
    name = "freebraid",
    about = "Free 3-braid groups G(n,3) and the collinearity map from pure braids"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a motion (JSON program, `-` for stdin) into its G(n,3) word.
    Compile {
        program: String,
        /// Print the event trace before the word.
        #[arg(long)]
        events: bool,
        /// Require the motion to end at its initial configuration.
        #[arg(long)]
        check_closed: bool,
        /// Expected strand count; must match the program.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Per-letter realisability table.
    Classify(WordArgs),
    /// Delete bad letters once, or until nothing changes with --stable.
    Project {
        #[arg(long)]
        stable: bool,
        #[command(flatten)]
        word: WordArgs,
    },
    /// Cylindrical braid word and annular invariants around an axis strand.
    Reconstruct {
        #[arg(long)]
        axis: usize,
        #[command(flatten)]
        word: WordArgs,
    },
    /// Bounded breadth-first equality search.
    Equal {
        #[arg(long)]
        n: usize,
        /// Maximum number of words expanded.
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        max_len: usize,
        w1: String,
        w2: String,
    },
    /// Generators occurring an odd number of times.
    Parity(WordArgs),
    /// Status census over one relation family.
    Census {
        #[arg(long)]
        lemma: Lemma,
        #[arg(long)]
        n: usize,
        /// Print only the summary line.
        #[arg(long)]
        summary_only: bool,
    },
    /// Emit a motion as JSON.
    Gen(GenArgs),
    /// Quick internal consistency checks.
    Selftest,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(long)]
    pub n: usize,
    /// Space-separated letters, or `-` for stdin.
    pub word: String,
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group = clap::ArgGroup::new("kind").required(true).args(["braid", "full_twist", "embed"]))]
pub struct GenArgs {
    /// Pure braid generator A_ij as `i,j`.
    #[arg(long, value_parser = parse_pair)]
    pub braid: Option<(usize, usize)>,
    /// Full twist with the given number of turns.
    #[arg(long, allow_negative_numbers = true)]
    pub full_twist: Option<i64>,
    /// Add a far stationary strand to a program file.
    #[arg(long)]
    pub embed: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `i,j`, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((p(a)?, p(b)?))
}

/// Error carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::DimensionMismatch { .. } | GroupError::InvalidMove(_) => {
                CliError::Domain(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::Parse(_)
            | GeometryError::InvalidN(_)
            | GeometryError::BadStrand { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<IndexError> for CliError {
    fn from(e: IndexError) -> Self {
        match e {
            IndexError::UnsupportedN { .. } | IndexError::InvalidN(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<ReconstructionError> for CliError {
    fn from(e: ReconstructionError) -> Self {
        match e {
            ReconstructionError::BadAxis { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

struct Io<'a> {
    input: &'a mut dyn Read,
    out: &'a mut dyn Write,
    stdin_used: bool,
}

impl Io<'_> {
    fn read_stdin(&mut self) -> Result<String, CliError> {
        if self.stdin_used {
            return Err(CliError::Usage(String::from(
                "standard input can be read only once",
            )));
        }
        self.stdin_used = true;
        let mut text = String::new();
        self.input
            .read_to_string(&mut text)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(text)
    }

    fn word(&mut self, text: &str, n: usize) -> Result<GWord, CliError> {
        let text = if text == "-" {
            self.read_stdin()?
        } else {
            text.to_string()
        };
        Ok(GWord::parse(&text, n)?)
    }

    fn program(&mut self, path: &str) -> Result<MoveProgram, CliError> {
        let text = if path == "-" {
            self.read_stdin()?
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))?
        };
        Ok(MoveProgram::from_json(&text)?)
    }

    fn emit(&mut self, text: &str) -> Result<(), CliError> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Domain(format!("writing output: {e}")))
    }
}

fn check_n(flag: Option<usize>, actual: usize) -> Result<(), CliError> {
    match flag {
        Some(n) if n != actual => Err(CliError::Usage(format!(
            "--n {n} does not match the program's n = {actual}"
        ))),
        _ => Ok(()),
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<(), CliError> {
    match command {
        Command::Compile {
            program,
            events,
            check_closed,
            n,
        } => {
            let p = io.program(&program)?;
            check_n(n, p.n())?;
            let out = compile_checked(&p, check_closed || p.closed)?;
            if events {
                io.emit(&out.event_trace())?;
                if out.twist_turns != 0 {
                    io.emit(&format!("twist turns {}\n", out.twist_turns))?;
                }
            }
            io.emit(&format!("{}\n", out.word))
        }
        Command::Classify(args) => {
            let w = io.word(&args.word, args.n)?;
            io.emit(&classify_word(&w).table())
        }
        Command::Project { stable, word } => {
            let w = io.word(&word.word, word.n)?;
            let projected = if stable {
                stable_projection(&w).0
            } else {
                project_once(&w)
            };
            io.emit(&format!("{projected}\n"))
        }
        Command::Reconstruct { axis, word } => {
            let w = io.word(&word.word, word.n)?;
            let cyl = reconstruct_axis(&w, axis)?;
            let inv = annular_invariants(&cyl);
            io.emit(&format!("{cyl}\n{}", inv.to_text()))
        }
        Command::Equal {
            n,
            depth,
            max_len,
            w1,
            w2,
        } => {
            let a = io.word(&w1, n)?;
            let b = io.word(&w2, n)?;
            let verdict = bounded_equal(&a, &b, depth, max_len)?;
            io.emit(&format!("{verdict}\n"))?;
            if let EqualityVerdict::Equal(path) = verdict {
                for m in path {
                    io.emit(&format!("{m}\n"))?;
                }
            }
            Ok(())
        }
        Command::Parity(args) => {
            let w = io.word(&args.word, args.n)?;
            let odd = generator_parity(&w).odd_generators();
            let text: Vec<String> = odd.iter().map(|g| g.to_string()).collect();
            io.emit(&format!("{}\n", text.join(" ")))
        }
        Command::Census {
            lemma,
            n,
            summary_only,
        } => {
            let report = relation_census(n, lemma)?;
            if summary_only {
                io.emit(&format!("{}\n", report.summary()))?;
            } else {
                io.emit(&report.table())?;
            }
            if report.violation_count() > 0 {
                return Err(CliError::Domain(format!(
                    "{} census cases violate the lemma",
                    report.violation_count()
                )));
            }
            Ok(())
        }
        Command::Gen(args) => {
            let program = if let Some((i, j)) = args.braid {
                let n = args
                    .n
                    .ok_or_else(|| CliError::Usage(String::from("--braid needs --n")))?;
                pure_braid_generator_program(n, i, j)?
            } else if let Some(m) = args.full_twist {
                let n = args
                    .n
                    .ok_or_else(|| CliError::Usage(String::from("--full-twist needs --n")))?;
                full_twist_program(n, m)?
            } else {
                let path = args.embed.expect("clap enforces one generator kind");
                let p = io.program(&path.to_string_lossy())?;
                check_n(args.n, p.n())?;
                embed_at_infinity(&p)?
            };
            io.emit(&format!("{}\n", program.to_json()))
        }
        Command::Selftest => {
            let results = crate::selftest::run_all();
            let mut failed = 0;
            for r in &results {
                io.emit(&format!(
                    "{} {}: {}\n",
                    if r.passed { "ok  " } else { "FAIL" },
                    r.name,
                    r.detail
                ))?;
                failed += usize::from(!r.passed);
            }
            if failed > 0 {
                return Err(CliError::Domain(format!("{failed} selftest checks failed")));
            }
            Ok(())
        }
    }
}

/// Runs the CLI on explicit streams and returns the exit code.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut io = Io {
        input,
        out,
        stdin_used: false,
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
