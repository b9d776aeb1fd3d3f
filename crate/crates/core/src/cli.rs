//! Command-line front end. Each subcommand parses its words, calls the
//! library, and prints the result.
//!
//! Exit status: 0 for success or a true verdict, 1 for a false verdict or a
//! failed verification, 2 for usage errors (including malformed words), 3
//! when an enumeration or class-size guard is hit.
//!
//! Human-readable output prints the identity as `1`; JSON output always uses
//! the bare `a/b/A/B` string, so the identity is `""`.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::enumeration::{census, check_guard, enumerate_root_words_threaded};
use crate::error::Error;
use crate::search::{are_equivalent, minimal_class, minimize};
use crate::verify::run_verification;
use crate::word::{CyclicWord, Word};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "rootwords", version, about = "Minimal and root words in the free group F(a, b)")]
pub struct Cli {
    /// Emit JSON instead of human-readable text
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for enumeration commands; output is identical for any value
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical cyclic form of a word
    Reduce {
        word: String,
        /// Only freely reduce; keep the word linear
        #[arg(long)]
        linear: bool,
    },
    /// Whitehead-reduce a word to a minimal one, printing each step
    Minimize { word: String },
    /// Test the minimality inequality
    IsMinimal { word: String },
    /// Test the root-word equalities
    IsRoot { word: String },
    /// Decide whether two words are equivalent under Aut F2
    Equivalent { u: String, v: String },
    /// Print the class of minimal words equivalent to a word, as JSON
    Class { word: String },
    /// List root words of each length up to --max-len, as JSONL
    Roots {
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// One census record per length up to --max-len, as JSONL
    Census {
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// Run the verification suite and print a JSON report
    Verify {
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn show(w: &impl ToString) -> String {
    let s = w.to_string();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn verdict(b: bool) -> i32 {
    if b {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::LengthGuard { .. } | Error::ClassTooLarge { .. } => EXIT_GUARD,
                _ => EXIT_USAGE,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FALSE
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.json;
    let threads = cli.threads.max(1);
    match &cli.command {
        Command::Reduce { word, linear } => {
            let w = Word::parse(word)?;
            let text = if *linear { w.to_string() } else { w.cyclic_reduce().to_string() };
            if json {
                print_json(out, &json!({ "word": text, "length": text.len() }))?;
            } else {
                writeln!(out, "{}", show(&text))?;
            }
            Ok(EXIT_TRUE)
        }
        Command::Minimize { word } => {
            let (m, trace) = minimize(&CyclicWord::parse(word)?);
            if json {
                let steps: Vec<_> = trace
                    .steps
                    .iter()
                    .map(|s| json!({ "automorphism": s.automorphism.to_string(), "word": s.word, "length": s.word.len() }))
                    .collect();
                print_json(out, &json!({ "word": m, "length": m.len(), "trace": steps }))?;
            } else {
                writeln!(out, "{}", show(&m))?;
                write!(out, "{trace}")?;
            }
            Ok(EXIT_TRUE)
        }
        Command::IsMinimal { word } => {
            let w = CyclicWord::parse(word)?;
            let minimal = crate::minimality::is_minimal(&w);
            let op = if minimal { "<=" } else { ">" };
            report_counts(out, json, "minimal", &w, minimal, |p| {
                format!("|(ab)-(aB)| = {} {op} min((aa), (bb)) = min({}, {})", p.imbalance(), p.n_aa, p.n_bb)
            })?;
            Ok(verdict(minimal))
        }
        Command::IsRoot { word } => {
            let w = CyclicWord::parse(word)?;
            let root = crate::minimality::is_root(&w);
            report_counts(out, json, "root", &w, root, |p| {
                format!("|(ab)-(aB)| = {}, (aa) = {}, (bb) = {}", p.imbalance(), p.n_aa, p.n_bb)
            })?;
            Ok(verdict(root))
        }
        Command::Equivalent { u, v } => {
            let (uw, vw) = (Word::parse(u)?, Word::parse(v)?);
            let eq = are_equivalent(&uw, &vw)?;
            if json {
                print_json(out, &json!({ "u": uw, "v": vw, "equivalent": eq }))?;
            } else {
                writeln!(out, "{eq}")?;
            }
            Ok(verdict(eq))
        }
        Command::Class { word } => {
            let class = minimal_class(&CyclicWord::parse(word)?)?;
            print_json(out, &class)?;
            Ok(EXIT_TRUE)
        }
        Command::Roots { max_len } => {
            for (len, roots) in enumerate_root_words_threaded(*max_len, threads)? {
                for w in roots {
                    print_json(out, &json!({ "len": len, "word": w }))?;
                }
            }
            Ok(EXIT_TRUE)
        }
        Command::Census { max_len } => {
            for record in census(*max_len, threads)? {
                print_json(out, &record)?;
            }
            Ok(EXIT_TRUE)
        }
        Command::Verify { max_len } => {
            let report = run_verification(*max_len, threads)?;
            serde_json::to_writer_pretty(&mut *out, &report).map_err(io::Error::from)?;
            writeln!(out)?;
            if check_guard(*max_len).is_err() {
                return Ok(EXIT_GUARD);
            }
            Ok(verdict(report.passed))
        }
    }
}

fn report_counts(
    out: &mut dyn Write,
    json: bool,
    key: &str,
    w: &CyclicWord,
    value: bool,
    describe: impl Fn(&crate::word::PairCounts) -> String,
) -> io::Result<()> {
    let profile = w.profile().ok();
    if json {
        let mut obj = json!({ "word": w, key: value });
        if let Some(p) = profile {
            obj["counts"] = json!({ "aa": p.n_aa, "bb": p.n_bb, "ab": p.n_ab, "aB": p.n_a_binv });
        }
        print_json(out, &obj)
    } else {
        match profile {
            Some(p) => writeln!(out, "{value}: {}", describe(&p)),
            None => writeln!(out, "{value}: empty word"),
        }
    }
}
