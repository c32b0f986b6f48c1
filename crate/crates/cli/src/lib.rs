//! Command-line front end for `braidrep`.
//!
//! [`run`] takes the argument vector and writers for standard output and
//! standard error and returns the process exit code.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braidrep::bmw::{self, Bratteli, YoungDiagram};
use braidrep::verify::{self, Suite};
use braidrep::{burau, garside, lkb, BraidWord, Error, RepMatrix};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_ASSERTION: i32 = 4;

/// Largest strand count for commands that build LKB matrices.
pub const MAX_MATRIX_STRANDS: usize = 16;
/// Largest strand count for `normal-form`, which only touches permutations.
pub const MAX_NORMAL_FORM_STRANDS: usize = 64;
/// Largest strand count for `growth`.
pub const MAX_GROWTH_STRANDS: usize = 6;
/// Largest strand count for `bratteli`.
pub const MAX_BRATTELI_LEVEL: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "braidrep", version, about = "Exact braid group representations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Rep {
    Burau,
    Lkb,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Burau or LKB matrix of a word.
    Matrix {
        #[arg(long, value_enum)]
        rep: Rep,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Exit 0 if the word is the trivial braid, 1 otherwise.
    Trivial {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Exit 0 if the two words give the same braid, 1 otherwise.
    Equal {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        w1: String,
        #[arg(long, allow_hyphen_values = true)]
        w2: String,
    },
    /// Left-greedy normal form of a positive word.
    NormalForm {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Word length with respect to the simple braids and their inverses.
    LengthOmega {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Number of braids of each length inside a ball.
    Growth {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        radius: u32,
    },
    /// Bratteli diagram dimensions at level n.
    Bratteli {
        #[arg(long)]
        n: usize,
        /// Comma-separated row lengths; omit to list the whole level.
        #[arg(long)]
        diagram: Option<String>,
    },
    /// Run a self-verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: usize,
    },
}

/// Command result before rendering: text for stdout and an exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_TRUE }
    }
}

/// Maps library errors onto exit codes.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidStrandCount
        | Error::LetterOutOfRange { .. }
        | Error::NegativeLetter { .. }
        | Error::GeneratorOutOfRange { .. }
        | Error::InadmissibleDiagram(..)
        | Error::StrandMismatch { .. } => EXIT_USAGE,
        Error::ResourceGuard(_) => EXIT_RESOURCE,
        _ => EXIT_ASSERTION,
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_TRUE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = write!(out, "{}", o.text);
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn guard(n: usize, max: usize) -> braidrep::Result<()> {
    if n == 0 {
        return Err(Error::InvalidStrandCount);
    }
    if n > max {
        return Err(Error::ResourceGuard(format!("n = {n} exceeds the limit {max}")));
    }
    Ok(())
}

fn word(n: usize, text: &str) -> braidrep::Result<BraidWord> {
    guard(n, MAX_MATRIX_STRANDS)?;
    BraidWord::parse(n, text)
}

fn render(format: Format, pretty: String, value: Value) -> String {
    match format {
        Format::Pretty => pretty,
        Format::Json => format!("{value}\n"),
    }
}

fn verdict(format: Format, yes: bool, yes_text: &str, no_text: &str) -> Outcome {
    let text = if yes { yes_text } else { no_text };
    Outcome {
        text: render(format, format!("{text}\n"), json!({ "result": yes, "message": text })),
        code: if yes { EXIT_TRUE } else { EXIT_FALSE },
    }
}

/// JSON form of a matrix: zero entries are omitted, indices are zero-based.
pub fn matrix_json(m: &RepMatrix, order: &str) -> Value {
    let entries: Vec<Value> =
        m.nonzero_entries().map(|(r, c, e)| json!([r, c, e.to_string()])).collect();
    json!({ "dim": m.dim(), "order": order, "entries": entries })
}

fn execute(cli: &Cli) -> braidrep::Result<Outcome> {
    let f = cli.format;
    Ok(match &cli.command {
        Command::Matrix { rep, n, word: text } => {
            let w = word(*n, text)?;
            let (m, order) = match rep {
                Rep::Burau => (burau::of_word(&w)?, "strand"),
                Rep::Lkb => (lkb::of_word(&w)?, "lex-refpair"),
            };
            Outcome::ok(render(f, m.to_string(), matrix_json(&m, order)))
        }
        Command::Trivial { n, word: text } => {
            let w = word(*n, text)?;
            let trivial = lkb::is_trivial(&w)?;
            let burau_identity = burau::of_word(&w)?.is_identity();
            let message = if trivial { "trivial" } else { "nontrivial (LKB)" };
            let mut pretty = format!("{message}\n");
            if !trivial && burau_identity {
                pretty.push_str("note: the Burau image is the identity\n");
            }
            Outcome {
                text: render(
                    f,
                    pretty,
                    json!({ "result": trivial, "message": message, "burau_identity": burau_identity }),
                ),
                code: if trivial { EXIT_TRUE } else { EXIT_FALSE },
            }
        }
        Command::Equal { n, w1, w2 } => {
            let (a, b) = (word(*n, w1)?, word(*n, w2)?);
            verdict(f, lkb::words_equal(&a, &b)?, "equal", "not equal")
        }
        Command::NormalForm { n, word: text } => {
            guard(*n, MAX_NORMAL_FORM_STRANDS)?;
            let w = BraidWord::parse(*n, text)?;
            w.require_positive()?;
            let nf = garside::greedy_normal_form(&w)?;
            let factors: Vec<Vec<i32>> =
                nf.factors().iter().map(|x| x.reduced_word().letters().to_vec()).collect();
            Outcome::ok(render(f, format!("{nf}\n"), json!({ "strands": n, "factors": factors })))
        }
        Command::LengthOmega { n, word: text } => {
            let len = lkb::length_omega(&word(*n, text)?)?;
            Outcome::ok(render(f, format!("{len}\n"), json!({ "length": len })))
        }
        Command::Growth { n, radius } => {
            guard(*n, MAX_GROWTH_STRANDS)?;
            let counts = lkb::growth_census(*n, *radius)?;
            let pretty = counts.iter().enumerate().map(|(k, c)| format!("{k} {c}\n")).collect();
            Outcome::ok(render(f, pretty, json!({ "n": n, "radius": radius, "counts": counts })))
        }
        Command::Bratteli { n, diagram } => {
            guard(*n, MAX_BRATTELI_LEVEL)?;
            let mut b = Bratteli::new();
            match diagram {
                Some(p) => {
                    let lambda = YoungDiagram::parse(p)?;
                    let d = b.dim(*n, &lambda)?;
                    Outcome::ok(render(
                        f,
                        format!("{d}\n"),
                        json!({ "n": n, "diagram": lambda.to_string(), "dim": d.to_string() }),
                    ))
                }
                None => {
                    let level = b.level(*n)?;
                    let total = bmw::sum_sq_dimensions(*n)?;
                    let mut pretty = String::new();
                    for (l, d) in &level {
                        let name = if l.size() == 0 { "()".to_string() } else { l.to_string() };
                        pretty.push_str(&format!("{name} {d}\n"));
                    }
                    pretty.push_str(&format!("sum of squares {total}\n"));
                    let rows: Vec<Value> = level
                        .iter()
                        .map(|(l, d)| json!({ "diagram": l.to_string(), "dim": d.to_string() }))
                        .collect();
                    Outcome::ok(render(
                        f,
                        pretty,
                        json!({ "n": n, "levels": rows, "sum_squares": total.to_string() }),
                    ))
                }
            }
        }
        Command::Verify { suite, n } => {
            let suite: Suite = suite.parse()?;
            let checks = verify::run(suite, *n)?;
            let passed = !checks.iter().any(|c| c.failed());
            let pretty: String = checks.iter().map(|c| format!("{c}\n")).collect();
            let rows: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "suite": c.suite, "check": c.name, "passed": c.passed, "informational": c.informational }))
                .collect();
            Outcome {
                text: render(f, pretty, json!({ "suite": suite.name(), "n": n, "passed": passed, "checks": rows })),
                code: if passed { EXIT_TRUE } else { EXIT_ASSERTION },
            }
        }
    })
}
