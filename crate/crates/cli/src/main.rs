//! `milnor`: expansions, free Milnor group equality, Milnor invariants and
//! the five-fold commutator obstruction from the command line.
//!
//! Exit codes: 0 success / equal / trivial / obstructed, 1 the negative
//! verdict, 2 malformed input, 3 unknown generators or bad indices.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use milnor::links::{builtin, LinkError, LinkPresentation};
use milnor::obstruction::{self, ConstraintSpec};
use milnor::{parse_word, words::ParseError, Alphabet, ExpansionContext, MagnusError, Word};

#[derive(Parser)]
#[command(
    name = "milnor",
    version,
    about = "Exact computations in free Milnor groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Magnus expansion of a word in the reduced ring.
    Expand {
        #[arg(long)]
        vars: u8,
        word: String,
    },
    /// Decide equality of two words in the free Milnor group.
    Equal {
        #[arg(long)]
        vars: u8,
        first: String,
        second: String,
    },
    /// Print one Milnor invariant of a link presentation.
    Mu {
        #[command(flatten)]
        link: LinkSource,
        /// Comma-separated, pairwise distinct component indices.
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<usize>,
        #[arg(long)]
        target: usize,
    },
    /// Decide whether a link presentation is homotopically trivial.
    Trivial {
        #[command(flatten)]
        link: LinkSource,
    },
    /// Check whether the handle meridians can cancel x2.x3.x4.x6.x5 in l1.
    VerifyAb {
        /// Forbid m_a, m_b, m_c from picking up x2, x4, x6 linearly (default).
        #[arg(long, overrides_with = "no_standard")]
        standard: bool,
        /// Drop that constraint.
        #[arg(long = "no-standard")]
        no_standard: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use another word over m2..m6, m_a, m_b, m_c instead of l1.
        #[arg(long = "l1-expr")]
        l1_expr: Option<String>,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct LinkSource {
    /// Link file: `components: n` then `longitude j: <word>` lines.
    #[arg(long)]
    link: Option<PathBuf>,
    /// One of unlink(n), hopf, borromean, whitehead.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let code = match e {
            ParseError::Syntax { .. } => 2,
            ParseError::UnknownGenerator { .. } => 3,
        };
        Failure::new(code, e)
    }
}

impl From<MagnusError> for Failure {
    fn from(e: MagnusError) -> Self {
        Failure::new(3, e)
    }
}

impl From<LinkError> for Failure {
    fn from(e: LinkError) -> Self {
        Failure::new(if e.is_format() { 2 } else { 3 }, e)
    }
}

fn load_link(source: &LinkSource) -> Result<LinkPresentation, Failure> {
    match (&source.link, &source.builtin) {
        (Some(path), _) => Ok(LinkPresentation::read(path)?),
        (None, Some(name)) => Ok(builtin(name)?),
        (None, None) => Err(Failure::new(2, "either --link or --builtin is required")),
    }
}

fn parse(text: &str, vars: u8) -> Result<Word, Failure> {
    Ok(parse_word(text, &Alphabet::numbered(vars as u32))?)
}

fn check_vars(vars: u8) -> Result<(), Failure> {
    if (1..=63).contains(&vars) {
        Ok(())
    } else {
        Err(Failure::new(
            2,
            format!("--vars must be in 1..=63, got {vars}"),
        ))
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Expand { vars, word } => {
            check_vars(vars)?;
            let w = parse(&word, vars)?;
            println!("{}", ExpansionContext::standard(vars).expand(&w)?);
            Ok(0)
        }
        Command::Equal {
            vars,
            first,
            second,
        } => {
            check_vars(vars)?;
            let (u, v) = (parse(&first, vars)?, parse(&second, vars)?);
            if milnor::mf_equal(&u, &v, vars)? {
                println!("equal");
                Ok(0)
            } else {
                println!("distinct");
                Ok(1)
            }
        }
        Command::Mu { link, seq, target } => {
            let pres = load_link(&link)?;
            println!("{}", pres.mu(&seq, target)?);
            Ok(0)
        }
        Command::Trivial { link } => {
            let pres = load_link(&link)?;
            if pres.is_homotopically_trivial()? {
                println!("homotopically-trivial");
                return Ok(0);
            }
            let witness = pres
                .nonzero_invariants()?
                .into_iter()
                .min_by(|a, b| {
                    (a.index_sequence.len(), &a.index_sequence, a.target).cmp(&(
                        b.index_sequence.len(),
                        &b.index_sequence,
                        b.target,
                    ))
                })
                .expect("a nontrivial presentation has a nonzero invariant");
            println!("essential ({witness})");
            Ok(1)
        }
        Command::VerifyAb {
            standard: _,
            no_standard,
            format,
            l1_expr,
        } => {
            let spec = if no_standard {
                ConstraintSpec::relaxed()
            } else {
                ConstraintSpec::standard()
            };
            let word = match l1_expr {
                Some(text) => obstruction::parse_l1_variant(&text)?,
                None => obstruction::build_l1(),
            };
            let report = obstruction::verify_word(&word, spec)?;
            match format {
                Format::Text => print!("{report}"),
                Format::Machine => print!("{}", report.render_machine()),
            }
            Ok(if report.is_obstructed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
