//! Command-line front end. [`run`] is a pure function of its arguments and
//! writes to the given streams, so it can be driven from tests.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dict::{self, Partition};
use crate::error::{Error, Result};
use crate::oracle::{desk_suite, verify_space, VerificationReport};
use crate::render;
use crate::rootsys::Kind;
use crate::schubert::{ideal_of_aj, ClassLabel, AJ};
use crate::singloc::sing_components;
use crate::space::Space;
use crate::weyl::HasseDiagram;

/// Everything succeeded.
pub const EXIT_OK: i32 = 0;
/// Unparseable command line or malformed `a:J`, partition or word literal.
pub const EXIT_USAGE: i32 = 1;
/// Well-formed input that names no class: a non-cominuscule node, an
/// unrealized `(a,J)`, an invalid partition or word.
pub const EXIT_INVALID: i32 = 2;
/// `verify` found a violation.
pub const EXIT_VERIFY: i32 = 3;
/// The root system or node does not exist.
pub const EXIT_UNKNOWN_SPACE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "cominuscule", version, about = "Schubert varieties in cominuscule G/P and their singular loci")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class table: dim, word, a:J and singular-locus components.
    List {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Singular locus of one class, as JSON.
    Sing {
        #[command(flatten)]
        space: SpaceArgs,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Partition or quadric dictionary of a classical space.
    Dict {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Hasse diagram; cover edges as TSV, or Graphviz with --dot.
    Hasse {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        dot: bool,
    },
    /// Run the oracle suite on one space (`E7/P7` or `E7 7 7`) or on all.
    Verify {
        #[arg(num_args = 0..=3, conflicts_with = "all")]
        space: Vec<String>,
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Args)]
struct SpaceArgs {
    /// A, B, C, D, E6, E7 (or E with rank 6 or 7).
    kind: String,
    rank: usize,
    node: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ClassArgs {
    /// Class label such as `2:2,3,6,8,10` or `3:145`.
    #[arg(long)]
    aj: Option<String>,
    /// Partition such as `(2,4,6,8,10)`.
    #[arg(long)]
    partition: Option<String>,
    /// Reduced word such as `65432` (comma separated from rank 10 on).
    #[arg(long)]
    word: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

/// Exit status for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Malformed { .. } => EXIT_USAGE,
        Error::UnknownKind(_) | Error::InvalidType { .. } | Error::NodeOutOfRange { .. } => EXIT_UNKNOWN_SPACE,
        Error::Internal(_) => EXIT_VERIFY,
        _ => EXIT_INVALID,
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let stream: &mut dyn Write = if informational { out } else { err };
            let _ = write!(stream, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Internal(format!("write failed: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::List { space, format } => {
            let diagram = HasseDiagram::new(space.resolve()?)?;
            let rows = render::list_rows(&diagram)?;
            let text = match format {
                Format::Tsv => render::list_tsv(diagram.space(), &rows),
                Format::Json => render::to_json(&render::list_json(diagram.space(), &rows)),
            };
            emit(out, &text)?;
        }
        Command::Sing { space, class } => {
            let diagram = HasseDiagram::new(space.resolve()?)?;
            let index = class.locate(&diagram)?;
            let class = &diagram.classes()[index];
            let space = diagram.space();
            let report = sing_components(space, crate::schubert::InversionIdeal::new(space, class.ideal)?)?;
            emit(out, &render::to_json(&render::sing_json(space, class.dim(), class.element.word(), &report)))?;
        }
        Command::Dict { space, format } => {
            let diagram = HasseDiagram::new(space.resolve()?)?;
            let rows = render::dict_rows(&diagram)?;
            let text = match format {
                Format::Tsv => render::dict_tsv(&rows),
                Format::Json => {
                    render::to_json(&render::DictJson { space: render::SpaceJson::of(diagram.space()), rows })
                }
            };
            emit(out, &text)?;
        }
        Command::Hasse { space, dot } => {
            let diagram = HasseDiagram::new(space.resolve()?)?;
            let text = if dot { render::hasse_dot(&diagram)? } else { render::hasse_tsv(&diagram)? };
            emit(out, &text)?;
        }
        Command::Verify { space, all } => {
            let targets = match (space.len(), all) {
                (0, true) => desk_suite(),
                (1, false) => vec![parse_space_label(&space[0])?],
                (3, false) => {
                    let rank = parse_number(&space[1], "rank")?;
                    let node = parse_number(&space[2], "node")?;
                    vec![(resolve_kind(&space[0], rank)?, rank, node)]
                }
                _ => {
                    return Err(Error::Malformed { what: "space", text: space.join(" ") });
                }
            };
            let reports = verify_all(&targets)?;
            let mut failed = false;
            let mut text = String::new();
            for report in &reports {
                failed |= !report.passed();
                text.push_str(&format_report(report));
            }
            let total: usize = reports.iter().map(|r| r.violations.len()).sum();
            text.push_str(&format!("{} spaces, {} violations\n", reports.len(), total));
            emit(out, &text)?;
            return Ok(if failed { EXIT_VERIFY } else { EXIT_OK });
        }
    }
    Ok(EXIT_OK)
}

/// Verifies the spaces on one worker thread each; reports come back in
/// input order.
fn verify_all(targets: &[(Kind, usize, usize)]) -> Result<Vec<VerificationReport>> {
    std::thread::scope(|scope| {
        let handles: Vec<_> =
            targets.iter().map(|&(kind, rank, node)| scope.spawn(move || verify_space(kind, rank, node))).collect();
        handles.into_iter().map(|h| h.join().expect("verification worker panicked")).collect()
    })
}

fn format_report(report: &VerificationReport) -> String {
    let status = if report.passed() { "ok" } else { "FAIL" };
    let mut s = format!(
        "{}\t{}\t{} classes\t{} proper\t{} violations\t{} discrepancies\n",
        report.space,
        status,
        report.classes,
        report.proper_classes,
        report.violations.len(),
        report.discrepancies.len()
    );
    for v in &report.violations {
        s.push_str(&format!("  violation: {v}\n"));
    }
    for d in &report.discrepancies {
        s.push_str(&format!("  discrepancy: {d}\n"));
    }
    s
}

impl SpaceArgs {
    fn resolve(&self) -> Result<Space> {
        Space::new(resolve_kind(&self.kind, self.rank)?, self.rank, self.node)
    }
}

/// Accepts `E` together with the rank as well as `E6`/`E7`.
fn resolve_kind(text: &str, rank: usize) -> Result<Kind> {
    if text.trim().eq_ignore_ascii_case("E") {
        return match rank {
            6 => Ok(Kind::E6),
            7 => Ok(Kind::E7),
            _ => Err(Error::UnknownKind(format!("E{rank}"))),
        };
    }
    text.parse()
}

fn parse_number(text: &str, what: &'static str) -> Result<usize> {
    text.trim().parse().map_err(|_| Error::Malformed { what, text: text.to_string() })
}

/// `E7/P7`, `A7/P3`, `D5/P1`.
fn parse_space_label(text: &str) -> Result<(Kind, usize, usize)> {
    let malformed = || Error::Malformed { what: "space", text: text.to_string() };
    let (system, node) = text.trim().split_once("/P").ok_or_else(malformed)?;
    let node = node.parse().map_err(|_| malformed())?;
    let letter = system.get(..1).ok_or_else(malformed)?;
    let rank = system[1..].parse().map_err(|_| malformed())?;
    Ok((resolve_kind(letter, rank)?, rank, node))
}

impl ClassArgs {
    fn locate(&self, diagram: &HasseDiagram) -> Result<usize> {
        let space = diagram.space();
        let label = if let Some(text) = &self.aj {
            ClassLabel::Proper(AJ::parse(text, space.rank())?)
        } else if let Some(text) = &self.partition {
            let flavor = dict::flavor_of(space)
                .ok_or_else(|| Error::Dictionary(format!("{} has no partition dictionary", space.label())))?;
            let lambda = Partition::parse(text, flavor, space.rank(), space.node())?;
            dict::partition_to_aj(space, &lambda)?
        } else if let Some(text) = &self.word {
            let word = parse_word(text, space.rank())?;
            return diagram.class_of_word(&word);
        } else {
            unreachable!("clap enforces exactly one class selector")
        };
        let ideal = match &label {
            ClassLabel::Bottom => diagram.classes()[diagram.bottom()].ideal,
            ClassLabel::Top => diagram.classes()[diagram.top()].ideal,
            ClassLabel::Proper(aj) => ideal_of_aj(space, aj)?.set(),
        };
        diagram
            .position(ideal)
            .ok_or_else(|| Error::Internal(format!("ideal of {} not in the diagram", label.display(space.kind()))))
    }
}

/// Digits for ranks below 10 (`65432`), otherwise a comma list. The empty
/// word is written `-`.
fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    let malformed = || Error::Malformed { what: "word", text: text.to_string() };
    if text == "-" {
        return Ok(Vec::new());
    }
    let letters: Vec<&str> = if text.contains(',') || rank >= 10 {
        text.split(',').map(str::trim).collect()
    } else {
        text.split("").filter(|s| !s.is_empty()).collect()
    };
    letters.iter().map(|s| s.parse::<usize>().map_err(|_| malformed())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cominuscule").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn words_parse_in_both_styles() {
        assert_eq!(parse_word("65432", 6).unwrap(), vec![6, 5, 4, 3, 2]);
        assert_eq!(parse_word("10,9", 10).unwrap(), vec![10, 9]);
        assert_eq!(parse_word("-", 6).unwrap(), Vec::<usize>::new());
        assert!(matches!(parse_word("6x", 6), Err(Error::Malformed { .. })));
    }

    #[test]
    fn space_labels_parse() {
        assert_eq!(parse_space_label("E7/P7").unwrap(), (Kind::E7, 7, 7));
        assert_eq!(parse_space_label("A10/P5").unwrap(), (Kind::A, 10, 5));
        assert!(matches!(parse_space_label("E7"), Err(Error::Malformed { .. })));
        assert!(matches!(parse_space_label("F4/P1"), Err(Error::UnknownKind(_))));
    }

    #[test]
    fn error_classes_have_distinct_exit_codes() {
        assert_eq!(call(&["list", "F4", "4", "1"]).0, EXIT_UNKNOWN_SPACE);
        assert_eq!(call(&["list", "E6", "6", "2"]).0, EXIT_INVALID);
        assert_eq!(call(&["sing", "A", "10", "5", "--aj", "2;2"]).0, EXIT_USAGE);
        assert_eq!(call(&["sing", "C", "5", "5", "--partition", "(1,1)"]).0, EXIT_INVALID);
        assert_eq!(call(&["sing", "C", "5", "5", "--partition", "(1,1,)"]).0, EXIT_USAGE);
        assert_eq!(call(&["list"]).0, EXIT_USAGE);
    }

    #[test]
    fn diagnostics_are_one_line() {
        let (code, out, err) = call(&["list", "E6", "6", "2"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("list"));
    }

    #[test]
    fn word_and_label_select_the_same_class() {
        let (_, by_word, _) = call(&["sing", "E6", "6", "6", "--word", "654324513"]);
        let (_, by_label, _) = call(&["sing", "E6", "6", "6", "--aj", "3:145"]);
        assert_eq!(by_word, by_label);
        assert!(by_word.contains("\"label\": \"1:23\""));
    }
}
