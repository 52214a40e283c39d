//! Command-line front end: the spec-string grammar and the subcommands.
//!
//! Spec grammar (whitespace is insignificant, family letters are
//! case-insensitive):
//!
//! ```text
//! spec      := component ("x" component)*
//! component := FAMILY RANK "[" (index ("," index)*)? "]"
//! ```
//!
//! e.g. `A3[1,3] x G2[1]` or `B4[]` (empty marking, `P = G`).
//!
//! Exit codes: 0 when the variety admits the action (and for successful
//! listing commands), 3 when it does not, 64 for usage errors, 65 for
//! malformed specs, 70 for internal consistency failures.

use std::fmt;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::classify::{
    covering_dimension, decide_product, enumerate_maximal, ClassificationRow, Component,
    CoveringSummary, ProductVerdict,
};
use crate::error::Error;
use crate::liealg::chevalley_constants;
use crate::parabolic::{degree, grading, Marking};
use crate::rootsys::{build_root_system, Family, SimpleType};
use crate::weyl::is_minuscule;

pub const EXIT_ADMITS: i32 = 0;
pub const EXIT_DOES_NOT_ADMIT: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

/// Largest rank accepted on the command line.
pub const MAX_CLI_RANK: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("at byte {offset}: unknown family '{found}' (expected one of A-G)")]
    UnknownFamily { offset: usize, found: char },

    #[error("at byte {offset}: {source}")]
    Rank { offset: usize, source: Error },

    #[error("at byte {offset}: index {index} is out of range 1..={rank}")]
    IndexOutOfRange {
        offset: usize,
        index: usize,
        rank: usize,
    },

    #[error("at byte {offset}: duplicate index {index}")]
    DuplicateIndex { offset: usize, index: usize },
}

/// A parsed spec: a nonempty list of simple components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spec(pub Vec<Component>);

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn syntax(&self, message: impl Into<String>) -> SpecError {
        SpecError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn describe_next(&self) -> String {
        match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        }
    }

    fn number(&mut self, what: &str) -> Result<(usize, usize), SpecError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(SpecError::Syntax {
                offset: start,
                message: format!("expected {what}, found {}", self.describe_next()),
            });
        }
        let value = self.text[start..self.pos]
            .parse::<usize>()
            .map_err(|_| SpecError::Syntax {
                offset: start,
                message: format!("{what} is too large"),
            })?;
        Ok((value, start))
    }

    fn expect(&mut self, want: char) -> Result<(), SpecError> {
        self.skip_ws();
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{want}', found {}", self.describe_next())))
        }
    }

    fn component(&mut self) -> Result<Component, SpecError> {
        self.skip_ws();
        let family_at = self.pos;
        let family = match self.peek() {
            Some(c) if c.is_alphabetic() => {
                self.bump();
                Family::from_letter(c).ok_or(SpecError::UnknownFamily {
                    offset: family_at,
                    found: c,
                })?
            }
            _ => {
                return Err(self.syntax(format!(
                    "expected a family letter, found {}",
                    self.describe_next()
                )))
            }
        };
        let (rank, _) = self.number("a rank")?;
        let stype = SimpleType::new(family, rank).map_err(|source| SpecError::Rank {
            offset: family_at,
            source,
        })?;
        if rank > MAX_CLI_RANK {
            return Err(SpecError::Syntax {
                offset: family_at,
                message: format!("rank {rank} exceeds the supported maximum {MAX_CLI_RANK}"),
            });
        }

        self.expect('[')?;
        let mut indices: Vec<usize> = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.bump();
        } else {
            loop {
                let (index, at) = self.number("a simple root index")?;
                if index == 0 || index > rank {
                    return Err(SpecError::IndexOutOfRange {
                        offset: at,
                        index,
                        rank,
                    });
                }
                if indices.contains(&index) {
                    return Err(SpecError::DuplicateIndex { offset: at, index });
                }
                indices.push(index);
                self.skip_ws();
                match self.peek() {
                    Some(',') => {
                        self.bump();
                    }
                    Some(']') => {
                        self.bump();
                        break;
                    }
                    _ => {
                        return Err(self.syntax(format!(
                            "expected ',' or ']', found {}",
                            self.describe_next()
                        )))
                    }
                }
            }
        }
        let marking = Marking::new(rank, indices).expect("indices validated above");
        Ok(Component { stype, marking })
    }
}

/// Parses a spec string into its components.
pub fn parse_spec(text: &str) -> Result<Spec, SpecError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut components = vec![cur.component()?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('x') | Some('X') => {
                cur.bump();
                components.push(cur.component()?);
            }
            Some(c) => return Err(cur.syntax(format!("expected 'x' or end of input, found '{c}'"))),
        }
    }
    Ok(Spec(components))
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub family: Family,
    pub rank: usize,
    pub marking: Vec<usize>,
    pub commutative: bool,
    pub exceptional: Option<CoveringSummary>,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecideReport {
    pub spec: String,
    pub admits: bool,
    pub dimension: usize,
    pub components: Vec<ComponentReport>,
}

impl DecideReport {
    fn new(spec: &Spec, verdict: &ProductVerdict) -> Self {
        DecideReport {
            spec: spec.to_string(),
            admits: verdict.admits,
            dimension: verdict.total_dimension,
            components: verdict
                .components
                .iter()
                .map(|cv| ComponentReport {
                    family: cv.component.stype.family(),
                    rank: cv.component.stype.rank(),
                    marking: cv.component.marking.to_vec(),
                    commutative: cv.verdict.commutative,
                    exceptional: cv.verdict.exceptional.as_ref().map(CoveringSummary::from),
                    dimension: cv.verdict.dimension,
                })
                .collect(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = format!("spec: {}\n", self.spec);
        for c in &self.components {
            let name = format!("{}{}{}", c.family, c.rank, fmt_marking(&c.marking));
            let how = if c.commutative {
                "commutative nilradical".to_string()
            } else if let Some(cover) = &c.exceptional {
                format!(
                    "exceptional; covering pair {}/{} = {}{}{}",
                    cover.label,
                    parabolic_name(&cover.marking),
                    cover.family,
                    cover.rank,
                    fmt_marking(&cover.marking)
                )
            } else {
                "fails: nilradical not commutative and pair not exceptional".to_string()
            };
            out.push_str(&format!("{name}: {how}; n = {}\n", c.dimension));
        }
        out.push_str(&format!("dimension: {}\n", self.dimension));
        out.push_str(&format!("admits: {}\n", yes_no(self.admits)));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    pub degree: i32,
    pub roots: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriteriaReport {
    /// No two nilradical roots sum to a root.
    pub commutative: bool,
    /// Coefficient of the marked simple root in the highest root is 1;
    /// only defined for a single marked root.
    pub highest_root_coefficient_one: Option<bool>,
    /// The fundamental weight of the marked root is minuscule for the dual
    /// root system; only defined for a single marked root.
    pub dual_minuscule: Option<bool>,
    pub exceptional: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub family: Family,
    pub rank: usize,
    pub marking: Vec<usize>,
    pub label: String,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplainReport {
    pub spec: String,
    pub family: Family,
    pub rank: usize,
    pub marking: Vec<usize>,
    pub layers: Vec<LayerReport>,
    pub highest_root: Vec<i32>,
    pub highest_root_degree: i32,
    pub nilradical_size: usize,
    pub criteria: CriteriaReport,
    pub covering: Option<CoveringReport>,
    pub dimension: usize,
    pub admits: bool,
}

impl ExplainReport {
    fn to_text(&self) -> String {
        let mut out = format!(
            "spec: {}  ({}, {})\n",
            self.spec,
            SimpleType::new(self.family, self.rank)
                .map(|t| t.group_label())
                .unwrap_or_default(),
            parabolic_name(&self.marking)
        );
        out.push_str("grading:\n");
        for layer in &self.layers {
            let roots: Vec<String> = layer.roots.iter().map(|r| fmt_root(r)).collect();
            out.push_str(&format!(
                "  g_{}: {} root{}: {}\n",
                layer.degree,
                layer.roots.len(),
                if layer.roots.len() == 1 { "" } else { "s" },
                roots.join(" ")
            ));
        }
        out.push_str(&format!(
            "highest root: {}, degree {}\n",
            fmt_root(&self.highest_root),
            self.highest_root_degree
        ));
        out.push_str(&format!("nilradical: {} roots\n", self.nilradical_size));
        let opt = |v: Option<bool>| v.map_or("n/a (not a single marked root)", yes_no);
        out.push_str("criteria:\n");
        out.push_str(&format!(
            "  commutative nilradical: {}\n",
            yes_no(self.criteria.commutative)
        ));
        out.push_str(&format!(
            "  highest-root coefficient 1: {}\n",
            opt(self.criteria.highest_root_coefficient_one)
        ));
        out.push_str(&format!(
            "  minuscule for the dual system: {}\n",
            opt(self.criteria.dual_minuscule)
        ));
        match &self.covering {
            Some(c) => out.push_str(&format!(
                "  exceptional pair: yes; covering {}/{} = {}{}{}, dimension {} = {}\n",
                c.label,
                parabolic_name(&c.marking),
                c.family,
                c.rank,
                fmt_marking(&c.marking),
                c.dimension,
                self.dimension
            )),
            None => out.push_str("  exceptional pair: no\n"),
        }
        if self.marking.is_empty() {
            out.push_str("P = G: the flag variety is a point\n");
        }
        out.push_str(&format!("dimension: {}\n", self.dimension));
        out.push_str(&format!("admits: {}\n", yes_no(self.admits)));
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn fmt_marking(m: &[usize]) -> String {
    let parts: Vec<String> = m.iter().map(|i| i.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn fmt_root(r: &[i32]) -> String {
    let parts: Vec<String> = r.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

fn parabolic_name(m: &[usize]) -> String {
    if m.is_empty() {
        return "G".into();
    }
    let parts: Vec<String> = m.iter().map(|i| i.to_string()).collect();
    format!("P_{}", parts.join(","))
}

// ---------------------------------------------------------------------------
// Commands

/// Errors surfaced by the command implementations.
#[derive(Debug, Error)]
pub enum CommandError {
    #[error("invalid spec: {0}")]
    Spec(#[from] SpecError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Library(#[from] Error),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Spec(_) => EXIT_DATA,
            CommandError::Usage(_) => EXIT_USAGE,
            CommandError::Library(Error::Inconsistent(_)) => EXIT_INTERNAL,
            CommandError::Library(_) => EXIT_DATA,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Filter {
    #[default]
    All,
    Commutative,
    Exceptional,
    Admits,
}

/// Text printed by a command and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn err(e: CommandError) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn verdict_code(admits: bool) -> i32 {
    if admits {
        EXIT_ADMITS
    } else {
        EXIT_DOES_NOT_ADMIT
    }
}

pub fn cmd_decide(spec: &str, format: Format) -> Result<(String, i32), CommandError> {
    let spec = parse_spec(spec)?;
    let verdict = decide_product(&spec.0)?;
    let report = DecideReport::new(&spec, &verdict);
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&report),
    };
    Ok((text, verdict_code(report.admits)))
}

pub fn explain_report(spec: &str) -> Result<ExplainReport, CommandError> {
    let spec = parse_spec(spec)?;
    let [component] = spec.0.as_slice() else {
        return Err(CommandError::Usage(format!(
            "explain takes a single simple component, got {} in '{spec}'",
            spec.0.len()
        )));
    };
    let rs = build_root_system(component.stype)?;
    let m = &component.marking;
    let verdict = decide_product(std::slice::from_ref(component))?
        .components
        .remove(0)
        .verdict;
    let layers = grading(&rs, m)
        .layers()
        .iter()
        .map(|(&k, roots)| LayerReport {
            degree: k,
            roots: roots.iter().map(|r| r.coeffs().to_vec()).collect(),
        })
        .collect();
    let theta = rs.highest_root();
    let (coeff_one, dual_minuscule) = match m.to_vec().as_slice() {
        &[i] => (
            Some(theta.coeffs()[i - 1] == 1),
            Some(is_minuscule(&rs.dual_system(), i)?),
        ),
        _ => (None, None),
    };
    let covering = verdict.exceptional.as_ref().map(|c| CoveringReport {
        family: c.stype.family(),
        rank: c.stype.rank(),
        marking: c.marking.to_vec(),
        label: c.group_label.clone(),
        dimension: covering_dimension(c),
    });
    Ok(ExplainReport {
        spec: spec.to_string(),
        family: component.stype.family(),
        rank: component.stype.rank(),
        marking: m.to_vec(),
        layers,
        highest_root: theta.coeffs().to_vec(),
        highest_root_degree: degree(theta, m),
        nilradical_size: verdict.dimension,
        criteria: CriteriaReport {
            commutative: verdict.commutative,
            highest_root_coefficient_one: coeff_one,
            dual_minuscule,
            exceptional: verdict.exceptional.is_some(),
        },
        covering,
        dimension: verdict.dimension,
        admits: verdict.admits,
    })
}

pub fn cmd_explain(spec: &str, format: Format) -> Result<(String, i32), CommandError> {
    let report = explain_report(spec)?;
    let text = match format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&report),
    };
    Ok((text, verdict_code(report.admits)))
}

#[derive(Debug, Serialize)]
struct EnumerateReport<'a> {
    max_rank: usize,
    filter: Filter,
    rows: &'a [ClassificationRow],
}

pub fn enumerate_rows(max_rank: usize, filter: Filter) -> Result<Vec<ClassificationRow>, CommandError> {
    if !(2..=MAX_CLI_RANK).contains(&max_rank) {
        return Err(CommandError::Usage(format!(
            "--max-rank must be between 2 and {MAX_CLI_RANK}, got {max_rank}"
        )));
    }
    let mut rows = enumerate_maximal(max_rank)?;
    rows.retain(|r| match filter {
        Filter::All => true,
        Filter::Commutative => r.commutative,
        Filter::Exceptional => r.exceptional.is_some(),
        Filter::Admits => r.admits,
    });
    Ok(rows)
}

pub fn cmd_enumerate(
    max_rank: usize,
    filter: Filter,
    format: Format,
) -> Result<(String, i32), CommandError> {
    let rows = enumerate_rows(max_rank, filter)?;
    let text = match format {
        Format::Json => to_json(&EnumerateReport {
            max_rank,
            filter,
            rows: &rows,
        }),
        Format::Text => {
            let mut out = format!(
                "{:<8} {:<11} {:<28} {:<6} {}\n",
                "pair", "commutative", "exceptional (covering pair)", "admits", "dim"
            );
            for r in &rows {
                let name = format!("{}{}[{}]", r.family, r.rank, r.index);
                let cover = r.exceptional.as_ref().map_or("-".to_string(), |c| {
                    format!(
                        "{}/{} = {}{}{}",
                        c.label,
                        parabolic_name(&c.marking),
                        c.family,
                        c.rank,
                        fmt_marking(&c.marking)
                    )
                });
                out.push_str(&format!(
                    "{:<8} {:<11} {:<28} {:<6} {}\n",
                    name,
                    yes_no(r.commutative),
                    cover,
                    yes_no(r.admits),
                    r.dimension
                ));
            }
            out
        }
    };
    Ok((text, EXIT_ADMITS))
}

pub fn cmd_dump_constants(stype: &str) -> Result<(String, i32), CommandError> {
    let stype: SimpleType = stype.parse()?;
    if stype.rank() > MAX_CLI_RANK {
        return Err(CommandError::Usage(format!(
            "rank {} exceeds the supported maximum {MAX_CLI_RANK}",
            stype.rank()
        )));
    }
    let rs = build_root_system(stype)?;
    Ok((chevalley_constants(&rs)?.dump(), EXIT_ADMITS))
}

// ---------------------------------------------------------------------------
// Argument parsing

#[derive(Debug, Parser)]
#[command(
    name = "flagcomp",
    version,
    about = "Decide whether a flag variety G/P is an equivariant compactification of G_a^n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a product of simple components, e.g. "A3[1] x G2[1]"
    Decide {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every maximal parabolic of every simple type up to a rank
    #[command(group(ArgGroup::new("filter").args(["commutative", "exceptional", "admits"]).multiple(false)))]
    Enumerate {
        #[arg(long)]
        max_rank: usize,
        /// Only pairs with commutative nilradical
        #[arg(long)]
        commutative: bool,
        /// Only exceptional pairs
        #[arg(long)]
        exceptional: bool,
        /// Only pairs that admit the action
        #[arg(long)]
        admits: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the grading and which criteria hold for one simple component
    Explain {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Chevalley structure constants of a simple type, e.g. "E6"
    DumpConstants { stype: String },
}

/// Parses arguments and runs the selected command. Never panics on
/// malformed input.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(rendered, 0),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_USAGE,
                },
            };
        }
    };
    let result = match cli.command {
        Command::Decide { spec, format } => cmd_decide(&spec, format),
        Command::Explain { spec, format } => cmd_explain(&spec, format),
        Command::Enumerate {
            max_rank,
            commutative,
            exceptional,
            admits,
            format,
        } => {
            let filter = match (commutative, exceptional, admits) {
                (true, _, _) => Filter::Commutative,
                (_, true, _) => Filter::Exceptional,
                (_, _, true) => Filter::Admits,
                _ => Filter::All,
            };
            cmd_enumerate(max_rank, filter, format)
        }
        Command::DumpConstants { stype } => cmd_dump_constants(&stype),
    };
    match result {
        Ok((stdout, code)) => Outcome::ok(stdout, code),
        Err(e) => Outcome::err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comps(spec: &Spec) -> Vec<(String, Vec<usize>)> {
        spec.0
            .iter()
            .map(|c| (c.stype.to_string(), c.marking.to_vec()))
            .collect()
    }

    #[test]
    fn parses_examples() {
        let s = parse_spec("C3[3]").unwrap();
        assert_eq!(comps(&s), vec![("C3".into(), vec![3])]);
        let s = parse_spec("A3[1,3] x G2[1]").unwrap();
        assert_eq!(
            comps(&s),
            vec![("A3".into(), vec![1, 3]), ("G2".into(), vec![1])]
        );
        let s = parse_spec("  b4 [ ]X e6[ 6 , 1 ] ").unwrap();
        assert_eq!(s.to_string(), "B4[] x E6[1,6]");
    }

    #[test]
    fn rejects_noncanonical_rank_with_alias() {
        let err = parse_spec("D2[1]").unwrap_err();
        assert!(matches!(err, SpecError::Rank { offset: 0, .. }));
        assert!(err.to_string().contains("A1xA1"), "{err}");
        let err = parse_spec("A2[1] x D3[1]").unwrap_err();
        assert!(matches!(err, SpecError::Rank { offset: 8, .. }));
        assert!(err.to_string().contains("A3"));
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse_spec("Q2[1]").unwrap_err(),
            SpecError::UnknownFamily { offset: 0, found: 'Q' }
        );
        assert!(matches!(
            parse_spec("A3[1,4]").unwrap_err(),
            SpecError::IndexOutOfRange { offset: 5, index: 4, rank: 3 }
        ));
        assert!(matches!(
            parse_spec("A3[2,2]").unwrap_err(),
            SpecError::DuplicateIndex { offset: 5, index: 2 }
        ));
        assert!(matches!(parse_spec("A3").unwrap_err(), SpecError::Syntax { offset: 2, .. }));
        assert!(matches!(parse_spec("A[1]").unwrap_err(), SpecError::Syntax { offset: 1, .. }));
        assert!(matches!(parse_spec("A3[1;2]").unwrap_err(), SpecError::Syntax { offset: 4, .. }));
        assert!(matches!(parse_spec("A3[1] G2[1]").unwrap_err(), SpecError::Syntax { offset: 6, .. }));
        assert!(matches!(parse_spec("").unwrap_err(), SpecError::Syntax { offset: 0, .. }));
        assert!(matches!(parse_spec("A3[1] x").unwrap_err(), SpecError::Syntax { offset: 7, .. }));
        assert!(parse_spec("A99999999999999999999999[1]").is_err());
        assert!(parse_spec("A40[1]").is_err());
        assert!(parse_spec("é").is_err());
    }

    #[test]
    fn decide_exit_codes() {
        assert_eq!(cmd_decide("G2[1]", Format::Text).unwrap().1, EXIT_ADMITS);
        assert_eq!(cmd_decide("E8[1]", Format::Text).unwrap().1, EXIT_DOES_NOT_ADMIT);
        let (text, code) = cmd_decide("A2[1] x C3[3]", Format::Text).unwrap();
        assert_eq!(code, 0);
        assert!(text.contains("C3[3]: commutative nilradical; n = 6"), "{text}");
        assert!(text.contains("dimension: 8"), "{text}");
        assert_eq!(cmd_decide("D2[1]", Format::Text).unwrap_err().exit_code(), EXIT_DATA);
    }

    #[test]
    fn explain_layers() {
        let r = explain_report("G2[1]").unwrap();
        let sizes: Vec<(i32, usize)> = r.layers.iter().map(|l| (l.degree, l.roots.len())).collect();
        assert_eq!(sizes, vec![(0, 1), (1, 2), (2, 1), (3, 2)]);
        assert_eq!(r.highest_root_degree, 3);
        assert!(!r.criteria.commutative && r.criteria.exceptional && r.admits);
        assert_eq!(r.covering.as_ref().unwrap().dimension, 5);

        let r = explain_report("A2[1]").unwrap();
        let sizes: Vec<usize> = r.layers.iter().map(|l| l.roots.len()).collect();
        assert_eq!(sizes, vec![1, 2]);
        assert!(r.criteria.commutative);
        assert_eq!(r.criteria.highest_root_coefficient_one, Some(true));
        assert_eq!(r.criteria.dual_minuscule, Some(true));

        let r = explain_report("B2[]").unwrap();
        assert_eq!(r.layers.len(), 1);
        assert_eq!(r.dimension, 0);
        assert!(r.admits);

        assert_eq!(
            explain_report("A2[1] x A1[1]").unwrap_err().exit_code(),
            EXIT_USAGE
        );
    }

    #[test]
    fn enumerate_filters() {
        let rows = enumerate_rows(3, Filter::Exceptional).unwrap();
        let names: Vec<String> = rows
            .iter()
            .map(|r| format!("{}{}[{}]", r.family, r.rank, r.index))
            .collect();
        assert_eq!(names, ["B2[2]", "B3[3]", "C2[1]", "C3[1]", "G2[1]"]);
        assert_eq!(enumerate_rows(2, Filter::Admits).unwrap().len(), 8);
        assert!(enumerate_rows(1, Filter::All).is_err());
    }

    #[test]
    fn run_maps_usage_errors() {
        let out = run(["flagcomp", "enumerate", "--max-rank", "3", "--commutative", "--admits"]);
        assert_eq!(out.code, EXIT_USAGE);
        assert_eq!(run(["flagcomp", "frobnicate"]).code, EXIT_USAGE);
        assert_eq!(run(["flagcomp", "decide"]).code, EXIT_USAGE);
        assert_eq!(run(["flagcomp", "--help"]).code, 0);
        assert_eq!(run(["flagcomp", "dump-constants", "D3"]).code, EXIT_DATA);
        assert_eq!(run(["flagcomp", "dump-constants", "A2"]).code, 0);
    }
}
