//! `nstopo`: generation, verification and rendering of neutrosophic
//! topologies over `.nst` script files.
//!
//! Exit status contract: 0 success (and `check` verdict "true"),
//! 1 usage or parse error, 2 `check` verdict "false", 3 combinatorial cap
//! exceeded. All human-readable output goes to stdout, diagnostics to
//! stderr, and identical invocations on identical files produce identical
//! bytes.

pub mod structured;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nstopo_core::format::{render_family, RenderOptions};
use nstopo_core::script::{parse_script, ScriptDocument};
use nstopo_core::topology::{TopologyViolation, DEFAULT_SIZE_CAP};
use nstopo_core::{Error, NeutrosophicFamily};

use structured::StructuredFamily;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_RESOURCE_LIMIT: i32 = 3;

/// Environment variable overriding the default generation cap.
pub const MAX_SIZE_ENV: &str = "NSTOPO_MAX_SIZE";

#[derive(Debug, Parser)]
#[command(name = "nstopo", version, about = "Neutrosophic set families and topologies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FromMode {
    /// Treat the family as a sub-basis: intersections first, then unions.
    Subbase,
    /// Treat the family as a basis: unions only.
    Base,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Script file declaring universes, sets and families.
    pub script: PathBuf,

    /// Identifier of the family to operate on.
    #[arg(long)]
    pub family: String,

    /// Tabular output instead of the simple one-line format.
    #[arg(long)]
    pub tabular: bool,

    /// Prefix the output with the family name.
    #[arg(long)]
    pub label: bool,

    /// Extended layout: wider tables, two members per line.
    #[arg(long)]
    pub extended: bool,

    /// Emit a machine-readable JSON document instead of text.
    #[arg(long)]
    pub json_out: bool,

    /// Cap on the size of families fed to generation
    /// (default: $NSTOPO_MAX_SIZE or 20).
    #[arg(long, value_name = "N")]
    pub max_size: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate the topological basis of a family taken as a sub-basis.
    Base(CommonArgs),
    /// Generate the topology of a family and report its cardinality.
    Topology {
        #[command(flatten)]
        args: CommonArgs,
        /// How to read the family.
        #[arg(long, value_enum, default_value_t = FromMode::Subbase)]
        from: FromMode,
    },
    /// Check whether a family is a neutrosophic topology.
    Check(CommonArgs),
    /// Render a family with the requested format flags.
    Render(CommonArgs),
}

/// What a successful invocation prints and which status it exits with.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// A failed invocation: diagnostic for stderr plus exit status.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            code: EXIT_USAGE,
        }
    }
}

fn engine_failure(error: Error) -> Failure {
    let code = match error {
        Error::ResourceLimit { .. } => EXIT_RESOURCE_LIMIT,
        _ => EXIT_USAGE,
    };
    Failure {
        message: error.to_string(),
        code,
    }
}

fn render_options(args: &CommonArgs) -> RenderOptions {
    RenderOptions {
        tabular: args.tabular,
        label: args.label,
        extended: args.extended,
    }
}

fn size_cap(args: &CommonArgs) -> Result<usize, Failure> {
    if let Some(cap) = args.max_size {
        return Ok(cap);
    }
    match std::env::var(MAX_SIZE_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("invalid {MAX_SIZE_ENV} value '{value}'"))),
        Err(_) => Ok(DEFAULT_SIZE_CAP),
    }
}

fn load_document(args: &CommonArgs) -> Result<ScriptDocument, Failure> {
    let path = args.script.display();
    let text = fs::read_to_string(&args.script)
        .map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    parse_script(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn resolve_family<'a>(
    document: &'a ScriptDocument,
    args: &CommonArgs,
) -> Result<&'a NeutrosophicFamily, Failure> {
    let id = &args.family;
    match document.family(id) {
        Some(family) => Ok(family),
        None if document.get(id).is_some() => {
            Err(Failure::usage(format!("'{id}' is not a family")))
        }
        None => Err(Failure::usage(format!("family '{id}' not found in script"))),
    }
}

/// Renders a family as text (newline-terminated) or as its JSON document.
fn family_output(
    family: &NeutrosophicFamily,
    args: &CommonArgs,
) -> Result<String, Failure> {
    if args.json_out {
        let doc = StructuredFamily::from_family(family).map_err(Failure::usage)?;
        Ok(doc.to_json())
    } else {
        let mut text = render_family(family, &render_options(args));
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Ok(text)
    }
}

fn member_reference(family: &NeutrosophicFamily, index: usize) -> String {
    family.members()[index]
        .name()
        .map(str::to_owned)
        .unwrap_or_else(|| format!("#{index}"))
}

fn describe_violation(family: &NeutrosophicFamily, violation: TopologyViolation) -> String {
    match violation {
        TopologyViolation::MissingEmptySet => "missing neutrosophic empty set".to_owned(),
        TopologyViolation::MissingAbsoluteSet => "missing neutrosophic absolute set".to_owned(),
        TopologyViolation::UnionNotClosed { left, right } => format!(
            "not closed under union: {} \u{222A} {} is not a member",
            member_reference(family, left),
            member_reference(family, right)
        ),
        TopologyViolation::IntersectionNotClosed { left, right } => format!(
            "not closed under intersection: {} \u{2229} {} is not a member",
            member_reference(family, left),
            member_reference(family, right)
        ),
    }
}

fn cmd_base(args: &CommonArgs) -> Result<Outcome, Failure> {
    let document = load_document(args)?;
    let family = resolve_family(&document, args)?;
    let base = family.generate_base(size_cap(args)?).map_err(engine_failure)?;
    Ok(Outcome {
        stdout: family_output(&base, args)?,
        code: EXIT_OK,
    })
}

fn cmd_topology(args: &CommonArgs, from: FromMode) -> Result<Outcome, Failure> {
    let document = load_document(args)?;
    let family = resolve_family(&document, args)?;
    let cap = size_cap(args)?;
    let topology = match from {
        FromMode::Subbase => family.topology_from_subbase(cap),
        FromMode::Base => family.topology_from_base(cap),
    }
    .map_err(engine_failure)?;
    let body = family_output(&topology, args)?;
    let stdout = if args.json_out {
        body
    } else {
        format!(
            "topology has cardinality {} and is:\n{}",
            topology.cardinality(),
            body
        )
    };
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

fn cmd_check(args: &CommonArgs) -> Result<Outcome, Failure> {
    let document = load_document(args)?;
    let family = resolve_family(&document, args)?;
    match family.topology_violation().map_err(engine_failure)? {
        None => Ok(Outcome {
            stdout: "true\n".to_owned(),
            code: EXIT_OK,
        }),
        Some(violation) => Ok(Outcome {
            stdout: format!("false\n{}\n", describe_violation(family, violation)),
            code: EXIT_CHECK_FAILED,
        }),
    }
}

fn cmd_render(args: &CommonArgs) -> Result<Outcome, Failure> {
    let document = load_document(args)?;
    let family = resolve_family(&document, args)?;
    Ok(Outcome {
        stdout: family_output(family, args)?,
        code: EXIT_OK,
    })
}

/// Executes a parsed invocation.
pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Base(args) => cmd_base(args),
        Command::Topology { args, from } => cmd_topology(args, *from),
        Command::Check(args) => cmd_check(args),
        Command::Render(args) => cmd_render(args),
    }
}
