use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gcrossed::check::Level;
use gcrossed::crossed::Limits;
use gcrossed::report::{self, CmdError, Format};

#[derive(Parser)]
#[command(name = "gcrossed", version, about = "Fusion subcategories and Müger centralizers of equivariantized pointed braided crossed categories")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// largest accepted group order
    #[arg(long, global = true, default_value_t = 48)]
    limit_group: usize,
    /// largest accepted number of fusion subcategories
    #[arg(long, global = true, default_value_t = 4096)]
    limit_subcats: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check every structural condition of an instance file
    Validate { instance: String },
    /// Print the instance file of the untwisted double of a built-in group or Cayley-table file
    GenDouble { group: String },
    /// List simple objects, dimensions, duals and fusion rules
    Simples { instance: String },
    /// Enumerate fusion subcategories and their data
    Subcats {
        instance: String,
        /// write the Hasse diagram as Graphviz DOT
        #[arg(long)]
        dot: Option<String>,
    },
    /// Compute Müger centralizers
    Centralize {
        instance: String,
        /// N, #N, (h,y) or (h,y,k)
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        datum: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Verify the identities the engine relies on
    Check {
        instance: String,
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
    },
}

fn read_source(path: &str) -> Result<Option<String>, CmdError> {
    if path.starts_with("builtin:") {
        return Ok(None);
    }
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CmdError::Usage(format!("cannot read `{path}`: {e}")))?;
    Ok(Some(text))
}

fn run(cli: Cli) -> Result<(String, bool), CmdError> {
    let limits = Limits { group: cli.limit_group, subcats: cli.limit_subcats, ..Limits::default() };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Structured => Format::Structured,
    };
    let load = |path: &str| -> Result<_, CmdError> {
        let text = read_source(path)?;
        let raw = report::load_raw(path, text.as_deref())?;
        report::load(&raw, limits)
    };
    let out = match cli.cmd {
        Cmd::Validate { instance } => {
            let text = read_source(&instance)?;
            let raw = report::load_raw(&instance, text.as_deref())?;
            let found = report::violations(&raw, limits);
            if !found.is_empty() {
                let lines: Vec<String> = found.iter().map(|v| format!("  {v}")).collect();
                return Err(CmdError::Validation(format!("{} violations\n{}", found.len(), lines.join("\n"))));
            }
            report::cmd_validate(&raw, limits)?.render(format)
        }
        Cmd::GenDouble { group } => {
            let table = if std::path::Path::new(&group).is_file() { read_source(&group)? } else { None };
            let name = std::path::Path::new(&group).file_stem().and_then(|s| s.to_str()).unwrap_or("g").to_string();
            report::cmd_gen_double(if table.is_some() { &name } else { &group }, table.as_deref())?
        }
        Cmd::Simples { instance } => report::cmd_simples(load(&instance)?)?.render(format),
        Cmd::Subcats { instance, dot } => {
            let (r, text) = report::cmd_subcats(load(&instance)?, dot.is_some())?;
            if let (Some(path), Some(text)) = (dot, text) {
                std::fs::write(&path, text).map_err(|e| CmdError::Usage(format!("cannot write `{path}`: {e}")))?;
            }
            r.render(format)
        }
        Cmd::Centralize { instance, datum, all: _ } => {
            report::cmd_centralize(load(&instance)?, datum.as_deref())?.render(format)
        }
        Cmd::Check { instance, level } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let r = report::cmd_check(load(&instance)?, level);
            let ok = r.checks.as_ref().is_some_and(|c| c.all_passed());
            return Ok((r.render(format), ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            ExitCode::from(if ok { 0 } else { 4 })
        }
        Err(e) => {
            eprintln!("gcrossed: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
