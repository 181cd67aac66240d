//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with in-memory streams.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::candmap::{build_candidate_map, format_map_text, parse_map_text, CandidateMap, OrbitSymbol};
use crate::enumerate::{check_expected, enumerate_filtered, summary_line, Filters};
use crate::geometry::Coordinate3;
use crate::geomiso::{canonical_map_form, classify_face_orbit, maps_isomorphic};
use crate::realize::{
    cross_validate_m2, export_off, m2_case_analysis, place_vertices, search_realizations, verify_realization,
    RealizeError,
};
use crate::rotgroup::{build_tetrahedral_group, GroupKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "vtpoly",
    version,
    about = "Vertex-transitive polyhedral maps with tetrahedral symmetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    Tucker,
    Schewe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Off,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate candidate maps up to geometric isomorphism.
    Enumerate {
        #[arg(long, default_value = "T")]
        group: String,
        #[arg(long = "filter", value_enum)]
        filters: Vec<FilterArg>,
        #[arg(long, allow_negative_numbers = true)]
        min_genus: Option<i64>,
        /// Write one map file per class into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Face-orbit class of every symbol in a map file, plus the canonical form.
    Classify { map: PathBuf },
    /// Counts, genus and local rotation of a map file.
    Report { map: PathBuf },
    /// Check whether the map is embedded when the base vertex is placed at BASE.
    Verify {
        map: PathBuf,
        #[arg(allow_hyphen_values = true)]
        base: Coordinate3,
    },
    /// List primitive integer bases within the bound at which the map is embedded.
    Search {
        map: PathBuf,
        #[arg(long)]
        bound: i64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Export an embedded realization.
    Export {
        map: PathBuf,
        #[arg(allow_hyphen_values = true)]
        base: Coordinate3,
        #[arg(long, value_enum, default_value = "off")]
        format: FormatArg,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print an element of the normalizer taking one map to the other, or "none".
    Isomorphic { first: PathBuf, second: PathBuf },
    /// Region and case analysis of the obstruction map at BASE, cross-checked
    /// against the verifier.
    Cases {
        #[arg(allow_hyphen_values = true)]
        base: Coordinate3,
    },
}

/// Failure that ends a command; carries its exit code.
struct Exit {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn io_error(e: std::io::Error) -> Exit {
    usage(format!("i/o error: {e}"))
}

fn read_symbols(path: &Path) -> Result<Vec<OrbitSymbol>, Exit> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_map_text(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_map(path: &Path) -> Result<CandidateMap, Exit> {
    let symbols = read_symbols(path)?;
    build_candidate_map(&symbols, &build_tetrahedral_group()).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Exit { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Exit> {
    match command {
        Command::Enumerate {
            group,
            filters,
            min_genus,
            out_dir,
        } => {
            let kind: GroupKind = group.parse().map_err(|e| usage(format!("{e}")))?;
            if kind != GroupKind::Tetrahedral {
                return Err(usage(format!("group {group} is unsupported; only T is available")));
            }
            let filters = Filters {
                tucker: filters.contains(&FilterArg::Tucker),
                schewe: filters.contains(&FilterArg::Schewe),
                min_genus,
            };
            let group = build_tetrahedral_group();
            let classes = enumerate_filtered(&group, &filters);
            let mut code = EXIT_OK;
            if filters == Filters::default() {
                let all: Vec<_> = classes.iter().map(|(c, _)| c.clone()).collect();
                if let Err(d) = check_expected(&all) {
                    writeln!(err, "{d}").map_err(io_error)?;
                    code = EXIT_NEGATIVE;
                }
            }
            if let Some(dir) = &out_dir {
                fs::create_dir_all(dir).map_err(io_error)?;
            }
            writeln!(out, "classes {}", classes.len()).map_err(io_error)?;
            for (i, (class, map)) in classes.iter().enumerate() {
                writeln!(out, "map {i} {}", summary_line(map)).map_err(io_error)?;
                if let Some(dir) = &out_dir {
                    let path = dir.join(format!("map{i}_genus{}.map", class.genus));
                    fs::write(&path, format_map_text(&class.representative)).map_err(io_error)?;
                }
            }
            Ok(code)
        }
        Command::Classify { map } => {
            let symbols = read_symbols(&map)?;
            let mut code = EXIT_OK;
            for s in &symbols {
                match classify_face_orbit(s) {
                    Ok(class) => writeln!(out, "{s} {class}"),
                    Err(e) => {
                        code = EXIT_NEGATIVE;
                        writeln!(out, "{s} {e}")
                    }
                }
                .map_err(io_error)?;
            }
            let canonical: Vec<String> = canonical_map_form(&symbols).iter().map(|s| s.to_string()).collect();
            writeln!(out, "canonical {}", canonical.join("")).map_err(io_error)?;
            Ok(code)
        }
        Command::Report { map } => {
            let map = read_map(&map)?;
            writeln!(out, "{}", summary_line(&map)).map_err(io_error)?;
            Ok(EXIT_OK)
        }
        Command::Verify { map, base } => {
            let map = read_map(&map)?;
            if base.is_zero() {
                return Err(usage("base vertex is the zero vector"));
            }
            let report = verify_realization(&map, &base);
            write!(out, "{report}").map_err(io_error)?;
            Ok(if report.is_embedded() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Search { map, bound, workers } => {
            let map = read_map(&map)?;
            let hits = search_realizations(&map, bound, workers).map_err(|e| usage(e.to_string()))?;
            for h in &hits {
                writeln!(out, "{h}").map_err(io_error)?;
            }
            writeln!(out, "found {}", hits.len()).map_err(io_error)?;
            Ok(if hits.is_empty() { EXIT_NEGATIVE } else { EXIT_OK })
        }
        Command::Export {
            map,
            base,
            format: FormatArg::Off,
            out: path,
        } => {
            let map = read_map(&map)?;
            let realization = place_vertices(&map, &base).map_err(|e| usage(e.to_string()))?;
            let text = match export_off(&realization) {
                Ok(text) => text,
                Err(e @ RealizeError::NotEmbedded(_)) => {
                    writeln!(err, "{e}").map_err(io_error)?;
                    return Ok(EXIT_NEGATIVE);
                }
                Err(e) => return Err(usage(e.to_string())),
            };
            match path {
                Some(p) => fs::write(&p, text).map_err(io_error)?,
                None => out.write_all(text.as_bytes()).map_err(io_error)?,
            }
            Ok(EXIT_OK)
        }
        Command::Isomorphic { first, second } => {
            let a = read_symbols(&first)?;
            let b = read_symbols(&second)?;
            match maps_isomorphic(&a, &b) {
                Some(w) => {
                    writeln!(out, "witness {w} det {}", w.det()).map_err(io_error)?;
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "none").map_err(io_error)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Cases { base } => {
            let verdict = m2_case_analysis(&base).map_err(|e| usage(e.to_string()))?;
            write!(out, "{verdict}").map_err(io_error)?;
            match cross_validate_m2(&base) {
                Ok(true) => {
                    writeln!(out, "cross-validation confirmed").map_err(io_error)?;
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    writeln!(out, "cross-validation disagrees").map_err(io_error)?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => {
                    writeln!(out, "cross-validation skipped: {e}").map_err(io_error)?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("vtpoly").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn unsupported_group() {
        let (code, _, err) = run_str(&["enumerate", "--group", "O"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("unsupported"));
    }

    #[test]
    fn unknown_group_is_a_usage_error() {
        assert_eq!(run_str(&["enumerate", "--group", "X"]).0, EXIT_USAGE);
    }

    #[test]
    fn filtered_enumeration_prints_two_maps() {
        let (code, out, _) = run_str(&[
            "enumerate",
            "--filter",
            "tucker",
            "--filter",
            "schewe",
            "--min-genus",
            "2",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("classes 2\n"));
        assert_eq!(out.matches("genus=3").count(), 2);
    }

    #[test]
    fn negative_base_is_accepted_as_a_positional() {
        let (code, out, _) = run_str(&["cases", "-1,2,-6"]);
        assert!(out.starts_with("region "));
        assert!(code == EXIT_OK || code == EXIT_NEGATIVE);
    }

    #[test]
    fn missing_file_is_a_usage_error() {
        assert_eq!(run_str(&["report", "/nonexistent/map"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("enumerate"));
    }
}
