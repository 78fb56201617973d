//! `smallcover`: characteristic maps over simple polytopes from the command
//! line.
//!
//! Pipelines: `hull` ingests exact rational coordinates and emits the dual
//! simple polytope, `gen cyclic` produces dual cyclic polytopes, `enumerate`
//! lists canonical Z2 characteristic matrices, `classify` groups them into
//! symmetry orbits, `lift` searches bounded integer lifts, `invariants`
//! reports combinatorial data and `batch` sweeps a directory of polytope
//! files. All output is deterministic regardless of `--workers`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use smallcover::combinatorics::{cyclic_polytope, dualize, facets_from_points, SimplePolytope};
use smallcover::gf2::{
    enumerate_char_maps, quick_obstruction, EnumerateOptions, EnumerationReport, Obstruction,
};
use smallcover::io;
use smallcover::lift::{find_lift, CharMatrixZ};
use smallcover::symmetry::{automorphisms, orbit_classify};

/// Exit codes: 0 success, 1 partial batch failure, 2 invalid input.
const EXIT_PARTIAL: u8 = 1;
const EXIT_INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "smallcover", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalArgs,
}

#[derive(Args)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for the enumeration search.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    workers: u32,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Convex hull of exact rational points; writes the dual simple polytope.
    Hull { points_file: PathBuf },
    /// Combinatorial generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Enumerate canonical Z2 characteristic matrices.
    Enumerate { polytope_file: PathBuf },
    /// Classify matrices into symmetry orbits.
    Classify {
        polytope_file: PathBuf,
        matrices_file: PathBuf,
    },
    /// Search bounded integer lifts for every matrix.
    Lift {
        polytope_file: PathBuf,
        matrices_file: PathBuf,
        /// Largest absolute entry value explored.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
    },
    /// Combinatorial invariant report for a polytope.
    Invariants { polytope_file: PathBuf },
    /// Run enumerate/classify/lift over every polytope file in a directory.
    Batch { directory: PathBuf },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Dual of the cyclic polytope C^n(m) via Gale's evenness condition.
    Cyclic { n: usize, m: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, io::IoError> {
    let opts = EnumerateOptions {
        workers: cli.global.workers as usize,
    };
    let out = match &cli.command {
        Command::Hull { points_file } => cmd_hull(points_file, cli.global.format)?,
        Command::Gen(GenCommand::Cyclic { n, m }) => cmd_gen_cyclic(*n, *m, cli.global.format)?,
        Command::Enumerate { polytope_file } => {
            cmd_enumerate(polytope_file, &opts, cli.global.format)?
        }
        Command::Classify {
            polytope_file,
            matrices_file,
        } => cmd_classify(polytope_file, matrices_file, cli.global.format)?,
        Command::Lift {
            polytope_file,
            matrices_file,
            bound,
        } => cmd_lift(polytope_file, matrices_file, *bound, cli.global.format)?,
        Command::Invariants { polytope_file } => cmd_invariants(polytope_file, cli.global.format)?,
        Command::Batch { directory } => {
            let (text, partial) = cmd_batch(directory, &opts, cli.global.format)?;
            emit(&cli.global.output, &text)?;
            return Ok(if partial {
                ExitCode::from(EXIT_PARTIAL)
            } else {
                ExitCode::SUCCESS
            });
        }
    };
    emit(&cli.global.output, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), io::IoError> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "polytope".to_string())
}

fn cmd_hull(points_file: &Path, format: Format) -> Result<String, io::IoError> {
    let pts = io::load_points(points_file)?;
    let sf = facets_from_points(&pts)?;
    let dual = dualize(&sf, file_stem(points_file))?;
    Ok(match format {
        Format::Json => io::polytope_to_json(&dual),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "polytope {}", dual.name());
            let _ = writeln!(s, "dim {}", dual.dim());
            let _ = writeln!(s, "facets {}", dual.num_facets());
            let _ = writeln!(s, "simplicial facets ({}):", sf.facets().len());
            for f in sf.facets() {
                let _ = writeln!(s, "  {}", join(f));
            }
            let _ = writeln!(s, "vertices ({}):", dual.vertex_sets().len());
            for v in dual.vertex_sets() {
                let _ = writeln!(s, "  {}", join(&v));
            }
            if let Some(perm) = dual.relabel() {
                let _ = writeln!(s, "relabel {}", join(perm.images()));
            }
            s
        }
    })
}

fn cmd_gen_cyclic(n: usize, m: usize, format: Format) -> Result<String, io::IoError> {
    let sf = cyclic_polytope(n, m)?;
    let dual = dualize(&sf, format!("dual-c{n}-{m}"))?;
    Ok(match format {
        Format::Json => io::polytope_to_json(&dual),
        Format::Text => polytope_text(&dual),
    })
}

fn polytope_text(p: &SimplePolytope) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polytope {}", p.name());
    let _ = writeln!(s, "dim {}", p.dim());
    let _ = writeln!(s, "facets {}", p.num_facets());
    let _ = writeln!(s, "vertices ({}):", p.vertex_sets().len());
    for v in p.vertex_sets() {
        let _ = writeln!(s, "  {}", join(&v));
    }
    s
}

fn enumerate_with_obstruction(
    p: &SimplePolytope,
    opts: &EnumerateOptions,
) -> Result<EnumerationReport, io::IoError> {
    // a blocked polytope cannot carry a characteristic map; skip the search
    if quick_obstruction(p) == Obstruction::Blocked {
        eprintln!("obstruction: 2-neighborly with m >= 2^n, no characteristic map exists");
        return Ok(EnumerationReport {
            polytope: p.name().to_string(),
            matrices: Vec::new(),
            nodes_explored: 0,
            wall_time: std::time::Duration::ZERO,
        });
    }
    let report = enumerate_char_maps(p, opts)?;
    eprintln!(
        "searched {} nodes in {:?}",
        report.nodes_explored, report.wall_time
    );
    Ok(report)
}

fn cmd_enumerate(
    polytope_file: &Path,
    opts: &EnumerateOptions,
    format: Format,
) -> Result<String, io::IoError> {
    let p = io::load_polytope(polytope_file)?;
    let report = enumerate_with_obstruction(&p, opts)?;
    Ok(match format {
        Format::Json => io::matrices_to_json(&report, p.dim(), p.num_facets()),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "polytope {}", report.polytope);
            let _ = writeln!(s, "count {}", report.count());
            for m in &report.matrices {
                let _ = writeln!(s);
                for row in m.rows() {
                    let _ = writeln!(s, "{}", join(&row));
                }
            }
            s
        }
    })
}

fn cmd_classify(
    polytope_file: &Path,
    matrices_file: &Path,
    format: Format,
) -> Result<String, io::IoError> {
    let p = io::load_polytope(polytope_file)?;
    let report = io::load_matrices(matrices_file)?;
    let group = automorphisms(&p);
    let classes =
        orbit_classify(&report, &group).map_err(|e| io::IoError::Invalid(e.to_string()))?;
    Ok(match format {
        Format::Json => io::classification_to_json(p.name(), &group, &classes),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "polytope {}", p.name());
            let _ = writeln!(s, "aut_order {}", group.order());
            for g in group.generators() {
                let _ = writeln!(s, "generator {}", join(g.images()));
            }
            let _ = writeln!(s, "orbits {}", classes.orbit_count());
            for orbit in &classes.orbits {
                let _ = writeln!(s, "  {}", join(orbit));
            }
            let _ = writeln!(s, "representatives:");
            for rep in &classes.representatives {
                let _ = writeln!(s);
                for row in rep.rows() {
                    let _ = writeln!(s, "{}", join(&row));
                }
            }
            s
        }
    })
}

fn cmd_lift(
    polytope_file: &Path,
    matrices_file: &Path,
    bound: i64,
    format: Format,
) -> Result<String, io::IoError> {
    let p = io::load_polytope(polytope_file)?;
    let report = io::load_matrices(matrices_file)?;
    let results = lift_all(&p, &report, bound)?;
    Ok(match format {
        Format::Json => io::lifts_to_json(p.name(), bound, &results),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "polytope {}", p.name());
            let _ = writeln!(s, "bound {bound}");
            for (i, result) in results.iter().enumerate() {
                match result {
                    Some(lift) => {
                        let _ = writeln!(s, "lift {i}:");
                        for row in lift.rows() {
                            let _ = writeln!(s, "{}", join(&row));
                        }
                    }
                    None => {
                        let _ = writeln!(s, "lift {i}: {}", io::NO_LIFT_STATUS);
                    }
                }
            }
            s
        }
    })
}

fn lift_all(
    p: &SimplePolytope,
    report: &EnumerationReport,
    bound: i64,
) -> Result<Vec<Option<CharMatrixZ>>, io::IoError> {
    report
        .matrices
        .iter()
        .map(|z2| find_lift(z2, p, bound).map_err(|e| io::IoError::Invalid(e.to_string())))
        .collect()
}

fn cmd_invariants(polytope_file: &Path, format: Format) -> Result<String, io::IoError> {
    let p = io::load_polytope(polytope_file)?;
    let report = io::invariant_report(&p)?;
    Ok(match format {
        Format::Json => io::to_pretty_json(&report),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "polytope {}", p.name());
            let _ = writeln!(s, "f {}", join(&report.f));
            let _ = writeln!(s, "h {}", join(&report.h));
            let _ = writeln!(s, "neighborly_k {}", report.neighborly_k);
            let _ = writeln!(s, "chi {}", report.chi);
            let _ = writeln!(s, "obstruction_2n {}", report.obstruction_2n);
            let _ = writeln!(s, "sr_generators ({}):", report.sr_generators.len());
            for g in &report.sr_generators {
                let _ = writeln!(s, "  {}", join(g));
            }
            let _ = writeln!(s, "betti {}", join(&report.betti));
            s
        }
    })
}

#[derive(Serialize)]
#[serde(untagged)]
enum BatchRow {
    Ok {
        file: String,
        polytope: String,
        matrices: usize,
        aut_order: usize,
        orbits: usize,
        lifting: String,
    },
    Err {
        file: String,
        error: String,
    },
}

fn cmd_batch(
    directory: &Path,
    opts: &EnumerateOptions,
    format: Format,
) -> Result<(String, bool), io::IoError> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(directory)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|path| path.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();

    // parallelize across files; rows are written back by index, so output
    // order stays the filename order for any worker count
    let mut slots: Vec<Option<BatchRow>> = (0..files.len()).map(|_| None).collect();
    let workers = opts.workers.min(files.len()).max(1);
    let per_file = EnumerateOptions { workers: 1 };
    std::thread::scope(|scope| {
        let chunk = files.len().div_ceil(workers).max(1);
        let jobs = files.chunks(chunk).zip(slots.chunks_mut(chunk));
        for (job_files, job_slots) in jobs {
            let per_file = &per_file;
            scope.spawn(move || {
                for (file, slot) in job_files.iter().zip(job_slots.iter_mut()) {
                    let name = file
                        .file_name()
                        .map(|s| s.to_string_lossy().into_owned())
                        .unwrap_or_default();
                    *slot = Some(match batch_one(file, per_file) {
                        Ok(row) => row,
                        Err(err) => BatchRow::Err {
                            file: name,
                            error: err.to_string(),
                        },
                    });
                }
            });
        }
    });
    let rows: Vec<BatchRow> = slots
        .into_iter()
        .map(|r| r.expect("row computed"))
        .collect();
    let partial = rows.iter().any(|r| matches!(r, BatchRow::Err { .. }));

    let text = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct BatchFile {
                rows: Vec<BatchRow>,
            }
            io::to_pretty_json(&BatchFile { rows })
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "file polytope matrices aut_order orbits lifting");
            for row in &rows {
                match row {
                    BatchRow::Ok {
                        file,
                        polytope,
                        matrices,
                        aut_order,
                        orbits,
                        lifting,
                    } => {
                        let _ = writeln!(
                            s,
                            "{file} {polytope} {matrices} {aut_order} {orbits} {lifting}"
                        );
                    }
                    BatchRow::Err { file, error } => {
                        let _ = writeln!(s, "{file} error: {error}");
                    }
                }
            }
            s
        }
    };
    Ok((text, partial))
}

fn batch_one(file: &Path, opts: &EnumerateOptions) -> Result<BatchRow, io::IoError> {
    let p = io::load_polytope(file)?;
    let report = enumerate_with_obstruction(&p, opts)?;
    let group = automorphisms(&p);
    let classes =
        orbit_classify(&report, &group).map_err(|e| io::IoError::Invalid(e.to_string()))?;
    let lifting = if report.count() == 0 {
        "no_matrices".to_string()
    } else {
        let results = lift_all(&p, &report, 2)?;
        if results.iter().all(Option::is_some) {
            "all_lift".to_string()
        } else {
            io::NO_LIFT_STATUS.to_string()
        }
    };
    Ok(BatchRow::Ok {
        file: file
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default(),
        polytope: p.name().to_string(),
        matrices: report.count(),
        aut_order: group.order(),
        orbits: classes.orbit_count(),
        lifting,
    })
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
