//! `qpoly`: generate quasi-regular polyhedra and their duals from Coxeter
//! group orbits, export meshes and write verification reports.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qpoly::catalog::{self, CatalogEntry, Construction};
use qpoly::coxeter::{Diagram, ReflectionGroup};
use qpoly::dual::DualSolid;
use qpoly::mesh::{export_mesh, MeshFormat};
use qpoly::orbit::WeightIndices;
use qpoly::par::Execution;
use qpoly::parse::parse_indices;
use qpoly::polyhedron::Polyhedron;
use qpoly::report::{DualRecord, InputEcho, Real, ReportDocument};
use qpoly::tolerance::epsilon;
use qpoly::verify::{self, EntryBuild, Status, Suite, Verified};

#[derive(Parser)]
#[command(
    name = "qpoly",
    version,
    about = "Quasi-regular polyhedra from quaternionic Coxeter groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the orbit polyhedron for a group and indices.
    Generate(GenerateArgs),
    /// Build the dual of the orbit polyhedron.
    Dual(DualArgs),
    /// List or build named solids.
    Catalog(CatalogArgs),
    /// Run the invariant suite.
    Verify(VerifyArgs),
}

#[derive(Args, Clone)]
struct Selection {
    /// Coxeter group: a3, b3 or h3.
    #[arg(long, value_parser = parse_group)]
    group: Diagram,
    /// Three comma-separated indices; `tau`, `sigma`, `sqrt2` and `*` allowed.
    #[arg(long, value_name = "A1,A2,A3", allow_hyphen_values = true, value_parser = parse_index_list)]
    indices: IndexList,
    /// Use the σ(a1 a2 a3) normalisation (H3 only).
    #[arg(long)]
    sigma_scale: bool,
}

#[derive(Args, Clone)]
struct Output {
    /// Mesh output, `.off` or `.obj`.
    #[arg(long)]
    mesh: Option<PathBuf>,
    /// JSON report output.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Rescale the output so the circumradius is 1.
    #[arg(long)]
    normalize_circumradius: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    selection: Selection,
    /// Use only the rotation subgroup; faces come from the convex hull.
    #[arg(long)]
    chiral: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct DualArgs {
    #[command(flatten)]
    selection: Selection,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
#[group(id = "catalog_mode", required = true, args = ["list", "name"])]
struct CatalogArgs {
    /// Print every preset name.
    #[arg(long)]
    list: bool,
    /// Preset to build.
    #[arg(long)]
    name: Option<String>,
    /// Write the dual instead of the primal solid.
    #[arg(long, requires = "name")]
    dual: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_group, requires = "indices", conflicts_with = "all_catalog")]
    group: Option<Diagram>,
    #[arg(long, value_name = "A1,A2,A3", allow_hyphen_values = true, value_parser = parse_index_list, requires = "group")]
    indices: Option<IndexList>,
    #[arg(long)]
    sigma_scale: bool,
    /// Verify every catalog entry.
    #[arg(long, required_unless_present = "group")]
    all_catalog: bool,
    /// JSON report output.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Clone, Debug)]
struct IndexList {
    text: String,
    values: [f64; 3],
}

fn parse_group(s: &str) -> Result<Diagram, String> {
    s.parse()
        .map_err(|_| format!("unknown group `{s}` (expected a3, b3 or h3)"))
}

fn parse_index_list(s: &str) -> Result<IndexList, String> {
    parse_indices(s)
        .map(|values| IndexList {
            text: s.to_string(),
            values,
        })
        .map_err(|e| e.to_string())
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn bad_input(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn weight_indices(sel: &Selection) -> CliResult<WeightIndices> {
    if sel.sigma_scale && sel.group != Diagram::H3 {
        return Err(bad_input(format!(
            "--sigma-scale: only defined for h3, not {}",
            sel.group
        )));
    }
    WeightIndices::with_sigma(sel.group, sel.indices.values, sel.sigma_scale)
        .map_err(|e| bad_input(format!("--indices: {e}")))
}

fn group_for(d: Diagram) -> CliResult<ReflectionGroup> {
    ReflectionGroup::new(d).map_err(|e| Failure {
        code: 2,
        message: e.to_string(),
    })
}

/// Writes `contents` to a temporary file beside `path`, then renames it.
fn write_atomic(path: &Path, contents: &str) -> CliResult {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let fail = |e: std::io::Error| bad_input(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(contents.as_bytes()).map_err(fail)?;
    tmp.as_file().sync_all().map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

fn mesh_format(out: &Output) -> CliResult<Option<MeshFormat>> {
    out.mesh
        .as_deref()
        .map(|p| MeshFormat::from_path(p).map_err(|e| bad_input(format!("--mesh: {e}"))))
        .transpose()
}

fn input_echo(command: &str, sel: Option<&Selection>, out: Option<&Output>, chiral: bool, subject: &str) -> InputEcho {
    InputEcho {
        command: command.to_string(),
        catalog_name: None,
        group: sel.map(|s| s.group),
        indices: sel.map(|s| s.indices.values.map(Real)),
        indices_text: sel.map(|s| s.indices.text.clone()),
        sigma_scale: sel.is_some_and(|s| s.sigma_scale),
        chiral,
        normalize_circumradius: out.is_some_and(|o| o.normalize_circumradius),
        mesh_scale: Real(1.0),
        epsilon: Real(epsilon()),
        subject: subject.to_string(),
    }
}

/// Writes mesh and report for `mesh`, scaled as requested.
fn emit(mesh: &Polyhedron, out: &Output, mut doc: ReportDocument, suite: &Suite) -> CliResult {
    let format = mesh_format(out)?;
    let scale = if out.normalize_circumradius {
        1.0 / mesh.circumradius()
    } else {
        1.0
    };
    let shown = mesh.scaled(scale);
    doc.input.mesh_scale = Real(scale);
    doc.set_geometry(&shown);
    doc.checks = suite.checks.clone();
    doc.conflicts = suite.conflicts.clone();
    if let (Some(path), Some(fmt)) = (&out.mesh, format) {
        write_atomic(path, &export_mesh(mesh, fmt, scale))?;
    }
    if let Some(path) = &out.report {
        write_atomic(path, &doc.to_json())?;
    }
    let c = mesh.census();
    println!(
        "V={} E={} F={} chi={}",
        c.vertices, c.edges, c.faces, c.euler_characteristic
    );
    for (kind, n) in &c.face_kinds {
        println!("  {n} {kind}");
    }
    summarize(suite)
}

/// Prints failures and flags; exit code 2 if anything failed.
fn summarize(suite: &Suite) -> CliResult {
    for c in &suite.checks {
        match c.status {
            Status::Fail => println!("FAIL {}: {}", c.name, c.detail),
            Status::Flagged => println!("FLAG {}: {}", c.name, c.detail),
            Status::Pass => {}
        }
    }
    let failed = suite.failures().count();
    let flagged = suite.checks.iter().filter(|c| c.status == Status::Flagged).count();
    println!(
        "checks: {} passed, {failed} failed, {flagged} flagged",
        suite.checks.len() - failed - flagged
    );
    if failed > 0 {
        Err(Failure {
            code: 2,
            message: format!("{failed} validation check(s) failed"),
        })
    } else {
        Ok(())
    }
}

fn validation(e: qpoly::error::Error) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

fn dual_record(v: &Verified) -> DualRecord {
    DualRecord::new(&v.dual, &v.transitivity, &v.formulas)
}

fn print_dual(dual: &DualSolid) {
    for r in dual.sphere_radii() {
        println!(
            "  ω{}: factor {:.12}, radius {:.12}, {} vertices",
            r.weight + 1,
            r.scale_factor,
            r.radius,
            r.count
        );
    }
}

fn generate(args: GenerateArgs) -> CliResult {
    let w = weight_indices(&args.selection)?;
    let group = group_for(w.group)?;
    let mut doc = ReportDocument::new(input_echo(
        "generate",
        Some(&args.selection),
        Some(&args.output),
        args.chiral,
        "primal",
    ));
    if args.chiral {
        let c = verify::verify_chiral(&group, &w, None, Execution::default()).map_err(validation)?;
        return emit(&c.mesh, &args.output, doc, &c.suite);
    }
    let v = verify::verify_indices(&group, &w, None, Execution::default()).map_err(validation)?;
    doc.dual = Some(dual_record(&v));
    emit(&v.polyhedron.mesh, &args.output, doc, &v.suite)
}

fn dual(args: DualArgs) -> CliResult {
    let w = weight_indices(&args.selection)?;
    let group = group_for(w.group)?;
    let v = verify::verify_indices(&group, &w, None, Execution::default()).map_err(validation)?;
    let mut doc = ReportDocument::new(input_echo(
        "dual",
        Some(&args.selection),
        Some(&args.output),
        false,
        "dual",
    ));
    doc.dual = Some(dual_record(&v));
    print_dual(&v.dual);
    emit(&v.dual.mesh, &args.output, doc, &v.suite)
}

fn entry_echo(entry: &CatalogEntry, out: &Output, subject: &str) -> InputEcho {
    InputEcho {
        command: "catalog".to_string(),
        catalog_name: Some(entry.name.to_string()),
        group: Some(entry.group),
        indices: Some(entry.indices.map(Real)),
        indices_text: None,
        sigma_scale: entry.sigma_scale,
        chiral: entry.construction == Construction::ChiralPair,
        normalize_circumradius: out.normalize_circumradius,
        mesh_scale: Real(1.0),
        epsilon: Real(epsilon()),
        subject: subject.to_string(),
    }
}

fn catalog_cmd(args: CatalogArgs) -> CliResult {
    if args.list {
        for n in catalog::names() {
            println!("{n}");
        }
        return Ok(());
    }
    let name = args.name.as_deref().unwrap_or_default();
    let entry = catalog::lookup(name)
        .map_err(|e| bad_input(format!("--name: {e}; valid names: {}", catalog::names().join(", "))))?;
    let built = verify::build_entry(&entry, Execution::default()).map_err(validation)?;
    let subject = if args.dual { "dual" } else { "primal" };
    let mut doc = ReportDocument::new(entry_echo(&entry, &args.output, subject));
    println!(
        "{}: {} ({})",
        entry.name,
        entry.notes,
        entry.weight_indices().map_err(validation)?
    );
    match &built {
        EntryBuild::Orbit(v) => {
            doc.dual = Some(dual_record(v));
            if args.dual {
                print_dual(&v.dual);
                return emit(&v.dual.mesh, &args.output, doc, &v.suite);
            }
        }
        EntryBuild::Chiral(_) if args.dual => {
            return Err(bad_input("--dual: the chiral pair has no dual construction"));
        }
        EntryBuild::Chiral(_) => {}
    }
    emit(built.mesh(), &args.output, doc, built.suite())
}

fn verify_cmd(args: VerifyArgs) -> CliResult {
    let exec = Execution::default();
    if args.all_catalog {
        let mut suite = Suite::default();
        for entry in catalog::entries() {
            suite.extend(verify::verify_entry(&entry, exec).map_err(validation)?);
        }
        let mut doc = ReportDocument::new(InputEcho {
            command: "verify".to_string(),
            catalog_name: Some("all".to_string()),
            group: None,
            indices: None,
            indices_text: None,
            sigma_scale: false,
            chiral: false,
            normalize_circumradius: false,
            mesh_scale: Real(1.0),
            epsilon: Real(epsilon()),
            subject: "catalog".to_string(),
        });
        doc.checks = suite.checks.clone();
        doc.conflicts = suite.conflicts.clone();
        if let Some(path) = &args.report {
            write_atomic(path, &doc.to_json())?;
        }
        return summarize(&suite);
    }
    let (Some(group), Some(indices)) = (args.group, args.indices) else {
        return Err(bad_input("--group and --indices, or --all-catalog, are required"));
    };
    let sel = Selection {
        group,
        indices,
        sigma_scale: args.sigma_scale,
    };
    let w = weight_indices(&sel)?;
    let g = group_for(w.group)?;
    let v = verify::verify_indices(&g, &w, None, exec).map_err(validation)?;
    for f in &v.formulas {
        println!(
            "  {} {}: printed {:.12}, solved {:.12}",
            f.family, f.symbol, f.printed, f.solved
        );
    }
    let mut doc = ReportDocument::new(input_echo("verify", Some(&sel), None, false, "primal"));
    doc.dual = Some(dual_record(&v));
    let out = Output {
        mesh: None,
        report: args.report,
        normalize_circumradius: false,
    };
    emit(&v.polyhedron.mesh, &out, doc, &v.suite)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Dual(a) => dual(a),
        Command::Catalog(a) => catalog_cmd(a),
        Command::Verify(a) => verify_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
