//! Command-line surface for eccentricity-matrix analysis of bi-block
//! graphs: classification, block decomposition, associated trees, centers,
//! exact spectra, structural partitions, theorem verification and seeded
//! generation.
//!
//! Exit codes: 0 success / all checks pass, 1 property failure,
//! 2 input error, 3 infeasible generation.

mod checks;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use eccspectra::{
    all_pairs_distances, build_partition, build_tg, center_of_g, classify_decomposition,
    decompose, ecc_profile, eccentricity_matrix_from, eigenvalues_float, inertia_exact,
    is_irreducible, is_spectrum_symmetric, parse_graph, spectral, BlockKind, Error, GenParams,
    Graph, Parity,
};

use checks::run_case;
use report::{checks_json, json_f64_list, print_checks, sha256_hex, sig6, snap_zero, Check, SCHEMA};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "eccspectra",
    about = "Eccentricity matrices of bi-block graphs: exact spectra, centers, theorem checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
    Any,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
            ParityArg::Any => Parity::Any,
        }
    }
}

#[derive(Args)]
struct OutputOpts {
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenOpts {
    /// Seed of the deterministic generator.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Minimum diameter of the generated graph.
    #[arg(long = "min-diam", default_value_t = 4)]
    min_diam: u32,
    /// Requested diameter parity.
    #[arg(long, value_enum, default_value_t = ParityArg::Any)]
    parity: ParityArg,
    /// Largest number of vertices.
    #[arg(long = "max-vertices", default_value_t = 60)]
    max_vertices: usize,
    /// Inclusive block-count range, written MIN..MAX.
    #[arg(long, default_value = "2..8", value_parser = parse_range)]
    blocks: (usize, usize),
    /// Inclusive part-size range, written MIN..MAX.
    #[arg(long, default_value = "1..4", value_parser = parse_range)]
    parts: (usize, usize),
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected MIN..MAX, got `{s}`"))?;
    let lo = lo.trim().parse().map_err(|_| format!("bad MIN in `{s}`"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad MAX in `{s}`"))?;
    Ok((lo, hi))
}

impl GenOpts {
    fn params(&self, seed: u64) -> GenParams {
        GenParams {
            seed,
            blocks: self.blocks,
            parts: self.parts,
            parity: self.parity.into(),
            min_diameter: self.min_diam,
            max_vertices: self.max_vertices,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one graph: classification, matrix, exact spectrum,
    /// and, for class-B graphs of diameter at least four, every theorem.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run the invariant suite on a graph file or on generated graphs.
    Verify {
        /// Graph file; omit to verify generated graphs.
        file: Option<PathBuf>,
        /// Number of generated cases.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[command(flatten)]
        gen: GenOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Block decomposition, cut vertices and class membership.
    Blocks {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Associated tree of a class-B graph, in edge-list format.
    Tg {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Center of the graph and of its associated tree, with the theorem case.
    Center {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Eccentricity matrix summary or raw dump.
    #[command(name = "ecc-matrix")]
    EccMatrix {
        file: PathBuf,
        /// Print the raw matrix, one row per line.
        #[arg(long = "dump-matrix")]
        dump_matrix: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Exact characteristic polynomial, inertia, symmetry and float spectrum.
    Spectrum {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Structural vertex partition and the block-form check.
    Partition {
        file: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Generate a class-B graph in edge-list format.
    Generate {
        #[command(flatten)]
        gen: GenOpts,
        /// Write the graph to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // Die quietly when the consumer closes the pipe, like other line tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { file, output } => cmd_analyze(&file, &output),
        Command::Verify {
            file,
            count,
            gen,
            output,
        } => cmd_verify(file.as_deref(), count, &gen, &output),
        Command::Blocks { file, output } => cmd_blocks(&file, &output),
        Command::Tg { file, output } => cmd_tg(&file, &output),
        Command::Center { file, output } => cmd_center(&file, &output),
        Command::EccMatrix {
            file,
            dump_matrix,
            output,
        } => cmd_ecc_matrix(&file, dump_matrix, &output),
        Command::Spectrum { file, output } => cmd_spectrum(&file, &output),
        Command::Partition { file, output } => cmd_partition(&file, &output),
        Command::Generate { gen, out } => cmd_generate(&gen, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Infeasible { .. } => EXIT_INFEASIBLE,
        Error::NoConvergence { .. } => EXIT_CHECK_FAILED,
        _ => EXIT_INPUT_ERROR,
    }
}

struct Input {
    path: String,
    graph: Graph,
    sha256: String,
}

fn load_graph(path: &Path) -> Result<Input, Error> {
    let bytes = fs::read(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Invalid(format!("{} is not UTF-8", path.display())))?;
    let graph = parse_graph(&text)?;
    Ok(Input {
        path: path.display().to_string(),
        graph,
        sha256: sha256_hex(&bytes),
    })
}

fn input_json(input: &Input) -> Value {
    json!({
        "path": input.path,
        "n": input.graph.n(),
        "m": input.graph.edge_count(),
        "sha256": input.sha256,
    })
}

fn emit(output: &OutputOpts, text: String, jsonv: Value) -> Result<(), Error> {
    let payload = if output.json {
        serde_json::to_string(&jsonv).expect("reports serialize") + "\n"
    } else {
        text
    };
    match &output.out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

fn cmd_analyze(path: &Path, output: &OutputOpts) -> Result<u8, Error> {
    let input = load_graph(path)?;
    let g = &input.graph;
    let d = all_pairs_distances(g)?;
    let profile = ecc_profile(&d);
    let bd = decompose(g)?;
    let class = classify_decomposition(g, &bd);
    let e = eccentricity_matrix_from(&d, &profile);
    let poly = spectral::char_poly_ecc(&e);
    let inertia = inertia_exact(&poly)?;
    let symmetric = is_spectrum_symmetric(&poly);
    let irreducible = is_irreducible(&e);
    let spectrum = eigenvalues_float(&e)?;
    let outcome = run_case(g)?;

    let mut text = String::new();
    text += &format!(
        "input: {} (n={}, m={}, sha256={})\n",
        input.path,
        g.n(),
        g.edge_count(),
        &input.sha256[..16]
    );
    text += &format!("class: {}\n", outcome.class_tag);
    text += &format!(
        "blocks: {} (cut vertices: {})\n",
        bd.blocks.len(),
        join(&bd.cut_vertices)
    );
    text += &format!(
        "radius {}, diameter {}, center: {}\n",
        profile.radius,
        profile.diameter,
        join(&profile.center)
    );
    text += &format!(
        "eccentricity matrix: {} nonzero entries, irreducible: {}\n",
        e.nonzero_count(),
        irreducible
    );
    text += &format!("char poly: {}\n", poly.dump_descending());
    text += &format!("inertia: {inertia}, spectrum symmetric: {symmetric}\n");
    let zero_tol = 1e-8 * e.frobenius_norm();
    let snapped: Vec<f64> = spectrum.values.iter().map(|&x| snap_zero(x, zero_tol)).collect();
    let vals: Vec<String> = snapped.iter().map(|&x| sig6(x).to_string()).collect();
    text += &format!("eigenvalues: {}\n", vals.join(" "));

    let mut theorem_json = Value::Null;
    if outcome.theorems_checked {
        let tg = build_tg(g, &bd)?;
        let center = center_of_g(g, &tg, &bd)?;
        let part = build_partition(g, &d, &profile, &bd, &center)?;
        let pred = eccspectra::predicted_inertia_from(g, &d, &profile, &center)?;
        text += &format!(
            "associated tree: {} vertices, diameter {}\n",
            tg.vertices().len(),
            tg.diameter().unwrap_or(0)
        );
        text += &format!(
            "center case: {} with C(T_G) = {} and C(G) = {}\n",
            center.case.tag(),
            join(&center.center_tg),
            join(&center.center_g)
        );
        text += &format!("partition: {} (m = {})\n", part.case.tag(), part.m);
        text += &format!("predicted inertia: {}\n", pred.inertia);
        theorem_json = json!({
            "tg_vertices": tg.vertices(),
            "center_case": center.case.tag(),
            "center_g": center.center_g,
            "center_tg": center.center_tg,
            "partition_case": part.case.tag(),
            "m": part.m,
            "r": part.r,
            "predicted_inertia": [pred.inertia.plus, pred.inertia.minus, pred.inertia.zero],
        });
    } else {
        text += &format!(
            "theorem analysis: skipped ({})\n",
            if class.is_class_b() {
                format!("diameter {} below 4", profile.diameter)
            } else {
                format!("class {}", outcome.class_tag)
            }
        );
    }
    for c in &outcome.checks {
        text += &format!(
            "{} {}{}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.note.as_deref().map(|n| format!(": {n}")).unwrap_or_default()
        );
    }

    let jsonv = json!({
        "schema": SCHEMA,
        "command": "analyze",
        "input": input_json(&input),
        "results": {
            "class": outcome.class_tag,
            "blocks": bd.blocks.len(),
            "cut_vertices": bd.cut_vertices,
            "radius": profile.radius,
            "diameter": profile.diameter,
            "center": profile.center,
            "nonzero_entries": e.nonzero_count(),
            "irreducible": irreducible,
            "char_poly": poly.dump_descending(),
            "inertia": [inertia.plus, inertia.minus, inertia.zero],
            "symmetric": symmetric,
            "eigenvalues": json_f64_list(&snapped),
            "theorems": theorem_json,
        },
        "checks": checks_json(&outcome.checks),
    });
    emit(output, text, jsonv)?;
    Ok(if outcome.all_pass() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn thread_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("ECCSPECTRA_THREADS") {
        if let Ok(k) = v.parse::<usize>() {
            builder = builder.num_threads(k.max(1));
        }
    }
    builder.build().expect("thread pool")
}

fn cmd_verify(
    file: Option<&Path>,
    count: usize,
    gen: &GenOpts,
    output: &OutputOpts,
) -> Result<u8, Error> {
    let mut lines = Vec::new();
    let mut json_lines = Vec::new();
    let mut failures = 0usize;
    let mut total = 0usize;

    if let Some(path) = file {
        let input = load_graph(path)?;
        let outcome = run_case(&input.graph)?;
        total += 1;
        if !outcome.all_pass() {
            failures += 1;
        }
        lines.push(case_line(0, None, &outcome));
        for c in &outcome.checks {
            lines.push(format!(
                "  {} {}{}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.note.as_deref().map(|n| format!(": {n}")).unwrap_or_default()
            ));
        }
        json_lines.push(case_json(0, None, &input.path, &outcome));
    } else {
        type CaseResult = (usize, u64, Result<(Graph, checks::CaseOutcome), Error>);
        let pool = thread_pool();
        let results: Vec<CaseResult> = pool.install(|| {
            use rayon::prelude::*;
            (0..count)
                .into_par_iter()
                .map(|i| {
                    let seed = gen.seed + i as u64;
                    let res = eccspectra::random_class_b(&gen.params(seed))
                        .and_then(|g| run_case(&g).map(|o| (g, o)));
                    (i, seed, res)
                })
                .collect()
        });
        for (i, seed, res) in results {
            total += 1;
            match res {
                Ok((g, outcome)) => {
                    if !outcome.all_pass() {
                        failures += 1;
                        let witness = PathBuf::from(format!("witness-seed{seed}.edges"));
                        let dump = format!("# failing case seed={seed}\n{}", g.to_edge_list());
                        fs::write(&witness, dump).map_err(|e| {
                            Error::Invalid(format!("cannot write witness: {e}"))
                        })?;
                        lines.push(format!(
                            "{} (witness dumped to {})",
                            case_line(i, Some(seed), &outcome),
                            witness.display()
                        ));
                    } else {
                        lines.push(case_line(i, Some(seed), &outcome));
                    }
                    json_lines.push(case_json(i, Some(seed), "", &outcome));
                }
                Err(err) => return Err(err),
            }
        }
    }

    let summary = format!("summary: {}/{} cases passed", total - failures, total);
    let text = format!("{}\n{}\n", lines.join("\n"), summary);
    let json_text = json_lines
        .iter()
        .map(|v| serde_json::to_string(v).expect("reports serialize"))
        .collect::<Vec<_>>()
        .join("\n")
        + "\n";

    let payload = if output.json { json_text } else { text };
    match &output.out {
        Some(path) => fs::write(path, payload)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{payload}"),
    }
    Ok(if failures == 0 { 0 } else { EXIT_CHECK_FAILED })
}

fn case_line(i: usize, seed: Option<u64>, outcome: &checks::CaseOutcome) -> String {
    let id = match seed {
        Some(s) => format!("case {i} seed {s}"),
        None => format!("case {i}"),
    };
    let scope = if outcome.theorems_checked {
        outcome.case_tag.unwrap_or("theorems").to_string()
    } else {
        "base checks only".to_string()
    };
    format!(
        "{}: {} (n={}, diam={}, {}, checks {}/{})",
        id,
        if outcome.all_pass() { "PASS" } else { "FAIL" },
        outcome.n,
        outcome.diameter,
        scope,
        outcome.checks.iter().filter(|c| c.pass).count(),
        outcome.checks.len()
    )
}

fn case_json(i: usize, seed: Option<u64>, path: &str, outcome: &checks::CaseOutcome) -> Value {
    json!({
        "schema": SCHEMA,
        "case": i,
        "seed": seed,
        "path": if path.is_empty() { Value::Null } else { Value::String(path.into()) },
        "n": outcome.n,
        "m": outcome.m,
        "diameter": outcome.diameter,
        "class": outcome.class_tag,
        "case_tag": outcome.case_tag,
        "theorems_checked": outcome.theorems_checked,
        "pass": outcome.all_pass(),
        "checks": checks_json(&outcome.checks),
    })
}

fn cmd_blocks(path: &Path, output: &OutputOpts) -> Result<u8, Error> {
    let input = load_graph(path)?;
    let g = &input.graph;
    let bd = decompose(g)?;
    let class = classify_decomposition(g, &bd);

    let mut text = format!(
        "{} blocks, cut vertices: {}\n",
        bd.blocks.len(),
        join(&bd.cut_vertices)
    );
    let mut blocks_json = Vec::new();
    for (i, b) in bd.blocks.iter().enumerate() {
        let kind = match b.kind {
            BlockKind::Leaf => "leaf",
            BlockKind::Bridge => "bridge",
            BlockKind::Internal => "internal",
            BlockKind::Isolated => "isolated",
        };
        let shape = match &b.bipartition {
            Some((v1, v2)) => format!("K_{{{},{}}}", v1.len().min(v2.len()), v1.len().max(v2.len())),
            None => "not bipartite".to_string(),
        };
        text += &format!(
            "block {i}: {} [{}] cut-count {} vertices: {}\n",
            shape,
            kind,
            b.cut_count,
            join(&b.vertices)
        );
        blocks_json.push(json!({
            "index": i,
            "vertices": b.vertices,
            "kind": kind,
            "cut_count": b.cut_count,
            "bipartition": b.bipartition.as_ref().map(|(v1, v2)| json!([v1, v2])),
        }));
    }
    let class_tag = match class.kind {
        eccspectra::ClassKind::Tree => "tree",
        eccspectra::ClassKind::ClassB => "class-b",
        eccspectra::ClassKind::BiBlockNotB => "bi-block-not-b",
        eccspectra::ClassKind::Other => "other",
    };
    text += &format!(
        "classification: {}{}{}\n",
        class_tag,
        if class.is_tree { " (tree)" } else { "" },
        class
            .witness
            .as_ref()
            .map(|w| format!(" — {w}"))
            .unwrap_or_default()
    );

    let jsonv = json!({
        "schema": SCHEMA,
        "command": "blocks",
        "input": input_json(&input),
        "results": {
            "cut_vertices": bd.cut_vertices,
            "blocks": blocks_json,
            "class": class_tag,
            "is_tree": class.is_tree,
            "witness": class.witness.as_ref().map(|w| w.to_string()),
        },
    });
    emit(output, text, jsonv)?;
    Ok(0)
}

fn cmd_tg(path: &Path, output: &OutputOpts) -> Result<u8, Error> {
    let input = load_graph(path)?;
    let g = &input.graph;
    let bd = decompose(g)?;
    let tg = build_tg(g, &bd)?;
    let (relabeled, map) = tg.to_relabeled_graph();

    let mut text = format!(
        "# associated tree of {}: original labels {}\n",
        input.path,
        join(&map)
    );
    text += "# relabeled 1..k in ascending original-label order\n";
    text += &relabeled.to_edge_list();

    let jsonv = json!({
        "schema": SCHEMA,
        "command": "tg",
        "input": input_json(&input),
        "results": {
            "vertices": tg.vertices(),
            "edges": tg.edges(),
            "edge_list": text,
        },
    });
    emit(output, text.clone(), jsonv)?;
    Ok(0)
}

fn cmd_center(path: &Path, output: &OutputOpts) -> Result<u8, Error> {
    let input = load_graph(path)?;
    let g = &input.graph;
    let bd = decompose(g)?;
    let tg = build_tg(g, &bd)?;
    let center = center_of_g(g, &tg, &bd)?;

    let text = format!(
        "case: {}\nC(T_G): {}\nC(G): {}\ncentral block: {}\n",
        center.case.tag(),
        join(&center.center_tg),
        join(&center.center_g),
        center
            .central_block
            .map(|b| b.to_string())
            .unwrap_or_else(|| "-".to_string())
    );
    let jsonv = json!({
        "schema": SCHEMA,
        "command": "center",
        "input": input_json(&input),
        "results": {
            "case": center.case.tag(),
            "center_tg": center.center_tg,
            "center_g": center.center_g,
            "central_block": center.central_block,
        },
    });
    emit(output, text, jsonv)?;
    Ok(0)
}

fn cmd_ecc_matrix(path: &Path, dump: bool, output: &OutputOpts) -> Result<u8, Error> {
    let input = load_graph(path)?;
    let g = &input.graph;
    let d = all_pairs_distances(g)?;
    let profile = ecc_profile(&d);
    let e = eccentricity_matrix_from(&d, &profile);

    let text = if dump {
        e.dump()
    } else {
        format!(
            "order {}, {} nonzero entries, irreducible: {}\n",
            e.n(),
            e.nonzero_count(),
            is_irreducible(&e)
        )
    };
    let jsonv = json!({
        "schema": SCHEMA,
        "command": "ecc-matrix",
        "input": input_json(&input),
        "results": {
            "n": e.n(),
            "nonzero_entries": e.nonzero_count(),
            "irreducible": is_irreducible(&e),
            "rows": (1..=e.n()).map(|u| e.row(u).to_vec()).collect::<Vec<_>>(),
        },
    });
    emit(output, text, jsonv)?;
    Ok(0)
}

fn cmd_spectrum(path: &Path, output: &OutputOpts) -> Result<u8, Error> {
    let input = load_graph(path)?;
    let g = &input.graph;
    let d = all_pairs_distances(g)?;
    let profile = ecc_profile(&d);
    let e = eccentricity_matrix_from(&d, &profile);
    let poly = spectral::char_poly_ecc(&e);
    let inertia = inertia_exact(&poly)?;
    let spectrum = eigenvalues_float(&e)?;

    let zero_tol = 1e-8 * e.frobenius_norm();
    let snapped: Vec<f64> = spectrum.values.iter().map(|&x| snap_zero(x, zero_tol)).collect();
    let vals: Vec<String> = snapped.iter().map(|&x| sig6(x).to_string()).collect();
    let text = format!(
        "char poly: {}\ninertia: {}\nrank: {}\nsymmetric: {}\neigenvalues: {}\nresidual: {}\n",
        poly.dump_descending(),
        inertia,
        inertia.rank(),
        is_spectrum_symmetric(&poly),
        vals.join(" "),
        sig6(spectrum.residual),
    );
    let jsonv = json!({
        "schema": SCHEMA,
        "command": "spectrum",
        "input": input_json(&input),
        "results": {
            "char_poly": poly.dump_descending(),
            "inertia": [inertia.plus, inertia.minus, inertia.zero],
            "rank": inertia.rank(),
            "symmetric": is_spectrum_symmetric(&poly),
            "eigenvalues": json_f64_list(&snapped),
            "clusters": spectrum.clusters,
            "residual": report::json_f64(spectrum.residual),
        },
    });
    emit(output, text, jsonv)?;
    Ok(0)
}

fn cmd_partition(path: &Path, output: &OutputOpts) -> Result<u8, Error> {
    let input = load_graph(path)?;
    let g = &input.graph;
    let d = all_pairs_distances(g)?;
    let profile = ecc_profile(&d);
    let bd = decompose(g)?;
    let tg = build_tg(g, &bd)?;
    let center = center_of_g(g, &tg, &bd)?;
    let part = build_partition(g, &d, &profile, &bd, &center)?;
    let e = eccentricity_matrix_from(&d, &profile);
    let structure = eccspectra::verify_block_structure(&e, &part, &profile);

    let mut text = format!("case: {} (m = {})\n", part.case.tag(), part.m);
    if let Some(r) = part.r {
        text += &format!("r: {r}\n");
    }
    for (name, v) in &part.anchors {
        text += &format!("anchor {name}: {v}\n");
    }
    for c in &part.cells {
        if c.present {
            text += &format!("{}: {}\n", c.name, join(&c.vertices));
        } else {
            text += &format!("{}: absent\n", c.name);
        }
    }
    let checks: Vec<Check> = structure
        .checks
        .iter()
        .map(|c| {
            Check::of(
                &c.name,
                c.pass,
                c.witness.as_ref().map(|w| {
                    format!(
                        "entry ({},{}): expected {}, found {}",
                        w.row, w.col, w.expected, w.found
                    )
                }),
            )
        })
        .collect();

    let jsonv = json!({
        "schema": SCHEMA,
        "command": "partition",
        "input": input_json(&input),
        "results": {
            "case": part.case.tag(),
            "m": part.m,
            "r": part.r,
            "anchors": part.anchors.iter().map(|(k, v)| json!({"name": k, "vertex": v})).collect::<Vec<_>>(),
            "cells": part.cells.iter().map(|c| json!({
                "name": c.name,
                "present": c.present,
                "vertices": c.vertices,
            })).collect::<Vec<_>>(),
        },
        "checks": checks_json(&checks),
    });
    if !output.json && output.out.is_none() {
        print!("{text}");
        print_checks(&checks);
    } else {
        emit(output, text, jsonv)?;
    }
    Ok(if structure.all_pass() {
        0
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_generate(gen: &GenOpts, out: Option<&Path>) -> Result<u8, Error> {
    let params = gen.params(gen.seed);
    let g = eccspectra::random_class_b(&params)?;
    let parity = match params.parity {
        Parity::Any => "any",
        Parity::Odd => "odd",
        Parity::Even => "even",
    };
    let header = format!(
        "# eccspectra generate: seed={} blocks={}..{} parts={}..{} parity={} min-diam={} max-vertices={}\n",
        params.seed,
        params.blocks.0,
        params.blocks.1,
        params.parts.0,
        params.parts.1,
        parity,
        params.min_diameter,
        params.max_vertices
    );
    let text = header + &g.to_edge_list();
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}
