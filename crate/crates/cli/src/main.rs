use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use extremal::construct::{
    bicyclic_dirichlet_extremal, boundary_unicyclic, greedy_tree, greedy_unicyclic,
    slo_boundary_tree,
};
use extremal::degseq::{classify, is_graphic, majorization_chain};
use extremal::enumerate::{
    boundary_variants, connected_with_sequence, labeled_count, trees_with_sequence,
    unicyclic_with_sequence,
};
use extremal::invariants::{
    dirichlet_first_eigenvalue, energy, harary, hosoya, hyper_wiener, merrifield_simmons,
    p_r_count, second_zagreb, spectral_radius, subtree_count, w_psi, wiener, Matrix, PsiFunction,
};
use extremal::io::{format_edge_list, parse_edge_list, EdgeList};
use extremal::verify::{parse_suites, sweep, VerificationReport};
use extremal::{BoundaryGraph, DegreeSequence, Graph};

#[derive(Parser)]
#[command(name = "extremal", version, about = "Extremal graphs with a given degree sequence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a degree sequence.
    Check(SequenceInput),
    /// Print the edge list of an extremal construction.
    Greedy {
        #[arg(long, value_enum, default_value_t = GreedyKind::Tree)]
        kind: GreedyKind,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        #[command(flatten)]
        input: SequenceInput,
    },
    /// Evaluate invariants of a graph given as an edge-list file.
    Invariant {
        /// Comma-separated invariant names.
        #[arg(long, value_delimiter = ',', required = true)]
        kind: Vec<InvariantKind>,
        /// Distance weight for `w-psi`.
        #[arg(long, default_value = "identity")]
        psi: PsiFunction,
        /// Distance bound for `pr`.
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Edge-list file; `-` reads standard input.
        #[arg(long)]
        file: PathBuf,
    },
    /// List all realizations of a sequence up to isomorphism.
    Enumerate {
        #[arg(long, value_enum, default_value_t = EnumKind::Tree)]
        kind: EnumKind,
        /// Print the class count and labeled count only.
        #[arg(long)]
        count_only: bool,
        /// Mark leaves as boundary vertices.
        #[arg(long)]
        boundary: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        #[command(flatten)]
        input: SequenceInput,
    },
    /// Print a chain of unit transfers from one sequence to a majorizing one.
    Majorize {
        pi: String,
        tau: String,
    },
    /// Run verification suites.
    Verify {
        #[arg(long)]
        max_n: usize,
        /// Tags or groups: all, all-tree, all-majorization, all-dirichlet.
        #[arg(long, default_value = "all-tree")]
        suites: String,
        /// Report path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
}

#[derive(Args)]
struct SequenceInput {
    /// Degree sequence such as `3,3,2,1,1`.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    sequence: Option<String>,
    /// File holding the sequence.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl SequenceInput {
    fn read(&self) -> Result<DegreeSequence> {
        let text = match (&self.sequence, &self.file) {
            (Some(s), _) => s.clone(),
            (None, Some(path)) => read_text(path)?,
            (None, None) => bail!("no sequence given"),
        };
        parse_sequence(&text)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GreedyKind {
    Tree,
    Unicyclic,
    SloTree,
    BoundaryUnicyclic,
    Bicyclic,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    Tree,
    Unicyclic,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantKind {
    Wiener,
    HyperWiener,
    Harary,
    WPsi,
    Pr,
    Zagreb2,
    Hosoya,
    Ms,
    Subtrees,
    Rho,
    Lambda,
    Q,
    Energy,
    Dirichlet,
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        return io::read_to_string(io::stdin()).context("reading standard input");
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Accepts commas, whitespace and optional parentheses as separators.
fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    if let Some(c) = text.chars().find(|c| !(c.is_ascii_digit() || c.is_whitespace() || "(),".contains(*c))) {
        bail!("unexpected character `{c}` in degree sequence");
    }
    let cleaned: String = text
        .chars()
        .map(|c| if c.is_ascii_digit() { c } else { ' ' })
        .collect();
    let entries = cleaned
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<usize>, _>>()?;
    Ok(DegreeSequence::new(entries)?)
}

fn with_boundary(bg: BoundaryGraph) -> (Graph, Option<Vec<usize>>) {
    let b = bg.boundary();
    (bg.into_graph(), Some(b))
}

fn graph_json((g, boundary): &(Graph, Option<Vec<usize>>)) -> Value {
    let mut v = json!({"order": g.order(), "edges": g.edges()});
    if let Some(b) = boundary {
        v["boundary"] = json!(b);
    }
    v
}

fn invariant(el: &EdgeList, kind: InvariantKind, psi: &PsiFunction, r: usize) -> Result<Value> {
    let g = &el.graph;
    Ok(match kind {
        InvariantKind::Wiener => json!(wiener(g)?),
        InvariantKind::HyperWiener => json!(hyper_wiener(g)?),
        InvariantKind::Harary => json!(harary(g)?),
        InvariantKind::WPsi => json!(w_psi(g, psi)?),
        InvariantKind::Pr => json!(p_r_count(g, r)?),
        InvariantKind::Zagreb2 => json!(second_zagreb(g)),
        InvariantKind::Hosoya => json!(hosoya(g)?),
        InvariantKind::Ms => json!(merrifield_simmons(g)?),
        InvariantKind::Subtrees => json!(subtree_count(g)?),
        InvariantKind::Rho => json!(spectral_radius(g, Matrix::Adjacency)?.value),
        InvariantKind::Lambda => json!(spectral_radius(g, Matrix::Laplacian)?.value),
        InvariantKind::Q => json!(spectral_radius(g, Matrix::Signless)?.value),
        InvariantKind::Energy => json!(energy(g)?),
        InvariantKind::Dirichlet => json!(dirichlet_first_eigenvalue(&el.boundary_graph()?)?),
    })
}

fn write_reports(reports: &[VerificationReport], format: ReportFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, reports)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["tag", "sequence", "status", "optimum", "witness-code"])?;
            for r in reports {
                w.write_record([
                    r.tag.clone(),
                    r.sequence_label(),
                    r.status.as_str().to_string(),
                    r.optimum.map(|x| x.to_string()).unwrap_or_default(),
                    r.optimizer_code.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Check(input) => {
            let pi = input.read()?;
            let v = json!({"class": classify(&pi).as_str(), "graphic": is_graphic(&pi)});
            writeln!(out, "{v}")?;
        }
        Command::Greedy { kind, format, input } => {
            let pi = input.read()?;
            let item = match kind {
                GreedyKind::Tree => (greedy_tree(&pi)?.into_graph(), None),
                GreedyKind::Unicyclic => (greedy_unicyclic(&pi)?, None),
                GreedyKind::SloTree => with_boundary(slo_boundary_tree(&pi)?.value),
                GreedyKind::BoundaryUnicyclic => with_boundary(boundary_unicyclic(&pi)?),
                GreedyKind::Bicyclic => with_boundary(bicyclic_dirichlet_extremal(&pi)?),
            };
            match format {
                GraphFormat::Edgelist => write!(out, "{}", format_edge_list(&item.0, item.1.as_deref()))?,
                GraphFormat::Json => writeln!(out, "{}", graph_json(&item))?,
            }
        }
        Command::Invariant { kind, psi, r, file } => {
            let el = parse_edge_list(&read_text(&file)?)?;
            let mut values = Map::new();
            for k in kind {
                let name = k.to_possible_value().expect("named").get_name().to_string();
                values.insert(name, invariant(&el, k, &psi, r)?);
            }
            writeln!(out, "{}", Value::Object(values))?;
        }
        Command::Enumerate { kind, count_only, boundary, format, input } => {
            let pi = input.read()?;
            let graphs = match kind {
                EnumKind::Tree => trees_with_sequence(&pi)?,
                EnumKind::Unicyclic => unicyclic_with_sequence(&pi)?,
                EnumKind::Connected => connected_with_sequence(&pi)?,
            };
            if count_only {
                let labeled = labeled_count(&pi, &graphs)?;
                // Labeled counts can exceed the exact range of JSON numbers.
                writeln!(out, "{}", json!({"classes": graphs.len(), "labeled": labeled.to_string()}))?;
                out.flush()?;
                return Ok(true);
            }
            let items: Vec<(Graph, Option<Vec<usize>>)> = if boundary {
                let wrapped = boundary_variants(&graphs);
                if !wrapped.filtered.is_empty() {
                    eprintln!("skipped {} graph(s) without a valid leaf boundary", wrapped.filtered.len());
                }
                wrapped.graphs.into_iter().map(with_boundary).collect()
            } else {
                graphs.into_iter().map(|g| (g, None)).collect()
            };
            match format {
                GraphFormat::Edgelist => {
                    for (i, (g, b)) in items.iter().enumerate() {
                        if i > 0 {
                            writeln!(out)?;
                        }
                        write!(out, "{}", format_edge_list(g, b.as_deref()))?;
                    }
                }
                GraphFormat::Json => {
                    let all: Vec<Value> = items.iter().map(graph_json).collect();
                    writeln!(out, "{}", Value::Array(all))?;
                }
            }
        }
        Command::Majorize { pi, tau } => {
            let chain = majorization_chain(&parse_sequence(&pi)?, &parse_sequence(&tau)?)?;
            for s in chain {
                writeln!(out, "{s}")?;
            }
        }
        Command::Verify { max_n, suites, out: path, format } => {
            let tags = parse_suites(&suites)?;
            let reports = sweep(max_n, &tags)?;
            let failed = reports.iter().filter(|r| r.status.is_failure()).count();
            match path {
                Some(p) => {
                    let file = fs::File::create(&p).with_context(|| format!("creating {}", p.display()))?;
                    let mut w = BufWriter::new(file);
                    write_reports(&reports, format, &mut w)?;
                    w.flush()?;
                    writeln!(out, "{} reports, {failed} failed", reports.len())?;
                }
                None => write_reports(&reports, format, &mut out)?,
            }
            if failed > 0 {
                eprintln!("{failed} of {} reports failed", reports.len());
            }
            out.flush()?;
            return Ok(failed == 0);
        }
    }
    out.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
