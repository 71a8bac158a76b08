//! `fbga`: a thin shell over the library. Exit codes: 0 success, 1 parse or
//! validation error, 2 mathematical precondition violated, 3 distinguished or
//! not isomorphic, 4 ambiguous reconstruction.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fbga::covering::{cover_window, CuttingSet};
use fbga::dot::{quiver_to_dot, ribbon_to_dot, window_to_dot};
use fbga::format::parse_cut_file;
use fbga::invariants::Verdict;
use fbga::reconstruct::parse_loewy;
use fbga::{
    build_presentation, build_ribbon_graph, compare, cover_finite, fingerprint, is_admissible, loewy_input,
    quotient_by_nakayama_power, reconstruct_afbg, Afbg, DegreeFunction, Error, Gentle, GentleSpec, RibbonSpec,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "fbga", version, about = "Admissible fractional Brauer graphs and their algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Check both admissibility conditions and list every violation.
    Validate { graph: PathBuf },
    /// Quiver and relations of the algebra.
    Present {
        graph: PathBuf,
        /// Print the Loewy data of the indecomposable projectives instead.
        #[arg(long)]
        loewy: bool,
    },
    /// Quotient by the Nakayama permutation, or by its `power`-th power.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        power: Option<usize>,
    },
    /// Finite cover with `r` sheets cut along a cutting set.
    Cover {
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        cut: CutArgs,
    },
    /// r-fold trivial extension of a gentle algebra.
    GentleTrivext {
        gentle: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Sheets `lo..=hi` of the infinite cover, from a gentle algebra or a graph with a cut.
    RepetitiveWindow {
        input: PathBuf,
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: (i64, i64),
        #[command(flatten)]
        cut: CutArgs,
    },
    /// Derived-equivalence fingerprint and representation type.
    Invariants { graph: PathBuf },
    /// Compare fingerprints; exit 3 when some invariant differs.
    Compare { a: PathBuf, b: PathBuf },
    /// Rebuild a graph from Loewy data; exit 4 when the data do not determine it.
    Reconstruct { loewy: PathBuf },
    /// Ribbon graph isomorphism with degrees; exit 3 when none exists.
    Iso { a: PathBuf, b: PathBuf },
    /// Graphviz export of the ribbon graph, or of its quiver.
    Export {
        graph: PathBuf,
        #[arg(long)]
        quiver: bool,
    },
}

#[derive(clap::Args)]
struct CutArgs {
    #[arg(long, conflicts_with = "auto_cut")]
    cut: Option<PathBuf>,
    /// Cut each vertex just before the first half-edge of its rotation.
    #[arg(long)]
    auto_cut: bool,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo = lo.trim().parse().map_err(|e| format!("lo: {e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("hi: {e}"))?;
    Ok((lo, hi))
}

enum Failure {
    Io(String),
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::Usage(_) => 1,
            Failure::Lib(e) => match e {
                Error::NotABrauerGraph(_)
                | Error::CoverNotAdmissible(_)
                | Error::NonDivisorPower { .. }
                | Error::QuotientNotAdmissible(_)
                | Error::SizeLimitExceeded { .. }
                | Error::DisconnectedInput => 2,
                Error::Ambiguous { .. } | Error::Exceptional => 4,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Io(m) | Failure::Usage(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

/// Report text and exit code of a successful run.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Afbg, Failure> {
    Ok(Afbg::from_json(&read(path)?)?)
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn graph_json(a: &Afbg) -> String {
    let mut s = a.to_spec().to_json();
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn graph_report(a: &Afbg, format: Format) -> String {
    match format {
        Format::Dot => ribbon_to_dot(a),
        _ => graph_json(a),
    }
}

fn cutting_set(a: &Afbg, args: &CutArgs) -> Result<CuttingSet, Failure> {
    match (&args.cut, args.auto_cut) {
        (Some(path), _) => Ok(CuttingSet::from_entries(a.graph(), &parse_cut_file(&read(path)?)?)?),
        (None, true) => Ok(CuttingSet::before_first(a.graph())),
        (None, false) => Err(Failure::Usage("one of --cut or --auto-cut is required".into())),
    }
}

fn validate(path: &Path, format: Format) -> Result<Report, Failure> {
    let spec = RibbonSpec::from_json(&read(path)?)?;
    let g = build_ribbon_graph(&spec)?;
    let d = DegreeFunction::from_spec(&g, &spec)?;
    let result = is_admissible(&g, &d);
    let violations = result.as_ref().err().cloned().unwrap_or_default();
    let text = match format {
        Format::Json => pretty(&json!({
            "admissible": violations.is_empty(),
            "vertices": g.num_vertices(),
            "edges": g.num_edges(),
            "violations": violations,
        })),
        _ => match &result {
            Ok(a) => {
                let ms: Vec<String> = a.multiplicity_multiset().iter().map(ToString::to_string).collect();
                format!(
                    "admissible: {} vertices, {} edges, multiplicities {{{}}}\n",
                    g.num_vertices(),
                    g.num_edges(),
                    ms.join(", ")
                )
            }
            Err(vs) => {
                let mut s = format!("not admissible: {} violations\n", vs.len());
                for v in vs {
                    s.push_str(&format!("  {v}\n"));
                }
                s
            }
        },
    };
    Ok(Report { text, code: if violations.is_empty() { 0 } else { 1 } })
}

fn present(path: &Path, loewy: bool, format: Format) -> Result<Report, Failure> {
    let a = load_graph(path)?;
    if loewy {
        return Ok(Report::ok(pretty(&loewy_input(&a))));
    }
    let p = build_presentation(&a);
    Ok(Report::ok(match format {
        Format::Text => p.to_text(),
        Format::Json => pretty(&p.to_file()),
        Format::Dot => quiver_to_dot(&p),
    }))
}

fn window(input: &Path, (lo, hi): (i64, i64), cut: &CutArgs, format: Format) -> Result<Report, Failure> {
    let text = read(input)?;
    let w = match GentleSpec::from_json(&text) {
        Ok(spec) => Gentle::from_spec(&spec)?.repetitive_window(lo, hi)?,
        Err(_) => {
            let a = Afbg::from_json(&text)?;
            cover_window(&a, &cutting_set(&a, cut)?, lo, hi)?.presentation()
        }
    };
    Ok(Report::ok(match format {
        Format::Text => w.to_text(),
        Format::Json => pretty(&w),
        Format::Dot => window_to_dot(&w),
    }))
}

fn invariants(path: &Path, format: Format) -> Result<Report, Failure> {
    let a = load_graph(path)?;
    let f = fingerprint(&a);
    let rep = a.rep_finite_report()?;
    Ok(Report::ok(match format {
        Format::Json => pretty(&json!({ "fingerprint": f, "representation_type": rep })),
        _ => {
            let mut s = f.to_text();
            if rep.is_rep_finite {
                s.push_str(&format!(
                    "representation-finite: Brauer tree with {} edges, exceptional multiplicity {}, candidate period {}\n",
                    rep.tree_edges.unwrap_or(0),
                    rep.exceptional_multiplicity.unwrap_or(1),
                    rep.nakayama_order
                ));
            } else {
                s.push_str("representation-infinite\n");
            }
            s
        }
    }))
}

fn compare_files(a: &Path, b: &Path, format: Format) -> Result<Report, Failure> {
    let verdict = compare(&fingerprint(&load_graph(a)?), &fingerprint(&load_graph(b)?));
    let code = match verdict {
        Verdict::Consistent => 0,
        Verdict::Distinguished(_) => 3,
    };
    let text = match format {
        Format::Json => pretty(&verdict),
        _ => match verdict {
            Verdict::Consistent => "consistent: no listed invariant separates the two\n".to_string(),
            Verdict::Distinguished(field) => format!("distinguished by {field}\n"),
        },
    };
    Ok(Report { text, code })
}

fn reconstruct(path: &Path, format: Format) -> Result<Report, Failure> {
    let rec = reconstruct_afbg(&parse_loewy(&read(path)?)?)?;
    Ok(Report::ok(match format {
        Format::Dot => ribbon_to_dot(&rec.afbg),
        Format::Json => graph_json(&rec.afbg),
        Format::Text => {
            let mut s = graph_json(&rec.afbg);
            for seq in &rec.cyclic_sequences {
                s.push_str(&format!("cyclic sequence: ({})\n", seq.join(", ")));
            }
            s
        }
    }))
}

fn iso(a: &Path, b: &Path, format: Format) -> Result<Report, Failure> {
    let (a, b) = (load_graph(a)?, load_graph(b)?);
    let map = a.is_isomorphic_to(&b)?;
    let pairs: Option<Vec<(String, String)>> = map.as_ref().map(|f| {
        f.iter()
            .enumerate()
            .map(|(h, &k)| (a.graph().half_edge_id(h).to_string(), b.graph().half_edge_id(k).to_string()))
            .collect()
    });
    let text = match format {
        Format::Json => pretty(&json!({ "isomorphic": map.is_some(), "half_edge_map": pairs })),
        _ => match &pairs {
            Some(ps) => {
                let mut s = String::from("isomorphic\n");
                for (x, y) in ps {
                    s.push_str(&format!("  {x} -> {y}\n"));
                }
                s
            }
            None => "not isomorphic\n".to_string(),
        },
    };
    Ok(Report { text, code: if map.is_some() { 0 } else { 3 } })
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Validate { graph } => validate(graph, format),
        Command::Present { graph, loewy } => present(graph, *loewy, format),
        Command::Reduce { graph, power } => {
            let a = load_graph(graph)?;
            let red = match power {
                Some(k) => quotient_by_nakayama_power(&a, *k)?,
                None => a.reduced_form(),
            };
            Ok(Report::ok(graph_report(&red, format)))
        }
        Command::Cover { graph, r, cut } => {
            let a = load_graph(graph)?;
            let c = cover_finite(&a, &cutting_set(&a, cut)?, *r)?;
            Ok(Report::ok(graph_report(&c.afbg, format)))
        }
        Command::GentleTrivext { gentle, r } => {
            let g = Gentle::from_json(&read(gentle)?)?;
            let (cover, p) = g.r_fold_trivial_extension(*r)?;
            Ok(Report::ok(match format {
                Format::Text => p.to_text(),
                Format::Json => {
                    let graph: serde_json::Value = serde_json::from_str(&cover.to_spec().to_json()).expect("valid json");
                    pretty(&json!({ "graph": graph, "presentation": p.to_file() }))
                }
                Format::Dot => quiver_to_dot(&p),
            }))
        }
        Command::RepetitiveWindow { input, window: w, cut } => window(input, *w, cut, format),
        Command::Invariants { graph } => invariants(graph, format),
        Command::Compare { a, b } => compare_files(a, b, format),
        Command::Reconstruct { loewy } => reconstruct(loewy, format),
        Command::Iso { a, b } => iso(a, b, format),
        Command::Export { graph, quiver } => {
            let a = load_graph(graph)?;
            Ok(Report::ok(if *quiver { quiver_to_dot(&build_presentation(&a)) } else { ribbon_to_dot(&a) }))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &report.text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", report.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(report.code),
                Err(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(1)
                }
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
