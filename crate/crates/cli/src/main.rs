use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use treenull::export::{
    atoms_json, basis_json, decomposition_dot, decomposition_json, sparse_json, tree_dot,
};
use treenull::verify::{exhaustive, render_table, verify_fixtures};
use treenull::{
    classify, coalescence_invariants, decompose, enumerate_trees, invariant_report, parse_tree,
    random_s_tree, random_tree, s_coalescence, stellare, stellare_bases, stellare_invariants,
    tree_null_basis, tree_range_basis, CoalescencePlan, Error, Seed, Tree, VertexVector,
};

#[derive(Parser)]
#[command(
    name = "treenull",
    version,
    about = "Null decomposition and {-1,0,1} bases of trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args)]
struct Input {
    /// Tree file (edge list or JSON); `-` reads stdin.
    #[arg(value_name = "PATH", conflicts_with = "input")]
    path: Option<PathBuf>,
    #[arg(short, long, value_name = "PATH")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Support, core, S-parts, N-parts and connection edges.
    Decompose(Input),
    /// Atoms and bond edges.
    Atoms(Input),
    /// {-1,0,1} basis of the kernel.
    NullBasis(Input),
    /// {0,1} basis of the column space.
    RangeBasis(Input),
    /// rank, nullity, nu, alpha, m, gamma with cross-checks.
    Invariants(Input),
    /// S-tree / N-tree / S-atom / S-basic flags.
    Classify(Input),
    /// Attach k_i pendants to every vertex (in label order).
    Stellare {
        #[command(flatten)]
        input: Input,
        /// Comma-separated k_i, one per vertex.
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<usize>,
    },
    /// S-coalescence of the parts listed in a plan file.
    Coalesce {
        /// Plan JSON: {"parts":[{"tree":{..},"attach":v},..]}; `-` reads stdin.
        #[arg(value_name = "PLAN", conflicts_with = "input")]
        path: Option<PathBuf>,
        #[arg(short, long, value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Property suite over fixtures and/or all labeled trees up to K vertices.
    Verify {
        #[arg(long)]
        fixtures: bool,
        #[arg(long, value_name = "K")]
        exhaustive_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// A seeded random tree (uniform labeled) or random S-tree.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Build an S-tree with at most N vertices instead.
        #[arg(long)]
        s_tree: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Every labeled tree on {0, .., n-1}.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Write one edge-list file per tree into this directory.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Why a command failed, mapped to its exit code.
enum Failure {
    Domain(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_verification_failure() {
            Failure::Verification(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn read_source(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        None => Err(Failure::Domain(
            "no input given (pass a path or `-` for stdin)".into(),
        )),
        Some(p) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(p) => {
            std::fs::read_to_string(p).map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))
        }
    }
}

fn read_tree(input: &Input) -> Result<Tree, Failure> {
    let text = read_source(input.path.as_ref().or(input.input.as_ref()))?;
    Ok(parse_tree(&text)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("outputs serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn ids_text<T: std::fmt::Display>(ids: &[T]) -> String {
    let parts: Vec<String> = ids.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn vector_text(v: &VertexVector) -> String {
    let terms: Vec<String> = v
        .sparse()
        .into_iter()
        .enumerate()
        .map(|(k, (vertex, c))| {
            let c = c.to_string();
            match (k, c.as_str()) {
                (0, "1") => format!("e{vertex}"),
                (0, "-1") => format!("-e{vertex}"),
                (_, "1") => format!("+ e{vertex}"),
                (_, "-1") => format!("- e{vertex}"),
                _ => format!("+ ({c})e{vertex}"),
            }
        })
        .collect();
    terms.join(" ")
}

fn render_basis(t: &Tree, vectors: &[VertexVector], format: Format) -> String {
    match format {
        Format::Json => to_json(&basis_json(vectors)),
        Format::Dot => decomposition_dot(&decompose(t)),
        Format::Text => {
            let mut sorted: Vec<&VertexVector> = vectors.iter().collect();
            sorted.sort_by_key(|v| v.support());
            sorted
                .iter()
                .map(|v| format!("{}\n", vector_text(v)))
                .collect()
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Decompose(input) => {
            let t = read_tree(&input)?;
            let d = decompose(&t);
            match input.format {
                Format::Json => to_json(&decomposition_json(&d)),
                Format::Dot => decomposition_dot(&d),
                Format::Text => {
                    let mut out = format!(
                        "supp {}\ncore {}\n",
                        ids_text(&d.supp()),
                        ids_text(&d.core())
                    );
                    for (k, p) in d.s_parts().iter().enumerate() {
                        let _ = writeln!(
                            out,
                            "S-part {}: {} supp {} core {}",
                            k + 1,
                            ids_text(p.vertices()),
                            ids_text(&p.supp()),
                            ids_text(&p.core())
                        );
                    }
                    for (k, p) in d.n_parts().components().iter().enumerate() {
                        let _ = writeln!(out, "N-part {}: {}", k + 1, ids_text(p.ids()));
                    }
                    let conn: Vec<String> = d
                        .connection_edges()
                        .iter()
                        .map(|(a, b)| format!("{a}-{b}"))
                        .collect();
                    let _ = writeln!(out, "connection edges: {}", conn.join(" "));
                    out
                }
            }
        }
        Command::Atoms(input) => {
            let t = read_tree(&input)?;
            let d = decompose(&t);
            let a = d.a_set();
            match input.format {
                Format::Json => to_json(&atoms_json(&a)),
                Format::Dot => decomposition_dot(&d),
                Format::Text => {
                    let mut out = String::new();
                    for (k, p) in a.atoms().iter().enumerate() {
                        let _ = writeln!(
                            out,
                            "atom {}: {} supp {} core {} delta_core {}",
                            k + 1,
                            ids_text(p.vertices()),
                            ids_text(&p.supp()),
                            ids_text(&p.core()),
                            p.delta_core()
                        );
                    }
                    let bonds: Vec<String> = a
                        .bond_edges()
                        .iter()
                        .map(|(x, y)| format!("{x}-{y}"))
                        .collect();
                    let _ = writeln!(out, "bond edges: {}", bonds.join(" "));
                    out
                }
            }
        }
        Command::NullBasis(input) => {
            let t = read_tree(&input)?;
            let vectors: Vec<VertexVector> =
                tree_null_basis(&t)?.into_iter().map(|b| b.vector).collect();
            render_basis(&t, &vectors, input.format)
        }
        Command::RangeBasis(input) => {
            let t = read_tree(&input)?;
            let basis = tree_range_basis(&t)?;
            render_basis(&t, &basis.vectors, input.format)
        }
        Command::Invariants(input) => {
            let t = read_tree(&input)?;
            let r = invariant_report(&t)?;
            match input.format {
                Format::Json => to_json(&r),
                Format::Dot => decomposition_dot(&decompose(&t)),
                Format::Text => format!(
                    "order {}\nsupp {}\ncore {}\nN-part vertices {}\nrank {}\nnullity {}\nnu {}\nalpha {}\nm {}\ngamma {}\n",
                    r.order,
                    r.supp_size,
                    r.core_size,
                    r.n_part_vertex_count,
                    r.rank.oracle,
                    r.nullity.oracle,
                    r.nu.oracle,
                    r.alpha.oracle,
                    r.m_count.oracle.0,
                    r.gamma
                ),
            }
        }
        Command::Classify(input) => {
            let t = read_tree(&input)?;
            let c = classify(&t);
            match input.format {
                Format::Json => to_json(&c),
                Format::Dot => decomposition_dot(&decompose(&t)),
                Format::Text => format!(
                    "order {}\nnullity {}\nis_s_tree {}\nis_n_tree {}\nis_s_atom {}\nis_s_basic {}\ndelta_core {}\n",
                    c.order, c.nullity, c.is_s_tree, c.is_n_tree, c.is_s_atom, c.is_s_basic, c.delta_core
                ),
            }
        }
        Command::Stellare { input, ks } => {
            let t = read_tree(&input)?;
            let s = stellare(&t, &ks)?;
            let report = stellare_invariants(&t, &ks)?;
            let bases = stellare_bases(&t, &ks)?;
            match input.format {
                Format::Json => to_json(&json!({
                    "tree": treenull::TreeDocument::from(&s.tree),
                    "labels": s.labels,
                    "invariants": report,
                    "null_basis": bases.null.iter().map(sparse_json).collect::<Vec<_>>(),
                    "range_basis": bases.range.iter().map(sparse_json).collect::<Vec<_>>(),
                })),
                Format::Dot => decomposition_dot(&decompose(&s.tree)),
                Format::Text => format!(
                    "{}# order {}, nullity {}, rank {}, alpha {}, nu {}, m {}, gamma {}\n",
                    s.tree.to_edge_list(),
                    report.order,
                    report.nullity.oracle,
                    report.rank.oracle,
                    report.alpha.oracle,
                    report.nu.oracle,
                    report.m_count.oracle.0,
                    report.gamma.oracle
                ),
            }
        }
        Command::Coalesce {
            path,
            input,
            format,
        } => {
            let text = read_source(path.as_ref().or(input.as_ref()))?;
            let plan = CoalescencePlan::from_json(&text)?;
            let c = s_coalescence(&plan)?;
            let report = coalescence_invariants(&plan)?;
            match format {
                Format::Json => to_json(&json!({
                    "tree": treenull::TreeDocument::from(&c.tree),
                    "star": c.star,
                    "provenance": c.provenance,
                    "invariants": report,
                })),
                Format::Dot => decomposition_dot(&decompose(&c.tree)),
                Format::Text => format!(
                    "{}# star {}, nullity {}, nu {}, alpha {}, m {} (parts: {})\n",
                    c.tree.to_edge_list(),
                    c.star,
                    report.nullity.oracle,
                    report.nu.oracle,
                    report.alpha.oracle,
                    report.m_count.result.0,
                    report.m_count.product.0
                ),
            }
        }
        Command::Verify {
            fixtures,
            exhaustive_n,
            format,
        } => return verify(fixtures, exhaustive_n, format),
        Command::Random {
            n,
            seed,
            s_tree,
            format,
        } => {
            if n == 0 {
                return Err(Failure::Domain("n must be at least 1".into()));
            }
            let t = if s_tree {
                random_s_tree(n, Seed(seed))
            } else {
                random_tree(n, Seed(seed))
            };
            render_tree(&t, format)
        }
        Command::Enumerate { n, out, format } => {
            if n == 0 {
                return Err(Failure::Domain("n must be at least 1".into()));
            }
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir)
                    .map_err(|e| Failure::Domain(format!("{}: {e}", dir.display())))?;
                let mut count = 0usize;
                for (k, t) in enumerate_trees(n).enumerate() {
                    let path = dir.join(format!("tree_{n}_{k:07}.edges"));
                    std::fs::write(&path, t.to_edge_list())
                        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
                    count += 1;
                }
                format!("{count}\n")
            } else {
                match format {
                    Format::Json => {
                        let docs: Vec<Value> = enumerate_trees(n)
                            .map(|t| {
                                serde_json::to_value(treenull::TreeDocument::from(&t))
                                    .expect("serializes")
                            })
                            .collect();
                        to_json(&docs)
                    }
                    Format::Dot => enumerate_trees(n).map(|t| tree_dot(&t)).collect(),
                    Format::Text => enumerate_trees(n)
                        .enumerate()
                        .map(|(k, t)| format!("# tree {}\n{}", k + 1, t.to_edge_list()))
                        .collect(),
                }
            }
        }
    })
}

fn render_tree(t: &Tree, format: Format) -> String {
    match format {
        Format::Json => to_json(&treenull::TreeDocument::from(t)),
        Format::Dot => tree_dot(t),
        Format::Text => t.to_edge_list(),
    }
}

fn verify(fixtures: bool, exhaustive_n: Option<usize>, format: Format) -> Result<String, Failure> {
    if !fixtures && exhaustive_n.is_none() {
        return Err(Failure::Domain(
            "pass --fixtures and/or --exhaustive-n K".into(),
        ));
    }
    let mut scopes = Vec::new();
    let mut fixture_checks = Vec::new();
    if fixtures {
        let (checks, tallies) = verify_fixtures();
        fixture_checks = checks;
        scopes.extend(tallies);
    }
    if let Some(k) = exhaustive_n {
        scopes.extend(
            exhaustive(k, 16)
                .into_iter()
                .map(|(n, t)| (format!("n={n}"), t)),
        );
    }
    let ok = fixture_checks.iter().all(|c| c.passed) && scopes.iter().all(|(_, t)| t.passed());
    let out = match format {
        Format::Json => to_json(&json!({
            "passed": ok,
            "fixtures": fixture_checks,
            "scopes": scopes.iter().map(|(label, t)| json!({ "scope": label, "tally": t })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = String::new();
            for c in &fixture_checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{:<48} {status}  {}", c.name, c.detail);
            }
            if !fixture_checks.is_empty() {
                out.push('\n');
            }
            out.push_str(&render_table(&scopes));
            let _ = writeln!(out, "\n{}", if ok { "ALL PASS" } else { "FAILURES" });
            out
        }
    };
    if ok {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification("verification failed".into()))
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
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(2)
        }
    }
}
