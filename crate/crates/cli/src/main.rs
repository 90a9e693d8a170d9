use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gencayley::aut::{automorphism_group, AutGroup};
use gencayley::classify::{self, verify_group, ClassificationReport};
use gencayley::gencayley::{
    build_graph, display_set, enumerate_subsets, partition, validate_subset, GenCayleyPair,
};
use gencayley::group::{FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
use gencayley::input::{parse_alpha_spec, parse_group_spec, resolve_subset, SpecError};
use gencayley::iso::{gci_isomorphic, graph_isomorphic_capped, DEFAULT_VERTEX_CAP};
use gencayley::{Automorphism, ElemSet};

#[derive(Parser)]
#[command(
    name = "gencayley",
    version,
    about = "Generalized Cayley graphs of permutation groups"
)]
struct Cli {
    /// Use a worker pool for searches (output order is unaffected).
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Edges,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct GroupArg {
    /// `S4`, `name:S4` or `gens: (12),(123) degree:4`
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    group: GroupArg,
    /// `id`, `inner:(12)` or `s6-delta:(g)`
    #[arg(long)]
    alpha: String,
    /// Comma-separated cycle strings; empty for ∅.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    subset: String,
}

#[derive(Subcommand)]
enum Command {
    /// ω, Ω, ℧ for an involutory automorphism.
    Partition {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check whether a subset is a generalized Cayley subset.
    Validate {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Build GC(G, S, α).
    Build {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: Output,
    },
    /// List all valid subsets up to a size.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Search for a GCI certificate between two pairs.
    GciTest {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        alpha2: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        subset2: String,
        #[command(flatten)]
        out: Output,
    },
    /// The automorphism group.
    Aut {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        out: Output,
    },
    /// GCI and restricted-GCI status of a group.
    Classify {
        #[command(flatten)]
        group: GroupArg,
        /// Subset-size cap for the restricted decision.
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Run every claim check on the listed groups.
    VerifyPaper {
        #[arg(long, value_delimiter = ',', default_value = "S3,S4,S5,S6")]
        targets: Vec<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Export the element list.
    Group {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Build(GroupError::UnknownName(_)) => Failure::Usage(e.to_string()),
            SpecError::Build(_) | SpecError::Aut(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn order_cap() -> Result<usize, Failure> {
    match std::env::var("GENCAYLEY_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "GENCAYLEY_CAP must be a positive integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn load_group(spec: &str) -> Result<FiniteGroup, Failure> {
    let cap = order_cap()?;
    Ok(parse_group_spec(spec)?.build_capped(cap)?)
}

fn load_alpha(g: &FiniteGroup, spec: &str) -> Result<Automorphism, Failure> {
    Ok(parse_alpha_spec(spec)?.resolve(g)?)
}

/// Resolves and validates a pair, reporting the violated condition.
fn load_pair(g: &FiniteGroup, alpha: &str, subset: &str) -> Result<GenCayleyPair, Failure> {
    let a = load_alpha(g, alpha)?;
    let s = resolve_subset(g, subset)?;
    if !a.squares_to_identity() {
        return Err(Failure::Domain(format!(
            "violates (a): {alpha} is not involutory"
        )));
    }
    GenCayleyPair::new(g, a, s).map_err(|v| Failure::Domain(v.describe(g)))
}

fn set_json(g: &FiniteGroup, s: &ElemSet) -> Value {
    json!(display_set(g, s))
}

fn set_text(g: &FiniteGroup, s: &ElemSet) -> String {
    format!("{{{}}}", display_set(g, s).join(", "))
}

fn emit(out: &Output, body: &str) -> Result<(), Failure> {
    match &out.out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Domain(format!("{path}: {e}"))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| Failure::Domain(e.to_string()))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn need(out: &Output, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&out.format) {
        Ok(())
    } else {
        Err(Failure::Usage(
            "unsupported --format for this command".into(),
        ))
    }
}

fn graph_name(g: &FiniteGroup, pair: &GenCayleyPair) -> String {
    format!(
        "GC({},{},{})",
        g.label(),
        set_text(g, pair.subset()),
        pair.alpha().describe(g)
    )
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Partition { group, alpha, out } => {
            need(&out, &[Format::Text, Format::Json])?;
            let g = load_group(&group.group)?;
            let a = load_alpha(&g, &alpha)?;
            let p = partition(&g, &a).map_err(domain)?;
            let body = if out.format == Format::Json {
                pretty(&json!({
                    "group": g.label(),
                    "alpha": a.describe(&g),
                    "omega": set_json(&g, &p.omega),
                    "big_omega": set_json(&g, &p.big_omega),
                    "mho": set_json(&g, &p.mho),
                }))
            } else {
                format!(
                    "omega     {}\nbig_omega {}\nmho       {}\n",
                    set_text(&g, &p.omega),
                    set_text(&g, &p.big_omega),
                    set_text(&g, &p.mho)
                )
            };
            emit(&out, &body)
        }
        Command::Validate { pair, out } => {
            need(&out, &[Format::Text, Format::Json])?;
            let g = load_group(&pair.group.group)?;
            let a = load_alpha(&g, &pair.alpha)?;
            let s = resolve_subset(&g, &pair.subset)?;
            match validate_subset(&g, &a, &s) {
                Ok(()) => {
                    let body = if out.format == Format::Json {
                        pretty(&json!({ "valid": true, "subset": set_json(&g, &s) }))
                    } else {
                        format!("valid {}\n", set_text(&g, &s))
                    };
                    emit(&out, &body)
                }
                Err(v) => Err(Failure::Domain(v.describe(&g))),
            }
        }
        Command::Build { pair, out } => {
            let g = load_group(&pair.group.group)?;
            let p = load_pair(&g, &pair.alpha, &pair.subset)?;
            let graph = build_graph(&g, &p);
            let labels: Vec<String> = (0..g.order()).map(|x| g.fmt(x)).collect();
            let body = match out.format {
                Format::Dot => graph.to_dot(&graph_name(&g, &p), &labels),
                Format::Edges => graph.to_edge_list(),
                Format::Json => pretty(&json!({
                    "name": graph_name(&g, &p),
                    "vertices": labels,
                    "edges": graph.edges(),
                    "degree": graph.regular_degree(),
                    "components": graph.components().len(),
                })),
                Format::Text => format!(
                    "{}\nvertices {}\nedges {}\ndegree {}\ncomponents {}\n",
                    graph_name(&g, &p),
                    graph.vertex_count(),
                    graph.edge_count(),
                    p.len(),
                    graph.components().len()
                ),
            };
            emit(&out, &body)
        }
        Command::Enumerate {
            group,
            alpha,
            max_size,
            out,
        } => {
            need(&out, &[Format::Text, Format::Json])?;
            let g = load_group(&group.group)?;
            let a = load_alpha(&g, &alpha)?;
            let subsets: Vec<Vec<String>> = enumerate_subsets(&g, &a, max_size)
                .map_err(domain)?
                .map(|p| p.subset_strings(&g))
                .collect();
            let body = if out.format == Format::Json {
                pretty(&json!({
                    "group": g.label(),
                    "alpha": a.describe(&g),
                    "max_size": max_size,
                    "count": subsets.len(),
                    "subsets": subsets,
                }))
            } else {
                let mut s = String::new();
                for sub in &subsets {
                    s.push_str(&format!("{{{}}}\n", sub.join(", ")));
                }
                s
            };
            emit(&out, &body)
        }
        Command::GciTest {
            pair,
            alpha2,
            subset2,
            out,
        } => {
            need(&out, &[Format::Text, Format::Json])?;
            let g = load_group(&pair.group.group)?;
            let p1 = load_pair(&g, &pair.alpha, &pair.subset)?;
            let p2 = load_pair(&g, &alpha2, &subset2)?;
            let auts: AutGroup = automorphism_group(&g).map_err(domain)?;
            let cert = gci_isomorphic(&g, &p1, &p2, &auts);
            let (g1, g2) = (build_graph(&g, &p1), build_graph(&g, &p2));
            let graph_iso = match graph_isomorphic_capped(&g1, &g2, DEFAULT_VERTEX_CAP) {
                Ok(m) => Some(m.is_some()),
                Err(_) => None,
            };
            let body = if out.format == Format::Json {
                let c = cert.as_ref().map(|c| {
                    let mut v = c.to_json(&g, false);
                    let map: serde_json::Map<String, Value> = c
                        .vertex_map(&g)
                        .into_iter()
                        .enumerate()
                        .map(|(x, y)| (g.fmt(x), json!(g.fmt(y))))
                        .collect();
                    v["vertex_map"] = Value::Object(map);
                    v
                });
                pretty(&json!({
                    "first": graph_name(&g, &p1),
                    "second": graph_name(&g, &p2),
                    "gci_isomorphic": cert.is_some(),
                    "graph_isomorphic": graph_iso,
                    "certificate": c,
                }))
            } else {
                let iso = match graph_iso {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "not decided (vertex cap)",
                };
                let mut s = format!(
                    "{}\n{}\ngraph isomorphic: {iso}\n",
                    graph_name(&g, &p1),
                    graph_name(&g, &p2)
                );
                match &cert {
                    Some(c) => s.push_str(&format!(
                        "GCI isomorphic: yes, gamma={} g={}\n",
                        c.gamma.describe(&g),
                        g.fmt(c.g)
                    )),
                    None => s.push_str("GCI isomorphic: no\n"),
                }
                s
            };
            emit(&out, &body)
        }
        Command::Aut { group, out } => {
            need(&out, &[Format::Text, Format::Json])?;
            let g = load_group(&group.group)?;
            let auts = automorphism_group(&g).map_err(domain)?;
            let gens: Vec<usize> = g.generator_indices().to_vec();
            let rows: Vec<Value> = auts
                .iter()
                .map(|a| {
                    json!({
                        "provenance": a.describe(&g),
                        "involutory": a.is_involutory(),
                        "generator_images": gens.iter().map(|&x| g.fmt(a.apply(x))).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let body = if out.format == Format::Json {
                pretty(&json!({
                    "group": g.label(),
                    "order": auts.len(),
                    "generators": gens.iter().map(|&x| g.fmt(x)).collect::<Vec<_>>(),
                    "automorphisms": rows,
                }))
            } else {
                let mut s = format!(
                    "|Aut({})| = {}, involutory {}\n",
                    g.label(),
                    auts.len(),
                    auts.involutory().count()
                );
                for a in auts.iter() {
                    s.push_str(&a.describe(&g));
                    s.push('\n');
                }
                s
            };
            emit(&out, &body)
        }
        Command::Classify { group, m, out } => {
            need(&out, &[Format::Text, Format::Json])?;
            let g = load_group(&group.group)?;
            let auts = automorphism_group(&g).map_err(domain)?;
            let gci = match classify::not_gci_via_matching(&g) {
                Ok(w) => json!({ "status": "no", "witness": w.to_json(&g) }),
                Err(e) => json!({ "status": "undecided", "reason": e.to_string() }),
            };
            let restricted = match classify::restricted_gci_decide(&g, m, &auts) {
                Ok(d) => {
                    let status = match &d.status {
                        classify::Status::Yes => json!({ "status": "yes" }),
                        classify::Status::YesUpTo(m) => json!({ "status": "yes_up_to_m", "m": m }),
                        classify::Status::No(w) => {
                            json!({ "status": "no", "witness": w.to_json(&g) })
                        }
                        classify::Status::Undecided(r) => {
                            json!({ "status": "undecided", "reason": r })
                        }
                    };
                    json!({
                        "decision": status,
                        "involution": d.involution.map(|t| g.fmt(t)),
                        "m": d.m,
                        "pairs": d.pairs_enumerated,
                        "iso_classes": d.iso_classes,
                    })
                }
                Err(e) => json!({ "decision": { "status": "undecided", "reason": e.to_string() } }),
            };
            let body = if out.format == Format::Json {
                pretty(&json!({ "group": g.label(), "gci": gci, "restricted_gci": restricted }))
            } else {
                format!(
                    "group {}\ngci {}\nrestricted_gci {}\n",
                    g.label(),
                    gci["status"].as_str().unwrap_or("?"),
                    restricted["decision"]["status"].as_str().unwrap_or("?")
                )
            };
            emit(&out, &body)
        }
        Command::VerifyPaper { targets, out } => {
            need(&out, &[Format::Text, Format::Json])?;
            let cap = order_cap()?;
            let mut groups = Vec::new();
            for t in &targets {
                groups.push(parse_group_spec(t)?.build_capped(cap)?);
            }
            let reports: Vec<ClassificationReport> = groups
                .iter()
                .map(|g| verify_group(g).map_err(domain))
                .collect::<Result<_, _>>()?;
            let all = reports.iter().all(ClassificationReport::all_pass);
            let body = if out.format == Format::Json {
                pretty(&json!({ "all_pass": all, "reports": reports }))
            } else {
                let mut s: String = reports
                    .iter()
                    .map(ClassificationReport::render_text)
                    .collect();
                s.push_str(if all {
                    "all claims pass\n"
                } else {
                    "some claims FAILED\n"
                });
                s
            };
            emit(&out, &body)?;
            if all {
                Ok(())
            } else {
                Err(Failure::Domain("claim failures".into()))
            }
        }
        Command::Group { group, out } => {
            need(&out, &[Format::Text, Format::Json])?;
            let g = load_group(&group.group)?;
            let body = if out.format == Format::Json {
                pretty(&g.to_json())
            } else {
                let mut s = format!("{} order {} degree {}\n", g.label(), g.order(), g.degree());
                for x in 0..g.order() {
                    s.push_str(&g.fmt(x));
                    s.push('\n');
                }
                s
            };
            emit(&out, &body)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if !cli.parallel {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build_global();
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
