use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use transit_core::axioms::{check_axiom, AxiomId};
use transit_core::convexity::{convex_sets, convex_sets_bruteforce, hull, is_convex_geometry};
use transit_core::formats::{graph_from_text, graphs_from_corpus, transit_from_json, TransitJson, SCHEMA_VERSION};
use transit_core::graphs::{build, to_graph6, Model};
use transit_core::harness::{
    enumerate_connected_graphs, find_counterexample_with, verify_theorem_with, PredicateId, SearchConfig, TheoremId,
    VerifyConfig,
};
use transit_core::hypergraph::{Hypergraph, HypergraphJson};
use transit_core::recognizers::{recognize, ClassId};
use transit_core::setsystems::{
    canonical_transit, check_k_axioms, identifies, transit_set_system, transit_system_is_convex_geometry, SetSystem,
    SetSystemJson,
};
use transit_core::{axiom_profile, fixtures, Error, Subset, TransitFunction};

/// Transit functions, their axioms and convexities, and the small-graph harness.
#[derive(Parser)]
#[command(name = "transit", version)]
struct Cli {
    /// Print the JSON schema of inputs and outputs, then exit.
    #[arg(long)]
    schema: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args)]
struct TransitInput {
    /// Transit-function JSON file; `-` or absent reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Use a built-in fixture by name instead.
    #[arg(long, conflicts_with = "input")]
    fixture: Option<String>,
}

#[derive(Args)]
struct GraphInput {
    #[arg(long)]
    graph6: Option<String>,
    /// File holding graph6 or adjacency JSON.
    #[arg(long, conflicts_with = "graph6")]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check transit axioms; all of them unless `--axiom` is given.
    Axioms {
        #[command(flatten)]
        input: TransitInput,
        #[arg(long, value_delimiter = ',')]
        axiom: Vec<String>,
    },
    /// R-convex hull of a set.
    Hull {
        #[command(flatten)]
        input: TransitInput,
        /// Comma-separated indices.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
    },
    /// All R-convex sets.
    ConvexSets {
        #[command(flatten)]
        input: TransitInput,
        /// Scan all 2^n subsets instead of closure search.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Convex-geometry verdict with certificate.
    Geometry {
        #[command(flatten)]
        input: TransitInput,
    },
    /// Build a graph transit function; output is transit-function JSON.
    Build {
        #[arg(long)]
        model: String,
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Recognize a graph class, or every class when `--class` is absent.
    Recognize {
        #[arg(long)]
        class: Option<String>,
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Set-system axioms and canonical transit function, or with
    /// `--transit` the transit sets of a transit function.
    Setsys {
        /// Set-system JSON file; `-` or absent reads stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Read a transit function instead.
        #[arg(long)]
        transit: bool,
    },
    /// Strong cut-vertices and cut-vertex transit function of a hypergraph.
    Hyper {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Cross-check a theorem; `--theorem all` runs every one.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        /// Extra graph6 graphs, one per line.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Search for an object breaking a registered claim.
    Search {
        #[arg(long)]
        predicate: String,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Connected graphs on n vertices up to isomorphism, as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Only print the count.
        #[arg(long)]
        count: bool,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<Value, Failure>;

fn read_text(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn load_transit(input: &TransitInput) -> Result<TransitFunction, Failure> {
    if let Some(name) = &input.fixture {
        return fixtures::by_name(name).ok_or_else(|| Failure::Domain(Error::UnknownId(name.clone())));
    }
    Ok(transit_from_json(&read_text(input.input.as_ref())?)?)
}

fn load_graph(input: &GraphInput) -> Result<transit_core::Graph, Failure> {
    let text = match (&input.graph6, &input.graph) {
        (Some(s), _) => s.clone(),
        (None, path) => read_text(path.as_ref())?,
    };
    Ok(graph_from_text(&text)?)
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Failure> {
    Ok(s.parse::<T>()?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn run(cmd: Command) -> Out {
    match cmd {
        Command::Axioms { input, axiom } => {
            let r = load_transit(&input)?;
            if axiom.is_empty() {
                return Ok(to_value(&axiom_profile(&r)));
            }
            let mut out = serde_json::Map::new();
            for a in &axiom {
                let id: AxiomId = parse(a)?;
                out.insert(id.name().to_string(), to_value(&check_axiom(&r, id)));
            }
            Ok(Value::Object(out))
        }
        Command::Hull { input, set } => {
            let r = load_transit(&input)?;
            let s = Subset::from_indices(&set, r.len())?;
            Ok(json!({ "set": s.to_vec(), "hull": hull(&r, s).to_vec() }))
        }
        Command::ConvexSets { input, bruteforce } => {
            let r = load_transit(&input)?;
            let family = if bruteforce { convex_sets_bruteforce(&r)? } else { convex_sets(&r)? };
            let sets: Vec<Vec<usize>> = family.sets().iter().map(|s| s.to_vec()).collect();
            Ok(json!({ "count": sets.len(), "sets": sets }))
        }
        Command::Geometry { input } => Ok(to_value(&is_convex_geometry(&load_transit(&input)?)?)),
        Command::Build { model, graph } => {
            let m: Model = parse(&model)?;
            let g = load_graph(&graph)?;
            Ok(to_value(&TransitJson::from(&build(m, &g)?)))
        }
        Command::Recognize { class, graph } => {
            let g = load_graph(&graph)?;
            match class {
                Some(c) => Ok(to_value(&recognize(&g, parse::<ClassId>(&c)?)?)),
                None => {
                    let mut out = serde_json::Map::new();
                    for c in ClassId::ALL {
                        out.insert(c.name().to_string(), to_value(&recognize(&g, c)?));
                    }
                    Ok(Value::Object(out))
                }
            }
        }
        Command::Setsys { input, transit } => {
            let text = read_text(input.as_ref())?;
            if transit {
                let r = transit_from_json(&text)?;
                let c = transit_set_system(&r);
                let geometry = match transit_system_is_convex_geometry(&r) {
                    Ok(cert) => to_value(&cert),
                    Err(Error::HypothesesNotMet(h)) => json!({ "hypotheses_not_met": h }),
                    Err(e) => return Err(e.into()),
                };
                return Ok(json!({
                    "members": to_value(&SetSystemJson::from(&c)),
                    "identifies": to_value(&identifies(&r)),
                    "geometry": geometry,
                }));
            }
            let j: SetSystemJson = serde_json::from_str(&text).map_err(Error::from)?;
            let c = SetSystem::try_from(j)?;
            let report = check_k_axioms(&c);
            let canonical = match canonical_transit(&c) {
                Ok(r) => to_value(&TransitJson::from(&r)),
                Err(Error::MissingSingleton { .. } | Error::UncoveredPair { .. }) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            Ok(json!({ "is_t_system": report.is_t_system(), "axioms": to_value(&report), "canonical": canonical }))
        }
        Command::Hyper { input } => {
            let j: HypergraphJson = serde_json::from_str(&read_text(input.as_ref())?).map_err(Error::from)?;
            let h = Hypergraph::try_from(j)?;
            let r = h.cutvertex_c()?;
            Ok(json!({
                "strong_cut_vertices": h.strong_cut_vertices()?.to_vec(),
                "transit": to_value(&TransitJson::from(&r)),
                "geometry": to_value(&is_convex_geometry(&r)?),
            }))
        }
        Command::Verify { theorem, n, seed, samples, corpus } => {
            let ids: Vec<TheoremId> = if theorem == "all" { TheoremId::ALL.to_vec() } else { vec![parse(&theorem)?] };
            let extra = match &corpus {
                Some(p) => graphs_from_corpus(&read_text(Some(p))?)?,
                None => Vec::new(),
            };
            let mut reports = Vec::new();
            for t in &ids {
                let mut cfg = VerifyConfig::new(n.unwrap_or(t.default_n()));
                cfg.corpus = extra.clone();
                if let Some(s) = seed {
                    cfg.seed = s;
                }
                if let Some(m) = samples {
                    cfg.samples = m;
                }
                reports.push(to_value(&verify_theorem_with(*t, &cfg)?));
            }
            Ok(if reports.len() == 1 { reports.pop().expect("one report") } else { Value::Array(reports) })
        }
        Command::Search { predicate, n, seed, samples } => {
            let p: PredicateId = parse(&predicate)?;
            let mut cfg = SearchConfig::new(n);
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(m) = samples {
                cfg.samples = m;
            }
            let w = find_counterexample_with(p, &cfg)?;
            Ok(json!({ "predicate": p.name(), "found": w.is_some(), "witness": w }))
        }
        Command::Enumerate { n, count } => {
            let graphs = enumerate_connected_graphs(n)?;
            if count {
                return Ok(json!({ "n": n, "count": graphs.len() }));
            }
            let g6: Vec<String> = graphs.iter().map(to_graph6).collect();
            Ok(json!({ "n": n, "count": g6.len(), "graphs": g6 }))
        }
    }
}

fn schema() -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "inputs": {
            "transit": { "n": "count", "labels": "optional list of n distinct strings",
                         "entries": [{ "u": "index", "v": "index", "set": "index list containing u and v" }],
                         "default": "unlisted pairs map to {u, v}" },
            "graph": "graph6 string, or { \"n\": count, \"adjacency\": [[neighbour indices]] }",
            "set_system": { "n": "count", "members": "list of nonempty index lists" },
            "hypergraph": { "n": "count", "edges": "list of nonempty index lists" },
        },
        "outputs": {
            "axioms": "map axiom -> { axiom, holds, witness: [{ role, index }] | null }",
            "hull": { "set": "index list", "hull": "index list" },
            "convex-sets": { "count": "count", "sets": "list of index lists" },
            "geometry": { "is_geometry": "bool", "mkm": "verdict", "anti_exchange": "verdict",
                          "extension": "verdict", "chain": "index list | null" },
            "build": "transit",
            "recognize": "verdict, or map class -> verdict",
            "setsys": { "is_t_system": "bool", "axioms": "map ks|kr|kc|k1|k2 -> verdict", "canonical": "transit | null" },
            "setsys --transit": { "members": "set_system", "identifies": "verdict", "geometry": "certificate | { hypotheses_not_met }" },
            "hyper": { "strong_cut_vertices": "index list", "transit": "transit", "geometry": "certificate" },
            "verify": { "theorem": "id", "kind": "iff | implies", "n_range": "[lo, hi]", "graphs_checked": "count",
                        "lhs_true": "count", "rhs_true": "count", "mismatches": "list of graph6 or JSON strings",
                        "notes": "list of strings" },
            "search": { "predicate": "id", "found": "bool", "witness": "{ kind: transit | hypergraph, ... } | null" },
            "enumerate": { "n": "count", "count": "count", "graphs": "list of graph6" },
            "error (stderr)": { "error": "message" },
        },
        "exit_codes": { "0": "success, whatever the verdict", "1": "usage error", "2": "domain error" },
        "theorems": TheoremId::ALL.iter().map(|t| t.name()).collect::<Vec<_>>(),
        "predicates": PredicateId::ALL.iter().map(|p| p.name()).collect::<Vec<_>>(),
        "models": Model::ALL.iter().map(|m| m.name()).collect::<Vec<_>>(),
        "classes": ClassId::ALL.iter().map(|c| c.name()).collect::<Vec<_>>(),
        "axioms": AxiomId::ALL.iter().map(|a| a.name()).collect::<Vec<_>>(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match (cli.schema, cli.command) {
        (true, _) => Ok(schema()),
        (false, Some(cmd)) => run(cmd),
        (false, None) => Err(Failure::Usage("a subcommand is required; see --help".into())),
    };
    match result {
        Ok(v) => {
            println!("{}", serde_json::to_string(&v).expect("json"));
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
