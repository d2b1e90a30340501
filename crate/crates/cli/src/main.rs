use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use indsublab::canon::{from_graph6, to_graph6};
use indsublab::counting::{count_cp_indsub, count_cphom, count_hom, count_indsub, count_sub, HColoring};
use indsublab::enumerator::{alternating_enumerator, alternating_enumerator_mod_p, subbasis_coefficients};
use indsublab::modular::{
    coloring_to_clique_graph, count_valid_proper_colorings, mod_p_clique_via_indsub, mod_p_oracle,
    numclique_from_modclique, sat_to_coloring_graph, Cnf3,
};
use indsublab::params::parse_rational;
use indsublab::reductions::{
    classify_concentrated_reducible, count_cliques_via_indsub, find_witness_graph, lift_identity, Classification,
    LiftSpec, OracleHandle,
};
use indsublab::sylow::{orbit_partition, symmetric_sylow, PermutationGroup, SylowLattice};
use indsublab::{canonical_key, Error, Graph, GraphParameter};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "indsublab", version, about = "Alternating enumerators, Sylow fixed points and IndSub reductions")]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alternating enumerator of a parameter on a graph.
    Ae {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        graph: String,
    },
    /// The enumerator mod p, summed over the fixed points of a p-subgroup of Aut(H).
    AeMod {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        p: u64,
    },
    /// Coefficients of a parameter in the Sub basis on k-vertex graphs.
    Subbasis {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        k: usize,
    },
    /// Fixed points of the Sylow p-subgroup acting on K_{p^m}.
    FixedPoints { p: usize, m: usize },
    /// Exact counting problems.
    Count {
        #[command(subcommand)]
        kind: CountKind,
    },
    /// Reductions that only query an IndSub oracle.
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
    },
    /// Inhabited-graph lifts and the concentrated/reducible classifier.
    Lift {
        #[command(subcommand)]
        kind: LiftKind,
    },
    /// SAT gadgets.
    Gadget {
        #[command(subcommand)]
        kind: GadgetKind,
    },
    /// Run a verification suite, or "all".
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct PhiK {
    #[arg(long)]
    phi: String,
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand)]
enum CountKind {
    Indsub {
        #[command(flatten)]
        phi: PhiK,
        #[arg(long)]
        graph: String,
    },
    Cpindsub {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        coloring: PathBuf,
    },
    Sub {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph: String,
    },
    Hom {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph: String,
    },
    Cphom {
        #[arg(long)]
        coloring: PathBuf,
    },
    Clique {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph: String,
    },
}

#[derive(Subcommand)]
enum ReduceKind {
    /// Count l-cliques through the three-stage pipeline.
    CliqueViaIndsub {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        graph: String,
        /// Pattern F; searched for when omitted.
        #[arg(long)]
        f: Option<String>,
    },
    /// Count l-cliques mod p through the residue pipeline.
    ModClique {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        f: Option<String>,
    },
    /// Recover #k-cliques mod p from divisibility queries.
    Numclique {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        graph: String,
    },
}

#[derive(Subcommand)]
enum LiftKind {
    /// Both sides of the lift identity for a colored instance.
    Identity {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        coloring: PathBuf,
        /// JSON {"c": graph, "parts": [graph, ...]}.
        #[arg(long)]
        spec: PathBuf,
    },
    Classify {
        #[command(flatten)]
        phi: PhiK,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        t: u32,
    },
}

#[derive(Subcommand)]
enum GadgetKind {
    Sat3 {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

enum Failure {
    Lib(Error),
    Input(String),
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Out = Result<Value, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A graph file holding `{"n", "edges"}` JSON or a graph6 line, or an inline `g6:<string>`.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    let text = match arg.strip_prefix("g6:") {
        Some(inline) => inline.to_string(),
        None => read(Path::new(arg))?,
    };
    let text = text.trim();
    if text.starts_with('{') {
        serde_json::from_str(text).map_err(|e| Failure::Input(format!("{arg}: {e}")))
    } else {
        from_graph6(text).map_err(|e| Failure::Input(format!("{arg}: {e}")))
    }
}

fn load_json(path: &Path) -> Result<Value, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn graph_field(v: &Value, field: &str, path: &Path) -> Result<Graph, Failure> {
    serde_json::from_value(v[field].clone())
        .map_err(|e| Failure::Input(format!("{}: field {field:?}: {e}", path.display())))
}

/// JSON `{"host": graph, "pattern": graph, "map": [color, ...]}`.
fn load_coloring(path: &Path) -> Result<HColoring, Failure> {
    let v = load_json(path)?;
    let map: Vec<usize> = serde_json::from_value(v["map"].clone())
        .map_err(|e| Failure::Input(format!("{}: field \"map\": {e}", path.display())))?;
    Ok(HColoring::new(graph_field(&v, "host", path)?, graph_field(&v, "pattern", path)?, map)?)
}

fn load_spec(path: &Path) -> Result<LiftSpec, Failure> {
    let v = load_json(path)?;
    let parts: Vec<Graph> = serde_json::from_value(v["parts"].clone())
        .map_err(|e| Failure::Input(format!("{}: field \"parts\": {e}", path.display())))?;
    Ok(LiftSpec::new(graph_field(&v, "c", path)?, parts)?)
}

/// Parameters keep their memo on disk under `INDSUBLAB_CACHE_DIR`, one JSON map per parameter.
struct Memo {
    file: Option<PathBuf>,
}

impl Memo {
    fn open(phi: &GraphParameter) -> Memo {
        let file = std::env::var_os("INDSUBLAB_CACHE_DIR").map(|dir| {
            let name: String =
                phi.name().chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
            PathBuf::from(dir).join(format!("{name}.json"))
        });
        if let Some(entries) = file.as_ref().and_then(|f| std::fs::read_to_string(f).ok()) {
            // a damaged cache is ignored, never trusted
            if let Ok(Value::Object(map)) = serde_json::from_str(&entries) {
                let parsed = map.iter().filter_map(|(g6, v)| {
                    let key = canonical_key(&from_graph6(g6).ok()?).ok()?;
                    Some((key, parse_rational(v.as_str()?).ok()?))
                });
                phi.preload(parsed.collect::<Vec<_>>());
            }
        }
        Memo { file }
    }

    fn save(&self, phi: &GraphParameter) {
        let Some(file) = &self.file else { return };
        let map: serde_json::Map<String, Value> =
            phi.memo_snapshot().into_iter().map(|(k, v)| (k.to_string(), json!(v.to_string()))).collect();
        if let Some(dir) = file.parent() {
            let _ = std::fs::create_dir_all(dir);
        }
        let _ = std::fs::write(file, serde_json::to_string(&Value::Object(map)).unwrap_or_default());
    }
}

fn with_phi(spec: &str, body: impl FnOnce(&GraphParameter) -> Out) -> Out {
    let phi = GraphParameter::parse(spec).map_err(|e| match e {
        // only a table file can be malformed input; a bad name is a bad argument
        Error::Parse(msg) if !spec.starts_with("table:") => Failure::Lib(Error::Precondition(msg)),
        e => Failure::Lib(e),
    })?;
    let memo = Memo::open(&phi);
    let out = body(&phi)?;
    memo.save(&phi);
    Ok(out)
}

fn graph_json(g: &Graph) -> Value {
    json!({ "graph6": to_graph6(g), "n": g.n(), "edges": g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>() })
}

/// The subgroup of a Sylow p-subgroup of Sym(n) generated by the generators that fix `h`.
fn automorphism_p_group(p: u64, h: &Graph) -> Result<PermutationGroup, Failure> {
    let sylow = symmetric_sylow(p as usize, h.n())?;
    let gens: Vec<Vec<usize>> = sylow.generators().iter().filter(|g| h.permuted(g) == *h).cloned().collect();
    if gens.is_empty() {
        return Ok(PermutationGroup::trivial(h.n()));
    }
    Ok(PermutationGroup::new(h.n(), gens)?)
}

fn pick_witness(phi: &GraphParameter, l: usize, p: Option<u64>, given: Option<&str>) -> Result<Graph, Failure> {
    match given {
        Some(f) => load_graph(f),
        None => find_witness_graph(phi, l, p)?.ok_or_else(|| {
            Failure::Lib(Error::Precondition(format!("no graph on at most 6 vertices containing K_{{{l},{l}}} has a usable enumerator")))
        }),
    }
}

fn run(command: Command) -> Out {
    match command {
        Command::Ae { phi, graph } => {
            let g = load_graph(&graph)?;
            with_phi(&phi, |phi| {
                let value = alternating_enumerator(phi, &g)?;
                Ok(json!({ "graph": canonical_key(&g).map(|k| k.to_string()).unwrap_or_else(|_| to_graph6(&g)), "value": value.to_string() }))
            })
        }
        Command::AeMod { phi, graph, p } => {
            let g = load_graph(&graph)?;
            with_phi(&phi, |phi| {
                let group = automorphism_p_group(p, &g)?;
                let lattice = orbit_partition(&group, &g)?;
                let residue = alternating_enumerator_mod_p(phi, &g, &lattice, p)?;
                Ok(json!({
                    "graph": to_graph6(&g),
                    "p": p,
                    "group_order": group.order()?.to_string(),
                    "orbits": lattice.orbit_count(),
                    "fixed_points": lattice.fixed_point_count(),
                    "residue": residue,
                }))
            })
        }
        Command::Subbasis { phi, k } => with_phi(&phi, |phi| {
            let dec = subbasis_coefficients(phi, k)?;
            let coefficients: Vec<Value> = dec
                .coefficients
                .iter()
                .map(|(key, v)| json!({ "graph": key.to_string(), "value": v.to_string() }))
                .collect();
            Ok(json!({ "k": k, "coefficients": coefficients }))
        }),
        Command::FixedPoints { p, m } => {
            let syl = SylowLattice::build(p, m)?;
            let orbits: Vec<Value> = syl.lattice.orbits.iter().map(|o| json!(o.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())).collect();
            let points: Vec<Value> = syl
                .points
                .iter()
                .map(|(pt, fp)| {
                    json!({
                        "tuple": (0..m).map(|i| pt.set(i)).collect::<Vec<_>>(),
                        "orbit_set": syl.lattice.fixed_points().position(|x| x == *fp),
                        "graph": to_graph6(&pt.graph()),
                        "edges": pt.graph().edge_count(),
                        "level": pt.level(),
                        "empty_prefix": pt.empty_prefix(),
                    })
                })
                .collect();
            Ok(json!({ "p": p, "m": m, "orbits": orbits, "fixed_point_count": points.len(), "fixed_points": points }))
        }
        Command::Count { kind } => {
            let count = match kind {
                CountKind::Indsub { phi, graph } => {
                    let g = load_graph(&graph)?;
                    return with_phi(&phi.phi, |p| Ok(json!({ "count": count_indsub(p, phi.k, &g)?.to_string() })));
                }
                CountKind::Cpindsub { phi, coloring } => {
                    let c = load_coloring(&coloring)?;
                    return with_phi(&phi, |p| Ok(json!({ "count": count_cp_indsub(p, &c)?.to_string() })));
                }
                CountKind::Sub { pattern, graph } => count_sub(&load_graph(&pattern)?, &load_graph(&graph)?)?.to_string(),
                CountKind::Hom { pattern, graph } => count_hom(&load_graph(&pattern)?, &load_graph(&graph)?)?.to_string(),
                CountKind::Cphom { coloring } => count_cphom(&load_coloring(&coloring)?, None)?.to_string(),
                CountKind::Clique { k, graph } => load_graph(&graph)?.count_cliques(k).to_string(),
            };
            Ok(json!({ "count": count }))
        }
        Command::Reduce { kind } => match kind {
            ReduceKind::CliqueViaIndsub { l, phi, graph, f } => {
                let g = load_graph(&graph)?;
                with_phi(&phi, |phi| {
                    let f = pick_witness(phi, l, None, f.as_deref())?;
                    let rep = count_cliques_via_indsub(l, phi, &f, &g)?;
                    Ok(json!({
                        "count": rep.count.to_string(),
                        "f": to_graph6(&f),
                        "oracle_calls": rep.oracle_calls,
                        "max_query_size": rep.max_query_size,
                        "size_bound": rep.size_bound,
                        "instance_size": rep.instance_size,
                    }))
                })
            }
            ReduceKind::ModClique { l, phi, graph, p, f } => {
                let g = load_graph(&graph)?;
                with_phi(&phi, |phi| {
                    let f = pick_witness(phi, l, Some(p), f.as_deref())?;
                    let residue = mod_p_clique_via_indsub(l, phi, &f, &g, p)?;
                    Ok(json!({ "residue": residue, "p": p, "f": to_graph6(&f) }))
                })
            }
            ReduceKind::Numclique { k, p, graph } => {
                let g = load_graph(&graph)?;
                let base = OracleHandle::indsub(GraphParameter::clique_indicator(), k);
                let oracle = mod_p_oracle(&base, p)?;
                let residue = numclique_from_modclique(&g, k, p, &oracle)?;
                Ok(json!({ "residue": residue, "p": p, "oracle_calls": base.call_count() }))
            }
        },
        Command::Lift { kind } => match kind {
            LiftKind::Identity { phi, coloring, spec } => {
                let c = load_coloring(&coloring)?;
                let spec = load_spec(&spec)?;
                with_phi(&phi, |phi| {
                    let (left, right) = lift_identity(phi, &c, &spec)?;
                    Ok(json!({ "left": left.to_string(), "right": right.to_string(), "holds": left == right }))
                })
            }
            LiftKind::Classify { phi, p, t } => with_phi(&phi.phi, |f| {
                Ok(match classify_concentrated_reducible(f, phi.k, p, t)? {
                    Classification::Concentrated { witness, residue } => {
                        json!({ "class": "concentrated", "witness": witness.to_string(), "residue": residue })
                    }
                    Classification::Reducible { spec } => json!({
                        "class": "reducible",
                        "c": graph_json(&spec.c),
                        "parts": spec.parts.iter().map(graph_json).collect::<Vec<_>>(),
                    }),
                    Classification::Trivial => json!({ "class": "trivial" }),
                })
            }),
        },
        Command::Gadget { kind: GadgetKind::Sat3 { cnf, k } } => {
            let phi = Cnf3::parse_dimacs(&read(&cnf)?).map_err(|e| Failure::Input(format!("{}: {e}", cnf.display())))?;
            let gadget = sat_to_coloring_graph(&phi)?;
            let tilde = coloring_to_clique_graph(&gadget, &phi, k)?;
            // the coloring sweep has a vertex cap; report null past it
            let colorings = match count_valid_proper_colorings(&gadget, &phi) {
                Ok(c) => json!(c.to_string()),
                Err(Error::CapExceeded { .. }) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            Ok(json!({
                "g_phi": graph_json(&gadget.graph),
                "g_tilde": graph_json(&tilde),
                "census": {
                    "variables": phi.n,
                    "clauses": phi.clauses.len(),
                    "k": k,
                    "valid_colorings": colorings,
                    "cliques": tilde.count_cliques(2 * k + 1).to_string(),
                    "satisfying": phi.count_satisfying()?.to_string(),
                },
            }))
        }
        Command::Verify { suite, seed } => {
            let reports = indsublab::verify::run(&suite, seed)?;
            let value = serde_json::to_value(&reports).map_err(|e| Failure::Lib(Error::Invariant(e.to_string())))?;
            if reports.iter().all(|r| r.passed) {
                Ok(value)
            } else {
                Err(Failure::Verify(value))
            }
        }
    }
}

fn emit(out: Option<&Path>, value: &Value) -> ExitCode {
    let text = serde_json::to_string_pretty(value).expect("json");
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            use std::io::Write;
            // a closed pipe downstream is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                ErrorKind::InvalidSubcommand | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 64,
                _ => 2,
            });
        }
    };
    match run(cli.command) {
        Ok(value) => emit(cli.out.as_deref(), &value),
        Err(Failure::Verify(value)) => {
            emit(cli.out.as_deref(), &value);
            eprintln!("error: verification failed");
            ExitCode::from(3)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: malformed input: {msg}");
            ExitCode::from(65)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Invariant(_) => 3,
                Error::Parse(_) => 65,
                _ => 2,
            })
        }
    }
}
