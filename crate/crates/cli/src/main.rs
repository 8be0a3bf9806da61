//! `kanforge`: run one computation on JSON inputs and print a JSON report.
//!
//! Exit codes: 0 computed, 1 property violated, 2 input error, 3 size
//! budget exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use kanforge::abelian::{
    dold_kan_gamma, dold_kan_n, dold_kan_round_trip, random_complex, ChainComplex, FgAbGroup, RandomComplexShape,
};
use kanforge::classifying::{k_space, w_bar_group, w_bar_sset};
use kanforge::homalg::{ext_all, group_cohomology_all, group_homology_all, lhs_report, tor_all, GModule};
use kanforge::homotopy::{loop_space_budget, pi0, pi0_pointed, pi_n_group, FinGroup, SimplicialGroup};
use kanforge::relations::{adjunction_oracles, relation_oracles, OracleOutcome};
use kanforge::simplicial::lifting::is_kan_report;
use kanforge::simplicial::{is_di_weak_equivalence, is_fibration, LiftMode, PointedTruncSSet, TruncSSet};
use kanforge::{corpus, io, Error, DEFAULT_CELL_BUDGET};

#[derive(Parser)]
#[command(name = "kanforge", version, about = "Exact finite simplicial homotopy and homological algebra")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Opts {
    /// Truncation dimension: lowers the dimension of inputs, sets it for
    /// generated objects.
    #[arg(long, global = true)]
    trunc_dim: Option<usize>,
    /// Highest (co)homological degree.
    #[arg(long, global = true, default_value_t = 4)]
    max_total: usize,
    /// Last spectral-sequence page (default: max-total + 2).
    #[arg(long, global = true)]
    max_page: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Per-level cell budget for enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_CELL_BUDGET)]
    cell_budget: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a file: simplicial identities, group axioms, d∘d = 0, ...
    Validate {
        file: PathBuf,
        /// Group file, needed to validate a module file.
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Is the simplicial set a Kan complex (up to its truncation)?
    Kan { file: PathBuf },
    /// Horn (default) or boundary lifting for a simplicial-map file.
    Fibration {
        map: PathBuf,
        #[arg(long)]
        boundary: bool,
    },
    /// Weak equivalence through the homotopy-lifting diagrams.
    DiWe { map: PathBuf },
    /// πₙ(X, x) as π₀(ΩⁿX); Moore-complex cross-check on simplicial groups.
    Pi {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
    },
    /// Path components.
    Pi0 { file: PathBuf },
    /// Homology of a complex file.
    Homology { file: PathBuf },
    /// Γ of a complex file (or of `--random N` seeded complexes) and both
    /// round trips.
    DoldKan {
        file: Option<PathBuf>,
        #[arg(long)]
        random: Option<usize>,
        /// Write Γ(B) as a simplicial-group file (finite B only).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// K(G, n) or W̄G for a group file, written as a simplicial-group file.
    Classify {
        group: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::K)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Hⁿ(G, A) and H_n(G, A) for n ≤ max-total (A defaults to trivial ℤ).
    GroupCohomology { group: PathBuf, module: Option<PathBuf> },
    /// Tor^{ℤG}_n(M, N); M must be ℤ-free.
    Tor { group: PathBuf, m: PathBuf, n: PathBuf },
    /// Extⁿ_{ℤG}(M, N); M must be ℤ-free.
    Ext { group: PathBuf, m: PathBuf, n: PathBuf },
    /// Lyndon–Hochschild–Serre spectral sequence of an extension.
    Lhs { extension: PathBuf, module: PathBuf },
    /// Exhaustive relation-calculus and δ ⊣ ε oracles.
    RelationsSuite {
        #[arg(long, default_value_t = 3)]
        size: usize,
    },
    /// Write the standard example corpus.
    Corpus {
        #[arg(long, default_value = "corpus")]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    K,
    Wbar,
}

#[derive(Default)]
struct Ctx {
    inputs: Vec<Value>,
    warnings: Vec<String>,
    trunc_dim: Option<usize>,
}

struct Done {
    results: Value,
    violated: bool,
}

fn computed(results: Value) -> Result<Done, Error> {
    Ok(Done { results, violated: false })
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<(String, String), Error> {
        let text = io::read_file(path)?;
        let digest = Sha256::digest(text.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        let name = path.display().to_string();
        self.inputs.push(json!({"path": name, "sha256": hex}));
        Ok((text, name))
    }

    fn sset(&mut self, path: &Path, opts: &Opts) -> Result<Arc<TruncSSet>, Error> {
        let (text, name) = self.read(path)?;
        let x = io::sset_from_json(&text, &name)?;
        let x = self.truncate(x, opts)?;
        budget(&x, opts)?;
        Ok(Arc::new(x))
    }

    fn truncate(&mut self, x: TruncSSet, opts: &Opts) -> Result<TruncSSet, Error> {
        let d = x.trunc_dim();
        let out = match opts.trunc_dim {
            Some(t) if t > d => {
                return Err(Error::Invalid(format!("--trunc-dim {t} exceeds the input truncation {d}")));
            }
            Some(t) => x.truncate(t),
            None => x,
        };
        self.trunc_dim = Some(out.trunc_dim());
        Ok(out)
    }

    fn group(&mut self, path: &Path) -> Result<FinGroup, Error> {
        let (text, name) = self.read(path)?;
        io::group_from_json(&text, &name)
    }

    fn module(&mut self, path: &Path, g: &FinGroup) -> Result<GModule, Error> {
        let (text, name) = self.read(path)?;
        io::module_from_json(&text, &name, g)
    }

    fn complex(&mut self, path: &Path) -> Result<ChainComplex, Error> {
        let (text, name) = self.read(path)?;
        io::complex_from_json(&text, &name)
    }
}

fn budget(x: &TruncSSet, opts: &Opts) -> Result<(), Error> {
    match x.cell_counts().iter().position(|&c| c > opts.cell_budget) {
        Some(n) => Err(Error::Budget { what: format!("level {n} of the input"), limit: opts.cell_budget }),
        None => Ok(()),
    }
}

fn factors(g: &FgAbGroup) -> Value {
    json!(g.invariant_factors())
}

fn degree_map(gs: &[FgAbGroup]) -> Value {
    Value::Object(gs.iter().enumerate().map(|(n, g)| (n.to_string(), factors(g))).collect())
}

fn oracles(list: &[OracleOutcome]) -> Value {
    Value::Object(
        list.iter()
            .map(|o| (o.name.clone(), json!({"cases": o.cases, "pass": o.holds(), "first_failure": o.first_failure})))
            .collect(),
    )
}

fn looks_like_sgroup(text: &str) -> bool {
    serde_json::from_str::<Value>(text).map(|v| v.get("groups").is_some()).unwrap_or(false)
}

fn run(cmd: &Cmd, opts: &Opts, ctx: &mut Ctx) -> Result<Done, Error> {
    match cmd {
        Cmd::Validate { file, group } => validate(file, group.as_deref(), opts, ctx),
        Cmd::Kan { file } => {
            let x = ctx.sset(file, opts)?;
            let r = is_kan_report(&x)?;
            Ok(Done { violated: !r.holds, results: json!({"kan": r.holds, "witness": r.witness}) })
        }
        Cmd::Fibration { map, boundary } => {
            let (text, name) = ctx.read(map)?;
            let f = io::map_from_json(&text, &name)?;
            budget(f.source(), opts)?;
            budget(f.target(), opts)?;
            ctx.trunc_dim = Some(f.source().trunc_dim());
            let mode = if *boundary { LiftMode::Boundary } else { LiftMode::Horn };
            let r = is_fibration(&f, mode)?;
            Ok(Done { violated: !r.holds, results: json!({"mode": mode, "fibration": r.holds, "witness": r.witness}) })
        }
        Cmd::DiWe { map } => {
            let (text, name) = ctx.read(map)?;
            let f = io::map_from_json(&text, &name)?;
            budget(f.source(), opts)?;
            budget(f.target(), opts)?;
            ctx.trunc_dim = Some(f.source().trunc_dim());
            let r = is_di_weak_equivalence(&f)?;
            if !(r.source_kan && r.target_kan) {
                ctx.warnings.push("source or target is not Kan; the check is not homotopy invariant".into());
            }
            Ok(Done { violated: !r.holds, results: serde_json::to_value(&r).expect("serializable") })
        }
        Cmd::Pi { file, n, basepoint } => pi(file, *n, *basepoint, opts, ctx),
        Cmd::Pi0 { file } => {
            let x = ctx.sset(file, opts)?;
            let h = pi0(&x)?;
            let classes: Vec<Vec<usize>> = (0..h.len()).map(|c| h.members(c)).collect();
            computed(json!({"count": h.len(), "classes": classes}))
        }
        Cmd::Homology { file } => {
            let c = ctx.complex(file)?;
            let hs: Vec<FgAbGroup> = (0..=c.length()).map(|n| c.homology(n)).collect();
            computed(json!({"length": c.length(), "homology": degree_map(&hs)}))
        }
        Cmd::DoldKan { file, random, output } => dold_kan(file.as_deref(), *random, output.as_deref(), opts, ctx),
        Cmd::Classify { group, kind, n, output } => classify(group, *kind, *n, output.as_deref(), opts, ctx),
        Cmd::GroupCohomology { group, module } => {
            let g = ctx.group(group)?;
            let a = match module {
                Some(p) => ctx.module(p, &g)?,
                None => GModule::integers(&g),
            };
            let co = group_cohomology_all(&a, opts.max_total)?;
            let ho = group_homology_all(&a, opts.max_total)?;
            computed(json!({"max_total": opts.max_total, "cohomology": degree_map(&co), "homology": degree_map(&ho)}))
        }
        Cmd::Tor { group, m, n } | Cmd::Ext { group, m, n } => {
            let g = ctx.group(group)?;
            let mm = ctx.module(m, &g)?;
            let nn = ctx.module(n, &g)?;
            let (name, gs) = match cmd {
                Cmd::Tor { .. } => ("tor", tor_all(&mm, &nn, opts.max_total)?),
                _ => ("ext", ext_all(&mm, &nn, opts.max_total)?),
            };
            computed(json!({"max_total": opts.max_total, name: degree_map(&gs)}))
        }
        Cmd::Lhs { extension, module } => {
            let (text, name) = ctx.read(extension)?;
            let ext = io::extension_from_json(&text, &name)?;
            let a = ctx.module(module, &ext.g)?;
            let max_page = opts.max_page.unwrap_or(opts.max_total + 2);
            let r = lhs_report(&ext, &a, opts.max_total, max_page)?;
            let violated = !(r.e2_holds() && r.abutment_holds());
            let mut v = io::lhs_report_value(&r);
            v["max_page"] = json!(max_page);
            v["max_total"] = json!(opts.max_total);
            Ok(Done { results: v, violated })
        }
        Cmd::RelationsSuite { size } => {
            if *size == 0 || *size > 4 {
                return Err(Error::Invalid(format!("--size must be between 1 and 4, got {size}")));
            }
            let rel = relation_oracles(*size);
            let adj = adjunction_oracles(*size);
            let violated = !rel.iter().chain(&adj).all(OracleOutcome::holds);
            Ok(Done {
                violated,
                results: json!({"size": size, "relations": oracles(&rel), "adjunction": oracles(&adj)}),
            })
        }
        Cmd::Corpus { output } => {
            let d = opts.trunc_dim.unwrap_or(3);
            ctx.trunc_dim = Some(d);
            let files = corpus::files(d)?;
            std::fs::create_dir_all(output).map_err(|e| Error::Invalid(format!("{}: {e}", output.display())))?;
            let mut written = serde_json::Map::new();
            for (name, text) in files {
                let path = output.join(&name);
                std::fs::write(&path, &text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
                let digest: String = Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
                written.insert(name, json!(digest));
            }
            computed(json!({"directory": output.display().to_string(), "files": written}))
        }
    }
}

fn validate(file: &Path, group: Option<&Path>, opts: &Opts, ctx: &mut Ctx) -> Result<Done, Error> {
    let (text, name) = ctx.read(file)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{name}: line {} column {}: {e}", e.line(), e.column())))?;
    let has = |k: &str| v.get(k).is_some();
    let kind = if has("iota") {
        "extension"
    } else if has("groups") && has("faces") {
        "simplicial_group"
    } else if has("faces") {
        "simplicial_set"
    } else if has("source") && has("levels") {
        "map"
    } else if has("boundaries") {
        "complex"
    } else if has("table") {
        "group"
    } else if has("carrier") {
        "ex_object"
    } else if has("rows") {
        "relation"
    } else if has("invariant_factors") {
        "module"
    } else {
        return Err(Error::Parse(format!("{name}: unrecognised file kind")));
    };
    if kind == "simplicial_set" {
        let x = io::sset_from_json_unchecked(&text, &name)?;
        let x = ctx.truncate(x, opts)?;
        let violations = x.validate();
        return Ok(Done {
            violated: !violations.is_empty(),
            results: json!({"kind": kind, "valid": violations.is_empty(), "cells": x.cell_counts(), "violations": violations}),
        });
    }
    let checked: Result<(), Error> = match kind {
        "extension" => io::extension_from_json(&text, &name).map(drop),
        "simplicial_group" => io::sgroup_from_json(&text, &name).map(|g| {
            ctx.trunc_dim = Some(g.trunc_dim());
        }),
        "map" => io::map_from_json(&text, &name).map(drop),
        "complex" => io::complex_from_json(&text, &name).map(drop),
        "group" => io::group_from_json(&text, &name).map(drop),
        "ex_object" => io::ex_object_from_json(&text, &name).map(drop),
        "relation" => io::relation_from_json(&text, &name).map(drop),
        _ => {
            let g = group.ok_or_else(|| Error::Invalid("validating a module file needs --group".into()))?;
            let g = ctx.group(g)?;
            io::module_from_json(&text, &name, &g).map(drop)
        }
    };
    match checked {
        Ok(()) => computed(json!({"kind": kind, "valid": true, "problem": null})),
        Err(Error::Invalid(m)) => {
            Ok(Done { violated: true, results: json!({"kind": kind, "valid": false, "problem": m}) })
        }
        Err(e) => Err(e),
    }
}

fn pi(file: &Path, n: usize, basepoint: usize, opts: &Opts, ctx: &mut Ctx) -> Result<Done, Error> {
    let (text, name) = ctx.read(file)?;
    let sgroup = if looks_like_sgroup(&text) { Some(io::sgroup_from_json(&text, &name)?) } else { None };
    let x = ctx.truncate(io::sset_from_json(&text, &name)?, opts)?;
    budget(&x, opts)?;
    let x = Arc::new(x);
    if basepoint >= x.cells(0) {
        return Err(Error::Invalid(format!("basepoint {basepoint} is not a vertex")));
    }
    if !is_kan_report(&x)?.holds {
        ctx.warnings.push("input is not Kan: π₀∘Ωⁿ need not be a homotopy invariant".into());
    }
    let pointed = PointedTruncSSet::new(x.clone(), basepoint)?;
    let classes = if n == 0 {
        pi0_pointed(&pointed)?
    } else {
        if n + 1 > x.trunc_dim() {
            return Err(Error::Invalid(format!("π_{n} needs truncation at least {}", n + 1)));
        }
        let small = PointedTruncSSet::new(Arc::new(x.truncate(n + 1)), basepoint)?;
        pi0_pointed(&loop_space_budget(&small, n, opts.cell_budget)?.space)?
    };
    let mut results = json!({"n": n, "basepoint": basepoint, "count": classes.len()});
    let mut violated = false;
    if let Some(g) = sgroup {
        if n >= 1 && n < g.trunc_dim() {
            let moore = pi_n_group(&g, n)?.order();
            results["moore_order"] = json!(moore);
            results["moore_agrees"] = json!(moore == classes.len());
            violated = moore != classes.len();
        }
    }
    Ok(Done { results, violated })
}

fn dold_kan(
    file: Option<&Path>,
    random: Option<usize>,
    output: Option<&Path>,
    opts: &Opts,
    ctx: &mut Ctx,
) -> Result<Done, Error> {
    let complexes: Vec<ChainComplex> = match (file, random) {
        (Some(p), None) => vec![ctx.complex(p)?],
        (None, Some(k)) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
            let shape = RandomComplexShape::default();
            (0..k).map(|_| random_complex(&mut rng, &shape)).collect()
        }
        _ => return Err(Error::Invalid("give either a complex file or --random N".into())),
    };
    let mut rows = Vec::new();
    let mut violated = false;
    for b in &complexes {
        let d = opts.trunc_dim.unwrap_or(b.length() + 1);
        ctx.trunc_dim = Some(d);
        let gamma = dold_kan_gamma(b, d)?;
        let rt = dold_kan_round_trip(b, d)?;
        violated |= !rt.holds();
        let n = dold_kan_n(&gamma);
        rows.push(json!({
            "input_groups": degree_map(b.groups()),
            "gamma_levels": degree_map(gamma.levels()),
            "normalized_groups": degree_map(n.groups()),
            "round_trip": rt,
        }));
        if let (Some(out), Some(_)) = (output, file) {
            if gamma.levels().iter().any(|g| !g.is_finite()) {
                ctx.warnings.push("Γ(B) has infinite levels; no simplicial-group file written".into());
            } else {
                for (lvl, g) in gamma.levels().iter().enumerate() {
                    if g.cardinality().map_or(true, |c| c > opts.cell_budget as u128) {
                        return Err(Error::Budget { what: format!("Γ(B) level {lvl}"), limit: opts.cell_budget });
                    }
                }
                let sg = SimplicialGroup::from_ab(&gamma)?;
                write_checked(out, &io::sgroup_to_json(&sg), |t, n| {
                    io::sgroup_from_json(t, n).map(|y| io::sgroup_to_json(&y))
                })?;
            }
        }
    }
    let results = match random {
        Some(_) => json!({"seed": opts.seed, "complexes": rows}),
        None => rows.pop().expect("one complex"),
    };
    Ok(Done { results, violated })
}

fn write_checked(path: &Path, text: &str, reparse: impl Fn(&str, &str) -> Result<String, Error>) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    let back = io::read_file(path)?;
    let again = reparse(&back, &path.display().to_string())?;
    if again != text {
        return Err(Error::Inconsistent(format!("{} does not round-trip", path.display())));
    }
    Ok(())
}

fn classify(
    group: &Path,
    kind: Kind,
    n: usize,
    output: Option<&Path>,
    opts: &Opts,
    ctx: &mut Ctx,
) -> Result<Done, Error> {
    let g = ctx.group(group)?;
    let (sg, label) = match kind {
        Kind::K => {
            if n == 0 {
                return Err(Error::Invalid("K(G, n) needs n >= 1".into()));
            }
            let d = opts.trunc_dim.unwrap_or(n + 2);
            let a = g.abelian_invariants()?;
            let k = k_space(&a, n, d)?;
            for (lvl, l) in k.levels().iter().enumerate() {
                if l.cardinality().map_or(true, |c| c > opts.cell_budget as u128) {
                    return Err(Error::Budget { what: format!("K(G, {n}) level {lvl}"), limit: opts.cell_budget });
                }
            }
            (SimplicialGroup::from_ab(&k)?, format!("K(G,{n})"))
        }
        Kind::Wbar => {
            let d = opts.trunc_dim.unwrap_or(3);
            let cells = (g.order() as u128).checked_pow(d as u32);
            if cells.map_or(true, |c| c > opts.cell_budget as u128) {
                return Err(Error::Budget { what: format!("W̄G level {d}"), limit: opts.cell_budget });
            }
            let disc = SimplicialGroup::discrete(&g, d);
            if !g.is_abelian() {
                // W̄G is only a simplicial set: emit that and use the loop route
                ctx.warnings.push("G is not abelian: W̄G is written as a simplicial-set file".into());
                let x = Arc::new(w_bar_sset(&disc)?);
                ctx.trunc_dim = Some(d);
                let mut orders = serde_json::Map::new();
                for k in 1..d {
                    let small = PointedTruncSSet::new(Arc::new(x.truncate(k + 1)), 0)?;
                    let h = pi0_pointed(&loop_space_budget(&small, k, opts.cell_budget)?.space)?;
                    orders.insert(k.to_string(), json!(h.len()));
                }
                let text = io::sset_to_json(&x);
                let mut results = json!({"object": "WbarG", "cells": x.cell_counts(), "pi_orders": orders});
                emit(output, &text, &mut results, |t, n| io::sset_from_json(t, n).map(|y| io::sset_to_json(&y)))?;
                return computed(results);
            }
            (w_bar_group(&disc)?, "WbarG".to_string())
        }
    };
    ctx.trunc_dim = Some(sg.trunc_dim());
    let d = sg.trunc_dim();
    let orders: serde_json::Map<String, Value> =
        (1..d).map(|k| pi_n_group(&sg, k).map(|h| (k.to_string(), json!(h.order())))).collect::<Result<_, _>>()?;
    let text = io::sgroup_to_json(&sg);
    let mut results = json!({"object": label, "cells": sg.underlying().cell_counts(), "pi_orders": orders});
    emit(output, &text, &mut results, |t, n| io::sgroup_from_json(t, n).map(|y| io::sgroup_to_json(&y)))?;
    computed(results)
}

/// Writes `text` to `output` and re-reads it, or embeds it in the report.
fn emit(
    output: Option<&Path>,
    text: &str,
    results: &mut Value,
    reparse: impl Fn(&str, &str) -> Result<String, Error>,
) -> Result<(), Error> {
    match output {
        Some(p) => {
            write_checked(p, text, reparse)?;
            results["output"] = json!(p.display().to_string());
        }
        None => results["file"] = serde_json::from_str::<Value>(text).expect("own output"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let Format::Json = cli.opts.format;
    let mut ctx = Ctx::default();
    let outcome = run(&cli.cmd, &cli.opts, &mut ctx);
    let (code, status, results, error) = match outcome {
        Ok(Done { results, violated: false }) => (0, "computed", results, Value::Null),
        Ok(Done { results, violated: true }) => (1, "violated", results, Value::Null),
        Err(e) => {
            let (code, status) = match &e {
                Error::Budget { .. } => (3, "budget_exceeded"),
                Error::Inconsistent(_) | Error::NoFiller(_) => (1, "violated"),
                _ => (2, "input_error"),
            };
            eprintln!("kanforge: {e}");
            (code, status, Value::Null, json!(e.to_string()))
        }
    };
    let report = json!({
        "command": argv,
        "inputs": ctx.inputs,
        "seed": cli.opts.seed,
        "trunc_dim": ctx.trunc_dim,
        "results": results,
        "warnings": ctx.warnings,
        "status": status,
        "exit_code": code,
        "error": error,
    });
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
    ExitCode::from(code)
}
