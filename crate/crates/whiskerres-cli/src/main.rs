//! Command-line surface over the whiskerres library: constructions, cover
//! enumeration, resolutions, verification, invariant reports and batch
//! corpus checks. All artifacts are versioned JSON; exit code 0 means every
//! requested check passed, 1 means some check failed, 2 means usage or I/O
//! trouble.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use whiskerres::corpus::{generate_corpus, CorpusSpec, Instance};
use whiskerres::hochster::{hochster_betti, local_cohomology_all, PoleSeries};
use whiskerres::invariants::{
    betti_formula_vwc, betti_formula_whisker, check_instance, cover_generators,
    local_cohomology_formula_vwc, local_cohomology_formula_whisker, CheckOptions,
    VwcConvention,
};
use whiskerres::linalg::Field;
use whiskerres::resolution::{
    betti_from_complex, build_vwc_resolution, build_whisker_resolution, sr_complex_of_ideal,
    verify_complex, StrandDomain,
};
use whiskerres::schema::{
    to_pretty_json, BettiJson, BipartiteJson, ConstructRequest, CoversJson, GraphJson,
    IdealJson, InstanceJson, PartitionJson, ResolutionJson, SeriesJson,
};
use whiskerres::simplicial::SimplicialComplex;
use whiskerres::vertex_decomposable::{verify_certificate, vertex_decomposable};
use whiskerres::SCHEMA_TAG;

#[derive(Parser)]
#[command(name = "whiskerres", version, about = "Cover ideals of whiskered graphs: constructions, explicit minimal free resolutions, and exact homological cross-checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    F2,
    F3,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Q => Field::Q,
            FieldArg::F2 => Field::F2,
            FieldArg::F3 => Field::F3,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrandArg {
    Full,
    Lcm,
}

impl From<StrandArg> for StrandDomain {
    fn from(s: StrandArg) -> StrandDomain {
        match s {
            StrandArg::Full => StrandDomain::Full,
            StrandArg::Lcm => StrandDomain::LcmLattice,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Degree,
    Literal,
}

impl From<ConventionArg> for VwcConvention {
    fn from(c: ConventionArg) -> VwcConvention {
        match c {
            ConventionArg::Degree => VwcConvention::Degree,
            ConventionArg::Literal => VwcConvention::Literal,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ConstructKind {
    CliqueWhisker,
    Multi,
    Corona,
    CameronWalker,
    VwcExpand,
    ChordalDecompose,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a family instance from graph/partition JSON inputs.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        /// Graph JSON (base graph, corona base, chordal graph, or vwc base).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Partition JSON (clique-whisker and multi).
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Bipartite JSON with x_part/y_part/edges (cameron-walker).
        #[arg(long)]
        bipartite: Option<PathBuf>,
        /// Comma-separated multiplicities, e.g. --mult 2,1,3.
        #[arg(long, value_delimiter = ',')]
        mult: Vec<usize>,
        /// Instance JSON output (canonical labels).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the constructed graph with its family labels.
        #[arg(long)]
        emit_graph: Option<PathBuf>,
    },
    /// Minimal vertex covers of a graph.
    Covers {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the explicit resolution of the cover ideal of an instance.
    Resolution {
        /// cw | multi | vwc; must match the instance file.
        #[arg(long)]
        construction: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the cover-ideal generators in the ambient order.
        #[arg(long)]
        ideal_out: Option<PathBuf>,
    },
    /// Run the six-check certification of a resolution against an ideal.
    Verify {
        resolution: PathBuf,
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "full")]
        strands: StrandArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Betti tables of an instance: closed formula, resolution, oracle.
    Betti {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "degree")]
        convention: ConventionArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Full invariant report for one instance.
    Invariants {
        /// cw | multi | vwc; must match the instance file.
        #[arg(long)]
        family: Option<String>,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
        /// Skip the GF(2)/GF(3) characteristic scan.
        #[arg(long)]
        no_char_scan: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Local cohomology Hilbert series: closed formula vs oracle.
    Hilbert {
        input: PathBuf,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "degree")]
        convention: ConventionArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex decomposability with a shedding certificate.
    VertexDecomposable {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a seeded instance corpus.
    Corpus {
        /// Corpus spec JSON; defaults apply when omitted.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Seed override.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every formula cross-check over a corpus.
    CheckAll {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_enum, default_value = "q")]
        field: FieldArg,
        #[arg(long)]
        no_char_scan: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_artifact<T: Serialize>(value: &T, out: &Option<PathBuf>) -> Result<()> {
    let text = to_pretty_json(value);
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn load_instance(path: &Path) -> Result<Instance> {
    let json: InstanceJson = read_json(path)?;
    Ok(json.to_instance()?)
}

fn family_guard(expected: &Option<String>, instance: &Instance) -> Result<()> {
    if let Some(f) = expected {
        if f != instance.family() {
            bail!("instance family is `{}`, not `{f}`", instance.family());
        }
    }
    Ok(())
}

/// Betti comparison artifact for the `betti` subcommand.
#[derive(Serialize)]
struct BettiBundle {
    schema: String,
    formula: BettiJson,
    resolution: BettiJson,
    oracle: BettiJson,
    agree: bool,
}

#[derive(Serialize)]
struct HilbertBundle {
    schema: String,
    j: usize,
    formula: SeriesJson,
    oracle: SeriesJson,
    agree: bool,
}

#[derive(Serialize)]
struct VdBundle {
    schema: String,
    decomposable: bool,
    shedding_order: Vec<String>,
    certificate_verified: bool,
    stuck: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
struct CheckAllInstance {
    name: String,
    family: String,
    pass: bool,
    failed_checks: Vec<String>,
    convention: Option<whiskerres::invariants::ConventionReport>,
}

#[derive(Serialize)]
struct CheckAllBundle {
    schema: String,
    instances: Vec<CheckAllInstance>,
    all_pass: bool,
    /// "degree", "literal", "both" or "none", aggregated over vwc members.
    vwc_convention: String,
}

fn build_resolution_for(instance: &Instance) -> Result<whiskerres::resolution::FreeComplex> {
    match instance {
        Instance::Cw { wg, .. } | Instance::Multi { wg, .. } => {
            Ok(build_whisker_resolution(wg)?)
        }
        Instance::Vwc { vwc, .. } => Ok(build_vwc_resolution(vwc)?),
    }
}

fn instance_gens(instance: &Instance, variables: &[String]) -> Vec<Vec<u32>> {
    match instance {
        Instance::Cw { wg, .. } | Instance::Multi { wg, .. } => {
            cover_generators(&wg.graph, variables)
        }
        Instance::Vwc { vwc, .. } => cover_generators(&vwc.expanded, variables),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Construct { kind, graph, partition, bipartite, mult, out, emit_graph } => {
            let need_graph = || -> Result<GraphJson> {
                read_json(graph.as_deref().ok_or_else(|| anyhow!("--graph required"))?)
            };
            if kind == ConstructKind::VwcExpand {
                let g = need_graph()?;
                let vwc = whiskerres::schema::vwc_from_json(&g, &mult)?;
                if let Some(path) = &emit_graph {
                    write_artifact(
                        &GraphJson::from_graph(&vwc.expanded),
                        &Some(path.clone()),
                    )?;
                }
                let inst = Instance::Vwc { name: "vwc-instance".into(), vwc };
                write_artifact(&InstanceJson::from_instance(&inst), &out)?;
                return Ok(ExitCode::SUCCESS);
            }
            let partition_json: Option<PartitionJson> = match &partition {
                Some(p) => Some(read_json(p)?),
                None => None,
            };
            let bipartite_json: Option<BipartiteJson> = match &bipartite {
                Some(p) => Some(read_json(p)?),
                None => None,
            };
            let graph_json =
                if kind == ConstructKind::CameronWalker { None } else { Some(need_graph()?) };
            let request = match kind {
                ConstructKind::CliqueWhisker => ConstructRequest::CliqueWhisker {
                    graph: graph_json.as_ref().unwrap(),
                    partition: partition_json
                        .as_ref()
                        .ok_or_else(|| anyhow!("--partition required"))?,
                },
                ConstructKind::Multi => ConstructRequest::Multi {
                    graph: graph_json.as_ref().unwrap(),
                    partition: partition_json
                        .as_ref()
                        .ok_or_else(|| anyhow!("--partition required"))?,
                    mult: &mult,
                },
                ConstructKind::Corona => ConstructRequest::Corona {
                    graph: graph_json.as_ref().unwrap(),
                    mult: &mult,
                },
                ConstructKind::CameronWalker => ConstructRequest::CameronWalker {
                    bipartite: bipartite_json
                        .as_ref()
                        .ok_or_else(|| anyhow!("--bipartite required"))?,
                },
                ConstructKind::ChordalDecompose => ConstructRequest::ChordalDecompose {
                    graph: graph_json.as_ref().unwrap(),
                },
                ConstructKind::VwcExpand => unreachable!(),
            };
            let wg = request.build()?;
            if let Some(path) = &emit_graph {
                write_artifact(&GraphJson::from_graph(&wg.graph), &Some(path.clone()))?;
            }
            let name = format!("{kind:?}").to_lowercase();
            let inst = if kind == ConstructKind::Multi {
                Instance::Multi { name, wg }
            } else {
                Instance::Cw { name, wg }
            };
            write_artifact(&InstanceJson::from_instance(&inst), &out)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Covers { graph, out } => {
            let g = read_json::<GraphJson>(&graph)?.to_graph()?;
            g.check_cap(whiskerres::graph::DEFAULT_ENUMERATION_CAP)?;
            let covers = g.minimal_vertex_covers();
            let artifact = CoversJson {
                schema: SCHEMA_TAG.into(),
                covers: covers.label_sets(&g),
            };
            write_artifact(&artifact, &out)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Resolution { construction, input, out, ideal_out } => {
            let instance = load_instance(&input)?;
            family_guard(&Some(construction), &instance)?;
            let complex = build_resolution_for(&instance)?;
            if let Some(path) = &ideal_out {
                let gens = instance_gens(&instance, &complex.variables);
                let artifact = IdealJson {
                    schema: SCHEMA_TAG.into(),
                    variables: complex.variables.clone(),
                    generators: gens,
                };
                write_artifact(&artifact, &Some(path.clone()))?;
            }
            write_artifact(&ResolutionJson::from_complex(&complex), &out)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Verify { resolution, ideal, field, strands, out } => {
            let complex = read_json::<ResolutionJson>(&resolution)?.to_complex()?;
            let ideal: IdealJson = read_json(&ideal)?;
            if ideal.variables != complex.variables {
                bail!("ideal and resolution variable orders differ");
            }
            let report = verify_complex(
                &complex,
                &ideal.generators,
                field.into(),
                strands.into(),
                None,
            )?;
            print!("{report}");
            if out.is_some() {
                write_artifact(&report, &out)?;
            }
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }

        Cmd::Betti { input, field, convention, out } => {
            let instance = load_instance(&input)?;
            let field: Field = field.into();
            let complex = build_resolution_for(&instance)?;
            let resolution_table = betti_from_complex(&complex, "J (resolution)")?;
            let formula_table = match &instance {
                Instance::Cw { wg, .. } | Instance::Multi { wg, .. } => {
                    betti_formula_whisker(wg)
                }
                Instance::Vwc { vwc, .. } => betti_formula_vwc(vwc, convention.into()),
            };
            let gens = instance_gens(&instance, &complex.variables);
            let delta = sr_complex_of_ideal(&complex.variables, &gens)?;
            let oracle = hochster_betti(&delta, field)
                .map_err(|e| anyhow!(e.to_string()))?
                .to_ideal("J (oracle)");
            let agree = resolution_table.same_entries(&formula_table)
                && resolution_table.same_entries(&oracle);
            let bundle = BettiBundle {
                schema: SCHEMA_TAG.into(),
                formula: BettiJson::from_table(&formula_table),
                resolution: BettiJson::from_table(&resolution_table),
                oracle: BettiJson::from_table(&oracle),
                agree,
            };
            write_artifact(&bundle, &out)?;
            Ok(if agree { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }

        Cmd::Invariants { family, input, field, no_char_scan, out } => {
            let instance = load_instance(&input)?;
            family_guard(&family, &instance)?;
            let opts = CheckOptions {
                field: field.into(),
                characteristic_scan: !no_char_scan,
                strand_domain: StrandDomain::Full,
            };
            let report = check_instance(&instance, &opts);
            print!("{report}");
            if out.is_some() {
                write_artifact(&report, &out)?;
            }
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }

        Cmd::Hilbert { input, family, j, field, convention, out } => {
            let instance = load_instance(&input)?;
            family_guard(&family, &instance)?;
            let field: Field = field.into();
            let (formula, delta) = match &instance {
                Instance::Cw { wg, .. } | Instance::Multi { wg, .. } => (
                    local_cohomology_formula_whisker(wg, j),
                    SimplicialComplex::independence_complex(&wg.graph),
                ),
                Instance::Vwc { vwc, .. } => (
                    local_cohomology_formula_vwc(vwc, j, convention.into()),
                    SimplicialComplex::independence_complex(&vwc.expanded),
                ),
            };
            let oracle = local_cohomology_all(&delta, field)
                .into_iter()
                .nth(j)
                .unwrap_or_else(PoleSeries::zero);
            let agree = formula == oracle;
            println!("H^{j}: formula {formula}  oracle {oracle}");
            let bundle = HilbertBundle {
                schema: SCHEMA_TAG.into(),
                j,
                formula: SeriesJson::from_series(&formula),
                oracle: SeriesJson::from_series(&oracle),
                agree,
            };
            if out.is_some() {
                write_artifact(&bundle, &out)?;
            }
            Ok(if agree { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }

        Cmd::VertexDecomposable { graph, input, out } => {
            let delta = match (&graph, &input) {
                (Some(g), None) => {
                    let g = read_json::<GraphJson>(g)?.to_graph()?;
                    SimplicialComplex::independence_complex(&g)
                }
                (None, Some(path)) => match load_instance(path)? {
                    Instance::Cw { wg, .. } | Instance::Multi { wg, .. } => {
                        SimplicialComplex::independence_complex(&wg.graph)
                    }
                    Instance::Vwc { vwc, .. } => {
                        SimplicialComplex::independence_complex(&vwc.expanded)
                    }
                },
                _ => bail!("exactly one of --graph or --in is required"),
            };
            let res = vertex_decomposable(&delta);
            let verified = res
                .certificate
                .as_ref()
                .map(|t| verify_certificate(&delta, t))
                .unwrap_or(false);
            let bundle = VdBundle {
                schema: SCHEMA_TAG.into(),
                decomposable: res.decomposable,
                shedding_order: res.shedding_order(),
                certificate_verified: verified,
                stuck: res.stuck,
            };
            write_artifact(&bundle, &out)?;
            Ok(if res.decomposable && verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }

        Cmd::Corpus { spec, seed, out } => {
            let mut spec: CorpusSpec = match spec {
                Some(path) => read_json(&path)?,
                None => CorpusSpec::default(),
            };
            if let Some(s) = seed {
                spec.seed = s;
            }
            let instances = generate_corpus(&spec)?;
            #[derive(Serialize)]
            struct CorpusOut {
                schema: String,
                spec: CorpusSpec,
                instances: Vec<InstanceJson>,
            }
            let artifact = CorpusOut {
                schema: SCHEMA_TAG.into(),
                spec,
                instances: instances.iter().map(InstanceJson::from_instance).collect(),
            };
            write_artifact(&artifact, &Some(out))?;
            eprintln!("generated {} instances", instances.len());
            Ok(ExitCode::SUCCESS)
        }

        Cmd::CheckAll { corpus, field, no_char_scan, out } => {
            let text = std::fs::read_to_string(&corpus)
                .with_context(|| format!("reading {}", corpus.display()))?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let instances: Vec<Instance> = if value.get("instances").is_some() {
                let files: Vec<InstanceJson> =
                    serde_json::from_value(value["instances"].clone())?;
                files
                    .iter()
                    .map(|f| f.to_instance().map_err(|e| anyhow!(e.to_string())))
                    .collect::<Result<_>>()?
            } else {
                let spec: CorpusSpec = serde_json::from_value(value)?;
                generate_corpus(&spec)?
            };
            let opts = CheckOptions {
                field: field.into(),
                characteristic_scan: !no_char_scan,
                strand_domain: StrandDomain::Full,
            };
            use rayon::prelude::*;
            let reports: Vec<_> =
                instances.par_iter().map(|i| check_instance(i, &opts)).collect();
            let mut rows = Vec::new();
            for r in &reports {
                let failures: Vec<String> =
                    r.failures().iter().map(|c| c.name.clone()).collect();
                println!(
                    "[{}] {} ({})",
                    if failures.is_empty() { "pass" } else { "FAIL" },
                    r.name,
                    r.family
                );
                for f in r.failures() {
                    println!("       {}: {}", f.name, f.detail);
                }
                rows.push(CheckAllInstance {
                    name: r.name.clone(),
                    family: r.family.clone(),
                    pass: failures.is_empty(),
                    failed_checks: failures,
                    convention: r.convention.clone(),
                });
            }
            let vwc: Vec<_> = reports.iter().filter_map(|r| r.convention.as_ref()).collect();
            let degree_all = !vwc.is_empty() && vwc.iter().all(|c| c.degree_matches);
            let literal_all = !vwc.is_empty() && vwc.iter().all(|c| c.literal_matches);
            let vwc_convention = match (degree_all, literal_all) {
                (true, true) => "both",
                (true, false) => "degree",
                (false, true) => "literal",
                (false, false) => "none",
            };
            let all_pass = rows.iter().all(|r| r.pass);
            println!(
                "checked {} instances: {}; vwc convention: {}",
                rows.len(),
                if all_pass { "all pass" } else { "FAILURES" },
                vwc_convention
            );
            let bundle = CheckAllBundle {
                schema: SCHEMA_TAG.into(),
                instances: rows,
                all_pass,
                vwc_convention: vwc_convention.into(),
            };
            if out.is_some() {
                write_artifact(&bundle, &out)?;
            }
            Ok(if all_pass && vwc_convention != "none" {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
