use rayon::prelude::*;
use serde::Serialize;
use signed_spectra::generators::{random_signed_graph, RandomGraphParams};
use signed_spectra::{
    beta, cluster, frustration, h_exact_with, is_antibalanced, is_balanced, spectrum,
    sweep_quadratic, verify_all, BoundReport, BoundStatus, CertificateMode, CheegerCertificate,
    ClusterOptions, ClusterResult, FrustrationMethod, Operator, SignedGraph, SubBipartition,
    VerifyOptions, VertexMeasure,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::args::{CheegerMode, Command, FrustrationArg, MeasureArg};
use crate::input::read_graph;
use crate::{exit, json, CliError, SCHEMA_VERSION};

/// Rendered JSON plus the exit status it implies.
#[derive(Debug)]
pub struct Report {
    pub json: String,
    pub exit_code: i32,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'static str,
    /// Vertex labels; every vertex index in the report refers to this list.
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<&'a [String]>,
    #[serde(flatten)]
    body: T,
}

fn render<T: Serialize>(command: &'static str, g: Option<&SignedGraph>, body: T) -> String {
    json::to_string(&Envelope {
        schema_version: SCHEMA_VERSION,
        command,
        vertices: g.map(SignedGraph::labels),
        body,
    })
}

fn ok(json: String) -> Result<Report, CliError> {
    Ok(Report {
        json,
        exit_code: exit::SUCCESS,
    })
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Spectrum {
            file,
            operator,
            vectors,
        } => {
            let g = read_graph(file)?;
            cmd_spectrum(&g, (*operator).into(), *vectors)
        }
        Command::Cheeger {
            file,
            k,
            measure,
            mode,
            strategy,
            seed,
            budget,
        } => {
            let g = read_graph(file)?;
            let mu = measure_of(&g, *measure)?;
            let cert = match mode {
                CheegerMode::Exact => h_exact_with(&g, *k, &mu, budget.get())?,
                CheegerMode::Sweep => {
                    sweep_certificate(&g, *k, *measure, &mu, (*strategy).into(), *seed)?
                }
            };
            ok(render(
                "cheeger",
                Some(&g),
                CheegerBody {
                    k: *k,
                    measure: *measure,
                    value: cert.value,
                    witness: &cert.witness,
                    mode: cert.mode,
                },
            ))
        }
        Command::Cluster {
            file,
            k,
            mode,
            strategy,
            epsilon,
            seed,
        } => {
            let g = read_graph(file)?;
            let opts = ClusterOptions {
                mode: (*mode).into(),
                strategy: (*strategy).into(),
                epsilon: *epsilon,
                seed: *seed,
                ..ClusterOptions::default()
            };
            let result = cluster(&g, *k, opts)?;
            ok(render(
                "cluster",
                Some(&g),
                ClusterBody {
                    k: *k,
                    seed: *seed,
                    result: &result,
                },
            ))
        }
        Command::Bounds { file, budget } => {
            let g = read_graph(file)?;
            let reports = verify_all(
                &g,
                VerifyOptions {
                    budget: budget.get(),
                },
            );
            ok(render("bounds", Some(&g), BoundsBody { reports: &reports }))
        }
        Command::Verify {
            file,
            seed,
            count,
            max_vertices,
            budget,
        } => {
            let opts = VerifyOptions {
                budget: budget.get(),
            };
            match file {
                Some(path) => {
                    let g = read_graph(path)?;
                    let reports = verify_all(&g, opts);
                    let summary = Summary::of(std::slice::from_ref(&reports));
                    finish_verify(
                        render(
                            "verify",
                            Some(&g),
                            VerifyBody {
                                source: "file",
                                seed: None,
                                summary: &summary,
                                reports: Some(&reports),
                            },
                        ),
                        &summary,
                    )
                }
                None => {
                    if *max_vertices < 3 {
                        return Err(CliError::Usage("--max-vertices must be at least 3".into()));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    let params = RandomGraphParams::default().with_vertices(3, *max_vertices);
                    let graphs: Vec<SignedGraph> = (0..*count)
                        .map(|_| random_signed_graph(&mut rng, &params))
                        .collect();
                    let all: Vec<Vec<BoundReport>> =
                        graphs.par_iter().map(|g| verify_all(g, opts)).collect();
                    let summary = Summary::of(&all);
                    finish_verify(
                        render(
                            "verify",
                            None,
                            VerifyBody {
                                source: "random",
                                seed: Some(*seed),
                                summary: &summary,
                                reports: None,
                            },
                        ),
                        &summary,
                    )
                }
            }
        }
        Command::Frustration {
            file,
            subset,
            method,
            seed,
        } => {
            let g = read_graph(file)?;
            let s = match subset {
                None => (0..g.vertex_count()).collect(),
                Some(labels) => labels
                    .iter()
                    .map(|l| {
                        g.index_of(l)
                            .ok_or_else(|| CliError::Usage(format!("unknown vertex {l:?}")))
                    })
                    .collect::<Result<Vec<usize>, _>>()?,
            };
            let m = match method {
                FrustrationArg::Exact => FrustrationMethod::exact(),
                FrustrationArg::LocalSearch => FrustrationMethod::local_search(*seed),
            };
            let r = frustration(&g, &s, m)?;
            let deleted: Vec<(&str, &str)> = r
                .deleted_edges
                .iter()
                .map(|&id| {
                    let e = g.edge(id);
                    (g.label(e.u), g.label(e.v))
                })
                .collect();
            ok(render(
                "frustration",
                Some(&g),
                FrustrationBody {
                    subset: s,
                    value: r.value,
                    upper_bound: r.upper_bound,
                    deleted_edges: deleted,
                    switched: r.best_switching.negative_set(),
                },
            ))
        }
    }
}

fn measure_of(g: &SignedGraph, m: MeasureArg) -> Result<VertexMeasure, CliError> {
    Ok(match m {
        MeasureArg::Degree => VertexMeasure::degree(g)?,
        MeasureArg::Unit => VertexMeasure::unit(g.vertex_count()),
    })
}

/// Upper bound on `h_k`: a quadratic sweep of the first eigenfunction for
/// `k = 1`, the clustering pipeline for `k >= 2`.
fn sweep_certificate(
    g: &SignedGraph,
    k: usize,
    measure: MeasureArg,
    mu: &VertexMeasure,
    strategy: signed_spectra::PartitionStrategy,
    seed: u64,
) -> Result<CheegerCertificate, CliError> {
    if k == 1 {
        let op = match measure {
            MeasureArg::Degree => Operator::Normalized,
            MeasureArg::Unit => Operator::Kirchhoff,
        };
        let s = spectrum(g, op)?;
        let r = sweep_quadratic(g, s.eigenfunction(1)?, mu)?;
        return Ok(CheegerCertificate {
            value: r.value,
            witness: vec![r.bipartition],
            mode: CertificateMode::SweepUpperBound,
        });
    }
    let opts = ClusterOptions {
        strategy,
        seed,
        ..ClusterOptions::default()
    };
    let res = cluster(g, k, opts)?;
    if res.parts.len() < k {
        return Err(CliError::Library(signed_spectra::Error::PartitionFailure {
            reason: format!("found {} of {k} parts", res.parts.len()),
            best_min_mass: 0.0,
        }));
    }
    let mut value = 0.0f64;
    for p in &res.parts {
        value = value.max(beta(g, p, mu)?);
    }
    Ok(CheegerCertificate {
        value,
        witness: res.parts,
        mode: CertificateMode::SweepUpperBound,
    })
}

fn cmd_spectrum(g: &SignedGraph, op: Operator, vectors: bool) -> Result<Report, CliError> {
    let s = spectrum(g, op)?;
    ok(render(
        "spectrum",
        Some(g),
        SpectrumBody {
            operator: op,
            eigenvalues: &s.eigenvalues,
            balanced: is_balanced(g).balanced,
            antibalanced: is_antibalanced(g).balanced,
            eigenfunctions: vectors.then_some(&s.eigenfunctions[..]),
        },
    ))
}

fn finish_verify(json: String, summary: &Summary) -> Result<Report, CliError> {
    Ok(Report {
        json,
        exit_code: if summary.violated > 0 {
            exit::VIOLATION
        } else {
            exit::SUCCESS
        },
    })
}

#[derive(Serialize)]
struct SpectrumBody<'a> {
    operator: Operator,
    eigenvalues: &'a [f64],
    balanced: bool,
    antibalanced: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenfunctions: Option<&'a [Vec<f64>]>,
}

#[derive(Serialize)]
struct CheegerBody<'a> {
    k: usize,
    #[serde(serialize_with = "measure_name")]
    measure: MeasureArg,
    value: f64,
    witness: &'a [SubBipartition],
    mode: CertificateMode,
}

fn measure_name<S: serde::Serializer>(m: &MeasureArg, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match m {
        MeasureArg::Degree => "degree",
        MeasureArg::Unit => "unit",
    })
}

#[derive(Serialize)]
struct ClusterBody<'a> {
    k: usize,
    seed: u64,
    #[serde(flatten)]
    result: &'a ClusterResult,
}

#[derive(Serialize)]
struct BoundsBody<'a> {
    reports: &'a [BoundReport],
}

#[derive(Serialize)]
struct FrustrationBody<'a> {
    subset: Vec<usize>,
    value: f64,
    upper_bound: bool,
    deleted_edges: Vec<(&'a str, &'a str)>,
    /// Vertices whose switching makes the negative edges inside the subset
    /// exactly the deleted ones.
    switched: Vec<usize>,
}

#[derive(Serialize)]
struct VerifyBody<'a> {
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    summary: &'a Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    reports: Option<&'a [BoundReport]>,
}

#[derive(Debug, Serialize)]
struct Violation {
    graph: usize,
    report: BoundReport,
}

#[derive(Debug, Serialize)]
struct Summary {
    graphs: usize,
    reports: usize,
    holds: usize,
    violated: usize,
    vacuous: usize,
    skipped: usize,
    /// Smallest slack among evaluated (holding or violated) reports.
    min_slack: f64,
    violations: Vec<Violation>,
}

impl Summary {
    fn of(all: &[Vec<BoundReport>]) -> Summary {
        let mut s = Summary {
            graphs: all.len(),
            reports: 0,
            holds: 0,
            violated: 0,
            vacuous: 0,
            skipped: 0,
            min_slack: f64::INFINITY,
            violations: Vec::new(),
        };
        for (i, reports) in all.iter().enumerate() {
            for r in reports {
                s.reports += 1;
                match r.status {
                    BoundStatus::Holds => s.holds += 1,
                    BoundStatus::Violated => s.violated += 1,
                    BoundStatus::Vacuous => s.vacuous += 1,
                    BoundStatus::Skipped => s.skipped += 1,
                }
                if matches!(r.status, BoundStatus::Holds | BoundStatus::Violated) {
                    s.min_slack = s.min_slack.min(r.slack);
                }
                if r.is_violation() {
                    s.violations.push(Violation {
                        graph: i,
                        report: r.clone(),
                    });
                }
            }
        }
        s
    }
}
