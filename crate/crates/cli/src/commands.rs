use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use ropebound_core::arrowgen::{build_c, build_z, ArrowPolynomial, DEFAULT_CONWAY_CAP, DEFAULT_MILNOR_CAP};
use ropebound_core::bounds::{knot_bounds, link_bounds, verify_geometry, BoundReport, KnotInputs, LinkInputs, Status, VerifyOptions};
use ropebound_core::diagram::{emit_gauss_code, parse_gauss_code};
use ropebound_core::geometry::{
    average_counts, builtin_link, gauss_pair_integral, project, project_generic, AverageCounts, GaussIntegral, Metrics,
    PolyLink, Sampler, Vec3,
};
use ropebound_core::invariants::{conway_c2n_capped, linking_number, milnor_mu_capped, MilnorResidue};
use ropebound_core::pairing::pair_poly;
use ropebound_core::GaussDiagram;

use crate::args::*;
use crate::output::{read_file, write_file, CliError, CliResult, Outcome};

const DEFAULT_SAMPLES: usize = 2000;

impl Caps {
    fn milnor(&self) -> usize {
        self.cap_n.unwrap_or(DEFAULT_MILNOR_CAP)
    }

    fn conway(&self) -> usize {
        match (self.cap_n, self.cap_chords) {
            (Some(n), Some(c)) => n.min(c / 2),
            (Some(n), None) => n,
            (None, Some(c)) => c / 2,
            (None, None) => DEFAULT_CONWAY_CAP,
        }
    }
}

fn load_diagram(path: &std::path::Path) -> CliResult<GaussDiagram> {
    Ok(parse_gauss_code(&read_file(path)?)?)
}

#[derive(Serialize)]
struct Term {
    coefficient: i64,
    key: String,
}

#[derive(Serialize)]
struct Polynomial {
    name: String,
    terms: Vec<Term>,
}

fn describe(name: String, p: &ArrowPolynomial) -> Polynomial {
    Polynomial {
        name,
        terms: p
            .coefficients()
            .into_iter()
            .map(|(key, coefficient)| Term { coefficient, key })
            .collect(),
    }
}

pub fn generate(a: &GenerateArgs) -> CliResult<Outcome> {
    let (name, p) = match (a.conway, a.milnor) {
        (Some(n), _) => (format!("C_{}", 2 * n), build_c(n, a.caps.conway())?),
        (_, Some(n)) => (format!("Z_{{{n};1}}"), build_z(n, a.caps.milnor())?),
        _ => return Err(CliError::Usage("pass --conway N or --milnor N".into())),
    };
    let text = format!("# {name}: {} terms\n{}", p.len(), p.to_dump());
    Ok(Outcome::new(describe(name, &p), text))
}

pub fn pair(a: &PairArgs) -> CliResult<Outcome> {
    let g = load_diagram(&a.gauss)?;
    let (name, p) = match (&a.poly_file, a.conway, a.milnor) {
        (Some(path), _, _) => (path.display().to_string(), ArrowPolynomial::from_dump(&read_file(path)?)?),
        (_, Some(n), _) => (format!("C_{}", 2 * n), build_c(n, a.caps.conway())?),
        (_, _, Some(n)) => (format!("Z_{{{n};1}}"), build_z(n, a.caps.milnor())?),
        _ => return Err(CliError::Usage("pass --poly-file, --conway or --milnor".into())),
    };
    let value = pair_poly(&p, &g)?;
    #[derive(Serialize)]
    struct PairResult {
        polynomial: String,
        terms: usize,
        diagram: String,
        value: i64,
    }
    let text = format!("<{name}, G> = {value}\n");
    Ok(Outcome::new(
        PairResult {
            polynomial: name,
            terms: p.len(),
            diagram: emit_gauss_code(&g),
            value,
        },
        text,
    ))
}

#[derive(Serialize)]
struct MilnorValue {
    indices: Vec<usize>,
    #[serde(flatten)]
    residue: MilnorResidue,
}

#[derive(Serialize)]
struct LinkingNumber {
    i: usize,
    j: usize,
    lk: i64,
}

#[derive(Serialize)]
struct InvariantsResult {
    diagram: String,
    components: usize,
    crossings: usize,
    classical: bool,
    conway: Vec<(String, i64)>,
    linking_numbers: Vec<LinkingNumber>,
    milnor: Vec<MilnorValue>,
}

fn parse_sequence(text: &str, n: usize) -> CliResult<Vec<usize>> {
    let seq: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("--mu expects comma separated integers, got '{text}'")))?;
    if let Some(&bad) = seq.iter().find(|&&i| i == 0 || i > n) {
        return Err(CliError::Data(format!("index {bad} in --mu {text} is outside 1..{n}")));
    }
    Ok(seq.into_iter().map(|i| i - 1).collect())
}

pub fn invariants(a: &InvariantsArgs) -> CliResult<Outcome> {
    let g = load_diagram(&a.gauss)?;
    let n = g.n_components();
    let mut result = InvariantsResult {
        diagram: emit_gauss_code(&g),
        components: n,
        crossings: g.n_arrows(),
        classical: g.is_classical(),
        conway: Vec::new(),
        linking_numbers: Vec::new(),
        milnor: Vec::new(),
    };
    let mut text = format!(
        "diagram: {} ({n} component{}, {} crossing{})\n",
        result.diagram,
        if n == 1 { "" } else { "s" },
        result.crossings,
        if result.crossings == 1 { "" } else { "s" }
    );
    if !result.classical {
        text.push_str("warning: the diagram is not planar (virtual)\n");
    }
    if n == 1 {
        if !a.mu.is_empty() {
            return Err(CliError::Data("--mu needs a link with at least 2 components".into()));
        }
        let mut wanted: BTreeSet<usize> = a.c2n.iter().copied().collect();
        wanted.extend(1..=a.conway.unwrap_or(0));
        if wanted.is_empty() {
            wanted.insert(1);
        }
        for k in wanted {
            if k == 0 {
                return Err(CliError::Usage("--c2n starts at 1".into()));
            }
            let c = conway_c2n_capped(&g, k, a.caps.conway())?;
            writeln!(text, "c{} = {c}", 2 * k).unwrap();
            result.conway.push((format!("c{}", 2 * k), c));
        }
    } else {
        if !a.c2n.is_empty() || a.conway.is_some() {
            return Err(CliError::Data(format!("Conway coefficients need a knot, diagram has {n} components")));
        }
        for i in 0..n {
            for j in i + 1..n {
                let lk = linking_number(&g, i, j)?;
                writeln!(text, "lk({}, {}) = {lk}", i + 1, j + 1).unwrap();
                result.linking_numbers.push(LinkingNumber { i: i + 1, j: j + 1, lk });
            }
        }
        let mut sequences = a
            .mu
            .iter()
            .map(|s| parse_sequence(s, n))
            .collect::<CliResult<Vec<_>>>()?;
        if sequences.is_empty() && n >= 3 && n <= a.caps.milnor() {
            sequences.push((0..n).collect());
        }
        for seq in sequences {
            let r = milnor_mu_capped(&g, &seq, a.caps.milnor())?;
            let indices: Vec<usize> = seq.iter().map(|i| i + 1).collect();
            let (head, j) = indices.split_at(indices.len() - 1);
            let head: Vec<String> = head.iter().map(|i| i.to_string()).collect();
            writeln!(
                text,
                "mu({}; {}) = {} mod {} (reduced {}, bracket {})",
                head.join(","),
                j[0],
                r.raw,
                r.modulus,
                r.reduced,
                r.bracket
            )
            .unwrap();
            result.milnor.push(MilnorValue { indices, residue: r });
        }
    }
    Ok(Outcome::new(result, text))
}

fn load_link(s: &LinkSource) -> CliResult<PolyLink> {
    match (&s.polylink, &s.builtin) {
        (Some(path), _) => Ok(PolyLink::from_json(&read_file(path)?)?),
        (_, Some(spec)) => {
            let (name, params) = match spec.split_once(':') {
                Some((name, rest)) => {
                    let params = rest
                        .split(',')
                        .map(|t| t.trim().parse::<f64>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| CliError::Usage(format!("bad parameters in --builtin {spec}")))?;
                    (name, params)
                }
                None => (spec.as_str(), Vec::new()),
            };
            Ok(builtin_link(name, &params, s.vertices)?)
        }
        _ => Err(CliError::Usage("pass --polylink PATH or --builtin NAME".into())),
    }
}

fn sampler(s: &Sampling, seed: u64) -> Sampler {
    match s.grid {
        Some(points) => Sampler::Grid { points },
        None => Sampler::MonteCarlo {
            samples: s.samples.unwrap_or(DEFAULT_SAMPLES),
            seed,
        },
    }
}

#[derive(Serialize)]
struct PairIntegral {
    i: usize,
    j: usize,
    #[serde(flatten)]
    integral: GaussIntegral,
}

#[derive(Serialize)]
struct GeometryResult {
    name: Option<String>,
    vertices: Vec<usize>,
    metrics: Metrics,
    direction: [f64; 3],
    diagram: String,
    classical: bool,
    crossings: usize,
    overcrossings: Vec<Vec<usize>>,
    integrals: Vec<PairIntegral>,
    averages: AverageCounts,
}

pub fn geometry(a: &GeometryArgs, seed: u64) -> CliResult<Outcome> {
    let p = load_link(&a.source)?;
    if let Some(path) = &a.save_polylink {
        write_file(path, &p.to_json())?;
    }
    let m = p.metrics();
    let proj = match &a.direction {
        Some(v) => project(&p, Vec3::new(v[0], v[1], v[2]))?,
        None => project_generic(&p)?,
    };
    let n = p.n_components();
    let mut integrals = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            integrals.push(PairIntegral {
                i: i + 1,
                j: j + 1,
                integral: gauss_pair_integral(&p, i, j, a.sampling.resolution)?,
            });
        }
    }
    let averages = average_counts(&p, sampler(&a.sampling, seed))?;
    let r = GeometryResult {
        name: p.name().map(str::to_string),
        vertices: p.components().iter().map(Vec::len).collect(),
        direction: proj.direction.into(),
        diagram: emit_gauss_code(&proj.diagram),
        classical: proj.diagram.is_classical(),
        crossings: proj.diagram.n_arrows(),
        overcrossings: proj.pair_counts.ov.clone(),
        metrics: m,
        integrals,
        averages,
    };
    let mut t = String::new();
    writeln!(t, "link: {} ({} components, vertices {:?})", r.name.as_deref().unwrap_or("unnamed"), n, r.vertices).unwrap();
    let lengths: Vec<String> = r.metrics.lengths.iter().map(|l| format!("{l:.6}")).collect();
    writeln!(t, "lengths: {}", lengths.join(", ")).unwrap();
    writeln!(t, "total length: {:.6}", r.metrics.total_length).unwrap();
    writeln!(t, "thickness: {:.6}", r.metrics.thickness).unwrap();
    writeln!(t, "ropelength: {:.6}", r.metrics.ropelength).unwrap();
    writeln!(t, "embedding thickness: {:.6}", r.metrics.embedding_thickness).unwrap();
    writeln!(t, "projection along {:?}: {} crossings", r.direction, r.crossings).unwrap();
    writeln!(t, "diagram: {}", r.diagram).unwrap();
    for x in &r.integrals {
        writeln!(t, "pair {},{}: lk_real = {:.6}, aov = {:.6}", x.i, x.j, x.integral.lk_real, x.integral.aov).unwrap();
    }
    writeln!(
        t,
        "average crossings over {} directions: {:.6} ± {:.6}",
        r.averages.sampler.size(),
        r.averages.acr_total,
        r.averages.acr_total_se
    )
    .unwrap();
    for i in 0..n {
        for j in i + 1..n {
            writeln!(
                t,
                "pair {},{}: aov = {:.6} ± {:.6}, acr = {:.6} ± {:.6}",
                i + 1,
                j + 1,
                r.averages.aov[i][j],
                r.averages.aov_se[i][j],
                r.averages.acr[i][j],
                r.averages.acr_se[i][j]
            )
            .unwrap();
        }
    }
    Ok(Outcome::new(r, t))
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum BoundsInput {
    Knot(KnotInputs),
    Link(LinkInputs),
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"))
}

pub fn render_report(r: &BoundReport) -> String {
    let mut t = String::new();
    writeln!(t, "{:<34} {:<14} {:>14} {:>14} {:>12}  notes", "id", "status", "lhs", "rhs", "margin").unwrap();
    for e in &r.entries {
        let status = serde_json::to_value(e.status).unwrap();
        let row = format!(
            "{:<34} {:<14} {:>14} {:>14} {:>12}  {}",
            e.id,
            status.as_str().unwrap_or("?"),
            fmt_opt(e.lhs),
            fmt_opt(e.rhs),
            e.margin.map_or_else(|| "-".to_string(), |m| format!("{m}")),
            e.notes.join("; ")
        );
        writeln!(t, "{}", row.trim_end()).unwrap();
    }
    for note in &r.notes {
        writeln!(t, "note: {note}").unwrap();
    }
    writeln!(
        t,
        "summary: {} pass, {} fail, {} rhs-only, {} not applicable",
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::RhsOnly),
        r.count(Status::NotApplicable)
    )
    .unwrap();
    t
}

pub fn bounds(a: &BoundsArgs) -> CliResult<Outcome> {
    let text = read_file(&a.input)?;
    let input: BoundsInput = serde_json::from_str(&text)
        .map_err(|e| CliError::Data(format!("{}: {e}", a.input.display())))?;
    let report = match input {
        BoundsInput::Knot(k) => knot_bounds(&k)?,
        BoundsInput::Link(l) => link_bounds(&l)?,
    };
    let text = render_report(&report);
    Ok(Outcome::new(report, text))
}

pub fn verify(a: &VerifyArgs, seed: u64) -> CliResult<Outcome> {
    let p = load_link(&a.source)?;
    let opts = VerifyOptions {
        sampler: sampler(&a.sampling, seed),
        resolution: a.sampling.resolution,
        slack: a.slack,
        conway_max_n: a.c2n,
        conway_cap: a.caps.conway(),
        milnor_cap: a.caps.milnor(),
    };
    let report = verify_geometry(&p, &opts)?;
    let text = render_report(&report);
    Ok(Outcome::new(report, text))
}
