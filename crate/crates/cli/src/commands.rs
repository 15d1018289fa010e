//! One function per subcommand. Each returns a document; `main` handles I/O.

use std::collections::BTreeMap;

use coverideal::decomposition::{decompose, supports, Engine, IrreducibleComponent, PrimeSupport};
use coverideal::graph::{build_ht, build_odd_cycle, Graph, DEFAULT_VERTEX_CAP};
use coverideal::monomial::{cover_ideal, Ambient, DegreeVector, MonomialIdeal};
use coverideal::theorem::{
    classify_ass_closed_form_on, closed_form_on, ht_parameter, stabilization_scan, verify_decomposition, Budget,
    ClosedForm, DecompositionReport,
};
use coverideal::Error;

use crate::document::{
    support_names, ClusterCount, ComponentsPayload, DecompositionPayload, FamilyCounts, GraphDocument, IdealPayload,
    Parameters, Payload, PrimesPayload, ReportDocument, StabilizationPayload,
};
use crate::export::export_ideal;
use crate::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Settings {
    pub max_vertices: usize,
    pub budget: Budget,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { max_vertices: DEFAULT_VERTEX_CAP, budget: Budget::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Ht,
    OddCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Brute,
    ClosedForm,
    Verify,
}

impl Mode {
    fn label(self) -> &'static str {
        match self {
            Mode::Brute => "brute",
            Mode::ClosedForm => "closed-form",
            Mode::Verify => "verify",
        }
    }
}

/// Parses `t:n` pairs such as `1:6,2:6,3:4` into per-`t` brute-force limits.
pub fn parse_budget(spec: &str) -> CliResult<BTreeMap<usize, usize>> {
    let mut out = BTreeMap::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (t, n) = item
            .split_once(':')
            .ok_or_else(|| CliError::Parse(format!("budget entry {item:?} is not of the form t:n")))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| CliError::Parse(format!("bad budget entry {item:?}")));
        out.insert(parse(t)?, parse(n)?);
    }
    Ok(out)
}

pub fn generate(family: Family, parameter: usize, settings: &Settings) -> CliResult<GraphDocument> {
    let (name, g) = match family {
        Family::Ht => (format!("H_{parameter}"), build_ht(parameter)?),
        Family::OddCycle => (format!("C_{parameter}"), build_odd_cycle(parameter)?),
    };
    if g.vertex_count() > settings.max_vertices {
        return Err(CliError::Capacity(format!(
            "{name} has {} vertices, limit is {}",
            g.vertex_count(),
            settings.max_vertices
        )));
    }
    Ok(GraphDocument::from_graph(name, &g))
}

fn variables(g: &Graph) -> Vec<String> {
    g.vertices().iter().map(|v| v.name.clone()).collect()
}

fn rows<'a>(vs: impl IntoIterator<Item = &'a DegreeVector>) -> Vec<Vec<u16>> {
    vs.into_iter().map(|v| v.as_slice().to_vec()).collect()
}

fn component_rows(cs: &[IrreducibleComponent]) -> Vec<Vec<u16>> {
    rows(cs.iter().map(|c| c.exponents()))
}

fn prime_rows(g: &Graph, primes: &[PrimeSupport]) -> Vec<Vec<String>> {
    primes.iter().map(|p| support_names(g, p.0)).collect()
}

fn ideal_payload(g: &Graph, ideal: &MonomialIdeal) -> Payload {
    Payload::Ideal(IdealPayload { variables: variables(g), generators: rows(ideal.generators()) })
}

fn params(doc: &GraphDocument) -> Parameters {
    Parameters { graph: Some(doc.name.clone()), ..Parameters::default() }
}

fn check_n(n: usize) -> CliResult<()> {
    if n == 0 {
        return Err(CliError::Contract("--n must be at least 1".into()));
    }
    Ok(())
}

fn bounded_power(g: &Graph, n: usize, budget: &Budget) -> CliResult<MonomialIdeal> {
    check_n(n)?;
    let j = cover_ideal(g)?;
    let mut p = j.clone();
    for _ in 1..n {
        p = p.multiply(&j)?;
        if p.len() > budget.max_generators {
            return Err(Error::Capacity { what: "power generators", actual: p.len(), limit: budget.max_generators }.into());
        }
    }
    Ok(p)
}

fn require_ht(g: &Graph, mode: Mode) -> CliResult<usize> {
    ht_parameter(g).ok_or_else(|| {
        CliError::Contract(format!("mode {} needs an H_t graph as produced by `generate ht`", mode.label()))
    })
}

pub fn cover_ideal_cmd(doc: &GraphDocument, settings: &Settings) -> CliResult<ReportDocument> {
    let g = doc.to_graph(settings.max_vertices)?;
    Ok(ReportDocument::new("cover-ideal", params(doc), ideal_payload(&g, &cover_ideal(&g)?)))
}

pub fn power(doc: &GraphDocument, n: usize, settings: &Settings) -> CliResult<ReportDocument> {
    let g = doc.to_graph(settings.max_vertices)?;
    let p = bounded_power(&g, n, &settings.budget)?;
    Ok(ReportDocument::new("power", Parameters { n: Some(n), ..params(doc) }, ideal_payload(&g, &p)))
}

fn family_counts(cf: &ClosedForm) -> FamilyCounts {
    FamilyCounts {
        a: cf.a.len(),
        b: cf.b.len(),
        d: cf.d.iter().map(|(r, d)| ClusterCount { r: *r, count: d.len() }).collect(),
    }
}

fn decomposition_payload(g: &Graph, r: &DecompositionReport) -> Payload {
    Payload::Decomposition(DecompositionPayload {
        variables: variables(g),
        t: r.t,
        n: r.n,
        families: FamilyCounts {
            a: r.count_a,
            b: r.count_b,
            d: r.count_d.iter().map(|&(r, count)| ClusterCount { r, count }).collect(),
        },
        components: component_rows(&r.components),
        irredundant: r.irredundant,
        redundant: component_rows(&r.redundant),
        brute_checked: r.brute_checked,
        equal: r.equal,
        components_match: r.components_match,
        power_generators: r.power_generators,
        only_in_closed_form: rows(&r.only_in_closed_form),
        only_in_power: rows(&r.only_in_power),
    })
}

pub fn decompose_cmd(doc: &GraphDocument, n: usize, mode: Mode, settings: &Settings) -> CliResult<ReportDocument> {
    check_n(n)?;
    let g = doc.to_graph(settings.max_vertices)?;
    let parameters = Parameters { n: Some(n), mode: Some(mode.label().into()), ..params(doc) };
    let payload = match mode {
        Mode::Brute => {
            let p = bounded_power(&g, n, &settings.budget)?;
            let comps = decompose(&p, settings.budget.engine)?;
            Payload::Components(ComponentsPayload { variables: variables(&g), components: component_rows(&comps), families: None })
        }
        Mode::ClosedForm => {
            require_ht(&g, mode)?;
            let cf = closed_form_on(&g, n)?;
            Payload::Components(ComponentsPayload {
                variables: variables(&g),
                components: component_rows(&cf.components()),
                families: Some(family_counts(&cf)),
            })
        }
        Mode::Verify => {
            let t = require_ht(&g, mode)?;
            decomposition_payload(&g, &verify_decomposition(t, n, &settings.budget)?)
        }
    };
    Ok(ReportDocument::new("decompose", parameters, payload))
}

pub fn verify_theorem(t: usize, n: usize, settings: &Settings) -> CliResult<ReportDocument> {
    check_n(n)?;
    let g = build_ht(t)?;
    let report = verify_decomposition(t, n, &settings.budget)?;
    let parameters = Parameters { t: Some(t), n: Some(n), ..Parameters::default() };
    Ok(ReportDocument::new("verify-theorem", parameters, decomposition_payload(&g, &report)))
}

pub fn ass(doc: &GraphDocument, n: usize, mode: Mode, settings: &Settings) -> CliResult<ReportDocument> {
    check_n(n)?;
    let g = doc.to_graph(settings.max_vertices)?;
    let primes = match mode {
        Mode::Brute => {
            let p = bounded_power(&g, n, &settings.budget)?;
            supports(&decompose(&p, settings.budget.engine)?)
        }
        Mode::ClosedForm => {
            require_ht(&g, mode)?;
            classify_ass_closed_form_on(&g, n)?
        }
        Mode::Verify => return Err(CliError::Contract("ass supports --mode brute or closed-form".into())),
    };
    let parameters = Parameters { n: Some(n), mode: Some(mode.label().into()), ..params(doc) };
    Ok(ReportDocument::new("ass", parameters, Payload::Primes(PrimesPayload { variables: variables(&g), primes: prime_rows(&g, &primes) })))
}

/// Runs a scan; a scan cut short by the budget returns its partial report
/// together with the capacity error.
pub fn scan(doc: &GraphDocument, horizon: usize, settings: &Settings) -> CliResult<(ReportDocument, Option<CliError>)> {
    let g = doc.to_graph(settings.max_vertices)?;
    let r = stabilization_scan(&g, horizon, &settings.budget)?;
    let payload = StabilizationPayload {
        variables: variables(&g),
        horizon: r.horizon,
        computed: r.ass_sets.len(),
        counts: r.counts(),
        ass_sets: r.ass_sets.iter().map(|s| prime_rows(&g, s)).collect(),
        first_stable_index: r.first_stable_index,
        t: r.t,
        predicted: r.predicted,
        closed_form_agreement: r.closed_form_agreement.clone(),
        full_support_first: r.full_support_first,
        monotone: r.monotone,
        stopped: r.stopped.as_ref().map(ToString::to_string),
    };
    let parameters = Parameters { horizon: Some(horizon), ..params(doc) };
    let partial = r.stopped.map(CliError::from);
    Ok((ReportDocument::new("scan", parameters, Payload::Stabilization(payload)), partial))
}

/// Text export of `J^n` for a graph.
pub fn export_graph(doc: &GraphDocument, n: usize, settings: &Settings) -> CliResult<String> {
    let g = doc.to_graph(settings.max_vertices)?;
    let p = bounded_power(&g, n, &settings.budget)?;
    Ok(export_ideal(&variables(&g), &rows(p.generators())))
}

/// Text export of the ideal carried by a report (`cover-ideal` or `power` output).
pub fn export_report(report: &ReportDocument) -> CliResult<String> {
    match &report.result {
        Payload::Ideal(ideal) => {
            if let Some(bad) = ideal.generators.iter().find(|g| g.len() != ideal.variables.len()) {
                return Err(CliError::Parse(format!("generator {bad:?} does not match {} variables", ideal.variables.len())));
            }
            // Re-minimalize so hand-edited payloads still export canonically.
            let gens = ideal.generators.iter().map(|g| DegreeVector::from_slice(g)).collect();
            let ideal_min = MonomialIdeal::minimalize(Ambient::new(ideal.variables.clone()), gens)?;
            Ok(export_ideal(&ideal.variables, &rows(ideal_min.generators())))
        }
        _ => Err(CliError::Contract("export needs a report with an ideal payload (cover-ideal or power)".into())),
    }
}

pub fn engine_from_name(name: &str) -> CliResult<Engine> {
    use coverideal::decomposition::SplitOrder;
    match name {
        "auto" => Ok(Engine::Auto),
        "splitting" => Ok(Engine::Splitting(SplitOrder::Canonical)),
        "incremental" => Ok(Engine::Incremental),
        other => Err(CliError::Parse(format!("unknown engine {other:?}"))),
    }
}
