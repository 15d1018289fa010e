//! Closed-form irreducible decompositions of `(J_t)^n` for the `H_t` family,
//! checked against brute-force powers and decompositions, plus the
//! associated-prime classification and stabilization scans.
//!
//! The closed form is dispatched on `n`:
//! * `n = 1`: one component `(v_i, v_j)` per edge;
//! * `n = 2`: `(v_i², v_j) ∩ (v_i, v_j²)` per edge and `(v_{i_1}², …, v_{i_k}²)` per induced odd cycle;
//! * `n > 2`: `A_{t,n} ∩ B_{t,n} ∩ ⋂_{r=1}^{n−2} D_{t,n}^r`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::covers::{enumerate_n_admissible, enumerate_nhat_admissible};
use crate::decomposition::{decompose, intersect_components, omit_one_witness, supports, Engine, IrreducibleComponent, PrimeSupport};
use crate::error::{Error, Result};
use crate::graph::{build_ht, Graph, VertexSet};
use crate::monomial::{cover_ideal, Ambient, DegreeVector, Exponent, MonomialIdeal};

/// Mismatch witnesses reported per side when a comparison fails.
pub const MAX_WITNESSES: usize = 10;

/// Limits on brute-force work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    /// Largest `n` for which `(J_t)^n` is computed by brute force, per `t`.
    /// A `t` missing from the map gets no brute-force oracle.
    pub max_n_by_t: BTreeMap<usize, usize>,
    /// Powers with more minimal generators than this are not decomposed.
    pub max_generators: usize,
    pub engine: Engine,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_n_by_t: BTreeMap::from([(1, 6), (2, 6), (3, 4)]),
            max_generators: 200_000,
            engine: Engine::Auto,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_n_by_t: BTreeMap::new(), max_generators: usize::MAX, engine: Engine::Auto }.allow_all()
    }

    fn allow_all(mut self) -> Self {
        for t in 1..=12 {
            self.max_n_by_t.insert(t, usize::MAX);
        }
        self
    }

    pub fn brute_allowed(&self, t: usize, n: usize) -> bool {
        self.max_n_by_t.get(&t).is_some_and(|&max| n <= max)
    }
}

/// Returns `t` if `g` is exactly `H_t` as built by [`build_ht`] (same names,
/// kinds, vertex order and edges).
pub fn ht_parameter(g: &Graph) -> Option<usize> {
    let t = g.y_vertices().len();
    if t == 0 {
        return None;
    }
    let h = build_ht(t).ok()?;
    (h.vertices() == g.vertices() && h.edges() == g.edges()).then_some(t)
}

fn component(exps: DegreeVector) -> IrreducibleComponent {
    IrreducibleComponent::new(exps).expect("closed-form components have positive support")
}

fn exponent(n: usize) -> Result<Exponent> {
    Exponent::try_from(n).map_err(|_| Error::Overflow)
}

/// `A_{t,n}` over an arbitrary graph: per edge `{v_i, v_j}` the `n` components
/// `(v_i^s, v_j^{n+1−s})`, `s = 1..n`.
pub fn build_a_on(g: &Graph, n: usize) -> Result<Vec<IrreducibleComponent>> {
    if n == 0 {
        return Err(Error::contract("A_{t,n} requires n ≥ 1"));
    }
    let len = g.vertex_count();
    let mut out = Vec::with_capacity(g.edge_count() * n);
    for &(i, j) in g.edges() {
        for s in 1..=n {
            let mut e = DegreeVector::zeros(len);
            e.set(i, exponent(s)?);
            e.set(j, exponent(n + 1 - s)?);
            out.push(component(e));
        }
    }
    out.sort();
    Ok(out)
}

/// `B_{t,n}`: one component per induced odd cycle and n-admissible vector on it.
pub fn build_b_on(g: &Graph, n: usize) -> Result<Vec<IrreducibleComponent>> {
    if n <= 2 {
        return Err(Error::contract("B_{t,n} is defined for n > 2"));
    }
    let mut out = Vec::new();
    for cycle in g.induced_odd_cycles()? {
        for a in enumerate_n_admissible(cycle, g, n)? {
            out.push(component(a.vector));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `D_{t,n}^r`: one component per r-cluster and n̂-admissible vector on it.
pub fn build_d_on(g: &Graph, n: usize, r: usize) -> Result<Vec<IrreducibleComponent>> {
    if n <= 2 {
        return Err(Error::contract("D_{t,n}^r is defined for n > 2"));
    }
    if r == 0 || r > n - 2 {
        return Err(Error::contract(format!("D_{{t,n}}^r needs 1 ≤ r ≤ n − 2 (r = {r}, n = {n})")));
    }
    let mut out = Vec::new();
    for cluster in g.r_clusters(r)? {
        for c in enumerate_nhat_admissible(&cluster, g, n)? {
            out.push(component(c.vector));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn build_a(t: usize, n: usize) -> Result<Vec<IrreducibleComponent>> {
    build_a_on(&build_ht(t)?, n)
}

pub fn build_b(t: usize, n: usize) -> Result<Vec<IrreducibleComponent>> {
    build_b_on(&build_ht(t)?, n)
}

pub fn build_d(t: usize, n: usize, r: usize) -> Result<Vec<IrreducibleComponent>> {
    build_d_on(&build_ht(t)?, n, r)
}

/// The closed-form components split by family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub n: usize,
    pub a: Vec<IrreducibleComponent>,
    /// `B_{t,n}` for `n > 2`; the squared odd-cycle components for `n = 2`.
    pub b: Vec<IrreducibleComponent>,
    /// `(r, D_{t,n}^r)` for `r = 1..n−2`.
    pub d: Vec<(usize, Vec<IrreducibleComponent>)>,
}

impl ClosedForm {
    /// All components, deduplicated and sorted.
    pub fn components(&self) -> Vec<IrreducibleComponent> {
        let mut all: BTreeSet<IrreducibleComponent> = self.a.iter().cloned().collect();
        all.extend(self.b.iter().cloned());
        for (_, d) in &self.d {
            all.extend(d.iter().cloned());
        }
        all.into_iter().collect()
    }
}

/// Closed-form components of `(J_G)^n`, for `G` an `H_t` (or any graph, for `n ≤ 2`).
pub fn closed_form_on(g: &Graph, n: usize) -> Result<ClosedForm> {
    match n {
        0 => Err(Error::contract("power n must be ≥ 1")),
        1 => Ok(ClosedForm { n, a: build_a_on(g, 1)?, b: Vec::new(), d: Vec::new() }),
        2 => {
            let len = g.vertex_count();
            let squares = g
                .induced_odd_cycles()?
                .into_iter()
                .map(|cycle| {
                    let mut e = DegreeVector::zeros(len);
                    for v in cycle {
                        e.set(v, 2);
                    }
                    component(e)
                })
                .collect();
            Ok(ClosedForm { n, a: build_a_on(g, 2)?, b: squares, d: Vec::new() })
        }
        _ => {
            let d = (1..=n - 2).map(|r| Ok((r, build_d_on(g, n, r)?))).collect::<Result<Vec<_>>>()?;
            Ok(ClosedForm { n, a: build_a_on(g, n)?, b: build_b_on(g, n)?, d })
        }
    }
}

pub fn closed_form_power_decomposition(t: usize, n: usize) -> Result<Vec<IrreducibleComponent>> {
    Ok(closed_form_on(&build_ht(t)?, n)?.components())
}

/// Outcome of checking the closed form for one `(t, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub t: usize,
    pub n: usize,
    pub count_a: usize,
    pub count_b: usize,
    pub count_d: Vec<(usize, usize)>,
    pub components: Vec<IrreducibleComponent>,
    /// Omitting any single closed-form component changes the intersection.
    pub irredundant: bool,
    /// Components whose omission leaves the intersection unchanged.
    pub redundant: Vec<IrreducibleComponent>,
    /// Whether the brute-force oracle ran (it is skipped outside the budget).
    pub brute_checked: bool,
    /// Intersection of the closed form equals `(J_t)^n`; `None` if not checked.
    pub equal: Option<bool>,
    /// Closed form equals the brute-force irredundant component set.
    pub components_match: Option<bool>,
    /// Minimal generators of the closed-form intersection outside `(J_t)^n`.
    pub only_in_closed_form: Vec<DegreeVector>,
    /// Minimal generators of `(J_t)^n` outside the closed-form intersection.
    pub only_in_power: Vec<DegreeVector>,
    pub power_generators: Option<usize>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.irredundant && self.equal == Some(true) && self.components_match == Some(true)
    }
}

pub fn verify_decomposition(t: usize, n: usize, budget: &Budget) -> Result<DecompositionReport> {
    let g = build_ht(t)?;
    let closed = closed_form_on(&g, n)?;
    let components = closed.components();
    let ambient = Ambient::of_graph(&g);

    let redundant: Vec<IrreducibleComponent> = (0..components.len())
        .into_par_iter()
        .filter(|&i| omit_one_witness(&components, i).is_none())
        .map(|i| components[i].clone())
        .collect();

    let mut report = DecompositionReport {
        t,
        n,
        count_a: closed.a.len(),
        count_b: closed.b.len(),
        count_d: closed.d.iter().map(|(r, d)| (*r, d.len())).collect(),
        irredundant: redundant.is_empty(),
        redundant,
        brute_checked: false,
        equal: None,
        components_match: None,
        only_in_closed_form: Vec::new(),
        only_in_power: Vec::new(),
        power_generators: None,
        components,
    };
    if !budget.brute_allowed(t, n) {
        return Ok(report);
    }
    let power = bounded_power(&cover_ideal(&g)?, n, budget.max_generators)?;
    let intersection = intersect_components(&ambient, &report.components)?;
    report.brute_checked = true;
    report.power_generators = Some(power.len());
    report.only_in_closed_form = intersection.generators_outside(&power, MAX_WITNESSES);
    report.only_in_power = power.generators_outside(&intersection, MAX_WITNESSES);
    report.equal = Some(intersection == power);
    let brute = decompose(&power, budget.engine)?;
    report.components_match = Some(brute == report.components);
    Ok(report)
}

fn bounded_power(j: &MonomialIdeal, n: usize, max_generators: usize) -> Result<MonomialIdeal> {
    let mut p = j.clone();
    for _ in 1..n {
        p = p.multiply(j)?;
        if p.len() > max_generators {
            return Err(Error::Capacity { what: "power generators", actual: p.len(), limit: max_generators });
        }
    }
    Ok(p)
}

/// Associated primes predicted by the closed form: edges; for `n ≥ 2` also
/// induced odd cycles; for `n ≥ 3` also r-cluster supports with `r ≤ n − 2`.
pub fn classify_ass_closed_form_on(g: &Graph, n: usize) -> Result<Vec<PrimeSupport>> {
    if n == 0 {
        return Err(Error::contract("power n must be ≥ 1"));
    }
    let mut out: BTreeSet<PrimeSupport> =
        g.edges().iter().map(|&(a, b)| PrimeSupport(VertexSet::from_indices([a, b]))).collect();
    if n >= 2 {
        let cycles = g.induced_odd_cycles()?;
        out.extend(cycles.iter().map(|&c| PrimeSupport(c)));
        for r in 1..=n.saturating_sub(2) {
            let clusters = g.r_clusters_from(&cycles, r);
            if clusters.is_empty() {
                break;
            }
            out.extend(clusters.iter().map(|c| PrimeSupport(c.support())));
        }
    }
    Ok(out.into_iter().collect())
}

pub fn classify_ass_closed_form(t: usize, n: usize) -> Result<Vec<PrimeSupport>> {
    classify_ass_closed_form_on(&build_ht(t)?, n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationReport {
    pub horizon: usize,
    /// `Ass(R/J^n)` for `n = 1..=ass_sets.len()`.
    pub ass_sets: Vec<Vec<PrimeSupport>>,
    /// Smallest `s` with `ass_sets` constant from `s` through the last computed `n`.
    pub first_stable_index: usize,
    /// `Some(t)` when the graph is `H_t`.
    pub t: Option<usize>,
    /// `2 + t` for `H_t`.
    pub predicted: Option<usize>,
    /// Per `n`, whether the brute-force set equals the closed-form classification.
    pub closed_form_agreement: Option<Vec<bool>>,
    /// First `n` at which the prime on all vertices appears.
    pub full_support_first: Option<usize>,
    /// `Ass(n) ⊆ Ass(n+1)` held throughout.
    pub monotone: bool,
    /// Why the scan stopped before the horizon, if it did.
    pub stopped: Option<Error>,
}

impl StabilizationReport {
    pub fn counts(&self) -> Vec<usize> {
        self.ass_sets.iter().map(|s| s.len()).collect()
    }

    pub fn complete(&self) -> bool {
        self.stopped.is_none()
    }
}

/// Brute-force `Ass(R/J^n)` for `n = 1..=horizon`. Stability is only claimed
/// up to the last computed power.
pub fn stabilization_scan(g: &Graph, horizon: usize, budget: &Budget) -> Result<StabilizationReport> {
    if horizon == 0 {
        return Err(Error::contract("horizon must be ≥ 1"));
    }
    let j = cover_ideal(g)?;
    if j.is_unit() {
        return Err(Error::contract("graph has no edges; its cover ideal is the unit ideal"));
    }
    let mut powers = vec![j.clone()];
    let mut stopped = None;
    while powers.len() < horizon {
        let next = powers.last().unwrap().multiply(&j)?;
        if next.len() > budget.max_generators {
            stopped = Some(Error::Capacity { what: "power generators", actual: next.len(), limit: budget.max_generators });
            break;
        }
        powers.push(next);
    }
    let ass_sets = powers
        .par_iter()
        .map(|p| Ok(supports(&decompose(p, budget.engine)?)))
        .collect::<Result<Vec<_>>>()?;

    let last = ass_sets.len();
    let mut first_stable_index = last;
    while first_stable_index > 1 && ass_sets[first_stable_index - 2] == ass_sets[last - 1] {
        first_stable_index -= 1;
    }
    let monotone = ass_sets.windows(2).all(|w| w[0].iter().all(|p| w[1].contains(p)));
    let full = PrimeSupport(g.all());
    let full_support_first = ass_sets.iter().position(|s| s.contains(&full)).map(|i| i + 1);

    let t = ht_parameter(g);
    let closed_form_agreement = t
        .map(|_| {
            ass_sets
                .iter()
                .enumerate()
                .map(|(i, s)| Ok(&classify_ass_closed_form_on(g, i + 1)? == s))
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    Ok(StabilizationReport {
        horizon,
        ass_sets,
        first_stable_index,
        t,
        predicted: t.map(|t| t + 2),
        closed_form_agreement,
        full_support_first,
        monotone,
        stopped,
    })
}

/// Every minimal generator of `(J_t)^n` lies in every component of `A_{t,n}`.
pub fn verify_min_generator_containment(t: usize, n: usize) -> Result<bool> {
    let g = build_ht(t)?;
    let power = cover_ideal(&g)?.power(n)?;
    let a = build_a_on(&g, n)?;
    Ok(power
        .generators()
        .par_iter()
        .all(|m| a.iter().all(|c| c.contains(m).unwrap_or(false))))
}
