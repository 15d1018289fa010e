//! Irredundant irreducible decompositions of monomial ideals and the
//! associated primes read off from them.
//!
//! Decompositions are computed by recursive splitting: a generator `m = m′·m″`
//! with coprime nontrivial factors gives `I = (I + m′) ∩ (I + m″)`, and an ideal
//! generated by pure powers is irreducible.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::monomial::{check_len, minimal_elements, Ambient, DegreeVector, Exponent, MonomialIdeal};

/// `V^a = (v_i^{a_i} : a_i > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IrreducibleComponent(DegreeVector);

impl IrreducibleComponent {
    pub fn new(exponents: DegreeVector) -> Result<Self> {
        if exponents.is_zero() {
            return Err(Error::contract("irreducible component needs a positive exponent"));
        }
        Ok(IrreducibleComponent(exponents))
    }

    pub fn exponents(&self) -> &DegreeVector {
        &self.0
    }

    pub fn support(&self) -> VertexSet {
        self.0.support()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership of the monomial `m` in `V^a`: some `a_i > 0` with `m_i ≥ a_i`.
    pub fn contains(&self, m: &DegreeVector) -> Result<bool> {
        check_len(self.len(), m.len())?;
        Ok(self.contains_unchecked(m))
    }

    fn contains_unchecked(&self, m: &DegreeVector) -> bool {
        self.0.as_slice().iter().zip(m.as_slice()).any(|(&c, &e)| c > 0 && e >= c)
    }

    /// `V^self ⊆ V^other`: every generator `v_i^{a_i}` lies in `other`.
    pub fn is_subset(&self, other: &IrreducibleComponent) -> Result<bool> {
        check_len(self.len(), other.len())?;
        Ok(self.subset_unchecked(other))
    }

    fn subset_unchecked(&self, other: &IrreducibleComponent) -> bool {
        self.0
            .as_slice()
            .iter()
            .zip(other.0.as_slice())
            .all(|(&a, &b)| a == 0 || (b > 0 && a >= b))
    }

    /// The component as a monomial ideal over `ambient`.
    pub fn to_ideal(&self, ambient: &Ambient) -> Result<MonomialIdeal> {
        check_len(ambient.len(), self.len())?;
        let n = self.len();
        let gens = self
            .0
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                let mut g = DegreeVector::zeros(n);
                g.set(i, a);
                g
            })
            .collect();
        MonomialIdeal::minimalize(ambient.clone(), gens)
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The support of a component: the variables of the prime `(v_i : i ∈ S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeSupport(pub VertexSet);

impl PrimeSupport {
    pub fn vertices(&self) -> VertexSet {
        self.0
    }
}

pub fn component_contains_monomial(c: &IrreducibleComponent, m: &DegreeVector) -> Result<bool> {
    c.contains(m)
}

pub fn component_subset(c1: &IrreducibleComponent, c2: &IrreducibleComponent) -> Result<bool> {
    c1.is_subset(c2)
}

/// Which generator and coordinate the splitting recursion branches on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitOrder {
    /// First generator (lexicographically) with two or more positive
    /// coordinates, split at its first positive coordinate.
    Canonical,
    /// Uniformly random eligible generator and coordinate, seeded.
    Randomized(u64),
}

type Memo = HashMap<Vec<DegreeVector>, Arc<Vec<IrreducibleComponent>>>;

/// Irredundant irreducible components of `ideal`, canonically sorted.
pub fn irreducible_components(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    irreducible_components_with(ideal, SplitOrder::Canonical)
}

pub fn irreducible_components_with(ideal: &MonomialIdeal, order: SplitOrder) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_unit() {
        return Err(Error::contract("the unit ideal has no irreducible decomposition"));
    }
    if ideal.is_zero() {
        return Err(Error::contract("the zero ideal has no irreducible decomposition"));
    }
    let mut memo = Memo::new();
    let mut rng = match order {
        SplitOrder::Canonical => None,
        SplitOrder::Randomized(seed) => Some(StdRng::seed_from_u64(seed)),
    };
    let comps = split(ideal.generators().to_vec(), &mut memo, &mut rng);
    irredundant(comps.to_vec())
}

fn split(gens: Vec<DegreeVector>, memo: &mut Memo, rng: &mut Option<StdRng>) -> Arc<Vec<IrreducibleComponent>> {
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let eligible: Vec<usize> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| g.support().len() >= 2)
        .map(|(i, _)| i)
        .collect();
    let result = if eligible.is_empty() {
        // Pure powers only: already irreducible.
        let n = gens[0].len();
        let mut exps = DegreeVector::zeros(n);
        for g in &gens {
            let i = g.support().first().expect("unit ideal reached the splitter");
            exps.set(i, g.get(i));
        }
        vec![IrreducibleComponent(exps)]
    } else {
        let (gi, coord) = match rng {
            None => (eligible[0], gens[eligible[0]].support().first().unwrap()),
            Some(rng) => {
                let gi = eligible[rng.gen_range(0..eligible.len())];
                let supp = gens[gi].support().to_vec();
                (gi, supp[rng.gen_range(0..supp.len())])
            }
        };
        let m = &gens[gi];
        let n = m.len();
        let mut pure = DegreeVector::zeros(n);
        pure.set(coord, m.get(coord));
        let mut rest = m.clone();
        rest.set(coord, 0);
        let mut left_gens = gens.clone();
        left_gens.push(pure);
        let mut right_gens = gens.clone();
        right_gens.push(rest);
        let left = split(minimal_elements(left_gens), memo, rng);
        let right = split(minimal_elements(right_gens), memo, rng);
        let union: Vec<IrreducibleComponent> = left.iter().chain(right.iter()).cloned().collect();
        prune_contained(union)
    };
    let result = Arc::new(result);
    memo.insert(gens, result.clone());
    result
}

/// Irredundant irreducible components computed by adding one generator at a
/// time: a component `C` not containing the new generator `g` is replaced by
/// `C + (v_i^{g_i})` for each `i` in the support of `g`.
///
/// Produces the same set as [`irreducible_components`] with far less memory on
/// large ideals.
pub fn irreducible_components_incremental(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_unit() {
        return Err(Error::contract("the unit ideal has no irreducible decomposition"));
    }
    if ideal.is_zero() {
        return Err(Error::contract("the zero ideal has no irreducible decomposition"));
    }
    let mut gens = ideal.generators().to_vec();
    gens.sort_by_key(|g| g.total_degree());
    let n = ideal.nvars();
    let mut comps: Vec<IrreducibleComponent> = gens[0]
        .support()
        .iter()
        .map(|i| {
            let mut e = DegreeVector::zeros(n);
            e.set(i, gens[0].get(i));
            IrreducibleComponent(e)
        })
        .collect();
    for g in &gens[1..] {
        let (mut kept, outside): (Vec<_>, Vec<_>) = comps.into_iter().partition(|c| c.contains_unchecked(g));
        let kept_len = kept.len();
        let mut fresh = Vec::new();
        for c in outside {
            for i in g.support() {
                let mut e = c.0.clone();
                e.set(i, g.get(i));
                fresh.push(IrreducibleComponent(e));
            }
        }
        fresh.sort_unstable();
        fresh.dedup();
        // A fresh `D + (v_i^{g_i}) ⊆ C` would force `D ⊆ C`, so kept components
        // stay irredundant and only the fresh ones need testing.
        let mut accepted: Vec<IrreducibleComponent> = Vec::new();
        for (idx, c) in fresh.iter().enumerate() {
            let beaten = kept[..kept_len].iter().any(|d| d.subset_unchecked(c))
                || fresh.iter().enumerate().any(|(j, d)| j != idx && d.subset_unchecked(c));
            if !beaten {
                accepted.push(c.clone());
            }
        }
        kept.extend(accepted);
        comps = kept;
    }
    irredundant(comps)
}

/// Generator count above which [`Engine::Auto`] switches from splitting to the
/// incremental algorithm (the splitting memo grows too large past this).
pub const AUTO_SPLITTING_LIMIT: usize = 3000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    Splitting(SplitOrder),
    Incremental,
    /// Splitting up to [`AUTO_SPLITTING_LIMIT`] generators, incremental beyond.
    #[default]
    Auto,
}

pub fn decompose(ideal: &MonomialIdeal, engine: Engine) -> Result<Vec<IrreducibleComponent>> {
    match engine {
        Engine::Splitting(order) => irreducible_components_with(ideal, order),
        Engine::Incremental => irreducible_components_incremental(ideal),
        Engine::Auto if ideal.len() <= AUTO_SPLITTING_LIMIT => irreducible_components(ideal),
        Engine::Auto => irreducible_components_incremental(ideal),
    }
}

pub fn associated_primes_with(ideal: &MonomialIdeal, engine: Engine) -> Result<Vec<PrimeSupport>> {
    Ok(supports(&decompose(ideal, engine)?))
}

/// Drops duplicates and every component containing another one.
fn prune_contained(mut comps: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    comps.sort_unstable();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| !comps.iter().enumerate().any(|(j, d)| i != j && d.subset_unchecked(c)))
        .collect();
    comps.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

/// Removes redundant components: a pairwise-containment prefilter, then an exact
/// omit-one check on every survivor.
pub fn irredundant(components: Vec<IrreducibleComponent>) -> Result<Vec<IrreducibleComponent>> {
    if let Some(first) = components.first() {
        for c in &components {
            check_len(first.len(), c.len())?;
        }
    }
    let mut comps = prune_contained(components);
    loop {
        let redundant = (0..comps.len()).find(|&i| omit_one_witness(&comps, i).is_none());
        match redundant {
            Some(i) => {
                comps.remove(i);
            }
            None => return Ok(comps),
        }
    }
}

/// A monomial in the intersection of all components except `skip` but not in
/// `components[skip]`, or `None` when dropping that component leaves the
/// intersection unchanged.
///
/// Any monomial outside `V^c` is bounded by `c − 1` on the support of `c`; raising
/// the remaining coordinates to the largest exponent in play keeps it outside
/// `V^c` and can only add memberships elsewhere, so this single corner monomial
/// decides the question exactly.
pub fn omit_one_witness(components: &[IrreducibleComponent], skip: usize) -> Option<DegreeVector> {
    let c = &components[skip];
    let n = c.len();
    let cap: Exponent = components
        .iter()
        .flat_map(|d| d.0.as_slice().iter().copied())
        .max()
        .unwrap_or(0);
    let mut corner = DegreeVector::zeros(n);
    for i in 0..n {
        let a = c.0.get(i);
        corner.set(i, if a > 0 { a - 1 } else { cap });
    }
    let in_others = components
        .iter()
        .enumerate()
        .all(|(j, d)| j == skip || d.contains_unchecked(&corner));
    in_others.then_some(corner)
}

/// The intersection of components as a monomial ideal (the unit ideal if empty).
pub fn intersect_components(ambient: &Ambient, components: &[IrreducibleComponent]) -> Result<MonomialIdeal> {
    // Balanced pairwise folding keeps intermediate ideals small.
    let mut layer = components
        .iter()
        .map(|c| c.to_ideal(ambient))
        .collect::<Result<Vec<_>>>()?;
    if layer.is_empty() {
        return Ok(MonomialIdeal::unit(ambient.clone()));
    }
    while layer.len() > 1 {
        let mut next = Vec::with_capacity(layer.len().div_ceil(2));
        let mut it = layer.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a.intersect(&b)?),
                None => next.push(a),
            }
        }
        layer = next;
    }
    Ok(layer.pop().unwrap())
}

/// Supports of the irredundant components of `ideal`.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<PrimeSupport>> {
    let comps = irreducible_components(ideal)?;
    Ok(supports(&comps))
}

pub fn supports(components: &[IrreducibleComponent]) -> Vec<PrimeSupport> {
    components
        .iter()
        .map(|c| PrimeSupport(c.support()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
