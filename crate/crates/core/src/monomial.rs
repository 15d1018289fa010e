//! Exponent-vector monomials and monomial ideals kept in canonical form:
//! a minimal generating set sorted lexicographically.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub type Exponent = u16;

/// Nonnegative exponents indexed by an ambient variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeVector(SmallVec<[Exponent; 20]>);

impl DegreeVector {
    pub fn zeros(len: usize) -> Self {
        DegreeVector(SmallVec::from_elem(0, len))
    }

    pub fn from_slice(exps: &[Exponent]) -> Self {
        DegreeVector(SmallVec::from_slice(exps))
    }

    /// The 0/1 vector of `set` over `len` coordinates.
    pub fn indicator(len: usize, set: VertexSet) -> Self {
        let mut v = DegreeVector::zeros(len);
        for i in set {
            v.0[i] = 1;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Exponent] {
        &self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [Exponent] {
        &mut self.0
    }

    pub fn get(&self, i: usize) -> Exponent {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, e: Exponent) {
        self.0[i] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Coordinates with a positive exponent.
    pub fn support(&self) -> VertexSet {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    /// Componentwise `self ≤ other`, i.e. the monomial `self` divides `other`.
    pub fn divides(&self, other: &DegreeVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &DegreeVector) -> Result<DegreeVector> {
        check_len(self.len(), other.len())?;
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<SmallVec<_>>>()
            .map(DegreeVector)
    }

    /// Componentwise maximum (the lcm of the two monomials).
    pub fn lcm(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    /// Restriction to the coordinates of `set`, in increasing index order.
    pub fn restrict(&self, set: VertexSet) -> Vec<Exponent> {
        set.iter().map(|i| self.0[i]).collect()
    }

    pub fn scaled(len: usize, value: Exponent) -> Self {
        DegreeVector(SmallVec::from_elem(value, len))
    }
}

impl From<Vec<Exponent>> for DegreeVector {
    fn from(v: Vec<Exponent>) -> Self {
        DegreeVector(SmallVec::from_vec(v))
    }
}

impl<const N: usize> From<[Exponent; N]> for DegreeVector {
    fn from(v: [Exponent; N]) -> Self {
        DegreeVector::from_slice(&v)
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected == actual {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, actual })
    }
}

/// The variable names an ideal is written over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ambient(Arc<[String]>);

impl Ambient {
    pub fn new(names: Vec<String>) -> Self {
        Ambient(names.into())
    }

    /// Anonymous variables `v1, …, vn`.
    pub fn anonymous(n: usize) -> Self {
        Ambient::new((1..=n).map(|i| format!("v{i}")).collect())
    }

    pub fn of_graph(g: &Graph) -> Self {
        Ambient::new(g.vertices().iter().map(|v| v.name.clone()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    fn same(&self, other: &Ambient) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

/// A monomial ideal stored by its minimal generators in lexicographic order.
///
/// The zero ideal has no generators; the unit ideal is the single zero vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: Ambient,
    gens: Vec<DegreeVector>,
}

impl MonomialIdeal {
    pub fn zero(ambient: Ambient) -> Self {
        MonomialIdeal { ambient, gens: Vec::new() }
    }

    pub fn unit(ambient: Ambient) -> Self {
        let n = ambient.len();
        MonomialIdeal { ambient, gens: vec![DegreeVector::zeros(n)] }
    }

    /// Canonical ideal generated by `gens`: drops every vector divisible by another.
    pub fn minimalize(ambient: Ambient, gens: Vec<DegreeVector>) -> Result<Self> {
        for g in &gens {
            check_len(ambient.len(), g.len())?;
        }
        Ok(MonomialIdeal { ambient, gens: minimal_elements(gens) })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.len()
    }

    pub fn generators(&self) -> &[DegreeVector] {
        &self.gens
    }

    pub fn into_generators(self) -> Vec<DegreeVector> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient.same(&other.ambient) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn contains(&self, m: &DegreeVector) -> Result<bool> {
        check_len(self.nvars(), m.len())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let sums = self
            .gens
            .par_iter()
            .flat_map_iter(|g| other.gens.iter().map(move |h| g.checked_add(h)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { ambient: self.ambient.clone(), gens: minimal_elements(sums) })
    }

    /// `self^n` by repeated multiplication, minimalizing after every step.
    pub fn power(&self, n: usize) -> Result<MonomialIdeal> {
        Ok(self.powers(n)?.pop().unwrap())
    }

    /// `[self, self^2, …, self^n]`.
    pub fn powers(&self, n: usize) -> Result<Vec<MonomialIdeal>> {
        if n == 0 {
            return Err(Error::contract("ideal power requires n ≥ 1"));
        }
        let mut out = vec![self.clone()];
        for _ in 1..n {
            let next = out.last().unwrap().multiply(self)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        // Generators already inside the other ideal survive unchanged and absorb
        // every lcm they take part in.
        let (inside, outside): (Vec<&DegreeVector>, Vec<&DegreeVector>) =
            self.gens.iter().partition(|g| other.gens.iter().any(|h| h.divides(g)));
        let (other_inside, other_outside): (Vec<&DegreeVector>, Vec<&DegreeVector>) =
            other.gens.iter().partition(|h| self.gens.iter().any(|g| g.divides(h)));
        let mut cands: Vec<DegreeVector> = inside.into_iter().chain(other_inside).cloned().collect();
        let lcms: Vec<DegreeVector> = outside
            .par_iter()
            .flat_map_iter(|g| other_outside.iter().map(move |h| g.lcm(h)))
            .collect();
        cands.extend(lcms);
        Ok(MonomialIdeal { ambient: self.ambient.clone(), gens: minimal_elements(cands) })
    }

    /// Sum of ideals (union of generating sets).
    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other)?;
        let cands = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(MonomialIdeal { ambient: self.ambient.clone(), gens: minimal_elements(cands) })
    }

    pub fn with_generator(&self, m: DegreeVector) -> Result<MonomialIdeal> {
        check_len(self.nvars(), m.len())?;
        let mut cands = self.gens.clone();
        cands.push(m);
        Ok(MonomialIdeal { ambient: self.ambient.clone(), gens: minimal_elements(cands) })
    }

    /// Minimal generators of `self` not in `other` (up to `limit`).
    pub fn generators_outside(&self, other: &MonomialIdeal, limit: usize) -> Vec<DegreeVector> {
        self.gens
            .iter()
            .filter(|g| !other.gens.iter().any(|h| h.divides(g)))
            .take(limit)
            .cloned()
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", render_monomial(self.ambient.names(), g))?;
        }
        write!(f, ")")
    }
}

/// `x1^2*x3` style rendering; the zero vector renders as `1`.
pub fn render_monomial(names: &[String], m: &DegreeVector) -> String {
    let factors: Vec<String> = m
        .as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// The minimal elements of `gens` under divisibility, deduplicated and sorted lexicographically.
pub(crate) fn minimal_elements(mut gens: Vec<DegreeVector>) -> Vec<DegreeVector> {
    if gens.len() <= 1 {
        return gens;
    }
    // A divisor has strictly smaller total degree (or is equal), so scanning by
    // degree means only already-kept vectors can divide the current one.
    gens.sort_unstable_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<(u64, DegreeVector)> = Vec::new();
    for g in gens {
        let supp = g.support().bits();
        let divisible = kept
            .iter()
            .any(|(ks, k)| ks & !supp == 0 && k.divides(&g));
        if !divisible {
            kept.push((supp, g));
        }
    }
    let mut out: Vec<DegreeVector> = kept.into_iter().map(|(_, g)| g).collect();
    out.sort_unstable();
    out
}

/// `J_G`, generated by the indicator vectors of the minimal vertex covers.
///
/// Also computed as `⋂_{ij ∈ E} (v_i, v_j)`; the two constructions are
/// checked against each other. A graph without edges has the unit ideal.
pub fn cover_ideal(g: &Graph) -> Result<MonomialIdeal> {
    let ambient = Ambient::of_graph(g);
    let n = g.vertex_count();
    let from_covers = MonomialIdeal::minimalize(
        ambient.clone(),
        g.minimal_vertex_covers()?.into_iter().map(|c| DegreeVector::indicator(n, c)).collect(),
    )?;
    let mut from_edges = MonomialIdeal::unit(ambient.clone());
    for &(a, b) in g.edges() {
        let edge = MonomialIdeal::minimalize(
            ambient.clone(),
            vec![DegreeVector::indicator(n, VertexSet::singleton(a)), DegreeVector::indicator(n, VertexSet::singleton(b))],
        )?;
        from_edges = from_edges.intersect(&edge)?;
    }
    assert_eq!(from_covers, from_edges, "cover ideal constructions disagree");
    Ok(from_covers)
}

/// `I_G`, one square-free quadratic generator per edge.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.vertex_count();
    let gens = g
        .edges()
        .iter()
        .map(|&(a, b)| DegreeVector::indicator(n, VertexSet::from_indices([a, b])))
        .collect();
    MonomialIdeal { ambient: Ambient::of_graph(g), gens: minimal_elements(gens) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_ht, build_odd_cycle, Vertex};
    use proptest::prelude::*;

    fn ideal(n: usize, gens: &[&[Exponent]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(Ambient::anonymous(n), gens.iter().map(|g| DegreeVector::from_slice(g)).collect()).unwrap()
    }

    fn k2() -> Graph {
        Graph::new(vec![Vertex::x("a"), Vertex::x("b")], [(0, 1)]).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 0], &[0, 1]]).generators(), ideal(2, &[&[0, 1], &[1, 0]]).generators());
        assert_eq!(ideal(2, &[&[1, 0], &[0, 1]]).len(), 2);
        assert!(ideal(2, &[]).is_zero());
        assert_eq!(ideal(2, &[&[1, 1], &[2, 0], &[0, 2]]).len(), 3);
        let err = MonomialIdeal::minimalize(Ambient::anonymous(2), vec![DegreeVector::from_slice(&[1, 0, 0])]);
        assert!(matches!(err, Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn multiply_examples() {
        let j = cover_ideal(&k2()).unwrap();
        let sq = j.multiply(&j).unwrap();
        assert_eq!(sq, MonomialIdeal::minimalize(j.ambient().clone(), vec![[2, 0].into(), [1, 1].into(), [0, 2].into()]).unwrap());
        let unit = MonomialIdeal::unit(j.ambient().clone());
        assert_eq!(unit.multiply(&j).unwrap(), j);
        let zero = MonomialIdeal::zero(j.ambient().clone());
        assert!(zero.multiply(&j).unwrap().is_zero());
        let other = ideal(2, &[&[1, 0]]);
        let named = MonomialIdeal::minimalize(Ambient::new(vec!["p".into(), "q".into()]), vec![[1, 0].into()]).unwrap();
        assert_eq!(other.multiply(&named), Err(Error::AmbientMismatch));
    }

    #[test]
    fn power_examples() {
        let j = cover_ideal(&k2()).unwrap();
        assert_eq!(j.power(2).unwrap().len(), 3);
        assert_eq!(j.power(1).unwrap(), j);
        assert!(j.power(0).is_err());

        // J_{C_3} = (v1v2, v1v3, v2v3); the square expands to six products, all of degree 4
        // and pairwise incomparable.
        let c3 = cover_ideal(&build_odd_cycle(3).unwrap()).unwrap();
        let sq = c3.power(2).unwrap();
        let mut by_hand: Vec<DegreeVector> = vec![
            [2, 2, 0].into(), [2, 1, 1].into(), [1, 2, 1].into(),
            [2, 0, 2].into(), [1, 1, 2].into(), [0, 2, 2].into(),
        ];
        by_hand.sort();
        assert_eq!(sq.generators(), &by_hand[..]);
        assert!(sq.generators().iter().all(|g| g.total_degree() == 4));

        let jh = cover_ideal(&build_ht(1).unwrap()).unwrap();
        assert_eq!(jh.power(3).unwrap(), jh.power(2).unwrap().multiply(&jh).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 1]]));
        let p = ideal(2, &[&[2, 0], &[0, 1]]);
        let q = ideal(2, &[&[1, 0], &[0, 2]]);
        assert_eq!(p.intersect(&q).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let unit = MonomialIdeal::unit(Ambient::anonymous(2));
        assert_eq!(p.intersect(&unit).unwrap(), p);
    }

    #[test]
    fn contains_examples() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(i.contains(&[2, 3].into()).unwrap());
        assert!(!i.contains(&[2, 0].into()).unwrap());
        assert!(i.contains(&[1, 1, 1].into()).is_err());
        let c3 = cover_ideal(&build_odd_cycle(3).unwrap()).unwrap();
        assert!(c3.contains(&[1, 1, 0].into()).unwrap());
        assert!(!c3.contains(&[1, 0, 0].into()).unwrap());
    }

    #[test]
    fn cover_and_edge_ideals() {
        assert_eq!(cover_ideal(&k2()).unwrap().generators(), &[[0, 1].into(), [1, 0].into()]);
        let c3 = build_odd_cycle(3).unwrap();
        let expected: Vec<DegreeVector> = vec![[0, 1, 1].into(), [1, 0, 1].into(), [1, 1, 0].into()];
        assert_eq!(cover_ideal(&c3).unwrap().generators(), &expected[..]);
        assert_eq!(edge_ideal(&c3).generators(), &expected[..]);
        assert_eq!(edge_ideal(&k2()).generators(), &[[1, 1].into()]);

        let h1 = build_ht(1).unwrap();
        let j = cover_ideal(&h1).unwrap();
        let cover = DegreeVector::indicator(6, h1.vertex_set(&["x1", "x3", "x4", "y1"]).unwrap());
        assert!(j.generators().contains(&cover));
        assert_eq!(j.generators().iter().map(|g| g.total_degree()).min(), Some(4));
        assert_eq!(edge_ideal(&h1).len(), 8);

        let edgeless = Graph::new(vec![Vertex::x("a")], []).unwrap();
        assert!(cover_ideal(&edgeless).unwrap().is_unit());
    }

    fn arb_ideal(nvars: usize) -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u16..4, nvars), 1..7).prop_map(move |gens| {
            MonomialIdeal::minimalize(Ambient::anonymous(nvars), gens.into_iter().map(DegreeVector::from).collect()).unwrap()
        })
    }

    fn is_minimal(i: &MonomialIdeal) -> bool {
        let g = i.generators();
        g.windows(2).all(|w| w[0] < w[1])
            && g.iter().enumerate().all(|(a, x)| g.iter().enumerate().all(|(b, y)| a == b || !x.divides(y)))
    }

    proptest! {
        #[test]
        fn operations_stay_minimal(i in arb_ideal(4), j in arb_ideal(4)) {
            let prod = i.multiply(&j).unwrap();
            let meet = i.intersect(&j).unwrap();
            prop_assert!(is_minimal(&i));
            prop_assert!(is_minimal(&prod));
            prop_assert!(is_minimal(&meet));
            prop_assert!(is_minimal(&i.power(3).unwrap()));
            for g in i.generators() {
                for h in j.generators() {
                    prop_assert!(prod.contains(&g.checked_add(h).unwrap()).unwrap());
                }
            }
        }

        #[test]
        fn powers_descend(i in arb_ideal(3)) {
            let p = i.powers(4).unwrap();
            for w in p.windows(2) {
                prop_assert!(w[1].is_subset(&w[0]).unwrap());
            }
        }

        #[test]
        fn intersection_is_order_insensitive(ideals in prop::collection::vec(arb_ideal(3), 1..5), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let fold = |list: &[MonomialIdeal]| {
                list.iter().skip(1).fold(list[0].clone(), |acc, x| acc.intersect(x).unwrap())
            };
            let mut shuffled = ideals.clone();
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(fold(&ideals), fold(&shuffled));
        }

        #[test]
        fn intersection_membership(i in arb_ideal(3), j in arb_ideal(3), m in prop::collection::vec(0u16..5, 3)) {
            let m = DegreeVector::from(m);
            let meet = i.intersect(&j).unwrap();
            prop_assert_eq!(meet.contains(&m).unwrap(), i.contains(&m).unwrap() && j.contains(&m).unwrap());
        }
    }
}
