//! k-covers, decompositions into one-covers, minimum one-covers of induced
//! subgraphs, and the n-admissible / n̂-admissible degree vectors attached to
//! induced odd cycles and r-clusters.
//!
//! Admissible vectors are stored over the whole graph (zero off their target),
//! so they can be turned into irreducible components directly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{ClusterDescriptor, Graph, VertexSet};
use crate::monomial::{check_len, DegreeVector, Exponent};

/// Default limit on backtracking nodes in [`decompose_into_one_covers`].
pub const DEFAULT_SEARCH_LIMIT: usize = 50_000_000;

/// `a` written as a sum of one-covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub summands: Vec<DegreeVector>,
}

impl CoverCertificate {
    pub fn sum(&self) -> Option<DegreeVector> {
        let (first, rest) = self.summands.split_first()?;
        rest.iter().try_fold(first.clone(), |acc, s| acc.checked_add(s).ok())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AdmissibleTarget {
    Cycle(VertexSet),
    Cluster(ClusterDescriptor),
}

impl AdmissibleTarget {
    pub fn support(&self) -> VertexSet {
        match self {
            AdmissibleTarget::Cycle(v) => *v,
            AdmissibleTarget::Cluster(c) => c.support(),
        }
    }
}

/// How an admissible vector was assembled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `(2,…,2) + b_1 + … + b_{n−2}` with each `b_i` a minimum cover of the cycle.
    Cycle { covers: Vec<VertexSet> },
    /// `d + e + f_1 + … + f_{n−3}`.
    Cluster { d: DegreeVector, e: DegreeVector, fs: Vec<DegreeVector> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleVector {
    pub target: AdmissibleTarget,
    pub n: usize,
    /// Indexed by the whole graph; zero outside the target's support.
    pub vector: DegreeVector,
    pub witness: Witness,
}

impl AdmissibleVector {
    /// The entries on the target's vertices, in vertex order.
    pub fn restricted(&self) -> Vec<Exponent> {
        self.vector.restrict(self.target.support())
    }

    pub fn degree_sum(&self) -> u32 {
        self.vector.total_degree()
    }
}

fn check_vector(g: &Graph, a: &DegreeVector) -> Result<()> {
    check_len(g.vertex_count(), a.len())
}

/// `a_i + a_j ≥ k` on every edge; `a` must be nonzero.
pub fn is_k_cover(g: &Graph, a: &DegreeVector, k: usize) -> Result<bool> {
    is_k_cover_within(g, a, g.all(), k)
}

/// [`is_k_cover`] for the subgraph induced by `set` (only entries on `set` matter).
pub fn is_k_cover_within(g: &Graph, a: &DegreeVector, set: VertexSet, k: usize) -> Result<bool> {
    check_vector(g, a)?;
    g.check_owned(set)?;
    if k == 0 {
        return Err(Error::contract("k-cover requires k ≥ 1"));
    }
    if set.iter().all(|i| a.get(i) == 0) {
        return Err(Error::contract("a k-cover is a nonzero degree vector"));
    }
    Ok(g
        .edges_within(set)
        .all(|(i, j)| a.get(i) as usize + a.get(j) as usize >= k))
}

/// Writes `a` as a sum of `n` one-covers of `g`, if possible.
///
/// Every one-cover dominates the indicator of a minimal vertex cover, so the
/// search picks `n` minimal covers (as a multiset) whose sum fits under `a` and
/// folds the remainder into the first summand. The search is exhaustive, so
/// `None` proves that no decomposition exists.
pub fn decompose_into_one_covers(g: &Graph, a: &DegreeVector, n: usize) -> Result<Option<CoverCertificate>> {
    decompose_into_one_covers_limited(g, a, n, DEFAULT_SEARCH_LIMIT)
}

pub fn decompose_into_one_covers_limited(
    g: &Graph,
    a: &DegreeVector,
    n: usize,
    node_limit: usize,
) -> Result<Option<CoverCertificate>> {
    check_vector(g, a)?;
    if n == 0 {
        return Err(Error::contract("decomposition into one-covers requires n ≥ 1"));
    }
    let len = g.vertex_count();
    if g.edge_count() == 0 {
        // Every nonzero vector is a one-cover: peel off unit vectors.
        if (a.total_degree() as usize) < n {
            return Ok(None);
        }
        let mut rest = a.clone();
        let mut summands = Vec::with_capacity(n);
        for _ in 0..n - 1 {
            let i = rest.support().first().unwrap();
            rest.set(i, rest.get(i) - 1);
            summands.push(DegreeVector::indicator(len, VertexSet::singleton(i)));
        }
        summands.push(rest);
        summands.sort();
        return Ok(Some(CoverCertificate { summands }));
    }
    let covers = g.minimal_vertex_covers()?;
    let mut budget: Vec<i64> = a.as_slice().iter().map(|&e| e as i64).collect();
    // Cheap necessary condition: every edge needs n from its two endpoints.
    if g.edges().iter().any(|&(i, j)| budget[i] + budget[j] < n as i64) {
        return Ok(None);
    }
    let mut chosen = Vec::with_capacity(n);
    let mut nodes = 0usize;
    let found = search(g, &covers, n, 0, &mut budget, &mut chosen, &mut nodes, node_limit)?;
    if !found {
        return Ok(None);
    }
    let mut summands: Vec<DegreeVector> = chosen.iter().map(|&c| DegreeVector::indicator(len, covers[c])).collect();
    let leftover: Vec<Exponent> = budget.iter().map(|&b| b as Exponent).collect();
    summands[0] = summands[0].checked_add(&DegreeVector::from(leftover))?;
    summands.sort();
    Ok(Some(CoverCertificate { summands }))
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &Graph,
    covers: &[VertexSet],
    remaining: usize,
    start: usize,
    budget: &mut [i64],
    chosen: &mut Vec<usize>,
    nodes: &mut usize,
    limit: usize,
) -> Result<bool> {
    if remaining == 0 {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > limit {
        return Err(Error::Capacity { what: "one-cover search nodes", actual: *nodes, limit });
    }
    for ci in start..covers.len() {
        let c = covers[ci];
        if c.iter().any(|v| budget[v] < 1) {
            continue;
        }
        for v in c {
            budget[v] -= 1;
        }
        let feasible = g.edges().iter().all(|&(i, j)| budget[i] + budget[j] >= (remaining - 1) as i64);
        chosen.push(ci);
        if feasible && search(g, covers, remaining - 1, ci, budget, chosen, nodes, limit)? {
            return Ok(true);
        }
        chosen.pop();
        for v in c {
            budget[v] += 1;
        }
    }
    Ok(false)
}

/// Indicator vectors of the minimum vertex covers of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumOneCovers {
    pub covers: Vec<DegreeVector>,
    /// Set when the graph has vertices but no edges; `covers` is then the
    /// single zero vector, which is not a one-cover in the strict sense.
    pub degenerate: bool,
}

pub fn minimum_one_covers(g: &Graph) -> Result<MinimumOneCovers> {
    minimum_one_covers_within(g, g.all())
}

/// Minimum one-covers of the subgraph induced by `set`, indexed by `g`.
pub fn minimum_one_covers_within(g: &Graph, set: VertexSet) -> Result<MinimumOneCovers> {
    let covers = g.minimum_vertex_covers_within(set)?;
    let n = g.vertex_count();
    Ok(MinimumOneCovers {
        degenerate: g.edge_count_within(set) == 0,
        covers: covers.into_iter().map(|c| DegreeVector::indicator(n, c)).collect(),
    })
}

/// Calls `visit` with every multiset of `size` indices into `0..count`
/// (as nondecreasing sequences, in lexicographic order).
fn for_each_multiset(count: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(count: usize, size: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == size {
            visit(cur);
            return;
        }
        for i in start..count {
            cur.push(i);
            rec(count, size, i, cur, visit);
            cur.pop();
        }
    }
    if count == 0 && size > 0 {
        return;
    }
    rec(count, size, 0, &mut Vec::with_capacity(size), &mut visit);
}

/// All n-admissible vectors of an induced odd cycle: `(2,…,2)` plus `n − 2`
/// minimum one-covers of the cycle. Distinct vectors, sorted, one witness each.
pub fn enumerate_n_admissible(cycle: VertexSet, g: &Graph, n: usize) -> Result<Vec<AdmissibleVector>> {
    g.check_owned(cycle)?;
    if !g.is_induced_odd_cycle(cycle) {
        return Err(Error::contract("vertex set does not induce an odd cycle"));
    }
    if n <= 2 {
        return Err(Error::contract("n-admissible vectors are defined for n > 2"));
    }
    let len = g.vertex_count();
    let mins = g.minimum_vertex_covers_within(cycle)?;
    let mut base = DegreeVector::zeros(len);
    for v in cycle {
        base.set(v, 2);
    }
    let mut found: BTreeMap<DegreeVector, Vec<VertexSet>> = BTreeMap::new();
    for_each_multiset(mins.len(), n - 2, |pick| {
        let mut a = base.clone();
        for &p in pick {
            for v in mins[p] {
                a.set(v, a.get(v) + 1);
            }
        }
        found.entry(a).or_insert_with(|| pick.iter().map(|&p| mins[p]).collect());
    });
    Ok(found
        .into_iter()
        .map(|(vector, covers)| AdmissibleVector {
            target: AdmissibleTarget::Cycle(cycle),
            n,
            vector,
            witness: Witness::Cycle { covers },
        })
        .collect())
}

/// The pieces an n̂-admissible vector of a cluster is assembled from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterParts {
    /// 2 on `V ∖ N(Y)`, 3 on `N(Y) ∪ Y`.
    pub d: DegreeVector,
    /// Admissible choices of `e`.
    pub es: Vec<DegreeVector>,
    /// Admissible choices of each `f_i`.
    pub fs: Vec<DegreeVector>,
}

/// `d` and the candidate sets for `e` and `f_i` of a cluster.
pub fn cluster_parts(cluster: &ClusterDescriptor, g: &Graph) -> Result<ClusterParts> {
    if !g.is_cluster(cluster) {
        return Err(Error::contract("not an r-cluster of the graph"));
    }
    let len = g.vertex_count();
    let ny = g.neighbors_unchecked(cluster.ys);
    let rest = cluster.cycle.difference(ny);
    let mut d = DegreeVector::zeros(len);
    for v in cluster.support() {
        d.set(v, if rest.contains(v) { 2 } else { 3 });
    }

    // `e` vanishes on Y ∪ N(Y) and is a minimum cover of G[V ∖ N(Y)];
    // an empty or edgeless region contributes nothing.
    let rest_covers = g.minimum_vertex_covers_within(rest)?;
    let es = rest_covers.iter().map(|&c| DegreeVector::indicator(len, c)).collect();

    // `f` restricts to a minimum cover on V ∖ N(Y) and on every {y} ∪ N(y).
    let mut regions: Vec<(VertexSet, Vec<VertexSet>)> = vec![(rest, rest_covers)];
    for y in cluster.ys {
        let star = g.neighbors_unchecked(VertexSet::singleton(y)).union(VertexSet::singleton(y));
        regions.push((star, g.minimum_vertex_covers_within(star)?));
    }
    let mut partial: Vec<(VertexSet, VertexSet)> = vec![(VertexSet::EMPTY, VertexSet::EMPTY)];
    for (region, covers) in &regions {
        let mut next = Vec::new();
        for &(seen, chosen) in &partial {
            let overlap = seen.intersection(*region);
            for &c in covers {
                // Overlapping regions must agree on their common vertices.
                if chosen.intersection(overlap) == c.intersection(overlap) {
                    next.push((seen.union(*region), chosen.union(c)));
                }
            }
        }
        partial = next;
    }
    let mut fs: Vec<DegreeVector> = partial.into_iter().map(|(_, c)| DegreeVector::indicator(len, c)).collect();
    fs.sort();
    fs.dedup();
    Ok(ClusterParts { d, es, fs })
}

/// All n̂-admissible vectors `c = d + e + f_1 + … + f_{n−3}` of a cluster.
pub fn enumerate_nhat_admissible(cluster: &ClusterDescriptor, g: &Graph, n: usize) -> Result<Vec<AdmissibleVector>> {
    if n <= 2 {
        return Err(Error::contract("n̂-admissible vectors are defined for n > 2"));
    }
    let parts = cluster_parts(cluster, g)?;
    let mut found: BTreeMap<DegreeVector, (DegreeVector, Vec<DegreeVector>)> = BTreeMap::new();
    for e in &parts.es {
        let de = parts.d.checked_add(e)?;
        let mut overflow = false;
        for_each_multiset(parts.fs.len(), n - 3, |pick| {
            let mut c = de.clone();
            for &p in pick {
                match c.checked_add(&parts.fs[p]) {
                    Ok(next) => c = next,
                    Err(_) => overflow = true,
                }
            }
            found
                .entry(c)
                .or_insert_with(|| (e.clone(), pick.iter().map(|&p| parts.fs[p].clone()).collect()));
        });
        if overflow {
            return Err(Error::Overflow);
        }
    }
    Ok(found
        .into_iter()
        .map(|(vector, (e, fs))| AdmissibleVector {
            target: AdmissibleTarget::Cluster(*cluster),
            n,
            vector,
            witness: Witness::Cluster { d: parts.d.clone(), e, fs },
        })
        .collect())
}

/// `Σ c_i < r + k + n((k+1)/2 + r)` for an n̂-admissible `c` of a cluster with
/// `k` cycle vertices and `r` y-vertices. Requires `n > r + 1`.
pub fn check_degree_sum_bound(cluster: &ClusterDescriptor, c: &AdmissibleVector, n: usize) -> Result<bool> {
    let r = cluster.r();
    let k = cluster.cycle_len();
    if n <= r + 1 {
        return Err(Error::contract(format!("degree-sum bound needs n > r + 1 (n = {n}, r = {r})")));
    }
    if c.target != AdmissibleTarget::Cluster(*cluster) || c.n != n {
        return Err(Error::contract("vector is not n̂-admissible for this cluster and n"));
    }
    Ok((c.degree_sum() as usize) < degree_sum_bound(r, k, n))
}

/// The right-hand side `r + k + n((k+1)/2 + r)`.
pub fn degree_sum_bound(r: usize, k: usize, n: usize) -> usize {
    r + k + n * ((k + 1) / 2 + r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_ht, build_odd_cycle, Vertex};
    use crate::monomial::cover_ideal;

    fn k2() -> Graph {
        Graph::new(vec![Vertex::x("a"), Vertex::x("b")], [(0, 1)]).unwrap()
    }

    #[test]
    fn k_cover_checks() {
        let c3 = build_odd_cycle(3).unwrap();
        assert!(is_k_cover(&c3, &[1, 1, 1].into(), 2).unwrap());
        assert!(is_k_cover(&k2(), &[1, 0].into(), 1).unwrap());
        assert!(!is_k_cover(&k2(), &[1, 0].into(), 2).unwrap());
        assert!(is_k_cover(&k2(), &[0, 0].into(), 1).is_err());
        assert!(is_k_cover(&k2(), &[1, 0, 0].into(), 1).is_err());

        let h1 = build_ht(1).unwrap();
        let a = DegreeVector::indicator(6, h1.vertex_set(&["x2", "y1"]).unwrap());
        assert!(!is_k_cover(&h1, &a, 1).unwrap());
    }

    #[test]
    fn one_cover_decompositions() {
        let h1 = build_ht(1).unwrap();
        let ones = DegreeVector::scaled(6, 3);
        let cert = decompose_into_one_covers(&h1, &ones, 3).unwrap().unwrap();
        assert_eq!(cert.summands.len(), 3);
        assert_eq!(cert.sum().unwrap(), ones);

        let c3 = build_odd_cycle(3).unwrap();
        assert!(decompose_into_one_covers(&c3, &[1, 1, 1].into(), 2).unwrap().is_none());

        let a = DegreeVector::indicator(6, h1.vertex_set(&["x1", "x3", "x4", "y1"]).unwrap())
            .checked_add(&DegreeVector::indicator(6, h1.vertex_set(&["x2", "x4", "x5", "y1"]).unwrap()))
            .unwrap();
        let cert = decompose_into_one_covers(&h1, &a, 2).unwrap().unwrap();
        assert_eq!(cert.sum().unwrap(), a);
        for s in &cert.summands {
            assert!(is_k_cover(&h1, s, 1).unwrap());
        }
        assert!(matches!(
            decompose_into_one_covers_limited(&h1, &DegreeVector::scaled(6, 9), 9, 3),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn membership_matches_ideal_power_exhaustively_on_c5() {
        let c5 = build_odd_cycle(5).unwrap();
        let j = cover_ideal(&c5).unwrap();
        for n in 1..=3usize {
            let p = j.power(n).unwrap();
            let bound = n as u16 + 1;
            let mut a = vec![0u16; 5];
            loop {
                let v = DegreeVector::from(a.clone());
                if !v.is_zero() {
                    let cert = decompose_into_one_covers(&c5, &v, n).unwrap();
                    assert_eq!(p.contains(&v).unwrap(), cert.is_some(), "{v} n={n}");
                }
                let mut i = 0;
                while i < 5 && a[i] == bound {
                    a[i] = 0;
                    i += 1;
                }
                if i == 5 {
                    break;
                }
                a[i] += 1;
            }
        }
    }

    #[test]
    fn minimum_covers() {
        let c5 = build_odd_cycle(5).unwrap();
        let m = minimum_one_covers(&c5).unwrap();
        assert_eq!(m.covers.len(), 5);
        assert!(m.covers.iter().all(|c| c.total_degree() == 3));
        assert!(!m.degenerate);

        for t in 1..=3 {
            let g = build_ht(t).unwrap();
            let star = g.vertex_set(&["y1", "x1", "x2", "x3"]).unwrap();
            let m = minimum_one_covers_within(&g, star).unwrap();
            assert_eq!(m.covers, vec![DegreeVector::indicator(g.vertex_count(), g.vertex_set(&["x2", "y1"]).unwrap())]);
            for i in 2..=t {
                let y = g.index_of(&format!("y{i}")).unwrap();
                let star = g.neighbors(VertexSet::singleton(y)).unwrap().union(VertexSet::singleton(y));
                let m = minimum_one_covers_within(&g, star).unwrap();
                assert!(!m.covers.is_empty());
                assert!(m.covers.iter().all(|c| c.total_degree() == 3 && c.get(y) == 1));
            }
        }

        let edgeless = Graph::new(vec![Vertex::x("a")], []).unwrap();
        let m = minimum_one_covers(&edgeless).unwrap();
        assert!(m.degenerate);
        assert_eq!(m.covers, vec![DegreeVector::zeros(1)]);
    }

    #[test]
    fn n_admissible_examples() {
        let c3 = build_odd_cycle(3).unwrap();
        let got: Vec<_> = enumerate_n_admissible(c3.all(), &c3, 3).unwrap().into_iter().map(|a| a.vector).collect();
        assert_eq!(got, vec![[2, 3, 3].into(), [3, 2, 3].into(), [3, 3, 2].into()]);

        let c5 = build_odd_cycle(5).unwrap();
        let got = enumerate_n_admissible(c5.all(), &c5, 3).unwrap();
        assert_eq!(got.len(), 5);
        assert!(got.iter().any(|a| a.vector == [3, 3, 2, 3, 2].into()));

        for k in [3usize, 5, 7, 9] {
            let g = build_odd_cycle(k).unwrap();
            for a in enumerate_n_admissible(g.all(), &g, 4).unwrap() {
                assert_eq!(a.degree_sum() as usize, 2 * k + 2 * (k + 1) / 2);
            }
        }
        let h1 = build_ht(1).unwrap();
        assert!(enumerate_n_admissible(h1.vertex_set(&["x1", "x2", "x3"]).unwrap(), &h1, 3).is_err());
        assert!(enumerate_n_admissible(c3.all(), &c3, 2).is_err());
    }

    #[test]
    fn nhat_for_h1() {
        let h1 = build_ht(1).unwrap();
        let cluster = h1.r_clusters(1).unwrap()[0];
        let rest = h1.vertex_set(&["x4", "x5"]).unwrap();
        let got = enumerate_nhat_admissible(&cluster, &h1, 3).unwrap();
        assert_eq!(got.len(), 2);
        for a in &got {
            let Witness::Cluster { d, e, fs } = &a.witness else { panic!() };
            assert!(fs.is_empty());
            assert!(e.support().is_subset(rest));
            assert_eq!(e.total_degree(), 1);
            assert_eq!(&d.checked_add(e).unwrap(), &a.vector);
            assert!(check_degree_sum_bound(&cluster, a, 3).unwrap());
            assert!(a.degree_sum() < 18);
        }
        assert!(check_degree_sum_bound(&cluster, &got[0], 2).is_err());
        assert!(enumerate_nhat_admissible(&cluster, &h1, 2).is_err());
        let bogus = ClusterDescriptor { cycle: h1.vertex_set(&["x1", "x2", "y1"]).unwrap(), ys: VertexSet::EMPTY };
        assert!(enumerate_nhat_admissible(&bogus, &h1, 3).is_err());
    }
}
