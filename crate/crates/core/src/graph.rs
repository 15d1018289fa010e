//! Simple graphs with x/y vertex kinds, the `H_t` family, and the exhaustive
//! enumerations (vertex covers, colorings, induced odd cycles, clusters) the
//! algebra modules are built on.
//!
//! Vertex sets are bitmasks over the graph's vertex order, so a graph holds at
//! most [`MAX_VERTICES`] vertices. Enumerations additionally refuse graphs larger
//! than the graph's configurable vertex cap (default [`DEFAULT_VERTEX_CAP`]).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard representation limit (vertex sets are `u64` bitmasks).
pub const MAX_VERTICES: usize = 64;

/// Default cap on vertex count for the exhaustive enumerations.
pub const DEFAULT_VERTEX_CAP: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub name: String,
    pub kind: VertexKind,
}

impl Vertex {
    pub fn x(name: impl Into<String>) -> Self {
        Vertex { name: name.into(), kind: VertexKind::X }
    }

    pub fn y(name: impl Into<String>) -> Self {
        Vertex { name: name.into(), kind: VertexKind::Y }
    }
}

/// A subset of a graph's vertices, stored as a bitmask over the vertex order.
///
/// Iteration yields indices in increasing order; the `Ord` impl is the
/// lexicographic order on those index sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < MAX_VERTICES, "vertex index {i} out of range");
            bits |= 1 << i;
        }
        VertexSet(bits)
    }

    pub fn singleton(i: usize) -> Self {
        VertexSet::from_indices([i])
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VERTICES && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_VERTICES);
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        if i < MAX_VERTICES {
            self.0 &= !(1 << i);
        }
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::from_indices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;

    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// An induced odd cycle together with `r` y-vertices whose neighborhoods lie on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterDescriptor {
    pub cycle: VertexSet,
    pub ys: VertexSet,
}

impl ClusterDescriptor {
    pub fn r(&self) -> usize {
        self.ys.len()
    }

    /// Number of cycle vertices (`k`).
    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    pub fn support(&self) -> VertexSet {
        self.cycle.union(self.ys)
    }
}

/// Simple undirected graph with a fixed vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<Vertex>,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
    vertex_cap: usize,
}

impl Graph {
    /// Builds a graph from vertices and index pairs.
    ///
    /// Rejects self-loops, duplicate edges, undeclared endpoints and duplicate names.
    pub fn new(vertices: Vec<Vertex>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if n > MAX_VERTICES {
            return Err(Error::Capacity { what: "vertex count", actual: n, limit: MAX_VERTICES });
        }
        let mut names = HashSet::new();
        for v in &vertices {
            if !names.insert(v.name.as_str()) {
                return Err(Error::contract(format!("duplicate vertex name {:?}", v.name)));
            }
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::contract(format!("edge ({a}, {b}) references an undeclared vertex")));
            }
            if a == b {
                return Err(Error::contract(format!("self-loop at {:?}", vertices[a].name)));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(Error::contract(format!(
                    "duplicate edge {{{}, {}}}",
                    vertices[a].name, vertices[b].name
                )));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        Ok(Graph { vertices, adj, edges: list, vertex_cap: DEFAULT_VERTEX_CAP })
    }

    /// Builds a graph from named edges; vertices must all be declared.
    pub fn from_named_edges<S: AsRef<str>>(vertices: Vec<Vertex>, edges: &[(S, S)]) -> Result<Self> {
        let index = |name: &str| {
            vertices
                .iter()
                .position(|v| v.name == name)
                .ok_or_else(|| Error::contract(format!("edge references undeclared vertex {name:?}")))
        };
        let pairs = edges
            .iter()
            .map(|(a, b)| Ok((index(a.as_ref())?, index(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(vertices, pairs)
    }

    pub fn with_vertex_cap(mut self, cap: usize) -> Self {
        self.vertex_cap = cap.min(MAX_VERTICES);
        self
    }

    pub fn vertex_cap(&self) -> usize {
        self.vertex_cap
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn all(&self) -> VertexSet {
        let n = self.vertices.len();
        VertexSet(if n == MAX_VERTICES { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Resolves vertex names to a set, rejecting unknown names.
    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names
            .iter()
            .map(|n| {
                self.index_of(n.as_ref())
                    .ok_or_else(|| Error::contract(format!("unknown vertex {:?}", n.as_ref())))
            })
            .collect()
    }

    pub fn names(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|i| self.vertices[i].name.as_str()).collect()
    }

    pub fn kind_set(&self, kind: VertexKind) -> VertexSet {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.kind == kind)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn y_vertices(&self) -> VertexSet {
        self.kind_set(VertexKind::Y)
    }

    pub(crate) fn check_owned(&self, set: VertexSet) -> Result<()> {
        if set.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::contract("vertex set contains vertices foreign to the graph"))
        }
    }

    pub(crate) fn check_cap(&self) -> Result<()> {
        if self.vertex_count() > self.vertex_cap {
            Err(Error::Capacity {
                what: "vertex count",
                actual: self.vertex_count(),
                limit: self.vertex_cap,
            })
        } else {
            Ok(())
        }
    }

    /// Edges with both endpoints in `set`.
    pub fn edges_within(&self, set: VertexSet) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges
            .iter()
            .copied()
            .filter(move |&(a, b)| set.contains(a) && set.contains(b))
    }

    pub fn edge_count_within(&self, set: VertexSet) -> usize {
        set.iter().map(|v| (self.adj[v] & set.0).count_ones() as usize).sum::<usize>() / 2
    }

    /// The subgraph induced by `set`, with the inherited vertex order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph> {
        self.check_owned(set)?;
        let keep = set.to_vec();
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            position[old] = new;
        }
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let edges = self.edges_within(set).map(|(a, b)| (position[a], position[b]));
        Ok(Graph::new(vertices, edges)?.with_vertex_cap(self.vertex_cap))
    }

    /// `N(a)`: vertices outside `a` adjacent to some vertex of `a`.
    pub fn neighbors(&self, a: VertexSet) -> Result<VertexSet> {
        self.check_owned(a)?;
        Ok(self.neighbors_unchecked(a))
    }

    pub(crate) fn neighbors_unchecked(&self, a: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in a {
            out |= self.adj[v];
        }
        VertexSet(out & !a.0)
    }

    pub fn is_vertex_cover(&self, cover: VertexSet) -> bool {
        self.edges.iter().all(|&(a, b)| cover.contains(a) || cover.contains(b))
    }

    /// All inclusion-minimal vertex covers, in canonical order.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        self.check_cap()?;
        Ok(minimal_covers_within(&self.adj, self.all()))
    }

    /// All inclusion-minimal vertex covers of the subgraph induced by `set`,
    /// expressed in this graph's indexing.
    pub fn minimal_vertex_covers_within(&self, set: VertexSet) -> Result<Vec<VertexSet>> {
        self.check_owned(set)?;
        self.check_cap()?;
        Ok(minimal_covers_within(&self.adj, set))
    }

    pub fn minimum_vertex_cover_size(&self) -> Result<usize> {
        Ok(self.minimum_vertex_covers_within(self.all())?[0].len())
    }

    /// All minimum-cardinality vertex covers of the subgraph induced by `set`.
    /// An edgeless subgraph has the single minimum cover `∅`.
    pub fn minimum_vertex_covers_within(&self, set: VertexSet) -> Result<Vec<VertexSet>> {
        let covers = self.minimal_vertex_covers_within(set)?;
        let min = covers.iter().map(|c| c.len()).min().unwrap_or(0);
        Ok(covers.into_iter().filter(|c| c.len() == min).collect())
    }

    /// Exact chromatic number with one witness coloring (`colors[v]` in `0..χ`).
    pub fn chromatic_number(&self) -> Result<(usize, Vec<usize>)> {
        self.check_cap()?;
        let n = self.vertex_count();
        if n == 0 {
            return Ok((0, Vec::new()));
        }
        // Color in decreasing-degree order so conflicts surface early.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.adj[v].count_ones()));
        for k in 1..=n {
            let mut colors = vec![usize::MAX; n];
            if self.color_rec(&order, 0, k, 0, &mut colors) {
                return Ok((k, colors));
            }
        }
        unreachable!("every graph is n-colorable")
    }

    fn color_rec(&self, order: &[usize], pos: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
        let Some(&v) = order.get(pos) else {
            return true;
        };
        // New colors are interchangeable: only try one unused color.
        for c in 0..k.min(used + 1) {
            let clash = VertexSet(self.adj[v]).iter().any(|u| colors[u] == c);
            if clash {
                continue;
            }
            colors[v] = c;
            if self.color_rec(order, pos + 1, k, used.max(c + 1), colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }

    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.vertex_count() && self.edges.iter().all(|&(a, b)| colors[a] != colors[b])
    }

    /// True iff the subgraph induced by `set` is a single cycle of odd length ≥ 3.
    pub fn is_induced_odd_cycle(&self, set: VertexSet) -> bool {
        let k = set.len();
        if k < 3 || k % 2 == 0 {
            return false;
        }
        if set.iter().any(|v| (self.adj[v] & set.0).count_ones() != 2) {
            return false;
        }
        // 2-regular: connected iff a walk from one vertex reaches all of them.
        let start = set.first().unwrap();
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(VertexSet(self.adj[v] & set.0));
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == set
    }

    /// Every vertex set inducing a chordless odd cycle, in canonical order.
    pub fn induced_odd_cycles(&self) -> Result<Vec<VertexSet>> {
        self.check_cap()?;
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            // Cycles whose smallest vertex is `s`, grown as chordless paths from `s`.
            let allowed = self.all().0 & !((1u64 << s) | ((1u64 << s) - 1));
            let mut path = vec![s];
            for p1 in VertexSet(self.adj[s] & allowed) {
                path.push(p1);
                self.grow_chordless(&mut path, allowed, &mut out);
                path.pop();
            }
        }
        out.sort();
        Ok(out)
    }

    fn grow_chordless(&self, path: &mut Vec<usize>, allowed: u64, out: &mut Vec<VertexSet>) {
        let s = path[0];
        let last = *path.last().unwrap();
        let on_path = path.iter().fold(0u64, |acc, &v| acc | 1 << v);
        // Interior vertices other than the tip may not touch the new vertex.
        let interior = on_path & !(1u64 << last) & !(1u64 << s);
        for w in VertexSet(self.adj[last] & allowed & !on_path) {
            if self.adj[w] & interior != 0 {
                continue;
            }
            if self.adj[w] >> s & 1 == 1 {
                // Closes the cycle; count each cycle once by orientation.
                if path.len() >= 2 && path[1] < w && (path.len() + 1) % 2 == 1 {
                    out.push(VertexSet(on_path | 1 << w));
                }
            } else {
                path.push(w);
                self.grow_chordless(path, allowed, out);
                path.pop();
            }
        }
    }

    /// All r-clusters: an induced odd cycle `V` with `r` y-vertices `Y` outside
    /// it and `N(Y) ⊆ V`. Returns an empty list if fewer than `r` y-vertices exist.
    pub fn r_clusters(&self, r: usize) -> Result<Vec<ClusterDescriptor>> {
        if r == 0 {
            return Err(Error::contract("cluster size r must be positive"));
        }
        let cycles = self.induced_odd_cycles()?;
        Ok(self.r_clusters_from(&cycles, r))
    }

    pub(crate) fn r_clusters_from(&self, cycles: &[VertexSet], r: usize) -> Vec<ClusterDescriptor> {
        let ys = self.y_vertices().to_vec();
        let mut out = Vec::new();
        if r > ys.len() {
            return out;
        }
        for combo in combinations(&ys, r) {
            let yset: VertexSet = combo.iter().copied().collect();
            let nbrs = self.neighbors_unchecked(yset);
            for &cycle in cycles {
                if nbrs.is_subset(cycle) && cycle.is_disjoint(yset) {
                    out.push(ClusterDescriptor { cycle, ys: yset });
                }
            }
        }
        out.sort();
        out
    }

    /// True iff `c` satisfies the r-cluster conditions in this graph.
    pub fn is_cluster(&self, c: &ClusterDescriptor) -> bool {
        c.r() >= 1
            && c.ys.is_subset(self.y_vertices())
            && c.ys.is_disjoint(c.cycle)
            && self.is_induced_odd_cycle(c.cycle)
            && self.neighbors_unchecked(c.ys).is_subset(c.cycle)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph on {} vertices, {} edges", self.vertex_count(), self.edge_count())
    }
}

/// All `k`-element subsets of `items`, in lexicographic order.
pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Branch on an uncovered edge `{u, v}`: either `u` joins the cover, or `u` is
/// excluded and all of its neighbors must join. Leaves are vertex covers; the
/// non-minimal ones are filtered out afterwards.
fn minimal_covers_within(adj: &[u64], set: VertexSet) -> Vec<VertexSet> {
    fn rec(adj: &[u64], set: u64, chosen: u64, excluded: u64, out: &mut Vec<VertexSet>) {
        let uncovered = VertexSet(set & !chosen)
            .iter()
            .map(|u| (u, adj[u] & set & !chosen))
            .find(|&(_, nb)| nb != 0);
        let Some((u, _)) = uncovered else {
            out.push(VertexSet(chosen));
            return;
        };
        rec(adj, set, chosen | 1 << u, excluded, out);
        let forced = adj[u] & set;
        if forced & excluded == 0 {
            rec(adj, set, chosen | forced, excluded | 1 << u, out);
        }
    }
    let mut leaves = Vec::new();
    rec(adj, set.0, 0, 0, &mut leaves);
    let mut out: Vec<VertexSet> = leaves
        .into_iter()
        .filter(|c| c.iter().all(|v| adj[v] & set.0 & !c.0 != 0))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `H_t`: an odd cycle on `x_1, …` (a 5-cycle when `t = 1`, else a
/// `(4t−1)`-cycle) with `y_1 ~ {x_1, x_2, x_3}` and, for `i > 1`,
/// `y_i ~ {x_{4i−4}, …, x_{4i−1}}`.
pub fn build_ht(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::contract("H_t requires t ≥ 1"));
    }
    let cycle_len = if t == 1 { 5 } else { 4 * t - 1 };
    if cycle_len + t > MAX_VERTICES {
        return Err(Error::Capacity { what: "vertex count", actual: cycle_len + t, limit: MAX_VERTICES });
    }
    let mut vertices: Vec<Vertex> = (1..=cycle_len).map(|i| Vertex::x(format!("x{i}"))).collect();
    vertices.extend((1..=t).map(|i| Vertex::y(format!("y{i}"))));
    let x = |i: usize| i - 1;
    let y = |i: usize| cycle_len + i - 1;
    let mut edges: Vec<(usize, usize)> = (0..cycle_len).map(|i| (i, (i + 1) % cycle_len)).collect();
    edges.extend([1, 2, 3].map(|j| (y(1), x(j))));
    for i in 2..=t {
        edges.extend((4 * i - 4..=4 * i - 1).map(|j| (y(i), x(j))));
    }
    Graph::new(vertices, edges)
}

/// The odd cycle `C_k` on x-vertices `x_1, …, x_k`.
pub fn build_odd_cycle(k: usize) -> Result<Graph> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::contract(format!("odd cycle length must be odd and ≥ 3, got {k}")));
    }
    if k > MAX_VERTICES {
        return Err(Error::Capacity { what: "vertex count", actual: k, limit: MAX_VERTICES });
    }
    let vertices = (1..=k).map(|i| Vertex::x(format!("x{i}"))).collect();
    Graph::new(vertices, (0..k).map(|i| (i, (i + 1) % k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    /// Brute force over all subsets: is `c` a vertex cover of `g[within]`?
    fn brute_covers(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
        let idx = within.to_vec();
        let mut all = Vec::new();
        for mask in 0u64..1 << idx.len() {
            let c: VertexSet = idx.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
            if g.edges_within(within).all(|(a, b)| c.contains(a) || c.contains(b)) {
                all.push(c);
            }
        }
        all
    }

    #[test]
    fn ht_shapes() {
        let h1 = build_ht(1).unwrap();
        assert_eq!((h1.vertex_count(), h1.edge_count()), (6, 8));
        let h2 = build_ht(2).unwrap();
        assert_eq!((h2.vertex_count(), h2.edge_count()), (9, 14));
        let y2 = set(&h2, &["y2"]);
        assert_eq!(h2.neighbors(y2).unwrap(), set(&h2, &["x4", "x5", "x6", "x7"]));
        let h4 = build_ht(4).unwrap();
        assert_eq!(h4.vertex_count(), 19);
        assert_eq!(h4.neighbors(set(&h4, &["y4"])).unwrap(), set(&h4, &["x12", "x13", "x14", "x15"]));
        for t in 1..=5 {
            let g = build_ht(t).unwrap();
            let expected_edges = if t == 1 { 8 } else { (4 * t - 1) + 3 + 4 * (t - 1) };
            assert_eq!(g.edge_count(), expected_edges);
            assert_eq!(g.vertex_count(), if t == 1 { 6 } else { 5 * t - 1 });
        }
        assert!(build_ht(0).is_err());
    }

    #[test]
    fn odd_cycle_builder() {
        for k in [3, 5, 7] {
            let g = build_odd_cycle(k).unwrap();
            assert_eq!((g.vertex_count(), g.edge_count()), (k, k));
            assert!(g.is_induced_odd_cycle(g.all()));
        }
        assert!(build_odd_cycle(4).is_err());
        assert!(build_odd_cycle(1).is_err());
    }

    #[test]
    fn graph_rejects_bad_input() {
        let v = vec![Vertex::x("a"), Vertex::x("b")];
        assert!(Graph::new(v.clone(), [(0, 0)]).is_err());
        assert!(Graph::new(v.clone(), [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(v.clone(), [(0, 2)]).is_err());
        assert!(Graph::new(vec![Vertex::x("a"), Vertex::y("a")], []).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let h1 = build_ht(1).unwrap();
        let tri = h1.induced_subgraph(set(&h1, &["x1", "x2", "y1"])).unwrap();
        assert_eq!(tri.edge_count(), 3);
        assert!(tri.is_induced_odd_cycle(tri.all()));
        let pair = h1.induced_subgraph(set(&h1, &["x1", "x3"])).unwrap();
        assert_eq!((pair.vertex_count(), pair.edge_count()), (2, 0));

        let h2 = build_ht(2).unwrap();
        let s = set(&h2, &["y1", "x1", "x7", "x6", "x5", "x4", "x3"]);
        let sub = h2.induced_subgraph(s).unwrap();
        assert_eq!(sub.edge_count(), 7);
        // Exhaustive chord check: the only adjacent pairs are the seven cycle edges.
        let expected = [("y1", "x1"), ("x1", "x7"), ("x7", "x6"), ("x6", "x5"), ("x5", "x4"), ("x4", "x3"), ("x3", "y1")];
        for a in s {
            for b in s {
                if a < b {
                    let (na, nb) = (h2.vertex(a).name.as_str(), h2.vertex(b).name.as_str());
                    let is_cycle_edge = expected.iter().any(|&(p, q)| (p, q) == (na, nb) || (q, p) == (na, nb));
                    assert_eq!(h2.adjacent(a, b), is_cycle_edge, "{na} {nb}");
                }
            }
        }
        assert!(h1.induced_subgraph(VertexSet::singleton(40)).is_err());
    }

    #[test]
    fn neighbor_sets() {
        let h1 = build_ht(1).unwrap();
        assert_eq!(h1.neighbors(set(&h1, &["y1"])).unwrap(), set(&h1, &["x1", "x2", "x3"]));
        assert_eq!(h1.neighbors(h1.all()).unwrap(), VertexSet::EMPTY);
        assert!(h1.neighbors(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn minimal_covers_match_brute_force() {
        let k2 = Graph::new(vec![Vertex::x("a"), Vertex::x("b")], [(0, 1)]).unwrap();
        assert_eq!(k2.minimal_vertex_covers().unwrap(), vec![VertexSet::singleton(0), VertexSet::singleton(1)]);

        let graphs = [build_odd_cycle(5).unwrap(), build_ht(1).unwrap(), build_ht(2).unwrap()];
        for g in &graphs {
            let covers = brute_covers(g, g.all());
            let mut minimal: Vec<VertexSet> = covers
                .iter()
                .copied()
                .filter(|c| !covers.iter().any(|d| d != c && d.is_subset(*c)))
                .collect();
            minimal.sort();
            assert_eq!(g.minimal_vertex_covers().unwrap(), minimal);
        }

        let c5 = &graphs[0];
        let covers = c5.minimal_vertex_covers().unwrap();
        assert_eq!(covers.len(), 5);
        assert!(covers.iter().all(|c| c.len() == 3));
        assert!(covers.contains(&set(c5, &["x1", "x2", "x4"])));

        let h1 = &graphs[1];
        assert_eq!(h1.minimum_vertex_cover_size().unwrap(), 4);
        let min = h1.minimum_vertex_covers_within(h1.all()).unwrap();
        assert!(min.contains(&set(h1, &["x1", "x3", "x4", "y1"])));
    }

    #[test]
    fn minimum_cover_sizes() {
        for k in [3, 5, 7, 9] {
            assert_eq!(build_odd_cycle(k).unwrap().minimum_vertex_cover_size().unwrap(), (k + 1) / 2);
        }
        let edgeless = Graph::new(vec![Vertex::x("a"), Vertex::x("b")], []).unwrap();
        assert_eq!(edgeless.minimum_vertex_cover_size().unwrap(), 0);
        for t in 1..=3 {
            let g = build_ht(t).unwrap();
            let star = set(&g, &["y1", "x1", "x2", "x3"]);
            assert_eq!(g.minimum_vertex_covers_within(star).unwrap(), vec![set(&g, &["x2", "y1"])]);
        }
    }

    #[test]
    fn capacity_guard() {
        let g = build_odd_cycle(9).unwrap().with_vertex_cap(8);
        assert!(matches!(g.minimal_vertex_covers(), Err(Error::Capacity { .. })));
        assert!(matches!(g.chromatic_number(), Err(Error::Capacity { .. })));
        assert!(matches!(g.induced_odd_cycles(), Err(Error::Capacity { .. })));
    }

    #[test]
    fn chromatic_numbers() {
        for t in 1..=4 {
            let g = build_ht(t).unwrap();
            let (chi, colors) = g.chromatic_number().unwrap();
            assert_eq!(chi, 3);
            assert!(g.is_proper_coloring(&colors));
        }
        let edgeless = Graph::new(vec![Vertex::x("a"), Vertex::x("b")], []).unwrap();
        assert_eq!(edgeless.chromatic_number().unwrap().0, 1);
        let k2 = Graph::new(vec![Vertex::x("a"), Vertex::x("b")], [(0, 1)]).unwrap();
        assert_eq!(k2.chromatic_number().unwrap().0, 2);
    }

    fn brute_odd_cycles(g: &Graph) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = (1u64..1 << g.vertex_count())
            .map(VertexSet::from_bits)
            .filter(|&s| {
                // Definitional check: |S| odd ≥ 3, |E(S)| = |S|, 2-regular and connected.
                s.len() >= 3 && s.len() % 2 == 1 && g.edge_count_within(s) == s.len() && g.is_induced_odd_cycle(s)
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn induced_odd_cycles_match_brute_force() {
        let c5 = build_odd_cycle(5).unwrap();
        assert_eq!(c5.induced_odd_cycles().unwrap(), vec![c5.all()]);

        let h1 = build_ht(1).unwrap();
        let mut expected = vec![
            set(&h1, &["x1", "x2", "x3", "x4", "x5"]),
            set(&h1, &["x1", "x2", "y1"]),
            set(&h1, &["x2", "x3", "y1"]),
            set(&h1, &["x1", "x3", "x4", "x5", "y1"]),
        ];
        expected.sort();
        assert_eq!(h1.induced_odd_cycles().unwrap(), expected);
        assert_eq!(brute_odd_cycles(&h1), expected);

        let h2 = build_ht(2).unwrap();
        let mut expected = vec![
            set(&h2, &["x1", "x2", "x3", "x4", "x5", "x6", "x7"]),
            set(&h2, &["y1", "x1", "x7", "x6", "x5", "x4", "x3"]),
            set(&h2, &["x1", "x2", "y1"]),
            set(&h2, &["x2", "x3", "y1"]),
            set(&h2, &["x4", "x5", "y2"]),
            set(&h2, &["x5", "x6", "y2"]),
            set(&h2, &["x6", "x7", "y2"]),
        ];
        expected.sort();
        assert_eq!(h2.induced_odd_cycles().unwrap(), expected);
        assert_eq!(brute_odd_cycles(&h2), expected);

        let h3 = build_ht(3).unwrap();
        assert_eq!(h3.induced_odd_cycles().unwrap(), brute_odd_cycles(&h3));
    }

    #[test]
    fn clusters() {
        let h1 = build_ht(1).unwrap();
        let c = h1.r_clusters(1).unwrap();
        assert_eq!(c, vec![ClusterDescriptor { cycle: set(&h1, &["x1", "x2", "x3", "x4", "x5"]), ys: set(&h1, &["y1"]) }]);
        assert!(h1.r_clusters(2).unwrap().is_empty());
        assert!(h1.r_clusters(0).is_err());

        let h2 = build_ht(2).unwrap();
        let c = h2.r_clusters(2).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].cycle, set(&h2, &["x1", "x2", "x3", "x4", "x5", "x6", "x7"]));
        assert_eq!(h2.r_clusters(1).unwrap().len(), 3);

        let h4 = build_ht(4).unwrap();
        let want = ClusterDescriptor {
            cycle: set(&h4, &["x1", "x2", "x3", "x4", "y2", "x7", "x8", "y3", "x11", "x12", "x13", "x14", "x15"]),
            ys: set(&h4, &["y1", "y4"]),
        };
        let found = h4.r_clusters(2).unwrap();
        assert!(found.contains(&want));
        for c in &found {
            assert!(h4.is_cluster(c));
            assert_eq!(c.r(), 2);
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let g = build_ht(3).unwrap();
        assert_eq!(g.induced_odd_cycles().unwrap(), g.induced_odd_cycles().unwrap());
        assert_eq!(g.minimal_vertex_covers().unwrap(), g.minimal_vertex_covers().unwrap());
        assert_eq!(g.r_clusters(2).unwrap(), g.r_clusters(2).unwrap());
    }
}
