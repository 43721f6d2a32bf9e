//! Signed multigraphs and weighted simple graphs with the structural
//! operations the dichromatic recursions need: loop/multi-edge
//! simplification, edge doubling, deletion/contraction, forest and
//! spanning-tree enumeration, and Tutte activity classification.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("loop edge at vertex {0} not allowed in a weighted graph")]
    LoopNotAllowed(usize),
    #[error("duplicate edge between {0} and {1} in a weighted graph")]
    DuplicateEdge(usize, usize),
    #[error("unknown edge id {0}")]
    UnknownEdge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("edge set is not a spanning tree: {0}")]
    NotASpanningTree(String),
    #[error("edge set is not a forest: {0}")]
    NotAForest(String),
    #[error("edge order is not a permutation of the edge ids")]
    InvalidOrder,
    #[error("edge sign must be +1 or -1, got {0}")]
    InvalidSign(i64),
}

// ---------------------------------------------------------------------------
// Signed multigraphs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn of(n: i64) -> Result<Sign, GraphError> {
        match n {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(GraphError::InvalidSign(other)),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = i64::deserialize(d)?;
        Sign::of(n).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedEdge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// Multigraph with signed edges; loops and parallel edges allowed.
/// Edge identity is positional, so edge orderings are well defined.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSigned", into = "RawSigned")]
pub struct SignedMultigraph {
    vertices: usize,
    edges: Vec<SignedEdge>,
}

#[derive(Serialize, Deserialize)]
struct RawSigned {
    vertices: usize,
    edges: Vec<SignedEdge>,
}

impl TryFrom<RawSigned> for SignedMultigraph {
    type Error = GraphError;
    fn try_from(raw: RawSigned) -> Result<Self, GraphError> {
        SignedMultigraph::new(raw.vertices, raw.edges)
    }
}

impl From<SignedMultigraph> for RawSigned {
    fn from(g: SignedMultigraph) -> Self {
        RawSigned {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

impl SignedMultigraph {
    pub fn new(vertices: usize, edges: Vec<SignedEdge>) -> Result<Self, GraphError> {
        for e in &edges {
            for &x in &[e.u, e.v] {
                if x >= vertices {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        vertices,
                    });
                }
            }
        }
        Ok(Self { vertices, edges })
    }

    pub fn edgeless(vertices: usize) -> Self {
        Self {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[SignedEdge] {
        &self.edges
    }

    /// Component count.
    pub fn p0(&self) -> usize {
        component_count(self.vertices, self.edges.iter().map(|e| (e.u, e.v)))
    }

    /// Cyclomatic number `|E| - |V| + p0`.
    pub fn p1(&self) -> usize {
        self.edges.len() + self.p0() - self.vertices
    }

    /// Replaces every edge by two parallel copies of the same sign; the
    /// copies of input edge `k` sit at positions `2k` and `2k+1`.
    pub fn double(&self) -> SignedMultigraph {
        let mut edges = Vec::with_capacity(self.edges.len() * 2);
        for e in &self.edges {
            edges.push(*e);
            edges.push(*e);
        }
        SignedMultigraph {
            vertices: self.vertices,
            edges,
        }
    }

    /// Drops loops and replaces each parallel class by a single edge whose
    /// weight is the sum of signs; weight-0 classes disappear.
    pub fn simplify_to_weighted(&self) -> WeightedGraph {
        let mut weights: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for e in &self.edges {
            if e.u == e.v {
                continue;
            }
            let key = (e.u.min(e.v), e.u.max(e.v));
            *weights.entry(key).or_insert(0) += e.sign.value();
        }
        let edges = weights
            .into_iter()
            .filter(|&(_, w)| w != 0)
            .map(|((u, v), w)| (u, v, w))
            .collect();
        WeightedGraph::new(self.vertices, edges).expect("simplification preserves validity")
    }

    pub fn disjoint_union(&self, other: &SignedMultigraph) -> SignedMultigraph {
        let shift = self.vertices;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| SignedEdge {
            u: e.u + shift,
            v: e.v + shift,
            sign: e.sign,
        }));
        SignedMultigraph {
            vertices: self.vertices + other.vertices,
            edges,
        }
    }
}

// ---------------------------------------------------------------------------
// Weighted simple graphs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub weight: i64,
}

/// Simple graph (no loops, no parallel edges) with nonzero integer edge
/// weights. Weight-0 edges are dropped on construction. Endpoints are
/// stored with `u < v`; edge ids are positions in the input sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWeighted", into = "RawWeighted")]
pub struct WeightedGraph {
    vertices: usize,
    edges: Vec<WeightedEdge>,
}

#[derive(Serialize, Deserialize)]
struct RawWeighted {
    vertices: usize,
    edges: Vec<WeightedEdge>,
}

impl TryFrom<RawWeighted> for WeightedGraph {
    type Error = GraphError;
    fn try_from(raw: RawWeighted) -> Result<Self, GraphError> {
        WeightedGraph::new(
            raw.vertices,
            raw.edges
                .into_iter()
                .map(|e| (e.u, e.v, e.weight))
                .collect(),
        )
    }
}

impl From<WeightedGraph> for RawWeighted {
    fn from(g: WeightedGraph) -> Self {
        RawWeighted {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

impl WeightedGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize, i64)>) -> Result<Self, GraphError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        for (u, v, weight) in edges {
            for &x in &[u, v] {
                if x >= vertices {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        vertices,
                    });
                }
            }
            if u == v {
                return Err(GraphError::LoopNotAllowed(u));
            }
            let (u, v) = (u.min(v), u.max(v));
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            if weight != 0 {
                out.push(WeightedEdge { u, v, weight });
            }
        }
        Ok(Self {
            vertices,
            edges: out,
        })
    }

    pub fn edgeless(vertices: usize) -> Self {
        Self {
            vertices,
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<WeightedEdge, GraphError> {
        self.edges
            .get(id)
            .copied()
            .ok_or(GraphError::UnknownEdge(id))
    }

    pub fn p0(&self) -> usize {
        component_count(self.vertices, self.edges.iter().map(|e| (e.u, e.v)))
    }

    pub fn p1(&self) -> usize {
        self.edges.len() + self.p0() - self.vertices
    }

    /// Deletion and contraction of edge `e`, in that order. Contraction
    /// merges the endpoints into the smaller id and compacts vertex ids;
    /// parallel classes created by the merge are summed and zero-weight
    /// results dropped.
    pub fn reduce(&self, e: usize) -> Result<(WeightedGraph, WeightedGraph), GraphError> {
        let WeightedEdge { u, v, .. } = self.edge(e)?;

        let deleted_edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, f)| (f.u, f.v, f.weight))
            .collect();
        let deleted = WeightedGraph::new(self.vertices, deleted_edges)?;

        // v merges into u (u < v); ids above v shift down by one.
        let remap = |x: usize| {
            if x == v {
                u
            } else if x > v {
                x - 1
            } else {
                x
            }
        };
        let mut weights: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (i, f) in self.edges.iter().enumerate() {
            if i == e {
                continue;
            }
            let (a, b) = (remap(f.u), remap(f.v));
            if a == b {
                continue;
            }
            *weights.entry((a.min(b), a.max(b))).or_insert(0) += f.weight;
        }
        let contracted_edges = weights
            .into_iter()
            .filter(|&(_, w)| w != 0)
            .map(|((a, b), w)| (a, b, w))
            .collect();
        let contracted = WeightedGraph::new(self.vertices - 1, contracted_edges)?;
        Ok((deleted, contracted))
    }

    /// All acyclic edge subsets including the empty one, as sorted id
    /// sequences in lexicographic order.
    pub fn forests(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut uf = UnionFind::new(self.vertices);
        let mut current = Vec::new();
        self.forest_rec(0, &mut uf, &mut current, &mut out);
        out
    }

    fn forest_rec(
        &self,
        start: usize,
        uf: &mut UnionFind,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        out.push(current.clone());
        for e in start..self.edges.len() {
            let WeightedEdge { u, v, .. } = self.edges[e];
            if let Some(token) = uf.union(u, v) {
                current.push(e);
                self.forest_rec(e + 1, uf, current, out);
                current.pop();
                uf.undo(token);
            }
        }
    }

    /// All spanning trees as sorted id sequences in lexicographic order.
    /// Errors when the graph is not connected.
    pub fn spanning_trees(&self) -> Result<Vec<Vec<usize>>, GraphError> {
        if self.p0() != 1 {
            return Err(GraphError::Disconnected);
        }
        let needed = self.vertices - 1;
        let mut out = Vec::new();
        let mut uf = UnionFind::new(self.vertices);
        let mut current = Vec::new();
        self.tree_rec(0, needed, &mut uf, &mut current, &mut out);
        Ok(out)
    }

    fn tree_rec(
        &self,
        start: usize,
        needed: usize,
        uf: &mut UnionFind,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == needed {
            out.push(current.clone());
            return;
        }
        // not enough edges left to complete a tree
        if current.len() + (self.edges.len() - start) < needed {
            return;
        }
        for e in start..self.edges.len() {
            if current.len() + (self.edges.len() - e) < needed {
                break;
            }
            let WeightedEdge { u, v, .. } = self.edges[e];
            if let Some(token) = uf.union(u, v) {
                current.push(e);
                self.tree_rec(e + 1, needed, uf, current, out);
                current.pop();
                uf.undo(token);
            }
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut seen = vec![false; self.vertices];
        let mut comps = Vec::new();
        for s in 0..self.vertices {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced by `verts` (which must be sorted); returns the
    /// subgraph and the original id of each of its edges.
    pub fn induced(&self, verts: &[usize]) -> (WeightedGraph, Vec<usize>) {
        let mut pos = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            pos.insert(v, i);
        }
        let mut edges = Vec::new();
        let mut ids = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let (Some(&a), Some(&b)) = (pos.get(&e.u), pos.get(&e.v)) {
                edges.push((a, b, e.weight));
                ids.push(i);
            }
        }
        (
            WeightedGraph::new(verts.len(), edges).expect("induced subgraph is valid"),
            ids,
        )
    }

    fn check_forest(&self, ids: &[usize]) -> Result<UnionFind, GraphError> {
        let mut uf = UnionFind::new(self.vertices);
        let mut seen = std::collections::BTreeSet::new();
        for &e in ids {
            if e >= self.edges.len() {
                return Err(GraphError::UnknownEdge(e));
            }
            if !seen.insert(e) {
                return Err(GraphError::NotAForest(format!("edge {e} repeated")));
            }
            let WeightedEdge { u, v, .. } = self.edges[e];
            if uf.union(u, v).is_none() {
                return Err(GraphError::NotAForest(format!("edge {e} closes a cycle")));
            }
        }
        Ok(uf)
    }

    /// Path (as edge ids) between `from` and `to` inside the forest given
    /// by `ids`; `None` when they are in different components.
    fn forest_path(&self, ids: &[usize], from: usize, to: usize) -> Option<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &e in ids {
            let WeightedEdge { u, v, .. } = self.edges[e];
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.vertices];
        let mut seen = vec![false; self.vertices];
        seen[from] = true;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = Vec::new();
                let mut x = to;
                while x != from {
                    let (p, e) = prev[x].unwrap();
                    path.push(e);
                    x = p;
                }
                return Some(path);
            }
            for &(w, e) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Tutte activity of every edge with respect to a spanning tree and an
    /// edge order.
    pub fn classify_activity(
        &self,
        order: &EdgeOrder,
        tree: &[usize],
    ) -> Result<Activity, GraphError> {
        order.check(self.edges.len())?;
        self.check_forest(tree)
            .map_err(|e| GraphError::NotASpanningTree(e.to_string()))?;
        if self.vertices == 0 || tree.len() != self.vertices - 1 {
            return Err(GraphError::NotASpanningTree(format!(
                "{} edges cannot span {} vertices",
                tree.len(),
                self.vertices
            )));
        }
        let in_tree = {
            let mut m = vec![false; self.edges.len()];
            for &e in tree {
                m[e] = true;
            }
            m
        };

        let mut act = Activity::default();
        for e in 0..self.edges.len() {
            let WeightedEdge { u, v, .. } = self.edges[e];
            if in_tree[e] {
                // side of the split of tree - e containing u
                let rest: Vec<usize> = tree.iter().copied().filter(|&f| f != e).collect();
                let side = self.reachable(&rest, u);
                let active = (0..self.edges.len()).all(|f| {
                    if f == e {
                        return true;
                    }
                    let fe = self.edges[f];
                    if side[fe.u] == side[fe.v] {
                        return true; // does not reconnect the split
                    }
                    order.rank(e) < order.rank(f)
                });
                if active {
                    act.internally_active.push(e);
                } else {
                    act.internally_inactive.push(e);
                }
            } else {
                let path = self
                    .forest_path(tree, u, v)
                    .expect("spanning tree connects all vertices");
                let active = path.iter().all(|&f| order.rank(e) < order.rank(f));
                if active {
                    act.externally_active.push(e);
                } else {
                    act.externally_inactive.push(e);
                }
            }
        }
        Ok(act)
    }

    fn reachable(&self, ids: &[usize], from: usize) -> Vec<bool> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &e in ids {
            let WeightedEdge { u, v, .. } = self.edges[e];
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertices];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Externally inactive edges with respect to a forest: `e` outside the
    /// forest belongs to the set when `forest + e` is still a forest, or
    /// when `e` is not the order-first edge of the unique cycle it closes.
    pub fn forest_external_inactive(
        &self,
        order: &EdgeOrder,
        forest: &[usize],
    ) -> Result<Vec<usize>, GraphError> {
        order.check(self.edges.len())?;
        let uf = self.check_forest(forest)?;
        let in_forest = {
            let mut m = vec![false; self.edges.len()];
            for &e in forest {
                m[e] = true;
            }
            m
        };
        let mut out = Vec::new();
        for e in 0..self.edges.len() {
            if in_forest[e] {
                continue;
            }
            let WeightedEdge { u, v, .. } = self.edges[e];
            if uf.find(u) != uf.find(v) {
                out.push(e);
                continue;
            }
            let path = self.forest_path(forest, u, v).expect("same component");
            if path.iter().any(|&f| order.rank(f) < order.rank(e)) {
                out.push(e);
            }
        }
        Ok(out)
    }
}

/// Tutte's four activity classes with respect to a spanning tree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Activity {
    pub internally_active: Vec<usize>,
    pub internally_inactive: Vec<usize>,
    pub externally_active: Vec<usize>,
    pub externally_inactive: Vec<usize>,
}

// ---------------------------------------------------------------------------
// Edge orders
// ---------------------------------------------------------------------------

/// A strict total order on the edge ids of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeOrder {
    rank: Vec<usize>,
}

impl EdgeOrder {
    /// Positional order: edge 0 first.
    pub fn by_id(edge_count: usize) -> Self {
        Self {
            rank: (0..edge_count).collect(),
        }
    }

    /// Lexicographic on the (u, v) endpoint pairs.
    pub fn lex(g: &WeightedGraph) -> Self {
        let mut ids: Vec<usize> = (0..g.edges().len()).collect();
        ids.sort_by_key(|&e| (g.edges()[e].u, g.edges()[e].v));
        Self::from_sequence(ids, g.edges().len()).expect("permutation by construction")
    }

    /// Deterministic shuffle of the ids from a seed.
    pub fn random(edge_count: usize, seed: u64) -> Self {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut ids: Vec<usize> = (0..edge_count).collect();
        ids.shuffle(&mut rng);
        Self::from_sequence(ids, edge_count).expect("shuffle is a permutation")
    }

    /// `sequence[k]` is the edge id at rank `k`.
    pub fn from_sequence(sequence: Vec<usize>, edge_count: usize) -> Result<Self, GraphError> {
        if sequence.len() != edge_count {
            return Err(GraphError::InvalidOrder);
        }
        let mut rank = vec![usize::MAX; edge_count];
        for (k, &e) in sequence.iter().enumerate() {
            if e >= edge_count || rank[e] != usize::MAX {
                return Err(GraphError::InvalidOrder);
            }
            rank[e] = k;
        }
        Ok(Self { rank })
    }

    pub fn rank(&self, e: usize) -> usize {
        self.rank[e]
    }

    fn check(&self, edge_count: usize) -> Result<(), GraphError> {
        if self.rank.len() == edge_count {
            Ok(())
        } else {
            Err(GraphError::InvalidOrder)
        }
    }
}

// ---------------------------------------------------------------------------
// Union-find with undo
// ---------------------------------------------------------------------------

/// Union by size without path compression, so unions can be rolled back in
/// O(1); used by the backtracking enumerations and the state sum.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

pub(crate) struct UndoToken {
    child: usize,
    parent: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// `None` when the endpoints were already connected.
    pub fn union(&mut self, a: usize, b: usize) -> Option<UndoToken> {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let (child, parent) = if self.size[ra] < self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[child] = parent;
        self.size[parent] += self.size[child];
        Some(UndoToken { child, parent })
    }

    pub fn undo(&mut self, token: UndoToken) {
        self.size[token.parent] -= self.size[token.child];
        self.parent[token.child] = token.child;
    }
}

fn component_count(vertices: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut adj = vec![Vec::new(); vertices];
    for (u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; vertices];
    let mut count = 0;
    for s in 0..vertices {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Canonical relabeling (memoization key helper)
// ---------------------------------------------------------------------------

/// Relabels vertices by iterated neighborhood refinement and returns the
/// permutation old-id -> new-id. Graphs that relabel to the same edge list
/// are isomorphic, so the result is a sound cache key; refinement only
/// improves the hit rate.
pub(crate) fn refinement_permutation(
    vertices: usize,
    edges: &[(usize, usize, i64, i64)],
) -> Vec<usize> {
    let mut adj: Vec<Vec<(i64, i64, usize)>> = vec![Vec::new(); vertices];
    for &(u, v, a, b) in edges {
        adj[u].push((a, b, v));
        adj[v].push((a, b, u));
    }
    let mut labels = vec![0u64; vertices];
    for _ in 0..vertices {
        let mut sigs: Vec<(u64, Vec<(i64, i64, u64)>)> = Vec::with_capacity(vertices);
        for v in 0..vertices {
            let mut nbr: Vec<(i64, i64, u64)> =
                adj[v].iter().map(|&(a, b, w)| (a, b, labels[w])).collect();
            nbr.sort_unstable();
            sigs.push((labels[v], nbr));
        }
        let mut sorted: Vec<_> = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let new_labels: Vec<u64> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() as u64)
            .collect();
        if new_labels == labels {
            break;
        }
        labels = new_labels;
    }
    let mut verts: Vec<usize> = (0..vertices).collect();
    verts.sort_by_key(|&v| (labels[v], v));
    let mut perm = vec![0usize; vertices];
    for (new, &old) in verts.iter().enumerate() {
        perm[old] = new;
    }
    perm
}
