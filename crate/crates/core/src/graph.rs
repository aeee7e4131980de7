//! Signed-graph data model: signs, switching, balance testing, negative
//! subgraphs and balanced-colouring verification.
//!
//! Vertices are dense ids `0..order`. Edges form a canonical sorted multiset
//! in which a vertex pair carries at most one positive and at most one
//! negative edge (both together form a *digon*). Loops are never stored:
//! positive loops are chromatically inert and negative loops are rejected.
//! All types are immutable after construction and every operation is a pure
//! function of its inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use crate::{Error, Result};

/// An edge sign. `Plus` sorts before `Minus` so canonical edge order is
/// stable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A signed edge with endpoints normalized to `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// How a vertex pair is joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Positive,
    Negative,
    Digon,
}

impl PairKind {
    pub fn has(self, sign: Sign) -> bool {
        match self {
            PairKind::Positive => sign == Sign::Plus,
            PairKind::Negative => sign == Sign::Minus,
            PairKind::Digon => true,
        }
    }
}

/// An unsigned simple graph on dense vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(order: usize) -> Graph {
        Graph { order, edges: Vec::new() }
    }

    pub fn from_edges(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut es = Vec::new();
        for (a, b) in edges {
            if a >= order {
                return Err(Error::InvalidVertex { vertex: a, order });
            }
            if b >= order {
                return Err(Error::InvalidVertex { vertex: b, order });
            }
            if a == b {
                continue; // loops are meaningless for colouring
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        es.dedup();
        Ok(Graph { order, edges: es })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Complete graph `K_order`.
    pub fn complete(order: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                edges.push((u, v));
            }
        }
        Graph { order, edges }
    }

    /// Cycle `C_order` (order >= 3).
    pub fn cycle(order: usize) -> Graph {
        let mut edges: Vec<_> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        Graph { order, edges }
    }

    /// Whether the graph is connected (vacuously true for order <= 1).
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.order];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }
}

/// Verdict of a balance test. The switching witness lists, per vertex, the
/// sign applied by the switching that makes every edge positive; the negative
/// cycle witness is a closed edge walk with an odd number of negative edges.
#[derive(Clone, Debug)]
pub enum Balance {
    Balanced { switching: Vec<Sign> },
    Unbalanced { cycle: Vec<Edge> },
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced { .. })
    }
}

/// A balanced colouring together with its per-class switching witnesses.
///
/// `colors[v]` is the (0-based) class of vertex `v`; `witness[v]` is the sign
/// the class witness assigns to `v`. For every edge `(u, v, s)` inside one
/// class, `witness[u] * witness[v] * s == Plus`.
#[derive(Clone, Debug)]
pub struct BalancedColoring {
    pub colors: Vec<usize>,
    pub witness: Vec<Sign>,
}

impl BalancedColoring {
    pub fn class_count(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut m: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            m.entry(c).or_default().push(v);
        }
        m
    }
}

/// Outcome of checking a colouring for balance, with a diagnosis on reject.
#[derive(Clone, Debug)]
pub enum ColoringCheck {
    Accepted(BalancedColoring),
    Rejected { class: usize, cycle: Vec<Edge> },
}

impl ColoringCheck {
    pub fn is_accepted(&self) -> bool {
        matches!(self, ColoringCheck::Accepted(_))
    }

    pub fn into_accepted(self) -> Option<BalancedColoring> {
        match self {
            ColoringCheck::Accepted(c) => Some(c),
            ColoringCheck::Rejected { .. } => None,
        }
    }
}

/// A signed multigraph: at most one positive and one negative edge per pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraph {
    order: usize,
    edges: Vec<Edge>,
    labels: Vec<Option<String>>,
}

impl SignedGraph {
    /// Builds a graph from an edge list. Same-sign parallel edges are
    /// deduplicated, positive loops dropped, negative loops rejected.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize, Sign)>,
    ) -> Result<SignedGraph> {
        let mut es = Vec::new();
        for (a, b, s) in edges {
            if a >= order {
                return Err(Error::InvalidVertex { vertex: a, order });
            }
            if b >= order {
                return Err(Error::InvalidVertex { vertex: b, order });
            }
            if a == b {
                if s == Sign::Minus {
                    return Err(Error::NegativeLoop(a));
                }
                continue;
            }
            es.push(Edge { u: a.min(b), v: a.max(b), sign: s });
        }
        es.sort_unstable();
        es.dedup();
        Ok(SignedGraph { order, edges: es, labels: vec![None; order] })
    }

    pub fn empty(order: usize) -> SignedGraph {
        SignedGraph { order, edges: Vec::new(), labels: vec![None; order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        if v >= self.order {
            return Err(Error::InvalidVertex { vertex: v, order: self.order });
        }
        self.labels[v] = Some(label.into());
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<SignedGraph> {
        if labels.len() != self.order {
            return Err(Error::input(format!(
                "expected {} labels, got {}",
                self.order,
                labels.len()
            )));
        }
        self.labels = labels.into_iter().map(Some).collect();
        Ok(self)
    }

    pub fn has_edge(&self, a: usize, b: usize, sign: Sign) -> bool {
        if a == b {
            return false;
        }
        let key = Edge { u: a.min(b), v: a.max(b), sign };
        self.edges.binary_search(&key).is_ok()
    }

    /// Kind of the pair `{a, b}`, if any edge joins it.
    pub fn pair_kind(&self, a: usize, b: usize) -> Option<PairKind> {
        let pos = self.has_edge(a, b, Sign::Plus);
        let neg = self.has_edge(a, b, Sign::Minus);
        match (pos, neg) {
            (true, true) => Some(PairKind::Digon),
            (true, false) => Some(PairKind::Positive),
            (false, true) => Some(PairKind::Negative),
            (false, false) => None,
        }
    }

    /// Adjacency lists with one entry per edge (digons appear twice).
    pub fn adjacency(&self) -> Vec<Vec<(usize, Sign)>> {
        let mut adj = vec![Vec::new(); self.order];
        for e in &self.edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Pair-level adjacency: one entry per joined pair, carrying its kind.
    pub fn pair_adjacency(&self) -> Vec<Vec<(usize, PairKind)>> {
        let mut adj: Vec<Vec<(usize, PairKind)>> = vec![Vec::new(); self.order];
        let mut i = 0;
        while i < self.edges.len() {
            let e = self.edges[i];
            let kind = if i + 1 < self.edges.len()
                && self.edges[i + 1].u == e.u
                && self.edges[i + 1].v == e.v
            {
                i += 1;
                PairKind::Digon
            } else if e.sign == Sign::Plus {
                PairKind::Positive
            } else {
                PairKind::Negative
            };
            adj[e.u].push((e.v, kind));
            adj[e.v].push((e.u, kind));
            i += 1;
        }
        for a in &mut adj {
            a.sort_unstable_by_key(|&(w, _)| w);
        }
        adj
    }

    fn check_subset(&self, x: &[usize]) -> Result<Vec<usize>> {
        let mut xs: Vec<usize> = x.to_vec();
        for &v in &xs {
            if v >= self.order {
                return Err(Error::InvalidVertex { vertex: v, order: self.order });
            }
        }
        xs.sort_unstable();
        xs.dedup();
        Ok(xs)
    }

    /// Negates the sign of every edge with exactly one end in `x`.
    /// Involutive: switching the same set twice restores the graph.
    pub fn switch(&self, x: &[usize]) -> Result<SignedGraph> {
        let xs = self.check_subset(x)?;
        let mut inside = vec![false; self.order];
        for &v in &xs {
            inside[v] = true;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| {
                let sign = if inside[e.u] != inside[e.v] { -e.sign } else { e.sign };
                Edge { sign, ..*e }
            })
            .collect();
        edges.sort_unstable();
        Ok(SignedGraph { order: self.order, edges, labels: self.labels.clone() })
    }

    /// Applies a full switching vector (switches the set of `Minus` vertices).
    pub fn switch_by(&self, switching: &[Sign]) -> Result<SignedGraph> {
        if switching.len() != self.order {
            return Err(Error::input("switching length must equal graph order"));
        }
        let x: Vec<usize> = (0..self.order).filter(|&v| switching[v] == Sign::Minus).collect();
        self.switch(&x)
    }

    /// Harary balance test via spanning-forest potentials.
    ///
    /// Balanced graphs yield a switching that makes every edge positive;
    /// unbalanced ones yield the fundamental cycle of the first failing
    /// non-tree edge (a digon is reported as its negative 2-cycle).
    pub fn is_balanced(&self) -> Balance {
        let adj = self.adjacency();
        let mut pot: Vec<Option<Sign>> = vec![None; self.order];
        let mut parent: Vec<usize> = (0..self.order).collect();
        let mut parent_sign: Vec<Sign> = vec![Sign::Plus; self.order];
        let mut depth: Vec<usize> = vec![0; self.order];

        for root in 0..self.order {
            if pot[root].is_some() {
                continue;
            }
            pot[root] = Some(Sign::Plus);
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let pu = pot[u].unwrap();
                for &(w, s) in &adj[u] {
                    match pot[w] {
                        None => {
                            pot[w] = Some(pu * s);
                            parent[w] = u;
                            parent_sign[w] = s;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(pw) => {
                            // Skip the tree edge itself (one traversal
                            // direction); parallel edges of the other sign
                            // still get checked here.
                            if parent[w] == u && parent_sign[w] == s && depth[w] == depth[u] + 1 {
                                continue;
                            }
                            if parent[u] == w && parent_sign[u] == s && depth[u] == depth[w] + 1 {
                                continue;
                            }
                            if pu * pw * s != Sign::Plus {
                                let cycle = fundamental_cycle(u, w, s, &parent, &parent_sign, &depth);
                                return Balance::Unbalanced { cycle };
                            }
                        }
                    }
                }
            }
        }
        let switching = pot.into_iter().map(|p| p.unwrap_or(Sign::Plus)).collect();
        Balance::Balanced { switching }
    }

    /// Balance of the subgraph induced by `x`; the cycle witness is reported
    /// in the original vertex ids.
    pub fn is_balanced_set(&self, x: &[usize]) -> Result<Balance> {
        let xs = self.check_subset(x)?;
        let (sub, map) = self.induced_with_map(&xs)?;
        Ok(match sub.is_balanced() {
            Balance::Balanced { switching } => Balance::Balanced { switching },
            Balance::Unbalanced { cycle } => Balance::Unbalanced {
                cycle: cycle
                    .into_iter()
                    .map(|e| {
                        let (a, b) = (map[e.u], map[e.v]);
                        Edge { u: a.min(b), v: a.max(b), sign: e.sign }
                    })
                    .collect(),
            },
        })
    }

    /// Induced subgraph on `x` (sorted, deduplicated) plus the map from new
    /// ids back to original ids.
    pub fn induced_with_map(&self, x: &[usize]) -> Result<(SignedGraph, Vec<usize>)> {
        let xs = self.check_subset(x)?;
        let mut new_id = vec![usize::MAX; self.order];
        for (i, &v) in xs.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_id[e.u] != usize::MAX && new_id[e.v] != usize::MAX)
            .map(|e| (new_id[e.u], new_id[e.v], e.sign));
        let mut sub = SignedGraph::from_edges(xs.len(), edges)?;
        for (i, &v) in xs.iter().enumerate() {
            sub.labels[i] = self.labels[v].clone();
        }
        Ok((sub, xs))
    }

    pub fn induced(&self, x: &[usize]) -> Result<SignedGraph> {
        Ok(self.induced_with_map(x)?.0)
    }

    /// The graph with vertex `v` removed; ids above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<SignedGraph> {
        if v >= self.order {
            return Err(Error::InvalidVertex { vertex: v, order: self.order });
        }
        let keep: Vec<usize> = (0..self.order).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// The unsigned graph formed by the negative edges; all vertices are
    /// retained.
    pub fn negative_subgraph(&self) -> Graph {
        let edges = self
            .edges
            .iter()
            .filter(|e| e.sign == Sign::Minus)
            .map(|e| (e.u, e.v));
        Graph::from_edges(self.order, edges).expect("edge ids already validated")
    }

    /// Negative subgraph restricted to the vertices the negative edges touch;
    /// returns the subgraph together with the original ids of its vertices.
    pub fn negative_subgraph_trimmed(&self) -> (Graph, Vec<usize>) {
        let mut touched: Vec<usize> = self
            .edges
            .iter()
            .filter(|e| e.sign == Sign::Minus)
            .flat_map(|e| [e.u, e.v])
            .collect();
        touched.sort_unstable();
        touched.dedup();
        let mut new_id = vec![usize::MAX; self.order];
        for (i, &v) in touched.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.sign == Sign::Minus)
            .map(|e| (new_id[e.u], new_id[e.v]));
        let g = Graph::from_edges(touched.len(), edges).expect("ids remapped");
        (g, touched)
    }

    /// The underlying simple unsigned graph (digons collapse to one edge).
    pub fn underlying(&self) -> Graph {
        Graph::from_edges(self.order, self.edges.iter().map(|e| (e.u, e.v)))
            .expect("edge ids already validated")
    }

    /// Whether `other` is a switching of `self`. Requires the same underlying
    /// edge multiset; on success returns the membership vector of a cut side
    /// `X` with `other = self.switch(X)`.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<Option<Vec<bool>>> {
        if self.order != other.order {
            return Err(Error::UnderlyingMismatch(format!(
                "orders {} vs {}",
                self.order, other.order
            )));
        }
        let pairs_of = |g: &SignedGraph| {
            let mut m: BTreeMap<(usize, usize), PairKind> = BTreeMap::new();
            let mut i = 0;
            while i < g.edges.len() {
                let e = g.edges[i];
                let kind = if i + 1 < g.edges.len()
                    && g.edges[i + 1].u == e.u
                    && g.edges[i + 1].v == e.v
                {
                    i += 1;
                    PairKind::Digon
                } else if e.sign == Sign::Plus {
                    PairKind::Positive
                } else {
                    PairKind::Negative
                };
                m.insert((e.u, e.v), kind);
                i += 1;
            }
            m
        };
        let p1 = pairs_of(self);
        let p2 = pairs_of(other);
        if p1.len() != p2.len() {
            return Err(Error::UnderlyingMismatch("edge sets differ".into()));
        }
        // Disagreement graph: one edge per single-sign pair, positive when
        // the two signatures agree. Digons carry no constraint but must be
        // digons on both sides.
        let mut constraint = Vec::new();
        for ((pair, k1), (pair2, k2)) in p1.iter().zip(p2.iter()) {
            if pair != pair2 {
                return Err(Error::UnderlyingMismatch("edge sets differ".into()));
            }
            match (k1, k2) {
                (PairKind::Digon, PairKind::Digon) => {}
                (PairKind::Digon, _) | (_, PairKind::Digon) => {
                    return Err(Error::UnderlyingMismatch(format!(
                        "pair ({}, {}) has different multiplicities",
                        pair.0, pair.1
                    )));
                }
                (a, b) => {
                    let s1 = if *a == PairKind::Positive { Sign::Plus } else { Sign::Minus };
                    let s2 = if *b == PairKind::Positive { Sign::Plus } else { Sign::Minus };
                    constraint.push((pair.0, pair.1, s1 * s2));
                }
            }
        }
        let aux = SignedGraph::from_edges(self.order, constraint)?;
        Ok(match aux.is_balanced() {
            Balance::Balanced { switching } => {
                Some(switching.into_iter().map(|s| s == Sign::Minus).collect())
            }
            Balance::Unbalanced { .. } => None,
        })
    }

    /// Checks that every colour class is balanced. Accepts with assembled
    /// per-class witnesses, or rejects naming the offending class and a
    /// negative cycle inside it.
    pub fn verify_balanced_coloring(&self, colors: &[usize]) -> Result<ColoringCheck> {
        if colors.len() != self.order {
            return Err(Error::input(format!(
                "colouring covers {} of {} vertices",
                colors.len(),
                self.order
            )));
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        let mut witness = vec![Sign::Plus; self.order];
        for (&c, members) in &classes {
            match self.is_balanced_set(members)? {
                Balance::Balanced { switching } => {
                    for (i, &v) in members.iter().enumerate() {
                        witness[v] = switching[i];
                    }
                }
                Balance::Unbalanced { cycle } => {
                    return Ok(ColoringCheck::Rejected { class: c, cycle });
                }
            }
        }
        Ok(ColoringCheck::Accepted(BalancedColoring { colors: colors.to_vec(), witness }))
    }
}

fn fundamental_cycle(
    u: usize,
    w: usize,
    closing_sign: Sign,
    parent: &[usize],
    parent_sign: &[Sign],
    depth: &[usize],
) -> Vec<Edge> {
    // Walk both endpoints up to their lowest common ancestor, collecting the
    // tree edges, then close with the failing edge.
    let mut a = u;
    let mut b = w;
    let mut up_a: Vec<Edge> = Vec::new();
    let mut up_b: Vec<Edge> = Vec::new();
    while depth[a] > depth[b] {
        up_a.push(Edge { u: a.min(parent[a]), v: a.max(parent[a]), sign: parent_sign[a] });
        a = parent[a];
    }
    while depth[b] > depth[a] {
        up_b.push(Edge { u: b.min(parent[b]), v: b.max(parent[b]), sign: parent_sign[b] });
        b = parent[b];
    }
    while a != b {
        up_a.push(Edge { u: a.min(parent[a]), v: a.max(parent[a]), sign: parent_sign[a] });
        up_b.push(Edge { u: b.min(parent[b]), v: b.max(parent[b]), sign: parent_sign[b] });
        a = parent[a];
        b = parent[b];
    }
    let mut cycle = vec![Edge { u: u.min(w), v: u.max(w), sign: closing_sign }];
    cycle.extend(up_a);
    up_b.reverse();
    cycle.extend(up_b);
    cycle
}

/// Product of the signs along an edge list (+1 for an even number of
/// negative edges).
pub fn sign_product(edges: &[Edge]) -> Sign {
    edges
        .iter()
        .fold(Sign::Plus, |acc, e| acc * e.sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_one_negative() -> SignedGraph {
        // negative edge 0-1, positive 1-2 and 0-2
        SignedGraph::from_edges(
            3,
            [(0, 1, Sign::Minus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)],
        )
        .unwrap()
    }

    #[test]
    fn switch_degree_two_vertex_flips_both_edges() {
        let path = SignedGraph::from_edges(3, [(0, 1, Sign::Plus), (1, 2, Sign::Plus)]).unwrap();
        let switched = path.switch(&[1]).unwrap();
        assert!(switched.has_edge(0, 1, Sign::Minus));
        assert!(switched.has_edge(1, 2, Sign::Minus));
        assert_eq!(switched.edge_count(), 2);
    }

    #[test]
    fn switch_empty_set_is_identity() {
        let g = triangle_one_negative();
        assert_eq!(g.switch(&[]).unwrap(), g);
    }

    #[test]
    fn switch_is_involutive() {
        let g = triangle_one_negative();
        assert_eq!(g.switch(&[0, 2]).unwrap().switch(&[0, 2]).unwrap(), g);
    }

    #[test]
    fn switch_rejects_invalid_vertex() {
        let g = triangle_one_negative();
        assert!(g.switch(&[3]).is_err());
    }

    #[test]
    fn all_eight_switchings_of_triangle_preserve_parity() {
        // The signed triangle keeps an odd number of negative edges under
        // every switching.
        let g = triangle_one_negative();
        for mask in 0u32..8 {
            let x: Vec<usize> = (0..3).filter(|&v| mask >> v & 1 == 1).collect();
            let s = g.switch(&x).unwrap();
            let negatives = s.edges().iter().filter(|e| e.sign == Sign::Minus).count();
            assert_eq!(negatives % 2, 1, "mask {mask:03b}");
        }
        // Switching {1} moves the negative edge from 0-1 to 1-2; switching
        // {0} moves it to 0-2.
        let s = g.switch(&[1]).unwrap();
        assert!(s.has_edge(1, 2, Sign::Minus) && !s.has_edge(0, 1, Sign::Minus));
        let s = g.switch(&[0]).unwrap();
        assert!(s.has_edge(0, 2, Sign::Minus) && !s.has_edge(0, 1, Sign::Minus));
    }

    #[test]
    fn triangle_one_negative_is_unbalanced_with_triangle_witness() {
        match triangle_one_negative().is_balanced() {
            Balance::Unbalanced { cycle } => {
                assert_eq!(cycle.len(), 3);
                assert_eq!(sign_product(&cycle), Sign::Minus);
            }
            Balance::Balanced { .. } => panic!("expected unbalanced"),
        }
    }

    #[test]
    fn triangle_two_negative_is_balanced() {
        let g = SignedGraph::from_edges(
            3,
            [(0, 1, Sign::Plus), (1, 2, Sign::Minus), (0, 2, Sign::Minus)],
        )
        .unwrap();
        match g.is_balanced() {
            Balance::Balanced { switching } => {
                // Re-check: switching by the witness makes all edges positive.
                let fixed = g.switch_by(&switching).unwrap();
                assert!(fixed.edges().iter().all(|e| e.sign == Sign::Plus));
            }
            Balance::Unbalanced { .. } => panic!("expected balanced"),
        }
    }

    #[test]
    fn single_edge_of_either_sign_is_balanced() {
        for s in [Sign::Plus, Sign::Minus] {
            let g = SignedGraph::from_edges(2, [(0, 1, s)]).unwrap();
            assert!(g.is_balanced().is_balanced());
        }
    }

    #[test]
    fn digon_is_unbalanced_two_cycle() {
        let g = SignedGraph::from_edges(2, [(0, 1, Sign::Plus), (0, 1, Sign::Minus)]).unwrap();
        match g.is_balanced() {
            Balance::Unbalanced { cycle } => {
                assert_eq!(cycle.len(), 2);
                assert_eq!(sign_product(&cycle), Sign::Minus);
            }
            Balance::Balanced { .. } => panic!("digon must be unbalanced"),
        }
    }

    #[test]
    fn balanced_set_examples() {
        let g = SignedGraph::from_edges(2, [(0, 1, Sign::Plus), (0, 1, Sign::Minus)]).unwrap();
        assert!(g.is_balanced_set(&[0]).unwrap().is_balanced());
        assert!(!g.is_balanced_set(&[0, 1]).unwrap().is_balanced());
        assert!(g.is_balanced_set(&[5]).is_err());
    }

    #[test]
    fn negative_loop_rejected_positive_loop_dropped() {
        assert!(matches!(
            SignedGraph::from_edges(2, [(1, 1, Sign::Minus)]),
            Err(Error::NegativeLoop(1))
        ));
        let g = SignedGraph::from_edges(2, [(1, 1, Sign::Plus), (0, 1, Sign::Plus)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parallel_same_sign_edges_deduplicate() {
        let g = SignedGraph::from_edges(2, [(0, 1, Sign::Plus), (1, 0, Sign::Plus)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn negative_subgraph_examples() {
        let all_pos = SignedGraph::from_edges(3, [(0, 1, Sign::Plus), (1, 2, Sign::Plus)]).unwrap();
        assert_eq!(all_pos.negative_subgraph().edge_count(), 0);
        assert_eq!(all_pos.negative_subgraph().order(), 3);

        let k3_neg = SignedGraph::from_edges(
            3,
            [(0, 1, Sign::Minus), (1, 2, Sign::Minus), (0, 2, Sign::Minus)],
        )
        .unwrap();
        assert_eq!(k3_neg.negative_subgraph().edge_count(), 3);

        let tri = triangle_one_negative();
        assert_eq!(tri.negative_subgraph().edge_count(), 1);
        let (trimmed, ids) = tri.negative_subgraph_trimmed();
        assert_eq!(trimmed.order(), 2);
        assert_eq!(ids, vec![0, 1]);
    }

    #[test]
    fn switching_equivalence_examples() {
        let g = triangle_one_negative();
        let s = g.switch(&[0, 2]).unwrap();
        assert!(g.switching_equivalent(&s).unwrap().is_some());

        let all_pos = SignedGraph::from_edges(
            3,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)],
        )
        .unwrap();
        assert!(all_pos.switching_equivalent(&g).unwrap().is_none());

        // all-positive vs all-negative path: cut side is the middle vertex
        let p_pos = SignedGraph::from_edges(3, [(0, 1, Sign::Plus), (1, 2, Sign::Plus)]).unwrap();
        let p_neg = SignedGraph::from_edges(3, [(0, 1, Sign::Minus), (1, 2, Sign::Minus)]).unwrap();
        let cut = p_pos.switching_equivalent(&p_neg).unwrap().unwrap();
        assert_eq!(cut, vec![false, true, false]);

        // mismatched underlying graphs
        let other = SignedGraph::from_edges(3, [(0, 1, Sign::Plus)]).unwrap();
        assert!(p_pos.switching_equivalent(&other).is_err());
    }

    #[test]
    fn switching_witness_reproduces_other_signature() {
        let g = triangle_one_negative();
        for mask in 0u32..8 {
            let x: Vec<usize> = (0..3).filter(|&v| mask >> v & 1 == 1).collect();
            let s = g.switch(&x).unwrap();
            let cut = g.switching_equivalent(&s).unwrap().expect("switchings are equivalent");
            let y: Vec<usize> = (0..3).filter(|&v| cut[v]).collect();
            assert_eq!(g.switch(&y).unwrap().edges(), s.edges());
        }
    }

    #[test]
    fn verify_coloring_injective_always_accepts() {
        let g = triangle_one_negative();
        let check = g.verify_balanced_coloring(&[0, 1, 2]).unwrap();
        assert!(check.is_accepted());
    }

    #[test]
    fn verify_coloring_rejects_digon_in_one_class() {
        let g = SignedGraph::from_edges(2, [(0, 1, Sign::Plus), (0, 1, Sign::Minus)]).unwrap();
        match g.verify_balanced_coloring(&[0, 0]).unwrap() {
            ColoringCheck::Rejected { class, cycle } => {
                assert_eq!(class, 0);
                assert_eq!(cycle.len(), 2);
            }
            ColoringCheck::Accepted(_) => panic!("digon class must be rejected"),
        }
    }

    #[test]
    fn verify_coloring_witness_certifies_every_intra_class_edge() {
        let g = SignedGraph::from_edges(
            4,
            [
                (0, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 3, Sign::Minus),
                (0, 3, Sign::Plus),
            ],
        )
        .unwrap();
        let colors = vec![0, 0, 0, 0];
        if let ColoringCheck::Accepted(bc) = g.verify_balanced_coloring(&colors).unwrap() {
            for e in g.edges() {
                if bc.colors[e.u] == bc.colors[e.v] {
                    assert_eq!(bc.witness[e.u] * bc.witness[e.v] * e.sign, Sign::Plus);
                }
            }
        } else {
            panic!("four-cycle with two negative edges is balanced");
        }
    }

    #[test]
    fn verify_coloring_rejects_partial_coloring() {
        let g = triangle_one_negative();
        assert!(g.verify_balanced_coloring(&[0, 1]).is_err());
    }
}
