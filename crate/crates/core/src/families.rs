//! Generators for the graph families under study: signed Kneser graphs and
//! their Schrijver and hat restrictions, the classical Kneser and Schrijver
//! graphs, signed wrappers of plain graphs, and the stable-set injection of
//! classical Schrijver graphs into signed Kneser graphs.

use std::fmt;

use crate::graph::{Graph, Sign, SignedGraph};
use crate::{Error, Result};

/// A signed `k`-subset of `[n]`: a subset `A` of `{±1, …, ±n}` with
/// `A ∩ (-A) = ∅`, stored as a `{-1, 0, +1}` vector indexed by `[n]`.
///
/// Subsets order lexicographically on the vector with `-1 < 0 < +1`; every
/// generator in this module emits vertices in that order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSubset {
    n: usize,
    entries: Vec<i8>,
}

impl SignedSubset {
    pub fn from_entries(entries: Vec<i8>) -> Result<SignedSubset> {
        if entries.iter().any(|&e| !(-1..=1).contains(&e)) {
            return Err(Error::input("entries must lie in {-1, 0, +1}"));
        }
        Ok(SignedSubset { n: entries.len(), entries })
    }

    /// Builds a subset from signed elements, e.g. `[1, -3]` with `n = 3`.
    pub fn from_elements(n: usize, elements: &[i32]) -> Result<SignedSubset> {
        let mut entries = vec![0i8; n];
        for &e in elements {
            if e == 0 || e.unsigned_abs() as usize > n {
                return Err(Error::input(format!("element {e} out of range for n={n}")));
            }
            let idx = (e.unsigned_abs() - 1) as usize;
            if entries[idx] != 0 {
                return Err(Error::input(format!("index {} used twice", e.abs())));
            }
            entries[idx] = if e > 0 { 1 } else { -1 };
        }
        Ok(SignedSubset { n, entries })
    }

    /// Parses set notation such as `{1,-3}`.
    pub fn parse(n: usize, text: &str) -> Result<SignedSubset> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::input(format!("expected {{…}} notation, got `{text}`")))?;
        let mut elements = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let e: i32 = part
                .parse()
                .map_err(|_| Error::input(format!("bad element `{part}`")))?;
            elements.push(e);
        }
        SignedSubset::from_elements(n, &elements)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn entry(&self, index: usize) -> i8 {
        self.entries[index]
    }

    /// Number of nonzero entries.
    pub fn k(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Signed elements in increasing index order, e.g. `[1, -3]`.
    pub fn elements(&self) -> Vec<i32> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i as i32 + 1) * i32::from(e))
            .collect()
    }

    pub fn contains(&self, element: i32) -> bool {
        let idx = (element.unsigned_abs() as usize).wrapping_sub(1);
        idx < self.n && i32::from(self.entries[idx]) * element.signum() > 0
    }

    pub fn negate(&self) -> SignedSubset {
        SignedSubset { n: self.n, entries: self.entries.iter().map(|&e| -e).collect() }
    }

    /// Whether the first nonzero entry is positive (the "hat" side of the
    /// antipodal vertex pair).
    pub fn is_hat(&self) -> bool {
        self.entries.iter().find(|&&e| e != 0).map(|&e| e > 0).unwrap_or(false)
    }

    /// Whether the nonzero entries alternate in sign by increasing index.
    pub fn is_alternating(&self) -> bool {
        let mut last: Option<i8> = None;
        for &e in &self.entries {
            if e == 0 {
                continue;
            }
            if last == Some(e) {
                return false;
            }
            last = Some(e);
        }
        true
    }
}

impl fmt::Display for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Whether two subsets are joined by a positive and/or negative edge:
/// positive when the coordinatewise product is everywhere nonnegative
/// (`A ∩ -B = ∅`), negative when everywhere nonpositive (`A ∩ B = ∅`).
/// Subsets with disjoint supports satisfy both (a digon).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjacencyKind {
    pub positive: bool,
    pub negative: bool,
}

pub fn adjacency(a: &SignedSubset, b: &SignedSubset) -> Result<AdjacencyKind> {
    if a.n != b.n {
        return Err(Error::input("subsets over different ground sets"));
    }
    if a == b {
        return Err(Error::input("adjacency requires distinct subsets"));
    }
    let mut positive = true;
    let mut negative = true;
    for (&x, &y) in a.entries.iter().zip(&b.entries) {
        let p = x * y;
        if p > 0 {
            negative = false;
        } else if p < 0 {
            positive = false;
        }
    }
    Ok(AdjacencyKind { positive, negative })
}

/// All signed `k`-subsets of `[n]` in lexicographic vector order.
pub fn signed_subsets(n: usize, k: usize) -> Result<Vec<SignedSubset>> {
    if k == 0 || k > n {
        return Err(Error::input(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let mut out = Vec::new();
    let mut entries = vec![0i8; n];
    fn rec(entries: &mut Vec<i8>, pos: usize, remaining: usize, out: &mut Vec<SignedSubset>) {
        let n = entries.len();
        if remaining > n - pos {
            return;
        }
        if pos == n {
            out.push(SignedSubset { n, entries: entries.clone() });
            return;
        }
        for e in [-1i8, 0, 1] {
            if e != 0 && remaining == 0 {
                continue;
            }
            if e == 0 && remaining == n - pos {
                continue;
            }
            entries[pos] = e;
            rec(entries, pos + 1, remaining - usize::from(e != 0), out);
        }
        entries[pos] = 0;
    }
    rec(&mut entries, 0, k, &mut out);
    Ok(out)
}

/// A generated signed family: the vertex subsets (in graph id order) and the
/// signed graph on them, labelled with set notation.
#[derive(Clone, Debug)]
pub struct SignedFamily {
    pub vertices: Vec<SignedSubset>,
    pub graph: SignedGraph,
}

fn build_family(vertices: Vec<SignedSubset>) -> Result<SignedFamily> {
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let kind = adjacency(&vertices[i], &vertices[j])?;
            if kind.positive {
                edges.push((i, j, Sign::Plus));
            }
            if kind.negative {
                edges.push((i, j, Sign::Minus));
            }
        }
    }
    let graph = SignedGraph::from_edges(vertices.len(), edges)?
        .with_labels(vertices.iter().map(|s| s.to_string()).collect())?;
    Ok(SignedFamily { vertices, graph })
}

/// The Kneser signed graph on all signed `k`-subsets of `[n]`.
pub fn kneser_signed(n: usize, k: usize) -> Result<SignedFamily> {
    build_family(signed_subsets(n, k)?)
}

/// Restriction of the Kneser signed graph to first-nonzero-positive vertices
/// (one vertex per antipodal pair).
pub fn kneser_signed_hat(n: usize, k: usize) -> Result<SignedFamily> {
    build_family(signed_subsets(n, k)?.into_iter().filter(SignedSubset::is_hat).collect())
}

/// The Schrijver signed graph: the subgraph induced by alternating subsets.
pub fn schrijver_signed(n: usize, k: usize) -> Result<SignedFamily> {
    build_family(signed_subsets(n, k)?.into_iter().filter(SignedSubset::is_alternating).collect())
}

/// Alternating and first-nonzero-positive vertices.
pub fn schrijver_signed_hat(n: usize, k: usize) -> Result<SignedFamily> {
    build_family(
        signed_subsets(n, k)?
            .into_iter()
            .filter(|s| s.is_alternating() && s.is_hat())
            .collect(),
    )
}

/// All `k`-subsets of `[m]` (1-based elements), lexicographic.
fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=m {
            if m - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(m, k, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 1, &mut cur, &mut out);
    out
}

/// A classical disjointness family: vertex subsets plus the unsigned graph.
#[derive(Clone, Debug)]
pub struct ClassicalFamily {
    pub vertices: Vec<Vec<usize>>,
    pub graph: Graph,
}

fn build_classical(vertices: Vec<Vec<usize>>) -> ClassicalFamily {
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i].iter().all(|x| !vertices[j].contains(x)) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(vertices.len(), edges).expect("ids are in range");
    ClassicalFamily { vertices, graph }
}

/// The classical Kneser graph `K(m, k)`: `k`-subsets of `[m]`, disjointness
/// edges.
pub fn kneser(m: usize, k: usize) -> Result<ClassicalFamily> {
    if k == 0 || k > m {
        return Err(Error::input(format!("need 1 <= k <= m, got k={k}, m={m}")));
    }
    Ok(build_classical(k_subsets(m, k)))
}

/// Whether a subset of `[m]` is stable in the cyclic order (no two cyclically
/// consecutive elements).
pub fn is_stable_cyclic(subset: &[usize], m: usize) -> bool {
    subset.iter().all(|&x| !subset.contains(&(x % m + 1)) || subset.len() == 1)
}

/// The classical Schrijver graph `S(m, k)`: stable `k`-subsets of the cyclic
/// `[m]`, disjointness edges.
pub fn schrijver(m: usize, k: usize) -> Result<ClassicalFamily> {
    if k == 0 || k > m {
        return Err(Error::input(format!("need 1 <= k <= m, got k={k}, m={m}")));
    }
    Ok(build_classical(
        k_subsets(m, k).into_iter().filter(|s| is_stable_cyclic(s, m)).collect(),
    ))
}

/// The signed graph with every edge negative.
pub fn all_negative(g: &Graph) -> SignedGraph {
    SignedGraph::from_edges(g.order(), g.edges().iter().map(|&(u, v)| (u, v, Sign::Minus)))
        .expect("ids already validated")
}

/// The signed graph with every edge doubled into a digon.
pub fn plus_minus(g: &Graph) -> SignedGraph {
    SignedGraph::from_edges(
        g.order(),
        g.edges()
            .iter()
            .flat_map(|&(u, v)| [(u, v, Sign::Plus), (u, v, Sign::Minus)]),
    )
    .expect("ids already validated")
}

/// Maps a stable subset of the cyclic `[2n]`, read along the order
/// `(1, -1, 2, -2, …, n, -n)`, to the signed subset it denotes: position
/// `2i-1` becomes `i` and position `2i` becomes `-i`.
pub fn stable_to_signed(positions: &[usize], n: usize) -> Result<SignedSubset> {
    let m = 2 * n;
    for &p in positions {
        if p == 0 || p > m {
            return Err(Error::input(format!("position {p} out of range for 2n={m}")));
        }
    }
    if !is_stable_cyclic(positions, m) {
        return Err(Error::input("subset is not stable in the cyclic order"));
    }
    let elements: Vec<i32> = positions
        .iter()
        .map(|&p| {
            let idx = p.div_ceil(2) as i32;
            if p % 2 == 1 {
                idx
            } else {
                -idx
            }
        })
        .collect();
    SignedSubset::from_elements(n, &elements)
}

/// The verified injection of `S(2n, k)` onto negative edges of `KS(n, k)`.
#[derive(Clone, Debug)]
pub struct SchrijverEmbedding {
    /// For each vertex of `S(2n, k)`: its position set and its image.
    pub map: Vec<(Vec<usize>, SignedSubset)>,
    /// Edges of `S(2n, k)` whose images are not joined by a negative edge
    /// (empty when the embedding verifies).
    pub failures: Vec<(usize, usize)>,
}

impl SchrijverEmbedding {
    pub fn verified(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Maps every vertex of the classical `S(2n, k)` into `KS(n, k)` via
/// [`stable_to_signed`] and checks that every edge lands on a negative edge.
pub fn embed_schrijver_negative(n: usize, k: usize) -> Result<SchrijverEmbedding> {
    if 2 * n < 2 * k {
        return Err(Error::input("need 2n >= 2k"));
    }
    let host = schrijver(2 * n, k)?;
    let mut map = Vec::with_capacity(host.vertices.len());
    for s in &host.vertices {
        map.push((s.clone(), stable_to_signed(s, n)?));
    }
    // Injectivity is structural (positions determine images bijectively),
    // but cheap to confirm.
    {
        let mut images: Vec<&SignedSubset> = map.iter().map(|(_, img)| img).collect();
        images.sort();
        images.dedup();
        if images.len() != map.len() {
            return Err(Error::input("embedding not injective"));
        }
    }
    let mut failures = Vec::new();
    for &(i, j) in host.graph.edges() {
        let kind = adjacency(&map[i].1, &map[j].1)?;
        if !kind.negative {
            failures.push((i, j));
        }
    }
    Ok(SchrijverEmbedding { map, failures })
}

/// Which family a descriptor names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    KneserSigned,
    KneserSignedHat,
    SchrijverSigned,
    SchrijverSignedHat,
    Kneser,
    Schrijver,
    BorsukDisc,
}

/// Parameters selecting one generated graph.
#[derive(Clone, Debug)]
pub struct FamilyDescriptor {
    pub kind: FamilyKind,
    pub n: usize,
    pub k: usize,
    /// Borsuk-only parameters.
    pub d: usize,
    pub eps: f64,
    pub resolution: usize,
    pub seed: u64,
}

impl FamilyDescriptor {
    pub fn sets(kind: FamilyKind, n: usize, k: usize) -> FamilyDescriptor {
        FamilyDescriptor { kind, n, k, d: 0, eps: 0.0, resolution: 0, seed: 0 }
    }

    pub fn borsuk(d: usize, eps: f64, resolution: usize, seed: u64) -> FamilyDescriptor {
        FamilyDescriptor { kind: FamilyKind::BorsukDisc, n: 0, k: 0, d, eps, resolution, seed }
    }
}

/// Generates the signed graph a descriptor names. Classical families are
/// emitted with the all-negative signature.
pub fn gen_family(desc: &FamilyDescriptor) -> Result<SignedGraph> {
    match desc.kind {
        FamilyKind::KneserSigned => Ok(kneser_signed(desc.n, desc.k)?.graph),
        FamilyKind::KneserSignedHat => Ok(kneser_signed_hat(desc.n, desc.k)?.graph),
        FamilyKind::SchrijverSigned => Ok(schrijver_signed(desc.n, desc.k)?.graph),
        FamilyKind::SchrijverSignedHat => Ok(schrijver_signed_hat(desc.n, desc.k)?.graph),
        FamilyKind::Kneser => {
            let fam = kneser(desc.n, desc.k)?;
            label_classical(all_negative(&fam.graph), &fam.vertices)
        }
        FamilyKind::Schrijver => {
            let fam = schrijver(desc.n, desc.k)?;
            label_classical(all_negative(&fam.graph), &fam.vertices)
        }
        FamilyKind::BorsukDisc => Ok(crate::topo::borsuk_discretization(
            desc.d,
            desc.eps,
            desc.resolution,
            desc.seed,
        )?
        .graph),
    }
}

fn label_classical(g: SignedGraph, vertices: &[Vec<usize>]) -> Result<SignedGraph> {
    g.with_labels(
        vertices
            .iter()
            .map(|s| {
                let inner =
                    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                format!("{{{inner}}}")
            })
            .collect(),
    )
}

/// Binomial coefficient, exact in u64 for the desk-scale ranges used here.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u64 = 1;
    for i in 0..k {
        num = num * (n - i) as u64 / (i + 1) as u64;
    }
    num
}
