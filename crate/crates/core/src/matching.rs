//! Bipartite machinery for the `k = 2` structure theorem: the staircase
//! graph `B`, edge flips induced by vertex switchings of the hat Schrijver
//! graph, maximum matchings with König covers, and a backtracking subgraph
//! search for the small cases of the general conjecture.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::families;
use crate::graph::{Graph, PairKind};
use crate::{Error, Result};

/// A bipartite graph with parts `[n]` (left) and `-[n]` (right); vertex `i`
/// of either part is stored as id `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartite {
    pub n: usize,
    /// Edges as (left id, right id), sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Bipartite {
    pub fn degree_left(&self, i: usize) -> usize {
        self.edges.iter().filter(|&&(l, _)| l == i).count()
    }

    pub fn degree_right(&self, j: usize) -> usize {
        self.edges.iter().filter(|&&(_, r)| r == j).count()
    }
}

/// The staircase bipartite graph: `{i, -j}` is an edge exactly when `i < j`,
/// so `d(i) = n - i` and `d(-i) = i - 1`.
pub fn gen_b(n: usize) -> Result<Bipartite> {
    if n < 2 {
        return Err(Error::input("need n >= 2"));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i - 1, j - 1));
        }
    }
    Ok(Bipartite { n, edges })
}

/// A set of flipped staircase edges; `(i, j)` with `i < j` means the edge
/// `{i, -j}` is replaced by `{j, -i}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlipInstance {
    pub n: usize,
    pub flipped: BTreeSet<(usize, usize)>,
}

impl FlipInstance {
    pub fn new(n: usize, flipped: impl IntoIterator<Item = (usize, usize)>) -> Result<FlipInstance> {
        let flipped: BTreeSet<(usize, usize)> = flipped.into_iter().collect();
        for &(i, j) in &flipped {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::input(format!("({i}, {j}) is not a staircase edge")));
            }
        }
        Ok(FlipInstance { n, flipped })
    }

    pub fn from_mask(n: usize, mask: u64) -> FlipInstance {
        let mut flipped = BTreeSet::new();
        let mut bit = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if mask >> bit & 1 == 1 {
                    flipped.insert((i, j));
                }
                bit += 1;
            }
        }
        FlipInstance { n, flipped }
    }

    /// Uniformly random flip set (each staircase edge independently); works
    /// for any n, unlike the 64-bit mask form.
    pub fn random(n: usize, rng: &mut impl Rng) -> FlipInstance {
        let mut flipped = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.random_bool(0.5) {
                    flipped.insert((i, j));
                }
            }
        }
        FlipInstance { n, flipped }
    }
}

/// Applies the flips: each flipped `{i, -j}` becomes `{j, -i}`. The per-index
/// degree sum `d(i) + d(-i) = n - 1` is preserved.
pub fn flip_edges(inst: &FlipInstance) -> Bipartite {
    let n = inst.n;
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if inst.flipped.contains(&(i, j)) {
                edges.push((j - 1, i - 1));
            } else {
                edges.push((i - 1, j - 1));
            }
        }
    }
    edges.sort_unstable();
    Bipartite { n, edges }
}

/// A matching given as (left, right) pairs.
#[derive(Clone, Debug)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

/// Maximum bipartite matching by augmenting paths (deterministic order).
pub fn max_matching(bip: &Bipartite) -> Matching {
    let n = bip.n;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(l, r) in &bip.edges {
        adj[l].push(r);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    let mut match_left: Vec<Option<usize>> = vec![None; n];

    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        match_right: &mut [Option<usize>],
        match_left: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for &r in &adj[l] {
            if visited[r] {
                continue;
            }
            visited[r] = true;
            let free = match match_right[r] {
                None => true,
                Some(l2) => augment(l2, adj, match_right, match_left, visited),
            };
            if free {
                match_right[r] = Some(l);
                match_left[l] = Some(r);
                return true;
            }
        }
        false
    }

    for l in 0..n {
        if match_left[l].is_none() {
            let mut visited = vec![false; n];
            augment(l, &adj, &mut match_right, &mut match_left, &mut visited);
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .filter_map(|l| match_left[l].map(|r| (l, r)))
        .collect();
    Matching { pairs }
}

/// A vertex cover split into left and right part members.
#[derive(Clone, Debug)]
pub struct VertexCover {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl VertexCover {
    pub fn size(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn covers(&self, bip: &Bipartite) -> bool {
        bip.edges
            .iter()
            .all(|&(l, r)| self.left.contains(&l) || self.right.contains(&r))
    }
}

/// Minimum vertex cover from a maximum matching by König's construction:
/// alternate from the unmatched left vertices, then take unreached lefts and
/// reached rights.
pub fn min_vertex_cover(bip: &Bipartite, matching: &Matching) -> VertexCover {
    let n = bip.n;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(l, r) in &bip.edges {
        adj[l].push(r);
    }
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    for &(l, r) in &matching.pairs {
        match_left[l] = Some(r);
        match_right[r] = Some(l);
    }
    let mut seen_left = vec![false; n];
    let mut seen_right = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&l| match_left[l].is_none()).collect();
    for &l in &stack {
        seen_left[l] = true;
    }
    while let Some(l) = stack.pop() {
        for &r in &adj[l] {
            if seen_right[r] {
                continue;
            }
            if match_left[l] == Some(r) {
                continue; // alternate: leave matched edges for the return step
            }
            seen_right[r] = true;
            if let Some(l2) = match_right[r] {
                if !seen_left[l2] {
                    seen_left[l2] = true;
                    stack.push(l2);
                }
            }
        }
    }
    // unreached lefts are all matched; together with reached rights they
    // cover every edge and meet the matching size
    let left: Vec<usize> = (0..n).filter(|&l| !seen_left[l]).collect();
    let right: Vec<usize> = (0..n).filter(|&r| seen_right[r]).collect();
    VertexCover { left, right }
}

/// One failed flip instance, kept for diagnosis.
#[derive(Clone, Debug)]
pub struct K2Failure {
    pub flipped: Vec<(usize, usize)>,
    pub matching_size: usize,
    pub cross_check_ok: bool,
}

/// Outcome of the `k = 2` matching verification.
#[derive(Clone, Debug)]
pub struct K2Report {
    pub n: usize,
    pub instances: u64,
    pub failures: Vec<K2Failure>,
}

impl K2Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// How a campaign enumerates instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { samples: u64, seed: u64 },
}

/// Verifies that every (or each sampled) flip of the staircase graph leaves
/// a matching of size at least `n - 1` (some flips even reach a perfect
/// matching), and cross-validates each matching against the correspondingly
/// switched hat Schrijver graph: the matched pairs must be pairwise joined
/// by negative edges there, giving the `K_{n-1}` clique the structure
/// theorem asserts.
pub fn verify_thm_k2(n: usize, mode: Mode) -> Result<K2Report> {
    if n < 2 {
        return Err(Error::input("need n >= 2"));
    }
    let bits = n * (n - 1) / 2;
    if let Mode::Exhaustive = mode {
        if bits > 20 {
            return Err(Error::input(format!(
                "exhaustive mode needs C(n,2) <= 20, got {bits}"
            )));
        }
    }

    // vertex {i, -j} of the hat Schrijver graph <-> staircase edge (i, j)
    let fam = families::schrijver_signed_hat(n, 2)?;
    let mut pair_of_vertex = Vec::with_capacity(fam.vertices.len());
    let mut vertex_of_pair = std::collections::BTreeMap::new();
    for (vid, s) in fam.vertices.iter().enumerate() {
        let e = s.elements();
        let (i, j) = (e[0] as usize, (-e[1]) as usize);
        pair_of_vertex.push((i, j));
        vertex_of_pair.insert((i, j), vid);
    }

    let mut failures = Vec::new();
    let mut instances = 0u64;
    let mut run = |inst: &FlipInstance| -> Result<()> {
        instances += 1;
        let b_prime = flip_edges(inst);
        let matching = max_matching(&b_prime);
        let mut cross_ok = true;
        if matching.pairs.len() >= n - 1 {
            // recover the matched hat Schrijver vertices and their switch state
            let mut verts: Vec<(usize, bool)> = Vec::with_capacity(matching.pairs.len());
            for &(l, r) in &matching.pairs {
                let (a, b) = (l + 1, r + 1);
                let pair = (a.min(b), a.max(b));
                let flipped = inst.flipped.contains(&pair);
                verts.push((vertex_of_pair[&pair], flipped));
            }
            'pairs: for x in 0..verts.len() {
                for y in x + 1..verts.len() {
                    let (u, fu) = verts[x];
                    let (v, fv) = verts[y];
                    let kind = fam.graph.pair_kind(u, v);
                    let negative_after_switch = match kind {
                        Some(PairKind::Digon) => true,
                        Some(PairKind::Positive) => fu != fv,
                        Some(PairKind::Negative) => fu == fv,
                        None => false,
                    };
                    if !negative_after_switch {
                        cross_ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if matching.pairs.len() < n - 1 || !cross_ok {
            failures.push(K2Failure {
                flipped: inst.flipped.iter().copied().collect(),
                matching_size: matching.pairs.len(),
                cross_check_ok: cross_ok,
            });
        }
        Ok(())
    };

    match mode {
        Mode::Exhaustive => {
            for mask in 0u64..(1 << bits) {
                run(&FlipInstance::from_mask(n, mask))?;
            }
        }
        Mode::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                run(&FlipInstance::random(n, &mut rng))?;
            }
        }
    }
    Ok(K2Report { n, instances, failures })
}

// ---------------------------------------------------------------------------
// Subgraph search for the conjecture's small cases
// ---------------------------------------------------------------------------

/// Verdict of a budgeted subgraph-isomorphism search.
#[derive(Clone, Debug, PartialEq)]
pub enum SubgraphSearch {
    Found(Vec<usize>),
    NotFound,
    Budget,
}

/// Backtracking search for a (not necessarily induced) copy of `pattern`
/// inside `host`, with degree pruning; `node_cap` bounds the effort.
pub fn subgraph_isomorphism(pattern: &Graph, host: &Graph, node_cap: u64) -> SubgraphSearch {
    let np = pattern.order();
    let nh = host.order();
    if np > nh {
        return SubgraphSearch::NotFound;
    }
    if np == 0 {
        return SubgraphSearch::Found(Vec::new());
    }
    let pdeg = pattern.degrees();
    let hdeg = host.degrees();
    let padj = pattern.adjacency();

    // order pattern vertices by connectivity to already-placed ones, seeding
    // from the highest degree
    let mut order: Vec<usize> = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    let first = (0..np).max_by_key(|&v| (pdeg[v], usize::MAX - v)).unwrap();
    order.push(first);
    placed[first] = true;
    while order.len() < np {
        let next = (0..np)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let attached = padj[v].iter().filter(|&&w| placed[w]).count();
                (attached, pdeg[v], usize::MAX - v)
            })
            .unwrap();
        order.push(next);
        placed[next] = true;
    }

    let mut image = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    let mut nodes = 0u64;

    fn rec(
        depth: usize,
        order: &[usize],
        padj: &[Vec<usize>],
        pdeg: &[usize],
        host: &Graph,
        hdeg: &[usize],
        image: &mut [usize],
        used: &mut [bool],
        nodes: &mut u64,
        cap: u64,
    ) -> SubgraphSearch {
        if depth == order.len() {
            return SubgraphSearch::Found(image.to_vec());
        }
        *nodes += 1;
        if *nodes > cap {
            return SubgraphSearch::Budget;
        }
        let v = order[depth];
        'cands: for h in 0..host.order() {
            if used[h] || hdeg[h] < pdeg[v] {
                continue;
            }
            for &w in &padj[v] {
                if image[w] != usize::MAX && !host.has_edge(h, image[w]) {
                    continue 'cands;
                }
            }
            image[v] = h;
            used[h] = true;
            match rec(depth + 1, order, padj, pdeg, host, hdeg, image, used, nodes, cap) {
                SubgraphSearch::NotFound => {}
                other => return other,
            }
            image[v] = usize::MAX;
            used[h] = false;
        }
        SubgraphSearch::NotFound
    }

    rec(0, &order, &padj, &pdeg, host, &hdeg, &mut image, &mut used, &mut nodes, node_cap)
}

/// Per-switching observation for the conjecture exploration.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub n: usize,
    pub k: usize,
    /// Vertex count of the target Schrijver graph.
    pub target: (usize, usize),
    pub switchings: u64,
    pub found: u64,
    pub not_found: Vec<u64>,
    pub budget_hits: Vec<u64>,
}

impl ConjectureReport {
    pub fn all_found(&self) -> bool {
        self.not_found.is_empty() && self.budget_hits.is_empty()
    }
}

/// Searches each (sampled) switching of the hat Schrijver graph for the
/// conjectured classical Schrijver subgraph inside its negative subgraph:
/// `S(n-1, k/2)` for even `k`, `S(n, (k+1)/2)` for odd `k`. A miss is an
/// observation, not an assertion failure.
pub fn check_conjecture_small(n: usize, k: usize, mode: Mode) -> Result<ConjectureReport> {
    let (tm, tk) = if k % 2 == 0 { (n - 1, k / 2) } else { (n, (k + 1) / 2) };
    let target = families::schrijver(tm, tk)?;
    if target.vertices.len() > 15 {
        return Err(Error::input(format!(
            "target S({tm},{tk}) has {} vertices, cap is 15",
            target.vertices.len()
        )));
    }
    let host = families::schrijver_signed_hat(n, k)?;
    let hn = host.graph.order();
    if hn > 40 {
        return Err(Error::input(format!("host has {hn} vertices, cap is 40")));
    }

    let mut report = ConjectureReport {
        n,
        k,
        target: (tm, tk),
        switchings: 0,
        found: 0,
        not_found: Vec::new(),
        budget_hits: Vec::new(),
    };
    let run = |mask: u64, report: &mut ConjectureReport| -> Result<()> {
        report.switchings += 1;
        let x: Vec<usize> = (0..hn.saturating_sub(1))
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let switched = host.graph.switch(&x)?;
        let neg = switched.negative_subgraph();
        match subgraph_isomorphism(&target.graph, &neg, 2_000_000) {
            SubgraphSearch::Found(_) => report.found += 1,
            SubgraphSearch::NotFound => report.not_found.push(mask),
            SubgraphSearch::Budget => report.budget_hits.push(mask),
        }
        Ok(())
    };

    match mode {
        Mode::Exhaustive => {
            let bits = hn.saturating_sub(1);
            if bits > 20 {
                return Err(Error::input(format!(
                    "exhaustive mode needs 2^{bits} <= 2^20 switchings"
                )));
            }
            for mask in 0u64..(1 << bits) {
                run(mask, &mut report)?;
            }
        }
        Mode::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let bits = hn.saturating_sub(1).min(63);
            for _ in 0..samples {
                let mask = rng.random::<u64>() & ((1u64 << bits) - 1);
                run(mask, &mut report)?;
            }
        }
    }
    Ok(report)
}
