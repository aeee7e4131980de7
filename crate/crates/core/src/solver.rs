//! Exact chromatic numbers with certificates.
//!
//! The balanced chromatic number is computed by branch-and-bound directly on
//! (colour, sign) labels: an edge `(u, v, s)` whose endpoints share a colour
//! forces `sign(u) * sign(v) * s = +`, and a digon forces distinct colours.
//! The classical chromatic number uses the same engine without signs. Both
//! searches are deterministic: vertices are chosen by fewest remaining
//! labels (ties by smallest id), colours are introduced in increasing order,
//! and the first vertex of every class is pinned to sign `+`.
//!
//! Two independent oracles back the main solver: direct enumeration of set
//! partitions, and minimization of `chi(negative subgraph)` over all
//! switchings.

use std::time::{Duration, Instant};

use crate::graph::{Balance, BalancedColoring, Graph, PairKind, Sign, SignedGraph};
use crate::{Error, Result};

/// Search effort counters.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Exact balanced chromatic number with a verifying certificate.
#[derive(Clone, Debug)]
pub struct ChiBResult {
    pub value: usize,
    pub coloring: BalancedColoring,
    /// Sound lower bound the search started from.
    pub lower_bound: usize,
    /// Vertices of the digon clique backing the lower bound, when one of
    /// size >= 2 exists.
    pub lower_bound_witness: Option<Vec<usize>>,
    pub stats: SolveStats,
}

/// Exact chromatic number of an unsigned graph with a proper colouring.
#[derive(Clone, Debug)]
pub struct ChiResult {
    pub value: usize,
    pub colors: Vec<usize>,
    /// Clique backing the lower bound.
    pub clique: Vec<usize>,
    pub stats: SolveStats,
}

struct Budget {
    deadline: Option<Instant>,
    nodes: u64,
}

impl Budget {
    fn new(limit: Option<Duration>) -> Budget {
        Budget { deadline: limit.map(|d| Instant::now() + d), nodes: 0 }
    }

    /// Counts a node; true when the deadline has passed.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                return Instant::now() > d;
            }
        }
        false
    }
}

struct TimedOut;

// ---------------------------------------------------------------------------
// Clique bounds
// ---------------------------------------------------------------------------

/// Deterministic greedy clique: highest degree first, ties by id.
fn greedy_clique(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (usize::MAX - adj[v].len(), v));
    let mut clique: Vec<usize> = Vec::new();
    for &v in &by_degree {
        if clique.iter().all(|&u| adj[u].binary_search(&v).is_ok()) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// Exact maximum clique by branch-and-bound, falling back to the best clique
/// found when the node cap is hit (the result is a clique either way).
fn max_clique(g: &Graph, node_cap: u64) -> Vec<usize> {
    let mut adj = g.adjacency();
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut best = greedy_clique(&adj);
    let n = g.order();
    if n == 0 {
        return best;
    }
    let mut nodes = 0u64;
    let mut current: Vec<usize> = Vec::new();
    // Candidates ordered by degree descending so large extensions are tried
    // first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - adj[v].len(), v));

    fn extend(
        adj: &[Vec<usize>],
        current: &mut Vec<usize>,
        cand: &[usize],
        best: &mut Vec<usize>,
        nodes: &mut u64,
        cap: u64,
    ) {
        *nodes += 1;
        if *nodes > cap {
            return;
        }
        if current.len() > best.len() {
            *best = current.clone();
        }
        if current.len() + cand.len() <= best.len() {
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if current.len() + (cand.len() - i) <= best.len() {
                break;
            }
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&w| adj[v].binary_search(&w).is_ok())
                .collect();
            current.push(v);
            extend(adj, current, &next, best, nodes, cap);
            current.pop();
        }
    }

    extend(&adj, &mut current, &order, &mut best, &mut nodes, node_cap);
    best.sort_unstable();
    best
}

/// Largest clique of the digon graph: vertex pairs joined by digons must all
/// receive distinct colours in any balanced colouring.
pub fn digon_clique(g: &SignedGraph) -> Vec<usize> {
    let mut digons = Vec::new();
    let pair_adj = g.pair_adjacency();
    for (u, entries) in pair_adj.iter().enumerate() {
        for &(v, kind) in entries {
            if u < v && kind == PairKind::Digon {
                digons.push((u, v));
            }
        }
    }
    let dg = Graph::from_edges(g.order(), digons).expect("ids valid");
    max_clique(&dg, 200_000)
}

// ---------------------------------------------------------------------------
// Balanced-colouring search
// ---------------------------------------------------------------------------

/// Per-vertex state index: `2 * colour + (sign == Minus)`.
struct SignedSearch<'a> {
    pair_adj: &'a [Vec<(usize, PairKind)>],
    p: usize,
    domain: Vec<u64>,
    assigned: Vec<Option<(usize, Sign)>>,
    unassigned: usize,
    max_used: usize,
    trail: Vec<(usize, u64)>,
}

impl<'a> SignedSearch<'a> {
    fn new(pair_adj: &'a [Vec<(usize, PairKind)>], p: usize) -> SignedSearch<'a> {
        let n = pair_adj.len();
        assert!(p <= 31, "colour budget too large for the state encoding");
        let full = if 2 * p == 64 { u64::MAX } else { (1u64 << (2 * p)) - 1 };
        SignedSearch {
            pair_adj,
            p,
            domain: vec![full; n],
            assigned: vec![None; n],
            unassigned: n,
            max_used: 0,
            trail: Vec::new(),
        }
    }

    fn allowed_mask(&self) -> u64 {
        let used = if 2 * self.max_used == 64 { u64::MAX } else { (1u64 << (2 * self.max_used)) - 1 };
        if self.max_used < self.p {
            // fresh colour available, sign pinned to +
            used | 1u64 << (2 * self.max_used)
        } else {
            used
        }
    }

    /// Assigns a state and prunes neighbours; false on a domain wipeout.
    /// The caller records the trail mark and `max_used` beforehand and
    /// rewinds with [`SignedSearch::undo`] either way.
    fn assign(&mut self, v: usize, state: u32) -> bool {
        let color = (state / 2) as usize;
        let sign = if state % 2 == 0 { Sign::Plus } else { Sign::Minus };
        self.assigned[v] = Some((color, sign));
        self.unassigned -= 1;
        self.max_used = self.max_used.max(color + 1);
        for &(w, kind) in &self.pair_adj[v] {
            if self.assigned[w].is_some() {
                continue;
            }
            let remove = match kind {
                // same colour forces same sign across a positive edge,
                // opposite signs across a negative edge
                PairKind::Positive => 1u64 << (2 * color + usize::from(sign == Sign::Plus)),
                PairKind::Negative => 1u64 << (2 * color + usize::from(sign == Sign::Minus)),
                PairKind::Digon => 3u64 << (2 * color),
            };
            let hit = self.domain[w] & remove;
            if hit != 0 {
                self.trail.push((w, hit));
                self.domain[w] &= !remove;
                if self.domain[w] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, v: usize, mark: usize, old_max: usize) {
        while self.trail.len() > mark {
            let (w, bits) = self.trail.pop().unwrap();
            self.domain[w] |= bits;
        }
        self.assigned[v] = None;
        self.unassigned += 1;
        self.max_used = old_max;
    }

    fn search(&mut self, budget: &mut Budget) -> std::result::Result<bool, TimedOut> {
        if budget.tick() {
            return Err(TimedOut);
        }
        if self.unassigned == 0 {
            return Ok(true);
        }
        let allowed = self.allowed_mask();
        let mut pick = usize::MAX;
        let mut pick_count = u32::MAX;
        for v in 0..self.domain.len() {
            if self.assigned[v].is_some() {
                continue;
            }
            let eff = (self.domain[v] & allowed).count_ones();
            if eff == 0 {
                return Ok(false);
            }
            if eff < pick_count {
                pick_count = eff;
                pick = v;
                if eff == 1 {
                    break;
                }
            }
        }
        let v = pick;
        let mut states = self.domain[v] & allowed;
        while states != 0 {
            let state = states.trailing_zeros();
            states &= states - 1;
            let mark = self.trail.len();
            let old_max = self.max_used;
            if self.assign(v, state) && self.search(budget)? {
                return Ok(true);
            }
            self.undo(v, mark, old_max);
        }
        Ok(false)
    }
}

// ---------------------------------------------------------------------------

fn greedy_balanced(pair_adj: &[Vec<(usize, PairKind)>]) -> (usize, Vec<(usize, Sign)>) {
    let n = pair_adj.len();
    let mut label: Vec<Option<(usize, Sign)>> = vec![None; n];
    let mut used = 0usize;
    for v in 0..n {
        let mut chosen = None;
        'colors: for c in 0..=used {
            for sign in [Sign::Plus, Sign::Minus] {
                if c == used && sign == Sign::Minus {
                    continue;
                }
                let ok = pair_adj[v].iter().all(|&(w, kind)| match label[w] {
                    Some((cw, sw)) if cw == c => match kind {
                        PairKind::Positive => sw == sign,
                        PairKind::Negative => sw != sign,
                        PairKind::Digon => false,
                    },
                    _ => true,
                });
                if ok {
                    chosen = Some((c, sign));
                    break 'colors;
                }
            }
        }
        let (c, s) = chosen.expect("a fresh colour always fits");
        used = used.max(c + 1);
        label[v] = Some((c, s));
    }
    (used, label.into_iter().map(|l| l.unwrap()).collect())
}

fn chi_b_feasible(
    pair_adj: &[Vec<(usize, PairKind)>],
    p: usize,
    seed_clique: &[usize],
    budget: &mut Budget,
) -> std::result::Result<Option<Vec<(usize, Sign)>>, TimedOut> {
    let mut search = SignedSearch::new(pair_adj, p);
    for (i, &v) in seed_clique.iter().enumerate() {
        // digon-clique vertices take distinct colours; each is the first in
        // its class so the sign pin to + is a valid symmetry break
        if !search.assign(v, 2 * i as u32) {
            return Ok(None);
        }
    }
    if search.search(budget)? {
        Ok(Some(
            search
                .assigned
                .iter()
                .map(|a| a.expect("search complete"))
                .collect(),
        ))
    } else {
        Ok(None)
    }
}

/// Exact balanced chromatic number.
///
/// `upper_hint` narrows the search when the caller already knows a candidate
/// value (it is verified, never trusted). On budget exhaustion the error
/// carries the bracketing bounds established so far.
pub fn chi_b_exact(
    g: &SignedGraph,
    upper_hint: Option<usize>,
    budget: Option<Duration>,
) -> Result<ChiBResult> {
    let start = Instant::now();
    let mut budget = Budget::new(budget);
    let n = g.order();
    if n == 0 {
        return Ok(ChiBResult {
            value: 0,
            coloring: BalancedColoring { colors: Vec::new(), witness: Vec::new() },
            lower_bound: 0,
            lower_bound_witness: None,
            stats: SolveStats { nodes: 0, elapsed: start.elapsed() },
        });
    }
    if let Balance::Balanced { switching } = g.is_balanced() {
        return Ok(ChiBResult {
            value: 1,
            coloring: BalancedColoring { colors: vec![0; n], witness: switching },
            lower_bound: 1,
            lower_bound_witness: None,
            stats: SolveStats { nodes: 0, elapsed: start.elapsed() },
        });
    }

    let pair_adj = g.pair_adjacency();
    let clique = digon_clique(g);
    let mut lower = 2.max(clique.len());
    let (greedy_count, greedy_labels) = greedy_balanced(&pair_adj);
    let mut upper = greedy_count;
    let mut best_labels = greedy_labels;

    let finish = |value: usize,
                  labels: Vec<(usize, Sign)>,
                  lower: usize,
                  clique: &[usize],
                  budget: &Budget| ChiBResult {
        value,
        coloring: BalancedColoring {
            colors: labels.iter().map(|&(c, _)| c).collect(),
            witness: labels.iter().map(|&(_, s)| s).collect(),
        },
        lower_bound: lower,
        lower_bound_witness: if clique.len() >= 2 { Some(clique.to_vec()) } else { None },
        stats: SolveStats { nodes: budget.nodes, elapsed: start.elapsed() },
    };

    // A correct hint tightens the bracket from both sides.
    if let Some(h) = upper_hint {
        if h >= lower && h < upper {
            match chi_b_feasible(&pair_adj, h, &clique, &mut budget) {
                Ok(Some(labels)) => {
                    upper = h;
                    best_labels = labels;
                }
                Ok(None) => lower = h + 1,
                Err(TimedOut) => {
                    return Err(Error::Timeout { lower, upper });
                }
            }
        }
    }

    let mut p = lower;
    while p < upper {
        match chi_b_feasible(&pair_adj, p, &clique, &mut budget) {
            Ok(Some(labels)) => {
                upper = p;
                best_labels = labels;
                break;
            }
            Ok(None) => {
                p += 1;
            }
            Err(TimedOut) => return Err(Error::Timeout { lower: p, upper }),
        }
    }
    Ok(finish(upper, best_labels, lower.min(upper), &clique, &budget))
}

// ---------------------------------------------------------------------------
// Classical chromatic number
// ---------------------------------------------------------------------------

struct ColorSearch<'a> {
    adj: &'a [Vec<usize>],
    p: usize,
    domain: Vec<u64>,
    assigned: Vec<Option<usize>>,
    unassigned: usize,
    max_used: usize,
    trail: Vec<(usize, u64)>,
}

impl<'a> ColorSearch<'a> {
    fn new(adj: &'a [Vec<usize>], p: usize) -> ColorSearch<'a> {
        assert!(p <= 63, "colour budget too large");
        let full = (1u64 << p) - 1;
        ColorSearch {
            adj,
            p,
            domain: vec![full; adj.len()],
            assigned: vec![None; adj.len()],
            unassigned: adj.len(),
            max_used: 0,
            trail: Vec::new(),
        }
    }

    fn allowed_mask(&self) -> u64 {
        let fresh = if self.max_used < self.p { 1u64 << self.max_used } else { 0 };
        ((1u64 << self.max_used) - 1) | fresh
    }

    fn assign(&mut self, v: usize, color: usize) -> bool {
        self.assigned[v] = Some(color);
        self.unassigned -= 1;
        self.max_used = self.max_used.max(color + 1);
        let bit = 1u64 << color;
        for &w in &self.adj[v] {
            if self.assigned[w].is_some() {
                continue;
            }
            if self.domain[w] & bit != 0 {
                self.trail.push((w, bit));
                self.domain[w] &= !bit;
                if self.domain[w] == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn undo_to(&mut self, v: usize, mark: usize, old_max: usize) {
        while self.trail.len() > mark {
            let (w, bits) = self.trail.pop().unwrap();
            self.domain[w] |= bits;
        }
        self.assigned[v] = None;
        self.unassigned += 1;
        self.max_used = old_max;
    }

    fn search(&mut self, budget: &mut Budget) -> std::result::Result<bool, TimedOut> {
        if budget.tick() {
            return Err(TimedOut);
        }
        if self.unassigned == 0 {
            return Ok(true);
        }
        let allowed = self.allowed_mask();
        let mut pick = usize::MAX;
        let mut pick_count = u32::MAX;
        for v in 0..self.domain.len() {
            if self.assigned[v].is_some() {
                continue;
            }
            let eff = (self.domain[v] & allowed).count_ones();
            if eff == 0 {
                return Ok(false);
            }
            if eff < pick_count {
                pick_count = eff;
                pick = v;
                if eff == 1 {
                    break;
                }
            }
        }
        let v = pick;
        let mut states = self.domain[v] & allowed;
        while states != 0 {
            let color = states.trailing_zeros() as usize;
            states &= states - 1;
            let mark = self.trail.len();
            let old_max = self.max_used;
            if self.assign(v, color) && self.search(budget)? {
                return Ok(true);
            }
            self.undo_to(v, mark, old_max);
        }
        Ok(false)
    }
}

fn greedy_coloring(adj: &[Vec<usize>]) -> (usize, Vec<usize>) {
    // DSATUR greedy: repeatedly colour the vertex seeing the most distinct
    // neighbour colours (ties: higher degree, then smaller id).
    let n = adj.len();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    let mut used = 0usize;
    for _ in 0..n {
        let mut pick = usize::MAX;
        let mut pick_key = (0usize, 0usize, usize::MAX);
        for v in 0..n {
            if colors[v].is_some() {
                continue;
            }
            let mut seen = 0u64;
            for &w in &adj[v] {
                if let Some(c) = colors[w] {
                    seen |= 1u64 << (c as u32 & 63);
                }
            }
            let key = (seen.count_ones() as usize, adj[v].len(), usize::MAX - v);
            if pick == usize::MAX || key > pick_key {
                pick = v;
                pick_key = key;
            }
        }
        let v = pick;
        let mut forbidden = vec![false; used + 1];
        for &w in &adj[v] {
            if let Some(c) = colors[w] {
                if c < forbidden.len() {
                    forbidden[c] = true;
                }
            }
        }
        let c = (0..).find(|&c| c >= forbidden.len() || !forbidden[c]).unwrap();
        colors[v] = Some(c);
        used = used.max(c + 1);
    }
    (used, colors.into_iter().map(|c| c.unwrap()).collect())
}

fn chi_feasible(
    adj: &[Vec<usize>],
    p: usize,
    seed_clique: &[usize],
    budget: &mut Budget,
) -> std::result::Result<Option<Vec<usize>>, TimedOut> {
    let mut search = ColorSearch::new(adj, p);
    let mut ok = true;
    for (i, &v) in seed_clique.iter().enumerate() {
        if !search.assign(v, i) {
            ok = false;
            break;
        }
    }
    if ok && search.search(budget)? {
        Ok(Some(search.assigned.iter().map(|a| a.expect("complete")).collect()))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number of an unsigned graph.
pub fn chi_exact(g: &Graph, budget: Option<Duration>) -> Result<ChiResult> {
    let start = Instant::now();
    let mut budget = Budget::new(budget);
    let n = g.order();
    if n == 0 {
        return Ok(ChiResult {
            value: 0,
            colors: Vec::new(),
            clique: Vec::new(),
            stats: SolveStats { nodes: 0, elapsed: start.elapsed() },
        });
    }
    if g.edge_count() == 0 {
        return Ok(ChiResult {
            value: 1,
            colors: vec![0; n],
            clique: vec![0],
            stats: SolveStats { nodes: 0, elapsed: start.elapsed() },
        });
    }
    let adj = {
        let mut a = g.adjacency();
        for l in &mut a {
            l.sort_unstable();
        }
        a
    };
    let clique = max_clique(g, 500_000);
    let lower = clique.len().max(2);
    let (greedy_count, greedy_colors) = greedy_coloring(&adj);
    let mut upper = greedy_count;
    let mut best = greedy_colors;

    let mut p = lower;
    while p < upper {
        match chi_feasible(&adj, p, &clique, &mut budget) {
            Ok(Some(colors)) => {
                upper = p;
                best = colors;
                break;
            }
            Ok(None) => p += 1,
            Err(TimedOut) => return Err(Error::Timeout { lower: p, upper }),
        }
    }
    Ok(ChiResult {
        value: upper,
        colors: best,
        clique,
        stats: SolveStats { nodes: budget.nodes, elapsed: start.elapsed() },
    })
}

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

/// Minimum number of balanced classes by direct enumeration of set
/// partitions (restricted-growth order), pruning any class that goes
/// unbalanced: adding vertices never rebalances a class.
pub fn chi_b_brute_force(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    if n > 12 {
        return Err(Error::input(format!("brute force capped at order 12, got {n}")));
    }
    if n == 0 {
        return Ok(0);
    }

    fn rec(g: &SignedGraph, v: usize, classes: &mut Vec<Vec<usize>>, best: &mut usize) {
        if classes.len() >= *best {
            return;
        }
        if v == g.order() {
            *best = classes.len();
            return;
        }
        for j in 0..classes.len() {
            classes[j].push(v);
            let balanced = g
                .is_balanced_set(&classes[j])
                .expect("class members are valid ids")
                .is_balanced();
            if balanced {
                rec(g, v + 1, classes, best);
            }
            classes[j].pop();
        }
        if classes.len() + 1 < *best {
            classes.push(vec![v]);
            rec(g, v + 1, classes, best);
            classes.pop();
        }
    }

    let mut best = n; // singletons always work
    let mut classes = Vec::new();
    rec(g, 0, &mut classes, &mut best);
    Ok(best)
}

/// Minimum over all switchings of the chromatic number of the negative
/// subgraph (the zero-free duality route).
pub fn chi_b_via_switchings(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    if n > 16 {
        return Err(Error::input(format!("switching enumeration capped at order 16, got {n}")));
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    // switching X and its complement give the same signature: fix vertex 0
    for mask in 0u32..(1 << (n - 1)) {
        let x: Vec<usize> = (0..n - 1).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let switched = g.switch(&x)?;
        let neg = switched.negative_subgraph();
        let value = chi_exact(&neg, None)?.value;
        best = best.min(value);
        if best == 1 {
            break;
        }
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Criticality
// ---------------------------------------------------------------------------

/// Per-vertex deletion values for a criticality check.
#[derive(Clone, Debug)]
pub struct CriticalityReport {
    pub target: usize,
    pub deletion_values: Vec<usize>,
    pub critical: bool,
}

/// Whether deleting any single vertex drops the balanced chromatic number
/// from `target` to `target - 1`. `chi_b(g) == target` is verified first.
pub fn is_vertex_critical(
    g: &SignedGraph,
    target: usize,
    budget: Option<Duration>,
) -> Result<CriticalityReport> {
    let whole = chi_b_exact(g, Some(target), budget)?;
    if whole.value != target {
        return Err(Error::input(format!(
            "chi_b(g) = {} but target = {target}",
            whole.value
        )));
    }
    let mut deletion_values = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let sub = g.delete_vertex(v)?;
        let res = chi_b_exact(&sub, Some(target - 1), budget)?;
        deletion_values.push(res.value);
    }
    let critical = deletion_values.iter().all(|&val| val == target - 1);
    Ok(CriticalityReport { target, deletion_values, critical })
}
