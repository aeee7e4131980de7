//! Sphere-side machinery: the odd-moment-curve embedding, hemisphere
//! searches for alternating sets, Borsuk signed-graph discretizations, the
//! homomorphism into Schrijver signed graphs, and antipodal connectivity of
//! symmetric classes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::families::SignedSubset;
use crate::graph::{Sign, SignedGraph};
use crate::{Error, Result};

/// Tolerance under which an inner product counts as boundary-ambiguous.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// An antipodally consistent placement of `±[n]` on the sphere `S^d`:
/// `point(-i)` is stored as the exact negation of `point(i)`.
#[derive(Clone, Debug)]
pub struct SphereEmbedding {
    pub d: usize,
    pub n: usize,
    /// Unit vectors for `i = 1..=n`; negative indices negate on access.
    points: Vec<Vec<f64>>,
}

impl SphereEmbedding {
    /// The image of `i ∈ ±[n]`.
    pub fn point(&self, i: i32) -> Vec<f64> {
        let idx = (i.unsigned_abs() - 1) as usize;
        if i > 0 {
            self.points[idx].clone()
        } else {
            self.points[idx].iter().map(|&x| -x).collect()
        }
    }

    /// Inner product of the image of `i` with a direction, without cloning.
    pub fn dot(&self, i: i32, a: &[f64]) -> f64 {
        let idx = (i.unsigned_abs() - 1) as usize;
        let raw: f64 = self.points[idx].iter().zip(a).map(|(x, y)| x * y).sum();
        if i > 0 {
            raw
        } else {
            -raw
        }
    }
}

/// Places `±[n]` on `S^(n-k)` along the odd moment curve: the raw point for
/// `i ∈ [n]` is `(-1)^i (i, i^3, …, i^(2d+1))`, normalized.
///
/// Raw coordinates are computed in integer arithmetic and must stay exactly
/// representable in an `f64`.
pub fn moment_embedding(n: usize, k: usize) -> Result<SphereEmbedding> {
    if k == 0 || k > n {
        return Err(Error::input(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    let d = n - k;
    let top_power = 2 * d as u32 + 1;
    let largest = (n as i128).checked_pow(top_power).ok_or_else(|| {
        Error::input(format!("moment coordinates overflow: {n}^{top_power}"))
    })?;
    if largest > (1i128 << 53) {
        return Err(Error::input(format!(
            "moment coordinate {n}^{top_power} exceeds exact f64 range"
        )));
    }
    let mut points = Vec::with_capacity(n);
    for i in 1..=n as i128 {
        let parity = if i % 2 == 0 { 1.0 } else { -1.0 };
        let mut v: Vec<f64> = (0..=d)
            .map(|j| parity * (i.pow(2 * j as u32 + 1) as f64))
            .collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut v {
            *x /= norm;
        }
        points.push(v);
    }
    Ok(SphereEmbedding { d, n, points })
}

/// Members of the open hemisphere centered at `a`, with boundary-ambiguous
/// indices flagged separately.
#[derive(Clone, Debug)]
pub struct HemisphereMembers {
    /// Indices `i ∈ ±[n]` with `point(i) · a > 0`, ascending by `(|i|, sign)`.
    pub members: Vec<i32>,
    /// Indices whose inner product has absolute value at most the tolerance.
    pub boundary: Vec<i32>,
}

pub fn hemisphere_members(emb: &SphereEmbedding, a: &[f64]) -> HemisphereMembers {
    let mut members = Vec::new();
    let mut boundary = Vec::new();
    for m in 1..=emb.n as i32 {
        let dot = emb.dot(m, a);
        if dot.abs() <= BOUNDARY_TOL {
            boundary.push(m);
            boundary.push(-m);
        } else if dot > 0.0 {
            members.push(m);
        } else {
            members.push(-m);
        }
    }
    HemisphereMembers { members, boundary }
}

/// Result of searching a hemisphere for an alternating `k`-set.
#[derive(Clone, Debug, PartialEq)]
pub enum HemisphereSearch {
    Found(SignedSubset),
    /// No alternating `k`-set lies fully inside the hemisphere.
    Absent,
    /// Some point is within tolerance of the boundary; perturb the direction
    /// and retry.
    BoundaryRetry,
}

/// All alternating `k`-subsets of `±[n]` in lexicographic vector order.
pub fn alternating_sets(n: usize, k: usize) -> Result<Vec<SignedSubset>> {
    Ok(crate::families::signed_subsets(n, k)?
        .into_iter()
        .filter(SignedSubset::is_alternating)
        .collect())
}

/// Finds the lexicographically first alternating `k`-set contained in the
/// open hemisphere centered at `a` (no boundary flags).
pub fn find_alternating_in_hemisphere(
    emb: &SphereEmbedding,
    k: usize,
    a: &[f64],
) -> Result<HemisphereSearch> {
    let sets = alternating_sets(emb.n, k)?;
    Ok(find_alternating_cached(emb, &sets, a))
}

/// Same search against a precomputed alternating-set list (for campaigns).
pub fn find_alternating_cached(
    emb: &SphereEmbedding,
    sets: &[SignedSubset],
    a: &[f64],
) -> HemisphereSearch {
    // side[m-1]: whether +m is strictly inside; boundary kills the search
    let mut side = vec![false; emb.n];
    for m in 1..=emb.n {
        let dot = emb.dot(m as i32, a);
        if dot.abs() <= BOUNDARY_TOL {
            return HemisphereSearch::BoundaryRetry;
        }
        side[m - 1] = dot > 0.0;
    }
    'sets: for s in sets {
        for e in s.elements() {
            let inside = if e > 0 { side[(e - 1) as usize] } else { !side[(-e - 1) as usize] };
            if !inside {
                continue 'sets;
            }
        }
        return HemisphereSearch::Found(s.clone());
    }
    HemisphereSearch::Absent
}

/// The sign pattern `X = {i ∈ ±[n] : (-1)^i p(i) > 0}` of an odd polynomial
/// `p(x) = a_1 x + a_2 x^3 + …`, with the diagnostic flags the moment-curve
/// argument cares about.
#[derive(Clone, Debug, PartialEq)]
pub struct SignPattern {
    pub set: Vec<i32>,
    /// Whether `|X|` equals `k = n - d` for the polynomial's degree `2d+1`.
    pub size_is_k: bool,
    /// Whether the elements alternate in sign by increasing absolute value.
    pub alternating: bool,
}

/// Outcome of a sign-pattern evaluation.
#[derive(Clone, Debug, PartialEq)]
pub enum PatternOutcome {
    Pattern(SignPattern),
    /// `p` vanishes at this integer; perturb the coefficients and retry.
    RootAt(i32),
}

pub fn alternating_sign_pattern(coeffs: &[f64], n: usize) -> Result<PatternOutcome> {
    if coeffs.is_empty() {
        return Err(Error::input("need at least one coefficient"));
    }
    let d = coeffs.len() - 1;
    if n <= d {
        return Err(Error::input(format!("need n > d, got n={n}, d={d}")));
    }
    let p = |x: f64| -> f64 {
        let x2 = x * x;
        let mut acc = 0.0;
        for &c in coeffs.iter().rev() {
            acc = acc * x2 + c;
        }
        acc * x
    };
    let mut set = Vec::new();
    for m in 1..=n as i32 {
        for i in [m, -m] {
            let value = p(f64::from(i));
            if value == 0.0 {
                return Ok(PatternOutcome::RootAt(i));
            }
            let sign_factor = if i.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            if sign_factor * value > 0.0 {
                set.push(i);
            }
        }
    }
    set.sort_by_key(|&i| (i.abs(), i));
    let k = n - d;
    let size_is_k = set.len() == k;
    let alternating = set.windows(2).all(|w| (w[0] > 0) != (w[1] > 0));
    Ok(PatternOutcome::Pattern(SignPattern { set, size_is_k, alternating }))
}

/// A finite antipodally closed subset of `S^d` together with the Borsuk
/// signed graph it induces: positive edges join points at distance at most
/// `eps`, negative edges join points whose antipodes are that close.
#[derive(Clone, Debug)]
pub struct BorsukDiscretization {
    pub d: usize,
    pub eps: f64,
    pub points: Vec<Vec<f64>>,
    /// `antipode[i]` is the index of the exact negation of point `i`.
    pub antipode: Vec<usize>,
    pub graph: SignedGraph,
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn neg_dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x + y) * (x + y)).sum()
}

/// Seeded points on `S^d` by Gaussian normalization.
pub fn sample_sphere(d: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = StandardNormal;
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<f64> = (0..=d).map(|_| normal.sample(&mut rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        out.push(v.into_iter().map(|x| x / norm).collect());
    }
    out
}

/// Builds a Borsuk discretization.
///
/// For `d = 1` the points are `2 * resolution` equally spaced circle points,
/// offset by half a step so none lands exactly on a coordinate axis or other
/// structured boundary. For `d >= 2`, `resolution` seeded points are drawn
/// uniformly and closed under exact negation.
pub fn borsuk_discretization(
    d: usize,
    eps: f64,
    resolution: usize,
    seed: u64,
) -> Result<BorsukDiscretization> {
    if d < 1 {
        return Err(Error::input("need d >= 1"));
    }
    if !(eps > 0.0 && eps < 2.0) {
        return Err(Error::input("need 0 < eps < 2"));
    }
    if resolution < 2 {
        return Err(Error::input("need resolution >= 2"));
    }
    let half: Vec<Vec<f64>> = if d == 1 {
        (0..resolution)
            .map(|j| {
                let theta = (j as f64 + 0.5) * std::f64::consts::PI / resolution as f64;
                vec![theta.cos(), theta.sin()]
            })
            .collect()
    } else {
        sample_sphere(d, resolution, seed)
    };
    let count = half.len();
    let mut points = half;
    for i in 0..count {
        let neg: Vec<f64> = points[i].iter().map(|&x| -x).collect();
        points.push(neg);
    }
    let antipode: Vec<usize> =
        (0..2 * count).map(|i| if i < count { i + count } else { i - count }).collect();

    let eps2 = eps * eps;
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if dist2(&points[i], &points[j]) <= eps2 {
                edges.push((i, j, Sign::Plus));
            }
            if neg_dist2(&points[i], &points[j]) <= eps2 {
                edges.push((i, j, Sign::Minus));
            }
        }
    }
    let graph = SignedGraph::from_edges(points.len(), edges)?.with_labels(
        points
            .iter()
            .map(|p| {
                p.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(" ")
            })
            .collect(),
    )?;
    Ok(BorsukDiscretization { d, eps, points, antipode, graph })
}

/// A verified vertex map from a Borsuk discretization into `SS(n, k)`.
#[derive(Clone, Debug)]
pub struct HomReport {
    pub images: Vec<SignedSubset>,
    /// Edges whose images break the sign-preserving homomorphism rules.
    pub violations: Vec<(usize, usize, Sign)>,
}

impl HomReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Maps every discretization point to the first alternating `k`-set in its
/// hemisphere and checks the map edge by edge: a positive edge must land on
/// equal or positively adjacent vertices, a negative edge on disjoint
/// (negatively adjacent, possibly antipodal) vertices.
pub fn borsuk_to_schrijver_hom(
    disc: &BorsukDiscretization,
    emb: &SphereEmbedding,
    k: usize,
) -> Result<HomReport> {
    if emb.d != disc.d {
        return Err(Error::input(format!(
            "embedding lives on S^{} but discretization on S^{}",
            emb.d, disc.d
        )));
    }
    let sets = alternating_sets(emb.n, k)?;
    let mut images = Vec::with_capacity(disc.points.len());
    for (idx, x) in disc.points.iter().enumerate() {
        match find_alternating_cached(emb, &sets, x) {
            HemisphereSearch::Found(s) => images.push(s),
            HemisphereSearch::Absent => {
                return Err(Error::input(format!(
                    "no alternating set in the hemisphere of point {idx}"
                )));
            }
            HemisphereSearch::BoundaryRetry => {
                return Err(Error::input(format!(
                    "point {idx} is boundary-ambiguous for the embedding"
                )));
            }
        }
    }
    let mut violations = Vec::new();
    for e in disc.graph.edges() {
        let (a, b) = (&images[e.u], &images[e.v]);
        let ok = match e.sign {
            Sign::Plus => a == b || crate::families::adjacency(a, b)?.positive,
            Sign::Minus => a != b && crate::families::adjacency(a, b)?.negative,
        };
        if !ok {
            violations.push((e.u, e.v, e.sign));
        }
    }
    Ok(HomReport { images, violations })
}

/// An antipodal pair connected inside one class, with a connecting path of
/// positive edges.
#[derive(Clone, Debug)]
pub struct AntipodalWitness {
    pub class: usize,
    pub point: usize,
    pub path: Vec<usize>,
}

/// Scans symmetric classes for one whose positive edges connect a point to
/// its antipode. Classes must be closed under the antipodal map.
pub fn antipodal_connectivity(
    disc: &BorsukDiscretization,
    classes: &[Vec<usize>],
) -> Result<Option<AntipodalWitness>> {
    let n = disc.points.len();
    for (ci, class) in classes.iter().enumerate() {
        let mut inside = vec![false; n];
        for &v in class {
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, order: n });
            }
            inside[v] = true;
        }
        for &v in class {
            if !inside[disc.antipode[v]] {
                return Err(Error::input(format!(
                    "class {ci} is not antipodally symmetric at point {v}"
                )));
            }
        }
        // union-find over positive edges inside the class
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in disc.graph.edges() {
            if e.sign == Sign::Plus && inside[e.u] && inside[e.v] {
                let (ru, rv) = (find(&mut parent, e.u), find(&mut parent, e.v));
                if ru != rv {
                    parent[ru.max(rv)] = ru.min(rv);
                }
            }
        }
        let mut sorted_class = class.clone();
        sorted_class.sort_unstable();
        for &v in &sorted_class {
            let a = disc.antipode[v];
            if v < a && find(&mut parent, v) == find(&mut parent, a) {
                let path = positive_path(disc, &inside, v, a)
                    .expect("same component implies a path");
                return Ok(Some(AntipodalWitness { class: ci, point: v, path }));
            }
        }
    }
    Ok(None)
}

/// BFS path along positive edges inside a class.
fn positive_path(
    disc: &BorsukDiscretization,
    inside: &[bool],
    from: usize,
    to: usize,
) -> Option<Vec<usize>> {
    let n = disc.points.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in disc.graph.edges() {
        if e.sign == Sign::Plus && inside[e.u] && inside[e.v] {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    prev[from] = from;
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &w in &adj[u] {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Checks the general-position property of the moment embedding: no `d+1` of
/// the positive raw points lie on a common hyperplane through the origin.
/// Determinants are evaluated exactly over the integers.
pub fn moment_general_position(n: usize, k: usize) -> Result<bool> {
    if k == 0 || k > n {
        return Err(Error::input("need 1 <= k <= n"));
    }
    let d = n - k;
    let dim = d + 1;
    if (n as i128).checked_pow(2 * d as u32 + 1).is_none() {
        return Err(Error::input("moment coordinates overflow"));
    }
    let raw: Vec<Vec<i128>> = (1..=n as i128)
        .map(|i| {
            let parity: i128 = if i % 2 == 0 { 1 } else { -1 };
            (0..=d).map(|j| parity * i.pow(2 * j as u32 + 1)).collect()
        })
        .collect();
    let mut subset: Vec<usize> = (0..dim).collect();
    if dim > n {
        return Ok(true); // fewer points than the hyperplane dimension
    }
    loop {
        let matrix: Vec<Vec<i128>> = subset.iter().map(|&i| raw[i].clone()).collect();
        if int_det(matrix) == 0 {
            return Ok(false);
        }
        // next combination
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if subset[i] != i + n - dim {
                subset[i] += 1;
                for j in i + 1..dim {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Exact integer determinant by fraction-free Gaussian elimination
/// (Bareiss). Sizes here are at most 8x8 with entries up to 8^15.
fn int_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..n - 1 {
        if m[col][col] == 0 {
            let swap = (col + 1..n).find(|&r| m[r][col] != 0);
            match swap {
                Some(r) => {
                    m.swap(col, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in col + 1..n {
            for c in col + 1..n {
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    sign * m[n - 1][n - 1]
}
