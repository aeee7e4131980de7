//! Explicit covers and colourings emitted as checkable certificates: the
//! index covers of the hat Kneser graph, the one-vertex-deleted cover of the
//! hat Schrijver graph, the positive-element colourings of negative
//! subgraphs, and the equator colouring of Borsuk discretizations.

use crate::families::{self, SignedFamily, SignedSubset};
use crate::graph::{BalancedColoring, Graph, Sign};
use crate::topo::BorsukDiscretization;
use crate::{Error, Result};

/// Balanced colouring of the hat Kneser graph by cover membership: vertex
/// `A` takes the first index `i` in `index_set` with `A ∩ {i, -i} ≠ ∅`, and
/// the class witness at `A` is the sign of `i` in `A`. Requires exactly
/// `n - k + 1` indices, which cover by pigeonhole.
pub fn cover_b_i(n: usize, k: usize, index_set: &[usize]) -> Result<(SignedFamily, BalancedColoring)> {
    if k == 0 || k > n {
        return Err(Error::input("need 1 <= k <= n"));
    }
    let mut idx: Vec<usize> = index_set.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.len() != n - k + 1 {
        return Err(Error::input(format!(
            "index set must have n-k+1 = {} distinct entries, got {}",
            n - k + 1,
            idx.len()
        )));
    }
    if idx.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::input("index out of range"));
    }
    let family = families::kneser_signed_hat(n, k)?;
    let (colors, witness) = assign_first_hit(&family.vertices, &idx)?;
    Ok((family, BalancedColoring { colors, witness }))
}

fn assign_first_hit(vertices: &[SignedSubset], idx: &[usize]) -> Result<(Vec<usize>, Vec<Sign>)> {
    let mut colors = Vec::with_capacity(vertices.len());
    let mut witness = Vec::with_capacity(vertices.len());
    for (vid, a) in vertices.iter().enumerate() {
        let hit = idx.iter().position(|&i| a.entry(i - 1) != 0);
        match hit {
            Some(pos) => {
                colors.push(pos);
                witness.push(if a.entry(idx[pos] - 1) > 0 { Sign::Plus } else { Sign::Minus });
            }
            None => {
                return Err(Error::input(format!(
                    "vertex {} misses every cover index",
                    vid
                )));
            }
        }
    }
    Ok((colors, witness))
}

/// The deleted hat Schrijver graph together with its `n - k` class cover.
#[derive(Clone, Debug)]
pub struct CriticalCover {
    /// The vertex removed from the hat Schrijver graph.
    pub removed: SignedSubset,
    /// Remaining vertices, in family order.
    pub vertices: Vec<SignedSubset>,
    pub graph: crate::graph::SignedGraph,
    pub coloring: BalancedColoring,
}

/// Covers every vertex of the hat Schrijver graph except `a` by the classes
/// of the `n - k` indices untouched by `a`. The only alternating hat vertex
/// supported inside `support(a)` is `a` itself, so the cover is total on the
/// deleted graph.
pub fn critical_cover(n: usize, k: usize, a: &SignedSubset) -> Result<CriticalCover> {
    if a.ground_size() != n || a.k() != k {
        return Err(Error::input("vertex does not match (n, k)"));
    }
    if !a.is_alternating() || !a.is_hat() {
        return Err(Error::input(format!(
            "{a} is not a vertex of the hat Schrijver graph"
        )));
    }
    let free: Vec<usize> = (1..=n).filter(|&i| a.entry(i - 1) == 0).collect();
    debug_assert_eq!(free.len(), n - k);
    let family = families::schrijver_signed_hat(n, k)?;
    let pos = family
        .vertices
        .iter()
        .position(|v| v == a)
        .ok_or_else(|| Error::input("vertex not found in family"))?;
    let keep: Vec<usize> = (0..family.vertices.len()).filter(|&i| i != pos).collect();
    let graph = family.graph.induced(&keep)?;
    let vertices: Vec<SignedSubset> =
        keep.iter().map(|&i| family.vertices[i].clone()).collect();
    if vertices.is_empty() {
        return Ok(CriticalCover {
            removed: a.clone(),
            vertices,
            graph,
            coloring: BalancedColoring { colors: Vec::new(), witness: Vec::new() },
        });
    }
    let (colors, witness) = assign_first_hit(&vertices, &free)?;
    Ok(CriticalCover {
        removed: a.clone(),
        vertices,
        graph,
        coloring: BalancedColoring { colors, witness },
    })
}

/// Which negative subgraph a positive-element colouring targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NegTarget {
    /// Hat Kneser graph, `n - k + 1` colours.
    HatKneser,
    /// Hat Schrijver graph, `n - k + 1` colours.
    HatSchrijver,
    /// Full Schrijver signed graph, `n - k + 2` colours.
    Schrijver,
}

/// A proper colouring of a negative subgraph, to be checked by edge scan.
#[derive(Clone, Debug)]
pub struct NegCover {
    pub target: NegTarget,
    pub vertices: Vec<SignedSubset>,
    /// The negative subgraph (all vertices retained).
    pub graph: Graph,
    pub colors: Vec<usize>,
}

/// Colours vertex `A` with the first `i <= count` such that `+i ∈ A`. Each
/// class lies inside one `B_i^+`, an independent set of the negative
/// subgraph. `count` must match the target.
pub fn cover_b_i_plus(n: usize, k: usize, count: usize, target: NegTarget) -> Result<NegCover> {
    if k == 0 || k > n {
        return Err(Error::input("need 1 <= k <= n"));
    }
    let required = match target {
        NegTarget::HatKneser | NegTarget::HatSchrijver => n - k + 1,
        NegTarget::Schrijver => n - k + 2,
    };
    if count != required {
        return Err(Error::input(format!(
            "target needs count = {required}, got {count}"
        )));
    }
    let family = match target {
        NegTarget::HatKneser => families::kneser_signed_hat(n, k)?,
        NegTarget::HatSchrijver => families::schrijver_signed_hat(n, k)?,
        NegTarget::Schrijver => families::schrijver_signed(n, k)?,
    };
    let mut colors = Vec::with_capacity(family.vertices.len());
    for (vid, a) in family.vertices.iter().enumerate() {
        let hit = (1..=count.min(n)).find(|&i| a.entry(i - 1) > 0);
        match hit {
            Some(i) => colors.push(i - 1),
            None => {
                return Err(Error::input(format!(
                    "vertex {vid} has no positive element among the first {count}"
                )));
            }
        }
    }
    Ok(NegCover {
        target,
        graph: family.graph.negative_subgraph(),
        vertices: family.vertices,
        colors,
    })
}

/// Balanced colouring of a Borsuk discretization by dominant coordinate:
/// point `x` takes the first `i` with `|x_i| > tau`, witnessed by the sign
/// of `x_i`. Requires `tau >= eps` so positive edges cannot bridge the two
/// hemispherical components of a class; coverage needs `tau < 1/sqrt(d+1)`.
pub fn equator_cover(disc: &BorsukDiscretization, tau: f64) -> Result<BalancedColoring> {
    if tau < disc.eps {
        return Err(Error::input(format!(
            "tau = {tau} must be at least eps = {}",
            disc.eps
        )));
    }
    let mut colors = Vec::with_capacity(disc.points.len());
    let mut witness = Vec::with_capacity(disc.points.len());
    for (idx, x) in disc.points.iter().enumerate() {
        match x.iter().position(|&c| c.abs() > tau) {
            Some(i) => {
                colors.push(i);
                witness.push(if x[i] > 0.0 { Sign::Plus } else { Sign::Minus });
            }
            None => {
                return Err(Error::input(format!(
                    "point {idx} has no coordinate above tau = {tau}; cover fails"
                )));
            }
        }
    }
    Ok(BalancedColoring { colors, witness })
}
