//! The rainbow neighbourhood equate number: the fewest vertex deletions
//! after which the surviving induced subgraph admits a J-colouring.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{bits, canonical_form, CanonicalForm, Graph, Mask, MAX_CANON_ORDER};
use crate::jcolor::{is_j_colourable, j_number, JWitness};

/// Largest order accepted by [`ren_exact`].
pub const MAX_REN_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RenResult {
    pub ren: usize,
    /// Lexicographically smallest optimal deletion set, ascending.
    pub removed: Vec<usize>,
    /// Original labels of the surviving vertices; survivor vertex `i` is
    /// `surviving_vertices[i]`.
    pub surviving_vertices: Vec<usize>,
    /// J-colouring of the survivor, in survivor labels.
    pub surviving_witness: JWitness,
}

/// J-colourability verdicts keyed by canonical form, for survivors small
/// enough to canonicalise.
#[derive(Default)]
struct VerdictCache {
    verdicts: Mutex<HashMap<CanonicalForm, bool>>,
}

impl VerdictCache {
    fn j_colourable(&self, g: &Graph) -> Result<bool> {
        if g.order() > MAX_CANON_ORDER {
            return is_j_colourable(g);
        }
        let key = canonical_form(g)?;
        if let Some(&hit) = self.verdicts.lock().expect("cache lock").get(&key) {
            return Ok(hit);
        }
        let verdict = is_j_colourable(g)?;
        self.verdicts.lock().expect("cache lock").insert(key, verdict);
        Ok(verdict)
    }
}

/// Visits the `k`-subsets of `0..n` whose smallest element is `first`, in
/// lexicographic order, until `visit` returns `Some`.
fn find_in_partition<T>(
    n: usize,
    k: usize,
    first: usize,
    visit: &mut impl FnMut(Mask) -> Result<Option<T>>,
) -> Result<Option<T>> {
    fn go<T>(
        n: usize,
        need: usize,
        next: usize,
        chosen: Mask,
        visit: &mut impl FnMut(Mask) -> Result<Option<T>>,
    ) -> Result<Option<T>> {
        if need == 0 {
            return visit(chosen);
        }
        for v in next..=n - need {
            if let Some(found) = go(n, need - 1, v + 1, chosen | 1 << v, visit)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
    go(n, k - 1, first + 1, 1 << first, visit)
}

fn result_for(g: &Graph, removed: Mask) -> Result<RenResult> {
    let keep = g.vertex_mask() & !removed;
    let survivor = g.induced_on(keep);
    let surviving_witness = j_number(&survivor)?.expect("survivor was verified J-colourable");
    Ok(RenResult {
        ren: removed.count_ones() as usize,
        removed: bits(removed).collect(),
        surviving_vertices: bits(keep).collect(),
        surviving_witness,
    })
}

/// Exact `ren(g)` by scanning deletion sets of increasing size. Within a
/// size, sets are split by their smallest element across worker threads and
/// the lexicographically first success is reported, independent of
/// scheduling.
pub fn ren_exact(g: &Graph) -> Result<RenResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_REN_ORDER {
        return Err(Error::OrderTooLarge {
            what: "exact ren (use the greedy upper bound instead)",
            order: n,
            max: MAX_REN_ORDER,
        });
    }
    let cache = VerdictCache::default();
    if cache.j_colourable(g)? {
        return result_for(g, 0);
    }
    let all = g.vertex_mask();
    // a single surviving vertex is always J-colourable, so k < n terminates
    for k in 1..n {
        let found = (0..=n - k).into_par_iter().map(|first| {
            find_in_partition(n, k, first, &mut |removed| {
                let survivor = g.induced_on(all & !removed);
                Ok(cache.j_colourable(&survivor)?.then_some(removed))
            })
        });
        let found: Option<Result<Mask>> = found.find_map_first(|r| r.transpose());
        if let Some(removed) = found {
            return result_for(g, removed?);
        }
    }
    unreachable!("deleting all but one vertex leaves a J-colourable graph")
}

/// Result of [`ren_upper_bound`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RenBound {
    pub bound: usize,
    /// Deleted vertices in original labels, in deletion order.
    pub removed: Vec<usize>,
}

/// Vertices of `h` that cannot see χ(h) colours in their closed neighbourhood.
fn deficiency(h: &Graph) -> Result<usize> {
    if h.order() == 0 {
        return Ok(0);
    }
    let chi = chromatic_number(h)?;
    Ok((0..h.order()).filter(|&v| h.degree(v) + 1 < chi).count())
}

/// Greedy deletion until the remainder is J-colourable. Each round prefers
/// a maximum-degree vertex whose deletion finishes the job, then a
/// minimum-degree one, then any vertex; if no single deletion finishes, the
/// vertex leaving the fewest rainbow-deficient vertices is deleted.
pub fn ren_upper_bound(g: &Graph) -> Result<RenBound> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut alive: Vec<usize> = (0..g.order()).collect();
    let mut removed = Vec::new();
    loop {
        let keep = alive.iter().fold(0, |acc, &v| acc | 1 << v);
        let h = g.induced_on(keep);
        if is_j_colourable(&h)? {
            return Ok(RenBound {
                bound: removed.len(),
                removed,
            });
        }
        let (max_d, min_d) = (h.max_degree(), h.min_degree());
        let mut candidates: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) == max_d).collect();
        candidates.extend((0..h.order()).filter(|&v| h.degree(v) == min_d && min_d != max_d));
        candidates.extend((0..h.order()).filter(|&v| h.degree(v) != min_d && h.degree(v) != max_d));

        let mut choice = None;
        for &v in &candidates {
            let rest = h.induced_on(h.vertex_mask() & !(1 << v));
            if rest.order() > 0 && is_j_colourable(&rest)? {
                choice = Some(v);
                break;
            }
        }
        let v = match choice {
            Some(v) => v,
            None => {
                let mut best = (usize::MAX, candidates[0]);
                for &v in &candidates {
                    let score = deficiency(&h.induced_on(h.vertex_mask() & !(1 << v)))?;
                    if score < best.0 {
                        best = (score, v);
                    }
                }
                best.1
            }
        };
        removed.push(alive.remove(v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, FamilySpec};
    use crate::jcolor::validate_witness;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn checked(g: &Graph) -> RenResult {
        let r = ren_exact(g).unwrap();
        let sub = crate::graph::induced_subgraph(g, &r.removed).unwrap();
        assert_eq!(sub.new_to_old, r.surviving_vertices);
        validate_witness(&sub.graph, &r.surviving_witness).unwrap();
        r
    }

    #[test]
    fn known_families() {
        assert_eq!(checked(&build("cycle:5")).ren, 1);
        assert_eq!(checked(&build("path:9")).ren, 0);
        assert_eq!(checked(&build("wheel:5")).ren, 1);
        assert_eq!(checked(&build("mycielskian:cycle:6")).ren, 1);
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let r = checked(&build("cycle:5"));
        assert_eq!(r.removed, vec![0]);
        assert_eq!(r.surviving_vertices, vec![1, 2, 3, 4]);
    }

    #[test]
    fn ren_zero_iff_j_colourable() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let r = checked(&g);
                assert_eq!(r.ren == 0, is_j_colourable(&g).unwrap());
                if g.is_connected() && g.size() >= 1 {
                    assert!(r.ren <= n - 2);
                }
                assert!(r.ren < n);
            }
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(ren_exact(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph)));
        assert!(matches!(ren_exact(&build("cycle:15")), Err(Error::OrderTooLarge { .. })));
        assert_eq!(ren_exact(&build("complete:1")).unwrap().ren, 0);
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(ren_upper_bound(&build("cycle:6")).unwrap().bound, 0);
        assert_eq!(ren_upper_bound(&build("cycle:5")).unwrap().bound, 1);
        assert!(ren_upper_bound(&build("jahangir:2,3")).unwrap().bound <= 1);
        // larger than the exact guard
        let big = ren_upper_bound(&build("cycle:19")).unwrap();
        assert_eq!(big.bound, 1);
    }

    #[test]
    fn upper_bound_dominates_exact() {
        for n in 2..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let bound = ren_upper_bound(&g).unwrap();
                assert!(bound.bound >= ren_exact(&g).unwrap().ren);
                let sub = crate::graph::induced_subgraph(&g, &bound.removed).unwrap();
                assert!(is_j_colourable(&sub.graph).unwrap());
            }
        }
    }
}
