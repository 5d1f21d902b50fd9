//! Exact chromatic number, the χ⁻-colouring (rainbow neighbourhood
//! convention) and chromatic-degree quantities.

use std::collections::HashMap;
use std::rc::Rc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Mask};

/// Largest order accepted by [`all_chi_colourings`].
pub const MAX_EXHAUSTIVE_ORDER: usize = 10;

/// A proper-or-not vertex colouring with colours `1..=k`, every colour used.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Colouring {
    k: usize,
    assignment: Vec<usize>,
    theta: Vec<usize>,
}

impl Colouring {
    /// `assignment[v]` is the colour of `v`, in `1..=k` where `k` is the
    /// largest colour present. Every colour in `1..=k` must appear.
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        let k = assignment.iter().copied().max().unwrap_or(0);
        if assignment.contains(&0) {
            return Err(Error::ColouringMismatch("colours are numbered from 1".into()));
        }
        let mut theta = vec![0; k];
        for &c in &assignment {
            theta[c - 1] += 1;
        }
        if let Some(missing) = theta.iter().position(|&t| t == 0) {
            return Err(Error::ColouringMismatch(format!("colour {} is unused", missing + 1)));
        }
        Ok(Colouring { k, assignment, theta })
    }

    /// Colour class `i` (0-based) receives colour `i + 1`.
    pub fn from_classes(n: usize, classes: &[Mask]) -> Result<Self> {
        let mut assignment = vec![0; n];
        for (i, &class) in classes.iter().enumerate() {
            for v in bits(class) {
                if v >= n || assignment[v] != 0 {
                    return Err(Error::ColouringMismatch(format!("vertex {v} is not in exactly one class")));
                }
                assignment[v] = i + 1;
            }
        }
        if assignment.contains(&0) {
            return Err(Error::ColouringMismatch("some vertex is uncoloured".into()));
        }
        Colouring::new(assignment)
    }

    pub fn colour_count(&self) -> usize {
        self.k
    }

    /// Colour of `v`, in `1..=k`.
    pub fn colour(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Class sizes: `theta()[i]` is θ(c_{i+1}).
    pub fn theta(&self) -> &[usize] {
        &self.theta
    }

    pub fn order(&self) -> usize {
        self.assignment.len()
    }

    /// Vertex lists of the colour classes, each sorted ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.order() == g.order() && g.edges().all(|(u, v)| self.assignment[u] != self.assignment[v])
    }

    /// Bitmask of colours (bit `c - 1` for colour `c`) present in `vertices`.
    pub(crate) fn palette(&self, vertices: Mask) -> u64 {
        bits(vertices).fold(0, |acc, v| acc | 1 << (self.assignment[v] - 1))
    }

    /// Relabel colours so classes are ordered by size descending, then by
    /// smallest vertex ascending.
    pub fn normalised(&self) -> Colouring {
        let mut classes = self.classes();
        classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        let mut assignment = vec![0; self.order()];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                assignment[v] = i + 1;
            }
        }
        Colouring::new(assignment).expect("relabelling keeps every colour")
    }
}

fn require_vertices(g: &Graph) -> Result<()> {
    if g.order() == 0 {
        Err(Error::EmptyGraph)
    } else {
        Ok(())
    }
}

/// Backtracking k-colourability of the subgraph induced by `vertices`,
/// choosing the most saturated vertex first.
fn colour_within(g: &Graph, vertices: Mask, k: usize) -> Option<Vec<(usize, usize)>> {
    fn go(g: &Graph, uncoloured: Mask, colour: &mut [usize], k: usize, used: usize, out: &mut Vec<(usize, usize)>) -> bool {
        if uncoloured == 0 {
            return true;
        }
        // saturation = number of distinct colours already among neighbours
        let mut pick = None;
        let mut pick_key = (0, 0);
        for v in bits(uncoloured) {
            let seen = bits(g.neighbours(v)).fold(0u64, |acc, u| {
                if colour[u] > 0 {
                    acc | 1 << (colour[u] - 1)
                } else {
                    acc
                }
            });
            let key = (seen.count_ones() as usize, (g.neighbours(v) & uncoloured).count_ones() as usize);
            if pick.is_none() || key > pick_key {
                pick = Some((v, seen));
                pick_key = key;
            }
        }
        let (v, seen) = pick.expect("uncoloured is non-empty");
        for c in 1..=(used + 1).min(k) {
            if seen >> (c - 1) & 1 == 1 {
                continue;
            }
            colour[v] = c;
            out.push((v, c));
            if go(g, uncoloured & !(1 << v), colour, k, used.max(c), out) {
                return true;
            }
            out.pop();
            colour[v] = 0;
        }
        false
    }
    let mut colour = vec![0; g.order()];
    let mut out = Vec::new();
    go(g, vertices, &mut colour, k, 0, &mut out).then_some(out)
}

fn greedy_clique(g: &Graph) -> usize {
    let mut best = 0;
    for start in 0..g.order() {
        let mut clique = 1;
        let mut candidates = g.neighbours(start);
        while candidates != 0 {
            let v = bits(candidates)
                .max_by_key(|&v| ((g.neighbours(v) & candidates).count_ones(), std::cmp::Reverse(v)))
                .expect("non-empty");
            clique += 1;
            candidates &= g.neighbours(v);
        }
        best = best.max(clique);
    }
    best
}

/// Exact χ(G).
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    require_vertices(g)?;
    let all = g.vertex_mask();
    let mut k = greedy_clique(g).max(1);
    while colour_within(g, all, k).is_none() {
        k += 1;
    }
    Ok(k)
}

/// A proper colouring with exactly χ(G) colours, found by backtracking.
pub fn chromatic_colouring(g: &Graph) -> Result<Colouring> {
    let k = chromatic_number(g)?;
    let steps = colour_within(g, g.vertex_mask(), k).expect("χ colours suffice");
    let mut assignment = vec![0; g.order()];
    for (v, c) in steps {
        assignment[v] = c;
    }
    Colouring::new(assignment)
}

#[derive(Debug)]
struct Optimum {
    theta: Vec<usize>,
    classes: Vec<Mask>,
}

fn sorted_list(mask: Mask) -> Vec<usize> {
    bits(mask).collect()
}

/// Is `a` strictly better than `b`: larger θ-vector, then smaller class lists.
fn better(a_theta: &[usize], a_classes: &[Mask], b: &Optimum) -> bool {
    match a_theta.cmp(&b.theta) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            let a: Vec<Vec<usize>> = a_classes.iter().map(|&m| sorted_list(m)).collect();
            let b: Vec<Vec<usize>> = b.classes.iter().map(|&m| sorted_list(m)).collect();
            a < b
        }
    }
}

struct ChiMinusSearch<'a> {
    g: &'a Graph,
    colourable: HashMap<(Mask, usize), bool>,
    best: HashMap<(Mask, usize), Option<Rc<Optimum>>>,
}

impl ChiMinusSearch<'_> {
    fn colourable(&mut self, vertices: Mask, k: usize) -> bool {
        if let Some(&hit) = self.colourable.get(&(vertices, k)) {
            return hit;
        }
        let ok = colour_within(self.g, vertices, k).is_some();
        self.colourable.insert((vertices, k), ok);
        ok
    }

    fn max_independent(&self, candidates: Mask) -> usize {
        if candidates == 0 {
            return 0;
        }
        let v = candidates.trailing_zeros() as usize;
        let without = candidates & !(1 << v);
        let with = 1 + self.max_independent(without & !self.g.neighbours(v));
        if with as u32 > without.count_ones() {
            return with;
        }
        with.max(self.max_independent(without))
    }

    /// Independent subsets of `candidates` of exactly `size`, in lexicographic order.
    fn independent_sets(&self, candidates: Mask, size: usize, chosen: Mask, out: &mut Vec<Mask>) {
        if size == 0 {
            out.push(chosen);
            return;
        }
        if (candidates.count_ones() as usize) < size {
            return;
        }
        for v in bits(candidates) {
            let rest = candidates & u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0) & !self.g.neighbours(v);
            if (rest.count_ones() as usize) + 1 < size {
                continue;
            }
            self.independent_sets(rest, size - 1, chosen | 1 << v, out);
        }
    }

    /// Optimal colouring of `vertices` with exactly `k` non-empty classes.
    fn solve(&mut self, vertices: Mask, k: usize) -> Option<Rc<Optimum>> {
        if let Some(hit) = self.best.get(&(vertices, k)) {
            return hit.clone();
        }
        let result = self.solve_uncached(vertices, k).map(Rc::new);
        self.best.insert((vertices, k), result.clone());
        result
    }

    fn solve_uncached(&mut self, vertices: Mask, k: usize) -> Option<Optimum> {
        if vertices == 0 || (vertices.count_ones() as usize) < k {
            return None;
        }
        if k == 1 {
            let independent = bits(vertices).all(|v| self.g.neighbours(v) & vertices == 0);
            return independent.then(|| Optimum {
                theta: vec![vertices.count_ones() as usize],
                classes: vec![vertices],
            });
        }
        let alpha = self.max_independent(vertices);
        for size in (1..=alpha).rev() {
            let mut sets = Vec::new();
            self.independent_sets(vertices, size, 0, &mut sets);
            let mut best: Option<Optimum> = None;
            for first in sets {
                let rest = vertices & !first;
                if !self.colourable(rest, k - 1) {
                    continue;
                }
                let Some(sub) = self.solve(rest, k - 1) else {
                    continue;
                };
                let mut theta = Vec::with_capacity(k);
                theta.push(size);
                theta.extend_from_slice(&sub.theta);
                let mut classes = Vec::with_capacity(k);
                classes.push(first);
                classes.extend_from_slice(&sub.classes);
                if best.as_ref().is_none_or(|b| better(&theta, &classes, b)) {
                    best = Some(Optimum { theta, classes });
                }
            }
            if best.is_some() {
                return best;
            }
        }
        None
    }
}

/// The χ⁻-colouring: among proper colourings with exactly χ(G) colours, the
/// one with lexicographically largest class-size vector; ties go to the
/// colouring whose class vertex lists, read class by class, are
/// lexicographically smallest.
pub fn chi_minus_colouring(g: &Graph) -> Result<Colouring> {
    let k = chromatic_number(g)?;
    let mut search = ChiMinusSearch {
        g,
        colourable: HashMap::new(),
        best: HashMap::new(),
    };
    let optimum = search
        .solve(g.vertex_mask(), k)
        .expect("a χ-colouring exists");
    Colouring::from_classes(g.order(), &optimum.classes)
}

/// Every proper colouring with exactly χ(G) colours, each normalised by
/// [`Colouring::normalised`], so every partition appears once.
pub fn all_chi_colourings(g: &Graph) -> Result<Vec<Colouring>> {
    require_vertices(g)?;
    if g.order() > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::OrderTooLarge {
            what: "exhaustive colouring enumeration",
            order: g.order(),
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    let k = chromatic_number(g)?;
    let n = g.order();
    let mut out = Vec::new();
    let mut blocks: Vec<Mask> = Vec::with_capacity(k);
    fn go(g: &Graph, v: usize, k: usize, blocks: &mut Vec<Mask>, out: &mut Vec<Colouring>) {
        let n = g.order();
        if blocks.len() + (n - v) < k {
            return;
        }
        if v == n {
            let c = Colouring::from_classes(n, blocks).expect("partition is complete");
            out.push(c.normalised());
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i] & g.neighbours(v) == 0 {
                blocks[i] |= 1 << v;
                go(g, v + 1, k, blocks, out);
                blocks[i] &= !(1 << v);
            }
        }
        if blocks.len() < k {
            blocks.push(1 << v);
            go(g, v + 1, k, blocks, out);
            blocks.pop();
        }
    }
    go(g, 0, k, &mut blocks, &mut out);
    debug_assert!(out.iter().all(|c| c.order() == n));
    Ok(out)
}

/// Chromatic-degree quantities of a graph under a given colouring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticProfile {
    /// d_χ(v) for each vertex.
    pub chromatic_degrees: Vec<usize>,
    /// Δ_χ(G).
    pub max_chromatic_degree: usize,
    /// δ_χ(G).
    pub min_chromatic_degree: usize,
    /// d(G,χ) = k − δ_χ(G), `k` the colour count of the colouring.
    pub chromatic_diameter: usize,
    /// r_χ(G): vertices whose closed neighbourhood holds every colour.
    pub rainbow_number: usize,
    pub chromatic_null: bool,
}

fn check_colouring(g: &Graph, c: &Colouring) -> Result<()> {
    if c.order() != g.order() {
        return Err(Error::ColouringMismatch(format!(
            "colouring covers {} vertices, graph has {}",
            c.order(),
            g.order()
        )));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| c.colour(u) == c.colour(v)) {
        return Err(Error::ColouringMismatch(format!("edge {u}-{v} is monochromatic")));
    }
    Ok(())
}

/// Computes d_χ(v) for every vertex and the derived extrema. The colouring
/// must be proper; its colour count plays the role of χ(G).
pub fn chromatic_profile(g: &Graph, c: &Colouring) -> Result<ChromaticProfile> {
    require_vertices(g)?;
    check_colouring(g, c)?;
    let k = c.colour_count();
    let chromatic_degrees: Vec<usize> = (0..g.order())
        .map(|v| c.palette(g.closed_neighbourhood(v)).count_ones() as usize)
        .collect();
    let max = *chromatic_degrees.iter().max().expect("non-empty");
    let min = *chromatic_degrees.iter().min().expect("non-empty");
    Ok(ChromaticProfile {
        rainbow_number: chromatic_degrees.iter().filter(|&&d| d == k).count(),
        max_chromatic_degree: max,
        min_chromatic_degree: min,
        chromatic_diameter: k - min,
        chromatic_null: max == min,
        chromatic_degrees,
    })
}

/// d_χ(u,v) = |d_χ(u) − d_χ(v)|.
pub fn chromatic_distance(g: &Graph, c: &Colouring, u: usize, v: usize) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    check_colouring(g, c)?;
    let degree = |w: usize| c.palette(g.closed_neighbourhood(w)).count_ones() as usize;
    Ok(degree(u).abs_diff(degree(v)))
}

/// Smallest and largest r_χ(G) over every χ-colouring.
pub fn rainbow_number_range(g: &Graph) -> Result<(usize, usize)> {
    let mut range: Option<(usize, usize)> = None;
    for c in all_chi_colourings(g)? {
        let r = chromatic_profile(g, &c)?.rainbow_number;
        range = Some(match range {
            None => (r, r),
            Some((lo, hi)) => (lo.min(r), hi.max(r)),
        });
    }
    Ok(range.expect("at least one χ-colouring"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, FamilySpec};
    use proptest::prelude::*;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    /// Tries every assignment in `1..=k` for `k = 1, 2, ...`.
    fn naive_chromatic_number(g: &Graph) -> usize {
        let n = g.order();
        for k in 1..=n {
            let total = k.pow(n as u32);
            for code in 0..total {
                let mut rest = code;
                let colours: Vec<usize> = (0..n)
                    .map(|_| {
                        let c = rest % k;
                        rest /= k;
                        c
                    })
                    .collect();
                if g.edges().all(|(u, v)| colours[u] != colours[v]) {
                    return k;
                }
            }
        }
        unreachable!()
    }

    /// The canonical optimum picked straight from the exhaustive list.
    fn exhaustive_optimum(g: &Graph) -> Colouring {
        all_chi_colourings(g)
            .unwrap()
            .into_iter()
            .min_by(|a, b| b.theta().cmp(a.theta()).then_with(|| a.classes().cmp(&b.classes())))
            .unwrap()
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&build("complete:5")).unwrap(), 5);
        assert_eq!(chromatic_number(&build("cycle:5")).unwrap(), 3);
        assert_eq!(chromatic_number(&build("cycle:6")).unwrap(), 2);
        assert_eq!(chromatic_number(&build("edgeless:4")).unwrap(), 1);
        assert_eq!(chromatic_number(&build("wheel:5")).unwrap(), 4);
        assert!(matches!(chromatic_number(&Graph::empty(0).unwrap()), Err(Error::EmptyGraph)));
    }

    #[test]
    fn grotzsch_needs_four_colours() {
        let g = build("mycielskian:cycle:5");
        assert!(colour_within(&g, g.vertex_mask(), 3).is_none());
        assert_eq!(chromatic_number(&g).unwrap(), 4);
    }

    #[test]
    fn chi_minus_examples() {
        assert_eq!(chi_minus_colouring(&build("complete:3")).unwrap().theta(), &[1, 1, 1]);
        let c5 = chi_minus_colouring(&build("cycle:5")).unwrap();
        assert_eq!(c5.theta(), &[2, 2, 1]);
        assert_eq!(c5.classes(), vec![vec![0, 2], vec![1, 3], vec![4]]);
        assert_eq!(chi_minus_colouring(&build("corona:complete:2/complete:2")).unwrap().theta(), &[2, 2, 2]);
    }

    #[test]
    fn chi_minus_stays_within_chi() {
        // largest-class-first greedy would need a fourth colour here
        let g = build("corona:complete:2/complete:2");
        let c = chi_minus_colouring(&g).unwrap();
        assert_eq!(c.colour_count(), chromatic_number(&g).unwrap());
        assert!(c.is_proper(&g));
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_chi_colourings(&build("complete:3")).unwrap().len(), 1);
        assert_eq!(all_chi_colourings(&build("path:3")).unwrap().len(), 1);
        assert_eq!(all_chi_colourings(&build("cycle:4")).unwrap().len(), 1);
        // C_5: choose the singleton class (5 ways), the rest splits uniquely
        assert_eq!(all_chi_colourings(&build("cycle:5")).unwrap().len(), 5);
        assert!(all_chi_colourings(&build("path:11")).is_err());
    }

    #[test]
    fn profiles() {
        let k4 = build("complete:4");
        let p = chromatic_profile(&k4, &chi_minus_colouring(&k4).unwrap()).unwrap();
        assert_eq!(p.chromatic_degrees, vec![4; 4]);
        assert_eq!((p.chromatic_diameter, p.rainbow_number, p.chromatic_null), (0, 4, true));

        let c5 = build("cycle:5");
        let p = chromatic_profile(&c5, &chi_minus_colouring(&c5).unwrap()).unwrap();
        assert_eq!(p.chromatic_degrees, vec![3, 2, 2, 3, 3]);
        assert_eq!((p.min_chromatic_degree, p.max_chromatic_degree), (2, 3));
        assert_eq!((p.chromatic_diameter, p.rainbow_number, p.chromatic_null), (1, 3, false));

        let p5 = build("path:5");
        let p = chromatic_profile(&p5, &chi_minus_colouring(&p5).unwrap()).unwrap();
        assert_eq!(p.chromatic_degrees, vec![2; 5]);
        assert_eq!((p.chromatic_diameter, p.rainbow_number, p.chromatic_null), (0, 5, true));
    }

    #[test]
    fn profile_rejects_mismatch() {
        let g = build("path:3");
        let bad = Colouring::new(vec![1, 1, 2]).unwrap();
        assert!(matches!(chromatic_profile(&g, &bad), Err(Error::ColouringMismatch(_))));
        let short = Colouring::new(vec![1, 2]).unwrap();
        assert!(chromatic_profile(&g, &short).is_err());
        assert!(Colouring::new(vec![1, 3]).is_err());
        assert!(Colouring::new(vec![0, 1]).is_err());
    }

    #[test]
    fn distances() {
        let c5 = build("cycle:5");
        let c = chi_minus_colouring(&c5).unwrap();
        assert_eq!(chromatic_distance(&c5, &c, 2, 2).unwrap(), 0);
        assert_eq!(chromatic_distance(&c5, &c, 0, 1).unwrap(), 1);
        assert!(matches!(chromatic_distance(&c5, &c, 0, 5), Err(Error::VertexOutOfRange { .. })));
        let k5 = build("complete:5");
        let ck = chi_minus_colouring(&k5).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(chromatic_distance(&k5, &ck, u, v).unwrap(), 0);
            }
        }
    }

    #[test]
    fn rainbow_range_on_c5() {
        // every χ-colouring of C_5 is a rotation of the canonical one
        assert_eq!(rainbow_number_range(&build("cycle:5")).unwrap(), (3, 3));
    }

    #[test]
    fn chi_minus_matches_exhaustive_up_to_six() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let ours = chi_minus_colouring(&g).unwrap();
                assert_eq!(ours, exhaustive_optimum(&g), "{g:?}");
                assert_eq!(chromatic_number(&g).unwrap(), naive_chromatic_number(&g));
            }
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=8).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |edges| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if edges[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn profile_bounds(g in arb_graph()) {
            let chi = chromatic_number(&g).unwrap();
            let c = chi_minus_colouring(&g).unwrap();
            prop_assert!(c.is_proper(&g));
            prop_assert_eq!(c.colour_count(), chi);
            prop_assert_eq!(c.theta().iter().sum::<usize>(), g.order());
            prop_assert!(c.theta().windows(2).all(|w| w[0] >= w[1]));
            let p = chromatic_profile(&g, &c).unwrap();
            prop_assert!(p.max_chromatic_degree <= chi);
            prop_assert!(p.chromatic_diameter < chi);
            prop_assert_eq!(p.chromatic_diameter == 0, p.rainbow_number == g.order());
            if g.is_connected() && g.order() >= 2 {
                prop_assert!(p.min_chromatic_degree >= 2);
            }
        }

        #[test]
        fn no_colouring_beats_chi_minus(g in arb_graph()) {
            let ours = chi_minus_colouring(&g).unwrap();
            prop_assert_eq!(ours, exhaustive_optimum(&g));
        }
    }
}
