//! J-colourings and J*-colourings.
//!
//! A J-colouring with `k` colours is a proper colouring using all `k`
//! colours in which the closed neighbourhood of every vertex contains every
//! colour. A J*-colouring asks this only of internal vertices, taken to be
//! the vertices of degree at least two. J(G) and J*(G) are the largest such
//! `k`.

use serde::Serialize;

use crate::chromatic::{chromatic_number, Colouring};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, Mask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    #[serde(rename = "J")]
    J,
    #[serde(rename = "J*")]
    JStar,
}

/// Certificate of a J- or J*-colouring with `k` colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JWitness {
    pub k: usize,
    pub mode: Mode,
    pub colouring: Colouring,
}

pub fn is_internal(g: &Graph, v: usize) -> bool {
    g.degree(v) >= 2
}

/// Vertices whose closed neighbourhood must be rainbow in `mode`.
pub fn rainbow_required(g: &Graph, mode: Mode) -> Mask {
    match mode {
        Mode::J => g.vertex_mask(),
        Mode::JStar => (0..g.order())
            .filter(|&v| is_internal(g, v))
            .fold(0, |acc, v| acc | 1 << v),
    }
}

struct Csp<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    required: Mask,
    colour: Vec<usize>,
    /// `counts[w][c]`: vertices of N[w] with colour `c`.
    counts: Vec<Vec<u16>>,
    distinct: Vec<usize>,
    uncoloured: Vec<usize>,
}

impl Csp<'_> {
    fn feasible_at(&self, w: usize) -> bool {
        self.required >> w & 1 == 0 || self.distinct[w] + self.uncoloured[w] >= self.k
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for w in bits(self.g.closed_neighbourhood(v)) {
            self.uncoloured[w] -= 1;
            if self.counts[w][c] == 0 {
                self.distinct[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = 0;
        for w in bits(self.g.closed_neighbourhood(v)) {
            self.uncoloured[w] += 1;
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.distinct[w] -= 1;
            }
        }
    }

    fn search(&mut self, depth: usize, used: usize) -> bool {
        let remaining = self.order.len() - depth;
        if used + remaining < self.k {
            return false;
        }
        if remaining == 0 {
            return true;
        }
        let v = self.order[depth];
        // colours beyond used + 1 are symmetric to used + 1
        for c in 1..=(used + 1).min(self.k) {
            // v is still uncoloured, so counts[v] only sees neighbours
            if self.counts[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            let ok = bits(self.g.closed_neighbourhood(v)).all(|w| self.feasible_at(w))
                && self.search(depth + 1, used.max(c));
            if ok {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// Searches for a `mode`-colouring with exactly `k` colours. Vertices are
/// assigned in order of decreasing degree (ties by index) and colours in
/// increasing order, so the returned witness is the first in that order.
pub fn j_colourable_with_k(g: &Graph, k: usize, mode: Mode) -> Result<Option<JWitness>> {
    if k < 1 {
        return Err(Error::InvalidArgument("colour count must be at least 1".into()));
    }
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = g.order();
    if k > n {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut csp = Csp {
        g,
        k,
        order,
        required: rainbow_required(g, mode),
        colour: vec![0; n],
        counts: vec![vec![0; k + 1]; n],
        distinct: vec![0; n],
        uncoloured: (0..n).map(|v| g.degree(v) + 1).collect(),
    };
    if !(0..n).all(|w| csp.feasible_at(w)) {
        return Ok(None);
    }
    if !csp.search(0, 0) {
        return Ok(None);
    }
    let colouring = Colouring::new(csp.colour)?;
    Ok(Some(JWitness { k, mode, colouring }))
}

fn scan_down(g: &Graph, top: usize, mode: Mode) -> Result<Option<JWitness>> {
    let floor = chromatic_number(g)?.max(1);
    for k in (floor..=top).rev() {
        if let Some(w) = j_colourable_with_k(g, k, mode)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// J(G) with a witness, or `None` if `g` has no J-colouring.
pub fn j_number(g: &Graph) -> Result<Option<JWitness>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    scan_down(g, g.min_degree() + 1, Mode::J)
}

pub fn is_j_colourable(g: &Graph) -> Result<bool> {
    Ok(j_number(g)?.is_some())
}

/// J*(G) with a witness, or `None` if `g` has no J*-colouring.
pub fn j_star_number(g: &Graph) -> Result<Option<JWitness>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let internal_min = (0..g.order())
        .filter(|&v| is_internal(g, v))
        .map(|v| g.degree(v))
        .min();
    let top = match internal_min {
        Some(d) => d + 1,
        None => g.max_degree() + 1,
    };
    scan_down(g, top, Mode::JStar)
}

/// Re-checks a witness from scratch: properness, all `k` colours present,
/// and the rainbow condition at every vertex the mode requires.
pub fn validate_witness(g: &Graph, w: &JWitness) -> std::result::Result<(), String> {
    let colours = w.colouring.assignment();
    if colours.len() != g.order() {
        return Err(format!("witness colours {} vertices, graph has {}", colours.len(), g.order()));
    }
    if colours.iter().any(|&c| c == 0 || c > w.k) {
        return Err("colour outside 1..=k".into());
    }
    for c in 1..=w.k {
        if !colours.contains(&c) {
            return Err(format!("colour {c} unused"));
        }
    }
    for u in 0..g.order() {
        for v in 0..g.order() {
            if g.has_edge(u, v) && colours[u] == colours[v] {
                return Err(format!("edge {u}-{v} is monochromatic"));
            }
        }
    }
    for v in 0..g.order() {
        let needs = match w.mode {
            Mode::J => true,
            Mode::JStar => g.degree(v) >= 2,
        };
        if !needs {
            continue;
        }
        let mut seen = vec![false; w.k + 1];
        seen[colours[v]] = true;
        for u in 0..g.order() {
            if g.has_edge(u, v) {
                seen[colours[u]] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(format!("closed neighbourhood of {v} is not rainbow"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, FamilySpec};

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn j(g: &Graph) -> Option<usize> {
        let w = j_number(g).unwrap()?;
        validate_witness(g, &w).unwrap();
        Some(w.k)
    }

    fn j_star(g: &Graph) -> Option<usize> {
        let w = j_star_number(g).unwrap()?;
        validate_witness(g, &w).unwrap();
        Some(w.k)
    }

    /// Largest k for which some assignment in 1..=k passes the validator.
    /// Without internal vertices J* is capped at Δ+1.
    fn naive_max(g: &Graph, mode: Mode) -> Option<usize> {
        let n = g.order();
        let cap = if mode == Mode::JStar && (0..n).all(|v| g.degree(v) < 2) {
            g.max_degree() + 1
        } else {
            n
        };
        (1..=cap).rev().find(|&k| {
            (0..k.pow(n as u32)).any(|code| {
                let mut rest = code;
                let colours: Vec<usize> = (0..n)
                    .map(|_| {
                        let c = rest % k + 1;
                        rest /= k;
                        c
                    })
                    .collect();
                let Ok(colouring) = Colouring::new(colours) else {
                    return false;
                };
                colouring.colour_count() == k && validate_witness(g, &JWitness { k, mode, colouring }).is_ok()
            })
        })
    }

    #[test]
    fn cycle_six_pattern() {
        let w = j_colourable_with_k(&build("cycle:6"), 3, Mode::J).unwrap().unwrap();
        assert_eq!(w.colouring.assignment(), &[1, 2, 3, 1, 2, 3]);
    }

    #[test]
    fn cycle_five_has_no_three_colouring() {
        assert_eq!(j_colourable_with_k(&build("cycle:5"), 3, Mode::J).unwrap(), None);
        assert_eq!(j(&build("cycle:5")), None);
    }

    #[test]
    fn single_vertex() {
        let w = j_colourable_with_k(&build("complete:1"), 1, Mode::J).unwrap().unwrap();
        assert_eq!(w.colouring.assignment(), &[1]);
        assert!(j_colourable_with_k(&build("complete:1"), 0, Mode::J).is_err());
    }

    #[test]
    fn family_values() {
        assert_eq!(j(&build("path:7")), Some(2));
        assert_eq!(j(&build("wheel:9")), Some(4));
        assert_eq!(j(&build("fan:5")), Some(3));
        assert_eq!(j(&build("complete:4")), Some(4));
        assert_eq!(j_star(&build("path:5")), Some(3));
        assert_eq!(j_star(&build("complete:2")), Some(2));
    }

    #[test]
    fn star_j_star_is_degree_plus_one() {
        // only the centre is internal, and its closed neighbourhood can carry five colours
        let star = build("join:complete:1/edgeless:4");
        assert_eq!(j_star(&star), Some(5));
        assert_eq!(naive_max(&star, Mode::JStar), Some(5));
        assert_eq!(j(&star), Some(2));
    }

    #[test]
    fn pendant_and_isolated_vertices() {
        // P_2 plus an isolated vertex: no global k works in mode J
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(j(&g), None);
        // no internal vertices, so J* only needs a proper colouring with Δ+1 colours
        assert_eq!(j_star(&g), Some(2));
        assert_eq!(j(&build("edgeless:3")), Some(1));
        assert_eq!(j_star(&build("edgeless:3")), Some(1));
    }

    #[test]
    fn cycles_follow_divisibility() {
        for n in 3..=15 {
            let expected = n % 2 == 0 || n % 3 == 0;
            assert_eq!(j(&build(&format!("cycle:{n}"))).is_some(), expected, "C_{n}");
        }
    }

    #[test]
    fn matches_brute_force_up_to_five() {
        for n in 1..=5 {
            for g in enumerate_graphs(n, false).unwrap() {
                assert_eq!(j(&g), naive_max(&g, Mode::J), "J of {g:?}");
                assert_eq!(j_star(&g), naive_max(&g, Mode::JStar), "J* of {g:?}");
            }
        }
    }

    #[test]
    fn j_implies_j_star() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                if let Some(k) = j(&g) {
                    let star = j_star(&g).expect("a J-colouring is a J*-colouring");
                    assert!(star >= k);
                    assert!(chromatic_number(&g).unwrap() <= k && k <= g.min_degree() + 1);
                }
            }
        }
    }

    #[test]
    fn validator_rejects_bad_witnesses() {
        let g = build("path:3");
        let bad = JWitness {
            k: 2,
            mode: Mode::J,
            colouring: Colouring::new(vec![1, 1, 2]).unwrap(),
        };
        assert!(validate_witness(&g, &bad).is_err());
        let not_rainbow = JWitness {
            k: 3,
            mode: Mode::J,
            colouring: Colouring::new(vec![1, 2, 3]).unwrap(),
        };
        assert!(validate_witness(&g, &not_rainbow).is_err());
        let star_ok = JWitness {
            mode: Mode::JStar,
            ..not_rainbow
        };
        assert!(validate_witness(&g, &star_ok).is_ok());
    }
}
