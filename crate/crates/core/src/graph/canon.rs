//! Canonical labelling by exhaustive permutation search, and enumeration of
//! small graphs up to isomorphism.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{bits, full_mask, Graph, Mask};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 9;
/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUM_ORDER: usize = 6;

/// The lexicographically minimal upper-triangle bit string of a graph over
/// all relabellings, bits in graph6 order. Two graphs of the same order are
/// isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    order: usize,
    /// First bit of the string in the most significant used position.
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    fn bit_len(&self) -> usize {
        self.order * self.order.saturating_sub(1) / 2
    }

    /// The graph whose labelling realises this form.
    pub fn to_graph(&self) -> Graph {
        let len = self.bit_len();
        let mut g = Graph::empty(self.order).expect("canonical order is small");
        let mut k = 0;
        for j in 1..self.order {
            for i in 0..j {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    g.add_edge(i, j).expect("valid edge");
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.bit_len();
        for k in 0..len {
            f.write_str(if self.bits >> (len - 1 - k) & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct Search<'a> {
    g: &'a Graph,
    placed: Vec<usize>,
    /// Best column values found so far; only `best[..valid]` is meaningful,
    /// later columns count as +infinity.
    best: Vec<u64>,
    valid: usize,
}

impl Search<'_> {
    fn column(&self, v: usize) -> u64 {
        let j = self.placed.len();
        self.placed
            .iter()
            .enumerate()
            .fold(0, |acc, (i, &u)| acc | (self.g.has_edge(u, v) as u64) << (j - 1 - i))
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.g.neighbours(u) & !(1 << v) == self.g.neighbours(v) & !(1 << u)
    }

    fn run(&mut self, unused: Mask) {
        let j = self.placed.len();
        if unused == 0 {
            self.valid = j;
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(unused) {
            // swapping twins is an automorphism fixing every placed vertex
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let col = self.column(v);
            if j < self.valid {
                if col > self.best[j] {
                    continue;
                }
                if col < self.best[j] {
                    self.best[j] = col;
                    self.valid = j + 1;
                }
            } else {
                self.best[j] = col;
                self.valid = j + 1;
            }
            self.placed.push(v);
            self.run(unused & !(1 << v));
            self.placed.pop();
        }
    }
}

/// Canonical form by full permutation scan with prefix pruning. Orders above
/// [`MAX_CANON_ORDER`] are rejected.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            what: "canonical form",
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    let mut search = Search {
        g,
        placed: Vec::with_capacity(n),
        best: vec![0; n],
        valid: 0,
    };
    search.run(full_mask(n));
    let bits = (1..n).fold(0u64, |acc, j| acc << j | search.best[j]);
    Ok(CanonicalForm { order: n, bits })
}

fn labelled_graph(n: usize, code: u64) -> Graph {
    CanonicalForm { order: n, bits: code }.to_graph()
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// increasing canonical-form order. Each representative carries the
/// labelling of its canonical form.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "enumeration supports orders 1..={MAX_ENUM_ORDER}, got {n}"
        )));
    }
    let len = n * (n - 1) / 2;
    // split the labelled space by its leading bits
    let prefix_bits = len.min(6);
    let forms: BTreeSet<CanonicalForm> = (0u64..1 << prefix_bits)
        .into_par_iter()
        .map(|prefix| {
            let rest = len - prefix_bits;
            (0u64..1 << rest)
                .map(|low| {
                    canonical_form(&labelled_graph(n, prefix << rest | low)).expect("order within guard")
                })
                .collect::<BTreeSet<_>>()
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(forms
        .into_iter()
        .map(|f| f.to_graph())
        .filter(move |g| !connected_only || g.is_connected()))
}
