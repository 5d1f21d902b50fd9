//! Simple finite undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, so every graph in
//! this crate has at most [`MAX_ORDER`] vertices. All the exact solvers are
//! exponential and operate far below that limit.

mod canon;
mod family;
mod graph6;

pub use canon::{canonical_form, enumerate_graphs, CanonicalForm, MAX_CANON_ORDER, MAX_ENUM_ORDER};
pub use family::FamilySpec;
pub use graph6::{parse_graph6, write_graph6};

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest order representable by the bitmask adjacency.
pub const MAX_ORDER: usize = 64;

/// Vertex subset as a bitmask.
pub type Mask = u64;

/// Iterate the set bits of a mask in increasing order.
pub fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub fn full_mask(n: usize) -> Mask {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Mask>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                what: "graph representation",
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Self-loops are rejected; repeated edges are no-ops.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Order ν(G).
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Size ε(G).
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> Mask {
        self.adj[v]
    }

    /// N[v]: the vertex together with its neighbours.
    #[inline]
    pub fn closed_neighbourhood(&self, v: usize) -> Mask {
        self.adj[v] | 1 << v
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertex_mask(&self) -> Mask {
        full_mask(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen: Mask = 1;
        let mut frontier: Mask = 1;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.vertex_mask()
    }

    /// Relabel by `perm`, where `perm[old] = new`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }

    /// Induced subgraph on the vertices of `keep`, relabelled in increasing order.
    pub fn induced_on(&self, keep: Mask) -> Graph {
        let kept: Vec<usize> = bits(keep & self.vertex_mask()).collect();
        let mut g = Graph {
            n: kept.len(),
            adj: vec![0; kept.len()],
        };
        for (new_u, &u) in kept.iter().enumerate() {
            for (new_v, &v) in kept.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[new_u] |= 1 << new_v;
                }
            }
        }
        g
    }

    /// Disjoint union with `other`; `other`'s vertices follow this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        Ok(g)
    }
}

/// Result of [`induced_subgraph`]: the surviving graph plus the relabelling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedSubgraph {
    #[serde(skip)]
    pub graph: Graph,
    /// `old_to_new[v]` is the new label of `v`, or `None` if it was removed.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[w]` is the original label of surviving vertex `w`.
    pub new_to_old: Vec<usize>,
}

/// Deletes `remove` from `g`. The result may be disconnected or empty.
pub fn induced_subgraph(g: &Graph, remove: &[usize]) -> Result<InducedSubgraph> {
    let mut removed: Mask = 0;
    for &v in remove {
        g.check_vertex(v)?;
        removed |= 1 << v;
    }
    Ok(induced_subgraph_mask(g, removed))
}

pub(crate) fn induced_subgraph_mask(g: &Graph, removed: Mask) -> InducedSubgraph {
    let keep = g.vertex_mask() & !removed;
    let new_to_old: Vec<usize> = bits(keep).collect();
    let mut old_to_new = vec![None; g.order()];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = Some(new);
    }
    InducedSubgraph {
        graph: g.induced_on(keep),
        old_to_new,
        new_to_old,
    }
}
