use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// A named graph family with its parameters.
///
/// Every generator fixes its labelling:
///
/// * `Path(n)`: `0 - 1 - ... - n-1`.
/// * `Cycle(n)`: the path plus `n-1 ~ 0`.
/// * `Wheel(n)`: rim `Cycle(n)` on `0..n`, hub `n`.
/// * `Fan(n)`: `Path(n)` on `0..n`, hub `n`.
/// * `Jahangir(n, m)`: `Cycle(nm)` on `0..nm`, hub `nm` adjacent to `0, n, 2n, ..., (m-1)n`.
/// * `Mycielskian(G)`: `v_i = i`, twins `u_i = n + i` adjacent to `N_G(v_i)`, root `w = 2n`
///   adjacent to every twin.
/// * `Shadow(G)`: copies `v_i = i`, `u_i = n + i`, and `v_i ~ u_j` whenever `v_i ~ v_j`.
/// * `Join(G, H)`: `G` first, then `H` shifted by `ν(G)`, plus every cross edge.
/// * `Corona(G, H)`: `G` first, then copy `i` of `H` in block `ν(G) + i·ν(H)`, each copy
///   fully joined to vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Edgeless(usize),
    /// Rim length.
    Wheel(usize),
    /// Path length.
    Fan(usize),
    Jahangir(usize, usize),
    Mycielskian(Box<FamilySpec>),
    Shadow(Box<FamilySpec>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn mycielskian(inner: FamilySpec) -> Self {
        FamilySpec::Mycielskian(Box::new(inner))
    }

    pub fn shadow(inner: FamilySpec) -> Self {
        FamilySpec::Shadow(Box::new(inner))
    }

    pub fn join(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Join(Box::new(a), Box::new(b))
    }

    pub fn corona(g: FamilySpec, h: FamilySpec) -> Self {
        FamilySpec::Corona(Box::new(g), Box::new(h))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Edgeless(n) | FamilySpec::Fan(n)
                if *n < 1 =>
            {
                bad(format!("{self}: order must be at least 1"))
            }
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if *n < 3 => {
                bad(format!("{self}: cycle length must be at least 3"))
            }
            FamilySpec::Jahangir(n, m) if *n < 1 || *m < 3 => {
                bad(format!("{self}: requires n >= 1 and m >= 3"))
            }
            FamilySpec::Mycielskian(inner) | FamilySpec::Shadow(inner) => inner.validate(),
            FamilySpec::Join(a, b) | FamilySpec::Corona(a, b) => {
                a.validate()?;
                b.validate()
            }
            _ => Ok(()),
        }
    }

    /// Order of the graph this spec builds, without building it.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::Edgeless(n) => *n,
            FamilySpec::Wheel(n) | FamilySpec::Fan(n) => n + 1,
            FamilySpec::Jahangir(n, m) => n * m + 1,
            FamilySpec::Mycielskian(g) => 2 * g.order() + 1,
            FamilySpec::Shadow(g) => 2 * g.order(),
            FamilySpec::Join(a, b) => a.order() + b.order(),
            FamilySpec::Corona(g, h) => g.order() * (1 + h.order()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        if self.order() > super::MAX_ORDER {
            return Err(Error::InvalidSpec(format!(
                "{self}: order {} exceeds the supported maximum of {}",
                self.order(),
                super::MAX_ORDER
            )));
        }
        self.build_unchecked()
    }

    fn build_unchecked(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i))),
            FamilySpec::Cycle(n) => Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n))),
            FamilySpec::Complete(n) => {
                Graph::from_edges(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
            }
            FamilySpec::Edgeless(n) => Graph::empty(*n),
            FamilySpec::Wheel(n) => {
                let mut g = Graph::from_edges(n + 1, (0..*n).map(|i| (i, (i + 1) % n)))?;
                for i in 0..*n {
                    g.add_edge(i, *n)?;
                }
                Ok(g)
            }
            FamilySpec::Fan(n) => {
                let mut g = Graph::from_edges(n + 1, (1..*n).map(|i| (i - 1, i)))?;
                for i in 0..*n {
                    g.add_edge(i, *n)?;
                }
                Ok(g)
            }
            FamilySpec::Jahangir(n, m) => {
                let len = n * m;
                let mut g = Graph::from_edges(len + 1, (0..len).map(|i| (i, (i + 1) % len)))?;
                for i in 0..*m {
                    g.add_edge(len, i * n)?;
                }
                Ok(g)
            }
            FamilySpec::Mycielskian(inner) => {
                let base = inner.build_unchecked()?;
                let n = base.order();
                let mut g = Graph::empty(2 * n + 1)?;
                for (u, v) in base.edges() {
                    g.add_edge(u, v)?;
                    g.add_edge(n + u, v)?;
                    g.add_edge(u, n + v)?;
                }
                for i in 0..n {
                    g.add_edge(n + i, 2 * n)?;
                }
                Ok(g)
            }
            FamilySpec::Shadow(inner) => {
                let base = inner.build_unchecked()?;
                let n = base.order();
                let mut g = base.disjoint_union(&base)?;
                for (u, v) in base.edges() {
                    g.add_edge(u, n + v)?;
                    g.add_edge(v, n + u)?;
                }
                Ok(g)
            }
            FamilySpec::Join(a, b) => {
                let (a, b) = (a.build_unchecked()?, b.build_unchecked()?);
                let mut g = a.disjoint_union(&b)?;
                for u in 0..a.order() {
                    for v in 0..b.order() {
                        g.add_edge(u, a.order() + v)?;
                    }
                }
                Ok(g)
            }
            FamilySpec::Corona(base, attached) => {
                let (base, h) = (base.build_unchecked()?, attached.build_unchecked()?);
                let (n, m) = (base.order(), h.order());
                let mut g = Graph::empty(n * (1 + m))?;
                for (u, v) in base.edges() {
                    g.add_edge(u, v)?;
                }
                for i in 0..n {
                    let offset = n + i * m;
                    for (u, v) in h.edges() {
                        g.add_edge(offset + u, offset + v)?;
                    }
                    for u in 0..m {
                        g.add_edge(i, offset + u)?;
                    }
                }
                Ok(g)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Edgeless(n) => write!(f, "edgeless:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Fan(n) => write!(f, "fan:{n}"),
            FamilySpec::Jahangir(n, m) => write!(f, "jahangir:{n},{m}"),
            FamilySpec::Mycielskian(g) => write!(f, "mycielskian:({g})"),
            FamilySpec::Shadow(g) => write!(f, "shadow:({g})"),
            FamilySpec::Join(a, b) => write!(f, "join:({a})/({b})"),
            FamilySpec::Corona(a, b) => write!(f, "corona:({a})/({b})"),
        }
    }
}

/// Split at `/` characters outside parentheses.
fn split_operands(s: &str) -> Result<Vec<&str>> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::InvalidSpec(format!("unbalanced ')' in {s:?}")));
                }
            }
            '/' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::InvalidSpec(format!("unbalanced '(' in {s:?}")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') {
        // only strip when the outer pair encloses everything
        let inner = &t[1..t.len() - 1];
        let mut depth = 0i32;
        for c in inner.chars() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return t;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return strip_parens(inner);
        }
    }
    t
}

fn parse_count(name: &str, params: &str) -> Result<usize> {
    params
        .trim()
        .parse()
        .map_err(|_| Error::InvalidSpec(format!("{name}: expected a non-negative integer, got {params:?}")))
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `name:params`, e.g. `jahangir:2,5`, `corona:complete:4/complete:2` or
    /// `join:(mycielskian:cycle:5)/(path:3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = strip_parens(s);
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidSpec(format!("expected name:params, got {s:?}")))?;
        let name = name.trim().to_ascii_lowercase();
        let spec = match name.as_str() {
            "path" => FamilySpec::Path(parse_count(&name, params)?),
            "cycle" => FamilySpec::Cycle(parse_count(&name, params)?),
            "complete" => FamilySpec::Complete(parse_count(&name, params)?),
            "edgeless" | "null" => FamilySpec::Edgeless(parse_count(&name, params)?),
            "wheel" => FamilySpec::Wheel(parse_count(&name, params)?),
            "fan" => FamilySpec::Fan(parse_count(&name, params)?),
            "jahangir" => {
                let (n, m) = params
                    .split_once(',')
                    .ok_or_else(|| Error::InvalidSpec(format!("jahangir: expected n,m, got {params:?}")))?;
                FamilySpec::Jahangir(parse_count(&name, n)?, parse_count(&name, m)?)
            }
            "mycielskian" | "mycielski" => FamilySpec::mycielskian(params.parse()?),
            "shadow" => FamilySpec::shadow(params.parse()?),
            "join" | "corona" => {
                let parts = split_operands(params)?;
                let [a, b] = parts.as_slice() else {
                    return Err(Error::InvalidSpec(format!(
                        "{name}: expected two operands separated by '/', got {params:?} \
                         (parenthesise nested operands)"
                    )));
                };
                let (a, b) = (a.parse()?, b.parse()?);
                if name == "join" {
                    FamilySpec::join(a, b)
                } else {
                    FamilySpec::corona(a, b)
                }
            }
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn jahangir_n1_is_wheel() {
        let j = FamilySpec::Jahangir(1, 5).build().unwrap();
        let w = FamilySpec::Wheel(5).build().unwrap();
        assert_eq!(j, w);
    }

    #[test]
    fn jahangir_labelling() {
        let g = FamilySpec::Jahangir(2, 5).build().unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.neighbours(10), 0b01_0101_0101);
        assert_eq!(g.size(), 15);
    }

    #[test]
    fn grotzsch_graph() {
        let g = FamilySpec::mycielskian(FamilySpec::Cycle(5)).build().unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(g.size(), 20);
    }

    #[test]
    fn small_corona() {
        let g = spec("corona:complete:2/complete:2").build().unwrap();
        assert_eq!((g.order(), g.size()), (6, 7));
        // copy of H for vertex 1 occupies block 4..6
        assert!(g.has_edge(1, 4) && g.has_edge(1, 5) && g.has_edge(4, 5));
        assert!(!g.has_edge(0, 4));
    }

    #[test]
    fn shadow_of_path() {
        let g = FamilySpec::shadow(FamilySpec::Path(3)).build().unwrap();
        assert_eq!((g.order(), g.size()), (6, 8));
        assert!(g.has_edge(0, 4) && g.has_edge(1, 3) && !g.has_edge(0, 3));
    }

    #[test]
    fn mycielskian_minus_root_is_not_shadow() {
        // μ(G) − w has no edges inside the twin copy, the shadow graph does
        let m = FamilySpec::mycielskian(FamilySpec::Path(3)).build().unwrap();
        let s = FamilySpec::shadow(FamilySpec::Path(3)).build().unwrap();
        let trimmed = crate::graph::induced_subgraph(&m, &[6]).unwrap().graph;
        assert_eq!(trimmed.order(), s.order());
        assert_eq!(trimmed.size() + 2, s.size());
    }

    #[test]
    fn c4_is_k22() {
        let c4 = canonical_form(&FamilySpec::Cycle(4).build().unwrap()).unwrap();
        let k22 = canonical_form(&spec("join:edgeless:2/edgeless:2").build().unwrap()).unwrap();
        assert_eq!(c4, k22);
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(spec("jahangir:2,5"), FamilySpec::Jahangir(2, 5));
        assert_eq!(
            spec("corona:(complete:4)/(complete:2)"),
            FamilySpec::corona(FamilySpec::Complete(4), FamilySpec::Complete(2))
        );
        assert_eq!(spec("corona:complete:4/complete:2"), spec("corona:(complete:4)/(complete:2)"));
        assert_eq!(
            spec("join:(join:path:2/path:3)/(mycielski:cycle:5)"),
            FamilySpec::join(
                FamilySpec::join(FamilySpec::Path(2), FamilySpec::Path(3)),
                FamilySpec::mycielskian(FamilySpec::Cycle(5))
            )
        );
        for s in ["cycle:2", "jahangir:0,4", "jahangir:2,2", "wheel", "blob:3", "join:path:2", "path:-1", "join:(path:2/path:3"] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s} should not parse");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["corona:(complete:4)/(cycle:5)", "mycielskian:(jahangir:2,3)", "shadow:(fan:4)", "edgeless:3"] {
            let f = spec(s);
            assert_eq!(f.to_string().parse::<FamilySpec>().unwrap(), f);
        }
    }

    #[test]
    fn order_formulas() {
        let g = FamilySpec::Cycle(5);
        let h = FamilySpec::Fan(3);
        let (gg, hh) = (g.build().unwrap(), h.build().unwrap());
        let join = FamilySpec::join(g.clone(), h.clone()).build().unwrap();
        assert_eq!(join.size(), gg.size() + hh.size() + gg.order() * hh.order());
        let corona = FamilySpec::corona(g.clone(), h.clone()).build().unwrap();
        assert_eq!(corona.order(), gg.order() * (1 + hh.order()));
        let my = FamilySpec::mycielskian(h.clone()).build().unwrap();
        assert_eq!((my.order(), my.size()), (2 * hh.order() + 1, 3 * hh.size() + hh.order()));
    }

    #[test]
    fn bounds_rejected() {
        assert!(FamilySpec::Cycle(2).build().is_err());
        assert!(FamilySpec::Path(0).build().is_err());
        assert!(FamilySpec::Complete(65).build().is_err());
        assert!(FamilySpec::mycielskian(FamilySpec::Wheel(2)).build().is_err());
    }
}
