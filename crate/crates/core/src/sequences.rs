//! Chromatic degree sequences and the survey of small graphs relating
//! ren(G), the order and r_χ(G).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::chromatic::{all_chi_colourings, chi_minus_colouring, chromatic_profile, Colouring};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_graphs, write_graph6, Graph, MAX_CANON_ORDER, MAX_ENUM_ORDER};
use crate::jcolor::j_number;
use crate::ren::ren_exact;

/// Chromatic degrees sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ChromaticDegreeSequence(Vec<usize>);

impl ChromaticDegreeSequence {
    /// Sorts `values` non-increasing. Every entry must be at least 1.
    pub fn new(mut values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("sequence must be non-empty".into()));
        }
        if values.contains(&0) {
            return Err(Error::InvalidArgument("chromatic degrees are at least 1".into()));
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(ChromaticDegreeSequence(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }
}

impl FromStr for ChromaticDegreeSequence {
    type Err = Error;

    /// Accepts `3,3,3,2,2` or `(3,3,3,2,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad sequence entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ChromaticDegreeSequence::new(values)
    }
}

impl fmt::Display for ChromaticDegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Chromatic degree sequence of `g` under a given colouring.
pub fn sequence_under(g: &Graph, c: &Colouring) -> Result<ChromaticDegreeSequence> {
    ChromaticDegreeSequence::new(chromatic_profile(g, c)?.chromatic_degrees)
}

/// Chromatic degree sequence under the canonical χ⁻-colouring.
pub fn chromatic_degree_sequence(g: &Graph) -> Result<ChromaticDegreeSequence> {
    sequence_under(g, &chi_minus_colouring(g)?)
}

/// Which colourings may realise a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Realisation {
    /// Only the canonical χ⁻-colouring.
    #[default]
    Canonical,
    /// Any proper colouring with χ(G) colours.
    AnyChiColouring,
}

/// First graph in enumeration order whose chromatic degree sequence is
/// `seq`, or `None` if no graph of that order realises it.
pub fn is_chromatically_graphic(
    seq: &ChromaticDegreeSequence,
    connected_only: bool,
    realisation: Realisation,
) -> Result<Option<Graph>> {
    let n = seq.order();
    if n > MAX_ENUM_ORDER {
        return Err(Error::OrderTooLarge {
            what: "chromatically graphic search",
            order: n,
            max: MAX_ENUM_ORDER,
        });
    }
    for g in enumerate_graphs(n, connected_only)? {
        let realised = match realisation {
            Realisation::Canonical => chromatic_degree_sequence(&g)? == *seq,
            Realisation::AnyChiColouring => {
                let mut any = false;
                for c in all_chi_colourings(&g)? {
                    if sequence_under(&g, &c)? == *seq {
                        any = true;
                        break;
                    }
                }
                any
            }
        };
        if realised {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    /// Canonical adjacency bit string, absent above the canonical-form guard.
    pub canonical_form: Option<String>,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub chi: usize,
    /// J(G), or `None` when `G` has no J-colouring.
    pub j: Option<usize>,
    pub ren: usize,
    pub rainbow_number: usize,
    pub min_chromatic_degree: usize,
    pub max_chromatic_degree: usize,
    pub chromatic_diameter: usize,
    pub chromatic_null: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointCount {
    pub order: usize,
    pub ren: usize,
    pub rainbow_number: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub graphs: usize,
    pub j_colourable: usize,
    /// Counts of each (order, ren, r_χ) triple, sorted.
    pub joint: Vec<JointCount>,
    /// graph6 of J-colourable graphs whose χ⁻-profile is not chromatic-null.
    pub null_claim_findings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survey {
    pub rows: Vec<SurveyRow>,
    pub summary: SurveySummary,
}

fn survey_row(g: &Graph) -> Result<SurveyRow> {
    let colouring = chi_minus_colouring(g)?;
    let profile = chromatic_profile(g, &colouring)?;
    let canonical = if g.order() <= MAX_CANON_ORDER {
        Some(canonical_form(g)?.to_string())
    } else {
        None
    };
    Ok(SurveyRow {
        canonical_form: canonical,
        graph6: write_graph6(g),
        order: g.order(),
        size: g.size(),
        chi: colouring.colour_count(),
        j: j_number(g)?.map(|w| w.k),
        ren: ren_exact(g)?.ren,
        rainbow_number: profile.rainbow_number,
        min_chromatic_degree: profile.min_chromatic_degree,
        max_chromatic_degree: profile.max_chromatic_degree,
        chromatic_diameter: profile.chromatic_diameter,
        chromatic_null: profile.chromatic_null,
    })
}

/// Survey rows for arbitrary graphs, sorted by order then canonical form
/// (graph6 above the canonical-form guard).
pub fn survey_graphs(graphs: &[Graph]) -> Result<Survey> {
    let mut rows = graphs
        .par_iter()
        .map(survey_row)
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| {
        let key = |r: &SurveyRow| (r.order, r.canonical_form.clone().unwrap_or_else(|| r.graph6.clone()));
        key(a).cmp(&key(b))
    });
    let mut joint: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for r in &rows {
        *joint.entry((r.order, r.ren, r.rainbow_number)).or_default() += 1;
    }
    let summary = SurveySummary {
        graphs: rows.len(),
        j_colourable: rows.iter().filter(|r| r.j.is_some()).count(),
        joint: joint
            .into_iter()
            .map(|((order, ren, rainbow_number), count)| JointCount {
                order,
                ren,
                rainbow_number,
                count,
            })
            .collect(),
        null_claim_findings: rows
            .iter()
            .filter(|r| r.ren == 0 && !r.chromatic_null)
            .map(|r| r.graph6.clone())
            .collect(),
    };
    Ok(Survey { rows, summary })
}

/// Survey of every graph (or every connected graph) on `n` vertices.
pub fn survey(n: usize, connected_only: bool) -> Result<Survey> {
    let graphs: Vec<Graph> = enumerate_graphs(n, connected_only)?.collect();
    survey_graphs(&graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn seq(s: &str) -> ChromaticDegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn sequences_of_families() {
        assert_eq!(chromatic_degree_sequence(&build("complete:3")).unwrap(), seq("3,3,3"));
        assert_eq!(chromatic_degree_sequence(&build("cycle:5")).unwrap(), seq("(3,3,3,2,2)"));
        assert_eq!(chromatic_degree_sequence(&build("path:4")).unwrap(), seq("2,2,2,2"));
    }

    #[test]
    fn parsing_sorts_and_validates() {
        assert_eq!(seq("2,3,2").values(), &[3, 2, 2]);
        assert_eq!(seq("2,3,2").to_string(), "(3,2,2)");
        assert!("0,1".parse::<ChromaticDegreeSequence>().is_err());
        assert!("".parse::<ChromaticDegreeSequence>().is_err());
        assert!("a".parse::<ChromaticDegreeSequence>().is_err());
    }

    #[test]
    fn graphic_examples() {
        let k1 = is_chromatically_graphic(&seq("1"), false, Realisation::Canonical).unwrap().unwrap();
        assert_eq!(k1.order(), 1);
        let k2 = is_chromatically_graphic(&seq("2,2"), false, Realisation::Canonical).unwrap().unwrap();
        assert_eq!(k2.size(), 1);
        assert_eq!(is_chromatically_graphic(&seq("3,2,2"), true, Realisation::Canonical).unwrap(), None);
        assert_eq!(is_chromatically_graphic(&seq("3,2,2"), true, Realisation::AnyChiColouring).unwrap(), None);
        assert!(is_chromatically_graphic(&seq("1,1,1,1,1,1,1"), false, Realisation::Canonical).is_err());
    }

    #[test]
    fn witnesses_reproduce_their_sequence() {
        for s in ["3,3,3,2,2", "2,2,2,2", "4,4,4,4", "2,2,1", "3,3,2,2,2"] {
            let target = seq(s);
            for mode in [Realisation::Canonical, Realisation::AnyChiColouring] {
                if let Some(g) = is_chromatically_graphic(&target, false, mode).unwrap() {
                    if mode == Realisation::Canonical {
                        assert_eq!(chromatic_degree_sequence(&g).unwrap(), target);
                    } else {
                        let ok = all_chi_colourings(&g)
                            .unwrap()
                            .iter()
                            .any(|c| sequence_under(&g, c).unwrap() == target);
                        assert!(ok);
                    }
                }
            }
        }
    }

    #[test]
    fn any_colouring_realises_at_least_canonical() {
        for s in ["3,3,3,2,2", "2,2,2,2,1", "3,3,2,2"] {
            let target = seq(s);
            let canonical = is_chromatically_graphic(&target, false, Realisation::Canonical).unwrap();
            let any = is_chromatically_graphic(&target, false, Realisation::AnyChiColouring).unwrap();
            if canonical.is_some() {
                assert!(any.is_some());
            }
        }
    }

    #[test]
    fn survey_small_orders() {
        let s2 = survey(2, true).unwrap();
        assert_eq!(s2.rows.len(), 1);
        assert_eq!((s2.rows[0].ren, s2.rows[0].rainbow_number), (0, 2));
        assert_eq!(survey(4, true).unwrap().rows.len(), 6);
        assert_eq!(survey(1, false).unwrap().rows.len(), 1);

        let s5 = survey(5, true).unwrap();
        let c5 = canonical_form(&build("cycle:5")).unwrap().to_string();
        let row = s5.rows.iter().find(|r| r.canonical_form.as_deref() == Some(c5.as_str())).unwrap();
        assert_eq!((row.ren, row.rainbow_number), (1, 3));
    }

    #[test]
    fn survey_rows_are_consistent() {
        let s = survey(6, false).unwrap();
        assert_eq!(s.rows.len(), 156);
        assert_eq!(s.summary.joint.iter().map(|j| j.count).sum::<usize>(), 156);
        for r in &s.rows {
            assert_eq!(r.ren == 0, r.j.is_some());
            assert_eq!(r.rainbow_number == r.order, r.chromatic_diameter == 0);
            assert!(r.max_chromatic_degree <= r.chi);
        }
        assert!(s.rows.windows(2).all(|w| w[0].canonical_form < w[1].canonical_form));
    }

    #[test]
    fn sequence_sum_and_max() {
        for g in enumerate_graphs(5, false).unwrap() {
            let c = chi_minus_colouring(&g).unwrap();
            let s = sequence_under(&g, &c).unwrap();
            let p = chromatic_profile(&g, &c).unwrap();
            assert_eq!(s.values().iter().sum::<usize>(), p.chromatic_degrees.iter().sum::<usize>());
            assert!(s.values()[0] <= c.colour_count());
        }
    }
}
