//! Closed-form predictions for J, J*, ren and the chromatic diameter of the
//! standard families, and a harness comparing them with the exact solvers.
//!
//! Every hypothesis a formula depends on (J-colourability of a part, the
//! chromatic diameter of a factor, ...) is computed, never assumed. When a
//! hypothesis fails the prediction is [`Predicted::NotApplicable`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::chromatic::{chi_minus_colouring, chromatic_number, chromatic_profile};
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, Graph};
use crate::jcolor::{is_j_colourable, j_number, j_star_number};
use crate::ren::ren_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Quantity {
    #[serde(rename = "J")]
    J,
    #[serde(rename = "J*")]
    JStar,
    #[serde(rename = "ren")]
    Ren,
    #[serde(rename = "chromatic-diameter")]
    ChromaticDiameter,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::J => "J",
            Quantity::JStar => "J*",
            Quantity::Ren => "ren",
            Quantity::ChromaticDiameter => "chromatic-diameter",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicted {
    Value(usize),
    NotJColourable,
    NotApplicable,
}

impl fmt::Display for Predicted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicted::Value(v) => write!(f, "{v}"),
            Predicted::NotJColourable => f.write_str("not-J-colourable"),
            Predicted::NotApplicable => f.write_str("not-applicable"),
        }
    }
}

impl Serialize for Predicted {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Predicted::Value(v) => s.serialize_u64(*v as u64),
            other => s.collect_str(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub quantity: Quantity,
    pub target: String,
    pub predicted: Predicted,
    /// Which result the value comes from, or why none applies.
    pub source: String,
}

impl Prediction {
    fn new(quantity: Quantity, target: &FamilySpec, predicted: Predicted, source: impl Into<String>) -> Self {
        Prediction {
            quantity,
            target: target.to_string(),
            predicted,
            source: source.into(),
        }
    }

    fn not_applicable(quantity: Quantity, target: &FamilySpec, why: impl Into<String>) -> Self {
        Prediction::new(quantity, target, Predicted::NotApplicable, why)
    }
}

fn coprime_to_six(n: usize) -> bool {
    !n.is_multiple_of(2) && !n.is_multiple_of(3)
}

/// Predicted J(G) for paths, cycles, wheels, fans and complete graphs.
pub fn predict_j(spec: &FamilySpec) -> Prediction {
    use Predicted::*;
    let q = Quantity::J;
    match *spec {
        FamilySpec::Path(n) if n >= 3 => Prediction::new(q, spec, Value(2), "path: J(P_n) = 2"),
        FamilySpec::Cycle(n) => {
            let p = if n % 3 == 0 {
                Value(3)
            } else if n % 2 == 0 {
                Value(2)
            } else {
                NotJColourable
            };
            Prediction::new(q, spec, p, "cycle: J-colourable iff 2 | n or 3 | n; J = 3 if 3 | n else 2")
        }
        FamilySpec::Wheel(n) => {
            let p = if n % 3 == 0 {
                Value(4)
            } else if n % 2 == 0 {
                Value(3)
            } else {
                NotJColourable
            };
            Prediction::new(q, spec, p, "wheel: J = 4 if 3 | n, 3 if 2 | n, else none")
        }
        FamilySpec::Fan(n) if n >= 3 => Prediction::new(q, spec, Value(3), "fan: J(F_n) = 3"),
        FamilySpec::Complete(n) => Prediction::new(q, spec, Value(n), "complete: every colouring of K_n is rainbow"),
        _ => Prediction::not_applicable(q, spec, "no closed form for this family"),
    }
}

/// Predicted J*(G); only paths have a closed form.
pub fn predict_j_star(spec: &FamilySpec) -> Prediction {
    match *spec {
        FamilySpec::Path(n) if n >= 3 => {
            Prediction::new(Quantity::JStar, spec, Predicted::Value(3), "path: J*(P_n) = 3")
        }
        _ => Prediction::not_applicable(Quantity::JStar, spec, "no closed form for this family"),
    }
}

/// The Jahangir formula once its hypothesis (J_{n,m} has no J-colouring)
/// holds: 1 if the rim cycle is J-colourable, else 2.
pub fn jahangir_ren_formula(rim_j_colourable: bool) -> usize {
    if rim_j_colourable {
        1
    } else {
        2
    }
}

/// Predicted ren(G) for paths, cycles, wheels, Mycielskians of J-colourable
/// graphs, Jahangir graphs without a J-colouring, and joins of predictable
/// parts.
pub fn predict_ren(spec: &FamilySpec) -> Result<Prediction> {
    use Predicted::*;
    let q = Quantity::Ren;
    Ok(match spec {
        FamilySpec::Path(_) => Prediction::new(q, spec, Value(0), "path: ren(P_n) = 0"),
        FamilySpec::Cycle(n) => Prediction::new(
            q,
            spec,
            Value(coprime_to_six(*n) as usize),
            "cycle: ren = 1 if n is coprime to 6, else 0",
        ),
        FamilySpec::Wheel(n) => Prediction::new(
            q,
            spec,
            Value(coprime_to_six(*n) as usize),
            "wheel: ren = 1 if the rim length is coprime to 6, else 0",
        ),
        FamilySpec::Mycielskian(inner) => {
            if is_j_colourable(&inner.build()?)? {
                Prediction::new(q, spec, Value(1), "Mycielskian of a J-colourable graph: ren = 1")
            } else {
                Prediction::not_applicable(q, spec, "inner graph is not J-colourable")
            }
        }
        FamilySpec::Jahangir(n, m) => {
            if is_j_colourable(&spec.build()?)? {
                Prediction::not_applicable(q, spec, "J_{n,m} admits a J-colouring")
            } else {
                let rim = is_j_colourable(&FamilySpec::Cycle(n * m).build()?)?;
                Prediction::new(
                    q,
                    spec,
                    Value(jahangir_ren_formula(rim)),
                    "Jahangir: ren = 1 if C_{nm} is J-colourable, else 2",
                )
            }
        }
        FamilySpec::Join(a, b) => {
            let (pa, pb) = (predict_ren(a)?, predict_ren(b)?);
            match (pa.predicted, pb.predicted) {
                (Value(x), Value(y)) => Prediction::new(q, spec, Value(x + y), "join: ren(G+H) = ren(G) + ren(H)"),
                _ => Prediction::not_applicable(q, spec, "a join operand has no ren prediction"),
            }
        }
        _ => Prediction::not_applicable(q, spec, "no closed form for this family"),
    })
}

/// Which corona case applies, with the quantities its formulas use.
#[derive(Debug, Clone, PartialEq, Eq)]
enum CoronaCase {
    /// d(H,χ) = 0 and χ(H) ≥ χ(G) − 1.
    RainbowWide,
    /// d(H,χ) = 0 and χ(H) < χ(G) − 1.
    RainbowNarrow { tail: usize },
    /// ren(H) ≥ 1 and χ(H′) ≥ χ(G) − 1.
    DeletedWide { ren_h: usize },
    /// ren(H) ≥ 1 and χ(H′) < χ(G) − 1.
    DeletedNarrow { ren_h: usize, chi_h_prime: usize, tail: usize },
}

struct CoronaFacts {
    n: usize,
    m: usize,
    k: usize,
    l: usize,
    diameter_h: usize,
    case: Option<CoronaCase>,
}

/// θ(c_from) + ... + θ(c_k) under the χ⁻-colouring of `g`.
fn theta_tail(theta: &[usize], from: usize) -> usize {
    theta.iter().skip(from - 1).sum()
}

fn corona_facts(g_spec: &FamilySpec, h_spec: &FamilySpec) -> Result<Option<CoronaFacts>> {
    let (g, h) = (g_spec.build()?, h_spec.build()?);
    let (n, m) = (g.order(), h.order());
    if n < 2 || m < 2 {
        return Ok(None);
    }
    let g_colouring = chi_minus_colouring(&g)?;
    let k = g_colouring.colour_count();
    let theta = g_colouring.theta();
    let h_colouring = chi_minus_colouring(&h)?;
    let l = h_colouring.colour_count();
    let diameter_h = chromatic_profile(&h, &h_colouring)?.chromatic_diameter;

    let case = if diameter_h == 0 {
        Some(if l + 1 >= k {
            CoronaCase::RainbowWide
        } else {
            CoronaCase::RainbowNarrow {
                tail: theta_tail(theta, l + 2),
            }
        })
    } else {
        let r = ren_exact(&h)?;
        if r.ren == 0 {
            None
        } else {
            // H′ is the survivor of the lexicographically first optimal deletion
            let survivor: Graph = crate::graph::induced_subgraph(&h, &r.removed)?.graph;
            let chi_h_prime = chromatic_number(&survivor)?;
            Some(if chi_h_prime + 1 >= k {
                CoronaCase::DeletedWide { ren_h: r.ren }
            } else {
                CoronaCase::DeletedNarrow {
                    ren_h: r.ren,
                    chi_h_prime,
                    tail: theta_tail(theta, chi_h_prime + 2),
                }
            })
        }
    };
    Ok(Some(CoronaFacts {
        n,
        m,
        k,
        l,
        diameter_h,
        case,
    }))
}

/// Predicted ren(G∘H) from the corona formulas.
pub fn predict_corona_ren(g_spec: &FamilySpec, h_spec: &FamilySpec) -> Result<Prediction> {
    let target = FamilySpec::corona(g_spec.clone(), h_spec.clone());
    let q = Quantity::Ren;
    let Some(facts) = corona_facts(g_spec, h_spec)? else {
        return Ok(Prediction::not_applicable(q, &target, "both factors need order at least 2"));
    };
    let Some(case) = facts.case else {
        return Ok(Prediction::not_applicable(
            q,
            &target,
            "H is J-colourable but its χ⁻-colouring has d(H,χ) > 0",
        ));
    };
    let (value, source) = match case {
        CoronaCase::RainbowWide => (0, "corona: d(H,χ) = 0 and χ(H) ≥ χ(G) − 1 gives 0"),
        CoronaCase::RainbowNarrow { tail } => (
            (facts.m + 1) * tail,
            "corona: d(H,χ) = 0 and χ(H) < χ(G) − 1 gives (m+1)·Σ θ(c_i), i = χ(H)+2..χ(G)",
        ),
        CoronaCase::DeletedWide { ren_h } => (facts.n * ren_h, "corona: ren(H) ≥ 1 and χ(H′) ≥ χ(G) − 1 gives n·ren(H)"),
        CoronaCase::DeletedNarrow { ren_h, tail, .. } => (
            facts.n * ren_h + (facts.m + 1) * tail,
            "corona: ren(H) ≥ 1 and χ(H′) < χ(G) − 1 gives n·ren(H) + (m+1)·Σ θ(c_i), i = χ(H′)+2..χ(G)",
        ),
    };
    Ok(Prediction::new(q, &target, Predicted::Value(value), source))
}

/// Predicted chromatic diameter d(G∘H, χ) from the corona corollary.
pub fn predict_corona_diameter(g_spec: &FamilySpec, h_spec: &FamilySpec) -> Result<Prediction> {
    let target = FamilySpec::corona(g_spec.clone(), h_spec.clone());
    let q = Quantity::ChromaticDiameter;
    let Some(facts) = corona_facts(g_spec, h_spec)? else {
        return Ok(Prediction::not_applicable(q, &target, "both factors need order at least 2"));
    };
    let Some(case) = facts.case else {
        return Ok(Prediction::not_applicable(
            q,
            &target,
            "H is J-colourable but its χ⁻-colouring has d(H,χ) > 0",
        ));
    };
    let (value, source) = match case {
        CoronaCase::RainbowWide => (0, "corona: d(H,χ) = 0 and χ(H) ≥ χ(G) − 1 gives 0"),
        CoronaCase::RainbowNarrow { .. } => (facts.k - (facts.l + 1), "corona: d(H,χ) = 0 and χ(H) < χ(G) − 1 gives k − (ℓ+1)"),
        CoronaCase::DeletedWide { .. } => (facts.diameter_h, "corona: χ(H′) ≥ χ(G) − 1 gives d(H,χ)"),
        CoronaCase::DeletedNarrow { chi_h_prime, .. } => (
            facts.diameter_h + facts.k - (chi_h_prime + 1),
            "corona: χ(H′) < χ(G) − 1 gives d(H,χ) + k − (χ(H′)+1)",
        ),
    };
    Ok(Prediction::new(q, &target, Predicted::Value(value), source))
}

/// Exact value of `quantity` on the graph built from `spec`.
pub fn exact_value(spec: &FamilySpec, quantity: Quantity) -> Result<Predicted> {
    let g = spec.build()?;
    let from_witness = |w: Option<crate::jcolor::JWitness>| match w {
        Some(w) => Predicted::Value(w.k),
        None => Predicted::NotJColourable,
    };
    Ok(match quantity {
        Quantity::J => from_witness(j_number(&g)?),
        Quantity::JStar => from_witness(j_star_number(&g)?),
        Quantity::Ren => Predicted::Value(ren_exact(&g)?.ren),
        Quantity::ChromaticDiameter => {
            let c = chi_minus_colouring(&g)?;
            Predicted::Value(chromatic_profile(&g, &c)?.chromatic_diameter)
        }
    })
}

/// Inclusive integer range, written `a..b`, `a..=b`, `a` or `a,b,c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Values(pub Vec<usize>);

impl FromStr for Values {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSweep(format!("bad range {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        if let Some((a, b)) = s.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(bad());
            }
            return Ok(Values((a..=b).collect()));
        }
        let s = s.trim_matches(|c| c == '{' || c == '}');
        s.split(',').map(num).collect::<Result<Vec<_>>>().map(Values)
    }
}

/// A family sweep for [`verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sweep {
    Paths(Vec<usize>),
    Cycles(Vec<usize>),
    Wheels(Vec<usize>),
    Fans(Vec<usize>),
    Completes(Vec<usize>),
    Jahangir { n: Vec<usize>, m: Vec<usize> },
    Mycielskian(Vec<FamilySpec>),
    Join(FamilySpec, FamilySpec),
    Corona(FamilySpec, FamilySpec),
}

impl FromStr for Sweep {
    type Err = Error;

    /// Examples: `cycles 3..12`, `wheels 3..10`, `jahangir n=1,2 m=3..5`,
    /// `join cycle:5 cycle:5`, `corona complete:4 complete:2`,
    /// `mycielskian path:3 cycle:6`.
    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let Some((&head, rest)) = words.split_first() else {
            return Err(Error::InvalidSweep("empty sweep".into()));
        };
        let range = |rest: &[&str]| -> Result<Vec<usize>> {
            match rest {
                [r] => Ok(r.parse::<Values>()?.0),
                _ => Err(Error::InvalidSweep(format!("{head}: expected one range like 3..12"))),
            }
        };
        let specs = |rest: &[&str]| -> Result<Vec<FamilySpec>> {
            rest.iter()
                .map(|t| t.parse::<FamilySpec>().map_err(|e| Error::InvalidSweep(e.to_string())))
                .collect()
        };
        let pair = |rest: &[&str]| -> Result<(FamilySpec, FamilySpec)> {
            match specs(rest)?.as_slice() {
                [a, b] => Ok((a.clone(), b.clone())),
                _ => Err(Error::InvalidSweep(format!("{head}: expected two family specs"))),
            }
        };
        Ok(match head.to_ascii_lowercase().as_str() {
            "paths" | "path" => Sweep::Paths(range(rest)?),
            "cycles" | "cycle" => Sweep::Cycles(range(rest)?),
            "wheels" | "wheel" => Sweep::Wheels(range(rest)?),
            "fans" | "fan" => Sweep::Fans(range(rest)?),
            "completes" | "complete" => Sweep::Completes(range(rest)?),
            "jahangir" => {
                let mut n = None;
                let mut m = None;
                for word in rest {
                    let word = word.trim_end_matches(',');
                    match word.split_once(['=', '∈']) {
                        Some(("n", r)) => n = Some(r.parse::<Values>()?.0),
                        Some(("m", r)) => m = Some(r.parse::<Values>()?.0),
                        _ => return Err(Error::InvalidSweep(format!("jahangir: unexpected {word:?}"))),
                    }
                }
                match (n, m) {
                    (Some(n), Some(m)) => Sweep::Jahangir { n, m },
                    _ => return Err(Error::InvalidSweep("jahangir: expected n=... m=...".into())),
                }
            }
            "mycielskian" | "mycielski" => {
                let inner = specs(rest)?;
                if inner.is_empty() {
                    return Err(Error::InvalidSweep("mycielskian: expected family specs".into()));
                }
                Sweep::Mycielskian(inner)
            }
            "join" => {
                let (a, b) = pair(rest)?;
                Sweep::Join(a, b)
            }
            "corona" => {
                let (a, b) = pair(rest)?;
                Sweep::Corona(a, b)
            }
            other => return Err(Error::InvalidSweep(format!("unknown sweep {other:?}"))),
        })
    }
}

/// One sweep instance and quantity, before evaluation.
#[derive(Debug, Clone)]
struct Task {
    spec: FamilySpec,
    quantity: Quantity,
    note: Option<String>,
}

impl Sweep {
    fn tasks(&self) -> Vec<Task> {
        let each = |specs: Vec<FamilySpec>, quantities: &[Quantity]| -> Vec<Task> {
            specs
                .into_iter()
                .flat_map(|spec| {
                    quantities.iter().map(move |&quantity| Task {
                        spec: spec.clone(),
                        quantity,
                        note: None,
                    })
                })
                .collect()
        };
        use Quantity::*;
        match self {
            Sweep::Paths(ns) => each(ns.iter().map(|&n| FamilySpec::Path(n)).collect(), &[J, JStar, Ren]),
            Sweep::Cycles(ns) => each(ns.iter().map(|&n| FamilySpec::Cycle(n)).collect(), &[J, Ren]),
            Sweep::Wheels(ns) => each(ns.iter().map(|&n| FamilySpec::Wheel(n)).collect(), &[J, Ren]),
            Sweep::Fans(ns) => each(ns.iter().map(|&n| FamilySpec::Fan(n)).collect(), &[J]),
            Sweep::Completes(ns) => each(ns.iter().map(|&n| FamilySpec::Complete(n)).collect(), &[J]),
            Sweep::Jahangir { n, m } => {
                let mut tasks = Vec::new();
                for &a in n {
                    for &b in m {
                        tasks.push(Task {
                            spec: FamilySpec::Jahangir(a, b),
                            quantity: Ren,
                            note: (a == 1).then(|| format!("J_{{1,{b}}} is the wheel W_{}; the wheel formula also applies", b + 1)),
                        });
                    }
                }
                tasks
            }
            Sweep::Mycielskian(inner) => each(
                inner.iter().cloned().map(FamilySpec::mycielskian).collect(),
                &[J, Ren],
            ),
            Sweep::Join(a, b) => each(vec![FamilySpec::join(a.clone(), b.clone())], &[Ren]),
            Sweep::Corona(g, h) => each(vec![FamilySpec::corona(g.clone(), h.clone())], &[Ren, ChromaticDiameter]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Agree,
    Disagree,
    NotApplicable,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub instance: String,
    pub quantity: Quantity,
    pub predicted: Predicted,
    /// `None` when the exact solver could not run (see `error`).
    pub exact: Option<Predicted>,
    pub status: Status,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub rows: usize,
    pub agree: usize,
    pub disagree: usize,
    pub not_applicable: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
    pub summary: VerifySummary,
}

fn predict(spec: &FamilySpec, quantity: Quantity) -> Result<Prediction> {
    match (quantity, spec) {
        (Quantity::J, _) => Ok(predict_j(spec)),
        (Quantity::JStar, _) => Ok(predict_j_star(spec)),
        (Quantity::Ren, FamilySpec::Corona(g, h)) => predict_corona_ren(g, h),
        (Quantity::Ren, _) => predict_ren(spec),
        (Quantity::ChromaticDiameter, FamilySpec::Corona(g, h)) => predict_corona_diameter(g, h),
        (Quantity::ChromaticDiameter, _) => Ok(Prediction::not_applicable(
            quantity,
            spec,
            "chromatic diameter predictions exist for coronas only",
        )),
    }
}

fn evaluate(task: Task) -> VerifyRow {
    let instance = task.spec.to_string();
    let prediction = predict(&task.spec, task.quantity);
    let exact = exact_value(&task.spec, task.quantity);
    let (predicted, source, mut error) = match prediction {
        Ok(p) => (p.predicted, p.source, None),
        Err(e) => (Predicted::NotApplicable, String::new(), Some(e.to_string())),
    };
    let exact = match exact {
        Ok(v) => Some(v),
        Err(e) => {
            error.get_or_insert(e.to_string());
            None
        }
    };
    let status = match (predicted, exact) {
        _ if error.is_some() => Status::Error,
        (Predicted::NotApplicable, _) => Status::NotApplicable,
        (p, Some(e)) if p == e => Status::Agree,
        _ => Status::Disagree,
    };
    VerifyRow {
        instance,
        quantity: task.quantity,
        predicted,
        exact,
        status,
        source,
        note: task.note,
        error,
    }
}

/// Evaluates every instance of the sweep against its prediction. Never
/// fails: solver errors become rows with [`Status::Error`]. Rows come back
/// in sweep order regardless of how the work was scheduled.
pub fn verify(sweep: &Sweep) -> VerifyReport {
    let rows: Vec<VerifyRow> = sweep.tasks().into_par_iter().map(evaluate).collect();
    let mut summary = VerifySummary {
        rows: rows.len(),
        ..Default::default()
    };
    for row in &rows {
        match row.status {
            Status::Agree => summary.agree += 1,
            Status::Disagree => summary.disagree += 1,
            Status::NotApplicable => summary.not_applicable += 1,
            Status::Error => summary.errors += 1,
        }
    }
    VerifyReport { rows, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Predicted::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn j_predictions() {
        assert_eq!(predict_j(&spec("cycle:8")).predicted, Value(2));
        assert_eq!(predict_j(&spec("cycle:9")).predicted, Value(3));
        assert_eq!(predict_j(&spec("cycle:6")).predicted, Value(3));
        assert_eq!(predict_j(&spec("cycle:7")).predicted, NotJColourable);
        assert_eq!(predict_j(&spec("wheel:7")).predicted, NotJColourable);
        assert_eq!(predict_j(&spec("wheel:9")).predicted, Value(4));
        assert_eq!(predict_j(&spec("path:2")).predicted, NotApplicable);
        assert_eq!(predict_j(&spec("jahangir:2,3")).predicted, NotApplicable);
        assert_eq!(predict_j_star(&spec("path:5")).predicted, Value(3));
    }

    #[test]
    fn ren_predictions() {
        assert_eq!(predict_ren(&spec("cycle:7")).unwrap().predicted, Value(1));
        assert_eq!(predict_ren(&spec("cycle:9")).unwrap().predicted, Value(0));
        assert_eq!(predict_ren(&spec("join:cycle:5/cycle:5")).unwrap().predicted, Value(2));
        assert_eq!(predict_ren(&spec("join:cycle:5/complete:3")).unwrap().predicted, NotApplicable);
        assert_eq!(predict_ren(&spec("mycielskian:cycle:6")).unwrap().predicted, Value(1));
        assert_eq!(predict_ren(&spec("mycielskian:cycle:5")).unwrap().predicted, NotApplicable);
    }

    #[test]
    fn jahangir_predictions() {
        // C_10 is J-colourable, so the formula gives 1 whenever it applies
        assert_eq!(jahangir_ren_formula(true), 1);
        assert_eq!(jahangir_ren_formula(false), 2);
        // J_{2,m} is bipartite and J-colourable, so the hypothesis fails
        assert_eq!(predict_ren(&spec("jahangir:2,5")).unwrap().predicted, NotApplicable);
        // J_{1,5} = W_6: hypothesis holds, C_5 is not J-colourable
        assert_eq!(predict_ren(&spec("jahangir:1,5")).unwrap().predicted, Value(2));
    }

    #[test]
    fn corona_predictions() {
        let k2 = spec("complete:2");
        let k4 = spec("complete:4");
        let c5 = spec("cycle:5");
        assert_eq!(predict_corona_ren(&k2, &k2).unwrap().predicted, Value(0));
        assert_eq!(predict_corona_ren(&k4, &k2).unwrap().predicted, Value(3));
        assert_eq!(predict_corona_ren(&k2, &c5).unwrap().predicted, Value(2));
        assert_eq!(predict_corona_diameter(&k2, &k2).unwrap().predicted, Value(0));
        assert_eq!(predict_corona_diameter(&k4, &k2).unwrap().predicted, Value(1));
        assert_eq!(predict_corona_diameter(&k2, &c5).unwrap().predicted, Value(1));
        assert_eq!(
            predict_corona_ren(&spec("complete:1"), &k2).unwrap().predicted,
            NotApplicable
        );
    }

    #[test]
    fn theta_tail_sums_from_index() {
        assert_eq!(theta_tail(&[4, 4, 3, 1], 4), 1);
        assert_eq!(theta_tail(&[4, 4, 3, 1], 2), 8);
        assert_eq!(theta_tail(&[2, 1], 3), 0);
    }

    #[test]
    fn sweep_grammar() {
        assert_eq!("cycles 3..12".parse::<Sweep>().unwrap(), Sweep::Cycles((3..=12).collect()));
        assert_eq!(
            "jahangir n=1 m=3..6".parse::<Sweep>().unwrap(),
            Sweep::Jahangir { n: vec![1], m: vec![3, 4, 5, 6] }
        );
        assert_eq!(
            "jahangir n∈{1,2}, m∈{3,4,5}".parse::<Sweep>().unwrap(),
            Sweep::Jahangir { n: vec![1, 2], m: vec![3, 4, 5] }
        );
        assert_eq!(
            "join cycle:5 cycle:5".parse::<Sweep>().unwrap(),
            Sweep::Join(spec("cycle:5"), spec("cycle:5"))
        );
        for bad in ["", "cycles", "cycles 5..3", "jahangir n=1", "join cycle:5", "hexagons 1..3"] {
            assert!(bad.parse::<Sweep>().is_err(), "{bad}");
        }
    }

    #[test]
    fn cycle_sweep_agrees() {
        let report = verify(&"cycles 3..12".parse().unwrap());
        let j_rows: Vec<_> = report.rows.iter().filter(|r| r.quantity == Quantity::J).collect();
        assert_eq!(j_rows.len(), 10);
        assert!(j_rows.iter().all(|r| r.status == Status::Agree));
        assert_eq!(report.summary.disagree, 0);
        assert_eq!(report.summary.rows, 20);
    }

    #[test]
    fn sweep_is_total() {
        // wheel:20 exceeds the exact ren guard; the row records the error
        let report = verify(&"wheels 9,20".parse().unwrap());
        assert_eq!(report.rows.len(), 4);
        assert_eq!(report.rows[0].instance, "wheel:9");
        let errors: Vec<_> = report.rows.iter().filter(|r| r.status == Status::Error).collect();
        assert!(!errors.is_empty());
        assert!(errors.iter().all(|r| r.instance == "wheel:20"));
    }

    #[test]
    fn jahangir_sweep_flags_wheel_overlap() {
        let report = verify(&"jahangir n=1 m=3..6".parse().unwrap());
        let flagged: Vec<_> = report.rows.iter().filter(|r| r.status == Status::Disagree).collect();
        assert_eq!(flagged.len(), 1);
        assert_eq!(flagged[0].instance, "jahangir:1,5");
        assert_eq!((flagged[0].predicted, flagged[0].exact), (Value(2), Some(Value(1))));
        assert!(report.rows.iter().all(|r| r.note.is_some()));
    }
}
