//! Lattice regions of `(regularity, v-number)` pairs and their empirical
//! verification.
//!
//! For a vertex count `n` and a graph class, two sets of lattice points are
//! put side by side: a closed-form region ([`inner_formula`],
//! [`outer_formula`], [`whisker_formula`], [`cameron_walker_formula`],
//! [`chordal_conjecture_formula`]) and the realized set
//! ([`realized_set`]) obtained by computing `(reg R/I(G), v(G))` for every
//! connected graph of the class — exhaustively through `n = 8`, or from a
//! supplied graph6 corpus beyond that. [`RvReport`] carries both sets plus
//! their differences and per-point witness graphs, and
//! [`RvReport::verdict`] encodes which differences are theorem violations
//! and which are merely informational.
//!
//! Everything is ordered (`BTreeSet`/`BTreeMap`) and reductions are
//! order-free, so reports are byte-identical regardless of thread count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumeration::{canonical_form, connected_graphs, EnumerationError, CANON_CAP, ENUM_CAP};
use crate::graph::{emit_graph6, Graph};
use crate::homology::{regularity_with_field, Field, HomologyError};
use crate::invariants::v_number;
use crate::recognition::{
    is_bipartite, is_cameron_walker, is_chordal, is_forest, whisker_decomposition,
};

#[derive(Debug, Error)]
pub enum RvError {
    /// The lattice theorems are stated for `n >= 3`; below that even the
    /// outer region is empty while `K_2` still realises `(1, 1)`.
    #[error("n = {n} is out of range: the lattice regions are defined for n >= 3")]
    InvalidN { n: usize },
    #[error("exhaustive enumeration stops at n = {cap}; supply a corpus for n = {n}", cap = ENUM_CAP)]
    CorpusRequired { n: usize },
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

/// A finite set of lattice points `(r, v)`, ordered.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeSet {
    pub points: BTreeSet<(usize, usize)>,
}

impl LatticeSet {
    pub fn new() -> LatticeSet {
        LatticeSet::default()
    }

    pub fn from_points<I: IntoIterator<Item = (usize, usize)>>(points: I) -> LatticeSet {
        LatticeSet {
            points: points.into_iter().collect(),
        }
    }

    pub fn contains(&self, p: (usize, usize)) -> bool {
        self.points.contains(&p)
    }

    pub fn is_subset_of(&self, other: &LatticeSet) -> bool {
        self.points.is_subset(&other.points)
    }

    /// Points of `self` that are not in `other`.
    pub fn difference(&self, other: &LatticeSet) -> LatticeSet {
        LatticeSet {
            points: self.points.difference(&other.points).copied().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.points.iter().copied()
    }
}

impl fmt::Display for LatticeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (r, v)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r}, {v})")?;
        }
        write!(f, "}}")
    }
}

/// `(missing, extra)`: formula points that were not realized, and realized
/// points outside the formula region.
pub fn compare(formula: &LatticeSet, empirical: &LatticeSet) -> (LatticeSet, LatticeSet) {
    (formula.difference(empirical), empirical.difference(formula))
}

// ---- closed-form regions ---------------------------------------------------

/// The inner region: every point here is realized by an explicit witness
/// graph on `n` vertices (a tree or a chordal graph, see the family
/// builders). `{(r, v) : 1 <= r <= (n-1)/2, 1 <= v <= r - ceil(r/(n-2r)) + 1}`.
pub fn inner_formula(n: usize) -> Result<LatticeSet, RvError> {
    if n < 3 {
        return Err(RvError::InvalidN { n });
    }
    let mut points = BTreeSet::new();
    for r in 1..=(n - 1) / 2 {
        let vmax = r - r.div_ceil(n - 2 * r) + 1;
        for v in 1..=vmax {
            points.insert((r, v));
        }
    }
    Ok(LatticeSet { points })
}

/// The outer region: every connected graph on `n >= 3` vertices lands here.
/// `{(r, v) : 1 <= r < n/2, 1 <= v < n/2}`.
pub fn outer_formula(n: usize) -> Result<LatticeSet, RvError> {
    if n < 3 {
        return Err(RvError::InvalidN { n });
    }
    let cap = (n - 1) / 2; // the largest integer strictly below n/2
    let mut points = BTreeSet::new();
    for r in 1..=cap {
        for v in 1..=cap {
            points.insert((r, v));
        }
    }
    Ok(LatticeSet { points })
}

/// The exact realized set over whisker graphs on `n = 2m` vertices (with
/// connected base): `{(r, v) : 1 <= r <= m-1, 1 <= v <= r - ceil(r/(m-r)) + 1}`.
/// Empty for odd or too-small `n` — no whisker graph has odd order.
pub fn whisker_formula(n: usize) -> LatticeSet {
    let mut points = BTreeSet::new();
    if n >= 4 && n % 2 == 0 {
        let m = n / 2;
        for r in 1..=m - 1 {
            let vmax = r - r.div_ceil(m - r) + 1;
            for v in 1..=vmax {
                points.insert((r, v));
            }
        }
    }
    LatticeSet { points }
}

/// The exact realized set over Cameron-Walker graphs on `n` vertices:
/// `{(r, v) : 2 <= r <= ceil((n-1)/2), 1 <= v <= min(r-1, n-2r)}`, rows with
/// an empty `v` range dropped. Empty below `n = 5`, where no Cameron-Walker
/// graph exists.
pub fn cameron_walker_formula(n: usize) -> LatticeSet {
    let mut points = BTreeSet::new();
    if n >= 5 {
        for r in 2..=(n - 1).div_ceil(2) {
            let vmax = (r - 1).min(n.saturating_sub(2 * r));
            for v in 1..=vmax {
                points.insert((r, v));
            }
        }
    }
    LatticeSet { points }
}

/// The conjectured realized set over connected chordal graphs: the inner
/// region itself. One containment is proved (the inner-region witnesses are
/// trees or chordal graphs), the reverse is open, so extra points are
/// reported as information, never as failures. Total: empty below `n = 3`.
pub fn chordal_conjecture_formula(n: usize) -> LatticeSet {
    inner_formula(n).unwrap_or_default()
}

// ---- graph classes ---------------------------------------------------------

/// The graph classes a verification sweep can restrict to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    All,
    Chordal,
    Bipartite,
    Forest,
    Whisker,
    #[serde(rename = "cw")]
    CameronWalker,
}

impl GraphClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::All => true,
            GraphClass::Chordal => is_chordal(g),
            GraphClass::Bipartite => is_bipartite(g),
            GraphClass::Forest => is_forest(g),
            GraphClass::Whisker => whisker_decomposition(g).is_some(),
            GraphClass::CameronWalker => is_cameron_walker(g),
        }
    }

    /// The closed-form region this class is compared against. For
    /// [`GraphClass::Bipartite`] and [`GraphClass::Forest`] there is no
    /// theorem; the inner region serves as a reference overlay only.
    pub fn formula(self, n: usize) -> Result<LatticeSet, RvError> {
        match self {
            GraphClass::All | GraphClass::Bipartite | GraphClass::Forest => inner_formula(n),
            GraphClass::Whisker => Ok(whisker_formula(n)),
            GraphClass::CameronWalker => Ok(cameron_walker_formula(n)),
            GraphClass::Chordal => Ok(chordal_conjecture_formula(n)),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GraphClass::All => "all",
            GraphClass::Chordal => "chordal",
            GraphClass::Bipartite => "bipartite",
            GraphClass::Forest => "forest",
            GraphClass::Whisker => "whisker",
            GraphClass::CameronWalker => "cw",
        };
        f.write_str(name)
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<GraphClass, String> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(GraphClass::All),
            "chordal" => Ok(GraphClass::Chordal),
            "bipartite" => Ok(GraphClass::Bipartite),
            "forest" => Ok(GraphClass::Forest),
            "whisker" => Ok(GraphClass::Whisker),
            "cw" | "cameron-walker" => Ok(GraphClass::CameronWalker),
            other => Err(format!(
                "unknown graph class {other:?}; expected one of all, chordal, bipartite, forest, whisker, cw"
            )),
        }
    }
}

// ---- realized sets and reports ----------------------------------------------

/// One verification unit: the formula region and the realized set for a
/// `(n, class)` pair, their differences, and one witness graph per realized
/// point. Serialises to the interchange JSON schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RvReport {
    pub n: usize,
    pub class: GraphClass,
    pub formula: LatticeSet,
    pub empirical: LatticeSet,
    /// Formula points that no graph realized.
    pub missing: LatticeSet,
    /// Realized points outside the formula region.
    pub extra: LatticeSet,
    /// One graph6 witness per realized point, keyed `"r,v"`. Canonical form
    /// when the order permits, so the choice is label-independent.
    pub witnesses: BTreeMap<String, String>,
}

/// The theorem-aware interpretation of an [`RvReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub pass: bool,
    /// Human-readable annotations: violation details when `pass` is false,
    /// informational notes (conjecture deviations, reference-only classes)
    /// otherwise.
    pub notes: Vec<String>,
}

impl RvReport {
    /// Apply the per-class pass criterion:
    ///
    /// * `all` — every inner-region point realized, and every realized
    ///   point inside the outer region;
    /// * `whisker`, `cw` — exact equality with the class formula;
    /// * `chordal` — the proved containment (inner region realized);
    ///   realized points beyond it are conjecture-relevant information;
    /// * `bipartite`, `forest` — no theorem: always passes, with a note.
    pub fn verdict(&self) -> ClassVerdict {
        let mut notes = Vec::new();
        let pass = match self.class {
            GraphClass::All => {
                let outer = outer_formula(self.n).unwrap_or_default();
                let outside = self.empirical.difference(&outer);
                if !self.missing.is_empty() {
                    notes.push(format!(
                        "theorem violation: inner-region points not realized: {}",
                        self.missing
                    ));
                }
                if !outside.is_empty() {
                    notes.push(format!(
                        "theorem violation: realized points outside the outer region: {outside}"
                    ));
                }
                self.missing.is_empty() && outside.is_empty()
            }
            GraphClass::Whisker | GraphClass::CameronWalker => {
                if !self.missing.is_empty() {
                    notes.push(format!(
                        "theorem violation: formula points not realized: {}",
                        self.missing
                    ));
                }
                if !self.extra.is_empty() {
                    notes.push(format!(
                        "theorem violation: realized points outside the formula: {}",
                        self.extra
                    ));
                }
                self.missing.is_empty() && self.extra.is_empty()
            }
            GraphClass::Chordal => {
                if !self.missing.is_empty() {
                    notes.push(format!(
                        "theorem violation: inner-region points not realized by chordal graphs: {}",
                        self.missing
                    ));
                }
                if !self.extra.is_empty() {
                    notes.push(format!(
                        "conjecture deviation (informational): chordal points outside the inner region: {}",
                        self.extra
                    ));
                }
                self.missing.is_empty()
            }
            GraphClass::Bipartite | GraphClass::Forest => {
                notes.push(format!(
                    "no theorem for class {}; inner region shown for reference only",
                    self.class
                ));
                true
            }
        };
        ClassVerdict { pass, notes }
    }

    /// Pretty-printed JSON with the stable field layout
    /// `{n, class, formula, empirical, missing, extra, witnesses}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialisation cannot fail")
    }

    /// CSV: one row per point of `formula` union `empirical`, with
    /// membership flags and the witness (if any).
    pub fn to_csv(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::from("n,class,r,v,in_formula,in_empirical,witness\n");
        let union: BTreeSet<(usize, usize)> = self
            .formula
            .iter()
            .chain(self.empirical.iter())
            .collect();
        for (r, v) in union {
            let witness = self
                .witnesses
                .get(&format!("{r},{v}"))
                .map(String::as_str)
                .unwrap_or("");
            writeln!(
                out,
                "{},{},{r},{v},{},{},{witness}",
                self.n,
                self.class,
                self.formula.contains((r, v)),
                self.empirical.contains((r, v)),
            )
            .expect("writing to String cannot fail");
        }
        out
    }
}

/// Compute the realized `(regularity, v-number)` set for connected graphs
/// of `class` on `n` vertices, together with the class formula and their
/// differences.
///
/// Graphs come from the built-in exhaustive enumeration for `n <= 8`
/// (`corpus = None`), or from `corpus` — which is filtered to connected
/// graphs on exactly `n` vertices, so one big stream can back a whole
/// sweep. Witness entries prefer the lexicographically least canonical key;
/// past the canonicalisation cap the raw graph6 of the corpus graph is
/// used.
pub fn realized_set(
    n: usize,
    class: GraphClass,
    field: Field,
    corpus: Option<&[Graph]>,
) -> Result<RvReport, RvError> {
    if n < 3 {
        return Err(RvError::InvalidN { n });
    }
    let (graphs, canonical_labels): (Vec<Graph>, bool) = match corpus {
        Some(c) => (
            c.iter()
                .filter(|g| g.n() == n && g.is_connected())
                .cloned()
                .collect(),
            false,
        ),
        None if n <= ENUM_CAP => (connected_graphs(n)?, true),
        None => return Err(RvError::CorpusRequired { n }),
    };

    let per_graph: Vec<((usize, usize), String)> = graphs
        .par_iter()
        .filter(|g| class.contains(g))
        .map(|g| -> Result<((usize, usize), String), RvError> {
            let r = regularity_with_field(g, field)?;
            let v = v_number(g)
                .expect("connected graphs on >= 3 vertices have edges")
                .size;
            let key = if canonical_labels {
                // enumerated graphs already carry canonical labels
                emit_graph6(g)
            } else if g.n() <= CANON_CAP {
                canonical_form(g).expect("n <= CANON_CAP").bytes
            } else {
                emit_graph6(g)
            };
            Ok(((r, v), key))
        })
        .collect::<Result<Vec<_>, RvError>>()?;

    let mut points = BTreeSet::new();
    let mut witnesses: BTreeMap<String, String> = BTreeMap::new();
    for ((r, v), key) in per_graph {
        points.insert((r, v));
        witnesses
            .entry(format!("{r},{v}"))
            .and_modify(|w| {
                if key < *w {
                    w.clone_from(&key);
                }
            })
            .or_insert(key);
    }
    let empirical = LatticeSet { points };
    let formula = class.formula(n)?;
    let (missing, extra) = compare(&formula, &empirical);
    Ok(RvReport {
        n,
        class,
        formula,
        empirical,
        missing,
        extra,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_whisker_witness, build_cameron_walker_witness};

    fn pts(list: &[(usize, usize)]) -> LatticeSet {
        LatticeSet::from_points(list.iter().copied())
    }

    // ---- formulas ----

    #[test]
    fn inner_formula_small_values() {
        assert_eq!(inner_formula(3).unwrap(), pts(&[(1, 1)]));
        assert_eq!(inner_formula(4).unwrap(), pts(&[(1, 1)]));
        assert_eq!(inner_formula(5).unwrap(), pts(&[(1, 1), (2, 1)]));
        assert_eq!(
            inner_formula(6).unwrap(),
            pts(&[(1, 1), (2, 1), (2, 2)])
        );
        assert_eq!(
            inner_formula(8).unwrap(),
            pts(&[(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)])
        );
        assert!(matches!(inner_formula(2), Err(RvError::InvalidN { n: 2 })));
    }

    #[test]
    fn outer_formula_is_a_square() {
        assert_eq!(outer_formula(3).unwrap(), pts(&[(1, 1)]));
        assert_eq!(
            outer_formula(7).unwrap().len(),
            9 // {1..3} x {1..3}
        );
        assert_eq!(outer_formula(8).unwrap().len(), 9);
        assert!(outer_formula(2).is_err());
    }

    #[test]
    fn whisker_formula_values() {
        assert_eq!(whisker_formula(4), pts(&[(1, 1)]));
        assert_eq!(whisker_formula(6), pts(&[(1, 1), (2, 1)]));
        assert_eq!(
            whisker_formula(8),
            pts(&[(1, 1), (2, 1), (2, 2), (3, 1)])
        );
        assert!(whisker_formula(7).is_empty(), "odd order is impossible");
        assert!(whisker_formula(2).is_empty());
        assert_eq!(whisker_formula(12).len(), 10);
    }

    #[test]
    fn cameron_walker_formula_values() {
        assert!(cameron_walker_formula(4).is_empty());
        assert_eq!(cameron_walker_formula(5), pts(&[(2, 1)]));
        assert_eq!(cameron_walker_formula(6), pts(&[(2, 1)]));
        assert_eq!(
            cameron_walker_formula(8),
            pts(&[(2, 1), (3, 1), (3, 2)])
        );
    }

    #[test]
    fn chordal_conjecture_matches_inner_region() {
        assert!(chordal_conjecture_formula(2).is_empty());
        for n in 3..=10 {
            assert_eq!(chordal_conjecture_formula(n), inner_formula(n).unwrap());
        }
    }

    // ---- class parsing ----

    #[test]
    fn class_from_str() {
        assert_eq!("all".parse::<GraphClass>().unwrap(), GraphClass::All);
        assert_eq!("cw".parse::<GraphClass>().unwrap(), GraphClass::CameronWalker);
        assert_eq!(
            "Cameron-Walker".parse::<GraphClass>().unwrap(),
            GraphClass::CameronWalker
        );
        assert_eq!("whisker".parse::<GraphClass>().unwrap(), GraphClass::Whisker);
        assert!("clique".parse::<GraphClass>().is_err());
        assert_eq!(GraphClass::CameronWalker.to_string(), "cw");
    }

    // ---- realized sets ----

    #[test]
    fn realized_all_on_four_vertices() {
        let report = realized_set(4, GraphClass::All, Field::F2, None).unwrap();
        assert_eq!(report.empirical, pts(&[(1, 1)]));
        assert!(report.missing.is_empty());
        assert!(report.extra.is_empty());
        assert!(report.verdict().pass);
        assert_eq!(report.witnesses.len(), 1);
        assert!(report.witnesses.contains_key("1,1"));
    }

    #[test]
    fn realized_all_on_five_vertices_shows_the_gap() {
        // the 5-cycle realises (2, 2), which lies outside the inner region
        // but inside the outer one: allowed, and flagged as `extra`
        let report = realized_set(5, GraphClass::All, Field::F2, None).unwrap();
        assert!(report.missing.is_empty());
        assert!(report.extra.contains((2, 2)));
        assert!(report
            .empirical
            .is_subset_of(&outer_formula(5).unwrap()));
        let verdict = report.verdict();
        assert!(verdict.pass, "{:?}", verdict.notes);
    }

    #[test]
    fn realized_whisker_matches_formula_exactly() {
        for n in [4, 6, 8] {
            let report = realized_set(n, GraphClass::Whisker, Field::F2, None).unwrap();
            assert!(report.missing.is_empty(), "n = {n}: {}", report.missing);
            assert!(report.extra.is_empty(), "n = {n}: {}", report.extra);
            assert!(report.verdict().pass);
        }
        // odd order: both sides empty, trivially equal
        let report = realized_set(5, GraphClass::Whisker, Field::F2, None).unwrap();
        assert!(report.empirical.is_empty() && report.formula.is_empty());
        assert!(report.verdict().pass);
    }

    #[test]
    fn realized_cw_matches_formula_exactly() {
        for n in [5, 6, 7] {
            let report =
                realized_set(n, GraphClass::CameronWalker, Field::F2, None).unwrap();
            assert!(report.missing.is_empty(), "n = {n}: {}", report.missing);
            assert!(report.extra.is_empty(), "n = {n}: {}", report.extra);
            assert!(report.verdict().pass);
        }
    }

    #[test]
    fn realized_chordal_contains_inner_region() {
        let report = realized_set(6, GraphClass::Chordal, Field::F2, None).unwrap();
        assert!(report.missing.is_empty(), "{}", report.missing);
        assert!(report.verdict().pass);
    }

    #[test]
    fn corpus_backed_realized_set() {
        let corpus = vec![
            build_whisker_witness(10, 2, 2).unwrap(),
            build_whisker_witness(10, 3, 2).unwrap(),
            build_cameron_walker_witness(9, 3, 2).unwrap(), // wrong n: filtered out
        ];
        let report = realized_set(10, GraphClass::Whisker, Field::F2, Some(&corpus)).unwrap();
        assert_eq!(report.empirical, pts(&[(2, 2), (3, 2)]));
        assert!(report.witnesses.contains_key("2,2"));
        // a 10-vertex witness is canonicalised
        let g6 = &report.witnesses["2,2"];
        let g = crate::graph::parse_graph6(g6).unwrap();
        assert_eq!(canonical_form(&g).unwrap().bytes, *g6);
    }

    #[test]
    fn corpus_is_required_past_the_enumeration_cap() {
        assert!(matches!(
            realized_set(9, GraphClass::All, Field::F2, None),
            Err(RvError::CorpusRequired { n: 9 })
        ));
        assert!(matches!(
            realized_set(2, GraphClass::All, Field::F2, None),
            Err(RvError::InvalidN { n: 2 })
        ));
    }

    // ---- report output ----

    #[test]
    fn report_json_schema_is_stable() {
        let report = realized_set(4, GraphClass::All, Field::F2, None).unwrap();
        let json = report.to_json();
        // field order in the emitted document is part of the contract
        let order: Vec<usize> = ["\"n\"", "\"class\"", "\"formula\"", "\"empirical\"",
            "\"missing\"", "\"extra\"", "\"witnesses\""]
            .iter()
            .map(|k| json.find(k).unwrap_or_else(|| panic!("missing key {k}")))
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]), "key order drifted: {json}");

        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["class"], "all");
        assert_eq!(value["formula"], serde_json::json!([[1, 1]]));
        assert!(value["witnesses"]["1,1"].is_string());
    }

    #[test]
    fn report_csv_layout() {
        let report = realized_set(4, GraphClass::Whisker, Field::F2, None).unwrap();
        let csv = report.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "n,class,r,v,in_formula,in_empirical,witness"
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("4,whisker,1,1,true,true,"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn verdict_flags_fabricated_violations() {
        let mut report = realized_set(6, GraphClass::Whisker, Field::F2, None).unwrap();
        report.missing = pts(&[(2, 2)]);
        let verdict = report.verdict();
        assert!(!verdict.pass);
        assert!(verdict.notes[0].contains("(2, 2)"));

        let mut report = realized_set(6, GraphClass::Chordal, Field::F2, None).unwrap();
        report.extra = pts(&[(9, 9)]);
        let verdict = report.verdict();
        assert!(verdict.pass, "conjecture deviations must stay informational");
        assert!(verdict.notes[0].contains("informational"));
    }
}
