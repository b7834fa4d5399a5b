//! Map evaluation against ground truths (precision / recall / F-measure)
//! and descriptive corpus statistics.
//!
//! A ground truth lists the identifiers a correct map should place in each
//! block. Evaluation treats block membership as part of the answer: an
//! identifier retrieved in the wrong block counts against precision.
//!
//! Ground-truth text format (UTF-8, `#` starts a comment line):
//!
//! ```text
//! kind: classes
//! common:
//! shapes.MyLine
//! unique Release 1:
//! class shapes.MyRectangle
//! ```
//!
//! The `kind:` header names one of the five maps. Identifier lines are
//! either bare qualified names (taking the file's kind) or tagged
//! `<kind> <name>` lines; files of kind `all` must tag every line.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::map::IdentifiersMap;
use crate::model::{CodeModel, Identifier, KindFilter};

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("map is of kind `{map}` but ground truth is of kind `{truth}`")]
    KindMismatch { map: KindFilter, truth: KindFilter },
    #[error("ground truth line {line}: {message}")]
    Truth { line: usize, message: String },
}

/// The expected content of one identifiers map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruth {
    pub kind: KindFilter,
    pub relevant_common: BTreeSet<Identifier>,
    pub relevant_unique: BTreeMap<String, BTreeSet<Identifier>>,
}

impl GroundTruth {
    /// The truth that considers a map its own reference — evaluating a map
    /// against it yields 1.0 everywhere.
    pub fn from_map(map: &IdentifiersMap) -> Self {
        GroundTruth {
            kind: map.kind,
            relevant_common: map.common.clone(),
            relevant_unique: map.unique.clone(),
        }
    }

    /// Parses the text format described in the module header. Blocks must
    /// be pairwise disjoint.
    pub fn parse(text: &str) -> Result<Self, EvalError> {
        enum Section {
            None,
            Common,
            Unique(String),
        }
        let fail = |line: usize, message: String| EvalError::Truth { line, message };

        let mut kind: Option<KindFilter> = None;
        let mut section = Section::None;
        let mut relevant_common = BTreeSet::new();
        let mut relevant_unique: BTreeMap<String, BTreeSet<Identifier>> = BTreeMap::new();
        let mut seen: BTreeSet<Identifier> = BTreeSet::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("kind:") {
                if kind.is_some() {
                    return Err(fail(line, "duplicate `kind:` header".to_string()));
                }
                let name = rest.trim();
                kind = Some(name.parse().map_err(|_| {
                    fail(line, format!("unknown map kind `{name}`"))
                })?);
                continue;
            }
            let Some(kind) = kind else {
                return Err(fail(
                    line,
                    "expected `kind: <packages|classes|attributes|methods|all>` first".to_string(),
                ));
            };
            if trimmed == "common:" {
                section = Section::Common;
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("unique ") {
                if let Some(variant) = rest.strip_suffix(':') {
                    let variant = variant.trim();
                    if variant.is_empty() {
                        return Err(fail(line, "empty variant name in `unique` header".to_string()));
                    }
                    section = Section::Unique(variant.to_string());
                    relevant_unique.entry(variant.to_string()).or_default();
                    continue;
                }
            }

            // An identifier line: tagged, or bare with the file's kind.
            let id = match Identifier::from_tagged(trimmed) {
                Ok(id) => id,
                Err(_) => match kind {
                    KindFilter::Only(k) => Identifier::new(k, trimmed)
                        .map_err(|e| fail(line, e.to_string()))?,
                    KindFilter::All => {
                        return Err(fail(
                            line,
                            format!(
                                "`{trimmed}` needs a kind tag (`class <name>`, ...) in a file of kind `all`"
                            ),
                        ))
                    }
                },
            };
            if !kind.matches(id.kind()) {
                return Err(fail(
                    line,
                    format!(
                        "{} `{}` does not belong in a file of kind `{kind}`",
                        id.kind(),
                        id.qualified_name()
                    ),
                ));
            }
            if !seen.insert(id.clone()) {
                return Err(fail(
                    line,
                    format!("`{}` appears in more than one block", id.qualified_name()),
                ));
            }
            match &section {
                Section::None => {
                    return Err(fail(
                        line,
                        "identifier before any `common:` or `unique <variant>:` header".to_string(),
                    ))
                }
                Section::Common => {
                    relevant_common.insert(id);
                }
                Section::Unique(variant) => {
                    relevant_unique
                        .get_mut(variant)
                        .expect("inserted with the header")
                        .insert(id);
                }
            }
        }

        let kind = kind.ok_or_else(|| fail(
            text.lines().count().max(1),
            "missing `kind:` header".to_string(),
        ))?;
        Ok(GroundTruth {
            kind,
            relevant_common,
            relevant_unique,
        })
    }

    /// The (block label, identifier) pairs this truth considers relevant.
    pub fn labeled_identifiers(&self) -> BTreeSet<(String, Identifier)> {
        let mut out = BTreeSet::new();
        for id in &self.relevant_common {
            out.insert(("common".to_string(), id.clone()));
        }
        for (variant, ids) in &self.relevant_unique {
            for id in ids {
                out.insert((format!("unique:{variant}"), id.clone()));
            }
        }
        out
    }
}

/// |relevant ∩ retrieved| / |retrieved|; 1.0 when nothing was retrieved.
pub fn precision<T: Ord>(retrieved: &BTreeSet<T>, relevant: &BTreeSet<T>) -> f64 {
    if retrieved.is_empty() {
        return 1.0;
    }
    retrieved.intersection(relevant).count() as f64 / retrieved.len() as f64
}

/// |relevant ∩ retrieved| / |relevant|; 1.0 when nothing is relevant.
pub fn recall<T: Ord>(retrieved: &BTreeSet<T>, relevant: &BTreeSet<T>) -> f64 {
    if relevant.is_empty() {
        return 1.0;
    }
    relevant.intersection(retrieved).count() as f64 / relevant.len() as f64
}

/// Harmonic mean of precision and recall; 0 when both are 0.
pub fn f_measure(precision: f64, recall: f64) -> f64 {
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * (precision * recall) / (precision + recall)
    }
}

/// One precision/recall/F triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
}

impl Metrics {
    pub fn compare<T: Ord>(retrieved: &BTreeSet<T>, relevant: &BTreeSet<T>) -> Self {
        let p = precision(retrieved, relevant);
        let r = recall(retrieved, relevant);
        Metrics {
            precision: p,
            recall: r,
            f_measure: f_measure(p, r),
        }
    }
}

/// Aggregate metrics over a whole map plus a per-block breakdown.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    pub kind: KindFilter,
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    pub blocks: BTreeMap<String, Metrics>,
}

/// Scores a map against a ground truth. The aggregate treats the whole map
/// as one retrieved set of block-labeled identifiers; the breakdown scores
/// each block separately.
pub fn evaluate_map(map: &IdentifiersMap, truth: &GroundTruth) -> Result<MetricsReport, EvalError> {
    if map.kind != truth.kind {
        return Err(EvalError::KindMismatch {
            map: map.kind,
            truth: truth.kind,
        });
    }

    let retrieved = map.labeled_identifiers();
    let relevant = truth.labeled_identifiers();
    let p = precision(&retrieved, &relevant);
    let r = recall(&retrieved, &relevant);

    let mut blocks = BTreeMap::new();
    blocks.insert(
        "common".to_string(),
        Metrics::compare(&map.common, &truth.relevant_common),
    );
    let empty = BTreeSet::new();
    let variants: BTreeSet<&String> = map
        .unique
        .keys()
        .chain(truth.relevant_unique.keys())
        .collect();
    for variant in variants {
        let retrieved = map.unique.get(variant).unwrap_or(&empty);
        let relevant = truth.relevant_unique.get(variant).unwrap_or(&empty);
        blocks.insert(
            format!("unique:{variant}"),
            Metrics::compare(retrieved, relevant),
        );
    }

    Ok(MetricsReport {
        kind: map.kind,
        precision: p,
        recall: r,
        f_measure: f_measure(p, r),
        blocks,
    })
}

/// Per-variant size statistics plus per-map block counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusStats {
    pub variants: Vec<VariantStats>,
    pub maps: Vec<MapCounts>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantStats {
    pub name: String,
    pub loc: u64,
    pub packages: usize,
    pub classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapCounts {
    pub kind: KindFilter,
    pub common: usize,
    /// (variant name, count) in map order.
    pub unique: Vec<(String, usize)>,
    pub shared: usize,
    pub total: usize,
}

impl MapCounts {
    pub fn of(map: &IdentifiersMap) -> Self {
        MapCounts {
            kind: map.kind,
            common: map.common.len(),
            unique: map
                .variant_names
                .iter()
                .map(|v| (v.clone(), map.unique.get(v).map_or(0, BTreeSet::len)))
                .collect(),
            shared: map.shared.values().map(BTreeSet::len).sum(),
            total: map.count_total(),
        }
    }
}

/// Collects the statistics tables: LOC / package count / class count per
/// variant, and common/unique/total counts per map.
pub fn corpus_stats(models: &[CodeModel], maps: &[IdentifiersMap]) -> CorpusStats {
    CorpusStats {
        variants: models
            .iter()
            .map(|m| {
                let stats = m.source_stats();
                VariantStats {
                    name: m.variant_name().to_string(),
                    loc: stats.loc,
                    packages: stats.nop,
                    classes: stats.noc,
                }
            })
            .collect(),
        maps: maps.iter().map(MapCounts::of).collect(),
    }
}
