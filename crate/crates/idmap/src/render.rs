//! Output rendering: DOT concept diagrams, JSON documents, and the
//! consolidated plain-text report.
//!
//! Every renderer is a pure function of its inputs, so repeated calls are
//! byte-identical. JSON objects serialize with sorted keys.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::eval::{CorpusStats, MetricsReport};
use crate::fca::AocPoset;
use crate::map::{EvolutionReport, IdentifiersMap};
use crate::model::{Identifier, IdentifierKind, KindFilter, ModelError};

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("JSON document is not a valid identifiers map: {0}")]
    Schema(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Controls how concept diagrams print their labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    /// `true` prints tagged qualified names (`class shapes.MyShape`);
    /// `false` prints simple names (`MyShape`, `paint(Graphics)`).
    pub show_qualified_names: bool,
    /// Longest label list printed per compartment; further labels collapse
    /// into a `... (+N more)` marker. `None` disables elision. Bounded
    /// values below 1 are treated as 1.
    pub max_labels_per_concept: Option<usize>,
    /// Only identifiers of this kind appear as labels.
    pub kind: KindFilter,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_qualified_names: true,
            max_labels_per_concept: Some(20),
            kind: KindFilter::All,
        }
    }
}

impl RenderOptions {
    fn label_of(&self, id: &Identifier) -> String {
        if self.show_qualified_names {
            id.tagged()
        } else {
            id.simple_display()
        }
    }
}

fn dot_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        if matches!(c, '\\' | '"' | '{' | '}' | '|' | '<' | '>') {
            out.push('\\');
        }
        out.push(c);
    }
    out
}

/// Applies the elision rule to a label list and renders it as one record
/// compartment (left-justified lines).
fn compartment(labels: &[String], max: Option<usize>) -> String {
    let shown = match max {
        Some(limit) if labels.len() > limit.max(1) => limit.max(1),
        _ => labels.len(),
    };
    let mut out = String::new();
    for label in &labels[..shown] {
        out.push_str(&dot_escape(label));
        out.push_str("\\l");
    }
    if shown < labels.len() {
        let _ = write!(out, "... (+{} more)\\l", labels.len() - shown);
    }
    out
}

/// Renders an AOC-poset as a Graphviz digraph: one record-shaped node per
/// concept (`Concept_i`, its reduced intent, its reduced extent) and one
/// edge per covering pair, pointing from sub-concept to super-concept.
pub fn to_dot(poset: &AocPoset, opts: &RenderOptions) -> String {
    let mut out = String::from("digraph aoc_poset {\n  rankdir=BT;\n  node [shape=record];\n");
    for (i, concept) in poset.concepts.iter().enumerate() {
        let intent_labels: Vec<String> = concept
            .reduced_intent
            .iter()
            .filter(|id| opts.kind.matches(id.kind()))
            .map(|id| opts.label_of(id))
            .collect();
        let extent_labels: Vec<String> =
            concept.reduced_extent.iter().cloned().collect();
        let _ = writeln!(
            out,
            "  Concept_{i} [label=\"{{Concept_{i}|{}|{}}}\"];",
            compartment(&intent_labels, opts.max_labels_per_concept),
            compartment(&extent_labels, opts.max_labels_per_concept),
        );
    }
    for (child, parent) in &poset.hasse_edges {
        let _ = writeln!(out, "  Concept_{child} -> Concept_{parent};");
    }
    out.push_str("}\n");
    out
}

fn tagged_array(ids: &BTreeSet<Identifier>) -> Value {
    Value::Array(ids.iter().map(|id| Value::String(id.tagged())).collect())
}

/// Serializes a map as a JSON document (sorted keys, tagged identifier
/// strings, per-block counts). The `shared` key appears only when shared
/// blocks exist, i.e. never for two-variant maps.
pub fn to_json(map: &IdentifiersMap) -> String {
    let unique: Map<String, Value> = map
        .unique
        .iter()
        .map(|(variant, ids)| (variant.clone(), tagged_array(ids)))
        .collect();
    let unique_counts: Map<String, Value> = map
        .unique
        .iter()
        .map(|(variant, ids)| (variant.clone(), json!(ids.len())))
        .collect();
    let shared_total: usize = map.shared.values().map(BTreeSet::len).sum();

    let mut doc = Map::new();
    doc.insert("kind".into(), json!(map.kind.name()));
    doc.insert("variants".into(), json!(map.variant_names));
    doc.insert("common".into(), tagged_array(&map.common));
    doc.insert("unique".into(), Value::Object(unique));
    if !map.shared.is_empty() {
        let shared: Vec<Value> = map
            .shared
            .iter()
            .map(|(variants, ids)| {
                json!({ "variants": variants, "identifiers": tagged_array(ids) })
            })
            .collect();
        doc.insert("shared".into(), Value::Array(shared));
    }
    doc.insert(
        "counts".into(),
        json!({
            "common": map.common.len(),
            "unique": Value::Object(unique_counts),
            "shared": shared_total,
            "total": map.count_total(),
        }),
    );

    let mut text = serde_json::to_string_pretty(&Value::Object(doc))
        .expect("maps of JSON values always serialize");
    text.push('\n');
    text
}

fn expect_str<'v>(value: &'v Value, what: &str) -> Result<&'v str, RenderError> {
    value
        .as_str()
        .ok_or_else(|| RenderError::Schema(format!("{what} must be a string")))
}

fn expect_ids(value: &Value, what: &str) -> Result<BTreeSet<Identifier>, RenderError> {
    let items = value
        .as_array()
        .ok_or_else(|| RenderError::Schema(format!("{what} must be an array")))?;
    items
        .iter()
        .map(|item| Ok(Identifier::from_tagged(expect_str(item, what)?)?))
        .collect()
}

fn expect_field<'v>(doc: &'v Value, name: &str) -> Result<&'v Value, RenderError> {
    doc.get(name)
        .ok_or_else(|| RenderError::Schema(format!("missing `{name}` key")))
}

/// Parses a document produced by [`to_json`] back into a map.
pub fn map_from_json(text: &str) -> Result<IdentifiersMap, RenderError> {
    let doc: Value = serde_json::from_str(text)?;

    let kind: KindFilter = expect_str(expect_field(&doc, "kind")?, "`kind`")?
        .parse()
        .map_err(|e: ModelError| RenderError::Schema(e.to_string()))?;
    let variant_names: Vec<String> = expect_field(&doc, "variants")?
        .as_array()
        .ok_or_else(|| RenderError::Schema("`variants` must be an array".into()))?
        .iter()
        .map(|v| Ok(expect_str(v, "variant name")?.to_string()))
        .collect::<Result<_, RenderError>>()?;
    let known: BTreeSet<&String> = variant_names.iter().collect();

    let common = expect_ids(expect_field(&doc, "common")?, "`common`")?;

    let mut unique: BTreeMap<String, BTreeSet<Identifier>> = variant_names
        .iter()
        .map(|v| (v.clone(), BTreeSet::new()))
        .collect();
    let unique_doc = expect_field(&doc, "unique")?
        .as_object()
        .ok_or_else(|| RenderError::Schema("`unique` must be an object".into()))?;
    for (variant, ids) in unique_doc {
        if !known.contains(variant) {
            return Err(RenderError::Schema(format!(
                "`unique` names unknown variant `{variant}`"
            )));
        }
        unique.insert(variant.clone(), expect_ids(ids, "`unique` entry")?);
    }

    let mut shared: BTreeMap<Vec<String>, BTreeSet<Identifier>> = BTreeMap::new();
    if let Some(shared_doc) = doc.get("shared") {
        let blocks = shared_doc
            .as_array()
            .ok_or_else(|| RenderError::Schema("`shared` must be an array".into()))?;
        for block in blocks {
            let variants: Vec<String> = expect_field(block, "variants")?
                .as_array()
                .ok_or_else(|| {
                    RenderError::Schema("shared `variants` must be an array".into())
                })?
                .iter()
                .map(|v| Ok(expect_str(v, "shared variant")?.to_string()))
                .collect::<Result<_, RenderError>>()?;
            if variants.len() < 2 || variants.iter().any(|v| !known.contains(v)) {
                return Err(RenderError::Schema(
                    "a shared block must name at least two known variants".into(),
                ));
            }
            let ids = expect_ids(expect_field(block, "identifiers")?, "shared block")?;
            if shared.insert(variants.clone(), ids).is_some() {
                return Err(RenderError::Schema(format!(
                    "duplicate shared block for [{}]",
                    variants.join(", ")
                )));
            }
        }
    }

    let map = IdentifiersMap {
        kind,
        variant_names,
        common,
        unique,
        shared,
    };
    for (_, id) in map.labeled_identifiers() {
        if !kind.matches(id.kind()) {
            return Err(RenderError::Schema(format!(
                "{} `{}` does not belong in a map of kind `{kind}`",
                id.kind(),
                id.qualified_name()
            )));
        }
    }
    if let Some(counts) = doc.get("counts") {
        let total = counts.get("total").and_then(Value::as_u64);
        if total.is_some_and(|t| t != map.count_total() as u64) {
            return Err(RenderError::Schema(format!(
                "`counts.total` says {} but the document holds {} identifiers",
                total.unwrap_or(0),
                map.count_total()
            )));
        }
    }
    Ok(map)
}

/// Serializes an evolution classification as JSON (sorted keys, tagged
/// identifier strings, counts included).
pub fn evolution_to_json(report: &EvolutionReport) -> String {
    let doc = json!({
        "kind": report.kind.name(),
        "initial": report.initial_variant,
        "current": report.current_variant,
        "added": tagged_array(&report.added),
        "removed": tagged_array(&report.removed),
        "unchanged": tagged_array(&report.unchanged),
        "counts": {
            "added": report.added.len(),
            "removed": report.removed.len(),
            "unchanged": report.unchanged.len(),
        },
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    text.push('\n');
    text
}

/// Parses a document produced by [`evolution_to_json`].
pub fn evolution_from_json(text: &str) -> Result<EvolutionReport, RenderError> {
    let doc: Value = serde_json::from_str(text)?;
    let kind: KindFilter = expect_str(expect_field(&doc, "kind")?, "`kind`")?
        .parse()
        .map_err(|e: ModelError| RenderError::Schema(e.to_string()))?;
    Ok(EvolutionReport {
        kind,
        initial_variant: expect_str(expect_field(&doc, "initial")?, "`initial`")?.to_string(),
        current_variant: expect_str(expect_field(&doc, "current")?, "`current`")?.to_string(),
        added: expect_ids(expect_field(&doc, "added")?, "`added`")?,
        removed: expect_ids(expect_field(&doc, "removed")?, "`removed`")?,
        unchanged: expect_ids(expect_field(&doc, "unchanged")?, "`unchanged`")?,
    })
}

/// Serializes evaluation results (one entry per evaluated map) as JSON.
pub fn metrics_to_json(reports: &[MetricsReport]) -> String {
    let maps: Vec<Value> = reports
        .iter()
        .map(|report| {
            let blocks: Map<String, Value> = report
                .blocks
                .iter()
                .map(|(label, m)| {
                    (
                        label.clone(),
                        json!({
                            "precision": m.precision,
                            "recall": m.recall,
                            "f_measure": m.f_measure,
                        }),
                    )
                })
                .collect();
            json!({
                "kind": report.kind.name(),
                "precision": report.precision,
                "recall": report.recall,
                "f_measure": report.f_measure,
                "blocks": Value::Object(blocks),
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&json!({ "maps": maps }))
        .expect("JSON values serialize");
    text.push('\n');
    text
}

fn id_lines(out: &mut String, ids: &BTreeSet<Identifier>) {
    if ids.is_empty() {
        out.push_str("  (none)\n");
    }
    for id in ids {
        let _ = writeln!(out, "  {}", id.tagged());
    }
}

fn section(out: &mut String, title: &str) {
    let _ = writeln!(out, "\n{title}\n{}", "-".repeat(title.len()));
}

fn evolution_kind_summary(out: &mut String, report: &EvolutionReport) {
    for kind in IdentifierKind::ALL {
        let count = |ids: &BTreeSet<Identifier>| ids.iter().filter(|i| i.kind() == kind).count();
        let (added, removed, unchanged) =
            (count(&report.added), count(&report.removed), count(&report.unchanged));
        if added + removed + unchanged == 0 {
            continue;
        }
        if added + removed == 0 {
            let _ = writeln!(out, "{} unchanged", kind.plural());
        } else {
            let _ = writeln!(
                out,
                "{} added: {added}, removed: {removed}, unchanged: {unchanged}",
                kind.plural()
            );
        }
    }
}

/// Renders the consolidated text report: per-variant statistics, map sizes,
/// one section per map, and — when supplied — the evolution classification
/// and the evaluation results.
pub fn to_text_report(
    maps: &[IdentifiersMap],
    evolution: Option<&EvolutionReport>,
    stats: &CorpusStats,
    metrics: &[MetricsReport],
) -> String {
    let mut out = String::from("identifier map report\n=====================\n");
    if let Some(map) = maps.first() {
        let _ = writeln!(out, "variants: {}", map.variant_names.join(", "));
    }

    section(&mut out, "variant statistics");
    out.push_str("LOC counts non-blank source lines; comment lines count, blank lines do not.\n\n");
    let name_width = stats
        .variants
        .iter()
        .map(|v| v.name.chars().count())
        .chain(["variant".len()])
        .max()
        .unwrap_or(7);
    let _ = writeln!(out, "  {:<name_width$}  {:>8}  {:>8}  {:>7}", "variant", "LOC", "packages", "classes");
    for v in &stats.variants {
        let _ = writeln!(
            out,
            "  {:<name_width$}  {:>8}  {:>8}  {:>7}",
            v.name, v.loc, v.packages, v.classes
        );
    }

    if !stats.maps.is_empty() {
        section(&mut out, "map sizes");
        for counts in &stats.maps {
            let uniques: Vec<String> = counts
                .unique
                .iter()
                .map(|(variant, n)| format!("unique {variant}: {n}"))
                .collect();
            let _ = writeln!(
                out,
                "  {}: common: {}, {}, shared: {}, total: {}",
                counts.kind,
                counts.common,
                uniques.join(", "),
                counts.shared,
                counts.total
            );
        }
    }

    for map in maps {
        section(&mut out, &format!("map: {}", map.kind));
        let _ = writeln!(out, "common ({}):", map.common.len());
        id_lines(&mut out, &map.common);
        for (variant, ids) in &map.unique {
            let _ = writeln!(out, "unique to {variant} ({}):", ids.len());
            id_lines(&mut out, ids);
        }
        for (variants, ids) in &map.shared {
            let _ = writeln!(out, "shared by {} ({}):", variants.join(" + "), ids.len());
            id_lines(&mut out, ids);
        }
    }

    if let Some(report) = evolution {
        section(
            &mut out,
            &format!(
                "evolution: {} -> {}",
                report.initial_variant, report.current_variant
            ),
        );
        if report.added.is_empty() && report.removed.is_empty() {
            out.push_str("no changes detected\n");
            let _ = writeln!(out, "unchanged identifiers: {}", report.unchanged.len());
        } else {
            evolution_kind_summary(&mut out, report);
            let _ = writeln!(out, "added ({}):", report.added.len());
            id_lines(&mut out, &report.added);
            let _ = writeln!(out, "removed ({}):", report.removed.len());
            id_lines(&mut out, &report.removed);
            let _ = writeln!(out, "unchanged ({}):", report.unchanged.len());
            id_lines(&mut out, &report.unchanged);
        }
    }

    if !metrics.is_empty() {
        section(&mut out, "evaluation");
        for report in metrics {
            let _ = writeln!(
                out,
                "map {}: precision {:.3}, recall {:.3}, f-measure {:.3}",
                report.kind, report.precision, report.recall, report.f_measure
            );
            for (label, m) in &report.blocks {
                let _ = writeln!(
                    out,
                    "  {label}: precision {:.3}, recall {:.3}, f-measure {:.3}",
                    m.precision, m.recall, m.f_measure
                );
            }
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{corpus_stats, evaluate_map, GroundTruth};
    use crate::fca::{build_aoc_poset, build_context, FormalContext};
    use crate::map::{build_all_maps, classify_evolution};
    use crate::model::CodeModel;

    fn cls(name: &str) -> Identifier {
        Identifier::class(name).unwrap()
    }

    fn drawing_models() -> Vec<CodeModel> {
        let shared = ["MyLine", "DrawingShapes", "PaintJPanel", "MyShape"];
        let mk = |name: &str, extra: [&str; 2]| {
            let mut ids = vec![Identifier::package("shapes").unwrap()];
            for c in shared.iter().chain(extra.iter()) {
                ids.push(cls(&format!("shapes.{c}")));
            }
            CodeModel::new(name, ids, [], 50).unwrap()
        };
        vec![
            mk("Release 1", ["MyRectangle", "MyOval"]),
            mk("Release 2", ["MyRoundRectangle", "My3DRectangle"]),
        ]
    }

    fn class_poset(models: &[CodeModel]) -> AocPoset {
        let ctx = build_context(models, KindFilter::Only(IdentifierKind::Class)).unwrap();
        build_aoc_poset(&ctx)
    }

    /// A structural smoke check: balanced braces, node statements with
    /// quoted record labels, edge statements between declared nodes.
    fn assert_valid_dot(dot: &str) {
        let mut lines = dot.lines();
        assert_eq!(lines.next(), Some("digraph aoc_poset {"));
        let mut nodes = BTreeSet::new();
        let mut body: Vec<&str> = lines.collect();
        assert_eq!(body.pop(), Some("}"));
        for line in body {
            let line = line.trim();
            if line == "rankdir=BT;" || line == "node [shape=record];" {
                continue;
            }
            if let Some((from, to)) = line
                .strip_suffix(';')
                .and_then(|l| l.split_once(" -> "))
            {
                assert!(nodes.contains(from), "edge from undeclared node {from}");
                assert!(nodes.contains(to), "edge to undeclared node {to}");
                continue;
            }
            let (name, rest) = line.split_once(" [label=\"").expect("node statement");
            assert!(name.starts_with("Concept_"), "unexpected statement: {line}");
            let label = rest.strip_suffix("\"];").expect("closing label quote");
            let mut depth = 0i64;
            let mut chars = label.chars();
            while let Some(c) = chars.next() {
                match c {
                    '\\' => {
                        chars.next();
                    }
                    '{' => depth += 1,
                    '}' => depth -= 1,
                    '"' => panic!("unescaped quote in label of {name}"),
                    _ => {}
                }
                assert!(depth >= 0, "unbalanced braces in label of {name}");
            }
            assert_eq!(depth, 0, "unbalanced braces in label of {name}");
            nodes.insert(name);
        }
    }

    #[test]
    fn drawing_shapes_diagram_has_three_nodes_and_two_edges() {
        let dot = to_dot(&class_poset(&drawing_models()), &RenderOptions::default());
        assert_valid_dot(&dot);
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches(" -> ").count(), 2);
        // Both sub-concepts point at the top concept.
        assert!(dot.contains("Concept_1 -> Concept_0;"));
        assert!(dot.contains("Concept_2 -> Concept_0;"));
        assert!(dot.contains("class shapes.MyShape"));
        assert!(dot.contains("Release 1"));
    }

    #[test]
    fn simple_name_rendering_drops_qualification() {
        let opts = RenderOptions {
            show_qualified_names: false,
            ..RenderOptions::default()
        };
        let dot = to_dot(&class_poset(&drawing_models()), &opts);
        assert!(dot.contains("MyShape\\l"));
        assert!(!dot.contains("shapes.MyShape"));
    }

    #[test]
    fn single_concept_poset_renders_one_node_no_edges() {
        let ctx = FormalContext::new(
            vec!["only".to_string()],
            vec![cls("p.A")],
            vec![vec![true]],
        )
        .unwrap();
        let dot = to_dot(&build_aoc_poset(&ctx), &RenderOptions::default());
        assert_valid_dot(&dot);
        assert_eq!(dot.matches("[label=").count(), 1);
        assert_eq!(dot.matches(" -> ").count(), 0);
    }

    #[test]
    fn oversized_top_concept_is_elided() {
        // 83 package identifiers common to both variants, shown 10 at a time.
        let packages: Vec<Identifier> = (0..83)
            .map(|i| Identifier::package(format!("pkg{i:02}")).unwrap())
            .collect();
        let ctx = FormalContext::new(
            vec!["v1".to_string(), "v2".to_string()],
            packages,
            vec![vec![true; 83]; 2],
        )
        .unwrap();
        let opts = RenderOptions {
            max_labels_per_concept: Some(10),
            ..RenderOptions::default()
        };
        let dot = to_dot(&build_aoc_poset(&ctx), &opts);
        assert_valid_dot(&dot);
        assert_eq!(dot.matches("package pkg").count(), 10);
        assert!(dot.contains("... (+73 more)"));
    }

    #[test]
    fn elision_off_conserves_every_context_attribute_exactly_once() {
        for models in [drawing_models(), three_variant_models()] {
            let ctx = build_context(&models, KindFilter::All).unwrap();
            let poset = build_aoc_poset(&ctx);
            let opts = RenderOptions {
                max_labels_per_concept: None,
                ..RenderOptions::default()
            };
            let dot = to_dot(&poset, &opts);
            assert_valid_dot(&dot);
            for attribute in ctx.attributes() {
                assert_eq!(
                    dot.matches(&format!("{}\\l", dot_escape(&attribute.tagged()))).count(),
                    1,
                    "{} must appear exactly once",
                    attribute.tagged()
                );
            }
        }
    }

    fn three_variant_models() -> Vec<CodeModel> {
        ["v1", "v2", "v3"]
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let mut ids = vec![Identifier::package("p").unwrap(), cls("p.All")];
                if i < 2 {
                    ids.push(cls("p.Pair"));
                }
                ids.push(cls(&format!("p.Only{i}")));
                CodeModel::new(*name, ids, [], 10).unwrap()
            })
            .collect()
    }

    #[test]
    fn awkward_characters_in_labels_are_escaped() {
        let odd = cls("p.A\"B{C|D");
        let ctx = FormalContext::new(vec!["v".to_string()], vec![odd], vec![vec![true]]).unwrap();
        let dot = to_dot(&build_aoc_poset(&ctx), &RenderOptions::default());
        assert_valid_dot(&dot);
        assert!(dot.contains("\\\"") && dot.contains("\\{") && dot.contains("\\|"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let models = drawing_models();
        let poset = class_poset(&models);
        assert_eq!(
            to_dot(&poset, &RenderOptions::default()),
            to_dot(&poset, &RenderOptions::default())
        );
        let maps = build_all_maps(&models).unwrap();
        assert_eq!(to_json(&maps[1]), to_json(&maps[1]));
        let stats = corpus_stats(&models, &maps);
        let evolution = classify_evolution(&models[0], &models[1], KindFilter::All);
        assert_eq!(
            to_text_report(&maps, Some(&evolution), &stats, &[]),
            to_text_report(&maps, Some(&evolution), &stats, &[])
        );
    }

    #[test]
    fn json_round_trips_every_map() {
        let models = drawing_models();
        for map in build_all_maps(&models).unwrap() {
            let parsed = map_from_json(&to_json(&map)).unwrap();
            assert_eq!(parsed, map);
        }
        for map in build_all_maps(&three_variant_models()).unwrap() {
            let parsed = map_from_json(&to_json(&map)).unwrap();
            assert_eq!(parsed, map);
        }
    }

    #[test]
    fn json_counts_match_the_drawing_shapes_table() {
        let models = drawing_models();
        let maps = build_all_maps(&models).unwrap();
        let doc: Value = serde_json::from_str(&to_json(&maps[1])).unwrap();
        assert_eq!(doc["kind"], "classes");
        assert_eq!(doc["common"].as_array().unwrap().len(), 4);
        assert_eq!(doc["unique"]["Release 1"].as_array().unwrap().len(), 2);
        assert_eq!(doc["unique"]["Release 2"].as_array().unwrap().len(), 2);
        assert_eq!(doc["counts"]["total"], 8);
        assert!(doc.get("shared").is_none(), "two-variant map has no shared key");
    }

    #[test]
    fn empty_map_serializes_with_zero_counts() {
        let models = [CodeModel::empty("a"), CodeModel::empty("b")];
        let maps = build_all_maps(&models).unwrap();
        let doc: Value = serde_json::from_str(&to_json(&maps[0])).unwrap();
        assert_eq!(doc["common"].as_array().unwrap().len(), 0);
        assert_eq!(doc["counts"]["total"], 0);
        assert_eq!(map_from_json(&to_json(&maps[0])).unwrap(), maps[0]);
    }

    #[test]
    fn shared_blocks_appear_only_for_more_than_two_variants() {
        let maps = build_all_maps(&three_variant_models()).unwrap();
        let class_map = &maps[1];
        assert!(!class_map.shared.is_empty());
        let doc: Value = serde_json::from_str(&to_json(class_map)).unwrap();
        let shared = doc["shared"].as_array().unwrap();
        assert_eq!(shared.len(), 1);
        assert_eq!(shared[0]["variants"], json!(["v1", "v2"]));
    }

    #[test]
    fn malformed_map_documents_are_rejected() {
        assert!(matches!(map_from_json("not json"), Err(RenderError::Json(_))));
        for (doc, needle) in [
            (json!({}), "missing `kind`"),
            (
                json!({"kind": "gadgets", "variants": [], "common": [], "unique": {}}),
                "unknown",
            ),
            (
                json!({"kind": "classes", "variants": ["a"], "common": [], "unique": {"b": []}}),
                "unknown variant",
            ),
            (
                json!({"kind": "classes", "variants": ["a", "b"],
                       "common": ["class p.X"], "unique": {},
                       "counts": {"total": 5}}),
                "counts.total",
            ),
            (
                json!({"kind": "packages", "variants": ["a", "b"],
                       "common": ["class p.X"], "unique": {}}),
                "does not belong",
            ),
        ] {
            let err = map_from_json(&doc.to_string()).unwrap_err();
            assert!(
                err.to_string().contains(needle),
                "expected `{needle}` in `{err}`"
            );
        }
    }

    #[test]
    fn evolution_json_round_trips() {
        let models = drawing_models();
        for kind in KindFilter::ALL_MAPS {
            let report = classify_evolution(&models[0], &models[1], kind);
            let parsed = evolution_from_json(&evolution_to_json(&report)).unwrap();
            assert_eq!(parsed, report);
        }
    }

    #[test]
    fn text_report_states_the_drawing_shapes_evolution() {
        let models = drawing_models();
        let maps = build_all_maps(&models).unwrap();
        let stats = corpus_stats(&models, &maps);
        let evolution = classify_evolution(&models[0], &models[1], KindFilter::All);
        let report = to_text_report(&maps, Some(&evolution), &stats, &[]);
        assert!(report.contains("classes added: 2, removed: 2, unchanged: 4"));
        assert!(report.contains("packages unchanged"));
        assert!(report.contains("variants: Release 1, Release 2"));
        assert!(report.contains("map: classes"));
        assert!(report.contains("unique to Release 2 (2):"));
        assert!(report.contains("class shapes.MyRoundRectangle"));
        assert!(!report.contains("no changes detected"));
    }

    #[test]
    fn identical_variants_report_no_changes() {
        let models = drawing_models();
        let twin = CodeModel::new(
            "Release 1 again",
            models[0].identifiers().iter().cloned(),
            [],
            models[0].source_stats().loc,
        )
        .unwrap();
        let pair = vec![models[0].clone(), twin];
        let maps = build_all_maps(&pair).unwrap();
        let stats = corpus_stats(&pair, &maps);
        let evolution = classify_evolution(&pair[0], &pair[1], KindFilter::All);
        let report = to_text_report(&maps, Some(&evolution), &stats, &[]);
        assert!(report.contains("no changes detected"));
    }

    #[test]
    fn text_report_includes_metrics_when_supplied() {
        let models = drawing_models();
        let maps = build_all_maps(&models).unwrap();
        let stats = corpus_stats(&models, &maps);
        let metrics: Vec<MetricsReport> = maps
            .iter()
            .map(|m| evaluate_map(m, &GroundTruth::from_map(m)).unwrap())
            .collect();
        let report = to_text_report(&maps, None, &stats, &metrics);
        assert!(report.contains("map classes: precision 1.000, recall 1.000, f-measure 1.000"));
        assert!(report.contains("unique:Release 1: precision 1.000"));
    }

    #[test]
    fn metrics_json_lists_each_map() {
        let models = drawing_models();
        let maps = build_all_maps(&models).unwrap();
        let metrics: Vec<MetricsReport> = maps
            .iter()
            .map(|m| evaluate_map(m, &GroundTruth::from_map(m)).unwrap())
            .collect();
        let doc: Value = serde_json::from_str(&metrics_to_json(&metrics)).unwrap();
        let entries = doc["maps"].as_array().unwrap();
        assert_eq!(entries.len(), 5);
        assert_eq!(entries[0]["kind"], "packages");
        assert_eq!(entries[4]["kind"], "all");
        assert_eq!(entries[1]["precision"], 1.0);
        assert!(entries[1]["blocks"]["common"]["f_measure"].is_number());
    }
}
