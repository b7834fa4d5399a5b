//! Identifier maps and evolution classification.
//!
//! An [`IdentifiersMap`] partitions the identifiers of two or more variants
//! into a common block (introduced at the top concept of the AOC-poset),
//! per-variant unique blocks (concepts whose extent is a single variant),
//! and — for three or more variants — `shared` blocks for identifiers
//! introduced at intermediate concepts. Because reduced labeling assigns
//! each identifier to exactly one concept, no identifier is ever repeated
//! across blocks.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::fca::{build_aoc_poset, build_context, AocPoset, FcaError};
use crate::model::{CodeModel, Identifier, KindFilter};

#[derive(Debug, Error)]
pub enum MapError {
    #[error("poset objects [{poset}] do not match requested variants [{requested}]")]
    VariantMismatch { poset: String, requested: String },
    #[error("map of kind `{expected}` cannot hold {found_kind} `{found}`")]
    KindMismatch {
        expected: KindFilter,
        found_kind: String,
        found: String,
    },
    #[error(transparent)]
    Context(#[from] FcaError),
}

/// The common/unique partition of variant identifiers for one kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentifiersMap {
    pub kind: KindFilter,
    pub variant_names: Vec<String>,
    pub common: BTreeSet<Identifier>,
    /// One entry per variant, possibly empty.
    pub unique: BTreeMap<String, BTreeSet<Identifier>>,
    /// Identifiers shared by a proper subset (≥2) of variants, keyed by the
    /// sharing variants. Always empty for two-variant maps.
    pub shared: BTreeMap<Vec<String>, BTreeSet<Identifier>>,
}

impl IdentifiersMap {
    /// Total number of identifiers across all blocks.
    pub fn count_total(&self) -> usize {
        self.common.len()
            + self.unique.values().map(BTreeSet::len).sum::<usize>()
            + self.shared.values().map(BTreeSet::len).sum::<usize>()
    }

    /// All identifiers paired with the label of the block holding them
    /// (`common`, `unique:<variant>`, `shared:<v1>+<v2>...`). This is the
    /// retrieved set used by evaluation: an identifier in the wrong block
    /// counts as wrong.
    pub fn labeled_identifiers(&self) -> BTreeSet<(String, Identifier)> {
        let mut out = BTreeSet::new();
        for id in &self.common {
            out.insert(("common".to_string(), id.clone()));
        }
        for (variant, ids) in &self.unique {
            for id in ids {
                out.insert((format!("unique:{variant}"), id.clone()));
            }
        }
        for (variants, ids) in &self.shared {
            let label = format!("shared:{}", variants.join("+"));
            for id in ids {
                out.insert((label.clone(), id.clone()));
            }
        }
        out
    }
}

/// Reads the identifier map for one kind off an AOC-poset: the top
/// concept's reduced intent is the common block, single-variant concepts
/// yield the unique blocks, and intermediate concepts (only possible with
/// three or more variants) yield the `shared` blocks.
pub fn extract_map(
    poset: &AocPoset,
    kind: KindFilter,
    variant_names: &[String],
) -> Result<IdentifiersMap, MapError> {
    let requested: BTreeSet<&String> = variant_names.iter().collect();
    let in_poset: BTreeSet<&String> = poset.objects.iter().collect();
    if requested != in_poset || variant_names.len() != poset.objects.len() {
        return Err(MapError::VariantMismatch {
            poset: poset.objects.join(", "),
            requested: variant_names.join(", "),
        });
    }
    for concept in &poset.concepts {
        if let Some(id) = concept.reduced_intent.iter().find(|id| !kind.matches(id.kind())) {
            return Err(MapError::KindMismatch {
                expected: kind,
                found_kind: id.kind().to_string(),
                found: id.qualified_name().to_string(),
            });
        }
    }

    let total = variant_names.len();
    let mut common = BTreeSet::new();
    let mut unique: BTreeMap<String, BTreeSet<Identifier>> = variant_names
        .iter()
        .map(|v| (v.clone(), BTreeSet::new()))
        .collect();
    let mut shared: BTreeMap<Vec<String>, BTreeSet<Identifier>> = BTreeMap::new();

    for concept in &poset.concepts {
        if concept.reduced_intent.is_empty() {
            continue;
        }
        match concept.extent.len() {
            n if n == total => common.extend(concept.reduced_intent.iter().cloned()),
            1 => {
                let variant = concept.extent.iter().next().expect("extent of size 1");
                unique
                    .get_mut(variant)
                    .expect("extent validated against variant names")
                    .extend(concept.reduced_intent.iter().cloned());
            }
            _ => {
                let key: Vec<String> = concept.extent.iter().cloned().collect();
                shared
                    .entry(key)
                    .or_default()
                    .extend(concept.reduced_intent.iter().cloned());
            }
        }
    }

    Ok(IdentifiersMap {
        kind,
        variant_names: variant_names.to_vec(),
        common,
        unique,
        shared,
    })
}

/// Builds the five maps (packages, classes, attributes, methods, all) for a
/// set of variants, running the full context → AOC-poset → map pipeline per
/// kind.
pub fn build_all_maps(models: &[CodeModel]) -> Result<Vec<IdentifiersMap>, MapError> {
    let variant_names: Vec<String> = models
        .iter()
        .map(|m| m.variant_name().to_string())
        .collect();
    KindFilter::ALL_MAPS
        .iter()
        .map(|&kind| {
            let ctx = build_context(models, kind)?;
            let poset = build_aoc_poset(&ctx);
            extract_map(&poset, kind, &variant_names)
        })
        .collect()
}

/// The added/removed/unchanged classification of identifiers between an
/// initial and a current release.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolutionReport {
    pub kind: KindFilter,
    pub initial_variant: String,
    pub current_variant: String,
    pub added: BTreeSet<Identifier>,
    pub removed: BTreeSet<Identifier>,
    pub unchanged: BTreeSet<Identifier>,
}

/// Classifies each identifier of the two models: `added` exists only in the
/// current release, `removed` only in the initial one, `unchanged` in both.
/// Identifier identity is by qualified name, so a rename shows up as one
/// removal plus one addition.
pub fn classify_evolution(
    initial: &CodeModel,
    current: &CodeModel,
    kind: KindFilter,
) -> EvolutionReport {
    let init = initial.identifiers_matching(kind);
    let cur = current.identifiers_matching(kind);
    EvolutionReport {
        kind,
        initial_variant: initial.variant_name().to_string(),
        current_variant: current.variant_name().to_string(),
        added: cur.difference(&init).cloned().collect(),
        removed: init.difference(&cur).cloned().collect(),
        unchanged: init.intersection(&cur).cloned().collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::IdentifierKind;

    fn model(name: &str, classes: &[&str]) -> CodeModel {
        let mut ids = vec![Identifier::package("shapes").unwrap()];
        for c in classes {
            ids.push(Identifier::class(format!("shapes.{c}")).unwrap());
        }
        CodeModel::new(name, ids, [], 100).unwrap()
    }

    fn drawing_shapes_models() -> (CodeModel, CodeModel) {
        let shared = ["MyLine", "DrawingShapes", "PaintJPanel", "MyShape"];
        let r1: Vec<&str> = shared.iter().chain(["MyRectangle", "MyOval"].iter()).copied().collect();
        let r2: Vec<&str> = shared
            .iter()
            .chain(["MyRoundRectangle", "My3DRectangle"].iter())
            .copied()
            .collect();
        (model("Release 1", &r1), model("Release 2", &r2))
    }

    fn class_map(models: &[CodeModel]) -> IdentifiersMap {
        let kind = KindFilter::Only(IdentifierKind::Class);
        let ctx = build_context(models, kind).unwrap();
        let poset = build_aoc_poset(&ctx);
        let names: Vec<String> = models.iter().map(|m| m.variant_name().to_string()).collect();
        extract_map(&poset, kind, &names).unwrap()
    }

    fn simple_names(set: &BTreeSet<Identifier>) -> BTreeSet<&str> {
        set.iter().map(Identifier::simple_name).collect()
    }

    #[test]
    fn drawing_shapes_class_map() {
        let (r1, r2) = drawing_shapes_models();
        let map = class_map(&[r1, r2]);
        assert_eq!(
            simple_names(&map.common),
            BTreeSet::from(["MyLine", "DrawingShapes", "PaintJPanel", "MyShape"])
        );
        assert_eq!(
            simple_names(&map.unique["Release 1"]),
            BTreeSet::from(["MyRectangle", "MyOval"])
        );
        assert_eq!(
            simple_names(&map.unique["Release 2"]),
            BTreeSet::from(["MyRoundRectangle", "My3DRectangle"])
        );
        assert!(map.shared.is_empty());
        assert_eq!(map.count_total(), 8);
    }

    #[test]
    fn identical_variants_have_empty_unique_blocks() {
        let a = model("v1", &["A", "B"]);
        let b = model("v2", &["A", "B"]);
        let map = class_map(&[a, b]);
        assert_eq!(map.common.len(), 2);
        assert!(map.unique.values().all(BTreeSet::is_empty));
        assert_eq!(map.unique.len(), 2);
    }

    #[test]
    fn two_variant_map_equals_direct_set_algebra() {
        let (r1, r2) = drawing_shapes_models();
        let map = class_map(&[r1.clone(), r2.clone()]);
        let s1 = r1.identifiers_matching(KindFilter::Only(IdentifierKind::Class));
        let s2 = r2.identifiers_matching(KindFilter::Only(IdentifierKind::Class));
        let common: BTreeSet<Identifier> = s1.intersection(&s2).cloned().collect();
        let only1: BTreeSet<Identifier> = s1.difference(&s2).cloned().collect();
        let only2: BTreeSet<Identifier> = s2.difference(&s1).cloned().collect();
        assert_eq!(map.common, common);
        assert_eq!(map.unique["Release 1"], only1);
        assert_eq!(map.unique["Release 2"], only2);
    }

    #[test]
    fn three_variants_produce_shared_blocks() {
        let a = model("v1", &["All", "Pair"]);
        let b = model("v2", &["All", "Pair", "OnlyB"]);
        let c = model("v3", &["All"]);
        let map = class_map(&[a, b, c]);
        assert_eq!(simple_names(&map.common), BTreeSet::from(["All"]));
        assert_eq!(simple_names(&map.unique["v2"]), BTreeSet::from(["OnlyB"]));
        assert!(map.unique["v1"].is_empty());
        assert!(map.unique["v3"].is_empty());
        let key = vec!["v1".to_string(), "v2".to_string()];
        assert_eq!(simple_names(&map.shared[&key]), BTreeSet::from(["Pair"]));
    }

    #[test]
    fn no_identifier_is_repeated_across_blocks() {
        let a = model("v1", &["All", "Pair", "OnlyA"]);
        let b = model("v2", &["All", "Pair"]);
        let c = model("v3", &["All", "OnlyC1", "OnlyC2"]);
        let map = class_map(&[a, b, c]);
        let labeled = map.labeled_identifiers();
        let mut ids: Vec<&Identifier> = labeled.iter().map(|(_, id)| id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), labeled.len(), "an identifier appears in two blocks");
        // All, Pair, OnlyA, OnlyC1, OnlyC2 — each in exactly one block.
        assert_eq!(map.count_total(), 5);
    }

    #[test]
    fn variant_mismatch_is_rejected() {
        let (r1, r2) = drawing_shapes_models();
        let kind = KindFilter::Only(IdentifierKind::Class);
        let ctx = build_context(&[r1, r2], kind).unwrap();
        let poset = build_aoc_poset(&ctx);
        let err = extract_map(&poset, kind, &["Release 1".to_string()]).unwrap_err();
        assert!(matches!(err, MapError::VariantMismatch { .. }));
        let err = extract_map(
            &poset,
            kind,
            &["Release 1".to_string(), "Release 3".to_string()],
        )
        .unwrap_err();
        assert!(matches!(err, MapError::VariantMismatch { .. }));
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let (r1, r2) = drawing_shapes_models();
        let class_kind = KindFilter::Only(IdentifierKind::Class);
        let ctx = build_context(&[r1, r2], class_kind).unwrap();
        let poset = build_aoc_poset(&ctx);
        let names = vec!["Release 1".to_string(), "Release 2".to_string()];
        let err =
            extract_map(&poset, KindFilter::Only(IdentifierKind::Method), &names).unwrap_err();
        assert!(matches!(err, MapError::KindMismatch { .. }));
        // The all-identifiers filter accepts any kind.
        assert!(extract_map(&poset, KindFilter::All, &names).is_ok());
    }

    #[test]
    fn all_maps_come_in_canonical_order_and_sum_up() {
        let (r1, r2) = drawing_shapes_models();
        let maps = build_all_maps(&[r1, r2]).unwrap();
        let kinds: Vec<&str> = maps.iter().map(|m| m.kind.name()).collect();
        assert_eq!(
            kinds,
            vec!["packages", "classes", "attributes", "methods", "all"]
        );

        let all = &maps[4];
        let mut union_common = BTreeSet::new();
        let mut union_unique: BTreeMap<String, BTreeSet<Identifier>> = BTreeMap::new();
        for per_kind in &maps[..4] {
            for id in &per_kind.common {
                assert!(union_common.insert(id.clone()), "kind blocks overlap");
            }
            for (v, ids) in &per_kind.unique {
                let entry = union_unique.entry(v.clone()).or_default();
                for id in ids {
                    assert!(entry.insert(id.clone()), "kind blocks overlap");
                }
            }
        }
        assert_eq!(all.common, union_common);
        assert_eq!(all.unique, union_unique);
    }

    #[test]
    fn package_map_of_drawing_shapes_has_no_unique_entries() {
        let (r1, r2) = drawing_shapes_models();
        let maps = build_all_maps(&[r1, r2]).unwrap();
        let packages = &maps[0];
        assert_eq!(packages.common.len(), 1);
        assert!(packages.unique.values().all(BTreeSet::is_empty));
    }

    #[test]
    fn evolution_of_drawing_shapes_classes() {
        let (r1, r2) = drawing_shapes_models();
        let report = classify_evolution(&r1, &r2, KindFilter::Only(IdentifierKind::Class));
        assert_eq!(report.initial_variant, "Release 1");
        assert_eq!(report.current_variant, "Release 2");
        assert_eq!(
            simple_names(&report.added),
            BTreeSet::from(["MyRoundRectangle", "My3DRectangle"])
        );
        assert_eq!(
            simple_names(&report.removed),
            BTreeSet::from(["MyRectangle", "MyOval"])
        );
        assert_eq!(
            simple_names(&report.unchanged),
            BTreeSet::from(["MyLine", "DrawingShapes", "PaintJPanel", "MyShape"])
        );
    }

    #[test]
    fn identical_models_change_nothing() {
        let (r1, _) = drawing_shapes_models();
        let mut twin = r1.clone();
        // Same content, distinct name.
        twin = CodeModel::new(
            "Release 1 again",
            twin.identifiers().iter().cloned(),
            twin.inheritance().iter().cloned(),
            twin.source_stats().loc,
        )
        .unwrap();
        let report = classify_evolution(&r1, &twin, KindFilter::All);
        assert!(report.added.is_empty());
        assert!(report.removed.is_empty());
        assert_eq!(report.unchanged.len(), r1.identifiers().len());
    }

    #[test]
    fn evolution_agrees_with_the_map_route() {
        let (r1, r2) = drawing_shapes_models();
        let kind = KindFilter::Only(IdentifierKind::Class);
        let direct = classify_evolution(&r1, &r2, kind);
        let map = class_map(&[r1, r2]);
        assert_eq!(direct.added, map.unique["Release 2"]);
        assert_eq!(direct.removed, map.unique["Release 1"]);
        assert_eq!(direct.unchanged, map.common);
    }

    #[test]
    fn evolution_partitions_the_union() {
        let (r1, r2) = drawing_shapes_models();
        let report = classify_evolution(&r1, &r2, KindFilter::All);
        let mut rebuilt = BTreeSet::new();
        for id in report
            .added
            .iter()
            .chain(report.removed.iter())
            .chain(report.unchanged.iter())
        {
            assert!(rebuilt.insert(id.clone()), "classification overlaps");
        }
        let union: BTreeSet<Identifier> = r1
            .identifiers()
            .union(r2.identifiers())
            .cloned()
            .collect();
        assert_eq!(rebuilt, union);
    }

    #[test]
    fn swapping_releases_swaps_added_and_removed() {
        let (r1, r2) = drawing_shapes_models();
        let forward = classify_evolution(&r1, &r2, KindFilter::All);
        let backward = classify_evolution(&r2, &r1, KindFilter::All);
        assert_eq!(forward.added, backward.removed);
        assert_eq!(forward.removed, backward.added);
        assert_eq!(forward.unchanged, backward.unchanged);
    }
}
