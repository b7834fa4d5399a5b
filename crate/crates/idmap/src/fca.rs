//! Formal concept analysis over variant/identifier contexts: derivation
//! operators, AOC-poset construction with reduced labeling, and a
//! brute-force lattice oracle for tests.
//!
//! Objects are variant names, attributes are identifiers. The AOC-poset
//! (Galois sub-hierarchy) keeps only attribute-concepts and object-concepts;
//! reduced labeling assigns every attribute and every object to exactly one
//! concept, which is what makes identifier maps repetition-free.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::model::{CodeModel, Identifier, KindFilter};

#[derive(Debug, Error)]
pub enum FcaError {
    #[error("a formal context needs at least one object")]
    NoObjects,
    #[error("need at least two variants, got {0}")]
    TooFewVariants(usize),
    #[error("duplicate object name `{0}`")]
    DuplicateObject(String),
    #[error("duplicate attribute `{0}`")]
    DuplicateAttribute(String),
    #[error("incidence matrix is {rows}x{cols}, expected {objects}x{attributes}")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        objects: usize,
        attributes: usize,
    },
    #[error("attribute `{0}` is incident to no object")]
    EmptyColumn(String),
    #[error("brute-force oracle is test-only and limited to 16 objects, got {0}")]
    OracleTooLarge(usize),
}

/// A formal context: objects G (variant names), attributes M (identifiers),
/// and a boolean incidence relation I ⊆ G×M.
///
/// Attributes are kept sorted by (kind, qualified name); objects keep their
/// input order. Every attribute is incident to at least one object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<Identifier>,
    /// `incidence[g][m]` — row per object, column per attribute.
    incidence: Vec<Vec<bool>>,
}

impl FormalContext {
    /// Validates and normalizes a context: dimensions must match, names must
    /// be unique, and no attribute column may be empty. Attributes are
    /// sorted (columns permuted along with them).
    pub fn new(
        objects: Vec<String>,
        attributes: Vec<Identifier>,
        incidence: Vec<Vec<bool>>,
    ) -> Result<Self, FcaError> {
        if objects.is_empty() {
            return Err(FcaError::NoObjects);
        }
        let rows = incidence.len();
        let cols = incidence.first().map_or(0, Vec::len);
        if rows != objects.len() || incidence.iter().any(|r| r.len() != attributes.len()) {
            return Err(FcaError::DimensionMismatch {
                rows,
                cols,
                objects: objects.len(),
                attributes: attributes.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for o in &objects {
            if !seen.insert(o.clone()) {
                return Err(FcaError::DuplicateObject(o.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for a in &attributes {
            if !seen.insert(a.clone()) {
                return Err(FcaError::DuplicateAttribute(a.qualified_name().to_string()));
            }
        }

        // Sort attributes, carrying their columns along.
        let mut order: Vec<usize> = (0..attributes.len()).collect();
        order.sort_by(|&i, &j| attributes[i].cmp(&attributes[j]));
        let attributes: Vec<Identifier> = order.iter().map(|&i| attributes[i].clone()).collect();
        let incidence: Vec<Vec<bool>> = incidence
            .iter()
            .map(|row| order.iter().map(|&i| row[i]).collect())
            .collect();

        for (m, attr) in attributes.iter().enumerate() {
            if !incidence.iter().any(|row| row[m]) {
                return Err(FcaError::EmptyColumn(attr.qualified_name().to_string()));
            }
        }
        Ok(FormalContext {
            objects,
            attributes,
            incidence,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[Identifier] {
        &self.attributes
    }

    pub fn incident(&self, object: &str, attribute: &Identifier) -> bool {
        let Some(g) = self.objects.iter().position(|o| o == object) else {
            return false;
        };
        match self.attributes.binary_search(attribute) {
            Ok(m) => self.incidence[g][m],
            Err(_) => false,
        }
    }

    /// Derivation operator M → G: the objects incident to every attribute in
    /// `attrs`. Attributes not in the context are ignored.
    pub fn derive_objects(&self, attrs: &BTreeSet<Identifier>) -> BTreeSet<String> {
        let indices: Vec<usize> = attrs
            .iter()
            .filter_map(|a| self.attributes.binary_search(a).ok())
            .collect();
        self.objects
            .iter()
            .enumerate()
            .filter(|(g, _)| indices.iter().all(|&m| self.incidence[*g][m]))
            .map(|(_, o)| o.clone())
            .collect()
    }

    /// Derivation operator G → M: the attributes incident to every object in
    /// `objs`. Objects not in the context are ignored.
    pub fn derive_attributes(&self, objs: &BTreeSet<String>) -> BTreeSet<Identifier> {
        let indices: Vec<usize> = objs
            .iter()
            .filter_map(|o| self.objects.iter().position(|x| x == o))
            .collect();
        self.attributes
            .iter()
            .enumerate()
            .filter(|(m, _)| indices.iter().all(|&g| self.incidence[g][*m]))
            .map(|(_, a)| a.clone())
            .collect()
    }
}

/// Builds the variants × identifiers context for one map kind: objects are
/// the models' variant names in input order, attributes the union of their
/// kind-filtered identifier sets.
pub fn build_context(models: &[CodeModel], filter: KindFilter) -> Result<FormalContext, FcaError> {
    if models.len() < 2 {
        return Err(FcaError::TooFewVariants(models.len()));
    }
    let objects: Vec<String> = models.iter().map(|m| m.variant_name().to_string()).collect();
    let per_model: Vec<BTreeSet<Identifier>> = models
        .iter()
        .map(|m| m.identifiers_matching(filter))
        .collect();
    let attributes: Vec<Identifier> = per_model
        .iter()
        .flat_map(|s| s.iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let incidence: Vec<Vec<bool>> = per_model
        .iter()
        .map(|set| attributes.iter().map(|a| set.contains(a)).collect())
        .collect();
    FormalContext::new(objects, attributes, incidence)
}

/// A formal concept with its reduced labels. In an AOC-poset every
/// attribute appears in exactly one concept's `reduced_intent` and every
/// object in exactly one `reduced_extent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Concept {
    pub extent: BTreeSet<String>,
    pub intent: BTreeSet<Identifier>,
    pub reduced_extent: BTreeSet<String>,
    pub reduced_intent: BTreeSet<Identifier>,
}

/// The AOC-poset (Galois sub-hierarchy): attribute- and object-concepts
/// only, ordered by extent inclusion.
///
/// Concepts are sorted by (descending extent size, lexicographic extent,
/// smallest intent member); `hasse_edges` holds (child index, parent index)
/// covering pairs sorted by (child, parent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AocPoset {
    pub objects: Vec<String>,
    pub concepts: Vec<Concept>,
    pub hasse_edges: Vec<(usize, usize)>,
}

impl AocPoset {
    /// The concept whose extent is all objects, if any — the top of the
    /// poset whenever some attribute (or object closure) spans everything.
    pub fn top_concept(&self) -> Option<&Concept> {
        self.concepts
            .first()
            .filter(|c| c.extent.len() == self.objects.len())
    }
}

/// Computes the AOC-poset of a context: one concept per distinct attribute
/// column and per distinct object closure, with reduced labeling and the
/// transitive reduction of extent inclusion.
pub fn build_aoc_poset(ctx: &FormalContext) -> AocPoset {
    let n_obj = ctx.objects.len();
    let n_attr = ctx.attributes.len();

    // Attribute-concept extents are exactly the columns (m' is closed);
    // object-concept extents are the closures g''.
    let cols: Vec<Vec<usize>> = (0..n_attr)
        .map(|m| (0..n_obj).filter(|&g| ctx.incidence[g][m]).collect())
        .collect();
    let object_closures: Vec<Vec<usize>> = (0..n_obj)
        .map(|g| {
            (0..n_obj)
                .filter(|&h| (0..n_attr).all(|m| !ctx.incidence[g][m] || ctx.incidence[h][m]))
                .collect()
        })
        .collect();

    let mut extents: BTreeSet<Vec<usize>> = cols.iter().cloned().collect();
    extents.extend(object_closures.iter().cloned());

    let mut concepts: Vec<Concept> = extents
        .into_iter()
        .map(|extent| {
            let intent: BTreeSet<Identifier> = (0..n_attr)
                .filter(|&m| extent.iter().all(|&g| ctx.incidence[g][m]))
                .map(|m| ctx.attributes[m].clone())
                .collect();
            let reduced_intent: BTreeSet<Identifier> = (0..n_attr)
                .filter(|&m| cols[m] == extent)
                .map(|m| ctx.attributes[m].clone())
                .collect();
            let reduced_extent: BTreeSet<String> = (0..n_obj)
                .filter(|&g| object_closures[g] == extent)
                .map(|g| ctx.objects[g].clone())
                .collect();
            let extent: BTreeSet<String> =
                extent.into_iter().map(|g| ctx.objects[g].clone()).collect();
            Concept {
                extent,
                intent,
                reduced_extent,
                reduced_intent,
            }
        })
        .collect();

    concepts.sort_by(|a, b| {
        b.extent
            .len()
            .cmp(&a.extent.len())
            .then_with(|| a.extent.cmp(&b.extent))
            .then_with(|| a.intent.iter().next().cmp(&b.intent.iter().next()))
    });

    let mut hasse_edges = Vec::new();
    for (c, child) in concepts.iter().enumerate() {
        for (p, parent) in concepts.iter().enumerate() {
            if c == p
                || child.extent.len() >= parent.extent.len()
                || !child.extent.is_subset(&parent.extent)
            {
                continue;
            }
            let covered = concepts.iter().enumerate().any(|(q, mid)| {
                q != c
                    && q != p
                    && child.extent.is_subset(&mid.extent)
                    && child.extent.len() < mid.extent.len()
                    && mid.extent.is_subset(&parent.extent)
                    && mid.extent.len() < parent.extent.len()
            });
            if !covered {
                hasse_edges.push((c, p));
            }
        }
    }
    hasse_edges.sort_unstable();

    AocPoset {
        objects: ctx.objects.clone(),
        concepts,
        hasse_edges,
    }
}

/// Test oracle: enumerates every formal concept of the context by closing
/// all object subsets. Deliberately written against the raw incidence
/// matrix, sharing no logic with [`build_aoc_poset`]. Limited to 16 objects.
pub fn brute_force_lattice(ctx: &FormalContext) -> Result<Vec<Concept>, FcaError> {
    let n_obj = ctx.objects.len();
    let n_attr = ctx.attributes.len();
    if n_obj > 16 {
        return Err(FcaError::OracleTooLarge(n_obj));
    }

    let mut extents: BTreeSet<Vec<usize>> = BTreeSet::new();
    for mask in 0u32..(1u32 << n_obj) {
        let subset: Vec<usize> = (0..n_obj).filter(|&g| mask & (1 << g) != 0).collect();
        let mut intent = Vec::new();
        for m in 0..n_attr {
            let mut all = true;
            for &g in &subset {
                if !ctx.incidence[g][m] {
                    all = false;
                    break;
                }
            }
            if all {
                intent.push(m);
            }
        }
        let mut closure = Vec::new();
        for g in 0..n_obj {
            let mut all = true;
            for &m in &intent {
                if !ctx.incidence[g][m] {
                    all = false;
                    break;
                }
            }
            if all {
                closure.push(g);
            }
        }
        extents.insert(closure);
    }

    let concepts = extents
        .into_iter()
        .map(|extent| {
            let mut intent = BTreeSet::new();
            for m in 0..n_attr {
                let mut all = true;
                for &g in &extent {
                    if !ctx.incidence[g][m] {
                        all = false;
                        break;
                    }
                }
                if all {
                    intent.insert(ctx.attributes[m].clone());
                }
            }
            let mut reduced_intent = BTreeSet::new();
            for m in 0..n_attr {
                let mut col = Vec::new();
                for g in 0..n_obj {
                    if ctx.incidence[g][m] {
                        col.push(g);
                    }
                }
                if col == extent {
                    reduced_intent.insert(ctx.attributes[m].clone());
                }
            }
            let mut reduced_extent = BTreeSet::new();
            for g in 0..n_obj {
                let mut attrs_of_g = Vec::new();
                for m in 0..n_attr {
                    if ctx.incidence[g][m] {
                        attrs_of_g.push(m);
                    }
                }
                let mut closure_of_g = Vec::new();
                for h in 0..n_obj {
                    let mut all = true;
                    for &m in &attrs_of_g {
                        if !ctx.incidence[h][m] {
                            all = false;
                            break;
                        }
                    }
                    if all {
                        closure_of_g.push(h);
                    }
                }
                if closure_of_g == extent {
                    reduced_extent.insert(ctx.objects[g].clone());
                }
            }
            Concept {
                extent: extent.into_iter().map(|g| ctx.objects[g].clone()).collect(),
                intent,
                reduced_extent,
                reduced_intent,
            }
        })
        .collect();
    Ok(concepts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::IdentifierKind;

    fn cls(name: &str) -> Identifier {
        Identifier::class(name).unwrap()
    }

    /// The two-release class context of the drawing-shapes example:
    /// four shared classes, two unique to each release.
    fn drawing_shapes_context() -> FormalContext {
        let shared = ["MyLine", "DrawingShapes", "PaintJPanel", "MyShape"];
        let r1 = ["MyRectangle", "MyOval"];
        let r2 = ["MyRoundRectangle", "My3DRectangle"];
        let attributes: Vec<Identifier> = shared
            .iter()
            .chain(r1.iter())
            .chain(r2.iter())
            .map(|n| cls(n))
            .collect();
        let row1: Vec<bool> = attributes
            .iter()
            .map(|a| {
                shared.contains(&a.qualified_name()) || r1.contains(&a.qualified_name())
            })
            .collect();
        let row2: Vec<bool> = attributes
            .iter()
            .map(|a| {
                shared.contains(&a.qualified_name()) || r2.contains(&a.qualified_name())
            })
            .collect();
        FormalContext::new(
            vec!["Release 1".to_string(), "Release 2".to_string()],
            attributes,
            vec![row1, row2],
        )
        .unwrap()
    }

    fn names(set: &BTreeSet<Identifier>) -> BTreeSet<&str> {
        set.iter().map(Identifier::qualified_name).collect()
    }

    #[test]
    fn rejects_malformed_contexts() {
        assert!(matches!(
            FormalContext::new(vec![], vec![], vec![]),
            Err(FcaError::NoObjects)
        ));
        assert!(matches!(
            FormalContext::new(
                vec!["a".into(), "a".into()],
                vec![],
                vec![vec![], vec![]]
            ),
            Err(FcaError::DuplicateObject(_))
        ));
        assert!(matches!(
            FormalContext::new(vec!["a".into()], vec![cls("X")], vec![vec![false]]),
            Err(FcaError::EmptyColumn(_))
        ));
        assert!(matches!(
            FormalContext::new(vec!["a".into()], vec![cls("X")], vec![]),
            Err(FcaError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn attributes_are_sorted_with_columns() {
        let ctx = FormalContext::new(
            vec!["v1".into(), "v2".into()],
            vec![cls("B"), cls("A")],
            vec![vec![true, false], vec![false, true]],
        )
        .unwrap();
        assert_eq!(ctx.attributes(), &[cls("A"), cls("B")]);
        assert!(ctx.incident("v2", &cls("A")));
        assert!(ctx.incident("v1", &cls("B")));
        assert!(!ctx.incident("v1", &cls("A")));
    }

    #[test]
    fn derivation_examples() {
        let ctx = drawing_shapes_context();
        let both = ctx.derive_objects(&BTreeSet::from([cls("MyLine")]));
        assert_eq!(
            both,
            BTreeSet::from(["Release 1".to_string(), "Release 2".to_string()])
        );
        let only_r1 = ctx.derive_objects(&BTreeSet::from([cls("MyOval")]));
        assert_eq!(only_r1, BTreeSet::from(["Release 1".to_string()]));
        // Deriving the empty set yields the whole other universe.
        assert_eq!(ctx.derive_attributes(&BTreeSet::new()).len(), 8);
        assert_eq!(ctx.derive_objects(&BTreeSet::new()).len(), 2);
    }

    #[test]
    fn galois_connection_spot_check() {
        let ctx = drawing_shapes_context();
        let attrs = BTreeSet::from([cls("MyLine"), cls("MyOval")]);
        let objs = ctx.derive_objects(&attrs);
        let closed = ctx.derive_attributes(&objs);
        assert!(attrs.is_subset(&closed));
        // A ⊆ B' ⇔ B ⊆ A' for a couple of subsets.
        let a = BTreeSet::from(["Release 1".to_string()]);
        let b = BTreeSet::from([cls("MyOval")]);
        let a_in_b_derived = a.is_subset(&ctx.derive_objects(&b));
        let b_in_a_derived = b.is_subset(&ctx.derive_attributes(&a));
        assert_eq!(a_in_b_derived, b_in_a_derived);
    }

    #[test]
    fn drawing_shapes_poset_has_three_concepts() {
        let poset = build_aoc_poset(&drawing_shapes_context());
        assert_eq!(poset.concepts.len(), 3);

        let top = &poset.concepts[0];
        assert_eq!(top.extent.len(), 2);
        assert_eq!(
            names(&top.reduced_intent),
            BTreeSet::from(["MyLine", "DrawingShapes", "PaintJPanel", "MyShape"])
        );
        assert!(top.reduced_extent.is_empty());

        let r1 = &poset.concepts[1];
        assert_eq!(r1.extent, BTreeSet::from(["Release 1".to_string()]));
        assert_eq!(
            names(&r1.reduced_intent),
            BTreeSet::from(["MyRectangle", "MyOval"])
        );
        assert_eq!(r1.reduced_extent, BTreeSet::from(["Release 1".to_string()]));

        let r2 = &poset.concepts[2];
        assert_eq!(r2.extent, BTreeSet::from(["Release 2".to_string()]));
        assert_eq!(
            names(&r2.reduced_intent),
            BTreeSet::from(["MyRoundRectangle", "My3DRectangle"])
        );

        // Both child concepts cover directly to the top.
        assert_eq!(poset.hasse_edges, vec![(1, 0), (2, 0)]);
        assert_eq!(poset.top_concept().map(|c| c.extent.len()), Some(2));
    }

    #[test]
    fn identical_rows_collapse_to_one_concept() {
        let ctx = FormalContext::new(
            vec!["v1".into(), "v2".into(), "v3".into()],
            vec![cls("A"), cls("B")],
            vec![vec![true, true]; 3],
        )
        .unwrap();
        let poset = build_aoc_poset(&ctx);
        assert_eq!(poset.concepts.len(), 1);
        assert!(poset.hasse_edges.is_empty());
        let only = &poset.concepts[0];
        assert_eq!(only.extent.len(), 3);
        assert_eq!(only.reduced_extent.len(), 3);
        assert_eq!(only.reduced_intent.len(), 2);
    }

    #[test]
    fn empty_attribute_context_has_one_concept() {
        let ctx =
            FormalContext::new(vec!["v1".into(), "v2".into()], vec![], vec![vec![], vec![]])
                .unwrap();
        let poset = build_aoc_poset(&ctx);
        assert_eq!(poset.concepts.len(), 1);
        assert_eq!(poset.concepts[0].extent.len(), 2);
        assert!(poset.concepts[0].intent.is_empty());

        let lattice = brute_force_lattice(&ctx).unwrap();
        assert_eq!(lattice.len(), 1);
    }

    #[test]
    fn brute_force_finds_the_bottom_concept_too() {
        let ctx = drawing_shapes_context();
        let lattice = brute_force_lattice(&ctx).unwrap();
        assert_eq!(lattice.len(), 4);
        let bottom = lattice.iter().find(|c| c.extent.is_empty()).unwrap();
        assert_eq!(bottom.intent.len(), 8);
    }

    #[test]
    fn single_object_context_has_one_concept() {
        let ctx = FormalContext::new(
            vec!["only".into()],
            vec![cls("A")],
            vec![vec![true]],
        )
        .unwrap();
        assert_eq!(brute_force_lattice(&ctx).unwrap().len(), 1);
        assert_eq!(build_aoc_poset(&ctx).concepts.len(), 1);
    }

    #[test]
    fn oracle_refuses_large_contexts() {
        let objects: Vec<String> = (0..17).map(|i| format!("v{i}")).collect();
        let attributes = vec![cls("A")];
        let incidence = vec![vec![true]; 17];
        let ctx = FormalContext::new(objects, attributes, incidence).unwrap();
        assert!(matches!(
            brute_force_lattice(&ctx),
            Err(FcaError::OracleTooLarge(17))
        ));
    }

    #[test]
    fn build_context_from_models() {
        let m1 = CodeModel::new(
            "Release 1",
            [
                Identifier::package("shapes").unwrap(),
                cls("shapes.MyLine"),
                cls("shapes.MyOval"),
            ],
            [],
            10,
        )
        .unwrap();
        let m2 = CodeModel::new(
            "Release 2",
            [
                Identifier::package("shapes").unwrap(),
                cls("shapes.MyLine"),
                cls("shapes.My3DRectangle"),
            ],
            [],
            12,
        )
        .unwrap();
        let ctx = build_context(
            &[m1.clone(), m2.clone()],
            KindFilter::Only(IdentifierKind::Class),
        )
        .unwrap();
        assert_eq!(ctx.objects(), &["Release 1".to_string(), "Release 2".to_string()]);
        assert_eq!(ctx.attributes().len(), 3);
        assert!(ctx.incident("Release 1", &cls("shapes.MyOval")));
        assert!(!ctx.incident("Release 2", &cls("shapes.MyOval")));

        assert!(matches!(
            build_context(std::slice::from_ref(&m1), KindFilter::All),
            Err(FcaError::TooFewVariants(1))
        ));
        let dup = CodeModel::new("Release 1", [], [], 0).unwrap();
        assert!(matches!(
            build_context(&[m1, dup], KindFilter::All),
            Err(FcaError::DuplicateObject(_))
        ));
    }

    #[test]
    fn three_disjoint_models_give_single_cross_columns() {
        let mk = |name: &str, class_name: &str| {
            CodeModel::new(
                name,
                [Identifier::package("p").unwrap(), cls(&format!("p.{class_name}"))],
                [],
                1,
            )
            .unwrap()
        };
        let models = [mk("v1", "A"), mk("v2", "B"), mk("v3", "C")];
        let ctx = build_context(&models, KindFilter::Only(IdentifierKind::Class)).unwrap();
        for attr in ctx.attributes() {
            let crossed = ctx
                .objects()
                .iter()
                .filter(|o| ctx.incident(o, attr))
                .count();
            assert_eq!(crossed, 1);
        }
    }

    #[test]
    fn reduced_labels_partition_on_a_tricky_context() {
        // Three objects, one attribute shared by all, one shared by a pair,
        // pair-only object closures coincide with higher concepts.
        let ctx = FormalContext::new(
            vec!["v1".into(), "v2".into(), "v3".into()],
            vec![cls("All"), cls("Pair"), cls("Solo")],
            vec![
                vec![true, true, true],
                vec![true, true, false],
                vec![true, false, false],
            ],
        )
        .unwrap();
        let poset = build_aoc_poset(&ctx);
        let mut attr_seen = BTreeSet::new();
        let mut obj_seen = BTreeSet::new();
        for c in &poset.concepts {
            for a in &c.reduced_intent {
                assert!(attr_seen.insert(a.clone()), "attribute repeated");
            }
            for o in &c.reduced_extent {
                assert!(obj_seen.insert(o.clone()), "object repeated");
            }
        }
        assert_eq!(attr_seen.len(), 3);
        assert_eq!(obj_seen.len(), 3);
    }

    #[test]
    fn hasse_edges_are_covering_pairs() {
        // Diamond-shaped context: v1 and v2 share A; v1 has B, v2 has C;
        // v3 has everything.
        let ctx = FormalContext::new(
            vec!["v1".into(), "v2".into(), "v3".into()],
            vec![cls("A"), cls("B"), cls("C")],
            vec![
                vec![true, true, false],
                vec![true, false, true],
                vec![true, true, true],
            ],
        )
        .unwrap();
        let poset = build_aoc_poset(&ctx);
        for &(c, p) in &poset.hasse_edges {
            let child = &poset.concepts[c];
            let parent = &poset.concepts[p];
            assert!(child.extent.is_subset(&parent.extent));
            assert!(child.extent.len() < parent.extent.len());
            for (q, mid) in poset.concepts.iter().enumerate() {
                if q == c || q == p {
                    continue;
                }
                let strictly_between = child.extent.is_subset(&mid.extent)
                    && mid.extent.is_subset(&parent.extent)
                    && child.extent.len() < mid.extent.len()
                    && mid.extent.len() < parent.extent.len();
                assert!(!strictly_between, "edge ({c},{p}) is not covering");
            }
        }
    }

    #[test]
    fn concepts_satisfy_closure_via_derivation_operators() {
        let ctx = drawing_shapes_context();
        for c in build_aoc_poset(&ctx).concepts {
            assert_eq!(ctx.derive_attributes(&c.extent), c.intent);
            assert_eq!(ctx.derive_objects(&c.intent), c.extent);
        }
    }
}
