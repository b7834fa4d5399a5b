//! Variant code inventory: identifier identity, per-variant models, and
//! source statistics.
//!
//! A [`CodeModel`] is the flat inventory of named program entities extracted
//! from one variant's source tree, together with its declared inheritance
//! edges. Identifier identity is the pair (kind, qualified name); qualified
//! names are dot-separated paths, with method names carrying a parenthesized
//! parameter-type signature.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The reserved name under which the default (unnamed) package is recorded.
pub const DEFAULT_PACKAGE: &str = "(default)";

/// The four kinds of named program entities a variant model tracks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentifierKind {
    Package,
    Class,
    Attribute,
    Method,
}

impl IdentifierKind {
    /// All kinds, in canonical order.
    pub const ALL: [IdentifierKind; 4] = [
        IdentifierKind::Package,
        IdentifierKind::Class,
        IdentifierKind::Attribute,
        IdentifierKind::Method,
    ];

    /// Singular lowercase name, as used in tagged identifier strings.
    pub fn singular(self) -> &'static str {
        match self {
            IdentifierKind::Package => "package",
            IdentifierKind::Class => "class",
            IdentifierKind::Attribute => "attribute",
            IdentifierKind::Method => "method",
        }
    }

    /// Plural lowercase name, as used for map names and output files.
    pub fn plural(self) -> &'static str {
        match self {
            IdentifierKind::Package => "packages",
            IdentifierKind::Class => "classes",
            IdentifierKind::Attribute => "attributes",
            IdentifierKind::Method => "methods",
        }
    }
}

impl fmt::Display for IdentifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.singular())
    }
}

impl FromStr for IdentifierKind {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "package" => Ok(IdentifierKind::Package),
            "class" => Ok(IdentifierKind::Class),
            "attribute" => Ok(IdentifierKind::Attribute),
            "method" => Ok(IdentifierKind::Method),
            other => Err(ModelError::UnknownKind(other.to_string())),
        }
    }
}

/// Selects one identifier kind or all of them; maps, contexts, and ground
/// truths are always scoped by a filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KindFilter {
    All,
    Only(IdentifierKind),
}

impl KindFilter {
    /// The five filters in canonical order: the four kinds, then `All`.
    pub const ALL_MAPS: [KindFilter; 5] = [
        KindFilter::Only(IdentifierKind::Package),
        KindFilter::Only(IdentifierKind::Class),
        KindFilter::Only(IdentifierKind::Attribute),
        KindFilter::Only(IdentifierKind::Method),
        KindFilter::All,
    ];

    /// Map name: `packages`, `classes`, `attributes`, `methods`, or `all`.
    pub fn name(self) -> &'static str {
        match self {
            KindFilter::All => "all",
            KindFilter::Only(kind) => kind.plural(),
        }
    }

    pub fn matches(self, kind: IdentifierKind) -> bool {
        match self {
            KindFilter::All => true,
            KindFilter::Only(k) => k == kind,
        }
    }
}

impl fmt::Display for KindFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KindFilter {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(KindFilter::All),
            "packages" => Ok(KindFilter::Only(IdentifierKind::Package)),
            "classes" => Ok(KindFilter::Only(IdentifierKind::Class)),
            "attributes" => Ok(KindFilter::Only(IdentifierKind::Attribute)),
            "methods" => Ok(KindFilter::Only(IdentifierKind::Method)),
            other => Err(ModelError::UnknownKind(other.to_string())),
        }
    }
}

/// A named program entity. Identity is `(kind, qualified_name)`.
///
/// Qualified-name shapes by kind:
/// - package: dotted package path (`shapes.util`), or `(default)`
/// - class: package path + dotted nested-class path (`shapes.Outer.Inner`);
///   classes in the default package carry no prefix
/// - attribute: owning class + field name (`shapes.MyLine.x1`)
/// - method: owning class + name + `(` comma-joined parameter types `)`
///   (`shapes.MyLine.draw(Graphics)`)
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identifier {
    kind: IdentifierKind,
    qualified_name: String,
}

impl Identifier {
    pub fn new(
        kind: IdentifierKind,
        qualified_name: impl Into<String>,
    ) -> Result<Self, ModelError> {
        let qualified_name = qualified_name.into();
        if qualified_name.is_empty() {
            return Err(ModelError::EmptyName);
        }
        if qualified_name.chars().any(char::is_whitespace) {
            return Err(ModelError::WhitespaceInName(qualified_name));
        }
        Ok(Identifier {
            kind,
            qualified_name,
        })
    }

    pub fn package(name: impl Into<String>) -> Result<Self, ModelError> {
        Identifier::new(IdentifierKind::Package, name)
    }

    pub fn class(name: impl Into<String>) -> Result<Self, ModelError> {
        Identifier::new(IdentifierKind::Class, name)
    }

    pub fn attribute(name: impl Into<String>) -> Result<Self, ModelError> {
        Identifier::new(IdentifierKind::Attribute, name)
    }

    pub fn method(name: impl Into<String>) -> Result<Self, ModelError> {
        Identifier::new(IdentifierKind::Method, name)
    }

    pub fn kind(&self) -> IdentifierKind {
        self.kind
    }

    pub fn qualified_name(&self) -> &str {
        &self.qualified_name
    }

    /// Last segment of the qualified name; for methods, the bare method name
    /// without the signature suffix.
    pub fn simple_name(&self) -> &str {
        let base = match self.kind {
            IdentifierKind::Method => self
                .qualified_name
                .split_once('(')
                .map_or(self.qualified_name.as_str(), |(head, _)| head),
            _ => self.qualified_name.as_str(),
        };
        base.rsplit_once('.').map_or(base, |(_, last)| last)
    }

    /// Display form restricted to the entity's own name: for methods the
    /// simple name plus signature, otherwise the simple name.
    pub fn simple_display(&self) -> String {
        match self.kind {
            IdentifierKind::Method => match self.qualified_name.split_once('(') {
                Some((head, sig)) => {
                    let name = head.rsplit_once('.').map_or(head, |(_, last)| last);
                    format!("{name}({sig}")
                }
                None => self.simple_name().to_string(),
            },
            _ => self.simple_name().to_string(),
        }
    }

    /// One-line tagged form, `<kind> <qualified_name>`, used by the JSON map
    /// schema and the ground-truth file format.
    pub fn tagged(&self) -> String {
        format!("{} {}", self.kind.singular(), self.qualified_name)
    }

    /// Parses the tagged form produced by [`Identifier::tagged`].
    pub fn from_tagged(s: &str) -> Result<Self, ModelError> {
        let (kind, name) = s
            .split_once(' ')
            .ok_or_else(|| ModelError::MalformedTagged(s.to_string()))?;
        Identifier::new(kind.parse()?, name.trim())
    }

    /// The qualified name of the enclosing scope: the owning class for
    /// attributes and methods, the enclosing class or package for nested
    /// classes. `None` for packages and unprefixed names.
    pub fn owner_name(&self) -> Option<&str> {
        if self.kind == IdentifierKind::Package {
            return None;
        }
        let base = match self.kind {
            IdentifierKind::Method => self
                .qualified_name
                .split_once('(')
                .map_or(self.qualified_name.as_str(), |(head, _)| head),
            _ => self.qualified_name.as_str(),
        };
        base.rsplit_once('.').map(|(owner, _)| owner)
    }
}

impl fmt::Display for Identifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.qualified_name)
    }
}

/// Descriptive size statistics for one variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceStats {
    /// Non-blank source lines (comments count; blank lines do not).
    pub loc: u64,
    /// Number of package identifiers.
    pub nop: usize,
    /// Number of class identifiers.
    pub noc: usize,
}

/// The identifier inventory of one software product variant.
///
/// Immutable after construction; all invariants are checked by
/// [`CodeModel::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeModel {
    variant_name: String,
    identifiers: BTreeSet<Identifier>,
    inheritance: BTreeSet<(String, String)>,
    source_stats: SourceStats,
}

impl CodeModel {
    /// Builds a model and checks its structural invariants: attributes and
    /// methods must be nested under a class of the model, and every class
    /// must sit under a known package or enclosing class. Duplicate
    /// identifiers collapse (set semantics). `nop`/`noc` are derived from
    /// the identifier set.
    pub fn new(
        variant_name: impl Into<String>,
        identifiers: impl IntoIterator<Item = Identifier>,
        inheritance: impl IntoIterator<Item = (String, String)>,
        loc: u64,
    ) -> Result<Self, ModelError> {
        let variant_name = variant_name.into();
        let identifiers: BTreeSet<Identifier> = identifiers.into_iter().collect();
        let inheritance: BTreeSet<(String, String)> = inheritance.into_iter().collect();

        let packages: BTreeSet<&str> = identifiers
            .iter()
            .filter(|id| id.kind() == IdentifierKind::Package)
            .map(Identifier::qualified_name)
            .collect();
        let classes: BTreeSet<&str> = identifiers
            .iter()
            .filter(|id| id.kind() == IdentifierKind::Class)
            .map(Identifier::qualified_name)
            .collect();

        for id in &identifiers {
            match id.kind() {
                IdentifierKind::Package => {}
                IdentifierKind::Class => {
                    // The enclosing scope is either a nested-class owner or a
                    // package; a prefix-free class lives in "(default)".
                    let ok = match id.owner_name() {
                        Some(owner) => classes.contains(owner) || packages.contains(owner),
                        None => packages.contains(DEFAULT_PACKAGE),
                    };
                    if !ok {
                        return Err(ModelError::MissingOwner {
                            kind: id.kind(),
                            name: id.qualified_name().to_string(),
                        });
                    }
                }
                IdentifierKind::Attribute | IdentifierKind::Method => {
                    let owner = id.owner_name();
                    if owner.is_none_or(|o| !classes.contains(o)) {
                        return Err(ModelError::MissingOwner {
                            kind: id.kind(),
                            name: id.qualified_name().to_string(),
                        });
                    }
                }
            }
        }

        for (subtype, supertype) in &inheritance {
            if !classes.contains(subtype.as_str()) {
                return Err(ModelError::UnknownSubtype(subtype.clone()));
            }
            if supertype.is_empty()
                || supertype.chars().any(|c| c.is_whitespace() || c == ',')
            {
                return Err(ModelError::BadSupertype(supertype.clone()));
            }
        }

        let source_stats = SourceStats {
            loc,
            nop: packages.len(),
            noc: classes.len(),
        };
        Ok(CodeModel {
            variant_name,
            identifiers,
            inheritance,
            source_stats,
        })
    }

    /// An empty model: no identifiers, loc 0.
    pub fn empty(variant_name: impl Into<String>) -> Self {
        CodeModel {
            variant_name: variant_name.into(),
            identifiers: BTreeSet::new(),
            inheritance: BTreeSet::new(),
            source_stats: SourceStats {
                loc: 0,
                nop: 0,
                noc: 0,
            },
        }
    }

    pub fn variant_name(&self) -> &str {
        &self.variant_name
    }

    pub fn identifiers(&self) -> &BTreeSet<Identifier> {
        &self.identifiers
    }

    /// Declared inheritance edges, as (subtype qualified class name,
    /// supertype name as written) pairs.
    pub fn inheritance(&self) -> &BTreeSet<(String, String)> {
        &self.inheritance
    }

    pub fn source_stats(&self) -> SourceStats {
        self.source_stats
    }

    /// The identifiers of one kind; a subset of [`CodeModel::identifiers`].
    pub fn filter_by_kind(&self, kind: IdentifierKind) -> BTreeSet<Identifier> {
        self.identifiers
            .iter()
            .filter(|id| id.kind() == kind)
            .cloned()
            .collect()
    }

    /// The identifiers selected by a filter (all of them for
    /// [`KindFilter::All`]).
    pub fn identifiers_matching(&self, filter: KindFilter) -> BTreeSet<Identifier> {
        self.identifiers
            .iter()
            .filter(|id| filter.matches(id.kind()))
            .cloned()
            .collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("identifier name is empty")]
    EmptyName,
    #[error("identifier name `{0}` contains whitespace")]
    WhitespaceInName(String),
    #[error("unknown identifier kind `{0}`")]
    UnknownKind(String),
    #[error("malformed tagged identifier `{0}` (expected `<kind> <name>`)")]
    MalformedTagged(String),
    #[error("{kind} `{name}` has no enclosing declaration in the model")]
    MissingOwner { kind: IdentifierKind, name: String },
    #[error("inheritance edge names `{0}` as subtype, but no such class exists")]
    UnknownSubtype(String),
    #[error("supertype name `{0}` is empty or contains whitespace or commas")]
    BadSupertype(String),
}
