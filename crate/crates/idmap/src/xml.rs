//! XML interchange format for extracted code models.
//!
//! One document per variant:
//!
//! ```xml
//! <?xml version="1.0" encoding="UTF-8"?>
//! <variant name="Release 1" loc="120">
//!   <package name="shapes">
//!     <class name="MyLine" implements="MyShape">
//!       <attribute name="x1"/>
//!       <method name="draw" params="Graphics"/>
//!     </class>
//!   </package>
//! </variant>
//! ```
//!
//! Nested classes nest as child `<class>` elements. The writer is fully
//! deterministic: children are emitted in kind order (attributes, methods,
//! classes) and lexicographically within each kind, and all declared
//! supertypes of a class are canonicalized into a single comma-joined
//! `implements` attribute. The reader additionally accepts an `extends`
//! attribute and dotted nested-class paths in `name`, so hand-written
//! documents have some latitude; both spellings read back to the same model.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{CodeModel, Identifier, IdentifierKind, ModelError, DEFAULT_PACKAGE};

#[derive(Debug, Error)]
pub enum XmlError {
    #[error("XML parse error at line {line}, column {column}: {message}")]
    Parse {
        message: String,
        line: u32,
        column: u32,
    },
    #[error("unknown element `{element}` at line {line}")]
    UnknownElement { element: String, line: u32 },
    #[error("element `{element}` at line {line} is missing its `{attribute}` attribute")]
    MissingAttribute {
        element: String,
        attribute: String,
        line: u32,
    },
    #[error("invalid value `{value}` for attribute `{attribute}` at line {line}")]
    InvalidAttribute {
        attribute: String,
        value: String,
        line: u32,
    },
    #[error("`{element}` element at line {line} is not allowed inside `{parent}`")]
    MisplacedElement {
        element: String,
        parent: String,
        line: u32,
    },
    #[error("inconsistent model: {0}")]
    Consistency(#[from] ModelError),
}

/// Renders a model as a UTF-8 XML document (see the module header for the
/// schema). Output is byte-deterministic for equal models.
pub fn write_xml(model: &CodeModel) -> String {
    let tree = ModelTree::build(model);
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let stats = model.source_stats();
    let variant_attrs = format!(
        " name=\"{}\" loc=\"{}\"",
        escape_attr(model.variant_name()),
        stats.loc
    );
    if tree.packages.is_empty() {
        let _ = writeln!(out, "<variant{variant_attrs}/>");
        return out;
    }
    let _ = writeln!(out, "<variant{variant_attrs}>");
    for (package, classes) in &tree.packages {
        if classes.is_empty() {
            let _ = writeln!(out, "  <package name=\"{}\"/>", escape_attr(package));
            continue;
        }
        let _ = writeln!(out, "  <package name=\"{}\">", escape_attr(package));
        for class in classes.values() {
            write_class(&mut out, class, &tree, 2);
        }
        let _ = writeln!(out, "  </package>");
    }
    let _ = writeln!(out, "</variant>");
    out
}

fn write_class(out: &mut String, class: &ClassNode, tree: &ModelTree, depth: usize) {
    let pad = "  ".repeat(depth);
    let mut open = format!("{pad}<class name=\"{}\"", escape_attr(&class.simple_name));
    if let Some(supers) = tree.supertypes.get(&class.qualified_name) {
        let joined = supers.iter().cloned().collect::<Vec<_>>().join(",");
        let _ = write!(open, " implements=\"{}\"", escape_attr(&joined));
    }
    if class.attributes.is_empty() && class.methods.is_empty() && class.children.is_empty() {
        let _ = writeln!(out, "{open}/>");
        return;
    }
    let _ = writeln!(out, "{open}>");
    for attr in &class.attributes {
        let _ = writeln!(out, "{pad}  <attribute name=\"{}\"/>", escape_attr(attr));
    }
    for (name, params) in &class.methods {
        if params.is_empty() {
            let _ = writeln!(out, "{pad}  <method name=\"{}\"/>", escape_attr(name));
        } else {
            let _ = writeln!(
                out,
                "{pad}  <method name=\"{}\" params=\"{}\"/>",
                escape_attr(name),
                escape_attr(params)
            );
        }
    }
    for child in class.children.values() {
        write_class(out, child, tree, depth + 1);
    }
    let _ = writeln!(out, "{pad}</class>");
}

/// Parses a document produced by [`write_xml`] (or hand-written to the same
/// schema) back into a model.
pub fn read_xml(text: &str) -> Result<CodeModel, XmlError> {
    let doc = roxmltree::Document::parse(text).map_err(|e| {
        let pos = e.pos();
        XmlError::Parse {
            message: e.to_string(),
            line: pos.row,
            column: pos.col,
        }
    })?;
    let root = doc.root_element();
    let line = |node: roxmltree::Node| doc.text_pos_at(node.range().start).row;

    if root.tag_name().name() != "variant" {
        return Err(XmlError::UnknownElement {
            element: root.tag_name().name().to_string(),
            line: line(root),
        });
    }
    let variant_name = require_attr(root, "name", line(root))?;
    let loc = match root.attribute("loc") {
        None => 0,
        Some(raw) => raw.parse().map_err(|_| XmlError::InvalidAttribute {
            attribute: "loc".to_string(),
            value: raw.to_string(),
            line: line(root),
        })?,
    };

    let mut identifiers = Vec::new();
    let mut inheritance = Vec::new();
    for child in root.children().filter(roxmltree::Node::is_element) {
        let name = child.tag_name().name();
        if name != "package" {
            return Err(misplaced_or_unknown(name, "variant", line(child)));
        }
        let package = require_attr(child, "name", line(child))?;
        identifiers.push(
            Identifier::new(IdentifierKind::Package, package.clone())
                .map_err(XmlError::Consistency)?,
        );
        let prefix = if package == DEFAULT_PACKAGE {
            String::new()
        } else {
            format!("{package}.")
        };
        for class in child.children().filter(roxmltree::Node::is_element) {
            if class.tag_name().name() != "class" {
                return Err(misplaced_or_unknown(
                    class.tag_name().name(),
                    "package",
                    line(class),
                ));
            }
            read_class(class, &prefix, &mut identifiers, &mut inheritance, &line)?;
        }
    }

    CodeModel::new(variant_name, identifiers, inheritance, loc).map_err(XmlError::Consistency)
}

fn read_class(
    node: roxmltree::Node,
    prefix: &str,
    identifiers: &mut Vec<Identifier>,
    inheritance: &mut Vec<(String, String)>,
    line: &dyn Fn(roxmltree::Node) -> u32,
) -> Result<(), XmlError> {
    let name = require_attr(node, "name", line(node))?;
    let qualified = format!("{prefix}{name}");
    identifiers.push(
        Identifier::new(IdentifierKind::Class, qualified.clone()).map_err(XmlError::Consistency)?,
    );
    for attr in ["extends", "implements"] {
        if let Some(list) = node.attribute(attr) {
            for supertype in list.split(',').filter(|s| !s.is_empty()) {
                inheritance.push((qualified.clone(), supertype.to_string()));
            }
        }
    }
    let member_prefix = format!("{qualified}.");
    for child in node.children().filter(roxmltree::Node::is_element) {
        match child.tag_name().name() {
            "attribute" => {
                let field = require_attr(child, "name", line(child))?;
                identifiers.push(
                    Identifier::new(IdentifierKind::Attribute, format!("{member_prefix}{field}"))
                        .map_err(XmlError::Consistency)?,
                );
            }
            "method" => {
                let method = require_attr(child, "name", line(child))?;
                let params = child.attribute("params").unwrap_or("");
                identifiers.push(
                    Identifier::new(
                        IdentifierKind::Method,
                        format!("{member_prefix}{method}({params})"),
                    )
                    .map_err(XmlError::Consistency)?,
                );
            }
            "class" => {
                read_class(child, &member_prefix, identifiers, inheritance, line)?;
            }
            other => return Err(misplaced_or_unknown(other, "class", line(child))),
        }
    }
    Ok(())
}

fn misplaced_or_unknown(element: &str, parent: &str, line: u32) -> XmlError {
    if matches!(element, "variant" | "package" | "class" | "attribute" | "method") {
        XmlError::MisplacedElement {
            element: element.to_string(),
            parent: parent.to_string(),
            line,
        }
    } else {
        XmlError::UnknownElement {
            element: element.to_string(),
            line,
        }
    }
}

fn require_attr(node: roxmltree::Node, attribute: &str, line: u32) -> Result<String, XmlError> {
    node.attribute(attribute)
        .map(str::to_string)
        .ok_or_else(|| XmlError::MissingAttribute {
            element: node.tag_name().name().to_string(),
            attribute: attribute.to_string(),
            line,
        })
}

fn escape_attr(value: &str) -> String {
    let mut out = String::with_capacity(value.len());
    for c in value.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

/// The model rearranged as the element tree the writer walks: packages to
/// top-level classes, classes to members and nested classes.
struct ModelTree {
    packages: BTreeMap<String, BTreeMap<String, ClassNode>>,
    supertypes: BTreeMap<String, BTreeSet<String>>,
}

struct ClassNode {
    qualified_name: String,
    simple_name: String,
    attributes: Vec<String>,
    methods: Vec<(String, String)>,
    children: BTreeMap<String, ClassNode>,
}

impl ModelTree {
    fn build(model: &CodeModel) -> Self {
        let classes: BTreeSet<&str> = model
            .identifiers()
            .iter()
            .filter(|id| id.kind() == IdentifierKind::Class)
            .map(Identifier::qualified_name)
            .collect();

        let mut packages: BTreeMap<String, BTreeMap<String, ClassNode>> = BTreeMap::new();
        let mut nodes: BTreeMap<String, ClassNode> = BTreeMap::new();
        // BTreeSet iteration yields shorter (owner) names before the nested
        // names they prefix, so owners always exist when children arrive.
        for id in model.identifiers() {
            match id.kind() {
                IdentifierKind::Package => {
                    packages.entry(id.qualified_name().to_string()).or_default();
                }
                IdentifierKind::Class => {
                    nodes.insert(
                        id.qualified_name().to_string(),
                        ClassNode {
                            qualified_name: id.qualified_name().to_string(),
                            simple_name: id.simple_name().to_string(),
                            attributes: Vec::new(),
                            methods: Vec::new(),
                            children: BTreeMap::new(),
                        },
                    );
                }
                IdentifierKind::Attribute => {
                    let owner = id.owner_name().expect("validated by CodeModel::new");
                    nodes
                        .get_mut(owner)
                        .expect("validated by CodeModel::new")
                        .attributes
                        .push(id.simple_name().to_string());
                }
                IdentifierKind::Method => {
                    let owner = id.owner_name().expect("validated by CodeModel::new");
                    let signature = id
                        .qualified_name()
                        .split_once('(')
                        .map(|(_, sig)| sig.trim_end_matches(')'))
                        .unwrap_or("");
                    nodes
                        .get_mut(owner)
                        .expect("validated by CodeModel::new")
                        .methods
                        .push((id.simple_name().to_string(), signature.to_string()));
                }
            }
        }

        // Attach classes to their parents, deepest names first so that a
        // nested class moves into its owner before the owner itself moves.
        let mut names: Vec<String> = nodes.keys().cloned().collect();
        names.sort_by_key(|n| std::cmp::Reverse(n.len()));
        for name in names {
            let node = nodes.remove(&name).expect("drained exactly once");
            let owner = node
                .qualified_name
                .rsplit_once('.')
                .map(|(owner, _)| owner.to_string());
            match owner {
                // A class owner that is itself a class makes this a nested
                // class; otherwise the prefix is its package.
                Some(owner) if classes.contains(owner.as_str()) => {
                    if let Some(parent) = nodes.get_mut(&owner) {
                        parent.children.insert(node.simple_name.clone(), node);
                    } else {
                        // The owner was already attached (same length can't
                        // happen: owners are strictly shorter). Unreachable
                        // by the length ordering.
                        unreachable!("owner attached before child");
                    }
                }
                Some(owner) => {
                    packages
                        .entry(owner)
                        .or_default()
                        .insert(node.simple_name.clone(), node);
                }
                None => {
                    packages
                        .entry(DEFAULT_PACKAGE.to_string())
                        .or_default()
                        .insert(node.simple_name.clone(), node);
                }
            }
        }

        let mut supertypes: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for (subtype, supertype) in model.inheritance() {
            supertypes
                .entry(subtype.clone())
                .or_default()
                .insert(supertype.clone());
        }

        ModelTree {
            packages,
            supertypes,
        }
    }
}
