//! Source-tree parsing: turns a variant's directory of `.java` files into a
//! [`CodeModel`].
//!
//! The pipeline per file is [`tokenize`] → [`parse_compilation_unit`];
//! [`extract_variant`] walks the tree in deterministic path order, merges
//! the per-file contributions, and accumulates source statistics. Files that
//! cannot be read or decoded are skipped with a warning; only an unreadable
//! root directory is fatal.

mod grammar;
mod lexer;

pub use grammar::parse_compilation_unit;
pub use lexer::{count_nonblank_lines, tokenize, LexDiagnostic, Token, TokenKind};

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;
use walkdir::WalkDir;

use crate::model::{CodeModel, Identifier, ModelError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        })
    }
}

/// A problem found while lexing or parsing one file. Warnings mean content
/// was skipped; errors mean the grammar could not skip safely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub message: String,
    pub file: PathBuf,
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}: {}: {}",
            self.file.display(),
            self.line,
            self.column,
            self.severity,
            self.message
        )
    }
}

/// What one compilation unit adds to the variant model.
#[derive(Debug, Default)]
pub struct FileContribution {
    pub identifiers: Vec<Identifier>,
    pub inheritance: Vec<(String, String)>,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read source root `{path}`")]
    UnreadableRoot {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("extracted model is inconsistent: {0}")]
    Inconsistent(#[from] ModelError),
}

/// Walks `root` for `.java` files (lexicographic path order), parses each,
/// and merges the results into one model named `variant_name`.
pub fn extract_variant(
    root: &Path,
    variant_name: &str,
) -> Result<(CodeModel, Vec<Diagnostic>), ParseError> {
    fs::read_dir(root).map_err(|source| ParseError::UnreadableRoot {
        path: root.to_path_buf(),
        source,
    })?;

    let mut diagnostics = Vec::new();
    let mut files = Vec::new();
    for entry in WalkDir::new(root) {
        match entry {
            Ok(e) => {
                if e.file_type().is_file()
                    && e.path().extension().is_some_and(|ext| ext == "java")
                {
                    files.push(e.path().to_path_buf());
                }
            }
            Err(e) => {
                let path = e
                    .path()
                    .map_or_else(|| root.to_path_buf(), Path::to_path_buf);
                diagnostics.push(Diagnostic {
                    severity: Severity::Warning,
                    message: format!("cannot access `{}`, skipped: {e}", path.display()),
                    file: path,
                    line: 0,
                    column: 0,
                });
            }
        }
    }
    files.sort();

    let mut identifiers = Vec::new();
    let mut inheritance = Vec::new();
    let mut loc = 0u64;
    for path in files {
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) => {
                diagnostics.push(Diagnostic {
                    severity: Severity::Warning,
                    message: format!("cannot read file, skipped: {e}"),
                    file: path,
                    line: 0,
                    column: 0,
                });
                continue;
            }
        };
        let text = match String::from_utf8(bytes) {
            Ok(t) => t,
            Err(_) => {
                diagnostics.push(Diagnostic {
                    severity: Severity::Warning,
                    message: "not valid UTF-8, skipped".to_string(),
                    file: path,
                    line: 0,
                    column: 0,
                });
                continue;
            }
        };
        let text = text.strip_prefix('\u{feff}').unwrap_or(&text);
        loc += count_nonblank_lines(text);

        let (tokens, lex_diagnostics) = tokenize(text);
        diagnostics.extend(lex_diagnostics.into_iter().map(|d| Diagnostic {
            severity: Severity::Error,
            message: d.message,
            file: path.clone(),
            line: d.line,
            column: d.column,
        }));
        let (contribution, parse_diagnostics) = parse_compilation_unit(&tokens, &path);
        diagnostics.extend(parse_diagnostics);
        identifiers.extend(contribution.identifiers);
        inheritance.extend(contribution.inheritance);
    }

    let model = CodeModel::new(variant_name, identifiers, inheritance, loc)?;
    Ok((model, diagnostics))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::IdentifierKind;
    use std::collections::BTreeSet;

    fn write_tree(files: &[(&str, &str)]) -> tempfile::TempDir {
        let dir = tempfile::tempdir().unwrap();
        for (rel, content) in files {
            let path = dir.path().join(rel);
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(path, content).unwrap();
        }
        dir
    }

    #[test]
    fn merges_files_across_subdirectories() {
        let dir = write_tree(&[
            (
                "src/shapes/MyShape.java",
                "package shapes;\npublic interface MyShape { void draw(Graphics g); }\n",
            ),
            (
                "src/shapes/MyLine.java",
                "package shapes;\npublic class MyLine implements MyShape {\n  int x1;\n  public void draw(Graphics g) {}\n}\n",
            ),
            ("README.txt", "not java {{{"),
        ]);
        let (model, diagnostics) = extract_variant(dir.path(), "R1").unwrap();
        assert!(diagnostics.is_empty());
        assert_eq!(model.variant_name(), "R1");
        let classes: BTreeSet<String> = model
            .filter_by_kind(IdentifierKind::Class)
            .iter()
            .map(|c| c.qualified_name().to_string())
            .collect();
        assert_eq!(
            classes,
            BTreeSet::from(["shapes.MyShape".to_string(), "shapes.MyLine".to_string()])
        );
        assert_eq!(model.source_stats().nop, 1);
        // 2 + 5 non-blank lines; the .txt file does not count.
        assert_eq!(model.source_stats().loc, 7);
        assert!(model
            .inheritance()
            .contains(&("shapes.MyLine".to_string(), "MyShape".to_string())));
    }

    #[test]
    fn empty_directory_gives_empty_model() {
        let dir = tempfile::tempdir().unwrap();
        let (model, diagnostics) = extract_variant(dir.path(), "v").unwrap();
        assert!(diagnostics.is_empty());
        assert!(model.identifiers().is_empty());
        assert_eq!(model.source_stats().loc, 0);
    }

    #[test]
    fn missing_root_is_fatal() {
        let err = extract_variant(Path::new("/no/such/dir"), "v").unwrap_err();
        assert!(matches!(err, ParseError::UnreadableRoot { .. }));
    }

    #[test]
    fn non_utf8_file_is_skipped_with_warning() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("Bad.java"), [0xFF, 0xFE, 0x00, 0x01]).unwrap();
        fs::write(dir.path().join("Good.java"), "class Good {}").unwrap();
        let (model, diagnostics) = extract_variant(dir.path(), "v").unwrap();
        assert_eq!(diagnostics.len(), 1);
        assert_eq!(diagnostics[0].severity, Severity::Warning);
        assert!(model
            .identifiers()
            .iter()
            .any(|id| id.qualified_name() == "Good"));
    }

    #[test]
    fn bom_is_tolerated() {
        let dir = write_tree(&[("A.java", "\u{feff}package p;\nclass A {}\n")]);
        let (model, diagnostics) = extract_variant(dir.path(), "v").unwrap();
        assert!(diagnostics.is_empty());
        assert!(model
            .identifiers()
            .iter()
            .any(|id| id.qualified_name() == "p.A"));
        assert_eq!(model.source_stats().loc, 2);
    }

    #[test]
    fn repeated_runs_are_identical() {
        let dir = write_tree(&[
            ("b/B.java", "package b; class B { int x; }"),
            ("a/A.java", "package a; class A { void f() {} }"),
        ]);
        let (first, _) = extract_variant(dir.path(), "v").unwrap();
        let (second, _) = extract_variant(dir.path(), "v").unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn lex_errors_carry_the_file_path() {
        let dir = write_tree(&[("A.java", "class A { String s = \"oops; }\n")]);
        let (_, diagnostics) = extract_variant(dir.path(), "v").unwrap();
        assert!(diagnostics
            .iter()
            .any(|d| d.severity == Severity::Error
                && d.message.contains("unterminated string")
                && d.file.ends_with("A.java")));
    }
}
