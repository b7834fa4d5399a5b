//! Declaration-level grammar: recognizes package, type, field, method, and
//! constructor declarations and skips everything else.
//!
//! Bodies (method bodies, initializer blocks, anonymous classes) are skipped
//! by balanced-brace matching, so statements and expressions never produce
//! identifiers. Generic arguments are stripped from every type position;
//! annotations are skipped wholesale; varargs `T...` becomes `T[]`. All
//! recognition is token-driven: the lexer has already made comments and
//! literals opaque.

use std::path::Path;

use crate::model::{Identifier, IdentifierKind, DEFAULT_PACKAGE};

use super::lexer::{Token, TokenKind};
use super::{Diagnostic, FileContribution, Severity};

/// Parses one file's token stream into its identifier contribution.
/// Recognition is best-effort: malformed regions produce diagnostics and the
/// file contributes whatever was recognized before and after them.
pub fn parse_compilation_unit(tokens: &[Token], file: &Path) -> (FileContribution, Vec<Diagnostic>) {
    let significant: Vec<&Token> = tokens
        .iter()
        .filter(|t| !matches!(t.kind, TokenKind::Whitespace | TokenKind::Comment))
        .collect();
    let mut parser = Parser {
        tokens: significant,
        pos: 0,
        file,
        package: None,
        types_seen: false,
        out: FileContribution::default(),
        diagnostics: Vec::new(),
    };
    parser.parse_unit();
    (parser.out, parser.diagnostics)
}

struct Parser<'a> {
    tokens: Vec<&'a Token>,
    pos: usize,
    file: &'a Path,
    package: Option<String>,
    types_seen: bool,
    out: FileContribution,
    diagnostics: Vec<Diagnostic>,
}

impl<'a> Parser<'a> {
    fn cur(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos).copied()
    }

    fn peek(&self, ahead: usize) -> Option<&'a Token> {
        self.tokens.get(self.pos + ahead).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn at_punct(&self, c: char) -> bool {
        self.cur().is_some_and(|t| t.is_punct(c))
    }

    /// Position of the current token, or of the last token for end-of-file
    /// diagnostics.
    fn here(&self) -> (u32, u32) {
        self.cur()
            .or_else(|| self.tokens.last().copied())
            .map_or((1, 1), |t| (t.line, t.column))
    }

    fn diagnose(&mut self, severity: Severity, message: impl Into<String>) {
        let (line, column) = self.here();
        self.diagnostics.push(Diagnostic {
            severity,
            message: message.into(),
            file: self.file.to_path_buf(),
            line,
            column,
        });
    }

    fn add_identifier(&mut self, kind: IdentifierKind, name: String) {
        match Identifier::new(kind, name) {
            Ok(id) => self.out.identifiers.push(id),
            Err(e) => self.diagnose(Severity::Error, format!("rejected {kind} name: {e}")),
        }
    }

    fn scope_prefix(&self) -> String {
        match &self.package {
            Some(p) => format!("{p}."),
            None => String::new(),
        }
    }

    /// True when the current token opens a `record` declaration (a
    /// contextual keyword: only when followed by a name and a component list
    /// or type-parameter list).
    fn at_record_decl(&self) -> bool {
        self.cur().is_some_and(|t| t.is_word("record"))
            && self.peek(1).is_some_and(|t| t.kind == TokenKind::Word)
            && self
                .peek(2)
                .is_some_and(|t| t.is_punct('(') || t.is_punct('<'))
    }

    fn parse_unit(&mut self) {
        while let Some(tok) = self.cur() {
            if tok.is_keyword("package") && self.package.is_none() && !self.types_seen {
                self.parse_package();
            } else if tok.is_keyword("import") {
                while let Some(t) = self.cur() {
                    self.bump();
                    if t.is_punct(';') {
                        break;
                    }
                }
            } else if tok.is_keyword("class") || tok.is_keyword("interface") || tok.is_keyword("enum")
            {
                let prefix = self.scope_prefix();
                self.parse_type(&prefix);
            } else if tok.is_punct('@') && self.peek(1).is_some_and(|t| t.is_keyword("interface")) {
                self.bump();
                let prefix = self.scope_prefix();
                self.parse_type(&prefix);
            } else if tok.is_punct('@') {
                self.skip_annotation();
            } else if self.at_record_decl() {
                let prefix = self.scope_prefix();
                self.parse_record(&prefix);
            } else if tok.is_punct('{') {
                self.skip_braces();
            } else {
                self.bump();
            }
        }
        if self.types_seen && self.package.is_none() {
            self.add_identifier(IdentifierKind::Package, DEFAULT_PACKAGE.to_string());
        }
    }

    fn parse_package(&mut self) {
        self.bump();
        let mut name = match self.cur() {
            Some(t) if t.kind == TokenKind::Word => {
                let n = t.text.clone();
                self.bump();
                n
            }
            _ => {
                self.diagnose(Severity::Error, "expected package name after `package`");
                while let Some(t) = self.cur() {
                    self.bump();
                    if t.is_punct(';') {
                        break;
                    }
                }
                return;
            }
        };
        while self.at_punct('.') && self.peek(1).is_some_and(|t| t.kind == TokenKind::Word) {
            self.bump();
            let t = self.cur().expect("peeked");
            name.push('.');
            name.push_str(&t.text);
            self.bump();
        }
        if self.at_punct(';') {
            self.bump();
        }
        self.add_identifier(IdentifierKind::Package, name.clone());
        self.package = Some(name);
    }

    /// Parses a `class`/`interface`/`enum` declaration; the current token is
    /// the declaring keyword. All three produce Class-kind identifiers.
    fn parse_type(&mut self, scope_prefix: &str) {
        let decl_kw = self.cur().expect("caller checked").text.clone();
        self.bump();
        let name = match self.cur() {
            Some(t) if t.kind == TokenKind::Word => {
                let n = t.text.clone();
                self.bump();
                n
            }
            _ => {
                self.diagnose(
                    Severity::Error,
                    format!("expected type name after `{decl_kw}`"),
                );
                return;
            }
        };
        let qualified = format!("{scope_prefix}{name}");
        self.add_identifier(IdentifierKind::Class, qualified.clone());
        self.types_seen = true;

        // Header: type parameters, extends/implements clauses, annotations.
        loop {
            match self.cur() {
                None => {
                    self.diagnose(
                        Severity::Error,
                        format!("unexpected end of file in declaration of `{qualified}`"),
                    );
                    return;
                }
                Some(t) if t.is_punct('{') => break,
                Some(t) if t.is_punct(';') => {
                    self.bump();
                    return;
                }
                Some(t) if t.is_punct('<') => self.skip_angles(),
                Some(t) if t.is_punct('@') => self.skip_annotation(),
                Some(t) if t.is_keyword("extends") || t.is_keyword("implements") => {
                    self.bump();
                    self.parse_supertype_list(&qualified);
                }
                Some(_) => self.bump(),
            }
        }
        self.bump();
        if decl_kw == "enum" {
            self.parse_enum_constants(&qualified);
        }
        self.parse_members(&qualified);
    }

    /// Parses a `record` declaration (Class kind; components are not
    /// modeled). The current token is the contextual word `record`.
    fn parse_record(&mut self, scope_prefix: &str) {
        self.bump();
        let name = self.cur().expect("checked by at_record_decl").text.clone();
        self.bump();
        let qualified = format!("{scope_prefix}{name}");
        self.add_identifier(IdentifierKind::Class, qualified.clone());
        self.types_seen = true;
        if self.at_punct('<') {
            self.skip_angles();
        }
        if self.at_punct('(') {
            self.skip_parens();
        }
        loop {
            match self.cur() {
                None => {
                    self.diagnose(
                        Severity::Error,
                        format!("unexpected end of file in declaration of `{qualified}`"),
                    );
                    return;
                }
                Some(t) if t.is_punct('{') => break,
                Some(t) if t.is_punct(';') => {
                    self.bump();
                    return;
                }
                Some(t) if t.is_punct('@') => self.skip_annotation(),
                Some(t) if t.is_keyword("implements") => {
                    self.bump();
                    self.parse_supertype_list(&qualified);
                }
                Some(_) => self.bump(),
            }
        }
        self.bump();
        self.parse_members(&qualified);
    }

    /// Collects the comma-separated type names after `extends`/`implements`.
    /// Generic arguments are stripped; names are recorded as written.
    fn parse_supertype_list(&mut self, subtype: &str) {
        loop {
            while self.at_punct('@') {
                self.skip_annotation();
            }
            let mut name = match self.cur() {
                Some(t) if t.kind == TokenKind::Word => {
                    let n = t.text.clone();
                    self.bump();
                    n
                }
                _ => {
                    self.diagnose(Severity::Warning, "expected a supertype name");
                    return;
                }
            };
            loop {
                if self.at_punct('.') && self.peek(1).is_some_and(|t| t.kind == TokenKind::Word) {
                    self.bump();
                    name.push('.');
                    name.push_str(&self.cur().expect("peeked").text);
                    self.bump();
                } else if self.at_punct('<') {
                    self.skip_angles();
                } else {
                    break;
                }
            }
            self.out.inheritance.push((subtype.to_string(), name));
            if self.at_punct(',') {
                self.bump();
            } else {
                return;
            }
        }
    }

    /// Parses enum constants (as Attributes of the enum class) up to the
    /// `;` that opens the member section, or leaves the closing `}` for the
    /// member loop.
    fn parse_enum_constants(&mut self, class_qualified: &str) {
        loop {
            while self.at_punct('@') {
                self.skip_annotation();
            }
            match self.cur() {
                None => return,
                Some(t) if t.is_punct(';') => {
                    self.bump();
                    return;
                }
                Some(t) if t.is_punct('}') => return,
                Some(t) if t.kind == TokenKind::Word => {
                    self.add_identifier(
                        IdentifierKind::Attribute,
                        format!("{class_qualified}.{}", t.text),
                    );
                    self.bump();
                    if self.at_punct('(') {
                        self.skip_parens();
                    }
                    if self.at_punct('{') {
                        self.skip_braces();
                    }
                    if self.at_punct(',') {
                        self.bump();
                    }
                }
                Some(_) => self.bump(),
            }
        }
    }

    /// Parses class-body members until the matching `}` (consumed).
    fn parse_members(&mut self, class_qualified: &str) {
        let member_prefix = format!("{class_qualified}.");
        loop {
            match self.cur() {
                None => {
                    self.diagnose(
                        Severity::Error,
                        format!("unbalanced braces at end of file in body of `{class_qualified}`"),
                    );
                    return;
                }
                Some(t) if t.is_punct('}') => {
                    self.bump();
                    return;
                }
                Some(t) if t.is_punct(';') => self.bump(),
                Some(t) if t.is_punct('{') => self.skip_braces(),
                Some(t)
                    if t.is_keyword("class") || t.is_keyword("interface") || t.is_keyword("enum") =>
                {
                    self.parse_type(&member_prefix);
                }
                Some(t)
                    if t.is_punct('@')
                        && self.peek(1).is_some_and(|t| t.is_keyword("interface")) =>
                {
                    self.bump();
                    self.parse_type(&member_prefix);
                }
                Some(t) if t.is_punct('@') => self.skip_annotation(),
                Some(_) if self.at_record_decl() => self.parse_record(&member_prefix),
                Some(_) => self.parse_member(class_qualified),
            }
        }
    }

    /// Parses one field/method/constructor/initializer member. The header
    /// (modifiers, type, name) is collected up to the first structural
    /// token, which decides what the member is.
    fn parse_member(&mut self, class_qualified: &str) {
        let mut header: Vec<&'a Token> = Vec::new();
        loop {
            match self.cur() {
                None => {
                    self.diagnose(
                        Severity::Error,
                        format!("unbalanced braces at end of file in body of `{class_qualified}`"),
                    );
                    return;
                }
                Some(t) if t.is_punct('<') => self.skip_angles(),
                Some(t) if t.is_punct('@') => self.skip_annotation(),
                Some(t)
                    if t.is_keyword("class") || t.is_keyword("interface") || t.is_keyword("enum") =>
                {
                    // Modifiers led into a nested type declaration.
                    self.parse_type(&format!("{class_qualified}."));
                    return;
                }
                Some(t) if t.is_punct('(') => {
                    self.bump();
                    self.parse_method(class_qualified, &header);
                    return;
                }
                Some(t) if t.is_punct('=') || t.is_punct(',') || t.is_punct(';') => {
                    self.parse_fields(class_qualified, &header);
                    return;
                }
                Some(t) if t.is_punct('{') => {
                    // An initializer block (`static { ... }` or `{ ... }`);
                    // nothing to record.
                    self.skip_braces();
                    return;
                }
                Some(t) if t.is_punct('}') => return,
                Some(t) => {
                    header.push(t);
                    self.bump();
                }
            }
        }
    }

    /// Field declarators. The current token is the stop token (`=`, `,`, or
    /// `;`); `header` holds the modifiers, type, and first declarator name.
    fn parse_fields(&mut self, class_qualified: &str, header: &[&Token]) {
        let name_idx = header
            .iter()
            .rposition(|t| t.kind == TokenKind::Word)
            .filter(|&i| i > 0);
        match name_idx {
            Some(i) => {
                let name = header[i].text.clone();
                self.add_identifier(
                    IdentifierKind::Attribute,
                    format!("{class_qualified}.{name}"),
                );
            }
            None => {
                // No recognizable `type name` shape; skip the statement-like
                // remainder without recording anything.
                self.diagnose(Severity::Warning, "skipping unrecognized class-body member");
            }
        }
        loop {
            match self.cur() {
                None => {
                    self.diagnose(
                        Severity::Error,
                        format!("unbalanced braces at end of file in body of `{class_qualified}`"),
                    );
                    return;
                }
                Some(t) if t.is_punct(';') => {
                    self.bump();
                    return;
                }
                Some(t) if t.is_punct('}') => return,
                Some(t) if t.is_punct('=') => {
                    self.bump();
                    self.skip_initializer();
                }
                Some(t) if t.is_punct(',') => {
                    self.bump();
                    if let Some(t) = self.cur() {
                        if t.kind == TokenKind::Word && name_idx.is_some() {
                            self.add_identifier(
                                IdentifierKind::Attribute,
                                format!("{class_qualified}.{}", t.text),
                            );
                            self.bump();
                        }
                    }
                }
                Some(_) => self.bump(),
            }
        }
    }

    /// A method or constructor. The opening `(` is already consumed;
    /// `header` ends with the member name.
    fn parse_method(&mut self, class_qualified: &str, header: &[&Token]) {
        let name = header
            .iter()
            .rev()
            .find(|t| t.kind == TokenKind::Word)
            .map(|t| t.text.clone());
        let params = self.parse_params(class_qualified);
        match name {
            Some(name) => {
                let signature = params.join(",");
                self.add_identifier(
                    IdentifierKind::Method,
                    format!("{class_qualified}.{name}({signature})"),
                );
            }
            None => {
                self.diagnose(
                    Severity::Warning,
                    "skipping parenthesized class-body member with no name",
                );
            }
        }
        // Tail: throws clause, annotation-element default, then `;` or body.
        loop {
            match self.cur() {
                None => {
                    self.diagnose(
                        Severity::Error,
                        format!("unbalanced braces at end of file in body of `{class_qualified}`"),
                    );
                    return;
                }
                Some(t) if t.is_punct(';') => {
                    self.bump();
                    return;
                }
                Some(t) if t.is_punct('{') => {
                    self.skip_braces();
                    return;
                }
                Some(t) if t.is_punct('}') => return,
                Some(t) if t.is_punct('@') => self.skip_annotation(),
                Some(_) => self.bump(),
            }
        }
    }

    /// Parses a parameter list up to the matching `)` and returns the
    /// parameter type names as written (generics stripped, varargs as
    /// arrays, C-style brackets moved onto the type).
    fn parse_params(&mut self, class_qualified: &str) -> Vec<String> {
        let mut groups: Vec<Vec<&'a Token>> = vec![Vec::new()];
        let mut depth = 1u32;
        loop {
            match self.cur() {
                None => {
                    self.diagnose(
                        Severity::Error,
                        format!(
                            "unbalanced parentheses at end of file in body of `{class_qualified}`"
                        ),
                    );
                    break;
                }
                Some(t) if t.is_punct('<') => self.skip_angles(),
                Some(t) if t.is_punct('@') => self.skip_annotation(),
                Some(t) if t.is_punct('(') => {
                    depth += 1;
                    groups.last_mut().expect("non-empty").push(t);
                    self.bump();
                }
                Some(t) if t.is_punct(')') => {
                    depth -= 1;
                    if depth == 0 {
                        self.bump();
                        break;
                    }
                    groups.last_mut().expect("non-empty").push(t);
                    self.bump();
                }
                Some(t) if t.is_punct(',') && depth == 1 => {
                    groups.push(Vec::new());
                    self.bump();
                }
                Some(t) => {
                    groups.last_mut().expect("non-empty").push(t);
                    self.bump();
                }
            }
        }
        groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(param_type)
            .collect()
    }

    /// Skips one annotation: `@` qualified-name, with optional argument
    /// list. The current token is `@`.
    fn skip_annotation(&mut self) {
        self.bump();
        if self
            .cur()
            .is_some_and(|t| matches!(t.kind, TokenKind::Word | TokenKind::Keyword))
        {
            self.bump();
            while self.at_punct('.') && self.peek(1).is_some_and(|t| t.kind == TokenKind::Word) {
                self.bump();
                self.bump();
            }
        }
        if self.at_punct('(') {
            self.skip_parens();
        }
    }

    /// Skips a balanced `{...}` block; the current token is `{`.
    fn skip_braces(&mut self) {
        let (line, column) = self.here();
        self.bump();
        let mut depth = 1u32;
        while let Some(t) = self.cur() {
            if t.is_punct('{') {
                depth += 1;
            } else if t.is_punct('}') {
                depth -= 1;
                if depth == 0 {
                    self.bump();
                    return;
                }
            }
            self.bump();
        }
        self.diagnostics.push(Diagnostic {
            severity: Severity::Error,
            message: "unbalanced braces at end of file".to_string(),
            file: self.file.to_path_buf(),
            line,
            column,
        });
    }

    /// Skips a balanced `(...)` group; the current token is `(`.
    fn skip_parens(&mut self) {
        self.bump();
        let mut depth = 1u32;
        while let Some(t) = self.cur() {
            if t.is_punct('(') {
                depth += 1;
            } else if t.is_punct(')') {
                depth -= 1;
                if depth == 0 {
                    self.bump();
                    return;
                }
            }
            self.bump();
        }
        self.diagnose(Severity::Error, "unbalanced parentheses at end of file");
    }

    /// Skips a balanced `<...>` generic group; the current token is `<`.
    /// Bails out (without consuming further) if a structural token shows the
    /// angle bracket was not generics after all.
    fn skip_angles(&mut self) {
        let start = self.pos;
        self.bump();
        let mut depth = 1u32;
        while let Some(t) = self.cur() {
            if t.is_punct('<') {
                depth += 1;
            } else if t.is_punct('>') {
                depth -= 1;
                if depth == 0 {
                    self.bump();
                    return;
                }
            } else if t.is_punct('{') || t.is_punct('}') || t.is_punct(';') {
                // Not generics; rewind past the `<` only.
                self.pos = start + 1;
                return;
            }
            self.bump();
        }
        self.pos = start + 1;
    }

    /// Skips a field initializer up to (not including) the `,`, `;`, or
    /// closing `}` that ends it. Commas inside brackets of any shape, and
    /// inside generic arguments after `new Type` or `.`, do not end it.
    fn skip_initializer(&mut self) {
        let mut parens = 0u32;
        let mut brackets = 0u32;
        let mut braces = 0u32;
        while let Some(t) = self.cur() {
            if t.is_punct('(') {
                parens += 1;
            } else if t.is_punct(')') {
                parens = parens.saturating_sub(1);
            } else if t.is_punct('[') {
                brackets += 1;
            } else if t.is_punct(']') {
                brackets = brackets.saturating_sub(1);
            } else if t.is_punct('{') {
                braces += 1;
            } else if t.is_punct('}') {
                if braces == 0 {
                    return;
                }
                braces -= 1;
            } else if (t.is_punct(',') || t.is_punct(';'))
                && parens == 0
                && brackets == 0
                && braces == 0
            {
                return;
            } else if t.is_keyword("new") {
                // `new Type<...>` — the generic arguments may contain commas.
                self.bump();
                while self
                    .cur()
                    .is_some_and(|t| t.kind == TokenKind::Word || t.is_punct('.'))
                {
                    self.bump();
                }
                if self.at_punct('<') {
                    self.skip_angles();
                }
                continue;
            } else if t.is_punct('.') && self.peek(1).is_some_and(|t| t.is_punct('<')) {
                // Explicit type arguments: `Collections.<String>emptyList()`.
                self.bump();
                self.skip_angles();
                continue;
            }
            self.bump();
        }
        self.diagnose(Severity::Error, "unterminated field initializer");
    }
}

/// Builds the written-out type of one parameter from its tokens: drops
/// `final` and a trailing explicit receiver `this`, takes the last word as
/// the parameter name, joins the rest without whitespace, and rewrites
/// varargs dots as array brackets.
fn param_type(mut tokens: Vec<&Token>) -> String {
    tokens.retain(|t| !t.is_keyword("final"));
    if tokens.last().is_some_and(|t| t.is_keyword("this")) {
        tokens.pop();
        return join_type(&tokens);
    }
    let name_idx = tokens.iter().rposition(|t| t.kind == TokenKind::Word);
    match name_idx {
        Some(i) if tokens.len() > 1 => {
            let mut type_tokens: Vec<&Token> = tokens[..i].to_vec();
            type_tokens.extend_from_slice(&tokens[i + 1..]);
            join_type(&type_tokens)
        }
        _ => join_type(&tokens),
    }
}

fn join_type(tokens: &[&Token]) -> String {
    let joined: String = tokens.iter().map(|t| t.text.as_str()).collect();
    joined.replace("...", "[]")
}
