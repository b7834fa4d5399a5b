//! Lossless tokenizer for the Java source subset.
//!
//! Every byte of the input lands in exactly one token, so concatenating
//! token texts reproduces the file. Comments and string/char literals are
//! single tokens, which is what lets the grammar skip bodies by balanced
//! braces without being confused by braces in text.

/// Token classes. `Word` covers identifiers and contextual keywords
/// (`var`, `record`, `yield`, ...); `Keyword` is reserved words only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Word,
    Keyword,
    Punct,
    Literal,
    Number,
    Comment,
    Whitespace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// 1-based line of the token's first character.
    pub line: u32,
    /// 1-based column (in characters) of the token's first character.
    pub column: u32,
}

impl Token {
    pub fn is_punct(&self, c: char) -> bool {
        self.kind == TokenKind::Punct && self.text.len() == c.len_utf8() && self.text.starts_with(c)
    }

    pub fn is_keyword(&self, word: &str) -> bool {
        self.kind == TokenKind::Keyword && self.text == word
    }

    pub fn is_word(&self, word: &str) -> bool {
        self.kind == TokenKind::Word && self.text == word
    }
}

/// A problem found while lexing; carries no file path (the caller adds it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexDiagnostic {
    pub message: String,
    pub line: u32,
    pub column: u32,
}

const RESERVED: &[&str] = &[
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "final", "finally", "float",
    "for", "goto", "if", "implements", "import", "instanceof", "int", "interface", "long",
    "native", "new", "package", "private", "protected", "public", "return", "short", "static",
    "strictfp", "super", "switch", "synchronized", "this", "throw", "throws", "transient", "try",
    "void", "volatile", "while",
];

fn is_word_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_word_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

struct Lexer<'a> {
    source: &'a str,
    chars: Vec<(usize, char)>,
    /// Index into `chars`.
    pos: usize,
    line: u32,
    column: u32,
    tokens: Vec<Token>,
    diagnostics: Vec<LexDiagnostic>,
}

impl<'a> Lexer<'a> {
    fn new(source: &'a str) -> Self {
        Lexer {
            source,
            chars: source.char_indices().collect(),
            pos: 0,
            line: 1,
            column: 1,
            tokens: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek_at(&self, ahead: usize) -> Option<char> {
        self.chars.get(self.pos + ahead).map(|&(_, c)| c)
    }

    fn byte_offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.source.len(), |&(off, _)| off)
    }

    fn bump(&mut self) -> Option<char> {
        let &(_, c) = self.chars.get(self.pos)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn push(&mut self, kind: TokenKind, start_byte: usize, line: u32, column: u32) {
        let text = self.source[start_byte..self.byte_offset()].to_string();
        debug_assert!(!text.is_empty());
        self.tokens.push(Token {
            kind,
            text,
            line,
            column,
        });
    }

    fn diagnose(&mut self, message: impl Into<String>, line: u32, column: u32) {
        self.diagnostics.push(LexDiagnostic {
            message: message.into(),
            line,
            column,
        });
    }

    fn run(mut self) -> (Vec<Token>, Vec<LexDiagnostic>) {
        while let Some(c) = self.peek() {
            let start = self.byte_offset();
            let (line, column) = (self.line, self.column);
            if c.is_whitespace() {
                while self.peek().is_some_and(char::is_whitespace) {
                    self.bump();
                }
                self.push(TokenKind::Whitespace, start, line, column);
            } else if c == '/' && self.peek_at(1) == Some('/') {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
                self.push(TokenKind::Comment, start, line, column);
            } else if c == '/' && self.peek_at(1) == Some('*') {
                self.bump();
                self.bump();
                let mut closed = false;
                while let Some(c) = self.bump() {
                    if c == '*' && self.peek() == Some('/') {
                        self.bump();
                        closed = true;
                        break;
                    }
                }
                if !closed {
                    self.diagnose("unterminated block comment", line, column);
                }
                self.push(TokenKind::Comment, start, line, column);
            } else if c == '"' && self.peek_at(1) == Some('"') && self.peek_at(2) == Some('"') {
                self.bump();
                self.bump();
                self.bump();
                let mut closed = false;
                while let Some(c) = self.peek() {
                    if c == '\\' {
                        self.bump();
                        self.bump();
                    } else if c == '"'
                        && self.peek_at(1) == Some('"')
                        && self.peek_at(2) == Some('"')
                    {
                        self.bump();
                        self.bump();
                        self.bump();
                        closed = true;
                        break;
                    } else {
                        self.bump();
                    }
                }
                if !closed {
                    self.diagnose("unterminated text block", line, column);
                }
                self.push(TokenKind::Literal, start, line, column);
            } else if c == '"' || c == '\'' {
                let quote = c;
                self.bump();
                let mut closed = false;
                while let Some(c) = self.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                    if c == '\\' {
                        if self.peek().is_some_and(|c| c != '\n') {
                            self.bump();
                        }
                    } else if c == quote {
                        closed = true;
                        break;
                    }
                }
                if !closed {
                    let what = if quote == '"' { "string" } else { "character" };
                    self.diagnose(format!("unterminated {what} literal"), line, column);
                }
                self.push(TokenKind::Literal, start, line, column);
            } else if is_word_start(c) {
                while self.peek().is_some_and(is_word_continue) {
                    self.bump();
                }
                let text = &self.source[start..self.byte_offset()];
                let kind = if RESERVED.binary_search(&text).is_ok() {
                    TokenKind::Keyword
                } else {
                    TokenKind::Word
                };
                self.push(kind, start, line, column);
            } else if c.is_ascii_digit() {
                self.bump();
                loop {
                    match self.peek() {
                        Some(c) if is_word_continue(c) => {
                            self.bump();
                        }
                        Some('.') if self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) => {
                            self.bump();
                        }
                        _ => break,
                    }
                }
                self.push(TokenKind::Number, start, line, column);
            } else {
                self.bump();
                self.push(TokenKind::Punct, start, line, column);
            }
        }
        (self.tokens, self.diagnostics)
    }
}

/// Splits a source file into a lossless token stream. Lexical problems
/// (unterminated literals or comments) are reported as diagnostics while
/// tokenization continues on the next line.
pub fn tokenize(source: &str) -> (Vec<Token>, Vec<LexDiagnostic>) {
    debug_assert!(RESERVED.windows(2).all(|w| w[0] < w[1]));
    Lexer::new(source).run()
}

/// Counts non-blank lines (comments count, whitespace-only lines do not).
pub fn count_nonblank_lines(source: &str) -> u64 {
    source.lines().filter(|l| !l.trim().is_empty()).count() as u64
}
