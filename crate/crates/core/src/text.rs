//! Textual formats: presentation files, polynomial expressions, and the
//! canonical pretty-printer.
//!
//! A presentation file is UTF-8 text with `#` line comments and three
//! sections:
//!
//! ```text
//! generators: a b c
//! order: deglex a < b < c
//! relations:
//!   (1 - a*b)*c = 1
//!   c*(1 - a*b) = 1
//! ```
//!
//! The `order` section may be omitted, in which case generators compare in
//! declaration order. Relations are expressions or equations; an equation
//! `L = R` stands for the polynomial `L - R`. Every relation must normalize
//! to a monic rule: leading coefficient `+1` after an optional global sign
//! flip.
//!
//! Expression grammar, with an explicit `*` so multi-character generator
//! names stay unambiguous (juxtaposition is not multiplication):
//!
//! ```text
//! Expr   := Term (('+' | '-') Term)*
//! Term   := Factor ('*' Factor)*
//! Factor := INT | NAME | '-' Factor | '(' Expr ')'
//! ```

use num_traits::{One, Signed};
use thiserror::Error;

use crate::freealg::{Alphabet, Coefficient, FreeAlgError, GenId, MonomialOrder, Polynomial, Word};
use crate::rewrite::RuleSet;

/// A parse error with its 1-based position.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("empty expression")]
    EmptyInput,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("{0}")]
    BadAlphabet(FreeAlgError),
    #[error("unknown section `{0}` (expected generators, order or relations)")]
    UnknownSection(String),
    #[error("duplicate section `{0}`")]
    DuplicateSection(String),
    #[error("expected a section header (generators:, order: or relations:)")]
    ExpectedSectionHeader,
    #[error("missing generators section")]
    MissingGenerators,
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("relation is not monic: leading coefficient {lc} (rules over the integers need leading coefficient ±1)")]
    NonMonicRelation { lc: Coefficient },
    #[error("relation reduces to the zero polynomial")]
    ZeroRelation,
    #[error("relation is a nonzero integer constant: the presented algebra collapses to the zero ring")]
    ConstantRelation,
    #[error("duplicate relation")]
    DuplicateRelation,
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Int(Coefficient),
    Name(String),
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Equals,
    Eof,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Int(n) => format!("integer `{n}`"),
            TokenKind::Name(s) => format!("name `{s}`"),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
            TokenKind::Equals => "`=`".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    column: usize,
}

/// Tokenizes `text`. `#` starts a comment running to the end of the line.
/// `start_line` offsets reported positions so errors in multi-line files
/// point at the right file line.
fn lex(text: &str, start_line: usize) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = start_line;
    let mut column = 1usize;
    let mut chars = text.chars().peekable();

    while let Some(&c) = chars.peek() {
        let (tok_line, tok_column) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            chars.next();
            column += 1;
        };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            _ if c.is_whitespace() => bump(&mut chars),
            '#' => {
                while let Some(&d) = chars.peek() {
                    if d == '\n' {
                        break;
                    }
                    bump(&mut chars);
                }
            }
            '+' => {
                bump(&mut chars);
                tokens.push(Token {
                    kind: TokenKind::Plus,
                    line: tok_line,
                    column: tok_column,
                });
            }
            '-' => {
                bump(&mut chars);
                tokens.push(Token {
                    kind: TokenKind::Minus,
                    line: tok_line,
                    column: tok_column,
                });
            }
            '*' => {
                bump(&mut chars);
                tokens.push(Token {
                    kind: TokenKind::Star,
                    line: tok_line,
                    column: tok_column,
                });
            }
            '(' => {
                bump(&mut chars);
                tokens.push(Token {
                    kind: TokenKind::LParen,
                    line: tok_line,
                    column: tok_column,
                });
            }
            ')' => {
                bump(&mut chars);
                tokens.push(Token {
                    kind: TokenKind::RParen,
                    line: tok_line,
                    column: tok_column,
                });
            }
            '=' => {
                bump(&mut chars);
                tokens.push(Token {
                    kind: TokenKind::Equals,
                    line: tok_line,
                    column: tok_column,
                });
            }
            _ if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                let value: Coefficient = digits.parse().expect("digit strings parse");
                tokens.push(Token {
                    kind: TokenKind::Int(value),
                    line: tok_line,
                    column: tok_column,
                });
            }
            _ if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Name(name),
                    line: tok_line,
                    column: tok_column,
                });
            }
            other => {
                return Err(err(
                    tok_line,
                    tok_column,
                    ParseErrorKind::UnexpectedChar(other),
                ))
            }
        }
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        line,
        column,
    });
    Ok(tokens)
}

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) -> Token {
        let tok = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let tok = self.peek();
        err(
            tok.line,
            tok.column,
            ParseErrorKind::Unexpected {
                expected: expected.into(),
                found: tok.kind.describe(),
            },
        )
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().kind {
                TokenKind::Plus => {
                    self.advance();
                    acc = &acc + &self.term()?;
                }
                TokenKind::Minus => {
                    self.advance();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().kind == TokenKind::Star {
            self.advance();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Int(n) => {
                self.advance();
                Ok(Polynomial::constant(n))
            }
            TokenKind::Name(name) => {
                let tok = self.advance();
                match self.alphabet.id_of(&name) {
                    Some(id) => Ok(Polynomial::monomial(Word::single(id), 1)),
                    None => Err(err(
                        tok.line,
                        tok.column,
                        ParseErrorKind::UnknownGenerator(name),
                    )),
                }
            }
            TokenKind::Minus => {
                self.advance();
                Ok(-self.factor()?)
            }
            TokenKind::LParen => {
                self.advance();
                let inner = self.expr()?;
                if self.peek().kind != TokenKind::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.unexpected("an integer, a generator name, `-` or `(`")),
        }
    }
}

fn parse_with(
    text: &str,
    alphabet: &Alphabet,
    start_line: usize,
    allow_equation: bool,
) -> Result<Polynomial, ParseError> {
    let tokens = lex(text, start_line)?;
    if tokens[0].kind == TokenKind::Eof {
        return Err(err(
            tokens[0].line,
            tokens[0].column,
            ParseErrorKind::EmptyInput,
        ));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        alphabet,
    };
    let mut poly = parser.expr()?;
    if allow_equation && parser.peek().kind == TokenKind::Equals {
        parser.advance();
        let rhs = parser.expr()?;
        poly = &poly - &rhs;
    }
    if parser.peek().kind != TokenKind::Eof {
        let expected = if allow_equation {
            "`+`, `-`, `*`, `=` or end of input"
        } else {
            "`+`, `-`, `*` or end of input"
        };
        return Err(parser.unexpected(expected));
    }
    Ok(poly)
}

/// Parses an expression into a canonical polynomial over `alphabet`.
pub fn parse_polynomial(text: &str, alphabet: &Alphabet) -> Result<Polynomial, ParseError> {
    parse_with(text, alphabet, 1, false)
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

/// Canonical word rendering: generator names joined by `*`; the empty word
/// prints as `1`.
///
/// Panics if `w` uses a generator id outside `alphabet`.
pub fn format_word(w: &Word, alphabet: &Alphabet) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.letters()
        .iter()
        .map(|&id| alphabet.name(id).expect("word lies over the alphabet"))
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical polynomial rendering: terms strictly descending in the monomial
/// order; a coefficient of ±1 on a nonempty word prints as a sign only; zero
/// prints as `0`. `parse_polynomial` inverts this exactly.
pub fn format_polynomial(p: &Polynomial, alphabet: &Alphabet, order: &MonomialOrder) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut words: Vec<&Word> = p.support().collect();
    words.sort_by(|x, y| order.compare(y, x));
    let mut out = String::new();
    for (i, w) in words.iter().enumerate() {
        let c = p.get(w).expect("support word has a coefficient");
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let abs = c.abs();
        if w.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&format_word(w, alphabet));
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&format_word(w, alphabet));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Presentation files
// ---------------------------------------------------------------------------

/// A parsed presentation: the alphabet, the monomial order, the relation
/// polynomials exactly as written (each equation `L = R` stored as `L - R`),
/// and the sign-normalized monic [`RuleSet`] they generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relations: Vec<Polynomial>,
    negated: Vec<bool>,
    rules: RuleSet,
}

impl Presentation {
    /// Parses a presentation file.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut order_raw: Option<(String, usize)> = None;
        let mut relation_raw: Vec<(String, usize)> = Vec::new();
        let mut in_relations = false;
        let mut seen_relations = false;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let stripped = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = stripped.trim();
            if line.is_empty() {
                continue;
            }

            // A line whose prefix up to the first `:` is an identifier is a
            // section header; expressions never contain `:`.
            let is_identifier = |s: &str| {
                let mut chars = s.chars();
                matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
                    && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
            };
            let header = line.split_once(':').and_then(|(head, rest)| {
                let head = head.trim();
                is_identifier(head).then(|| (head.to_string(), rest.trim().to_string()))
            });

            if let Some((section, rest)) = header {
                match section.as_str() {
                    "generators" => {
                        if alphabet.is_some() {
                            return Err(err(
                                lineno,
                                1,
                                ParseErrorKind::DuplicateSection("generators".into()),
                            ));
                        }
                        let names: Vec<&str> = rest.split_whitespace().collect();
                        alphabet = Some(Alphabet::new(names).map_err(|e| {
                            err(lineno, 1, ParseErrorKind::BadAlphabet(e))
                        })?);
                        in_relations = false;
                    }
                    "order" => {
                        if order_raw.is_some() {
                            return Err(err(
                                lineno,
                                1,
                                ParseErrorKind::DuplicateSection("order".into()),
                            ));
                        }
                        order_raw = Some((rest, lineno));
                        in_relations = false;
                    }
                    "relations" => {
                        if seen_relations {
                            return Err(err(
                                lineno,
                                1,
                                ParseErrorKind::DuplicateSection("relations".into()),
                            ));
                        }
                        seen_relations = true;
                        in_relations = true;
                        if !rest.is_empty() {
                            // Blank the header so error columns still match
                            // the original line.
                            let colon = stripped.chars().position(|c| c == ':').unwrap();
                            let blanked: String = stripped
                                .chars()
                                .enumerate()
                                .map(|(i, ch)| if i <= colon { ' ' } else { ch })
                                .collect();
                            relation_raw.push((blanked, lineno));
                        }
                    }
                    other => {
                        return Err(err(
                            lineno,
                            1,
                            ParseErrorKind::UnknownSection(other.into()),
                        ))
                    }
                }
            } else if in_relations {
                // Keep the untrimmed line so error columns stay accurate.
                relation_raw.push((stripped.to_string(), lineno));
            } else {
                return Err(err(lineno, 1, ParseErrorKind::ExpectedSectionHeader));
            }
        }

        let alphabet = alphabet.ok_or_else(|| err(1, 1, ParseErrorKind::MissingGenerators))?;

        let order = match order_raw {
            None => MonomialOrder::deglex_default(alphabet.len()),
            Some((spec, lineno)) => parse_order(&spec, lineno, &alphabet)?,
        };

        let mut relations = Vec::new();
        let mut negated = Vec::new();
        let mut rule_polys: Vec<Polynomial> = Vec::new();
        for (source, lineno) in relation_raw {
            let poly = parse_with(&source, &alphabet, lineno, true)?;
            let (lc, lead) = match poly.leading_term(&order) {
                None => return Err(err(lineno, 1, ParseErrorKind::ZeroRelation)),
                Some((lc, lead)) => (lc.clone(), lead.clone()),
            };
            if lead.is_empty() {
                return Err(err(lineno, 1, ParseErrorKind::ConstantRelation));
            }
            let (rule, flip) = if lc.is_one() {
                (poly.clone(), false)
            } else if (-&lc).is_one() {
                ((-&poly).clone(), true)
            } else {
                return Err(err(lineno, 1, ParseErrorKind::NonMonicRelation { lc }));
            };
            if rule_polys.contains(&rule) {
                return Err(err(lineno, 1, ParseErrorKind::DuplicateRelation));
            }
            relations.push(poly);
            negated.push(flip);
            rule_polys.push(rule);
        }

        let rules = RuleSet::new(alphabet, order, rule_polys)
            .expect("normalized relations satisfy the rule-set invariants");
        Ok(Presentation {
            relations,
            negated,
            rules,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.rules.alphabet()
    }

    pub fn order(&self) -> &MonomialOrder {
        self.rules.order()
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    /// Relation polynomials exactly as written, in file order. Rule `i` is
    /// `±relations[i]`; see [`relation_negated`](Self::relation_negated).
    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// True when rule `i` is the negation of relation `i` (the written
    /// relation had leading coefficient −1).
    pub fn relation_negated(&self, i: usize) -> bool {
        self.negated[i]
    }

    /// Parses an expression over this presentation's alphabet.
    pub fn parse_polynomial(&self, text: &str) -> Result<Polynomial, ParseError> {
        parse_polynomial(text, self.alphabet())
    }

    pub fn format_polynomial(&self, p: &Polynomial) -> String {
        format_polynomial(p, self.alphabet(), self.order())
    }

    pub fn format_word(&self, w: &Word) -> String {
        format_word(w, self.alphabet())
    }
}

fn parse_order(
    spec: &str,
    lineno: usize,
    alphabet: &Alphabet,
) -> Result<MonomialOrder, ParseError> {
    let spec = spec.trim();
    let (kind, chain) = match spec.split_once(char::is_whitespace) {
        Some((kind, chain)) => (kind, chain.trim()),
        None => (spec, ""),
    };
    if kind != "deglex" {
        return Err(err(
            lineno,
            1,
            ParseErrorKind::InvalidOrder(format!("unknown order kind `{kind}`")),
        ));
    }
    if chain.is_empty() {
        return Ok(MonomialOrder::deglex_default(alphabet.len()));
    }
    let mut precedence: Vec<GenId> = Vec::new();
    for name in chain.split('<') {
        let name = name.trim();
        match alphabet.id_of(name) {
            Some(id) => precedence.push(id),
            None => {
                return Err(err(
                    lineno,
                    1,
                    ParseErrorKind::UnknownGenerator(name.into()),
                ))
            }
        }
    }
    if precedence.len() != alphabet.len() {
        return Err(err(
            lineno,
            1,
            ParseErrorKind::InvalidOrder(
                "the precedence chain must list every generator exactly once".into(),
            ),
        ));
    }
    MonomialOrder::deglex(precedence).map_err(|_| {
        err(
            lineno,
            1,
            ParseErrorKind::InvalidOrder(
                "the precedence chain must list every generator exactly once".into(),
            ),
        )
    })
}
