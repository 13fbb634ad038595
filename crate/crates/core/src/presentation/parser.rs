//! Recursive-descent parser for the presentation DSL.
//!
//! ```text
//! spec     := mapSpec | "paired_shift" | "paired_shift_inv"
//!           | "inverse" "(" spec ")" | "compose" "(" spec "," spec ")"
//! mapSpec  := "map" "{" "tail+" "=" int ";" "tail-" "=" int ";"
//!             "patch" "{" [pair ("," pair)*] "}" "}"
//! pair     := int "->" int
//! int      := ["-"] digit+
//! ```
//!
//! Whitespace is insignificant; `#` starts a comment running to end of line.

use crate::presentation::{BijectionExpr, PairedShift, TranslationSpec};
use crate::{Error, Int};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Map,
    Inverse,
    Compose,
    PairedShift,
    PairedShiftInv,
    Patch,
    TailPlus,
    TailMinus,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Arrow,
    Number(Int),
    Word(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Map => "'map'".into(),
            Tok::Inverse => "'inverse'".into(),
            Tok::Compose => "'compose'".into(),
            Tok::PairedShift => "'paired_shift'".into(),
            Tok::PairedShiftInv => "'paired_shift_inv'".into(),
            Tok::Patch => "'patch'".into(),
            Tok::TailPlus => "'tail+'".into(),
            Tok::TailMinus => "'tail-'".into(),
            Tok::LBrace => "'{'".into(),
            Tok::RBrace => "'}'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Eq => "'='".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Number(n) => format!("integer {n}"),
            Tok::Word(w) => format!("word '{w}'"),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = *self.src.get(self.pos)?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, line: usize, col: usize, expected: &str, found: String) -> Error {
        Error::Syntax { line, column: col, expected: expected.to_string(), found }
    }

    fn next_token(&mut self) -> Result<Spanned, Error> {
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
        let (line, col) = (self.line, self.col);
        let at = |tok| Ok(Spanned { tok, line, col });
        let b = match self.peek() {
            None => return at(Tok::Eof),
            Some(b) => b,
        };
        match b {
            b'{' => {
                self.bump();
                at(Tok::LBrace)
            }
            b'}' => {
                self.bump();
                at(Tok::RBrace)
            }
            b'(' => {
                self.bump();
                at(Tok::LParen)
            }
            b')' => {
                self.bump();
                at(Tok::RParen)
            }
            b',' => {
                self.bump();
                at(Tok::Comma)
            }
            b';' => {
                self.bump();
                at(Tok::Semi)
            }
            b'=' => {
                self.bump();
                at(Tok::Eq)
            }
            b'-' => {
                self.bump();
                match self.peek() {
                    Some(b'>') => {
                        self.bump();
                        at(Tok::Arrow)
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let digits = self.read_digits();
                        at(Tok::Number(-digits))
                    }
                    other => Err(self.error(
                        line,
                        col,
                        "'->' or a digit after '-'",
                        found_byte(other),
                    )),
                }
            }
            d if d.is_ascii_digit() => {
                let digits = self.read_digits();
                at(Tok::Number(digits))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while let Some(b) = self.peek() {
                    if b.is_ascii_alphanumeric() || b == b'_' {
                        self.bump();
                    } else {
                        break;
                    }
                }
                let word = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let tok = match word {
                    "map" => Tok::Map,
                    "inverse" => Tok::Inverse,
                    "compose" => Tok::Compose,
                    "paired_shift" => Tok::PairedShift,
                    "paired_shift_inv" => Tok::PairedShiftInv,
                    "patch" => Tok::Patch,
                    "tail" => match self.peek() {
                        Some(b'+') => {
                            self.bump();
                            Tok::TailPlus
                        }
                        Some(b'-') => {
                            self.bump();
                            Tok::TailMinus
                        }
                        _ => Tok::Word(word.to_string()),
                    },
                    _ => Tok::Word(word.to_string()),
                };
                at(tok)
            }
            other => Err(self.error(line, col, "a token", found_byte(Some(other)))),
        }
    }

    fn read_digits(&mut self) -> Int {
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b.is_ascii_digit() {
                self.bump();
            } else {
                break;
            }
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap()
    }
}

fn found_byte(b: Option<u8>) -> String {
    match b {
        None => "end of input".to_string(),
        Some(b) if b.is_ascii_graphic() => format!("'{}'", b as char),
        Some(b) => format!("byte 0x{b:02x}"),
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    current: Spanned,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self, Error> {
        let mut lexer = Lexer::new(src);
        let current = lexer.next_token()?;
        Ok(Parser { lexer, current })
    }

    fn advance(&mut self) -> Result<Spanned, Error> {
        let next = self.lexer.next_token()?;
        Ok(std::mem::replace(&mut self.current, next))
    }

    fn expect(&mut self, want: Tok, expected: &str) -> Result<Spanned, Error> {
        if self.current.tok == want {
            self.advance()
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn unexpected(&self, expected: &str) -> Error {
        Error::Syntax {
            line: self.current.line,
            column: self.current.col,
            expected: expected.to_string(),
            found: self.current.tok.describe(),
        }
    }

    fn number(&mut self, expected: &str) -> Result<Int, Error> {
        match self.current.tok.clone() {
            Tok::Number(n) => {
                self.advance()?;
                Ok(n)
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn spec(&mut self) -> Result<BijectionExpr, Error> {
        match self.current.tok.clone() {
            Tok::Map => {
                self.advance()?;
                self.map_body()
            }
            Tok::PairedShift => {
                self.advance()?;
                Ok(BijectionExpr::Paired(PairedShift { direction: 1 }))
            }
            Tok::PairedShiftInv => {
                self.advance()?;
                Ok(BijectionExpr::Paired(PairedShift { direction: -1 }))
            }
            Tok::Inverse => {
                self.advance()?;
                self.expect(Tok::LParen, "'(' after 'inverse'")?;
                let inner = self.spec()?;
                self.expect(Tok::RParen, "')' closing 'inverse'")?;
                Ok(BijectionExpr::Inverse(Box::new(inner)))
            }
            Tok::Compose => {
                self.advance()?;
                self.expect(Tok::LParen, "'(' after 'compose'")?;
                let first = self.spec()?;
                self.expect(Tok::Comma, "',' between compose arguments")?;
                let second = self.spec()?;
                self.expect(Tok::RParen, "')' closing 'compose'")?;
                Ok(BijectionExpr::Compose(Box::new(first), Box::new(second)))
            }
            _ => Err(self.unexpected("'map', 'paired_shift', 'paired_shift_inv', 'inverse', or 'compose'")),
        }
    }

    fn map_body(&mut self) -> Result<BijectionExpr, Error> {
        self.expect(Tok::LBrace, "'{' after 'map'")?;
        self.expect(Tok::TailPlus, "'tail+'")?;
        self.expect(Tok::Eq, "'=' after 'tail+'")?;
        let tail_up = self.number("an integer for 'tail+'")?;
        self.expect(Tok::Semi, "';' after the 'tail+' entry")?;
        self.expect(Tok::TailMinus, "'tail-'")?;
        self.expect(Tok::Eq, "'=' after 'tail-'")?;
        let tail_down = self.number("an integer for 'tail-'")?;
        self.expect(Tok::Semi, "';' after the 'tail-' entry")?;
        self.expect(Tok::Patch, "'patch'")?;
        self.expect(Tok::LBrace, "'{' after 'patch'")?;
        let mut patch = Vec::new();
        if self.current.tok != Tok::RBrace {
            loop {
                let key = self.number("an integer patch key")?;
                self.expect(Tok::Arrow, "'->' in a patch entry")?;
                let value = self.number("an integer patch value")?;
                patch.push((key, value));
                if self.current.tok == Tok::Comma {
                    self.advance()?;
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RBrace, "'}' closing the patch")?;
        self.expect(Tok::RBrace, "'}' closing the map")?;
        Ok(BijectionExpr::Translation(TranslationSpec { tail_up, tail_down, patch }))
    }
}

/// Parses a spec, requiring the whole input to be consumed.
pub fn parse(text: &str) -> Result<BijectionExpr, Error> {
    let mut parser = Parser::new(text)?;
    let expr = parser.spec()?;
    parser.expect(Tok::Eof, "end of input")?;
    Ok(expr)
}
