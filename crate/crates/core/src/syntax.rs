//! Text formats for words, braids and presentations.
//!
//! ```text
//! presentation = "<" { ident [","] } "|" [ relation { "," relation } ] ">"
//! relation     = word [ "=" word ]
//! word         = { factor }
//! factor       = atom { "'" | "^" integer }
//! atom         = ident | "1" | "(" word ")"
//! ident        = letter { letter | digit | "_" }
//! integer      = [ "-" ] digit { digit }
//! ```
//!
//! Juxtaposition is the product, `'` the inverse. Trailing digits of an
//! identifier are the generator index (`d12` is `d` with index 12); an
//! underscore separates an index from a name that itself ends in a digit
//! (`A2_1`). `#` starts a comment running to the end of the line.
//! Braids use the same word syntax over `s1 … s{n-1}`.

use thiserror::Error;

use crate::braid::{ArtinLetter, Braid};
use crate::presentation::Presentation;
use crate::word::{Alphabet, GenSym, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone)]
struct RawLetter {
    letter: Letter,
    line: usize,
    column: usize,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            _src: src,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError {
            line: self.line,
            column: self.column,
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_whitespace() || c == '*' || c == '.' {
                self.bump();
            } else if c == '#' {
                while self.chars.get(self.pos).is_some_and(|&c| c != '\n') {
                    self.bump();
                }
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<(), SyntaxError> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn ident(&mut self) -> Result<GenSym, SyntaxError> {
        let (line, column) = (self.line, self.column);
        let mut s = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == '_' {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        split_ident(&s).ok_or(SyntaxError {
            line,
            column,
            message: format!("invalid generator name '{s}'"),
        })
    }

    fn integer(&mut self) -> Result<i64, SyntaxError> {
        self.skip_ws();
        let mut s = String::new();
        if self.chars.get(self.pos) == Some(&'-') {
            s.push('-');
            self.bump();
        }
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                s.push(c);
                self.bump();
            } else {
                break;
            }
        }
        match s.parse() {
            Ok(n) => Ok(n),
            Err(_) => self.error("expected an integer exponent"),
        }
    }

    fn word(&mut self) -> Result<Vec<RawLetter>, SyntaxError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() || c == '(' || c == '1' {
                out.extend(self.factor()?);
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Vec<RawLetter>, SyntaxError> {
        let (line, column) = (self.line, self.column);
        let mut atom = match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.word()?;
                self.expect(')')?;
                inner
            }
            Some('1') => {
                self.bump();
                Vec::new()
            }
            _ => {
                let sym = self.ident()?;
                vec![RawLetter {
                    letter: Letter::new(sym, false),
                    line,
                    column,
                }]
            }
        };
        loop {
            match self.chars.get(self.pos) {
                Some('\'') => {
                    self.bump();
                    atom = invert_raw(&atom);
                }
                Some('^') => {
                    self.bump();
                    let n = self.integer()?;
                    let base = if n < 0 { invert_raw(&atom) } else { atom.clone() };
                    atom = (0..n.unsigned_abs()).flat_map(|_| base.iter().cloned()).collect();
                }
                _ => break,
            }
        }
        Ok(atom)
    }

    fn relation(&mut self) -> Result<Vec<RawLetter>, SyntaxError> {
        let lhs = self.word()?;
        if self.peek() == Some('=') {
            self.bump();
            let rhs = self.word()?;
            let mut out = lhs;
            out.extend(invert_raw(&rhs));
            return Ok(out);
        }
        Ok(lhs)
    }
}

fn invert_raw(w: &[RawLetter]) -> Vec<RawLetter> {
    w.iter()
        .rev()
        .map(|r| RawLetter {
            letter: r.letter.inv(),
            line: r.line,
            column: r.column,
        })
        .collect()
}

fn split_ident(s: &str) -> Option<GenSym> {
    if let Some(cut) = s.rfind('_') {
        let (name, idx) = (&s[..cut], &s[cut + 1..]);
        let index = if idx.is_empty() {
            None
        } else {
            Some(idx.parse().ok()?)
        };
        return GenSym::new(name, index).ok();
    }
    let digits = s.len() - s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (name, idx) = s.split_at(s.len() - digits);
    let index = if idx.is_empty() { None } else { Some(idx.parse().ok()?) };
    GenSym::new(name, index).ok()
}

fn to_word(raw: &[RawLetter], alphabet: Option<&Alphabet>) -> Result<Word, SyntaxError> {
    if let Some(al) = alphabet {
        if let Some(bad) = raw.iter().find(|r| !al.contains(&r.letter.sym)) {
            return Err(SyntaxError {
                line: bad.line,
                column: bad.column,
                message: format!("generator {} is not in the alphabet", bad.letter.sym),
            });
        }
    }
    Ok(Word::reduce(raw.iter().map(|r| r.letter.clone())))
}

/// Parses a word; every generator must belong to `alphabet`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, SyntaxError> {
    let mut p = Parser::new(text);
    let raw = p.relation()?;
    if !p.at_end() {
        return p.error("unexpected trailing input");
    }
    to_word(&raw, Some(alphabet))
}

/// Parses a word over whatever generators it mentions.
pub fn parse_free_word(text: &str) -> Result<Word, SyntaxError> {
    let mut p = Parser::new(text);
    let raw = p.relation()?;
    if !p.at_end() {
        return p.error("unexpected trailing input");
    }
    to_word(&raw, None)
}

pub fn parse_presentation(text: &str) -> Result<Presentation, SyntaxError> {
    let mut p = Parser::new(text);
    p.expect('<')?;
    let mut gens = Vec::new();
    loop {
        match p.peek() {
            Some('|') => {
                p.bump();
                break;
            }
            Some(',') => {
                p.bump();
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let (line, column) = (p.line, p.column);
                let g = p.ident()?;
                if gens.contains(&g) {
                    return Err(SyntaxError {
                        line,
                        column,
                        message: format!("duplicate generator {g}"),
                    });
                }
                gens.push(g);
            }
            Some(c) => return p.error(format!("unexpected '{c}' in generator list")),
            None => return p.error("unterminated presentation"),
        }
    }
    let alphabet = Alphabet::new(gens).expect("duplicates rejected above");
    let mut relators = Vec::new();
    loop {
        if p.peek() == Some('>') {
            p.bump();
            break;
        }
        let raw = p.relation()?;
        relators.push(to_word(&raw, Some(&alphabet))?);
        match p.peek() {
            Some(',') => {
                p.bump();
            }
            Some('>') => {}
            Some(c) => return p.error(format!("unexpected '{c}' in relator list")),
            None => return p.error("unterminated presentation"),
        }
    }
    if !p.at_end() {
        return p.error("unexpected input after presentation");
    }
    Ok(Presentation::new(alphabet, relators).expect("symbols checked during parsing"))
}

/// Parses a braid word over `s1 … s{strands-1}`. Letters are kept as
/// written (no free cancellation).
pub fn parse_braid(text: &str, strands: usize) -> Result<Braid, SyntaxError> {
    let mut p = Parser::new(text);
    let raw = p.word()?;
    if !p.at_end() {
        return p.error("unexpected trailing input");
    }
    let mut letters = Vec::with_capacity(raw.len());
    for r in &raw {
        let sym = &r.letter.sym;
        let index = match (sym.name(), sym.index()) {
            ("s", Some(i)) if i >= 1 && (i as usize) < strands => i as usize,
            _ => {
                return Err(SyntaxError {
                    line: r.line,
                    column: r.column,
                    message: format!("'{sym}' is not an Artin generator on {strands} strands"),
                })
            }
        };
        letters.push(ArtinLetter {
            index,
            inverse: r.letter.inverse,
        });
    }
    Braid::new(strands, letters).map_err(|e| SyntaxError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}
