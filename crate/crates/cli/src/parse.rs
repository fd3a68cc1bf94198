//! Text syntax for elements: `[coeff "*"] basis "[" comp "]"` terms joined
//! by `+` or `-`, for example `2*M[5] - 1/2*eta[1,3,1] + L[]`.

use std::fmt;

use qsym_core::rational::{self, Rational};
use qsym_core::{Basis, Composition, QSymElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input; `column` is 1-based.
    Syntax { column: usize, message: String },
    /// Well-formed input naming something outside the domain, such as an
    /// even part under K.
    Domain(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { column, message } => write!(f, "parse error at column {}: {}", column, message),
            ParseError::Domain(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected '{}', found '{}'", c, found)),
                None => self.error(format!("expected '{}', found end of input", c)),
            }
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.byte_offset();
        while self.peek().is_some_and(&pred) {
            self.pos += 1;
        }
        &self.text[start..self.byte_offset()]
    }

    fn byte_offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(b, _)| b)
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let column = self.column();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return self.error("expected a number");
        }
        digits.parse().map_err(|_| ParseError::Syntax {
            column,
            message: format!("number {} is too large", digits),
        })
    }

    fn basis(&mut self) -> Result<Basis, ParseError> {
        self.skip_ws();
        let column = self.column();
        let word = self.take_while(|c| c.is_ascii_alphabetic());
        match word {
            "M" => Ok(Basis::M),
            "L" => Ok(Basis::L),
            "K" => Ok(Basis::K),
            "eta" => Ok(Basis::Eta),
            "" => self.error("expected a basis name (M, L, K or eta)"),
            other => Err(ParseError::Syntax {
                column,
                message: format!("unknown basis '{}' (expected M, L, K or eta)", other),
            }),
        }
    }

    fn composition(&mut self) -> Result<Composition, ParseError> {
        self.expect('[')?;
        let mut parts = Vec::new();
        if !self.eat(']') {
            loop {
                let column = {
                    self.skip_ws();
                    self.column()
                };
                let part = self.number()?;
                if part == 0 {
                    return Err(ParseError::Syntax {
                        column,
                        message: "composition parts must be positive".into(),
                    });
                }
                parts.push(part);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(Composition::new(parts).expect("parts checked positive"))
    }

    /// `[p ["/" q] "*"]`, or nothing for a unit coefficient.
    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(rational::int(1));
        }
        let column = self.column();
        let num = self.take_while(|c| c.is_ascii_digit()).to_string();
        let text = if self.eat('/') {
            self.skip_ws();
            let den = self.take_while(|c| c.is_ascii_digit());
            if den.is_empty() {
                return self.error("expected a denominator");
            }
            format!("{}/{}", num, den)
        } else {
            num
        };
        let value = rational::parse(&text).map_err(|e| ParseError::Syntax {
            column,
            message: e.to_string(),
        })?;
        self.expect('*')?;
        Ok(value)
    }
}

/// Parses an element. All terms must use one basis; repeated indices are
/// combined. A lone `0` is the zero element of M.
pub fn parse_element(text: &str) -> Result<QSymElement, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.peek().is_none() {
        return cur.error("empty input");
    }
    if text.trim() == "0" {
        return Ok(QSymElement::zero(Basis::M));
    }
    let mut basis: Option<Basis> = None;
    let mut terms: Vec<(Composition, Rational)> = Vec::new();
    let mut negative = cur.eat('-');
    if !negative {
        cur.eat('+');
    }
    loop {
        let coeff = cur.coefficient()?;
        let column = {
            cur.skip_ws();
            cur.column()
        };
        let b = cur.basis()?;
        match basis {
            None => basis = Some(b),
            Some(prev) if prev != b => {
                return Err(ParseError::Syntax {
                    column,
                    message: format!("basis {} mixed with {} in one element", b, prev),
                })
            }
            _ => {}
        }
        let comp = cur.composition()?;
        terms.push((comp, if negative { -coeff } else { coeff }));
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(c) => return cur.error(format!("expected '+', '-' or end of input, found '{}'", c)),
        }
        cur.pos += 1;
    }
    QSymElement::from_terms(basis.expect("at least one term"), terms).map_err(|e| ParseError::Domain(e.to_string()))
}
