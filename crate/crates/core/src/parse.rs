//! Recursive-descent parser for the ASCII braid-word grammar:
//!
//! ```text
//! word := term { ["*"] term }
//! term := atom [ "^" signed-int ]
//! atom := "a(" int "," int ")" | "s" int | "d" | "D" | "e"
//!       | "[" int { "," int } "]" | "(" word ")"
//! ```
//!
//! Whitespace is insignificant. `d`, `D` and `e` stand for `δ`, `Δ` and `ε`.
//! An empty word (or `()`) denotes the identity.

use crate::error::{Error, Result};
use crate::word::{BandGenerator, BraidWord, Sign};

/// Parses `text` as a braid word on `n` strands.
pub fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    crate::check_strands(n)?;
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n,
    };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn starts_atom(c: u8) -> bool {
        matches!(c, b'a' | b's' | b'd' | b'D' | b'e' | b'[' | b'(')
    }

    fn word(&mut self) -> Result<BraidWord> {
        let mut out = BraidWord::identity(self.n)?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    if out.is_empty() {
                        return Err(self.error("'*' before any term"));
                    }
                    self.pos += 1;
                    match self.peek() {
                        Some(c) if Self::starts_atom(c) => {}
                        _ => return Err(self.error("expected a term after '*'")),
                    }
                }
                Some(c) if Self::starts_atom(c) => {
                    let t = self.term()?;
                    out = out.concat(&t)?;
                }
                _ => return Ok(out),
            }
        }
    }

    fn term(&mut self) -> Result<BraidWord> {
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let m = self.signed_int()?;
            Ok(atom.pow(m))
        } else {
            Ok(atom)
        }
    }

    fn atom(&mut self) -> Result<BraidWord> {
        let start = self.pos;
        let c = self.peek().ok_or_else(|| self.error("expected a term"))?;
        self.pos += 1;
        match c {
            b'a' => {
                self.expect(b'(')?;
                let i = self.index()?;
                self.expect(b',')?;
                let j = self.index()?;
                self.expect(b')')?;
                let g = BandGenerator::positive(i, j)?;
                BraidWord::new(self.n, vec![g])
            }
            b's' => {
                let i = self.index()?;
                if i + 1 > self.n {
                    return Err(Error::IndexOutOfRange {
                        index: i as i64 + 1,
                        n: self.n,
                    });
                }
                BraidWord::new(self.n, vec![BandGenerator::sigma(i, Sign::Positive)?])
            }
            b'd' => BraidWord::delta(self.n),
            b'D' => BraidWord::half_twist(self.n),
            b'e' => BraidWord::epsilon(self.n),
            b'[' => {
                let mut idx = vec![self.index()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    idx.push(self.index()?);
                }
                self.expect(b']')?;
                BraidWord::subsimple(self.n, &idx)
            }
            b'(' => {
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            _ => {
                self.pos = start;
                Err(self.error(format!("unexpected character '{}'", c as char)))
            }
        }
    }

    fn digits(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<i64>().ok())
            .ok_or_else(|| Error::Parse {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let v = self.digits()?;
        Ok(if negative { -v } else { v })
    }

    /// A strand index in `1..=n`.
    fn index(&mut self) -> Result<usize> {
        let v = self.digits()?;
        if v < 1 || v > self.n as i64 {
            return Err(Error::IndexOutOfRange {
                index: v,
                n: self.n,
            });
        }
        Ok(v as usize)
    }
}
