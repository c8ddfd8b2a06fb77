//! Recursive-descent parser for word expressions.
//!
//! ```text
//! word  := term { ["*"] term }
//! term  := atom [ "^" ( "-1" | atom ) ] | atom "'"
//! atom  := identifier | "1" | "(" word ")" | "[" word "," word "]"
//! identifier := "m" digits | "m_" name
//! ```
//!
//! Whitespace separates terms; `#` starts a comment running to end of line.

use thiserror::Error;

use super::{commutator, conjugate, Alphabet, Generator, Word};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator `{name}` at byte {position}")]
    UnknownGenerator { name: String, position: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::UnknownGenerator { position, .. } => {
                *position
            }
        }
    }
}

/// Parse a word expression, checking every generator against `alphabet`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        alphabet,
    };
    let word = parser.word()?;
    parser.skip_trivia();
    if parser.pos < parser.src.len() {
        return Err(parser.syntax(format!("unexpected `{}`", parser.peek_char())));
    }
    Ok(word)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek_char(&self) -> char {
        std::str::from_utf8(&self.src[self.pos..])
            .ok()
            .and_then(|s| s.chars().next())
            .unwrap_or('?')
    }

    fn skip_trivia(&mut self) {
        while let Some(&b) = self.src.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while self.src.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_trivia();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else if self.pos >= self.src.len() {
            Err(self.syntax(format!("expected `{}`, found end of input", byte as char)))
        } else {
            Err(self.syntax(format!(
                "expected `{}`, found `{}`",
                byte as char,
                self.peek_char()
            )))
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.term()?;
                }
                Some(b'm' | b'1' | b'(' | b'[') => acc = acc * self.term()?,
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Word, ParseError> {
        let base = self.atom()?;
        // Suffixes must follow the atom directly.
        match self.src.get(self.pos) {
            Some(b'\'') => {
                self.pos += 1;
                Ok(base.inverse())
            }
            Some(b'^') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'-') {
                    if self.src.get(self.pos + 1) == Some(&b'1')
                        && !self.src.get(self.pos + 2).is_some_and(u8::is_ascii_digit)
                    {
                        self.pos += 2;
                        Ok(base.inverse())
                    } else {
                        Err(self.syntax("only `^-1` is allowed as an exponent"))
                    }
                } else {
                    let by = self.atom()?;
                    Ok(conjugate(&base, &by))
                }
            }
            _ => Ok(base),
        }
    }

    fn atom(&mut self) -> Result<Word, ParseError> {
        match self.peek() {
            Some(b'm') => self.identifier(),
            Some(b'1') => {
                self.pos += 1;
                if self
                    .src
                    .get(self.pos)
                    .is_some_and(u8::is_ascii_alphanumeric)
                {
                    return Err(self.syntax("`1` denotes the identity and takes no suffix digits"));
                }
                Ok(Word::identity())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.word()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                let left = self.word()?;
                self.expect(b',')?;
                let right = self.word()?;
                self.expect(b']')?;
                Ok(commutator(&left, &right))
            }
            Some(_) => Err(self.syntax(format!("unexpected `{}`", self.peek_char()))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn identifier(&mut self) -> Result<Word, ParseError> {
        let start = self.pos;
        self.pos += 1;
        let generator = if self.src.get(self.pos) == Some(&b'_') {
            self.pos += 1;
            let name_start = self.pos;
            while self
                .src
                .get(self.pos)
                .is_some_and(u8::is_ascii_alphanumeric)
            {
                self.pos += 1;
            }
            if name_start == self.pos {
                return Err(self.syntax("expected a name after `m_`"));
            }
            let name = std::str::from_utf8(&self.src[name_start..self.pos]).expect("ascii");
            Generator::named(name)
        } else {
            let digits_start = self.pos;
            while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            if digits_start == self.pos {
                return Err(self.syntax("expected digits or `_` after `m`"));
            }
            let digits = std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii");
            match digits.parse::<u32>() {
                Ok(i) if i >= 1 => Generator::Numbered(i),
                _ => {
                    return Err(ParseError::Syntax {
                        position: digits_start,
                        message: format!("invalid meridian index `{digits}`"),
                    })
                }
            }
        };
        if !self.alphabet.contains(&generator) {
            return Err(ParseError::UnknownGenerator {
                name: generator.to_string(),
                position: start,
            });
        }
        Ok(Word::generator(generator))
    }
}
