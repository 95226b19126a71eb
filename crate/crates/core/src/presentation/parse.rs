//! Text syntax: `<a,b | a^4=b^8=1, [a,b]^2, (ab)^3>`.
//!
//! A generator name is one ASCII letter followed by optional digits, so
//! `ab` reads as `a` then `b`. Atoms are names, parenthesized words and
//! commutators `[u,v] = u v u^-1 v^-1`, each optionally raised to an
//! integer power; `1` is the empty word. `u = v = w` yields the relators
//! `u w^-1` and `v w^-1`.

use super::{invert_word, Presentation, Word};
use crate::error::{Error, ParseError, Result};

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Parser::new(text);
    let (names, relators) = p.presentation()?;
    Presentation::new(names, relators).map_err(|e| match e {
        Error::InvalidArgument(msg) => Error::Parse(p.error_at_end(msg)),
        other => other,
    })
}

struct Parser {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
    names: Vec<String>,
}

impl Parser {
    fn new(src: &str) -> Self {
        let mut chars = Vec::new();
        let (mut line, mut col) = (1, 1);
        for c in src.chars() {
            chars.push((line, col, c));
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Parser {
            chars,
            pos: 0,
            names: Vec::new(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = match self.chars.get(self.pos) {
            Some(&(l, c, _)) => (l, c),
            None => self
                .chars
                .last()
                .map_or((1, 1), |&(l, c, _)| (l, c + 1)),
        };
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn error_at_end(&self, message: String) -> ParseError {
        self.error(message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|t| t.2.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|t| t.2)
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn presentation(&mut self) -> std::result::Result<(Vec<String>, Vec<Word>), ParseError> {
        self.expect('<')?;
        loop {
            let start = self.pos;
            let name = self.name()?;
            if self.names.contains(&name) {
                self.pos = start;
                self.skip_ws();
                return Err(self.error(format!("generator '{name}' declared twice")));
            }
            self.names.push(name);
            match self.peek() {
                Some(',') => self.pos += 1,
                _ => break,
            }
        }
        self.expect('|')?;
        let mut relators = Vec::new();
        if self.peek() != Some('>') {
            loop {
                relators.extend(self.relation()?);
                match self.peek() {
                    Some(',') => self.pos += 1,
                    _ => break,
                }
            }
        }
        self.expect('>')?;
        if let Some(c) = self.peek() {
            return Err(self.error(format!("unexpected '{c}' after the presentation")));
        }
        Ok((std::mem::take(&mut self.names), relators))
    }

    fn name(&mut self) -> std::result::Result<String, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let mut s = String::from(c);
                self.pos += 1;
                while let Some(&(_, _, d)) = self.chars.get(self.pos) {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    self.pos += 1;
                }
                Ok(s)
            }
            Some(c) => Err(self.error(format!("expected a generator name, found '{c}'"))),
            None => Err(self.error("expected a generator name, found end of input")),
        }
    }

    fn relation(&mut self) -> std::result::Result<Vec<Word>, ParseError> {
        let mut sides = vec![self.word()?];
        while self.peek() == Some('=') {
            self.pos += 1;
            sides.push(self.word()?);
        }
        let last = invert_word(&sides.pop().unwrap());
        if sides.is_empty() {
            // a bare word is a relator on its own
            return Ok(vec![invert_word(&last)]);
        }
        Ok(sides
            .into_iter()
            .map(|mut w| {
                w.extend_from_slice(&last);
                w
            })
            .collect())
    }

    fn word(&mut self) -> std::result::Result<Word, ParseError> {
        let mut w = Word::new();
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == '(' || c == '[' || c == '1' => {
                    let atom = self.atom()?;
                    let atom = self.exponent(atom)?;
                    w.extend(atom);
                    any = true;
                }
                _ => break,
            }
        }
        if !any {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected a word, found '{c}'")),
                None => self.error("expected a word, found end of input"),
            });
        }
        Ok(w)
    }

    fn atom(&mut self) -> std::result::Result<Word, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                let mut w = u.clone();
                w.extend_from_slice(&v);
                w.extend(invert_word(&u));
                w.extend(invert_word(&v));
                Ok(w)
            }
            Some('1') => {
                self.pos += 1;
                if self.chars.get(self.pos).is_some_and(|t| t.2.is_ascii_digit()) {
                    return Err(self.error("only '1' may stand for the empty word"));
                }
                Ok(Word::new())
            }
            _ => {
                let start = self.pos;
                let name = self.name()?;
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(vec![i as i32 + 1]),
                    None => {
                        self.pos = start;
                        self.skip_ws();
                        Err(self.error(format!("unknown generator '{name}'")))
                    }
                }
            }
        }
    }

    fn exponent(&mut self, atom: Word) -> std::result::Result<Word, ParseError> {
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.pos += 1;
        self.skip_ws();
        let negative = self.chars.get(self.pos).is_some_and(|t| t.2 == '-');
        if negative {
            self.pos += 1;
        }
        let mut digits = String::new();
        while let Some(&(_, _, d)) = self.chars.get(self.pos) {
            if !d.is_ascii_digit() {
                break;
            }
            digits.push(d);
            self.pos += 1;
        }
        let k: usize = digits
            .parse()
            .map_err(|_| self.error("expected an integer exponent"))?;
        let base = if negative { invert_word(&atom) } else { atom };
        Ok(base.repeat(k))
    }
}
