//! Finitely presented groups and their realization as table groups.

mod enumerate;
mod parse;

use std::fmt;

pub use enumerate::{coset_enumerate, coset_enumerate_with, CosetTable};
pub use parse::parse_presentation;

use crate::error::{Error, Result};

/// A word over the generators: letter `i + 1` is generator `i`, `-(i + 1)`
/// its inverse.
pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Freely reduces every relator and rejects empty ones and letters that
    /// name no generator.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let k = generator_names.len() as i32;
        let mut reduced = Vec::with_capacity(relators.len());
        for (i, r) in relators.into_iter().enumerate() {
            if let Some(&bad) = r.iter().find(|&&l| l == 0 || l.abs() > k) {
                return Err(Error::InvalidArgument(format!(
                    "relator {i} uses letter {bad}, but there are {k} generators"
                )));
            }
            let w = free_reduce(&r);
            if w.is_empty() {
                return Err(Error::InvalidArgument(format!(
                    "relator {i} is trivial after free reduction"
                )));
            }
            reduced.push(w);
        }
        Ok(Presentation {
            generator_names,
            relators: reduced,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Renders a word with run-length exponents, e.g. `a^2b^-1`.
    pub fn format_word(&self, w: &[i32]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < w.len() {
            let l = w[i];
            let mut run = 1;
            while i + run < w.len() && w[i + run] == l {
                run += 1;
            }
            out.push_str(&self.generator_names[(l.unsigned_abs() - 1) as usize]);
            let exp = if l < 0 { -(run as i64) } else { run as i64 };
            if exp != 1 {
                out.push_str(&format!("^{exp}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "<{} | {}>", self.generator_names.join(","), rels.join(", "))
    }
}

/// Cancels adjacent `x x^-1` pairs.
pub fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn invert_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// The two-generator presentation of a class-2 group with `a^(p^2)`,
/// `b^(p^2)`, `[a,b]^p` trivial and `[a,b]` central, as read off the
/// structure of the order-`p^5` C-group.
pub fn order_p5_presentation_text(p: usize) -> String {
    format!("<a,b | a^{}, b^{}, [a,b]^{p}, [a,[a,b]], [b,[a,b]]>", p * p, p * p)
}

/// The two-generator C-group of order 64 and nilpotency class 3.
pub const ORDER_64_PRESENTATION: &str =
    "<a,b | a^4=b^8=1, a^2b=ba^2, b^2a=ab^-2, (b^-1a)^2=(ab)^2>";
