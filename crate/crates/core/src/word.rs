//! Generators, alphabets and words over them.

use std::fmt;

use crate::error::{Error, Result};

/// Index of a generator within its alphabet.
pub type Gen = u16;

/// An ordered, duplicate-free list of generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if name.is_empty() || name == "1" || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidGenerator(name));
            }
            if out.contains(&name) {
                return Err(Error::DuplicateGenerator(name));
            }
            out.push(name);
        }
        if out.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if out.len() > Gen::MAX as usize {
            return Err(Error::InvalidGenerator(format!("alphabet of size {}", out.len())));
        }
        Ok(Alphabet { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g as usize]
    }

    pub fn index(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(|i| i as Gen)
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> {
        0..self.names.len() as Gen
    }

    fn single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Strict parse: whitespace-separated generator names, or `1` for the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse("empty word text (write `1` for the empty word)".into()));
        }
        if tokens == ["1"] {
            return Ok(Word::empty());
        }
        tokens
            .iter()
            .map(|t| {
                self.index(t)
                    .ok_or_else(|| Error::UndeclaredGenerator((*t).to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Like [`Alphabet::parse_word`], but over single-character alphabets a
    /// token such as `aabb` is read letter by letter.
    pub fn parse_word_lenient(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["1"] {
            return Ok(Word::empty());
        }
        if tokens.is_empty() {
            return Err(Error::Parse("empty word text (write `1` for the empty word)".into()));
        }
        for t in tokens {
            if let Some(g) = self.index(t) {
                out.push(g);
            } else if self.single_char() {
                for ch in t.chars() {
                    let s = ch.to_string();
                    out.push(self.index(&s).ok_or(Error::UndeclaredGenerator(s))?);
                }
            } else {
                return Err(Error::UndeclaredGenerator(t.to_string()));
            }
        }
        Ok(Word(out))
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&g| g as usize >= self.names.len()) {
            Some(&g) => Err(Error::WrongAlphabet(g)),
            None => Ok(()),
        }
    }

    /// Renders `w`: `1` for the empty word, letters run together over
    /// single-character alphabets, space-separated names otherwise.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let sep = if self.single_char() { "" } else { " " };
        w.0.iter()
            .map(|&g| self.name(g))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Space-separated rendering, always re-parseable by the strict parser.
    pub fn render_tokens(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.0.iter()
            .map(|&g| self.name(g))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A finite sequence of generator indices; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(s: &[Gen]) -> Self {
        Word(s.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, g: Gen) -> Word {
        let mut v = self.0.clone();
        v.push(g);
        Word(v)
    }

    /// Does `pattern` occur at `pos`?
    pub fn occurs_at(&self, pattern: &[Gen], pos: usize) -> bool {
        pos + pattern.len() <= self.len() && &self.0[pos..pos + pattern.len()] == pattern
    }

    /// Replaces `len` symbols starting at `pos` with `with`.
    pub fn splice(&self, pos: usize, len: usize, with: &[Gen]) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + with.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend_from_slice(with);
        v.extend_from_slice(&self.0[pos + len..]);
        Word(v)
    }

    /// Shortlex comparison key.
    pub fn shortlex(&self) -> (usize, &[Gen]) {
        (self.len(), &self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// All words of length exactly `n` over `k` letters, in lexicographic order.
pub fn words_of_length(k: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * k);
        for w in &out {
            for g in 0..k as Gen {
                next.push(w.push(g));
            }
        }
        out = next;
    }
    out
}

/// All words of length at most `n`, in shortlex order.
pub fn words_up_to(k: usize, n: usize) -> Vec<Word> {
    (0..=n).flat_map(|m| words_of_length(k, m)).collect()
}
