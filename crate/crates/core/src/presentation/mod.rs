//! Monoid presentations: explicit relation lists and oracle-backed rule families.

mod builtin;
mod parse;

use std::fmt;
use std::sync::Arc;

pub use builtin::{builtin, builtin_names, BuiltinEntry, BUILTINS, SECTION4_S_TEXT};
pub use parse::parse_presentation;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// A defining relation `lhs = rhs`. For rewriting it is oriented `lhs -> rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }
}

/// One oriented rule instance found inside a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Redex {
    pub position: usize,
    pub len: usize,
    pub replacement: Word,
}

impl Redex {
    pub fn apply(&self, w: &Word) -> Word {
        w.splice(self.position, self.len, self.replacement.symbols())
    }
}

/// A rule family too large to list, queried one word at a time.
///
/// Implementations must be pure: the same word always yields the same answer.
pub trait RuleOracle: Send + Sync + fmt::Debug {
    fn describe(&self) -> String;

    /// The leftmost instance of an oriented rule occurring in `w`.
    fn leftmost_redex(&self, w: &Word) -> Option<Redex>;

    /// Every word reachable from `w` by applying one relation in either direction.
    fn neighbors(&self, w: &Word) -> Vec<Word>;

    /// True when every rule preserves word length.
    fn is_homogeneous(&self) -> bool;
}

#[derive(Debug, Clone)]
pub enum Relations {
    Finite(Vec<Relation>),
    Oracle(Arc<dyn RuleOracle>),
}

/// Declares the `lhs -> rhs` orientation of the relations terminating and confluent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Certificate {
    pub homogeneous: bool,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    name: String,
    alphabet: Alphabet,
    relations: Relations,
    certificate: Option<Certificate>,
}

impl Presentation {
    /// An explicit presentation with no confluence claim.
    pub fn finite(name: impl Into<String>, alphabet: Alphabet, relations: Vec<Relation>) -> Result<Self> {
        for r in &relations {
            alphabet.check(&r.lhs)?;
            alphabet.check(&r.rhs)?;
        }
        Ok(Presentation {
            name: name.into(),
            alphabet,
            relations: Relations::Finite(relations),
            certificate: None,
        })
    }

    /// An oracle-backed presentation; such presentations are always
    /// declared terminating and confluent.
    pub fn oracle(name: impl Into<String>, alphabet: Alphabet, oracle: Arc<dyn RuleOracle>) -> Self {
        let homogeneous = oracle.is_homogeneous();
        Presentation {
            name: name.into(),
            alphabet,
            relations: Relations::Oracle(oracle),
            certificate: Some(Certificate { homogeneous }),
        }
    }

    /// Declares the oriented explicit rules terminating and confluent.
    /// The declaration is trusted, not verified.
    pub fn declare_confluent(mut self) -> Result<Self> {
        let Relations::Finite(rels) = &self.relations else {
            return Ok(self);
        };
        if rels.iter().any(|r| r.lhs.is_empty()) {
            return Err(Error::Parse(format!(
                "`{}`: a rule with empty left side cannot terminate",
                self.name
            )));
        }
        let homogeneous = rels.iter().all(|r| r.lhs.len() == r.rhs.len());
        self.certificate = Some(Certificate { homogeneous });
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &Relations {
        &self.relations
    }

    /// The explicit relation list, if there is one.
    pub fn finite_relations(&self) -> Option<&[Relation]> {
        match &self.relations {
            Relations::Finite(r) => Some(r),
            Relations::Oracle(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<Certificate> {
        self.certificate
    }

    pub fn is_certified(&self) -> bool {
        self.certificate.is_some()
    }

    /// Certified and length-preserving: every Cayley-graph edge raises the
    /// normal-form length by exactly one.
    pub fn is_graded(&self) -> bool {
        self.certificate.is_some_and(|c| c.homogeneous)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        self.alphabet.check(w)
    }

    /// Leftmost redex under the declared orientation.
    pub fn leftmost_redex(&self, w: &Word) -> Option<Redex> {
        match &self.relations {
            Relations::Oracle(o) => o.leftmost_redex(w),
            Relations::Finite(rels) => {
                for pos in 0..w.len() {
                    for r in rels {
                        if !r.lhs.is_empty() && w.occurs_at(r.lhs.symbols(), pos) {
                            return Some(Redex {
                                position: pos,
                                len: r.lhs.len(),
                                replacement: r.rhs.clone(),
                            });
                        }
                    }
                }
                None
            }
        }
    }

    /// All words one relation application away from `w`, either direction,
    /// sorted shortlex and deduplicated; `w` itself is never included.
    pub fn neighbors(&self, w: &Word) -> Vec<Word> {
        let mut out = match &self.relations {
            Relations::Oracle(o) => o.neighbors(w),
            Relations::Finite(rels) => {
                let mut out = Vec::new();
                for r in rels {
                    for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
                        if from.len() > w.len() {
                            continue;
                        }
                        for pos in 0..=w.len() - from.len() {
                            if w.occurs_at(from.symbols(), pos) {
                                out.push(w.splice(pos, from.len(), to.symbols()));
                            }
                        }
                    }
                }
                out
            }
        };
        out.retain(|n| n != w);
        out.sort_by(|a, b| a.shortlex().cmp(&b.shortlex()));
        out.dedup();
        out
    }

    /// Serializes to the presentation file format. Oracle-backed
    /// presentations have no finite text form.
    pub fn to_text(&self) -> Option<String> {
        let rels = self.finite_relations()?;
        let mut s = format!("gens: {}\n", self.alphabet.names().join(" "));
        for r in rels {
            s.push_str(&format!(
                "rel: {} = {}\n",
                self.alphabet.render_tokens(&r.lhs),
                self.alphabet.render_tokens(&r.rhs)
            ));
        }
        Some(s)
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && match (&self.relations, &other.relations) {
                (Relations::Finite(a), Relations::Finite(b)) => a == b,
                (Relations::Oracle(a), Relations::Oracle(b)) => a.describe() == b.describe(),
                _ => false,
            }
    }
}
