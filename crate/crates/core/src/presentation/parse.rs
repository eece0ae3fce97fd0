use crate::error::{Error, Result};
use crate::word::Alphabet;

use super::{Presentation, Relation};

/// Parses the line-oriented presentation format:
///
/// ```text
/// # comment
/// gens: a b
/// rel: a b = 1
/// ```
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relations = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |msg: &str| Error::Syntax {
            line: line_no,
            msg: msg.to_string(),
        };
        if let Some(rest) = line.strip_prefix("gens:") {
            if alphabet.is_some() {
                return Err(syntax("second `gens:` line"));
            }
            alphabet = Some(Alphabet::new(rest.split_whitespace())?);
        } else if let Some(rest) = line.strip_prefix("rel:") {
            let alpha = alphabet
                .as_ref()
                .ok_or_else(|| syntax("`rel:` before `gens:`"))?;
            let mut sides = rest.split('=');
            let (Some(l), Some(r), None) = (sides.next(), sides.next(), sides.next()) else {
                return Err(syntax("expected exactly one `=`"));
            };
            if l.trim().is_empty() || r.trim().is_empty() {
                return Err(syntax("empty side (write `1` for the empty word)"));
            }
            relations.push(Relation::new(alpha.parse_word(l)?, alpha.parse_word(r)?));
        } else {
            return Err(syntax("expected `gens:` or `rel:`"));
        }
    }

    let alphabet = alphabet.ok_or(Error::Syntax {
        line: 1,
        msg: "missing `gens:` line".into(),
    })?;
    Presentation::finite("file", alphabet, relations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    #[test]
    fn bicyclic_text() {
        let p = parse_presentation("gens: a b\nrel: a b = 1").unwrap();
        assert_eq!(p.alphabet().len(), 2);
        let rels = p.finite_relations().unwrap();
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].rhs, Word::empty());
        assert_eq!(rels[0].lhs, Word(vec![0, 1]));
    }

    #[test]
    fn free_monoid_text() {
        let p = parse_presentation("gens: a\n").unwrap();
        assert_eq!(p.alphabet().len(), 1);
        assert!(p.finite_relations().unwrap().is_empty());
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = parse_presentation("# bicyclic\n\ngens: a b\n# the relation\nrel: a b = 1\n").unwrap();
        assert_eq!(p.finite_relations().unwrap().len(), 1);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_presentation("gens: a b\nrel: a c = 1"),
            Err(Error::UndeclaredGenerator(g)) if g == "c"
        ));
        assert!(matches!(
            parse_presentation("gens: a a"),
            Err(Error::DuplicateGenerator(_))
        ));
        assert!(matches!(
            parse_presentation("gens: a b\nrel: a b"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a b\nrel: a = b = 1"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("rel: a = 1"),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_presentation("gens: a\nfoo"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(parse_presentation("# nothing").is_err());
    }
}
