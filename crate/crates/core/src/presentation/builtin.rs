//! Catalog of built-in presentations, looked up by name.
//!
//! Names may carry one argument, written `name(arg)` or `name:arg`, e.g.
//! `free(3)` or `mx(finite:1)`.

use crate::error::{Error, Result};
use crate::families::{mx_presentation, parse_oracle};
use crate::word::{Alphabet, Word};

use super::{parse_presentation, Presentation, Relation};

pub const SECTION4_S_TEXT: &str = "\
# 11 generators, 22 relations
gens: a1 a2 a3 a4 a1' a2' a3' a4' b c d
rel: a1 a1' = 1
rel: a1' a1 = 1
rel: a2 a2' = 1
rel: a2' a2 = 1
rel: a3 a3' = 1
rel: a3' a3 = 1
rel: a4 a4' = 1
rel: a4' a4 = 1
rel: a1 a2 = a3 a4
rel: a1 b = b a1 a1
rel: a2 b = b a2 a2
rel: a3 b = b a3 a3
rel: a4 b = b a4 a4
rel: c b b = c b
rel: a1 d = d a1
rel: a2 d = d a2
rel: a3 d = d a3
rel: a4 d = d a4
rel: c b d a1 = a1 c b d
rel: c b d a2 = a2 c b d
rel: c b d a3 = a3 c b d
rel: c b d a4 = a4 c b d
";

pub struct BuiltinEntry {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn(Option<&str>) -> Result<Presentation>,
}

pub static BUILTINS: &[BuiltinEntry] = &[
    BuiltinEntry {
        name: "free",
        summary: "free(k): free monoid on k generators",
        build: build_free,
    },
    BuiltinEntry {
        name: "bicyclic",
        summary: "<a,b | ab = 1>",
        build: build_bicyclic,
    },
    BuiltinEntry {
        name: "free_commutative_2",
        summary: "<a,b | ab = ba>",
        build: build_free_commutative_2,
    },
    BuiltinEntry {
        name: "section4_S",
        summary: "11-generator, 22-relation monoid S with an H-class of cbd",
        build: build_section4_s,
    },
    BuiltinEntry {
        name: "mx",
        summary: "mx(oracle): M(X) with X given by an oracle spec string",
        build: build_mx,
    },
    BuiltinEntry {
        name: "f2_group",
        summary: "<x,x',y,y' | xx' = x'x = yy' = y'y = 1>",
        build: build_f2,
    },
];

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|e| e.name)
}

fn split_name(spec: &str) -> (&str, Option<&str>) {
    let spec = spec.trim();
    if let Some(open) = spec.find('(') {
        if let Some(inner) = spec[open + 1..].strip_suffix(')') {
            return (&spec[..open], Some(inner));
        }
    }
    match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    }
}

pub fn builtin(spec: &str) -> Result<Presentation> {
    let (name, arg) = split_name(spec);
    let entry = BUILTINS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownBuiltin(spec.to_string()))?;
    (entry.build)(arg)
}

fn no_arg(name: &str, arg: Option<&str>) -> Result<()> {
    match arg {
        None => Ok(()),
        Some(_) => Err(Error::UnknownBuiltin(format!("{name} takes no argument"))),
    }
}

fn letters(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..k).map(|i| format!("x{i}")).collect()
    }
}

fn build_free(arg: Option<&str>) -> Result<Presentation> {
    let k: usize = arg
        .ok_or_else(|| Error::UnknownBuiltin("free needs a rank, e.g. free(2)".into()))?
        .trim()
        .parse()
        .map_err(|_| Error::UnknownBuiltin(format!("free: bad rank {arg:?}")))?;
    let alphabet = Alphabet::new(letters(k))?;
    Presentation::finite(format!("free({k})"), alphabet, Vec::new())?.declare_confluent()
}

fn build_bicyclic(arg: Option<&str>) -> Result<Presentation> {
    no_arg("bicyclic", arg)?;
    let alphabet = Alphabet::new(["a", "b"])?;
    let rel = Relation::new(Word(vec![0, 1]), Word::empty());
    Presentation::finite("bicyclic", alphabet, vec![rel])?.declare_confluent()
}

fn build_free_commutative_2(arg: Option<&str>) -> Result<Presentation> {
    no_arg("free_commutative_2", arg)?;
    let alphabet = Alphabet::new(["a", "b"])?;
    let rel = Relation::new(Word(vec![0, 1]), Word(vec![1, 0]));
    Presentation::finite("free_commutative_2", alphabet, vec![rel])?.declare_confluent()
}

fn build_section4_s(arg: Option<&str>) -> Result<Presentation> {
    no_arg("section4_S", arg)?;
    let p = parse_presentation(SECTION4_S_TEXT)?;
    Presentation::finite("section4_S", p.alphabet().clone(), p.finite_relations().unwrap().to_vec())
}

fn build_mx(arg: Option<&str>) -> Result<Presentation> {
    let spec = arg.ok_or_else(|| Error::UnknownBuiltin("mx needs an oracle, e.g. mx(evens)".into()))?;
    Ok(mx_presentation(parse_oracle(spec)?))
}

fn build_f2(arg: Option<&str>) -> Result<Presentation> {
    no_arg("f2_group", arg)?;
    let alphabet = Alphabet::new(["x", "x'", "y", "y'"])?;
    let rels = [(0, 1), (1, 0), (2, 3), (3, 2)]
        .into_iter()
        .map(|(s, t)| Relation::new(Word(vec![s, t]), Word::empty()))
        .collect();
    Presentation::finite("f2_group", alphabet, rels)?.declare_confluent()
}
