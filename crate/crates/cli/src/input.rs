//! Turning command-line strings into library values.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use geomonoid::cayley::{enumerate_ball_with, BallOptions, CayleyBall, VertexId};
use geomonoid::families::{parse_oracle, MembershipOracle};
use geomonoid::presentation::{builtin, parse_presentation, Presentation};
use geomonoid::qi::VertexMap;
use geomonoid::{Error, GrowthTable, Result, Word};

/// A builtin spec such as `free(2)` or `mx(evens)`, or a presentation file.
pub fn presentation(spec: &str) -> Result<Presentation> {
    let path = Path::new(spec);
    if path.is_file() {
        parse_presentation(&read(spec)?)
    } else {
        builtin(spec)
    }
}

pub fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

pub fn oracle(spec: &str) -> Result<Arc<dyn MembershipOracle>> {
    parse_oracle(spec)
}

pub fn word(p: &Presentation, text: &str) -> Result<Word> {
    p.alphabet().parse_word_lenient(text)
}

pub fn ball(p: &Presentation, radius: usize, depth: usize, budget: usize) -> Result<CayleyBall> {
    let opts = BallOptions {
        depth_bound: depth,
        vertex_budget: budget,
        word_budget: budget,
    };
    enumerate_ball_with(p, radius, &opts)
}

/// `#17` names a vertex id; anything else is a word read from the root.
pub fn vertex(b: &CayleyBall, text: &str) -> Result<VertexId> {
    if let Some(id) = text.trim().strip_prefix('#') {
        let id: usize = id.parse().map_err(|_| Error::Parse(format!("bad vertex id `{text}`")))?;
        b.vertex(id)?;
        return Ok(id);
    }
    let w = b.alphabet().parse_word_lenient(text)?;
    b.follow(0, w.symbols())
        .ok_or_else(|| Error::Parse(format!("the word `{text}` leaves the ball")))
}

pub fn vertex_list(b: &CayleyBall, text: &str) -> Result<Vec<VertexId>> {
    text.split(',').map(|s| vertex(b, s)).collect()
}

/// A comma-separated id list, or `@file` with one id per line.
pub fn id_set(text: &str) -> Result<BTreeSet<VertexId>> {
    let body = match text.strip_prefix('@') {
        Some(path) => read(path)?,
        None => text.replace(',', "\n"),
    };
    body.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| l.parse().map_err(|_| Error::Parse(format!("bad vertex id `{l}`"))))
        .collect()
}

pub fn vertex_map(path: &str, source_size: usize, target_size: usize) -> Result<VertexMap> {
    VertexMap::from_text(&read(path)?, source_size, target_size)
}

pub fn growth_table(path: &str) -> Result<GrowthTable> {
    GrowthTable::from_csv(&read(path)?)
}
