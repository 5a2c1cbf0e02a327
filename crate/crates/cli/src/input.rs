//! Algebra description files: UTF-8 JSON with `vertices`, `arrows`
//! (name/from/to) and `relations` as strings like `"b*a"` or
//! `"a*b - 2 c*d"`, `*` composing right-to-left.

use std::sync::Arc;

use serde::Deserialize;
use tauseq_core::algebra::{
    build_algebra, Arrow, PathWord, Quiver, Relation, DEFAULT_PATH_CAP,
};
use tauseq_core::linalg::QRat;
use tauseq_core::{AlgebraPresentation, Error, Result};

#[derive(Debug, Deserialize)]
pub struct AlgebraFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDecl>,
    #[serde(default)]
    pub relations: Vec<String>,
}

#[derive(Debug, Deserialize)]
pub struct ArrowDecl {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// Bundled presentations, keyed by short name.
pub fn bundled(name: &str) -> Option<&'static str> {
    match name {
        "gamma" => Some(include_str!("../algebras/gamma.json")),
        "kronecker" => Some(include_str!("../algebras/kronecker.json")),
        "a2" => Some(include_str!("../algebras/a2.json")),
        "a3" => Some(include_str!("../algebras/a3.json")),
        "nakayama3" => Some(include_str!("../algebras/nakayama3.json")),
        "one_vertex" => Some(include_str!("../algebras/one_vertex.json")),
        _ => None,
    }
}

pub const BUNDLED_NAMES: [&str; 6] = ["gamma", "kronecker", "a2", "a3", "nakayama3", "one_vertex"];

pub fn parse_algebra_text(text: &str) -> Result<Arc<AlgebraPresentation>> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::RejectedInput {
        detail: format!("parse error at line {}, column {}: {e}", e.line(), e.column()),
    })?;
    build_from_file(&file)
}

pub fn build_from_file(file: &AlgebraFile) -> Result<Arc<AlgebraPresentation>> {
    let vertex_index = |name: &str| -> Result<usize> {
        file.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::rejected(format!("unknown vertex `{name}`")))
    };
    let arrows = file
        .arrows
        .iter()
        .map(|a| {
            Ok(Arrow {
                name: a.name.clone(),
                source: vertex_index(&a.from)?,
                target: vertex_index(&a.to)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let quiver = Quiver::new(file.vertices.clone(), arrows)?;
    let relations = file
        .relations
        .iter()
        .map(|r| parse_relation(&quiver, r))
        .collect::<Result<Vec<_>>>()?;
    build_algebra(quiver, relations, DEFAULT_PATH_CAP)
}

/// Parse one relation string: signed terms, each an optional rational
/// coefficient followed by a `*`-separated path in right-to-left order.
pub fn parse_relation(quiver: &Quiver, text: &str) -> Result<Relation> {
    let mut terms = Vec::new();
    for (sign, chunk) in split_signed_terms(text) {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(Error::rejected(format!("empty term in relation `{text}`")));
        }
        let (coeff, path_str) = match chunk.split_once(char::is_whitespace) {
            Some((c, p)) if c.chars().all(|ch| ch.is_ascii_digit() || ch == '/') => {
                (parse_coeff(c)?, p.trim())
            }
            _ => (QRat::from_integer(1.into()), chunk),
        };
        let names: Vec<&str> = path_str.split('*').map(str::trim).collect();
        let mut arrows = Vec::new();
        for name in names.iter().rev() {
            // Right-to-left syntax: the rightmost arrow acts first.
            let idx = quiver.arrow_index(name).ok_or_else(|| {
                Error::rejected(format!("unknown arrow `{name}` in relation `{text}`"))
            })?;
            arrows.push(idx);
        }
        let src = quiver.arrows[arrows[0]].source;
        let signed = if sign { coeff } else { -coeff };
        terms.push((signed, PathWord { src, arrows }));
    }
    Ok(Relation { terms })
}

fn parse_coeff(s: &str) -> Result<QRat> {
    let bad = || Error::rejected(format!("bad coefficient `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(QRat::new(n.into(), d.into()))
    } else {
        let n: i64 = s.parse().map_err(|_| bad())?;
        Ok(QRat::from_integer(n.into()))
    }
}

fn split_signed_terms(text: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut sign = true;
    for ch in text.chars() {
        match ch {
            '+' => {
                if !cur.trim().is_empty() {
                    out.push((sign, cur.clone()));
                }
                cur.clear();
                sign = true;
            }
            '-' => {
                if !cur.trim().is_empty() {
                    out.push((sign, cur.clone()));
                }
                cur.clear();
                sign = false;
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push((sign, cur));
    }
    out
}
