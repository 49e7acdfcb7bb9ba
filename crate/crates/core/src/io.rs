//! Facet-list text format.
//!
//! ```text
//! # comment
//! n=6
//! 1 2 3
//! 1 2 5
//! ```
//!
//! Order and certificate files reuse the same line syntax, optionally with
//! `core:` and `order:` section headers; there the `n=` line is optional.
//! A line `{}` denotes the empty face.

use std::collections::HashSet;
use std::fmt::Write;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::homology::FieldSpec;
use crate::shelling::{ShelledOverCertificate, ShellingCertificate};

/// A parsed complex plus any non-fatal diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub complex: Complex,
    pub warnings: Vec<String>,
}

/// Sections of an order or certificate file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FacetSections {
    pub n: Option<usize>,
    pub core: Option<Vec<Face>>,
    pub order: Vec<Face>,
}

enum Line {
    Size(usize),
    Header(&'static str),
    Face(Face),
}

fn parse_line(raw: &str, lineno: usize, n: Option<usize>) -> Result<Option<Line>> {
    let body = raw.split('#').next().unwrap_or("").trim();
    if body.is_empty() {
        return Ok(None);
    }
    let err = |message: String| Error::Parse { line: lineno, message };
    if let Some(rest) = body.strip_prefix("n=") {
        let n: usize = rest.trim().parse().map_err(|_| err(format!("bad vertex count {rest:?}")))?;
        if n > MAX_VERTICES {
            return Err(err(format!("vertex count {n} exceeds {MAX_VERTICES}")));
        }
        return Ok(Some(Line::Size(n)));
    }
    match body {
        "core:" => return Ok(Some(Line::Header("core"))),
        "order:" => return Ok(Some(Line::Header("order"))),
        "{}" => return Ok(Some(Line::Face(Face::EMPTY))),
        _ => {}
    }
    let limit = n.unwrap_or(MAX_VERTICES);
    let mut vs = Vec::new();
    for tok in body.split_whitespace() {
        let v: usize = tok.parse().map_err(|_| err(format!("bad vertex {tok:?}")))?;
        if v == 0 || v > limit {
            return Err(err(format!("vertex {v} outside of [1, {limit}]")));
        }
        vs.push(v);
    }
    let f = Face::from_vertices(vs.iter().copied()).map_err(|e| err(e.to_string()))?;
    if f.len() != vs.len() {
        return Err(err("repeated vertex".to_string()));
    }
    Ok(Some(Line::Face(f)))
}

/// Parses a facet-list file. The `n=` line must precede every facet.
pub fn parse_complex(text: &str) -> Result<Parsed> {
    let mut n = None;
    let mut gens = Vec::new();
    let mut seen = HashSet::new();
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        match parse_line(raw, lineno, n)? {
            None => {}
            Some(Line::Size(k)) => {
                if n.is_some() {
                    return Err(Error::Parse { line: lineno, message: "repeated n= line".into() });
                }
                n = Some(k);
            }
            Some(Line::Header(h)) => {
                return Err(Error::Parse { line: lineno, message: format!("unexpected section {h}:") });
            }
            Some(Line::Face(f)) => {
                if n.is_none() {
                    return Err(Error::Parse { line: lineno, message: "facet before n= line".into() });
                }
                if !seen.insert(f) {
                    warnings.push(format!("line {lineno}: duplicate facet {f} ignored"));
                    continue;
                }
                gens.push(f);
            }
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, message: "missing n= line".into() })?;
    if gens.is_empty() {
        return Err(Error::Parse { line: 0, message: "no facets".into() });
    }
    Ok(Parsed { complex: Complex::from_facets(n, gens)?, warnings })
}

fn face_line(f: Face) -> String {
    if f.is_empty() {
        return "{}".to_string();
    }
    let vs: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
    vs.join(" ")
}

/// Canonical text: `n=` line, then facets in lex order.
pub fn emit_complex(c: &Complex) -> String {
    let mut out = format!("n={}\n", c.n());
    for f in c.facets() {
        out.push_str(&face_line(*f));
        out.push('\n');
    }
    out
}

/// Parses an order or certificate file. Facets before any header belong to
/// `order`.
pub fn parse_sections(text: &str) -> Result<FacetSections> {
    let mut out = FacetSections::default();
    let mut in_core = false;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        match parse_line(raw, lineno, out.n)? {
            None => {}
            Some(Line::Size(k)) => out.n = Some(k),
            Some(Line::Header("core")) => {
                in_core = true;
                out.core.get_or_insert_with(Vec::new);
            }
            Some(Line::Header(_)) => in_core = false,
            Some(Line::Face(f)) => {
                if in_core {
                    out.core.as_mut().expect("core section").push(f);
                } else {
                    out.order.push(f);
                }
            }
        }
    }
    Ok(out)
}

pub fn emit_shelling(cert: &ShellingCertificate) -> String {
    let mut out = format!("n={}\norder:\n", cert.n);
    for f in &cert.order {
        let _ = writeln!(out, "{}", face_line(*f));
    }
    out
}

pub fn emit_shelled_over(cert: &ShelledOverCertificate) -> String {
    let mut out = format!("n={}\ncore:\n", cert.core.n());
    for f in cert.core.facets() {
        let _ = writeln!(out, "{}", face_line(*f));
    }
    out.push_str("order:\n");
    for f in &cert.added {
        let _ = writeln!(out, "{}", face_line(*f));
    }
    out
}

/// Reads a shelled-over certificate for a complex on `[n]`.
pub fn parse_shelled_over(text: &str, n: usize, field: FieldSpec) -> Result<ShelledOverCertificate> {
    let s = parse_sections(text)?;
    let core = s.core.ok_or(Error::Parse { line: 0, message: "missing core: section".into() })?;
    if let Some(m) = s.n {
        if m != n {
            return Err(Error::Parse { line: 0, message: format!("certificate is for n={m}, complex has n={n}") });
        }
    }
    Ok(ShelledOverCertificate { core: Complex::from_facets(n, core)?, added: s.order, field })
}
