//! Problem files: a header (`ring`, `vars`, `order`), one generator per line,
//! and optional `[order_ideal]`, `[lattice_vectors]` and `[probe]` sections.

use std::fmt;

use ringbasis::text::ParseError;
use ringbasis::{Monomial, MonomialOrder, Polynomial, RingDescriptor, VarContext};

/// A problem file failure, always tied to a 1-based line when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FileError {
    pub kind: &'static str,
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl FileError {
    fn at(kind: &'static str, line: usize, message: impl Into<String>) -> Self {
        FileError {
            kind,
            message: message.into(),
            line: Some(line),
            column: None,
        }
    }

    pub fn missing(kind: &'static str, message: impl Into<String>) -> Self {
        FileError {
            kind,
            message: message.into(),
            line: None,
            column: None,
        }
    }

    fn from_parse(e: ParseError, line: usize) -> Self {
        let e = e.shifted(line - 1);
        let (kind, column) = match &e {
            ParseError::Syntax { column, .. } => ("SyntaxError", Some(*column)),
            ParseError::UnknownVariable { column, .. } => ("UnknownVariable", Some(*column)),
            ParseError::CoefficientOutOfRing { column, .. } => ("CoefficientOutOfRing", Some(*column)),
            ParseError::BadDeclaration(_) => ("BadDeclaration", None),
        };
        FileError {
            kind,
            message: e.to_string(),
            line: e.line().or(Some(line)),
            column,
        }
    }
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) if !self.message.contains("line") => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ctx: VarContext,
    pub order: MonomialOrder,
    pub generators: Vec<Polynomial>,
    pub order_ideal: Option<Vec<Monomial>>,
    pub lattice_vectors: Option<Vec<Vec<i64>>>,
    pub probes: Option<Vec<Polynomial>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Generators,
    OrderIdeal,
    LatticeVectors,
    Probe,
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a).trim()
}

fn keyword<'a>(line: &'a str, word: &str) -> Option<&'a str> {
    let rest = line.strip_prefix(word)?;
    if rest.is_empty() || rest.starts_with(char::is_whitespace) {
        Some(rest.trim())
    } else {
        None
    }
}

fn parse_vars(decl: &str, ring: &RingDescriptor, line: usize) -> Result<VarContext, FileError> {
    if let Ok(n) = decl.parse::<usize>() {
        return Ok(VarContext::positional(ring.clone(), n));
    }
    let names: Vec<&str> = decl.split([',', ' ', '\t']).map(str::trim).filter(|s| !s.is_empty()).collect();
    if names.is_empty() {
        return Err(FileError::at("BadDeclaration", line, "`vars` needs a count or a list of names"));
    }
    VarContext::named(ring.clone(), &names).map_err(|e| FileError::at("BadDeclaration", line, e.to_string()))
}

fn parse_vector(body: &str, line: usize) -> Result<Vec<i64>, FileError> {
    body.trim_start_matches('(')
        .trim_end_matches(')')
        .split([',', ' ', '\t'])
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i64>()
                .map_err(|_| FileError::at("SyntaxError", line, format!("`{s}` is not an integer")))
        })
        .collect()
}

impl ProblemFile {
    pub fn parse(src: &str) -> Result<Self, FileError> {
        let mut ring: Option<RingDescriptor> = None;
        let mut ctx: Option<VarContext> = None;
        let mut order = MonomialOrder::lex();
        let mut section = Section::Generators;
        let mut generators = Vec::new();
        let mut order_ideal: Option<Vec<Monomial>> = None;
        let mut lattice_vectors: Option<Vec<Vec<i64>>> = None;
        let mut probes: Option<Vec<Polynomial>> = None;
        let mut body_started = false;

        for (idx, raw) in src.lines().enumerate() {
            let line = idx + 1;
            let text = strip_comment(raw);
            if text.is_empty() {
                continue;
            }
            if let Some(name) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                section = match name.trim() {
                    "order_ideal" => Section::OrderIdeal,
                    "lattice_vectors" => Section::LatticeVectors,
                    "probe" => Section::Probe,
                    other => return Err(FileError::at("UnknownSection", line, format!("unknown section `[{other}]`"))),
                };
                match section {
                    Section::OrderIdeal => order_ideal = Some(order_ideal.unwrap_or_default()),
                    Section::LatticeVectors => lattice_vectors = Some(lattice_vectors.unwrap_or_default()),
                    Section::Probe => probes = Some(probes.unwrap_or_default()),
                    Section::Generators => {}
                }
                body_started = true;
                continue;
            }
            if !body_started {
                if let Some(r) = keyword(text, "ring") {
                    if ring.is_some() {
                        return Err(FileError::at("BadDeclaration", line, "ring declared twice"));
                    }
                    ring = Some(r.parse().map_err(|e: ringbasis::CoeffError| {
                        FileError::at("BadDeclaration", line, e.to_string())
                    })?);
                    continue;
                }
                if let Some(v) = keyword(text, "vars") {
                    let r = ring
                        .as_ref()
                        .ok_or_else(|| FileError::at("BadDeclaration", line, "`vars` must follow `ring`"))?;
                    if ctx.is_some() {
                        return Err(FileError::at("BadDeclaration", line, "vars declared twice"));
                    }
                    ctx = Some(parse_vars(v, r, line)?);
                    continue;
                }
                if let Some(o) = keyword(text, "order") {
                    order = match o {
                        "lex" => MonomialOrder::lex(),
                        "grevlex" => MonomialOrder::grevlex(),
                        _ => return Err(FileError::at("BadDeclaration", line, format!("unknown order `{o}`"))),
                    };
                    continue;
                }
            }
            body_started = true;
            let c = ctx
                .as_ref()
                .ok_or_else(|| FileError::at("BadDeclaration", line, "`ring` and `vars` must precede the body"))?;
            match section {
                Section::Generators => generators.push(c.parse(text).map_err(|e| FileError::from_parse(e, line))?),
                Section::Probe => probes
                    .as_mut()
                    .expect("section opened")
                    .push(c.parse(text).map_err(|e| FileError::from_parse(e, line))?),
                Section::OrderIdeal => {
                    for piece in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        let p = c.parse(piece).map_err(|e| FileError::from_parse(e, line))?;
                        let mut terms = p.terms();
                        let m = match (terms.next(), terms.next()) {
                            (Some((m, k)), None) if k.is_one() => m.clone(),
                            _ => {
                                return Err(FileError::at(
                                    "SyntaxError",
                                    line,
                                    format!("`{piece}` is not a monomial"),
                                ))
                            }
                        };
                        order_ideal.as_mut().expect("section opened").push(m);
                    }
                }
                Section::LatticeVectors => {
                    let v = parse_vector(text, line)?;
                    if v.len() != c.nvars() {
                        return Err(FileError::at(
                            "SyntaxError",
                            line,
                            format!("expected {} entries, found {}", c.nvars(), v.len()),
                        ));
                    }
                    lattice_vectors.as_mut().expect("section opened").push(v);
                }
            }
        }
        let ctx = match (ctx, ring) {
            (Some(c), _) => c,
            (None, Some(_)) => return Err(FileError::missing("BadDeclaration", "missing `vars` declaration")),
            (None, None) => return Err(FileError::missing("BadDeclaration", "missing `ring` declaration")),
        };
        Ok(ProblemFile {
            ctx,
            order,
            generators,
            order_ideal,
            lattice_vectors,
            probes,
        })
    }

    pub fn ring(&self) -> &RingDescriptor {
        self.ctx.ring()
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn order_name(&self) -> String {
        self.order.name()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_body_and_sections() {
        let src = "# three generators\nring Z\nvars 2\norder grevlex\n3*x1^2\n5*x1^2  # same monomial\nx2\n\n[order_ideal]\n1, x1\n[probe]\nx1^3\n";
        let p = ProblemFile::parse(src).unwrap();
        assert_eq!(p.generators.len(), 3);
        assert_eq!(p.order_name(), "grevlex");
        assert_eq!(p.order_ideal.as_ref().unwrap().len(), 2);
        assert_eq!(p.probes.as_ref().unwrap().len(), 1);
        assert!(p.lattice_vectors.is_none());
    }

    #[test]
    fn named_vars_and_parameters() {
        let p = ProblemFile::parse("ring Q[a] order lex\nvars x\na^2*x - a\n(a^3 - 1)*x - a^2 + 1\n").unwrap();
        assert_eq!(p.ctx.names(), ["x".to_string()]);
        assert!(p.ring().theta().is_some());
    }

    #[test]
    fn lattice_section() {
        let p = ProblemFile::parse("ring Z\nvars x, y, z\n[lattice_vectors]\n(1, -1, 0)\n2 0 -1\n").unwrap();
        assert_eq!(p.lattice_vectors.unwrap(), [vec![1, -1, 0], vec![2, 0, -1]]);
        let e = ProblemFile::parse("ring Z\nvars x, y\n[lattice_vectors]\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, Some(4));
    }

    #[test]
    fn errors_carry_file_lines() {
        let e = ProblemFile::parse("ring Z\nvars 1\nx1 +\n").unwrap_err();
        assert_eq!((e.kind, e.line, e.column), ("SyntaxError", Some(3), Some(5)));
        let e = ProblemFile::parse("ring Z\nvars 1\n\nx1 + y\n").unwrap_err();
        assert_eq!((e.kind, e.line), ("UnknownVariable", Some(4)));
        let e = ProblemFile::parse("ring Z\nvars 1\nx1/2\n").unwrap_err();
        assert_eq!(e.kind, "CoefficientOutOfRing");
        let e = ProblemFile::parse("x1\n").unwrap_err();
        assert_eq!(e.kind, "BadDeclaration");
        let e = ProblemFile::parse("ring Z\nvars 1\n[nope]\n").unwrap_err();
        assert_eq!(e.kind, "UnknownSection");
    }
}
