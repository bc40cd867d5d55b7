//! Plain-text formats for algebras, unary maps and measures.
//!
//! Algebra files look like this (`#` starts a comment, tokens are separated by
//! whitespace):
//!
//! ```text
//! pbck 3
//! elements 0 a 1
//! top 1
//! arrow
//! 0  1 1 1
//! a  0 1 1
//! 1  0 a 1
//! ```
//!
//! After the `pbck N` header come an `elements` line with N distinct names, a
//! `top` line, and table sections. Each section keyword (`arrow`, `squiggle`,
//! `prod`) is followed by N rows; every row starts with its row element and
//! lists N entries in `elements` order. Rows may appear in any order. A missing
//! `squiggle` section means `~>` equals `->`. A `prod` section makes the file a
//! pseudo-hoop. A file may hold several algebras, each starting at its own
//! `pbck` header.
//!
//! Map files hold one `x -> y` line per element, or a single line listing the
//! images in `elements` order. Measure files hold one `x value` line per
//! element, where values are non-negative integers or `p/q` fractions.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use crate::algebra::{Elem, FiniteAlgebra, MAX_CARRIER};
use crate::hoops::HoopAlgebra;
use crate::measure::Measure;
use crate::states::UnaryMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

/// A parsed algebra file: the two-arrow algebra plus an optional product table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: FiniteAlgebra,
    pub prod: Option<Vec<Elem>>,
}

impl AlgebraFile {
    pub fn into_hoop(self) -> Option<HoopAlgebra> {
        let prod = self.prod?;
        HoopAlgebra::new(self.algebra, prod).ok()
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'s> {
    text: &'s str,
    line: usize,
    col: usize,
}

fn err<T>(line: usize, col: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, message: message.into() })
}

/// Splits into non-empty lines of tokens, dropping comments.
fn tokenize(src: &str) -> Vec<Vec<Token<'_>>> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut offset = 0;
            for piece in content.split_whitespace() {
                let at = content[offset..].find(piece).unwrap() + offset;
                offset = at + piece.len();
                tokens.push(Token { text: piece, line: i + 1, col: content[..at].chars().count() + 1 });
            }
            (!tokens.is_empty()).then_some(tokens)
        })
        .collect()
}

pub fn parse_algebra(src: &str) -> Result<AlgebraFile, ParseError> {
    let mut files = parse_algebras(src)?;
    match files.len() {
        1 => Ok(files.pop().unwrap()),
        0 => err(1, 1, "no algebra found"),
        _ => {
            let line = tokenize(src).into_iter().filter(|l| l[0].text == "pbck").nth(1).map_or(1, |l| l[0].line);
            err(line, 1, "expected a single algebra, found several")
        }
    }
}

pub fn parse_algebras(src: &str) -> Result<Vec<AlgebraFile>, ParseError> {
    let lines = tokenize(src);
    let mut docs: Vec<&[Vec<Token<'_>>]> = Vec::new();
    let mut start = None;
    for (i, line) in lines.iter().enumerate() {
        if line[0].text == "pbck" {
            if let Some(s) = start {
                docs.push(&lines[s..i]);
            }
            start = Some(i);
        } else if start.is_none() {
            return err(line[0].line, line[0].col, "expected `pbck N` header");
        }
    }
    if let Some(s) = start {
        docs.push(&lines[s..]);
    }
    docs.into_iter().map(parse_doc).collect()
}

fn parse_doc(lines: &[Vec<Token<'_>>]) -> Result<AlgebraFile, ParseError> {
    let header = &lines[0];
    if header.len() != 2 {
        return err(header[0].line, header[0].col, "header must be `pbck N`");
    }
    let n: usize = match header[1].text.parse() {
        Ok(n) if (1..=MAX_CARRIER).contains(&n) => n,
        _ => return err(header[1].line, header[1].col, format!("carrier size must be in 1..={MAX_CARRIER}")),
    };

    let mut names: Option<Vec<String>> = None;
    let mut top: Option<Elem> = None;
    let mut tables: [Option<Vec<Elem>>; 3] = [None, None, None];
    let mut i = 1;
    while i < lines.len() {
        let line = &lines[i];
        let key = line[0];
        match key.text {
            "elements" => {
                if names.is_some() {
                    return err(key.line, key.col, "duplicate `elements` line");
                }
                if line.len() != n + 1 {
                    return err(key.line, key.col, format!("expected {n} element names, found {}", line.len() - 1));
                }
                let mut list: Vec<String> = Vec::with_capacity(n);
                for tok in &line[1..] {
                    if list.iter().any(|x| x == tok.text) {
                        return err(tok.line, tok.col, format!("duplicate element name {:?}", tok.text));
                    }
                    list.push(tok.text.to_owned());
                }
                names = Some(list);
                i += 1;
            }
            "top" => {
                if top.is_some() {
                    return err(key.line, key.col, "duplicate `top` line");
                }
                let names = names.as_ref().map_or_else(|| err(key.line, key.col, "`top` before `elements`"), Ok)?;
                if line.len() != 2 {
                    return err(key.line, key.col, "expected `top NAME`");
                }
                top = Some(resolve(names, line[1])?);
                i += 1;
            }
            "arrow" | "squiggle" | "prod" => {
                let slot = ["arrow", "squiggle", "prod"].iter().position(|k| *k == key.text).unwrap();
                if tables[slot].is_some() {
                    return err(key.line, key.col, format!("duplicate `{}` section", key.text));
                }
                let names = names.as_ref().map_or_else(|| err(key.line, key.col, "table before `elements`"), Ok)?;
                if line.len() != 1 {
                    return err(line[1].line, line[1].col, "unexpected token after section keyword");
                }
                if lines.len() - i - 1 < n {
                    return err(key.line, key.col, format!("section `{}` needs {n} rows", key.text));
                }
                tables[slot] = Some(parse_table(names, &lines[i + 1..i + 1 + n])?);
                i += 1 + n;
            }
            other => return err(key.line, key.col, format!("unexpected token {other:?}")),
        }
    }

    let at = (header[0].line, header[0].col);
    let names = names.map_or_else(|| err(at.0, at.1, "missing `elements` line"), Ok)?;
    let top = top.map_or_else(|| err(at.0, at.1, "missing `top` line"), Ok)?;
    let [arrow, squiggle, prod] = tables;
    let arrow = arrow.map_or_else(|| err(at.0, at.1, "missing `arrow` section"), Ok)?;
    let squiggle = squiggle.unwrap_or_else(|| arrow.clone());
    let algebra = FiniteAlgebra::new(names, arrow, squiggle, top)
        .map_err(|e| ParseError { line: at.0, col: at.1, message: e.to_string() })?;
    Ok(AlgebraFile { algebra, prod })
}

fn resolve(names: &[String], tok: Token<'_>) -> Result<Elem, ParseError> {
    names
        .iter()
        .position(|x| x == tok.text)
        .map_or_else(|| err(tok.line, tok.col, format!("unknown element {:?}", tok.text)), Ok)
}

fn parse_table(names: &[String], rows: &[Vec<Token<'_>>]) -> Result<Vec<Elem>, ParseError> {
    let n = names.len();
    let mut table = vec![usize::MAX; n * n];
    let mut seen = vec![false; n];
    for row in rows {
        let label = row[0];
        let r = resolve(names, label)?;
        if seen[r] {
            return err(label.line, label.col, format!("duplicate row {:?}", label.text));
        }
        seen[r] = true;
        if row.len() != n + 1 {
            return err(label.line, label.col, format!("row {:?} has {} entries, expected {n}", label.text, row.len() - 1));
        }
        for (c, tok) in row[1..].iter().enumerate() {
            table[r * n + c] = resolve(names, *tok)?;
        }
    }
    Ok(table)
}

/// Serializes an algebra (and optional product table) in the text format.
pub fn write_algebra(a: &FiniteAlgebra, prod: Option<&[Elem]>) -> String {
    let n = a.size();
    let width = a.names().iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    writeln!(out, "pbck {n}").unwrap();
    writeln!(out, "elements {}", a.names().join(" ")).unwrap();
    writeln!(out, "top {}", a.name(a.top())).unwrap();
    let mut section = |title: &str, get: &dyn Fn(Elem, Elem) -> Elem| {
        writeln!(out, "{title}").unwrap();
        for x in 0..n {
            write!(out, "{:<width$} ", a.name(x)).unwrap();
            let row: Vec<String> = (0..n).map(|y| format!("{:<width$}", a.name(get(x, y)))).collect();
            writeln!(out, " {}", row.join(" ").trim_end()).unwrap();
        }
    };
    section("arrow", &|x, y| a.arrow(x, y));
    if !a.tables_coincide() {
        section("squiggle", &|x, y| a.squiggle(x, y));
    }
    if let Some(p) = prod {
        section("prod", &|x, y| p[x * n + y]);
    }
    out
}

pub fn parse_map(a: &FiniteAlgebra, src: &str) -> Result<UnaryMap, ParseError> {
    let n = a.size();
    let lines = tokenize(src);
    let Some(first) = lines.first() else {
        return err(1, 1, "empty map file");
    };
    let names = a.names();
    if lines.len() == 1 && !(first.len() == 3 && first[1].text == "->") {
        let row = if first[0].text == "map" { &first[1..] } else { &first[..] };
        if row.len() != n {
            return err(first[0].line, first[0].col, format!("expected {n} images, found {}", row.len()));
        }
        let image = row.iter().map(|t| resolve(names, *t)).collect::<Result<_, _>>()?;
        return Ok(UnaryMap::new(image));
    }
    let mut image = vec![None; n];
    for line in &lines {
        if line.len() != 3 || line[1].text != "->" {
            return err(line[0].line, line[0].col, "expected `x -> y`");
        }
        let x = resolve(names, line[0])?;
        if image[x].is_some() {
            return err(line[0].line, line[0].col, format!("duplicate entry for {:?}", line[0].text));
        }
        image[x] = Some(resolve(names, line[2])?);
    }
    match image.iter().position(Option::is_none) {
        Some(missing) => err(1, 1, format!("no image given for {:?}", a.name(missing))),
        None => Ok(UnaryMap::new(image.into_iter().flatten().collect())),
    }
}

pub fn write_map(a: &FiniteAlgebra, mu: &UnaryMap) -> String {
    a.elements().map(|x| format!("{} -> {}\n", a.name(x), a.name(mu.apply(x)))).collect()
}

pub fn parse_measure(a: &FiniteAlgebra, src: &str) -> Result<Measure, ParseError> {
    let n = a.size();
    let mut values: Vec<Option<BigRational>> = vec![None; n];
    for line in tokenize(src) {
        if line.len() != 2 {
            return err(line[0].line, line[0].col, "expected `x value`");
        }
        let x = resolve(a.names(), line[0])?;
        if values[x].is_some() {
            return err(line[0].line, line[0].col, format!("duplicate value for {:?}", line[0].text));
        }
        let v = parse_rational(line[1].text)
            .map_or_else(|| err(line[1].line, line[1].col, format!("bad rational {:?}", line[1].text)), Ok)?;
        if v.is_negative() {
            return err(line[1].line, line[1].col, "measure values must be non-negative");
        }
        values[x] = Some(v);
    }
    match values.iter().position(Option::is_none) {
        Some(missing) => err(1, 1, format!("no value given for {:?}", a.name(missing))),
        None => Ok(Measure::new(values.into_iter().flatten().collect())),
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            (q != BigInt::from(0)).then(|| BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
