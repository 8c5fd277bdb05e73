//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! order 2
//! G c2 2
//! 0 1
//! 1 0
//! X c2 2
//! 0 1
//! 1 0
//! action
//! 0 1
//! 0 1
//! boundary
//! 0 1
//! w
//! ...
//! ```
//!
//! After `action` come `|G|` rows of `|X|` indices, after `boundary` `|X|` indices, and each of
//! `w`, `gam`, `mu`, `c` is followed by its flat exponent table (`|X|³`, `|G|²|X|`, `|G||X|²`,
//! `|X|²` entries, indexed as in [`RawInstance`]). Line breaks inside a table are free.

use std::fmt::Write as _;

use thiserror::Error;

use crate::crossed::RawInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

struct Tokens<'a> {
    toks: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let mut toks = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            toks.extend(line.split_whitespace().map(|t| (i + 1, t)));
        }
        Tokens { toks, pos: 0 }
    }

    fn line(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.last()).map_or(0, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: self.line(), msg: msg.into() })
    }

    fn word(&mut self) -> Result<&'a str, ParseError> {
        match self.toks.get(self.pos) {
            Some(&(_, t)) => {
                self.pos += 1;
                Ok(t)
            }
            None => self.err("unexpected end of file"),
        }
    }

    fn keyword(&mut self, k: &str) -> Result<(), ParseError> {
        let line = self.line();
        let w = self.word()?;
        if w != k {
            return Err(ParseError { line, msg: format!("expected `{k}`, found `{w}`") });
        }
        Ok(())
    }

    fn int<T: std::str::FromStr>(&mut self) -> Result<T, ParseError> {
        let line = self.line();
        let w = self.word()?;
        w.parse().map_err(|_| ParseError { line, msg: format!("expected a nonnegative integer, found `{w}`") })
    }

    fn ints<T: std::str::FromStr>(&mut self, n: usize) -> Result<Vec<T>, ParseError> {
        (0..n).map(|_| self.int()).collect()
    }

    fn rows(&mut self, r: usize, c: usize) -> Result<Vec<Vec<usize>>, ParseError> {
        (0..r).map(|_| self.ints(c)).collect()
    }

    fn done(&self) -> Result<(), ParseError> {
        match self.toks.get(self.pos) {
            None => Ok(()),
            Some(&(line, t)) => Err(ParseError { line, msg: format!("trailing token `{t}`") }),
        }
    }
}

fn group_header(t: &mut Tokens<'_>, tag: &str) -> Result<(String, Vec<Vec<usize>>), ParseError> {
    t.keyword(tag)?;
    let name = t.word()?.to_string();
    let n: usize = t.int()?;
    if n == 0 {
        return t.err(format!("group {tag} has order 0"));
    }
    Ok((name, t.rows(n, n)?))
}

/// Parses an instance file. Index ranges and group axioms are left to validation.
pub fn parse_instance(text: &str) -> Result<RawInstance, ParseError> {
    let mut t = Tokens::new(text);
    t.keyword("order")?;
    let order: u32 = t.int()?;
    let (g_name, g_table) = group_header(&mut t, "G")?;
    let (x_name, x_table) = group_header(&mut t, "X")?;
    let (ng, nx) = (g_table.len(), x_table.len());
    t.keyword("action")?;
    let action = t.rows(ng, nx)?;
    t.keyword("boundary")?;
    let boundary = t.ints(nx)?;
    t.keyword("w")?;
    let w = t.ints(nx * nx * nx)?;
    t.keyword("gam")?;
    let gam = t.ints(ng * ng * nx)?;
    t.keyword("mu")?;
    let mu = t.ints(ng * nx * nx)?;
    t.keyword("c")?;
    let c = t.ints(nx * nx)?;
    t.done()?;
    Ok(RawInstance { order, g_name, g_table, x_name, x_table, action, boundary, w, gam, mu, c })
}

fn write_rows<T: ToString>(s: &mut String, data: &[T], width: usize) {
    for row in data.chunks(width.max(1)) {
        let cells: Vec<String> = row.iter().map(T::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
}

/// Serializes in the canonical layout; `parse_instance` inverts it exactly.
pub fn serialize_instance(raw: &RawInstance) -> String {
    let (ng, nx) = (raw.g_table.len(), raw.x_table.len());
    let mut s = String::new();
    let _ = writeln!(s, "order {}", raw.order);
    let _ = writeln!(s, "G {} {ng}", raw.g_name);
    write_rows(&mut s, &raw.g_table.concat(), ng);
    let _ = writeln!(s, "X {} {nx}", raw.x_name);
    write_rows(&mut s, &raw.x_table.concat(), nx);
    s.push_str("action\n");
    write_rows(&mut s, &raw.action.concat(), nx);
    s.push_str("boundary\n");
    write_rows(&mut s, &raw.boundary, nx);
    for (name, table) in [("w", &raw.w), ("gam", &raw.gam), ("mu", &raw.mu), ("c", &raw.c)] {
        s.push_str(name);
        s.push('\n');
        write_rows(&mut s, table, nx);
    }
    s
}

/// A Cayley-table file: an optional `group NAME` line, then the square multiplication table.
pub fn parse_cayley(text: &str, default_name: &str) -> Result<(String, Vec<Vec<usize>>), ParseError> {
    let mut name = default_name.to_string();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("group") {
            if rows.is_empty() && rest.starts_with(char::is_whitespace) {
                name = rest.trim().to_string();
                continue;
            }
        }
        let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        rows.push(row.map_err(|_| ParseError { line: i + 1, msg: format!("bad table row `{line}`") })?);
    }
    if rows.is_empty() {
        return Err(ParseError { line: 0, msg: "empty Cayley table".into() });
    }
    Ok((name, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn round_trip_is_byte_stable() {
        for raw in [
            RawInstance::untwisted_double(&FiniteGroup::s3()),
            RawInstance::twisted_c2(),
            RawInstance::twisted_s3(),
        ] {
            let text = serialize_instance(&raw);
            let back = parse_instance(&text).unwrap();
            assert_eq!(back, raw);
            assert_eq!(serialize_instance(&back), text);
        }
    }

    #[test]
    fn comments_and_errors() {
        let text = serialize_instance(&RawInstance::twisted_c2());
        let commented = format!("# toric\n{}", text.replace("action", "action # perms"));
        assert_eq!(parse_instance(&commented).unwrap(), RawInstance::twisted_c2());
        let e = parse_instance(&text.replace("boundary", "bound")).unwrap_err();
        assert!(e.msg.contains("boundary"));
        assert!(parse_instance(&format!("{text}7")).is_err());
        assert!(parse_instance("order x").is_err());
    }

    #[test]
    fn cayley_tables() {
        let (n, rows) = parse_cayley("group z3\n0 1 2\n1 2 0\n2 0 1\n", "g").unwrap();
        assert_eq!(n, "z3");
        assert_eq!(rows.len(), 3);
        assert!(parse_cayley("0 a\n", "g").is_err());
    }
}
