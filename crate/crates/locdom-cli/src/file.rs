//! The textual digraph format and the DOT exporter.
//!
//! Format: comment lines start with `#`; the first data line is `n <count>`;
//! every further data line is `a <u> <v>` declaring the arc u→v (0-based).
//! Parsing reports 1-based line numbers; serialize∘parse is the identity up
//! to comments.

use locdom::Digraph;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse(text: &str) -> Result<Digraph, ParseError> {
    let err = |line: usize, message: String| ParseError { line, message };
    let mut n: Option<usize> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (fields[0], n) {
            ("n", None) => {
                if fields.len() != 2 {
                    return Err(err(lineno, "expected 'n <count>'".into()));
                }
                n = Some(
                    fields[1]
                        .parse()
                        .map_err(|_| err(lineno, format!("bad vertex count '{}'", fields[1])))?,
                );
            }
            ("n", Some(_)) => return Err(err(lineno, "duplicate 'n' line".into())),
            ("a", Some(count)) => {
                if fields.len() != 3 {
                    return Err(err(lineno, "expected 'a <u> <v>'".into()));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex '{}'", fields[1])))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| err(lineno, format!("bad vertex '{}'", fields[2])))?;
                if u >= count || v >= count {
                    return Err(err(lineno, format!("vertex out of range in arc {u} -> {v}")));
                }
                if u == v {
                    return Err(err(lineno, format!("loop arc at vertex {u}")));
                }
                if !seen.insert((u, v)) {
                    return Err(err(lineno, format!("duplicate arc {u} -> {v}")));
                }
                arcs.push((u, v));
            }
            ("a", None) => return Err(err(lineno, "arc line before the 'n' line".into())),
            (other, _) => return Err(err(lineno, format!("unknown directive '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count() + 1, "missing 'n' line".into()))?;
    Ok(Digraph::build(n, &arcs).expect("arcs validated during parsing"))
}

/// Serialize with optional leading comments (written as `# ...` lines).
pub fn serialize(g: &Digraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("n {}\n", g.n()));
    for (u, v) in g.arcs() {
        out.push_str(&format!("a {u} {v}\n"));
    }
    out
}

/// DOT export for rendering with graphviz.
pub fn to_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}
