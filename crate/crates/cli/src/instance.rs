//! Plain-text and JSON instance formats.
//!
//! The text format is line oriented, `#` starts a comment, indices are
//! 1-based. `n` and `m` must be declared before any entries:
//!
//! ```text
//! n 4
//! m 3
//! a 1 1
//! b 1 1
//! costs 1 1 10
//! ```
//!
//! The JSON equivalent is `{"n": .., "m": .., "a": [[i, j], ..],
//! "b": [[i, j], ..], "costs": [..]}` with costs given as integers or
//! `"p/q"` strings. The costs line is optional in both formats and defaults
//! to all ones. Duplicate entries are dropped with a warning.

use std::fmt;

use serde::Deserialize;

use structctl::rat::{format_rat, parse_rat, rat, Rat};
use structctl::{StructuredMatrix, StructuredSystem};

#[derive(Debug)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        Self {
            line: Some(line),
            message: message.into(),
        }
    }

    fn whole_file(message: impl Into<String>) -> Self {
        Self {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

#[derive(Debug)]
pub struct ParsedInstance {
    pub system: StructuredSystem,
    pub warnings: Vec<String>,
}

pub fn parse_text(text: &str) -> Result<ParsedInstance, ParseError> {
    let mut n: Option<usize> = None;
    let mut m: Option<usize> = None;
    let mut a_entries: Vec<(usize, usize)> = Vec::new();
    let mut b_entries: Vec<(usize, usize)> = Vec::new();
    let mut costs: Option<Vec<Rat>> = None;
    let mut warnings = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let key = tokens.next().unwrap();
        let rest: Vec<&str> = tokens.collect();
        match key {
            "n" | "m" => {
                let slot = if key == "n" { &mut n } else { &mut m };
                if slot.is_some() {
                    return Err(ParseError::at(line_no, format!("duplicate `{key}` line")));
                }
                let [value] = rest.as_slice() else {
                    return Err(ParseError::at(
                        line_no,
                        format!("`{key}` expects one count"),
                    ));
                };
                let parsed: usize = value
                    .parse()
                    .map_err(|_| ParseError::at(line_no, format!("`{value}` is not a count")))?;
                *slot = Some(parsed);
            }
            "a" | "b" => {
                let (Some(n), Some(m)) = (n, m) else {
                    return Err(ParseError::at(
                        line_no,
                        "`n` and `m` must be declared before entries",
                    ));
                };
                let [row, col] = rest.as_slice() else {
                    return Err(ParseError::at(
                        line_no,
                        format!("`{key}` expects a row and a column"),
                    ));
                };
                let (rows, cols) = if key == "a" { (n, n) } else { (n, m) };
                let i = parse_index(row, rows, "row", line_no)?;
                let j = parse_index(col, cols, "column", line_no)?;
                let list = if key == "a" {
                    &mut a_entries
                } else {
                    &mut b_entries
                };
                if list.contains(&(i, j)) {
                    warnings.push(format!(
                        "line {line_no}: duplicate entry `{key} {row} {col}` ignored"
                    ));
                } else {
                    list.push((i, j));
                }
            }
            "costs" => {
                if costs.is_some() {
                    return Err(ParseError::at(line_no, "duplicate `costs` line"));
                }
                let Some(m) = m else {
                    return Err(ParseError::at(line_no, "`m` must be declared before costs"));
                };
                if rest.len() != m {
                    return Err(ParseError::at(
                        line_no,
                        format!("expected {m} cost values, found {}", rest.len()),
                    ));
                }
                let mut parsed = Vec::with_capacity(m);
                for value in rest {
                    parsed.push(
                        parse_rat(value).map_err(|e| ParseError::at(line_no, e.to_string()))?,
                    );
                }
                costs = Some(parsed);
            }
            other => {
                return Err(ParseError::at(
                    line_no,
                    format!("unrecognized directive `{other}`"),
                ));
            }
        }
    }

    let n = n.ok_or_else(|| ParseError::whole_file("missing `n` line"))?;
    let m = m.ok_or_else(|| ParseError::whole_file("missing `m` line"))?;
    build_system(n, m, a_entries, b_entries, costs, warnings)
}

fn parse_index(token: &str, limit: usize, what: &str, line_no: usize) -> Result<usize, ParseError> {
    let value: usize = token
        .parse()
        .map_err(|_| ParseError::at(line_no, format!("`{token}` is not an index")))?;
    if value == 0 || value > limit {
        return Err(ParseError::at(
            line_no,
            format!("{what} {value} outside 1..={limit}"),
        ));
    }
    Ok(value - 1)
}

#[derive(Deserialize)]
struct JsonInstance {
    n: usize,
    m: usize,
    #[serde(default)]
    a: Vec<(usize, usize)>,
    #[serde(default)]
    b: Vec<(usize, usize)>,
    #[serde(default)]
    costs: Option<Vec<serde_json::Value>>,
}

pub fn parse_json(text: &str) -> Result<ParsedInstance, ParseError> {
    let raw: JsonInstance = serde_json::from_str(text)
        .map_err(|e| ParseError::whole_file(format!("invalid instance JSON: {e}")))?;
    let mut warnings = Vec::new();
    let mut convert = |list: Vec<(usize, usize)>,
                       rows: usize,
                       cols: usize,
                       name: &str|
     -> Result<Vec<(usize, usize)>, ParseError> {
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(list.len());
        for (i, j) in list {
            if i == 0 || i > rows || j == 0 || j > cols {
                return Err(ParseError::whole_file(format!(
                    "`{name}` entry ({i}, {j}) outside 1..={rows} x 1..={cols}"
                )));
            }
            if out.contains(&(i - 1, j - 1)) {
                warnings.push(format!("duplicate `{name}` entry ({i}, {j}) ignored"));
            } else {
                out.push((i - 1, j - 1));
            }
        }
        Ok(out)
    };
    let a_entries = convert(raw.a, raw.n, raw.n, "a")?;
    let b_entries = convert(raw.b, raw.n, raw.m, "b")?;
    let costs = match raw.costs {
        None => None,
        Some(values) => {
            let mut parsed = Vec::with_capacity(values.len());
            for v in &values {
                let r = match v {
                    serde_json::Value::Number(num) => {
                        num.as_i64().map(|i| rat(i as i128)).ok_or_else(|| {
                            ParseError::whole_file(format!("cost {num} is not an integer"))
                        })
                    }
                    serde_json::Value::String(s) => {
                        parse_rat(s).map_err(|e| ParseError::whole_file(e.to_string()))
                    }
                    other => Err(ParseError::whole_file(format!(
                        "cost `{other}` must be an integer or a \"p/q\" string"
                    ))),
                }?;
                parsed.push(r);
            }
            Some(parsed)
        }
    };
    build_system(raw.n, raw.m, a_entries, b_entries, costs, warnings)
}

fn build_system(
    n: usize,
    m: usize,
    a_entries: Vec<(usize, usize)>,
    b_entries: Vec<(usize, usize)>,
    costs: Option<Vec<Rat>>,
    warnings: Vec<String>,
) -> Result<ParsedInstance, ParseError> {
    let a = StructuredMatrix::new(n, n, a_entries)
        .map_err(|e| ParseError::whole_file(e.to_string()))?;
    let b = StructuredMatrix::new(n, m, b_entries)
        .map_err(|e| ParseError::whole_file(e.to_string()))?;
    let costs = costs.unwrap_or_else(|| vec![rat(1); m]);
    let system =
        StructuredSystem::new(a, b, costs).map_err(|e| ParseError::whole_file(e.to_string()))?;
    Ok(ParsedInstance { system, warnings })
}

/// Canonical text form: header, sorted `a` entries, sorted `b` entries, and
/// an explicit costs line.
pub fn to_text(sys: &StructuredSystem) -> String {
    let mut out = String::new();
    out.push_str(&format!("n {}\nm {}\n", sys.n(), sys.m()));
    for (i, j) in sys.a().entries() {
        out.push_str(&format!("a {} {}\n", i + 1, j + 1));
    }
    for (i, j) in sys.b().entries() {
        out.push_str(&format!("b {} {}\n", i + 1, j + 1));
    }
    if sys.m() > 0 {
        let costs: Vec<String> = sys.input_costs().iter().map(format_rat).collect();
        out.push_str(&format!("costs {}\n", costs.join(" ")));
    }
    out
}

pub fn to_json(sys: &StructuredSystem) -> serde_json::Value {
    let pairs = |entries: Vec<(usize, usize)>| -> Vec<Vec<usize>> {
        entries
            .into_iter()
            .map(|(i, j)| vec![i + 1, j + 1])
            .collect()
    };
    serde_json::json!({
        "n": sys.n(),
        "m": sys.m(),
        "a": pairs(sys.a().entries().collect()),
        "b": pairs(sys.b().entries().collect()),
        "costs": sys.input_costs().iter().map(format_rat).collect::<Vec<_>>(),
    })
}
