//! Text and JSON encodings of tables and sequences.
//!
//! * JSON table: `{"n":<int>,"table":[[..],..]}`, rows in order, no whitespace.
//! * JSON sequence: `{"n":<int>,"k":<int>,"seq":[..]}`.
//! * Text table: `n` lines of `n` space-separated integers, no header.
//! * Text sequence: the single line `n k : a1 a2 .. an`.
//!
//! Every encoding ends with a newline in text form and without one in JSON form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{CayleyTable, KSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown format `{other}` (expected json or text)"),
            }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Text => "text",
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    n: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeqDoc {
    n: usize,
    k: usize,
    seq: Vec<usize>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn at_start(e: Error) -> Error {
    match e {
        e @ Error::Parse { .. } => e,
        other => Error::Parse {
            line: 1,
            column: 1,
            message: other.to_string(),
        },
    }
}

pub fn table_to_string(table: &CayleyTable, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&TableDoc {
            n: table.order(),
            table: table.rows(),
        })
        .expect("table serializes"),
        Format::Text => {
            let mut out = String::new();
            for i in 1..=table.order() {
                let row: Vec<String> = table.row(i).map(|v| v.to_string()).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
            out
        }
    }
}

pub fn sequence_to_string(seq: &KSequence, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(&SeqDoc {
            n: seq.order(),
            k: seq.step(),
            seq: seq.values().to_vec(),
        })
        .expect("sequence serializes"),
        Format::Text => format!("{seq}\n"),
    }
}

pub fn parse_table(input: &str, format: Format) -> Result<CayleyTable> {
    match format {
        Format::Json => {
            let doc: TableDoc = serde_json::from_str(input).map_err(json_error)?;
            if doc.table.len() != doc.n {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!(
                        "declared order {} but found {} rows",
                        doc.n,
                        doc.table.len()
                    ),
                });
            }
            CayleyTable::from_rows(doc.table).map_err(at_start)
        }
        Format::Text => parse_text_table(input),
    }
}

pub fn parse_sequence(input: &str, format: Format) -> Result<KSequence> {
    match format {
        Format::Json => {
            let doc: SeqDoc = serde_json::from_str(input).map_err(json_error)?;
            KSequence::new(doc.n, doc.k, doc.seq).map_err(at_start)
        }
        Format::Text => parse_text_sequence(input),
    }
}

/// Picks JSON when the first non-blank character is `{`, text otherwise.
pub fn sniff(input: &str) -> Format {
    match input.trim_start().chars().next() {
        Some('{') => Format::Json,
        _ => Format::Text,
    }
}

/// Splits a line into `(column, token)` pairs, columns 1-based.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(idx),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..idx]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

fn int_at(token: &str, line: usize, column: usize) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        column,
        message: format!("expected a positive integer, found `{token}`"),
    })
}

fn parse_text_table(input: &str) -> Result<CayleyTable> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut places: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut last_line = 0;
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        last_line = line_no;
        let mut row = Vec::new();
        let mut cols = Vec::new();
        for (col, tok) in tokens(line) {
            row.push(int_at(tok, line_no, col)?);
            cols.push(col);
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Parse {
                    line: line_no,
                    column: 1,
                    message: format!("expected {} entries, found {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
        places.push((line_no, cols));
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "empty table".into(),
        });
    }
    if rows[0].len() != rows.len() {
        return Err(Error::Parse {
            line: last_line,
            column: 1,
            message: format!(
                "table is not square: {} rows of {} entries",
                rows.len(),
                rows[0].len()
            ),
        });
    }
    let n = rows.len();
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v < 1 || v > n {
                return Err(Error::Parse {
                    line: places[r].0,
                    column: places[r].1[c],
                    message: format!("entry {v} is outside 1..={n}"),
                });
            }
        }
    }
    CayleyTable::from_rows(rows).map_err(at_start)
}

fn parse_text_sequence(input: &str) -> Result<KSequence> {
    let mut lines = input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (idx, line) = lines.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "empty sequence".into(),
    })?;
    let line_no = idx + 1;
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra + 1,
            column: 1,
            message: "a text sequence is a single line".into(),
        });
    }
    let toks: Vec<(usize, &str)> = tokens(line).collect();
    let colon = toks.iter().position(|(_, t)| *t == ":").ok_or(Error::Parse {
        line: line_no,
        column: 1,
        message: "expected `n k : a1 .. an`".into(),
    })?;
    if colon != 2 {
        return Err(Error::Parse {
            line: line_no,
            column: toks[colon].0,
            message: "expected exactly two integers before `:`".into(),
        });
    }
    let n = int_at(toks[0].1, line_no, toks[0].0)?;
    let k = int_at(toks[1].1, line_no, toks[1].0)?;
    let mut a = Vec::with_capacity(toks.len() - 3);
    for &(col, tok) in &toks[3..] {
        a.push(int_at(tok, line_no, col)?);
    }
    KSequence::new(n, k, a).map_err(|e| Error::Parse {
        line: line_no,
        column: 1,
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> CayleyTable {
        CayleyTable::from_fn(4, |i, j| crate::arith::rep((i + j) as i64 - 1, 4)).unwrap()
    }

    #[test]
    fn text_table_is_four_plain_lines() {
        assert_eq!(
            table_to_string(&z4(), Format::Text),
            "1 2 3 4\n2 3 4 1\n3 4 1 2\n4 1 2 3\n"
        );
    }

    #[test]
    fn json_table_layout() {
        assert_eq!(
            table_to_string(&z4(), Format::Json),
            r#"{"n":4,"table":[[1,2,3,4],[2,3,4,1],[3,4,1,2],[4,1,2,3]]}"#
        );
        let c = parse_table(r#"{"n":2,"table":[[1,1],[1,1]]}"#, Format::Json).unwrap();
        assert_eq!(c, CayleyTable::constant(2, 1).unwrap());
    }

    #[test]
    fn sequence_layouts() {
        let s = KSequence::new(6, 3, vec![1, 3, 3, 1, 3, 3]).unwrap();
        assert_eq!(sequence_to_string(&s, Format::Text), "6 3 : 1 3 3 1 3 3\n");
        assert_eq!(
            sequence_to_string(&s, Format::Json),
            r#"{"n":6,"k":3,"seq":[1,3,3,1,3,3]}"#
        );
        for f in [Format::Json, Format::Text] {
            assert_eq!(parse_sequence(&sequence_to_string(&s, f), f).unwrap(), s);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_table("1 2\n2 x\n", Format::Text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_table("1 2\n2 3\n", Format::Text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_table("{\"n\":2,\n \"table\":[[1,1],[1,]]}", Format::Json) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_table(r#"{"n":3,"table":[[1,1],[1,1]]}"#, Format::Json).is_err());
        assert!(parse_sequence("4 3 1 2 3 4", Format::Text).is_err());
        assert!(parse_sequence("4 4 : 1 2 3 4", Format::Text).is_err());
        assert!(parse_table("", Format::Text).is_err());
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff("  {\"n\":1}"), Format::Json);
        assert_eq!(sniff("1 2\n2 1\n"), Format::Text);
        assert_eq!("text".parse::<Format>().unwrap(), Format::Text);
        assert!("yaml".parse::<Format>().is_err());
    }
}
