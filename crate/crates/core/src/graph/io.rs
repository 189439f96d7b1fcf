//! Adjacency-matrix and edge-list CSV formats.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::FaultGraph;
use crate::error::{Error, Result};
use crate::ids::FaultId;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn cells(line: &str) -> Vec<&str> {
    line.split(',').map(str::trim).collect()
}

fn parse_ids(line: usize, raw: &[&str]) -> Result<Vec<FaultId>> {
    raw.iter()
        .map(|c| {
            c.parse::<FaultId>()
                .map_err(|message| Error::Parse { line, message })
        })
        .collect()
}

/// Parses a square 0/1 matrix, row = dependent fault, column = leading fault.
///
/// Without headers the faults are numbered `1..=n`. A header row is recognised
/// when its first cell is not `0`/`1` (a corner label such as `fault`, or
/// empty); a header column when every data row carries one more cell than
/// there are rows. If both are present they must list the same ids.
pub fn load_adjacency_matrix(text: &str) -> Result<FaultGraph> {
    let mut rows: Vec<(usize, Vec<&str>)> =
        content_lines(text).map(|(n, l)| (n, cells(l))).collect();
    if rows.is_empty() {
        return Ok(FaultGraph::new([], []).expect("empty graph"));
    }

    let header = match rows[0].1.first() {
        Some(&c) if c != "0" && c != "1" => Some(rows.remove(0)),
        _ => None,
    };
    let n = rows.len();
    let has_header_col = n > 0 && rows.iter().all(|(_, r)| r.len() == n + 1);

    let mut col_ids: Option<Vec<FaultId>> = None;
    if let Some((line, h)) = &header {
        let ids = match h.len() {
            len if len == n + 1 => &h[1..],
            len if len == n && !has_header_col => &h[..],
            len => {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("header has {len} cells for a {n}-row matrix"),
                })
            }
        };
        col_ids = Some(parse_ids(*line, ids)?);
    }

    let mut row_ids = Vec::with_capacity(n);
    let mut data: Vec<&[&str]> = Vec::with_capacity(n);
    for (k, (line, r)) in rows.iter().enumerate() {
        if has_header_col {
            row_ids.push(parse_ids(*line, &r[..1])?[0]);
            data.push(&r[1..]);
        } else {
            data.push(&r[..]);
            row_ids.push(FaultId(k as u32 + 1));
        }
    }
    let ids = match (col_ids, has_header_col) {
        (Some(cols), true) if cols != row_ids => {
            return Err(Error::Parse {
                line: header.as_ref().map_or(1, |h| h.0),
                message: "row and column headers list different fault ids".into(),
            })
        }
        (Some(cols), false) => cols,
        _ => row_ids,
    };

    let mut edges = Vec::new();
    for (k, r) in data.iter().enumerate() {
        if r.len() != n {
            return Err(Error::NotSquare {
                rows: n,
                row: k + 1,
                columns: r.len(),
            });
        }
        for (j, cell) in r.iter().enumerate() {
            let (row, column) = (ids[k], ids[j]);
            match *cell {
                "0" => {}
                "1" if k == j => {
                    return Err(Error::InvalidCell {
                        row,
                        column,
                        message: "nonzero diagonal (self-dependency)".into(),
                    })
                }
                "1" => edges.push((row, column)),
                other => {
                    return Err(Error::InvalidCell {
                        row,
                        column,
                        message: format!("entry `{other}` is not 0 or 1"),
                    })
                }
            }
        }
    }
    FaultGraph::new(ids, edges)
}

/// Parses `dependent,leading` lines. A line holding a single id declares an
/// isolated fault. An optional header line is accepted first.
pub fn load_edge_list(text: &str) -> Result<FaultGraph> {
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for (k, (line, raw)) in content_lines(text).enumerate() {
        let c: Vec<&str> = cells(raw);
        let c: Vec<&str> = match c.as_slice() {
            [a, ""] => vec![*a],
            _ => c,
        };
        if k == 0 && c[0].parse::<FaultId>().is_err() && c[0].chars().any(|ch| ch.is_alphabetic()) {
            continue;
        }
        match parse_ids(line, &c)?.as_slice() {
            [id] => {
                nodes.insert(*id);
            }
            [dependent, leading] => {
                if dependent == leading {
                    return Err(Error::Parse {
                        line,
                        message: format!("fault {dependent} cannot depend on itself"),
                    });
                }
                if !edges.insert((*dependent, *leading)) {
                    return Err(Error::Parse {
                        line,
                        message: format!("duplicate dependency {dependent} -> {leading}"),
                    });
                }
                nodes.insert(*dependent);
                nodes.insert(*leading);
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `dependent,leading`, got {} fields", c.len()),
                })
            }
        }
    }
    FaultGraph::new(nodes, edges)
}

/// Matrix CSV with a `fault` corner and id headers on both axes.
pub fn to_adjacency_csv(g: &FaultGraph) -> String {
    let mut out = String::from("fault");
    for id in g.nodes() {
        write!(out, ",{}", id.get()).unwrap();
    }
    out.push('\n');
    for (id, row) in g.nodes().iter().zip(g.adjacency_matrix()) {
        write!(out, "{}", id.get()).unwrap();
        for v in row {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Edge list with header; isolated faults follow as single-id lines.
pub fn to_edge_list_csv(g: &FaultGraph) -> String {
    let mut out = String::from("dependent,leading\n");
    for (a, b) in g.edges() {
        writeln!(out, "{},{}", a.get(), b.get()).unwrap();
    }
    for (i, id) in g.nodes().iter().enumerate() {
        if g.in_degree(i) == 0 && g.out_degree(i) == 0 {
            writeln!(out, "{}", id.get()).unwrap();
        }
    }
    out
}
