//! Signed-DIMACS text format.
//!
//! ```text
//! c optional comment
//! p sgraph <order> <edge-count>
//! l <u> <text>
//! e <u> <v> <+|->
//! ```
//!
//! Vertices are 1-indexed on disk. Writing is canonical (header, labels in
//! vertex order, edges in sorted order), so write-read-write round-trips are
//! byte identical.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::graph::{Sign, SignedGraph};
use crate::{Error, Result};

pub fn read_signed(reader: impl BufRead) -> Result<SignedGraph> {
    let mut order: Option<usize> = None;
    let mut declared_edges = 0usize;
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let parse = |msg: &str| Error::Parse { line: lineno, msg: msg.to_string() };
        let trimmed = line.trim_end();
        if trimmed.is_empty() {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("c") => {}
            Some("p") => {
                if order.is_some() {
                    return Err(parse("duplicate header"));
                }
                if tokens.next() != Some("sgraph") {
                    return Err(parse("expected `p sgraph <order> <edges>`"));
                }
                let n: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse("bad order"))?;
                declared_edges = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse("bad edge count"))?;
                order = Some(n);
            }
            Some("e") => {
                let n = order.ok_or_else(|| parse("edge before header"))?;
                let u: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse("bad endpoint"))?;
                let v: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse("bad endpoint"))?;
                let sign = match tokens.next() {
                    Some("+") => Sign::Plus,
                    Some("-") => Sign::Minus,
                    _ => return Err(parse("edge sign must be + or -")),
                };
                if u == 0 || u > n || v == 0 || v > n {
                    return Err(parse("vertex id out of range"));
                }
                if u == v {
                    if sign == Sign::Minus {
                        return Err(parse("negative loop"));
                    }
                    continue; // positive loops are implicit, drop them
                }
                edges.push((u - 1, v - 1, sign));
            }
            Some("l") => {
                let n = order.ok_or_else(|| parse("label before header"))?;
                let u: usize = tokens
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| parse("bad label vertex"))?;
                if u == 0 || u > n {
                    return Err(parse("vertex id out of range"));
                }
                let rest = tokens.collect::<Vec<_>>().join(" ");
                if rest.is_empty() {
                    return Err(parse("empty label"));
                }
                labels.push((u - 1, rest));
            }
            Some(tok) => {
                return Err(parse(&format!("unknown line type `{tok}`")));
            }
            None => {}
        }
    }

    let order = order.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let _ = declared_edges; // advisory; canonical count may differ after dedup
    let mut g = SignedGraph::from_edges(order, edges)?;
    for (v, text) in labels {
        g.set_label(v, text)?;
    }
    Ok(g)
}

pub fn write_signed(mut writer: impl Write, g: &SignedGraph) -> Result<()> {
    writeln!(writer, "p sgraph {} {}", g.order(), g.edge_count())?;
    for v in 0..g.order() {
        if let Some(label) = g.label(v) {
            writeln!(writer, "l {} {}", v + 1, label)?;
        }
    }
    for e in g.edges() {
        writeln!(writer, "e {} {} {}", e.u + 1, e.v + 1, e.sign)?;
    }
    Ok(())
}

pub fn read_signed_file(path: impl AsRef<Path>) -> Result<SignedGraph> {
    read_signed(BufReader::new(File::open(path)?))
}

pub fn write_signed_file(path: impl AsRef<Path>, g: &SignedGraph) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    write_signed(&mut w, g)?;
    w.flush()?;
    Ok(())
}

pub fn to_string(g: &SignedGraph) -> String {
    let mut buf = Vec::new();
    write_signed(&mut buf, g).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("format is ASCII")
}
