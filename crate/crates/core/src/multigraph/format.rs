//! Text encodings: the canonical edge list, DOT, graph6 and JSON.
//!
//! Edge list layout:
//!
//! ```text
//! mgraph <n> <k>
//! <u> <v> <m>        k lines, u < v, m >= 1, sorted by (u, v)
//! label <v> <text>   optional, sorted by v
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::MultiGraph;
use crate::error::{Error, Result};

impl MultiGraph {
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = String::new();
        let _ = writeln!(out, "mgraph {} {}", self.order(), edges.len());
        for (u, v, c) in edges {
            let _ = writeln!(out, "{u} {v} {c}");
        }
        for (v, label) in self.labels() {
            let _ = writeln!(out, "label {v} {label}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let err = |line: usize, message: &str| Error::Parse {
            line,
            message: message.to_string(),
        };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
        let fields: Vec<&str> = header.split(' ').collect();
        if fields.len() != 3 || fields[0] != "mgraph" {
            return Err(err(1, "expected `mgraph <n> <k>`"));
        }
        let n: usize = fields[1].parse().map_err(|_| err(1, "bad vertex count"))?;
        let k: usize = fields[2].parse().map_err(|_| err(1, "bad pair count"))?;

        let mut g = MultiGraph::new(n);
        let mut last: Option<(usize, usize)> = None;
        for _ in 0..k {
            let (no, line) = lines.next().ok_or_else(|| err(k + 1, "missing edge line"))?;
            let parts: Vec<&str> = line.split(' ').collect();
            if parts.len() != 3 {
                return Err(err(no, "expected `u v m`"));
            }
            let parse = |s: &str| s.parse::<usize>().map_err(|_| err(no, "bad integer"));
            let (u, v, m) = (parse(parts[0])?, parse(parts[1])?, parse(parts[2])?);
            if u >= v {
                return Err(err(no, "pairs must satisfy u < v"));
            }
            if v >= n {
                return Err(err(no, "vertex out of range"));
            }
            if m == 0 || m > u32::MAX as usize {
                return Err(err(no, "multiplicity must be positive"));
            }
            if last.is_some_and(|p| p >= (u, v)) {
                return Err(err(no, "pairs must be strictly increasing"));
            }
            last = Some((u, v));
            g.add_edges(u, v, m as u32)?;
        }
        let mut last_label: Option<usize> = None;
        for (no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let rest = line
                .strip_prefix("label ")
                .ok_or_else(|| err(no, "unexpected trailing line"))?;
            let (v, text) = rest.split_once(' ').unwrap_or((rest, ""));
            let v: usize = v.parse().map_err(|_| err(no, "bad label vertex"))?;
            if v >= n {
                return Err(err(no, "label vertex out of range"));
            }
            if last_label.is_some_and(|p| p >= v) {
                return Err(err(no, "labels must be sorted by vertex"));
            }
            last_label = Some(v);
            g.set_label(v, text);
        }
        Ok(g)
    }

    /// DOT export; parallel edges are written once per copy.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            match self.label(v) {
                Some(label) => {
                    let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v, c) in self.edges() {
            for _ in 0..c {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_graph6(&self) -> Result<String> {
        if !self.is_simple() {
            return Err(Error::SimpleOnly);
        }
        let n = self.order();
        let mut bytes: Vec<u8> = Vec::new();
        if n < 63 {
            bytes.push(n as u8 + 63);
        } else if n < 258_048 {
            bytes.push(126);
            for shift in [12, 6, 0] {
                bytes.push(((n >> shift) & 0x3f) as u8 + 63);
            }
        } else {
            return Err(Error::InfeasibleParams(format!(
                "graph6 writer supports fewer than 258048 vertices, got {n}"
            )));
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.is_adjacent(i, j));
                filled += 1;
                if filled == 6 {
                    bytes.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push((acc << (6 - filled)) + 63);
        }
        Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ascii"))
    }
}

/// JSON form of a graph: the edge list as `[u, v, m]` triples plus labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub order: usize,
    pub edges: Vec<(usize, usize, u32)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
}

impl MultiGraph {
    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            order: self.order(),
            edges: self.edges(),
            labels: self.labels().clone(),
        }
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let mut g = MultiGraph::new(doc.order);
        for &(u, v, m) in &doc.edges {
            if m == 0 {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("pair {u}-{v} has multiplicity 0"),
                });
            }
            g.add_edges(u, v, m)?;
        }
        for (&v, label) in &doc.labels {
            if v >= doc.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: doc.order,
                });
            }
            g.set_label(v, label.clone());
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph documents serialize")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        MultiGraph::from_document(&serde_json::from_str(text)?)
    }
}

pub fn parse_graph6(text: &str) -> Result<MultiGraph> {
    let err = |message: &str| Error::Parse {
        line: 1,
        message: message.to_string(),
    };
    let bytes = text.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(err("graph6 byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(err("empty graph6 string")),
        [126, 126, ..] => return Err(err("graphs beyond 258047 vertices are not supported")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(err("truncated size field")),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(err("body length does not match vertex count"));
    }
    let mut g = MultiGraph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}
