//! Text formats: edge lists, DOT, cut files and verification CSV rows.

use std::fmt::Write as _;

use crate::cuts::VerificationReport;
use crate::graph::Graph;
use crate::shape::{CutMember, Mode, ShapeSpec, StructureCut};
use crate::{Error, Result};

/// `# graph <family> <params>` then one `u<TAB>v` line per edge, edges in
/// id order with the smaller id first.
pub fn write_edge_list(g: &Graph, family: &str, params: &str) -> String {
    let mut out = format!("# graph {family} {params}\n");
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            let _ = writeln!(out, "# isolated {}", g.label(v));
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{}\t{}", g.label(a), g.label(b));
    }
    out
}

/// A parsed edge list.
#[derive(Clone, Debug)]
pub struct EdgeList {
    pub family: String,
    pub params: String,
    /// Vertex ids follow first appearance in the file.
    pub graph: Graph,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut lines = text.lines().enumerate();
    let (family, params) = match lines.next() {
        Some((_, first)) => {
            let rest = first
                .strip_prefix("# graph ")
                .ok_or_else(|| parse_err(0, "expected `# graph <family> <params>` header"))?;
            let (family, params) = rest.split_once(' ').unwrap_or((rest, ""));
            (family.to_owned(), params.trim().to_owned())
        }
        None => return Err(parse_err(0, "empty input")),
    };
    let mut labels: Vec<String> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::new();
    let mut note = |l: &str, labels: &mut Vec<String>| {
        if seen.insert(l.to_owned()) {
            labels.push(l.to_owned());
        }
    };
    for (i, line) in lines {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(v) = rest.trim().strip_prefix("isolated ") {
                note(v.trim(), &mut labels);
            }
            continue;
        }
        let (a, b) = line
            .split_once('\t')
            .ok_or_else(|| parse_err(i, "expected `u<TAB>v`"))?;
        let (a, b) = (a.trim(), b.trim());
        if a.is_empty() || b.is_empty() || b.contains('\t') {
            return Err(parse_err(i, "expected exactly two labels"));
        }
        note(a, &mut labels);
        note(b, &mut labels);
        edges.push((a.to_owned(), b.to_owned()));
    }
    let graph = Graph::build(labels, edges)?;
    Ok(EdgeList { family, params, graph })
}

/// Graphviz rendering with the same labels and edge order as the edge list.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            let _ = writeln!(out, "  \"{}\";", g.label(v));
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.label(a), g.label(b));
    }
    out.push_str("}\n");
    out
}

/// `# cut <family> <params> shape=<tag> mode=<mode>` then `<tag>: v1,v2,…`
/// per member.
pub fn write_cut(family: &str, params: &str, shape: ShapeSpec, cut: &StructureCut) -> String {
    let mut out = format!("# cut {family} {params} shape={shape} mode={}\n", cut.mode);
    for m in &cut.members {
        let _ = writeln!(out, "{}: {}", m.shape, m.vertices.join(","));
    }
    out
}

/// A parsed cut file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutFile {
    pub family: String,
    pub params: String,
    pub shape: ShapeSpec,
    pub cut: StructureCut,
}

pub fn parse_cut(text: &str) -> Result<CutFile> {
    let mut lines = text.lines().enumerate();
    let header = lines.next().map(|(_, l)| l).unwrap_or_default();
    let words: Vec<&str> = header
        .strip_prefix("# cut ")
        .ok_or_else(|| parse_err(0, "expected `# cut …` header"))?
        .split_whitespace()
        .collect();
    let shape_at = words
        .iter()
        .position(|w| w.starts_with("shape="))
        .ok_or_else(|| parse_err(0, "missing shape="))?;
    let (Some(family), Some(mode)) = (words.first(), words.get(shape_at + 1)) else {
        return Err(parse_err(0, "expected family, shape= and mode="));
    };
    let shape: ShapeSpec = words[shape_at]["shape=".len()..]
        .parse()
        .map_err(|e: Error| parse_err(0, &e.to_string()))?;
    let mode: Mode = mode
        .strip_prefix("mode=")
        .ok_or_else(|| parse_err(0, "missing mode="))?
        .parse()
        .map_err(|e: Error| parse_err(0, &e.to_string()))?;
    let params = words[1..shape_at].join(" ");
    let mut members = Vec::new();
    for (i, line) in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (tag, verts) = line.split_once(':').ok_or_else(|| parse_err(i, "expected `<tag>: v1,v2,…`"))?;
        let tag: ShapeSpec = tag.trim().parse().map_err(|e: Error| parse_err(i, &e.to_string()))?;
        let verts: Vec<&str> = verts.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        if verts.is_empty() {
            return Err(parse_err(i, "member without vertices"));
        }
        members.push(CutMember::new(tag, verts));
    }
    Ok(CutFile {
        family: (*family).to_owned(),
        params,
        shape,
        cut: StructureCut::new(members, mode),
    })
}

pub const CSV_HEADER: &str = "family,params,shape,mode,predicted,members,vertices_removed,components,min_component,pass";

/// One CSV row for a verified cut. Params are space-separated inside the
/// field, so no quoting is needed.
pub fn csv_row(family: &str, params: &str, predicted: Option<usize>, report: &VerificationReport) -> String {
    format!(
        "{family},{params},{},{},{},{},{},{},{},{}",
        report.shape,
        report.mode,
        predicted.map_or_else(String::new, |p| p.to_string()),
        report.member_count(),
        report.vertices_removed,
        report.component_count(),
        report.min_component(),
        report.pass
    )
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse { line: line + 1, msg: msg.to_owned() }
}
