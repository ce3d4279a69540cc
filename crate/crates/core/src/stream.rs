//! Graph sources with hypothesis filters, as consumed by the harness.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;

use crate::enumerate::{enumerate_connected, enumerate_trees};
use crate::error::Result;
use crate::graph::Graph;
use crate::io::{parse_edge_list, parse_graph6_lines};

#[derive(Debug, Clone)]
pub enum Source {
    /// Builtin connected graphs, one per isomorphism class.
    Connected(RangeInclusive<usize>),
    /// Builtin free trees, one per isomorphism class.
    Trees(RangeInclusive<usize>),
    /// Graphs given verbatim, e.g. read from a file.
    Given { label: String, graphs: Vec<Graph> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected: bool,
    pub identifiable: bool,
    pub twin_free: bool,
    pub min_girth: Option<usize>,
    pub trees_only: bool,
    pub max_n: Option<usize>,
}

impl Filters {
    pub fn accepts(&self, g: &Graph) -> bool {
        self.max_n.is_none_or(|m| g.n() <= m)
            && (!self.connected || g.is_connected())
            && (!self.trees_only || g.is_tree())
            && (!self.identifiable || g.is_identifiable())
            && (!self.twin_free || g.is_twin_free())
            && self.min_girth.is_none_or(|k| g.girth().at_least(k))
    }
}

#[derive(Debug, Clone)]
pub struct GraphStream {
    pub source: Source,
    pub filters: Filters,
}

impl GraphStream {
    pub fn connected(orders: RangeInclusive<usize>) -> Self {
        Self::new(Source::Connected(orders))
    }

    pub fn trees(orders: RangeInclusive<usize>) -> Self {
        Self::new(Source::Trees(orders))
    }

    pub fn given(label: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Self::new(Source::Given {
            label: label.into(),
            graphs,
        })
    }

    /// One graph per line in graph6, or a single edge list when every
    /// non-comment line is made of integers only.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(Self::given(
            path.display().to_string(),
            parse_graphs(&text)?,
        ))
    }

    fn new(source: Source) -> Self {
        GraphStream {
            source,
            filters: Filters::default(),
        }
    }

    pub fn with_filters(mut self, filters: Filters) -> Self {
        self.filters = filters;
        self
    }

    pub fn connected_only(mut self) -> Self {
        self.filters.connected = true;
        self
    }

    pub fn identifiable(mut self) -> Self {
        self.filters.identifiable = true;
        self
    }

    pub fn twin_free(mut self) -> Self {
        self.filters.twin_free = true;
        self
    }

    pub fn min_girth(mut self, g: usize) -> Self {
        self.filters.min_girth = Some(g);
        self
    }

    pub fn trees_only(mut self) -> Self {
        self.filters.trees_only = true;
        self
    }

    pub fn max_n(mut self, n: usize) -> Self {
        self.filters.max_n = Some(self.filters.max_n.map_or(n, |m| m.min(n)));
        self
    }

    /// Materializes the stream in its deterministic order.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        match &self.source {
            Source::Connected(orders) => {
                for n in orders.clone() {
                    out.extend(enumerate_connected(n)?);
                }
            }
            Source::Trees(orders) => {
                for n in orders.clone() {
                    out.extend(enumerate_trees(n)?);
                }
            }
            Source::Given { graphs, .. } => out.extend(graphs.iter().cloned()),
        }
        out.retain(|g| self.filters.accepts(g));
        Ok(out)
    }
}

impl fmt::Display for GraphStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            Source::Connected(r) => write!(f, "builtin connected n={}..={}", r.start(), r.end())?,
            Source::Trees(r) => write!(f, "builtin trees n={}..={}", r.start(), r.end())?,
            Source::Given { label, graphs } => write!(f, "{label} ({} graphs)", graphs.len())?,
        }
        let fl = &self.filters;
        let mut tags = Vec::new();
        if fl.connected {
            tags.push("connected".to_owned());
        }
        if fl.trees_only {
            tags.push("trees".to_owned());
        }
        if fl.identifiable {
            tags.push("identifiable".to_owned());
        }
        if fl.twin_free {
            tags.push("twin-free".to_owned());
        }
        if let Some(g) = fl.min_girth {
            tags.push(format!("girth>={g}"));
        }
        if let Some(n) = fl.max_n {
            tags.push(format!("n<={n}"));
        }
        if !tags.is_empty() {
            write!(f, " [{}]", tags.join(", "))?;
        }
        Ok(())
    }
}

/// Whether `text` looks like an edge list rather than graph6 lines.
pub fn looks_like_edge_list(text: &str) -> bool {
    let mut any = false;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !line
            .chars()
            .all(|c| c.is_ascii_digit() || c.is_whitespace())
        {
            return false;
        }
        any = true;
    }
    any || text.trim_start().starts_with('#')
}

/// Parses either format, auto-detected by [`looks_like_edge_list`].
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    if looks_like_edge_list(text) {
        Ok(vec![parse_edge_list(text)?])
    } else {
        parse_graph6_lines(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_apply() {
        let s = GraphStream::connected(1..=5).twin_free().min_girth(5);
        let gs = s.graphs().unwrap();
        assert!(gs.iter().all(|g| g.is_twin_free() && g.girth().at_least(5)));
        assert!(gs.iter().any(|g| g.n() == 5 && g.edge_count() == 5));
        assert_eq!(
            GraphStream::trees(1..=7).graphs().unwrap().len(),
            1 + 1 + 1 + 2 + 3 + 6 + 11
        );
        assert!(s.to_string().contains("twin-free"));
    }

    #[test]
    fn format_detection() {
        assert!(looks_like_edge_list("3\n0 1\n1 2\n"));
        assert!(looks_like_edge_list("# only comment\n"));
        assert!(!looks_like_edge_list("Bg\n"));
        assert!(!looks_like_edge_list("?\n"));
        assert_eq!(parse_graphs("Bg\nA_\n").unwrap().len(), 2);
        assert_eq!(parse_graphs("0 1\n").unwrap()[0].n(), 2);
    }
}
