//! Edge-list text: whitespace-separated `u3-v3` tokens.

use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use pmh_core::{EdgeSet, Graph, PerfectMatching, VertexLabel};

pub fn parse_label(token: &str) -> Result<VertexLabel> {
    let (kind, digits) = token.split_at(token.char_indices().nth(1).map_or(token.len(), |(i, _)| i));
    let index: usize = digits
        .parse()
        .map_err(|_| anyhow!("bad vertex label {token:?}"))?;
    if index == 0 {
        bail!("vertex indices start at 1: {token:?}");
    }
    match kind {
        "u" => Ok(VertexLabel::Outer(index)),
        "v" => Ok(VertexLabel::Inner(index)),
        "w" => Ok(VertexLabel::Plain(index)),
        _ => bail!("bad vertex label {token:?}: expected u<i>, v<i> or w<i>"),
    }
}

/// Edge index of one `x-y` token.
pub fn parse_edge(g: &Graph, token: &str) -> Result<usize> {
    let (x, y) = token
        .split_once('-')
        .ok_or_else(|| anyhow!("bad edge {token:?}: expected <label>-<label>"))?;
    let (x, y) = (parse_label(x)?, parse_label(y)?);
    g.edge_by_labels(x, y)
        .ok_or_else(|| anyhow!("{x}-{y} is not an edge of this graph"))
}

/// Parses an edge list; repeated edges are rejected.
pub fn parse_edge_set(g: &Graph, text: &str) -> Result<EdgeSet> {
    let mut set = g.empty_set();
    for token in text.split_whitespace() {
        let e = parse_edge(g, token)?;
        if set.contains(e) {
            bail!("edge {token} listed twice");
        }
        set.insert(e);
    }
    Ok(set)
}

pub fn parse_matching(g: &Graph, text: &str) -> Result<PerfectMatching> {
    let set = parse_edge_set(g, text)?;
    PerfectMatching::new(g, set).context("the edge list is not a perfect matching")
}

/// The literal argument, or the contents of `path` for `@path`.
pub fn read_argument(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(arg.to_owned()),
    }
}

pub fn format_edge(g: &Graph, e: usize) -> String {
    let (x, y) = g.edge_labels(e);
    format!("{x}-{y}")
}

/// Edge tokens in edge-index order.
pub fn format_edges<I: IntoIterator<Item = usize>>(g: &Graph, edges: I) -> Vec<String> {
    edges.into_iter().map(|e| format_edge(g, e)).collect()
}
