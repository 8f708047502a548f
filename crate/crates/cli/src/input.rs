//! Resolves an INPUT argument to a colored graph.

use std::fs;
use std::path::Path;

use domgame_core::engine::VertexSet;
use domgame_core::{parse_family, parse_graph, ColoredGraph, FamilySpec};

pub struct Input {
    pub text: String,
    pub graph: ColoredGraph,
    /// Present when the input was a family description.
    pub family: Option<FamilySpec>,
}

pub fn load(arg: &str) -> Result<Input, String> {
    let path = Path::new(arg);
    let from_file = path.is_file();
    let raw = if from_file {
        fs::read_to_string(path).map_err(|e| format!("cannot read {arg}: {e}"))?
    } else {
        arg.to_string()
    };
    let trimmed = raw.trim();
    if looks_like_family(trimmed) {
        let family = parse_family(trimmed).map_err(|e| format!("family description: {e}"))?;
        let graph = family.build().map_err(|e| format!("family description: {e}"))?;
        return Ok(Input { text: trimmed.to_string(), graph, family: Some(family) });
    }
    let edges = if from_file { raw.clone() } else { raw.replace(';', "\n") };
    let graph = parse_graph(&edges).map_err(|e| format!("edge list: {e}"))?;
    if graph.vertex_count() == 0 && !from_file {
        return Err(format!("{arg:?} is neither a file, a family description nor an edge list"));
    }
    Ok(Input { text: arg.to_string(), graph, family: None })
}

fn looks_like_family(text: &str) -> bool {
    let name: String = text.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    !name.is_empty() && text[name.len()..].trim_start().starts_with('(')
}

pub fn predominated(graph: &ColoredGraph, labels: &[String]) -> Result<VertexSet, String> {
    let mut set = VertexSet::EMPTY;
    for label in labels {
        let v = graph.find_label(label).ok_or_else(|| format!("--predominate: no vertex labelled {label:?}"))?;
        if v >= 64 {
            return Err(format!("--predominate: vertex {label:?} is beyond the 64-vertex limit"));
        }
        set.insert(v);
    }
    Ok(set)
}
