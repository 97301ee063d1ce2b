use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use indpoly_core::Graph;

use crate::{input_err, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum InputFormat {
    /// `.json` extension or a leading `{` selects JSON, anything else edge list.
    #[default]
    Auto,
    Edges,
    Json,
}

/// Reads a graph from `path`, or stdin when `path` is `None` or `-`.
/// Returns the graph and a label identifying the source.
pub fn load_graph(path: Option<&Path>, format: InputFormat) -> CliResult<(Graph, String)> {
    let (text, identity, is_json_ext) = match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p).map_err(|e| input_err(format!("{}: {e}", p.display())))?;
            let json_ext = p.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
            (text, p.display().to_string(), json_ext)
        }
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).map_err(input_err)?;
            (text, "<stdin>".to_string(), false)
        }
    };
    let graph = parse_graph(&text, format, is_json_ext).map_err(|e| input_err(format!("{identity}: {e}")))?;
    Ok((graph, identity))
}

pub fn parse_graph(text: &str, format: InputFormat, json_extension: bool) -> Result<Graph, indpoly_core::GraphError> {
    let json = match format {
        InputFormat::Json => true,
        InputFormat::Edges => false,
        InputFormat::Auto => json_extension || text.trim_start().starts_with('{'),
    };
    if json {
        Graph::parse_json(text)
    } else {
        Graph::parse_edge_list(text)
    }
}
