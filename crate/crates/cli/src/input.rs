//! Edge-list graph files: one `label_u label_v signed_weight` record per line,
//! `#` starts a comment, blank lines are ignored. The sign of the weight is
//! the sign of the edge.

use std::path::Path;

use signed_spectra::{GraphBuilder, SignedGraph};

use crate::CliError;

pub fn parse_graph(text: &str) -> Result<SignedGraph, CliError> {
    let mut builder = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [u, v, w] => {
                let weight: f64 = w.parse().map_err(|_| CliError::Parse {
                    line,
                    message: format!("invalid weight {w:?}"),
                })?;
                builder
                    .edge_at(Some(line), u, v, weight)
                    .map_err(|e| CliError::Parse {
                        line,
                        message: e.to_string(),
                    })?;
            }
            _ => {
                return Err(CliError::Parse {
                    line,
                    message: format!(
                        "expected `label_u label_v signed_weight`, found {} field(s)",
                        fields.len()
                    ),
                })
            }
        }
    }
    let g = builder.build();
    if g.vertex_count() == 0 {
        return Err(CliError::Usage("graph file contains no edges".into()));
    }
    Ok(g)
}

pub fn read_graph(path: &Path) -> Result<SignedGraph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_graph(&text)
}
