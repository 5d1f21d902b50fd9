//! Graph ingestion: family specs, graph6 strings, graph6 files and stdin.

use std::fs;
use std::io::BufRead;

use anyhow::{bail, Context, Result};
use ren_core::graph::parse_graph6;
use ren_core::{FamilySpec, Graph};

/// A parsed input graph and the text that described it.
#[derive(Debug, Clone)]
pub struct Input {
    pub descriptor: String,
    pub graph: Graph,
}

/// graph6 lines of `text`, skipping blanks. `origin` labels errors.
pub fn graph6_lines(text: &str, origin: &str) -> Result<Vec<Input>> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let graph = parse_graph6(line).with_context(|| format!("{origin}:{}", i + 1))?;
        graphs.push(Input {
            descriptor: line.to_string(),
            graph,
        });
    }
    Ok(graphs)
}

pub fn read_source(path: &str, stdin: &mut dyn BufRead) -> Result<Vec<Input>> {
    if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).context("reading stdin")?;
        graph6_lines(&text, "<stdin>")
    } else {
        let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        graph6_lines(&text, path)
    }
}

/// Resolves one command-line operand: `-` (stdin), `@file`, a family spec
/// (anything containing `:`) or a single graph6 string.
pub fn resolve(arg: &str, stdin: &mut dyn BufRead) -> Result<Vec<Input>> {
    if arg == "-" {
        return read_source("-", stdin);
    }
    if let Some(path) = arg.strip_prefix('@') {
        if path.is_empty() {
            bail!("@ needs a file name");
        }
        return read_source(path, stdin);
    }
    if arg.contains(':') {
        let spec: FamilySpec = arg.parse().with_context(|| format!("family spec {arg:?}"))?;
        let graph = spec.build().with_context(|| format!("building {arg:?}"))?;
        return Ok(vec![Input {
            descriptor: spec.to_string(),
            graph,
        }]);
    }
    let graph = parse_graph6(arg).with_context(|| format!("graph6 {arg:?}"))?;
    Ok(vec![Input {
        descriptor: arg.to_string(),
        graph,
    }])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolve_str(arg: &str, stdin: &str) -> Result<Vec<Input>> {
        resolve(arg, &mut stdin.as_bytes())
    }

    #[test]
    fn operand_kinds() {
        let spec = resolve_str("cycle:5", "").unwrap();
        assert_eq!(spec[0].descriptor, "cycle:5");
        assert_eq!(spec[0].graph.size(), 5);
        let g6 = resolve_str("A_", "").unwrap();
        assert_eq!(g6[0].graph.size(), 1);
        let piped = resolve_str("-", "A_\n\n@\n").unwrap();
        assert_eq!(piped.len(), 2);
    }

    #[test]
    fn errors_name_their_source() {
        let e = resolve_str("-", "A_\nzz\n").unwrap_err();
        assert!(format!("{e:#}").contains("<stdin>:2"));
        assert!(resolve_str("bogus:3", "").is_err());
        assert!(resolve_str("@", "").is_err());
        assert!(resolve_str("@/nonexistent/file.g6", "").is_err());
    }
}
