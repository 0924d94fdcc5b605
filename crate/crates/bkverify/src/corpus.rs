//! graph6 record streams: one graph per line.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use bkverify_core::graph6::{from_graph6, to_graph6};
use bkverify_core::Graph;

const HEADER: &str = ">>graph6<<";

/// One line of a graph6 stream.
#[derive(Debug, Clone)]
pub struct Record {
    /// 1-based line number in the source.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, String>,
}

/// Parse every record of a stream. Blank lines are skipped and an optional
/// `>>graph6<<` header prefix is accepted on any line.
pub fn read_records<R: BufRead>(reader: R) -> io::Result<Vec<Record>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim_end_matches('\r');
        let text = text.strip_prefix(HEADER).unwrap_or(text).trim();
        if text.is_empty() {
            continue;
        }
        let graph = from_graph6(text.as_bytes()).map_err(|e| e.to_string());
        out.push(Record {
            line: i + 1,
            text: text.to_string(),
            graph,
        });
    }
    Ok(out)
}

pub fn read_file(path: &Path) -> io::Result<Vec<Record>> {
    read_records(BufReader::new(File::open(path)?))
}

/// Write one graph6 line per graph.
pub fn write_graphs<'a, W: Write>(mut out: W, graphs: impl IntoIterator<Item = &'a Graph>) -> io::Result<()> {
    for g in graphs {
        out.write_all(&to_graph6(g))?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn graph6_string(g: &Graph) -> String {
    String::from_utf8(to_graph6(g)).expect("graph6 is printable ASCII")
}
