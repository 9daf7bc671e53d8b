use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{from_graph6, Graph};

/// Streaming graph6 decoder over a line source. Blank lines are skipped.
/// Malformed lines yield [`Error::Line`] with a 1-based line number; in
/// strict mode the stream ends after the first such error. A read failure
/// yields [`Error::Io`] and ends the stream.
pub struct Graph6Lines<R> {
    reader: R,
    strict: bool,
    line: usize,
    done: bool,
    buf: String,
}

pub fn ingest_graph6<R: BufRead>(reader: R, strict: bool) -> Graph6Lines<R> {
    Graph6Lines { reader, strict, line: 0, done: false, buf: String::new() }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        while !self.done {
            self.buf.clear();
            self.line += 1;
            let item = match self.reader.read_line(&mut self.buf) {
                Ok(0) => {
                    self.done = true;
                    return None;
                }
                Ok(_) => {
                    let text = self.buf.trim_end_matches(['\n', '\r']);
                    if text.trim().is_empty() {
                        continue;
                    }
                    from_graph6(text)
                }
                Err(e) => {
                    self.done = true;
                    return Some(Err(e.into()));
                }
            };
            return Some(item.map_err(|e| {
                self.done |= self.strict;
                Error::Line { line: self.line, source: Box::new(e) }
            }));
        }
        None
    }
}
