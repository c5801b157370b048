//! Streaming graph corpora: one graph6 line per graph, or consecutive
//! edge-list blocks.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::edgelist::{looks_like_header, parse_edge_list};
use crate::io::graph6::decode_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Graph6,
    EdgeList,
}

impl CorpusFormat {
    /// Edge list when the first non-empty line is an `n m` header, graph6
    /// otherwise.
    pub fn detect(text: &str) -> CorpusFormat {
        match text.lines().find(|l| !l.trim().is_empty()) {
            Some(l) if looks_like_header(l) => CorpusFormat::EdgeList,
            _ => CorpusFormat::Graph6,
        }
    }
}

/// Lazily yields `(index, graph)` with 0-based indices in stream order.
/// A malformed graph6 line yields an error naming its 1-based line number
/// and does not consume an index; reading continues with the next line.
pub struct CorpusReader<R> {
    reader: R,
    line_no: usize,
    index: usize,
    buf: String,
}

impl<R: BufRead> CorpusReader<R> {
    pub fn new(reader: R) -> Self {
        CorpusReader { reader, line_no: 0, index: 0, buf: String::new() }
    }
}

impl<R: BufRead> Iterator for CorpusReader<R> {
    type Item = Result<(usize, Graph)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line_no += 1;
            let line = self.buf.trim();
            if line.is_empty() {
                continue;
            }
            return Some(match decode_graph6(line) {
                Ok(g) => {
                    let i = self.index;
                    self.index += 1;
                    Ok((i, g))
                }
                Err(e) => Err(Error::Parse {
                    line: self.line_no,
                    content: line.to_string(),
                    message: e.to_string(),
                }),
            });
        }
    }
}

pub fn read_corpus<R: BufRead>(reader: R) -> CorpusReader<R> {
    CorpusReader::new(reader)
}

/// Reads a whole in-memory corpus in either format.
pub fn read_corpus_str(text: &str, format: CorpusFormat) -> Vec<Result<(usize, Graph)>> {
    match format {
        CorpusFormat::Graph6 => read_corpus(text.as_bytes()).collect(),
        CorpusFormat::EdgeList => {
            let mut out = Vec::new();
            let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
            let mut index = 0;
            loop {
                match parse_edge_list(&mut lines) {
                    Ok(Some(g)) => {
                        out.push(Ok((index, g)));
                        index += 1;
                    }
                    Ok(None) => break,
                    // block boundaries are lost after a bad block
                    Err(e) => {
                        out.push(Err(e));
                        break;
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_lines_in_order() {
        let got: Vec<_> = read_corpus("@\nA_\nC~\n".as_bytes()).map(Result::unwrap).collect();
        assert_eq!(got.len(), 3);
        assert_eq!(got[2], (2, Graph::complete(4)));
        assert_eq!(got[0].1.n(), 1);
    }

    #[test]
    fn empty_stream() {
        assert_eq!(read_corpus("".as_bytes()).count(), 0);
        assert_eq!(read_corpus("\n\n".as_bytes()).count(), 0);
    }

    #[test]
    fn malformed_line_is_named() {
        let got: Vec<_> = read_corpus("@\nC~~\nA_\n".as_bytes()).collect();
        match &got[1] {
            Err(Error::Parse { line, content, .. }) => {
                assert_eq!(*line, 2);
                assert_eq!(content, "C~~");
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(got[2].as_ref().unwrap().0, 1);
    }

    #[test]
    fn edge_list_blocks() {
        let text = "3 3\n0 1\n1 2\n0 2\n\n2 1\n0 1\n";
        assert_eq!(CorpusFormat::detect(text), CorpusFormat::EdgeList);
        assert_eq!(CorpusFormat::detect("C~\n"), CorpusFormat::Graph6);
        let got: Vec<_> = read_corpus_str(text, CorpusFormat::EdgeList)
            .into_iter()
            .map(Result::unwrap)
            .collect();
        assert_eq!(got, vec![(0, Graph::complete(3)), (1, Graph::complete(2))]);
    }
}
