//! Graph interchange: graph6, edge lists, corpus streams and reports.

pub mod corpus;
pub mod edgelist;
pub mod graph6;
pub mod report;

pub use corpus::{read_corpus, read_corpus_str, CorpusFormat, CorpusReader};
pub use edgelist::{read_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6};
pub use report::{write_report, ReportFormat, ReportSummary, VerdictRecord};
