//! File formats for the `perfmatch` command-line tool: graphs, rotation
//! systems, and apex tree decompositions as JSON documents.

pub mod io;
