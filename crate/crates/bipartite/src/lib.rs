//! File formats, generators and the command-line front end for
//! `bipartite-core`.

pub mod bench;
pub mod cli;
pub mod gen;
pub mod instance;
pub mod output;
pub mod svg;
