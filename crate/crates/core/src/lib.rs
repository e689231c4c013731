pub mod certify;
pub mod cli;
pub mod construct;
pub mod decompose;
pub mod dot;
pub mod error;
pub mod graph;
pub mod listcover;
mod matching;
pub mod transversal;
