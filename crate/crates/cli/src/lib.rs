//! Document formats, the example corpus and the `moddeg` command line.

pub mod app;
pub mod corpus;
pub mod doc;
pub mod emit;
pub mod encode;
pub mod load;
pub mod suite;
