pub mod arith;
pub mod cli;
pub mod condition_c;
pub mod constructions;
pub mod error;
pub mod inequalities;
pub mod rng;
pub mod search;
pub mod symmfn;
pub mod upoly;
