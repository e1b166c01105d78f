//! Closest Substring: generator enumeration and its brute-force oracle.

mod generator;
mod instance;
mod solve;

pub use generator::{GeneratedStrings, GeneratorSet};
pub use instance::CsspInstance;
pub use solve::{
    brute_force_cssp, enumerate_substrings, find_generator_witness, generator_caps, solve_cssp,
    GeneratorCaps,
};
