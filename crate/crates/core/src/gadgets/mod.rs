//! Max-XOR formulas and their gadget graphs.

pub mod gadget;
pub mod xor;

pub use gadget::{build_gadget_graph, GadgetGraph, GADGET_AGE};
pub use xor::{
    extend_assignment, max_xor_brute, reduce_maxxor_to_3, xor_satisfied_count, Lit, XorFormula,
};
