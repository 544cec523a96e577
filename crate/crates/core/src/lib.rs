//! Exact computation in degenerate cyclotomic Hecke algebras of type G(m,1,n):
//! Jucys–Murphy normal forms, inductive bases and Markov traces.

pub mod coeffring;
pub mod heckealg;
pub mod inductive;
pub mod markov;
pub mod symgroup;
pub mod verify;
