//! Exact verification of commutator and 2x2 trace identities over
//! finite-dimensional noncommutative rings.
//!
//! Rings are presented by structure constants over the rationals: truncated
//! Grassmann algebras, full matrix rings, and the equal-diagonal
//! upper-triangular construction `U3*(R)`, nested to any depth within
//! 64 dimensions. Identities are checked at generic elements whose
//! coordinates are independent commuting variables, so a pass holds for
//! every element of the ring; failures come with a concrete witness.
//!
//! ## Examples
//!
//! ```text
//! examples/
//! ├── exact_scalars.rs      rationals that never overflow, sparse polynomials
//! ├── rings.rs              Grassmann, U3* and matrix-unit products, 3x3 embedding
//! ├── matrices.rs           2x2 matrices, left vs right scalars
//! ├── parse_spec.rs         the `u3star(grassmann:2)` spec grammar and its errors
//! ├── trace_identities.rs   commutator-matrix displays, the 34-term identity
//! ├── bridges.rs            identities that hold over every ring, with diffs
//! ├── verify_generic.rs     generic checks with witnesses on failure
//! ├── witness_search.rs     separating [[x,y],[u,v]] from [x,y][u,v] and [[x,y],z]
//! ├── thm21.rs              hypotheses on S, conclusion on U3*(S)
//! ├── probe_question.rs     does [[x,y],[x,z]] = 0 force [[x,y],[u,v]] = 0?
//! └── ck_recursion.rs       C_{k+1} = C_k^2 - 1/2 tr(C_k^2) I
//! ```
//!
//! ```bash
//! cargo run --example verify_generic -- thm37 "u3star(u3star(rat))"
//! cargo run --example witness_search
//! ```
//!
//! The `ringcheck` binary exposes the same checks from the command line;
//! see [`cli`].

pub mod algebra;
pub mod cli;
pub mod identities;
pub mod matrix;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod spec;
pub mod verifier;
