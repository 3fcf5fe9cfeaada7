//! Two-dimensional Coxeter systems and the parabolic-intersection subgroups
//! `P_{λ|μ}` of `GL_{n+1}(F2)` they present.
//!
//! The crate has two sides that are checked against each other:
//!
//! * presentations: [`coxeter`] builds the systems `A_{2,n}(S)` and their
//!   relators, [`fp_group`] runs Todd–Coxeter coset enumeration on them;
//! * matrices: [`gf2`] provides bit-packed F2 matrices, [`matrix_group`] the
//!   generator images and group closure, [`parabolic`] the block patterns,
//!   order formulas and coset representatives.
//!
//! [`parabolic::verify_theorem`] ties both sides together for one pair of
//! decompositions; [`cli`] drives sweeps from the command line.

pub mod cli;
pub mod coxeter;
pub mod decomposition;
pub mod error;
pub mod fp_group;
pub mod gf2;
pub mod matrix_group;
pub mod parabolic;

pub use coxeter::{
    a2n, generator_subset, stopovers, Generator, GeneratorSubset, TwoDimCoxeterSystem,
};
pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use fp_group::{
    coset_enumerate, group_order, subgroup_index, verify_coset_reps, CosetTable, Word,
};
pub use gf2::{elementary, gl_order, GF2Matrix};
pub use matrix_group::{check_homomorphism, closure, eval_word, phi, MatrixGroupClosure};
pub use parabolic::{
    coset_rep_words, order_bruteforce, order_recursive, parabolic_member, verify_theorem,
    VerificationReport, VerifyOptions,
};
