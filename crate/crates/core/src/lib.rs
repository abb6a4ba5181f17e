//! Exact weight enumerators for simultaneous-congruence (SC) codes.
//!
//! An SC code is the set of words `x` in `[r]^n` with `rho_i(x) = a_i (mod m_i)`
//! for a list of statistics `rho_i`. Binary VT, Levenshtein, Helberg,
//! Le-Nguyen, shifted VT, the non-binary Tenengolts codes and linear codes
//! over `Z_r` are all of this shape.
//!
//! The crate computes extended, complete and Hamming weight enumerators of
//! these codes two ways: by brute-force enumeration, and through a character
//! sum over the residue grid `[m_1] x ... x [m_s]` evaluated in the group ring
//! of roots of unity. Everything is exact; there is no floating point.
//!
//! Modules, bottom up:
//! - [`numtheory`]: gcd, factorization, totient, Mobius, Ramanujan sums.
//! - [`exactalg`]: cyclotomic group-ring elements and sparse polynomials.
//! - [`qcalc`]: q-integers, q-binomials, q-multinomials and their values at
//!   primitive roots of unity.
//! - [`codes`]: statistics, code specifications, membership and families.
//! - [`enumerators`]: oracle and character-sum enumerators, closed forms.
//! - [`macwilliams`]: linear codes over `Z_r` and the MacWilliams identity.
//! - [`cli`]: the `sccodes` command-line front end.

pub mod cli;
pub mod codes;
pub mod enumerators;
pub mod error;
pub mod exactalg;
pub mod macwilliams;
pub mod numtheory;
pub mod qcalc;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
