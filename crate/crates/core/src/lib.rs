//! Integer partitions whose parts are distinct except for one end.
//!
//! `S_k(n)` holds the partitions of `n` whose smallest part occurs exactly `k`
//! times with every other part distinct; `L_k(n)` is the same with the
//! largest part. Both reduce to the strict partitions `Q(n)` at `k = 1`.
//!
//! The crate provides
//!
//! - exhaustive enumeration of each family ([`partition`]),
//! - exact counts from recurrences over a doubly checked `q(n)` table ([`counting`]),
//! - the explicit bijections behind those recurrences, with round-trip checks ([`bijection`]),
//! - symbolic expansions of `s_k` and `ℓ_k` in shifted `q` values and the
//!   resulting bounds on `q(n)` ([`identity`]),
//! - comparisons against published formulas ([`errata`]) and OEIS b-files ([`oeis`]).
//!
//! ```
//! use kfold_partitions::{counting, identity, partition::ClassTag};
//!
//! let q = counting::q_table(20).unwrap();
//! assert_eq!(counting::s_count(2, 9, &q).unwrap(), 4u32.into());
//!
//! let s3 = identity::expand_smallest(3).unwrap();
//! assert_eq!(s3.to_string(), "2q(n-3) - 2q(n-1) + q(n)");
//! assert_eq!(kfold_partitions::partition::enumerate(ClassTag::largest(2).unwrap(), 8).len(), 2);
//! ```

pub mod bijection;
pub mod cli;
pub mod counting;
pub mod errata;
mod error;
pub mod identity;
pub mod oeis;
pub mod partition;
pub mod published;
pub mod report;
pub mod table;

pub use error::{Error, Result};

/// Exact nonnegative count.
pub type Count = num_bigint::BigUint;
