//! Braid groups under the dual (band-generator) Garside structure.
//!
//! Simple elements are noncrossing partitions ([`ncp`]); elements are kept in
//! left normal form ([`garside`]); super summit sets are reached by cycling
//! and decycling ([`summit`]). On top of that, [`periodic`] solves the
//! conjugacy search problem for periodic braids with explicit, self-checked
//! conjugators, and [`enumerate`] lists and counts the super summit sets of
//! the powers `ε^d` of `ε = δσ_1` for divisors `d` of `n - 1`.

pub mod cli;
pub mod draw;
pub mod enumerate;
pub mod error;
pub mod garside;
pub mod ncp;
pub mod parse;
pub mod periodic;
pub mod summit;
pub mod word;

pub use error::{ClaimFailure, Error, Result};
pub use garside::{normalize, NormalForm};
pub use ncp::{NoncrossingPartition, Simple};
pub use parse::parse_word;
pub use word::{exponent_sum, permutation_of, BandGenerator, BraidWord, Permutation, Sign};

/// Largest supported strand count; strand indices are stored in a byte.
pub const MAX_STRANDS: usize = 255;

pub(crate) fn check_strands(n: usize) -> Result<()> {
    if n == 0 || n > MAX_STRANDS {
        Err(Error::StrandCount(n))
    } else {
        Ok(())
    }
}
