//! Free 3-braid groups `G(n,3)` and the map from pure braids to them.
//!
//! * [`group`]: words, relation moves, parity invariant, bounded equality search.
//! * [`index`]: triple-index states, letter realisability, projection, censuses.
//! * [`geometry`]: exact rational motions and their collinearity words.
//! * [`reconstruction`]: cylindrical braid words and annular invariants.
//! * [`cli`]: the `freebraid` command-line front end.

pub mod cli;
pub mod geometry;
pub mod group;
pub mod index;
pub mod reconstruction;
pub mod selftest;
