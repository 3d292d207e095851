//! Combinatorial group theory for braid-monodromy presentations, with exact
//! plane-curve checks.
//!
//! The group side works with freely reduced [`word::Word`]s. Braids act on
//! them from the right ([`braid`]), presentations are built and simplified in
//! [`presentation`], finite-index kernels are presented by
//! [`schreier`], and [`analysis`] decides finite quotients by coset
//! enumeration and abelianisations by Smith normal form. [`pipeline`] chains
//! these into the orbifold fundamental group computation; [`curves`] checks
//! the plane configuration it is built on.

pub mod analysis;
pub mod braid;
pub mod curves;
pub mod pipeline;
pub mod presentation;
pub mod schreier;
pub mod syntax;
pub mod word;
