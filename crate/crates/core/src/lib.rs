//! Exact Kauffman-bracket and stated skein calculus.
//!
//! The crate computes with Temperley-Lieb diagrams and Jones-Wenzl idempotents, evaluates
//! stated tangles in the bigon to normal forms in `O_{q^2}(SL_2)`, implements the cutting
//! and slitting state sums, certifies zero and nonzero classes in the commutator quotient,
//! and bundles a suite of root-of-unity checks.

pub mod ring;
pub mod tl;
pub mod oq;
pub mod parse;
pub mod bigon;
pub mod cutting;
pub mod hh0;
