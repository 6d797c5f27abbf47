//! Temperley-Lieb diagrams, Kauffman resolution and Jones-Wenzl idempotents.

mod closure;
mod element;
mod jw;
pub(crate) mod matching;
mod resolve;
mod uv;
mod word;

use thiserror::Error;

pub use closure::{annulus_closure, closure_loops, poly_in, AnnulusPoly};
pub use element::TLElement;
pub use jw::{jones_wenzl, jones_wenzl_scaled, symmetric_sum, symmetric_sum_matches, SymmetricSumConvention};
pub use matching::{enumerate_matchings, End, Matching};
pub use resolve::{resolve, resolve_scaled, resolve_with, slice_element};
pub use uv::{build_uv, build_uv_words, CrossKind, UvConfig};
pub use word::{Slice, SliceWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("point {0} is not paired consistently")]
    NotInvolution(usize),
    #[error("pairing is not planar")]
    NotPlanar,
    #[error("slice {slice} does not fit width {width}")]
    SliceOutOfRange { slice: String, width: usize },
    #[error("[{k}]_q is not invertible in {ring}; f_{k} does not exist there")]
    DivisionByZero { k: usize, ring: String },
    #[error("scaled Jones-Wenzl coefficient is not integral")]
    NotIntegral,
    #[error("{0}")]
    Parse(String),
}
