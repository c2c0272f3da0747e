//! The minimal Euclidean function `phi` on the Gaussian integers `Z[i]`.
//!
//! `phi(z)` is the least `n` such that `z = sum_{j=0..n} d_j (1+i)^j` with
//! digits `d_j` in `{0, 1, -1, i, -i}` and a nonzero top digit. The pre-image
//! `phi^{-1}([0, n])` is the origin together with the disjoint union of the
//! scaled perforated octagons `2^j S_{n-2j}`, which gives fast evaluation,
//! enumeration and closed-form counts. The [`oracle`] module recomputes `phi`
//! from the digit definition alone and is what everything else is checked
//! against.

pub mod error;
pub mod gaussian;
pub mod oracle;
pub mod phi;
pub mod regions;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
pub use gaussian::{has_odd_gcd, is_unit, min_two_adic_valuation, w, GaussianInt, Unit};
pub use oracle::{expansion_eval, expansion_of, phi_oracle, Digit, Expansion, Oracle};
pub use phi::{
    israel_a, min_oct_index, phi, preimage_count, preimage_count_printed_odd,
    preimage_count_via_sum, preimage_enumerate, sequence, PreimagePoint,
};
pub use regions::{even_count, oct, oct_count, s_contains, s_count, s_enumerate, Region};
pub use render::{render_decomposition, render_region, RenderStyle};
pub use verify::{Check, Failure, VerificationReport, VerifyConfig};

/// Exact lattice-point count.
pub type CountValue = u128;
