//! Exact linear algebra over ℤ, ℚ and 𝔽_p.
//!
//! No floating point is used anywhere in this module.

mod bareiss;
mod circulant_rank;
mod matrix;
mod modp;
mod smith;

pub use bareiss::{determinant, rank_rational};
pub use circulant_rank::{circulant_rank_mod, circulant_rank_rational, cyclotomic_polynomial};
pub use matrix::IntegerMatrix;
pub use modp::{rank_mod_p, rank_of_residue_rows};
pub use smith::{
    smith_normal_form, smith_normal_form_with_multipliers, InvariantFactors, SmithDecomposition,
};
