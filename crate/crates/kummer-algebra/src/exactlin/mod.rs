//! Exact linear algebra over the integers and over Z/m.
//!
//! Dense arbitrary-precision Smith decomposition drives the integral API;
//! computations above [`DENSE_DIM_LIMIT`] switch to a sparse saturated
//! echelon per prime power, recombined by the Chinese remainder theorem.
//! No floating point is used anywhere.

mod dense;
mod finab;
mod modular;
pub(crate) mod modq;
pub(crate) mod sparse;

pub use dense::{
    cokernel_structure, determinant, integer_kernel, smith_normal_form, solve_integer, IntMatrix,
    SmithForm,
};
pub(crate) use dense::snf_core;
pub use finab::FinAbGroup;
pub use modular::{crt_decompose, kernel_mod, solve_mod, ModKernel, DENSE_DIM_LIMIT};
