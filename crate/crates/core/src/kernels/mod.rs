//! Kernel data of a functor for the bo, so and bof systems.

pub mod comma;
pub mod comparison;
pub mod data;
pub mod json;

pub use comma::{comma, eq_category, triple_comma, Comma, EqCategory, TripleComma};
pub use comparison::{comparison_maps, ComparisonMaps};
pub use data::{
    bo_kernel, bof_data_from_relation, bof_kernel, kernel, so_kernel, BoKernel, BoKernelData, BofKernel, BofKernelData,
    KernelData, SoKernel, SoKernelData,
};
