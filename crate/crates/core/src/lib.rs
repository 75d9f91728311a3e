//! Exact counting and bijections for diagonal lattice paths confined to a
//! horizontal strip `0 <= y <= h`.

pub mod bijection;
pub mod closed_form;
pub mod corridor;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod path;
pub mod ta;
pub mod transfer;
pub mod verify;

pub use bijection::{
    alt_flip_reverse, alt_full_reverse, applicability, correspond, BijectionCase, Variant,
};
pub use closed_form::{
    cf_count_endpoint, cf_count_window, dyck_prefix_count, grossman_dyck_count, mohanty_count,
};
pub use corridor::{
    dp_count_endpoint, dp_count_vector, dp_count_window, is_theorem_valid, symmetry_bound,
    validate_instance, Corridor, Instance, Validity, Window,
};
pub use count::Count;
pub use enumerate::{enumerate_paths, enumerate_paths_capped, predicted_count, DEFAULT_ENUM_CAP};
pub use error::{Error, Result};
pub use path::{Path, Step};
pub use ta::{backward_window_split, ta_decode, ta_encode, Label, Split, TaWord};
pub use transfer::{tm_count_vector, tm_count_vector_mod, tm_count_window};
