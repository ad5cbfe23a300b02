//! The bijections between fillings, permutations and matchings.

mod enriched;
mod leftcross;
mod matching;
mod phi;
mod reshape;

pub use enriched::{g, g_inv, iota};
pub use leftcross::leftcross_to_perm;
pub use matching::{f_marked, f_marked_inv, psi, psi_inv, psi_strict, remove_empty_rows};
pub use phi::{phi, phi_inv, phi_silly, phi_silly_inv};
pub use reshape::{flatten, steepen};
