//! Symmetric functions of the five tangency parameters u0..u4.

pub mod esym;
pub mod involution;
pub mod kernel;
pub mod option2;
pub mod root;
pub mod smn;

pub use esym::{e_symbol, e_symbols, e_to_u, e_vars, u_gens, u_vars, ESymTable};
pub use involution::involution_relations;
pub use kernel::{base_locus_identities, kernel, verify_vandermonde_kernel, BitangentKernel};
pub use option2::{option2_frame, option2_l, option2_table, prod_n, smn_option2};
pub use root::RootElem;
pub use smn::{newton_s, option1_l, option1_table, smn_from_frame, smn_option1, FrameKind, SmnTable};
