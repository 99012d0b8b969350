//! Exact crystal bases for `sl_{n+1}` realized three ways: Nakajima
//! monomials, reverse semistandard tableaux and semistandard tableaux,
//! together with the explicit maps between them.

pub mod cartan;
pub mod correspondence;
pub mod crystal;
pub mod error;
pub mod membership;
pub mod monomial;
pub mod par;
pub mod tableaux;
pub mod verify;

pub use cartan::{CartanDatum, Weight};
pub use correspondence::{
    phi_map, psi, psi_inverse, reverse_bumping_sequence, varphi, varphi_inverse,
};
pub use crystal::{canonical_iso, generate, Crystal, CrystalGraph, GenerateOptions};
pub use error::{Error, Result};
pub use membership::{is_member, is_member_theorem, pair_decomposition, x_factorize, XMatrix};
pub use monomial::{CijChoice, Monomial, MonomialCrystal};
pub use par::Execution;
pub use tableaux::{Orientation, ReadingOrder, Shape, Tableau, TableauCrystal};
pub use verify::{fuzz_statistics, verify, verify_all, Report};
