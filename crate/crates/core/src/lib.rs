//! Posets attached to type-A quiver representations.
//!
//! Three families of finite posets, each with its closed-form maximum
//! antichains and the machinery to certify them independently:
//!
//! - [`interval`]: the monomorphism poset of indecomposable representations
//!   of an oriented path, with explicit maximum antichains and Dilworth chain
//!   decompositions for the linear, simple-zigzag and alternating
//!   orientations;
//! - [`subrep`] and [`stanley`]: the subrepresentation poset of P_1^a over a
//!   prime field for the quiver 1 -> 2, certified Sperner through exact
//!   up/down operator matrices, the commutator identity and rank fullness;
//! - [`pointed`]: subrepresentation posets of star-quiver indecomposables
//!   over pointed sets, isomorphic to chain products away from the top.
//!
//! Underneath sits a generic finite-poset engine ([`poset`], [`dilworth`],
//! [`chains`]): comparability matrices, gradings, Hopcroft-Karp-based exact
//! width with antichain and chain-cover certificates, chain products and
//! their symmetric chain decompositions.

pub mod bits;
pub mod chains;
pub mod dilworth;
pub mod dot;
pub mod error;
pub mod fq;
pub mod interval;
pub mod jsonio;
pub mod pointed;
pub mod poset;
pub mod quiver;
pub mod stanley;
pub mod subrep;

pub use error::{Error, Result};
pub use poset::{Antichain, ChainDecomposition, FinitePoset, DEFAULT_MAX_ELEMENTS};
