//! Finite commutative rings and their modules: the exhaustively checkable
//! gallery.

pub mod catalog;
pub mod ctx;
pub mod deciders;
pub mod flat;
pub mod module;
pub mod parser;
pub mod ring;
pub mod verify;

pub use ctx::{FinModCtx, FinRingCtx};
pub use module::{FinModule, ModRef, RMod};
pub use parser::parse_ring;
pub use ring::{FiniteRing, Mask, RingHom, RingRef, ORDER_CAP};
