//! Rendering and verification behind the `cubepath` binary, exposed as a
//! library so the acceptance suite can drive the same code paths.

pub mod render;
pub mod verify;
