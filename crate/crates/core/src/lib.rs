//! Cycle structure of automorphisms and periodic affine maps of finite
//! groups: explicit permutation groups, finite fields, projective linear
//! groups, holomorphs, wreath products, and the exact arithmetic behind the
//! associated order bounds.

pub mod affine;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod field;
pub mod group;
pub mod matgrp;
pub mod numtheory;
pub mod perm;
pub mod verify;
pub mod wreath;

pub use error::{Error, Result};
