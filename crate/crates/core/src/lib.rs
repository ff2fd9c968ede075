//! Exact computations with post-groups.
//!
//! * [`words`], [`magma`], [`free_postgroup`]: the free post-group on a
//!   diagonal left-regular magma and its isomorphism with its
//!   Grossman–Larson group.
//! * [`group`], [`finite_postgroup`], [`action_postgroup`]: finite post-group
//!   tables, braidings, Yang–Baxter checks and skew braces.
//! * [`tensor`], [`magnus`]: the post-Hopf tensor algebra over a free
//!   magma, the K-map and truncated flow/Magnus series, over exact rationals.

pub mod action_postgroup;
pub mod finite_postgroup;
pub mod free_postgroup;
pub mod group;
pub mod io;
pub mod magma;
pub mod magnus;
pub mod perm;
pub mod report;
pub mod selftest;
pub mod tensor;
pub mod words;
