//! Least-perimeter polygons with prescribed angles, Cairo and Prismatic
//! pentagonal tilings, and numerical certification of the inequalities that
//! make those tilings perimeter-minimizing.
//!
//! * [`geometry`] builds circumscribed polygons and the two optimal
//!   pentagonal prototiles.
//! * [`analysis`] evaluates the perimeter surfaces `Pₙ(k, q)`, their
//!   derivatives, convexity discriminants, and the linear lower-bound chains.
//! * [`tiling`] generates validated Cairo, Prismatic and row-mixed patches,
//!   builds their vertex/edge/face graphs, audits the Euler identities, and
//!   estimates perimeter ratios.
//! * [`verify`] runs every check and assembles a report; [`cli`] backs the
//!   `pentile` binary.

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod geometry;
pub mod io;
pub mod sampling;
pub mod svg;
pub mod tiling;
pub mod verify;
