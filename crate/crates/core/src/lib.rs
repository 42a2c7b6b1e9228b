#![forbid(unsafe_code)]

//! Desk-scale laboratory for anisotropic bond percolation on the square
//! lattice `Z^2`.
//!
//! Horizontal edges are open with probability `p_h`, vertical edges with
//! probability `p_v`, independently, with `p_h <= p_v`. The crate computes
//! the finite-volume truncated two-point connectivity (the probability that
//! two vertices lie in one open cluster that avoids the box boundary) by
//! three exact routes and one statistical route, together with the dual
//! contour combinatorics that control it in the highly supercritical regime:
//!
//! - [`contours`]: dual-lattice circuits, minimal-contour counts `beta`,
//!   exhaustive contour censuses, word encoding, and companion paths.
//! - [`exact`]: exhaustive configuration sums (floating point and exact
//!   rational) and a frontier transfer-matrix sweep.
//! - [`mc`]: seeded, reproducible Monte Carlo estimation with paired
//!   difference estimates for a target and its diagonal reflection.
//! - [`bounds`]: closed-form lower/upper bounds on the truncated
//!   connectivity, the anisotropy threshold `eta_tilde`, its large-distance
//!   limit, and the inequality certificate comparing a target `x` with its
//!   reflection `x'`.
//!
//! All engines are deterministic: fixed inputs (and seed, for Monte Carlo)
//! reproduce identical output bits regardless of thread count.

pub mod bounds;
pub mod contours;
pub mod error;
pub mod exact;
pub mod mc;
pub mod model;
pub mod numeric;

pub use error::Error;
pub use model::{
    make_params, norm_x, params_from_eta, reflect, Configuration, LatticeRegion, Params,
    TargetPair, Vertex,
};

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
