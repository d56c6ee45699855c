//! Planar cells: boundary cubics, canonical forms, membership and plots.

pub mod canonical;
pub mod curves;
pub mod membership;
pub mod plot;

pub use canonical::{
    boundary_residues, canonical_form, canonical_summands, BoundaryResidue, CanonicalForm, Summand,
};
pub use curves::{
    b2_line, boundary_curve, boundary_poly, cusp, cuspidal_tangent, line_through,
    resultant_boundary, vandermonde_curve,
};
pub use membership::{membership, subdivision, Membership, Region, RegionKind};
pub use plot::plot_svg;
