//! Vertex and face-number lower bounds for triangulations of `G_k(R^n)`.

mod faces;
mod report;
mod witness;

pub use faces::{
    dominates, facet_bound_generic, g2_betti_binomial_sum, g2_betti_sum_closed_form,
    g2_exponential_facet_bound, h_nonneg_face_bounds, h_nonneg_facet_bound, lbt_face_bounds,
    lbt_total_closed_form, lbtm_face_bounds, lbtm_total_closed_form, slbtm_face_bounds,
    total_simplices,
};
pub use report::{
    grassmannian_report, grassmannian_report_with, BoundReport, CrossCheck, Method,
    MethodBounds, ReportOptions, Verification,
};
pub use witness::{
    delta_lower_bound, stong_witness, stong_witness_candidates, verify_witness,
    vertex_bound_from_height, vertex_bound_from_witness, CupWitness, DeltaBound, WitnessCase,
    WitnessSource,
};
