//! Closed-form symmetric functions and the wavefunction formulas built on them.

pub mod closed;
pub mod diagram;
pub mod polys;

pub use closed::{
    cauchy_lhs, cauchy_rhs, classical_dual_cauchy_lhs, classical_dual_cauchy_rhs,
    factorial_dual_cauchy_lhs, factorial_dual_cauchy_rhs, felderhof_closed_form,
    felderhof_step_overlap, five_vertex_closed_form, gen_felderhof_closed_form, ik_determinant,
    qbeta_closed_form, scalar_product_determinant, symplectic_dual_cauchy_lhs,
    symplectic_dual_cauchy_rhs, ElementReading, FelderhofMode, FelderhofVariables, Pairing,
};
pub use diagram::YoungDiagram;
pub use polys::{
    gen_factorial_schur, gen_symplectic_schur, grothendieck, interlacing_chains, schur,
    schur_combinatorial, vandermonde, ParameterSets,
};
