//! Vertex models, monodromy contraction and the Felderhof matrix-product chain.

pub mod model;
pub mod mpo;
pub mod operator;
pub mod state;
pub mod ybe;

pub use model::{ModelKind, ModelSpec, Perturbed, RMatrix, VertexModel, WeightMatrix};
pub use mpo::{MpoChain, MpoResiduals};
pub use operator::{
    apply_element, dwbp_bruteforce, monodromy_element, scalar_product_bruteforce,
    wavefunction_bruteforce, BigOperator, Element, StateVector, WaveMode, DEFAULT_SITE_CAP,
};
pub use state::LatticeState;
pub use ybe::check_ybe;
