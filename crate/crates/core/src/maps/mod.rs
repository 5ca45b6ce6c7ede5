pub mod chi;
pub mod extension;
pub mod kernel;
pub mod structure_map;
pub mod unitary;
pub mod yanchevskii;

pub use extension::CertifyOptions;
pub use structure_map::{certify_similarity, StructureMap};
