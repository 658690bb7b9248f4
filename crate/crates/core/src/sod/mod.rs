//! Exceptional objects, semiorthogonal sequences and constructive
//! certificates for the decompositions of `D^b(Lambda_r)`.

mod certificate;
mod hom;
mod serre;

pub use certificate::{
    build_generation_certificate, check_sod, rotate_certificate, verify_certificate, CertificateCheck,
    ConePurpose, GenerationStep, Generator, SodCertificate, SodCheck, SodKind, StepKind,
};
pub use hom::{
    check_exceptional, check_semiorthogonal_sequence, derived_hom_dim, derived_hom_dims, stalk_degree,
    SemiorthogonalTable, TableEntry,
};
pub use serre::{
    nakayama_functor, random_perfect_complex, rotation_periodicity_check, serre_duality_check, RotationCheck,
    SerreCheck,
};
