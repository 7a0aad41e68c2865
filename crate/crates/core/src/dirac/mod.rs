//! Clifford algebra, the Dirac element in `H (x) C(V)`, and Dirac operators
//! on explicit modules.

pub mod clifford;
pub mod element;
pub mod spin;

pub use clifford::{CliffordAlgebra, CliffordElement};
pub use element::{
    clifford_of, dirac_element, dirac_element_in_basis, dirac_square_check, omega_wtilde_image,
    orthogonal_basis, s_tilde, HCliffordElement, SquareReport,
};
pub use spin::{
    dirac_inequality, float_square_residual, module_square_identity, non_unitarity_certificate,
    represent, CohomologyReport, DiracOperator, NonUnitarityCertificate, SpinChoice, SpinModule,
};
