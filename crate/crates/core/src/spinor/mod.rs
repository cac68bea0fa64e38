//! `Delta_+ (x) C^4` built from the Clifford algebra, its weights, Dynkin
//! schemes, and the identification with `g_1`.

pub mod clifford;
pub mod identify;
pub mod label;
pub mod weights;

pub use clifford::{lambda, o10_basis, Spin};
pub use identify::{Dictionary, HatElem, IdentifyError, LabelModule};
pub use label::{Label, LabelError, SpinorTensor};
pub use weights::{dynkin_scheme, weight_dot, weight_of, DynkinScheme, EdgeStyle, Weight};
