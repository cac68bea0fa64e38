//! Orbit-theoretic tools inside E8: Jordan decomposition, sl2 completion,
//! characteristics and centralizer structure.

pub mod characteristic;
pub mod jordan;
pub mod mixed;
pub mod signature;
pub mod sl2;
pub mod subspace;

pub use characteristic::{characteristic, Characteristic, CharacteristicError, RootDatum};
pub use mixed::{open_orbit_check, orbit_dim_in_centralizer, verify_mixed_table, MixedRowReport, MixedTableReport};
pub use jordan::{is_nilpotent, is_semisimple, jordan, nilpotency_index, Jordan, JordanError};
pub use signature::{graded_signature, signature, CentralizerSignature, SignatureError};
pub use sl2::{sl2_complete, Ambient, Sl2Error, Triple};
pub use subspace::{centralizer_in, component_basis};

#[cfg(test)]
pub(crate) mod fixture {
    use std::sync::OnceLock;

    use crate::e8::algebra::LieElem;
    use crate::e8::grading::Graded;
    use crate::spinor::identify::Dictionary;
    use crate::spinor::label::SpinorTensor;

    pub struct Setup {
        pub g: Graded,
        pub d: Dictionary,
        pub p: Vec<LieElem>,
    }

    impl Setup {
        pub fn elem(&self, s: &str) -> LieElem {
            self.d.to_g1(&SpinorTensor::parse(s).unwrap())
        }
    }

    pub fn setup() -> &'static Setup {
        static S: OnceLock<Setup> = OnceLock::new();
        S.get_or_init(|| {
            let g = Graded::new();
            let d = Dictionary::build(&g).unwrap();
            let p = super::mixed::cartan_basis(&d);
            Setup { g, d, p }
        })
    }
}
