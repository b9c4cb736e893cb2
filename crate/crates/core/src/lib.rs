//! Cellular crystals `B_{i_1} ⊗ ... ⊗ B_{i_l}` over reduced words of the
//! classical Cartan types, identified with `Z^l`.
//!
//! ```
//! use cellular_crystals::{CartanDatum, CrystalElement, EpsStarEngine};
//!
//! let a3: CartanDatum = "A3".parse().unwrap();
//! let x = CrystalElement::new(a3.longest_word(), vec![1, 1, 0, 1, 1, 0]).unwrap();
//! let engine = EpsStarEngine::new(&a3).unwrap();
//! assert!((1..=3).all(|i| engine.eps_star_alg(&x, i).unwrap() == 0));
//! assert!(!engine.is_unit(&x).unwrap().is_unit());
//! ```

pub mod braid;
pub mod cartan;
pub mod checks;
pub mod cli;
pub mod crystal;
pub mod epsstar;
pub mod error;
pub mod graph;
pub mod tensor;

pub use braid::{apply_move, apply_script, BraidMove, BraidScript, MoveKind};
pub use cartan::{cartan_matrix, is_reduced, longest_word, CartanDatum, Family, WeylElement, Word};
pub use crystal::{CrystalElement, DoubleIndex, Op, WeightVector};
pub use epsstar::{
    eps_star_alg, eps_star_formula, helpers, is_unit, rightmost_script, verify_unit_theorem,
    EpsStarEngine, EpsStarReport, HelperValues, UnitReport, UnitVerdict,
};
pub use error::{Error, Result};
pub use tensor::{Ext, TensorNode};
