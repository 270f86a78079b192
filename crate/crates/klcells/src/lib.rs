//! Kazhdan–Lusztig cells of finite Coxeter groups with unequal parameters,
//! left cellular maps, and generalised τ-invariants.
//!
//! The usual pipeline: build a [`CoxeterSystem`], pick a [`WeightFunction`],
//! compute the [`KLTable`], then derive cells ([`cells::CellSet`]), cellular
//! maps ([`cellmaps`]) and Vogan classes ([`vogan`]) from it.
//!
//! ```
//! use std::sync::Arc;
//! use klcells::{cells::CellSet, CoxeterSystem, CoxeterType, KLTable, WeightFunction};
//!
//! let w = Arc::new(CoxeterSystem::from_type(CoxeterType::B(2)).unwrap());
//! let p = WeightFunction::new(w.matrix(), vec![1, 2]).unwrap();
//! let table = KLTable::build(w, p).unwrap();
//! assert_eq!(CellSet::compute(&table).left.num_blocks(), 6);
//! ```

pub mod cellmaps;
pub mod cells;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod schreier;
pub mod vogan;

pub use cellmaps::{AdmissibleFlags, AdmissiblePair, LeftExtension};
pub use cells::{CellKind, CellModule, CellPartition, CellSet};
pub use coxeter::{CoxeterMatrix, CoxeterSystem, CoxeterType, Element, GeneratorSet, Parabolic, WeightFunction};
pub use error::{Error, ParseError, Result};
pub use hecke::{HeckeAlgebra, HeckeElement, KLData, KLTable};
pub use laurent::LaurentPoly;
pub use schreier::GroupOrder;
pub use vogan::{RhoMap, VoganPartition};
