//! Von Neumann weak measurements on pre- and post-selected finite-dimensional
//! systems, with pointer states kept exactly as Gaussian superpositions.
//!
//! All numerical types are generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix the common `f64` instantiation.

// Negated comparisons below are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod measurement;
pub mod pointer;
pub mod qstate;
pub mod scalar;
pub mod scenarios;

pub use error::{Error, Result};
pub use measurement::{
    couple, effective_shift_check, no_postselect_mixture, post_select, weak_value, weakness_metric,
    Branch, CouplingConfig, JointState, PostSelectionResult, ShiftCheck, WEAKNESS_THRESHOLD,
};
pub use pointer::{bures_mixed, bures_pure, mean_position, overlap, PointerMixture, PointerState};
pub use qstate::{Observable, SystemState};
pub use scalar::Scalar;

pub type Complex64 = num_complex::Complex<f64>;

pub type SystemState64 = SystemState<f64>;
pub type Observable64 = Observable<f64>;
pub type PointerState64 = PointerState<f64>;
pub type PointerMixture64 = PointerMixture<f64>;
pub type CouplingConfig64 = CouplingConfig<f64>;
pub type JointState64 = JointState<f64>;
pub type ScenarioSpec64 = scenarios::ScenarioSpec<f64>;
pub type ComparisonRow64 = scenarios::ComparisonRow<f64>;
pub type PowerLawFit64 = scenarios::PowerLawFit<f64>;

pub type SystemState32 = SystemState<f32>;
pub type Observable32 = Observable<f32>;
pub type PointerState32 = PointerState<f32>;
pub type CouplingConfig32 = CouplingConfig<f32>;
