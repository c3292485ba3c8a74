//! Exact computer algebra for Hom-Leibniz-Rinehart algebras.

pub mod action;
pub mod algebra;
pub mod category;
pub mod crossed;
pub mod document;
pub mod error;
pub mod fuzz;
pub mod library;
pub mod linalg;
pub mod rational;
pub mod report;
pub mod rinehart;

pub use document::AlgebraDocument;
pub use error::{Error, Result};
pub use linalg::{Bilinear, Matrix, QuotientStructure, Side, Subspace};
pub use rational::{Rational, Vector};
pub use report::ValidationReport;
