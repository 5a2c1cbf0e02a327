//! Exact-arithmetic engine for τ-tilting theory over finite-dimensional
//! quiver algebras: quiver representations over Q, Hom/Ext and the AR
//! translate, AR-quiver knitting, support τ-tilting objects and their
//! mutation, τ-perpendicular subcategories, and the correspondence between
//! ordered support τ-tilting objects and complete signed τ-exceptional
//! sequences together with the symmetric-group and mutation-group actions.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod homalg;
pub mod linalg;
pub mod rep;
pub mod sequences;
pub mod taurigid;
pub mod tauperp;

pub use algebra::{build_algebra, build_algebra_default, AlgebraPresentation, Quiver, Relation};
pub use catalog::IndecCatalog;
pub use error::{Error, Result};
pub use linalg::{QMatrix, QRat};
pub use rep::{Rep, RepMap};
pub use sequences::SignedSeq;
pub use taurigid::{OrderedSttilt, SignedObject};
pub use tauperp::WideSubcat;

