//! Distance bounds for 2-connected outerplanar graphs.
//!
//! Exact graph metrics (transmission, proximity, remoteness, radius),
//! outerplanarity recognition with a unique outer-cycle embedding, weighted
//! medians on trees and cycles, constructive witness vertices for the
//! proximity and radius bounds, extremal graph families, and an exhaustive
//! polygon-dissection harness that checks the bounds on every graph of a
//! given small order.

pub mod bounds;
pub mod enumerate;
pub mod generators;
pub mod graph;
pub mod io;
pub mod median;
pub mod outerplanar;
pub mod rational;
pub mod witness;

pub use graph::{global_metrics, Graph, GraphError, MetricsReport};
pub use outerplanar::{recognize, OuterplanarError, OuterplaneEmbedding};
pub use rational::Rational;
