//! Independence polynomials of finite simple graphs and the location of
//! their roots.
//!
//! The crate computes i(G,x) exactly (by recurrence and by the product
//! identities for join, corona, lexicographic product, and iterated graph
//! stars), decides Hurwitz quasi-stability — all roots in the closed left
//! half-plane — exactly through Sturm machinery and the Hermite–Biehler
//! criterion, and backs the exact verdicts with a certified numeric root
//! finder for witnesses, plots, and region checks. Exhaustive scans over
//! small graphs and free trees, family sweeps, and construction searches
//! live in [`explore`].

pub mod config;
pub mod error;
pub mod explore;
pub mod graph;
pub mod indpoly;
pub mod oracle;
pub mod poly;
pub mod roots;
pub mod stability;

pub use error::{Error, Result};
