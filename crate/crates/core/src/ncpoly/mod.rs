//! Free noncommutative algebras over exact coefficients and a rewriting
//! engine for finitely presented quotients.

mod cache;
mod poly;
mod rewrite;

pub use cache::{load_cache, save_cache, CACHE_VERSION};
pub use poly::{Coeff, Letter, NCPoly, Word};
pub use rewrite::{orient, Ambiguity, ConfluenceReport, RewriteError, RewriteRule, RewriteSystem, Weight};
