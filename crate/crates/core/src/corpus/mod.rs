//! Test data: standard groups, Chein doubles, Bol-constrained search output
//! and the bundled corpus built from them.

pub mod bundle;
pub mod chein;
pub mod groups;
pub mod iso;
pub mod search;

pub use chein::chein_double;
pub use search::{bol_search, bol_search_collect, first_non_moufang, SearchStats, DEFAULT_SEARCH_BUDGET};
