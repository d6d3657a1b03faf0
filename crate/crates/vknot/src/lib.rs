pub mod appendix;
pub mod catalog;
pub mod diagram;
pub mod intersect;
pub mod invariants;
pub mod laurent;
pub mod moves;
