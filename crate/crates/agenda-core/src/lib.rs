//! Interrogative agendas as partitions of a profile space, the two-sorted
//! algebra of coalitions and agendas, and brute-force tools for checking
//! the first-order conditions that govern substitution between issues.

pub mod partition;
pub mod feature_space;
pub mod lattice;
pub mod coalition;
pub mod hetero;
pub mod logic;
pub mod scenario;
