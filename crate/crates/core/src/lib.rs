//! Exact construction of the equivariantization of a pointed braided crossed category, its
//! fusion-subcategory lattice, and Müger centralizers.

pub mod centralizer;
pub mod check;
pub mod crossed;
pub mod cyclotomic;
pub mod group;
pub mod instance;
pub mod lattice;
pub mod projchar;
pub mod report;
pub mod simples;
