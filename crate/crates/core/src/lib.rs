//! Teaching and VC dimensions of concept classes induced by graphs: star
//! classes, connected-set classes, and preference-based teachers for both.

pub mod bitset;
pub mod con;
pub mod concept;
pub mod dimensions;
pub mod error;
pub mod families;
pub mod graph;
pub mod limits;
pub mod star;
pub mod teaching;
pub mod tree;
pub mod triple;

pub use bitset::BitSet;
pub use concept::{Concept, ConceptClass, Label, Sample};
pub use error::{Error, Result};
pub use graph::Graph;
pub use limits::Limits;
pub use teaching::{PBTeacher, PreferenceRelation};
pub use tree::Tree;
pub use triple::{Strict, Triple};
