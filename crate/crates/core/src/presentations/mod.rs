//! Partition data attached to Demazure modules, the relation lists of their
//! simplified presentations, and the index sets used to rewrite the
//! defining relations.

mod index_sets;
mod partition;
mod relations;

pub(crate) use index_sets::concat;
pub use index_sets::{
    enum_s, enum_s_bounded_above, enum_s_bounded_below, enum_s_tilde, enum_s_tilde_above,
    enum_s_tilde_below, split_s, split_s_tilde, tilde_r_s, y_coefficient, SCell, SSplit, STilde,
    STildeCell, STildeSplit,
};
pub use partition::{build_xi, phi, s_and_m, Convention, Partition, PartitionShape, PartitionTuple, XiEntry};
pub use relations::{
    demazure_exponent, rectangular_reduction, simplified_relations, theorem_relations,
    weyl_relations, RelationDescriptor, RootForm,
};
