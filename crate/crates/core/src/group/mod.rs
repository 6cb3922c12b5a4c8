//! Permutation groups: enumeration, conjugacy classes, Sylow subgroups.

pub mod builtin;
pub mod classes;
pub mod enumerate;
pub mod perm;
pub mod sylow;

pub use builtin::{builtin_group, load_group, GroupFile};
pub use classes::{class_mult_coeff_at, class_mult_coeff_enum, class_mult_table, ConjugacyClass, ConjugacyClassSet};
pub use enumerate::{EnumeratedGroup, DEFAULT_MAX_ORDER};
pub use perm::Permutation;
pub use sylow::{
    is_trivial_intersection, normalizer, p_core, p_core_from_conjugates, sylow_conjugates, sylow_subgroup,
    ti_from_conjugates, SylowConjugates, TiReport, TiWitness,
};
