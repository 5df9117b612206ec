//! The iterated wreath power `[S_d]^n` acting on the `d^n` leaves of the
//! rooted `d`-ary tree, exact cycle-pattern statistics of that action, and a
//! small explicit permutation-group engine.

mod distribution;
mod group;
mod pattern;
mod perm;
mod tree;

pub use distribution::{
    fixed_point_law, fpp, fpp_ladder, pattern_distribution, pattern_distribution_with_cap, symmetric_class_sizes,
    wreath_order, FppMethod, PatternDistribution, DEFAULT_LEAF_CAP,
};
pub use group::{group_closure, is_primitive, is_transitive, PermGroup};
pub use pattern::CyclePattern;
pub use perm::{all_perms, Perm};
pub use tree::{enumerate_elements, ElementIter, TreeAut, ENUMERATION_CAP};
