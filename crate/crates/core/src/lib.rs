//! Exact enumeration of unlabeled k-trees by number of hedra.
//!
//! The counting engine solves a system of generating functions indexed by
//! cycle types of colour permutations ([`engine`]). Two independent routes
//! cross-check it: explicit formulas for `k <= 4` ([`closedforms`]) and a
//! brute-force enumeration of coding trees ([`oracle`]).
//!
//! ```
//! use ktrees::count_ktrees;
//!
//! // Ordinary trees with 0..=7 edges.
//! let trees = count_ktrees(1, 7).unwrap();
//! let u: Vec<u32> = trees.u.iter().map(|c| c.try_into().unwrap()).collect();
//! assert_eq!(u, [1, 1, 1, 2, 3, 6, 11, 23]);
//! ```

pub mod checks;
pub mod closedforms;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod reference;
pub mod series;

pub use engine::{count_ktrees, solve_system, stable_counts, ResultBundle, SeriesCache};
pub use error::{Error, Result};
pub use partitions::{partitions_of, Partition};
pub use series::{Coefficient, Series};

// Compile and run every snippet in the guide as a doctest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/series.md")]
    struct Series;
    #[doc = include_str!("../../../book/src/cycle-types.md")]
    struct CycleTypes;
    #[doc = include_str!("../../../book/src/system.md")]
    struct System;
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    struct ClosedForms;
    #[doc = include_str!("../../../book/src/oracle.md")]
    struct Oracle;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
